//! C ABI over the core library.
//!
//! Objects are opaque handles created by `vk_*_parse` and released with the
//! matching `vk_*_free`. Every fallible call returns a `VkStatus`; on error
//! `vk_last_error` gives a message for the calling thread. Strings returned
//! through out-pointers are owned by the caller and released with
//! `vk_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vknotoid::biquandle::FiniteBiquandle;
use vknotoid::bracket::{bracket_matrix, bracket_polynomial, fundamental_bracket, BracketError, VirtualBracket};
use vknotoid::coloring::{counting_invariant, counting_matrix};
use vknotoid::diagram::KnotoidDiagram;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    Null = 1,
    Parse = 2,
    /// Axiom check failed.
    Axiom = 3,
    /// Biquandle and bracket sizes differ.
    Dimension = 4,
    Utf8 = 5,
    Panic = 6,
    /// Output buffer too small.
    Buffer = 7,
}

pub struct VkDiagram(KnotoidDiagram);
pub struct VkBiquandle(FiniteBiquandle);
pub struct VkBracket(VirtualBracket);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: VkStatus, msg: impl Into<String>) -> VkStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> VkStatus) -> VkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(VkStatus::Panic, "internal panic"),
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, VkStatus> {
    if p.is_null() {
        return Err(fail(VkStatus::Null, "null string"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| fail(VkStatus::Utf8, e.to_string()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, VkStatus> {
    p.as_ref().ok_or_else(|| fail(VkStatus::Null, "null handle"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> VkStatus {
    if out.is_null() {
        return fail(VkStatus::Null, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            VkStatus::Ok
        }
        Err(e) => fail(VkStatus::Utf8, e.to_string()),
    }
}

unsafe fn put_handle<T>(out: *mut *mut T, v: T) -> VkStatus {
    if out.is_null() {
        return fail(VkStatus::Null, "null output pointer");
    }
    *out = Box::into_raw(Box::new(v));
    VkStatus::Ok
}

fn bracket_status(e: BracketError) -> VkStatus {
    match e {
        BracketError::Dimension { .. } => fail(VkStatus::Dimension, e.to_string()),
        other => fail(VkStatus::Parse, other.to_string()),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the most recent error on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn vk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn vk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a diagram file (`name ...` / `code ...`).
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_parse(src: *const c_char, out: *mut *mut VkDiagram) -> VkStatus {
    guard(|| {
        let t = tri!(text(src));
        match KnotoidDiagram::parse(t) {
            Ok(d) => put_handle(out, VkDiagram(d)),
            Err(e) => fail(VkStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `d` must be null or a handle from `vk_diagram_parse`.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_free(d: *mut VkDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Canonical code string of the diagram.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_diagram_code(d: *const VkDiagram, out: *mut *mut c_char) -> VkStatus {
    guard(|| {
        let d = tri!(handle(d));
        put_string(out, d.0.code())
    })
}

/// Parses a biquandle operation matrix.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_biquandle_parse(src: *const c_char, out: *mut *mut VkBiquandle) -> VkStatus {
    guard(|| {
        let t = tri!(text(src));
        match FiniteBiquandle::parse_operation_matrix(t) {
            Ok(x) => put_handle(out, VkBiquandle(x)),
            Err(e) => fail(VkStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `x` must be null or a handle from `vk_biquandle_parse`.
#[no_mangle]
pub unsafe extern "C" fn vk_biquandle_free(x: *mut VkBiquandle) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_biquandle_size(x: *const VkBiquandle, out: *mut usize) -> VkStatus {
    guard(|| {
        let x = tri!(handle(x));
        if out.is_null() {
            return fail(VkStatus::Null, "null output pointer");
        }
        *out = x.0.size();
        VkStatus::Ok
    })
}

/// `VK_STATUS_OK` if every biquandle axiom holds, `VK_STATUS_AXIOM`
/// otherwise.
///
/// # Safety
/// `x` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn vk_biquandle_verify(x: *const VkBiquandle) -> VkStatus {
    guard(|| {
        let x = tri!(handle(x));
        let r = x.0.verify_axioms();
        if r.passed {
            VkStatus::Ok
        } else {
            fail(VkStatus::Axiom, format!("{} axiom violations", r.violations.len()))
        }
    })
}

/// Parses a bracket file.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_bracket_parse(src: *const c_char, out: *mut *mut VkBracket) -> VkStatus {
    guard(|| {
        let t = tri!(text(src));
        match VirtualBracket::parse(t) {
            Ok(b) => put_handle(out, VkBracket(b)),
            Err(e) => fail(VkStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `b` must be null or a handle from `vk_bracket_parse`.
#[no_mangle]
pub unsafe extern "C" fn vk_bracket_free(b: *mut VkBracket) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Checks the bracket equations against `x`.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn vk_bracket_verify(b: *const VkBracket, x: *const VkBiquandle) -> VkStatus {
    guard(|| {
        let (b, x) = (tri!(handle(b)), tri!(handle(x)));
        match b.0.verify_axioms(&x.0) {
            Ok(r) if r.passed => VkStatus::Ok,
            Ok(r) => fail(VkStatus::Axiom, format!("{} equation violations", r.violations.len())),
            Err(e) => bracket_status(e),
        }
    })
}

/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_counting_invariant(d: *const VkDiagram, x: *const VkBiquandle, out: *mut u64) -> VkStatus {
    guard(|| {
        let (d, x) = (tri!(handle(d)), tri!(handle(x)));
        if out.is_null() {
            return fail(VkStatus::Null, "null output pointer");
        }
        *out = counting_invariant(&d.0, &x.0);
        VkStatus::Ok
    })
}

/// Writes the n×n counting matrix row-major into `buf`, which must hold
/// `len ≥ n²` entries.
///
/// # Safety
/// Handles must be live; `buf` must point to `len` writable `u64`s.
#[no_mangle]
pub unsafe extern "C" fn vk_counting_matrix(d: *const VkDiagram, x: *const VkBiquandle, buf: *mut u64, len: usize) -> VkStatus {
    guard(|| {
        let (d, x) = (tri!(handle(d)), tri!(handle(x)));
        if buf.is_null() {
            return fail(VkStatus::Null, "null buffer");
        }
        let n = x.0.size();
        if len < n * n {
            return fail(VkStatus::Buffer, format!("buffer holds {len} entries, need {}", n * n));
        }
        let out = std::slice::from_raw_parts_mut(buf, n * n);
        for (i, row) in counting_matrix(&d.0, &x.0).0.iter().enumerate() {
            out[i * n..(i + 1) * n].copy_from_slice(row);
        }
        VkStatus::Ok
    })
}

/// Bracket polynomial in canonical form, e.g. `2u^3+u^2`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_bracket_polynomial(
    d: *const VkDiagram,
    x: *const VkBiquandle,
    b: *const VkBracket,
    out: *mut *mut c_char,
) -> VkStatus {
    guard(|| {
        let (d, x, b) = (tri!(handle(d)), tri!(handle(x)), tri!(handle(b)));
        match bracket_polynomial(&d.0, &x.0, &b.0) {
            Ok(p) => put_string(out, p.to_string()),
            Err(e) => bracket_status(e),
        }
    })
}

/// Bracket matrix as a JSON array of rows of polynomial strings.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_bracket_matrix_json(
    d: *const VkDiagram,
    x: *const VkBiquandle,
    b: *const VkBracket,
    out: *mut *mut c_char,
) -> VkStatus {
    guard(|| {
        let (d, x, b) = (tri!(handle(d)), tri!(handle(x)), tri!(handle(b)));
        match bracket_matrix(&d.0, &x.0, &b.0) {
            Ok(m) => put_string(out, serde_json::to_string(&m.rendered()).expect("strings serialize")),
            Err(e) => bracket_status(e),
        }
    })
}

/// Fundamental bracket, one state per line.
///
/// # Safety
/// `d` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vk_fundamental_bracket(d: *const VkDiagram, out: *mut *mut c_char) -> VkStatus {
    guard(|| {
        let d = tri!(handle(d));
        let s: Vec<String> = fundamental_bracket(&d.0).states.iter().map(|s| s.to_string()).collect();
        put_string(out, s.join("\n"))
    })
}
