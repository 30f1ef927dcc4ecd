//! Bundled biquandles, brackets and the corpus directory.

use crate::biquandle::FiniteBiquandle;
use crate::bracket::VirtualBracket;

pub const Z5_ALEXANDER: &str = include_str!("../data/biquandles/z5_alexander_t2_r4.bq");
pub const Z3_AFFINE_T2_R1_C2: &str = include_str!("../data/biquandles/z3_affine_t2_r1_c2.bq");
pub const Z3_AFFINE_T2_R2_C1: &str = include_str!("../data/biquandles/z3_affine_t2_r2_c1.bq");
pub const Z3_AFFINE_T1_R1_C1: &str = include_str!("../data/biquandles/z3_affine_t1_r1_c1.bq");
pub const SINGLETON: &str = include_str!("../data/biquandles/singleton.bq");

pub const Z5_BRACKET: &str = include_str!("../data/brackets/z5_on_z3_affine_t2_r2_c1.br");
pub const Z37_BRACKET: &str = include_str!("../data/brackets/z37_on_z3_affine_t1_r1_c1.br");

/// Source-tree location of the corpus; valid for tests and local builds.
pub const CORPUS_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus");

fn bq(text: &str) -> FiniteBiquandle {
    FiniteBiquandle::parse_operation_matrix(text).expect("bundled biquandle parses")
}

fn br(text: &str) -> VirtualBracket {
    VirtualBracket::parse(text).expect("bundled bracket parses")
}

/// `Z_5`, `x ▷̲ y = 2(x + y)`, `x ▷̄ y = 4x`.
pub fn z5_alexander() -> FiniteBiquandle {
    bq(Z5_ALEXANDER)
}

/// `Z_3`, `x ▷̲ y = 2x − y + 2`, `x ▷̄ y = x + 2`.
pub fn z3_affine_t2_r1_c2() -> FiniteBiquandle {
    bq(Z3_AFFINE_T2_R1_C2)
}

/// `Z_3`, both operations `x ↦ 2x + 1`.
pub fn z3_affine_t2_r2_c1() -> FiniteBiquandle {
    bq(Z3_AFFINE_T2_R2_C1)
}

/// `Z_3`, both operations `x ↦ x + 1`.
pub fn z3_affine_t1_r1_c1() -> FiniteBiquandle {
    bq(Z3_AFFINE_T1_R1_C1)
}

pub fn singleton() -> FiniteBiquandle {
    bq(SINGLETON)
}

/// Bracket over `Z_5` on [`z3_affine_t2_r2_c1`], `δ = 2`, `ω = 4`.
pub fn z5_bracket() -> VirtualBracket {
    br(Z5_BRACKET)
}

/// Bracket over `Z_37` on [`z3_affine_t1_r1_c1`], `δ = 5`, `ω = 9`.
pub fn z37_bracket() -> VirtualBracket {
    br(Z37_BRACKET)
}
