//! Biquandle virtual brackets and their state-sum invariants.

mod axioms;
mod state;
mod symbolic;

pub use axioms::{equation_table, BracketEquation, Side, Term};
pub use state::{
    bracket_matrix, bracket_multiset, bracket_polynomial, evaluate, smooth_components, state_smoothings, BracketMatrix, Smoothing,
    StateTable,
};
pub use symbolic::{evaluate_symbolic, fundamental_bracket, Factor, SymbolicBracket, SymbolicState};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::biquandle::{AxiomReport, Element};
use crate::ring::{Modulus, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("bracket is over {bracket} elements but the biquandle has {biquandle}")]
    Dimension { bracket: usize, biquandle: usize },
    #[error("coloring does not satisfy the crossing relations")]
    ColoringMismatch,
}

/// The six coefficient maps, in file-block order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Coef {
    A,
    B,
    V,
    C,
    D,
    U,
}

impl Coef {
    pub const ALL: [Coef; 6] = [Coef::A, Coef::B, Coef::V, Coef::C, Coef::D, Coef::U];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualBracket {
    n: usize,
    modulus: Modulus,
    // six n×n tables, row-major, in `Coef` order
    tables: [Vec<u32>; 6],
    delta: u32,
    omega: u32,
    omega_inv: u32,
}

impl VirtualBracket {
    /// `rows[i]` is the block row `[A|B|V|C|D|U]` for element `x_{i+1}`.
    /// Entries are reduced mod `m`; `ω` must be a unit.
    pub fn from_block_rows(m: Modulus, rows: &[Vec<i64>], delta: i64, omega: i64) -> Result<Self, BracketError> {
        let n = rows.len();
        if n == 0 {
            return Err(BracketError::Shape("bracket needs at least one row".into()));
        }
        let mut tables: [Vec<u32>; 6] = Default::default();
        for t in tables.iter_mut() {
            *t = vec![0; n * n];
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != 6 * n {
                return Err(BracketError::Shape(format!("row {} has {} entries, expected {}", i + 1, row.len(), 6 * n)));
            }
            for (k, &v) in row.iter().enumerate() {
                tables[k / n][i * n + k % n] = m.reduce(v);
            }
        }
        Self::from_tables(m, tables, m.reduce(delta), m.reduce(omega))
    }

    pub fn from_tables(m: Modulus, tables: [Vec<u32>; 6], delta: u32, omega: u32) -> Result<Self, BracketError> {
        let nn = tables[0].len();
        let n = (nn as f64).sqrt().round() as usize;
        if n == 0 || n * n != nn || tables.iter().any(|t| t.len() != nn) {
            return Err(BracketError::Shape("coefficient tables must all be n×n".into()));
        }
        let tables = tables.map(|t| t.into_iter().map(|v| v % m.get()).collect());
        let omega = omega % m.get();
        let omega_inv = m.inverse(omega)?;
        Ok(VirtualBracket { n, modulus: m, tables, delta: delta % m.get(), omega, omega_inv })
    }

    /// Parses the bracket file format.
    pub fn parse(text: &str) -> Result<Self, BracketError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let ints = |ln: usize, l: &str| -> Result<Vec<i64>, BracketError> {
            l.split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| BracketError::Syntax(format!("line {ln}: bad integer {t:?}"))))
                .collect()
        };
        let (ln, header) = lines.next().ok_or_else(|| BracketError::Syntax("empty bracket file".into()))?;
        let h = ints(ln, header)?;
        let [n, m] = h[..] else {
            return Err(BracketError::Syntax(format!("line {ln}: expected `n m`")));
        };
        if n < 1 {
            return Err(BracketError::Shape(format!("n must be positive, got {n}")));
        }
        if m < 2 || m > u32::MAX as i64 {
            return Err(RingError::BadModulus(m.max(0) as u64).into());
        }
        let modulus = Modulus::new(m as u32)?;
        let mut rows = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let (ln, l) = lines.next().ok_or_else(|| BracketError::Shape(format!("expected {n} coefficient rows")))?;
            rows.push(ints(ln, l)?);
        }
        let (ln, last) = lines.next().ok_or_else(|| BracketError::Syntax("missing `delta <d> omega <w>` line".into()))?;
        let parts: Vec<&str> = last.split_whitespace().collect();
        let (delta, omega) = match parts[..] {
            ["delta", d, "omega", w] => (
                d.parse::<i64>().map_err(|_| BracketError::Syntax(format!("line {ln}: bad delta")))?,
                w.parse::<i64>().map_err(|_| BracketError::Syntax(format!("line {ln}: bad omega")))?,
            ),
            _ => return Err(BracketError::Syntax(format!("line {ln}: expected `delta <d> omega <w>`"))),
        };
        if let Some((ln, _)) = lines.next() {
            return Err(BracketError::Syntax(format!("line {ln}: unexpected trailing content")));
        }
        Self::from_block_rows(modulus, &rows, delta, omega)
    }

    pub fn render(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.modulus.get());
        for row in self.block_rows() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s.push_str(&format!("delta {} omega {}\n", self.delta, self.omega));
        s
    }

    pub fn block_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| Coef::ALL.iter().flat_map(|&c| (0..self.n).map(move |j| self.get(c, i, j))).collect())
            .collect()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    pub fn omega_inverse(&self) -> u32 {
        self.omega_inv
    }

    #[inline]
    pub fn get(&self, c: Coef, x: Element, y: Element) -> u32 {
        self.tables[c.index()][x * self.n + y]
    }

    pub fn table(&self, c: Coef) -> &[u32] {
        &self.tables[c.index()]
    }

    /// Copy with one coefficient replaced.
    pub fn with_entry(&self, c: Coef, x: Element, y: Element, value: i64) -> Self {
        let mut out = self.clone();
        out.tables[c.index()][x * self.n + y] = self.modulus.reduce(value);
        out
    }

    /// The scalar `ω^{-wr}`.
    pub fn writhe_factor(&self, writhe: i64) -> u32 {
        let base = if writhe >= 0 { self.omega_inv } else { self.omega };
        self.modulus.pow(base, writhe.unsigned_abs())
    }

    /// Checks all 23 equation families against the biquandle `x`.
    pub fn verify_axioms(&self, x: &crate::biquandle::FiniteBiquandle) -> Result<AxiomReport<BracketEquation>, BracketError> {
        if x.size() != self.n {
            return Err(BracketError::Dimension { bracket: self.n, biquandle: x.size() });
        }
        Ok(axioms::verify(self, x))
    }
}
