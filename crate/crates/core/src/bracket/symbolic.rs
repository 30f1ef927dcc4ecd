//! The fundamental bracket: the state sum with semi-arc generators in
//! place of colors.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::state::StateTable;
use super::{BracketError, Coef, VirtualBracket};
use crate::biquandle::FiniteBiquandle;
use crate::coloring::{is_coloring, Coloring};
use crate::diagram::KnotoidDiagram;

/// `F_{a_i, a_j}`; generators are stored 0-based and shown 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub coef: Coef,
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{a{},a{}}}", self.coef, self.left + 1, self.right + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicState {
    pub delta_exponent: usize,
    pub omega_exponent: i64,
    /// One factor per classical crossing, in crossing-id order.
    pub factors: Vec<Factor>,
}

impl fmt::Display for SymbolicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.omega_exponent {
            0 => {}
            1 => parts.push("ω".to_string()),
            e => parts.push(format!("ω^{e}")),
        }
        match self.delta_exponent {
            0 => {}
            1 => parts.push("δ".to_string()),
            e => parts.push(format!("δ^{e}")),
        }
        parts.extend(self.factors.iter().map(Factor::to_string));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicBracket {
    pub states: Vec<SymbolicState>,
}

impl fmt::Display for SymbolicBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.states.iter().map(SymbolicState::to_string).collect();
        f.write_str(&terms.join(" + "))
    }
}

pub fn fundamental_bracket(d: &KnotoidDiagram) -> SymbolicBracket {
    let table = StateTable::new(d);
    let states = table
        .states()
        .iter()
        .map(|(comps, smooth)| SymbolicState {
            delta_exponent: *comps,
            omega_exponent: -table.writhe(),
            factors: smooth
                .iter()
                .zip(table.coefficient_indices())
                .zip(table.signs())
                .map(|((s, &(left, right)), &sign)| Factor { coef: s.coef(sign), left, right })
                .collect(),
        })
        .collect();
    SymbolicBracket { states }
}

/// Substitutes a coloring and a bracket into the symbolic state sum.
pub fn evaluate_symbolic(
    sym: &SymbolicBracket,
    d: &KnotoidDiagram,
    x: &FiniteBiquandle,
    b: &VirtualBracket,
    f: &Coloring,
) -> Result<u32, BracketError> {
    if x.size() != b.size() {
        return Err(BracketError::Dimension { bracket: b.size(), biquandle: x.size() });
    }
    if !is_coloring(d, x, &f.0) {
        return Err(BracketError::ColoringMismatch);
    }
    let m = b.modulus();
    let mut total = 0;
    for s in &sym.states {
        let w = if s.omega_exponent >= 0 {
            m.pow(b.omega(), s.omega_exponent as u64)
        } else {
            m.pow(b.omega_inverse(), s.omega_exponent.unsigned_abs())
        };
        let mut term = m.mul(w, m.pow(b.delta(), s.delta_exponent as u64));
        for fac in &s.factors {
            term = m.mul(term, b.get(fac.coef, f.0[fac.left], f.0[fac.right]));
        }
        total = m.add(total, term);
    }
    Ok(total)
}
