//! The bracket equations as data.
//!
//! Each triple equation compares two sums of products `F·G·H`. On the left
//! the three factors are indexed by `(x, y)`, `(x^y, z_y)`, `(y, z)`; on the
//! right by `(y_x, z_x)`, `(x, z)`, `(x^z, y^z)`, where `x^y = x ▷̲ y` and
//! `x_y = x ▷̄ y`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Coef, VirtualBracket};
use crate::biquandle::{AxiomReport, FiniteBiquandle, Violation};

/// Equation number `1..=23`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BracketEquation(pub u8);

impl fmt::Display for BracketEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

/// `δ^delta_power · F·G·H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub delta_power: u8,
    pub factors: [Coef; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side(pub Vec<Term>);

const fn t(f: Coef, g: Coef, h: Coef) -> Term {
    Term { delta_power: 0, factors: [f, g, h] }
}

const fn dt(f: Coef, g: Coef, h: Coef) -> Term {
    Term { delta_power: 1, factors: [f, g, h] }
}

/// The fifteen triple equations as `(number, left, right)`, numbered 9 to 23
/// after the eight diagonal and pair equations.
///
/// Family 9 has `A_{x,z}` in the middle of its second right-hand term, and
/// families 10 and 11 balance the long sums against a single `A B A`
/// product. With `A_{x,y}` there, or `A B B` on the short sides, the Z5
/// example bracket is rejected.
pub fn equation_table() -> Vec<(u8, Side, Side)> {
    use Coef::{A, B, V};
    vec![
        (9, Side(vec![t(A, A, A), t(V, A, V)]), Side(vec![t(A, A, A), t(V, A, V)])),
        (
            10,
            Side(vec![t(A, A, B), t(B, A, A), dt(B, A, B), t(B, A, V), t(B, B, B), t(A, V, B), t(V, A, B)]),
            Side(vec![t(A, B, A)]),
        ),
        (
            11,
            Side(vec![t(A, B, A)]),
            Side(vec![t(A, A, B), t(B, A, A), dt(B, A, B), t(B, A, V), t(B, B, B), t(B, V, B)]),
        ),
        (12, Side(vec![t(A, V, A)]), Side(vec![t(A, A, V), t(V, A, A)])),
        (13, Side(vec![t(A, A, V), t(V, A, A)]), Side(vec![t(A, V, A)])),
        (14, Side(vec![t(B, B, A), t(B, V, V)]), Side(vec![t(A, B, B), t(V, V, B)])),
        (15, Side(vec![t(A, B, B), t(V, V, B)]), Side(vec![t(B, B, A), t(B, V, V)])),
        (16, Side(vec![t(B, B, V), t(B, V, A)]), Side(vec![t(A, B, V)])),
        (17, Side(vec![t(A, B, V)]), Side(vec![t(B, B, V), t(B, V, A)])),
        (18, Side(vec![t(V, B, A)]), Side(vec![t(A, V, B), t(V, B, B)])),
        (19, Side(vec![t(A, V, B), t(V, B, B)]), Side(vec![t(V, B, A)])),
        (20, Side(vec![t(V, V, A)]), Side(vec![t(A, V, V)])),
        (21, Side(vec![t(A, V, V)]), Side(vec![t(V, V, A)])),
        (22, Side(vec![t(V, B, V)]), Side(vec![t(V, B, V)])),
        (23, Side(vec![t(V, V, V)]), Side(vec![t(V, V, V)])),
    ]
}

fn eval_side(b: &VirtualBracket, side: &Side, idx: [(usize, usize); 3]) -> u32 {
    let m = b.modulus();
    side.0.iter().fold(0, |acc, term| {
        let mut p = m.pow(b.delta(), term.delta_power as u64);
        for (k, &c) in term.factors.iter().enumerate() {
            p = m.mul(p, b.get(c, idx[k].0, idx[k].1));
        }
        m.add(acc, p)
    })
}

pub(super) fn verify(b: &VirtualBracket, x: &FiniteBiquandle) -> AxiomReport<BracketEquation> {
    use Coef::*;
    let m = b.modulus();
    let n = b.size();
    let (d, w, wi) = (b.delta(), b.omega(), b.omega_inverse());
    let one = 1 % m.get();
    let mut v = Vec::new();
    let mut fail = |eq: u8, witness: &[usize]| {
        v.push(Violation { axiom: BracketEquation(eq), witness: witness.iter().map(|i| i + 1).collect() });
    };
    for i in 0..n {
        let f = |c| b.get(c, i, i);
        if m.add(m.add(m.mul(d, f(A)), f(B)), f(V)) != w {
            fail(1, &[i]);
        }
        if m.add(m.add(m.mul(d, f(C)), f(D)), f(U)) != wi {
            fail(2, &[i]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let f = |c| b.get(c, i, j);
            let (a, bb, vv, c, dd, u) = (f(A), f(B), f(V), f(C), f(D), f(U));
            let checks = [
                (3, m.add(m.mul(a, c), m.mul(vv, u)), one),
                (4, m.add(m.mul(bb, dd), m.mul(vv, u)), one),
                (5, m.add(m.mul(a, u), m.mul(vv, c)), 0),
                (6, m.add(m.mul(bb, u), m.mul(vv, dd)), 0),
                (7, m.add(m.add(m.mul(d, m.mul(bb, dd)), m.mul(a, dd)), m.mul(bb, c)), 0),
                (8, m.add(m.add(m.mul(d, m.mul(a, c)), m.mul(a, dd)), m.mul(bb, c)), 0),
            ];
            for (eq, got, want) in checks {
                if got != want {
                    fail(eq, &[i, j]);
                }
            }
        }
    }
    let table = equation_table();
    for xx in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = [(xx, y), (x.under(xx, y), x.over(z, y)), (y, z)];
                let right = [(x.over(y, xx), x.over(z, xx)), (xx, z), (x.under(xx, z), x.under(y, z))];
                for (eq, l, r) in &table {
                    if eval_side(b, l, left) != eval_side(b, r, right) {
                        fail(*eq, &[xx, y, z]);
                    }
                }
            }
        }
    }
    AxiomReport::from_violations(v)
}
