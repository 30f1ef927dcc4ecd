//! State enumeration, component counting and concrete evaluation.

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{BracketError, Coef, VirtualBracket};
use crate::biquandle::{Element, FiniteBiquandle};
use crate::coloring::{enumerate_colorings, is_coloring, Coloring};
use crate::diagram::{Crossing, KnotoidDiagram, Sign};
use crate::ring::BracketPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    Vertical,
    Horizontal,
    Virtual,
}

impl Smoothing {
    pub const ALL: [Smoothing; 3] = [Smoothing::Vertical, Smoothing::Horizontal, Smoothing::Virtual];

    /// The coefficient map attached to this smoothing at a crossing of
    /// the given sign.
    pub fn coef(self, sign: Sign) -> Coef {
        match (sign, self) {
            (Sign::Positive, Smoothing::Vertical) => Coef::A,
            (Sign::Positive, Smoothing::Horizontal) => Coef::B,
            (Sign::Positive, Smoothing::Virtual) => Coef::V,
            (Sign::Negative, Smoothing::Vertical) => Coef::C,
            (Sign::Negative, Smoothing::Horizontal) => Coef::D,
            (Sign::Negative, Smoothing::Virtual) => Coef::U,
        }
    }
}

/// Number of components of the smoothed curve, the open segment included.
/// `smoothing[k]` applies to `d.crossings()[k]`.
///
/// Nodes `2s` and `2s + 1` are the start and end of semi-arc `s`. Vertical
/// smoothing keeps orientation (`u_in–o_out`, `o_in–u_out`); horizontal
/// reverses it (`u_in–o_in`, `u_out–o_out`); virtual passes both strands
/// straight through.
pub fn smooth_components(d: &KnotoidDiagram, smoothing: &[Smoothing]) -> usize {
    assert_eq!(smoothing.len(), d.classical_count(), "one smoothing per classical crossing");
    let arcs = d.semi_arc_count();
    let mut uf = UnionFind::<usize>::new(2 * arcs);
    for s in 0..arcs {
        uf.union(2 * s, 2 * s + 1);
    }
    for (c, s) in d.crossings().iter().zip(smoothing) {
        let (ui, uo, oi, oo) = (2 * c.under_in + 1, 2 * c.under_out, 2 * c.over_in + 1, 2 * c.over_out);
        let [(a, b), (p, q)] = match s {
            Smoothing::Vertical => [(ui, oo), (oi, uo)],
            Smoothing::Horizontal => [(ui, oi), (uo, oo)],
            Smoothing::Virtual => [(ui, uo), (oi, oo)],
        };
        uf.union(a, b);
        uf.union(p, q);
    }
    let mut labels = uf.into_labeling();
    labels.sort_unstable();
    labels.dedup();
    labels.len()
}

/// State `k` assigns crossing `i` (in id order) the smoothing given by the
/// `i`-th base-3 digit of `k`, most significant first.
pub fn state_smoothings(c: usize, k: usize) -> Vec<Smoothing> {
    let mut v = vec![Smoothing::Vertical; c];
    let mut k = k;
    for slot in v.iter_mut().rev() {
        *slot = Smoothing::ALL[k % 3];
        k /= 3;
    }
    v
}

/// Per-state data that does not depend on the coloring.
#[derive(Debug, Clone)]
pub struct StateTable {
    writhe: i64,
    // (x, y) semi-arcs of each crossing's coefficient
    indices: Vec<(usize, usize)>,
    signs: Vec<Sign>,
    // (component count, smoothing per crossing)
    states: Vec<(usize, Vec<Smoothing>)>,
}

impl StateTable {
    pub fn new(d: &KnotoidDiagram) -> Self {
        let c = d.classical_count();
        let total = 3usize.pow(c as u32);
        let states = (0..total)
            .map(|k| {
                let s = state_smoothings(c, k);
                (smooth_components(d, &s), s)
            })
            .collect();
        let rels = d.relations();
        StateTable {
            writhe: d.writhe(),
            indices: rels.iter().map(|r| (r.x, r.y)).collect(),
            signs: d.crossings().iter().map(|c: &Crossing| c.sign).collect(),
            states,
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    /// `(component count, smoothings)` of every state.
    pub fn states(&self) -> &[(usize, Vec<Smoothing>)] {
        &self.states
    }

    /// The semi-arc pair indexing crossing `k`'s coefficient.
    pub fn coefficient_indices(&self) -> &[(usize, usize)] {
        &self.indices
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// `β(K_f)` for a coloring assumed valid.
    pub fn evaluate(&self, b: &VirtualBracket, f: &[Element]) -> u32 {
        let m = b.modulus();
        let max_m = self.states.iter().map(|s| s.0).max().unwrap_or(1);
        let delta_pows: Vec<u32> = (0..=max_m).map(|k| m.pow(b.delta(), k as u64)).collect();
        let coefs: Vec<[u32; 3]> = self
            .indices
            .iter()
            .zip(&self.signs)
            .map(|(&(x, y), &sign)| Smoothing::ALL.map(|s| b.get(s.coef(sign), f[x], f[y])))
            .collect();
        let sum = self.states.iter().fold(0u32, |acc, (comps, smooth)| {
            let mut term = delta_pows[*comps];
            for (k, s) in smooth.iter().enumerate() {
                if term == 0 {
                    break;
                }
                term = m.mul(term, coefs[k][*s as usize]);
            }
            m.add(acc, term)
        });
        m.mul(sum, b.writhe_factor(self.writhe))
    }
}

fn check_sizes(x: &FiniteBiquandle, b: &VirtualBracket) -> Result<(), BracketError> {
    if x.size() != b.size() {
        return Err(BracketError::Dimension { bracket: b.size(), biquandle: x.size() });
    }
    Ok(())
}

/// `β(K_f)`; rejects `f` unless it is an `x`-coloring of `d`.
pub fn evaluate(d: &KnotoidDiagram, x: &FiniteBiquandle, b: &VirtualBracket, f: &Coloring) -> Result<u32, BracketError> {
    check_sizes(x, b)?;
    if !is_coloring(d, x, &f.0) {
        return Err(BracketError::ColoringMismatch);
    }
    Ok(StateTable::new(d).evaluate(b, &f.0))
}

fn evaluations(d: &KnotoidDiagram, x: &FiniteBiquandle, b: &VirtualBracket) -> Result<Vec<(Coloring, u32)>, BracketError> {
    check_sizes(x, b)?;
    let table = StateTable::new(d);
    let cols = enumerate_colorings(d, x);
    Ok(cols
        .into_par_iter()
        .map(|f| {
            let v = table.evaluate(b, &f.0);
            (f, v)
        })
        .collect())
}

/// Bracket values over all colorings, sorted ascending.
pub fn bracket_multiset(d: &KnotoidDiagram, x: &FiniteBiquandle, b: &VirtualBracket) -> Result<Vec<u32>, BracketError> {
    let mut v: Vec<u32> = evaluations(d, x, b)?.into_iter().map(|(_, v)| v).collect();
    v.sort_unstable();
    Ok(v)
}

pub fn bracket_polynomial(d: &KnotoidDiagram, x: &FiniteBiquandle, b: &VirtualBracket) -> Result<BracketPolynomial, BracketError> {
    let mut p = BracketPolynomial::zero(b.modulus());
    for (_, v) in evaluations(d, x, b)? {
        p.add_term(v, 1);
    }
    Ok(p)
}

/// Entry `(i, j)` sums `u^β` over colorings with tail `x_{i+1}`, head `x_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketMatrix(pub Vec<Vec<BracketPolynomial>>);

impl BracketMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// Multiplicity totals per entry.
    pub fn counts(&self) -> Vec<Vec<u64>> {
        self.0.iter().map(|r| r.iter().map(BracketPolynomial::total).collect()).collect()
    }

    /// Entries rendered canonically, row-major.
    pub fn rendered(&self) -> Vec<Vec<String>> {
        self.0.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect()
    }

    /// Reorders rows and columns: entry `(i, j)` of the result is entry
    /// `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> BracketMatrix {
        BracketMatrix(perm.iter().map(|&i| perm.iter().map(|&j| self.0[i][j].clone()).collect()).collect())
    }

    /// The single exponent of each diagonal entry when the matrix is
    /// diagonal with monomial entries.
    pub fn diagonal_exponents(&self) -> Option<Vec<u32>> {
        let n = self.size();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            for j in 0..n {
                let p = &self.0[i][j];
                if i != j && !p.is_zero() {
                    return None;
                }
            }
            let terms: Vec<_> = self.0[i][i].terms().collect();
            match terms[..] {
                [(e, 1)] => out.push(e),
                _ => return None,
            }
        }
        Some(out)
    }
}

pub fn bracket_matrix(d: &KnotoidDiagram, x: &FiniteBiquandle, b: &VirtualBracket) -> Result<BracketMatrix, BracketError> {
    let n = x.size();
    let mut mat = vec![vec![BracketPolynomial::zero(b.modulus()); n]; n];
    for (f, v) in evaluations(d, x, b)? {
        mat[f.tail()][f.head()].add_term(v, 1);
    }
    Ok(BracketMatrix(mat))
}
