//! Biquandle colorings, the counting invariant and the counting matrix.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::biquandle::{Element, FiniteBiquandle};
use crate::diagram::{KnotoidDiagram, Relation};

/// Semi-arc index to element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring(pub Vec<Element>);

impl Coloring {
    pub fn tail(&self) -> Element {
        self.0[0]
    }

    pub fn head(&self) -> Element {
        *self.0.last().expect("a coloring has at least one semi-arc")
    }
}

/// `(i, j)` entry counts colorings with tail `x_{i+1}` and head `x_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingMatrix(pub Vec<Vec<u64>>);

impl CountingMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().flatten().sum()
    }

    pub fn identity(n: usize) -> Self {
        CountingMatrix((0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect())
    }

    pub fn multiply(&self, other: &CountingMatrix) -> CountingMatrix {
        let n = self.size();
        CountingMatrix(
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| self.0[i][k] * other.0[k][j]).sum()).collect())
                .collect(),
        )
    }
}

/// True when `f` satisfies every crossing relation of `d`.
pub fn is_coloring(d: &KnotoidDiagram, x: &FiniteBiquandle, f: &[Element]) -> bool {
    f.len() == d.semi_arc_count()
        && f.iter().all(|&e| e < x.size())
        && d.relations().iter().all(|r| {
            f[r.under_result] == x.under(f[r.x], f[r.y]) && f[r.over_result] == x.over(f[r.y], f[r.x])
        })
}

const UNSET: Element = usize::MAX;

struct Solver<'a> {
    x: &'a FiniteBiquandle,
    rels: Vec<Relation>,
    // relation indices touching each semi-arc
    touching: Vec<Vec<usize>>,
    col: Vec<Element>,
    trail: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(d: &KnotoidDiagram, x: &'a FiniteBiquandle) -> Self {
        let rels = d.relations();
        let mut touching = vec![Vec::new(); d.semi_arc_count()];
        for (i, r) in rels.iter().enumerate() {
            for s in [r.x, r.y, r.under_result, r.over_result] {
                if !touching[s].contains(&i) {
                    touching[s].push(i);
                }
            }
        }
        Solver { x, rels, touching, col: vec![UNSET; d.semi_arc_count()], trail: Vec::new() }
    }

    fn set(&mut self, s: usize, v: Element, queue: &mut Vec<usize>) -> bool {
        match self.col[s] {
            UNSET => {
                self.col[s] = v;
                self.trail.push(s);
                queue.push(s);
                true
            }
            cur => cur == v,
        }
    }

    /// Assigns `s = v` and propagates; false on conflict.
    fn assign(&mut self, s: usize, v: Element) -> bool {
        let mut queue = Vec::new();
        if !self.set(s, v, &mut queue) {
            return false;
        }
        while let Some(s) = queue.pop() {
            for k in 0..self.touching[s].len() {
                let r = self.rels[self.touching[s][k]];
                if !self.propagate(r, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn propagate(&mut self, r: Relation, queue: &mut Vec<usize>) -> bool {
        let x = self.x;
        let (cx, cy, cu, co) = (self.col[r.x], self.col[r.y], self.col[r.under_result], self.col[r.over_result]);
        if cx != UNSET && cy != UNSET {
            return self.set(r.under_result, x.under(cx, cy), queue) && self.set(r.over_result, x.over(cy, cx), queue);
        }
        if cu != UNSET && co != UNSET {
            if let Ok((px, py)) = x.sideways_inverse(co, cu) {
                return self.set(r.x, px, queue) && self.set(r.y, py, queue) && self.propagate(r, queue);
            }
        }
        if cx != UNSET && co != UNSET {
            if let Some(py) = x.over_inverse(co, cx) {
                return self.set(r.y, py, queue) && self.propagate(r, queue);
            }
        }
        if cy != UNSET && cu != UNSET {
            if let Some(px) = x.under_inverse(cu, cy) {
                return self.set(r.x, px, queue) && self.propagate(r, queue);
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let s = self.trail.pop().expect("trail is longer than mark");
            self.col[s] = UNSET;
        }
    }

    fn search(&mut self, out: &mut Vec<Coloring>) {
        let Some(s) = self.col.iter().position(|&c| c == UNSET) else {
            // Propagation only fires on determining pairs; confirm the
            // relations in full before accepting.
            if self.rels.iter().all(|r| {
                self.col[r.under_result] == self.x.under(self.col[r.x], self.col[r.y])
                    && self.col[r.over_result] == self.x.over(self.col[r.y], self.col[r.x])
            }) {
                out.push(Coloring(self.col.clone()));
            }
            return;
        };
        for v in 0..self.x.size() {
            let mark = self.trail.len();
            if self.assign(s, v) {
                self.search(out);
            }
            self.undo_to(mark);
        }
    }
}

/// All colorings in lexicographic order of the semi-arc assignment. The
/// search is split on the tail color.
pub fn enumerate_colorings(d: &KnotoidDiagram, x: &FiniteBiquandle) -> Vec<Coloring> {
    let branches: Vec<Vec<Coloring>> = (0..x.size())
        .into_par_iter()
        .map(|tail| {
            let mut solver = Solver::new(d, x);
            let mut out = Vec::new();
            if solver.assign(d.tail(), tail) {
                solver.search(&mut out);
            }
            out
        })
        .collect();
    branches.into_iter().flatten().collect()
}

pub fn counting_invariant(d: &KnotoidDiagram, x: &FiniteBiquandle) -> u64 {
    enumerate_colorings(d, x).len() as u64
}

pub fn counting_matrix_of(colorings: &[Coloring], n: usize) -> CountingMatrix {
    let mut m = vec![vec![0u64; n]; n];
    for f in colorings {
        m[f.tail()][f.head()] += 1;
    }
    CountingMatrix(m)
}

pub fn counting_matrix(d: &KnotoidDiagram, x: &FiniteBiquandle) -> CountingMatrix {
    counting_matrix_of(&enumerate_colorings(d, x), x.size())
}
