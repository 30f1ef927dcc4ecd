//! Finite biquandles given by operation tables.
//!
//! Elements are `0..n` internally. Files and rendered matrices use the
//! 1-based labels `x_1..x_n`; for tables built from `Z_m`, label `i`
//! stands for residue `i mod m`, so residue 0 is written `m`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{Modulus, RingError};

pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiquandleError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("entry {value} at row {row}, column {col} is outside [1, {n}]")]
    Range { row: usize, col: usize, value: i64, n: usize },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("not a biquandle: {0}")]
    NotABiquandle(String),
}

/// Which biquandle axiom a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BiquandleAxiom {
    /// `x ▷̲ x = x ▷̄ x`.
    Diagonal,
    /// `α_y : x ↦ x ▷̄ y` is not a bijection.
    OverColumn,
    /// `β_y : x ↦ x ▷̲ y` is not a bijection.
    UnderColumn,
    /// The sideways map is not a bijection.
    Sideways,
    ExchangeUnderUnder,
    ExchangeUnderOver,
    ExchangeOverOver,
}

impl BiquandleAxiom {
    pub fn number(self) -> u8 {
        match self {
            BiquandleAxiom::Diagonal => 1,
            BiquandleAxiom::OverColumn | BiquandleAxiom::UnderColumn | BiquandleAxiom::Sideways => 2,
            _ => 3,
        }
    }
}

/// One failing axiom instance; `witness` holds 1-based element labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation<A> {
    pub axiom: A,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport<A> {
    pub passed: bool,
    pub violations: Vec<Violation<A>>,
}

impl<A> AxiomReport<A> {
    pub fn from_violations(violations: Vec<Violation<A>>) -> Self {
        AxiomReport { passed: violations.is_empty(), violations }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBiquandle {
    n: usize,
    under: Vec<Element>,
    over: Vec<Element>,
    // Inverses of the column maps, present only when every column is a bijection.
    under_inv: Option<Vec<Element>>,
    over_inv: Option<Vec<Element>>,
    sideways_inv: Option<Vec<(Element, Element)>>,
}

fn invert_columns(n: usize, table: &[Element]) -> Option<Vec<Element>> {
    let mut inv = vec![usize::MAX; n * n];
    for y in 0..n {
        for x in 0..n {
            let v = table[x * n + y];
            if inv[v * n + y] != usize::MAX {
                return None;
            }
            inv[v * n + y] = x;
        }
    }
    Some(inv)
}

impl FiniteBiquandle {
    /// Builds from 0-based tables, `under[x][y] = x ▷̲ y`, `over[x][y] = x ▷̄ y`.
    pub fn from_tables(under: Vec<Vec<Element>>, over: Vec<Vec<Element>>) -> Result<Self, BiquandleError> {
        let n = under.len();
        if n == 0 {
            return Err(BiquandleError::Shape("biquandle must have at least one element".into()));
        }
        if over.len() != n || under.iter().chain(over.iter()).any(|r| r.len() != n) {
            return Err(BiquandleError::Shape(format!("both tables must be {n}x{n}")));
        }
        for (block, t) in [(0, &under), (n, &over)] {
            for (i, row) in t.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v >= n {
                        return Err(BiquandleError::Range { row: i + 1, col: block + j + 1, value: v as i64 + 1, n });
                    }
                }
            }
        }
        let under: Vec<Element> = under.into_iter().flatten().collect();
        let over: Vec<Element> = over.into_iter().flatten().collect();
        let under_inv = invert_columns(n, &under);
        let over_inv = invert_columns(n, &over);
        let mut sideways_inv = Some(vec![(usize::MAX, usize::MAX); n * n]);
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (over[y * n + x], under[x * n + y]);
                let Some(s) = sideways_inv.as_mut() else { break };
                if s[a * n + b].0 != usize::MAX {
                    sideways_inv = None;
                } else {
                    s[a * n + b] = (x, y);
                }
            }
        }
        Ok(FiniteBiquandle { n, under, over, under_inv, over_inv, sideways_inv })
    }

    /// Parses an `n × 2n` operation matrix of 1-based labels, optionally
    /// preceded by a line holding `n` alone.
    pub fn parse_operation_matrix(text: &str) -> Result<Self, BiquandleError> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| BiquandleError::Syntax(format!("line {}: bad integer {t:?}", ln + 1))))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(BiquandleError::Shape("empty operation matrix".into()));
        }
        // A leading "n" header line is optional: accept it when it announces
        // the number of rows that follow.
        if rows[0].len() == 1 && rows.len() > 1 {
            let n = rows[0][0];
            if n != (rows.len() - 1) as i64 {
                return Err(BiquandleError::Shape(format!("header announces {n} rows, found {}", rows.len() - 1)));
            }
            rows.remove(0);
        }
        let n = rows.len();
        let mut under = vec![vec![0; n]; n];
        let mut over = vec![vec![0; n]; n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != 2 * n {
                return Err(BiquandleError::Shape(format!("row {} has {} entries, expected {}", i + 1, row.len(), 2 * n)));
            }
            for (j, &v) in row.iter().enumerate() {
                if v < 1 || v > n as i64 {
                    return Err(BiquandleError::Range { row: i + 1, col: j + 1, value: v, n });
                }
                let e = (v - 1) as usize;
                if j < n {
                    under[i][j] = e;
                } else {
                    over[i][j - n] = e;
                }
            }
        }
        Self::from_tables(under, over)
    }

    /// Affine biquandle on `Z_m`: `x ▷̲ y = t x + (r − t) y + c`,
    /// `x ▷̄ y = r x + c`.
    pub fn affine(m: Modulus, t: u32, r: u32, c: u32) -> Result<Self, BiquandleError> {
        for v in [t, r] {
            if !m.is_unit(v) {
                return Err(RingError::NotAUnit { value: v % m.get(), modulus: m.get() }.into());
            }
        }
        let n = m.get() as usize;
        let idx = |res: u32| (res as usize + n - 1) % n;
        let res = |i: usize| ((i + 1) % n) as u32;
        let rt = m.sub(r, t);
        let mut under = vec![vec![0; n]; n];
        let mut over = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (res(i), res(j));
                under[i][j] = idx(m.add(m.add(m.mul(t, x), m.mul(rt, y)), c));
                over[i][j] = idx(m.add(m.mul(r, x), c));
            }
        }
        Self::from_tables(under, over)
    }

    /// Alexander biquandle `x ▷̲ y = t x + (r − t) y`, `x ▷̄ y = r x`.
    pub fn alexander(m: Modulus, t: u32, r: u32) -> Result<Self, BiquandleError> {
        Self::affine(m, t, r, 0)
    }

    pub fn singleton() -> Self {
        Self::from_tables(vec![vec![0]], vec![vec![0]]).expect("1x1 tables are well formed")
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    /// `x ▷̲ y`.
    #[inline]
    pub fn under(&self, x: Element, y: Element) -> Element {
        self.under[x * self.n + y]
    }

    /// `x ▷̄ y`.
    #[inline]
    pub fn over(&self, x: Element, y: Element) -> Element {
        self.over[x * self.n + y]
    }

    /// The `x` with `x ▷̲ y = v`.
    #[inline]
    pub fn under_inverse(&self, v: Element, y: Element) -> Option<Element> {
        self.under_inv.as_ref().map(|t| t[v * self.n + y])
    }

    /// The `x` with `x ▷̄ y = v`.
    #[inline]
    pub fn over_inverse(&self, v: Element, y: Element) -> Option<Element> {
        self.over_inv.as_ref().map(|t| t[v * self.n + y])
    }

    /// `S(x, y) = (y ▷̄ x, x ▷̲ y)`.
    #[inline]
    pub fn sideways(&self, x: Element, y: Element) -> (Element, Element) {
        (self.over(y, x), self.under(x, y))
    }

    /// The unique `(x, y)` with `S(x, y) = (a, b)`.
    pub fn sideways_inverse(&self, a: Element, b: Element) -> Result<(Element, Element), BiquandleError> {
        if a >= self.n || b >= self.n {
            return Err(BiquandleError::Range { row: a + 1, col: b + 1, value: a.max(b) as i64 + 1, n: self.n });
        }
        self.sideways_inv
            .as_ref()
            .map(|t| t[a * self.n + b])
            .ok_or_else(|| BiquandleError::NotABiquandle("sideways map is not a bijection".into()))
    }

    /// True when all column maps and the sideways map are bijections.
    pub fn is_invertible(&self) -> bool {
        self.under_inv.is_some() && self.over_inv.is_some() && self.sideways_inv.is_some()
    }

    pub fn under_rows(&self) -> Vec<Vec<Element>> {
        self.under.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    pub fn over_rows(&self) -> Vec<Vec<Element>> {
        self.over.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    /// The `n × 2n` operation matrix in 1-based labels.
    pub fn operation_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.under(i, j) + 1)
                    .chain((0..self.n).map(|j| self.over(i, j) + 1))
                    .collect()
            })
            .collect()
    }

    /// Returns a copy with one operation-matrix entry replaced (1-based
    /// row, column and value). Used to build mutants for axiom tests.
    pub fn with_entry(&self, row: usize, col: usize, value: usize) -> Result<Self, BiquandleError> {
        let n = self.n;
        if row == 0 || row > n || col == 0 || col > 2 * n || value == 0 || value > n {
            return Err(BiquandleError::Range { row, col, value: value as i64, n });
        }
        let mut under = self.under_rows();
        let mut over = self.over_rows();
        if col <= n {
            under[row - 1][col - 1] = value - 1;
        } else {
            over[row - 1][col - n - 1] = value - 1;
        }
        Self::from_tables(under, over)
    }

    /// Exhaustive check of all three axiom groups. Violations are listed
    /// in order: diagonal, columns, sideways, exchange laws.
    pub fn verify_axioms(&self) -> AxiomReport<BiquandleAxiom> {
        let n = self.n;
        let mut v = Vec::new();
        let w = |xs: &[usize]| xs.iter().map(|x| x + 1).collect::<Vec<_>>();
        for x in 0..n {
            if self.under(x, x) != self.over(x, x) {
                v.push(Violation { axiom: BiquandleAxiom::Diagonal, witness: w(&[x]) });
            }
        }
        for y in 0..n {
            for (axiom, f) in [
                (BiquandleAxiom::OverColumn, &self.over as &Vec<usize>),
                (BiquandleAxiom::UnderColumn, &self.under),
            ] {
                let mut seen = vec![false; n];
                for x in 0..n {
                    seen[f[x * n + y]] = true;
                }
                if seen.iter().any(|s| !s) {
                    v.push(Violation { axiom, witness: w(&[y]) });
                }
            }
        }
        if self.sideways_inv.is_none() {
            let mut seen = vec![None; n * n];
            'outer: for x in 0..n {
                for y in 0..n {
                    let (a, b) = self.sideways(x, y);
                    if let Some((px, py)) = seen[a * n + b] {
                        v.push(Violation { axiom: BiquandleAxiom::Sideways, witness: w(&[px, py, x, y]) });
                        break 'outer;
                    }
                    seen[a * n + b] = Some((x, y));
                }
            }
        }
        let (u, o) = (|a, b| self.under(a, b), |a, b| self.over(a, b));
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let checks = [
                        (BiquandleAxiom::ExchangeUnderUnder, u(u(x, y), u(z, y)), u(u(x, z), o(y, z))),
                        (BiquandleAxiom::ExchangeUnderOver, o(u(x, y), u(z, y)), u(o(x, z), o(y, z))),
                        (BiquandleAxiom::ExchangeOverOver, o(o(x, y), o(z, y)), o(o(x, z), u(y, z))),
                    ];
                    for (axiom, l, r) in checks {
                        if l != r {
                            v.push(Violation { axiom, witness: w(&[x, y, z]) });
                        }
                    }
                }
            }
        }
        AxiomReport::from_violations(v)
    }

    /// Renders the file format: `n`, then the operation matrix.
    pub fn render(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for row in self.operation_matrix() {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for BiquandleAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BiquandleAxiom::Diagonal => "diagonal",
            BiquandleAxiom::OverColumn => "over-column bijection",
            BiquandleAxiom::UnderColumn => "under-column bijection",
            BiquandleAxiom::Sideways => "sideways bijection",
            BiquandleAxiom::ExchangeUnderUnder => "exchange law (under, under)",
            BiquandleAxiom::ExchangeUnderOver => "exchange law (under, over)",
            BiquandleAxiom::ExchangeOverOver => "exchange law (over, over)",
        };
        f.write_str(s)
    }
}
