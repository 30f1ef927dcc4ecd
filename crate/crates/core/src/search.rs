//! Search for virtual brackets over `Z_p`.
//!
//! For each pair `(x, y)` the values `A, B, V` determine `C, D, U` through
//! the four product equations when they can be solved at all, so only
//! `(A, B, V)` per pair and `δ` are searched. Pairs are assigned diagonal first, then row-major; a
//! triple equation is checked as soon as all six pairs it reads are set.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::biquandle::FiniteBiquandle;
use crate::bracket::{equation_table, Coef, Side, VirtualBracket};
use crate::ring::Modulus;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("modulus {0} is not prime")]
    NonPrime(u32),
    #[error("budget must be positive")]
    ZeroBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Ansatz {
    /// Every coefficient free.
    Full,
    /// `A` and `B` vanish off the diagonal.
    Diagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub modulus: Modulus,
    pub ansatz: Ansatz,
    /// Maximum number of search nodes examined.
    pub budget: u64,
    pub seed: u64,
    pub require_delta_unit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Found {
    pub bracket: VirtualBracket,
    /// Node counter value when the solution was reached.
    pub node: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Solutions sorted by `(δ, block rows)`.
    pub found: Vec<Found>,
    pub nodes: u64,
    pub budget_exhausted: bool,
}

/// Solves the six pair equations at one pair for `(C, D, U)`.
///
/// `{AC + VU = 1, AU + VC = 0}` has determinant `A² − V²`; when it vanishes
/// the two equations contradict each other, so there is no solution.
/// Likewise for `{BD + VU = 1, BU + VD = 0}`. Both systems give a value for
/// `U`, which must agree, and the two δ equations are then checked directly.
pub fn solve_pair(p: Modulus, a: u32, b: u32, v: u32, delta: u32) -> Option<(u32, u32, u32)> {
    let d1 = p.sub(p.mul(a, a), p.mul(v, v));
    let d2 = p.sub(p.mul(b, b), p.mul(v, v));
    let i1 = p.inverse(d1).ok()?;
    let i2 = p.inverse(d2).ok()?;
    let c = p.mul(a, i1);
    let u = p.mul(p.neg(v), i1);
    let d = p.mul(b, i2);
    if p.mul(p.neg(v), i2) != u {
        return None;
    }
    let e7 = p.add(p.add(p.mul(delta, p.mul(b, d)), p.mul(a, d)), p.mul(b, c));
    let e8 = p.add(p.add(p.mul(delta, p.mul(a, c)), p.mul(a, d)), p.mul(b, c));
    (e7 == 0 && e8 == 0).then_some((c, d, u))
}

type Six = [u32; 6];

struct Searcher<'a> {
    x: &'a FiniteBiquandle,
    p: Modulus,
    n: usize,
    cfg: &'a SearchConfig,
    order: Vec<(usize, usize)>,
    // triples whose last pair is at each position
    checks: Vec<Vec<(usize, usize, usize)>>,
    eqs: Vec<(u8, Side, Side)>,
    // per position: candidate six-tuples (shuffled)
    candidates: Vec<Vec<Six>>,
    values: Vec<Option<Six>>,
    delta: u32,
    omega: Option<(u32, u32)>,
    nodes: u64,
    exhausted: bool,
    found: Vec<Found>,
}

impl<'a> Searcher<'a> {
    fn pair_index(&self, x: usize, y: usize) -> usize {
        x * self.n + y
    }

    fn get(&self, c: Coef, x: usize, y: usize) -> u32 {
        self.values[self.pair_index(x, y)].expect("pair assigned before use")[c.index()]
    }

    fn eval(&self, side: &Side, idx: [(usize, usize); 3]) -> u32 {
        let p = self.p;
        side.0.iter().fold(0, |acc, t| {
            let mut v = p.pow(self.delta, t.delta_power as u64);
            for (k, &c) in t.factors.iter().enumerate() {
                v = p.mul(v, self.get(c, idx[k].0, idx[k].1));
            }
            p.add(acc, v)
        })
    }

    fn triple_ok(&self, a: usize, y: usize, z: usize) -> bool {
        let x = self.x;
        let left = [(a, y), (x.under(a, y), x.over(z, y)), (y, z)];
        let right = [(x.over(y, a), x.over(z, a)), (a, z), (x.under(a, z), x.under(y, z))];
        self.eqs.iter().all(|(_, l, r)| self.eval(l, left) == self.eval(r, right))
    }

    fn run(&mut self, pos: usize) {
        if self.exhausted {
            return;
        }
        if pos == self.order.len() {
            self.emit();
            return;
        }
        let (px, py) = self.order[pos];
        let slot = self.pair_index(px, py);
        for k in 0..self.candidates[pos].len() {
            if self.nodes >= self.cfg.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            let six = self.candidates[pos][k];
            let saved_omega = self.omega;
            if px == py && !self.diagonal_ok(six) {
                continue;
            }
            self.values[slot] = Some(six);
            if self.checks[pos].iter().all(|&(a, b, c)| self.triple_ok(a, b, c)) {
                self.run(pos + 1);
            }
            self.values[slot] = None;
            self.omega = saved_omega;
            if self.exhausted {
                return;
            }
        }
    }

    /// The ω equations at a diagonal pair; the first one fixes `ω`.
    fn diagonal_ok(&mut self, six: Six) -> bool {
        let p = self.p;
        let w = p.add(p.add(p.mul(self.delta, six[0]), six[1]), six[2]);
        let wi = p.add(p.add(p.mul(self.delta, six[3]), six[4]), six[5]);
        match self.omega {
            Some((ow, owi)) => w == ow && wi == owi,
            None => match p.inverse(w) {
                Ok(inv) if inv == wi => {
                    self.omega = Some((w, wi));
                    true
                }
                _ => false,
            },
        }
    }

    fn emit(&mut self) {
        let nn = self.n * self.n;
        let mut tables: [Vec<u32>; 6] = Default::default();
        for (c, t) in tables.iter_mut().enumerate() {
            *t = (0..nn).map(|i| self.values[i].expect("all pairs assigned")[c]).collect();
        }
        let (w, _) = self.omega.expect("diagonal pairs fix omega");
        let b = VirtualBracket::from_tables(self.p, tables, self.delta, w).expect("omega is a unit");
        // Re-check exhaustively; the incremental checks should already imply it.
        let rep = b.verify_axioms(self.x).expect("sizes agree");
        assert!(rep.passed, "search produced an invalid bracket: {:?}", rep.violations);
        self.found.push(Found { bracket: b, node: self.nodes });
    }
}

pub fn search_brackets(x: &FiniteBiquandle, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let p = cfg.modulus;
    if !p.is_prime() {
        return Err(SearchError::NonPrime(p.get()));
    }
    if cfg.budget == 0 {
        return Err(SearchError::ZeroBudget);
    }
    let n = x.size();
    let mut order: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    order.extend((0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))));
    let mut position = vec![0; n * n];
    for (k, &(i, j)) in order.iter().enumerate() {
        position[i * n + j] = k;
    }
    let mut checks = vec![Vec::new(); order.len()];
    for a in 0..n {
        for y in 0..n {
            for z in 0..n {
                let pairs = [
                    (a, y),
                    (x.under(a, y), x.over(z, y)),
                    (y, z),
                    (x.over(y, a), x.over(z, a)),
                    (a, z),
                    (x.under(a, z), x.under(y, z)),
                ];
                let last = pairs.iter().map(|&(i, j)| position[i * n + j]).max().expect("six pairs");
                checks[last].push((a, y, z));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pm = p.get();
    let mut nodes = 0;
    let mut exhausted = false;
    let mut found = Vec::new();
    for delta in 0..pm {
        if cfg.require_delta_unit && !p.is_unit(delta) {
            continue;
        }
        let mut candidates = Vec::with_capacity(order.len());
        for &(i, j) in &order {
            let mut c: Vec<Six> = Vec::new();
            let off_diag_restricted = i != j && cfg.ansatz == Ansatz::Diagonal;
            for a in 0..pm {
                for b in 0..pm {
                    if off_diag_restricted && (a != 0 || b != 0) {
                        continue;
                    }
                    for v in 0..pm {
                        if let Some((cc, d, u)) = solve_pair(p, a, b, v, delta) {
                            c.push([a, b, v, cc, d, u]);
                        }
                    }
                }
            }
            c.shuffle(&mut rng);
            candidates.push(c);
        }
        let mut s = Searcher {
            x,
            p,
            n,
            cfg,
            order: order.clone(),
            checks: checks.clone(),
            eqs: equation_table(),
            candidates,
            values: vec![None; n * n],
            delta,
            omega: None,
            nodes,
            exhausted: false,
            found: Vec::new(),
        };
        s.run(0);
        nodes = s.nodes;
        found.append(&mut s.found);
        if s.exhausted {
            exhausted = true;
            break;
        }
    }
    found.sort_by_key(|f| (f.bracket.delta(), f.bracket.block_rows()));
    Ok(SearchOutcome { found, nodes, budget_exhausted: exhausted })
}
