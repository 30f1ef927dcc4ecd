//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Checks on corpus entries whose transcription is not independently
//! validated are evaluated and reported, but do not decide the verdict.
//! The process exits non-zero if any criterion's verdict differs from
//! `EXPECTED_FAIL`.

mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vknotoid::biquandle::FiniteBiquandle;
use vknotoid::bracket::{
    bracket_matrix, bracket_multiset, bracket_polynomial, evaluate, evaluate_symbolic, fundamental_bracket, smooth_components,
    state_smoothings, BracketMatrix, Coef, VirtualBracket,
};
use vknotoid::coloring::{counting_invariant, counting_matrix, enumerate_colorings, Coloring, CountingMatrix};
use vknotoid::corpus::{Corpus, Status};
use vknotoid::data;
use vknotoid::diagram::{random_move, KnotoidDiagram};
use vknotoid::report::Order;
use vknotoid::ring::Modulus;
use vknotoid::search::{search_brackets, Ansatz, SearchConfig};

/// All comparisons are exact equalities of integers, residues, matrices or
/// symbolic terms.
const TOLERANCE: &str = "exact";
const SEARCH_TIME_LIMIT: Duration = Duration::from_secs(60);
const MOVE_TRIALS: usize = 500;
const PRODUCT_PAIRS: usize = 20;
const SEED: u64 = 20261014;

/// Criteria that cannot pass with the published data; see README.
const EXPECTED_FAIL: &[&str] = &["1", "4", "9a"];

/// Tabulated bracket matrix diagonals over Z_37, listed in residue order.
const TABULATED: &[(&str, [u32; 3])] = &[
    ("2.1.1", [27, 19, 34]),
    ("2.1.2", [27, 21, 14]),
    ("3.1.1", [19, 34, 27]),
    ("3.1.2", [27, 19, 34]),
    ("3.1.3", [27, 19, 34]),
    ("3.1.4", [19, 34, 27]),
    ("3.1.5", [7, 7, 7]),
    ("3.1.6", [5, 32, 5]),
    ("3.1.7", [5, 5, 32]),
    ("3.1.8", [34, 27, 19]),
    ("3.1.9", [32, 5, 5]),
    ("3.1.10", [7, 7, 7]),
    ("4.1.1", [6, 36, 33]),
    ("4.1.2", [28, 4, 33]),
    ("4.1.3", [30, 3, 6]),
    ("4.1.4", [27, 22, 30]),
    ("4.1.5", [1, 32, 19]),
    ("4.1.6", [24, 20, 13]),
    ("4.1.7", [31, 13, 1]),
    ("4.1.8", [36, 33, 6]),
    ("4.1.9", [20, 17, 19]),
    ("4.1.10", [22, 30, 27]),
    ("5.1.1", [19, 20, 17]),
    ("5.1.2", [24, 20, 13]),
    ("5.1.3", [30, 3, 6]),
    ("5.1.4", [19, 27, 17]),
    ("5.1.5", [12, 3, 35]),
    ("5.1.6", [3, 23, 28]),
    ("5.1.7", [35, 19, 25]),
    ("5.1.8", [20, 13, 24]),
    ("5.1.9", [27, 31, 17]),
    ("5.1.10", [11, 15, 32]),
];

const TABULATED_EQUAL: &[(&str, &str)] =
    &[("3.1.1", "3.1.4"), ("3.1.2", "3.1.3"), ("3.1.5", "3.1.10"), ("4.1.6", "5.1.2"), ("4.1.3", "5.1.3")];

const ALEXANDER_Z5_PRINTED: [[usize; 10]; 5] = [
    [4, 1, 3, 5, 2, 4, 4, 4, 4, 4],
    [1, 3, 5, 2, 4, 3, 3, 3, 3, 3],
    [3, 5, 2, 4, 2, 2, 2, 2, 2, 2],
    [5, 2, 4, 1, 3, 1, 1, 1, 1, 1],
    [2, 4, 1, 3, 5, 5, 5, 5, 5, 5],
];

type Run = Box<dyn Fn(&Ctx) -> Criterion>;

#[derive(Default)]
struct Criterion {
    verified: Vec<(String, bool)>,
    unverified: Vec<(String, bool)>,
    notes: Vec<String>,
}

impl Criterion {
    fn check(&mut self, label: impl Into<String>, ok: bool) {
        self.verified.push((label.into(), ok));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn passed(&self) -> bool {
        self.verified.iter().all(|(_, ok)| *ok)
    }

    fn summary(&self) -> String {
        let failed: Vec<&str> = self.verified.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.as_str()).collect();
        let mut parts = vec![format!("{}/{} checks", self.verified.len() - failed.len(), self.verified.len())];
        if !failed.is_empty() {
            parts.push(format!("failed: {}", failed.join("; ")));
        }
        if !self.unverified.is_empty() {
            let ok = self.unverified.iter().filter(|(_, ok)| *ok).count();
            let mut s = format!("unverified entries {ok}/{} agree", self.unverified.len());
            let bad: Vec<&str> = self.unverified.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.as_str()).collect();
            if !bad.is_empty() {
                s.push_str(&format!(" (disagree: {})", bad.join("; ")));
            }
            parts.push(s);
        }
        parts.extend(self.notes.iter().cloned());
        parts.join(", ")
    }
}

struct Ctx {
    corpus: Corpus,
}

impl Ctx {
    /// Records a check on a corpus entry, routed by the entry's status.
    fn on_entry<F>(&self, crit: &mut Criterion, name: &str, label: &str, f: F)
    where
        F: FnOnce(&KnotoidDiagram) -> bool,
    {
        let entry = self.corpus.get(name);
        let label = format!("{name} {label}");
        match (entry.map(|e| e.status), self.corpus.diagram(name)) {
            (Some(Status::Derived), Some(d)) => crit.check(label, f(d)),
            (_, Some(d)) => crit.unverified.push((label, f(d))),
            _ => crit.note(format!("{name} has no transcription")),
        }
    }
}

fn residue(mat: &CountingMatrix) -> Vec<Vec<u64>> {
    let perm = Order::Residue.permutation(mat.size());
    perm.iter().map(|&i| perm.iter().map(|&j| mat.0[i][j]).collect()).collect()
}

fn residue_diagonal(bm: &BracketMatrix) -> Option<Vec<u32>> {
    bm.permuted(&Order::Residue.permutation(bm.size())).diagonal_exponents()
}

fn cyclic() -> Vec<Vec<u64>> {
    vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]
}

fn identity3() -> Vec<Vec<u64>> {
    CountingMatrix::identity(3).0
}

fn c1_alexander() -> Criterion {
    let mut c = Criterion::default();
    let x = FiniteBiquandle::alexander(Modulus::new(5).unwrap(), 2, 4).unwrap();
    let m = x.operation_matrix();
    let mut diffs = Vec::new();
    for i in 0..5 {
        for j in 0..10 {
            if m[i][j] != ALEXANDER_Z5_PRINTED[i][j] {
                diffs.push(format!("({},{}) computed {} printed {}", i + 1, j + 1, m[i][j], ALEXANDER_Z5_PRINTED[i][j]));
            }
        }
    }
    c.check("operation matrix equals the printed matrix", diffs.is_empty());
    if !diffs.is_empty() {
        let row3: BTreeSet<usize> = ALEXANDER_Z5_PRINTED[2][..5].iter().copied().collect();
        c.note(format!("mismatch {}", diffs.join(" ")));
        c.note(format!("printed row 3 under-block is a permutation: {}", row3.len() == 5));
    }
    c
}

fn c2_axioms() -> Criterion {
    let mut c = Criterion::default();
    let tables = [
        ("Z3 cyclic table", data::z3_affine_t2_r1_c2()),
        ("Z3 2x+1", data::z3_affine_t2_r2_c1()),
        ("Z5 Alexander", data::z5_alexander()),
    ];
    let mut mutations = 0;
    for (name, x) in &tables {
        c.check(format!("{name} passes"), x.verify_axioms().passed);
        let n = x.size();
        let m = x.operation_matrix();
        let mut all_fail = true;
        for row in 1..=n {
            for col in 1..=2 * n {
                for v in (1..=n).filter(|&v| v != m[row - 1][col - 1]) {
                    mutations += 1;
                    all_fail &= !x.with_entry(row, col, v).unwrap().verify_axioms().passed;
                }
            }
        }
        c.check(format!("{name} mutations fail"), all_fail);
    }
    c.note(format!("{mutations} mutations"));
    c
}

fn c3_colorings(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let z5 = data::z5_alexander();
    let x36 = data::z3_affine_t2_r1_c2();
    ctx.on_entry(&mut c, "2.1.1", "Z5 kernel span(3,2,1,5,5)", |d| {
        let mut got: Vec<Vec<usize>> =
            enumerate_colorings(d, &z5).iter().map(|f| f.0.iter().map(|&e| (e + 1) % 5).collect()).collect();
        got.sort();
        let mut want: Vec<Vec<usize>> = (0..5).map(|k| [3, 2, 1, 0, 0].iter().map(|v| v * k % 5).collect()).collect();
        want.sort();
        got == want
    });
    ctx.on_entry(&mut c, "2.1.1", "Φ = 0 (cyclic table)", |d| counting_invariant(d, &x36) == 0);
    ctx.on_entry(&mut c, "3.1.2", "Φ = 3", |d| counting_invariant(d, &x36) == 3);
    ctx.on_entry(&mut c, "3.1.2", "M cyclic", |d| residue(&counting_matrix(d, &x36)) == cyclic());
    ctx.on_entry(&mut c, "2.1.2", "M identity", |d| residue(&counting_matrix(d, &x36)) == identity3());
    ctx.on_entry(&mut c, "4.1.2", "M permutation", |d| residue(&counting_matrix(d, &x36)) == cyclic());
    c
}

fn violated_equations(b: &VirtualBracket, x: &FiniteBiquandle) -> BTreeSet<u8> {
    b.verify_axioms(x).unwrap().violations.iter().map(|v| v.axiom.0).collect()
}

fn c4_bracket_axioms() -> Criterion {
    let mut c = Criterion::default();
    let z5 = violated_equations(&data::z5_bracket(), &data::z3_affine_t2_r2_c1());
    let z37 = violated_equations(&data::z37_bracket(), &data::z3_affine_t1_r1_c1());
    c.check("Z5 bracket (δ=2, ω=4)", z5.is_empty());
    c.check("Z37 bracket (δ=5, ω=9)", z37.is_empty());
    if !z37.is_empty() {
        c.note(format!("Z37 violates equations {z37:?}"));
    }
    let b5 = data::z5_bracket();
    let b37 = data::z37_bracket();
    let (m5, m37) = (b5.modulus(), b37.modulus());
    let d5 = m5.add(m5.mul(b5.delta(), b5.get(Coef::A, 0, 0)), b5.get(Coef::B, 0, 0));
    c.check("2·4+1 ≡ 4 (mod 5)", (b5.delta(), b5.get(Coef::A, 0, 0), b5.get(Coef::B, 0, 0), d5, b5.omega()) == (2, 4, 1, 4, 4));
    let a = m37.add(m37.mul(5, 7), 11);
    let cc = m37.add(m37.mul(5, 16), 27);
    c.check(
        "5·7+11 ≡ 9, 5·16+27 ≡ 9⁻¹ ≡ 33 (mod 37)",
        a == 9 && cc == 33 && m37.inverse(9).unwrap() == 33 && b37.get(Coef::A, 0, 0) == 7 && b37.get(Coef::C, 0, 0) == 16,
    );
    c
}

fn anchor_state_sum() -> BTreeSet<String> {
    [
        "ω^2 δ^2 D_{a4,a1} D_{a3,a4}",
        "ω^2 δ^2 C_{a4,a1} U_{a3,a4}",
        "ω^2 δ^2 U_{a4,a1} C_{a3,a4}",
        "ω^2 δ D_{a4,a1} C_{a3,a4}",
        "ω^2 δ D_{a4,a1} U_{a3,a4}",
        "ω^2 δ C_{a4,a1} D_{a3,a4}",
        "ω^2 δ C_{a4,a1} C_{a3,a4}",
        "ω^2 δ U_{a4,a1} D_{a3,a4}",
        "ω^2 δ U_{a4,a1} U_{a3,a4}",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

fn c5_gate(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    match ctx.corpus.diagram("2.1.1") {
        Some(d) => {
            let sym = fundamental_bracket(d);
            let terms: BTreeSet<String> = sym.states.iter().map(|s| s.to_string()).collect();
            let mut deltas: Vec<usize> = sym.states.iter().map(|s| s.delta_exponent).collect();
            deltas.sort();
            c.check("nine states", sym.states.len() == 9);
            c.check("δ-exponents {2,1,1,1,1,2,1,2,1}", deltas == vec![1, 1, 1, 1, 1, 1, 2, 2, 2]);
            c.check("terms equal the published state sum up to order", terms == anchor_state_sum());
        }
        None => c.check("2.1.1 present", false),
    }
    c
}

fn c6_worked(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let x = data::z3_affine_t2_r2_c1();
    let b = data::z5_bracket();
    ctx.on_entry(&mut c, "2.1.1", "β(K_f) = 3", |d| {
        let f = Coloring((0..d.semi_arc_count()).map(|i| if i % 2 == 0 { 2 } else { 0 }).collect());
        evaluate(d, &x, &b, &f).ok() == Some(3)
    });
    ctx.on_entry(&mut c, "2.1.1", "multiset {3,3,2}", |d| bracket_multiset(d, &x, &b).unwrap() == vec![2, 3, 3]);
    ctx.on_entry(&mut c, "2.1.1", "2u^3+u^2", |d| bracket_polynomial(d, &x, &b).unwrap().to_string() == "2u^3+u^2");
    ctx.on_entry(&mut c, "4.1.1", "multiset {2,2,2}", |d| bracket_multiset(d, &x, &b).unwrap() == vec![2, 2, 2]);
    c
}

fn c7_matrices(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let (x5, b5) = (data::z3_affine_t2_r2_c1(), data::z5_bracket());
    let (x37, b37) = (data::z3_affine_t1_r1_c1(), data::z37_bracket());
    ctx.on_entry(&mut c, "3.1.1", "Z5 diag(u²,u²,u²)", |d| {
        residue_diagonal(&bracket_matrix(d, &x5, &b5).unwrap()) == Some(vec![2, 2, 2])
    });
    ctx.on_entry(&mut c, "3.1.3", "Z5 diag(u³,u³,u²)", |d| {
        residue_diagonal(&bracket_matrix(d, &x5, &b5).unwrap()) == Some(vec![3, 3, 2])
    });
    for (name, diag) in [("2.1.1", [27, 19, 34]), ("3.1.1", [19, 34, 27])] {
        ctx.on_entry(&mut c, name, "comparison column", |d| {
            counting_invariant(d, &x37) == 3
                && residue(&counting_matrix(d, &x37)) == identity3()
                && bracket_polynomial(d, &x37, &b37).unwrap().to_string() == "u^34+u^27+u^19"
                && residue_diagonal(&bracket_matrix(d, &x37, &b37).unwrap()) == Some(diag.to_vec())
        });
    }
    c
}

fn c8_tabulated(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let (x, b) = (data::z3_affine_t1_r1_c1(), data::z37_bracket());
    for (name, diag) in TABULATED {
        ctx.on_entry(&mut c, name, "row", |d| residue_diagonal(&bracket_matrix(d, &x, &b).unwrap()) == Some(diag.to_vec()));
    }
    for (p, q) in TABULATED_EQUAL {
        let printed = |n: &str| TABULATED.iter().find(|(m, _)| *m == n).map(|(_, d)| *d);
        let label = format!("{p} = {q}");
        let both = ctx.corpus.diagram(p).zip(ctx.corpus.diagram(q));
        let verified = [p, q].iter().all(|n| ctx.corpus.get(n).is_some_and(|e| e.status.is_verified()));
        let ok = printed(p) == printed(q)
            && both.is_some_and(|(dp, dq)| bracket_matrix(dp, &x, &b).unwrap() == bracket_matrix(dq, &x, &b).unwrap());
        if verified {
            c.check(label, ok);
        } else {
            c.unverified.push((label, ok));
        }
    }
    c
}

fn corpus_diagrams(ctx: &Ctx) -> Vec<&KnotoidDiagram> {
    ctx.corpus.diagrams().map(|(_, d)| d).collect()
}

fn c9a_moves(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let ds = corpus_diagrams(ctx);
    let pairs = [("Z5", data::z3_affine_t2_r2_c1(), data::z5_bracket()), ("Z37", data::z3_affine_t1_r1_c1(), data::z37_bracket())];
    for (name, x, b) in &pairs {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut changed = 0;
        let mut first = None;
        for t in 0..MOVE_TRIALS {
            let d = ds[t % ds.len()];
            let (kind, gaps) = random_move(d, &mut rng);
            let e = d.insert_move(kind, &gaps).unwrap();
            let same = counting_matrix(&e, x) == counting_matrix(d, x) && bracket_matrix(&e, x, b).unwrap() == bracket_matrix(d, x, b).unwrap();
            if !same {
                changed += 1;
                first.get_or_insert_with(|| format!("{} via {kind:?} at {gaps:?} -> {}", d.name(), e.code()));
            }
        }
        c.check(format!("{name}: {changed}/{MOVE_TRIALS} insertions changed M_X or M^β"), changed == 0);
        if let Some(f) = first {
            c.note(format!("{name} first change {f}"));
        }
    }
    c
}

fn c9b_products(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let ds = corpus_diagrams(ctx);
    let xs = [data::z3_affine_t2_r1_c2(), data::z5_alexander(), data::z3_affine_t1_r1_c1()];
    let mut ok = true;
    for k in 0..PRODUCT_PAIRS {
        let (a, b) = (ds[k % ds.len()], ds[(7 * k + 3) % ds.len()]);
        let p = a.product(b);
        for x in &xs {
            ok &= counting_matrix(&p, x) == counting_matrix(a, x).multiply(&counting_matrix(b, x));
        }
    }
    c.check(format!("{PRODUCT_PAIRS} pairs × {} biquandles", xs.len()), ok);
    c
}

fn c9c_entry_sums(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let xs = [data::z3_affine_t2_r1_c2(), data::z3_affine_t2_r2_c1(), data::z3_affine_t1_r1_c1(), data::z5_alexander()];
    let brackets = [(1, data::z5_bracket()), (2, data::z37_bracket())];
    let mut ok = true;
    let mut runs = 0;
    for d in corpus_diagrams(ctx) {
        for (i, x) in xs.iter().enumerate() {
            let phi = counting_invariant(d, x);
            ok &= counting_matrix(d, x).total() == phi;
            runs += 1;
            for (j, b) in &brackets {
                if *j == i {
                    let bm = bracket_matrix(d, x, b).unwrap();
                    ok &= bm.counts().iter().flatten().sum::<u64>() == phi;
                    ok &= bracket_polynomial(d, x, b).unwrap().total() == phi;
                    runs += 1;
                }
            }
        }
    }
    c.check(format!("{runs} runs"), ok);
    c
}

fn c9d_symbolic(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let pairs = [(data::z3_affine_t2_r2_c1(), data::z5_bracket()), (data::z3_affine_t1_r1_c1(), data::z37_bracket())];
    let mut ok = true;
    let mut n = 0;
    for d in corpus_diagrams(ctx) {
        let sym = fundamental_bracket(d);
        for (x, b) in &pairs {
            for f in enumerate_colorings(d, x) {
                n += 1;
                ok &= evaluate_symbolic(&sym, d, x, b, &f).unwrap() == evaluate(d, x, b, &f).unwrap();
            }
        }
    }
    c.check(format!("{n} colored evaluations"), ok);
    c
}

fn c9e_brute_force(ctx: &Ctx) -> Criterion {
    let mut c = Criterion::default();
    let xs = [data::z3_affine_t2_r1_c2(), data::z3_affine_t2_r2_c1(), data::z3_affine_t1_r1_c1(), data::z5_alexander()];
    let small: Vec<&KnotoidDiagram> = corpus_diagrams(ctx).into_iter().filter(|d| d.classical_count() <= 3).collect();
    let mut colorings_ok = true;
    let mut components_ok = true;
    for d in &small {
        for x in &xs {
            let got: Vec<Vec<usize>> = enumerate_colorings(d, x).into_iter().map(|f| f.0).collect();
            let mut want = common::brute_force_colorings(d, x);
            want.sort();
            colorings_ok &= got == want;
        }
        let cc = d.classical_count();
        for k in 0..3usize.pow(cc as u32) {
            let s = state_smoothings(cc, k);
            components_ok &= smooth_components(d, &s) == common::walk_components(d, &s);
        }
    }
    c.check(format!("colorings on {} diagrams", small.len()), colorings_ok);
    c.check("component counts", components_ok);
    c
}

fn c10_search() -> Criterion {
    let mut c = Criterion::default();
    let x = data::z3_affine_t2_r2_c1();
    let cfg = |p, ansatz| SearchConfig { modulus: Modulus::new(p).unwrap(), ansatz, budget: 50_000_000, seed: SEED, require_delta_unit: false };
    let start = Instant::now();
    let out = search_brackets(&x, &cfg(5, Ansatz::Diagonal)).unwrap();
    let elapsed = start.elapsed();
    c.check(format!("Z5 diagonal search in {:.1} s", elapsed.as_secs_f64()), elapsed < SEARCH_TIME_LIMIT && !out.budget_exhausted);
    c.check("contains the Z5 bracket", out.found.iter().any(|f| f.bracket == data::z5_bracket()));
    c.note(format!("{} Z5 solutions", out.found.len()));
    let one = data::singleton();
    for p in [2, 3] {
        let out = search_brackets(&one, &cfg(p, Ansatz::Full)).unwrap();
        let got: BTreeSet<common::Scalars> = out
            .found
            .iter()
            .map(|f| {
                let b = &f.bracket;
                let g = |k| b.get(k, 0, 0);
                (g(Coef::A), g(Coef::B), g(Coef::V), g(Coef::C), g(Coef::D), g(Coef::U), b.delta(), b.omega())
            })
            .collect();
        c.check(format!("singleton Z{p} equals brute force"), !out.budget_exhausted && got == common::singleton_solutions(p));
    }
    c
}

fn main() {
    let ctx = Ctx { corpus: Corpus::load(Path::new(data::CORPUS_DIR)).expect("corpus loads") };
    println!("acceptance: tolerance {TOLERANCE}, search limit {} s, seed {SEED}", SEARCH_TIME_LIMIT.as_secs());
    let criteria: Vec<(&str, &str, Run)> = vec![
        ("1", "Alexander construction", Box::new(|_| c1_alexander())),
        ("2", "biquandle axiom suite", Box::new(|_| c2_axioms())),
        ("3", "colorings", Box::new(c3_colorings)),
        ("4", "bracket axioms", Box::new(|_| c4_bracket_axioms())),
        ("5", "corpus gate and fundamental bracket", Box::new(c5_gate)),
        ("6", "worked evaluation", Box::new(c6_worked)),
        ("7", "matrix enhancement", Box::new(c7_matrices)),
        ("8", "tabulated bracket matrices", Box::new(c8_tabulated)),
        ("9a", "move invariance", Box::new(c9a_moves)),
        ("9b", "product theorem", Box::new(c9b_products)),
        ("9c", "entry sums", Box::new(c9c_entry_sums)),
        ("9d", "symbolic and concrete agree", Box::new(c9d_symbolic)),
        ("9e", "brute-force oracles", Box::new(c9e_brute_force)),
        ("10", "search", Box::new(|_| c10_search())),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in &criteria {
        let crit = run(&ctx);
        let pass = crit.passed();
        println!("{} {id:>3} {title}: {}", if pass { "PASS" } else { "FAIL" }, crit.summary());
        if pass == EXPECTED_FAIL.contains(id) {
            unexpected.push(*id);
        }
    }
    let failed = criteria.iter().filter(|(id, _, _)| EXPECTED_FAIL.contains(id)).count();
    println!("acceptance: {} criteria, {failed} expected failures {:?}", criteria.len(), EXPECTED_FAIL);
    if !unexpected.is_empty() {
        println!("acceptance: unexpected verdicts for {unexpected:?}");
        std::process::exit(1);
    }
}
