#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use vknotoid::biquandle::FiniteBiquandle;
use vknotoid::bracket::Smoothing;
use vknotoid::diagram::{KnotoidDiagram, Sign, Token};
use vknotoid::ring::Modulus;

pub fn sign(positive: bool) -> Sign {
    if positive {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Random open Gauss codes with up to `max_c` classical and `max_v` virtual
/// crossings.
pub fn diagram(max_c: usize, max_v: usize) -> impl Strategy<Value = KnotoidDiagram> {
    (0..=max_c, 0..=max_v)
        .prop_flat_map(|(c, v)| (prop::collection::vec(any::<bool>(), c), Just(v)))
        .prop_flat_map(|(signs, v)| {
            let mut tokens = Vec::new();
            for (i, &s) in signs.iter().enumerate() {
                let id = i as u32 + 1;
                tokens.push(Token::Over { id, sign: sign(s) });
                tokens.push(Token::Under { id, sign: sign(s) });
            }
            for id in 1..=v as u32 {
                tokens.push(Token::Virtual { id });
                tokens.push(Token::Virtual { id });
            }
            Just(tokens).prop_shuffle()
        })
        .prop_map(|tokens| KnotoidDiagram::new("random", tokens).expect("well-formed tokens"))
}

/// Affine biquandles on Z_m with `t`, `r` units.
pub fn affine_biquandle() -> impl Strategy<Value = FiniteBiquandle> {
    prop_oneof![Just(2u32), Just(3), Just(4), Just(5)].prop_flat_map(|m| {
        let modulus = Modulus::new(m).unwrap();
        let units: Vec<u32> = (1..m).filter(|&a| modulus.is_unit(a)).collect();
        (prop::sample::select(units.clone()), prop::sample::select(units), 0..m)
            .prop_map(move |(t, r, c)| FiniteBiquandle::affine(modulus, t, r, c).unwrap())
    })
}

/// Every assignment in X^(2c+1), checked against the crossing relations
/// written out directly from the labeling conventions.
pub fn brute_force_colorings(d: &KnotoidDiagram, x: &FiniteBiquandle) -> Vec<Vec<usize>> {
    let n = x.size();
    let len = d.semi_arc_count();
    let mut out = Vec::new();
    let mut f = vec![0; len];
    loop {
        let ok = d.crossings().iter().all(|c| {
            let (ui, uo, oi, oo) = (f[c.under_in], f[c.under_out], f[c.over_in], f[c.over_out]);
            if c.sign.value() > 0 {
                x.under(ui, oo) == uo && x.over(oo, ui) == oi
            } else {
                x.under(uo, oi) == ui && x.over(oi, uo) == oo
            }
        });
        if ok {
            out.push(f.clone());
        }
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            f[k] += 1;
            if f[k] < n {
                break;
            }
            f[k] = 0;
            k += 1;
        }
    }
}

/// Counts components by walking the smoothed curve: each endpoint node has
/// one partner along its semi-arc and at most one across a crossing.
pub fn walk_components(d: &KnotoidDiagram, smoothing: &[Smoothing]) -> usize {
    let nodes = 2 * d.semi_arc_count();
    let mut across = vec![usize::MAX; nodes];
    for (c, s) in d.crossings().iter().zip(smoothing) {
        let ui = 2 * c.under_in + 1;
        let uo = 2 * c.under_out;
        let oi = 2 * c.over_in + 1;
        let oo = 2 * c.over_out;
        let pairs = match s {
            Smoothing::Vertical => [(ui, oo), (oi, uo)],
            Smoothing::Horizontal => [(ui, oi), (uo, oo)],
            Smoothing::Virtual => [(ui, uo), (oi, oo)],
        };
        for (a, b) in pairs {
            across[a] = b;
            across[b] = a;
        }
    }
    let along = |v: usize| v ^ 1;
    let mut seen = vec![false; nodes];
    let mut count = 0;
    // open component first, starting at the tail node
    let mut starts = vec![0];
    starts.extend(1..nodes);
    for s in starts {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut v = s;
        loop {
            seen[v] = true;
            let w = along(v);
            seen[w] = true;
            let next = across[w];
            if next == usize::MAX || seen[next] {
                break;
            }
            v = next;
        }
    }
    count
}

pub type Scalars = (u32, u32, u32, u32, u32, u32, u32, u32);

/// With one element every index collapses, and the 23 families reduce to
/// scalar identities in (a, b, v, c, d, u, δ, ω).
pub fn singleton_solutions(p: u32) -> BTreeSet<Scalars> {
    let mut out = BTreeSet::new();
    let pm = p as u64;
    let r = |x: u64| x % pm;
    for code in 0..pm.pow(8) {
        let mut k = code;
        let mut next = || {
            let v = k % pm;
            k /= pm;
            v
        };
        let (a, b, v, c, d, u, dl, w) = (next(), next(), next(), next(), next(), next(), next(), next());
        if w == 0 || (1..pm).all(|i| r(w * i) != 1) {
            continue;
        }
        let eqs = [
            r(dl * a + b + v) == w,
            r(w * (dl * c + d + u)) == 1,
            r(a * c + v * u) == 1,
            r(b * d + v * u) == 1,
            r(a * u + v * c) == 0,
            r(b * u + v * d) == 0,
            r(dl * b * d + a * d + b * c) == 0,
            r(dl * a * c + a * d + b * c) == 0,
            // a²b-type families; the rest are tautologies at one element
            r(2 * a * a * b + dl * a * b * b + 3 * a * b * v + b * b * b) == r(a * a * b),
            r(a * a * b) == r(2 * a * a * b + dl * a * b * b + a * b * v + b * b * b + b * b * v),
            r(a * a * v) == r(2 * a * a * v),
            r(b * b * v + a * b * v) == r(a * b * v),
        ];
        if eqs.iter().all(|&e| e) {
            out.insert((a as u32, b as u32, v as u32, c as u32, d as u32, u as u32, dl as u32, w as u32));
        }
    }
    out
}
