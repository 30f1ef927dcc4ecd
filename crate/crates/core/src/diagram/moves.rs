//! Reidemeister-move insertions on Gauss codes. Gaps are positions in the
//! token list, `0..=tokens.len()`.

use rand::{Rng, RngExt};
use serde::{Deserialize, Serialize};

use super::{DiagramError, KnotoidDiagram, Sign, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum R1Order {
    OverFirst,
    UnderFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum R2Variant {
    /// Both strands traverse the bigon in the same direction.
    Parallel,
    /// The strands traverse the bigon in opposite directions.
    Antiparallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    R1 { sign: Sign, order: R1Order },
    VR1,
    /// `sign` is the sign of the first crossing met by the over strand.
    R2 { variant: R2Variant, sign: Sign },
    VR2 { variant: R2Variant },
    /// R2 with both crossings of the same sign. Not a Reidemeister move;
    /// kept as a negative control for invariance harnesses.
    MisSignedR2 { variant: R2Variant, sign: Sign },
}

impl MoveKind {
    pub fn gap_count(self) -> usize {
        match self {
            MoveKind::R1 { .. } | MoveKind::VR1 => 1,
            _ => 2,
        }
    }

    pub fn classical_delta(self) -> usize {
        match self {
            MoveKind::R1 { .. } => 1,
            MoveKind::R2 { .. } | MoveKind::MisSignedR2 { .. } => 2,
            MoveKind::VR1 | MoveKind::VR2 { .. } => 0,
        }
    }

    /// All genuine move kinds (the negative control excluded).
    pub fn all() -> Vec<MoveKind> {
        let mut v = Vec::new();
        for sign in [Sign::Positive, Sign::Negative] {
            for order in [R1Order::OverFirst, R1Order::UnderFirst] {
                v.push(MoveKind::R1 { sign, order });
            }
            for variant in [R2Variant::Parallel, R2Variant::Antiparallel] {
                v.push(MoveKind::R2 { variant, sign });
            }
        }
        v.push(MoveKind::VR1);
        v.push(MoveKind::VR2 { variant: R2Variant::Parallel });
        v.push(MoveKind::VR2 { variant: R2Variant::Antiparallel });
        v
    }
}

/// Picks a genuine move kind and gaps uniformly at random for `d`.
pub fn random_move<R: Rng + ?Sized>(d: &KnotoidDiagram, rng: &mut R) -> (MoveKind, Vec<usize>) {
    let kinds = MoveKind::all();
    let kind = kinds[rng.random_range(0..kinds.len())];
    let gaps = (0..kind.gap_count()).map(|_| rng.random_range(0..=d.tokens().len())).collect();
    (kind, gaps)
}

impl KnotoidDiagram {
    /// Inserts a move. R1 and VR1 take one gap. The two-gap moves take
    /// `gaps[0]` for the first strand (the over strand for R2) and `gaps[1]`
    /// for the second; both may coincide, in which case the first strand's
    /// tokens come first.
    pub fn insert_move(&self, kind: MoveKind, gaps: &[usize]) -> Result<KnotoidDiagram, DiagramError> {
        let len = self.tokens.len();
        if gaps.len() != kind.gap_count() {
            return Err(DiagramError::Position(format!("{kind:?} needs {} gap(s), got {}", kind.gap_count(), gaps.len())));
        }
        if let Some(g) = gaps.iter().find(|&&g| g > len) {
            return Err(DiagramError::Position(format!("gap {g} is past the end (max {len})")));
        }
        let (c, v) = self.max_ids();
        let (a, b) = (c + 1, c + 2);
        let (va, vb) = (v + 1, v + 2);
        let (first, second): (Vec<Token>, Vec<Token>) = match kind {
            MoveKind::R1 { sign, order } => {
                let pair = match order {
                    R1Order::OverFirst => vec![Token::Over { id: a, sign }, Token::Under { id: a, sign }],
                    R1Order::UnderFirst => vec![Token::Under { id: a, sign }, Token::Over { id: a, sign }],
                };
                (pair, Vec::new())
            }
            MoveKind::VR1 => (vec![Token::Virtual { id: va }, Token::Virtual { id: va }], Vec::new()),
            MoveKind::R2 { variant, sign } => r2_tokens(variant, sign, sign.flip(), a, b),
            MoveKind::MisSignedR2 { variant, sign } => r2_tokens(variant, sign, sign, a, b),
            MoveKind::VR2 { variant } => {
                let first = vec![Token::Virtual { id: va }, Token::Virtual { id: vb }];
                let second = match variant {
                    R2Variant::Parallel => first.clone(),
                    R2Variant::Antiparallel => vec![Token::Virtual { id: vb }, Token::Virtual { id: va }],
                };
                (first, second)
            }
        };
        let mut tokens = Vec::with_capacity(len + first.len() + second.len());
        let g1 = gaps[0];
        let g2 = gaps.get(1).copied();
        for (i, t) in self.tokens.iter().enumerate().chain(std::iter::once((len, &Token::Virtual { id: 0 }))) {
            if i == g1 {
                tokens.extend_from_slice(&first);
            }
            if Some(i) == g2 {
                tokens.extend_from_slice(&second);
            }
            if i < len {
                tokens.push(*t);
            }
        }
        KnotoidDiagram::new(self.name.clone(), tokens)
    }
}

fn r2_tokens(variant: R2Variant, s1: Sign, s2: Sign, a: u32, b: u32) -> (Vec<Token>, Vec<Token>) {
    let over = vec![Token::Over { id: a, sign: s1 }, Token::Over { id: b, sign: s2 }];
    let under = match variant {
        R2Variant::Parallel => vec![Token::Under { id: a, sign: s1 }, Token::Under { id: b, sign: s2 }],
        R2Variant::Antiparallel => vec![Token::Under { id: b, sign: s2 }, Token::Under { id: a, sign: s1 }],
    };
    (over, under)
}
