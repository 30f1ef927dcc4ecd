//! Exact arithmetic in `Z_m` and the formal `u`-exponent polynomials that
//! carry bracket values.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u32, modulus: u32 },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("cannot parse polynomial {text:?}: {reason}")]
    PolyParse { text: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(m: u32) -> Result<Self, RingError> {
        if m < 2 {
            return Err(RingError::BadModulus(m as u64));
        }
        Ok(Modulus(m))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Canonical residue of an arbitrary signed integer.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - (b % self.0) as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn pow(self, base: u32, mut exp: u64) -> u32 {
        let m = self.0 as u64;
        let mut acc = 1 % m;
        let mut b = base as u64 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        acc as u32
    }

    pub fn inverse(self, a: u32) -> Result<u32, RingError> {
        let m = self.0 as i64;
        let eg = (a as i64 % m).extended_gcd(&m);
        if eg.gcd != 1 {
            return Err(RingError::NotAUnit { value: a, modulus: self.0 });
        }
        Ok(self.reduce(eg.x))
    }

    pub fn is_unit(self, a: u32) -> bool {
        (a as u64).gcd(&(self.0 as u64)) == 1
    }

    /// Trial division; moduli here are tiny.
    pub fn is_prime(self) -> bool {
        let m = self.0;
        m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d))
    }
}

impl TryFrom<u32> for Modulus {
    type Error = RingError;
    fn try_from(m: u32) -> Result<Self, RingError> {
        Modulus::new(m)
    }
}

impl From<Modulus> for u32 {
    fn from(m: Modulus) -> u32 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.0)
    }
}

/// A residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingElement {
    value: u32,
    modulus: Modulus,
}

impl RingElement {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        RingElement { value: modulus.reduce(value), modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn same_ring(self, other: RingElement) -> Result<Modulus, RingError> {
        if self.modulus != other.modulus {
            return Err(RingError::ModulusMismatch(self.modulus.0, other.modulus.0));
        }
        Ok(self.modulus)
    }

    pub fn try_add(self, other: RingElement) -> Result<RingElement, RingError> {
        let m = self.same_ring(other)?;
        Ok(RingElement { value: m.add(self.value, other.value), modulus: m })
    }

    pub fn try_mul(self, other: RingElement) -> Result<RingElement, RingError> {
        let m = self.same_ring(other)?;
        Ok(RingElement { value: m.mul(self.value, other.value), modulus: m })
    }

    pub fn inverse(self) -> Result<RingElement, RingError> {
        Ok(RingElement { value: self.modulus.inverse(self.value)?, modulus: self.modulus })
    }

    pub fn is_unit(self) -> bool {
        self.modulus.is_unit(self.value)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Formal sum `Σ k_r u^r` with exponents `r ∈ Z_m` and multiplicities
/// `k_r > 0`. Two exponents are the same term exactly when they agree in
/// `Z_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketPolynomial {
    terms: BTreeMap<u32, u64>,
    modulus: Modulus,
}

impl BracketPolynomial {
    pub fn zero(modulus: Modulus) -> Self {
        BracketPolynomial { terms: BTreeMap::new(), modulus }
    }

    pub fn monomial(exponent: RingElement) -> Self {
        let mut p = Self::zero(exponent.modulus());
        p.add_term(exponent.value(), 1);
        p
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Adds `count · u^exponent`; the exponent is reduced mod `m`.
    pub fn add_term(&mut self, exponent: u32, count: u64) {
        if count == 0 {
            return;
        }
        let e = exponent % self.modulus.get();
        *self.terms.entry(e).or_insert(0) += count;
    }

    pub fn multiplicity(&self, exponent: u32) -> u64 {
        self.terms.get(&(exponent % self.modulus.get())).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities (the number of contributing colorings).
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.terms.iter().map(|(&e, &k)| (e, k))
    }

    pub fn try_add(&self, other: &BracketPolynomial) -> Result<BracketPolynomial, RingError> {
        if self.modulus != other.modulus {
            return Err(RingError::ModulusMismatch(self.modulus.get(), other.modulus.get()));
        }
        let mut out = self.clone();
        for (e, k) in other.terms() {
            out.add_term(e, k);
        }
        Ok(out)
    }

    /// Parses the rendered form, e.g. `2u^3+u^2`, `u`, `3`, `0`.
    pub fn parse(text: &str, modulus: Modulus) -> Result<Self, RingError> {
        let err = |reason: &str| RingError::PolyParse { text: text.to_string(), reason: reason.into() };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Self::zero(modulus);
        if s == "0" {
            return Ok(p);
        }
        if s.is_empty() {
            return Err(err("empty"));
        }
        for term in s.split('+') {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coef, exp) = match term.find('u') {
                None => (term, 0u64),
                Some(pos) => {
                    let (c, rest) = term.split_at(pos);
                    let rest = &rest[1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| err("expected '^' after 'u'"))?
                            .parse::<u64>()
                            .map_err(|_| err("bad exponent"))?
                    };
                    (c, e)
                }
            };
            let k = if coef.is_empty() {
                1
            } else {
                coef.parse::<u64>().map_err(|_| err("bad multiplicity"))?
            };
            if k == 0 {
                return Err(err("zero multiplicity"));
            }
            p.add_term((exp % modulus.get() as u64) as u32, k);
        }
        Ok(p)
    }
}

impl fmt::Display for BracketPolynomial {
    /// Descending exponent order; multiplicity 1 omitted; `u^1` as `u`;
    /// `u^0` as its bare multiplicity; the empty sum as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, &k)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match (e, k) {
                (0, k) => write!(f, "{k}")?,
                (1, 1) => f.write_str("u")?,
                (1, k) => write!(f, "{k}u")?,
                (e, 1) => write!(f, "u^{e}")?,
                (e, k) => write!(f, "{k}u^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Modulus {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, RingError> {
        let m: u64 = s.trim().parse().map_err(|_| RingError::BadModulus(0))?;
        if m > u32::MAX as u64 {
            return Err(RingError::BadModulus(m));
        }
        Modulus::new(m as u32)
    }
}
