//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a strictly decreasing list of `ω^e·c` terms where every
//! exponent `e` is itself an ordinal in normal form and every coefficient `c`
//! is a positive arbitrary-precision natural. The empty list is `0`.
//!
//! Besides the ordinary (non-commutative) ordinal operations this module
//! provides the Hessenberg natural sum `⊕`, the natural product `⊗` and the
//! iterated natural sum `⊙` whose right argument is restricted to
//! [`NatOrOmega`].

mod parse;

pub use parse::ParseError;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("operation undefined on the zero ordinal: {0}")]
    Zero(&'static str),
    #[error("right argument of odot must be finite or omega, got {0}")]
    UnsupportedOdot(String),
    #[error("exponent {0} too large to expand")]
    ExponentTooLarge(String),
}

/// One `ω^exponent · coefficient` block of a normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: Ordinal,
    pub coefficient: BigUint,
}

/// An ordinal below ε₀ in Cantor normal form.
///
/// The representation is canonical, so derived equality and hashing agree
/// with equality of ordinals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// Right argument accepted by [`Ordinal::odot`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NatOrOmega {
    Finite(BigUint),
    Omega,
}

impl NatOrOmega {
    pub fn finite(n: u64) -> Self {
        NatOrOmega::Finite(BigUint::from(n))
    }

    pub fn to_ordinal(&self) -> Ordinal {
        match self {
            NatOrOmega::Finite(n) => Ordinal::from_biguint(n.clone()),
            NatOrOmega::Omega => Ordinal::omega(),
        }
    }
}

impl TryFrom<&Ordinal> for NatOrOmega {
    type Error = OrdinalError;

    fn try_from(value: &Ordinal) -> Result<Self, Self::Error> {
        if let Some(n) = value.as_finite() {
            Ok(NatOrOmega::Finite(n))
        } else if *value == Ordinal::omega() {
            Ok(NatOrOmega::Omega)
        } else {
            Err(OrdinalError::UnsupportedOdot(value.to_string()))
        }
    }
}

/// Result of [`Ordinal::tip_deg`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TipDeg {
    /// `ω^tip_exponent`, the last block of the normal form with coefficient 1.
    pub tip: Ordinal,
    /// Exponent of the last block; the Cantor-Bendixson rank of the point.
    pub tip_exponent: Ordinal,
    /// Exponent of the leading block.
    pub degree: Ordinal,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from(1u64)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::monomial(exponent, BigUint::one())
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: Ordinal, coefficient: BigUint) -> Self {
        if coefficient.is_zero() {
            return Ordinal::zero();
        }
        Ordinal { terms: vec![Term { exponent, coefficient }] }
    }

    pub fn from_biguint(n: BigUint) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs in any order,
    /// merging equal exponents by natural sum and dropping zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Ordinal, BigUint)>,
    {
        terms
            .into_iter()
            .fold(Ordinal::zero(), |acc, (e, c)| acc.nat_sum(&Ordinal::monomial(e, c)))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// A successor ordinal has a nonzero finite part.
    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    pub fn as_finite(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_finite().and_then(|n| n.to_u64())
    }

    /// Exponent of the leading term; `0` for the zero ordinal.
    pub fn degree(&self) -> Ordinal {
        self.terms.first().map(|t| t.exponent.clone()).unwrap_or_default()
    }

    /// Coefficient of the leading term; `0` for the zero ordinal.
    pub fn leading_coefficient(&self) -> BigUint {
        self.terms.first().map(|t| t.coefficient.clone()).unwrap_or_default()
    }

    /// The finite part (coefficient of `ω^0`).
    pub fn finite_part(&self) -> BigUint {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient.clone(),
            _ => BigUint::zero(),
        }
    }

    pub fn succ(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    /// Immediate predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a term");
        last.coefficient -= 1u32;
        if last.coefficient.is_zero() {
            terms.pop();
        }
        Some(Ordinal { terms })
    }

    /// The prefix made of the first `k` terms.
    pub fn truncate(&self, k: usize) -> Ordinal {
        Ordinal { terms: self.terms[..k.min(self.terms.len())].to_vec() }
    }

    /// Tip, tip exponent and degree of a nonzero ordinal.
    pub fn tip_deg(&self) -> Result<TipDeg, OrdinalError> {
        let (first, last) = match (self.terms.first(), self.terms.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(OrdinalError::Zero("tip_deg")),
        };
        Ok(TipDeg {
            tip: Ordinal::omega_pow(last.exponent.clone()),
            tip_exponent: last.exponent.clone(),
            degree: first.exponent.clone(),
        })
    }

    /// Exponent of the last block, i.e. the Cantor-Bendixson rank of `self`
    /// as a point of an ordinal space. The point `0` is isolated, rank `0`.
    pub fn point_rank(&self) -> Ordinal {
        self.terms.last().map(|t| t.exponent.clone()).unwrap_or_default()
    }

    /// The unique `a` with `1 + a = self`.
    pub fn one_plus_inverse(&self) -> Result<Ordinal, OrdinalError> {
        if self.is_zero() {
            return Err(OrdinalError::Zero("one_plus_inverse"));
        }
        if self.is_finite() {
            Ok(self.pred().expect("nonzero finite ordinal is a successor"))
        } else {
            Ok(self.clone())
        }
    }

    /// Hessenberg natural sum: coefficient-wise addition of normal forms.
    pub fn nat_sum(&self, other: &Ordinal) -> Ordinal {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.exponent.cmp(&b.exponent) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(Term {
                        exponent: a.exponent.clone(),
                        coefficient: &a.coefficient + &b.coefficient,
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ordinal { terms: out }
    }

    fn coefficient_at(&self, e: &Ordinal) -> BigUint {
        self.terms.iter().find(|t| t.exponent == *e).map(|t| t.coefficient.clone()).unwrap_or_default()
    }

    /// For `self < a ⊕ b`, returns `a′ ≤ a` and `b′ ≤ b` with
    /// `self = a′ ⊕ b′`; `None` when `self ≥ a ⊕ b`.
    pub fn nat_sum_split(&self, a: &Ordinal, b: &Ordinal) -> Option<(Ordinal, Ordinal)> {
        let s = a.nat_sum(b);
        if *self >= s {
            return None;
        }
        let i = (0..s.terms.len()).find(|&i| self.terms.get(i) != Some(&s.terms[i]))?;
        let e = &s.terms[i].exponent;
        let g = self.coefficient_at(e);
        let ae = a.coefficient_at(e);
        let a_here = if g < ae { g.clone() } else { ae.clone() };
        let b_here = &g - &a_here;
        let above = |x: &Ordinal| -> Vec<(Ordinal, BigUint)> {
            x.terms.iter().filter(|t| t.exponent > *e).map(|t| (t.exponent.clone(), t.coefficient.clone())).collect()
        };
        let below: Vec<(Ordinal, BigUint)> =
            self.terms.iter().filter(|t| t.exponent < *e).map(|t| (t.exponent.clone(), t.coefficient.clone())).collect();
        let mut pa = above(a);
        let mut pb = above(b);
        pa.push((e.clone(), a_here.clone()));
        pb.push((e.clone(), b_here));
        if a_here < ae {
            pa.extend(below);
        } else {
            pb.extend(below);
        }
        Some((Ordinal::from_terms(pa), Ordinal::from_terms(pb)))
    }

    /// Hessenberg natural product: the normal forms multiplied as
    /// polynomials, exponents combined with `⊕`.
    pub fn nat_prod(&self, other: &Ordinal) -> Ordinal {
        let mut acc = Ordinal::zero();
        for a in &self.terms {
            for b in &other.terms {
                let m = Ordinal::monomial(a.exponent.nat_sum(&b.exponent), &a.coefficient * &b.coefficient);
                acc = acc.nat_sum(&m);
            }
        }
        acc
    }

    /// Iterated natural sum: `a ⊙ 0 = 0`, `a ⊙ (n+1) = (a ⊙ n) ⊕ a` and
    /// `a ⊙ ω = sup_n a ⊙ n = ω^(deg a + 1)` for `a > 0`.
    pub fn odot(&self, right: &NatOrOmega) -> Ordinal {
        match right {
            NatOrOmega::Finite(n) => {
                if n.is_zero() {
                    return Ordinal::zero();
                }
                Ordinal {
                    terms: self
                        .terms
                        .iter()
                        .map(|t| Term { exponent: t.exponent.clone(), coefficient: &t.coefficient * n })
                        .collect(),
                }
            }
            NatOrOmega::Omega => {
                if self.is_zero() {
                    Ordinal::zero()
                } else {
                    Ordinal::omega_pow(self.degree().succ())
                }
            }
        }
    }

    /// Ordinal exponentiation `self^exp`, with `0^0 = 1`.
    ///
    /// # Panics
    ///
    /// Panics if the finite part of `exp` does not fit in a `u32` and the
    /// base is not `0` or `1`; such powers are not representable in memory.
    pub fn pow(&self, exp: &Ordinal) -> Ordinal {
        self.try_pow(exp).expect("finite part of exponent too large")
    }

    pub fn try_pow(&self, exp: &Ordinal) -> Result<Ordinal, OrdinalError> {
        if exp.is_zero() {
            return Ok(Ordinal::one());
        }
        if self.is_zero() {
            return Ok(Ordinal::zero());
        }
        if *self == Ordinal::one() {
            return Ok(Ordinal::one());
        }
        let n = exp
            .finite_part()
            .to_u32()
            .ok_or_else(|| OrdinalError::ExponentTooLarge(exp.to_string()))?;
        let limit_terms: Vec<Term> = exp.terms.iter().filter(|t| !t.exponent.is_zero()).cloned().collect();
        let limit_part = Ordinal { terms: limit_terms };

        if let Some(k) = self.as_finite() {
            // k^(ω·c + n) = ω^c · k^n, where ω·c is the limit part of exp.
            let finite_power = num_traits::pow(k, n as usize);
            if limit_part.is_zero() {
                return Ok(Ordinal::from_biguint(finite_power));
            }
            let c = Ordinal::from_terms(limit_part.terms.iter().map(|t| {
                let e = t.exponent.one_plus_inverse().expect("limit term has nonzero exponent");
                (e, t.coefficient.clone())
            }));
            return Ok(Ordinal::monomial(c, finite_power));
        }

        // Infinite base: self^(L + n) = ω^(deg·L) · self^n.
        let mut acc = Ordinal::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if limit_part.is_zero() {
            return Ok(acc);
        }
        let head = Ordinal::omega_pow(&self.degree() * &limit_part);
        Ok(&head * &acc)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a.exponent.cmp(&b.exponent).then_with(|| a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from_biguint(BigUint::from(n))
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::from_biguint(n)
    }
}

impl<'a> Add<&'a Ordinal> for &'a Ordinal {
    type Output = Ordinal;

    /// Ordinal sum; low terms of the left operand are absorbed.
    fn add(self, rhs: &'a Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut merged = head.coefficient.clone();
        for t in &self.terms {
            match t.exponent.cmp(&head.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => merged += &t.coefficient,
                Ordering::Less => break,
            }
        }
        terms.push(Term { exponent: head.exponent.clone(), coefficient: merged });
        terms.extend_from_slice(&rhs.terms[1..]);
        Ordinal { terms }
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        &self + &rhs
    }
}

impl<'a> Mul<&'a Ordinal> for &'a Ordinal {
    type Output = Ordinal;

    /// Ordinal product, distributing the left factor over the right normal form.
    fn mul(self, rhs: &'a Ordinal) -> Ordinal {
        if self.is_zero() || rhs.is_zero() {
            return Ordinal::zero();
        }
        let lead = &self.terms[0];
        let mut acc = Ordinal::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                let mut terms = self.terms.clone();
                terms[0].coefficient = &lead.coefficient * &t.coefficient;
                Ordinal { terms }
            } else {
                Ordinal::monomial(&lead.exponent + &t.exponent, t.coefficient.clone())
            };
            acc = &acc + &piece;
        }
        acc
    }
}

impl Mul for Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: Ordinal) -> Ordinal {
        &self * &rhs
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_ordinal(self, true))
    }
}

impl std::str::FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_ordinal(s)
    }
}

impl serde::Serialize for Ordinal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Ordinal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses an ordinal expression; shorthand for `text.parse::<Ordinal>()`.
pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseError> {
    text.parse()
}

/// Canonical text rendering.
pub fn format_ordinal(a: &Ordinal) -> String {
    a.to_string()
}
