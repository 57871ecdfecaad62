use std::cmp::Ordering;

use num_bigint::BigUint;
use proptest::prelude::*;
use skula::ordinal::{format_ordinal, parse_ordinal};
use skula::{NatOrOmega, Ordinal};

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

/// Ordinals below ω^ω as coefficient vectors, `c[e]` multiplying `ω^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<u64>);

impl Poly {
    fn trim(mut self) -> Poly {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn deg(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    fn cmp(&self, other: &Poly) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for e in (0..n).rev() {
            let (a, b) = (self.0.get(e).copied().unwrap_or(0), other.0.get(e).copied().unwrap_or(0));
            if a != b {
                return a.cmp(&b);
            }
        }
        Ordering::Equal
    }

    fn add(&self, other: &Poly) -> Poly {
        let Some(d) = other.deg() else { return self.clone() };
        let n = self.0.len().max(other.0.len());
        let out: Vec<_> = (0..n)
            .map(|e| {
                let (a, b) = (self.0.get(e).copied().unwrap_or(0), other.0.get(e).copied().unwrap_or(0));
                match e.cmp(&d) {
                    Ordering::Greater => a,
                    Ordering::Equal => a + b,
                    Ordering::Less => b,
                }
            })
            .collect();
        Poly(out).trim()
    }

    fn nat_sum(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly((0..n).map(|e| self.0.get(e).unwrap_or(&0) + other.0.get(e).unwrap_or(&0)).collect()).trim()
    }

    fn nat_prod(&self, other: &Poly) -> Poly {
        if self.deg().is_none() || other.deg().is_none() {
            return Poly(vec![]);
        }
        let mut out = vec![0; self.0.len() + other.0.len()];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trim()
    }

    /// Left-to-right sum of `self · ω^e · k` over the terms of `other`.
    fn mul(&self, other: &Poly) -> Poly {
        let Some(da) = self.deg() else { return Poly(vec![]) };
        let mut acc = Poly(vec![]);
        for e in (0..other.0.len()).rev() {
            let k = other.0[e];
            if k == 0 {
                continue;
            }
            let piece = if e > 0 {
                let mut v = vec![0; da + e + 1];
                v[da + e] = k;
                Poly(v)
            } else {
                let mut v = self.0.clone();
                v[da] *= k;
                Poly(v)
            };
            acc = acc.add(&piece);
        }
        acc
    }

    fn to_ordinal(&self) -> Ordinal {
        Ordinal::from_terms(
            self.0.iter().enumerate().map(|(e, &c)| (Ordinal::from(e as u64), BigUint::from(c))),
        )
    }
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(prop_oneof![3 => Just(0u64), 2 => 1u64..6], 0..6).prop_map(|v| Poly(v).trim())
}

fn ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = prop_oneof![(0u64..5).prop_map(Ordinal::from), Just(Ordinal::omega())];
    let exponent = leaf.prop_recursive(2, 8, 3, |inner| {
        prop::collection::vec((inner, 1u64..4), 1..3)
            .prop_map(|ts| Ordinal::from_terms(ts.into_iter().map(|(e, c)| (e, BigUint::from(c)))))
    });
    prop::collection::vec((exponent, 1u64..6), 0..6)
        .prop_map(|ts| Ordinal::from_terms(ts.into_iter().map(|(e, c)| (e, BigUint::from(c)))))
}

#[test]
fn parse_examples() {
    assert!(o("0").terms().is_empty());
    let a = o("w^(w+7) + w^9*2 + w^2 + w + 2");
    let exps: Vec<Ordinal> = a.terms().iter().map(|t| t.exponent.clone()).collect();
    assert_eq!(exps, [o("w+7"), o("9"), o("2"), o("1"), o("0")]);
    assert_eq!(o("w + w"), &o("w") + &o("w"));
    assert_eq!(o("w + w").to_string(), "w*2");
}

#[test]
fn format_examples() {
    assert_eq!(format_ordinal(&Ordinal::zero()), "0");
    assert_eq!(format_ordinal(&Ordinal::omega()), "w");
    let a = Ordinal::from_terms([
        (o("w+7"), BigUint::from(1u32)),
        (o("9"), BigUint::from(2u32)),
        (o("2"), BigUint::from(1u32)),
        (o("1"), BigUint::from(1u32)),
        (o("0"), BigUint::from(2u32)),
    ]);
    assert_eq!(format_ordinal(&a), "w^(w+7) + w^9*2 + w^2 + w + 2");
}

#[test]
fn parse_errors_name_a_position() {
    for bad in ["", "w+", "w^", "3*0", "w^(2", "x", "2 3"] {
        let e = parse_ordinal(bad).unwrap_err();
        assert!(e.to_string().contains("position"), "{bad}: {e}");
    }
}

#[test]
fn comparison_examples() {
    assert_eq!(o("w").cmp(&o("w")), Ordering::Equal);
    assert_eq!(o("w+1").cmp(&o("w*2")), Ordering::Less);
    // A larger leading exponent wins regardless of coefficients.
    assert!(o("w^w").degree() > o("w^9*500").degree());
    assert_eq!(o("w^w").cmp(&o("w^9*500")), Ordering::Greater);
}

#[test]
fn addition_examples() {
    assert_eq!(&o("w") + &o("1"), o("w+1"));
    for n in 0..50u64 {
        assert!(&o("1") + &Ordinal::from(n) < o("w"));
    }
    assert_eq!(&o("1") + &o("w"), o("w"));
    assert_eq!(&o("w^9*2") + &o("w^9 + w"), o("w^9*3 + w"));
}

#[test]
fn multiplication_examples() {
    assert_eq!(&o("w") * &o("0"), o("0"));
    for n in 0..50u64 {
        assert!(&o("2") * &Ordinal::from(n) < o("w"));
    }
    assert_eq!(&o("2") * &o("w"), o("w"));
    assert_eq!(&o("w^2") * &o("3"), o("w^2*3"));
}

#[test]
fn power_examples() {
    for a in ["0", "1", "w", "w^w+3"] {
        assert_eq!(o(a).pow(&o("0")), o("1"));
    }
    assert_eq!(o("w").pow(&o("w+7")).terms()[0].exponent, o("w+7"));
    for n in 0..20u64 {
        assert!(o("2").pow(&Ordinal::from(n)) < o("w"));
    }
    assert_eq!(o("2").pow(&o("w")), o("w"));
    assert_eq!(o("0").pow(&o("3")), o("0"));
}

#[test]
fn natural_sum_examples() {
    let s = o("w^(w+w)*8 + w^7*3").nat_sum(&o("w^w + w^7 + w^2 + 5"));
    assert_eq!(s, o("w^(w+w)*8 + w^w + w^7*4 + w^2 + 5"));
    assert_eq!(s.to_string(), "w^(w*2)*8 + w^w + w^7*4 + w^2 + 5");
    assert_eq!(o("w^3+1").nat_sum(&Ordinal::zero()), o("w^3+1"));
    assert_eq!(o("w").nat_sum(&o("1")), o("w+1"));
    assert_eq!(o("1").nat_sum(&o("w")), o("w+1"));
}

#[test]
fn natural_product_examples() {
    assert_eq!(o("w").nat_prod(&o("2")), o("w+w"));
    assert_eq!(o("2").nat_prod(&o("w")), o("w+w"));
    assert_eq!(o("w^3+w").nat_prod(&o("1")), o("w^3+w"));
    assert_eq!(o("w^2").nat_prod(&o("w^3")), o("w^5"));
    assert_eq!(&o("w^2") * &o("w^3"), o("w^5"));
}

#[test]
fn odot_examples() {
    assert_eq!(o("w").odot(&NatOrOmega::finite(2)), o("w+w"));
    assert_eq!(o("w").odot(&NatOrOmega::finite(2)), o("w").nat_sum(&o("w")));
    assert_eq!(o("2").odot(&NatOrOmega::Omega), o("w"));
    assert_eq!(o("w^4+3").odot(&NatOrOmega::finite(0)), o("0"));
    assert!(NatOrOmega::try_from(&o("w+1")).is_err());
}

#[test]
fn tip_examples() {
    assert_eq!(o("w^w*2 + w^7 + w^3*5").tip_deg().unwrap().tip, o("w^3"));
    assert_eq!(o("w+5").tip_deg().unwrap().tip, o("1"));
    let t = o("w^(w+7)").tip_deg().unwrap();
    assert_eq!((t.tip, t.tip_exponent, t.degree), (o("w^(w+7)"), o("w+7"), o("w+7")));
    assert!(o("0").tip_deg().is_err());
}

#[test]
fn one_plus_inverse_examples() {
    assert_eq!(o("2").one_plus_inverse().unwrap(), o("1"));
    assert_eq!(o("w+7").one_plus_inverse().unwrap(), o("w+7"));
    assert_eq!(o("10").one_plus_inverse().unwrap(), o("9"));
    for r in ["1", "5", "w", "w^2+3"] {
        let a = o(r).one_plus_inverse().unwrap();
        assert_eq!(&o("1") + &a, o(r));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn arithmetic_matches_polynomial_model(a in poly(), b in poly()) {
        let (x, y) = (a.to_ordinal(), b.to_ordinal());
        prop_assert_eq!(x.cmp(&y), a.cmp(&b));
        prop_assert_eq!(&x + &y, a.add(&b).to_ordinal());
        prop_assert_eq!(&x * &y, a.mul(&b).to_ordinal());
        prop_assert_eq!(x.nat_sum(&y), a.nat_sum(&b).to_ordinal());
        prop_assert_eq!(x.nat_prod(&y), a.nat_prod(&b).to_ordinal());
    }

    #[test]
    fn round_trip(a in ordinal()) {
        let text = format_ordinal(&a);
        prop_assert_eq!(parse_ordinal(&text).unwrap(), a);
    }

    #[test]
    fn total_order(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        prop_assert_eq!(a == b, a.cmp(&b) == Ordering::Equal);
    }

    #[test]
    fn successor_recursions(a in ordinal(), b in ordinal()) {
        let one = Ordinal::one();
        prop_assert_eq!(&a + &b.succ(), (&a + &b).succ());
        prop_assert_eq!(&a * &b.succ(), &(&a * &b) + &a);
        prop_assert!(&a + &one > a);
    }

    #[test]
    fn power_recursion(a in ordinal(), e in 0u64..3, k in 0u64..4) {
        let b = &Ordinal::monomial(Ordinal::from(e), BigUint::from(k)) + &Ordinal::from(k);
        prop_assert_eq!(a.pow(&b.succ()), &a.pow(&b) * &a);
    }

    #[test]
    fn limit_approximants(a in ordinal()) {
        prop_assume!(!a.is_zero());
        let lim = &a * &o("w");
        for n in 0..8u64 {
            prop_assert!(&a * &Ordinal::from(n) < lim);
            prop_assert!(&a + &Ordinal::from(n) < &a + &o("w"));
        }
    }

    #[test]
    fn sum_and_product_comparisons(a in ordinal(), b in ordinal(), n in 0u64..5) {
        prop_assert!(&a + &b <= a.nat_sum(&b));
        let k = Ordinal::from(n);
        let odot = a.odot(&NatOrOmega::finite(n));
        prop_assert!(&a * &k <= odot);
        prop_assert!(odot <= a.nat_prod(&k));
        let w = a.odot(&NatOrOmega::Omega);
        prop_assert!(&a * &o("w") <= w);
        prop_assert!(w <= a.nat_prod(&o("w")));
    }

    #[test]
    fn natural_sum_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.nat_sum(&b), b.nat_sum(&a));
        prop_assert_eq!(a.nat_sum(&b).nat_sum(&c), a.nat_sum(&b.nat_sum(&c)));
        prop_assert_eq!(b < c, a.nat_sum(&b) < a.nat_sum(&c));
        let d = a.degree().max(b.degree()).succ();
        prop_assert!(a.nat_sum(&b) < Ordinal::omega_pow(d));
    }

    #[test]
    fn decomposition_below_a_natural_sum(a in ordinal(), b in ordinal(), cut in 0usize..8, drop in 0u64..3, tail in ordinal()) {
        let s = a.nat_sum(&b);
        prop_assume!(!s.is_zero());
        // Lower one coefficient of s and append a tail below that block.
        let i = cut % s.terms().len();
        let t = &s.terms()[i];
        let lowered = &t.coefficient - BigUint::from(drop).min(t.coefficient.clone());
        let low_tail: Vec<_> = tail.terms().iter().filter(|u| u.exponent < t.exponent).map(|u| (u.exponent.clone(), u.coefficient.clone())).collect();
        let mut parts: Vec<_> = s.terms()[..i].iter().map(|u| (u.exponent.clone(), u.coefficient.clone())).collect();
        parts.push((t.exponent.clone(), lowered));
        parts.extend(low_tail);
        let g = Ordinal::from_terms(parts);
        prop_assume!(g < s);
        let (x, y) = g.nat_sum_split(&a, &b).unwrap();
        prop_assert!(x <= a && y <= b);
        prop_assert_eq!(x.nat_sum(&y), g);
    }

    #[test]
    fn odot_iterates(a in ordinal(), n in 0u64..6) {
        let mut acc = Ordinal::zero();
        for _ in 0..n {
            acc = acc.nat_sum(&a);
        }
        prop_assert_eq!(a.odot(&NatOrOmega::finite(n)), acc);
    }
}
