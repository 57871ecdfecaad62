use num_bigint::BigUint;
use proptest::prelude::*;
use skula::gen::{self, OrdinalShape};
use skula::space::{
    hyper_antichain_height, hyper_monotonicity_check, hyper_point_height, ord_space_maximizers, thm31_check,
    thm36_check, Skeleton, SpaceTerm,
};
use skula::{Ordinal, Poset};

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

fn ord(s: &str) -> SpaceTerm {
    SpaceTerm::Ord(o(s))
}

/// Height and endpoint count of `[0, α]` for `α < ω^ω·k`, found by scanning
/// candidate points `ω^e·k` and `ω^e·k + ω^f` and keeping the ones `≤ α` of
/// largest tip exponent. Every point of top rank has the first shape.
fn scan_ord_space(alpha: &Ordinal) -> (Ordinal, usize) {
    if let Some(n) = alpha.as_u64() {
        return (Ordinal::zero(), n as usize + 1);
    }
    let mut exps: Vec<Ordinal> = (0..10u64).map(Ordinal::from).collect();
    exps.extend(alpha.terms().iter().map(|t| t.exponent.clone()));
    exps.push(Ordinal::omega());
    exps.sort();
    exps.dedup();
    let cmax = alpha.terms().iter().map(|t| t.coefficient.clone()).max().unwrap();
    let cmax: u64 = u64::try_from(cmax).unwrap() + 1;
    let mut points = Vec::new();
    for e in &exps {
        for k in 1..=cmax {
            let base = Ordinal::monomial(e.clone(), BigUint::from(k));
            points.push(base.clone());
            for f in exps.iter().filter(|f| *f < e) {
                points.push(&base + &Ordinal::omega_pow(f.clone()));
            }
        }
    }
    points.retain(|p| p <= alpha);
    points.sort();
    points.dedup();
    let top = points.iter().map(Ordinal::point_rank).max().unwrap();
    let count = points.iter().filter(|p| p.point_rank() == top).count();
    (top, count)
}

#[test]
fn point_height_table() {
    let table = [("0", "0"), ("1", "1"), ("2", "w"), ("3", "w^2"), ("10", "w^9"), ("w", "w^w"), ("w+7", "w^(w+7)")];
    for (r, h) in table {
        assert_eq!(hyper_point_height(&o(r)), o(h), "r = {r}");
    }
}

#[test]
fn antichain_height_example() {
    let labels: Vec<Ordinal> = ["0", "1", "1", "2", "10", "10", "w+7", "3"].iter().map(|s| o(s)).collect();
    let h = hyper_antichain_height(&labels);
    assert_eq!(h.to_string(), "w^(w+7) + w^9*2 + w^2 + w + 2");
    assert_eq!(h, o("w^(w+7) + w^9*2 + w^2 + w + 2"));
}

#[test]
fn ordinal_space_examples() {
    for n in 0..20u64 {
        let a = &Ordinal::omega() + &Ordinal::from(n);
        let r = SpaceTerm::Ord(a.clone()).report();
        assert_eq!((r.height.clone(), r.endpoint_count.clone(), r.unitary), (Ordinal::one(), BigUint::from(1u32), true));
        assert_eq!(r.rank, Some(a.succ()));
        assert!(thm31_check(&SpaceTerm::Ord(a)).unwrap().pass());
    }
    let r = ord("5").report();
    assert_eq!((r.height, r.endpoint_count), (Ordinal::zero(), BigUint::from(6u32)));
    let r = ord("w^3*4 + w").report();
    assert_eq!((r.height, r.endpoint_count), (o("3"), BigUint::from(4u32)));
    assert_eq!(ord_space_maximizers(&o("w^2*3 + 1")), vec![o("w^2"), o("w^2*2"), o("w^2*3")]);
}

#[test]
fn sums_and_products() {
    let r = SpaceTerm::Sum(vec![ord("w*2"), ord("3"), ord("w+4")]).report();
    assert_eq!((r.height, r.endpoint_count, r.rank), (Ordinal::one(), BigUint::from(3u32), None));
    let r = SpaceTerm::Prod(Box::new(ord("w")), Box::new(ord("w^2*3"))).report();
    assert_eq!((r.height, r.endpoint_count), (o("3"), BigUint::from(3u32)));
    let r = SpaceTerm::Prod(Box::new(ord("w^w")), Box::new(ord("w^3"))).report();
    assert_eq!(r.height, o("w + 3"));
    assert!(thm31_check(&SpaceTerm::Sum(vec![ord("1")])).is_err());
}

#[test]
fn term_parsing() {
    let t: SpaceTerm = "prod(ord(w+1), sum(ord(w), ord(w*3)))".parse().unwrap();
    assert_eq!(
        t,
        SpaceTerm::Prod(Box::new(ord("w+1")), Box::new(SpaceTerm::Sum(vec![ord("w"), ord("w*3")])))
    );
    let t: SpaceTerm = r#"skel({"elements": ["a", "b"], "covers": [["a", "b"]]}, {a: 1, "b": w})"#.parse().unwrap();
    match t {
        SpaceTerm::Skeleton(s) => assert_eq!(s.labels(), [o("1"), o("w")]),
        other => panic!("{other:?}"),
    }
    for bad in [
        "ord(w",
        "ord()",
        "sum()",
        "prod(ord(1))",
        "cube(ord(1))",
        "ord(w,1)",
        r#"skel({"elements": ["a"], "covers": []}, {b: 1})"#,
        r#"skel({"elements": ["a", "b"], "covers": [["a", "b"]]}, {a: 2, b: 1})"#,
    ] {
        assert!(bad.parse::<SpaceTerm>().is_err(), "{bad}");
    }
}

#[test]
fn skeleton_bounds() {
    let labels: Vec<Ordinal> = ["0", "1", "1", "2", "10", "10", "w+7", "3"].iter().map(|s| o(s)).collect();
    let s = Skeleton::antichain(labels).unwrap();
    let r = thm36_check(&s);
    assert!(r.pass);
    assert_eq!(r.antichains, 255);
    assert_eq!(r.bound, o("w^(w+8)"));
    assert_eq!(r.max_height, o("w^(w+7) + w^9*2 + w^2 + w + 2"));
    // The isolated label 0 adds nothing, so the first maximizer omits it.
    assert_eq!(r.max_antichain.len(), 7);
}

#[test]
fn monotonicity_on_forests() {
    // a < b, c < d, with e isolated.
    let p = Poset::from_covers(&["a", "b", "c", "d", "e"], &[("a", "b"), ("c", "d")]).unwrap();
    let s = Skeleton::new(p, vec![o("1"), o("3"), o("2"), o("w"), o("0")]).unwrap();
    let r = hyper_monotonicity_check(&s).unwrap();
    assert!(r.pairs_checked > 0);
    assert!(!r.pass());
    assert!(r.pass_up_to_isolated());
    let without = Skeleton::new(
        Poset::from_covers(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap(),
        vec![o("1"), o("3"), o("2"), o("w")],
    )
    .unwrap();
    assert!(hyper_monotonicity_check(&without).unwrap().pass());
    let v = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
    let s = Skeleton::new(v, vec![o("1"), o("2"), o("2")]).unwrap();
    assert!(hyper_monotonicity_check(&s).is_err());
}

#[test]
fn ordinal_spaces_match_point_scan() {
    let mut rng = gen::rng(31);
    for _ in 0..300 {
        let a = gen::below_omega_omega_times(&mut rng, 10);
        let r = SpaceTerm::Ord(a.clone()).report();
        let (h, e) = scan_ord_space(&a);
        assert_eq!(r.height, h, "{a}");
        assert_eq!(r.endpoint_count, BigUint::from(e), "{a}");
        if !a.is_finite() {
            let m = ord_space_maximizers(&a);
            assert_eq!(m.len(), e);
            assert!(m.iter().all(|x| x <= &a && x.point_rank() == h));
        }
    }
}

fn maximizers(a: &Ordinal) -> Vec<Ordinal> {
    ord_space_maximizers(a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn antichain_height_is_permutation_invariant(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = gen::rng(seed);
        let shape = OrdinalShape { max_terms: 3, ..Default::default() };
        let mut labels: Vec<Ordinal> = (0..n).map(|_| gen::ordinal(&mut rng, &shape)).collect();
        let h = hyper_antichain_height(&labels);
        labels.reverse();
        prop_assert_eq!(&h, &hyper_antichain_height(&labels));
        labels.rotate_left(n / 2);
        prop_assert_eq!(&h, &hyper_antichain_height(&labels));
        let folded = labels.iter().fold(Ordinal::zero(), |acc, r| hyper_point_height(r).nat_sum(&acc));
        prop_assert_eq!(h, folded);
    }

    #[test]
    fn point_height_below_omega_power(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let r = gen::ordinal(&mut rng, &OrdinalShape::default());
        let h = hyper_point_height(&r);
        prop_assert!(h <= Ordinal::omega().pow(&r));
        let s = gen::ordinal(&mut rng, &OrdinalShape::default());
        if !r.is_zero() && r < s {
            prop_assert!(h < hyper_point_height(&s));
        }
    }

    #[test]
    fn antichain_height_below_rank_bound(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = gen::rng(seed);
        let labels: Vec<Ordinal> = (0..n).map(|_| gen::ordinal(&mut rng, &OrdinalShape { max_terms: 3, ..Default::default() })).collect();
        let rank = labels.iter().max().unwrap().succ();
        prop_assert!(hyper_antichain_height(&labels) < Ordinal::omega().pow(&rank));
    }

    #[test]
    fn bound_chain_on_ordinal_spaces(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let a = gen::below_omega_omega_times(&mut rng, 10);
        prop_assert!(thm31_check(&SpaceTerm::Ord(a)).unwrap().pass());
    }

    #[test]
    fn products_match_maximizer_pairs(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let a = gen::below_omega_omega_times(&mut rng, 4);
        let b = gen::below_omega_omega_times(&mut rng, 4);
        prop_assume!(!a.is_finite() && !b.is_finite());
        let r = SpaceTerm::Prod(Box::new(SpaceTerm::Ord(a.clone())), Box::new(SpaceTerm::Ord(b.clone()))).report();
        let mut best = Ordinal::zero();
        let mut count = 0usize;
        for x in maximizers(&a) {
            for y in maximizers(&b) {
                let h = x.point_rank().nat_sum(&y.point_rank());
                if h > best {
                    best = h;
                    count = 1;
                } else if h == best {
                    count += 1;
                }
            }
        }
        prop_assert_eq!(r.height, best);
        prop_assert_eq!(r.endpoint_count, BigUint::from(count));
    }
}
