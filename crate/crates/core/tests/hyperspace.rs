use std::collections::BTreeSet;

use proptest::prelude::*;
use skula::gen;
use skula::hyperspace::{
    antichain_with_top, enumerate_homomorphisms, hat_extension, one_point_ranks, selector_axioms_check, Descriptor,
    DensityWitness, FinJoinSemilattice, Hyperspace, OnePointModel, SelectorFamily,
};
use skula::poset::{labeled_posets, ElemSet, DEFAULT_BOUND};
use skula::{Ordinal, Poset};

fn build(p: &Poset) -> Hyperspace {
    Hyperspace::build(p, DEFAULT_BOUND).unwrap()
}

/// Every map `H → Y` that is a join homomorphism and sends `↓x` to `f(x)`,
/// found by trying all `|Y|^|H|` assignments.
fn brute_homomorphisms(h: &Hyperspace, y: &FinJoinSemilattice, f: &[usize]) -> Vec<Vec<usize>> {
    let n = h.len();
    let mut out = Vec::new();
    let mut g = vec![0usize; n];
    loop {
        let hom = (0..n).all(|i| (0..n).all(|j| g[h.join(i, j)] == y.join(g[i], g[j])));
        let ext = (0..h.base().len()).all(|x| g[h.eta(x)] == f[x]);
        if hom && ext {
            out.push(g.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            g[k] += 1;
            if g[k] < y.len() {
                break;
            }
            g[k] = 0;
            k += 1;
        }
    }
}

fn chain_semilattice(n: usize) -> FinJoinSemilattice {
    FinJoinSemilattice::from_order(Poset::chain(n)).unwrap()
}

#[test]
fn construction_examples() {
    assert_eq!(build(&Poset::antichain(1)).len(), 1);
    for n in 1..=6 {
        let h = build(&Poset::antichain(n));
        assert_eq!(h.len(), (1 << n) - 1);
    }
    // Nonempty subsets of the antichain, plus the whole space.
    for n in 1..=5 {
        let p = antichain_with_top(n);
        let h = build(&p);
        assert_eq!(h.len(), (1 << n) - 1 + 1);
        let top = p.len() - 1;
        for &k in h.points() {
            assert!(!k.contains(top) || k == p.all());
        }
    }
}

#[test]
fn joins_are_unions() {
    let p = Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap();
    let h = build(&p);
    for i in 0..h.len() {
        for j in 0..h.len() {
            assert_eq!(h.point(h.join(i, j)), h.point(i).union(h.point(j)));
            assert_eq!(h.le(i, j), h.point(i).is_subset(h.point(j)));
        }
    }
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(p.le(x, y), h.le(h.eta(x), h.eta(y)));
        }
    }
}

#[test]
fn selector_examples() {
    let p = Poset::from_covers(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
    assert!(selector_axioms_check(&p, &SelectorFamily::principal(&p)).unwrap().pass());
    let mut fam = SelectorFamily::principal(&p);
    fam.assignment[0] = p.all();
    fam.assignment[1] = p.all();
    let r = selector_axioms_check(&p, &fam).unwrap();
    assert!(!r.condition2);
    assert_eq!(r.witness.unwrap().condition, "condition2");
    let h = build(&p);
    let hp = h.as_poset().unwrap();
    let kplus = SelectorFamily {
        assignment: (0..h.len()).map(|k| ElemSet::from_indices((0..h.len()).filter(|&l| h.k_plus_member(l, k)))).collect(),
    };
    assert!(selector_axioms_check(&hp, &kplus).unwrap().pass());
    assert!(selector_axioms_check(&p, &SelectorFamily { assignment: vec![] }).is_err());
}

#[test]
fn max_decomposition_examples() {
    let c = Poset::chain(4);
    let h = build(&c);
    assert_eq!(h.max_decomposition(c.down(2)).unwrap(), ElemSet::singleton(2));
    let a = Poset::antichain(4);
    assert_eq!(build(&a).max_decomposition(a.all()).unwrap(), a.all());
    let mut rng = gen::rng(21);
    for _ in 0..40 {
        let p = gen::poset(&mut rng, 7, 0.3);
        let h = build(&p);
        for &k in h.points() {
            let oracle = ElemSet::from_indices(k.iter().filter(|&x| k.iter().all(|y| x == y || !p.le(x, y))));
            assert_eq!(h.max_decomposition(k).unwrap(), oracle);
        }
    }
    assert!(h.max_decomposition(ElemSet::singleton(3)).is_err());
}

#[test]
fn hat_examples() {
    let p = Poset::from_covers(&["a", "b", "c"], &[("a", "c")]).unwrap();
    let h = build(&p);
    let y = h.as_semilattice().unwrap();
    let eta: Vec<usize> = (0..p.len()).map(|x| h.eta(x)).collect();
    let (hat, r) = hat_extension(&h, &y, &eta).unwrap();
    assert_eq!(hat, (0..h.len()).collect::<Vec<_>>());
    assert!(r.pass());

    let two = Poset::antichain(2);
    let h2 = build(&two);
    let (hat, r) = hat_extension(&h2, &chain_semilattice(2), &[1, 1]).unwrap();
    assert_eq!(hat, vec![1; 3]);
    assert!(r.pass() && r.uniqueness_method == "exhaustive");

    let c = Poset::chain(2);
    assert!(hat_extension(&build(&c), &chain_semilattice(2), &[1, 0]).is_err());
}

#[test]
fn hat_uniqueness_matches_brute_force() {
    let mut rng = gen::rng(22);
    for n in 1..=3 {
        for p in labeled_posets(n) {
            let h = build(&p);
            for _ in 0..4 {
                let y = gen::semilattice(&mut rng, 3);
                let f = gen::increasing_map(&mut rng, &p, &y);
                let (hat, r) = hat_extension(&h, &y, &f).unwrap();
                let brute = brute_homomorphisms(&h, &y, &f);
                assert_eq!(brute, vec![hat.clone()]);
                assert!(r.pass());
                assert_eq!(enumerate_homomorphisms(&h, &y, &f, 10), brute);
            }
        }
    }
}

#[test]
fn exhaustive_verification_up_to_four() {
    for n in 1..=4 {
        for p in labeled_posets(n) {
            let r = build(&p).verify();
            assert!(r.pass(), "{}: {r:?}", p.to_json());
        }
    }
}

#[test]
fn density_examples() {
    let m = OnePointModel::default();
    let all = Descriptor::Cofinite(BTreeSet::new());
    let v1 = Descriptor::Cofinite(BTreeSet::from([0, 1, 2, 5]));
    assert_eq!(m.vietoris_density_witness(&all, &[v1]).unwrap(), DensityWitness::Finite(BTreeSet::from([3])));
    let u = Descriptor::Finite(BTreeSet::from([1, 2]));
    let v = Descriptor::Finite(BTreeSet::from([3]));
    assert_eq!(m.vietoris_density_witness(&u, &[v]).unwrap(), DensityWitness::Empty);
    let u = Descriptor::Cofinite(BTreeSet::from([0]));
    let vs = [Descriptor::Cofinite(BTreeSet::from([1, 2])), Descriptor::Cofinite(BTreeSet::from([3]))];
    match m.vietoris_density_witness(&u, &vs).unwrap() {
        DensityWitness::Finite(f) => {
            assert!(f.len() <= 2);
            // Scan the naturals up to the horizon for the least common points.
            for v in &vs {
                let least = (0..m.horizon).find(|&n| u.contains(n) && v.contains(n)).unwrap();
                assert!(f.contains(&least));
            }
        }
        DensityWitness::Empty => panic!("nonempty open"),
    }
    let far = Descriptor::Finite(BTreeSet::from([m.horizon + 1]));
    assert!(m.vietoris_density_witness(&far, &[]).is_err());
    assert!("fin:1,x".parse::<Descriptor>().is_err());
    assert_eq!("cof:".parse::<Descriptor>().unwrap(), all);
}

#[test]
fn one_point_ranks_are_recorded() {
    let r = one_point_ranks(6);
    assert_eq!(r.rank_hyperspace, Ordinal::omega().succ());
    assert!(r.within_bound);
    assert!(!r.matches_stated);
    // n-antichain with top: the chain of subsets has n nonempty levels, then the top.
    for &(n, rank) in &r.truncated {
        assert_eq!(rank, n + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_posets_verify(seed in any::<u64>(), n in 1usize..=7, dens in 0.0f64..0.7) {
        let mut rng = gen::rng(seed);
        let p = gen::poset(&mut rng, n, dens);
        let r = build(&p).verify();
        prop_assert!(r.pass());
    }

    #[test]
    fn density_matches_complement_arithmetic(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let u = gen::descriptor(&mut rng, 30, seed % 2 == 0);
        let vs: Vec<Descriptor> = (0..(seed % 5)).map(|i| gen::descriptor(&mut rng, 30, i % 2 == 1)).collect();
        let w = OnePointModel::default().vietoris_density_witness(&u, &vs).unwrap();
        let meets = |v: &Descriptor| (0..200).any(|n| u.contains(n) && v.contains(n));
        let nonempty = if vs.is_empty() { (0..200).any(|n| u.contains(n)) } else { vs.iter().all(meets) };
        match w {
            DensityWitness::Finite(f) => {
                prop_assert!(nonempty);
                prop_assert!(f.iter().all(|&n| u.contains(n)));
                prop_assert!(vs.iter().all(|v| f.iter().any(|&n| v.contains(n))));
            }
            DensityWitness::Empty => prop_assert!(!nonempty),
        }
    }
}
