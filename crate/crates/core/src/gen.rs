//! Seeded generators for randomized checks.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hyperspace::{Descriptor, FinJoinSemilattice};
use crate::ordinal::Ordinal;
use crate::poset::Poset;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of random Cantor normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrdinalShape {
    pub max_terms: usize,
    pub max_coeff: u64,
    /// Largest finite exponent at the innermost level.
    pub max_finite_exp: u64,
    /// Nesting depth of transfinite exponents; 0 keeps exponents finite.
    pub depth: u32,
}

impl Default for OrdinalShape {
    fn default() -> Self {
        OrdinalShape { max_terms: 6, max_coeff: 5, max_finite_exp: 6, depth: 1 }
    }
}

/// A random ordinal with at most `shape.max_terms` terms (possibly zero).
pub fn ordinal(rng: &mut GenRng, shape: &OrdinalShape) -> Ordinal {
    let k = rng.gen_range(0..=shape.max_terms);
    let mut exps = BTreeSet::new();
    for _ in 0..k {
        exps.insert(exponent(rng, shape));
    }
    Ordinal::from_terms(
        exps.into_iter()
            .rev()
            .map(|e| (e, BigUint::from(rng.gen_range(1..=shape.max_coeff)))),
    )
}

fn exponent(rng: &mut GenRng, shape: &OrdinalShape) -> Ordinal {
    if shape.depth == 0 || rng.gen_bool(0.6) {
        return Ordinal::from(rng.gen_range(0..=shape.max_finite_exp));
    }
    let inner = OrdinalShape { max_terms: 2.min(shape.max_terms), depth: shape.depth - 1, ..*shape };
    ordinal(rng, &inner)
}

/// A random nonzero ordinal.
pub fn nonzero_ordinal(rng: &mut GenRng, shape: &OrdinalShape) -> Ordinal {
    loop {
        let a = ordinal(rng, shape);
        if !a.is_zero() {
            return a;
        }
    }
}

/// A random ordinal `< ω^ω · k` with finite exponents below `ω`.
pub fn below_omega_omega_times(rng: &mut GenRng, k: u64) -> Ordinal {
    let shape = OrdinalShape { max_terms: 4, max_coeff: 9, max_finite_exp: 8, depth: 0 };
    let tail = ordinal(rng, &shape);
    let c = rng.gen_range(0..k);
    if c == 0 {
        tail
    } else {
        let lead = Ordinal::monomial(Ordinal::omega(), BigUint::from(c));
        &lead + &tail
    }
}

/// A random poset on `n` points: `i < j` for `i < j` with probability `p`,
/// transitively closed, then relabelled by a random permutation.
pub fn poset(rng: &mut GenRng, n: usize, p: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            lt[perm[i]][perm[j]] = rng.gen_bool(p);
        }
    }
    Poset::from_relation(n, |a, b| lt[a][b]).expect("acyclic by construction")
}

/// A random join-semilattice of sets: the union closure of up to three
/// random nonempty subsets of `{0, …, universe-1}`.
pub fn semilattice(rng: &mut GenRng, universe: u32) -> FinJoinSemilattice {
    let mut all: Vec<u64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..(1u64 << universe))).collect();
    all.sort_unstable();
    all.dedup();
    loop {
        let extra: Vec<u64> =
            all.iter().flat_map(|&a| all.iter().map(move |&b| a | b)).filter(|u| !all.contains(u)).collect();
        if extra.is_empty() {
            break;
        }
        all.extend(extra);
        all.sort_unstable();
        all.dedup();
    }
    let carrier =
        Poset::from_relation(all.len(), |i, j| i != j && all[i] & !all[j] == 0).expect("inclusion is an order");
    FinJoinSemilattice::from_order(carrier).expect("union closed family")
}

/// A random increasing map from `p` into `y`.
pub fn increasing_map(rng: &mut GenRng, p: &Poset, y: &FinJoinSemilattice) -> Vec<usize> {
    let mut f = vec![usize::MAX; p.len()];
    for x in p.linear_extension() {
        let below: Vec<usize> = p.strictly_below(x).iter().map(|z| f[z]).collect();
        let candidates: Vec<usize> = match below.split_first() {
            None => (0..y.len()).collect(),
            Some((&first, rest)) => {
                let lo = rest.iter().fold(first, |acc, &v| y.join(acc, v));
                (0..y.len()).filter(|&v| y.le(lo, v)).collect()
            }
        };
        f[x] = *candidates.choose(rng).expect("the join bounds itself");
    }
    f
}

/// A random clopen descriptor of `ℕ ∪ {∞}` with explicit numbers below `max`.
pub fn descriptor(rng: &mut GenRng, max: u64, cofinite: bool) -> Descriptor {
    let k = rng.gen_range(0..=4);
    let set: BTreeSet<u64> = (0..k).map(|_| rng.gen_range(0..max)).collect();
    if cofinite {
        Descriptor::Cofinite(set)
    } else {
        Descriptor::Finite(set)
    }
}
