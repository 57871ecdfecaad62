//! Almost disjoint families of eventually periodic sets, the join on the
//! quotient of the Mrówka hyperspace, and finite stages of a Lusin-type
//! construction.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hyperspace::{check_selector_with, SelectorReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MrowkaError {
    #[error("set {0} is finite")]
    FiniteSet(usize),
    #[error("sets {i} and {j} share the residue class {residue} mod {modulus}")]
    NotAlmostDisjoint { i: usize, j: usize, residue: u64, modulus: u64 },
    #[error("bound {given} exceeds {max}")]
    BoundExceeded { given: u64, max: u64 },
    #[error("indices must differ")]
    SameIndex,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("horizon {0} too small to certify")]
    HorizonTooSmall(u64),
    #[error("set {n} has only {found} fresh elements, needs {n}")]
    InsufficientFresh { n: usize, found: usize },
    #[error("invalid set: {0}")]
    InvalidSet(String),
    #[error("invalid family json: {0}")]
    Json(String),
}

/// `delta △ {n : n mod period ∈ residues}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvPeriodicSet {
    pub period: u64,
    pub residues: BTreeSet<u64>,
    #[serde(default)]
    pub delta: BTreeSet<u64>,
}

impl EvPeriodicSet {
    pub fn new(period: u64, residues: BTreeSet<u64>, delta: BTreeSet<u64>) -> Result<Self, MrowkaError> {
        if period == 0 {
            return Err(MrowkaError::InvalidSet("period must be positive".into()));
        }
        if let Some(r) = residues.iter().find(|&&r| r >= period) {
            return Err(MrowkaError::InvalidSet(format!("residue {r} not below period {period}")));
        }
        Ok(EvPeriodicSet { period, residues, delta })
    }

    /// `{n : n ≡ residue mod period}`.
    pub fn progression(period: u64, residue: u64) -> Self {
        EvPeriodicSet::new(period, BTreeSet::from([residue % period]), BTreeSet::new()).expect("valid progression")
    }

    pub fn contains(&self, n: u64) -> bool {
        self.residues.contains(&(n % self.period)) != self.delta.contains(&n)
    }

    pub fn is_infinite(&self) -> bool {
        !self.residues.is_empty()
    }

    pub fn elements_below(&self, n: u64) -> Vec<u64> {
        (0..n).filter(|&k| self.contains(k)).collect()
    }
}

/// `{n ≡ r mod period}` for every `r < period`.
pub fn residue_family(period: u64) -> Vec<EvPeriodicSet> {
    (0..period).map(|r| EvPeriodicSet::progression(period, r)).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A residue class mod `lcm(pa, pb)` contained in both periodic parts.
fn common_residue(a: &EvPeriodicSet, b: &EvPeriodicSet) -> Option<(u64, u64)> {
    let g = gcd(a.period, b.period);
    let l = a.period / g * b.period;
    for &ra in &a.residues {
        for &rb in &b.residues {
            if ra % g != rb % g {
                continue;
            }
            let r = (0..b.period / g).map(|k| ra + k * a.period).find(|x| x % b.period == rb);
            if let Some(r) = r {
                return Some((r, l));
            }
        }
    }
    None
}

/// The finite intersection of two sets whose periodic parts are disjoint.
fn finite_intersection(a: &EvPeriodicSet, b: &EvPeriodicSet) -> BTreeSet<u64> {
    a.delta.union(&b.delta).copied().filter(|&n| a.contains(n) && b.contains(n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdCertificate {
    pub i: usize,
    pub j: usize,
    pub residue: u64,
    pub modulus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdReport {
    pub pass: bool,
    pub witness: Option<AdCertificate>,
    /// `(i, j, A_i ∩ A_j)` for every almost disjoint pair with a nonempty meet.
    pub intersections: Vec<(usize, usize, Vec<u64>)>,
}

/// Decides pairwise almost disjointness by residue arithmetic.
pub fn ad_check(sets: &[EvPeriodicSet]) -> Result<AdReport, MrowkaError> {
    if let Some(i) = sets.iter().position(|s| !s.is_infinite()) {
        return Err(MrowkaError::FiniteSet(i));
    }
    let mut intersections = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if let Some((residue, modulus)) = common_residue(&sets[i], &sets[j]) {
                // Finitely many exceptions cannot cover a whole residue class.
                return Ok(AdReport {
                    pass: false,
                    witness: Some(AdCertificate { i, j, residue, modulus }),
                    intersections,
                });
            }
            let meet = finite_intersection(&sets[i], &sets[j]);
            if !meet.is_empty() {
                intersections.push((i, j, meet.into_iter().collect()));
            }
        }
    }
    Ok(AdReport { pass: true, witness: None, intersections })
}

/// A validated almost disjoint family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdFamily {
    sets: Vec<EvPeriodicSet>,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    sets: Vec<EvPeriodicSet>,
}

impl AdFamily {
    pub fn new(sets: Vec<EvPeriodicSet>) -> Result<Self, MrowkaError> {
        let r = ad_check(&sets)?;
        if let Some(c) = r.witness {
            return Err(MrowkaError::NotAlmostDisjoint { i: c.i, j: c.j, residue: c.residue, modulus: c.modulus });
        }
        Ok(AdFamily { sets })
    }

    /// Skips validation; used to feed deliberately broken input to checkers.
    pub fn unchecked(sets: Vec<EvPeriodicSet>) -> Self {
        AdFamily { sets }
    }

    pub fn from_json(text: &str) -> Result<Self, MrowkaError> {
        let raw: FamilyJson = serde_json::from_str(text).map_err(|e| MrowkaError::Json(e.to_string()))?;
        for s in &raw.sets {
            EvPeriodicSet::new(s.period, s.residues.clone(), s.delta.clone())?;
        }
        AdFamily::new(raw.sets)
    }

    /// Like [`AdFamily::from_json`] without the almost disjointness check.
    pub fn from_json_unchecked(text: &str) -> Result<Self, MrowkaError> {
        let raw: FamilyJson = serde_json::from_str(text).map_err(|e| MrowkaError::Json(e.to_string()))?;
        for s in &raw.sets {
            EvPeriodicSet::new(s.period, s.residues.clone(), s.delta.clone())?;
        }
        Ok(AdFamily { sets: raw.sets })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&FamilyJson { sets: self.sets.clone() }).expect("serializable")
    }

    pub fn sets(&self) -> &[EvPeriodicSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    fn check_index(&self, i: usize) -> Result<(), MrowkaError> {
        if i >= self.sets.len() {
            return Err(MrowkaError::IndexOutOfRange(i));
        }
        Ok(())
    }
}

/// Largest element bound accepted by [`star_truncation`].
pub const MAX_CODE_BOUND: u64 = 1 << 24;

/// The codes `Σ_{k∈σ} 2^k` of nonempty `σ ⊆ A ∩ [0, N)`, held as the mask
/// of `A ∩ [0, N)`: a code belongs iff it is a nonzero submask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSet {
    pub mask: BigUint,
}

impl CodeSet {
    pub fn from_elements<I: IntoIterator<Item = u64>>(it: I) -> Self {
        let mut mask = BigUint::zero();
        for k in it {
            mask.set_bit(k, true);
        }
        CodeSet { mask }
    }

    pub fn contains(&self, code: &BigUint) -> bool {
        !code.is_zero() && (code & &self.mask) == *code
    }

    /// `2^{|A ∩ [0,N)|} − 1`.
    pub fn count(&self) -> BigUint {
        (BigUint::one() << self.mask.count_ones()) - 1u32
    }

    pub fn intersect(&self, other: &CodeSet) -> CodeSet {
        CodeSet { mask: &self.mask & &other.mask }
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_zero()
    }
}

/// Code of a finite set of naturals.
pub fn code_of(sigma: &BTreeSet<u64>) -> BigUint {
    CodeSet::from_elements(sigma.iter().copied()).mask
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub bound: u64,
    pub pairs: usize,
    pub intersection_law: bool,
    pub sampled_codes: usize,
    pub membership_agrees: bool,
    /// `(i, j)` of the first pair violating the law.
    pub witness: Option<(usize, usize)>,
}

impl StarReport {
    pub fn pass(&self) -> bool {
        self.intersection_law && self.membership_agrees
    }
}

/// Code sets of each `A★` truncated at `N`, with the law
/// `codes(A★) ∩ codes(B★) = codes((A∩B)★)` checked for every pair.
pub fn star_truncation(fam: &AdFamily, n: u64, samples: &[BigUint]) -> Result<(Vec<CodeSet>, StarReport), MrowkaError> {
    if n > MAX_CODE_BOUND {
        return Err(MrowkaError::BoundExceeded { given: n, max: MAX_CODE_BOUND });
    }
    let codes: Vec<CodeSet> = fam.sets.iter().map(|a| CodeSet::from_elements(a.elements_below(n))).collect();
    let mut intersection_law = true;
    let mut membership_agrees = true;
    let mut witness = None;
    let mut pairs = 0;
    for i in 0..codes.len() {
        for j in i + 1..codes.len() {
            pairs += 1;
            let (a, b) = (&fam.sets[i], &fam.sets[j]);
            let meet = CodeSet::from_elements((0..n).filter(|&k| a.contains(k) && b.contains(k)));
            let law = codes[i].intersect(&codes[j]);
            if law != meet {
                intersection_law = false;
                witness.get_or_insert((i, j));
            }
            for c in samples {
                if (codes[i].contains(c) && codes[j].contains(c)) != meet.contains(c) {
                    membership_agrees = false;
                    witness.get_or_insert((i, j));
                }
            }
        }
    }
    Ok((
        codes,
        StarReport { bound: n, pairs, intersection_law, sampled_codes: samples.len(), membership_agrees, witness },
    ))
}

/// A point of the quotient semilattice: a nonempty finite set of naturals,
/// a branch of the family, or the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GPoint {
    FinPt(BTreeSet<u64>),
    Branch(usize),
    Top,
}

fn subset_of(sigma: &BTreeSet<u64>, a: &EvPeriodicSet) -> bool {
    sigma.iter().all(|&n| a.contains(n))
}

pub fn g_join(x: &GPoint, y: &GPoint, fam: &AdFamily) -> GPoint {
    use GPoint::*;
    match (x, y) {
        (Top, _) | (_, Top) => Top,
        (FinPt(s), FinPt(t)) => FinPt(s.union(t).copied().collect()),
        (FinPt(s), Branch(i)) | (Branch(i), FinPt(s)) => {
            if subset_of(s, &fam.sets[*i]) {
                Branch(*i)
            } else {
                Top
            }
        }
        (Branch(i), Branch(j)) => {
            if i == j {
                Branch(*i)
            } else {
                Top
            }
        }
    }
}

pub fn g_le(x: &GPoint, y: &GPoint, fam: &AdFamily) -> bool {
    use GPoint::*;
    match (x, y) {
        (_, Top) => true,
        (Top, _) => false,
        (FinPt(s), FinPt(t)) => s.is_subset(t),
        (FinPt(s), Branch(i)) => subset_of(s, &fam.sets[*i]),
        (Branch(_), FinPt(_)) => false,
        (Branch(i), Branch(j)) => i == j,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergenceReport {
    pub i: usize,
    pub j: usize,
    pub horizon: u64,
    /// First `n` at which `σ_n` and `τ_n` are nonempty and `σ_n ∪ τ_n` lies
    /// in no branch.
    pub threshold: u64,
    pub sigma_in_branch: bool,
    pub distinct_sigmas: usize,
    pub joins_escape: bool,
    pub limit_is_top: bool,
}

impl ConvergenceReport {
    pub fn pass(&self) -> bool {
        self.sigma_in_branch && self.joins_escape && self.limit_is_top && self.distinct_sigmas > 1
    }
}

/// Follows `σ_n = A_i ∩ [0,n)` and `τ_n = A_j ∩ [0,n)` up to the horizon.
pub fn convergence_check(fam: &AdFamily, i: usize, j: usize, horizon: u64) -> Result<ConvergenceReport, MrowkaError> {
    if i == j {
        return Err(MrowkaError::SameIndex);
    }
    fam.check_index(i)?;
    fam.check_index(j)?;
    let (a, b) = (&fam.sets[i], &fam.sets[j]);
    let mut threshold = None;
    let mut sigma_in_branch = true;
    let mut joins_escape = true;
    let mut sigmas = BTreeSet::new();
    for n in 0..=horizon {
        let sigma: BTreeSet<u64> = a.elements_below(n).into_iter().collect();
        let tau: BTreeSet<u64> = b.elements_below(n).into_iter().collect();
        if sigma.is_empty() || tau.is_empty() {
            continue;
        }
        sigma_in_branch &= g_le(&GPoint::FinPt(sigma.clone()), &GPoint::Branch(i), fam);
        let join = g_join(&GPoint::FinPt(sigma.clone()), &GPoint::FinPt(tau), fam);
        let escapes = (0..fam.len()).all(|k| !g_le(&join, &GPoint::Branch(k), fam));
        sigmas.insert(sigma);
        match threshold {
            None if escapes => threshold = Some(n),
            Some(_) if !escapes => joins_escape = false,
            _ => {}
        }
    }
    let threshold = threshold.ok_or(MrowkaError::HorizonTooSmall(horizon))?;
    Ok(ConvergenceReport {
        i,
        j,
        horizon,
        threshold,
        sigma_in_branch,
        distinct_sigmas: sigmas.len(),
        joins_escape,
        limit_is_top: g_join(&GPoint::Branch(i), &GPoint::Branch(j), fam) == GPoint::Top,
    })
}

/// A point of `ℕ ⊔ (fresh tails)`; naturals come first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Point {
    Nat(u64),
    Tail(u32, u64),
}

/// A member of a Lusin-type family: an eventually periodic set of naturals,
/// or a finite set of chosen points together with its own infinite tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LusinSet {
    Periodic(EvPeriodicSet),
    Stage { chosen: BTreeSet<Point>, tail: u32 },
}

impl LusinSet {
    pub fn contains(&self, p: Point) -> bool {
        match (self, p) {
            (LusinSet::Periodic(s), Point::Nat(n)) => s.contains(n),
            (LusinSet::Periodic(_), Point::Tail(..)) => false,
            (LusinSet::Stage { chosen, tail }, p) => chosen.contains(&p) || matches!(p, Point::Tail(t, _) if t == *tail),
        }
    }

    /// Elements in increasing order, scanning at most `limit` naturals.
    fn elements(&self, limit: u64) -> Box<dyn Iterator<Item = Point> + '_> {
        match self {
            LusinSet::Periodic(s) => Box::new((0..limit).filter(|&n| s.contains(n)).map(Point::Nat)),
            LusinSet::Stage { chosen, tail } => {
                let t = *tail;
                Box::new(chosen.iter().copied().chain((0..).map(move |k| Point::Tail(t, k))))
            }
        }
    }
}

/// Naturals scanned when looking for fresh elements of a periodic set.
pub const FRESH_SCAN: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LusinReport {
    pub stage: u32,
    pub m: usize,
    /// `|A ∩ (B_n ∖ ⋃_{j<n} B_j)|` for each `n < m`.
    pub counts: Vec<usize>,
    pub l2_exact: bool,
    /// For `k = 0..=m`, the number of `n < m` with `A ∩ B_n ⊆ [0, k)`.
    pub l1_counts: Vec<usize>,
    pub l1_bounded: bool,
}

impl LusinReport {
    pub fn pass(&self) -> bool {
        self.l2_exact && self.l1_bounded
    }
}

/// Counts `|A ∩ (B_n ∖ ⋃_{j<n} B_j)|`: a point is fresh in exactly the
/// first `B_n` containing it.
pub fn fresh_counts(a: &BTreeSet<Point>, prev: &[LusinSet]) -> Vec<usize> {
    let mut counts = vec![0; prev.len()];
    for &p in a {
        if let Some(n) = prev.iter().position(|b| b.contains(p)) {
            counts[n] += 1;
        }
    }
    counts
}

/// Builds `A` meeting the fresh part of each `B_n` in exactly `n` points,
/// chosen least first, plus a new tail labelled `stage`.
pub fn lusin_stage(prev: &[LusinSet], stage: u32) -> Result<(LusinSet, LusinReport), MrowkaError> {
    let periodic: Vec<EvPeriodicSet> = prev
        .iter()
        .filter_map(|s| match s {
            LusinSet::Periodic(p) => Some(p.clone()),
            LusinSet::Stage { .. } => None,
        })
        .collect();
    if let Some(c) = ad_check(&periodic)?.witness {
        return Err(MrowkaError::NotAlmostDisjoint { i: c.i, j: c.j, residue: c.residue, modulus: c.modulus });
    }
    if prev.iter().any(|s| matches!(s, LusinSet::Stage { tail, .. } if *tail == stage)) {
        return Err(MrowkaError::InvalidSet(format!("tail label {stage} already used")));
    }
    let mut owner: HashMap<Point, usize> = HashMap::new();
    let mut chosen = BTreeSet::new();
    for (n, b) in prev.iter().enumerate() {
        let fresh: Vec<Point> = b
            .elements(FRESH_SCAN)
            .filter(|&p| *owner.entry(p).or_insert_with(|| prev.iter().position(|e| e.contains(p)).unwrap_or(n)) == n)
            .take(n)
            .collect();
        if fresh.len() < n {
            return Err(MrowkaError::InsufficientFresh { n, found: fresh.len() });
        }
        chosen.extend(fresh);
    }
    let counts = fresh_counts(&chosen, prev);
    let l2_exact = counts.iter().enumerate().all(|(n, &c)| c == n);
    let m = prev.len();
    // Least k with A ∩ B_n ⊆ [0, k), or None if the meet has a tail point.
    let bounds: Vec<Option<u64>> = prev
        .iter()
        .map(|b| {
            chosen.iter().filter(|&&p| b.contains(p)).try_fold(0, |acc, p| match p {
                Point::Nat(x) => Some(acc.max(x + 1)),
                Point::Tail(..) => None,
            })
        })
        .collect();
    let l1_counts: Vec<usize> =
        (0..=m as u64).map(|k| bounds.iter().filter(|b| b.is_some_and(|v| v <= k)).count()).collect();
    let l1_bounded = l1_counts.iter().enumerate().all(|(k, &c)| c <= k + 1);
    let report = LusinReport { stage, m, counts, l2_exact, l1_counts, l1_bounded };
    Ok((LusinSet::Stage { chosen, tail: stage }, report))
}

/// Runs `stages` iterations, appending each new set to the family.
pub fn lusin_iterate(initial: Vec<LusinSet>, stages: u32) -> Result<(Vec<LusinSet>, Vec<LusinReport>), MrowkaError> {
    let mut fam = initial;
    let mut reports = Vec::new();
    for s in 0..stages {
        let (set, report) = lusin_stage(&fam, s)?;
        fam.push(set);
        reports.push(report);
    }
    Ok((fam, reports))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MrowkaSelectorReport {
    pub truncation: u64,
    pub selector: SelectorReport,
    pub clopen: bool,
    pub clopen_witness: Option<AdCertificate>,
    pub order_matches: bool,
    pub ranks_match: bool,
    pub canonical: bool,
}

impl MrowkaSelectorReport {
    pub fn pass(&self) -> bool {
        self.selector.pass() && self.clopen && self.order_matches && self.ranks_match && self.canonical
    }
}

/// Checks `U_n = {n}`, `U_A = A ∪ {A}`, `U_∞ = everything` on
/// `{n < T} ∪ branches ∪ {∞}`.
pub fn mrowka_selector_check(fam: &AdFamily, truncation: u64) -> Result<MrowkaSelectorReport, MrowkaError> {
    let t = truncation as usize;
    let b = fam.len();
    let top = t + b;
    let m = top + 1;
    let member = |x: usize, y: usize| -> bool {
        if y == top {
            true
        } else if y >= t {
            x == y || (x < t && fam.sets[y - t].contains(x as u64))
        } else {
            x == y
        }
    };
    let selector = check_selector_with(m, member);

    let clopen_witness = match fam.sets.iter().position(|s| !s.is_infinite()) {
        Some(i) => Some(AdCertificate { i, j: i, residue: 0, modulus: 0 }),
        None => ad_check(&fam.sets)?.witness,
    };

    let expected_lt = |x: usize, y: usize| -> bool {
        if x == y {
            return false;
        }
        match (x < t, y < t, y == top) {
            (_, _, true) => true,
            (true, false, false) => fam.sets[y - t].contains(x as u64),
            _ => false,
        }
    };
    let order_matches =
        (0..m).all(|x| (0..m).all(|y| (x != y && member(x, y)) == expected_lt(x, y)));

    let lt = |x: usize, y: usize| x != y && member(x, y);
    let mut rank = vec![0usize; m];
    // Naturals, then branches, then the top: every strict predecessor comes earlier.
    for y in 0..m {
        rank[y] = (0..y).filter(|&x| lt(x, y)).map(|x| rank[x] + 1).max().unwrap_or(0);
    }
    let nonempty_trace = |i: usize| (0..truncation).any(|n| fam.sets[i].contains(n));
    let ranks_match = (0..t).all(|x| rank[x] == 0)
        && (0..b).all(|i| rank[t + i] == usize::from(nonempty_trace(i)))
        && (b == 0 && t == 0 || rank[top] == (0..b).map(|i| rank[t + i] + 1).chain((0..t).map(|_| 1)).max().unwrap_or(0));
    let canonical = (0..m).all(|y| {
        let members: Vec<usize> = (0..m).filter(|&x| member(x, y)).collect();
        let hi = members.iter().map(|&x| rank[x]).max().unwrap_or(0);
        members.iter().filter(|&&x| rank[x] == hi).count() == 1 && rank[y] == hi
    });

    Ok(MrowkaSelectorReport {
        truncation,
        selector,
        clopen: clopen_witness.is_none(),
        clopen_witness,
        order_matches,
        ranks_match,
        canonical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn evens_odds() -> AdFamily {
        AdFamily::new(vec![EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(2, 1)]).unwrap()
    }

    #[test]
    fn ad_examples() {
        assert!(ad_check(evens_odds().sets()).unwrap().pass);
        let r = ad_check(&[EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(4, 0)]).unwrap();
        assert_eq!(r.witness, Some(AdCertificate { i: 0, j: 1, residue: 0, modulus: 4 }));
        assert!(ad_check(&residue_family(64)).unwrap().pass);
        let finite = EvPeriodicSet::new(3, BTreeSet::new(), BTreeSet::from([1])).unwrap();
        assert_eq!(ad_check(&[finite]), Err(MrowkaError::FiniteSet(0)));
        let a = EvPeriodicSet::new(2, BTreeSet::from([0]), BTreeSet::from([1])).unwrap();
        let r = ad_check(&[a, EvPeriodicSet::progression(2, 1)]).unwrap();
        assert_eq!(r.intersections, vec![(0, 1, vec![1])]);
    }

    #[test]
    fn star_codes() {
        let (codes, r) = star_truncation(&evens_odds(), 8, &[]).unwrap();
        assert!(r.pass());
        assert!(codes[0].intersect(&codes[1]).is_empty());
        assert_eq!(codes[0].count(), BigUint::from(15u32));
        assert!(star_truncation(&evens_odds(), MAX_CODE_BOUND + 1, &[]).is_err());
    }

    #[test]
    fn join_rules() {
        let fam = evens_odds();
        use GPoint::*;
        assert_eq!(g_join(&Branch(0), &Branch(1), &fam), Top);
        assert_eq!(g_join(&FinPt([2, 4].into()), &Branch(0), &fam), Branch(0));
        assert_eq!(g_join(&FinPt([2, 3].into()), &Branch(0), &fam), Top);
        assert_eq!(g_join(&FinPt([1].into()), &FinPt([3].into()), &fam), FinPt([1, 3].into()));
    }

    #[test]
    fn convergence_of_evens_and_odds() {
        let r = convergence_check(&evens_odds(), 0, 1, 64).unwrap();
        assert_eq!(r.threshold, 2);
        assert!(r.pass());
        assert_eq!(convergence_check(&evens_odds(), 1, 1, 64), Err(MrowkaError::SameIndex));
        assert_eq!(convergence_check(&evens_odds(), 0, 1, 1), Err(MrowkaError::HorizonTooSmall(1)));
    }

    #[test]
    fn lusin_small_stage() {
        let prev: Vec<LusinSet> = residue_family(8).into_iter().map(LusinSet::Periodic).collect();
        let (set, r) = lusin_stage(&prev, 0).unwrap();
        assert_eq!(r.counts, (0..8).collect::<Vec<_>>());
        assert!(r.pass());
        assert!(set.contains(Point::Tail(0, 5)));
        assert!(set.contains(Point::Nat(1)));
        assert!(!set.contains(Point::Nat(0)));
        let one = vec![LusinSet::Periodic(EvPeriodicSet::progression(1, 0))];
        let (_, r) = lusin_stage(&one, 0).unwrap();
        assert_eq!(r.counts, vec![0]);
        let bad = vec![
            LusinSet::Periodic(EvPeriodicSet::progression(2, 0)),
            LusinSet::Periodic(EvPeriodicSet::progression(4, 0)),
        ];
        assert!(matches!(lusin_stage(&bad, 0), Err(MrowkaError::NotAlmostDisjoint { .. })));
    }

    #[test]
    fn selector_on_truncation() {
        let r = mrowka_selector_check(&evens_odds(), 16).unwrap();
        assert!(r.pass(), "{r:?}");
        let overlapping = AdFamily::unchecked(vec![EvPeriodicSet::progression(2, 0), EvPeriodicSet::progression(4, 0)]);
        let r = mrowka_selector_check(&overlapping, 16).unwrap();
        assert!(!r.pass());
        assert!(!r.clopen);
        assert_eq!(r.clopen_witness.unwrap().modulus, 4);
    }

    #[test]
    fn family_json() {
        let fam = AdFamily::from_json(r#"{"sets":[{"period":3,"residues":[0]},{"period":3,"residues":[1,2],"delta":[0]}]}"#);
        assert!(fam.is_ok());
        let fam = fam.unwrap();
        assert_eq!(AdFamily::from_json(&fam.to_json()).unwrap(), fam);
        assert!(AdFamily::from_json(r#"{"sets":[{"period":2,"residues":[0]},{"period":4,"residues":[0]}]}"#).is_err());
        assert!(AdFamily::from_json(r#"{"sets":[{"period":2,"residues":[5]}]}"#).is_err());
    }
}
