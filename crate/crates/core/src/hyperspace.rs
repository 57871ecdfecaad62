//! Hyperspaces of finite posets: nonempty downsets under union.
//!
//! A finite poset with the discrete topology is a Priestley space, so its
//! hyperspace is the set of nonempty downsets ordered by inclusion. This
//! module builds it, checks clopen selectors, computes the unique join
//! homomorphism extending an increasing map, and models the Vietoris
//! topology of the one-point compactification of ℕ.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::poset::{DownSet, ElemSet, Poset, PosetError, MAX_ELEMENTS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HyperError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("{0} is not a point of the hyperspace")]
    NotAPoint(String),
    #[error("selector assigns {given} sets for {expected} points")]
    IncompleteAssignment { given: usize, expected: usize },
    #[error("map is not increasing: {0} <= {1} but images are not ordered")]
    NotIncreasing(String, String),
    #[error("not a join-semilattice: {0}")]
    NotSemilattice(String),
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}

/// The nonempty downsets of a finite poset, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct Hyperspace {
    base: Poset,
    points: Vec<DownSet>,
    index: HashMap<DownSet, usize>,
    eta: Vec<usize>,
}

impl Hyperspace {
    pub fn build(base: &Poset, bound: usize) -> Result<Self, HyperError> {
        let points = base.nonempty_downsets(bound)?;
        let index: HashMap<DownSet, usize> = points.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let eta = (0..base.len()).map(|x| index[&base.down(x)]).collect();
        Ok(Hyperspace { base: base.clone(), points, index, eta })
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn points(&self) -> &[DownSet] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> DownSet {
        self.points[i]
    }

    pub fn index_of(&self, k: DownSet) -> Option<usize> {
        self.index.get(&k).copied()
    }

    /// Index of `↓x`.
    pub fn eta(&self, x: usize) -> usize {
        self.eta[x]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index[&self.points[i].union(self.points[j])]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.points[i].is_subset(self.points[j])
    }

    pub fn join_table(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|i| (0..self.len()).map(|j| self.join(i, j)).collect()).collect()
    }

    pub fn format_point(&self, i: usize) -> String {
        self.base.format_set(self.points[i])
    }

    /// The hyperspace as a poset whose elements are labelled by member sets.
    pub fn as_poset(&self) -> Result<Poset, HyperError> {
        if self.len() > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { what: "hyperspace", size: self.len(), bound: MAX_ELEMENTS }.into());
        }
        let labels = (0..self.len()).map(|i| self.format_point(i)).collect();
        let below = (0..self.len())
            .map(|j| (0..self.len()).filter(|&i| i != j && self.le(i, j)).fold(0u64, |m, i| m | 1 << i))
            .collect();
        Ok(Poset::from_below(labels, below)?)
    }

    pub fn as_semilattice(&self) -> Result<FinJoinSemilattice, HyperError> {
        FinJoinSemilattice::new(self.as_poset()?, self.join_table())
    }

    /// `Max(K)`, re-checked against `↓Max(K) = K`.
    pub fn max_decomposition(&self, k: DownSet) -> Result<ElemSet, HyperError> {
        if !self.index.contains_key(&k) {
            return Err(HyperError::NotAPoint(format!("{:#x}", k.0)));
        }
        let max = self.base.maximal(k);
        assert_eq!(self.base.down_closure(max), k, "downset is generated by its maximal elements");
        Ok(max)
    }

    /// `K⁺ = {L : L ⊆ K}` for every point `K`, as membership `L ∈ K⁺`.
    pub fn k_plus_member(&self, l: usize, k: usize) -> bool {
        self.le(l, k)
    }

    pub fn verify(&self) -> HyperReport {
        let n = self.len();
        let base = &self.base;
        let join_closed = (0..n).all(|i| (0..n).all(|j| self.index.contains_key(&self.points[i].union(self.points[j]))));
        let eta_embedding = (0..base.len())
            .all(|x| (0..base.len()).all(|y| base.le(x, y) == self.le(self.eta[x], self.eta[y])));

        let mut generated: BTreeSet<usize> = self.eta.iter().copied().collect();
        let mut frontier: Vec<usize> = generated.iter().copied().collect();
        while let Some(i) = frontier.pop() {
            for &g in &self.eta {
                let j = self.join(i, g);
                if generated.insert(j) {
                    frontier.push(j);
                }
            }
        }
        let join_generated = generated.len() == n;

        let max_decomposition = self.points.iter().all(|&k| base.down_closure(base.maximal(k)) == k);

        let mut from_antichains = BTreeSet::new();
        for s in 1..=ElemSet::full(base.len()).0 {
            let s = ElemSet(s);
            if base.is_antichain(s) {
                from_antichains.insert(base.down_closure(s));
            }
        }
        let equals_k = base.len() <= 20 && from_antichains == self.points.iter().copied().collect();

        let priestley_separation = (0..base.len()).all(|x| {
            (0..base.len()).all(|y| base.le(x, y) || (base.up(x).contains(x) && !base.up(x).contains(y)))
        });

        let selector = check_selector_with(n, |l, k| self.k_plus_member(l, k));
        HyperReport {
            points: n,
            join_closed,
            eta_embedding,
            join_generated,
            max_decomposition,
            equals_k,
            priestley_separation,
            selector,
        }
    }

    /// Graphviz rendering of the covering relation between points.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hyperspace {\n  rankdir=BT;\n");
        for i in 0..self.len() {
            out.push_str(&format!("  h{i} [label={:?}];\n", self.format_point(i)));
        }
        for (j, &b) in self.points.iter().enumerate() {
            for m in self.base.maximal(b).iter() {
                let a = b.difference(ElemSet::singleton(m));
                if let Some(i) = self.index_of(a) {
                    out.push_str(&format!("  h{i} -> h{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperReport {
    pub points: usize,
    pub join_closed: bool,
    pub eta_embedding: bool,
    pub join_generated: bool,
    pub max_decomposition: bool,
    pub equals_k: bool,
    pub priestley_separation: bool,
    pub selector: SelectorReport,
}

impl HyperReport {
    pub fn pass(&self) -> bool {
        self.join_closed
            && self.eta_embedding
            && self.join_generated
            && self.max_decomposition
            && self.equals_k
            && self.priestley_separation
            && self.selector.pass()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelectorWitness {
    pub condition: String,
    pub points: Vec<usize>,
}

/// Result of checking a family `{U_x}` against the selector conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelectorReport {
    /// `x ∈ U_x`.
    pub condition1: bool,
    /// Distinct `x, y` are not each in the other's set.
    pub condition2: bool,
    /// `y ∈ U_x` implies `U_y ⊆ U_x`.
    pub condition3: bool,
    /// `x < y ⇔ x ≠ y ∧ x ∈ U_y` is transitive (and hence irreflexive).
    pub condition4: bool,
    /// Conditions (2) and (3) together agree with (4).
    pub equivalence: bool,
    /// `U_x ⊆ U_y` agrees with `x ∈ U_y`.
    pub order_consistent: bool,
    /// Inclusion-minimal members are singletons.
    pub minimal_singletons: bool,
    pub well_founded: bool,
    /// Strict pairs `(x, y)` with `x ∈ U_y`.
    pub induced_order: Vec<(usize, usize)>,
    pub witness: Option<SelectorWitness>,
}

impl SelectorReport {
    pub fn pass(&self) -> bool {
        self.condition1
            && self.condition2
            && self.condition3
            && self.condition4
            && self.equivalence
            && self.order_consistent
            && self.minimal_singletons
            && self.well_founded
    }
}

/// Checks a family of `m` sets over points `0..m`, where `member(x, y)`
/// decides `x ∈ U_y`.
pub fn check_selector_with(m: usize, member: impl Fn(usize, usize) -> bool) -> SelectorReport {
    let mut rel = vec![vec![false; m]; m];
    for (x, row) in rel.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = member(x, y);
        }
    }
    let mut witness: Option<SelectorWitness> = None;
    let fail = |w: &mut Option<SelectorWitness>, c: &str, pts: Vec<usize>| {
        if w.is_none() {
            *w = Some(SelectorWitness { condition: c.to_string(), points: pts });
        }
    };
    let subset = |x: usize, y: usize| (0..m).all(|z| !rel[z][x] || rel[z][y]);

    let mut condition1 = true;
    for x in 0..m {
        if !rel[x][x] {
            condition1 = false;
            fail(&mut witness, "condition1", vec![x]);
        }
    }
    let mut condition2 = true;
    for x in 0..m {
        for y in x + 1..m {
            if rel[x][y] && rel[y][x] {
                condition2 = false;
                fail(&mut witness, "condition2", vec![x, y]);
            }
        }
    }
    let mut condition3 = true;
    for x in 0..m {
        for y in 0..m {
            if rel[y][x] && !subset(y, x) {
                condition3 = false;
                fail(&mut witness, "condition3", vec![y, x]);
            }
        }
    }
    let lt = |x: usize, y: usize| x != y && rel[x][y];
    let mut condition4 = true;
    'outer: for x in 0..m {
        for y in 0..m {
            if !lt(x, y) {
                continue;
            }
            for z in 0..m {
                if lt(y, z) && !lt(x, z) {
                    condition4 = false;
                    fail(&mut witness, "condition4", vec![x, y, z]);
                    break 'outer;
                }
            }
        }
    }
    let equivalence = !condition1 || (condition2 && condition3) == condition4;

    let selector_like = condition1 && condition2 && condition3;
    let mut order_consistent = true;
    if selector_like {
        for x in 0..m {
            for y in 0..m {
                if subset(x, y) != rel[x][y] {
                    order_consistent = false;
                    fail(&mut witness, "order", vec![x, y]);
                }
            }
        }
    }

    let mut minimal_singletons = true;
    for x in 0..m {
        let minimal = (0..m).all(|y| y == x || !subset(y, x) || subset(x, y));
        let size = (0..m).filter(|&z| rel[z][x]).count();
        if minimal && size != 1 {
            minimal_singletons = false;
            fail(&mut witness, "minimal_singletons", vec![x]);
        }
    }

    // Kahn's algorithm on the strict relation.
    let mut indeg: Vec<usize> = (0..m).map(|y| (0..m).filter(|&x| lt(x, y)).count()).collect();
    let mut queue: Vec<usize> = (0..m).filter(|&y| indeg[y] == 0).collect();
    let mut seen = 0;
    while let Some(x) = queue.pop() {
        seen += 1;
        for y in 0..m {
            if lt(x, y) {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push(y);
                }
            }
        }
    }
    let well_founded = seen == m;
    if !well_founded {
        fail(&mut witness, "well_founded", Vec::new());
    }

    let induced_order = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|&(x, y)| lt(x, y)).collect();
    SelectorReport {
        condition1,
        condition2,
        condition3,
        condition4,
        equivalence,
        order_consistent,
        minimal_singletons,
        well_founded,
        induced_order,
        witness,
    }
}

/// An assignment `x ↦ U_x` of element sets to the elements of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectorFamily {
    pub assignment: Vec<ElemSet>,
}

impl SelectorFamily {
    /// `U_x = ↓x`.
    pub fn principal(p: &Poset) -> Self {
        SelectorFamily { assignment: (0..p.len()).map(|x| p.down(x)).collect() }
    }
}

pub fn selector_axioms_check(space: &Poset, fam: &SelectorFamily) -> Result<SelectorReport, HyperError> {
    if fam.assignment.len() != space.len() {
        return Err(HyperError::IncompleteAssignment { given: fam.assignment.len(), expected: space.len() });
    }
    Ok(check_selector_with(space.len(), |x, y| fam.assignment[y].contains(x)))
}

/// A finite join-semilattice given by its order and its join table.
#[derive(Clone, Debug)]
pub struct FinJoinSemilattice {
    carrier: Poset,
    join: Vec<Vec<usize>>,
}

impl FinJoinSemilattice {
    /// Validates that `join` is associative, commutative and idempotent and
    /// that `x ≤ y ⇔ x ∨ y = y` in the carrier.
    pub fn new(carrier: Poset, join: Vec<Vec<usize>>) -> Result<Self, HyperError> {
        let n = carrier.len();
        if join.len() != n || join.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(HyperError::NotSemilattice("join table has the wrong shape".into()));
        }
        for x in 0..n {
            if join[x][x] != x {
                return Err(HyperError::NotSemilattice(format!("not idempotent at {}", carrier.label(x))));
            }
            for y in 0..n {
                if join[x][y] != join[y][x] {
                    return Err(HyperError::NotSemilattice(format!(
                        "not commutative at {}, {}",
                        carrier.label(x),
                        carrier.label(y)
                    )));
                }
                if carrier.le(x, y) != (join[x][y] == y) {
                    return Err(HyperError::NotSemilattice(format!(
                        "order mismatch at {}, {}",
                        carrier.label(x),
                        carrier.label(y)
                    )));
                }
                for z in 0..n {
                    if join[join[x][y]][z] != join[x][join[y][z]] {
                        return Err(HyperError::NotSemilattice(format!(
                            "not associative at {}, {}, {}",
                            carrier.label(x),
                            carrier.label(y),
                            carrier.label(z)
                        )));
                    }
                }
            }
        }
        Ok(FinJoinSemilattice { carrier, join })
    }

    /// Joins computed as least upper bounds of `carrier`.
    pub fn from_order(carrier: Poset) -> Result<Self, HyperError> {
        let n = carrier.len();
        let mut join = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let ub = carrier.up(x).intersection(carrier.up(y));
                let least: Vec<usize> = ub.iter().filter(|&u| ub.iter().all(|v| carrier.le(u, v))).collect();
                match least.as_slice() {
                    [u] => join[x][y] = *u,
                    _ => {
                        return Err(HyperError::NotSemilattice(format!(
                            "{} and {} have no least upper bound",
                            carrier.label(x),
                            carrier.label(y)
                        )))
                    }
                }
            }
        }
        FinJoinSemilattice::new(carrier, join)
    }

    pub fn carrier(&self) -> &Poset {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.carrier.le(x, y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatReport {
    pub homomorphism: bool,
    pub extends: bool,
    pub unique: bool,
    /// `"exhaustive"` or `"generators"`.
    pub uniqueness_method: String,
    /// Number of join homomorphisms agreeing with the map on principal
    /// downsets, when enumerated.
    pub homomorphisms_found: Option<usize>,
}

impl HatReport {
    pub fn pass(&self) -> bool {
        self.homomorphism && self.extends && self.unique
    }
}

/// Largest hyperspace and target for which uniqueness is enumerated.
pub const EXHAUSTIVE_POINTS: usize = 64;
pub const EXHAUSTIVE_TARGET: usize = 8;

/// Extends an increasing `f` from the base poset to the hyperspace by
/// `hat(A) = ⋁ f(A)`.
pub fn hat_extension(
    h: &Hyperspace,
    y: &FinJoinSemilattice,
    f: &[usize],
) -> Result<(Vec<usize>, HatReport), HyperError> {
    let p = h.base();
    if f.len() != p.len() || f.iter().any(|&v| v >= y.len()) {
        return Err(HyperError::NotSemilattice("map does not land in the target".into()));
    }
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.le(a, b) && !y.le(f[a], f[b]) {
                return Err(HyperError::NotIncreasing(p.label(a).into(), p.label(b).into()));
            }
        }
    }
    let hat: Vec<usize> = h
        .points()
        .iter()
        .map(|k| {
            let mut it = k.iter();
            let first = f[it.next().expect("points are nonempty")];
            it.fold(first, |acc, x| y.join(acc, f[x]))
        })
        .collect();

    let n = h.len();
    let homomorphism = (0..n).all(|i| (0..n).all(|j| hat[h.join(i, j)] == y.join(hat[i], hat[j])));
    let extends = (0..p.len()).all(|x| hat[h.eta(x)] == f[x]);

    let (unique, method, found) = if n <= EXHAUSTIVE_POINTS && y.len() <= EXHAUSTIVE_TARGET {
        let all = enumerate_homomorphisms(h, y, f, 2);
        (all.len() == 1 && all[0] == hat, "exhaustive", Some(all.len()))
    } else {
        // Every point is a join of principal downsets, so agreement there forces hat.
        let forced = h.points().iter().enumerate().all(|(i, &k)| {
            let max = p.maximal(k);
            let mut it = max.iter();
            let first = hat[h.eta(it.next().expect("nonempty"))];
            it.fold(first, |acc, m| y.join(acc, hat[h.eta(m)])) == hat[i]
        });
        (forced, "generators", None)
    };

    Ok((
        hat,
        HatReport {
            homomorphism,
            extends,
            unique,
            uniqueness_method: method.into(),
            homomorphisms_found: found,
        },
    ))
}

/// Backtracking enumeration of join homomorphisms `g` with `g(↓x) = f(x)`,
/// stopping after `limit` solutions.
pub fn enumerate_homomorphisms(h: &Hyperspace, y: &FinJoinSemilattice, f: &[usize], limit: usize) -> Vec<Vec<usize>> {
    let n = h.len();
    let mut fixed: Vec<Option<usize>> = vec![None; n];
    for x in 0..h.base().len() {
        fixed[h.eta(x)] = Some(f[x]);
    }
    let mut assign: Vec<usize> = vec![usize::MAX; n];
    let mut out = Vec::new();

    fn consistent(h: &Hyperspace, y: &FinJoinSemilattice, assign: &[usize], k: usize) -> bool {
        // Points are ordered by size, so all joins of earlier points that are
        // checked here have both arguments and the result assigned.
        for i in 0..=k {
            for j in i..=k {
                let u = h.join(i, j);
                if (u == k || i == k || j == k) && u <= k && assign[u] != y.join(assign[i], assign[j]) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        k: usize,
        h: &Hyperspace,
        y: &FinJoinSemilattice,
        fixed: &[Option<usize>],
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if k == h.len() {
            out.push(assign.clone());
            return;
        }
        let choices: Vec<usize> = match fixed[k] {
            Some(v) => vec![v],
            None => (0..y.len()).collect(),
        };
        for v in choices {
            assign[k] = v;
            if consistent(h, y, assign, k) {
                go(k + 1, h, y, fixed, assign, out, limit);
            }
        }
        assign[k] = usize::MAX;
    }

    go(0, h, y, &fixed, &mut assign, &mut out, limit);
    out
}

/// A clopen subset of `ℕ ∪ {∞}`: a finite set of naturals, or the
/// complement of one (which then contains `∞`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Descriptor {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

impl Descriptor {
    pub fn contains(&self, n: u64) -> bool {
        match self {
            Descriptor::Finite(s) => s.contains(&n),
            Descriptor::Cofinite(s) => !s.contains(&n),
        }
    }

    pub fn contains_infinity(&self) -> bool {
        matches!(self, Descriptor::Cofinite(_))
    }

    fn explicit(&self) -> &BTreeSet<u64> {
        match self {
            Descriptor::Finite(s) | Descriptor::Cofinite(s) => s,
        }
    }

    /// Least natural in the intersection, if any.
    pub fn least_common(&self, other: &Descriptor) -> Option<u64> {
        match (self, other) {
            (Descriptor::Finite(a), b) | (b, Descriptor::Finite(a)) => a.iter().copied().find(|&n| b.contains(n)),
            (Descriptor::Cofinite(a), Descriptor::Cofinite(b)) => (0..).find(|n| !a.contains(n) && !b.contains(n)),
        }
    }

    pub fn least(&self) -> Option<u64> {
        self.least_common(&Descriptor::Cofinite(BTreeSet::new()))
    }
}

impl std::str::FromStr for Descriptor {
    type Err = HyperError;

    /// `fin:1,2,3` or `cof:0,4` (either list may be empty).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| HyperError::Descriptor(s.to_string()))?;
        let set = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|_| HyperError::Descriptor(format!("bad number '{t}'"))))
            .collect::<Result<BTreeSet<u64>, _>>()?;
        match kind.trim() {
            "fin" => Ok(Descriptor::Finite(set)),
            "cof" => Ok(Descriptor::Cofinite(set)),
            other => Err(HyperError::Descriptor(format!("unknown kind '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DensityWitness {
    Finite(BTreeSet<u64>),
    Empty,
}

/// Clopen descriptors of `ℕ ∪ {∞}` up to a horizon on explicit numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePointModel {
    pub horizon: u64,
}

impl Default for OnePointModel {
    fn default() -> Self {
        OnePointModel { horizon: 10_000 }
    }
}

impl OnePointModel {
    pub fn check(&self, d: &Descriptor) -> Result<(), HyperError> {
        match d.explicit().last() {
            Some(&m) if m > self.horizon => {
                Err(HyperError::Descriptor(format!("{m} exceeds horizon {}", self.horizon)))
            }
            _ => Ok(()),
        }
    }

    /// Decides whether `U⁺ ∩ V₁⁻ ∩ … ∩ V_k⁻` is nonempty and, if so, returns
    /// a finite set of naturals lying in it.
    pub fn vietoris_density_witness(&self, u: &Descriptor, vs: &[Descriptor]) -> Result<DensityWitness, HyperError> {
        self.check(u)?;
        for v in vs {
            self.check(v)?;
        }
        if vs.is_empty() {
            return Ok(match u.least() {
                Some(n) => DensityWitness::Finite(BTreeSet::from([n])),
                None => DensityWitness::Empty,
            });
        }
        let mut picks = BTreeSet::new();
        for v in vs {
            match u.least_common(v) {
                Some(n) => {
                    picks.insert(n);
                }
                None => return Ok(DensityWitness::Empty),
            }
        }
        Ok(DensityWitness::Finite(picks))
    }
}

/// Ranks attached to the one-point compactification `X = ℕ ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OnePointRanks {
    pub rank_x: Ordinal,
    /// Rank of `[ℕ]^{<ω} ∪ {X}` under inclusion.
    pub rank_hyperspace: Ordinal,
    /// `ω^{rank(X)}`.
    pub bound: Ordinal,
    /// Value printed alongside the example; it disagrees with the computation.
    pub stated: Ordinal,
    pub within_bound: bool,
    pub matches_stated: bool,
    /// Rank of the hyperspace of an `n`-antichain with a top, for `n = 1..`.
    pub truncated: Vec<(usize, usize)>,
}

pub fn one_point_ranks(max_n: usize) -> OnePointRanks {
    // Naturals have rank 0, ∞ rank 1. A finite set F has rank |F| - 1 and X
    // sits above all of them.
    let rank_x = Ordinal::from(2);
    let rank_hyperspace = Ordinal::omega().succ();
    let bound = Ordinal::omega().pow(&rank_x);
    let stated = Ordinal::one();
    let truncated = (1..=max_n)
        .map(|n| {
            let p = antichain_with_top(n);
            let ranks = p.kw_rank(crate::poset::DEFAULT_BOUND).expect("small poset");
            (n, ranks.values().map(|r| r + 1).max().unwrap_or(0))
        })
        .collect();
    OnePointRanks {
        within_bound: rank_hyperspace <= bound,
        matches_stated: rank_hyperspace == stated,
        rank_x,
        rank_hyperspace,
        bound,
        stated,
        truncated,
    }
}

/// An `n`-antichain `0..n` with a top element named `inf`.
pub fn antichain_with_top(n: usize) -> Poset {
    let mut labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    labels.push("inf".into());
    let mut below = vec![0u64; n + 1];
    below[n] = ElemSet::full(n).0;
    Poset::from_below(labels, below).expect("antichain with top is an order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::DEFAULT_BOUND;

    #[test]
    fn small_hyperspaces() {
        let h = Hyperspace::build(&Poset::antichain(1), DEFAULT_BOUND).unwrap();
        assert_eq!(h.len(), 1);
        let h = Hyperspace::build(&Poset::antichain(4), DEFAULT_BOUND).unwrap();
        assert_eq!(h.len(), 15);
        assert!(h.verify().pass());
        let h = Hyperspace::build(&antichain_with_top(4), DEFAULT_BOUND).unwrap();
        assert_eq!(h.len(), 16);
        assert!(h.points().contains(&h.base().all()));
    }

    #[test]
    fn selector_failures_are_reported() {
        let p = Poset::antichain(3);
        let mut fam = SelectorFamily::principal(&p);
        assert!(selector_axioms_check(&p, &fam).unwrap().pass());
        fam.assignment[0] = p.all();
        fam.assignment[1] = p.all();
        let r = selector_axioms_check(&p, &fam).unwrap();
        assert!(!r.condition2);
        assert_eq!(r.witness.unwrap().condition, "condition2");
        fam.assignment.pop();
        assert!(matches!(selector_axioms_check(&p, &fam), Err(HyperError::IncompleteAssignment { .. })));
    }

    #[test]
    fn hat_of_eta_is_identity() {
        let p = Poset::from_covers(&["a", "b", "c"], &[("a", "c")]).unwrap();
        let h = Hyperspace::build(&p, DEFAULT_BOUND).unwrap();
        let y = h.as_semilattice().unwrap();
        let f: Vec<usize> = (0..p.len()).map(|x| h.eta(x)).collect();
        let (hat, report) = hat_extension(&h, &y, &f).unwrap();
        assert_eq!(hat, (0..h.len()).collect::<Vec<_>>());
        assert!(report.pass());
        assert_eq!(report.homomorphisms_found, Some(1));
    }

    #[test]
    fn hat_into_two_chain() {
        let p = Poset::antichain(2);
        let h = Hyperspace::build(&p, DEFAULT_BOUND).unwrap();
        let y = FinJoinSemilattice::from_order(Poset::chain(2)).unwrap();
        let (hat, report) = hat_extension(&h, &y, &[1, 1]).unwrap();
        assert_eq!(hat, vec![1, 1, 1]);
        assert!(report.pass());
        let two = Poset::chain(2);
        let h = Hyperspace::build(&two, DEFAULT_BOUND).unwrap();
        assert!(matches!(hat_extension(&h, &y, &[1, 0]), Err(HyperError::NotIncreasing(..))));
    }

    #[test]
    fn semilattice_validation() {
        assert!(FinJoinSemilattice::from_order(Poset::antichain(2)).is_err());
        let bad = FinJoinSemilattice::new(Poset::chain(2), vec![vec![0, 0], vec![0, 1]]);
        assert!(bad.is_err());
    }

    #[test]
    fn density_cases() {
        let m = OnePointModel::default();
        let all: Descriptor = "cof:".parse().unwrap();
        let v: Descriptor = "cof:0,1,2".parse().unwrap();
        assert_eq!(m.vietoris_density_witness(&all, std::slice::from_ref(&v)).unwrap(), DensityWitness::Finite([3].into()));
        let u: Descriptor = "fin:1,2".parse().unwrap();
        let w: Descriptor = "fin:5".parse().unwrap();
        assert_eq!(m.vietoris_density_witness(&u, &[w]).unwrap(), DensityWitness::Empty);
        assert!(m.vietoris_density_witness(&"fin:20000".parse().unwrap(), &[]).is_err());
        assert!("half:1".parse::<Descriptor>().is_err());
    }

    #[test]
    fn one_point_ranks_disagree_with_stated_value() {
        let r = one_point_ranks(4);
        assert_eq!(r.rank_hyperspace.to_string(), "w + 1");
        assert_eq!(r.bound.to_string(), "w^2");
        assert!(r.within_bound);
        assert!(!r.matches_stated);
        assert_eq!(r.truncated, vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
    }
}
