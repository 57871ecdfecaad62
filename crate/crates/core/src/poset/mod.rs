//! Finite posets on at most 64 elements, stored as strict-below bitmasks.

mod zaguia;

pub use zaguia::{zaguia_verify, ZaguiaReport, ZaguiaWitness};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest poset representable with `u64` bitsets.
pub const MAX_ELEMENTS: usize = 64;

/// Default element bound for downset enumeration.
pub const DEFAULT_BOUND: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("cycle detected through element '{0}'")]
    Cycle(String),
    #[error("duplicate element name '{0}'")]
    DuplicateElement(String),
    #[error("unknown element '{0}'")]
    UnknownElement(String),
    #[error("{what} has {size} entries, bound is {bound}")]
    TooLarge { what: &'static str, size: usize, bound: usize },
    #[error("operation needs a nonempty poset")]
    Empty,
    #[error("relation is not a strict order: {0}")]
    NotAnOrder(String),
    #[error("invalid poset json: {0}")]
    Json(String),
}

/// A set of element indices as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

/// A downward closed [`ElemSet`]; constructed through [`Poset`] methods.
pub type DownSet = ElemSet;

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(i: usize) -> Self {
        ElemSet(1 << i)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElemSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal {
    pub max: ElemSet,
    pub min: ElemSet,
    pub is_antichain: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranks {
    pub elem_rank: Vec<usize>,
    pub poset_rank: usize,
}

/// Width together with the certificates that establish it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Width {
    pub width: usize,
    pub antichain: ElemSet,
    pub chains: Vec<Vec<usize>>,
}

/// A finite poset with named elements.
///
/// `below[i]` is the strict down-set of `i`; it is kept transitively closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    below: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

impl Poset {
    /// Builds a poset from a strict relation given as `below` bitmasks; the
    /// relation is transitively closed and checked for cycles.
    pub fn from_below(labels: Vec<String>, below: Vec<u64>) -> Result<Self, PosetError> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { what: "poset", size: n, bound: MAX_ELEMENTS });
        }
        assert_eq!(below.len(), n, "one below mask per label");
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(PosetError::DuplicateElement(l.clone()));
            }
        }
        let mut closed = below;
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = closed[i];
                for j in ElemSet(closed[i]).iter() {
                    acc |= closed[j];
                }
                if acc != closed[i] {
                    closed[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(i) = (0..n).find(|&i| closed[i] >> i & 1 == 1) {
            return Err(PosetError::Cycle(labels[i].clone()));
        }
        Ok(Poset { labels, below: closed })
    }

    /// Builds a poset on elements `0..n` named by their index.
    pub fn from_relation(n: usize, lt: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let below = (0..n).map(|j| (0..n).filter(|&i| lt(i, j)).fold(0u64, |m, i| m | 1 << i)).collect();
        Poset::from_below(labels, below)
    }

    /// Transitive closure of the cover pairs `(a, b)` meaning `a < b`.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self, PosetError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { what: "poset", size: n, bound: MAX_ELEMENTS });
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateElement(l.clone()));
            }
        }
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| PosetError::UnknownElement(s.to_string()));
        let mut below = vec![0u64; n];
        for (a, b) in covers {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            below[b] |= 1 << a;
        }
        Poset::from_below(labels, below)
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_relation(n, |_, _| false).expect("antichain is an order")
    }

    pub fn chain(n: usize) -> Self {
        Poset::from_relation(n, |i, j| i < j).expect("chain is an order")
    }

    pub fn from_json(text: &str) -> Result<Self, PosetError> {
        let raw: PosetJson = serde_json::from_str(text).map_err(|e| PosetError::Json(e.to_string()))?;
        Poset::from_covers(&raw.elements, &raw.covers)
    }

    pub fn to_json(&self) -> String {
        let covers = self
            .covers()
            .into_iter()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect();
        serde_json::to_string(&PosetJson { elements: self.labels.clone(), covers }).expect("serializable")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PosetError> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    /// Strict order `i < j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.lt(j, i)
    }

    pub fn strictly_below(&self, i: usize) -> ElemSet {
        ElemSet(self.below[i])
    }

    pub fn strictly_above(&self, i: usize) -> ElemSet {
        ElemSet::from_indices((0..self.len()).filter(|&j| self.lt(i, j)))
    }

    /// `↓i`, including `i`.
    pub fn down(&self, i: usize) -> DownSet {
        ElemSet(self.below[i] | 1 << i)
    }

    /// `↑i`, including `i`.
    pub fn up(&self, i: usize) -> ElemSet {
        let mut s = self.strictly_above(i);
        s.insert(i);
        s
    }

    pub fn principal_sets(&self, name: &str) -> Result<(DownSet, ElemSet), PosetError> {
        let i = self.index_of(name)?;
        Ok((self.down(i), self.up(i)))
    }

    pub fn down_closure(&self, s: ElemSet) -> DownSet {
        s.iter().fold(s, |acc, i| acc.union(self.strictly_below(i)))
    }

    pub fn up_closure(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(s, |acc, i| acc.union(self.strictly_above(i)))
    }

    pub fn is_downset(&self, s: ElemSet) -> bool {
        s.iter().all(|i| self.strictly_below(i).is_subset(s))
    }

    pub fn is_upset(&self, s: ElemSet) -> bool {
        self.is_downset(self.all().difference(s)) && s.is_subset(self.all())
    }

    pub fn maximal(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_indices(s.iter().filter(|&i| !s.iter().any(|j| self.lt(i, j))))
    }

    pub fn minimal(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_indices(s.iter().filter(|&i| self.strictly_below(i).intersection(s).is_empty()))
    }

    pub fn is_antichain(&self, s: ElemSet) -> bool {
        s.iter().all(|i| self.strictly_below(i).intersection(s).is_empty())
    }

    pub fn extremal(&self, s: ElemSet) -> Extremal {
        Extremal { max: self.maximal(s), min: self.minimal(s), is_antichain: self.is_antichain(s) }
    }

    /// Parses a set of element names.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet, PosetError> {
        names.iter().try_fold(ElemSet::EMPTY, |acc, n| Ok(acc.union(ElemSet::singleton(self.index_of(n.as_ref())?))))
    }

    pub fn names(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn format_set(&self, s: ElemSet) -> String {
        format!("{{{}}}", self.names(s).join(","))
    }

    /// Elements ordered so that every element follows everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.below[i].count_ones(), i));
        order
    }

    pub fn ranks(&self) -> Ranks {
        let mut elem_rank = vec![0usize; self.len()];
        for i in self.linear_extension() {
            elem_rank[i] = self.strictly_below(i).iter().map(|j| elem_rank[j] + 1).max().unwrap_or(0);
        }
        let poset_rank = elem_rank.iter().map(|r| r + 1).max().unwrap_or(0);
        Ranks { elem_rank, poset_rank }
    }

    /// Cover pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            let below = self.strictly_below(b);
            for a in below.iter() {
                if !below.iter().any(|c| self.lt(a, c)) {
                    out.push((a, b));
                }
            }
        }
        out.sort();
        out
    }

    /// Maximum antichain size, with a maximum antichain and a minimum chain
    /// cover of the same size as certificates.
    pub fn width_certified(&self) -> Width {
        let n = self.len();
        // Bipartite graph: left copy of i joined to right copy of j when i < j.
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut match_left: Vec<Option<usize>> = vec![None; n];
        fn augment(
            p: &Poset,
            i: usize,
            seen: &mut u64,
            match_left: &mut [Option<usize>],
            match_right: &mut [Option<usize>],
        ) -> bool {
            for j in p.strictly_above(i).iter() {
                if *seen >> j & 1 == 1 {
                    continue;
                }
                *seen |= 1 << j;
                let free = match match_right[j] {
                    None => true,
                    Some(k) => augment(p, k, seen, match_left, match_right),
                };
                if free {
                    match_right[j] = Some(i);
                    match_left[i] = Some(j);
                    return true;
                }
            }
            false
        }
        for i in 0..n {
            let mut seen = 0u64;
            augment(self, i, &mut seen, &mut match_left, &mut match_right);
        }

        let mut chains = Vec::new();
        for start in (0..n).filter(|&j| match_right[j].is_none()) {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = match_left[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }

        // König: vertices reachable from unmatched left vertices by alternating paths.
        let mut reach_left = 0u64;
        let mut reach_right = 0u64;
        let mut stack: Vec<usize> = (0..n).filter(|&i| match_left[i].is_none()).collect();
        for &i in &stack {
            reach_left |= 1 << i;
        }
        while let Some(i) = stack.pop() {
            for j in self.strictly_above(i).iter() {
                if reach_right >> j & 1 == 1 {
                    continue;
                }
                reach_right |= 1 << j;
                if let Some(k) = match_right[j] {
                    if reach_left >> k & 1 == 0 {
                        reach_left |= 1 << k;
                        stack.push(k);
                    }
                }
            }
        }
        // Cover = (left not reached) ∪ (right reached); its complement on both sides is an antichain.
        let antichain = ElemSet(reach_left & !reach_right & ElemSet::full(n).0);
        Width { width: chains.len(), antichain, chains }
    }

    /// Maximum antichain size.
    ///
    /// # Panics
    ///
    /// Panics if the antichain and chain-cover certificates disagree.
    pub fn width(&self) -> usize {
        let w = self.width_certified();
        assert!(self.is_antichain(w.antichain) && w.antichain.len() == w.width, "width certificates disagree");
        w.width
    }

    fn check_bound(&self, bound: usize) -> Result<(), PosetError> {
        if self.len() > bound {
            return Err(PosetError::TooLarge { what: "poset", size: self.len(), bound });
        }
        Ok(())
    }

    /// All downsets (including `∅` and the whole poset), ordered by size and
    /// then by bitmask.
    pub fn downsets(&self, bound: usize) -> Result<Vec<DownSet>, PosetError> {
        self.check_bound(bound)?;
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((k, cur)) = stack.pop() {
            if k == order.len() {
                out.push(ElemSet(cur));
                continue;
            }
            let i = order[k];
            stack.push((k + 1, cur));
            if self.below[i] & !cur == 0 {
                stack.push((k + 1, cur | 1 << i));
            }
        }
        out.sort_by_key(|s| (s.len(), s.0));
        Ok(out)
    }

    pub fn nonempty_downsets(&self, bound: usize) -> Result<Vec<DownSet>, PosetError> {
        Ok(self.downsets(bound)?.into_iter().filter(|s| !s.is_empty()).collect())
    }

    /// The lattice of all downsets ordered by inclusion, elements labelled by
    /// their member sets. Fails when there are more than 64 downsets.
    pub fn downset_lattice(&self) -> Result<Poset, PosetError> {
        let sets = self.downsets(DEFAULT_BOUND)?;
        if sets.len() > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { what: "downset lattice", size: sets.len(), bound: MAX_ELEMENTS });
        }
        let labels = sets.iter().map(|&s| self.format_set(s)).collect();
        let below = sets
            .iter()
            .map(|&b| {
                sets.iter()
                    .enumerate()
                    .filter(|&(_, &a)| a != b && a.is_subset(b))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Poset::from_below(labels, below)
    }

    /// Checks that `I ↦ P∖I` is a bijection from downsets onto upsets that
    /// reverses inclusion.
    pub fn complement_anti_isomorphism(&self, bound: usize) -> Result<bool, PosetError> {
        let downs = self.downsets(bound)?;
        let full = self.all();
        let images: Vec<ElemSet> = downs.iter().map(|&d| full.difference(d)).collect();
        if !images.iter().all(|&u| self.is_upset(u)) {
            return Ok(false);
        }
        let upsets = (0..=full.0).map(ElemSet).filter(|&s| self.is_upset(s)).count();
        let distinct: std::collections::HashSet<_> = images.iter().collect();
        if distinct.len() != downs.len() || (self.len() <= DEFAULT_BOUND && upsets != downs.len()) {
            return Ok(false);
        }
        for (a, ia) in downs.iter().zip(&images) {
            for (b, ib) in downs.iter().zip(&images) {
                if a.is_subset(*b) != ib.is_subset(*ia) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Rank of every nonempty downset in the inclusion order of nonempty
    /// downsets, computed from lower covers `I∖{m}` with `m` maximal in `I`.
    pub fn kw_rank(&self, bound: usize) -> Result<HashMap<DownSet, usize>, PosetError> {
        if self.is_empty() {
            return Err(PosetError::Empty);
        }
        let sets = self.nonempty_downsets(bound)?;
        let mut rank: HashMap<DownSet, usize> = HashMap::with_capacity(sets.len());
        for s in sets {
            let r = self
                .maximal(s)
                .iter()
                .filter_map(|m| rank.get(&s.difference(ElemSet::singleton(m))).map(|r| r + 1))
                .max()
                .unwrap_or(0);
            rank.insert(s, r);
        }
        Ok(rank)
    }

    /// Graphviz rendering of the Hasse diagram, one layer per rank.
    pub fn to_dot(&self) -> String {
        let ranks = self.ranks();
        let mut layers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &r) in ranks.elem_rank.iter().enumerate() {
            layers.entry(r).or_default().push(i);
        }
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label={l:?}];\n"));
        }
        for members in layers.values() {
            let names: Vec<String> = members.iter().map(|i| format!("n{i}")).collect();
            out.push_str(&format!("  {{ rank=same; {} }}\n", names.join("; ")));
        }
        for (a, b) in self.covers() {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Every strict order on `0..n`, by brute force over relation subsets.
///
/// # Panics
///
/// Panics for `n > 5`.
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    assert!(n <= 5, "labeled enumeration is limited to five elements");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut out = Vec::new();
    'mask: for mask in 0u64..(1 << pairs.len()) {
        let mut below = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                below[j] |= 1 << i;
            }
        }
        for j in 0..n {
            for i in ElemSet(below[j]).iter() {
                if below[i] & !below[j] != 0 || below[i] >> j & 1 == 1 {
                    continue 'mask;
                }
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        out.push(Poset { labels, below });
    }
    out
}
