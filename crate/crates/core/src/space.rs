//! Symbolic scattered spaces and the height calculus of their hyperspaces.
//!
//! Terms are ordinal spaces `[0, α]`, finite disjoint sums, binary products
//! and skeletons: finite posets of distinguished points labelled by their
//! Cantor-Bendixson heights.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::ordinal::{Ordinal, ParseError};
use crate::poset::{ElemSet, Poset, PosetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("rank is not computed for this term")]
    RankNotComputed,
    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),
    #[error("skeleton is not a forest: {0} and {1} are incomparable with a common lower bound")]
    NotForest(String, String),
    #[error("term syntax: {0}")]
    Syntax(String),
    #[error("ordinal syntax in term: {0}")]
    Ordinal(#[from] ParseError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A finite poset of distinguished points with strictly increasing
/// ordinal labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    poset: Poset,
    labels: Vec<Ordinal>,
}

impl Skeleton {
    pub fn new(poset: Poset, labels: Vec<Ordinal>) -> Result<Self, SpaceError> {
        if poset.is_empty() {
            return Err(SpaceError::InvalidSkeleton("empty poset".into()));
        }
        if labels.len() != poset.len() {
            return Err(SpaceError::InvalidSkeleton(format!(
                "{} labels for {} elements",
                labels.len(),
                poset.len()
            )));
        }
        for y in 0..poset.len() {
            for x in poset.strictly_below(y).iter() {
                if labels[x] >= labels[y] {
                    return Err(SpaceError::InvalidSkeleton(format!(
                        "label of {} is not below label of {}",
                        poset.label(x),
                        poset.label(y)
                    )));
                }
            }
        }
        Ok(Skeleton { poset, labels })
    }

    /// An antichain skeleton named `0..n` with the given labels.
    pub fn antichain(labels: Vec<Ordinal>) -> Result<Self, SpaceError> {
        Skeleton::new(Poset::antichain(labels.len()), labels)
    }

    pub fn from_named(poset: Poset, labels: &HashMap<String, Ordinal>) -> Result<Self, SpaceError> {
        let mut out = Vec::with_capacity(poset.len());
        for name in poset.labels() {
            let l = labels
                .get(name)
                .ok_or_else(|| SpaceError::InvalidSkeleton(format!("no label for '{name}'")))?;
            out.push(l.clone());
        }
        if labels.len() != poset.len() {
            let extra = labels.keys().find(|k| !poset.labels().contains(k)).cloned().unwrap_or_default();
            return Err(SpaceError::InvalidSkeleton(format!("unknown element '{extra}'")));
        }
        Skeleton::new(poset, out)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn labels(&self) -> &[Ordinal] {
        &self.labels
    }

    pub fn label_of(&self, s: ElemSet) -> Vec<Ordinal> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn max_label(&self) -> Ordinal {
        self.labels.iter().max().cloned().unwrap_or_default()
    }

    /// Largest label plus one.
    pub fn rank(&self) -> Ordinal {
        self.max_label().succ()
    }

    /// All nonempty antichains, in increasing bitmask order.
    pub fn antichains(&self) -> Vec<ElemSet> {
        let p = &self.poset;
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElemSet::EMPTY)];
        while let Some((i, cur)) = stack.pop() {
            if i == p.len() {
                if !cur.is_empty() {
                    out.push(cur);
                }
                continue;
            }
            stack.push((i + 1, cur));
            if cur.iter().all(|j| !p.comparable(i, j)) {
                let mut next = cur;
                next.insert(i);
                stack.push((i + 1, next));
            }
        }
        out.sort();
        out
    }

    /// Incomparable elements have disjoint downsets.
    pub fn forest_violation(&self) -> Option<(usize, usize)> {
        let p = &self.poset;
        for x in 0..p.len() {
            for y in x + 1..p.len() {
                if !p.comparable(x, y) && !p.down(x).intersection(p.down(y)).is_empty() {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceTerm {
    /// The ordinal space `[0, α]`.
    Ord(Ordinal),
    Sum(Vec<SpaceTerm>),
    Prod(Box<SpaceTerm>, Box<SpaceTerm>),
    Skeleton(Skeleton),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub height: Ordinal,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub endpoint_count: BigUint,
    pub unitary: bool,
    /// `None` when no rank is attached to the term.
    pub rank: Option<Ordinal>,
}

impl SpaceTerm {
    pub fn report(&self) -> SpaceReport {
        let (height, endpoint_count, rank) = match self {
            SpaceTerm::Ord(a) => {
                let (h, e) = if a.is_finite() {
                    (Ordinal::zero(), a.finite_part() + 1u32)
                } else {
                    (a.degree(), a.leading_coefficient())
                };
                (h, e, Some(a.succ()))
            }
            SpaceTerm::Sum(parts) => {
                let reports: Vec<SpaceReport> = parts.iter().map(SpaceTerm::report).collect();
                let h = reports.iter().map(|r| r.height.clone()).max().unwrap_or_default();
                let e = reports.iter().filter(|r| r.height == h).map(|r| r.endpoint_count.clone()).sum();
                (h, e, None)
            }
            SpaceTerm::Prod(a, b) => {
                let (ra, rb) = (a.report(), b.report());
                (ra.height.nat_sum(&rb.height), ra.endpoint_count * rb.endpoint_count, None)
            }
            SpaceTerm::Skeleton(s) => {
                let h = s.max_label();
                let maximal = s.poset.maximal(s.poset.all());
                let e = maximal.iter().filter(|&x| s.labels[x] == h).count();
                (h.clone(), BigUint::from(e), Some(h))
            }
        };
        SpaceReport { unitary: endpoint_count.is_one(), height, endpoint_count, rank }
    }
}

/// Points of `[0, α]` of maximal Cantor-Bendixson rank.
pub fn ord_space_maximizers(alpha: &Ordinal) -> Vec<Ordinal> {
    if alpha.is_finite() {
        let n = alpha.as_u64().expect("small finite ordinal");
        return (0..=n).map(Ordinal::from).collect();
    }
    let d = alpha.degree();
    let c = alpha.leading_coefficient();
    let mut out = Vec::new();
    let mut k = BigUint::one();
    while k <= c {
        out.push(Ordinal::monomial(d.clone(), k.clone()));
        k += 1u32;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm31Report {
    pub height: Ordinal,
    pub rank: Ordinal,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub endpoint_count: BigUint,
    /// `ω^height · (endpoint_count + 1)`.
    pub middle: Ordinal,
    /// `ω^(height + 1)`.
    pub top: Ordinal,
    pub height_le_rank: bool,
    pub rank_lt_middle: bool,
    pub middle_lt_top: bool,
}

impl Thm31Report {
    pub fn pass(&self) -> bool {
        self.height_le_rank && self.rank_lt_middle && self.middle_lt_top
    }
}

/// Checks `height ≤ rank < ω^height·(e+1) < ω^(height+1)`.
pub fn thm31_check(t: &SpaceTerm) -> Result<Thm31Report, SpaceError> {
    let r = t.report();
    let rank = r.rank.ok_or(SpaceError::RankNotComputed)?;
    let wh = Ordinal::omega().pow(&r.height);
    let middle = &wh * &Ordinal::from_biguint(&r.endpoint_count + 1u32);
    let top = Ordinal::omega().pow(&r.height.succ());
    Ok(Thm31Report {
        height_le_rank: r.height <= rank,
        rank_lt_middle: rank < middle,
        middle_lt_top: middle < top,
        height: r.height,
        rank,
        endpoint_count: r.endpoint_count,
        middle,
        top,
    })
}

/// Height of the canonical neighbourhood of a point of rank `r` inside the
/// hyperspace: `0`, `1`, or `ω^α` where `r = 1 + α ≥ 2`.
pub fn hyper_point_height(r: &Ordinal) -> Ordinal {
    if r.is_zero() || *r == Ordinal::one() {
        return r.clone();
    }
    Ordinal::omega_pow(r.one_plus_inverse().expect("r >= 2"))
}

/// Natural sum of [`hyper_point_height`] over the labels of an antichain.
pub fn hyper_antichain_height(labels: &[Ordinal]) -> Ordinal {
    labels.iter().fold(Ordinal::zero(), |acc, r| acc.nat_sum(&hyper_point_height(r)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm36Report {
    pub rank: Ordinal,
    /// `ω^rank`.
    pub bound: Ordinal,
    pub antichains: usize,
    pub max_height: Ordinal,
    pub max_antichain: Vec<String>,
    pub pass: bool,
    pub witness: Option<Vec<String>>,
}

/// Checks `hyper_antichain_height(σ) < ω^rank` for every antichain `σ`.
pub fn thm36_check(s: &Skeleton) -> Thm36Report {
    let rank = s.rank();
    let bound = Ordinal::omega().pow(&rank);
    let antichains = s.antichains();
    let mut max_height = Ordinal::zero();
    let mut max_antichain = ElemSet::EMPTY;
    let mut witness = None;
    for &a in &antichains {
        let h = hyper_antichain_height(&s.label_of(a));
        if h >= bound && witness.is_none() {
            witness = Some(s.poset.names(a));
        }
        if h > max_height || max_antichain.is_empty() {
            max_height = h;
            max_antichain = a;
        }
    }
    Thm36Report {
        rank,
        bound,
        antichains: antichains.len(),
        max_height,
        max_antichain: s.poset.names(max_antichain),
        pass: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityViolation {
    pub rho: Vec<String>,
    pub sigma: Vec<String>,
    /// Every element of `σ` not covered by `↓ρ` has label `0`; dropping an
    /// isolated point leaves the natural sum unchanged.
    pub isolated_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub pairs_checked: usize,
    pub violations: Vec<MonotonicityViolation>,
}

impl MonotonicityReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    /// No violation other than those caused by isolated points alone.
    pub fn pass_up_to_isolated(&self) -> bool {
        self.violations.iter().all(|v| v.isolated_only)
    }
}

/// For antichains `ρ, σ` of a forest skeleton with `↓ρ ⊊ ↓σ`, checks that
/// the hyperspace height of `Max(ρ)` is below that of `σ`.
pub fn hyper_monotonicity_check(s: &Skeleton) -> Result<MonotonicityReport, SpaceError> {
    if let Some((x, y)) = s.forest_violation() {
        return Err(SpaceError::NotForest(s.poset.label(x).into(), s.poset.label(y).into()));
    }
    let p = &s.poset;
    let antichains = s.antichains();
    let info: Vec<(ElemSet, Ordinal)> = antichains
        .iter()
        .map(|&a| (p.down_closure(a), hyper_antichain_height(&s.label_of(a))))
        .collect();
    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for (i, &rho) in antichains.iter().enumerate() {
        for (j, &sigma) in antichains.iter().enumerate() {
            let (dr, ds) = (info[i].0, info[j].0);
            if dr == ds || !dr.is_subset(ds) {
                continue;
            }
            pairs_checked += 1;
            let reduced = hyper_antichain_height(&s.label_of(p.maximal(rho)));
            if reduced >= info[j].1 {
                let isolated_only = sigma
                    .iter()
                    .filter(|&x| !p.down(x).is_subset(dr))
                    .all(|x| s.labels[x].is_zero());
                violations.push(MonotonicityViolation { rho: p.names(rho), sigma: p.names(sigma), isolated_only });
            }
        }
    }
    Ok(MonotonicityReport { pairs_checked, violations })
}

/// Splits at top-level commas, respecting `()`, `{}`, `[]` and quotes.
fn split_top(s: &str) -> Result<Vec<&str>, SpaceError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut quoted = false;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '(' | '{' | '[' if !quoted => depth += 1,
            ')' | '}' | ']' if !quoted => {
                depth -= 1;
                if depth < 0 {
                    return Err(SpaceError::Syntax(format!("unbalanced '{c}' at {i}")));
                }
            }
            ',' if depth == 0 && !quoted => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 || quoted {
        return Err(SpaceError::Syntax("unbalanced brackets".into()));
    }
    out.push(s[start..].trim());
    Ok(out)
}

impl std::str::FromStr for SpaceTerm {
    type Err = SpaceError;

    /// `ord(<ordinal>)`, `sum(t1,t2,...)`, `prod(t1,t2)` or
    /// `skel(<poset-json>, {elem: ordinal, ...})`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| SpaceError::Syntax(format!("expected '(' in '{s}'")))?;
        if !s.ends_with(')') {
            return Err(SpaceError::Syntax(format!("expected ')' at end of '{s}'")));
        }
        let head = s[..open].trim();
        let body = &s[open + 1..s.len() - 1];
        let args = split_top(body)?;
        match head {
            "ord" => match args.as_slice() {
                [a] => Ok(SpaceTerm::Ord(a.parse()?)),
                _ => Err(SpaceError::Syntax("ord takes one ordinal".into())),
            },
            "sum" => {
                if args.iter().any(|a| a.is_empty()) {
                    return Err(SpaceError::Syntax("sum needs nonempty parts".into()));
                }
                Ok(SpaceTerm::Sum(args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?))
            }
            "prod" => match args.as_slice() {
                [a, b] => Ok(SpaceTerm::Prod(Box::new(a.parse()?), Box::new(b.parse()?))),
                _ => Err(SpaceError::Syntax("prod takes two terms".into())),
            },
            "skel" => match args.as_slice() {
                [json, labels] => {
                    let poset = Poset::from_json(json)?;
                    Ok(SpaceTerm::Skeleton(Skeleton::from_named(poset, &parse_label_map(labels)?)?))
                }
                _ => Err(SpaceError::Syntax("skel takes a poset and a label map".into())),
            },
            other => Err(SpaceError::Syntax(format!("unknown term '{other}'"))),
        }
    }
}

/// Parses `{a: w+1, "b": 3}`.
pub fn parse_label_map(s: &str) -> Result<HashMap<String, Ordinal>, SpaceError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| SpaceError::Syntax("label map must be braced".into()))?;
    let mut out = HashMap::new();
    for entry in split_top(inner)?.into_iter().filter(|e| !e.is_empty()) {
        let (k, v) = entry
            .split_once(':')
            .ok_or_else(|| SpaceError::Syntax(format!("expected 'name: ordinal' in '{entry}'")))?;
        let k = k.trim().trim_matches('"').to_string();
        if out.insert(k.clone(), v.parse()?).is_some() {
            return Err(SpaceError::Syntax(format!("duplicate label for '{k}'")));
        }
    }
    Ok(out)
}
