//! Clopen subsets of an ordinal space `[0, α]`.
//!
//! A clopen set is a finite union of half-open intervals `(s, t]`, plus
//! possibly the point `0`. After normalization the intervals are strictly
//! increasing and non-adjacent, so equal sets have equal representations.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ordinal::{Ordinal, ParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClopenError {
    #[error("ambients differ: {0} and {1}")]
    AmbientMismatch(String, String),
    #[error("{0} lies outside [0, {1}]")]
    OutOfRange(String, String),
    #[error("interval ({0}, {1}] is empty")]
    EmptyInterval(String, String),
    #[error("the clopen set is empty")]
    Empty,
    #[error("no grid candidate has {0} as its only end-point")]
    NoCandidate(String),
    #[error("clopen syntax: {0}")]
    Syntax(String),
    #[error("ordinal syntax: {0}")]
    Ordinal(#[from] ParseError),
}

/// A clopen subset of `[0, ambient]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClopenSet {
    zero: bool,
    intervals: Vec<(Ordinal, Ordinal)>,
    ambient: Ordinal,
}

#[derive(Serialize, Deserialize)]
struct ClopenJson {
    zero: bool,
    intervals: Vec<(String, String)>,
    ambient: String,
}

/// Cantor-Bendixson data of a nonempty clopen set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CbData {
    pub height: Ordinal,
    pub endpoints: Vec<Ordinal>,
    pub unitary: bool,
    pub lastpt: Option<Ordinal>,
}

impl ClopenSet {
    pub fn empty(ambient: Ordinal) -> Self {
        ClopenSet { zero: false, intervals: Vec::new(), ambient }
    }

    pub fn full(ambient: Ordinal) -> Self {
        let intervals = if ambient.is_zero() { Vec::new() } else { vec![(Ordinal::zero(), ambient.clone())] };
        ClopenSet { zero: true, intervals, ambient }
    }

    /// `{0}`.
    pub fn zero_point(ambient: Ordinal) -> Self {
        ClopenSet { zero: true, intervals: Vec::new(), ambient }
    }

    /// Normalizes an arbitrary list of intervals.
    pub fn new(zero: bool, intervals: Vec<(Ordinal, Ordinal)>, ambient: Ordinal) -> Result<Self, ClopenError> {
        for (s, t) in &intervals {
            if s >= t {
                return Err(ClopenError::EmptyInterval(s.to_string(), t.to_string()));
            }
            if *t > ambient {
                return Err(ClopenError::OutOfRange(t.to_string(), ambient.to_string()));
            }
        }
        Ok(ClopenSet::normalized(zero, intervals, ambient))
    }

    fn normalized(zero: bool, mut intervals: Vec<(Ordinal, Ordinal)>, ambient: Ordinal) -> Self {
        intervals.sort();
        let mut out: Vec<(Ordinal, Ordinal)> = Vec::with_capacity(intervals.len());
        for (s, t) in intervals {
            match out.last_mut() {
                Some(last) if s <= last.1 => {
                    if t > last.1 {
                        last.1 = t;
                    }
                }
                _ => out.push((s, t)),
            }
        }
        ClopenSet { zero, intervals: out, ambient }
    }

    /// `(s, t]` in `[0, ambient]`.
    pub fn interval(s: Ordinal, t: Ordinal, ambient: Ordinal) -> Result<Self, ClopenError> {
        ClopenSet::new(false, vec![(s, t)], ambient)
    }

    pub fn zero_included(&self) -> bool {
        self.zero
    }

    pub fn intervals(&self) -> &[(Ordinal, Ordinal)] {
        &self.intervals
    }

    pub fn ambient(&self) -> &Ordinal {
        &self.ambient
    }

    pub fn is_empty(&self) -> bool {
        !self.zero && self.intervals.is_empty()
    }

    /// Number of `(s, t]` pieces.
    pub fn pieces(&self) -> usize {
        self.intervals.len()
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        if x.is_zero() {
            return self.zero;
        }
        self.intervals.iter().any(|(s, t)| s < x && x <= t)
    }

    fn same_ambient(&self, other: &ClopenSet) -> Result<(), ClopenError> {
        if self.ambient != other.ambient {
            return Err(ClopenError::AmbientMismatch(self.ambient.to_string(), other.ambient.to_string()));
        }
        Ok(())
    }

    pub fn union(&self, other: &ClopenSet) -> Result<ClopenSet, ClopenError> {
        self.same_ambient(other)?;
        let all = self.intervals.iter().chain(&other.intervals).cloned().collect();
        Ok(ClopenSet::normalized(self.zero || other.zero, all, self.ambient.clone()))
    }

    pub fn intersect(&self, other: &ClopenSet) -> Result<ClopenSet, ClopenError> {
        self.same_ambient(other)?;
        let mut out = Vec::new();
        for (s1, t1) in &self.intervals {
            for (s2, t2) in &other.intervals {
                let s = s1.max(s2);
                let t = t1.min(t2);
                if s < t {
                    out.push((s.clone(), t.clone()));
                }
            }
        }
        Ok(ClopenSet::normalized(self.zero && other.zero, out, self.ambient.clone()))
    }

    pub fn complement(&self) -> ClopenSet {
        let mut out = Vec::new();
        let mut cursor = Ordinal::zero();
        for (s, t) in &self.intervals {
            if cursor < *s {
                out.push((cursor.clone(), s.clone()));
            }
            cursor = t.clone();
        }
        if cursor < self.ambient {
            out.push((cursor, self.ambient.clone()));
        }
        ClopenSet { zero: !self.zero, intervals: out, ambient: self.ambient.clone() }
    }

    pub fn difference(&self, other: &ClopenSet) -> Result<ClopenSet, ClopenError> {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &ClopenSet) -> Result<bool, ClopenError> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Height, end-points and last point.
    pub fn cb(&self) -> Result<CbData, ClopenError> {
        if self.is_empty() {
            return Err(ClopenError::Empty);
        }
        let mut best: Option<(Ordinal, Vec<Ordinal>)> = if self.zero {
            Some((Ordinal::zero(), vec![Ordinal::zero()]))
        } else {
            None
        };
        for (s, t) in &self.intervals {
            let (e, pts) = interval_top_points(s, t);
            match &mut best {
                Some((h, v)) if *h == e => v.extend(pts),
                Some((h, _)) if *h > e => {}
                _ => best = Some((e, pts)),
            }
        }
        let (height, endpoints) = best.expect("nonempty");
        let unitary = endpoints.len() == 1;
        let lastpt = if unitary { Some(endpoints[0].clone()) } else { None };
        Ok(CbData { height, endpoints, unitary, lastpt })
    }

    pub fn to_json(&self) -> String {
        let raw = ClopenJson {
            zero: self.zero,
            intervals: self.intervals.iter().map(|(s, t)| (s.to_string(), t.to_string())).collect(),
            ambient: self.ambient.to_string(),
        };
        serde_json::to_string(&raw).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, ClopenError> {
        let raw: ClopenJson = serde_json::from_str(text).map_err(|e| ClopenError::Syntax(e.to_string()))?;
        let intervals = raw
            .intervals
            .iter()
            .map(|(s, t)| Ok((s.parse()?, t.parse()?)))
            .collect::<Result<Vec<_>, ClopenError>>()?;
        ClopenSet::new(raw.zero, intervals, raw.ambient.parse()?)
    }
}

/// Maximal point rank inside `(s, t]` and the points attaining it.
///
/// With `P` the common prefix of the normal forms and `ω^e·c` the first
/// block of `t` after it, the maximizers are `P + ω^e·m` for `m0 < m ≤ c`,
/// where `m0` is the coefficient of `ω^e` in `s` after `P` (or `0`).
fn interval_top_points(s: &Ordinal, t: &Ordinal) -> (Ordinal, Vec<Ordinal>) {
    let (st, tt) = (s.terms(), t.terms());
    let i = st.iter().zip(tt).take_while(|(a, b)| a == b).count();
    let block = &tt[i];
    let e = block.exponent.clone();
    let m0 = match st.get(i) {
        Some(b) if b.exponent == e => b.coefficient.clone(),
        _ => BigUint::from(0u32),
    };
    let prefix = t.truncate(i);
    let mut pts = Vec::new();
    let mut m = m0 + BigUint::one();
    while m <= block.coefficient {
        pts.push(&prefix + &Ordinal::monomial(e.clone(), m.clone()));
        m += 1u32;
    }
    (e, pts)
}

/// Wrapper for [`ClopenSet::cb`].
pub fn clopen_cb(u: &ClopenSet) -> Result<CbData, ClopenError> {
    u.cb()
}

/// `U_β = (β − tip(β), β]`, and `{0}` for `β = 0`.
pub fn tip_selector(beta: &Ordinal, ambient: &Ordinal) -> Result<ClopenSet, ClopenError> {
    if beta > ambient {
        return Err(ClopenError::OutOfRange(beta.to_string(), ambient.to_string()));
    }
    if beta.is_zero() {
        return Ok(ClopenSet::zero_point(ambient.clone()));
    }
    let terms = beta.terms();
    let k = terms.len() - 1;
    let last = &terms[k];
    let lower = &beta.truncate(k) + &Ordinal::monomial(last.exponent.clone(), &last.coefficient - 1u32);
    ClopenSet::interval(lower, beta.clone(), ambient.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreelikeReport {
    pub points: usize,
    pub laminar: bool,
    pub heights_increase: bool,
    pub witness: Option<(Ordinal, Ordinal)>,
}

impl TreelikeReport {
    pub fn pass(&self) -> bool {
        self.laminar && self.heights_increase
    }
}

/// Checks that tip-selector sets are pairwise nested or disjoint and that
/// heights strictly increase along proper nesting.
pub fn treelike_check(ambient: &Ordinal, points: &[Ordinal]) -> Result<TreelikeReport, ClopenError> {
    let sets = points.iter().map(|b| tip_selector(b, ambient)).collect::<Result<Vec<_>, _>>()?;
    let heights = sets.iter().map(|u| u.cb().map(|c| c.height)).collect::<Result<Vec<_>, _>>()?;
    let mut laminar = true;
    let mut heights_increase = true;
    let mut witness = None;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let meet = sets[i].intersect(&sets[j])?;
            let nested_or_disjoint = meet.is_empty() || meet == sets[i] || meet == sets[j];
            if !nested_or_disjoint {
                laminar = false;
                witness.get_or_insert((points[i].clone(), points[j].clone()));
                continue;
            }
            if sets[i] == sets[j] {
                continue;
            }
            let bad = (meet == sets[i] && heights[i] >= heights[j]) || (meet == sets[j] && heights[j] >= heights[i]);
            if bad {
                heights_increase = false;
                witness.get_or_insert((points[i].clone(), points[j].clone()));
            }
        }
    }
    Ok(TreelikeReport { points: points.len(), laminar, heights_increase, witness })
}

/// `0`, every prefix of `β`'s normal form, and for each block `ω^e·p` the
/// points `prefix + ω^e·(p−1)` and `prefix + ω^e·p`.
pub fn truncation_grid(beta: &Ordinal) -> Vec<Ordinal> {
    let mut grid = vec![Ordinal::zero()];
    for (k, term) in beta.terms().iter().enumerate() {
        let prefix = beta.truncate(k);
        grid.push(prefix.clone());
        grid.push(&prefix + &Ordinal::monomial(term.exponent.clone(), &term.coefficient - 1u32));
        grid.push(&prefix + &Ordinal::monomial(term.exponent.clone(), term.coefficient.clone()));
    }
    grid.push(beta.clone());
    grid.sort();
    grid.dedup();
    grid
}

/// Among clopen sets whose interval end-points come from `grid` and whose
/// only end-point is `β`, the one with fewest pieces, least in the
/// lexicographic order of its end-point sequence.
pub fn min_clopen_with_endpoint(beta: &Ordinal, ambient: &Ordinal, grid: &[Ordinal]) -> Result<ClopenSet, ClopenError> {
    if beta > ambient {
        return Err(ClopenError::OutOfRange(beta.to_string(), ambient.to_string()));
    }
    if beta.is_zero() {
        return Ok(ClopenSet::zero_point(ambient.clone()));
    }
    let mut g: Vec<Ordinal> = grid.iter().filter(|x| *x <= ambient).cloned().collect();
    g.sort();
    g.dedup();
    let target = vec![beta.clone()];
    for pieces in 1..=g.len() / 2 {
        let mut found = None;
        let mut idx = Vec::with_capacity(2 * pieces);
        search(&g, 2 * pieces, 0, &mut idx, &mut |seq: &[usize]| {
            let intervals = seq.chunks(2).map(|c| (g[c[0]].clone(), g[c[1]].clone())).collect();
            let u = ClopenSet { zero: false, intervals, ambient: ambient.clone() };
            match u.cb() {
                Ok(cb) if cb.endpoints == target => {
                    found = Some(u);
                    true
                }
                _ => false,
            }
        });
        if let Some(u) = found {
            return Ok(u);
        }
    }
    Err(ClopenError::NoCandidate(beta.to_string()))
}

/// Strictly increasing index sequences of length `len`, in lexicographic
/// order; stops once `visit` returns true.
fn search(g: &[Ordinal], len: usize, from: usize, idx: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if idx.len() == len {
        return visit(idx);
    }
    let remaining = len - idx.len();
    for i in from..g.len() {
        if g.len() - i < remaining {
            break;
        }
        idx.push(i);
        let stop = search(g, len, i + 1, idx, visit);
        idx.pop();
        if stop {
            return true;
        }
    }
    false
}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.zero {
            parts.push("{0}".to_string());
        }
        for (s, t) in &self.intervals {
            parts.push(format!("({s},{t}]"));
        }
        parts.push(format!("@ {}", self.ambient));
        f.write_str(&parts.join(" "))
    }
}

impl std::str::FromStr for ClopenSet {
    type Err = ClopenError;

    /// `{0}? (s1,t1] (s2,t2] ... @ alpha`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (body, ambient) =
            text.rsplit_once('@').ok_or_else(|| ClopenError::Syntax("missing '@ ambient'".into()))?;
        let ambient: Ordinal = ambient.trim().parse()?;
        let mut rest = body.trim_start();
        let mut zero = false;
        if let Some(r) = rest.strip_prefix("{0}") {
            zero = true;
            rest = r.trim_start();
        }
        let mut intervals = Vec::new();
        while !rest.is_empty() {
            let r = rest
                .strip_prefix('(')
                .ok_or_else(|| ClopenError::Syntax(format!("expected '(' at '{rest}'")))?;
            let (s, r) = r.split_once(',').ok_or_else(|| ClopenError::Syntax("expected ','".into()))?;
            let (t, r) = r.split_once(']').ok_or_else(|| ClopenError::Syntax("expected ']'".into()))?;
            intervals.push((s.trim().parse()?, t.trim().parse()?));
            rest = r.trim_start();
        }
        ClopenSet::new(zero, intervals, ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn algebra_basics() {
        let a = o("w*3");
        assert_eq!(ClopenSet::empty(a.clone()).complement(), ClopenSet::full(a.clone()));
        let u = ClopenSet::interval(o("0"), o("w"), a.clone()).unwrap();
        let v = ClopenSet::interval(o("w"), o("w*2"), a.clone()).unwrap();
        let joined = u.union(&v).unwrap();
        assert_eq!(joined.intervals(), &[(o("0"), o("w*2"))]);
        assert_eq!(joined.complement().to_string(), "{0} (w*2,w*3] @ w*3");
        assert!(u.intersect(&v).unwrap().is_empty());
        let other = ClopenSet::empty(o("w"));
        assert!(matches!(u.union(&other), Err(ClopenError::AmbientMismatch(..))));
        assert!(ClopenSet::interval(o("w"), o("w"), a.clone()).is_err());
        assert!(ClopenSet::interval(o("0"), o("w*4"), a).is_err());
    }

    #[test]
    fn cb_examples() {
        let a = o("w^3");
        let u = ClopenSet::interval(o("0"), o("w^2*2"), a.clone()).unwrap();
        let cb = u.cb().unwrap();
        assert_eq!(cb.height, o("2"));
        assert_eq!(cb.endpoints, vec![o("w^2"), o("w^2*2")]);
        assert!(!cb.unitary);
        let cb = ClopenSet::zero_point(a.clone()).cb().unwrap();
        assert_eq!((cb.height, cb.lastpt), (o("0"), Some(o("0"))));
        let cb = ClopenSet::interval(o("w^2+w*3"), o("w^2*2"), a.clone()).unwrap().cb().unwrap();
        assert_eq!(cb.lastpt, Some(o("w^2*2")));
        let cb = ClopenSet::interval(o("w*2+7"), o("w*5+1"), a).unwrap().cb().unwrap();
        assert_eq!(cb.endpoints, vec![o("w*3"), o("w*4"), o("w*5")]);
        assert!(ClopenSet::empty(o("w")).cb().is_err());
    }

    #[test]
    fn tip_selector_examples() {
        let a = o("w^w");
        assert_eq!(tip_selector(&o("w+5"), &a).unwrap().intervals(), &[(o("w+4"), o("w+5"))]);
        assert_eq!(tip_selector(&o("w^2"), &a).unwrap().intervals(), &[(o("0"), o("w^2"))]);
        let u = tip_selector(&o("w*3"), &a).unwrap();
        assert_eq!(u.intervals(), &[(o("w*2"), o("w*3"))]);
        let cb = u.cb().unwrap();
        assert_eq!((cb.height, cb.lastpt), (o("1"), Some(o("w*3"))));
        assert!(tip_selector(&o("w^w+1"), &a).is_err());
        let literal = ClopenSet::interval(o("1"), o("w+5"), a).unwrap().cb().unwrap();
        assert_eq!(literal.endpoints, vec![o("w")]);
    }

    #[test]
    fn treelike_examples() {
        let a = o("w^w");
        let r = treelike_check(&a, &[o("w*2"), o("w+3"), o("w*2+1")]).unwrap();
        assert!(r.pass());
        assert!(treelike_check(&a, &[o("w")]).unwrap().pass());
    }

    #[test]
    fn minimal_clopen_search() {
        let a = o("w^w");
        let u = min_clopen_with_endpoint(&o("w"), &a, &[o("0"), o("1"), o("w"), o("w+1")]).unwrap();
        assert_eq!(u.intervals(), &[(o("0"), o("w"))]);
        let u = min_clopen_with_endpoint(&o("5"), &a, &truncation_grid(&o("5"))).unwrap();
        assert_eq!(u.intervals(), &[(o("4"), o("5"))]);
        let beta = o("w^2+w");
        let u = min_clopen_with_endpoint(&beta, &a, &truncation_grid(&beta)).unwrap();
        assert_eq!(u, tip_selector(&beta, &a).unwrap());
        assert!(min_clopen_with_endpoint(&o("w*2"), &a, &[o("0"), o("w*2")]).is_err());
    }

    #[test]
    fn text_and_json_forms() {
        let u: ClopenSet = "{0} (w,w*2] (w+5, w^2] @ w^2".parse().unwrap();
        assert_eq!(u.to_string(), "{0} (w,w^2] @ w^2");
        assert_eq!(ClopenSet::from_json(&u.to_json()).unwrap(), u);
        let e: ClopenSet = "@ w".parse().unwrap();
        assert!(e.is_empty());
        assert!("(1,2 @ w".parse::<ClopenSet>().is_err());
    }
}
