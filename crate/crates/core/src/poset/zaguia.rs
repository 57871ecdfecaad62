use std::collections::HashMap;

use serde::Serialize;

use super::{DownSet, ElemSet, Poset, PosetError};
use crate::ordinal::Ordinal;

/// Two downsets violating one of the checked inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZaguiaWitness {
    pub check: String,
    pub first: Vec<String>,
    pub second: Vec<String>,
}

/// Outcome of [`zaguia_verify`].
///
/// The primary flags measure downsets by their rank in the lattice of all
/// downsets, empty set included. The `literal_*` flags repeat the two
/// decomposition inequalities with ranks taken among nonempty downsets only;
/// those fail as soon as two incomparable elements exist, and their witness
/// is kept separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZaguiaReport {
    pub elements: usize,
    pub downsets: usize,
    pub poset_rank: usize,
    /// Rank of the order of nonempty downsets.
    pub kw_rank: usize,
    pub monotonicity: bool,
    pub claim1: bool,
    pub claim2: bool,
    pub claim3: bool,
    pub thm34: bool,
    pub witness: Option<ZaguiaWitness>,
    pub literal_claim1: bool,
    pub literal_claim2: bool,
    pub literal_witness: Option<ZaguiaWitness>,
}

impl ZaguiaReport {
    pub fn pass(&self) -> bool {
        self.monotonicity && self.claim1 && self.claim2 && self.claim3 && self.thm34
    }
}

pub fn zaguia_verify(p: &Poset, bound: usize) -> Result<ZaguiaReport, PosetError> {
    let kw = p.kw_rank(bound)?;
    let all = p.downsets(bound)?;
    let nonempty: Vec<DownSet> = all.iter().copied().filter(|s| !s.is_empty()).collect();
    let ranks = p.ranks();

    let witness = |check: &str, a: ElemSet, b: ElemSet| ZaguiaWitness {
        check: check.to_string(),
        first: p.names(a),
        second: p.names(b),
    };
    let mut first_failure: Option<ZaguiaWitness> = None;
    let mut literal_failure: Option<ZaguiaWitness> = None;

    // Rank in the lattice of all downsets, by the same lower-cover recursion.
    let mut is_rank: HashMap<DownSet, u64> = HashMap::with_capacity(all.len());
    for &s in &all {
        let r = p
            .maximal(s)
            .iter()
            .map(|m| is_rank[&s.difference(ElemSet::singleton(m))] + 1)
            .max()
            .unwrap_or(0);
        is_rank.insert(s, r);
    }
    // Largest rank of a proper sub-downset of each downset.
    let max_below: HashMap<DownSet, Option<u64>> = all
        .iter()
        .map(|&s| {
            let m = p.maximal(s).iter().map(|m| is_rank[&s.difference(ElemSet::singleton(m))]).max();
            (s, m)
        })
        .collect();

    let mut monotonicity = true;
    for &i in &nonempty {
        for &j in &nonempty {
            if i != j && i.is_subset(j) && kw[&i] >= kw[&j] {
                monotonicity = false;
                first_failure.get_or_insert_with(|| witness("monotonicity", i, j));
            }
        }
    }

    let mut claim1 = true;
    let mut literal_claim1 = true;
    for (x, &a) in nonempty.iter().enumerate() {
        for &b in &nonempty[x..] {
            let u = a.union(b);
            let bound = is_rank[&a] + is_rank[&b];
            let strict = max_below[&u].is_none_or(|m| m < bound);
            if !strict || is_rank[&u] > bound {
                claim1 = false;
                first_failure.get_or_insert_with(|| witness("claim1", a, b));
            }
            if kw[&u] > kw[&a] + kw[&b] {
                literal_claim1 = false;
                literal_failure.get_or_insert_with(|| witness("literal_claim1", a, b));
            }
        }
    }

    let mut claim2 = true;
    let mut literal_claim2 = true;
    for &i in &nonempty {
        let tops = p.maximal(i);
        let sum = tops
            .iter()
            .fold(Ordinal::zero(), |acc, m| acc.nat_sum(&Ordinal::from(is_rank[&p.down(m)])));
        if Ordinal::from(is_rank[&i]) > sum {
            claim2 = false;
            first_failure.get_or_insert_with(|| witness("claim2", i, tops));
        }
        let literal = tops.iter().fold(Ordinal::zero(), |acc, m| acc.nat_sum(&Ordinal::from(kw[&p.down(m)] as u64)));
        if Ordinal::from(kw[&i] as u64) > literal {
            literal_claim2 = false;
            literal_failure.get_or_insert_with(|| witness("literal_claim2", i, tops));
        }
    }

    let mut claim3 = true;
    for x in 0..p.len() {
        let r = Ordinal::from(kw[&p.down(x)] as u64);
        let rp = ranks.elem_rank[x] as u64;
        let ok = if rp == 0 { r.is_zero() } else { r < Ordinal::omega().pow(&Ordinal::from(rp)) };
        if !ok {
            claim3 = false;
            first_failure.get_or_insert_with(|| witness("claim3", p.down(x), ElemSet::singleton(x)));
        }
    }

    let kw_rank = kw.values().map(|r| r + 1).max().unwrap_or(0);
    let thm34 = Ordinal::from(kw_rank as u64) <= Ordinal::omega().pow(&Ordinal::from(ranks.poset_rank as u64));
    if !thm34 {
        first_failure.get_or_insert_with(|| witness("thm34", p.all(), ElemSet::EMPTY));
    }

    Ok(ZaguiaReport {
        elements: p.len(),
        downsets: all.len(),
        poset_rank: ranks.poset_rank,
        kw_rank,
        monotonicity,
        claim1,
        claim2,
        claim3,
        thm34,
        witness: first_failure,
        literal_claim1,
        literal_claim2,
        literal_witness: literal_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::DEFAULT_BOUND;

    #[test]
    fn chain_passes_both_readings() {
        let r = zaguia_verify(&Poset::chain(4), DEFAULT_BOUND).unwrap();
        assert!(r.pass());
        assert!(r.witness.is_none());
        assert!(r.literal_claim1 && r.literal_claim2);
        assert_eq!(r.kw_rank, 4);
    }

    #[test]
    fn antichain_separates_the_readings() {
        let r = zaguia_verify(&Poset::antichain(4), DEFAULT_BOUND).unwrap();
        assert!(r.pass());
        assert!(!r.literal_claim1);
        assert!(!r.literal_claim2);
        let w = r.literal_witness.unwrap();
        assert_eq!(w.check, "literal_claim1");
        assert_eq!(w.first.len() + w.second.len(), 2);
    }
}
