//! A few stages of the Lusin-style extension of an almost disjoint family.

use skula::mrowka::{lusin_iterate, residue_family, LusinSet};

fn main() {
    let initial = residue_family(4).into_iter().map(LusinSet::Periodic).collect();
    let (fam, reports) = lusin_iterate(initial, 4).unwrap();
    for (s, r) in reports.iter().enumerate() {
        println!("stage {s}: counts {:?}, pass {}", r.counts, r.pass());
    }
    println!("{} sets in total", fam.len());
}
