//! Joins in the semilattice built from an almost disjoint family.

use std::collections::BTreeSet;

use skula::mrowka::{convergence_check, g_join, mrowka_selector_check, star_truncation, GPoint};
use skula::selftest::sample_family;

fn main() {
    let fam = sample_family();
    println!("{}", fam.to_json());
    let pts = [
        GPoint::FinPt(BTreeSet::from([2, 4])),
        GPoint::FinPt(BTreeSet::from([1, 2])),
        GPoint::Branch(0),
        GPoint::Branch(1),
    ];
    for x in &pts {
        for y in &pts {
            println!("{x:?} v {y:?} = {:?}", g_join(x, y, &fam));
        }
    }
    let (codes, star) = star_truncation(&fam, 64, &[]).unwrap();
    println!("codes below 2^64: {:?}", codes.iter().map(|c| c.count()).collect::<Vec<_>>());
    println!("star: {}", star.pass());
    let c = convergence_check(&fam, 0, 2, 64).unwrap();
    println!("branches 0 and 2 join to the top from n = {}", c.threshold);
    println!("selector: {}", mrowka_selector_check(&fam, 32).unwrap().pass());
}
