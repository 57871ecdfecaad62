//! The hyperspace of a finite poset and its universal property.

use skula::hyperspace::{hat_extension, FinJoinSemilattice, Hyperspace};
use skula::poset::DEFAULT_BOUND;
use skula::Poset;

fn main() {
    let v = Poset::from_covers(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
    let h = Hyperspace::build(&v, DEFAULT_BOUND).unwrap();
    for i in 0..h.len() {
        println!("point {i}: {}", h.format_point(i));
    }
    println!("{}", serde_json::to_string_pretty(&h.verify()).unwrap());

    // Extend a monotone map into the three-element chain.
    let y = FinJoinSemilattice::from_order(Poset::chain(3)).unwrap();
    let f = [0, 1, 2];
    let (hat, report) = hat_extension(&h, &y, &f).unwrap();
    println!("extension {hat:?}, unique: {}", report.pass());
    println!("{}", h.to_dot());
}
