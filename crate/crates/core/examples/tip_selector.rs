//! Canonical clopen neighbourhoods in an ordinal space.

use skula::clopen::{tip_selector, treelike_check};
use skula::Ordinal;

fn main() {
    let ambient: Ordinal = "w^2*3".parse().unwrap();
    let betas: Vec<Ordinal> = ["5", "w", "w*3", "w*3 + 2", "w^2", "w^2*2 + w*4", "w^2*3"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for b in &betas {
        let u = tip_selector(b, &ambient).unwrap();
        let cb = u.cb().unwrap();
        println!("{b:>12}: {u}  height {}", cb.height);
    }
    let r = treelike_check(&ambient, &betas).unwrap();
    println!("tree-like: {}", r.pass());
}
