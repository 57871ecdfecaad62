//! Heights of hyperspace points over antichains of labelled points.

use skula::space::{hyper_antichain_height, hyper_point_height, thm36_check, Skeleton};
use skula::Ordinal;

fn main() {
    for r in ["0", "1", "2", "3", "10", "w", "w+7"] {
        let r: Ordinal = r.parse().unwrap();
        println!("point of height {r:>5} -> {}", hyper_point_height(&r));
    }
    let labels: Vec<Ordinal> = ["0", "1", "1", "2", "10", "10", "w+7", "3"].iter().map(|s| s.parse().unwrap()).collect();
    println!("antichain height: {}", hyper_antichain_height(&labels));

    let r = thm36_check(&Skeleton::antichain(labels).unwrap());
    println!("{} antichains, max {} below {} ({})", r.antichains, r.max_height, r.bound, r.pass);
}
