//! Finite sets are dense in the hyperspace of a convergent sequence.

use skula::hyperspace::{one_point_ranks, Descriptor, OnePointModel};

fn main() {
    let model = OnePointModel::default();
    let u: Descriptor = "cof:".parse().unwrap();
    let vs: Vec<Descriptor> = ["cof:0,1,2,5", "fin:7,9", "cof:3"].iter().map(|s| s.parse().unwrap()).collect();
    println!("{:?}", model.vietoris_density_witness(&u, &vs).unwrap());

    let r = one_point_ranks(6);
    println!("rank of the space {}, of its hyperspace {}, bound {}", r.rank_x, r.rank_hyperspace, r.bound);
    for (n, rank) in r.truncated {
        println!("antichain of {n} with a top: rank {rank}");
    }
}
