//! Heights and endpoint counts of ordinal spaces and their products.

use skula::space::{thm31_check, SpaceTerm};

fn main() {
    for t in ["ord(w+5)", "ord(w^3*4 + w)", "prod(ord(w), ord(w^2*3))", "prod(ord(w^w), ord(w^3))", "sum(ord(w*2), ord(3))"] {
        let term: SpaceTerm = t.parse().unwrap();
        let r = term.report();
        println!("{t}: height {}, {} endpoints", r.height, r.endpoint_count);
    }
    let r = thm31_check(&"ord(w^2*3 + 1)".parse().unwrap()).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
