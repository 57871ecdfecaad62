//! Ordinary and natural operations on ordinals in Cantor normal form.

use skula::{NatOrOmega, Ordinal};

fn main() {
    let a: Ordinal = "w^(w+w)*8 + w^7*3".parse().unwrap();
    let b: Ordinal = "w^w + w^7 + w^2 + 5".parse().unwrap();
    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {}", &a + &b);
    println!("a (+) b = {}", a.nat_sum(&b));

    let w = Ordinal::omega();
    let two = Ordinal::from(2);
    println!("w (x) 2 = {}, 2 (x) w = {}", w.nat_prod(&two), two.nat_prod(&w));
    println!("w * 2   = {}, 2 * w   = {}", &w * &two, &two * &w);
    println!("w (.) 2 = {}, 2 (.) w = {}", w.odot(&NatOrOmega::finite(2)), two.odot(&NatOrOmega::Omega));

    let c: Ordinal = "w^w*2 + w^7 + w^3*5".parse().unwrap();
    let t = c.tip_deg().unwrap();
    println!("tip({c}) = {}, deg = {}", t.tip, t.degree);
}
