//! The fourteen acceptance checks, runnable from the command line.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::Rng;
use serde::Serialize;

use crate::clopen::{min_clopen_with_endpoint, tip_selector, treelike_check, truncation_grid};
use crate::gen::{self, OrdinalShape};
use crate::hyperspace::{hat_extension, Descriptor, DensityWitness, Hyperspace, OnePointModel};
use crate::mrowka::{
    convergence_check, g_join, lusin_iterate, mrowka_selector_check, residue_family, star_truncation, AdFamily,
    EvPeriodicSet, GPoint, LusinSet,
};
use crate::ordinal::{NatOrOmega, Ordinal};
use crate::poset::{labeled_posets, zaguia_verify, DEFAULT_BOUND};
use crate::space::{hyper_antichain_height, hyper_point_height, ord_space_maximizers, thm31_check, SpaceTerm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn(u64) -> Result<String, String>;

pub const CRITERIA: [(u8, &str, Check); 14] = [
    (1, "antichain height example", c01_example_height),
    (2, "natural sum example", c02_nat_sum),
    (3, "natural product examples", c03_products),
    (4, "tip examples", c04_tips),
    (5, "point height table and monotonicity", c05_point_heights),
    (6, "natural sum properties", c06_nat_sum_laws),
    (7, "downset rank bounds", c07_zaguia),
    (8, "hyperspace suite", c08_hyperspace),
    (9, "height rank bound chain", c09_bound_chain),
    (10, "product heights", c10_products),
    (11, "tip selector", c11_tip_selector),
    (12, "almost disjoint join suite", c12_mrowka),
    (13, "lusin stages", c13_lusin),
    (14, "vietoris density", c14_density),
];

fn o(s: &str) -> Ordinal {
    s.parse().expect("literal ordinal")
}

fn expect_eq(what: &str, got: impl std::fmt::Display, want: &str) -> Result<(), String> {
    let got = got.to_string();
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn within(what: &str, start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    if spent <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {spent:?}, limit {limit:?}"))
    }
}

fn c01_example_height(_: u64) -> Result<String, String> {
    let labels: Vec<Ordinal> = ["0", "1", "1", "2", "10", "10", "w+7", "3"].iter().map(|s| o(s)).collect();
    let start = Instant::now();
    let h = hyper_antichain_height(&labels);
    within("example height", start, Duration::from_millis(10))?;
    expect_eq("height", &h, "w^(w+7) + w^9*2 + w^2 + w + 2")?;
    Ok(h.to_string())
}

fn c02_nat_sum(_: u64) -> Result<String, String> {
    let s = o("w^(w+w)*8 + w^7*3").nat_sum(&o("w^w + w^7 + w^2 + 5"));
    expect_eq("sum", &s, "w^(w*2)*8 + w^w + w^7*4 + w^2 + 5")?;
    Ok(s.to_string())
}

fn c03_products(_: u64) -> Result<String, String> {
    let (w, two) = (Ordinal::omega(), Ordinal::from(2));
    expect_eq("w (x) 2", w.nat_prod(&two), "w*2")?;
    expect_eq("2 (x) w", two.nat_prod(&w), "w*2")?;
    expect_eq("w (.) 2", w.odot(&NatOrOmega::finite(2)), "w*2")?;
    expect_eq("2 (.) w", two.odot(&NatOrOmega::Omega), "w")?;
    Ok("w*2, w*2, w*2, w".into())
}

fn c04_tips(_: u64) -> Result<String, String> {
    let a = o("w^w*2 + w^7 + w^3*5").tip_deg().map_err(|e| e.to_string())?;
    let b = o("w+5").tip_deg().map_err(|e| e.to_string())?;
    expect_eq("tip", &a.tip, "w^3")?;
    expect_eq("tip", &b.tip, "1")?;
    Ok(format!("{}, {}", a.tip, b.tip))
}

fn c05_point_heights(seed: u64) -> Result<String, String> {
    let table = [("0", "0"), ("1", "1"), ("2", "w"), ("3", "w^2"), ("10", "w^9"), ("w", "w^w"), ("w+7", "w^(w+7)")];
    for (r, h) in table {
        expect_eq(&format!("height at {r}"), hyper_point_height(&o(r)), h)?;
    }
    let mut rng = gen::rng(seed);
    let shape = OrdinalShape::default();
    let mut pairs = 0;
    while pairs < 1000 {
        let (a, b) = (gen::nonzero_ordinal(&mut rng, &shape), gen::nonzero_ordinal(&mut rng, &shape));
        if a == b {
            continue;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hyper_point_height(&lo) >= hyper_point_height(&hi) {
            return Err(format!("not strictly increasing at {lo} < {hi}"));
        }
        pairs += 1;
    }
    Ok(format!("table exact, {pairs} pairs increasing"))
}

fn c06_nat_sum_laws(seed: u64) -> Result<String, String> {
    let start = Instant::now();
    let mut rng = gen::rng(seed);
    let shape = OrdinalShape::default();
    for _ in 0..10_000 {
        let a = gen::ordinal(&mut rng, &shape);
        let b = gen::ordinal(&mut rng, &shape);
        let c = gen::ordinal(&mut rng, &shape);
        let fail = |law: &str| Err(format!("{law} fails at ({a}, {b}, {c})"));
        let ab = a.nat_sum(&b);
        if ab != b.nat_sum(&a) {
            return fail("commutativity");
        }
        if ab.nat_sum(&c) != a.nat_sum(&b.nat_sum(&c)) {
            return fail("associativity");
        }
        if a.nat_sum(&Ordinal::zero()) != a {
            return fail("zero identity");
        }
        if (b < c) != (a.nat_sum(&b) < a.nat_sum(&c)) {
            return fail("cancellative order");
        }
        if b < c && b.nat_sum(&a) >= c.nat_sum(&a) {
            return fail("monotonicity in the left argument");
        }
        let delta = a.degree().max(b.degree()).succ();
        if a.nat_sum(&b) >= Ordinal::omega_pow(delta) {
            return fail("closure below a power of omega");
        }
        if c < ab {
            match c.nat_sum_split(&a, &b) {
                Some((x, y)) if x <= a && y <= b && x.nat_sum(&y) == c => {}
                _ => return fail("decomposition"),
            }
        }
    }
    within("natural sum laws", start, Duration::from_secs(5))?;
    Ok("10000 triples".into())
}

fn c07_zaguia(seed: u64) -> Result<String, String> {
    let start = Instant::now();
    let mut checked = 0;
    let mut rng = gen::rng(seed);
    let exhaustive = (0..=4).flat_map(labeled_posets);
    let random = (0..1000).map(|_| {
        let n = rng.gen_range(6..=8);
        let p = rng.gen_range(0.1..0.6);
        gen::poset(&mut rng, n, p)
    });
    for p in exhaustive.chain(random.collect::<Vec<_>>()) {
        if p.is_empty() {
            continue;
        }
        let r = zaguia_verify(&p, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        if !r.pass() {
            return Err(format!("fails on {}: {:?}", p.to_json(), r.witness));
        }
        checked += 1;
    }
    within("rank bounds", start, Duration::from_secs(30))?;
    Ok(format!("{checked} posets"))
}

fn c08_hyperspace(seed: u64) -> Result<String, String> {
    let mut rng = gen::rng(seed);
    let mut checked = 0;
    for n in 1..=5 {
        for p in labeled_posets(n) {
            let h = Hyperspace::build(&p, DEFAULT_BOUND).map_err(|e| e.to_string())?;
            let r = h.verify();
            if !r.pass() {
                return Err(format!("hyperspace of {} fails: {r:?}", p.to_json()));
            }
            let y = gen::semilattice(&mut rng, 3);
            let f = gen::increasing_map(&mut rng, &p, &y);
            let (_, hat) = hat_extension(&h, &y, &f).map_err(|e| e.to_string())?;
            if !hat.pass() || hat.uniqueness_method != "exhaustive" {
                return Err(format!("extension over {} fails: {hat:?}", p.to_json()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} posets"))
}

fn c09_bound_chain(seed: u64) -> Result<String, String> {
    let mut rng = gen::rng(seed);
    for _ in 0..1000 {
        let a = gen::below_omega_omega_times(&mut rng, 10);
        let r = thm31_check(&SpaceTerm::Ord(a.clone())).map_err(|e| e.to_string())?;
        if !r.pass() {
            return Err(format!("chain fails at {a}: {r:?}"));
        }
    }
    for n in 0..50u64 {
        let a = &Ordinal::omega() + &Ordinal::from(n);
        let r = thm31_check(&SpaceTerm::Ord(a.clone())).map_err(|e| e.to_string())?;
        if !r.pass() || r.height != Ordinal::one() || r.rank != a.succ() {
            return Err(format!("sharpness fails at {a}: {r:?}"));
        }
    }
    Ok("1000 random spaces, 50 sharp ones".into())
}

fn c10_products(seed: u64) -> Result<String, String> {
    let mut rng = gen::rng(seed);
    for _ in 0..1000 {
        let a = gen::below_omega_omega_times(&mut rng, 4);
        let b = gen::below_omega_omega_times(&mut rng, 4);
        let (ra, rb) = (SpaceTerm::Ord(a.clone()).report(), SpaceTerm::Ord(b.clone()).report());
        let prod = SpaceTerm::Prod(Box::new(SpaceTerm::Ord(a.clone())), Box::new(SpaceTerm::Ord(b.clone()))).report();
        if prod.height != ra.height.nat_sum(&rb.height) || prod.endpoint_count != &ra.endpoint_count * &rb.endpoint_count {
            return Err(format!("product rule fails for {a}, {b}"));
        }
        let (ma, mb) = (ord_space_maximizers(&a), ord_space_maximizers(&b));
        let mut best = Ordinal::zero();
        let mut count = BigUint::from(0u32);
        for x in &ma {
            for y in &mb {
                let h = x.point_rank().nat_sum(&y.point_rank());
                if h > best {
                    best = h;
                    count = BigUint::from(1u32);
                } else if h == best {
                    count += 1u32;
                }
            }
        }
        if best != prod.height || count != prod.endpoint_count {
            return Err(format!("maximizers disagree for {a}, {b}"));
        }
    }
    Ok("1000 pairs".into())
}

fn c11_tip_selector(seed: u64) -> Result<String, String> {
    let mut rng = gen::rng(seed);
    let ambient = Ordinal::monomial(Ordinal::omega(), BigUint::from(5u32));
    let mut points = Vec::new();
    while points.len() < 1000 {
        let b = gen::below_omega_omega_times(&mut rng, 6);
        if b.is_zero() || b > ambient {
            continue;
        }
        let u = tip_selector(&b, &ambient).map_err(|e| e.to_string())?;
        let cb = u.cb().map_err(|e| e.to_string())?;
        let tip = b.tip_deg().map_err(|e| e.to_string())?;
        if !cb.unitary || cb.lastpt.as_ref() != Some(&b) || cb.height != tip.tip_exponent {
            return Err(format!("selector set of {b} is {u}, data {cb:?}"));
        }
        let m = min_clopen_with_endpoint(&b, &ambient, &truncation_grid(&b)).map_err(|e| e.to_string())?;
        if m != u {
            return Err(format!("grid minimum for {b} is {m}, selector gives {u}"));
        }
        points.push(b);
    }
    let r = treelike_check(&ambient, &points).map_err(|e| e.to_string())?;
    if !r.pass() {
        return Err(format!("not tree-like: {:?}", r.witness));
    }
    Ok("1000 points".into())
}

/// Every point with `σ ⊆ [0,8)` plus the branches and the top.
pub fn g_points(branches: usize) -> Vec<GPoint> {
    let mut pts: Vec<GPoint> =
        (1u32..256).map(|m| GPoint::FinPt((0..8).filter(|k| m >> k & 1 == 1).collect())).collect();
    pts.extend((0..branches).map(GPoint::Branch));
    pts.push(GPoint::Top);
    pts
}

fn c12_mrowka(_: u64) -> Result<String, String> {
    for b in 1..=4u64 {
        let fam = AdFamily::new(residue_family(b)).map_err(|e| e.to_string())?;
        let pts = g_points(b as usize);
        let index: std::collections::HashMap<&GPoint, usize> = pts.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table: Vec<Vec<usize>> = pts
            .iter()
            .map(|x| pts.iter().map(|y| index[&g_join(x, y, &fam)]).collect())
            .collect();
        let n = pts.len();
        for x in 0..n {
            if table[x][x] != x {
                return Err(format!("idempotence fails at {:?}", pts[x]));
            }
            for y in 0..n {
                if table[x][y] != table[y][x] {
                    return Err(format!("commutativity fails at {:?}, {:?}", pts[x], pts[y]));
                }
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(format!("associativity fails at {:?}, {:?}, {:?}", pts[x], pts[y], pts[z]));
                    }
                }
            }
        }
    }
    let five = AdFamily::new(residue_family(5)).map_err(|e| e.to_string())?;
    let samples: Vec<BigUint> = (1u32..64).map(|k| (BigUint::from(1u32) << (k * 61)) | BigUint::from(k)).collect();
    let (_, star) = star_truncation(&five, 1 << 12, &samples).map_err(|e| e.to_string())?;
    if !star.pass() {
        return Err(format!("intersection law fails: {star:?}"));
    }
    for i in 0..5 {
        for j in 0..5 {
            if i != j {
                let r = convergence_check(&five, i, j, 128).map_err(|e| e.to_string())?;
                if !r.pass() {
                    return Err(format!("convergence fails for {i}, {j}: {r:?}"));
                }
            }
        }
    }
    let r = mrowka_selector_check(&five, 64).map_err(|e| e.to_string())?;
    if !r.pass() {
        return Err(format!("selector fails: {r:?}"));
    }
    Ok("joins, codes, convergence, selector".into())
}

fn c13_lusin(_: u64) -> Result<String, String> {
    let start = Instant::now();
    let initial: Vec<LusinSet> = residue_family(64).into_iter().map(LusinSet::Periodic).collect();
    let (_, reports) = lusin_iterate(initial, 50).map_err(|e| e.to_string())?;
    if let Some(r) = reports.iter().find(|r| !r.pass()) {
        return Err(format!("stage {} fails: {:?}", r.stage, r.counts));
    }
    within("lusin stages", start, Duration::from_secs(10))?;
    Ok(format!("{} stages", reports.len()))
}

fn c14_density(seed: u64) -> Result<String, String> {
    let mut rng = gen::rng(seed);
    let model = OnePointModel::default();
    let mut nonempty = 0;
    for _ in 0..200 {
        let cof = rng.gen_bool(0.5);
        let u = gen::descriptor(&mut rng, 40, cof);
        let k = rng.gen_range(0..=4);
        let vs: Vec<Descriptor> = (0..k)
            .map(|_| {
                let cof = rng.gen_bool(0.7);
                gen::descriptor(&mut rng, 40, cof)
            })
            .collect();
        let w = model.vietoris_density_witness(&u, &vs).map_err(|e| e.to_string())?;
        let meets = |v: &Descriptor| match (&u, v) {
            (Descriptor::Finite(a), Descriptor::Finite(b)) => !a.is_disjoint(b),
            (Descriptor::Finite(a), Descriptor::Cofinite(b)) | (Descriptor::Cofinite(b), Descriptor::Finite(a)) => {
                !a.is_subset(b)
            }
            (Descriptor::Cofinite(_), Descriptor::Cofinite(_)) => true,
        };
        let open_nonempty = if vs.is_empty() { meets(&Descriptor::Cofinite(BTreeSet::new())) } else { vs.iter().all(meets) };
        match w {
            DensityWitness::Finite(f) => {
                let ok = open_nonempty
                    && !f.is_empty()
                    && f.iter().all(|&n| u.contains(n))
                    && vs.iter().all(|v| f.iter().any(|&n| v.contains(n)));
                if !ok {
                    return Err(format!("bad witness {f:?} for {u:?}, {vs:?}"));
                }
                nonempty += 1;
            }
            DensityWitness::Empty if open_nonempty => return Err(format!("missed witness for {u:?}, {vs:?}")),
            DensityWitness::Empty => {}
        }
    }
    Ok(format!("200 basic opens, {nonempty} nonempty"))
}

/// Runs the selected criteria (all when `only` is empty) in order.
pub fn run(seed: u64, only: &[u8]) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .filter(|(id, _, _)| only.is_empty() || only.contains(id))
        .map(|&(id, title, check)| {
            let start = Instant::now();
            let result = check(seed);
            let millis = start.elapsed().as_millis();
            let (pass, detail) = match result {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Outcome { id, title, pass, detail, millis }
        })
        .collect()
}

/// An eventually periodic family used by examples and tests.
pub fn sample_family() -> AdFamily {
    AdFamily::new(vec![
        EvPeriodicSet::progression(2, 0),
        EvPeriodicSet::new(4, [1].into(), [3].into()).expect("valid"),
        EvPeriodicSet::progression(4, 3),
    ])
    .expect("almost disjoint")
}
