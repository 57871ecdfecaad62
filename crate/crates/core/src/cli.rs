//! Command-line front end. [`run`] maps an argument vector to an exit code
//! and the text to print.

use std::collections::BTreeSet;
use std::fmt::Display;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::clopen::{min_clopen_with_endpoint, tip_selector, treelike_check, truncation_grid, ClopenSet};
use crate::hyperspace::{
    check_selector_with, one_point_ranks, Descriptor, Hyperspace, OnePointModel,
};
use crate::mrowka::{
    ad_check, code_of, convergence_check, g_join, lusin_iterate, mrowka_selector_check, residue_family,
    star_truncation, AdFamily, GPoint, LusinSet,
};
use crate::ordinal::{NatOrOmega, Ordinal};
use crate::poset::{zaguia_verify, Poset, DEFAULT_BOUND};
use crate::report::Report;
use crate::selftest;
use crate::space::{
    hyper_antichain_height, hyper_monotonicity_check, hyper_point_height, thm31_check, thm36_check, Skeleton,
    SpaceTerm,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "skula", version, about = "Ordinals, downset hyperspaces and scattered space calculus")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit DOT instead of JSON where supported.
    #[arg(long, global = true)]
    dot: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Horizon for scans over the naturals.
    #[arg(long, global = true)]
    horizon: Option<u64>,
    /// Enumeration bound (poset size, code bound or truncation).
    #[arg(long, global = true)]
    bound: Option<u64>,
    /// Input file, as an alternative to the positional one.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordinal arithmetic.
    #[command(subcommand)]
    Ord(OrdCmd),
    /// Finite posets.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Downset hyperspaces of finite posets.
    #[command(subcommand)]
    Hyper(HyperCmd),
    /// Scattered space terms and hyperspace heights.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Clopen subsets of ordinal spaces.
    #[command(subcommand)]
    Clopen(ClopenCmd),
    /// Almost disjoint families.
    #[command(subcommand)]
    Mrowka(MrowkaCmd),
    /// Runs the acceptance checks.
    Selftest {
        /// Criterion numbers to run; all when omitted.
        only: Vec<u8>,
    },
}

#[derive(Subcommand, Debug)]
enum OrdCmd {
    /// Prints the canonical form.
    Parse { a: String },
    Cmp { a: String, b: String },
    Add { a: String, b: String },
    Mul { a: String, b: String },
    Pow { a: String, b: String },
    Natsum { a: String, b: String },
    Natprod { a: String, b: String },
    /// Right argument finite or `w`.
    Odot { a: String, n: String },
    Tip { a: String },
    /// The `a` with `1 + a = r`.
    OnePlusInverse { r: String },
}

#[derive(Subcommand, Debug)]
enum PosetCmd {
    /// Ranks, width, extremal elements and downset count.
    Info { file: Option<String> },
    Downsets { file: Option<String> },
    Zaguia { file: Option<String> },
    /// Hasse diagram.
    Dot { file: Option<String> },
}

#[derive(Subcommand, Debug)]
enum HyperCmd {
    /// Points of the hyperspace (DOT with --dot).
    Build { file: Option<String> },
    /// Structural checks, including the `K⁺` selector.
    Verify { file: Option<String> },
    /// Principal-ideal selector of the poset itself.
    Selector { file: Option<String> },
    /// Witness for a basic open `⟨U; V₁, …⟩` of `ℕ ∪ {∞}`.
    Density {
        /// `fin:1,2` or `cof:0,4`.
        u: String,
        vs: Vec<String>,
    },
    /// Ranks attached to `ℕ ∪ {∞}` and its hyperspace.
    Onepoint {
        #[arg(default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SpaceCmd {
    Report { term: String },
    /// Bound chain `height ≤ rank < ω^height·(e+1) < ω^(height+1)`.
    Check { term: String },
    HyperPoint { r: String },
    HyperAntichain { labels: Vec<String> },
    /// Height bound for a skeleton term, or for an antichain of labels.
    HyperBound { labels: Vec<String> },
    Monotonicity { term: String },
}

#[derive(Subcommand, Debug)]
enum ClopenCmd {
    /// Cantor-Bendixson data of `{0}? (s,t] ... @ α` or its JSON form.
    Cb { set: String },
    Union { a: String, b: String },
    Intersect { a: String, b: String },
    Difference { a: String, b: String },
    Complement { a: String },
    Tip {
        beta: String,
        #[arg(long)]
        ambient: String,
    },
    Treelike {
        points: Vec<String>,
        #[arg(long)]
        ambient: String,
    },
    /// Grid minimum; the truncation grid of `β` unless points are given.
    Min {
        beta: String,
        #[arg(long)]
        ambient: String,
        grid: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum MrowkaCmd {
    Ad { file: Option<String> },
    /// Code sets of `Fin⁺(A)` below `--bound`.
    Star { file: Option<String> },
    /// Join of two points: `fin:1,2`, `branch:0` or `top`.
    Join { file: String, x: String, y: String },
    Converge { file: String, i: usize, j: usize },
    /// Stages over the residues modulo `period`.
    Lusin {
        #[arg(long, default_value_t = 64)]
        period: u64,
        #[arg(long, default_value_t = 50)]
        stages: u32,
    },
    /// Selector check on the points below `--bound`.
    Selector { file: Option<String> },
}

struct Fail(String);

impl<E: Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

type Out = Result<(i32, String), Fail>;

fn field<T, E: Display>(name: &str, r: Result<T, E>) -> Result<T, Fail> {
    r.map_err(|e| Fail(format!("invalid {name}: {e}")))
}

fn ord(name: &str, s: &str) -> Result<Ordinal, Fail> {
    field(name, s.parse::<Ordinal>())
}

fn read_input(pos: &Option<String>, g: &Global) -> Result<String, Fail> {
    let path = pos.as_ref().or(g.json.as_ref()).ok_or_else(|| Fail("missing input file".into()))?;
    // Inline JSON is accepted in place of a file name.
    if path.trim_start().starts_with('{') {
        return Ok(path.clone());
    }
    std::fs::read_to_string(path).map_err(|e| Fail(format!("cannot read input '{path}': {e}")))
}

fn plain(s: impl Display) -> Out {
    Ok((EXIT_OK, s.to_string()))
}

fn report(r: Report) -> Out {
    Ok((r.exit_code(), r.to_json()))
}

/// Runs the command line given by `argv` (program name first).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let g = cli.global.clone();
    let out = match cli.command {
        Command::Ord(c) => ord_cmd(c),
        Command::Poset(c) => poset_cmd(c, &g),
        Command::Hyper(c) => hyper_cmd(c, &g),
        Command::Space(c) => space_cmd(c),
        Command::Clopen(c) => clopen_cmd(c),
        Command::Mrowka(c) => mrowka_cmd(c, &g),
        Command::Selftest { only } => selftest_cmd(&only, &g),
    };
    match out {
        Ok(r) => r,
        Err(Fail(m)) => (EXIT_USAGE, format!("error: {m}")),
    }
}

fn ord_cmd(c: OrdCmd) -> Out {
    match c {
        OrdCmd::Parse { a } => plain(ord("a", &a)?),
        OrdCmd::Cmp { a, b } => {
            let s = match ord("a", &a)?.cmp(&ord("b", &b)?) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            plain(s)
        }
        OrdCmd::Add { a, b } => plain(&ord("a", &a)? + &ord("b", &b)?),
        OrdCmd::Mul { a, b } => plain(&ord("a", &a)? * &ord("b", &b)?),
        OrdCmd::Pow { a, b } => plain(field("b", ord("a", &a)?.try_pow(&ord("b", &b)?))?),
        OrdCmd::Natsum { a, b } => plain(ord("a", &a)?.nat_sum(&ord("b", &b)?)),
        OrdCmd::Natprod { a, b } => plain(ord("a", &a)?.nat_prod(&ord("b", &b)?)),
        OrdCmd::Odot { a, n } => {
            let n = field("n", NatOrOmega::try_from(&ord("n", &n)?))?;
            plain(ord("a", &a)?.odot(&n))
        }
        OrdCmd::Tip { a } => {
            let t = field("a", ord("a", &a)?.tip_deg())?;
            report(Report::value(
                "tip",
                json!({"tip": t.tip, "tip_exponent": t.tip_exponent, "degree": t.degree}),
            ))
        }
        OrdCmd::OnePlusInverse { r } => plain(field("r", ord("r", &r)?.one_plus_inverse())?),
    }
}

fn bound(g: &Global) -> usize {
    g.bound.map_or(DEFAULT_BOUND, |b| b as usize)
}

fn load_poset(file: &Option<String>, g: &Global) -> Result<Poset, Fail> {
    field("poset json", Poset::from_json(&read_input(file, g)?))
}

fn poset_cmd(c: PosetCmd, g: &Global) -> Out {
    match c {
        PosetCmd::Info { file } => {
            let p = load_poset(&file, g)?;
            let ranks = p.ranks();
            let w = p.width_certified();
            let ex = p.extremal(p.all());
            let elem_rank: serde_json::Map<String, Value> =
                (0..p.len()).map(|i| (p.label(i).to_string(), json!(ranks.elem_rank[i]))).collect();
            let chains: Vec<Vec<&str>> = w.chains.iter().map(|c| c.iter().map(|&i| p.label(i)).collect()).collect();
            report(Report::value(
                "poset",
                json!({
                    "elements": p.len(),
                    "elem_rank": elem_rank,
                    "poset_rank": ranks.poset_rank,
                    "width": w.width,
                    "max_antichain": p.names(w.antichain),
                    "chain_cover": chains,
                    "maximal": p.names(ex.max),
                    "minimal": p.names(ex.min),
                    "downsets": field("bound", p.downsets(bound(g)))?.len(),
                }),
            ))
        }
        PosetCmd::Downsets { file } => {
            let p = load_poset(&file, g)?;
            let ds = field("bound", p.downsets(bound(g)))?;
            let sets: Vec<Vec<String>> = ds.iter().map(|&d| p.names(d)).collect();
            report(Report::value("downsets", json!({"count": sets.len(), "downsets": sets})))
        }
        PosetCmd::Zaguia { file } => {
            let p = load_poset(&file, g)?;
            let r = field("poset", zaguia_verify(&p, bound(g)))?;
            report(Report::new("zaguia", r.pass(), &r.witness, &r))
        }
        PosetCmd::Dot { file } => plain(load_poset(&file, g)?.to_dot()),
    }
}

fn descriptor(name: &str, s: &str) -> Result<Descriptor, Fail> {
    field(name, s.parse::<Descriptor>())
}

fn hyper_cmd(c: HyperCmd, g: &Global) -> Out {
    match c {
        HyperCmd::Build { file } => {
            let h = field("poset", Hyperspace::build(&load_poset(&file, g)?, bound(g)))?;
            if g.dot {
                return plain(h.to_dot());
            }
            let points: Vec<String> = (0..h.len()).map(|i| h.format_point(i)).collect();
            report(Report::value("hyperspace", json!({"points": points.len(), "members": points})))
        }
        HyperCmd::Verify { file } => {
            let h = field("poset", Hyperspace::build(&load_poset(&file, g)?, bound(g)))?;
            let r = h.verify();
            report(Report::new("hyperspace", r.pass(), &r.selector.witness, &r))
        }
        HyperCmd::Selector { file } => {
            let p = load_poset(&file, g)?;
            let r = check_selector_with(p.len(), |x, y| p.le(x, y));
            report(Report::new("selector", r.pass(), &r.witness, &r))
        }
        HyperCmd::Density { u, vs } => {
            let model = OnePointModel { horizon: g.horizon.unwrap_or(OnePointModel::default().horizon) };
            let u = descriptor("u", &u)?;
            let vs = vs.iter().map(|v| descriptor("v", v)).collect::<Result<Vec<_>, _>>()?;
            let w = field("descriptor", model.vietoris_density_witness(&u, &vs))?;
            report(Report::value("vietoris_density", &w))
        }
        HyperCmd::Onepoint { max_n } => {
            let r = one_point_ranks(max_n);
            report(Report::new("one_point_ranks", r.within_bound, json!({"matches_stated": r.matches_stated}), &r))
        }
    }
}

fn term(s: &str) -> Result<SpaceTerm, Fail> {
    field("term", s.parse::<SpaceTerm>())
}

fn labels(ls: &[String]) -> Result<Vec<Ordinal>, Fail> {
    ls.iter()
        .flat_map(|l| l.split(','))
        .filter(|l| !l.trim().is_empty())
        .map(|l| ord("label", l))
        .collect()
}

fn space_cmd(c: SpaceCmd) -> Out {
    match c {
        SpaceCmd::Report { term: t } => report(Report::value("space", term(&t)?.report())),
        SpaceCmd::Check { term: t } => {
            let r = field("term", thm31_check(&term(&t)?))?;
            report(Report::new("bound_chain", r.pass(), Value::Null, &r))
        }
        SpaceCmd::HyperPoint { r } => plain(hyper_point_height(&ord("r", &r)?)),
        SpaceCmd::HyperAntichain { labels: ls } => plain(hyper_antichain_height(&labels(&ls)?)),
        SpaceCmd::HyperBound { labels: ls } => {
            let s = match ls.as_slice() {
                [t] if t.trim_start().starts_with("skel") => match term(t)? {
                    SpaceTerm::Skeleton(s) => s,
                    _ => unreachable!("prefix checked"),
                },
                _ => field("labels", Skeleton::antichain(labels(&ls)?))?,
            };
            let r = thm36_check(&s);
            report(Report::new("hyper_bound", r.pass, &r.witness, &r))
        }
        SpaceCmd::Monotonicity { term: t } => {
            let s = match term(&t)? {
                SpaceTerm::Skeleton(s) => s,
                _ => return Err(Fail("invalid term: expected skel(...)".into())),
            };
            let r = field("term", hyper_monotonicity_check(&s))?;
            report(Report::new("hyper_monotonicity", r.pass(), r.violations.first(), &r))
        }
    }
}

fn clopen(name: &str, s: &str) -> Result<ClopenSet, Fail> {
    if s.trim_start().starts_with("{\"") {
        field(name, ClopenSet::from_json(s))
    } else {
        field(name, s.parse::<ClopenSet>())
    }
}

fn clopen_value(u: &ClopenSet) -> Out {
    report(Report::value("clopen", json!({"set": u.to_string(), "cb": u.cb()?})))
}

fn clopen_cmd(c: ClopenCmd) -> Out {
    match c {
        ClopenCmd::Cb { set } => clopen_value(&clopen("set", &set)?),
        ClopenCmd::Union { a, b } => clopen_value(&field("b", clopen("a", &a)?.union(&clopen("b", &b)?))?),
        ClopenCmd::Intersect { a, b } => clopen_value(&field("b", clopen("a", &a)?.intersect(&clopen("b", &b)?))?),
        ClopenCmd::Difference { a, b } => clopen_value(&field("b", clopen("a", &a)?.difference(&clopen("b", &b)?))?),
        ClopenCmd::Complement { a } => clopen_value(&clopen("a", &a)?.complement()),
        ClopenCmd::Tip { beta, ambient } => {
            clopen_value(&field("beta", tip_selector(&ord("beta", &beta)?, &ord("ambient", &ambient)?))?)
        }
        ClopenCmd::Treelike { points, ambient } => {
            let pts = points.iter().map(|p| ord("point", p)).collect::<Result<Vec<_>, _>>()?;
            let r = field("point", treelike_check(&ord("ambient", &ambient)?, &pts))?;
            report(Report::new("treelike", r.pass(), &r.witness, &r))
        }
        ClopenCmd::Min { beta, ambient, grid } => {
            let b = ord("beta", &beta)?;
            let grid = if grid.is_empty() {
                truncation_grid(&b)
            } else {
                grid.iter().map(|p| ord("grid", p)).collect::<Result<Vec<_>, _>>()?
            };
            clopen_value(&field("beta", min_clopen_with_endpoint(&b, &ord("ambient", &ambient)?, &grid))?)
        }
    }
}

fn gpoint(s: &str, fam: &AdFamily) -> Result<GPoint, Fail> {
    let bad = || Fail(format!("invalid point '{s}': expected fin:<list>, branch:<i> or top"));
    let s = s.trim();
    if s == "top" {
        return Ok(GPoint::Top);
    }
    let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
    match kind {
        "fin" => {
            let set = rest
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
                .collect::<Result<BTreeSet<u64>, _>>()?;
            if set.is_empty() {
                return Err(Fail(format!("invalid point '{s}': finite points are nonempty")));
            }
            Ok(GPoint::FinPt(set))
        }
        "branch" => {
            let i: usize = rest.trim().parse().map_err(|_| bad())?;
            if i >= fam.len() {
                return Err(Fail(format!("invalid point '{s}': family has {} sets", fam.len())));
            }
            Ok(GPoint::Branch(i))
        }
        _ => Err(bad()),
    }
}

fn load_family(file: &Option<String>, g: &Global) -> Result<AdFamily, Fail> {
    field("family json", AdFamily::from_json_unchecked(&read_input(file, g)?))
}

fn mrowka_cmd(c: MrowkaCmd, g: &Global) -> Out {
    match c {
        MrowkaCmd::Ad { file } => {
            let fam = load_family(&file, g)?;
            let r = field("family", ad_check(fam.sets()))?;
            report(Report::new("almost_disjoint", r.pass, &r.witness, &r))
        }
        MrowkaCmd::Star { file } => {
            let fam = field("family", AdFamily::new(load_family(&file, g)?.sets().to_vec()))?;
            let n = g.bound.unwrap_or(64);
            let samples: Vec<_> = (0..n.min(64)).map(|k| code_of(&BTreeSet::from([k]))).collect();
            let (codes, r) = field("bound", star_truncation(&fam, n, &samples))?;
            let counts: Vec<String> = codes.iter().map(|c| c.count().to_string()).collect();
            report(Report::new("star_truncation", r.pass(), r.witness, json!({"report": r, "code_counts": counts})))
        }
        MrowkaCmd::Join { file, x, y } => {
            let fam = field("family", AdFamily::new(load_family(&Some(file), g)?.sets().to_vec()))?;
            let j = g_join(&gpoint(&x, &fam)?, &gpoint(&y, &fam)?, &fam);
            report(Report::value("g_join", &j))
        }
        MrowkaCmd::Converge { file, i, j } => {
            let fam = field("family", AdFamily::new(load_family(&Some(file), g)?.sets().to_vec()))?;
            let r = field("indices", convergence_check(&fam, i, j, g.horizon.unwrap_or(128)))?;
            report(Report::new("convergence", r.pass(), Value::Null, &r))
        }
        MrowkaCmd::Lusin { period, stages } => {
            if period == 0 {
                return Err(Fail("invalid period: must be positive".into()));
            }
            let initial = residue_family(period).into_iter().map(LusinSet::Periodic).collect();
            let (_, reports) = field("stages", lusin_iterate(initial, stages))?;
            let bad = reports.iter().find(|r| !r.pass()).map(|r| r.stage);
            let summary: Vec<Value> =
                reports.iter().map(|r| json!({"stage": r.stage, "m": r.m, "l2_exact": r.l2_exact, "l1_bounded": r.l1_bounded})).collect();
            report(Report::new("lusin", bad.is_none(), bad, summary))
        }
        MrowkaCmd::Selector { file } => {
            let fam = load_family(&file, g)?;
            let r = field("family", mrowka_selector_check(&fam, g.bound.unwrap_or(64)))?;
            let witness = json!({"selector": r.selector.witness, "clopen": r.clopen_witness});
            report(Report::new("mrowka_selector", r.pass(), witness, &r))
        }
    }
}

fn selftest_cmd(only: &[u8], g: &Global) -> Out {
    let seed = g.seed.ok_or_else(|| Fail("missing --seed: randomized checks need a seed".into()))?;
    if let Some(bad) = only.iter().find(|&&i| !(1..=14).contains(&i)) {
        return Err(Fail(format!("invalid criterion {bad}: expected 1 to 14")));
    }
    let outcomes = selftest::run(seed, only);
    let first = outcomes.iter().find(|o| !o.pass).map(|o| o.id);
    report(Report::new("selftest", first.is_none(), first, &outcomes))
}
