//! The `w6j` command line: argument parsing, dispatch and output formatting.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::ExactRadical;
use crate::geometry::{
    cayley_menger, classical_j12_range, classical_j23_range, classify_region, signed_volume,
    LengthSet,
};
use crate::km::{KMSphere, Observable};
use crate::network::{self, builders, evaluate_closed, to_standard_form};
use crate::semiclassical::{compare_slice, weyl_eigenvalue, WeylOperator};
use crate::symbols::{six_j_msum, six_j_racah, JQuad, SixJArgs};
use crate::HalfInt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "w6j", version, about = "Exact and semiclassical Wigner 6j-symbols")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; human-readable text when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Points per axis of grids and curves (at least 8).
    #[arg(long, global = true, default_value_t = 64, value_parser = parse_grid)]
    pub grid: usize,

    /// Bits of precision of decimal output (at least 53).
    #[arg(long, global = true, default_value_t = 53, value_parser = parse_precision)]
    pub precision: u32,

    /// Evaluate 6j-symbols by the explicit m-sum.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallel: Option<u16>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact 6j-symbol {j1 j2 j12; j3 j4 j23}.
    #[command(allow_negative_numbers = true)]
    Exact {
        #[arg(value_parser = parse_halfint)]
        j1: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j2: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j12: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j3: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j4: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j23: HalfInt,
    },
    /// Exact against Ponzano-Regge for every j23 at fixed quad and j12.
    #[command(allow_negative_numbers = true)]
    Compare {
        #[arg(value_parser = parse_halfint)]
        j1: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j2: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j3: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j4: HalfInt,
        #[arg(value_parser = parse_halfint)]
        j12: HalfInt,
    },
    /// Region classification over the (J12, J23) square of four lengths.
    #[command(allow_negative_numbers = true)]
    Region {
        #[arg(value_parser = parse_length)]
        l1: f64,
        #[arg(value_parser = parse_length)]
        l2: f64,
        #[arg(value_parser = parse_length)]
        l3: f64,
        #[arg(value_parser = parse_length)]
        l4: f64,
    },
    /// The caustic as a closed polyline in the (J12, J23) plane.
    #[command(allow_negative_numbers = true)]
    Caustic {
        #[arg(value_parser = parse_length)]
        l1: f64,
        #[arg(value_parser = parse_length)]
        l2: f64,
        #[arg(value_parser = parse_length)]
        l3: f64,
        #[arg(value_parser = parse_length)]
        l4: f64,
    },
    /// Level curves of J12, J23, J13 and V on the unit sphere.
    #[command(allow_negative_numbers = true)]
    Sphere {
        #[arg(value_parser = parse_length)]
        l1: f64,
        #[arg(value_parser = parse_length)]
        l2: f64,
        #[arg(value_parser = parse_length)]
        l3: f64,
        #[arg(value_parser = parse_length)]
        l4: f64,
        /// Level values per observable.
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u32).range(1..=1000))]
        levels: u32,
    },
    /// Evaluate a closed spin network stored as JSON.
    Network {
        path: PathBuf,
        /// Print the network in standard form.
        #[arg(long)]
        standardize: bool,
    },
    /// Quick consistency checks across all modules.
    Selftest,
}

fn parse_grid(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not a positive integer"))?;
    if n < 8 {
        return Err(format!("grid must be at least 8, got {n}"));
    }
    Ok(n)
}

fn parse_precision(s: &str) -> std::result::Result<u32, String> {
    let n: u32 = s.parse().map_err(|_| format!("`{s}` is not a positive integer"))?;
    if !(53..=100_000).contains(&n) {
        return Err(format!("precision must be between 53 and 100000 bits, got {n}"));
    }
    Ok(n)
}

fn parse_halfint(s: &str) -> std::result::Result<HalfInt, String> {
    s.parse::<HalfInt>().map_err(|e| e.to_string())
}

fn parse_length(s: &str) -> std::result::Result<f64, String> {
    let bad = || format!("`{s}` is not a number or fraction");
    let v = match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (f64, f64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == 0.0 {
                return Err(bad());
            }
            a / b
        }
        None => s.trim().parse().map_err(|_| bad())?,
    };
    if !v.is_finite() {
        return Err(bad());
    }
    Ok(v)
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_DOMAIN,
    }
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    execute(&cfg)
}

/// Runs a parsed configuration.
pub fn execute(cfg: &RunConfig) -> Outcome {
    let result = match cfg.parallel {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k as usize).build() {
            Ok(pool) => pool.install(|| dispatch(cfg)),
            Err(e) => Err(Error::ResourceLimit(format!("cannot start {k} worker threads: {e}"))),
        },
        None => dispatch(cfg),
    };
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cfg: &RunConfig) -> Result<(i32, String)> {
    match &cfg.command {
        Command::Exact { j1, j2, j12, j3, j4, j23 } => {
            cmd_exact(cfg, &[*j1, *j2, *j12, *j3, *j4, *j23]).map(|s| (EXIT_OK, s))
        }
        Command::Compare { j1, j2, j3, j4, j12 } => cmd_compare(cfg, &[*j1, *j2, *j3, *j4, *j12]).map(|s| (EXIT_OK, s)),
        Command::Region { l1, l2, l3, l4 } => cmd_region(cfg, quad_of(&[*l1, *l2, *l3, *l4])?).map(|s| (EXIT_OK, s)),
        Command::Caustic { l1, l2, l3, l4 } => cmd_caustic(cfg, quad_of(&[*l1, *l2, *l3, *l4])?).map(|s| (EXIT_OK, s)),
        Command::Sphere { l1, l2, l3, l4, levels } => {
            cmd_sphere(cfg, quad_of(&[*l1, *l2, *l3, *l4])?, *levels).map(|s| (EXIT_OK, s))
        }
        Command::Network { path, standardize } => cmd_network(cfg, path, *standardize).map(|s| (EXIT_OK, s)),
        Command::Selftest => cmd_selftest(cfg),
    }
}

fn quad_of(lengths: &[f64]) -> Result<[f64; 4]> {
    let q: [f64; 4] = lengths
        .try_into()
        .map_err(|_| Error::Domain(format!("expected four lengths, got {}", lengths.len())))?;
    if q.iter().any(|&x| x < 0.0) {
        return Err(Error::Domain(format!("negative length in {q:?}")));
    }
    Ok(q)
}

fn digits(bits: u32) -> usize {
    (bits as f64 * std::f64::consts::LOG10_2).ceil() as usize
}

/// `coef·√radicand`, or `0`.
pub fn radical_text(x: &ExactRadical) -> String {
    if x.is_zero() {
        "0".to_string()
    } else {
        format!("{}·√{}", x.coef(), x.radicand_int())
    }
}

fn radical_json(x: &ExactRadical, bits: u32) -> Value {
    json!({
        "text": radical_text(x),
        "coef": x.coef().to_string(),
        "radicand": x.radicand_int().to_string(),
        "value": x.to_f64(),
        "decimal": x.to_decimal(digits(bits)),
    })
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("CSV of UTF-8 fields")
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn six_j(args: &SixJArgs, oracle: bool) -> Result<ExactRadical> {
    if oracle {
        six_j_msum(args)
    } else {
        six_j_racah(args)
    }
}

fn cmd_exact(cfg: &RunConfig, j: &[HalfInt]) -> Result<String> {
    let args = SixJArgs::new(j[0], j[1], j[2], j[3], j[4], j[5]);
    let v = six_j(&args, cfg.oracle)?;
    let decimal = v.to_decimal(digits(cfg.precision));
    Ok(match cfg.format {
        None => {
            if v.is_zero() {
                "0\n".to_string()
            } else {
                format!("{} ≈ {decimal}\n", radical_text(&v))
            }
        }
        Some(Format::Json) => to_json(&json!({
            "args": args.as_array().map(|x| x.to_string()),
            "method": if cfg.oracle { "msum" } else { "racah" },
            "result": radical_json(&v, cfg.precision),
        })),
        Some(Format::Csv) => csv_table(
            &["j1", "j2", "j12", "j3", "j4", "j23", "text", "value", "decimal"],
            [args
                .as_array()
                .iter()
                .map(|x| x.to_string())
                .chain([radical_text(&v), v.to_f64().to_string(), decimal])
                .collect()],
        ),
    })
}

fn cmd_compare(cfg: &RunConfig, j: &[HalfInt]) -> Result<String> {
    let quad = JQuad::new(j[0], j[1], j[2], j[3]);
    let j12 = j[4];
    let rows = compare_slice(&quad, j12, cfg.oracle)?;
    Ok(match cfg.format {
        Some(Format::Json) => to_json(&json!({
            "quad": quad.as_array().map(|x| x.to_string()),
            "j12": j12.to_string(),
            "method": if cfg.oracle { "msum" } else { "racah" },
            "rows": rows.iter().map(|r| json!({
                "j23": r.j23.to_string(),
                "exact": r.exact,
                "exact_text": r.exact_text,
                "pr": r.pr,
                "abs_err": r.abs_err,
                "rel_err": r.rel_err.filter(|x| x.is_finite()),
                "region": r.region.tag(),
                "near_caustic": r.near_caustic,
            })).collect::<Vec<_>>(),
        })),
        Some(Format::Csv) | None => csv_table(
            &["j23", "exact", "exact_text", "pr", "abs_err", "rel_err", "region", "near_caustic"],
            rows.iter().map(|r| {
                vec![
                    r.j23.to_string(),
                    r.exact.to_string(),
                    r.exact_text.clone(),
                    opt(r.pr),
                    opt(r.abs_err),
                    opt(r.rel_err.filter(|x| x.is_finite())),
                    r.region.tag().to_string(),
                    r.near_caustic.to_string(),
                ]
            }),
        ),
    })
}

/// Spin labels `J − 1/2` when all four lengths are half-odd multiples with an
/// integer total.
fn quantum_quad(q: [f64; 4]) -> Option<JQuad> {
    let twice = q.map(|x| 2.0 * x - 1.0);
    if twice.iter().any(|t| *t < 0.0 || t.fract() != 0.0) {
        return None;
    }
    let jq = JQuad::from_twice(twice.map(|t| t as i64));
    jq.has_integer_sum().then_some(jq)
}

fn cmd_region(cfg: &RunConfig, q: [f64; 4]) -> Result<String> {
    use rayon::prelude::*;
    let (a0, a1) = classical_j12_range(q)?;
    let (b0, b1) = classical_j23_range(q)?;
    let n = cfg.grid;
    let axis = |lo: f64, hi: f64| -> Vec<f64> {
        let step = (hi - lo) / (n - 3) as f64;
        (0..n).map(|i| if i == 1 { lo } else if i == n - 2 { hi } else { lo + step * (i as f64 - 1.0) }).collect()
    };
    let (xs, ys) = (axis(a0, a1), axis(b0, b1));
    let grid: Vec<Vec<(f64, f64, &str)>> = xs
        .par_iter()
        .map(|&x| {
            ys.iter()
                .map(|&y| (x, y, classify_region(&LengthSet::new(q[0], q[1], q[2], q[3], x, y)).tag()))
                .collect()
        })
        .collect();
    let mut spots = Vec::new();
    if let Some(jq) = quantum_quad(q) {
        let (l12, h12) = crate::symbols::j12_bounds(&jq);
        let (l23, h23) = crate::symbols::j23_bounds(&jq);
        let mut j12 = l12;
        while j12 <= h12 {
            let mut j23 = l23;
            while j23 <= h23 {
                let (x, y) = (j12.to_f64() + 0.5, j23.to_f64() + 0.5);
                spots.push((j12, j23, x, y, classify_region(&LengthSet::new(q[0], q[1], q[2], q[3], x, y)).tag()));
                j23 = j23 + HalfInt::ONE;
            }
            j12 = j12 + HalfInt::ONE;
        }
    }
    let cells = grid.iter().flatten();
    Ok(match cfg.format {
        Some(Format::Json) => to_json(&json!({
            "quad": q,
            "j12_range": [a0, a1],
            "j23_range": [b0, b1],
            "grid": n,
            "points": cells.map(|(x, y, t)| json!({"j12": x, "j23": y, "region": t})).collect::<Vec<_>>(),
            "quantized": spots.iter().map(|(j12, j23, x, y, t)| json!({
                "j12": j12.to_string(), "j23": j23.to_string(), "J12": x, "J23": y, "region": t,
            })).collect::<Vec<_>>(),
        })),
        Some(Format::Csv) | None => csv_table(
            &["kind", "j12", "j23", "region"],
            cells
                .map(|(x, y, t)| vec!["grid".into(), x.to_string(), y.to_string(), t.to_string()])
                .chain(spots.iter().map(|(_, _, x, y, t)| {
                    vec!["quantized".into(), x.to_string(), y.to_string(), t.to_string()]
                }))
                .collect::<Vec<_>>(),
        ),
    })
}

fn cmd_caustic(cfg: &RunConfig, q: [f64; 4]) -> Result<String> {
    let sphere = KMSphere::new(q)?;
    let pts = sphere.caustic_curve(cfg.grid);
    Ok(match cfg.format {
        Some(Format::Json) => to_json(&json!({
            "quad": q,
            "points": pts.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        })),
        Some(Format::Csv) | None => csv_table(
            &["index", "j12", "j23"],
            pts.iter().enumerate().map(|(i, (a, b))| vec![i.to_string(), a.to_string(), b.to_string()]),
        ),
    })
}

fn cmd_sphere(cfg: &RunConfig, q: [f64; 4], levels: u32) -> Result<String> {
    let sphere = KMSphere::new(q)?;
    let mut curves = Vec::new();
    for obs in [Observable::J12, Observable::J23, Observable::J13, Observable::V] {
        let (lo, hi) = sphere.range(obs)?;
        for k in 1..=levels {
            let value = lo + (hi - lo) * k as f64 / (levels + 1) as f64;
            let pts = match sphere.level_curve(obs, value, cfg.grid) {
                Ok(p) => p,
                Err(Error::EmptyLevelSet(_)) => continue,
                Err(e) => return Err(e),
            };
            let xyz = pts
                .iter()
                .map(|p| sphere.embed(*p).map(|e| e.cartesian()))
                .collect::<Result<Vec<_>>>()?;
            curves.push((obs, value, xyz));
        }
    }
    let name = |o: Observable| format!("{o:?}");
    Ok(match cfg.format {
        Some(Format::Json) => to_json(&json!({
            "quad": q,
            "total_area": sphere.total_area(),
            "curves": curves.iter().map(|(o, v, xyz)| json!({
                "observable": name(*o), "value": v, "points": xyz,
            })).collect::<Vec<_>>(),
        })),
        Some(Format::Csv) | None => csv_table(
            &["observable", "curve", "value", "index", "x", "y", "z"],
            curves.iter().enumerate().flat_map(|(c, (o, v, xyz))| {
                xyz.iter().enumerate().map(move |(i, p)| {
                    vec![name(*o), c.to_string(), v.to_string(), i.to_string(), p[0].to_string(), p[1].to_string(), p[2].to_string()]
                })
            }),
        ),
    })
}

fn cmd_network(cfg: &RunConfig, path: &PathBuf, standardize: bool) -> Result<String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    let mut net = network::parse(&text)?;
    if standardize {
        net = to_standard_form(&net);
    }
    let v = evaluate_closed(&net)?;
    Ok(match cfg.format {
        None if standardize => {
            let mut s = network::serialize(&net)?;
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
        None => {
            if v.is_zero() {
                "0\n".to_string()
            } else {
                format!("{} ≈ {}\n", radical_text(&v), v.to_decimal(digits(cfg.precision)))
            }
        }
        Some(Format::Json) => {
            let mut doc = json!({ "result": radical_json(&v, cfg.precision) });
            if standardize {
                doc["network"] = network::to_value(&net)?;
            }
            to_json(&doc)
        }
        Some(Format::Csv) => csv_table(
            &["text", "value", "decimal"],
            [vec![radical_text(&v), v.to_f64().to_string(), v.to_decimal(digits(cfg.precision))]],
        ),
    })
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn selftest_checks(oracle: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let mut n = 0;
    let mut bad = 0;
    for t in 0..5i64.pow(6) {
        let tw: Vec<i64> = (0..6).map(|k| (t / 5i64.pow(k)) % 5).collect();
        let args = SixJArgs::from_twice(tw.try_into().expect("six digits"));
        if !args.is_admissible() {
            continue;
        }
        n += 1;
        if six_j_racah(&args)? != six_j_msum(&args)? {
            bad += 1;
        }
    }
    out.push(Check { name: "racah_equals_msum", passed: bad == 0, detail: format!("{n} symbols with j <= 2, {bad} mismatches") });

    let mut n = 0;
    let mut bad = 0;
    for t in 0..4i64.pow(6) {
        let tw: Vec<i64> = (0..6).map(|k| (t / 4i64.pow(k)) % 4).collect();
        let args = SixJArgs::from_twice(tw.try_into().expect("six digits"));
        if !args.is_admissible() {
            continue;
        }
        n += 1;
        if evaluate_closed(&builders::tetrahedral(&args)?)? != six_j(&args, oracle)? {
            bad += 1;
        }
    }
    out.push(Check { name: "tetrahedral_network", passed: bad == 0, detail: format!("{n} networks with j <= 3/2, {bad} mismatches") });

    let corpus = builders::corpus()?;
    let mut bad = 0;
    for (_, net, expected) in &corpus {
        let v = evaluate_closed(net)?;
        let ok = match expected {
            builders::Expected::SixJ(a) => v == six_j_msum(a)?,
            builders::Expected::Integer(k) => v == ExactRadical::from_integer(*k),
            builders::Expected::Recorded => true,
        } && evaluate_closed(&to_standard_form(net))? == v;
        bad += (!ok) as usize;
    }
    out.push(Check { name: "network_corpus", passed: bad == 0, detail: format!("{} networks, {bad} mismatches", corpus.len()) });

    let q = [5.0, 3.5, 6.0, 6.5];
    let mut worst = 0.0f64;
    for k in 1..50 {
        let j12 = 1.5 + 7.0 * k as f64 / 50.0;
        let (lo, hi) = crate::geometry::j23_extrema(q, j12)?;
        let j23 = lo + (hi - lo) * ((k * 7) % 50) as f64 / 50.0;
        let v = LengthSet::new(q[0], q[1], q[2], q[3], j12, j23).build()?;
        let vol = signed_volume(&v);
        let cm = cayley_menger(q[0], q[1], q[2], q[3], j12, j23);
        worst = worst.max((cm - 288.0 * vol * vol).abs() / cm.abs().max(1.0));
    }
    out.push(Check { name: "cayley_menger_volume", passed: worst < 1e-8, detail: format!("max relative deviation {worst:.3e}") });

    let sphere = KMSphere::new(q)?;
    let d = sphere.total_area() / (2.0 * std::f64::consts::PI);
    let mut worst = (d - 7.0).abs() / 7.0;
    for n in 0..7 {
        let a = sphere.enclosed_area(Observable::J23, 3.0 + n as f64)?;
        let want = (n as f64 + 0.5) * 2.0 * std::f64::consts::PI;
        worst = worst.max((a - want).abs() / want);
    }
    out.push(Check { name: "km_areas", passed: worst < 1e-6, detail: format!("max relative deviation {worst:.3e}") });

    let mut ok = true;
    for t in 0..20 {
        let j = HalfInt::from_twice(t);
        ok &= weyl_eigenvalue(WeylOperator::I, j)? == crate::exact::rat(t, 2);
        ok &= weyl_eigenvalue(WeylOperator::JsqR, j)? == crate::semiclassical::casimir(j) - crate::exact::rat(1, 8);
    }
    out.push(Check { name: "weyl_eigenvalues", passed: ok, detail: "j <= 19/2".to_string() });

    let quad = JQuad::from_twice([9, 6, 11, 12]);
    let rows = compare_slice(&quad, HalfInt::from_twice(9), oracle)?;
    let rms = crate::semiclassical::mid_region_rms(&rows).unwrap_or(f64::INFINITY);
    out.push(Check {
        name: "ponzano_regge_slice",
        passed: rows.len() == 7 && rms < 0.2,
        detail: format!("{} rows, mid-region rms relative error {rms:.3e}", rows.len()),
    });
    Ok(out)
}

fn cmd_selftest(cfg: &RunConfig) -> Result<(i32, String)> {
    let checks = selftest_checks(cfg.oracle)?;
    let code = if checks.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_FAILURE };
    let status = |p: bool| if p { "pass" } else { "fail" };
    let text = match cfg.format {
        None => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(s, "[{}] {}: {}", status(c.passed).to_uppercase(), c.name, c.detail);
            }
            s
        }
        Some(Format::Json) => to_json(&json!({
            "passed": code == EXIT_OK,
            "checks": checks.iter().map(|c| json!({"name": c.name, "status": status(c.passed), "detail": c.detail})).collect::<Vec<_>>(),
        })),
        Some(Format::Csv) => csv_table(
            &["name", "status", "detail"],
            checks.iter().map(|c| vec![c.name.to_string(), status(c.passed).to_string(), c.detail.clone()]),
        ),
    };
    Ok((code, text))
}
