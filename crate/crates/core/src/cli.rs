//! Command-line front end.
//!
//! Exit codes: `0` success, `1` I/O failure, `2` unparsable arguments or
//! input files, `3` non-admissible isometry under `classify --admissible`,
//! `4` invariant violation (cone, `δ² = |ℓ|²`, relation residual), `5`
//! invalid pinch schedule, `6` any other geometric failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coords::{
    coords_to_structure_with, limit_set_sample, pinch::pinch_path_with, stratum_coords, structure_to_coords,
    CurveCoords, FNPoint, PantsDecomposition, PeripheralCoords, PinchSchedule, ScheduleStep, SurfaceStructure,
    Tolerances,
};
use crate::error::Error;
use crate::halfspace::{geodesic_between, geodesic_lightlike, geodesic_timelike, DEFAULT_SAMPLES};
use crate::isometry::{Isometry, IsometryClass};
use crate::split::SplitComplex;

pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_ADMISSIBLE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;
pub const EXIT_SCHEDULE: i32 = 5;
pub const EXIT_GEOMETRY: i32 = 6;

#[derive(Debug, Parser)]
#[command(name = "adscoords", version, about = "Fenchel–Nielsen coordinates for GHMC AdS structures")]
pub struct Cli {
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Overrides the E-constraint and relation tolerances.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Number of samples for geodesic output.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Round floats in JSON output to this many significant digits.
    #[arg(long, global = true)]
    pub digits: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify an isometry given as JSON `{"plus": M, "minus": M}`.
    Classify {
        file: PathBuf,
        /// Fail with exit code 3 unless the isometry is admissible.
        #[arg(long)]
        admissible: bool,
    },
    /// Build the structure with given Fenchel–Nielsen coordinates.
    Coords2rep { decomposition: String, point: PathBuf },
    /// Read Fenchel–Nielsen coordinates back from a structure.
    Rep2coords { decomposition: String, structure: PathBuf },
    /// Stratum coordinates of a structure relative to a multicurve.
    Stratum {
        decomposition: String,
        structure: PathBuf,
        /// Comma-separated curve indices; empty for the undegenerate stratum.
        #[arg(long, default_value = "")]
        multicurve: String,
    },
    /// Follow a pinching path and print the trajectory as CSV.
    Pinch {
        decomposition: String,
        point: PathBuf,
        schedule: PathBuf,
        #[arg(long)]
        multicurve: Option<String>,
    },
    /// Sample a geodesic of the half-space model as CSV `t,x1,x2,x3`.
    Geodesic {
        /// Space-like geodesic between two boundary points `re,im`.
        #[arg(long, requires = "to", allow_hyphen_values = true)]
        from: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
        /// Time-like geodesic through the base point `re,im` ...
        #[arg(long, requires = "delta", conflicts_with = "from", allow_hyphen_values = true)]
        timelike: Option<String>,
        /// ... with displacement `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        /// Light-like geodesic from `re,im` in direction `v1,v2,v3`.
        #[arg(long, requires = "direction", conflicts_with_all = ["from", "timelike"], allow_hyphen_values = true)]
        lightlike: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
        /// Emit JSON instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Sample the limit set of a structure as CSV `index,plus,minus`.
    Limitset {
        structure: PathBuf,
        /// Longest reduced word used.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Print a random Fenchel–Nielsen point for a decomposition.
    Sample { decomposition: String },
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConeViolation(..) | Error::EConstraint { .. } | Error::RelationResidual(_) => EXIT_INVARIANT,
            Error::ScheduleInvalid(_) => EXIT_SCHEDULE,
            _ => EXIT_GEOMETRY,
        };
        Failure { code, message: e.to_string() }
    }
}

fn parse_failure(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_PARSE, message: msg.into() }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) })?;
    serde_json::from_str(&text).map_err(|e| parse_failure(format!("{}: {e}", path.display())))
}

/// A decomposition argument is a path to a JSON file or a fixture name.
fn read_decomposition(arg: &str) -> Result<PantsDecomposition, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(d) = PantsDecomposition::fixture(arg) {
            return Ok(d);
        }
    }
    read_json(path)
}

fn parse_reals(s: &str, n: usize) -> Result<Vec<f64>, Failure> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| parse_failure(format!("{s:?}: {e}")))?;
    if v.len() != n || v.iter().any(|x| !x.is_finite()) {
        return Err(parse_failure(format!("{s:?}: expected {n} finite comma-separated numbers")));
    }
    Ok(v)
}

fn parse_b(s: &str) -> Result<SplitComplex, Failure> {
    let v = parse_reals(s, 2)?;
    Ok(SplitComplex::new(v[0], v[1]))
}

fn parse_multicurve(s: &str) -> Result<Vec<usize>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| parse_failure(format!("multicurve {s:?}: {e}"))))
        .collect()
}

fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 || digits == 0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

fn round_value(v: &mut Value, digits: usize) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().and_then(|x| serde_json::Number::from_f64(round_sig(x, digits))) {
                *n = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(|x| round_value(x, digits)),
        Value::Object(o) => o.values_mut().for_each(|x| round_value(x, digits)),
        _ => {}
    }
}

/// Serializes with sorted keys, shortest round-trip floats and optional
/// rounding.
pub fn to_canonical_json<T: Serialize>(value: &T, digits: Option<usize>) -> Result<String, Failure> {
    let mut v = serde_json::to_value(value).map_err(|e| Failure { code: EXIT_GEOMETRY, message: e.to_string() })?;
    if let Some(d) = digits {
        round_value(&mut v, d);
    }
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Failure { code: EXIT_GEOMETRY, message: e.to_string() })?;
    s.push('\n');
    Ok(s)
}

/// A schedule file holds either a rule or the explicit steps.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ScheduleFile {
    Rule(PinchSchedule),
    Explicit { multicurve: Vec<usize>, steps: Vec<ScheduleStep> },
}

/// A random admissible point with lengths well inside the cone.
pub fn sample_point<R: Rng>(d: &PantsDecomposition, rng: &mut R) -> FNPoint {
    let length = |rng: &mut R| {
        let re = rng.gen_range(1.0..3.5);
        SplitComplex::new(re, re * rng.gen_range(-0.5..0.5))
    };
    let curves = (0..d.curves().len())
        .map(|_| {
            let l = length(rng);
            CurveCoords { length: l, twist: SplitComplex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.5..0.5)) }
        })
        .collect();
    let peripherals = (0..d.peripherals().len())
        .map(|_| {
            let l = length(rng);
            PeripheralCoords::from_tag(l, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    FNPoint { curves, peripherals }
}

fn classify(file: &Path, admissible: bool) -> Result<String, Failure> {
    let g: Isometry = read_json(file)?;
    let class = g.classify();
    let mut out = String::new();
    match g.b_length() {
        Ok(l) => writeln!(out, "{class}, length=({}, {})", l.re, l.im),
        Err(_) => writeln!(out, "{class}, length=undefined"),
    }
    .expect("write to string");
    if let Ok(fp) = g.fixed_points() {
        let fmt = |p: &crate::boundary::BoundaryPoint| {
            let (a, b) = p.plus.canonical();
            let (c, d) = p.minus.canonical();
            format!("plus=[{}, {}] minus=[{}, {}]", a + 0.0, b + 0.0, c + 0.0, d + 0.0)
        };
        writeln!(out, "attracting: {}", fmt(&fp.attracting)).expect("write to string");
        writeln!(out, "repelling: {}", fmt(&fp.repelling)).expect("write to string");
    }
    if admissible && class == IsometryClass::Other {
        return Err(Failure { code: EXIT_NOT_ADMISSIBLE, message: format!("{out}isometry is not admissible") });
    }
    Ok(out)
}

fn pinch(
    d: &PantsDecomposition,
    point: &Path,
    schedule: &Path,
    multicurve: Option<&str>,
    tol: &Tolerances,
) -> Result<String, Failure> {
    let x0: FNPoint = read_json(point)?;
    let sched: ScheduleFile = read_json(schedule)?;
    let given = multicurve.map(parse_multicurve).transpose()?;
    let (mc, steps) = match sched {
        ScheduleFile::Rule(rule) => {
            let mc = rule.multicurve();
            if given.as_ref().is_some_and(|g| *g != mc) {
                return Err(Error::ScheduleInvalid("--multicurve disagrees with the schedule".into()).into());
            }
            x0.validate(d, tol)?;
            (mc, rule.expand(&x0)?)
        }
        ScheduleFile::Explicit { multicurve, steps } => {
            if given.as_ref().is_some_and(|g| *g != multicurve) {
                return Err(Error::ScheduleInvalid("--multicurve disagrees with the schedule".into()).into());
            }
            (multicurve, steps)
        }
    };
    let path = pinch_path_with(d, &mc, &x0, &steps, tol)?;
    let mut out = String::from("step,curve,field,value\n");
    for st in &path {
        for (k, c) in mc.iter().enumerate() {
            let e = st.stratum.entry(*c).expect("multicurve entry");
            let (px, py) = st.neighbors[k].plus.canonical();
            let (mx, my) = st.neighbors[k].minus.canonical();
            let fields = [
                ("a", e.coords[0]),
                ("b", e.coords[1]),
                ("c", e.coords[2]),
                ("d", e.coords[3]),
                ("neighbor_plus_x", px),
                ("neighbor_plus_y", py),
                ("neighbor_minus_x", mx),
                ("neighbor_minus_y", my),
            ];
            for (name, v) in fields {
                writeln!(out, "{},{c},{name},{}", st.step, v + 0.0).expect("write to string");
            }
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn geodesic(
    from: Option<&str>,
    to: Option<&str>,
    timelike: Option<&str>,
    delta: Option<&str>,
    lightlike: Option<&str>,
    direction: Option<&str>,
    json: bool,
    samples: usize,
    digits: Option<usize>,
) -> Result<String, Failure> {
    let g = match (from, to, timelike, delta, lightlike, direction) {
        (Some(a), Some(b), None, None, None, None) => geodesic_between(parse_b(a)?, parse_b(b)?)?,
        (None, None, Some(p), Some(dl), None, None) => geodesic_timelike(parse_b(p)?, parse_b(dl)?)?,
        (None, None, None, None, Some(p), Some(v)) => {
            let v = parse_reals(v, 3)?;
            geodesic_lightlike(parse_b(p)?, [v[0], v[1], v[2]])?
        }
        _ => return Err(parse_failure("give --from/--to, --timelike/--delta or --lightlike/--direction")),
    };
    let rows = g.sample(samples.max(2));
    if json {
        let v: Vec<Value> = rows.iter().map(|(t, x)| serde_json::json!({ "t": t, "x": x })).collect();
        return to_canonical_json(&v, digits);
    }
    let mut out = String::from("t,x1,x2,x3\n");
    for (t, x) in rows {
        writeln!(out, "{t},{},{},{}", x[0] + 0.0, x[1] + 0.0, x[2] + 0.0).expect("write to string");
    }
    Ok(out)
}

fn limitset(file: &Path, max_len: usize) -> Result<String, Failure> {
    let s: SurfaceStructure = read_json(file)?;
    let pts = limit_set_sample(&s, max_len)?;
    let mut out = String::from("index,plus,minus\n");
    for (i, p) in pts.iter().enumerate() {
        writeln!(out, "{i},{},{}", p.plus.angle(), p.minus.angle()).expect("write to string");
    }
    Ok(out)
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let mut tol = Tolerances::default();
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(parse_failure("--tol must be positive"));
        }
        tol.e_constraint = t;
        tol.relation = t;
    }
    match &cli.command {
        Command::Classify { file, admissible } => classify(file, *admissible),
        Command::Coords2rep { decomposition, point } => {
            let d = read_decomposition(decomposition)?;
            let x: FNPoint = read_json(point)?;
            let s = coords_to_structure_with(&d, &x, &tol)?;
            s.verify(&tol)?;
            to_canonical_json(&s, cli.digits)
        }
        Command::Rep2coords { decomposition, structure } => {
            let d = read_decomposition(decomposition)?;
            let s: SurfaceStructure = read_json(structure)?;
            to_canonical_json(&structure_to_coords(&d, &s)?, cli.digits)
        }
        Command::Stratum { decomposition, structure, multicurve } => {
            let d = read_decomposition(decomposition)?;
            let s: SurfaceStructure = read_json(structure)?;
            to_canonical_json(&stratum_coords(&d, &parse_multicurve(multicurve)?, &s)?, cli.digits)
        }
        Command::Pinch { decomposition, point, schedule, multicurve } => {
            let d = read_decomposition(decomposition)?;
            pinch(&d, point, schedule, multicurve.as_deref(), &tol)
        }
        Command::Geodesic { from, to, timelike, delta, lightlike, direction, json } => geodesic(
            from.as_deref(),
            to.as_deref(),
            timelike.as_deref(),
            delta.as_deref(),
            lightlike.as_deref(),
            direction.as_deref(),
            *json,
            cli.samples,
            cli.digits,
        ),
        Command::Limitset { structure, max_len } => limitset(structure, *max_len),
        Command::Sample { decomposition } => {
            let d = read_decomposition(decomposition)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            to_canonical_json(&sample_point(&d, &mut rng), cli.digits)
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = execute(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure { code: EXIT_IO, message: e.to_string() }),
    });
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
