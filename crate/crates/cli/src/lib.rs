// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Command-line front end: build flowers, print closed-form and oracle
//! values, and sweep families to compare the two.
//!
//! Exit codes: `0` on success, `1` when `verify` finds a mismatch, `2` on a
//! usage error (bad flags, invalid parameters, unreadable base file).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use flower_core::complete::{self, CompleteFlowerParams};
use flower_core::cycle::{self, CycleFlowerParams};
use flower_core::flower::{
    build_flower, exact_kemeny, exact_kirchhoff, flower_resistance, kemeny_bounds,
    kirchhoff_bounds, max_resistance_search, BaseResistance, CompleteBase, CycleBase, Flower,
    FlowerClosedForm, FlowerLocator, OracleBase,
};
use flower_core::oracle::{
    kemeny_numeric, kirchhoff_numeric, resistance_matrix, ResistanceMatrix, Tolerance,
};
use flower_core::rational::{format_exact, to_f64};
use flower_core::{Graph, Rational};

pub const DEFAULT_TOL: f64 = 1e-9;
/// Environment variable overriding [`DEFAULT_TOL`]; `--tol` wins over both.
pub const TOL_ENV: &str = "FLOWER_TOL";

const CSV_HEADER: &str = "family,m,n,p,quantity,closed_form,oracle,abs_error";

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] flower_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Parser)]
#[command(
    name = "flower",
    version,
    about = "Resistance, Kirchhoff index and Kemeny's constant of flower graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the flower's edge list
    Gen(FlowerArgs),
    /// Resistance of one pair (`--pair`) or the full matrix
    Resist {
        #[command(flatten)]
        flower: FlowerArgs,
        /// Two locators, `petal:base_vertex`
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<String>>,
        #[command(flatten)]
        mode: Mode,
    },
    /// Kirchhoff index
    Kirchhoff {
        #[command(flatten)]
        flower: FlowerArgs,
        #[command(flatten)]
        mode: Mode,
    },
    /// Kemeny's constant
    Kemeny {
        #[command(flatten)]
        flower: FlowerArgs,
        #[command(flatten)]
        mode: Mode,
    },
    /// Lower and upper bounds next to the actual values
    Bounds {
        #[command(flatten)]
        flower: FlowerArgs,
        #[arg(long)]
        json: bool,
    },
    /// Pair of maximum resistance
    Maxres {
        #[command(flatten)]
        flower: FlowerArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compare every closed form with the oracle over a parameter range
    Verify(SweepArgs),
    /// Closed form and oracle values of the indices as CSV (or JSON)
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Family {
    Generic,
    Complete,
    Cycle,
}

impl Family {
    fn tag(self) -> &'static str {
        match self {
            Family::Generic => "generic",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
        }
    }
}

#[derive(Debug, Clone, Args)]
struct FlowerArgs {
    #[arg(long, value_enum, default_value_t = Family::Generic)]
    family: Family,
    /// Base size (complete and cycle families)
    #[arg(short)]
    m: Option<usize>,
    /// Number of petals
    #[arg(short)]
    n: Option<usize>,
    /// Cycle distance between the marked vertices
    #[arg(short)]
    p: Option<usize>,
    /// Base graph edge list (generic family)
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
}

#[derive(Debug, Clone, Copy, Args)]
struct Mode {
    /// Print only the exact closed form
    #[arg(long)]
    exact: bool,
    /// Print only the oracle value
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span {
    lo: usize,
    hi: usize,
}

fn parse_span(s: &str) -> std::result::Result<Span, String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected a:b, got {s:?}"))?;
    let lo = a
        .trim()
        .parse::<usize>()
        .map_err(|e| format!("{a:?}: {e}"))?;
    let hi = b
        .trim()
        .parse::<usize>()
        .map_err(|e| format!("{b:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok(Span { lo, hi })
}

#[derive(Debug, Clone, Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value_t = Family::Generic)]
    family: Family,
    /// Inclusive range of base sizes
    #[arg(long, value_parser = parse_span, default_value = "3:5")]
    m_range: Span,
    /// Inclusive range of petal counts
    #[arg(long, value_parser = parse_span, default_value = "3:6")]
    n_range: Span,
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    /// Absolute tolerance (relative beyond magnitude 1e3)
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    json: bool,
}

/// One row of `sweep` output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub m: usize,
    pub n: usize,
    pub p: Option<usize>,
    pub quantity: String,
    pub closed_form: String,
    pub oracle: f64,
    pub abs_error: f64,
}

impl SweepRow {
    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family,
            self.m,
            self.n,
            self.p.map(|p| p.to_string()).unwrap_or_default(),
            self.quantity,
            self.closed_form,
            sig12(self.oracle),
            sig12(self.abs_error)
        )
    }
}

#[derive(Debug, Serialize)]
struct ValueReport {
    quantity: String,
    closed_form: String,
    oracle: f64,
    abs_error: f64,
}

/// Format with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}

fn resolve_tol(flag: Option<f64>) -> CliResult<Tolerance> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("{TOL_ENV}={s:?}: {e}")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        return usage(format!("tolerance must be positive, got {tol}"));
    }
    Ok(Tolerance::with_abs(tol))
}

/// Base graph supplied with `--base`, with its oracle resistances.
struct BaseInput {
    graph: Graph,
    x: usize,
    y: usize,
    src: OracleBase,
}

impl BaseInput {
    fn load(path: &PathBuf, x: Option<usize>, y: Option<usize>) -> CliResult<Self> {
        let (Some(x), Some(y)) = (x, y) else {
            return usage("--base needs --x and --y");
        };
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let graph = Graph::parse_edge_list(&text)?;
        graph.check_vertex(x)?;
        graph.check_vertex(y)?;
        let src = OracleBase::new(&graph)?;
        Ok(BaseInput { graph, x, y, src })
    }
}

enum Model {
    Complete(CompleteFlowerParams),
    Cycle(CycleFlowerParams),
    Generic,
}

/// A flower together with the closed forms that apply to it.
struct Instance {
    family: Family,
    model: Model,
    flower: Flower,
    src: Box<dyn BaseResistance>,
}

impl Instance {
    fn complete(m: usize, n: usize) -> CliResult<Self> {
        let params = CompleteFlowerParams::new(m, n)?;
        Ok(Instance {
            family: Family::Complete,
            model: Model::Complete(params),
            flower: build_flower(&params.spec()),
            src: Box::new(CompleteBase { m }),
        })
    }

    fn cycle(m: usize, n: usize, p: usize) -> CliResult<Self> {
        let params = CycleFlowerParams::new(m, n, p)?;
        Ok(Instance {
            family: Family::Cycle,
            model: Model::Cycle(params),
            flower: build_flower(&params.spec()),
            src: Box::new(CycleBase { m }),
        })
    }

    fn generic(base: &BaseInput, n: usize) -> CliResult<Self> {
        let spec = flower_core::flower::FlowerSpec::new(base.graph.clone(), base.x, base.y, n)?;
        Ok(Instance {
            family: Family::Generic,
            model: Model::Generic,
            flower: build_flower(&spec),
            src: Box::new(base.src.clone()),
        })
    }

    fn from_args(a: &FlowerArgs) -> CliResult<Self> {
        let Some(n) = a.n else {
            return usage("-n is required");
        };
        if a.family != Family::Generic && (a.base.is_some() || a.x.is_some() || a.y.is_some()) {
            return usage("--base, --x and --y only apply to the generic family");
        }
        if a.family != Family::Cycle && a.p.is_some() {
            return usage("-p only applies to the cycle family");
        }
        match a.family {
            Family::Complete => match a.m {
                Some(m) => Self::complete(m, n),
                None => usage("the complete family needs -m"),
            },
            Family::Cycle => match (a.m, a.p) {
                (Some(m), Some(p)) => Self::cycle(m, n, p),
                _ => usage("the cycle family needs -m and -p"),
            },
            Family::Generic => {
                if a.m.is_some() {
                    return usage(
                        "-m does not apply to the generic family; the base size comes from --base",
                    );
                }
                let Some(path) = &a.base else {
                    return usage("the generic family needs --base, --x and --y");
                };
                Self::generic(&BaseInput::load(path, a.x, a.y)?, n)
            }
        }
    }

    fn m(&self) -> usize {
        self.flower.spec().base().vertex_count()
    }

    fn n(&self) -> usize {
        self.flower.spec().n()
    }

    fn p(&self) -> Option<usize> {
        match self.model {
            Model::Cycle(c) => Some(c.p()),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        let p = self
            .p()
            .map(|p| p.to_string())
            .unwrap_or_else(|| "-".into());
        format!(
            "family={} (m,n,p)=({},{},{p})",
            self.family.tag(),
            self.m(),
            self.n()
        )
    }

    fn locator(&self, text: &str) -> CliResult<FlowerLocator> {
        let parsed = text.split_once(':').and_then(|(a, b)| {
            Some((
                a.trim().parse::<usize>().ok()?,
                b.trim().parse::<usize>().ok()?,
            ))
        });
        let Some((petal, v)) = parsed else {
            return usage(format!("locator {text:?} is not petal:base_vertex"));
        };
        self.flower
            .spec()
            .locator(petal, v)
            .map_err(|e| CliError::Usage(format!("locator {text:?}: {e}")))
    }

    fn pair(&self, u: FlowerLocator, v: FlowerLocator) -> CliResult<Rational> {
        if u == v {
            return Ok(Rational::from_integer(0.into()));
        }
        Ok(match self.model {
            Model::Complete(p) => complete::cf_pair_resistance(p, u, v)?,
            Model::Cycle(c) => cycle::gs_pair_resistance(c, u, v)?,
            Model::Generic => flower_resistance(self.flower.spec(), u, v, self.src.as_ref())?,
        })
    }

    fn kirchhoff(&self) -> Rational {
        match self.model {
            Model::Complete(p) => complete::cf_kirchhoff(p),
            Model::Cycle(c) => cycle::gs_kirchhoff(c),
            Model::Generic => exact_kirchhoff(
                self.flower.graph(),
                &FlowerClosedForm::new(&self.flower, self.src.as_ref()),
            ),
        }
    }

    fn kemeny(&self) -> Rational {
        match self.model {
            Model::Complete(p) => complete::cf_kemeny(p),
            Model::Cycle(c) => cycle::gs_kemeny(c),
            Model::Generic => exact_kemeny(
                self.flower.graph(),
                &FlowerClosedForm::new(&self.flower, self.src.as_ref()),
            ),
        }
    }
}

fn sweep_instances(a: &SweepArgs) -> CliResult<Vec<Instance>> {
    let mut out = Vec::new();
    let ns = a.n_range.lo..=a.n_range.hi;
    match a.family {
        Family::Generic => {
            let Some(path) = &a.base else {
                return usage("the generic family needs --base, --x and --y");
            };
            let base = BaseInput::load(path, a.x, a.y)?;
            for n in ns {
                out.push(Instance::generic(&base, n)?);
            }
        }
        family => {
            if a.base.is_some() || a.x.is_some() || a.y.is_some() {
                return usage("--base, --x and --y only apply to the generic family");
            }
            for m in a.m_range.lo..=a.m_range.hi {
                for n in ns.clone() {
                    if family == Family::Complete {
                        out.push(Instance::complete(m, n)?);
                    } else {
                        for p in 1..=m / 2 {
                            out.push(Instance::cycle(m, n, p)?);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn write_value(
    out: &mut dyn Write,
    mode: Mode,
    quantity: &str,
    closed: &Rational,
    oracle: f64,
) -> CliResult<()> {
    let abs_error = (to_f64(closed) - oracle).abs();
    if mode.json {
        let report = ValueReport {
            quantity: quantity.to_string(),
            closed_form: format_exact(closed),
            oracle,
            abs_error,
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("plain struct serializes")
        )?;
    } else if mode.exact && !mode.oracle {
        writeln!(out, "{}", format_exact(closed))?;
    } else if mode.oracle && !mode.exact {
        writeln!(out, "{}", sig12(oracle))?;
    } else {
        writeln!(out, "closed_form {}", format_exact(closed))?;
        writeln!(out, "oracle {}", sig12(oracle))?;
        writeln!(out, "abs_error {}", sig12(abs_error))?;
    }
    Ok(())
}

fn cmd_resist(
    out: &mut dyn Write,
    inst: &Instance,
    pair: Option<&[String]>,
    mode: Mode,
) -> CliResult<()> {
    let flower = &inst.flower;
    if let Some(pair) = pair {
        let (u, v) = (inst.locator(&pair[0])?, inst.locator(&pair[1])?);
        let closed = inst.pair(u, v)?;
        let oracle = flower_core::oracle::resistance(
            flower.graph(),
            flower.label_of(u),
            flower.label_of(v),
        )?;
        return write_value(out, mode, &format!("resistance({u},{v})"), &closed, oracle);
    }
    let size = flower.graph().vertex_count();
    let labels: Vec<String> = (0..size)
        .map(|a| flower.locator_of(a).to_string())
        .collect();
    if mode.oracle && !mode.exact {
        let r = resistance_matrix(flower.graph());
        let rows: Vec<Vec<f64>> = (0..size).map(|a| r.row(a).to_vec()).collect();
        if mode.json {
            let doc = serde_json::json!({ "labels": labels, "matrix": rows });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("json value serializes")
            )?;
        } else {
            writeln!(out, "# {}", labels.join(" "))?;
            for row in rows {
                writeln!(
                    out,
                    "{}",
                    row.iter().map(|&x| sig12(x)).collect::<Vec<_>>().join(" ")
                )?;
            }
        }
        return Ok(());
    }
    let mut rows = Vec::with_capacity(size);
    for a in 0..size {
        let mut row = Vec::with_capacity(size);
        for b in 0..size {
            row.push(format_exact(
                &inst.pair(flower.locator_of(a), flower.locator_of(b))?,
            ));
        }
        rows.push(row);
    }
    if mode.json {
        let doc = serde_json::json!({ "labels": labels, "matrix": rows });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("json value serializes")
        )?;
    } else {
        writeln!(out, "# {}", labels.join(" "))?;
        for row in rows {
            writeln!(out, "{}", row.join(" "))?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct BoundsRow {
    quantity: &'static str,
    lo: String,
    hi: String,
    actual: String,
}

fn cmd_bounds(out: &mut dyn Write, inst: &Instance, json: bool) -> CliResult<()> {
    let spec = inst.flower.spec();
    let base = spec.base();
    let src = inst.src.as_ref();
    let r_xy = src.base_resistance(spec.x(), spec.y());
    let (kf_lo, kf_hi) = kirchhoff_bounds(spec, &exact_kirchhoff(base, src), &r_xy);
    let (kem_lo, kem_hi) = kemeny_bounds(
        spec,
        &exact_kemeny(base, src),
        &r_xy,
        base.edge_count(),
        base.vertex_count(),
    );
    let rows = [
        BoundsRow {
            quantity: "kirchhoff",
            lo: format_exact(&kf_lo),
            hi: format_exact(&kf_hi),
            actual: format_exact(&inst.kirchhoff()),
        },
        BoundsRow {
            quantity: "kemeny",
            lo: format_exact(&kem_lo),
            hi: format_exact(&kem_hi),
            actual: format_exact(&inst.kemeny()),
        },
    ];
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&rows).expect("plain struct serializes")
        )?;
    } else {
        writeln!(out, "quantity lo hi actual")?;
        for r in rows {
            writeln!(out, "{} {} {} {}", r.quantity, r.lo, r.hi, r.actual)?;
        }
    }
    Ok(())
}

fn cmd_maxres(out: &mut dyn Write, inst: &Instance, json: bool) -> CliResult<()> {
    let best = max_resistance_search(inst.flower.spec(), inst.src.as_ref())?;
    if json {
        let doc = serde_json::json!({
            "u": best.u.to_string(),
            "v": best.v.to_string(),
            "d": best.d,
            "value": format_exact(&best.value),
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("json value serializes")
        )?;
    } else {
        writeln!(
            out,
            "u={} v={} d={} value={}",
            best.u,
            best.v,
            best.d,
            format_exact(&best.value)
        )?;
    }
    Ok(())
}

fn max_entry(r: &ResistanceMatrix) -> f64 {
    (0..r.size())
        .flat_map(|a| r.row(a).iter().copied())
        .fold(0.0, f64::max)
}

fn sweep_rows(inst: &Instance) -> CliResult<Vec<SweepRow>> {
    let g = inst.flower.graph();
    let r = resistance_matrix(g);
    let max = max_resistance_search(inst.flower.spec(), inst.src.as_ref())?;
    let values = [
        ("kirchhoff", inst.kirchhoff(), kirchhoff_numeric(&r)),
        ("kemeny", inst.kemeny(), kemeny_numeric(g, &r)),
        ("max_resistance", max.value, max_entry(&r)),
    ];
    Ok(values
        .into_iter()
        .map(|(quantity, closed, oracle)| SweepRow {
            family: inst.family.tag().to_string(),
            m: inst.m(),
            n: inst.n(),
            p: inst.p(),
            quantity: quantity.to_string(),
            closed_form: format_exact(&closed),
            oracle,
            abs_error: (to_f64(&closed) - oracle).abs(),
        })
        .collect())
}

fn sort_instances(instances: &mut [Instance]) {
    instances.sort_by_key(|i| (i.family, i.m(), i.n(), i.p()));
}

fn cmd_sweep(out: &mut dyn Write, args: &SweepArgs) -> CliResult<()> {
    let mut instances = sweep_instances(args)?;
    sort_instances(&mut instances);
    let mut rows = Vec::new();
    for inst in &instances {
        rows.extend(sweep_rows(inst)?);
    }
    if args.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&rows).expect("plain struct serializes")
        )?;
    } else {
        writeln!(out, "{CSV_HEADER}")?;
        for row in &rows {
            writeln!(out, "{}", row.csv())?;
        }
    }
    Ok(())
}

/// Returns the number of mismatches.
fn cmd_verify(out: &mut dyn Write, args: &SweepArgs) -> CliResult<usize> {
    let tol = resolve_tol(args.tol)?;
    let mut instances = sweep_instances(args)?;
    sort_instances(&mut instances);
    let (mut mismatches, mut checks) = (0usize, 0usize);
    for inst in &instances {
        let g = inst.flower.graph();
        let r = resistance_matrix(g);
        for a in 0..g.vertex_count() {
            for b in a + 1..g.vertex_count() {
                let (u, v) = (inst.flower.locator_of(a), inst.flower.locator_of(b));
                let expected = inst.pair(u, v)?;
                checks += 1;
                if !tol.close(to_f64(&expected), r.get(a, b)) {
                    mismatches += 1;
                    writeln!(
                        out,
                        "FAIL {} pair=({u}, {v}) expected={} observed={}",
                        inst.describe(),
                        format_exact(&expected),
                        sig12(r.get(a, b))
                    )?;
                }
            }
        }
        for (quantity, expected, observed) in [
            ("kirchhoff", inst.kirchhoff(), kirchhoff_numeric(&r)),
            ("kemeny", inst.kemeny(), kemeny_numeric(g, &r)),
        ] {
            checks += 1;
            if !tol.close(to_f64(&expected), observed) {
                mismatches += 1;
                writeln!(
                    out,
                    "FAIL {} quantity={quantity} expected={} observed={}",
                    inst.describe(),
                    format_exact(&expected),
                    sig12(observed)
                )?;
            }
        }
    }
    writeln!(
        out,
        "{} flowers, {checks} checks, {mismatches} mismatches (tol {:e})",
        instances.len(),
        tol.abs
    )?;
    Ok(mismatches)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Gen(a) => {
            write!(
                out,
                "{}",
                Instance::from_args(&a)?.flower.graph().to_edge_list()
            )?;
        }
        Command::Resist { flower, pair, mode } => {
            cmd_resist(out, &Instance::from_args(&flower)?, pair.as_deref(), mode)?;
        }
        Command::Kirchhoff { flower, mode } => {
            let inst = Instance::from_args(&flower)?;
            let oracle = kirchhoff_numeric(&resistance_matrix(inst.flower.graph()));
            write_value(out, mode, "kirchhoff", &inst.kirchhoff(), oracle)?;
        }
        Command::Kemeny { flower, mode } => {
            let inst = Instance::from_args(&flower)?;
            let g = inst.flower.graph();
            let oracle = kemeny_numeric(g, &resistance_matrix(g));
            write_value(out, mode, "kemeny", &inst.kemeny(), oracle)?;
        }
        Command::Bounds { flower, json } => cmd_bounds(out, &Instance::from_args(&flower)?, json)?,
        Command::Maxres { flower, json } => cmd_maxres(out, &Instance::from_args(&flower)?, json)?,
        Command::Sweep(a) => cmd_sweep(out, &a)?,
        Command::Verify(a) => {
            if cmd_verify(out, &a)? > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

/// Parse `argv` (including the program name), run the command and return
/// the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let code = match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    };
    let _ = out.flush();
    code
}
