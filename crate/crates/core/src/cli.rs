//! Command-line front end. Exit codes: 0 success, 1 computation failure
//! (no convergence, not a soliton, table mismatch), 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    annihilator, associator_defect, centroid_dim, derivation_algebra, find_unit, flags, io, is_jordan, jordan_defect, power_dims, product_rank, radical,
    StructureTensor,
};
use crate::catalog::{self, ReproduceReport};
use crate::error::{Error, Result};
use crate::flow::{run_flow, FlowOptions};
use crate::linalg::{eigvalsh, CMat};
use crate::moment::{soliton_check, soliton_type_with, SOLITON_TOL};
use crate::rational::{fmt_rational, snap_default};
use crate::stratify::{beta_mu, StratumLabel};

#[derive(Parser, Debug)]
#[command(name = "jordan-flow", version, about = "Moment maps, energy flow and strata of complex Jordan algebras")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Soliton tolerance (validate: Jordan tolerance).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub max_steps: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the file format and the Jordan identity.
    Validate(Input),
    /// Structural invariants and table flags.
    Invariants(Input),
    /// Moment matrix, energy and soliton test.
    Moment(Input),
    /// Run the negative gradient flow of the energy.
    Flow {
        #[command(flatten)]
        input: Input,
        /// Write step,energy,grad_norm rows to this CSV file.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Start from a seeded random basis change of the input.
        #[arg(long)]
        random_start: bool,
    },
    /// Stratum label of the flow limit and the min-norm point of the support.
    Stratify(Input),
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Recompute the classification tables.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug)]
pub struct Input {
    /// Tensor JSON file.
    pub path: Option<PathBuf>,
    /// Built-in algebra such as A_3_7.
    #[arg(long, conflicts_with = "path")]
    pub catalog: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// Print a built-in algebra in the tensor JSON format.
    Export {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    List {
        #[arg(long)]
        dim: Option<usize>,
    },
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// Only this dimension (default: 1 through 4).
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Worker threads; 0 means one per core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Md,
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn fmt_f64(x: f64) -> String {
    let r = round12(x);
    if r == 0.0 {
        "0".into()
    } else if !(1e-4..1e12).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        r.to_string()
    }
}

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round12(x))
    } else {
        Value::Null
    }
}

fn fraction_or_float(x: f64) -> String {
    match snap_default(x) {
        Ok(r) => fmt_rational(&r),
        Err(_) => fmt_f64(x),
    }
}

fn is_real_diagonal(m: &CMat) -> bool {
    let n = m.nrows();
    (0..n).all(|i| (0..n).all(|j| if i == j { m[(i, j)].im.abs() < 1e-12 } else { m[(i, j)].norm() < 1e-12 }))
}

fn matrix_text(m: &CMat) -> String {
    let cell = |z: crate::linalg::C| {
        if z.im.abs() < 1e-12 {
            fmt_f64(z.re)
        } else {
            format!("{}{:+}i", fmt_f64(z.re), round12(z.im))
        }
    };
    if is_real_diagonal(m) {
        let d: Vec<String> = (0..m.nrows()).map(|i| fmt_f64(m[(i, i)].re)).collect();
        return format!("diag({})", d.join(", "));
    }
    let rows: Vec<String> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| cell(m[(i, j)])).collect::<Vec<_>>().join(", ")).collect();
    format!("[[{}]]", rows.join("], ["))
}

fn matrix_json(m: &CMat) -> Value {
    let part = |f: fn(&crate::linalg::C) -> f64| -> Value { (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| num(f(&m[(i, j)]))).collect::<Vec<_>>()).collect() };
    json!({ "re": part(|z| z.re), "im": part(|z| z.im) })
}

fn tensor_json(mu: &StructureTensor) -> Value {
    serde_json::from_str(&io::to_json(mu)).expect("tensor JSON parses")
}

fn fractions(label: &StratumLabel) -> Value {
    label.beta_text().into_iter().map(Value::from).collect()
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn header(&mut self, cmd: &str) -> Result<()> {
        if !self.cli.json {
            writeln!(self.out, "# jordan-flow {cmd} seed={}", self.cli.seed)?;
        }
        Ok(())
    }

    fn line(&mut self, text: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", text.as_ref())?;
        Ok(())
    }

    fn emit(&mut self, value: Value) -> Result<()> {
        writeln!(self.out, "{}", serde_json::to_string_pretty(&value)?)?;
        Ok(())
    }

    fn soliton_tol(&self) -> f64 {
        self.cli.tol.unwrap_or(SOLITON_TOL)
    }

    fn flow_options(&self) -> FlowOptions {
        let mut o = FlowOptions { seed: self.cli.seed, ..FlowOptions::default() };
        if let Some(t) = self.cli.tol {
            o.soliton_tol = t;
        }
        if let Some(m) = self.cli.max_steps {
            o.max_steps = m;
        }
        o
    }
}

fn load_input(input: &Input) -> Result<(String, StructureTensor)> {
    match (&input.path, &input.catalog) {
        (Some(p), None) => Ok((p.display().to_string(), io::load(p)?)),
        (None, Some(name)) => Ok((name.clone(), catalog::builtin(name)?.tensor)),
        _ => Err(Error::Format("give a tensor file or --catalog NAME".into())),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Format(_) | Error::Io(_) | Error::Json(_) | Error::UnknownName(_) | Error::DimensionMismatch { .. } | Error::DimensionTooSmall(_) => 2,
        _ => 1,
    }
}

fn validate(ctx: &mut Ctx, input: &Input) -> Result<i32> {
    let (source, mu) = load_input(input)?;
    let tol = ctx.cli.tol.unwrap_or(1e-9);
    let defect = jordan_defect(&mu);
    let ok = is_jordan(&mu, tol);
    if ctx.cli.json {
        ctx.emit(json!({
            "command": "validate", "seed": ctx.cli.seed, "source": source, "dim": mu.dim(),
            "products": mu.entries().len(), "jordan_defect": num(defect), "is_jordan": ok, "tol": num(tol),
        }))?;
    } else {
        ctx.header("validate")?;
        ctx.line(format!("source: {source}"))?;
        ctx.line(format!("dim: {}, products: {}", mu.dim(), mu.entries().len()))?;
        ctx.line(format!("jordan defect: {}", fmt_f64(defect)))?;
        ctx.line(if ok { "jordan: yes" } else { "jordan: no" })?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn invariants(ctx: &mut Ctx, input: &Input) -> Result<i32> {
    let (source, mu) = load_input(input)?;
    let f = flags(&mu);
    let pd = power_dims(&mu);
    let der = derivation_algebra(&mu).dim;
    let rad = radical(&mu).dim();
    let ann = annihilator(&mu).dim();
    let cen = centroid_dim(&mu);
    let pr = product_rank(&mu);
    let unit = find_unit(&mu).is_some();
    if ctx.cli.json {
        ctx.emit(json!({
            "command": "invariants", "seed": ctx.cli.seed, "source": source, "dim": mu.dim(),
            "flags": {
                "associative": f.associative, "simple": f.simple, "semisimple": f.semisimple,
                "nilpotent": f.nilpotent, "unital": f.unital, "decomposable": f.decomposable,
            },
            "flags_text": f.to_string(), "dim_der": der, "radical_dim": rad, "annihilator_dim": ann,
            "centroid_dim": cen, "power_dims": pd.dims, "product_rank": pr, "has_unit": unit,
            "jordan_defect": num(jordan_defect(&mu)), "associator_defect": num(associator_defect(&mu)),
        }))?;
    } else {
        ctx.header("invariants")?;
        ctx.line(format!("source: {source}"))?;
        ctx.line(format!("flags: {f}"))?;
        ctx.line(format!("dim Der: {der}"))?;
        ctx.line(format!("dim Rad: {rad}"))?;
        ctx.line(format!("dim Ann: {ann}"))?;
        ctx.line(format!("centroid rank: {cen}"))?;
        ctx.line(format!("powers: {:?}", pd.dims))?;
        ctx.line(format!("product rank: {pr}"))?;
    }
    Ok(0)
}

fn moment(ctx: &mut Ctx, input: &Input) -> Result<i32> {
    let (source, mu) = load_input(input)?;
    let tol = ctx.soliton_tol();
    let r = soliton_check(&mu, tol)?;
    let mut spec = eigvalsh(&r.m);
    spec.sort_by(f64::total_cmp);
    let ty = soliton_type_with(&mu, tol).ok();
    if ctx.cli.json {
        ctx.emit(json!({
            "command": "moment", "seed": ctx.cli.seed, "source": source, "dim": mu.dim(),
            "moment": matrix_json(&r.moment), "m_eigenvalues": spec.iter().map(|&x| num(x)).collect::<Vec<_>>(),
            "energy": num(r.energy), "energy_fraction": snap_default(r.energy).ok().map(|e| fmt_rational(&e)),
            "c": num(r.c), "soliton_residual": num(r.soliton_residual), "is_soliton": r.is_soliton,
            "type": ty.as_ref().map(|t| t.to_string()), "beta": ty.as_ref().map(|t| t.beta_text()), "tol": num(tol),
        }))?;
    } else {
        ctx.header("moment")?;
        ctx.line(format!("source: {source}"))?;
        ctx.line(format!("M = {}", matrix_text(&r.moment)))?;
        ctx.line(format!("E = {}", fraction_or_float(r.energy)))?;
        ctx.line(format!("c = {}", fmt_f64(r.c)))?;
        ctx.line(format!("soliton residual = {}", fmt_f64(r.soliton_residual)))?;
        match &ty {
            Some(t) => ctx.line(format!("soliton: yes, type {t}, beta ({})", t.beta_text().join(", ")))?,
            None => ctx.line("soliton: no")?,
        }
    }
    Ok(0)
}

fn flow(ctx: &mut Ctx, input: &Input, trace_path: Option<&PathBuf>, random_start: bool) -> Result<i32> {
    let (source, mu) = load_input(input)?;
    let opts = FlowOptions { random_start, ..ctx.flow_options() };
    let tr = run_flow(&mu, &opts)?;
    if let Some(p) = trace_path {
        let file = std::fs::File::create(p)?;
        tr.write_csv(std::io::BufWriter::new(file))?;
    }
    let e = tr.terminal_energy();
    let ok = tr.converged && tr.terminal_report.is_soliton;
    if ctx.cli.json {
        ctx.emit(json!({
            "command": "flow", "seed": ctx.cli.seed, "source": source, "dim": mu.dim(),
            "steps": tr.steps_taken, "stop": tr.stop.to_string(), "converged": tr.converged, "extracted": tr.extracted,
            "initial_energy": num(tr.energies[0]), "energy": num(e), "energy_fraction": snap_default(e).ok().map(|x| fmt_rational(&x)),
            "soliton_residual": num(tr.terminal_report.soliton_residual), "is_soliton": tr.terminal_report.is_soliton,
            "type": tr.terminal_type.as_ref().map_or("unsnapped".to_string(), |t| t.to_string()),
            "beta": tr.terminal_type.as_ref().map(|t| t.beta_text()),
            "jordan_warning": tr.jordan_warning.map(num), "terminal": tensor_json(&tr.terminal),
        }))?;
    } else {
        ctx.header("flow")?;
        ctx.line(format!("source: {source}"))?;
        if let Some(d) = tr.jordan_warning {
            ctx.line(format!("warning: input is not Jordan (defect {})", fmt_f64(d)))?;
        }
        ctx.line(format!("steps: {} ({})", tr.steps_taken, tr.stop))?;
        ctx.line(format!("energy: {} -> {}", fmt_f64(tr.energies[0]), fraction_or_float(e)))?;
        ctx.line(format!("soliton residual: {}", fmt_f64(tr.terminal_report.soliton_residual)))?;
        if tr.extracted {
            ctx.line("terminal: limit outside the orbit")?;
        }
        ctx.line(format!("type: {}", tr.terminal_type.as_ref().map_or("unsnapped".to_string(), |t| t.to_string())))?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn stratify(ctx: &mut Ctx, input: &Input) -> Result<i32> {
    let (source, mu) = load_input(input)?;
    let opts = ctx.flow_options();
    let bm = beta_mu(&mu)?;
    let label = crate::stratify::stratum_of(&mu, &opts)?;
    let support: Vec<[usize; 3]> = bm.support.iter().map(|w| [w.indices.0 + 1, w.indices.1 + 1, w.indices.2 + 1]).collect();
    if ctx.cli.json {
        ctx.emit(json!({
            "command": "stratify", "seed": ctx.cli.seed, "source": source, "dim": mu.dim(),
            "beta": fractions(&label), "energy": fmt_rational(&label.norm_sq), "support": support,
            "certificate_gap": num(bm.certificate_gap),
            "beta_mu": bm.label.as_ref().map(fractions), "beta_mu_norm_sq": num(bm.norm_sq),
        }))?;
    } else {
        ctx.header("stratify")?;
        ctx.line(format!("source: {source}"))?;
        ctx.line(format!("stratum: {label}"))?;
        match &bm.label {
            Some(l) => ctx.line(format!("beta_mu: {l}"))?,
            None => ctx.line(format!("beta_mu: {:?} (unsnapped)", bm.point.iter().map(|x| round12(*x)).collect::<Vec<_>>()))?,
        }
        ctx.line(format!("support weights: {}", support.len()))?;
        ctx.line(format!("certificate gap: {}", fmt_f64(bm.certificate_gap)))?;
    }
    Ok(0)
}

fn report_out(ctx: &mut Ctx, report: &ReproduceReport, format: Format) -> Result<i32> {
    if ctx.cli.json {
        let rows: Vec<Value> = report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "name": r.name, "status": r.status.to_string(), "type": r.expected_type,
                    "expected_beta": r.expected_beta.iter().map(fmt_rational).collect::<Vec<_>>(),
                    "expected_energy": fmt_rational(&r.expected_energy),
                    "beta": r.label.as_ref().map(|l| l.beta_text()), "energy": num(r.energy),
                    "soliton": r.soliton, "residual": num(r.residual),
                    "flags": r.flags_computed.to_string(), "table_flags": r.flags_expected.to_string(), "notes": r.notes,
                })
            })
            .collect();
        ctx.emit(json!({
            "command": "reproduce", "seed": report.seed, "dims": report.dims, "rows": rows,
            "failures": report.failures().len(), "strata": report.distinct_strata(),
        }))?;
    } else {
        let text = match format {
            Format::Csv => report.to_csv(),
            Format::Md => report.to_markdown(),
        };
        write!(ctx.out, "{text}")?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn reproduce(ctx: &mut Ctx, args: &ReproduceArgs) -> Result<i32> {
    let dims = match args.dim {
        Some(d) if (1..=4).contains(&d) => vec![d],
        Some(d) => return Err(Error::Format(format!("no tables in dimension {d}"))),
        None => vec![1, 2, 3, 4],
    };
    let report = catalog::reproduce_tables(&dims, args.jobs, &ctx.flow_options())?;
    report_out(ctx, &report, args.format)
}

fn catalog_cmd(ctx: &mut Ctx, cmd: &CatalogCommand) -> Result<i32> {
    match cmd {
        CatalogCommand::Export { name, out } => {
            let entry = catalog::builtin(name)?;
            match out {
                Some(p) => io::save(&entry.tensor, p)?,
                None => ctx.line(io::to_json(&entry.tensor))?,
            }
            Ok(0)
        }
        CatalogCommand::List { dim } => {
            let list: Vec<&catalog::CatalogEntry> = catalog::all().iter().filter(|e| dim.is_none_or(|d| e.dim == d)).collect();
            if ctx.cli.json {
                let rows: Vec<Value> = list
                    .iter()
                    .map(|e| {
                        json!({
                            "name": e.name, "dim": e.dim, "flags": e.flags.to_string(),
                            "type": e.expected_type.as_ref().map_or("none".to_string(), |t| t.to_string()),
                            "energy": fmt_rational(&e.expected_energy), "decomposition": e.decomposition,
                        })
                    })
                    .collect();
                ctx.emit(json!({ "command": "catalog list", "seed": ctx.cli.seed, "entries": rows }))?;
            } else {
                ctx.header("catalog list")?;
                for e in list {
                    let ty = e.expected_type.as_ref().map_or("none".to_string(), |t| t.to_string());
                    ctx.line(format!("{:<8} {:<10} {:<20} E={}", e.name, e.flags.to_string(), ty, fmt_rational(&e.expected_energy)))?;
                }
            }
            Ok(0)
        }
        CatalogCommand::Reproduce(args) => reproduce(ctx, args),
    }
}

fn dispatch(ctx: &mut Ctx) -> Result<i32> {
    match &ctx.cli.command {
        Command::Validate(i) => validate(ctx, i),
        Command::Invariants(i) => invariants(ctx, i),
        Command::Moment(i) => moment(ctx, i),
        Command::Flow { input, trace, random_start } => flow(ctx, input, trace.as_ref(), *random_start),
        Command::Stratify(i) => stratify(ctx, i),
        Command::Catalog(c) => catalog_cmd(ctx, c),
        Command::Reproduce(a) => reproduce(ctx, a),
    }
}

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            let _ = writeln!(err, "error: --tol must be positive");
            return 2;
        }
    }
    let mut ctx = Ctx { cli: &cli, out };
    match dispatch(&mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
