//! Command-line front end.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 usage error.
//! Output depends only on the arguments (and never on whether the table
//! came from the cache).

pub mod cache;

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::closed_form::{brousseau_closed, brute_convolution, brute_sum, convolution_closed, ClosedForm, CoeffTable, FormKind};
use crate::error::Error;
use crate::extensions::{general_cubic_check, pell_cubic_check};
use crate::identities::{
    auxiliary_power_check, closed_form_points_check, cross_formula_check, egf_check,
    egf_coefficients, erbacher_fuchs_check, lower_order_check, theorem1_check, theorem2_check,
    theorem3_check, zeitlin_firstkind_report, AltMethod, IdentityReport, ShannonOllerton, Which,
};
use crate::sequences::RecurrenceSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "brousseau", version, about = "Closed forms and identity checks for weighted Fibonacci sums")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory holding the coefficient table cache.
    #[arg(long, env = "BROUSSEAU_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Seed for extra randomized spot checks in `verify`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Sum,
    Convolution,
}

impl From<KindArg> for FormKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Sum => FormKind::Sum,
            KindArg::Convolution => FormKind::Convolution,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Theorem3,
    Ledin,
    Dresden,
    Hoggatt,
    Zeitlin2,
    Zeitlin1,
    Eulerian,
    Egf,
    Adegoke,
    ErbacherFuchs,
    Pell,
    General,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print k, A_k, B_k for 0 <= k <= max-k.
    Coeffs {
        #[arg(long)]
        max_k: usize,
    },
    /// Print the closed form of a weighted sum or convolution.
    Formula {
        #[arg(long, value_enum, default_value_t = KindArg::Sum)]
        kind: KindArg,
        #[arg(long)]
        power: u32,
    },
    /// Run identity suites.
    Verify(VerifyArgs),
    /// Check the Bernoulli-number relation for B_k, 2 <= k <= max-k.
    Conjecture {
        #[arg(long)]
        max_k: usize,
        /// Print a progress line every this many k.
        #[arg(long, default_value_t = 50)]
        stride: usize,
    },
    /// Evaluate a weighted sum or convolution term by term.
    Oracle {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        power: u32,
        #[arg(long)]
        n: u64,
    },
    /// Print k! [x^k] of the generating function for A or B.
    Series {
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long)]
        max_k: usize,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 40)]
    pub max_k: usize,
    #[arg(long, default_value_t = 100)]
    pub max_n: u64,
    #[arg(long, default_value_t = 10)]
    pub max_p: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
}

/// Version stamped on every JSON document and on the cache file.
pub const SCHEMA_VERSION: u32 = 1;

/// JSON document emitted by `coeffs --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffsDoc {
    pub schema_version: u32,
    pub rows: Vec<CoeffRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub k: usize,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
}

impl CoeffsDoc {
    pub fn from_table(table: &CoeffTable) -> Self {
        CoeffsDoc {
            schema_version: SCHEMA_VERSION,
            rows: (0..=table.k_max())
                .map(|k| CoeffRow {
                    k,
                    a: table.a()[k].to_string(),
                    b: table.b()[k].to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Lib(Error::Domain(_)) => EXIT_USAGE,
            _ => EXIT_FAILED,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn table(config: &RunConfig, k_max: usize, err: &mut dyn Write) -> Result<CoeffTable, CliError> {
    let (table, outcome) = cache::load_table(config.cache_dir.as_deref(), k_max)?;
    if let cache::CacheOutcome::Refreshed { reason } = outcome {
        if !reason.starts_with("no cache") {
            writeln!(err, "note: cache refreshed ({reason})")?;
        }
    }
    Ok(table)
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &config.command {
        Command::Coeffs { max_k } => {
            let t = table(config, *max_k, err)?;
            write_coeffs(&t, config.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Formula { kind, power } => {
            let t = table(config, *power as usize, err)?;
            let form = match kind {
                KindArg::Sum => brousseau_closed(*power, &t)?,
                KindArg::Convolution => convolution_closed(*power, &t)?,
            };
            write_formula(&form, config.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => verify(config, args, out, err),
        Command::Conjecture { max_k, stride } => conjecture(config, *max_k, *stride, out, err),
        Command::Oracle { kind, power, n } => {
            let v = match kind {
                KindArg::Sum => brute_sum(*power, *n),
                KindArg::Convolution => brute_convolution(*power, *n),
            };
            match config.format {
                Format::Json => write_json(
                    out,
                    json!({"schema_version": SCHEMA_VERSION, "kind": kind_name((*kind).into()), "p": power, "n": n, "value": v.to_string()}),
                )?,
                _ => writeln!(out, "{v}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Series { which, max_k } => {
            let which = match which {
                WhichArg::A => Which::A,
                WhichArg::B => Which::B,
            };
            let values = egf_coefficients(which, *max_k)?;
            write_series(which, &values, config.format, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn kind_name(kind: FormKind) -> &'static str {
    match kind {
        FormKind::Sum => "sum",
        FormKind::Convolution => "convolution",
    }
}

fn write_coeffs(t: &CoeffTable, format: Format, out: &mut dyn Write) -> io::Result<()> {
    let rows = (0..=t.k_max()).map(|k| (k, &t.a()[k], &t.b()[k]));
    match format {
        Format::Json => out.write_all(CoeffsDoc::from_table(t).to_json().as_bytes()),
        Format::Csv => {
            writeln!(out, "k,A,B")?;
            rows.into_iter().try_for_each(|(k, a, b)| writeln!(out, "{k},{a},{b}"))
        }
        Format::Text => rows.into_iter().try_for_each(|(k, a, b)| writeln!(out, "{k},{a},{b}")),
        Format::Latex => {
            writeln!(out, "\\begin{{tabular}}{{rrr}}")?;
            writeln!(out, "$k$ & $A_k$ & $B_k$ \\\\ \\hline")?;
            for (k, a, b) in rows {
                writeln!(out, "{k} & {a} & {b} \\\\")?;
            }
            writeln!(out, "\\end{{tabular}}")
        }
    }
}

fn poly_json(p: &crate::arith::IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn write_formula(form: &ClosedForm, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", form.render(false)),
        Format::Latex => writeln!(out, "{}", form.render(true)),
        Format::Json => write_json(
            out,
            json!({
                "schema_version": SCHEMA_VERSION,
                "kind": kind_name(form.kind),
                "p": form.p,
                "F_n": poly_json(&form.f_n),
                "F_n1": poly_json(&form.f_n1),
                "free": poly_json(&form.free),
                "text": form.render(false),
            })
        ),
        Format::Csv => {
            writeln!(out, "term,power,coefficient")?;
            for (name, poly) in [("F_n", &form.f_n), ("F_n1", &form.f_n1), ("free", &form.free)] {
                for (power, c) in poly.coeffs().iter().enumerate().rev() {
                    writeln!(out, "{name},{power},{c}")?;
                }
            }
            Ok(())
        }
    }
}

/// Pretty-printed, key-sorted, newline-terminated.
fn write_json(out: &mut dyn Write, doc: serde_json::Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))
}

fn write_series(which: Which, values: &[BigInt], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => write_json(
            out,
            json!({
                "schema_version": SCHEMA_VERSION,
                "which": which.to_string(),
                "values": values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
        ),
        Format::Csv => {
            writeln!(out, "k,{which}")?;
            values.iter().enumerate().try_for_each(|(k, v)| writeln!(out, "{k},{v}"))
        }
        _ => values.iter().enumerate().try_for_each(|(k, v)| writeln!(out, "{k},{v}")),
    }
}

fn report_json(r: &IdentityReport) -> serde_json::Value {
    json!({
        "identity": r.identity_id,
        "range": r.range_checked,
        "status": if r.verified() { "verified" } else { "failed" },
        "first_failure": r.first_failure.as_ref().map(|f| json!({
            "index": f.index.iter().map(|(k, v)| json!({"name": k, "value": v})).collect::<Vec<_>>(),
            "lhs": f.lhs.to_string(),
            "rhs": f.rhs.to_string(),
        })),
    })
}

fn alt_suite(method: AltMethod) -> Vec<Which> {
    [Which::A, Which::B].into_iter().filter(|w| method.supports(*w)).collect()
}

fn verify(config: &RunConfig, args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let general_specs: Vec<RecurrenceSpec> = match (args.a, args.b) {
        (Some(a), Some(b)) => vec![RecurrenceSpec::new(a, b)],
        (None, None) => (1..=5).flat_map(|a| (1..=5).map(move |b| RecurrenceSpec::new(a, b))).collect(),
        _ => return Err(CliError::Usage("--a and --b must be given together".into())),
    };
    let t = table(config, args.max_k.max(args.max_p as usize), err)?;
    let s = args.suite;
    let on = |x: Suite| s == x || s == Suite::All;
    let mut reports: Vec<IdentityReport> = Vec::new();

    if on(Suite::Theorem1) && args.max_p >= 1 {
        reports.push(theorem1_check(args.max_p, args.max_n));
        reports.push(auxiliary_power_check(args.max_p, 20));
    }
    if on(Suite::Theorem2) {
        reports.push(theorem2_check(args.max_p, args.max_n, &t)?);
        reports.push(lower_order_check(args.max_p, args.max_n));
    }
    if on(Suite::Theorem3) {
        reports.push(theorem3_check(args.max_p, args.max_n, &t)?);
    }
    if let Some(seed) = config.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n_hi = args.max_n.saturating_mul(5).max(1);
        for kind in [FormKind::Convolution, FormKind::Sum] {
            let selected = match kind {
                FormKind::Convolution => on(Suite::Theorem2),
                FormKind::Sum => on(Suite::Theorem3),
            };
            if !selected {
                continue;
            }
            let points: Vec<(u32, u64)> = (0..32)
                .map(|_| (rng.gen_range(0..=args.max_p), rng.gen_range(0..=n_hi)))
                .collect();
            let mut r = closed_form_points_check(kind, &points, &t, format!("32 points, seed {seed}, n <= {n_hi}"))?;
            r.identity_id.push_str(":sampled");
            reports.push(r);
        }
    }
    let alt = [
        (Suite::Ledin, AltMethod::Ledin),
        (Suite::Dresden, AltMethod::DresdenInverse),
        (Suite::Hoggatt, AltMethod::Hoggatt),
        (Suite::Zeitlin2, AltMethod::ZeitlinStirling2),
        (Suite::Eulerian, AltMethod::KmtEulerian),
        (Suite::Adegoke, AltMethod::Adegoke),
    ];
    for (suite, method) in alt {
        if on(suite) {
            for which in alt_suite(method) {
                reports.push(cross_formula_check(method, which, args.max_k, &t)?);
            }
        }
    }
    if on(Suite::Zeitlin1) && args.max_k >= 1 {
        reports.push(zeitlin_firstkind_report(args.max_k, &t)?);
    }
    if on(Suite::Egf) {
        reports.push(egf_check(Which::A, args.max_k, &t)?);
        reports.push(egf_check(Which::B, args.max_k, &t)?);
    }
    if on(Suite::ErbacherFuchs) {
        reports.push(erbacher_fuchs_check(args.max_n));
    }
    if on(Suite::Pell) {
        reports.push(pell_cubic_check(args.max_n));
    }
    if on(Suite::General) {
        for spec in &general_specs {
            reports.push(general_cubic_check(spec, args.max_n));
        }
    }

    let all_ok = reports.iter().all(IdentityReport::verified);
    match config.format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "status": if all_ok { "verified" } else { "failed" },
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            });
            write_json(out, doc)?;
        }
        Format::Csv => {
            writeln!(out, "identity,status,range,first_failure")?;
            for r in &reports {
                let ff = r.first_failure.as_ref().map(|f| f.index_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},\"{}\",\"{ff}\"",
                    r.identity_id,
                    if r.verified() { "verified" } else { "failed" },
                    r.range_checked
                )?;
            }
        }
        _ => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            let failed = reports.iter().filter(|r| !r.verified()).count();
            writeln!(out, "{} checks, {failed} failed", reports.len())?;
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_FAILED })
}

fn conjecture(config: &RunConfig, max_k: usize, stride: usize, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if stride == 0 {
        return Err(CliError::Usage("--stride must be positive".into()));
    }
    let t = table(config, max_k.max(2), err)?;
    let so = ShannonOllerton::new(max_k, &t)?;
    let mut lo = 2;
    let mut failure = None;
    while lo <= max_k && failure.is_none() {
        let hi = ((lo / stride + 1) * stride).min(max_k);
        failure = so.check_range(lo..=hi);
        if failure.is_none() && config.format == Format::Text {
            writeln!(out, "k <= {hi}: verified")?;
        }
        lo = hi + 1;
    }
    let report = IdentityReport::new("shannon_ollerton", format!("2 <= k <= {max_k}"), failure);
    match config.format {
        Format::Json => {
            let mut doc = report_json(&report);
            doc["schema_version"] = json!(SCHEMA_VERSION);
            write_json(out, doc)?;
        }
        _ => writeln!(out, "{report}")?,
    }
    Ok(if report.verified() { EXIT_OK } else { EXIT_FAILED })
}
