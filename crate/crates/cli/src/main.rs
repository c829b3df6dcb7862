use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use stokes_grassmann::dercat::euler_matrix;
use stokes_grassmann::io::{parse_complex, parse_matrix_literal, parse_partition, MatrixDocument};
use stokes_grassmann::mutations::{braid_orbit_search, BraidWord, SignMode, UnipotentMatrix};
use stokes_grassmann::stokes::canonical::sort_by_projection;
use stokes_grassmann::stokes::{
    canonical_coords_grassmannian, check_admissible, grassmann_stokes, AdmissibleLine, DEFAULT_TOLERANCE,
};
use stokes_grassmann::symfunc::{lr_expand, skew_schur_spec};
use stokes_grassmann::verify::{sample_complement_identity_seeded, verify, VerificationReport};
use stokes_grassmann::BoxContext;

const DEFAULT_SEED: u64 = 20_080_523;

/// Stokes matrices and exceptional-collection Euler pairings for Gr(r, n).
#[derive(Parser)]
#[command(name = "stokes-grassmann", version)]
struct Cli {
    /// Largest n accepted by matrix commands.
    #[arg(long, global = true, env = "STOKES_GRASSMANN_CAP", default_value_t = 12)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Stokes matrix S_{L,K} (rows L, columns K).
    Stokes(MatrixArgs),
    /// Print the Euler pairing matrix chi(E_lambda, E_mu) (rows lambda, columns mu).
    Euler(MatrixArgs),
    /// Check Stokes minor = representation sum = skew Schur value for every pair.
    Verify(VerifyArgs),
    /// Run `verify` for every 1 <= r < n <= max-n.
    VerifyAll(VerifyAllArgs),
    /// Canonical coordinates, admissibility and the induced ordering.
    Canonical(CanonicalArgs),
    /// Skew Schur function s_{lambda/mu}(1^n).
    Skew(SkewArgs),
    /// Littlewood-Richardson expansion of s_mu * s_nu.
    Lr(LrArgs),
    /// Apply a braid word to a unipotent matrix, or search for one.
    Mutate(MutateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
    /// Also test the complement identity on this many random triples.
    #[arg(long, default_value_t = 0)]
    identity_samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CanonicalArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
    /// Complex parameter t as "re,im" (or a bare real).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["t_re", "t_im"])]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    t_im: Option<f64>,
    /// Angle of the line in [0, pi).
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
    /// Angular margin around the line.
    #[arg(long, default_value_t = 1e-3)]
    epsilon: f64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SkewArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct LrArgs {
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct MutateArgs {
    /// Matrix size; must match --matrix.
    #[arg(long)]
    n: Option<usize>,
    /// Unit upper triangular matrix, rows separated by ';'.
    #[arg(long, allow_hyphen_values = true)]
    matrix: String,
    /// Braid word such as "b1 b2 b1^-1".
    #[arg(long, default_value = "")]
    word: String,
    /// Instead of applying --word, search for a word reaching this matrix.
    #[arg(long, allow_hyphen_values = true)]
    target: Option<String>,
    #[arg(long, default_value_t = 3)]
    depth: usize,
    /// Allow sign changes of basis vectors when matching --target.
    #[arg(long)]
    signs: bool,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<stokes_grassmann::Error> for Failure {
    fn from(e: stokes_grassmann::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let cap = cli.cap;
    match cli.command {
        Command::Stokes(a) => {
            let ctx = context(a.r, a.n, cap)?;
            emit_matrix(&MatrixDocument::from(&grassmann_stokes(ctx)), &a.output)
        }
        Command::Euler(a) => {
            let ctx = context(a.r, a.n, cap)?;
            emit_matrix(&MatrixDocument::from(&euler_matrix(ctx)), &a.output)
        }
        Command::Verify(a) => cmd_verify(a, cap),
        Command::VerifyAll(a) => cmd_verify_all(a, cap),
        Command::Canonical(a) => cmd_canonical(a, cap),
        Command::Skew(a) => cmd_skew(a),
        Command::Lr(a) => cmd_lr(a),
        Command::Mutate(a) => cmd_mutate(a),
    }
}

fn context(r: usize, n: usize, cap: usize) -> CliResult<BoxContext> {
    let ctx = BoxContext::new(r, n)?;
    if n > cap {
        return usage(format!(
            "n = {n} exceeds the size cap of {cap}; the matrix would have C({n},{r}) rows. \
             Raise it with --cap or STOKES_GRASSMANN_CAP."
        ));
    }
    Ok(ctx)
}

fn write_out(text: &str, output: &Output) -> CliResult<()> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .or_else(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_matrix(doc: &MatrixDocument, output: &Output) -> CliResult<()> {
    let text = match output.format.unwrap_or(Format::Json) {
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
        Format::Text => {
            let mut s = String::new();
            for (k, row) in doc.order.iter().zip(doc.matrix.iter_rows()) {
                let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                let _ = writeln!(s, "{k:>12} | {}", cells.join(" "));
            }
            s
        }
    };
    write_out(&text, output)
}

/// Emits a JSON value or a plain-text rendering; csv is not offered.
fn emit_value(value: &Value, text: &str, output: &Output) -> CliResult<()> {
    match output.format.unwrap_or(Format::Text) {
        Format::Json => write_out(&value.to_string(), output),
        Format::Text => write_out(text, output),
        Format::Csv => usage("csv output is only available for matrices and verification summaries"),
    }
}

fn report_line(report: &VerificationReport) -> String {
    format!(
        "Gr({},{}) size={} pairs={} mismatches={} {} ({:.1} ms)",
        report.ctx.r,
        report.ctx.n,
        report.matrix_size,
        report.pairs_checked,
        report.mismatches.len(),
        if report.passed() { "PASS" } else { "FAIL" },
        report.elapsed.as_secs_f64() * 1e3,
    )
}

fn report_csv(reports: &[VerificationReport]) -> String {
    let mut s = String::from("r,n,matrix_size,pairs_checked,mismatches,verdict\n");
    for rep in reports {
        let verdict = if rep.passed() { "pass" } else { "fail" };
        let _ = writeln!(
            s,
            "{},{},{},{},{},{verdict}",
            rep.ctx.r,
            rep.ctx.n,
            rep.matrix_size,
            rep.pairs_checked,
            rep.mismatches.len()
        );
    }
    s
}

fn cmd_verify(a: VerifyArgs, cap: usize) -> CliResult<()> {
    let ctx = context(a.r, a.n, cap)?;
    let report = verify(ctx);
    let samples = sample_complement_identity_seeded(a.seed, a.identity_samples, 4, 4);
    let identity_failures = samples.iter().filter(|s| s.lhs != s.rhs).count();
    let ok = report.passed() && identity_failures == 0;

    let text = match a.output.format.unwrap_or(Format::Text) {
        Format::Json => {
            let mut v = report.to_json_value();
            if a.identity_samples > 0 {
                v["complement_identity"] = json!({
                    "seed": a.seed,
                    "samples": samples.len(),
                    "nonzero": samples.iter().filter(|s| s.lhs != BigInt::default()).count(),
                    "failures": identity_failures,
                });
            }
            v.to_string()
        }
        Format::Csv => report_csv(std::slice::from_ref(&report)),
        Format::Text => {
            let mut s = report_line(&report);
            for m in &report.mismatches {
                let _ = write!(
                    s,
                    "\n  mismatch lambda={} mu={} stokes={} euler={} skew={}",
                    m.lambda, m.mu, m.stokes, m.euler, m.skew
                );
            }
            if a.identity_samples > 0 {
                let _ = write!(s, "\ncomplement identity: {} samples, {identity_failures} failures (seed {})", samples.len(), a.seed);
            }
            s
        }
    };
    write_out(&text, &a.output)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_verify_all(a: VerifyAllArgs, cap: usize) -> CliResult<()> {
    if a.max_n > cap {
        return usage(format!("--max-n {} exceeds the size cap of {cap}", a.max_n));
    }
    let reports: Vec<VerificationReport> = (2..=a.max_n)
        .flat_map(|n| (1..n).map(move |r| (r, n)))
        .map(|(r, n)| context(r, n, cap).map(verify))
        .collect::<CliResult<_>>()?;
    let all_pass = reports.iter().all(VerificationReport::passed);
    let text = match a.output.format.unwrap_or(Format::Text) {
        Format::Json => Value::Array(reports.iter().map(VerificationReport::to_json_value).collect()).to_string(),
        Format::Csv => report_csv(&reports),
        Format::Text => {
            let mut s: String = reports.iter().map(|r| report_line(r) + "\n").collect();
            let _ = write!(s, "{} cases, {}", reports.len(), if all_pass { "all pass" } else { "FAILURES" });
            s
        }
    };
    write_out(&text, &a.output)?;
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_canonical(a: CanonicalArgs, cap: usize) -> CliResult<()> {
    let ctx = context(a.r, a.n, cap)?;
    let t = match &a.t {
        Some(s) => parse_complex(s)?,
        None => num_complex_from(a.t_re.unwrap_or(0.0), a.t_im.unwrap_or(0.0))?,
    };
    let line = AdmissibleLine::new(a.phi, a.epsilon)?;
    let points = canonical_coords_grassmannian(ctx, t);
    let report = check_admissible(&line, &points, a.tolerance);
    let order = report.admissible.then(|| sort_by_projection(line.phi(), &points));

    let pair = |(x, y): &(stokes_grassmann::SubsetIndex, stokes_grassmann::SubsetIndex)| json!([x.indices(), y.indices()]);
    let value = json!({
        "r": ctx.r,
        "n": ctx.n,
        "t": [t.re, t.im],
        "phi": a.phi,
        "epsilon": a.epsilon,
        "points": points.iter().map(|p| json!({
            "label": p.label.indices(),
            "re": p.value.re,
            "im": p.value.im,
            "modulus": p.value.norm(),
        })).collect::<Vec<_>>(),
        "admissible": report.admissible,
        "sector_admissible": report.sector_admissible,
        "degenerate": report.degenerate.iter().map(pair).collect::<Vec<_>>(),
        "orthogonal": report.orthogonal.iter().map(pair).collect::<Vec<_>>(),
        "order": order.as_ref().map(|o| o.iter().map(|k| k.indices().to_vec()).collect::<Vec<_>>()),
    });

    let mut text = format!("Gr({},{}) t = {}{:+}i  phi = {}\n", ctx.r, ctx.n, t.re, t.im, a.phi);
    for p in &points {
        let _ = writeln!(text, "u[{}] = {:.12} {:+.12}i  |u| = {:.12}", p.label, p.value.re, p.value.im, p.value.norm());
    }
    let _ = writeln!(text, "admissible: {}", if report.admissible { "yes" } else { "no" });
    let _ = writeln!(text, "sector admissible (epsilon = {}): {}", a.epsilon, if report.sector_admissible { "yes" } else { "no" });
    if report.is_degenerate() {
        for (x, y) in &report.degenerate {
            let _ = writeln!(text, "degenerate: u[{x}] = u[{y}]");
        }
    }
    for (x, y) in &report.orthogonal {
        let _ = writeln!(text, "orthogonal: u[{x}] - u[{y}] is orthogonal to the line");
    }
    match &order {
        Some(o) => {
            let labels: Vec<String> = o.iter().map(|k| format!("[{k}]")).collect();
            let _ = write!(text, "order: {}", labels.join(" "));
        }
        None => text.push_str("order: none (line not admissible)"),
    }
    emit_value(&value, &text, &a.output)
}

fn num_complex_from(re: f64, im: f64) -> CliResult<num_complex::Complex64> {
    if re.is_finite() && im.is_finite() {
        Ok(num_complex::Complex64::new(re, im))
    } else {
        usage("t must be finite")
    }
}

fn cmd_skew(a: SkewArgs) -> CliResult<()> {
    let lambda = parse_partition(&a.lambda)?;
    let mu = parse_partition(&a.mu)?;
    if a.n == 0 {
        return usage("--n must be positive");
    }
    let value = skew_schur_spec(&lambda, &mu, a.n);
    let v = json!({
        "lambda": lambda.parts(),
        "mu": mu.parts(),
        "n": a.n,
        "value": value.to_string(),
    });
    emit_value(&v, &value.to_string(), &a.output)
}

fn cmd_lr(a: LrArgs) -> CliResult<()> {
    let mu = parse_partition(&a.mu)?;
    let nu = parse_partition(&a.nu)?;
    let expansion = lr_expand(&mu, &nu);
    let text: Vec<String> = expansion.iter().map(|(lam, c)| format!("{lam}: {c}")).collect();
    let v = Value::Array(
        expansion
            .iter()
            .map(|(lam, c)| json!({ "lambda": lam.parts(), "coefficient": c.to_string() }))
            .collect(),
    );
    emit_value(&v, &text.join("\n"), &a.output)
}

fn cmd_mutate(a: MutateArgs) -> CliResult<()> {
    let g = UnipotentMatrix::new(parse_matrix_literal(&a.matrix)?)?;
    if let Some(n) = a.n {
        if n != g.size() {
            return usage(format!("--n {n} does not match the {}x{} matrix", g.size(), g.size()));
        }
    }
    if let Some(target) = &a.target {
        let h = UnipotentMatrix::new(parse_matrix_literal(target)?)?;
        let mode = if a.signs { SignMode::AllowSignChanges } else { SignMode::Exact };
        let found = braid_orbit_search(&g, &h, a.depth, mode)?;
        let (v, text) = match &found {
            Some(w) => (
                json!({ "found": true, "word": w.word.to_string(), "signs": w.signs }),
                match &w.signs {
                    Some(s) => format!("word: {}\nsigns: {s:?}", w.word),
                    None => format!("word: {}", w.word),
                },
            ),
            None => (
                json!({ "found": false, "depth": a.depth }),
                format!("no word of length <= {} found (inconclusive)", a.depth),
            ),
        };
        return emit_value(&v, &text, &a.output);
    }
    let word: BraidWord = a.word.parse()?;
    let result = word.apply(&g)?;
    let rows: Vec<Vec<String>> =
        result.as_matrix().iter_rows().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
    let v = json!({ "word": word.to_string(), "matrix": rows });
    emit_value(&v, &result.to_string(), &a.output)
}
