//! The `wbrauer` command line.
//!
//! [`run`] parses the arguments, runs one computation and writes its report
//! to `out`. It returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on usage, parse or bound errors.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::Bounds;
use crate::central::{bipartitions, jm_element};
use crate::cycletype::{cycle_type, CycleTypeCensus};
use crate::diagrams::{WalledDiagram, WalledShape};
use crate::error::Error;
use crate::scalars::{Delta, Rational};
use crate::solver::{
    centre_bruteforce, centre_reduced, is_semisimple, section5_suite, specialization_check,
    verify_conjecture, ConjectureReport, Subspace, Verdict,
};

#[derive(Debug, Parser)]
#[command(
    name = "wbrauer",
    version,
    about = "Exact computations in walled Brauer algebras B_{r,s}(δ)"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest r + s whose diagram basis may be enumerated
    #[arg(long, default_value_t = Bounds::default().max_strands as u64, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    max_strands: u64,
    /// Largest basis size (r + s)! for the brute-force centre
    #[arg(long, default_value_t = Bounds::default().brute_force as u64, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    brute_force_limit: u64,
    /// Largest r! s! for a brute-force conjugacy search
    #[arg(long, default_value_t = Bounds::default().conjugacy as u64, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    conjugacy_limit: u64,
    /// Seed for randomized specialization checks
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

impl Global {
    fn bounds(&self) -> Bounds {
        Bounds {
            max_strands: self.max_strands as usize,
            brute_force: self.brute_force_limit as usize,
            conjugacy: self.conjugacy_limit as usize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Reduced,
    Both,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
}

impl ShapeArgs {
    fn shape(&self) -> Result<WalledShape, Error> {
        WalledShape::new(self.r, self.s)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product of two diagrams, top on bottom
    Multiply {
        d1: String,
        d2: String,
        /// Evaluate the loop coefficient at this δ
        #[arg(long, value_parser = parse_delta)]
        delta: Option<Delta>,
    },
    /// Canonical cycle type of a diagram
    Cycletype { diagram: String },
    /// All cycle types with their class sizes
    Cycletypes {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// The Jucys–Murphy element L_k
    Jm {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_delta, default_value = "generic")]
        delta: Delta,
    },
    /// Basis and dimension of the centre
    Centre {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_parser = parse_delta)]
        delta: Delta,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Compare the supersymmetric span with the centre
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_parser = parse_delta)]
        delta: Delta,
    },
    /// Structural checks on the commutator system of B_{r,1}(δ)
    Suite5 {
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = parse_delta, default_value = "generic")]
        delta: Delta,
    },
    /// Conjecture reports across several values of δ
    Sweep {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Comma-separated list, e.g. `generic,0,1,-1,1/2`
        #[arg(long, value_parser = parse_delta, value_delimiter = ',', required = true)]
        deltas: Vec<Delta>,
    },
}

fn parse_delta(s: &str) -> Result<Delta, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure while running a command.
enum Failure {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1.
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(match e {
            Error::EnumerationTooLarge(msg) => format!("bound exceeded: {msg}"),
            Error::InvalidShape(msg) => format!("invalid shape: {msg}"),
            other => other.to_string(),
        })
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn diagram_arg(text: &str) -> Result<WalledDiagram, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::Usage(format!("malformed diagram {text:?}: {e}")))
}

fn no_csv(format: Format, command: &str) -> Outcome {
    if format == Format::Csv {
        return Err(Failure::Usage(format!(
            "csv output is not available for `{command}`"
        )));
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let g = &cli.global;
    let bounds = g.bounds();
    match &cli.command {
        Command::Multiply { d1, d2, delta } => multiply(g.format, d1, d2, delta.as_ref(), out),
        Command::Cycletype { diagram } => cycletype(g.format, diagram, out),
        Command::Cycletypes { shape } => cycletypes(g.format, shape.shape()?, &bounds, out),
        Command::Jm { shape, k, delta } => jm(g.format, shape.shape()?, *k, delta, out),
        Command::Centre {
            shape,
            delta,
            method,
        } => centre(g.format, shape.shape()?, delta, *method, &bounds, out),
        Command::Verify { shape, delta } => {
            verify(g.format, g.seed, shape.shape()?, delta, &bounds, out)
        }
        Command::Suite5 { r, delta } => suite5(g.format, *r, delta, &bounds, out),
        Command::Sweep { shape, deltas } => sweep(g.format, shape.shape()?, deltas, &bounds, out),
    }
}

fn delta_power(loops: usize) -> String {
    match loops {
        0 => "1".into(),
        1 => "δ".into(),
        k => format!("δ^{k}"),
    }
}

#[derive(Serialize)]
struct ProductJson {
    coefficient: String,
    loops: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    diagram: WalledDiagram,
}

fn multiply(
    format: Format,
    d1: &str,
    d2: &str,
    delta: Option<&Delta>,
    out: &mut dyn Write,
) -> Outcome {
    no_csv(format, "multiply")?;
    let (a, b) = (diagram_arg(d1)?, diagram_arg(d2)?);
    let (product, loops) = a.multiply(&b)?;
    let value = delta.map(|d| d.scalar().pow(loops as u32).to_string());
    let report = ProductJson {
        coefficient: delta_power(loops),
        loops,
        value,
        diagram: product,
    };
    if format == Format::Json {
        return write_json(out, &report);
    }
    writeln!(out, "coefficient: {}", report.coefficient)?;
    if let Some(v) = &report.value {
        writeln!(out, "value: {v}")?;
    }
    writeln!(out, "loops: {loops}")?;
    writeln!(out, "diagram: {product}")?;
    Ok(())
}

fn cycletype(format: Format, text: &str, out: &mut dyn Write) -> Outcome {
    no_csv(format, "cycletype")?;
    let d = diagram_arg(text)?;
    let ct = cycle_type(&d);
    if format == Format::Json {
        return write_json(out, &serde_json::json!({ "diagram": d, "cycle_type": ct }));
    }
    writeln!(out, "{ct}")?;
    Ok(())
}

#[derive(Serialize)]
struct CensusRow {
    cycle_type: String,
    class_size: usize,
    bipartition: Option<String>,
}

fn cycletypes(format: Format, shape: WalledShape, bounds: &Bounds, out: &mut dyn Write) -> Outcome {
    let census = CycleTypeCensus::new(shape, bounds)?;
    let rows: Vec<CensusRow> = census
        .types()
        .iter()
        .enumerate()
        .map(|(t, ct)| CensusRow {
            cycle_type: ct.to_string(),
            class_size: census.class(t).len(),
            bipartition: ct.bipartition().map(|b| b.to_string()),
        })
        .collect();
    match format {
        Format::Json => write_json(
            out,
            &serde_json::json!({
                "r": shape.r,
                "s": shape.s,
                "diagrams": census.diagrams().len(),
                "cycle_type_count": rows.len(),
                "lambda_count": bipartitions(shape).len(),
                "types": rows,
            }),
        ),
        Format::Csv => {
            writeln!(out, "cycle_type,class_size,bipartition")?;
            for row in &rows {
                let bp = row.bipartition.as_deref().unwrap_or("");
                writeln!(out, "{},{},\"{}\"", row.cycle_type, row.class_size, bp)?;
            }
            Ok(())
        }
        Format::Text => {
            let width = rows
                .iter()
                .map(|r| r.cycle_type.chars().count())
                .max()
                .unwrap_or(0)
                .max(10);
            writeln!(out, "{:<width$}  {:>6}  bipartition", "cycle type", "size")?;
            for row in &rows {
                let bp = row.bipartition.as_deref().unwrap_or("-");
                writeln!(
                    out,
                    "{:<width$}  {:>6}  {bp}",
                    row.cycle_type, row.class_size
                )?;
            }
            writeln!(
                out,
                "{} types, {} diagrams, {} with only trivial parts",
                rows.len(),
                census.diagrams().len(),
                rows.iter().filter(|r| r.bipartition.is_some()).count()
            )?;
            Ok(())
        }
    }
}

fn jm(format: Format, shape: WalledShape, k: usize, delta: &Delta, out: &mut dyn Write) -> Outcome {
    no_csv(format, "jm")?;
    let l = jm_element(shape, k, delta)?;
    if format == Format::Json {
        return write_json(
            out,
            &serde_json::json!({ "r": shape.r, "s": shape.s, "k": k, "delta": delta, "element": l.to_string() }),
        );
    }
    writeln!(out, "L_{k} = {l}")?;
    Ok(())
}

/// One report row; `centre`, `verify` and `sweep` share it.
#[derive(Serialize)]
struct Row {
    r: usize,
    s: usize,
    delta: Delta,
    centre_dim: usize,
    lambda_count: usize,
    cycle_type_count: usize,
    semisimple: bool,
    supersym_span_dim: Option<usize>,
    relation: Option<String>,
    verdict: Option<Verdict>,
    basis: Vec<String>,
    timing_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    methods_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    specialization_consistent: Option<bool>,
}

impl Row {
    fn from_report(rep: &ConjectureReport) -> Result<Row, Error> {
        Ok(Row {
            r: rep.shape.r,
            s: rep.shape.s,
            delta: rep.delta.clone(),
            centre_dim: rep.centre_dim,
            lambda_count: rep.lambda_count,
            cycle_type_count: rep.cycle_type_count,
            semisimple: rep.semisimple,
            supersym_span_dim: Some(rep.supersym_span_dim),
            relation: Some(rep.relation.to_string()),
            verdict: Some(rep.verdict),
            basis: rep.centre.basis_strings(&rep.delta)?,
            timing_ms: rep.timing_ms,
            methods_agree: rep.methods_agree,
            specialization_consistent: None,
        })
    }

    fn csv_line(&self) -> String {
        let verdict = self.verdict.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.r,
            self.s,
            self.delta,
            self.centre_dim,
            self.lambda_count,
            self.semisimple,
            verdict
        )
    }
}

const CSV_HEADER: &str = "r,s,delta,centre_dim,lambda,semisimple,verdict";

fn write_rows(format: Format, rows: &[Row], single: bool, out: &mut dyn Write) -> Outcome {
    match format {
        Format::Json if single => write_json(out, &rows[0]),
        Format::Json => write_json(out, &rows),
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for row in rows {
                writeln!(out, "{}", row.csv_line())?;
            }
            Ok(())
        }
        Format::Text => unreachable!("text output is written by the caller"),
    }
}

fn centre(
    format: Format,
    shape: WalledShape,
    delta: &Delta,
    method: Method,
    bounds: &Bounds,
    out: &mut dyn Write,
) -> Outcome {
    let start = Instant::now();
    let brute = match method {
        Method::Brute | Method::Both => Some(centre_bruteforce(shape, delta, bounds)?),
        Method::Reduced => None,
    };
    let reduced = match method {
        Method::Reduced | Method::Both => Some(centre_reduced(shape, delta, bounds)?),
        Method::Brute => None,
    };
    let agree = match (&brute, &reduced) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let z: &Subspace = reduced.as_ref().or(brute.as_ref()).expect("one method ran");
    let census = CycleTypeCensus::new(shape, bounds)?;
    let row = Row {
        r: shape.r,
        s: shape.s,
        delta: delta.clone(),
        centre_dim: z.dim(),
        lambda_count: bipartitions(shape).len(),
        cycle_type_count: census.types().len(),
        semisimple: is_semisimple(shape, delta),
        supersym_span_dim: None,
        relation: None,
        verdict: None,
        basis: z.basis_strings(delta)?,
        timing_ms: start.elapsed().as_millis(),
        methods_agree: agree,
        specialization_consistent: None,
    };
    if format == Format::Text {
        writeln!(
            out,
            "centre of B_({},{})({delta}): dimension {}",
            shape.r, shape.s, row.centre_dim
        )?;
        if let (Some(a), Some(b)) = (&brute, &reduced) {
            writeln!(
                out,
                "brute force {}, reduced {}, equal subspaces: {}",
                a.dim(),
                b.dim(),
                a == b
            )?;
        }
        for (i, b) in row.basis.iter().enumerate() {
            writeln!(out, "z{} = {b}", i + 1)?;
        }
    } else {
        write_rows(format, std::slice::from_ref(&row), true, out)?;
    }
    if agree == Some(false) {
        return Err(Failure::Verification);
    }
    Ok(())
}

/// Small random rationals `p/q`, `|p| ≤ 50`, `1 ≤ q ≤ 12`.
fn random_rationals(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Rational::new(rng.gen_range(-50..=50), rng.gen_range(1..=12)))
        .collect()
}

fn verify(
    format: Format,
    seed: u64,
    shape: WalledShape,
    delta: &Delta,
    bounds: &Bounds,
    out: &mut dyn Write,
) -> Outcome {
    let rep = verify_conjecture(shape, delta, bounds)?;
    let mut row = Row::from_report(&rep)?;
    let mut spec_lines = Vec::new();
    if delta.is_generic() && shape.r >= 1 && shape.s >= 1 {
        let check = specialization_check(shape, &random_rationals(seed, 4), bounds)?;
        row.specialization_consistent = Some(check.consistent());
        for (v, k) in &check.specialized {
            spec_lines.push(format!(
                "rank at δ = {v}: {k} (generic {})",
                check.generic_rank
            ));
        }
    }
    if format == Format::Text {
        for line in rep.summary() {
            writeln!(out, "{line}")?;
        }
        for line in &spec_lines {
            writeln!(out, "{line}")?;
        }
    } else {
        write_rows(format, std::slice::from_ref(&row), true, out)?;
    }
    if rep.verdict == Verdict::Fails || row.specialization_consistent == Some(false) {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn suite5(
    format: Format,
    r: usize,
    delta: &Delta,
    bounds: &Bounds,
    out: &mut dyn Write,
) -> Outcome {
    no_csv(format, "suite5")?;
    let rep = section5_suite(r, delta, bounds)?;
    if format == Format::Json {
        write_json(out, &rep)?;
    } else {
        writeln!(
            out,
            "B_({r},1)({delta}): |C| = {}, |Lambda| = {}",
            rep.cycle_type_count, rep.lambda_count
        )?;
        for c in &rep.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(out, "{mark} {}: {}", c.name, c.detail)?;
        }
        writeln!(
            out,
            "{}",
            if rep.passed() {
                "all checks passed"
            } else {
                "some checks failed"
            }
        )?;
    }
    if !rep.passed() {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn sweep(
    format: Format,
    shape: WalledShape,
    deltas: &[Delta],
    bounds: &Bounds,
    out: &mut dyn Write,
) -> Outcome {
    let reports = deltas
        .par_iter()
        .map(|d| verify_conjecture(shape, d, bounds))
        .collect::<Result<Vec<_>, Error>>()?;
    let rows = reports
        .iter()
        .map(Row::from_report)
        .collect::<Result<Vec<_>, Error>>()?;
    if format == Format::Text {
        writeln!(
            out,
            "{:>8}  {:>6}  {:>6}  {:>6}  {:>10}  {:>12}  verdict",
            "delta", "dim Z", "dim S", "|Λ|", "semisimple", "relation"
        )?;
        for (row, rep) in rows.iter().zip(&reports) {
            writeln!(
                out,
                "{:>8}  {:>6}  {:>6}  {:>6}  {:>10}  {:>12}  {}",
                row.delta.to_string(),
                row.centre_dim,
                rep.supersym_span_dim,
                row.lambda_count,
                row.semisimple,
                rep.relation.to_string(),
                rep.verdict
            )?;
        }
    } else {
        write_rows(format, &rows, false, out)?;
    }
    if reports.iter().any(|r| r.verdict == Verdict::Fails) {
        return Err(Failure::Verification);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("wbrauer").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn delta_powers() {
        assert_eq!(delta_power(0), "1");
        assert_eq!(delta_power(1), "δ");
        assert_eq!(delta_power(3), "δ^3");
    }

    #[test]
    fn seeded_samples_are_deterministic() {
        assert_eq!(random_rationals(7, 5), random_rationals(7, 5));
        assert_ne!(random_rationals(7, 5), random_rationals(8, 5));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn error_messages_are_distinct() {
        let (c1, _, e1) = call(&["cycletype", "r=1,s=1;t1-t2"]);
        let (c2, _, e2) = call(&["centre", "--r", "2", "--s", "1", "--delta", "0.5"]);
        let (c3, _, e3) = call(&[
            "centre", "--r", "3", "--s", "4", "--delta", "1", "--method", "brute",
        ]);
        assert_eq!((c1, c2, c3), (2, 2, 2));
        assert!(e1.contains("malformed diagram"));
        assert!(e2.contains("delta must be"));
        assert!(e3.contains("bound exceeded"));
    }
}
