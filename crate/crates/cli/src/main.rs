use std::fs;
use std::io::{self, Read as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use lefschetz_core::complex::{builtin, builtin_document, load_complex, to_json, EquivariantComplex, BUILTIN_NAMES};
use lefschetz_core::exact_algebra::{char_poly, factor_over_q, IntMatrix, IntPolynomial};
use lefschetz_core::invariants::{universal_invariant, InvariantReport};
use lefschetz_core::json::{from_json_ints, to_json_ints, JsonInt};
use lefschetz_core::realize::{realize, RealizationTarget};
use lefschetz_core::uz::{class_of_matrix, UZClass};

/// Equivariant Lefschetz invariants of cellular self-maps.
#[derive(Debug, Parser)]
#[command(name = "lefschetz", version)]
struct Cli {
    /// Emit JSON instead of the human-readable summary.
    #[arg(long, global = true)]
    json: bool,

    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Report timings and extra detail on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class in U(Z) of a square integer matrix given as JSON, e.g. "[[0,-1],[1,0]]".
    Class { matrix: String },
    /// Factor a polynomial over Q; coefficients as a JSON array, constant term first.
    Factor { coefficients: String },
    /// Compute u, λ, R, L and ℓ for a complex document or builtin name.
    Invariants { input: String },
    /// Build a wedge of spheres whose universal invariant is [A] − [B′].
    Realize {
        /// Action on the 2-spheres as a JSON matrix ("[]" for none).
        #[arg(long, default_value = "[]")]
        a: String,
        /// Remainder B′ of the action on the 3-spheres.
        #[arg(long = "b-prime", default_value = "[]")]
        b_prime: String,
    },
    /// Validate a complex document or builtin name.
    Check { input: String },
    /// Print a builtin example document and its invariants.
    Example { name: String },
}

#[derive(Debug)]
enum Failure {
    Core(lefschetz_core::Error),
    Io(String),
}

impl From<lefschetz_core::Error> for Failure {
    fn from(e: lefschetz_core::Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn parse_matrix(text: &str) -> Outcome<IntMatrix> {
    let rows: Vec<Vec<JsonInt>> = serde_json::from_str(text)
        .map_err(|e| lefschetz_core::Error::Parse(format!("matrix '{text}': {e}")))?;
    let m = IntMatrix::from_rows(rows.iter().map(|r| from_json_ints(r)).collect())?;
    if !m.is_square() {
        return Err(lefschetz_core::Error::Dimension(format!(
            "matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        ))
        .into());
    }
    Ok(m)
}

fn read_input(input: &str) -> Outcome<String> {
    if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    let path = Path::new(input);
    if !path.exists() && BUILTIN_NAMES.contains(&input) {
        return Ok(builtin_document(input)?.to_string());
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("reading {input}: {e}")))
}

fn load(input: &str, verbose: bool) -> Outcome<EquivariantComplex> {
    let start = Instant::now();
    let c = load_complex(&read_input(input)?)?;
    if verbose {
        eprintln!(
            "loaded {} ({} isomorphism classes) in {:.1?}",
            input,
            c.iso_classes.len(),
            start.elapsed()
        );
    }
    Ok(c)
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct UzTermView {
    polynomial: Vec<JsonInt>,
    rendered: String,
    coeff: JsonInt,
}

fn uz_terms(c: &UZClass) -> Vec<UzTermView> {
    c.terms()
        .iter()
        .map(|(p, k)| UzTermView {
            polynomial: to_json_ints(p.coeffs()),
            rendered: p.to_string(),
            coeff: k.into(),
        })
        .collect()
}

#[derive(Serialize)]
struct ClassView {
    class: String,
    terms: Vec<UzTermView>,
    char_poly: Vec<JsonInt>,
    char_poly_rendered: String,
    factored: String,
}

fn cmd_class(matrix: &str, json: bool) -> Outcome<String> {
    let m = parse_matrix(matrix)?;
    let p = char_poly(&m)?;
    let class = class_of_matrix(&m)?;
    let factored = if p.is_one() { "1".to_string() } else { factor_over_q(&p)?.to_string() };
    if json {
        return Ok(pretty(&ClassView {
            class: class.to_string(),
            terms: uz_terms(&class),
            char_poly: to_json_ints(p.coeffs()),
            char_poly_rendered: p.to_string(),
            factored,
        }));
    }
    Ok(format!("{class}\nchar poly: {p} = {factored}\n"))
}

#[derive(Serialize)]
struct FactorTermView {
    factor: Vec<JsonInt>,
    rendered: String,
    multiplicity: u32,
}

#[derive(Serialize)]
struct FactorView {
    polynomial: String,
    unit: JsonInt,
    factors: Vec<FactorTermView>,
    rendered: String,
}

fn cmd_factor(coefficients: &str, json: bool) -> Outcome<String> {
    let cs: Vec<JsonInt> = serde_json::from_str(coefficients)
        .map_err(|e| lefschetz_core::Error::Parse(format!("coefficients '{coefficients}': {e}")))?;
    let p = IntPolynomial::new(from_json_ints(&cs));
    let f = factor_over_q(&p)?;
    if json {
        return Ok(pretty(&FactorView {
            polynomial: p.to_string(),
            unit: (&f.unit).into(),
            factors: f
                .factors
                .iter()
                .map(|(q, m)| FactorTermView {
                    factor: to_json_ints(q.coeffs()),
                    rendered: q.to_string(),
                    multiplicity: *m,
                })
                .collect(),
            rendered: f.to_string(),
        }));
    }
    Ok(format!("{p} = {f}\n"))
}

fn cmd_invariants(c: &EquivariantComplex, json: bool, verbose: bool) -> Outcome<String> {
    let start = Instant::now();
    let report = InvariantReport::compute(c)?;
    if verbose {
        eprintln!("invariants computed in {:.1?}", start.elapsed());
    }
    Ok(if json { report.to_json() } else { report.summary() })
}

#[derive(Serialize)]
struct RealizeView {
    class: String,
    terms: Vec<UzTermView>,
    complex: serde_json::Value,
}

fn cmd_realize(a: &str, b_prime: &str, json: bool, output: Option<&Path>) -> Outcome<String> {
    let target = RealizationTarget::new(parse_matrix(a)?, parse_matrix(b_prime)?)?;
    let c = realize(&target)?;
    let doc = to_json(&c);
    // Re-load the emitted document so the printed class is the one a reader gets.
    let reloaded = load_complex(&doc)?;
    let u = universal_invariant(&reloaded)?;
    let class = u.entries[0]
        .uz
        .clone()
        .ok_or_else(|| lefschetz_core::Error::Internal("realization has a nontrivial Aut(x)".into()))?;
    let expected = &class_of_matrix(&target.a)? - &class_of_matrix(&target.b_prime)?;
    if class != expected {
        return Err(lefschetz_core::Error::Internal(format!(
            "realized class {class} differs from the target {expected}"
        ))
        .into());
    }
    if let Some(path) = output {
        write_file(path, &doc)?;
        return Ok(if json {
            pretty(&serde_json::json!({ "class": class.to_string(), "terms": uz_terms(&class) }))
        } else {
            format!("class: {class}\n")
        });
    }
    if json {
        let complex: serde_json::Value = serde_json::from_str(&doc).expect("own output parses");
        return Ok(pretty(&RealizeView {
            class: class.to_string(),
            terms: uz_terms(&class),
            complex,
        }));
    }
    Ok(format!("{doc}class: {class}\n"))
}

fn cmd_check(input: &str, json: bool, verbose: bool) -> Outcome<String> {
    let c = load(input, verbose)?;
    if json {
        return Ok(pretty(&serde_json::json!({
            "valid": true,
            "name": c.name,
            "iso_classes": c.iso_classes.len(),
        })));
    }
    Ok(format!("ok: {} ({} isomorphism classes)\n", input, c.iso_classes.len()))
}

fn cmd_example(name: &str, json: bool, verbose: bool) -> Outcome<String> {
    let c = builtin(name)?;
    let report = InvariantReport::compute(&c)?;
    if json {
        let complex: serde_json::Value = serde_json::from_str(&to_json(&c)).expect("own output parses");
        let report: serde_json::Value = serde_json::from_str(&report.to_json()).expect("own output parses");
        return Ok(pretty(&serde_json::json!({ "complex": complex, "report": report })));
    }
    let mut out = format!("{}: {}\n", c.name, c.description);
    if verbose {
        out.push_str(&to_json(&c));
    }
    out.push_str(&report.summary());
    Ok(out)
}

fn write_file(path: &Path, text: &str) -> Outcome<()> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("writing {}: {e}", path.display())))
}

fn run(cli: &Cli) -> Outcome<String> {
    match &cli.command {
        Command::Class { matrix } => cmd_class(matrix, cli.json),
        Command::Factor { coefficients } => cmd_factor(coefficients, cli.json),
        Command::Invariants { input } => cmd_invariants(&load(input, cli.verbose)?, cli.json, cli.verbose),
        Command::Realize { a, b_prime } => cmd_realize(a, b_prime, cli.json, cli.output.as_deref()),
        Command::Check { input } => cmd_check(input, cli.json, cli.verbose),
        Command::Example { name } => cmd_example(name, cli.json, cli.verbose),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(text) => {
            let realize_wrote = matches!(cli.command, Command::Realize { .. });
            match (&cli.output, realize_wrote) {
                (Some(path), false) => match write_file(path, &text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(Failure::Io(msg)) => {
                        eprintln!("error: {msg}");
                        ExitCode::from(1)
                    }
                    Err(Failure::Core(e)) => {
                        eprintln!("error: {e}");
                        ExitCode::from(2)
                    }
                },
                _ => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
            }
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_user_error() { 1 } else { 2 })
        }
    }
}
