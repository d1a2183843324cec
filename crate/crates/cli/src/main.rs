//! `descent-codes`: calculator and verification harness for the `C(α, β, m)`
//! deletion codes.
//!
//! Exit codes: 0 success, 1 verification or integrity failure, 2 usage
//! error, 3 decode found no codeword, 4 decode found two codewords.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use descent_codes::codes::{
    cardinality_by_enumeration, cardinality_closed_form, decode_single_deletion,
    sphere_cardinality, CodeSpec,
};
use descent_codes::qpoly::q_binomial;
use descent_codes::verify::{Bounds, Harness, Identity, Summary, VerificationReport};
use descent_codes::words::{dm_distribution, Word};
use descent_codes::{Error, Exec};
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_FOUND: u8 = 3;
const EXIT_AMBIGUOUS: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "descent-codes", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Gaussian binomial [i over j].
    Qbinom {
        i: u64,
        j: u64,
        /// Reduce modulo q^n - 1.
        #[arg(long = "mod", value_name = "N")]
        modulus: Option<usize>,
    },
    /// Inspect the code C(alpha, beta, m).
    Code(CodeArgs),
    /// Recover a codeword of C(alpha, beta, m) from a word with one deletion.
    Decode {
        alpha: usize,
        beta: usize,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        /// Received word over A/B (0/1 accepted).
        word: String,
    },
    /// Sweep an identity family and report every parameter point.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct CodeArgs {
    alpha: usize,
    beta: usize,
    /// Residue class of the major index (any integer, reduced mod alpha+beta).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    m: i64,
    #[command(flatten)]
    view: CodeView,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct CodeView {
    /// List codewords in lexicographic order (default).
    #[arg(long)]
    list: bool,
    /// Closed-form and enumerated cardinality.
    #[arg(long)]
    card: bool,
    /// Major-index distribution of the code.
    #[arg(long)]
    dm: bool,
    /// Deletion-sphere size and its ratio to the code size.
    #[arg(long)]
    sphere: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// dm, cardinality, sphere, rpoly, roots, decoder or all.
    identity: String,
    /// Max alpha+beta for dm, cardinality and decoder sweeps.
    #[arg(long)]
    max: Option<usize>,
    /// Max gamma for the sphere sweep.
    #[arg(long)]
    max_gamma: Option<usize>,
    /// Max alpha and beta for rpoly and roots sweeps.
    #[arg(long)]
    max_ab: Option<usize>,
    /// Absolute tolerance for root-of-unity evaluations.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Run on the current thread only.
    #[arg(long)]
    sequential: bool,
}

/// A failure that maps onto a process exit code.
struct Exit {
    code: u8,
    message: String,
}

impl Exit {
    fn usage(message: impl ToString) -> Self {
        Exit {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn failure(message: impl ToString) -> Self {
        Exit {
            code: EXIT_FAILURE,
            message: message.to_string(),
        }
    }
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Self {
        Exit::failure(e)
    }
}

type CliResult = Result<u8, Exit>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(exit) => {
            let _ = out.flush();
            eprintln!("error: {}", exit.message);
            ExitCode::from(exit.code)
        }
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Qbinom { i, j, modulus } => qbinom(cli.format, *i, *j, *modulus, out),
        Command::Code(args) => code(cli.format, args, out),
        Command::Decode {
            alpha,
            beta,
            m,
            word,
        } => decode(cli.format, *alpha, *beta, *m, word, out),
        Command::Verify(args) => verify(cli.format, args, out),
    }
}

fn to_i64(v: u64) -> Result<i64, Exit> {
    i64::try_from(v).map_err(|_| Exit::usage(format!("{v} is too large")))
}

fn qbinom(
    format: Format,
    i: u64,
    j: u64,
    modulus: Option<usize>,
    out: &mut dyn Write,
) -> CliResult {
    if i > 256 {
        return Err(Exit::usage("i must be at most 256"));
    }
    let poly = q_binomial(to_i64(i)?, to_i64(j)?);
    match modulus {
        None => match format {
            Format::Plain => writeln!(out, "{poly}")?,
            Format::Json => writeln!(
                out,
                "{}",
                json!({"i": i, "j": j, "coefficients": poly.to_coefficient_strings()})
            )?,
        },
        Some(n) => {
            let residue = poly.reduce_mod(n).map_err(Exit::usage)?;
            match format {
                Format::Plain => writeln!(out, "{residue}")?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "i": i,
                        "j": j,
                        "modulus": n,
                        "coefficients": residue.to_coefficient_strings(),
                    })
                )?,
            }
        }
    }
    Ok(0)
}

fn code(format: Format, args: &CodeArgs, out: &mut dyn Write) -> CliResult {
    let spec = CodeSpec::new(args.alpha, args.beta, args.m).map_err(Exit::usage)?;
    let header = json!({"alpha": spec.alpha(), "beta": spec.beta(), "m": spec.m()});
    let view = &args.view;
    if view.card {
        let closed = cardinality_closed_form(&spec).map_err(Exit::failure)?;
        let enumerated = cardinality_by_enumeration(&spec);
        match format {
            Format::Plain => writeln!(out, "closed_form={closed} enumerated={enumerated}")?,
            Format::Json => {
                let mut v = header;
                v["closed_form"] = json!(closed.to_string());
                v["enumerated"] = json!(enumerated.to_string());
                writeln!(out, "{v}")?;
            }
        }
        if closed != enumerated {
            return Err(Exit::failure(format!(
                "closed form {closed} disagrees with enumeration {enumerated}"
            )));
        }
    } else if view.dm {
        let dm = dm_distribution(spec.codewords());
        match format {
            Format::Plain => writeln!(out, "{dm}")?,
            Format::Json => {
                let mut v = header;
                v["coefficients"] = json!(dm.to_coefficient_strings());
                writeln!(out, "{v}")?;
            }
        }
    } else if view.sphere {
        let count = sphere_cardinality(&spec);
        let ratio = render_ratio(count.sphere, count.codewords);
        // the (γ+1) law is claimed only for α = β
        let key = if spec.alpha() == spec.beta() {
            "ratio"
        } else {
            "observed_ratio"
        };
        match format {
            Format::Plain => writeln!(out, "sphere={} {key}={ratio}", count.sphere)?,
            Format::Json => {
                let mut v = header;
                v["sphere"] = json!(count.sphere.to_string());
                v["codewords"] = json!(count.codewords.to_string());
                v["run_sum"] = json!(count.run_sum.to_string());
                v[key] = json!(ratio);
                writeln!(out, "{v}")?;
            }
        }
        if !count.is_disjoint() {
            return Err(Exit::failure(format!(
                "spheres overlap: set size {} but run-number sum {}",
                count.sphere, count.run_sum
            )));
        }
    } else {
        match format {
            Format::Plain => {
                let mut first = true;
                for w in spec.codewords() {
                    if !first {
                        write!(out, " ")?;
                    }
                    write!(out, "{w}")?;
                    first = false;
                }
                writeln!(out)?;
            }
            Format::Json => {
                let mut v = header;
                let words: Vec<String> = spec.codewords().map(|w| w.to_string()).collect();
                v["codewords"] = json!(words);
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(0)
}

/// `a/b` in lowest terms, or the integer when it divides evenly.
fn render_ratio(a: usize, b: usize) -> String {
    if b == 0 {
        return "undefined".into();
    }
    let g = descent_codes::numtheory::gcd(a as u64, b as u64) as usize;
    let (a, b) = (a / g, b / g);
    if b == 1 {
        a.to_string()
    } else {
        format!("{a}/{b}")
    }
}

fn decode(
    format: Format,
    alpha: usize,
    beta: usize,
    m: i64,
    word: &str,
    out: &mut dyn Write,
) -> CliResult {
    let spec = CodeSpec::new(alpha, beta, m).map_err(Exit::usage)?;
    let received: Word = word.parse().map_err(Exit::usage)?;
    let result = decode_single_deletion(&received, &spec);
    let (decoded, code) = match &result {
        Ok(Some(c)) => (Some(c.to_string()), 0),
        Ok(None) => (None, EXIT_NOT_FOUND),
        Err(e @ Error::LengthMismatch { .. }) => return Err(Exit::usage(e)),
        Err(e @ Error::UniquenessViolation { .. }) => {
            return Err(Exit {
                code: EXIT_AMBIGUOUS,
                message: e.to_string(),
            })
        }
        Err(e) => return Err(Exit::failure(e)),
    };
    match format {
        Format::Plain => writeln!(out, "{}", decoded.as_deref().unwrap_or("NOT_FOUND"))?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "alpha": spec.alpha(),
                "beta": spec.beta(),
                "m": spec.m(),
                "received": received.to_string(),
                "decoded": decoded,
                "status": if decoded.is_some() { "ok" } else { "NOT_FOUND" },
            })
        )?,
    }
    Ok(code)
}

fn verify(format: Format, args: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let identities: Vec<Identity> = if args.identity == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![args.identity.parse().map_err(Exit::usage)?]
    };
    let mut bounds = Bounds::default();
    if let Some(max) = args.max {
        bounds.dm_max_total = max;
        bounds.cardinality_max_total = max;
        bounds.decoder_max_total = max;
    }
    if let Some(g) = args.max_gamma {
        bounds.sphere_max_gamma = g;
    }
    if let Some(k) = args.max_ab {
        bounds.rpoly_max_ab = k;
        bounds.roots_max_ab = k;
    }
    if let Some(t) = args.tolerance {
        if t.is_nan() || t <= 0.0 {
            return Err(Exit::usage("tolerance must be positive"));
        }
        bounds.roots_tolerance = t;
    }
    if bounds.dm_max_total > 30 || bounds.cardinality_max_total > 30 {
        return Err(Exit::usage(
            "--max above 30 is not supported by exhaustive sweeps",
        ));
    }
    if bounds.decoder_max_total > 20 || bounds.sphere_max_gamma > 12 || bounds.rpoly_max_ab > 12 {
        return Err(Exit::usage(
            "sweep bound too large for exhaustive enumeration",
        ));
    }
    if bounds.roots_max_ab > 32 {
        return Err(Exit::usage("--max-ab above 32 is not supported"));
    }
    let exec = if args.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let harness = Harness::new(exec);
    let mut summary = Summary::default();
    let mut io_error = None;
    let mut emit = |report: VerificationReport| {
        summary.record(&report);
        if io_error.is_some() {
            return;
        }
        let line = match format {
            Format::Plain => writeln!(out, "{report}"),
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string(&report).expect("reports serialize")
            ),
        };
        if let Err(e) = line.and_then(|_| out.flush()) {
            io_error = Some(e);
        }
    };
    for id in identities {
        harness.run(id, &bounds, &mut emit);
    }
    if let Some(e) = io_error {
        return Err(e.into());
    }
    match format {
        Format::Plain => writeln!(
            out,
            "summary: passed={} failed={}",
            summary.passed, summary.failed
        )?,
        Format::Json => writeln!(out, "{}", json!({ "summary": summary }))?,
    }
    Ok(if summary.all_passed() {
        0
    } else {
        EXIT_FAILURE
    })
}
