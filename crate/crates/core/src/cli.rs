//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 input validation failure,
//! 3 a verification found a violated relation.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::arrangements::{generate, Arrangement, Instance, InstanceKind, TopeSet};
use crate::complexes::{delta_faces, lambda_facets, long_f_vector, LongFVector};
use crate::cycles::{canonical_hypercube_cycle, find_symmetric_cycle, validate_cycle, CycleViolation, SymmetricCycle};
use crate::decomposition::decompose;
use crate::dehn_sommerville::check_ds;
use crate::io::{census_tsv, f_vector_tsv, FVectorDocument, FVectorInput};
use crate::oracles::{census, check_halfplane_condition, expected_hypercube_histogram, nu_counts, HalfplaneCondition};
use crate::sign::SignVector;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tope-cycles", version, about = "Tope decompositions along symmetric cycles")]
pub struct Cli {
    /// Output format; TSV is available for f-vectors and census histograms.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate an instance (arrangement JSON, or tope-set JSON for the hypercube).
    Gen(GenArgs),
    /// Enumerate the topes of an arrangement.
    Topes {
        #[arg(long)]
        arrangement: PathBuf,
    },
    /// Symmetric cycles: search, canonical construction, validation.
    #[command(subcommand)]
    Cycle(CycleCommand),
    /// Decompose a tope along a symmetric cycle.
    Decompose(TopeCycleArgs),
    /// Long f-vector of the complex attached to a tope and a cycle.
    Fvector {
        #[command(flatten)]
        input: TopeCycleArgs,
        #[arg(long, value_enum, default_value_t = Method::Lambda)]
        method: Method,
    },
    /// Check the Dehn-Sommerville type relations.
    VerifyDs {
        /// An f-vector document (`{"t", "f"}` or `fvector` output).
        #[arg(long, conflicts_with_all = ["tope", "cycle"])]
        fvector: Option<PathBuf>,
        #[arg(long, requires = "cycle")]
        tope: Option<SignVector>,
        #[arg(long, requires = "tope")]
        cycle: Option<String>,
    },
    /// Histogram of decomposition sizes over a tope set.
    Census {
        #[arg(long)]
        topes: PathBuf,
        /// Cycle file, or `canonical` for the canonical hypercube cycle.
        #[arg(long)]
        cycle: String,
        /// Compare against `2 C(t, j)` for odd `j`; mismatch exits with 3.
        #[arg(long)]
        expect_hypercube: bool,
        /// List the topes of each size.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Feasible-subsystem counts of a planar vector system.
    Nu {
        #[arg(long)]
        arrangement: PathBuf,
        /// Multiply each normal by this sign vector first.
        #[arg(long)]
        reorient: Option<SignVector>,
    },
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub t: usize,
    /// Dimension for `moment-curve`.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Hypercube,
    Rank2Fan,
    MomentCurve,
    TotallyCyclicFan,
}

#[derive(Subcommand, Debug)]
pub enum CycleCommand {
    /// Depth-first search for a symmetric cycle in a tope set.
    Find {
        #[arg(long)]
        topes: PathBuf,
        #[arg(long)]
        start: Option<SignVector>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The canonical cycle of the hypercube graph.
    Canonical {
        #[arg(long)]
        t: usize,
    },
    /// Check a cycle file, optionally against a tope set.
    Validate {
        #[arg(long)]
        cycle: PathBuf,
        #[arg(long)]
        topes: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct TopeCycleArgs {
    #[arg(long)]
    pub tope: SignVector,
    /// Cycle file, or `canonical` for the canonical hypercube cycle.
    #[arg(long)]
    pub cycle: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Lambda,
    Delta,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Lambda => "lambda",
            Method::Delta => "delta",
            Method::Both => "both",
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Invalid(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Invalid(_) => EXIT_INVALID,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// A rendered document plus the exit code it should end with.
struct Outcome {
    body: String,
    code: i32,
}

impl Outcome {
    fn json<T: Serialize>(value: &T, code: i32) -> Result<Self, Failure> {
        let body = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(Outcome { body: body + "\n", code })
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &outcome.body).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(outcome.body.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message());
            failure.code()
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
struct RawCycleFile {
    vertices: Vec<SignVector>,
}

fn load_cycle(source: &str, t: usize) -> Result<SymmetricCycle, Failure> {
    if source == "canonical" {
        return Ok(canonical_hypercube_cycle(t)?);
    }
    let cycle: SymmetricCycle = read_json(Path::new(source))?;
    if cycle.t() != t {
        return Err(Error::DimensionMismatch { expected: cycle.t(), found: t }.into());
    }
    Ok(cycle)
}

fn require_json(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Tsv {
        Err(Failure::Usage(format!("--format tsv is not available for {what}")))
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct CycleValidation {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<CycleViolation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle: Option<SymmetricCycle>,
}

#[derive(Serialize)]
struct NotFound {
    found: bool,
    t: usize,
}

#[derive(Serialize)]
struct CensusDocument<'a> {
    t: usize,
    histogram: &'a BTreeMap<usize, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    topes: Option<&'a BTreeMap<usize, Vec<SignVector>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<&'a BTreeMap<usize, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

#[derive(Serialize)]
struct NuDocument {
    t: usize,
    nu: Vec<u64>,
    halfplane_condition: HalfplaneCondition,
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Gen(args) => {
            require_json(format, "gen")?;
            let kind = match args.kind {
                GenKind::Hypercube => InstanceKind::Hypercube { t: args.t },
                GenKind::Rank2Fan => InstanceKind::Rank2Fan { t: args.t },
                GenKind::MomentCurve => InstanceKind::MomentCurve { t: args.t, r: args.r },
                GenKind::TotallyCyclicFan => InstanceKind::TotallyCyclicFan { t: args.t },
            };
            match generate(kind).map_err(|e| Failure::Usage(e.to_string()))? {
                Instance::Arrangement(a) => Outcome::json(&a, EXIT_OK),
                Instance::Topes(t) => Outcome::json(&t, EXIT_OK),
            }
        }
        Command::Topes { arrangement } => {
            require_json(format, "topes")?;
            let arr: Arrangement = read_json(arrangement)?;
            Outcome::json(&arr.enumerate_topes()?, EXIT_OK)
        }
        Command::Cycle(cmd) => {
            require_json(format, "cycle")?;
            match cmd {
                CycleCommand::Find { topes, start, seed } => {
                    let set: TopeSet = read_json(topes)?;
                    match find_symmetric_cycle(&set, *start, *seed)? {
                        Some(c) => Outcome::json(&c, EXIT_OK),
                        None => Outcome::json(&NotFound { found: false, t: set.t() }, EXIT_OK),
                    }
                }
                CycleCommand::Canonical { t } => {
                    let c = canonical_hypercube_cycle(*t).map_err(|e| Failure::Usage(e.to_string()))?;
                    Outcome::json(&c, EXIT_OK)
                }
                CycleCommand::Validate { cycle, topes } => {
                    let raw: RawCycleFile = read_json(cycle)?;
                    let set: Option<TopeSet> = topes.as_deref().map(read_json).transpose()?;
                    match validate_cycle(&raw.vertices, set.as_ref()) {
                        Ok(c) => {
                            Outcome::json(&CycleValidation { valid: true, violation: None, cycle: Some(c) }, EXIT_OK)
                        }
                        Err(v) => Outcome::json(
                            &CycleValidation { valid: false, violation: Some(v), cycle: None },
                            EXIT_INVALID,
                        ),
                    }
                }
            }
        }
        Command::Decompose(args) => {
            require_json(format, "decompose")?;
            let cycle = load_cycle(&args.cycle, args.tope.len())?;
            Outcome::json(&decompose(&args.tope, &cycle)?, EXIT_OK)
        }
        Command::Fvector { input, method } => {
            let tope = input.tope;
            let cycle = load_cycle(&input.cycle, tope.len())?;
            let t = cycle.t();
            let size = decompose(&tope, &cycle)?.len();
            let lambda = match method {
                Method::Lambda | Method::Both => Some(lambda_facets(&tope, &cycle)?),
                Method::Delta => None,
            };
            let delta = match method {
                Method::Delta | Method::Both => Some(delta_faces(&tope, &cycle)?),
                Method::Lambda => None,
            };
            let lambda_faces = lambda.as_ref().map(|l| l.faces()).transpose()?;
            let coincide = match (&lambda_faces, &delta) {
                (Some(l), Some(d)) => Some(l == d),
                _ => None,
            };
            let faces = lambda_faces.as_ref().or(delta.as_ref()).expect("one method ran");
            let f = long_f_vector(faces, t);
            let code = if coincide == Some(false) { EXIT_VERIFY } else { EXIT_OK };
            if format == Format::Tsv {
                return Ok(Outcome { body: f_vector_tsv(&f), code });
            }
            let doc = FVectorDocument {
                t,
                f: f.f,
                tope: tope.to_string(),
                method: method.name().to_owned(),
                decomposition_size: size,
                facets: lambda.map(|l| l.facets),
                coincide,
            };
            Outcome::json(&doc, code)
        }
        Command::VerifyDs { fvector, tope, cycle } => {
            require_json(format, "verify-ds")?;
            let f: LongFVector = match (fvector, tope, cycle) {
                (Some(path), _, _) => {
                    let input: FVectorInput = read_json(path)?;
                    input.into_f_vector().map_err(Failure::Invalid)?
                }
                (None, Some(tope), Some(cycle)) => {
                    let cycle = load_cycle(cycle, tope.len())?;
                    lambda_facets(tope, &cycle)?.f_vector()?
                }
                _ => return Err(Failure::Usage("verify-ds needs --fvector or --tope with --cycle".into())),
            };
            let report = check_ds(&f);
            let code = if report.passed { EXIT_OK } else { EXIT_VERIFY };
            Outcome::json(&report, code)
        }
        Command::Census { topes, cycle, expect_hypercube, list, jobs } => {
            let set: TopeSet = read_json(topes)?;
            let cycle = load_cycle(cycle, set.t())?;
            let result = census(&set, &cycle, (*jobs).max(1), *list)?;
            let expected = expect_hypercube.then(|| expected_hypercube_histogram(set.t()));
            let matches = expected.as_ref().map(|e| *e == result.histogram);
            let code = if matches == Some(false) { EXIT_VERIFY } else { EXIT_OK };
            if format == Format::Tsv {
                return Ok(Outcome { body: census_tsv(&result, expected.as_ref()), code });
            }
            let doc = CensusDocument {
                t: result.t,
                histogram: &result.histogram,
                topes: result.topes.as_ref(),
                expected: expected.as_ref(),
                matches,
            };
            Outcome::json(&doc, code)
        }
        Command::Nu { arrangement, reorient } => {
            require_json(format, "nu")?;
            let mut arr: Arrangement = read_json(arrangement)?;
            if let Some(signs) = reorient {
                arr = arr.reoriented(signs)?;
            }
            let nu = nu_counts(arr.normals())?;
            let halfplane_condition = check_halfplane_condition(arr.normals())?;
            Outcome::json(&NuDocument { t: arr.t(), nu, halfplane_condition }, EXIT_OK)
        }
    }
}
