//! Command-line front end: `ring-info`, `invariant`, `verify`, `bracket` and
//! `catalog`. Data goes to the output stream, progress and errors to the
//! diagnostic stream.

mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bracket::{BracketEngine, BracketError, DEFAULT_WIDTH_LIMIT};
use crate::cyclotomic::{gauss_sum, init_ring, valuation_xi_minus_1, CycloError};
use crate::invariant::{tau, verify_lemmas, InvariantError, LemmaRanges, Route};
use crate::link::catalog::{catalog, lookup};
use crate::link::{
    enumerate_classes, is_algebraically_split, parse_document, validate_presentation, CohomClass, FramedLink,
    LinkError, PdCode,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qsu2", version, about = "Exact quantum SU(2) invariants tau_2p(M, theta) of surgery presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summary of the cyclotomic field for p.
    RingInfo {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// tau(M, theta) for each selected cohomology class.
    Invariant {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        p: Option<u32>,
        /// "all", "trivial", or 1-based component indices such as "1,3".
        #[arg(long, default_value = "all")]
        theta: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Lemma)]
        route: RouteArg,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Lemma bounds, route equality and theorem verdicts at p.
    Verify {
        #[arg(long)]
        p: u32,
        /// Extra presentation added to the catalog cases.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        framings: Option<Vec<i64>>,
        #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
        bound_offset: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Kauffman bracket of a diagram, normalized so the trivial knot gives 1.
    Bracket {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Built-in links.
    Catalog {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Path to a JSON document, inline JSON, or a catalog name.
    #[arg(long)]
    input: String,
    /// Comma-separated framings, overriding those of the input.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    framings: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = DEFAULT_WIDTH_LIMIT)]
    width_limit: usize,
    #[arg(long, env = "QSU2_CACHE_DIR", default_value = "./.bracket-cache")]
    cache_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Lemma,
    Km,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Lemma => Route::Lemma,
            RouteArg::Km => Route::Km,
            RouteArg::Both => Route::Both,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Internal(_) | CliError::Failed(_) => EXIT_FAILURE,
        }
    }
}

impl From<LinkError> for CliError {
    fn from(e: LinkError) -> CliError {
        CliError::Invalid(e.to_string())
    }
}

impl From<CycloError> for CliError {
    fn from(e: CycloError) -> CliError {
        match e {
            CycloError::BadPrime(_) => CliError::Invalid(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<BracketError> for CliError {
    fn from(e: BracketError) -> CliError {
        match e {
            BracketError::WidthLimit { .. } | BracketError::TooManyCrossings(_) => CliError::Resource(e.to_string()),
            BracketError::Link(l) => l.into(),
            BracketError::Cyclo(c) => c.into(),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> CliError {
        match e {
            InvariantError::Bracket(b) => b.into(),
            InvariantError::Link(l) => l.into(),
            InvariantError::Cyclo(c) => c.into(),
            InvariantError::ZeroFraming(_) | InvariantError::ColorOutOfRange { .. } | InvariantError::ColorLength { .. } => {
                CliError::Invalid(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Internal(e.to_string())
    }
}

/// A resolved input: the framed link and the p stored in the document, if any.
struct Loaded {
    name: String,
    link: FramedLink,
    p: Option<u32>,
}

fn load(input: &str, framings: Option<&[i64]>) -> Result<Loaded, CliError> {
    let path = std::path::Path::new(input);
    let text = if input.trim_start().starts_with('{') {
        Some(input.to_string())
    } else if path.is_file() {
        Some(std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{input}: {e}")))?)
    } else {
        None
    };
    match text {
        Some(text) => {
            let doc = parse_document(&text)?;
            let diagram = PdCode::from_document(&doc)?;
            let f = match framings {
                Some(f) => f.to_vec(),
                None => doc.framings.clone().unwrap_or_else(|| vec![0; diagram.num_components()]),
            };
            Ok(Loaded { name: "input".into(), link: FramedLink::new(diagram, f)?, p: doc.p })
        }
        None => {
            let entry = lookup(input)
                .ok_or_else(|| CliError::Invalid(format!("{input}: not a file, JSON document or catalog name")))?;
            let link = match framings {
                Some(f) => entry.with_framings(f)?,
                None => entry.framed(),
            };
            Ok(Loaded { name: entry.name.to_string(), link, p: None })
        }
    }
}

fn select_classes(spec: &str, all: Vec<CohomClass>, framings: &[i64]) -> Result<Vec<CohomClass>, CliError> {
    match spec.trim() {
        "all" => Ok(all),
        "trivial" | "" | "{}" => Ok(vec![CohomClass::trivial()]),
        s => {
            let body = s.trim_start_matches('{').trim_end_matches('}');
            let mut members = Vec::new();
            for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let i: usize = tok.parse().map_err(|_| CliError::Invalid(format!("bad theta index `{tok}`")))?;
                if i == 0 {
                    return Err(CliError::Invalid("theta indices are 1-based".into()));
                }
                members.push(i - 1);
            }
            Ok(vec![CohomClass::new(framings, &members)?])
        }
    }
}

fn engine(run: &RunArgs) -> BracketEngine {
    BracketEngine::new(run.width_limit, Some(run.cache_dir.clone()))
}

fn pool(threads: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| CliError::Internal(e.to_string()))
}

fn cmd_ring_info(p: u32, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let ring = init_ring(p)?;
    let val = valuation_xi_minus_1(&gauss_sum(&ring))?;
    output::ring_info(&ring, val, format == Format::Machine, out)?;
    Ok(())
}

fn cmd_invariant(
    input: &InputArgs,
    p: Option<u32>,
    theta: &str,
    route: Route,
    run: &RunArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let loaded = load(&input.input, input.framings.as_deref())?;
    let p = p.or(loaded.p).ok_or_else(|| CliError::Invalid("--p is required".into()))?;
    let ring = init_ring(p)?;
    let pres = validate_presentation(&loaded.link, p)?;
    let classes = select_classes(theta, enumerate_classes(&pres), pres.framings())?;
    let engine = engine(run);
    let pool = pool(run.threads)?;
    let mut reports = Vec::with_capacity(classes.len());
    for theta in &classes {
        writeln!(err, "computing theta = {} at p = {p} ({} route)", theta.label(), route)?;
        let rep = pool.install(|| tau(&pres, theta, &ring, route, &engine))?;
        writeln!(err, "  done in {:.3} s", rep.elapsed.as_secs_f64())?;
        reports.push(rep);
    }
    output::reports(&loaded.name, &pres, &reports, run.format == Format::Machine, out)?;
    let failed: Vec<String> = reports.iter().filter(|r| !r.verdict).map(|r| r.theta.label()).collect();
    if !failed.is_empty() {
        return Err(CliError::Failed(format!("verdict false for theta = {}", failed.join(", "))));
    }
    Ok(())
}

/// Catalog presentations used by `verify` at p.
fn verify_cases(p: u32) -> (Vec<(String, FramedLink)>, Vec<(String, FramedLink)>) {
    let get = |name: &str, f: &[i64]| (name.to_string(), lookup(name).expect("catalog name").with_framings(f).expect("framings"));
    let mut parallels = vec![get("unknot", &[1]), get("trefoil", &[1]), get("figure8", &[1])];
    let mut presentations = vec![
        get("unknot", &[1]),
        get("unknot", &[-1]),
        get("unknot", &[2]),
        get("unknot", &[-3]),
        get("trefoil", &[1]),
        get("trefoil", &[2]),
    ];
    if p == 3 {
        parallels.push(get("borromean", &[2, 2, 2]));
        presentations.push(get("borromean", &[2, 2, 2]));
    }
    (parallels, presentations)
}

fn cmd_verify(
    p: u32,
    input: Option<&str>,
    framings: Option<&[i64]>,
    bound_offset: i64,
    run: &RunArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let ring = init_ring(p)?;
    let (mut parallels, presentations) = verify_cases(p);
    let mut kept = Vec::new();
    for (name, link) in presentations {
        match validate_presentation(&link, p) {
            Ok(_) => kept.push((name, link)),
            Err(e) => writeln!(err, "skipping {name} {:?}: {e}", link.framings())?,
        }
    }
    if let Some(input) = input {
        let loaded = load(input, framings)?;
        validate_presentation(&loaded.link, p)?;
        parallels.push((loaded.name.clone(), loaded.link.clone()));
        kept.push((loaded.name, loaded.link));
    }
    let ranges = LemmaRanges {
        f_values: LemmaRanges::standard_values(p),
        g_values: LemmaRanges::standard_values(p),
        parallels,
        presentations: kept,
        bound_offset,
    };
    writeln!(err, "running lemma suite at p = {p}")?;
    let engine = engine(run);
    let report = pool(run.threads)?.install(|| verify_lemmas(&ring, &ranges, &engine))?;
    output::lemma_report(p, &report, run.format == Format::Machine, out)?;
    let failures = report.failures().count();
    if failures > 0 {
        return Err(CliError::Failed(format!("{failures} of {} checks failed", report.entries.len())));
    }
    Ok(())
}

fn cmd_bracket(input: &InputArgs, run: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let loaded = load(&input.input, input.framings.as_deref())?;
    let engine = engine(run);
    let poly = pool(run.threads)?.install(|| engine.kauffman_bracket(loaded.link.diagram()))?;
    output::bracket(&poly, run.format == Format::Machine, out)?;
    Ok(())
}

fn cmd_catalog(format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let entries = catalog();
    for e in &entries {
        if is_algebraically_split(&e.diagram) != e.split {
            return Err(CliError::Internal(format!("catalog entry {} has a wrong split flag", e.name)));
        }
        let doc = e.diagram.to_document();
        PdCode::from_document(&doc)?;
    }
    output::catalog(&entries, format == Format::Machine, out)?;
    Ok(())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::RingInfo { p, format } => cmd_ring_info(*p, *format, out),
        Command::Invariant { input, p, theta, route, run } => {
            cmd_invariant(input, *p, theta, (*route).into(), run, out, err)
        }
        Command::Verify { p, input, framings, bound_offset, run } => {
            cmd_verify(*p, input.as_deref(), framings.as_deref(), *bound_offset, run, out, err)
        }
        Command::Bracket { input, run } => cmd_bracket(input, run, out),
        Command::Catalog { format } => cmd_catalog(*format, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}
