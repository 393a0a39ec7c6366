//! Command-line surface over the library: semigroup reports, canonical
//! bases, closed-form ideal constructions, oracle verification, spectrum
//! checks, and the worked-example reproduction table.
//!
//! Exit codes: 0 success or Proven, 1 mathematical refutation or failed
//! check, 2 inconclusive verification, 64 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ktcores::corealg::CoreAlgebra;
use ktcores::error::Error;
use ktcores::field::FieldSpec;
use ktcores::ideal::{
    integral_closure_general, integral_closure_one_minus_t, monomial_ideal, rational_point_ideal,
    two_generator_ideal, IdealPresentation,
};
use ktcores::oracle::{
    default_verify_bound, verify_ideal_equality, Refutation, RefutationKind, Verdict,
};
use ktcores::parse::{parse_poly, parse_scalar};
use ktcores::poly::Poly;
use ktcores::reproduce;
use ktcores::semigroup::NumericalSemigroup;
use ktcores::spectra::spec_correspondence_check;

const USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "ktcores",
    version,
    about = "Exact generator systems for ideals in cores of k[t], with a built-in verification oracle"
)]
struct Cli {
    /// Coefficient field for --gens sources and polynomial arguments
    #[arg(long, global = true, value_name = "Q|Fp:<p>", default_value = "Q", value_parser = parse_field)]
    field: FieldSpec,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Degree bound for truncated computations
    #[arg(long, global = true, value_name = "N")]
    max_deg: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical semigroup invariants
    #[command(subcommand)]
    Sgp(SgpCommand),
    /// Core algebra inspection
    #[command(subcommand)]
    Core(CoreCommand),
    /// Closed-form ideal presentations
    #[command(subcommand)]
    Ideal(IdealCommand),
    /// Brute-force certification of claimed ideal equalities
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Spectrum correspondence checks over finite fields
    #[command(subcommand)]
    Spectra(SpectraCommand),
    /// Replays of the worked examples the library is built around
    #[command(subcommand)]
    Paper(PaperCommand),
}

#[derive(Subcommand)]
enum SgpCommand {
    /// Prints conductor, gaps, multiplicity, and minimal generators
    Info(SgpInfoArgs),
}

#[derive(Args)]
struct SgpInfoArgs {
    /// Semigroup generators, comma separated, e.g. 4,11,13
    #[arg(long, value_name = "LIST")]
    gens: String,
}

#[derive(Subcommand)]
enum CoreCommand {
    /// Prints the canonical degree-echelon basis up to a bound
    Basis(CoreBasisArgs),
}

#[derive(Args)]
struct CoreBasisArgs {
    #[command(flatten)]
    source: Source,
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Two-generator presentation of fS ∩ R for a unit polynomial f
    Twogen(IdealTwogenArgs),
    /// Maximal ideal of k[H] at a rational point t = α
    Point(IdealPointArgs),
    /// Minimal monomial generators of t^qS ∩ k[H]
    Monomial(IdealMonomialArgs),
    /// Integral closure of an ideal with extension t^q·f·S
    Closure(IdealClosureArgs),
}

#[derive(Args)]
struct IdealTwogenArgs {
    #[command(flatten)]
    source: Source,
    /// Unit polynomial f with f(0) = 1
    #[arg(long, value_name = "POLY")]
    f: String,
    /// Shift exponent, at least max(2, c0)
    #[arg(long, value_name = "N")]
    c: Option<usize>,
    /// Inversion precision, at least max(2, c0)
    #[arg(long, value_name = "N")]
    ell: Option<usize>,
}

#[derive(Args)]
struct IdealPointArgs {
    #[command(flatten)]
    source: Source,
    /// Coordinate of the point; 0 selects the origin ideal
    #[arg(long, value_name = "SCALAR")]
    alpha: String,
}

#[derive(Args)]
struct IdealMonomialArgs {
    #[command(flatten)]
    source: Source,
    /// Monomial exponent of the extension t^qS
    #[arg(long, value_name = "N")]
    q: usize,
}

#[derive(Args)]
struct IdealClosureArgs {
    #[command(flatten)]
    source: Source,
    /// Monomial exponent of the extension t^q·f·S
    #[arg(long, value_name = "N")]
    q: usize,
    /// Unit part of the extension generator [default: 1 - t]
    #[arg(long, value_name = "POLY")]
    f: Option<String>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Decides whether claimed generators span φS ∩ R
    Equality(VerifyEqualityArgs),
}

#[derive(Args)]
struct VerifyEqualityArgs {
    /// Core description file (TOML or JSON)
    #[arg(long, value_name = "FILE")]
    core: PathBuf,
    /// The element φ whose contraction is claimed
    #[arg(long, value_name = "POLY")]
    phi: String,
    /// Claimed generators, semicolon separated
    #[arg(long, value_name = "POLY;POLY;…")]
    gens: String,
}

#[derive(Subcommand)]
enum SpectraCommand {
    /// Certifies the closed-point correspondence up to a degree
    Check(SpectraCheckArgs),
}

#[derive(Args)]
struct SpectraCheckArgs {
    /// Core description file (TOML or JSON)
    #[arg(long, value_name = "FILE")]
    core: PathBuf,
    /// Largest irreducible degree to sweep
    #[arg(long, value_name = "D")]
    max_irr_deg: usize,
}

#[derive(Subcommand)]
enum PaperCommand {
    /// Runs the reproduction suite and prints a pass/fail table
    Reproduce(PaperReproduceArgs),
}

#[derive(Args)]
struct PaperReproduceArgs {
    /// Replay a single row, e.g. ex4.8
    #[arg(long, value_name = "ID")]
    only: Option<String>,
    /// Worker threads for the rows; output order is fixed
    #[arg(long, value_name = "N", default_value_t = 1)]
    jobs: usize,
}

/// Where the ring comes from: a description file or a semigroup over the
/// global field. Exactly one must be given.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Core description file (TOML or JSON); fixes the field
    #[arg(long, value_name = "FILE")]
    core: Option<PathBuf>,
    /// Semigroup generators for k[H], comma separated
    #[arg(long, value_name = "LIST")]
    gens: Option<String>,
}

/// A failed invocation: either the library rejected the inputs or the
/// flags themselves were unusable. Both exit with the usage code.
enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl Source {
    fn build(&self, field: FieldSpec) -> Result<CoreAlgebra, Failure> {
        match (&self.core, &self.gens) {
            (Some(path), None) => Ok(CoreAlgebra::load(path)?),
            (None, Some(list)) => {
                let h = NumericalSemigroup::new(&parse_gens(list)?)?;
                Ok(CoreAlgebra::from_semigroup(&h, field))
            }
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

fn parse_gens(list: &str) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad --gens entry {:?}", part.trim())))
        })
        .collect()
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`ktcores ... | head`) like other
    // line-oriented tools instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Sgp(SgpCommand::Info(args)) => sgp_info(&cli, args),
        Command::Core(CoreCommand::Basis(args)) => core_basis(&cli, args),
        Command::Ideal(IdealCommand::Twogen(args)) => {
            let r = args.source.build(cli.field)?;
            let f = parse_poly(&args.f, r.field())?;
            print_presentation(&cli, &two_generator_ideal(&r, &f, args.c, args.ell)?);
            Ok(0)
        }
        Command::Ideal(IdealCommand::Point(args)) => {
            let r = args.source.build(cli.field)?;
            let h = r.semigroup().ok_or(Error::NonMonomialCore)?;
            let alpha = parse_scalar(&args.alpha, r.field())?;
            print_presentation(&cli, &rational_point_ideal(h, r.field(), &alpha)?);
            Ok(0)
        }
        Command::Ideal(IdealCommand::Monomial(args)) => {
            let r = args.source.build(cli.field)?;
            let h = r.semigroup().ok_or(Error::NonMonomialCore)?;
            print_presentation(&cli, &monomial_ideal(h, r.field(), args.q));
            Ok(0)
        }
        Command::Ideal(IdealCommand::Closure(args)) => {
            let r = args.source.build(cli.field)?;
            let f = match &args.f {
                Some(text) => parse_poly(text, r.field())?,
                None => Poly::from_ints(r.field(), &[1, -1]),
            };
            let one_minus_t = Poly::from_ints(r.field(), &[1, -1]);
            let pres = if args.q > 0 && f == one_minus_t {
                let h = r.semigroup().ok_or(Error::NonMonomialCore)?;
                integral_closure_one_minus_t(h, r.field(), args.q)?
            } else {
                integral_closure_general(&r, args.q, &f, None, None)?
            };
            print_presentation(&cli, &pres);
            Ok(0)
        }
        Command::Verify(VerifyCommand::Equality(args)) => verify_equality(&cli, args),
        Command::Spectra(SpectraCommand::Check(args)) => spectra_check(&cli, args),
        Command::Paper(PaperCommand::Reproduce(args)) => paper_reproduce(&cli, args),
    }
}

fn sgp_info(cli: &Cli, args: &SgpInfoArgs) -> Result<u8, Failure> {
    let h = NumericalSemigroup::new(&parse_gens(&args.gens)?)?;
    if cli.json {
        let doc = serde_json::json!({
            "generators": h.generators(),
            "conductor": h.conductor(),
            "frobenius": h.frobenius(),
            "gaps": h.gaps(),
            "multiplicity": h.multiplicity(),
            "minimal_generators": h.min_generators(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("generators: {}", join(h.generators()));
        println!("multiplicity: {}", h.multiplicity());
        println!("conductor: {}", h.conductor());
        println!("frobenius: {}", h.frobenius());
        println!("gaps: {}", join(h.gaps()));
        println!("minimal generators: {}", join(h.min_generators()));
    }
    Ok(0)
}

fn core_basis(cli: &Cli, args: &CoreBasisArgs) -> Result<u8, Failure> {
    let r = args.source.build(cli.field)?;
    let bound = cli.max_deg.unwrap_or(2 * r.c0());
    let basis = r.canonical_basis(bound);
    if cli.json {
        let doc = serde_json::json!({
            "field": r.field().to_string(),
            "c0": r.c0(),
            "bound": bound,
            "is_semigroup_ring": r.is_semigroup_ring(),
            "keys": basis.keys(),
            "elements": basis
                .keys()
                .iter()
                .map(|&d| basis.element(d).expect("key").to_string())
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("field: {}", r.field());
        println!("c0: {}", r.c0());
        println!("bound: {bound}");
        println!("semigroup ring: {}", if r.is_semigroup_ring() { "yes" } else { "no" });
        println!("basis:");
        for d in basis.keys() {
            println!("  {d}: {}", basis.element(d).expect("key"));
        }
    }
    Ok(0)
}

fn print_presentation(cli: &Cli, pres: &IdealPresentation) {
    let gens: Vec<String> = pres.generators().iter().map(|g| g.to_string()).collect();
    if cli.json {
        let doc = serde_json::json!({
            "generators": gens,
            "mu_upper_bound": pres.mu_upper_bound(),
            "provenance": pres.provenance().to_string(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("I = ({})", gens.join(", "));
        println!("mu upper bound: {}", pres.mu_upper_bound());
        println!("provenance: {}", pres.provenance());
    }
}

fn verify_equality(cli: &Cli, args: &VerifyEqualityArgs) -> Result<u8, Failure> {
    let r = CoreAlgebra::load(&args.core)?;
    let phi = parse_poly(&args.phi, r.field())?;
    let gens = args
        .gens
        .split(';')
        .map(|part| parse_poly(part, r.field()))
        .collect::<Result<Vec<Poly>, Error>>()?;
    let bound = cli.max_deg.unwrap_or_else(|| default_verify_bound(&r, &phi, &gens));
    let verdict = verify_ideal_equality(&r, &phi, &gens, bound)?;
    if cli.json {
        let doc = match &verdict {
            Verdict::Proven => serde_json::json!({"verdict": "proven", "bound": bound}),
            Verdict::Refuted(Refutation { witness, kind }) => serde_json::json!({
                "verdict": "refuted",
                "bound": bound,
                "witness": witness.to_string(),
                "kind": kind_slug(*kind),
            }),
            Verdict::Inconclusive => {
                serde_json::json!({"verdict": "inconclusive", "bound": bound})
            }
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        match &verdict {
            Verdict::Proven => println!("Proven (degree bound {bound})"),
            Verdict::Refuted(refutation) => println!("Refuted: {refutation}"),
            Verdict::Inconclusive => {
                println!("Inconclusive at degree bound {bound}; retry with a larger --max-deg")
            }
        }
    }
    Ok(match verdict {
        Verdict::Proven => 0,
        Verdict::Refuted(_) => 1,
        Verdict::Inconclusive => 2,
    })
}

fn kind_slug(kind: RefutationKind) -> &'static str {
    match kind {
        RefutationKind::GeneratorNotMultiple => "generator-not-multiple",
        RefutationKind::GeneratorOutsideRing => "generator-outside-ring",
        RefutationKind::MissingElement => "missing-element",
    }
}

fn spectra_check(cli: &Cli, args: &SpectraCheckArgs) -> Result<u8, Failure> {
    let r = CoreAlgebra::load(&args.core)?;
    let bound = cli
        .max_deg
        .ok_or_else(|| Failure::Usage("spectra check requires --max-deg".to_string()))?;
    let report = spec_correspondence_check(&r, args.max_irr_deg, bound)?;
    if cli.json {
        let doc = serde_json::json!({
            "points": report
                .points
                .iter()
                .map(|p| {
                    serde_json::json!({
                        "pi": p.point.pi().to_string(),
                        "degree": p.point.degree(),
                        "stabilized_codim": p.stabilized_codim,
                        "matches": p.codim_matches_degree,
                    })
                })
                .collect::<Vec<_>>(),
            "collisions": report
                .collisions
                .iter()
                .map(|(a, b)| vec![a.pi().to_string(), b.pi().to_string()])
                .collect::<Vec<_>>(),
            "passes": report.passes(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("closed points of degree ≤ {}: {}", args.max_irr_deg, report.points.len());
        for p in &report.points {
            let codim = match p.stabilized_codim {
                Some(n) => n.to_string(),
                None => "unstabilized".to_string(),
            };
            let status = if p.codim_matches_degree { "ok" } else { "MISMATCH" };
            println!(
                "  ({}): residue degree {codim}, expected {}: {status}",
                p.point.pi(),
                p.point.degree()
            );
        }
        if report.collisions.is_empty() {
            println!("collisions: none");
        } else {
            for (a, b) in &report.collisions {
                println!("collision: ({}) and ({}) contract to the same slice", a.pi(), b.pi());
            }
        }
        println!("{}", if report.passes() { "PASS" } else { "FAIL" });
    }
    Ok(if report.passes() { 0 } else { 1 })
}

fn paper_reproduce(cli: &Cli, args: &PaperReproduceArgs) -> Result<u8, Failure> {
    if let Some(id) = &args.only {
        if !reproduce::example_ids().contains(&id.as_str()) {
            return Err(Failure::Usage(format!(
                "unknown example {id:?}; valid ids: {}",
                reproduce::example_ids().join(", ")
            )));
        }
    }
    let outcomes = reproduce::run_all(args.only.as_deref(), args.jobs.max(1));
    let all_passed = outcomes.iter().all(|o| o.passed);
    if cli.json {
        let doc = outcomes
            .iter()
            .map(|o| {
                serde_json::json!({
                    "id": o.id,
                    "summary": o.summary,
                    "passed": o.passed,
                    "millis": o.millis,
                    "details": o.details,
                })
            })
            .collect::<Vec<_>>();
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        for o in &outcomes {
            let status = if o.passed { "PASS" } else { "FAIL" };
            println!("[{status}] {} ({} ms): {}", o.id, o.millis, o.summary);
            for line in &o.details {
                println!("    {line}");
            }
        }
        let passed = outcomes.iter().filter(|o| o.passed).count();
        println!("{passed} of {} rows passed", outcomes.len());
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn join(values: &[usize]) -> String {
    if values.is_empty() {
        return "none".to_string();
    }
    values.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
}
