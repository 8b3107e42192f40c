//! Command-line front end. `run` parses arguments, executes one verb and
//! returns the process exit code: 0 Holds or found, 1 Fails or none found,
//! 2 Inconclusive, 3 usage or input error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{
    check_homogeneity, check_involutive, check_positive_2_algebra, check_positivity, dual, is_bialgebra, is_semisimple,
    validate_2_algebra, Side, Status, TwoAlgebra, Verdict,
};
use crate::dilation::{
    a_lambda, coarse_grain_search, lambda_census, nonstrict_from_coarse_grain, strict_dilation_search,
    theorem3_predicate, verify_nonstrict_witness, CoarseGrainWitness, QuasiCharacterMatrix,
};
use crate::error::{Error, Result};
use crate::hecke::{build_hecke, hecke_two_algebra, iwahori_check};
use crate::io::{emit_2alg, emit_semigroup, parse_2alg, Report};
use crate::scalars::rational::{format_rational, int, parse_rational};
use crate::scalars::Rational;
use crate::semigroup::catalog::{ambient_by_name, ambient_catalog};
use crate::semigroup::{recover_semigroup, semigroup_bialgebra};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Serialize, Debug)]
#[command(name = "posalg", version, about = "Exact workbench for positive 2-algebras and their dilations")]
pub struct Cli {
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for searches (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Check the axioms of a 2-algebra file.
    Verify {
        file: PathBuf,
        /// Run every verifier instead of validation plus positivity.
        #[arg(long)]
        all: bool,
    },
    /// Emit the bialgebra of a catalog group or inverse semigroup.
    Build {
        /// Name such as Z4, Z2xZ2, S3, D4, Q8, I2 or I1_2.
        name: String,
        /// Emit the function algebra (the dual) instead.
        #[arg(long)]
        dual: bool,
        /// Emit the multiplication table instead of the 2-algebra.
        #[arg(long, conflicts_with = "dual")]
        table: bool,
    },
    /// Emit the dual of a 2-algebra file.
    Dual { file: PathBuf },
    /// Hecke algebras of symmetric groups.
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Dilation searches.
    #[command(subcommand)]
    Dilate(DilateCommand),
    /// Census of the two-dimensional algebras A_λ realized in the catalog.
    Census {
        #[arg(long)]
        max_order: usize,
    },
    /// Recover the inverse semigroup of a cocommutative bialgebra file.
    Recover { file: PathBuf },
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum HeckeCommand {
    /// Emit H_n(q) in its stochastic basis.
    Build {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'q', value_parser = rational_arg)]
        #[serde(serialize_with = "ser_rational")]
        q: Rational,
    },
    /// Compare H_n(p) with the Borel double-coset algebra of GL_n(F_p).
    Iwahori {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'p')]
        p: u64,
    },
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum DilateCommand {
    /// Search stable partitions of catalog members for the target.
    Strict(StrictArgs),
    /// Search abelian coarse grains realizing A_λ nonstrictly.
    Coarse {
        #[arg(long, value_parser = rational_arg)]
        #[serde(serialize_with = "ser_rational")]
        lambda: Rational,
        #[arg(long)]
        max_order: usize,
    },
}

#[derive(Args, Serialize, Debug)]
pub struct StrictArgs {
    /// A 2-algebra file, or `a_lambda:p/q`.
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub max_order: usize,
    /// Restrict the catalog to groups.
    #[arg(long)]
    pub groups_only: bool,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s)
}

fn ser_rational<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

/// What a verb produced: either a report or a plain artifact, and its status.
enum Outcome {
    Report(serde_json::Value, Status),
    Artifact(String),
}

fn exit_code(s: Status) -> i32 {
    match s {
        Status::Holds => EXIT_HOLDS,
        Status::Fails => EXIT_FAILS,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn found(b: bool) -> Status {
    if b {
        Status::Holds
    } else {
        Status::Fails
    }
}

fn read_2alg(path: &Path) -> Result<TwoAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_2alg(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn value<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("report payloads are plain JSON")
}

fn verify(a: &TwoAlgebra, all: bool) -> Result<Vec<Verdict>> {
    let mut out = vec![validate_2_algebra(a)?];
    if all {
        out.push(check_involutive(a)?);
        out.push(is_bialgebra(a)?);
        out.push(check_homogeneity(a)?);
        out.push(is_semisimple(a, Side::Algebra)?);
        out.push(is_semisimple(a, Side::Coalgebra)?);
        let (m, c) = check_positivity(a)?;
        out.push(m);
        out.push(c);
    }
    out.push(check_positive_2_algebra(a)?);
    Ok(out)
}

fn aggregate(vs: &[Verdict]) -> Status {
    if vs.iter().any(Verdict::is_fails) {
        Status::Fails
    } else if vs.iter().any(|v| v.status == Status::Inconclusive) {
        Status::Inconclusive
    } else {
        Status::Holds
    }
}

#[derive(Serialize)]
struct Bounds {
    max_order: usize,
    semigroups: bool,
}

#[derive(Serialize)]
struct CoarseEntry {
    group: String,
    witness: CoarseGrainWitness,
    verdict: Verdict,
}

fn strict(args: &StrictArgs) -> Result<Outcome> {
    let lambda = match args.target.strip_prefix("a_lambda:") {
        Some(t) => Some(parse_rational(t).map_err(Error::Parse)?),
        None => None,
    };
    let target = match &lambda {
        Some(l) => a_lambda(l)?,
        None => read_2alg(Path::new(&args.target))?,
    };
    let mut catalog = ambient_catalog(args.max_order, !args.groups_only);
    catalog.retain(|a| a.order() <= args.max_order);
    let search = strict_dilation_search(&target, &catalog)?;
    let mut discrepancies = Vec::new();
    let mut predicted = None;
    if let Some(l) = lambda.as_ref().filter(|l| **l > int(0) && **l <= int(1)) {
        let p = theorem3_predicate(l)?;
        if p.is_none() && !search.witnesses.is_empty() {
            discrepancies.push(format!("λ = {} has a strict witness but the predicate says NotPredicted", format_rational(l)));
        }
        predicted = Some(match p {
            Some((k, s)) => format!("k = {k}, s = {s}"),
            None => "NotPredicted".into(),
        });
    }
    let status = found(!search.witnesses.is_empty());
    let body = serde_json::json!({
        "target": args.target,
        "bounds": value(&Bounds { max_order: args.max_order, semigroups: !args.groups_only }),
        "predicted": predicted,
        "witnesses": value(&search.witnesses),
        "exhaustive_within_bounds": search.runs.iter().all(|r| r.mode == crate::dilation::EnumerationMode::Exhaustive),
        "runs": value(&search.runs),
        "notes": search.notes,
        "discrepancies": discrepancies,
    });
    Ok(Outcome::Report(body, status))
}

fn coarse(lambda: &Rational, max_order: usize) -> Result<Outcome> {
    let q = QuasiCharacterMatrix::from_rationals(&[vec![int(1), int(1)], vec![int(1), -lambda.clone()]])?;
    let mut witnesses = Vec::new();
    let mut status = Status::Fails;
    if let Some(w) = coarse_grain_search(&q, max_order)? {
        let verdict = verify_nonstrict_witness(&nonstrict_from_coarse_grain(&w, &q)?)?;
        status = verdict.status;
        witnesses.push(CoarseEntry { group: w.group_name(), witness: w, verdict });
    }
    let body = serde_json::json!({
        "target": format!("a_lambda:{}", format_rational(lambda)),
        "bounds": value(&Bounds { max_order, semigroups: false }),
        "witnesses": value(&witnesses),
        "discrepancies": Vec::<String>::new(),
    });
    Ok(Outcome::Report(body, status))
}

/// Reads a cached H_n(q) from `POSALG_CACHE` or builds and stores it.
fn hecke_cached(n: usize, q: &Rational) -> Result<TwoAlgebra> {
    let cache = std::env::var_os("POSALG_CACHE").map(PathBuf::from);
    let file = cache.as_ref().map(|d| d.join(format!("hecke_n{n}_q{}.2alg", format_rational(q).replace('/', "_"))));
    if let Some(f) = file.as_ref().filter(|f| f.exists()) {
        return read_2alg(f);
    }
    let a = hecke_two_algebra(&build_hecke(n, q)?);
    if let (Some(d), Some(f)) = (cache, file) {
        std::fs::create_dir_all(d)?;
        std::fs::write(f, emit_2alg(&a))?;
    }
    Ok(a)
}

fn execute(cmd: &Command) -> Result<Outcome> {
    Ok(match cmd {
        Command::Verify { file, all } => {
            let vs = verify(&read_2alg(file)?, *all)?;
            let status = aggregate(&vs);
            Outcome::Report(serde_json::json!({ "status": status, "checks": value(&vs) }), status)
        }
        Command::Build { name, dual: d, table } => {
            let s = ambient_by_name(name)?.build()?;
            if *table {
                Outcome::Artifact(emit_semigroup(&s))
            } else {
                let a = semigroup_bialgebra(&s)?;
                Outcome::Artifact(emit_2alg(&if *d { dual(&a)? } else { a }))
            }
        }
        Command::Dual { file } => Outcome::Artifact(emit_2alg(&dual(&read_2alg(file)?)?)),
        Command::Recover { file } => Outcome::Artifact(emit_semigroup(&recover_semigroup(&read_2alg(file)?)?)),
        Command::Hecke(HeckeCommand::Build { n, q }) => Outcome::Artifact(emit_2alg(&hecke_cached(*n, q)?)),
        Command::Hecke(HeckeCommand::Iwahori { n, p }) => {
            let r = iwahori_check(*n, *p)?;
            let status = r.verdict.status;
            Outcome::Report(value(&r), status)
        }
        Command::Dilate(DilateCommand::Strict(args)) => strict(args)?,
        Command::Dilate(DilateCommand::Coarse { lambda, max_order }) => coarse(lambda, *max_order)?,
        Command::Census { max_order } => {
            let c = lambda_census(*max_order, &ambient_catalog(*max_order, true))?;
            Outcome::Report(value(&c), Status::Holds)
        }
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_HOLDS };
        }
    };
    let start = Instant::now();
    let result = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool.install(|| execute(&cli.command)),
        Err(e) => Err(Error::InvalidArgument(e.to_string())),
    };
    let (text, code) = match result {
        Ok(Outcome::Artifact(t)) => (t, EXIT_HOLDS),
        Ok(Outcome::Report(body, status)) => {
            (Report::new(&cli, body, start.elapsed().as_millis()).to_json(), exit_code(status))
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match emit(cli.out.as_deref(), &text) {
        Ok(()) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
