//! `tilt`: Borel–Weil–Bott queries and tilting-bundle verification.
//!
//! Exit codes: 0 success, 1 mathematical failure, 2 usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use tilting_core::acceptance::Suite;
use tilting_core::report::{
    bott_report, collection_report, render_bott_text, render_endo_text, render_ktheory_text,
    render_verify_text, CollectionReport,
};
use tilting_core::{
    build_gsb, build_inv, build_sb, Error, Parabolic, RootDatum, TiltingCollection, Weight,
};

#[derive(Parser)]
#[command(
    name = "tilt",
    version,
    about = "Borel–Weil–Bott cohomology and tilting bundles on twisted flag varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    A,
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sb,
    Gsb,
    Inv,
}

#[derive(clap::Args)]
struct CollectionArgs {
    /// sb N | gsb N R | inv N
    #[arg(value_enum)]
    family: FamilyArg,
    params: Vec<usize>,
    #[arg(long)]
    json: bool,
    /// Worker threads for the pairwise Ext computation.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology of the line bundle of a weight on G/B (or G/P).
    Bott {
        #[arg(value_enum, ignore_case = true)]
        r#type: TypeArg,
        rank: usize,
        /// Marked simple roots of the parabolic, 1-based, comma separated.
        #[arg(long, value_delimiter = ',')]
        parabolic: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
        /// Fundamental-weight coordinates, after `--`.
        #[arg(allow_negative_numbers = true, required = true)]
        coords: Vec<i64>,
    },
    /// Build a collection and check that it is tilting.
    Verify(CollectionArgs),
    /// Structure of the endomorphism algebra of a verified collection.
    Endo(CollectionArgs),
    /// K-theory decomposition read off a verified collection.
    Ktheory(CollectionArgs),
    /// Run the acceptance suite.
    Selftest {
        /// Halve the n-ranges.
        #[arg(long)]
        quick: bool,
    },
}

enum Failure {
    Math(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Math(format!("serialization failed: {e}"))
    }
}

fn build(family: FamilyArg, params: &[usize]) -> Result<TiltingCollection, Failure> {
    let usage = |want: &str| {
        Failure::Usage(format!(
            "expected {want}, got {} parameter(s)",
            params.len()
        ))
    };
    Ok(match (family, params) {
        (FamilyArg::Sb, &[n]) => build_sb(n)?,
        (FamilyArg::Sb, _) => return Err(usage("`sb N`")),
        (FamilyArg::Gsb, &[n, r]) => build_gsb(n, r)?,
        (FamilyArg::Gsb, _) => return Err(usage("`gsb N R`")),
        (FamilyArg::Inv, &[n]) => build_inv(n)?,
        (FamilyArg::Inv, _) => return Err(usage("`inv N`")),
    })
}

fn run_bott(
    ty: TypeArg,
    rank: usize,
    parabolic: Option<Vec<usize>>,
    json: bool,
    coords: Vec<i64>,
) -> Result<(), Failure> {
    let datum = match ty {
        TypeArg::A => RootDatum::type_a(rank)?,
        TypeArg::D => RootDatum::type_d(rank)?,
    };
    let parabolic = match parabolic {
        Some(marked) => Parabolic::new(rank, marked)?,
        None => Parabolic::borel(rank),
    };
    let report = bott_report(&datum, &parabolic, &Weight::new(coords))?;
    if json {
        for w in &report.warnings {
            eprintln!("warning: {w}");
        }
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", render_bott_text(&report));
    }
    Ok(())
}

fn run_collection(
    sub: &str,
    args: CollectionArgs,
    render: fn(&CollectionReport) -> String,
) -> Result<(), Failure> {
    if args.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let c = build(args.family, &args.params)?;
    let start = Instant::now();
    let report = collection_report(sub, &c, args.jobs)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", render(&report));
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    if report.is_tilting() {
        Ok(())
    } else {
        let witness = report
            .failures
            .first()
            .map(|f| f.to_string())
            .unwrap_or_default();
        Err(Failure::Math(format!(
            "collection is not tilting: {witness}"
        )))
    }
}

fn run_selftest(quick: bool) -> Result<(), Failure> {
    let mut suite = Suite::new(quick);
    let start = Instant::now();
    let mut first_failure = None;
    for id in Suite::ids() {
        let outcome = suite.run(id);
        println!("{outcome}");
        if !outcome.passed && first_failure.is_none() {
            first_failure = Some(format!("criterion {} ({})", outcome.id, outcome.name));
        }
    }
    println!("total {:.3}s", start.elapsed().as_secs_f64());
    match first_failure {
        None => Ok(()),
        Some(name) => Err(Failure::Math(format!("{name} failed"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bott {
            r#type,
            rank,
            parabolic,
            json,
            coords,
        } => run_bott(r#type, rank, parabolic, json, coords),
        Command::Verify(args) => run_collection("verify", args, render_verify_text),
        Command::Endo(args) => run_collection("endo", args, render_endo_text),
        Command::Ktheory(args) => run_collection("ktheory", args, render_ktheory_text),
        Command::Selftest { quick } => run_selftest(quick),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
