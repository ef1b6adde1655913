use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use gradsym::algebra::GradedAlgebra;
use gradsym::format::{self, Certificate, FormatError};
use gradsym::invariants;
use gradsym::replicate::{self, Checkpoint, HuntParams, HuntReport, SuiteReport};
use gradsym::symmetry::{self, Mode, SymmetryError, SymmetryStatus};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gradsym",
    version,
    about = "Graded symmetry checks for finite-dimensional graded algebras"
)]
struct Cli {
    /// Human-readable output instead of canonical JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a form of the given mode exists and print a certificate.
    Check {
        spec: PathBuf,
        #[arg(long, default_value = "graded-symmetric", value_parser = parse_mode)]
        mode: Mode,
        /// Also write the certificate to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recheck a certificate against an algebra.
    Verify { spec: PathBuf, cert: PathBuf },
    /// Center, commutator spaces, support and the graded-division test.
    Invariants { spec: PathBuf },
    /// Run the replication suite.
    Replicate(ReplicateArgs),
    /// Search small crossed products for a graded division algebra that is not graded symmetric.
    Hunt(HuntArgs),
    /// Print the canonical raw form of a constructor's output.
    Emit {
        #[arg(long)]
        constructor: String,
        /// Constructor parameter as key=value, the value being JSON
        /// (bare words are read as strings).
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ReplicateArgs {
    #[arg(long)]
    all: bool,
    /// One criterion by name.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct HuntArgs {
    #[arg(long = "char")]
    characteristic: Option<u64>,
    #[arg(long, default_value_t = 8)]
    max_group: usize,
    #[arg(long, default_value_t = 3)]
    max_ext: usize,
    /// Number of units of K allowed as values of alpha.
    #[arg(long)]
    alpha_bound: Option<usize>,
    /// Most candidates examined in this run.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    /// Continue from a checkpoint file.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Write a checkpoint here when the run stops.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    Mode::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Mode::ALL.iter().map(|m| m.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Undecided(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(path: &Path) -> Result<GradedAlgebra, Failure> {
    Ok(format::parse_algebra_file(path)?)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?;
    Ok(format::parse_json(&text)?)
}

fn write_json(path: &Path, v: &Value) -> Result<(), Failure> {
    std::fs::write(path, format::canonical_string(v) + "\n")
        .map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))
}

fn print(v: &Value) {
    println!("{}", format::canonical_string(v));
}

fn symmetry_failure(e: SymmetryError) -> Failure {
    Failure::Undecided(e.to_string())
}

fn status_code(s: SymmetryStatus) -> u8 {
    match s {
        SymmetryStatus::Yes => EXIT_YES,
        _ => EXIT_NO,
    }
}

fn check(spec: &Path, mode: Mode, out: Option<&Path>, pretty: bool) -> Result<u8, Failure> {
    let a = load(spec)?;
    let v = symmetry::decide_form_existence(&a, mode).map_err(symmetry_failure)?;
    let cert = Certificate::from_verdict(&a, &v).to_json(a.field());
    if let Some(out) = out {
        write_json(out, &cert)?;
    }
    if pretty {
        println!(
            "algebra    dim {} over {}, |G| = {}",
            a.dim(),
            a.field(),
            a.group().order()
        );
        println!("mode       {}", mode);
        println!("status     {}", cert["status"].as_str().unwrap_or("?"));
        println!("trace dim  {}", v.trace_space_dim);
        if let Some(r) = v.refutation {
            println!("refuted by {}", r.tag());
        }
        if let Some(w) = &v.witness {
            let coords: Vec<String> = w.coords().iter().map(ToString::to_string).collect();
            println!("witness    [{}]", coords.join(", "));
        }
    } else {
        let mut out = format::verdict_to_json(&a, &v);
        out["certificate"] = cert;
        print(&out);
    }
    Ok(status_code(v.status))
}

fn verify(spec: &Path, cert: &Path, pretty: bool) -> Result<u8, Failure> {
    let a = load(spec)?;
    let c = Certificate::from_json(a.field(), &read_json(cert)?)?;
    let r = format::check_certificate(&a, &c)?;
    if pretty {
        println!(
            "hash   {}",
            if r.hash_matches { "matches" } else { "differs" }
        );
        println!("result {}", if r.passed { "pass" } else { "fail" });
        println!("detail {}", r.detail);
    } else {
        print(&json!({ "hash_matches": r.hash_matches, "passed": r.passed, "detail": r.detail }));
    }
    Ok(if r.passed { EXIT_YES } else { EXIT_NO })
}

fn invariants_cmd(spec: &Path, pretty: bool) -> Result<u8, Failure> {
    let a = load(spec)?;
    let f = a.field();
    let vecs = |s: &gradsym::linalg::Subspace| -> Vec<Value> {
        s.basis_vectors()
            .iter()
            .map(|v| json!(v.iter().map(|c| f.scalar_to_json(c)).collect::<Vec<_>>()))
            .collect()
    };
    let z = invariants::center(&a);
    let c = invariants::commutator_subspace(&a);
    let gc = invariants::graded_commutator_space(&a);
    let support: Vec<&str> = invariants::support(&a)
        .into_iter()
        .map(|g| a.group().label(g))
        .collect();
    let dv = invariants::is_graded_division(&a);
    let ae = a.component_indices(a.group().identity()).len();
    let out = json!({
        "algebra_hash": format::algebra_hash(&a),
        "dim": a.dim(),
        "identity_component_dim": ae,
        "center": { "dim": z.dim(), "basis": vecs(&z) },
        "commutator": { "dim": c.dim() },
        "graded_commutator": { "dim": gc.dim(), "basis": vecs(&gc) },
        "support": support,
        "graded_division": format::division_to_json(&a, &dv),
    });
    if pretty {
        println!("dim                    {}", a.dim());
        println!("dim A_e                {}", ae);
        println!("dim center             {}", z.dim());
        println!("dim [A,A]              {}", c.dim());
        println!("dim graded commutators {}", gc.dim());
        println!("support                {}", support.join(" "));
        println!(
            "graded division        {}",
            out["graded_division"]["status"].as_str().unwrap_or("?")
        );
    } else {
        print(&out);
    }
    Ok(EXIT_YES)
}

fn suite_code(r: &SuiteReport) -> u8 {
    if r.entries
        .iter()
        .any(|e| matches!(e.outcome, replicate::Outcome::Fail(_)))
    {
        EXIT_NO
    } else if r.all_passed() {
        EXIT_YES
    } else {
        EXIT_UNKNOWN
    }
}

fn replicate_cmd(args: &ReplicateArgs, pretty: bool) -> Result<u8, Failure> {
    let report = match &args.name {
        Some(n) => SuiteReport {
            entries: vec![replicate::run_criterion(n).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown criterion {:?}; known: {}",
                    n,
                    replicate::criterion_names().join(", ")
                ))
            })?],
        },
        None => replicate::run_full_suite(),
    };
    if pretty {
        for e in &report.entries {
            println!(
                "{:>2} {:<36} {}{}",
                e.id,
                e.name,
                e.outcome.tag().to_uppercase(),
                e.outcome
                    .detail()
                    .map(|d| format!(": {}", d))
                    .unwrap_or_default()
            );
        }
    } else {
        print(&report.to_json());
    }
    Ok(suite_code(&report))
}

fn hunt_cmd(args: &HuntArgs, pretty: bool) -> Result<u8, Failure> {
    let fail = |e: replicate::HuntError| Failure::Usage(e.to_string());
    let report: HuntReport = match &args.resume {
        Some(path) => {
            let cp = Checkpoint::from_json(&read_json(path)?).map_err(fail)?;
            replicate::resume_hunt(&cp, Some(args.budget)).map_err(fail)?
        }
        None => {
            let characteristic = args
                .characteristic
                .ok_or_else(|| Failure::Usage("--char is required unless resuming".into()))?;
            let params = HuntParams {
                characteristic,
                ext_degrees: (1..=args.max_ext).collect(),
                groups: replicate::group_catalogue(args.max_group),
                alpha_bound: args.alpha_bound,
                budget: Some(args.budget),
            };
            replicate::hunt_counterexample(&params).map_err(fail)?
        }
    };
    if let Some(path) = &args.checkpoint {
        write_json(
            path,
            &Checkpoint {
                report: report.clone(),
            }
            .to_json(),
        )?;
    }
    if pretty {
        println!(
            "candidates      {} of {}",
            report.next_index, report.total_candidates
        );
        println!("incompatible    {}", report.incompatible);
        println!("tested          {}", report.instances_tested);
        println!("graded division {}", report.division_count);
        println!("symmetric       {}", report.symmetric);
        println!("not symmetric   {}", report.non_symmetric_instances.len());
        println!(
            "no base point   {}",
            report.no_base_field_point_instances.len()
        );
        println!("mismatches      {}", report.criterion_mismatches.len());
        println!("complete        {}", report.is_complete());
    } else {
        print(&report.to_json());
    }
    Ok(
        if !report.non_symmetric_instances.is_empty() || !report.criterion_mismatches.is_empty() {
            EXIT_NO
        } else if !report.is_complete() {
            EXIT_UNKNOWN
        } else {
            EXIT_YES
        },
    )
}

fn emit(constructor: &str, params: &[String]) -> Result<u8, Failure> {
    let mut block = Map::new();
    block.insert("constructor".into(), json!(constructor));
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("parameter {:?} is not key=value", p)))?;
        let value = serde_json::from_str(v).unwrap_or_else(|_| json!(v));
        block.insert(k.to_string(), value);
    }
    let a = format::algebra_from_json(&Value::Object(block))?;
    print(&format::algebra_to_json(&a));
    Ok(EXIT_YES)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Check { spec, mode, out } => check(spec, *mode, out.as_deref(), cli.pretty),
        Command::Verify { spec, cert } => verify(spec, cert, cli.pretty),
        Command::Invariants { spec } => invariants_cmd(spec, cli.pretty),
        Command::Replicate(args) => replicate_cmd(args, cli.pretty),
        Command::Hunt(args) => hunt_cmd(args, cli.pretty),
        Command::Emit {
            constructor,
            params,
        } => emit(constructor, params),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Undecided(msg)) => {
            eprintln!("undecided: {}", msg);
            ExitCode::from(EXIT_UNKNOWN)
        }
    }
}
