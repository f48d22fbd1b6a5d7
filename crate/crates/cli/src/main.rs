//! `ffrec`: command-line front-end for ffrec-core.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse or usage error, 3 domain
//! error (failed hypothesis, precondition, degenerate input), 4 a checked
//! inequality came out false.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ffrec_core::config::{InstanceConfig, RecurrenceConfig, SubspaceConfig, UnitEquationConfig};
use ffrec_core::effective::{EffectiveConstants, Theorem, TheoremInstance};
use ffrec_core::expr;
use ffrec_core::multindep::{multiplicatively_independent, Independence};
use ffrec_core::par::Execution;
use ffrec_core::places::{height, valuation};
use ffrec_core::polyalg::factor;
use ffrec_core::verify::{self, InequalityReport};
use ffrec_core::{Error, Place};

#[derive(Parser)]
#[command(name = "ffrec", version, about = "Valuations, heights and recurrence scans over Q(x)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factor a polynomial over Q.
    Factor { expr: String },
    /// Valuation of an expression at a place.
    Val {
        /// `inf` or an irreducible polynomial.
        #[arg(long)]
        place: String,
        expr: String,
    },
    /// Height of an expression.
    Height { expr: String },
    /// Multiplicative independence of two expressions modulo constants.
    Indep { gamma: String, delta: String },
    /// Evaluate a recurrence at an index.
    Eval {
        recurrence: PathBuf,
        n: u64,
        /// Also print the π-form.
        #[arg(long)]
        pi: bool,
    },
    /// Growth profile μ(Gₙ) − n·min μ(αᵢ) for n = 1..=n_max.
    Growth {
        recurrence: PathBuf,
        #[arg(long, default_value = "inf")]
        place: String,
        #[arg(long, default_value_t = 50)]
        n_max: u64,
    },
    /// Effective constants of an instance as JSON.
    Constants { instance: PathBuf },
    /// Scan the valuation gap over the instance grid.
    Scan(ScanArgs),
    /// Check one of the unit-equation inequalities.
    Check(CheckArgs),
}

#[derive(Args)]
struct ScanArgs {
    instance: PathBuf,
    #[arg(long, default_value = "1", value_parser = ["1", "2"])]
    theorem: String,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    out: OutFormat,
    /// Directory for the report files.
    #[arg(long, default_value = ".")]
    dir: PathBuf,
    /// Override the grid from the instance file.
    #[arg(long, num_args = 2, value_names = ["N_MAX", "M_MAX"])]
    grid: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CheckArgs {
    /// Unit-equation height bound; file with `units`, optional `S`, `genus`.
    #[arg(long, value_name = "FILE")]
    bm: Option<PathBuf>,
    /// Subspace valuation bound; file with `phis`, `r`, `S`, `genus`.
    #[arg(long, value_name = "FILE")]
    zannier: Option<PathBuf>,
}

enum Failure {
    Io(String),
    /// Expression parse error with the source it came from, if any.
    Core(Error, Option<String>),
    InequalityFails(InequalityReport),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e, None)
    }
}

fn with_source(src: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::Core(e, Some(src.to_string()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn load_instance(path: &Path) -> Result<(InstanceConfig, TheoremInstance), Failure> {
    let cfg = InstanceConfig::from_json(&read(path)?)?;
    let inst = cfg.build()?;
    Ok((cfg, inst))
}

fn cmd_factor(src: &str) -> Result<(), Failure> {
    let p = expr::parse_poly(src).map_err(with_source(src))?;
    let f = factor(&p)?;
    let mut parts: Vec<String> = Vec::new();
    if !num_is_one(&f.unit) || f.factors.is_empty() {
        parts.push(f.unit.to_string());
    }
    for (q, e) in &f.factors {
        parts.push(if *e == 1 { format!("({q})") } else { format!("({q})^{e}") });
    }
    println!("{}", parts.join("*"));
    Ok(())
}

fn num_is_one(r: &ffrec_core::Rational) -> bool {
    *r == ffrec_core::polyalg::int(1)
}

fn cmd_val(place: &str, src: &str) -> Result<(), Failure> {
    let p = Place::parse(place).map_err(with_source(place))?;
    let f = expr::parse(src).map_err(with_source(src))?;
    println!("{}", valuation(&p, &f));
    Ok(())
}

fn cmd_height(src: &str) -> Result<(), Failure> {
    let f = expr::parse(src).map_err(with_source(src))?;
    println!("{}", height(&f));
    Ok(())
}

fn cmd_indep(g: &str, d: &str) -> Result<(), Failure> {
    let gamma = expr::parse(g).map_err(with_source(g))?;
    let delta = expr::parse(d).map_err(with_source(d))?;
    match multiplicatively_independent(&gamma, &delta)? {
        Independence::Independent => println!("independent"),
        Independence::Dependent(rel) => println!("dependent r={} s={}", rel.r, rel.s),
    }
    Ok(())
}

fn cmd_eval(path: &Path, n: u64, pi: bool) -> Result<(), Failure> {
    let rec = RecurrenceConfig::from_json(&read(path)?)?.build()?;
    println!("{}", rec.evaluate(n));
    if pi {
        print!("{}", rec.pi_rewrite());
    }
    Ok(())
}

fn cmd_growth(path: &Path, place: &str, n_max: u64) -> Result<(), Failure> {
    let rec = RecurrenceConfig::from_json(&read(path)?)?.build()?;
    let mu = Place::parse(place).map_err(with_source(place))?;
    let profile = rec.growth_profile(&mu, n_max, Execution::default())?;
    println!("n,gap");
    for (n, gap) in &profile.entries {
        println!("{n},{gap}");
    }
    let show = |v: Option<i64>| v.map_or("none".to_string(), |v| v.to_string());
    println!(
        "# C-={} C+={} (empirical over 1..={n_max}) zeros={:?}",
        show(profile.c_minus),
        show(profile.c_plus),
        profile.zeros
    );
    Ok(())
}

fn cmd_constants(path: &Path) -> Result<(), Failure> {
    let (_, inst) = load_instance(path)?;
    let c = EffectiveConstants::compute(&inst)?;
    println!("{}", serde_json::to_string_pretty(&c.to_json()).expect("json"));
    Ok(())
}

fn cmd_scan(args: &ScanArgs) -> Result<(), Failure> {
    let (cfg, inst) = load_instance(&args.instance)?;
    let theorem = if args.theorem == "2" { Theorem::Two } else { Theorem::One };
    let (n_max, m_max) = match &args.grid {
        Some(g) => (g[0], g[1]),
        None => cfg.grid,
    };
    println!("hypotheses:");
    for h in inst.hypotheses(theorem) {
        println!("  {h}");
    }
    let report = match theorem {
        Theorem::One => verify::scan_theorem1(&inst, n_max, m_max)?,
        Theorem::Two => verify::scan_theorem2(&inst, n_max, m_max)?,
    };
    let constants = EffectiveConstants::compute(&inst)?;
    println!("S = {}", constants.s);
    println!("C_aux = {}", constants.c_aux);
    println!("case3 = {}", constants.case3);
    println!("case4 = {}", constants.case4);
    match &constants.case5.const_bound {
        Some(b) => println!("case5_const = {b}"),
        None => println!("case5_const = none"),
    }
    for (j, l) in &constants.case5.lprime {
        println!("case5_Lprime[{j}] = {l}");
    }
    println!("c0_initial = {}", constants.c0_initial);
    let emp = report.empirical_c.map_or("none".to_string(), |c| c.to_string());
    println!(
        "empirical_C = {emp} (empirical, {}x{} grid, {} cells)",
        n_max,
        m_max,
        report.cells.len()
    );
    println!("zeros = {} anomalies = {}", report.zeros.len(), report.anomalies.len());
    if !report.lower_bound_violations.is_empty() || !report.strict_triangle_violations.is_empty() {
        println!(
            "WARNING: valuation law violations: lower={:?} strict={:?}",
            report.lower_bound_violations, report.strict_triangle_violations
        );
    }
    fs::create_dir_all(&args.dir).map_err(|e| Failure::Io(format!("{}: {e}", args.dir.display())))?;
    let constants_json = serde_json::to_string_pretty(&constants.to_json()).expect("json") + "\n";
    match args.out {
        OutFormat::Csv => {
            write(&args.dir.join("scan.csv"), &report.to_csv())?;
            write(&args.dir.join("constants.json"), &constants_json)?;
        }
        OutFormat::Json => {
            let summary = report.summary_json(Some(&constants));
            write(
                &args.dir.join("scan.json"),
                &(serde_json::to_string_pretty(&summary).expect("json") + "\n"),
            )?;
        }
    }
    Ok(())
}

fn cmd_check(args: &CheckArgs) -> Result<(), Failure> {
    let report = if let Some(path) = &args.bm {
        let cfg = UnitEquationConfig::from_json(&read(path)?)?;
        let units = cfg.units()?;
        let s = cfg.places()?;
        verify::check_brownawell_masser(&units, s.as_ref(), cfg.genus)?
    } else {
        let path = args.zannier.as_ref().expect("clap enforces one of the flags");
        let cfg = SubspaceConfig::from_json(&read(path)?)?;
        verify::check_zannier(&cfg.phis()?, cfg.r, &cfg.places()?, cfg.genus)?
    };
    println!("{report}");
    if report.holds {
        Ok(())
    } else {
        Err(Failure::InequalityFails(report))
    }
}

fn configure_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("FFREC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Ignore the error if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match &cli.cmd {
        Cmd::Factor { expr } => cmd_factor(expr),
        Cmd::Val { place, expr } => cmd_val(place, expr),
        Cmd::Height { expr } => cmd_height(expr),
        Cmd::Indep { gamma, delta } => cmd_indep(gamma, delta),
        Cmd::Eval { recurrence, n, pi } => cmd_eval(recurrence, *n, *pi),
        Cmd::Growth { recurrence, place, n_max } => cmd_growth(recurrence, place, *n_max),
        Cmd::Constants { instance } => cmd_constants(instance),
        Cmd::Scan(args) => cmd_scan(args),
        Cmd::Check(args) => cmd_check(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e, source)) => {
            let code = match e {
                Error::Parse(_) | Error::Config(_) => 2,
                _ => 3,
            };
            match (&e, source) {
                (Error::Parse(pe), Some(src)) => eprintln!("error: {}", pe.render(&src)),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
        Err(Failure::InequalityFails(r)) => {
            eprintln!("error: inequality fails ({r})");
            ExitCode::from(4)
        }
    }
}
