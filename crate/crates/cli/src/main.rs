mod args;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use xlag::lattice::{run_lattice, Check, LatticeConfig, LatticeSummary};
use xlag::report::{build_report, Exact};
use xlag::spectral::{build_potential, solve_eop, wavefunction};
use xlag::{certify, compute_g, Error};

use args::{parse_levels, SpecArgs};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "xlag",
    version,
    about = "Rationally extended isotonic oscillators and exceptional Laguerre polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one extension and write its full report
    Extend {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 3)]
        nu_max: u32,
        /// Also run the quadrature and finite-difference checks
        #[arg(long)]
        numeric: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the exact invariants over the lattice of admissible extensions
    Verify {
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        /// Number of alpha' values per index set
        #[arg(long, default_value_t = 4)]
        alpha_grid: usize,
        #[arg(long)]
        parallel: bool,
        #[arg(long, hide = true)]
        self_test_negate_sign: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate V2(x) and bound states as CSV
    Sample {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0.05)]
        x_min: f64,
        #[arg(long, default_value_t = 8.0)]
        x_max: f64,
        #[arg(long, default_value_t = 1000)]
        points: usize,
        /// Levels to tabulate, e.g. "0,1,2"
        #[arg(long, default_value = "")]
        wavefunctions: String,
        /// Sample the potential even when g vanishes on the positive axis
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exceptional polynomial coefficients only
    Eop {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 3)]
        nu_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SpecInvalid(_) => EXIT_BAD_INPUT,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_BAD_INPUT,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: message.into(),
    }
}

fn open_output(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json(out: &Option<PathBuf>, value: &impl serde::Serialize) -> Result<(), Failure> {
    let mut w = open_output(out)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(io::Error::from)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn configure_threads() {
    if let Some(n) = std::env::var("XLAG_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

fn extend(
    spec: &SpecArgs,
    nu_max: u32,
    numeric: bool,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let doc = build_report(&spec.to_spec()?, nu_max, numeric)?;
    write_json(out, &doc)?;
    if doc.inconsistent() {
        return Err(Failure {
            code: EXIT_INTERNAL,
            message: "closed forms or oracles disagree with the computed g".into(),
        });
    }
    Ok(())
}

fn verify(config: LatticeConfig, parallel: bool, out: &Option<PathBuf>) -> Result<(), Failure> {
    let summary = LatticeSummary::from_outcomes(&run_lattice(&config, parallel));
    let mut w = open_output(out)?;
    writeln!(w, "{:<18} {:>8} {:>8}", "check", "passed", "failed")?;
    for check in Check::ALL {
        let t = summary.tally(check);
        writeln!(
            w,
            "{:<18} {:>8} {:>8}",
            check.to_string(),
            t.passed,
            t.failed
        )?;
    }
    writeln!(
        w,
        "cases: {} passed of {}",
        summary.cases_passed, summary.cases
    )?;
    w.flush()?;
    match &summary.first_failure {
        None => Ok(()),
        Some((spec, failures)) => {
            let detail: Vec<String> = failures.iter().map(|(c, e)| format!("{c}: {e}")).collect();
            Err(Failure {
                code: EXIT_VERIFY_FAILED,
                message: format!("first failure: {spec}\n  {}", detail.join("\n  ")),
            })
        }
    }
}

fn sample(
    spec_args: &SpecArgs,
    x_min: f64,
    x_max: f64,
    points: usize,
    levels: &str,
    force: bool,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    if !(x_min > 0.0 && x_max > x_min && x_max.is_finite()) || points < 2 {
        return Err(bad_input(
            "sampling needs 0 < x-min < x-max and at least 2 points",
        ));
    }
    let levels = parse_levels(levels)?;
    let spec = spec_args.to_spec()?;
    let mut report = compute_g(&spec)?;
    let certificate = certify(&report)?;
    report.regular = Some(certificate.regular);
    if !certificate.regular {
        if !force {
            return Err(bad_input(format!(
                "g has {} root(s) on the positive axis; use --force to sample the potential anyway",
                certificate.root_count_positive_axis
            )));
        }
        if !levels.is_empty() {
            return Err(bad_input("bound states exist only for regular extensions"));
        }
    }
    let potential = build_potential(&spec, &report);
    let psis = match levels.iter().max() {
        Some(&top) => {
            let family = solve_eop(&spec, &report, top)?;
            levels
                .iter()
                .map(|&nu| wavefunction(&spec, &family, nu))
                .collect::<xlag::Result<Vec<_>>>()?
        }
        None => Vec::new(),
    };

    let mut w = csv::Writer::from_writer(open_output(out)?);
    let mut header = vec!["x".to_string(), "V2".to_string()];
    header.extend(levels.iter().map(|nu| format!("psi_{nu}")));
    w.write_record(&header).map_err(io::Error::from)?;
    let step = (x_max - x_min) / (points - 1) as f64;
    for i in 0..points {
        let x = if i + 1 == points {
            x_max
        } else {
            x_min + i as f64 * step
        };
        let mut row = vec![format!("{x:.16e}"), format!("{:.16e}", potential.eval(x))];
        row.extend(psis.iter().map(|p| format!("{:.16e}", p.eval(x))));
        w.write_record(&row).map_err(io::Error::from)?;
    }
    w.flush()?;
    Ok(())
}

fn eop(spec_args: &SpecArgs, nu_max: u32, out: &Option<PathBuf>) -> Result<(), Failure> {
    let spec = spec_args.to_spec()?;
    let report = compute_g(&spec)?;
    let certificate = certify(&report)?;
    if !certificate.regular {
        return Err(bad_input(
            "exceptional polynomials are reported only for regular extensions",
        ));
    }
    let family = solve_eop(&spec, &report, nu_max)?;
    let polys: Vec<_> = family
        .polys
        .iter()
        .enumerate()
        .map(|(nu, y)| {
            json!({
                "nu": nu,
                "degree": y.degree(),
                "coefficients": y.coeffs().iter().map(Exact::from).collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({
        "schema": xlag::report::SCHEMA_VERSION,
        "alpha": Exact::from(spec.alpha()),
        "mu": family.mu,
        "g": report.g.coeffs().iter().map(Exact::from).collect::<Vec<_>>(),
        "polys": polys,
    });
    write_json(out, &doc)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Extend {
            spec,
            nu_max,
            numeric,
            out,
            format: Format::Json,
        } => extend(&spec, nu_max, numeric, &out),
        Command::Verify {
            max_k,
            max_m,
            alpha_grid,
            parallel,
            self_test_negate_sign,
            out,
        } => {
            let config = LatticeConfig {
                max_k,
                max_m,
                alpha_grid,
                negate_sign: self_test_negate_sign,
                ..LatticeConfig::default()
            };
            verify(config, parallel, &out)
        }
        Command::Sample {
            spec,
            x_min,
            x_max,
            points,
            wavefunctions,
            force,
            out,
        } => sample(&spec, x_min, x_max, points, &wavefunctions, force, &out),
        Command::Eop {
            spec,
            nu_max,
            out,
            format: Format::Json,
        } => eop(&spec, nu_max, &out),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_BAD_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("xlag: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
