use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hhsl2::report::{
    render_csv, render_csv_stream, render_json, render_summary, render_text, run_suite, run_suites,
    Suite, VerificationReport,
};
use hhsl2::{ExtEngine, Prime};

#[derive(Parser)]
#[command(
    name = "hhsl2",
    version,
    about = "Hochschild cohomology of U(sl2) in odd characteristic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate brute-force Ext dimensions against the closed forms.
    Dims(Common),
    /// Run one verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Run everything and write a full report plus summary.
    Report(Common),
}

#[derive(clap::Args)]
struct Common {
    /// An odd prime.
    #[arg(long)]
    p: u64,
    /// Largest polynomial degree examined (default 4p).
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Output file; for `report`, a directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Cocycles,
    Relations,
    Connecting,
    Span,
    Hilbert,
    All,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("hhsl2: {msg}");
            ExitCode::from(2)
        }
    }
}

fn init_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("HHSL2_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().map_err(|_| {
        Failure(format!(
            "HHSL2_THREADS must be a non-negative integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()?;
    Ok(())
}

fn setup(common: &Common) -> Result<(ExtEngine, u32), Failure> {
    let p = Prime::new(common.p)?;
    let max_degree = common.max_degree.unwrap_or(4 * p.get());
    if max_degree < p.get() {
        eprintln!(
            "hhsl2: warning: max-degree {max_degree} < p = {}; most phenomena start at degree p-1",
            p.get()
        );
    }
    init_threads()?;
    Ok((ExtEngine::new(p), max_degree))
}

fn render(report: &VerificationReport, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => render_text(report),
        Format::Json => render_json(report),
        Format::Csv => render_csv_stream(report)?,
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Dims(common) => {
            let (engine, max_degree) = setup(&common)?;
            let tables = run_suite(&engine, Suite::Dims, max_degree)?;
            let report = VerificationReport::new("dims", engine.prime(), max_degree, tables);
            emit(&render(&report, common.format)?, common.out.as_deref())?;
            Ok(report.all_pass())
        }
        Command::Verify { common, suite } => {
            let (engine, max_degree) = setup(&common)?;
            let suites: &[Suite] = match suite {
                SuiteArg::Cocycles => &[Suite::Cocycles],
                SuiteArg::Relations => &[Suite::Relations],
                SuiteArg::Connecting => &[Suite::Connecting],
                SuiteArg::Span => &[Suite::Span],
                SuiteArg::Hilbert => &[Suite::Hilbert],
                SuiteArg::All => &Suite::VERIFY_ALL,
            };
            let name = suite
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            let tables = run_suites(&engine, suites, max_degree)?;
            let report = VerificationReport::new(
                format!("verify {name}"),
                engine.prime(),
                max_degree,
                tables,
            );
            emit(&render(&report, common.format)?, common.out.as_deref())?;
            Ok(report.all_pass())
        }
        Command::Report(common) => {
            let (engine, max_degree) = setup(&common)?;
            let tables = run_suites(&engine, &Suite::REPORT, max_degree)?;
            let report = VerificationReport::new("report", engine.prime(), max_degree, tables);
            write_report(&report, common.format, common.out.as_deref())?;
            Ok(report.all_pass())
        }
    }
}

fn write_report(
    report: &VerificationReport,
    format: Format,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let summary = render_summary(report);
    let Some(dir) = out else {
        print!("{}", render(report, format)?);
        if matches!(format, Format::Text) {
            print!("\n{summary}");
        } else {
            eprint!("{summary}");
        }
        return Ok(());
    };
    fs::create_dir_all(dir)
        .map_err(|e| Failure(format!("cannot create {}: {e}", dir.display())))?;
    let files: Vec<(String, String)> = match format {
        Format::Text => vec![("report.txt".into(), render_text(report))],
        Format::Json => vec![("report.json".into(), render_json(report))],
        Format::Csv => render_csv(report)?
            .into_iter()
            .map(|(name, body)| (format!("{name}.csv"), body))
            .collect(),
    };
    for (name, body) in files
        .iter()
        .chain(std::iter::once(&("summary.txt".to_string(), summary)))
    {
        emit(body, Some(&dir.join(name)))?;
    }
    Ok(())
}
