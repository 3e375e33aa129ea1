//! Command-line front end: construct and export the two presentations, and
//! run the verification suites as structured reports.
//!
//! Exit codes: 0 all requested checks pass, 1 some check failed, 2 usage or
//! precondition error. Output is byte-deterministic for identical
//! invocations.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use trigonal::diagram::DiagramStyle;
use trigonal::export::{render_presentation, ExportFormat};
use trigonal::report::Report;
use trigonal::reports::{
    lattice_report, maroni_report, order_report, plucker_report, verify_report, VerifyCheck,
};
use trigonal::words::{trigonal_presentation, weierstrass_presentation};
use trigonal::DEFAULT_SEED;

#[derive(Parser)]
#[command(name = "trigonal", version, about = "exact-arithmetic checks for trigonal monodromy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    /// Chain diagram, generators t1..t{2g+2}.
    Trigonal,
    /// Ladder diagram, generators T1..T{2g+2}.
    Weierstrass,
}

#[derive(Clone, Copy, ValueEnum)]
enum PresentationFormat {
    Text,
    Gap,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a presentation of the monodromy group.
    Present {
        #[arg(long)]
        g: u64,
        #[arg(long, value_enum, default_value_t = StyleArg::Trigonal)]
        style: StyleArg,
        #[arg(long, value_enum, default_value_t = PresentationFormat::Text)]
        format: PresentationFormat,
    },
    /// Verify relators, the generator dictionary, and centrality facts.
    Verify {
        #[arg(long)]
        g: u64,
        /// Comma-separated subset of the check families.
        #[arg(long, value_delimiter = ',', value_parser = parse_check,
              default_values_t = VerifyCheck::ALL)]
        checks: Vec<VerifyCheck>,
        /// Seed for sampled q-preservation on spaces too large to sweep.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Lattice blocks, radical, and Arf type at the maximal stratum.
    Lattice {
        #[arg(long)]
        g: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Schreier-Sims group order versus the closed-form orthogonal order.
    Order {
        #[arg(long)]
        g: u64,
        /// Run outside the guarded set {1, 4, 7}.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Branch-curve characteristics and the dual curve.
    Plucker {
        #[arg(long)]
        g: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Maroni strata with splitting types and cokernel torsion.
    Maroni {
        #[arg(long)]
        g: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

fn parse_check(s: &str) -> Result<VerifyCheck, String> {
    s.parse()
}

fn emit(report: &Report, format: ReportFormat) -> ExitCode {
    match format {
        ReportFormat::Text => println!("{report}"),
        ReportFormat::Json => println!("{}", report.to_json()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> trigonal::Result<ExitCode> {
    match command {
        Command::Present { g, style, format } => {
            let (style, pres) = match style {
                StyleArg::Trigonal => (DiagramStyle::Trigonal, trigonal_presentation(g)?),
                StyleArg::Weierstrass => (DiagramStyle::Weierstrass, weierstrass_presentation(g)?),
            };
            let format = match format {
                PresentationFormat::Text => ExportFormat::Text,
                PresentationFormat::Gap => ExportFormat::Gap,
                PresentationFormat::Json => ExportFormat::Json,
            };
            print!("{}", render_presentation(&pres, style, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            g,
            checks,
            seed,
            format,
        } => Ok(emit(&verify_report(g, &checks, seed)?, format)),
        Command::Lattice { g, format } => Ok(emit(&lattice_report(g)?, format)),
        Command::Order { g, force, format } => Ok(emit(&order_report(g, force)?, format)),
        Command::Plucker { g, format } => Ok(emit(&plucker_report(g)?, format)),
        Command::Maroni { g, format } => Ok(emit(&maroni_report(g)?, format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
