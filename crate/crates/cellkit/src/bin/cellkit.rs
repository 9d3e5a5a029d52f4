use cellkit::hecke::AlgebraKind;
use cellkit::report::{
    cmd_cells, cmd_conjecture, cmd_enumerate, cmd_oracle_dump, cmd_verify, effective_max_d,
    Method, Report,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    J,
    I,
    ITilde,
}

impl From<KindArg> for AlgebraKind {
    fn from(k: KindArg) -> AlgebraKind {
        match k {
            KindArg::J => AlgebraKind::J,
            KindArg::I => AlgebraKind::I,
            KindArg::ITilde => AlgebraKind::ITilde,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Combinatorial,
    Oracle,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Combinatorial => Method::Combinatorial,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

/// Exact cell classification for coset matrix families and their Hecke oracles.
#[derive(Parser)]
#[command(name = "cellkit", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; csv applies to classification tables only
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Raise or lower the oracle rank cap for this invocation (at most 4)
    #[arg(long, global = true)]
    max_rank_override: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the coset matrix family with representatives, lengths and shapes
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = KindArg::J)]
        kind: KindArg,
    },
    /// Classify two-sided cells, by symbol combinatorics and/or the oracle
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = KindArg::J)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Recompute a worked example and check every printed value
    Verify {
        /// Example id (ex-3.11, ex-3.14, ex-3.18, ex-5.9, ex-6.14, all)
        id: String,
    },
    /// Scan a conjectural identity and report the evidence
    Conjecture {
        /// Conjecture id (c3.19, c5.10, c6.13)
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: usize,
    },
    /// Export the structure-constant tables the oracle computes
    OracleDump {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = KindArg::J)]
        kind: KindArg,
    },
}

fn run(cli: &Cli) -> cellkit::Result<Report> {
    let max_d = effective_max_d(cli.max_rank_override)?;
    match &cli.command {
        Command::Enumerate { n, d, kind } => cmd_enumerate(*n, *d, (*kind).into()),
        Command::Cells { n, d, kind, method } => {
            cmd_cells(*n, *d, (*kind).into(), (*method).into(), max_d)
        }
        Command::Verify { id } => cmd_verify(id),
        Command::Conjecture { id, n, d } => cmd_conjecture(id, *n, *d, max_d),
        Command::OracleDump { n, d, kind } => cmd_oracle_dump(*n, *d, (*kind).into(), max_d),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        FormatArg::Json => serde_json::to_string_pretty(&report.to_json())
            .expect("report serializes"),
        FormatArg::Csv => match report.to_csv() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    println!("{rendered}");
    eprintln!("timing: {} ms", start.elapsed().as_millis());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
