use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rpl::cores::{CoreFilter, OrbitVariant};
use rpl::stats::Statistic;
use rpl::tables::{self, Format};
use rpl::verify::{self, Mutation, Overrides};

#[derive(Parser)]
#[command(
    name = "rpl",
    version,
    about = "Partition statistics, tables and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    Plain,
    Srank,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks ("all" for the whole catalog).
    Verify {
        names: Vec<String>,
        /// List the catalog instead of running it.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, env = "RPL_DEFAULT_ORDER")]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Include elapsed times in the report.
        #[arg(long)]
        timings: bool,
        /// Run against a deliberately broken stcrank.
        #[arg(long, hide = true)]
        mutation: Option<Mutation>,
    },
    /// Grid of the partitions of n by two statistics.
    Classify {
        #[arg(long, default_value_t = 9)]
        n: u32,
        #[arg(long, default_value = "srank")]
        row_stat: Statistic,
        #[arg(long, default_value_t = 4)]
        row_mod: u32,
        #[arg(long, default_value = "stcrank")]
        col_stat: Statistic,
        #[arg(long, default_value_t = 5)]
        col_mod: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Orbits of the partitions of n (n = 4 mod 5), columns by 5-core crank.
    Orbits {
        #[arg(long, default_value_t = 9)]
        n: u32,
        #[arg(long, value_enum, default_value = "srank")]
        operator: Operator,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// One record per partition of n.
    Stats {
        #[arg(long)]
        n: u32,
        /// Comma-separated: rank, crank, srank, stcrank, c5core.
        #[arg(long, value_delimiter = ',', default_value = "srank,stcrank")]
        stats: Vec<Statistic>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// The t-cores of n, optionally restricted by 5-core crank or srank class.
    Cores {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 5)]
        t: u32,
        #[arg(long)]
        crank: Option<u32>,
        #[arg(long)]
        srank: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(s.as_bytes());
}

fn run(cli: Cli) -> rpl::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            names,
            list,
            max_n,
            order,
            format,
            jobs,
            timings,
            mutation,
        } => {
            let checks = verify::select(&names)?;
            if list {
                let mut out = String::new();
                for c in &checks {
                    out.push_str(&format!("{:<24} {}\n", c.name, c.statement));
                }
                emit(&out);
                return Ok(ExitCode::SUCCESS);
            }
            let overrides = Overrides {
                max_n,
                order,
                mutation,
            };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                pool = pool.num_threads(j.max(1));
            }
            let pool = pool.build().expect("thread pool");
            let reports = pool.install(|| verify::run_checks(&checks, &overrides))?;
            emit(&verify::render_reports(&reports, format.into(), timings));
            Ok(if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Classify {
            n,
            row_stat,
            row_mod,
            col_stat,
            col_mod,
            format,
        } => {
            let t = tables::classify(n, row_stat, row_mod, col_stat, col_mod)?;
            emit(&t.render(format.into()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbits {
            n,
            operator,
            format,
        } => {
            let variant = match operator {
                Operator::Plain => OrbitVariant::Plain,
                Operator::Srank => OrbitVariant::SrankPreserving,
            };
            emit(&tables::orbit_table(n, variant)?.render(format.into()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { n, stats, format } => {
            emit(&tables::stat_table(n, &stats)?.render(format.into()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cores {
            n,
            t,
            crank,
            srank,
            format,
        } => {
            let filter = CoreFilter { crank, srank };
            emit(&tables::core_table(n, t, filter)?.render(format.into()));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
