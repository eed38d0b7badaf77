use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use goodsuff::bench::{self, BenchConfig};
use goodsuff::matcher::BoyerMoore;
use goodsuff::render::render_tables;
use goodsuff::verify::{self, VerifyConfig};
use goodsuff::{Algorithm, Error, Pattern};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

/// Good-suffix table laboratory: inspect, verify, search and benchmark.
#[derive(Parser, Debug)]
#[command(name = "goodsuff", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the tables of a pattern.
    Tables {
        pattern: String,
        /// bf, cl, ft1, ft2 or ft3.
        #[arg(long, default_value = "cl")]
        algo: String,
        /// Also print the suff row.
        #[arg(long = "suff")]
        show_suff: bool,
    },
    /// Check cl, ft1, ft2 and ft3 against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        #[arg(long, default_value_t = 14)]
        m_max: usize,
        /// Random patterns for lengths too large to enumerate.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Verify a deliberately broken ft1 instead.
        #[arg(long, hide = true)]
        mutant: bool,
    },
    /// Print the offsets of every occurrence of a pattern in a file.
    Search {
        pattern: String,
        path: PathBuf,
        #[arg(long, default_value = "cl")]
        backend: String,
    },
    /// Time table construction and write a CSV.
    Bench {
        /// Alphabet sizes, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2,4,20,70")]
        sigmas: Vec<usize>,
        /// Pattern lengths, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2,4,8,16,32,64,128,256,512,1024")]
        lengths: Vec<usize>,
        /// Distinct random patterns per cell.
        #[arg(long, default_value_t = 100)]
        strings: usize,
        /// Timed constructions per pattern.
        #[arg(long, default_value_t = 100)]
        reps: usize,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "bf,cl,ft1,ft2,ft3")]
        algos: Vec<String>,
        #[arg(long, default_value = "bench.csv")]
        out: PathBuf,
        /// Allow bf on patterns longer than 4096.
        #[arg(long)]
        allow_slow: bool,
    },
}

fn parse_algo(name: &str) -> Result<Algorithm, ExitCode> {
    name.parse().map_err(|e: Error| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn parse_pattern(raw: &str) -> Result<Pattern, ExitCode> {
    Pattern::new(raw.as_bytes()).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn report(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::Io { .. } => ExitCode::from(EXIT_IO),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Tables {
            pattern,
            algo,
            show_suff,
        } => {
            let algo = parse_algo(&algo)?;
            let x = parse_pattern(&pattern)?;
            print!("{}", render_tables(&x, algo, show_suff));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            sigma,
            m_max,
            samples,
            seed,
            mutant,
        } => {
            let cfg = VerifyConfig {
                sigma,
                m_max,
                samples,
                seed,
            };
            let candidates = if mutant {
                vec![verify::mutant_candidate()]
            } else {
                verify::standard_candidates()
            };
            let rep = verify::verify(&cfg, &candidates).map_err(report)?;
            println!("{rep}");
            Ok(if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
        Command::Search {
            pattern,
            path,
            backend,
        } => {
            let backend = parse_algo(&backend)?;
            let x = parse_pattern(&pattern)?;
            let text = std::fs::read(&path).map_err(|e| report(Error::Io { path, source: e }))?;
            let hits = BoyerMoore::new(x, backend).find_all(&text);
            let mut out = String::new();
            for p in hits.iter() {
                out.push_str(&p.to_string());
                out.push('\n');
            }
            print!("{out}");
            println!("total: {}", hits.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            sigmas,
            lengths,
            strings,
            reps,
            seed,
            algos,
            out,
            allow_slow,
        } => {
            let algos = algos
                .iter()
                .map(|a| parse_algo(a))
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = BenchConfig {
                sigmas,
                lengths,
                strings_per_cell: strings,
                reps,
                seed,
                algos,
                out: Some(out.clone()),
                allow_slow,
            };
            let records = bench::run_benchmark(&cfg).map_err(report)?;
            for r in &records {
                eprintln!(
                    "sigma={:<3} m={:<5} {:<3} {:>14.1} ns/call",
                    r.sigma, r.m, r.algo, r.ns_per_call
                );
            }
            eprintln!("wrote {} rows to {}", records.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(|code| code)
}
