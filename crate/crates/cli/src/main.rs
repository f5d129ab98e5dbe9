mod commands;
mod parse;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use degseq::enumeration::CountConfig;
use degseq::graphicality::RegionPredicate;
use degseq::mcmc::ChainConfig;
use degseq::{DegreeSequence, Error, ExactCounter, LabeledGraph, SimpleRegion};
use serde_json::json;

use commands::{CmdResult, SweepGrid};
use parse::RawDegrees;

/// Degree sequences, fully graphic regions and switch-chain sampling.
#[derive(Debug, Parser)]
#[command(name = "degseq", version)]
struct Cli {
    /// Emit a JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Longest sequence the exact counter accepts.
    #[arg(long, global = true, env = "DEGSEQ_MAX_VERTICES", default_value_t = 16)]
    max_vertices: usize,

    /// States a single exact count may expand before giving up.
    #[arg(long, global = true, env = "DEGSEQ_NODE_BUDGET", default_value_t = 50_000_000)]
    node_budget: u64,

    #[command(subcommand)]
    command: Command,
}

fn predicate(s: &str) -> Result<RegionPredicate, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Erdős–Gallai test.
    Check {
        #[arg(value_parser = parse::degrees)]
        degrees: RawDegrees,
        /// Only test at descent positions (requires d1 < n).
        #[arg(long)]
        tv: bool,
    },
    /// Least Erdős–Gallai sequence of a simple region.
    Leg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: u64,
        #[arg(long)]
        c1: u32,
        #[arg(long)]
        c2: u32,
    },
    /// Fully graphic decision for a simple (with --sigma) or very simple region.
    Region {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: Option<u64>,
        #[arg(long)]
        c1: u32,
        #[arg(long)]
        c2: u32,
        /// jms, jms-star-k, jms-star-sigma, gs, fg or eps:P/Q.
        #[arg(long, value_parser = predicate)]
        predicate: Option<RegionPredicate>,
    },
    /// Exact number of labeled realizations.
    Count {
        #[arg(value_parser = parse::degrees)]
        degrees: RawDegrees,
    },
    /// List labeled realizations as edge lists.
    Enumerate {
        #[arg(value_parser = parse::degrees)]
        degrees: RawDegrees,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Local P-stability measure p(D).
    Pmeasure {
        #[arg(value_parser = parse::degrees)]
        degrees: RawDegrees,
    },
    /// Family sizes and the three inequalities between them.
    VerifyAppendix {
        #[arg(value_parser = parse::degrees)]
        degrees: RawDegrees,
    },
    /// Realization counts of h_m and h'_m.
    HFamily {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        m: u64,
        /// Last m of a range starting at --m.
        #[arg(long)]
        to: Option<u64>,
    },
    /// Hammer–Simeone split test.
    SplitCheck {
        #[arg(value_parser = parse::degrees)]
        degrees: RawDegrees,
    },
    /// Split witness inside a region that is not fully graphic.
    SplitWitness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c1: u32,
        #[arg(long)]
        c2: u32,
    },
    /// Compose a split graph G with a graph H.
    Tyshkevich {
        /// G as N:u-v,u-v,...
        #[arg(long, value_parser = parse::graph)]
        g: LabeledGraph,
        /// Clique vertices of G; the rest form the independent set.
        #[arg(long, value_delimiter = ',', required = true)]
        clique: Vec<usize>,
        /// H as N:u-v,u-v,...
        #[arg(long, value_parser = parse::graph)]
        h: LabeledGraph,
        /// Check that counts multiply.
        #[arg(long)]
        verify: bool,
    },
    /// Split witness composed with h_{n'-n}, and its perturbation.
    NonstabWitness {
        #[arg(long)]
        n: usize,
        #[arg(long = "n-prime")]
        n_prime: usize,
        #[arg(long)]
        c1: u32,
        #[arg(long)]
        c2: u32,
        /// Count realizations of the witness, e and the perturbed sequence.
        #[arg(long)]
        verify: bool,
    },
    /// Run the switch chain.
    Mcmc {
        #[arg(long, value_parser = parse::degrees)]
        degrees: RawDegrees,
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        burn_in: u64,
        #[arg(long, default_value_t = 0)]
        report_every: u64,
    },
    /// Classify every region in a grid.
    Sweep {
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Cells are (n, c1, c2) instead of (n, sigma, c1, c2).
        #[arg(long)]
        very_simple: bool,
        #[arg(long)]
        skip_empty: bool,
        #[arg(long, value_parser = predicate)]
        predicate: Option<RegionPredicate>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Leg { .. } => "leg",
            Command::Region { .. } => "region",
            Command::Count { .. } => "count",
            Command::Enumerate { .. } => "enumerate",
            Command::Pmeasure { .. } => "pmeasure",
            Command::VerifyAppendix { .. } => "verify-appendix",
            Command::HFamily { .. } => "h-family",
            Command::SplitCheck { .. } => "split-check",
            Command::SplitWitness { .. } => "split-witness",
            Command::Tyshkevich { .. } => "tyshkevich",
            Command::NonstabWitness { .. } => "nonstab-witness",
            Command::Mcmc { .. } => "mcmc",
            Command::Sweep { .. } => "sweep",
        }
    }
}

fn sequence(raw: &RawDegrees) -> Result<DegreeSequence, Error> {
    let (d, reordered) = raw.normalize()?;
    if reordered {
        eprintln!("note: degrees reordered to {d}");
    }
    Ok(d)
}

fn run(cli: Cli) -> CmdResult {
    let config = CountConfig { max_vertices: cli.max_vertices, node_budget: cli.node_budget, memoize: true };
    let mut counter = ExactCounter::new(config);
    match cli.command {
        Command::Check { degrees, tv } => commands::check(&sequence(&degrees)?, tv),
        Command::Leg { n, sigma, c1, c2 } => commands::leg_cmd(&SimpleRegion::new(n, sigma, c1, c2)?),
        Command::Region { n, sigma, c1, c2, predicate } => commands::region(n, sigma, c1, c2, predicate),
        Command::Count { degrees } => commands::count(&mut counter, &sequence(&degrees)?),
        Command::Enumerate { degrees, limit } => commands::enumerate(&config, &sequence(&degrees)?, limit),
        Command::Pmeasure { degrees } => commands::pmeasure(&mut counter, &sequence(&degrees)?),
        Command::VerifyAppendix { degrees } => commands::appendix(&mut counter, &sequence(&degrees)?),
        Command::HFamily { m, to } => {
            let to = to.unwrap_or(m);
            if to < m {
                return Err(Error::InvalidInput(format!("--to {to} is below --m {m}")));
            }
            commands::h_family(&mut counter, m as usize, to as usize)
        }
        Command::SplitCheck { degrees } => commands::split_check(&sequence(&degrees)?),
        Command::SplitWitness { n, c1, c2 } => commands::split_witness_cmd(n, c1, c2),
        Command::Tyshkevich { g, clique, h, verify } => commands::tyshkevich(&mut counter, g, clique, &h, verify),
        Command::NonstabWitness { n, n_prime, c1, c2, verify } => {
            commands::nonstab(&mut counter, n, n_prime, c1, c2, verify)
        }
        Command::Mcmc { degrees, steps, seed, burn_in, report_every } => {
            let cfg = ChainConfig { seed, steps, burn_in, report_every };
            commands::mcmc(&mut counter, &sequence(&degrees)?, cfg)
        }
        Command::Sweep { n_min, n_max, very_simple, skip_empty, predicate } => {
            commands::sweep(SweepGrid { n_min, n_max, very_simple, skip_empty, predicate })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    let name = cli.command.name();
    match run(cli) {
        Ok(out) => {
            if json {
                let envelope = json!({
                    "command": name,
                    "inputs": out.inputs,
                    "result": out.result,
                    "version": env!("CARGO_PKG_VERSION"),
                });
                println!("{}", serde_json::to_string_pretty(&envelope).expect("JSON values serialize"));
            } else {
                println!("{}", out.human);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::TooLarge(_) => 3,
                _ => 1,
            })
        }
    }
}
