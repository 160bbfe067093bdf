use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use rankcomp::bench::{run_suite, to_csv, to_markdown, BenchConfig};
use rankcomp::complement::{complement, construction_stats, Method};
use rankcomp::nba::{membership, parse_nba, random_nba, serialize_nba, Nba, UpWord};
use rankcomp::ranking::{count_maximal, count_tight};
use rankcomp::rundag::{build_quotient, compute_ranks, eventual_profile, quotient_to_dot, RunDagError};
use rankcomp::verify::{verify_instance, WordSuite};

#[derive(Parser)]
#[command(name = "rankcomp", version, about = "Rank-based complementation of Büchi automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complement an automaton.
    Complement {
        #[arg(long, default_value = "reduced")]
        method: Method,
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Write one `index label` line per state.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Print a stats line.
        #[arg(long)]
        stats: bool,
    },
    /// Check all constructions against the oracles on one automaton.
    Verify {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        /// Comma-separated methods.
        #[arg(long, default_value = "kv,tight,reduced", value_delimiter = ',')]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 3)]
        max_stem: usize,
        #[arg(long, default_value_t = 4)]
        max_period: usize,
        /// Write the failures as JSON lines.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide membership of an ultimately periodic word, e.g. "a(b)".
    Member {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Show the run DAG quotient of a word with vertex ranks.
    Rankdag {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Number of tight level rankings over N states.
    CountTight { n: usize },
    /// Number of maximal rankings over M non-accepting states.
    CountMaximal { m: usize },
    /// Generate a random automaton.
    Gen {
        /// N K D FA SEED
        #[arg(long, num_args = 5, value_names = ["N", "K", "D", "FA", "SEED"], required = true)]
        random: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print size statistics of an automaton.
    Stats {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
    },
    /// Run a size benchmark sweep.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the aggregated markdown table.
        #[arg(long)]
        markdown: Option<PathBuf>,
    },
}

fn read_nba(path: &Path) -> Result<Nba> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_nba(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn parse_word(a: &Nba, text: &str) -> Result<UpWord> {
    UpWord::parse(text, a.alphabet()).map_err(|e| anyhow!("bad word `{text}`: {e}"))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Complement {
            method,
            input,
            output,
            labels,
            stats,
        } => {
            let a = read_nba(&input)?;
            let c = complement(&a, method)?;
            write(&output, &serialize_nba(&c.automaton))?;
            if let Some(path) = labels {
                write(&path, &c.labels_text())?;
            }
            if stats {
                println!("{}", construction_stats(&c));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            methods,
            max_stem,
            max_period,
            report,
        } => {
            if max_period == 0 {
                return Err(anyhow!("--max-period must be at least 1"));
            }
            let a = read_nba(&input)?;
            let suite = WordSuite::exhaustive(max_stem, max_period);
            let r = verify_instance(&a, &methods, &suite, &Default::default());
            print!("{}", r.to_text());
            if let Some(path) = report {
                write(&path, &r.to_json_lines())?;
            }
            Ok(if r.passes() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Member { input, word } => {
            let a = read_nba(&input)?;
            let w = parse_word(&a, &word)?;
            if membership(&a, &w) {
                println!("accepted");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("rejected");
                Ok(ExitCode::from(1))
            }
        }
        Command::Rankdag { input, word, dot } => {
            let a = read_nba(&input)?;
            let w = parse_word(&a, &word)?;
            let g = build_quotient(&a, &w)?;
            let ranks = compute_ranks(&g, a.num_states())?;
            let show = |levels: &[rankcomp::StateSet], offset: usize, kind: &str| {
                for (j, s) in levels.iter().enumerate() {
                    let lv = offset + j;
                    let cells: Vec<String> = s
                        .iter()
                        .map(|q| {
                            let v = g.vertex_id(lv, q).expect("vertex of level");
                            match ranks.rank(v).value() {
                                Some(r) => format!("{q}:{r}"),
                                None => format!("{q}:inf"),
                            }
                        })
                        .collect();
                    println!("{kind} {lv}: {}", cells.join(" "));
                }
            };
            show(g.stem_levels(), 0, "stem");
            show(g.cycle_levels(), g.stem_levels().len(), "cycle");
            let rejected = !ranks.has_survivors();
            println!("verdict: {}", if rejected { "rejected" } else { "accepted" });
            match eventual_profile(&a, &w) {
                Ok(p) => println!("dag rank: {} tight: {}", p.dag_rank, p.per_cycle_level_tight),
                Err(RunDagError::ProfileUndefined) => {}
                Err(e) => return Err(e.into()),
            }
            if let Some(path) = dot {
                write(&path, &quotient_to_dot(&g, &ranks, &a))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CountTight { n } => {
            println!("{}", count_tight(n));
            Ok(ExitCode::SUCCESS)
        }
        Command::CountMaximal { m } => {
            println!("{}", count_maximal(m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { random, out } => {
            let n: usize = random[0].parse().context("N")?;
            let k: usize = random[1].parse().context("K")?;
            let d: f64 = random[2].parse().context("D")?;
            let fa: f64 = random[3].parse().context("FA")?;
            let seed: u64 = random[4].parse().context("SEED")?;
            if n == 0 || k == 0 || !(0.0..=1.0).contains(&fa) || d < 0.0 {
                return Err(anyhow!("need N >= 1, K >= 1, D >= 0 and 0 <= FA <= 1"));
            }
            let text = serialize_nba(&random_nba(n, k, d, fa, seed));
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { input } => {
            let a = read_nba(&input)?;
            println!(
                "states={} letters={} edges={} initial={} accepting={}",
                a.num_states(),
                a.num_letters(),
                a.edge_count(),
                a.initial().len(),
                a.num_accepting()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { config, out, markdown } => {
            let text = fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let cfg = BenchConfig::parse(&text)?;
            let rows = run_suite(&cfg)?;
            write(&out, &to_csv(&rows))?;
            if let Some(path) = markdown {
                write(&path, &to_markdown(&rows))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
