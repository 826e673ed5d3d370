use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use serde::Serialize;

use raag_out::census::{classify, coverage_check, summary_table, to_json_lines};
use raag_out::construct::{appendix_graph, build_for, layout_levels, Target};
use raag_out::format::{parse_edge_list, write_dot, write_edge_list};
use raag_out::verify::{sample_lambdas, verify_construction, VerificationResult};
use raag_out::{analyze, parse_graph6, write_graph6, Error, Graph};

#[derive(Parser)]
#[command(
    name = "raag-out",
    version,
    about = "Support graphs, Theta graphs and realizing constructions for RAAG outer automorphisms"
)]
struct Cli {
    /// Log progress to stderr (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report forests, Theta, generators and the finite-index verdict.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Build the graph realizing A_Λ.
    Construct {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = TargetArg::Gamma)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Check that a constructed (or supplied) graph realizes A_Λ.
    Verify(VerifyArgs),
    /// Classify every graph on exactly k vertices, one JSON object per line.
    Census {
        #[arg(short = 'n', value_name = "K")]
        k: usize,
        /// Write the summary table here instead of stderr.
        #[arg(long, value_name = "FILE")]
        summary: Option<PathBuf>,
    },
    /// Write a graph (or its construction) as DOT, graph6 or edge list.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        construct: Option<TargetArg>,
        /// Same as `--format dot`.
        #[arg(long, conflicts_with = "format")]
        dot: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long, value_name = "STRING", allow_hyphen_values = true)]
    graph6: Option<String>,
    /// Edge-list file (`-` for stdin).
    #[arg(long, value_name = "FILE")]
    edge_list: Option<PathBuf>,
    /// One of the fixed graphs for small Λ.
    #[arg(long, value_name = "N")]
    appendix: Option<u8>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Λ to verify; omit with --sample or --coverage.
    #[arg(long, value_name = "STRING", allow_hyphen_values = true)]
    graph6: Option<String>,
    #[arg(long, value_name = "FILE")]
    edge_list: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    appendix: Option<u8>,
    #[arg(long, value_enum, default_value_t = TargetArg::GammaPrime)]
    target: TargetArg,
    /// Verify this graph (edge list) instead of the construction.
    #[arg(long, value_name = "FILE")]
    gamma_file: Option<PathBuf>,
    /// Verify N random Λ instead of a single input.
    #[arg(long, value_name = "N", conflicts_with_all = ["graph6", "edge_list", "appendix", "gamma_file", "coverage"])]
    sample: Option<usize>,
    #[arg(long, env = "RAAG_OUT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    min_n: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Verify every Λ on at most K vertices.
    #[arg(long, value_name = "K", conflicts_with_all = ["graph6", "edge_list", "appendix", "gamma_file"])]
    coverage: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Gamma,
    GammaPrime,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Gamma => Target::Gamma,
            TargetArg::GammaPrime => Target::GammaPrime,
        }
    }
}

enum Failure {
    Usage(String),
    Verdict,
    /// Stdout closed early, as in `raag-out census -n 7 | head`.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(e.to_string())
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
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .init();
    match run(cli.command) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match command {
        Command::Analyze { input, format } => {
            let g = read_input(&input.graph6, &input.edge_list, input.appendix)?;
            let report = analyze(&g)?;
            match format {
                ReportFormat::Json => write_json(&mut out, &report)?,
                ReportFormat::Table => {
                    writeln!(out, "vertices       {}", report.vertices.len())?;
                    writeln!(out, "edges          {}", report.edges)?;
                    writeln!(out, "forests        {}", report.forests_ok)?;
                    if let Some(t) = &report.theta {
                        writeln!(
                            out,
                            "theta          {} vertices, {} edges",
                            t.graph.order(),
                            t.graph.size()
                        )?;
                    }
                    writeln!(out, "finite index   {}", report.finite_index)?;
                    writeln!(out, "transvections  {}", report.transvections.len())?;
                    writeln!(out, "partial conj.  {}", report.partial_conjugation_count)?;
                    writeln!(out, "|Aut|          {}", report.aut_order)?;
                    if let Some(q) = &report.quotient_order {
                        writeln!(out, "quotient order {q}")?;
                    }
                    writeln!(out)?;
                    out.write_all(report.witness_table.render().as_bytes())?;
                }
            }
        }
        Command::Construct {
            input,
            target,
            format,
        } => {
            let lambda = read_input(&input.graph6, &input.edge_list, input.appendix)?;
            let (gamma, kind) = build_for(&lambda, target.into())?;
            eprintln!("kind: {kind}");
            let text = match format {
                GraphFormat::Graph6 => write_graph6(&gamma) + "\n",
                GraphFormat::EdgeList => write_edge_list(&gamma),
                GraphFormat::Dot => write_dot(&gamma, "gamma", &layout_levels(&gamma, &lambda)),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Verify(args) => return verify(args, &mut out),
        Command::Census { k, summary } => {
            let entries = classify(k)?;
            info!("{} classes on {k} vertices", entries.len());
            out.write_all(to_json_lines(&entries).as_bytes())?;
            let table = summary_table(&entries);
            match summary {
                Some(path) => fs::write(path, table)?,
                None => eprint!("{table}"),
            }
        }
        Command::Export {
            input,
            construct,
            dot,
            format,
        } => {
            let g = read_input(&input.graph6, &input.edge_list, input.appendix)?;
            let (g, levels) = match construct {
                Some(t) => {
                    let (gamma, _) = build_for(&g, t.into())?;
                    let levels = layout_levels(&gamma, &g);
                    (gamma, levels)
                }
                None => (g, Vec::new()),
            };
            let text = match (dot, format) {
                (true, _) | (_, GraphFormat::Dot) => write_dot(&g, "G", &levels),
                (_, GraphFormat::Graph6) => write_graph6(&g) + "\n",
                (_, GraphFormat::EdgeList) => write_edge_list(&g),
            };
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    if let Some(k) = args.coverage {
        let report = coverage_check(k)?;
        write_json(out, &report)?;
        return if report.all_covered {
            Ok(())
        } else {
            Err(Failure::Verdict)
        };
    }
    if let Some(count) = args.sample {
        if args.min_n < 3 || args.min_n > args.max_n {
            return Err(Failure::Usage(format!(
                "sample sizes need 3 <= min-n <= max-n, got {}..{}",
                args.min_n, args.max_n
            )));
        }
        let mut all = true;
        for lambda in sample_lambdas(args.seed, count, args.min_n, args.max_n) {
            let r = verify_one(&lambda, args.target)?;
            all &= r.passed();
            serde_json::to_writer(&mut *out, &r).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        return if all { Ok(()) } else { Err(Failure::Verdict) };
    }
    let lambda = read_input(&args.graph6, &args.edge_list, args.appendix)?;
    let r = match &args.gamma_file {
        Some(path) => {
            let gamma = parse_edge_list(&read_text(path)?)?;
            verify_construction(
                &lambda,
                &gamma,
                matches!(args.target, TargetArg::GammaPrime),
            )
        }
        None => verify_one(&lambda, args.target)?,
    };
    write_json(out, &r)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn verify_one(lambda: &Graph, target: TargetArg) -> Result<VerificationResult, Failure> {
    let (gamma, kind) = build_for(lambda, target.into())?;
    info!("verifying {kind} on {} vertices", gamma.order());
    let mut r = verify_construction(lambda, &gamma, kind.claims_rigid());
    r.kind = Some(kind);
    Ok(r)
}

fn read_input(
    graph6: &Option<String>,
    edge_list: &Option<PathBuf>,
    appendix: Option<u8>,
) -> Result<Graph, Failure> {
    if let Some(s) = graph6 {
        Ok(parse_graph6(s)?)
    } else if let Some(path) = edge_list {
        Ok(parse_edge_list(&read_text(path)?)?)
    } else if let Some(which) = appendix {
        Ok(appendix_graph(which)?)
    } else {
        Err(Failure::Usage("no input graph given".into()))
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn write_json(out: &mut impl Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}
