use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commgraph::bench::run_bench;
use commgraph::bits::BitVector;
use commgraph::comm::{split_edges, SplitMode};
use commgraph::io::{parse_graph, parse_partition};
use commgraph::protocols::{run_protocol, ProtocolId};
use commgraph::random::rng_from_seed;
use commgraph::reductions::{
    verify_reduction, MatchVariant, ReductionKind, VerifyMode, VerifyReport,
};
use commgraph::Error;

#[derive(Parser)]
#[command(
    name = "commgraph",
    version,
    about = "Two-party graph protocols and gadget reductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a gadget instance and write it as a graph or partition file.
    Gen(GenArgs),
    /// Check a reduction on every input, or on random samples.
    Verify(VerifyArgs),
    /// Run a protocol on a graph or partition file.
    Run(RunArgs),
    /// Measure protocol cost on random instances and emit CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    kind: ReductionKind,
    #[arg(long)]
    n: usize,
    /// Hex inputs; position 1 is the least significant bit, matrices are
    /// flattened row-major.
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    y: Option<String>,
    #[arg(long)]
    z: Option<String>,
    /// Draw the inputs from --seed instead.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "overlap")]
    variant: MatchVariant,
    /// Output file; printed to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write Graphviz DOT next to --out (or to stdout).
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct VerifyArgs {
    kind: ReductionKind,
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV report here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    protocol: ProtocolId,
    #[arg(
        long,
        conflicts_with = "partition",
        required_unless_present = "partition"
    )]
    graph: Option<PathBuf>,
    #[arg(long)]
    partition: Option<PathBuf>,
    /// random | interleave | all-alice | file:PATH
    #[arg(long, default_value = "random")]
    split: SplitMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Left side for matching-hk, e.g. `0..7` (inclusive) or `0,2,4`;
    /// defaults to the lower half of the vertex ids.
    #[arg(long)]
    left: Option<String>,
    /// Write the message-by-message transcript here.
    #[arg(long)]
    transcript: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    protocol: ProtocolId,
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report ms=0 so the CSV is byte-reproducible.
    #[arg(long)]
    no_time: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Verify(a) => verify(a),
        Command::Run(a) => run(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Infeasible { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn write_file(path: &Path, text: &str) -> commgraph::Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> commgraph::Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn gen(a: GenArgs) -> commgraph::Result<ExitCode> {
    let names = a.kind.input_names();
    let len = a.kind.input_len(a.n);
    let inputs: Vec<BitVector> = if a.random {
        let mut rng = rng_from_seed(a.seed);
        names
            .iter()
            .map(|_| BitVector::random(len, &mut rng))
            .collect()
    } else {
        names
            .iter()
            .map(|&name| {
                let given = match name {
                    "x" => &a.x,
                    "y" => &a.y,
                    _ => &a.z,
                };
                let hex = given.as_deref().ok_or_else(|| {
                    Error::InvalidParameter(format!("{} needs --{name} (or --random)", a.kind))
                })?;
                BitVector::from_hex(hex, len)
            })
            .collect::<commgraph::Result<_>>()?
    };
    let inst = a.kind.build(a.n, &inputs, a.variant)?;
    let inputs_shown: Vec<String> = inst
        .inputs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let summary = format!(
        "kind={} n={} {} vertices={} edges={}\nexpected {}",
        inst.kind,
        inst.n,
        inputs_shown.join(" "),
        inst.graph.n_vertices(),
        inst.graph.edge_count(),
        inst.expected
    );
    match &a.out {
        Some(path) => {
            write_file(path, &inst.to_text())?;
            if a.dot {
                write_file(&path.with_extension("dot"), &inst.to_dot())?;
            }
            println!("{summary}");
        }
        None => {
            print!("{}", inst.to_text());
            if a.dot {
                print!("{}", inst.to_dot());
            }
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(a: VerifyArgs) -> commgraph::Result<ExitCode> {
    let mode = match (a.exhaustive, a.samples) {
        (true, _) => VerifyMode::Exhaustive,
        (false, Some(k)) => VerifyMode::Sample(k),
        (false, None) => {
            return Err(Error::InvalidParameter(
                "pass --exhaustive or --samples K".into(),
            ));
        }
    };
    let reports = verify_reduction(a.kind, a.n, mode, a.seed)?;
    let mut csv = format!("{}\n", VerifyReport::CSV_HEADER);
    for r in &reports {
        println!("{r}");
        csv.push_str(&r.csv_row());
        csv.push('\n');
    }
    match &a.csv {
        Some(path) => {
            write_file(path, &csv)?;
            println!("csv={}", path.display());
        }
        None => print!("{csv}"),
    }
    let pass = reports.iter().all(VerifyReport::passed);
    println!("{}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_left(spec: &str, n: usize) -> commgraph::Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("bad --left {spec:?}"));
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let lo: usize = lo.parse().map_err(|_| bad())?;
                let hi: usize = hi.trim_start_matches('=').parse().map_err(|_| bad())?;
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.iter().any(|&v| v >= n) {
        return Err(bad());
    }
    Ok(out)
}

fn run(a: RunArgs) -> commgraph::Result<ExitCode> {
    let inst = match (&a.graph, &a.partition) {
        (Some(path), _) => split_edges(&parse_graph(&read_file(path)?)?, &a.split, a.seed)?,
        (None, Some(path)) => parse_partition(&read_file(path)?)?,
        (None, None) => unreachable!("clap enforces one of --graph/--partition"),
    };
    let n = inst.n_vertices();
    let left = match (&a.left, a.protocol) {
        (Some(spec), _) => Some(parse_left(spec, n)?),
        (None, ProtocolId::MatchingHk) => Some((0..n / 2).collect()),
        (None, _) => None,
    };
    let out = run_protocol(a.protocol, &inst, a.seed, left.as_deref())?;
    if let Some(path) = &a.transcript {
        write_file(path, &out.transcript.dump(&out.output))?;
    }
    println!(
        "output={} bits={} rounds={}",
        out.output,
        out.bits(),
        out.rounds()
    );
    Ok(ExitCode::SUCCESS)
}

fn bench(a: BenchArgs) -> commgraph::Result<ExitCode> {
    let summary = run_bench(a.protocol, &a.sizes, a.trials, a.seed, !a.no_time)?;
    let csv = summary.to_csv();
    match &a.out {
        Some(path) => {
            write_file(path, &csv)?;
            println!("slope={:.4}", summary.slope);
            if let Some(c) = summary.hk_constant {
                println!("C={c:.4}");
            }
        }
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}
