use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use multiwedge::io;
use multiwedge::order::{minf, msup, multilattice_search, LatticeSearchOutcome, MsupOutcome, SearchConfig};
use multiwedge::riesz::{
    fs_decompose, functional_msup, op_minf, op_msup, rdp_check, rdp_search, rk_value, OperatorMSupResult,
    RdpOutcome, RdpSearchOutcome,
};
use multiwedge::wedge::{intersect, wedge_sum};
use multiwedge::Error;

mod render;
mod scenarios;

#[derive(Parser)]
#[command(name = "mw", version, about = "Exact computations on multi-wedged spaces")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// JSON input file; standard input when absent.
    #[arg(short = 'f', long = "file", global = true)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, default_value_t = 1000, global = true)]
    budget: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on single wedges or lists of wedges.
    Wedge {
        #[command(subcommand)]
        op: WedgeOp,
    },
    /// Multi-supremum of a family of translated wedges.
    Msup,
    /// Multi-infimum of a family of translated wedges.
    Minf,
    /// Randomized search for a family with no multi-supremum.
    LatticeSearch {
        /// Number of pairs per sampled family.
        #[arg(short = 'k', long = "arity", default_value_t = 2)]
        arity: usize,
    },
    /// Riesz decomposition instances.
    Rdp {
        #[command(subcommand)]
        op: RdpOp,
    },
    /// Riesz–Kantorovich values and operator multi-suprema.
    Rk {
        #[command(subcommand)]
        op: RkOp,
    },
    /// Built-in scenarios.
    Examples {
        #[command(subcommand)]
        op: ExamplesOp,
    },
}

#[derive(Subcommand, Clone, Copy)]
enum WedgeOp {
    Dual,
    Sum,
    Intersect,
    Lineality,
    IsCone,
    IsGenerating,
}

#[derive(Subcommand, Clone, Copy)]
enum RdpOp {
    Check,
    Search,
    DecomposeFs,
}

#[derive(Subcommand, Clone, Copy)]
enum RkOp {
    Value,
    OpMsup,
    FunctionalMsup,
    OpMinf,
}

#[derive(Subcommand)]
enum ExamplesOp {
    List,
    Run { name: String },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
    UnknownScenario(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Lib(e) => e.code(),
            Failure::Io(_) => "io_error",
            Failure::UnknownScenario(_) => "unknown_scenario",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) if !e.is_malformed_input() => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Io(m) => f.write_str(m),
            Failure::UnknownScenario(n) => write!(f, "unknown scenario {n:?}"),
        }
    }
}

fn read_input(opts: &GlobalOpts) -> Result<String, Failure> {
    match &opts.file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

pub(crate) fn msup_json(out: &MsupOutcome) -> Value {
    match out {
        MsupOutcome::Set(s) => json!({
            "result": "set",
            "witness": to_json(&s.witness),
            "lineality": to_json(&s.lineality),
            "proper": s.is_proper(),
        }),
        MsupOutcome::Empty => json!({ "result": "empty" }),
    }
}

pub(crate) fn op_result_json(r: &OperatorMSupResult) -> Value {
    json!({
        "representative": to_json(&r.representative),
        "lineality_ops": to_json(&r.lineality_ops),
        "proper": r.is_proper(),
    })
}

pub(crate) fn lattice_json(out: &LatticeSearchOutcome) -> Value {
    match out {
        LatticeSearchOutcome::Counterexample {
            trial,
            wedge_indices,
            apexes,
        } => json!({
            "found": true,
            "trial": trial,
            "wedge_indices": wedge_indices,
            "apexes": to_json(apexes),
        }),
        LatticeSearchOutcome::NoneFound => json!({ "found": false, "apexes": [] }),
    }
}

pub(crate) fn rdp_search_json(out: &RdpSearchOutcome) -> Value {
    match out {
        RdpSearchOutcome::Counterexample {
            trial,
            wedge_indices,
            instance,
        } => json!({
            "found": true,
            "trial": trial,
            "wedge_indices": wedge_indices,
            "instance": to_json(instance),
        }),
        RdpSearchOutcome::NoneFound => json!({ "found": false }),
    }
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Wedge { op } => {
            let text = read_input(opts)?;
            Ok(match op {
                WedgeOp::Sum => to_json(&wedge_sum(&io::parse_wedges(&text)?)?),
                WedgeOp::Intersect => to_json(&intersect(&io::parse_wedges(&text)?)?),
                WedgeOp::Dual => to_json(&io::parse_wedge(&text)?.dual()),
                WedgeOp::Lineality => json!({ "lineality": to_json(&io::parse_wedge(&text)?.lineality()) }),
                WedgeOp::IsCone => json!({ "result": io::parse_wedge(&text)?.is_cone() }),
                WedgeOp::IsGenerating => json!({ "result": io::parse_wedge(&text)?.is_generating() }),
            })
        }
        Command::Msup => Ok(msup_json(&msup(&io::parse_family(&read_input(opts)?)?)?)),
        Command::Minf => Ok(msup_json(&minf(&io::parse_family(&read_input(opts)?)?)?)),
        Command::LatticeSearch { arity } => {
            let wedges = io::parse_wedges(&read_input(opts)?)?;
            let out = multilattice_search(&wedges, SearchConfig::new(*arity, opts.seed, opts.budget))?;
            Ok(lattice_json(&out))
        }
        Command::Rdp { op } => {
            let text = read_input(opts)?;
            match op {
                RdpOp::Check => Ok(match rdp_check(&io::parse_rdp_instance(&text)?)? {
                    RdpOutcome::Decomposition(d) => json!({ "result": "decomposition", "z": to_json(&d.z) }),
                    RdpOutcome::Infeasible => json!({ "result": "infeasible" }),
                }),
                RdpOp::Search => {
                    let inp = io::parse_rdp_search(&text)?;
                    let out = rdp_search(&inp.wedges, inp.m, inp.n, opts.seed, opts.budget)?;
                    Ok(rdp_search_json(&out))
                }
                RdpOp::DecomposeFs => {
                    let inp = io::parse_fs_instance(&text)?;
                    let d = fs_decompose(inp.size, &inp.wedge_indices, &inp.xs, &inp.ys)?;
                    Ok(json!({ "result": "decomposition", "z": to_json(&d.z) }))
                }
            }
        }
        Command::Rk { op } => {
            let text = read_input(opts)?;
            match op {
                RkOp::FunctionalMsup => {
                    let inp = io::parse_functional_input(&text)?;
                    Ok(op_result_json(&functional_msup(&inp.functionals, &inp.wedges)?))
                }
                RkOp::Value => {
                    let inp = io::parse_rk_input(&text)?;
                    let x = inp
                        .x
                        .ok_or_else(|| Error::Parse("rk value needs \"x\"".into()))?;
                    let s = rk_value(&inp.operators, &inp.wedges, &inp.codomain, &x)?;
                    Ok(json!({
                        "witness": to_json(&s.witness),
                        "lineality": to_json(&s.lineality),
                        "proper": s.is_proper(),
                    }))
                }
                RkOp::OpMsup => {
                    let inp = io::parse_rk_input(&text)?;
                    Ok(op_result_json(&op_msup(&inp.operators, &inp.wedges, &inp.codomain)?))
                }
                RkOp::OpMinf => {
                    let inp = io::parse_rk_input(&text)?;
                    Ok(op_result_json(&op_minf(&inp.operators, &inp.wedges, &inp.codomain)?))
                }
            }
        }
        Command::Examples { op } => match op {
            ExamplesOp::List => Ok(scenarios::list()),
            ExamplesOp::Run { name } => {
                let s = scenarios::find(name).ok_or_else(|| Failure::UnknownScenario(name.clone()))?;
                Ok(s.run(opts.seed, opts.budget)?)
            }
        },
    }
}

fn emit(value: &Value, format: Format) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("valid json") + "\n",
        Format::Table => render::table(value),
    };
    // A closed pipe downstream is not our failure.
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            emit(&v, cli.opts.format);
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("mw: {f}");
            emit(&json!({ "error": f.code(), "message": f.to_string() }), cli.opts.format);
            ExitCode::from(f.exit_code())
        }
    }
}
