//! `sbk` — exact domination and synchronous bondage computations on small
//! graphs, with verification suites replaying the closed-form values
//! against brute force.
//!
//! Machine-readable JSON goes to stdout, one record per line; human logs go
//! to stderr. Exit codes: 0 success, 1 suite failures, 2 input errors,
//! 3 infeasible increase, 4 budget or enumeration cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sbk_core::{
    bondage_number, domination_number, max_sbk_over_nm, parse_edge_list, parse_graph6, run_suite,
    sb_k, sbk_complete_formula, sbk_cycle_formula, sbk_path_formula, search_sync_advantage,
    to_graph6, tree_bounds, vizing_extremal_graph, vizing_max_edges, Budget, Error, FamilySpec,
    Graph, Meter, Result, SuiteName, SuiteParams, DEFAULT_ENUMERATION_CAP,
};

#[derive(Parser)]
#[command(
    name = "sbk",
    version,
    about = "Exact domination and synchronous bondage computations on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination number with its canonical witness
    Gamma(InputArgs),
    /// Compute the bondage number (smallest edge set raising gamma by one)
    Bondage(InputArgs),
    /// Compute the k-synchronous bondage number
    Sbk {
        #[command(flatten)]
        input: InputArgs,
        /// Requested increase of the domination number
        #[arg(long)]
        k: usize,
    },
    /// Evaluate closed-form family values
    Formula {
        #[command(subcommand)]
        which: FormulaCommand,
    },
    /// Run a verification suite; `all` runs every suite
    Verify {
        /// paths | cycles | complete | trees | stepwise | bounds | vizing |
        /// pendant | compose | all
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 0xB0DA6E)]
        seed: u64,
    },
    /// Exhaustive searches over small labeled graphs
    Search {
        #[command(subcommand)]
        which: SearchCommand,
    },
}

/// Graph source: a file or a generated family, exactly one of the two.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Graph file: `.el` edge list or `.g6` graph6, detected by extension
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Generated family, e.g. path:7, cycle:5, complete:4, star:3, spider:2
    #[arg(long, value_name = "FAMILY:PARAM")]
    gen: Option<String>,
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// Synchronous bondage of the path
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Synchronous bondage of the cycle
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Synchronous bondage of the complete graph
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Maximum edge count for a given domination number, with the extremal graph
    Vizing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// The tree window (k, 2k)
    TreeBounds {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Graphs where the one-shot Sb2 beats two iterated minimum moves
    SyncAdvantage {
        /// Scan all connected labeled graphs up to this order
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Maximum Sb_k over all labeled graphs with n vertices and m edges
    MaxSbk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InfeasibleIncrease { .. } => 3,
        Error::SearchBudgetExceeded { .. } | Error::EnumerationCapExceeded { .. } => 4,
        _ => 2,
    }
}

fn budget_from_env() -> Result<Budget> {
    match std::env::var("BONDAGE_BUDGET") {
        Ok(raw) => {
            let value: u64 = raw.trim().parse().map_err(|_| {
                Error::InvalidParam(format!("BONDAGE_BUDGET must be an integer, got {raw:?}"))
            })?;
            Ok(Budget::uniform(value))
        }
        Err(_) => Ok(Budget::default()),
    }
}

fn load_graph(args: &InputArgs) -> Result<(Graph, Value)> {
    if let Some(spec) = &args.gen {
        let family: FamilySpec = spec.parse()?;
        let g = family.generate()?;
        let descriptor = describe_input(&g, &format!("gen:{family}"));
        return Ok((g, descriptor));
    }
    let path = args.input.as_ref().expect("clap enforces one source");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParam(format!("cannot read {}: {e}", path.display())))?;
    let g = match path.extension().and_then(|e| e.to_str()) {
        Some("el") => parse_edge_list(&text)?,
        Some("g6") => parse_graph6(&text)?,
        other => {
            return Err(Error::InvalidParam(format!(
                "unrecognized graph extension {other:?}: expected .el or .g6"
            )))
        }
    };
    let descriptor = describe_input(&g, &format!("file:{}", path.display()));
    Ok((g, descriptor))
}

fn describe_input(g: &Graph, source: &str) -> Value {
    json!({
        "source": source,
        "n": g.n(),
        "m": g.edge_count(),
        "graph6": to_graph6(g),
    })
}

fn record(
    command: &str,
    input: Value,
    result: Value,
    witness: Value,
    elapsed_ms: u128,
    budget_used: Value,
) -> Value {
    json!({
        "command": command,
        "input": input,
        "result": result,
        "witness": witness,
        "elapsed_ms": elapsed_ms,
        "budget_used": budget_used,
    })
}

fn emit(value: &Value) {
    println!("{value}");
}

fn run(command: Command) -> Result<ExitCode> {
    let budget = budget_from_env()?;
    match command {
        Command::Gamma(input) => {
            let (g, descriptor) = load_graph(&input)?;
            let started = Instant::now();
            let mut meter = Meter::new(budget);
            let result = domination_number(&g, &mut meter)?;
            emit(&record(
                "gamma",
                descriptor,
                json!({ "gamma": result.gamma }),
                serde_json::to_value(&result.witness).expect("witness serializes"),
                started.elapsed().as_millis(),
                serde_json::to_value(meter.usage()).expect("usage serializes"),
            ));
            eprintln!("gamma = {} (witness {:?})", result.gamma, result.witness.indices());
            Ok(ExitCode::SUCCESS)
        }
        Command::Bondage(input) => {
            let (g, descriptor) = load_graph(&input)?;
            let started = Instant::now();
            let mut meter = Meter::new(budget);
            let result = bondage_number(&g, &mut meter)?;
            emit(&record(
                "bondage",
                descriptor,
                json!({
                    "bondage": result.size,
                    "gamma_before": result.gamma_before,
                    "gamma_after": result.gamma_after,
                }),
                witness_json(&g, &result),
                started.elapsed().as_millis(),
                serde_json::to_value(meter.usage()).expect("usage serializes"),
            ));
            eprintln!("b = {} (removed {:?})", result.size, result.witness.pairs(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sbk { input, k } => {
            let (g, descriptor) = load_graph(&input)?;
            let started = Instant::now();
            let mut meter = Meter::new(budget);
            let result = sb_k(&g, k, &mut meter)?;
            emit(&record(
                "sbk",
                descriptor,
                json!({
                    "sbk": result.size,
                    "k": k,
                    "gamma_before": result.gamma_before,
                    "gamma_after": result.gamma_after,
                }),
                witness_json(&g, &result),
                started.elapsed().as_millis(),
                serde_json::to_value(meter.usage()).expect("usage serializes"),
            ));
            eprintln!("Sb_{k} = {} (removed {:?})", result.size, result.witness.pairs(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Formula { which } => run_formula(which),
        Command::Verify {
            suite,
            max_n,
            max_k,
            samples,
            seed,
        } => {
            let params = SuiteParams {
                max_n,
                max_k,
                samples,
                seed,
                budget,
            };
            let names: Vec<SuiteName> = if suite == "all" {
                SuiteName::all().to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut all_passed = true;
            for name in names {
                let started = Instant::now();
                let report = run_suite(name, &params)?;
                all_passed &= report.all_passed();
                eprintln!(
                    "suite {}: {}/{} cases passed, {} skipped, {} failures ({} ms)",
                    report.suite,
                    report.cases_passed,
                    report.cases_run,
                    report.skipped,
                    report.failures.len(),
                    report.elapsed_ms
                );
                emit(&record(
                    "verify",
                    json!({
                        "suite": name.to_string(),
                        "max_n": params.max_n,
                        "max_k": params.max_k,
                        "samples": params.samples,
                        "seed": params.seed,
                    }),
                    serde_json::to_value(&report).expect("report serializes"),
                    Value::Null,
                    started.elapsed().as_millis(),
                    Value::Null,
                ));
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Search { which } => run_search(which, &budget),
    }
}

fn witness_json(g: &Graph, result: &sbk_core::SbResult) -> Value {
    json!({
        "indices": result.witness.indices(),
        "edges": result.witness.pairs(g),
    })
}

fn run_formula(which: FormulaCommand) -> Result<ExitCode> {
    let started = Instant::now();
    let (input, result, witness) = match which {
        FormulaCommand::Path { n, k } => (
            json!({ "family": "path", "n": n, "k": k }),
            json!({ "value": sbk_path_formula(n, k)? }),
            Value::Null,
        ),
        FormulaCommand::Cycle { n, k } => (
            json!({ "family": "cycle", "n": n, "k": k }),
            json!({ "value": sbk_cycle_formula(n, k)? }),
            Value::Null,
        ),
        FormulaCommand::Complete { n, k } => (
            json!({ "family": "complete", "n": n, "k": k }),
            json!({ "value": sbk_complete_formula(n, k)? }),
            Value::Null,
        ),
        FormulaCommand::Vizing { n, d } => {
            let value = vizing_max_edges(n, d)?;
            let extremal = vizing_extremal_graph(n, d)?;
            (
                json!({ "family": "vizing", "n": n, "d": d }),
                json!({ "value": value }),
                json!({ "graph6": to_graph6(&extremal) }),
            )
        }
        FormulaCommand::TreeBounds { k } => {
            if k == 0 {
                return Err(Error::InvalidParam("tree bounds need k >= 1".into()));
            }
            let (lo, hi) = tree_bounds(k);
            (
                json!({ "family": "tree-bounds", "k": k }),
                json!({ "lower": lo, "upper": hi }),
                Value::Null,
            )
        }
    };
    emit(&record(
        "formula",
        input,
        result,
        witness,
        started.elapsed().as_millis(),
        Value::Null,
    ));
    Ok(ExitCode::SUCCESS)
}

fn run_search(which: SearchCommand, budget: &Budget) -> Result<ExitCode> {
    match which {
        SearchCommand::SyncAdvantage { max_n } => {
            let started = Instant::now();
            let input = json!({ "property": "sync-advantage", "max_n": max_n });
            let mut scanned = 0usize;
            let mut skipped = 0usize;
            let mut budget_errors = 0usize;
            let mut findings = 0usize;
            let cap = DEFAULT_ENUMERATION_CAP.max(max_n);
            for n in 1..=max_n {
                let graphs = sbk_core::enumerate_labeled_graphs(n, true, cap)?;
                let scan = search_sync_advantage(graphs, budget)?;
                scanned += scan.scanned;
                skipped += scan.skipped_infeasible;
                budget_errors += scan.budget_errors;
                for f in &scan.findings {
                    findings += 1;
                    emit(&record(
                        "search",
                        input.clone(),
                        json!({
                            "graph6": to_graph6(&f.graph),
                            "sb2": f.sb2,
                            "b": f.b,
                            "b_mbg": f.b_mbg,
                            "b_plus_bmbg": f.b_plus_bmbg(),
                        }),
                        Value::Null,
                        started.elapsed().as_millis(),
                        Value::Null,
                    ));
                }
                eprintln!("order {n}: scanned {} connected graphs", scan.scanned);
            }
            emit(&record(
                "search",
                input,
                json!({
                    "summary": {
                        "scanned": scanned,
                        "skipped_infeasible": skipped,
                        "budget_errors": budget_errors,
                        "findings": findings,
                    }
                }),
                Value::Null,
                started.elapsed().as_millis(),
                Value::Null,
            ));
            Ok(ExitCode::SUCCESS)
        }
        SearchCommand::MaxSbk { n, m, k } => {
            let started = Instant::now();
            let report = max_sbk_over_nm(n, m, k, DEFAULT_ENUMERATION_CAP, budget)?;
            let witnesses: Vec<String> = report.witnesses.iter().map(to_graph6).collect();
            emit(&record(
                "search",
                json!({ "property": "max-sbk", "n": n, "m": m, "k": k }),
                json!({
                    "max": report.max,
                    "feasible": report.feasible,
                    "total": report.total,
                }),
                json!(witnesses),
                started.elapsed().as_millis(),
                Value::Null,
            ));
            eprintln!(
                "max Sb_{k} over ({n}, {m}) graphs: {:?} across {} feasible of {}",
                report.max, report.feasible, report.total
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
