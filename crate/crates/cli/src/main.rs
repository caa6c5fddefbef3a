//! `tscu`: solve, verify, kernelize, generate, transform and benchmark
//! two-sets cut-uncut instances.
//!
//! Exit codes: `solve` returns 0 for YES, 1 for NO, 2 on error;
//! `verify` returns 0 for a valid solution, 1 for an invalid one, 2 on
//! parse errors; everything else returns 0 on success and 2 on error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tscu_core::cograph::{find_modulator, solve_cograph};
use tscu_core::generators::{
    gen_mcc, gen_random, gen_sat34, transform_bipartite, CnfFormula, MccInput, RandomKind,
    RandomParams,
};
use tscu_core::indset::{max_independent_set, solve_indset, Alpha};
use tscu_core::instance::{normalize, verify_solution, Instance, Normalized, SolutionCut, Verdict};
use tscu_core::kernel::{
    feedback_edge_number, kernelize_fes, kernelize_vc_2dcs, KernelOutcome, KernelReport,
};
use tscu_core::oracle::{brute_force_solve_opts, BruteOptions};
use tscu_core::treewidth::{heuristic_td, solve_treewidth, TreeDecomposition};

#[derive(Parser)]
#[command(
    name = "tscu",
    version,
    about = "Exact solver suite for two-sets cut-uncut"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance and print `YES <cutweight>` or `NO`
    Solve(SolveArgs),
    /// Check a solution file against an instance
    Verify {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Shrink an instance, preserving its answer
    Kernelize(KernelizeArgs),
    /// Emit benchmark instances
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Rewrite an instance into a related form
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Run an instance/algorithm matrix and report timings
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    /// Budget for the cograph modulator search
    #[arg(long, default_value_t = 8)]
    modulator_cap: usize,
    /// Independence bound for the connector-guessing solver (computed
    /// exactly, capped at 6, when omitted)
    #[arg(long)]
    param_k: Option<usize>,
    /// Tree decomposition file (PACE style); heuristic when omitted
    #[arg(long)]
    td: Option<PathBuf>,
    /// Vertex cap for the exhaustive solver
    #[arg(long, default_value_t = 24)]
    cap: usize,
    /// Write the witness as a solution file (`r <u>` lines)
    #[arg(long, short = 'o')]
    solution: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Brute,
    Cograph,
    Treewidth,
    Indset,
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Algo::Auto => "auto",
            Algo::Brute => "brute",
            Algo::Cograph => "cograph",
            Algo::Treewidth => "treewidth",
            Algo::Indset => "indset",
        };
        write!(f, "{name}")
    }
}

#[derive(Args)]
struct KernelizeArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    rules: KernelRules,
    #[arg(long, short = 'o')]
    output: PathBuf,
    /// Write a flat JSON report of the reduction
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelRules {
    Fes,
    Vc2dcs,
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// Reduction from bounded-occurrence SAT (max degree three)
    Sat34 {
        /// DIMACS cnf file
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Reduction from regular multicolored clique
    Mcc {
        /// Input graph (instance format; terminal lines ignored)
        #[arg(long)]
        graph: PathBuf,
        /// Color classes, one line of 1-based vertex ids per class
        #[arg(long)]
        classes: PathBuf,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Seeded random families
    Random {
        #[arg(long)]
        kind: RandomKindArg,
        /// Seed (the TSCU_SEED environment variable overrides this)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long)]
        modulator: Option<usize>,
        #[arg(long)]
        complement_edges: Option<usize>,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomKindArg {
    Connected,
    Cograph,
    Lowindep,
    Grid,
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Equivalent bipartite instance hanging on a single bridge edge
    Bipartite {
        input: PathBuf,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Manifest: one `<instance path> <algo,algo,...>` per line
    manifest: PathBuf,
    /// Per-run timeout in milliseconds
    #[arg(long)]
    timeout: Option<u64>,
    #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
    format: BenchFormat,
    /// Worker threads for running rows
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFormat {
    Csv,
    Md,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Solve(args) => cmd_solve(&args),
        Cmd::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Cmd::Kernelize(args) => cmd_kernelize(&args),
        Cmd::Generate(cmd) => cmd_generate(cmd),
        Cmd::Transform(cmd) => cmd_transform(cmd),
        Cmd::Bench(args) => cmd_bench(&args),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn read_instance(path: &Path) -> CliResult<Instance> {
    let text = std::fs::read_to_string(path)?;
    Ok(Instance::parse(&text)?)
}

fn write_out(path: Option<&PathBuf>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_solve(args: &SolveArgs) -> CliResult<u8> {
    let inst = read_instance(&args.instance)?;
    let (reduced, back): (Instance, Vec<usize>) = match normalize(&inst) {
        Normalized::Trivial(verdict) => {
            eprintln!("c solved by normalization");
            return finish_solve(
                &inst,
                &verdict,
                &(0..inst.graph.n()).collect::<Vec<_>>(),
                args,
            );
        }
        Normalized::Reduced(r) => (r.instance, r.original_ids),
    };
    let algo = match args.algo {
        Algo::Auto => pick_algo(&reduced, args),
        a => a,
    };
    eprintln!("c algo {algo}");
    let verdict = run_algo(&reduced, algo, args)?;
    finish_solve(&inst, &verdict, &back, args)
}

fn finish_solve(
    original: &Instance,
    verdict: &Verdict,
    back: &[usize],
    args: &SolveArgs,
) -> CliResult<u8> {
    println!("{}", verdict.machine_line());
    if let (Some(path), Some(w)) = (&args.solution, &verdict.witness) {
        let red_original: Vec<usize> = w.red.iter().map(|&v| back[v]).collect();
        let cut = SolutionCut::from_red(&original.graph, red_original);
        std::fs::write(path, cut.serialize())?;
    }
    Ok(if verdict.yes { 0 } else { 1 })
}

fn run_algo(inst: &Instance, algo: Algo, args: &SolveArgs) -> CliResult<Verdict> {
    match algo {
        Algo::Auto => unreachable!("resolved before dispatch"),
        Algo::Brute => {
            let r = brute_force_solve_opts(
                inst,
                BruteOptions {
                    cap: args.cap,
                    parallel: true,
                },
            )?;
            Ok(r.literal)
        }
        Algo::Cograph => match solve_cograph(inst, args.modulator_cap)? {
            Some(v) => Ok(v),
            None => Err(format!("no modulator within cap {}", args.modulator_cap).into()),
        },
        Algo::Treewidth => {
            let td = match &args.td {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    TreeDecomposition::parse(&text, inst.graph.n())?
                }
                None => heuristic_td(&inst.graph),
            };
            Ok(solve_treewidth(inst, &td)?)
        }
        Algo::Indset => {
            let k = match args.param_k {
                Some(k) => k,
                None => match max_independent_set(&inst.graph, 6) {
                    Alpha::Exact(k) => k,
                    Alpha::AboveCap => {
                        return Err("independence number exceeds cap 6; pass --param-k".into())
                    }
                },
            };
            Ok(solve_indset(inst, k)?.verdict)
        }
    }
}

/// Predicted state-space sizes; smallest wins, ties go to the treewidth
/// program.
fn pick_algo(inst: &Instance, args: &SolveArgs) -> Algo {
    let g = &inst.graph;
    let n = g.n() as f64;
    let mut candidates: Vec<(Algo, f64)> = Vec::new();

    let width = heuristic_td(g).width() as f64;
    candidates.push((
        Algo::Treewidth,
        (width + 2.0).powf(width + 1.0) * bell(width as usize + 1).powi(2) * n,
    ));

    if g.n() <= args.cap {
        let free = g.n() - inst.s.len() - inst.t.len();
        candidates.push((Algo::Brute, 2f64.powi(free as i32)));
    }
    if let Some(x) = find_modulator(g, args.modulator_cap.min(8)) {
        let x = x.len() as f64;
        candidates.push((
            Algo::Cograph,
            2f64.powf(x) * (x + 2.0).powf(2.0 * x + 4.0) * n * n,
        ));
    }
    if let Alpha::Exact(k) = max_independent_set(g, 5) {
        let q = 2 * (k - 1) * (2 * k - 2);
        candidates.push((Algo::Indset, n.powi(q as i32)));
    }
    let mut best = candidates[0];
    for &c in &candidates[1..] {
        if c.1 < best.1 {
            best = c;
        }
    }
    best.0
}

/// k-th Bell number via the Bell triangle (bell(0) = bell(1) = 1).
fn bell(k: usize) -> f64 {
    let mut row = vec![1f64];
    for _ in 1..k {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    *row.last().unwrap()
}

fn cmd_verify(instance: &Path, solution: &Path) -> CliResult<u8> {
    let inst = read_instance(instance)?;
    let text = std::fs::read_to_string(solution)?;
    let cut = SolutionCut::parse(&inst.graph, &text)?;
    let v = verify_solution(&inst, &cut);
    if v.valid {
        println!("valid cut weight {}", cut.cut_weight);
        Ok(0)
    } else {
        println!("invalid: {}", v.reason.unwrap_or_default());
        Ok(1)
    }
}

fn cmd_kernelize(args: &KernelizeArgs) -> CliResult<u8> {
    let inst = read_instance(&args.input)?;
    let (output_text, report) = match args.rules {
        KernelRules::Fes => match kernelize_fes(&inst)? {
            KernelOutcome::Kernel(out, report) => (out.serialize(), report),
            KernelOutcome::Trivial(verdict, report) => {
                eprintln!("c decided during reduction: {}", verdict.machine_line());
                (equivalent_stub(&verdict), report)
            }
        },
        KernelRules::Vc2dcs => {
            let (out, report) = kernelize_vc_2dcs(&inst, None)?;
            (out.serialize(), report)
        }
    };
    std::fs::write(&args.output, output_text)?;
    if let Some(path) = &args.report {
        std::fs::write(path, report_json(&report).to_string())?;
    }
    Ok(0)
}

/// Tiny instance with the same answer, for when reduction already decided.
fn equivalent_stub(verdict: &Verdict) -> String {
    if verdict.yes {
        "p tscu 1 0\n".to_string()
    } else {
        "p tscu 1 0\ns 1\nt 1\n".to_string()
    }
}

fn report_json(report: &KernelReport) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    let stats = [("input", &report.input), ("output", &report.output)];
    for (prefix, s) in stats {
        map.insert(format!("{prefix}_n"), s.n.into());
        map.insert(format!("{prefix}_m"), s.m.into());
        map.insert(format!("{prefix}_s"), s.s.into());
        map.insert(format!("{prefix}_t"), s.t.into());
        map.insert(format!("{prefix}_ell"), s.ell.into());
    }
    map.insert("parameter".into(), report.parameter.into());
    for (name, count) in &report.rules_applied {
        map.insert((*name).into(), (*count).into());
    }
    map.insert(
        "trivially_decided".into(),
        match &report.trivially_decided {
            Some(v) if v.yes => "YES".into(),
            Some(_) => "NO".into(),
            None => serde_json::Value::Null,
        },
    );
    serde_json::Value::Object(map)
}

fn cmd_generate(cmd: GenerateCmd) -> CliResult<u8> {
    match cmd {
        GenerateCmd::Sat34 { cnf, output } => {
            let text = std::fs::read_to_string(&cnf)?;
            let formula = CnfFormula::parse_dimacs(&text)?;
            let inst = gen_sat34(&formula)?;
            write_out(output.as_ref(), &inst.serialize())?;
        }
        GenerateCmd::Mcc {
            graph,
            classes,
            output,
        } => {
            let g = read_instance(&graph)?.graph;
            let classes = parse_classes(&std::fs::read_to_string(&classes)?, g.n())?;
            let out = gen_mcc(&MccInput { graph: g, classes })?;
            let mut text = format!("c c1 {}\nc c2 {}\n", out.c1, out.c2);
            text.push_str(&out.instance.serialize());
            write_out(output.as_ref(), &text)?;
        }
        GenerateCmd::Random {
            kind,
            seed,
            n,
            m,
            rows,
            cols,
            modulator,
            complement_edges,
            s,
            t,
            ell,
            output,
        } => {
            let seed = match std::env::var("TSCU_SEED") {
                Ok(v) => v
                    .parse::<u64>()
                    .map_err(|_| "TSCU_SEED must be an integer")?,
                Err(_) => seed,
            };
            let need = |o: Option<usize>, what: &str| -> CliResult<usize> {
                o.ok_or_else(|| format!("--{what} required for this kind").into())
            };
            let kind = match kind {
                RandomKindArg::Connected => RandomKind::Connected {
                    n: need(n, "n")?,
                    m: need(m, "m")?,
                },
                RandomKindArg::Cograph => RandomKind::CographPlusModulator {
                    n: need(n, "n")?,
                    modulator: modulator.unwrap_or(0),
                },
                RandomKindArg::Lowindep => RandomKind::LowIndependence {
                    n: need(n, "n")?,
                    complement_edges: need(complement_edges, "complement-edges")?,
                },
                RandomKindArg::Grid => RandomKind::Grid {
                    rows: need(rows, "rows")?,
                    cols: need(cols, "cols")?,
                },
            };
            let inst = gen_random(&RandomParams {
                kind,
                s_size: s,
                t_size: t,
                ell,
                seed,
            })?;
            write_out(output.as_ref(), &inst.serialize())?;
        }
    }
    Ok(0)
}

fn parse_classes(text: &str, n: usize) -> CliResult<Vec<Vec<usize>>> {
    let mut classes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut class = Vec::new();
        for tok in line.split_whitespace() {
            let id: usize = tok
                .parse()
                .map_err(|_| format!("classes line {}: malformed id", idx + 1))?;
            if id == 0 || id > n {
                return Err(format!("classes line {}: vertex {id} out of range", idx + 1).into());
            }
            class.push(id - 1);
        }
        classes.push(class);
    }
    Ok(classes)
}

fn cmd_transform(cmd: TransformCmd) -> CliResult<u8> {
    match cmd {
        TransformCmd::Bipartite { input, output } => {
            let inst = read_instance(&input)?;
            let out = transform_bipartite(&inst)?;
            write_out(output.as_ref(), &out.serialize())?;
        }
    }
    Ok(0)
}

struct BenchRow {
    instance: String,
    algo: String,
    verdict: String,
    optimum: Option<u64>,
    ms: u128,
    params: String,
}

fn cmd_bench(args: &BenchArgs) -> CliResult<u8> {
    let text = std::fs::read_to_string(&args.manifest)?;
    let mut jobs: Vec<(String, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("c ") {
            continue;
        }
        let mut tok = line.split_whitespace();
        let path = tok
            .next()
            .ok_or_else(|| format!("manifest line {}: missing path", idx + 1))?;
        let algos = tok
            .next()
            .ok_or_else(|| format!("manifest line {}: missing algorithm list", idx + 1))?;
        for algo in algos.split(',') {
            jobs.push((path.to_string(), algo.to_string()));
        }
    }

    let results: Vec<BenchRow> = run_jobs(&jobs, args)?;

    // cross-algorithm agreement: identical verdict and optimum per instance
    let mut by_instance: std::collections::BTreeMap<&str, Vec<&BenchRow>> = Default::default();
    for row in &results {
        if row.verdict != "TIMEOUT" && row.verdict != "ERROR" {
            by_instance.entry(&row.instance).or_default().push(row);
        }
    }
    for (path, rows) in &by_instance {
        let first = rows[0];
        for row in &rows[1..] {
            if row.verdict != first.verdict || row.optimum != first.optimum {
                eprintln!(
                    "disagreement on {path}: {} reports {} {:?}, {} reports {} {:?}",
                    first.algo, first.verdict, first.optimum, row.algo, row.verdict, row.optimum
                );
                return Ok(2);
            }
        }
    }

    match args.format {
        BenchFormat::Csv => {
            println!("instance,algo,verdict,optimum,ms,params");
            for r in &results {
                println!(
                    "{},{},{},{},{},{}",
                    r.instance,
                    r.algo,
                    r.verdict,
                    r.optimum.map(|o| o.to_string()).unwrap_or_default(),
                    r.ms,
                    r.params
                );
            }
        }
        BenchFormat::Md => {
            println!("| instance | algo | verdict | optimum | ms | params |");
            println!("| --- | --- | --- | --- | --- | --- |");
            for r in &results {
                println!(
                    "| {} | {} | {} | {} | {} | {} |",
                    r.instance,
                    r.algo,
                    r.verdict,
                    r.optimum.map(|o| o.to_string()).unwrap_or_default(),
                    r.ms,
                    r.params
                );
            }
        }
    }
    Ok(0)
}

fn run_jobs(jobs: &[(String, String)], args: &BenchArgs) -> CliResult<Vec<BenchRow>> {
    let jobs_count = args.jobs.max(1);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: std::sync::Mutex<Vec<Option<BenchRow>>> =
        std::sync::Mutex::new((0..jobs.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs_count {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if idx >= jobs.len() {
                    break;
                }
                let (path, algo) = &jobs[idx];
                let row = match bench_one(path, algo, args.timeout) {
                    Ok(row) => row,
                    Err(e) => {
                        // inapplicable algorithm or unreadable input: keep
                        // the sweep going; the row is excluded from the
                        // agreement check
                        eprintln!("c error on {path} [{algo}]: {e}");
                        BenchRow {
                            instance: path.to_string(),
                            algo: algo.to_string(),
                            verdict: "ERROR".into(),
                            optimum: None,
                            ms: 0,
                            params: String::new(),
                        }
                    }
                };
                results.lock().unwrap()[idx] = Some(row);
            });
        }
    });
    Ok(results
        .into_inner()
        .unwrap()
        .into_iter()
        .flatten()
        .collect())
}

fn bench_one(path: &str, algo_name: &str, timeout_ms: Option<u64>) -> CliResult<BenchRow> {
    let algo = match algo_name {
        "auto" => Algo::Auto,
        "brute" => Algo::Brute,
        "cograph" => Algo::Cograph,
        "treewidth" => Algo::Treewidth,
        "indset" => Algo::Indset,
        other => return Err(format!("unknown algorithm `{other}`").into()),
    };
    let inst = read_instance(Path::new(path))?;
    let mut params = format!("fes={}", feedback_edge_number(&inst.graph));
    let reduced = match normalize(&inst) {
        Normalized::Trivial(v) => {
            return Ok(BenchRow {
                instance: path.to_string(),
                algo: algo_name.to_string(),
                verdict: if v.yes { "YES".into() } else { "NO".into() },
                optimum: v.optimum,
                ms: 0,
                params,
            });
        }
        Normalized::Reduced(r) => r.instance,
    };
    match algo {
        Algo::Cograph => {
            if let Some(x) = find_modulator(&reduced.graph, 8) {
                params.push_str(&format!(";|X|={}", x.len()));
            }
        }
        Algo::Treewidth => {
            params.push_str(&format!(";width={}", heuristic_td(&reduced.graph).width()));
        }
        Algo::Indset => {
            if let Alpha::Exact(k) = max_independent_set(&reduced.graph, 6) {
                params.push_str(&format!(";alpha={k}"));
            }
        }
        Algo::Brute | Algo::Auto => {
            let free = reduced.graph.n() - reduced.s.len() - reduced.t.len();
            params.push_str(&format!(";free={free}"));
        }
    }

    let solve_args = SolveArgs {
        instance: PathBuf::from(path),
        algo,
        modulator_cap: 8,
        param_k: None,
        td: None,
        cap: 24,
        solution: None,
    };
    let started = Instant::now();
    let (tx, rx) = std::sync::mpsc::channel();
    let inst_clone = reduced.clone();
    std::thread::spawn(move || {
        let picked = match algo {
            Algo::Auto => pick_algo(&inst_clone, &solve_args),
            a => a,
        };
        let out = run_algo(&inst_clone, picked, &solve_args).map_err(|e| e.to_string());
        let _ = tx.send(out);
    });
    let outcome = match timeout_ms {
        Some(ms) => rx.recv_timeout(std::time::Duration::from_millis(ms)),
        None => rx.recv().map_err(std::sync::mpsc::RecvTimeoutError::from),
    };
    let ms = started.elapsed().as_millis();
    match outcome {
        Ok(Ok(verdict)) => Ok(BenchRow {
            instance: path.to_string(),
            algo: algo_name.to_string(),
            verdict: if verdict.yes {
                "YES".into()
            } else {
                "NO".into()
            },
            optimum: verdict.optimum,
            ms,
            params,
        }),
        Ok(Err(e)) => Err(e.into()),
        Err(_) => Ok(BenchRow {
            instance: path.to_string(),
            algo: algo_name.to_string(),
            verdict: "TIMEOUT".into(),
            optimum: None,
            ms,
            params,
        }),
    }
}
