use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value as Json};

use kinterchange::control::{
    execute_plan, probe_instance, run_plan, select_strategy, verify_paper_with, ProbeReport, RunRecord, RunRepository,
    Samples,
};
use kinterchange::fixtures::{table_row, TABLE1};
use kinterchange::landscape::{analyze, build_digraph, to_dot, DigraphMode, NodeNumbering};
use kinterchange::objective::{
    build_search_distance_objective, random_flowshop_jobs, random_weighted_jobs, Objective, Value,
};
use kinterchange::perm::PermSpace;
use kinterchange::search::{KSchedule, PivotRule, Starts, StrategyConfig, TrajectoryKind};
use kinterchange::{Error, Permutation};

#[derive(Parser, Debug)]
#[command(
    name = "kinterchange",
    version,
    about = "k-interchange landscapes and local search over permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every randomized step (default 0).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write machine-readable output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format; defaults to json with --out and text otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the k-interchange distance table g_k(s) to a target.
    Table(TableArgs),
    /// Analyze an operational digraph: reachability, local optima, levels.
    Landscape(LandscapeArgs),
    /// Run one or several search trajectories.
    Search(SearchArgs),
    /// Probe an instance and propose a strategy.
    Probe(ProbeArgs),
    /// Probe, select a strategy, execute it and record the run.
    Plan(PlanArgs),
    /// Recompute the reference structural results and report each check.
    VerifyPaper(VerifyArgs),
    /// Write an operational digraph in DOT format.
    ExportDot(DotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Builtin {
    Table1,
    Inversion,
    Distance,
    RandomTable,
    Weighted,
    Flowshop,
}

#[derive(Args, Debug)]
struct ObjectiveArgs {
    /// Objective document (JSON).
    #[arg(long, conflicts_with = "builtin")]
    objective: Option<PathBuf>,
    /// Built-in objective (default table1).
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    /// Permutation order.
    #[arg(long)]
    n: Option<usize>,
    /// Window size defining the `distance` built-in.
    #[arg(long, default_value_t = 3)]
    distance_k: usize,
    /// Target of the `distance` built-in (default identity).
    #[arg(long)]
    target: Option<String>,
    /// Largest value or job parameter of the random built-ins.
    #[arg(long, default_value_t = 9)]
    max_value: i64,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Target permutation (default identity).
    #[arg(long)]
    target: Option<String>,
    /// Use the reference table's row layout instead of lexicographic order.
    #[arg(long)]
    paper_order: bool,
}

#[derive(Args, Debug)]
struct LandscapeArgs {
    #[command(flatten)]
    objective: ObjectiveArgs,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// moves, strict or weak.
    #[arg(long, default_value = "strict")]
    mode: String,
}

#[derive(Args, Debug)]
struct DotArgs {
    #[command(flatten)]
    objective: ObjectiveArgs,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value = "strict")]
    mode: String,
    /// table (reference row numbers) or lex (lexicographic ranks).
    #[arg(long, default_value = "table")]
    numbering: String,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    objective: ObjectiveArgs,
    /// Strategy document (JSON); explicit flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// F, FA or FAB.
    #[arg(long)]
    kind: Option<String>,
    /// Fixed window size.
    #[arg(long, conflicts_with_all = ["k_min", "k_max"])]
    k: Option<usize>,
    /// Smallest window size of an adaptive schedule.
    #[arg(long)]
    k_min: Option<usize>,
    /// Largest window size of an adaptive schedule.
    #[arg(long)]
    k_max: Option<usize>,
    /// first, best or random.
    #[arg(long)]
    pivot: Option<String>,
    /// Start point; repeat for several lines.
    #[arg(long = "start")]
    start: Vec<String>,
    /// Number of random start points.
    #[arg(long, conflicts_with = "start")]
    starts: Option<usize>,
    #[arg(long)]
    step_limit: Option<usize>,
    #[arg(long)]
    aside_budget: Option<usize>,
    /// Value at or below which a point counts as optimal.
    #[arg(long)]
    lower_bound: Option<String>,
    /// Append the run record to this repository directory.
    #[arg(long)]
    repo: Option<PathBuf>,
    /// Write every step as one JSON line to this file.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Zero the timestamps so repeated runs compare byte for byte.
    #[arg(long)]
    comparable: bool,
}

#[derive(Args, Debug)]
struct ProbeArgs {
    #[command(flatten)]
    objective: ObjectiveArgs,
    #[arg(long, default_value_t = 2)]
    k_min: usize,
    /// Default min(n, 4).
    #[arg(long)]
    k_max: Option<usize>,
    /// Number of sampled points; all points when omitted.
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Args, Debug)]
struct PlanArgs {
    #[command(flatten)]
    probe: ProbeArgs,
    #[arg(long)]
    repo: Option<PathBuf>,
    #[arg(long)]
    comparable: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Replacement for the built-in reference table (a table objective of order 4).
    #[arg(long)]
    fixture: Option<PathBuf>,
}

/// Error with the flag it came from, when there is one.
struct Failure {
    err: Error,
    flag: Option<&'static str>,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure { err, flag: None }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

trait FlagContext<T> {
    fn flag(self, name: &'static str) -> CliResult<T>;
}

impl<T> FlagContext<T> for kinterchange::Result<T> {
    fn flag(self, name: &'static str) -> CliResult<T> {
        self.map_err(|err| Failure { err, flag: Some(name) })
    }
}

/// What a subcommand produced: a JSON document, its text rendering and
/// whether the request succeeded.
struct Report {
    json: Json,
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure { err, flag }) => {
            let code = err.code().name();
            match flag {
                Some(f) => eprintln!("error[{code}]: {f}: {err}"),
                None => eprintln!("error[{code}]: {err}"),
            }
            ExitCode::from(if err.is_usage() { 2 } else { 1 })
        }
    }
}

fn run(cli: &Cli) -> CliResult<bool> {
    let seed = cli.seed.unwrap_or(0);
    let (name, report) = match &cli.command {
        Command::Table(a) => ("table", cmd_table(a, seed)?),
        Command::Landscape(a) => ("landscape", cmd_landscape(a, seed)?),
        Command::Search(a) => ("search", cmd_search(a, cli.seed)?),
        Command::Probe(a) => ("probe", cmd_probe(a, seed)?),
        Command::Plan(a) => ("plan", cmd_plan(a, seed)?),
        Command::VerifyPaper(a) => ("verify-paper", cmd_verify(a, seed)?),
        Command::ExportDot(a) => return cmd_dot(a, seed, cli),
    };
    let mut json = report.json;
    if let Json::Object(map) = &mut json {
        if let Some(Json::Object(meta)) = map.get_mut("meta") {
            meta.insert("command".into(), json!(name));
            meta.insert("tool_version".into(), json!(kinterchange::VERSION));
        }
    }
    let format = cli
        .format
        .unwrap_or(if cli.out.is_some() { Format::Json } else { Format::Text });
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("json output") + "\n",
        Format::Text => report.text,
    };
    match &cli.out {
        Some(path) => {
            write_file(path, &body).flag("--out")?;
            println!("wrote {}", path.display());
        }
        None => print!("{body}"),
    }
    Ok(report.ok)
}

fn write_file(path: &Path, body: &str) -> kinterchange::Result<()> {
    fs::write(path, body).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_perm(s: &str, flag: &'static str) -> CliResult<Permutation> {
    s.parse::<Permutation>().flag(flag)
}

fn parse_mode(s: &str) -> CliResult<DigraphMode> {
    s.parse::<DigraphMode>().flag("--mode")
}

fn to_json<T: Serialize>(v: &T) -> Json {
    serde_json::to_value(v).expect("serializable")
}

/// Loads or builds the objective and settles the order `n`.
fn resolve_objective(a: &ObjectiveArgs, seed: u64) -> CliResult<(Objective, usize, Json)> {
    let f = if let Some(path) = &a.objective {
        Objective::load(path).flag("--objective")?
    } else {
        let builtin = a.builtin.unwrap_or(Builtin::Table1);
        let need_n = || {
            a.n.ok_or_else(|| Failure {
                err: Error::InvalidConfig("this objective needs an order".into()),
                flag: Some("--n"),
            })
        };
        match builtin {
            Builtin::Table1 => kinterchange::fixtures::table1_objective(),
            Builtin::Inversion => Objective::inversion(a.n),
            Builtin::Distance => {
                let n = need_n()?;
                let target = match &a.target {
                    Some(t) => parse_perm(t, "--target")?,
                    None => Permutation::identity(n).flag("--n")?,
                };
                if target.n() != n {
                    return Err(Failure {
                        err: Error::ArityMismatch {
                            expected: n,
                            got: target.n(),
                        },
                        flag: Some("--target"),
                    });
                }
                build_search_distance_objective(n, a.distance_k, &target).flag("--distance-k")?
            }
            Builtin::RandomTable => {
                let space = PermSpace::new(need_n()?).flag("--n")?;
                Objective::random_table(&space, a.max_value, seed)
            }
            Builtin::Weighted => {
                let jobs = random_weighted_jobs(need_n()?, a.max_value, seed);
                Objective::weighted_completion(jobs).flag("--max-value")?
            }
            Builtin::Flowshop => {
                let jobs = random_flowshop_jobs(need_n()?, a.max_value, seed);
                Objective::flowshop2(jobs).flag("--max-value")?
            }
        }
    };
    let n = match (a.n, f.arity()) {
        (Some(n), Some(m)) if n != m => {
            return Err(Failure {
                err: Error::ArityMismatch { expected: m, got: n },
                flag: Some("--n"),
            })
        }
        (Some(n), _) => n,
        (None, Some(m)) => m,
        (None, None) => {
            return Err(Failure {
                err: Error::InvalidConfig("order is not determined by the objective".into()),
                flag: Some("--n"),
            })
        }
    };
    if !(kinterchange::perm::MIN_ORDER..=kinterchange::perm::MAX_ORDER).contains(&n) {
        return Err(Failure {
            err: Error::OrderOutOfRange {
                n,
                min: kinterchange::perm::MIN_ORDER,
                max: kinterchange::perm::MAX_ORDER,
            },
            flag: Some("--n"),
        });
    }
    let meta = json!({
        "objective": to_json(&f.descriptor()),
        "n": n,
    });
    Ok((f, n, meta))
}

fn check_k(k: usize, n: usize, flag: &'static str) -> CliResult<()> {
    if k < 2 || k > n {
        return Err(Failure {
            err: Error::InvalidK { k, n },
            flag: Some(flag),
        });
    }
    Ok(())
}

fn merge(mut base: Json, extra: Json) -> Json {
    if let (Json::Object(b), Json::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn cmd_table(a: &TableArgs, seed: u64) -> CliResult<Report> {
    check_k(a.k, a.n, "--k")?;
    let target = match &a.target {
        Some(t) => parse_perm(t, "--target")?,
        None => Permutation::identity(a.n).flag("--n")?,
    };
    let f = build_search_distance_objective(a.n, a.k, &target).flag("--n")?;
    let space = PermSpace::new(a.n)?;
    let mut rows: Vec<(usize, Permutation, Value)> = space
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let row = if a.paper_order { table_row(&space, &p)? } else { i + 1 };
            let v = f.evaluate(&p)?;
            Ok((row, p, v))
        })
        .collect::<kinterchange::Result<_>>()?;
    rows.sort_by_key(|r| r.0);
    let mut text = format!(
        "# g_{} distance to {} (n={}, order={})\n",
        a.k,
        target.key(),
        a.n,
        if a.paper_order { "paper" } else { "lex" }
    );
    for (row, p, v) in &rows {
        text.push_str(&format!("{row:>3}  {}  {v}\n", p.key()));
    }
    let json = json!({
        "meta": {
            "n": a.n, "k": a.k, "target": target.key(), "paper_order": a.paper_order, "seed": seed,
        },
        "rows": rows.iter().map(|(r, p, v)| json!({"row": r, "permutation": p, "value": v})).collect::<Vec<_>>(),
    });
    Ok(Report { json, text, ok: true })
}

fn cmd_landscape(a: &LandscapeArgs, seed: u64) -> CliResult<Report> {
    let (f, n, meta) = resolve_objective(&a.objective, seed)?;
    check_k(a.k, n, "--k")?;
    let mode = parse_mode(&a.mode)?;
    let space = PermSpace::new(n).flag("--n")?;
    let r = analyze(&f, &space, a.k, mode)?;
    let keys = |v: &[Permutation]| v.iter().map(Permutation::key).collect::<Vec<_>>().join(" ");
    let text = format!(
        "objective {} n={} k={} mode={}\n\
         nodes {} arcs {}\n\
         optima {} (value {})\n\
         reach {}/{} = {}\n\
         reach set {}\n\
         local optima {} : {}\n\
         levels {}\n\
         property1 {} property2_bound {} (longest path {} <= {})\n\
         improving_everywhere {} plateau_escape_everywhere {} nesting {}\n",
        r.objective.id,
        n,
        a.k,
        mode,
        r.node_count,
        r.arc_count,
        keys(&r.global_optima),
        r.optimum_value,
        r.reach_count,
        r.node_count,
        r.reach_fraction_exact,
        keys(&r.reach_set),
        r.local_optima.len(),
        keys(&r.local_optima),
        r.level_count,
        r.property1,
        r.property2_bound_holds,
        r.max_shortest_path_to_optimum,
        r.path_bound,
        r.improving_everywhere,
        r.plateau_escape_everywhere,
        r.nesting_verified,
    );
    let json = json!({
        "meta": merge(meta, json!({"k": a.k, "mode": mode, "seed": seed})),
        "report": to_json(&r),
    });
    Ok(Report { json, text, ok: true })
}

fn cmd_dot(a: &DotArgs, seed: u64, cli: &Cli) -> CliResult<bool> {
    let (f, n, meta) = resolve_objective(&a.objective, seed)?;
    check_k(a.k, n, "--k")?;
    let mode = parse_mode(&a.mode)?;
    let numbering: NodeNumbering = a.numbering.parse().flag("--numbering")?;
    let space = PermSpace::new(n).flag("--n")?;
    let obj = (mode != DigraphMode::Moves).then_some(&f);
    let d = build_digraph(&space, obj, a.k, mode)?;
    let dot = to_dot(&d, numbering)?;
    let format = cli.format.unwrap_or(Format::Text);
    match &cli.out {
        Some(path) => {
            write_file(path, &dot).flag("--out")?;
            let summary = json!({
                "meta": merge(meta, json!({
                    "command": "export-dot", "tool_version": kinterchange::VERSION,
                    "k": a.k, "mode": mode, "numbering": numbering, "seed": seed,
                })),
                "path": path,
                "nodes": d.node_count(),
                "arcs": d.arc_count(),
            });
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&summary).expect("json")),
                Format::Text => println!(
                    "wrote {} ({} nodes, {} arcs)",
                    path.display(),
                    d.node_count(),
                    d.arc_count()
                ),
            }
        }
        None => match format {
            Format::Json => {
                let doc = json!({
                    "meta": merge(meta, json!({
                        "command": "export-dot", "tool_version": kinterchange::VERSION,
                        "k": a.k, "mode": mode, "numbering": numbering, "seed": seed,
                    })),
                    "dot": dot,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            }
            Format::Text => print!("{dot}"),
        },
    }
    Ok(true)
}

fn search_config(a: &SearchArgs, n: usize, seed: Option<u64>) -> CliResult<StrategyConfig> {
    let mut cfg = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|source| Error::Io {
                    path: path.clone(),
                    source,
                })
                .flag("--config")?;
            serde_json::from_str::<StrategyConfig>(&text)
                .map_err(|e| Error::InvalidConfig(e.to_string()))
                .flag("--config")?
        }
        None => StrategyConfig::new(TrajectoryKind::F, KSchedule::Fixed { k: 2 }),
    };
    if let Some(kind) = &a.kind {
        cfg.kind = kind.parse().flag("--kind")?;
    }
    if let Some(k) = a.k {
        check_k(k, n, "--k")?;
        cfg.schedule = KSchedule::Fixed { k };
    }
    if a.k_min.is_some() || a.k_max.is_some() {
        let k_min = a.k_min.unwrap_or(2);
        let k_max = a.k_max.unwrap_or(n);
        check_k(k_min, n, "--k-min")?;
        check_k(k_max, n, "--k-max")?;
        if k_max < k_min {
            return Err(Failure {
                err: Error::InvalidK { k: k_max, n },
                flag: Some("--k-max"),
            });
        }
        cfg.schedule = KSchedule::Adaptive { k_min, k_max };
    }
    if let Some(p) = &a.pivot {
        cfg.pivot = p.parse::<PivotRule>().flag("--pivot")?;
    }
    if !a.start.is_empty() {
        let starts = a
            .start
            .iter()
            .map(|s| parse_perm(s, "--start"))
            .collect::<CliResult<Vec<_>>>()?;
        cfg.starts = Starts::Explicit(starts);
    } else if let Some(count) = a.starts {
        cfg.starts = Starts::Random { count };
    }
    if let Some(s) = a.step_limit {
        cfg.step_limit = s;
    }
    if let Some(b) = a.aside_budget {
        cfg.aside_budget = b;
    }
    if let Some(lb) = &a.lower_bound {
        cfg.lower_bound = Some(lb.parse::<Value>().flag("--lower-bound")?);
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    cfg.validate(n).map_err(|err| {
        let flag = match err {
            Error::InvalidK { .. } => "--k",
            Error::ArityMismatch { .. } => "--start",
            _ => "--config",
        };
        Failure { err, flag: Some(flag) }
    })?;
    Ok(cfg)
}

fn record_text(rec: &RunRecord) -> String {
    let c = &rec.config;
    let mut text = format!(
        "# kind={} schedule={} pivot={} seed={} step_limit={} aside_budget={}\n",
        c.kind, c.schedule, c.pivot, c.seed, c.step_limit, c.aside_budget
    );
    for t in &rec.trajectories {
        text.push_str(&format!(
            "{} -> {}  value {}  {:?}  steps {} (forward {}, aside {}, backward {})\n",
            t.start.key(),
            t.final_point.key(),
            t.final_value,
            t.status,
            t.steps,
            t.forward,
            t.aside,
            t.backward
        ));
    }
    text.push_str(&format!(
        "outcome {:?}: {}/{} reached an optimum, best {} at {}\n",
        rec.outcome.status,
        rec.outcome.success_count,
        rec.outcome.runs,
        rec.outcome.best_value,
        rec.outcome.best_point.key()
    ));
    text
}

fn cmd_search(a: &SearchArgs, seed: Option<u64>) -> CliResult<Report> {
    let (f, n, meta) = resolve_objective(&a.objective, seed.unwrap_or(0))?;
    let cfg = search_config(a, n, seed)?;
    let mut rec = match &a.repo {
        Some(dir) => {
            let repo = RunRepository::open(dir).flag("--repo")?;
            execute_plan(&f, &cfg, &repo).flag("--repo")?
        }
        None => run_plan(&f, &cfg)?,
    };
    if let Some(path) = &a.log {
        let mut lines = String::new();
        for (i, t) in rec.replay()?.iter().enumerate() {
            for (j, s) in t.steps.iter().enumerate() {
                let line = json!({"trajectory": i, "step": j + 1, "record": to_json(s)});
                lines.push_str(&serde_json::to_string(&line).expect("json"));
                lines.push('\n');
            }
        }
        write_file(path, &lines).flag("--log")?;
    }
    if a.comparable {
        rec = rec.comparable();
    }
    let text = record_text(&rec);
    let json = json!({
        "meta": merge(meta, json!({"config": to_json(&cfg), "seed": cfg.seed})),
        "record": to_json(&rec),
    });
    Ok(Report { json, text, ok: true })
}

fn probe(a: &ProbeArgs, seed: u64) -> CliResult<(Objective, ProbeReport, Json)> {
    let (f, n, meta) = resolve_objective(&a.objective, seed)?;
    let k_max = a.k_max.unwrap_or(n.min(4));
    check_k(a.k_min, n, "--k-min")?;
    check_k(k_max, n, "--k-max")?;
    if k_max < a.k_min {
        return Err(Failure {
            err: Error::InvalidK { k: k_max, n },
            flag: Some("--k-max"),
        });
    }
    let samples = match a.samples {
        Some(c) => Samples::Count(c),
        None => Samples::Exhaustive,
    };
    let report = probe_instance(&f, n, a.k_min..=k_max, samples, seed).flag("--samples")?;
    let meta = merge(
        meta,
        json!({"k_min": a.k_min, "k_max": k_max, "samples": to_json(&samples), "seed": seed}),
    );
    Ok((f, report, meta))
}

fn probe_text(p: &ProbeReport, cfg: &StrategyConfig) -> String {
    let mut text = format!(
        "objective {} n={} samples={}{} values {}..{}\n",
        p.objective.id,
        p.n,
        p.samples,
        if p.exhaustive { " (exhaustive)" } else { "" },
        p.value_min,
        p.value_max
    );
    for q in &p.per_k {
        text.push_str(&format!(
            "k={} local_optima={:.4} strict_local={:.4} plateau={:.4} improving_degree={:.3}\n",
            q.k, q.local_optimum_fraction, q.strict_local_fraction, q.plateau_rate, q.mean_improving_degree
        ));
    }
    text.push_str(&format!(
        "strategy {} {} pivot={} starts={}\n",
        cfg.kind,
        cfg.schedule,
        cfg.pivot,
        match &cfg.starts {
            Starts::Random { count } => count.to_string(),
            Starts::Explicit(v) => v.len().to_string(),
        }
    ));
    text
}

fn cmd_probe(a: &ProbeArgs, seed: u64) -> CliResult<Report> {
    let (_, report, meta) = probe(a, seed)?;
    let cfg = select_strategy(&report);
    let text = probe_text(&report, &cfg);
    let json = json!({"meta": meta, "probe": to_json(&report), "strategy": to_json(&cfg)});
    Ok(Report { json, text, ok: true })
}

fn cmd_plan(a: &PlanArgs, seed: u64) -> CliResult<Report> {
    let (f, report, meta) = probe(&a.probe, seed)?;
    let cfg = select_strategy(&report);
    let mut rec = match &a.repo {
        Some(dir) => {
            let repo = RunRepository::open(dir).flag("--repo")?;
            execute_plan(&f, &cfg, &repo).flag("--repo")?
        }
        None => run_plan(&f, &cfg)?,
    };
    if a.comparable {
        rec = rec.comparable();
    }
    let text = probe_text(&report, &cfg) + &record_text(&rec);
    let json = json!({
        "meta": meta,
        "probe": to_json(&report),
        "strategy": to_json(&cfg),
        "record": to_json(&rec),
    });
    Ok(Report { json, text, ok: true })
}

fn cmd_verify(a: &VerifyArgs, seed: u64) -> CliResult<Report> {
    let rows: Vec<(String, i64)> = match &a.fixture {
        None => TABLE1.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        Some(path) => {
            let f = Objective::load(path).flag("--fixture")?;
            f.check_arity(4).flag("--fixture")?;
            PermSpace::new(4)?
                .iter()
                .map(|p| {
                    let v = f.evaluate(&p)?;
                    if !v.is_integer() {
                        return Err(Error::InvalidParams(format!("non-integer value {v} for {}", p.key())));
                    }
                    Ok((p.key(), v.numer()))
                })
                .collect::<kinterchange::Result<_>>()
                .flag("--fixture")?
        }
    };
    let borrowed: Vec<(&str, i64)> = rows.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let r = verify_paper_with(&borrowed);
    let mut text = String::new();
    for c in &r.checks {
        if c.passed {
            text.push_str(&format!("PASS {}: {}\n", c.name, c.computed));
        } else {
            text.push_str(&format!(
                "FAIL {}: expected {}, computed {}\n",
                c.name, c.expected, c.computed
            ));
        }
    }
    let passed = r.checks.iter().filter(|c| c.passed).count();
    text.push_str(&format!("{passed}/{} checks passed\n", r.checks.len()));
    let ok = r.passed();
    let json = json!({
        "meta": {"seed": seed, "fixture": a.fixture},
        "ok": ok,
        "report": to_json(&r),
    });
    Ok(Report { json, text, ok })
}
