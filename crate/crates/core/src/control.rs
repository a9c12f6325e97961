//! Instance probing, strategy selection, plan execution and the persisted
//! run log.
//!
//! The pipeline is `probe_instance` -> `select_strategy` -> `execute_plan`.
//! Every executed plan becomes a [`RunRecord`] holding the objective, the
//! resolved starts and all seeds, so a run can be replayed exactly.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fixtures::{self, TABLE1};
use crate::landscape::{build_digraph, compute_levels, reachability_to_optima, verify_nesting, DigraphMode};
use crate::objective::{build_search_distance_objective, Objective, ObjectiveDescriptor, ObjectiveDoc, Value};
use crate::perm::{KNeighborhood, PermSpace, Permutation};
use crate::search::{
    derive_seed, run_multistart, run_trajectory_with, KSchedule, OptimumTest, SearchTrajectory, Starts, Status,
    StrategyConfig, TrajectoryKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Samples {
    Count(usize),
    Exhaustive,
}

/// Point-type statistics at one window size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KProbe {
    pub k: usize,
    pub local_optimum_count: usize,
    pub local_optimum_fraction: f64,
    /// Local optima whose value exceeds the best sampled value.
    pub strict_local_count: usize,
    pub strict_local_fraction: f64,
    pub mean_improving_degree: f64,
    /// Points with an improving neighbor.
    pub improvement_rate: f64,
    /// Points with no improving neighbor but at least one equal one.
    pub plateau_rate: f64,
    /// The local optima themselves, listed only in exhaustive mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_optima: Option<Vec<Permutation>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub objective: ObjectiveDescriptor,
    pub n: usize,
    pub samples: usize,
    pub exhaustive: bool,
    pub seed: u64,
    pub value_min: Value,
    pub value_max: Value,
    pub per_k: Vec<KProbe>,
}

impl ProbeReport {
    pub fn at(&self, k: usize) -> Option<&KProbe> {
        self.per_k.iter().find(|p| p.k == k)
    }
}

struct PointStats {
    value: Value,
    improving: usize,
    equal: usize,
}

/// Samples points (or takes all of them) and classifies each as improvable,
/// plateau or local optimum for every `k` in `k_range`.
pub fn probe_instance(
    f: &Objective,
    n: usize,
    k_range: RangeInclusive<usize>,
    samples: Samples,
    seed: u64,
) -> Result<ProbeReport> {
    f.check_arity(n)?;
    let (k_lo, k_hi) = (*k_range.start(), *k_range.end());
    if k_lo < 2 || k_lo > n {
        return Err(Error::InvalidK { k: k_lo, n });
    }
    if k_hi < k_lo || k_hi > n {
        return Err(Error::InvalidK { k: k_hi, n });
    }
    let (points, exhaustive) = match samples {
        Samples::Exhaustive => {
            let space = PermSpace::new(n)?;
            (space.iter().collect::<Vec<_>>(), true)
        }
        Samples::Count(0) => return Err(Error::InvalidConfig("probe needs at least one sample".into())),
        Samples::Count(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pts = (0..count)
                .map(|_| {
                    let mut seq: Vec<usize> = (1..=n).collect();
                    for i in (1..n).rev() {
                        seq.swap(i, rng.gen_range(0..=i));
                    }
                    Permutation::new(&seq)
                })
                .collect::<Result<Vec<_>>>()?;
            (pts, false)
        }
    };
    let values = points.par_iter().map(|p| f.evaluate(p)).collect::<Result<Vec<_>>>()?;
    let value_min = *values.iter().min().expect("nonempty sample");
    let value_max = *values.iter().max().expect("nonempty sample");
    let total = points.len() as f64;

    let mut per_k = Vec::new();
    for k in k_lo..=k_hi {
        let hood = KNeighborhood::new(n, k)?;
        let stats = points
            .par_iter()
            .zip(values.par_iter())
            .map(|(p, &value)| {
                let (mut improving, mut equal) = (0, 0);
                for x in hood.neighbors(p)? {
                    match f.evaluate(&x)?.cmp(&value) {
                        std::cmp::Ordering::Less => improving += 1,
                        std::cmp::Ordering::Equal => equal += 1,
                        std::cmp::Ordering::Greater => {}
                    }
                }
                Ok(PointStats {
                    value,
                    improving,
                    equal,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let local: Vec<usize> = (0..stats.len()).filter(|&i| stats[i].improving == 0).collect();
        let strict = local.iter().filter(|&&i| stats[i].value > value_min).count();
        let plateau = stats.iter().filter(|s| s.improving == 0 && s.equal > 0).count();
        let improving_total: usize = stats.iter().map(|s| s.improving).sum();
        let local_optima = exhaustive.then(|| {
            let mut v: Vec<Permutation> = local.iter().map(|&i| points[i].clone()).collect();
            v.sort();
            v
        });
        per_k.push(KProbe {
            k,
            local_optimum_count: local.len(),
            local_optimum_fraction: local.len() as f64 / total,
            strict_local_count: strict,
            strict_local_fraction: strict as f64 / total,
            mean_improving_degree: improving_total as f64 / total,
            improvement_rate: (stats.len() - local.len()) as f64 / total,
            plateau_rate: plateau as f64 / total,
            local_optima,
        });
    }
    Ok(ProbeReport {
        objective: f.descriptor(),
        n,
        samples: points.len(),
        exhaustive,
        seed,
        value_min,
        value_max,
        per_k,
    })
}

/// Thresholds of the strategy rule table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelectionRules {
    pub plateau_threshold: f64,
    pub local_threshold: f64,
    /// Extra starts per unit of strict local-optimum fraction.
    pub start_scale: f64,
}

impl Default for SelectionRules {
    fn default() -> Self {
        SelectionRules {
            plateau_threshold: 0.05,
            local_threshold: 0.05,
            start_scale: 8.0,
        }
    }
}

/// [`select_strategy_with`] under the default thresholds.
pub fn select_strategy(p: &ProbeReport) -> StrategyConfig {
    select_strategy_with(p, &SelectionRules::default())
}

/// Rule table, evaluated on the smallest probed `k` (`k_min`):
///
/// | condition                                   | choice                          |
/// |---------------------------------------------|---------------------------------|
/// | all sampled values equal                    | F, fixed `k_min`, 1 start       |
/// | plateau rate at `k_min` > plateau threshold | kind FA (otherwise F)           |
/// | strict local fraction at `k_min` > threshold | adaptive(`k_min`, `k_hi`)      |
/// | otherwise                                   | fixed `k_min`                   |
///
/// `k_hi` is the smallest probed `k` whose strict local fraction is within
/// the threshold, or the largest probed `k`. The start count is
/// `1 + ceil(strict_fraction * start_scale)`.
pub fn select_strategy_with(p: &ProbeReport, rules: &SelectionRules) -> StrategyConfig {
    let first = &p.per_k[0];
    let k_min = first.k;
    if p.value_min == p.value_max {
        return StrategyConfig::new(TrajectoryKind::F, KSchedule::Fixed { k: k_min })
            .with_starts(Starts::Random { count: 1 })
            .with_seed(p.seed);
    }
    let kind = if first.plateau_rate > rules.plateau_threshold {
        TrajectoryKind::FA
    } else {
        TrajectoryKind::F
    };
    let schedule = if first.strict_local_fraction > rules.local_threshold {
        let k_hi = p
            .per_k
            .iter()
            .skip(1)
            .find(|q| q.strict_local_fraction <= rules.local_threshold)
            .or(p.per_k.last())
            .map(|q| q.k)
            .expect("nonempty probe");
        if k_hi > k_min {
            KSchedule::Adaptive { k_min, k_max: k_hi }
        } else {
            KSchedule::Fixed { k: k_min }
        }
    } else {
        KSchedule::Fixed { k: k_min }
    };
    let count = 1 + (first.strict_local_fraction * rules.start_scale).ceil() as usize;
    StrategyConfig::new(kind, schedule)
        .with_starts(Starts::Random { count })
        .with_seed(p.seed)
}

/// Per-trajectory entry of a run record; `fingerprint` is the SHA-256 of
/// the full step log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrajectorySummary {
    pub start: Permutation,
    pub seed: u64,
    pub status: Status,
    pub final_point: Permutation,
    pub final_value: Value,
    pub steps: usize,
    pub forward: usize,
    pub aside: usize,
    pub backward: usize,
    pub fingerprint: String,
}

pub fn trajectory_fingerprint(t: &SearchTrajectory) -> String {
    let bytes = serde_json::to_vec(&t.steps).expect("steps serialize");
    let mut h = Sha256::new();
    h.update(t.start.key().as_bytes());
    h.update(&bytes);
    hex::encode(h.finalize())
}

impl From<&SearchTrajectory> for TrajectorySummary {
    fn from(t: &SearchTrajectory) -> Self {
        TrajectorySummary {
            start: t.start.clone(),
            seed: t.seed,
            status: t.status,
            final_point: t.final_point.clone(),
            final_value: t.final_value,
            steps: t.steps.len(),
            forward: t.forward_count,
            aside: t.aside_count,
            backward: t.backward_count,
            fingerprint: trajectory_fingerprint(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub status: Status,
    pub runs: usize,
    pub success_count: usize,
    pub best_value: Value,
    pub best_point: Permutation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run_id: String,
    pub tool_version: String,
    pub objective: ObjectiveDescriptor,
    pub objective_doc: ObjectiveDoc,
    pub config: StrategyConfig,
    pub starts: Vec<Permutation>,
    pub trajectories: Vec<TrajectorySummary>,
    pub outcome: Outcome,
    /// Milliseconds since the Unix epoch.
    pub started_at: u64,
    pub finished_at: u64,
}

fn now_millis() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

impl RunRecord {
    /// Copy with timestamps cleared, for byte-level comparison of runs.
    pub fn comparable(&self) -> RunRecord {
        RunRecord {
            started_at: 0,
            finished_at: 0,
            ..self.clone()
        }
    }

    /// Re-runs every trajectory from the recorded objective, config, starts
    /// and seeds.
    pub fn replay(&self) -> Result<Vec<SearchTrajectory>> {
        let f = Objective::from_doc(self.objective_doc.clone())?;
        let optimum = OptimumTest::for_run(&f, &self.config);
        self.starts
            .iter()
            .zip(&self.trajectories)
            .map(|(s, t)| run_trajectory_with(&f, s, &self.config, t.seed, &optimum))
            .collect()
    }

    /// True iff replaying reproduces every recorded fingerprint.
    pub fn verify_replay(&self) -> Result<bool> {
        let replayed = self.replay()?;
        Ok(replayed.len() == self.trajectories.len()
            && replayed
                .iter()
                .zip(&self.trajectories)
                .all(|(r, t)| trajectory_fingerprint(r) == t.fingerprint && r.seed == t.seed))
    }
}

fn overall_status(ts: &[SearchTrajectory]) -> Status {
    let any = |s: Status| ts.iter().any(|t| t.status == s);
    if any(Status::Optimum) {
        Status::Optimum
    } else if any(Status::StepLimit) {
        Status::StepLimit
    } else if any(Status::AsideExhausted) {
        Status::AsideExhausted
    } else {
        Status::LocalOptimum
    }
}

/// Runs `cfg` on `f` and assembles the record without persisting it.
pub fn run_plan(f: &Objective, cfg: &StrategyConfig) -> Result<RunRecord> {
    let started_at = now_millis();
    let n = f
        .arity()
        .or_else(|| match &cfg.starts {
            Starts::Explicit(v) => v.first().map(Permutation::n),
            Starts::Random { .. } => None,
        })
        .ok_or_else(|| Error::InvalidConfig("cannot infer the order for random starts".into()))?;
    cfg.validate(n)?;
    let starts = cfg.resolve_starts(n)?;
    let resolved = cfg.clone().with_starts(Starts::Explicit(starts.clone()));
    let result = run_multistart(f, &resolved)?;
    // Explicit starts keep the derived per-line seeds of the original config.
    debug_assert!(result
        .trajectories
        .iter()
        .enumerate()
        .all(|(i, t)| t.seed == derive_seed(cfg.seed, i)));
    let trajectories: Vec<TrajectorySummary> = result.trajectories.iter().map(Into::into).collect();
    let mut h = Sha256::new();
    for t in &trajectories {
        h.update(t.fingerprint.as_bytes());
    }
    h.update(f.id().as_bytes());
    h.update(serde_json::to_vec(cfg).expect("config serializes"));
    let run_id = hex::encode(&h.finalize()[..8]);
    Ok(RunRecord {
        run_id,
        tool_version: crate::VERSION.to_string(),
        objective: f.descriptor(),
        objective_doc: f.to_doc(),
        config: cfg.clone(),
        starts,
        outcome: Outcome {
            status: overall_status(&result.trajectories),
            runs: result.trajectories.len(),
            success_count: result.success_count,
            best_value: result.best_value,
            best_point: result.best_point,
        },
        trajectories,
        started_at,
        finished_at: now_millis(),
    })
}

/// Runs `cfg` on `f` and appends the record to `repo`.
pub fn execute_plan(f: &Objective, cfg: &StrategyConfig, repo: &RunRepository) -> Result<RunRecord> {
    let record = run_plan(f, cfg)?;
    repo.append(&record)?;
    Ok(record)
}

/// Append-only directory of run records plus `registry.json`, which maps
/// objective ids to their descriptors.
#[derive(Clone, Debug)]
pub struct RunRepository {
    root: PathBuf,
}

const REGISTRY: &str = "registry.json";

impl RunRepository {
    pub fn open(root: impl AsRef<Path>) -> Result<Self> {
        let root = root.as_ref().to_path_buf();
        fs::create_dir_all(&root).map_err(|e| Error::io(&root, e))?;
        Ok(RunRepository { root })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn run_files(&self) -> Result<Vec<PathBuf>> {
        let mut files: Vec<PathBuf> = fs::read_dir(&self.root)
            .map_err(|e| Error::io(&self.root, e))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|s| s.to_str())
                    .is_some_and(|s| s.starts_with("run-") && s.ends_with(".json"))
            })
            .collect();
        files.sort();
        Ok(files)
    }

    /// Writes `record` as a new file; existing files are never touched.
    pub fn append(&self, record: &RunRecord) -> Result<PathBuf> {
        let seq = self.run_files()?.len();
        let path = self.root.join(format!("run-{seq:06}-{}.json", record.run_id));
        let mut file = OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&path)
            .map_err(|e| Error::io(&path, e))?;
        let text = serde_json::to_string_pretty(record).expect("record serializes");
        file.write_all(text.as_bytes()).map_err(|e| Error::io(&path, e))?;
        file.write_all(b"\n").map_err(|e| Error::io(&path, e))?;
        self.register(&record.objective)?;
        Ok(path)
    }

    pub fn registry(&self) -> Result<BTreeMap<String, ObjectiveDescriptor>> {
        let path = self.root.join(REGISTRY);
        match fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(BTreeMap::new()),
            Err(e) => Err(Error::io(&path, e)),
        }
    }

    pub fn register(&self, d: &ObjectiveDescriptor) -> Result<()> {
        let mut reg = self.registry()?;
        if reg.get(&d.id) == Some(d) {
            return Ok(());
        }
        reg.insert(d.id.clone(), d.clone());
        let path = self.root.join(REGISTRY);
        let tmp = self.root.join(format!("{REGISTRY}.tmp"));
        let text = serde_json::to_string_pretty(&reg).expect("registry serializes");
        fs::write(&tmp, text).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))
    }

    pub fn records(&self) -> Result<Vec<RunRecord>> {
        self.run_files()?
            .into_iter()
            .map(|p| {
                let text = fs::read_to_string(&p).map_err(|e| Error::io(&p, e))?;
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn check(name: &str, expected: impl ToString, computed: impl ToString) -> CheckResult {
    let (expected, computed) = (expected.to_string(), computed.to_string());
    CheckResult {
        name: name.to_string(),
        passed: expected == computed,
        expected,
        computed,
    }
}

fn failed(name: &str, expected: impl ToString, err: &Error) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: false,
        expected: expected.to_string(),
        computed: format!("error[{}]: {err}", err.code().name()),
    }
}

fn keys(ps: &[Permutation]) -> String {
    let mut v: Vec<String> = ps.iter().map(Permutation::key).collect();
    v.sort();
    v.join(" ")
}

/// Runs the structural checks against the built-in reference table.
pub fn verify_paper() -> VerificationReport {
    verify_paper_with(&TABLE1)
}

/// Same checks with the reference table replaced by `fixture`; only the
/// first check reads it, every other check recomputes its own values.
pub fn verify_paper_with(fixture: &[(&str, i64)]) -> VerificationReport {
    type Check = fn(&Objective, &[(&str, i64)]) -> Result<CheckResult>;
    let list: [(&str, &str, Check); 8] = [
        ("table1", "24 matching values", check_table),
        (
            "counterexample_k2",
            "local optimum with neighbor values 2 2 3",
            check_counterexample,
        ),
        ("k3_two_steps", "1234 in 2 forward steps", check_k3_two_steps),
        ("fig1_strict_k2_reach", "1234 1243 1324 2134 2143", check_fig1),
        ("fig2_weak_k2_reach", "24/24", check_fig2),
        ("fig3_strict_k3_reach", "24/24", check_fig3),
        ("levels", "k2=7 k3=4 k4=2; g2=inversions for n<=6", check_levels),
        ("nesting", "holds for n=4 and n=5", check_nesting),
    ];
    let g3 = build_search_distance_objective(4, 3, &Permutation::identity(4).expect("order 4"));
    let checks = list
        .iter()
        .map(|(name, expected, run)| match &g3 {
            Ok(g3) => run(g3, fixture).unwrap_or_else(|e| failed(name, expected, &e)),
            Err(e) => failed(name, expected, e),
        })
        .collect();
    VerificationReport {
        tool_version: crate::VERSION.to_string(),
        checks,
    }
}

fn check_table(g3: &Objective, fixture: &[(&str, i64)]) -> Result<CheckResult> {
    let fixed = fixtures::table_objective_from_rows(fixture)?;
    let space = PermSpace::new(4)?;
    let mismatches: Vec<String> = space
        .iter()
        .map(|p| Ok((fixed.evaluate(&p)?, g3.evaluate(&p)?, p)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(a, b, _)| a != b)
        .map(|(a, b, p)| format!("{}: table {a} computed {b}", p.key()))
        .collect();
    let computed = if mismatches.is_empty() {
        "24 matching values".to_string()
    } else {
        mismatches.join("; ")
    };
    Ok(check("table1", "24 matching values", computed))
}

fn check_counterexample(g3: &Objective, _: &[(&str, i64)]) -> Result<CheckResult> {
    let s: Permutation = "4312".parse()?;
    let cfg = StrategyConfig::new(TrajectoryKind::F, KSchedule::Fixed { k: 2 });
    let t = run_trajectory_with(g3, &s, &cfg, 0, &OptimumTest::for_run(g3, &cfg))?;
    let mut vals = KNeighborhood::new(4, 2)?
        .neighbors(&s)?
        .iter()
        .map(|x| g3.evaluate(x))
        .collect::<Result<Vec<_>>>()?;
    vals.sort();
    let vals: Vec<String> = vals.iter().map(Value::to_string).collect();
    let computed = if t.status == Status::LocalOptimum && t.final_point == s {
        format!("local optimum with neighbor values {}", vals.join(" "))
    } else {
        format!("{:?} at {}", t.status, t.final_point.key())
    };
    Ok(check(
        "counterexample_k2",
        "local optimum with neighbor values 2 2 3",
        computed,
    ))
}

fn check_k3_two_steps(g3: &Objective, _: &[(&str, i64)]) -> Result<CheckResult> {
    let s: Permutation = "4312".parse()?;
    let cfg = StrategyConfig::new(TrajectoryKind::F, KSchedule::Fixed { k: 3 });
    let t = run_trajectory_with(g3, &s, &cfg, 0, &OptimumTest::for_run(g3, &cfg))?;
    Ok(check(
        "k3_two_steps",
        "1234 in 2 forward steps",
        format!("{} in {} forward steps", t.final_point.key(), t.forward_count),
    ))
}

fn reach(g3: &Objective, k: usize, mode: DigraphMode) -> Result<Vec<Permutation>> {
    let space = PermSpace::new(4)?;
    let d = build_digraph(&space, Some(g3), k, mode)?;
    reachability_to_optima(&d, &[Permutation::identity(4)?])
}

fn check_fig1(g3: &Objective, _: &[(&str, i64)]) -> Result<CheckResult> {
    let r = reach(g3, 2, DigraphMode::Strict)?;
    Ok(check("fig1_strict_k2_reach", "1234 1243 1324 2134 2143", keys(&r)))
}

fn check_fig2(g3: &Objective, _: &[(&str, i64)]) -> Result<CheckResult> {
    let r = reach(g3, 2, DigraphMode::Weak)?;
    Ok(check("fig2_weak_k2_reach", "24/24", format!("{}/24", r.len())))
}

fn check_fig3(g3: &Objective, _: &[(&str, i64)]) -> Result<CheckResult> {
    let r = reach(g3, 3, DigraphMode::Strict)?;
    Ok(check("fig3_strict_k3_reach", "24/24", format!("{}/24", r.len())))
}

fn check_levels(_: &Objective, _: &[(&str, i64)]) -> Result<CheckResult> {
    let space = PermSpace::new(4)?;
    let id = Permutation::identity(4)?;
    let counts = (2..=4)
        .map(|k| Ok(format!("k{k}={}", compute_levels(&space, k, &id)?.level_count())))
        .collect::<Result<Vec<_>>>()?;
    let mut bad = Vec::new();
    for n in 2..=6 {
        let space = PermSpace::new(n)?;
        let g2 = compute_levels(&space, 2, &Permutation::identity(n)?)?;
        let ok = space
            .iter()
            .zip(&g2.distances)
            .all(|(p, &d)| d as usize == p.inversion_count());
        if !ok {
            bad.push(n.to_string());
        }
    }
    let eq = if bad.is_empty() {
        "g2=inversions for n<=6".to_string()
    } else {
        format!("g2 differs from inversions for n={}", bad.join(","))
    };
    Ok(check(
        "levels",
        "k2=7 k3=4 k4=2; g2=inversions for n<=6",
        format!("{}; {eq}", counts.join(" ")),
    ))
}

fn check_nesting(_: &Objective, _: &[(&str, i64)]) -> Result<CheckResult> {
    let mut failing = Vec::new();
    for n in [4, 5] {
        let space = PermSpace::new(n)?;
        let f = Objective::random_table(&space, 3, n as u64);
        if !verify_nesting(&space, n, Some(&f))?.holds {
            failing.push(n.to_string());
        }
    }
    let computed = if failing.is_empty() {
        "holds for n=4 and n=5".to_string()
    } else {
        format!("fails for n={}", failing.join(","))
    };
    Ok(check("nesting", "holds for n=4 and n=5", computed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::table1_objective;
    use crate::landscape::enumerate_local_optima;

    fn exhaustive_probe(f: &Objective, n: usize, ks: RangeInclusive<usize>) -> ProbeReport {
        probe_instance(f, n, ks, Samples::Exhaustive, 0).unwrap()
    }

    #[test]
    fn table1_probe_fractions() {
        let f = table1_objective();
        let p = exhaustive_probe(&f, 4, 2..=4);
        assert!(p.exhaustive);
        assert_eq!(p.samples, 24);
        let k2 = p.at(2).unwrap();
        assert_eq!(k2.local_optimum_count, 13);
        assert!(k2.local_optima.as_ref().unwrap().contains(&"4312".parse().unwrap()));
        assert_eq!(p.at(3).unwrap().local_optimum_count, 1);
        assert!((p.at(3).unwrap().local_optimum_fraction - 1.0 / 24.0).abs() < 1e-12);
        assert_eq!(p.at(4).unwrap().local_optimum_count, 1);
    }

    #[test]
    fn exhaustive_probe_matches_landscape() {
        let space = PermSpace::new(5).unwrap();
        let f = Objective::random_table(&space, 4, 9);
        let p = exhaustive_probe(&f, 5, 2..=5);
        for q in &p.per_k {
            assert_eq!(
                q.local_optima.as_deref().unwrap(),
                enumerate_local_optima(&f, &space, q.k).unwrap()
            );
            for x in [
                q.local_optimum_fraction,
                q.plateau_rate,
                q.improvement_rate,
                q.strict_local_fraction,
            ] {
                assert!((0.0..=1.0).contains(&x));
            }
        }
    }

    #[test]
    fn sampled_probe_is_deterministic() {
        let f = Objective::inversion(Some(8));
        let a = probe_instance(&f, 8, 2..=3, Samples::Count(50), 7).unwrap();
        let b = probe_instance(&f, 8, 2..=3, Samples::Count(50), 7).unwrap();
        assert_eq!(a, b);
        assert!(!a.exhaustive);
        assert!(a.at(2).unwrap().local_optima.is_none());
    }

    #[test]
    fn probe_errors() {
        let f = Objective::inversion(None);
        assert!(matches!(
            probe_instance(&f, 10, 2..=3, Samples::Exhaustive, 0),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            probe_instance(&f, 4, 1..=3, Samples::Exhaustive, 0),
            Err(Error::InvalidK { .. })
        ));
        assert!(matches!(
            probe_instance(&f, 4, 2..=5, Samples::Exhaustive, 0),
            Err(Error::InvalidK { .. })
        ));
    }

    #[test]
    fn strategy_rules() {
        let p = exhaustive_probe(&table1_objective(), 4, 2..=4);
        let s = select_strategy(&p);
        assert_eq!(s.kind, TrajectoryKind::FA);
        assert_eq!(s.schedule, KSchedule::Adaptive { k_min: 2, k_max: 3 });
        assert_eq!(s, select_strategy(&p));

        let p = exhaustive_probe(&Objective::inversion(Some(4)), 4, 2..=4);
        let s = select_strategy(&p);
        assert_eq!(s.kind, TrajectoryKind::F);
        assert_eq!(s.schedule, KSchedule::Fixed { k: 2 });

        let space = PermSpace::new(4).unwrap();
        let flat = Objective::table_from_fn("flat", &space, |_| Value::from_int(5));
        let s = select_strategy(&exhaustive_probe(&flat, 4, 2..=4));
        assert_eq!(s.kind, TrajectoryKind::F);
        assert_eq!(s.schedule, KSchedule::Fixed { k: 2 });
        assert_eq!(s.starts, Starts::Random { count: 1 });
    }

    #[test]
    fn execute_selected_plan() {
        let dir = tempfile::tempdir().unwrap();
        let repo = RunRepository::open(dir.path().join("runs")).unwrap();
        let f = table1_objective();
        let cfg = select_strategy(&exhaustive_probe(&f, 4, 2..=4));
        let rec = execute_plan(&f, &cfg, &repo).unwrap();
        assert_eq!(rec.outcome.status, Status::Optimum);
        assert_eq!(rec.outcome.best_value, Value::from_int(0));
        assert!(rec.verify_replay().unwrap());
        let again = execute_plan(&f, &cfg, &repo).unwrap();
        assert_eq!(rec.comparable(), again.comparable());
        let stored = repo.records().unwrap();
        assert_eq!(stored.len(), 2);
        assert_eq!(stored[0], rec);
        assert!(repo.registry().unwrap().contains_key("table1"));
    }

    #[test]
    fn step_limit_outcome() {
        let f = Objective::inversion(Some(6));
        let cfg = StrategyConfig::new(TrajectoryKind::F, KSchedule::Fixed { k: 2 })
            .with_starts(Starts::Explicit(vec!["654321".parse().unwrap()]))
            .with_step_limit(1);
        let rec = run_plan(&f, &cfg).unwrap();
        assert_eq!(rec.outcome.status, Status::StepLimit);
    }

    #[test]
    fn unwritable_repository() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "x").unwrap();
        assert!(matches!(
            RunRepository::open(blocker.join("runs")),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn verification_passes() {
        let r = verify_paper();
        assert!(r.checks.len() >= 7);
        for c in &r.checks {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn corrupted_fixture_fails_only_table_check() {
        let mut rows = TABLE1;
        rows[9].1 = 2;
        let r = verify_paper_with(&rows);
        assert!(!r.passed());
        let failing: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failing, vec!["table1"]);
    }
}
