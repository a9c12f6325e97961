//! k-interchange local search.
//!
//! A one-line trajectory moves from point to point taking
//! - forward steps: to a neighbor with a strictly smaller value;
//! - aside steps (kinds FA, FAB): to an unvisited neighbor with an equal value;
//! - backward steps (kind FAB): back along the trajectory when neither of the
//!   above is available, resuming from the most recent point that still has
//!   an untried alternative.
//!
//! With an adaptive schedule the window size starts at `k_min`, grows by one
//! whenever the current point offers no move at the current size, and drops
//! back to `k_min` after every forward step.
//!
//! Multi-line runs (nF, nFA, nFAB) are independent one-line trajectories
//! from several starts, each with its own derived seed.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::{Objective, Value};
use crate::perm::{KNeighborhood, Permutation, WindowMove};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrajectoryKind {
    F,
    FA,
    FAB,
}

impl TrajectoryKind {
    fn allows_aside(self) -> bool {
        !matches!(self, TrajectoryKind::F)
    }
}

impl fmt::Display for TrajectoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrajectoryKind::F => "F",
            TrajectoryKind::FA => "FA",
            TrajectoryKind::FAB => "FAB",
        })
    }
}

impl std::str::FromStr for TrajectoryKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F" => Ok(TrajectoryKind::F),
            "FA" => Ok(TrajectoryKind::FA),
            "FAB" => Ok(TrajectoryKind::FAB),
            _ => Err(Error::InvalidConfig(format!("unknown trajectory kind {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KSchedule {
    Fixed { k: usize },
    Adaptive { k_min: usize, k_max: usize },
}

impl KSchedule {
    pub fn k_min(&self) -> usize {
        match *self {
            KSchedule::Fixed { k } => k,
            KSchedule::Adaptive { k_min, .. } => k_min,
        }
    }

    pub fn k_max(&self) -> usize {
        match *self {
            KSchedule::Fixed { k } => k,
            KSchedule::Adaptive { k_max, .. } => k_max,
        }
    }
}

impl fmt::Display for KSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KSchedule::Fixed { k } => write!(f, "fixed({k})"),
            KSchedule::Adaptive { k_min, k_max } => write!(f, "adaptive({k_min},{k_max})"),
        }
    }
}

/// How the next point is chosen among admissible neighbors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PivotRule {
    /// Lexicographically smallest candidate.
    #[default]
    First,
    /// Smallest value, ties broken lexicographically.
    Best,
    /// Uniform over the candidates, from the trajectory's seeded generator.
    Random,
}

impl fmt::Display for PivotRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PivotRule::First => "first",
            PivotRule::Best => "best",
            PivotRule::Random => "random",
        })
    }
}

impl std::str::FromStr for PivotRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(PivotRule::First),
            "best" => Ok(PivotRule::Best),
            "random" => Ok(PivotRule::Random),
            _ => Err(Error::InvalidConfig(format!("unknown pivot rule {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Starts {
    Explicit(Vec<Permutation>),
    Random { count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrategyConfig {
    pub kind: TrajectoryKind,
    pub schedule: KSchedule,
    #[serde(default)]
    pub pivot: PivotRule,
    pub starts: Starts,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_step_limit")]
    pub step_limit: usize,
    #[serde(default = "default_aside_budget")]
    pub aside_budget: usize,
    /// A value at or below which a point is declared optimal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<Value>,
}

fn default_step_limit() -> usize {
    10_000
}

fn default_aside_budget() -> usize {
    1_000
}

impl StrategyConfig {
    /// First-improvement strategy with one random start, seed 0 and the
    /// default step and aside budgets.
    pub fn new(kind: TrajectoryKind, schedule: KSchedule) -> Self {
        StrategyConfig {
            kind,
            schedule,
            pivot: PivotRule::First,
            starts: Starts::Random { count: 1 },
            seed: 0,
            step_limit: default_step_limit(),
            aside_budget: default_aside_budget(),
            lower_bound: None,
        }
    }

    pub fn with_pivot(mut self, pivot: PivotRule) -> Self {
        self.pivot = pivot;
        self
    }

    pub fn with_starts(mut self, starts: Starts) -> Self {
        self.starts = starts;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_step_limit(mut self, step_limit: usize) -> Self {
        self.step_limit = step_limit;
        self
    }

    pub fn with_aside_budget(mut self, aside_budget: usize) -> Self {
        self.aside_budget = aside_budget;
        self
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let (k_min, k_max) = (self.schedule.k_min(), self.schedule.k_max());
        if k_min < 2 || k_min > n {
            return Err(Error::InvalidK { k: k_min, n });
        }
        if k_max < k_min || k_max > n {
            return Err(Error::InvalidK { k: k_max, n });
        }
        if self.step_limit == 0 {
            return Err(Error::InvalidConfig("step_limit must be positive".into()));
        }
        match &self.starts {
            Starts::Explicit(v) if v.is_empty() => return Err(Error::InvalidConfig("no start points".into())),
            Starts::Random { count: 0 } => return Err(Error::InvalidConfig("no start points".into())),
            Starts::Explicit(v) => {
                if let Some(bad) = v.iter().find(|p| p.n() != n) {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        got: bad.n(),
                    });
                }
            }
            Starts::Random { .. } => {}
        }
        Ok(())
    }

    /// Concrete start points; random starts are drawn from `seed`.
    pub fn resolve_starts(&self, n: usize) -> Result<Vec<Permutation>> {
        match &self.starts {
            Starts::Explicit(v) => Ok(v.clone()),
            Starts::Random { count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                (0..*count)
                    .map(|_| {
                        let mut seq: Vec<usize> = (1..=n).collect();
                        seq.shuffle(&mut rng);
                        Permutation::new(&seq)
                    })
                    .collect()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Forward,
    Aside,
    Backward,
}

/// One step; `point` and `value` describe where the step lands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub point: Permutation,
    pub value: Value,
    #[serde(rename = "move")]
    pub window_move: WindowMove,
    pub kind: StepKind,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Optimum,
    LocalOptimum,
    StepLimit,
    AsideExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTrajectory {
    pub start: Permutation,
    pub start_value: Value,
    pub seed: u64,
    pub steps: Vec<Step>,
    pub status: Status,
    /// Best point visited (for F and FA this is the last point).
    pub final_point: Permutation,
    pub final_value: Value,
    pub forward_count: usize,
    pub aside_count: usize,
    pub backward_count: usize,
}

impl SearchTrajectory {
    /// Points in visiting order, starting with `start`.
    pub fn points(&self) -> impl Iterator<Item = &Permutation> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.point))
    }

    pub fn values(&self) -> impl Iterator<Item = Value> + '_ {
        std::iter::once(self.start_value).chain(self.steps.iter().map(|s| s.value))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiStartResult {
    pub trajectories: Vec<SearchTrajectory>,
    pub success_count: usize,
    pub best_value: Value,
    pub best_point: Permutation,
}

/// A chosen neighbor together with the move producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub point: Permutation,
    pub value: Value,
    pub window_move: WindowMove,
}

fn pick(mut cands: Vec<Candidate>, pivot: PivotRule, rng: &mut ChaCha8Rng) -> Option<Candidate> {
    if cands.is_empty() {
        return None;
    }
    // Candidates arrive in lexicographic order.
    let i = match pivot {
        PivotRule::First => 0,
        PivotRule::Best => {
            let best = cands.iter().map(|c| c.value).min().expect("nonempty");
            cands.iter().position(|c| c.value == best).expect("present")
        }
        PivotRule::Random => rng.gen_range(0..cands.len()),
    };
    Some(cands.swap_remove(i))
}

struct Scored {
    improving: Vec<Candidate>,
    equal: Vec<Candidate>,
}

fn score(hood: &KNeighborhood, f: &Objective, s: &Permutation, here: Value) -> Result<Scored> {
    let mut improving = Vec::new();
    let mut equal = Vec::new();
    for (point, window_move) in hood.neighbors_with_moves(s)? {
        let value = f.evaluate(&point)?;
        let c = Candidate {
            point,
            value,
            window_move,
        };
        match value.cmp(&here) {
            std::cmp::Ordering::Less => improving.push(c),
            std::cmp::Ordering::Equal => equal.push(c),
            std::cmp::Ordering::Greater => {}
        }
    }
    Ok(Scored { improving, equal })
}

/// One forward step: an improving neighbor chosen by `pivot`, or `None` at
/// a k-local optimum.
pub fn search_step(
    s: &Permutation,
    k: usize,
    f: &Objective,
    pivot: PivotRule,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Candidate>> {
    let hood = KNeighborhood::new(s.n(), k)?;
    let here = f.evaluate(s)?;
    Ok(pick(score(&hood, f, s, here)?.improving, pivot, rng))
}

/// True iff `V^{k<}(s)` is empty.
pub fn is_local_optimum(f: &Objective, s: &Permutation, k: usize) -> Result<bool> {
    let hood = KNeighborhood::new(s.n(), k)?;
    let here = f.evaluate(s)?;
    for x in hood.neighbors(s)? {
        if f.evaluate(&x)? < here {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How a run recognizes that it has reached an optimum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OptimumTest {
    pub optimum_value: Option<Value>,
    pub lower_bound: Option<Value>,
}

impl OptimumTest {
    /// From the objective's declared or exhaustively computed optima and the
    /// configured lower bound.
    pub fn for_run(f: &Objective, cfg: &StrategyConfig) -> Self {
        OptimumTest {
            optimum_value: f.optimum_value(),
            lower_bound: cfg.lower_bound,
        }
    }

    pub fn reached(&self, v: Value) -> bool {
        self.optimum_value == Some(v) || self.lower_bound.is_some_and(|lb| v <= lb)
    }
}

struct Frame {
    point: Permutation,
    value: Value,
    // Move that led here from the frame below.
    entry: Option<(WindowMove, usize)>,
}

/// Runs one trajectory from `start` using `cfg.seed` for the random pivot.
pub fn run_trajectory(f: &Objective, start: &Permutation, cfg: &StrategyConfig) -> Result<SearchTrajectory> {
    run_trajectory_with(f, start, cfg, cfg.seed, &OptimumTest::for_run(f, cfg))
}

/// Runs one trajectory with an explicit seed and optimum test.
pub fn run_trajectory_with(
    f: &Objective,
    start: &Permutation,
    cfg: &StrategyConfig,
    seed: u64,
    optimum: &OptimumTest,
) -> Result<SearchTrajectory> {
    let n = start.n();
    f.check_arity(n)?;
    cfg.validate(n)?;
    let (k_min, k_max) = (cfg.schedule.k_min(), cfg.schedule.k_max());
    let hoods: Vec<KNeighborhood> = (k_min..=k_max)
        .map(|k| KNeighborhood::new(n, k))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let start_value = f.evaluate(start)?;
    let mut visited: HashSet<Permutation> = HashSet::from([start.clone()]);
    let mut stack = vec![Frame {
        point: start.clone(),
        value: start_value,
        entry: None,
    }];
    let mut steps: Vec<Step> = Vec::new();
    let mut best = (start.clone(), start_value);
    let mut k = k_min;
    let mut asides = 0usize;
    let mut aside_blocked = false;

    let status = loop {
        let top = stack.last().expect("stack holds the current point");
        let (cur, cur_value) = (top.point.clone(), top.value);
        if optimum.reached(cur_value) {
            break Status::Optimum;
        }
        if steps.len() >= cfg.step_limit {
            break Status::StepLimit;
        }

        let mut chosen: Option<(Candidate, StepKind, usize)> = None;
        for kk in k..=k_max {
            let scored = score(&hoods[kk - k_min], f, &cur, cur_value)?;
            let fresh = |v: Vec<Candidate>| -> Vec<Candidate> {
                v.into_iter().filter(|c| !visited.contains(&c.point)).collect()
            };
            if let Some(c) = pick(fresh(scored.improving), cfg.pivot, &mut rng) {
                chosen = Some((c, StepKind::Forward, kk));
                break;
            }
            if cfg.kind.allows_aside() {
                let equal = fresh(scored.equal);
                if !equal.is_empty() {
                    if asides < cfg.aside_budget {
                        let c = pick(equal, cfg.pivot, &mut rng).expect("nonempty");
                        chosen = Some((c, StepKind::Aside, kk));
                        break;
                    }
                    aside_blocked = true;
                }
            }
        }

        match chosen {
            Some((c, kind, kk)) => {
                visited.insert(c.point.clone());
                if c.value < best.1 {
                    best = (c.point.clone(), c.value);
                }
                match kind {
                    StepKind::Forward => k = k_min,
                    _ => {
                        asides += 1;
                        k = kk;
                    }
                }
                steps.push(Step {
                    point: c.point.clone(),
                    value: c.value,
                    window_move: c.window_move.clone(),
                    kind,
                    k: kk,
                });
                stack.push(Frame {
                    point: c.point,
                    value: c.value,
                    entry: Some((c.window_move, kk)),
                });
            }
            None if cfg.kind == TrajectoryKind::FAB && stack.len() > 1 => {
                let popped = stack.pop().expect("len > 1");
                let (mv, kk) = popped.entry.expect("non-root frames have an entry move");
                let back = stack.last().expect("len > 1");
                steps.push(Step {
                    point: back.point.clone(),
                    value: back.value,
                    window_move: mv.inverse(),
                    kind: StepKind::Backward,
                    k: kk,
                });
                k = k_min;
            }
            None => {
                break if aside_blocked {
                    Status::AsideExhausted
                } else {
                    Status::LocalOptimum
                };
            }
        }
    };

    let count = |kind: StepKind| steps.iter().filter(|s| s.kind == kind).count();
    let status = if status != Status::Optimum && optimum.reached(best.1) {
        Status::Optimum
    } else {
        status
    };
    Ok(SearchTrajectory {
        start: start.clone(),
        start_value,
        seed,
        forward_count: count(StepKind::Forward),
        aside_count: count(StepKind::Aside),
        backward_count: count(StepKind::Backward),
        steps,
        status,
        final_point: best.0,
        final_value: best.1,
    })
}

/// Seed of the `index`-th line of a multi-line run (SplitMix64 mixing).
pub fn derive_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent trajectories from every start, run in parallel and merged
/// in start order.
pub fn run_multistart(f: &Objective, cfg: &StrategyConfig) -> Result<MultiStartResult> {
    let n = f
        .arity()
        .or_else(|| match &cfg.starts {
            Starts::Explicit(v) => v.first().map(Permutation::n),
            Starts::Random { .. } => None,
        })
        .ok_or_else(|| Error::InvalidConfig("cannot infer the order for random starts".into()))?;
    cfg.validate(n)?;
    let starts = cfg.resolve_starts(n)?;
    let optimum = OptimumTest::for_run(f, cfg);
    let trajectories = starts
        .par_iter()
        .enumerate()
        .map(|(i, s)| run_trajectory_with(f, s, cfg, derive_seed(cfg.seed, i), &optimum))
        .collect::<Result<Vec<_>>>()?;
    let success_count = trajectories.iter().filter(|t| t.status == Status::Optimum).count();
    let best = trajectories
        .iter()
        .min_by(|a, b| a.final_value.cmp(&b.final_value))
        .expect("at least one start");
    Ok(MultiStartResult {
        success_count,
        best_value: best.final_value,
        best_point: best.final_point.clone(),
        trajectories,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::table1_objective;
    use crate::perm::PermSpace;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(0)
    }

    fn fixed(kind: TrajectoryKind, k: usize) -> StrategyConfig {
        StrategyConfig::new(kind, KSchedule::Fixed { k })
    }

    #[test]
    fn search_step_examples() {
        let f = table1_objective();
        assert_eq!(
            search_step(&p("4312"), 2, &f, PivotRule::First, &mut rng()).unwrap(),
            None
        );
        let c = search_step(&p("4312"), 3, &f, PivotRule::Best, &mut rng())
            .unwrap()
            .unwrap();
        assert_eq!(c.value, Value::from_int(1));
        let c = search_step(&p("1243"), 2, &f, PivotRule::First, &mut rng())
            .unwrap()
            .unwrap();
        assert_eq!(c.point, p("1234"));
        assert_eq!(p("1243").apply(&c.window_move).unwrap(), p("1234"));
    }

    #[test]
    fn local_optimum_examples() {
        let f = table1_objective();
        assert!(is_local_optimum(&f, &p("4312"), 2).unwrap());
        assert!(!is_local_optimum(&f, &p("4312"), 3).unwrap());
        for k in 2..=4 {
            assert!(is_local_optimum(&f, &p("1234"), k).unwrap());
        }
    }

    #[test]
    fn f_k2_stalls_at_4312() {
        let f = table1_objective();
        let t = run_trajectory(&f, &p("4312"), &fixed(TrajectoryKind::F, 2)).unwrap();
        assert_eq!(t.status, Status::LocalOptimum);
        assert_eq!(t.final_point, p("4312"));
        assert_eq!(t.forward_count, 0);
        assert!(t.steps.is_empty());
    }

    #[test]
    fn f_k3_reaches_optimum_in_two() {
        let f = table1_objective();
        let t = run_trajectory(&f, &p("4312"), &fixed(TrajectoryKind::F, 3)).unwrap();
        assert_eq!(t.status, Status::Optimum);
        assert_eq!(t.final_point, p("1234"));
        assert_eq!(t.forward_count, 2);
        assert_eq!(t.steps.len(), 2);
    }

    #[test]
    fn adaptive_escalates_and_resets() {
        let f = table1_objective();
        let cfg = StrategyConfig::new(TrajectoryKind::F, KSchedule::Adaptive { k_min: 2, k_max: 4 });
        let t = run_trajectory(&f, &p("4312"), &cfg).unwrap();
        assert_eq!(t.status, Status::Optimum);
        assert_eq!(t.final_point, p("1234"));
        let ks: Vec<usize> = t.steps.iter().map(|s| s.k).collect();
        // 4312 stalls at k=2, improves at k=3 to 1342, which again needs k=3.
        assert_eq!(ks, vec![3, 3]);
        assert_eq!(t.steps[0].point, p("1342"));
    }

    #[test]
    fn fa_k2_walks_plateaus_to_optimum() {
        let f = table1_objective();
        let t = run_trajectory(&f, &p("4312"), &fixed(TrajectoryKind::FA, 2)).unwrap();
        assert_eq!(t.status, Status::Optimum);
        assert!(t.aside_count > 0);
        let path: Vec<String> = t.points().map(Permutation::key).collect();
        assert_eq!(path, vec!["4312", "3412", "3142", "1342", "1324", "1234"]);
        // Replay the recorded moves.
        let mut cur = t.start.clone();
        for s in &t.steps {
            cur = cur.apply(&s.window_move).unwrap();
            assert_eq!(cur, s.point);
            assert_eq!(f.evaluate(&cur).unwrap(), s.value);
        }
    }

    #[test]
    fn aside_budget_exhaustion() {
        let f = table1_objective();
        let cfg = fixed(TrajectoryKind::FA, 2).with_aside_budget(0);
        let t = run_trajectory(&f, &p("4312"), &cfg).unwrap();
        assert_eq!(t.status, Status::AsideExhausted);
    }

    #[test]
    fn fab_backtracks_out_of_dead_plateaus() {
        // Flat everywhere except one point; FAB explores the plateau by
        // backtracking until it lands there.
        let space = PermSpace::new(4).unwrap();
        let target = p("4321");
        let f = Objective::table_from_fn("spike", &space, |s| Value::from_int(if *s == target { 0 } else { 1 }));
        let cfg = fixed(TrajectoryKind::FAB, 2);
        let t = run_trajectory(&f, &p("1234"), &cfg).unwrap();
        assert_eq!(t.status, Status::Optimum);
        assert_eq!(t.final_point, target);
        // Backward steps land on points already visited.
        let mut seen = vec![t.start.clone()];
        for s in &t.steps {
            if s.kind == StepKind::Backward {
                assert!(seen.contains(&s.point));
            }
            seen.push(s.point.clone());
        }
    }

    #[test]
    fn fab_backward_moves_are_inverses() {
        let space = PermSpace::new(4).unwrap();
        let f = Objective::random_table(&space, 2, 11);
        let cfg = fixed(TrajectoryKind::FAB, 2);
        for start in space.iter() {
            let t = run_trajectory(&f, &start, &cfg).unwrap();
            let mut cur = t.start.clone();
            for s in &t.steps {
                cur = cur.apply(&s.window_move).unwrap();
                assert_eq!(cur, s.point);
            }
        }
    }

    #[test]
    fn step_limit_is_status_not_error() {
        let f = Objective::inversion(Some(6));
        let cfg = fixed(TrajectoryKind::F, 2).with_step_limit(1);
        let t = run_trajectory(&f, &p("654321"), &cfg).unwrap();
        assert_eq!(t.status, Status::StepLimit);
        assert_eq!(t.steps.len(), 1);
    }

    #[test]
    fn lower_bound_identifies_optimum() {
        // Order 11 is past the enumeration cap, so only the bound can tell.
        let f = Objective::inversion(None);
        let start: Permutation = "(2,1,3,4,5,6,7,8,9,10,11)".parse().unwrap();
        let mut cfg = fixed(TrajectoryKind::F, 2);
        let t = run_trajectory(&f, &start, &cfg).unwrap();
        assert_eq!(t.status, Status::LocalOptimum);
        cfg.lower_bound = Some(Value::from_int(0));
        let t = run_trajectory(&f, &start, &cfg).unwrap();
        assert_eq!(t.status, Status::Optimum);
    }

    #[test]
    fn invalid_configs() {
        let f = table1_objective();
        let s = p("4312");
        assert!(matches!(
            run_trajectory(&f, &s, &fixed(TrajectoryKind::F, 7)),
            Err(Error::InvalidK { .. })
        ));
        assert!(matches!(
            run_trajectory(&f, &s, &fixed(TrajectoryKind::F, 1)),
            Err(Error::InvalidK { .. })
        ));
        let cfg = fixed(TrajectoryKind::F, 2).with_step_limit(0);
        assert!(matches!(run_trajectory(&f, &s, &cfg), Err(Error::InvalidConfig(_))));
        let cfg = StrategyConfig::new(TrajectoryKind::F, KSchedule::Adaptive { k_min: 3, k_max: 2 });
        assert!(run_trajectory(&f, &s, &cfg).is_err());
        let cfg = fixed(TrajectoryKind::F, 2).with_starts(Starts::Explicit(vec![]));
        assert!(matches!(run_multistart(&f, &cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn multistart_from_optimum() {
        let f = table1_objective();
        let cfg = fixed(TrajectoryKind::F, 2).with_starts(Starts::Explicit(vec![p("1234")]));
        let r = run_multistart(&f, &cfg).unwrap();
        assert_eq!(r.success_count, 1);
        assert!(r.trajectories[0].steps.is_empty());
        assert_eq!(r.best_value, Value::from_int(0));
    }

    #[test]
    fn random_pivot_is_seeded() {
        let space = PermSpace::new(5).unwrap();
        let f = Objective::random_table(&space, 6, 3);
        let cfg = fixed(TrajectoryKind::FA, 2)
            .with_pivot(PivotRule::Random)
            .with_starts(Starts::Random { count: 8 })
            .with_seed(42);
        let a = run_multistart(&f, &cfg).unwrap();
        let b = run_multistart(&f, &cfg).unwrap();
        assert_eq!(a, b);
        let c = run_multistart(&f, &cfg.clone().with_seed(43)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn config_json_shape() {
        let cfg = StrategyConfig::new(TrajectoryKind::FA, KSchedule::Adaptive { k_min: 2, k_max: 3 })
            .with_starts(Starts::Random { count: 5 });
        let text = serde_json::to_string(&cfg).unwrap();
        assert!(text.contains("\"kind\":\"FA\""));
        assert!(text.contains("\"adaptive\":{\"k_min\":2,\"k_max\":3}"));
        let back: StrategyConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cfg);
        let minimal: StrategyConfig =
            serde_json::from_str(r#"{"kind":"F","schedule":{"fixed":{"k":2}},"starts":{"explicit":["4312"]}}"#)
                .unwrap();
        assert_eq!(minimal.step_limit, 10_000);
    }
}
