//! Objective functions over permutations.
//!
//! Values are exact rationals ([`Value`]); all comparisons, in particular
//! the tie detection that separates `V^{k<}` from `V^{k<=}`, are exact.
//!
//! Built-in kinds:
//! - `table`: explicit value per permutation (all `n!` entries required).
//! - `inversion`: number of inversions.
//! - `search_distance`: minimum number of k-interchanges to reach a target.
//! - `weighted_completion`: `Σ w_j C_j` on a single machine.
//! - `flowshop2`: makespan of a two-machine permutation flow shop.
//!
//! In the job-based kinds element `j` of a permutation denotes job `j`
//! (1-based) and the permutation is the processing order.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::landscape;
use crate::perm::{PermSpace, Permutation, DEFAULT_ENUMERATION_CAP};

/// Exact objective value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Value(Ratio<i64>);

impl Value {
    pub fn from_int(v: i64) -> Self {
        Value(Ratio::from_integer(v))
    }

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidParams("zero denominator".into()));
        }
        Ok(Value(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.numer() > 0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl std::ops::Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        Value(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Value {
    type Output = Value;
    fn sub(self, rhs: Value) -> Value {
        Value(self.0 - rhs.0)
    }
}

impl std::ops::Mul for Value {
    type Output = Value;
    fn mul(self, rhs: Value) -> Value {
        Value(self.0 * rhs.0)
    }
}

impl std::iter::Sum for Value {
    fn sum<I: Iterator<Item = Value>>(iter: I) -> Value {
        iter.fold(Value::default(), |a, b| a + b)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Value {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("not an exact value: {s:?}"));
        match s.trim().split_once('/') {
            Some((n, d)) => Value::new(
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => Ok(Value::from_int(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::from_int(v)
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_integer() {
            serializer.serialize_i64(self.numer())
        } else {
            serializer.collect_str(self)
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
            Float(f64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(Value::from_int(v)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Float(v) => Err(serde::de::Error::custom(format!(
                "inexact value {v}; write it as an integer or a \"p/q\" string"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectiveKind {
    Table,
    Inversion,
    SearchDistance,
    WeightedCompletion,
    Flowshop2,
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ObjectiveKind::Table => "table",
            ObjectiveKind::Inversion => "inversion",
            ObjectiveKind::SearchDistance => "search_distance",
            ObjectiveKind::WeightedCompletion => "weighted_completion",
            ObjectiveKind::Flowshop2 => "flowshop2",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueDomain {
    Integer,
    Rational,
}

/// Single-machine job: processing time `p` and weight `w`, both positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightedJob {
    pub p: Value,
    pub w: Value,
}

/// Flow-shop job: machine-1 time `a` and machine-2 time `b`, both positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowshopJob {
    pub a: Value,
    pub b: Value,
}

#[derive(Clone, Debug)]
enum Body {
    Table {
        n: usize,
        values: Arc<[Value]>,
    },
    Inversion {
        n: Option<usize>,
    },
    SearchDistance {
        n: usize,
        k: usize,
        target: Permutation,
        values: Arc<[Value]>,
    },
    Weighted(Arc<[WeightedJob]>),
    Flowshop(Arc<[FlowshopJob]>),
}

/// An immutable objective `f: P(n) -> Q`, optionally carrying its known
/// global optima. When the optima are not declared they are computed once
/// by exhaustive evaluation, provided `n` is within the enumeration cap.
#[derive(Clone, Debug)]
pub struct Objective {
    id: String,
    body: Body,
    known_optima: Option<Vec<Permutation>>,
    optima: OnceLock<Option<Vec<Permutation>>>,
}

/// Summary of an objective used in reports and run records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectiveDescriptor {
    pub id: String,
    pub kind: ObjectiveKind,
    pub n: Option<usize>,
    pub value_domain: ValueDomain,
}

impl Objective {
    fn from_body(id: impl Into<String>, body: Body) -> Self {
        Objective {
            id: id.into(),
            body,
            known_optima: None,
            optima: OnceLock::new(),
        }
    }

    /// Table objective from explicit entries; every permutation of order `n`
    /// must appear exactly once.
    pub fn table_from_entries(
        id: impl Into<String>,
        n: usize,
        entries: impl IntoIterator<Item = (Permutation, Value)>,
        known_optima: Option<Vec<Permutation>>,
    ) -> Result<Self> {
        let space = PermSpace::new(n)?;
        let mut slots: Vec<Option<Value>> = vec![None; space.len()];
        for (p, v) in entries {
            let r = space.rank(&p)?;
            if slots[r].replace(v).is_some() {
                return Err(Error::InvalidParams(format!("duplicate table entry {}", p.key())));
            }
        }
        let missing: Vec<String> = slots
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_none())
            .map(|(r, _)| space.unrank(r).map(|p| p.key()))
            .collect::<Result<_>>()?;
        if !missing.is_empty() {
            return Err(Error::IncompleteTable { missing });
        }
        let values: Arc<[Value]> = slots.into_iter().map(Option::unwrap).collect();
        Objective::from_body(id, Body::Table { n, values }).with_known_optima(known_optima)
    }

    /// Table objective tabulating `f` over the whole space.
    pub fn table_from_fn(id: impl Into<String>, space: &PermSpace, f: impl Fn(&Permutation) -> Value) -> Objective {
        let values: Arc<[Value]> = space.iter().map(|p| f(&p)).collect();
        Objective::from_body(id, Body::Table { n: space.n(), values })
    }

    /// Table objective with independent uniform integer values in
    /// `0..=max_value`, reproducible from `seed`.
    pub fn random_table(space: &PermSpace, max_value: i64, seed: u64) -> Objective {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Arc<[Value]> = (0..space.len())
            .map(|_| Value::from_int(rng.gen_range(0..=max_value)))
            .collect();
        Objective::from_body(format!("random_table:{seed}"), Body::Table { n: space.n(), values })
    }

    /// Inversion count. With `n = None` the objective accepts any order.
    pub fn inversion(n: Option<usize>) -> Objective {
        Objective::from_body("inversion", Body::Inversion { n })
    }

    /// `g_k`: breadth-first distance from each permutation to `target` in
    /// the k-interchange move graph, tabulated over the whole space.
    pub fn search_distance(space: &PermSpace, k: usize, target: &Permutation) -> Result<Objective> {
        let dist = landscape::move_distances(space, k, target)?;
        let values: Arc<[Value]> = dist.iter().map(|&d| Value::from_int(d as i64)).collect();
        let id = format!("search_distance:n{}:k{}:{}", space.n(), k, target.key());
        Objective::from_body(
            id,
            Body::SearchDistance {
                n: space.n(),
                k,
                target: target.clone(),
                values,
            },
        )
        .with_known_optima(Some(vec![target.clone()]))
    }

    pub fn weighted_completion(jobs: Vec<WeightedJob>) -> Result<Objective> {
        check_job_count(jobs.len())?;
        for (j, job) in jobs.iter().enumerate() {
            if !job.p.is_positive() || !job.w.is_positive() {
                return Err(Error::InvalidParams(format!(
                    "job {}: p and w must be positive (p={}, w={})",
                    j + 1,
                    job.p,
                    job.w
                )));
            }
        }
        Ok(Objective::from_body("weighted_completion", Body::Weighted(jobs.into())))
    }

    pub fn flowshop2(jobs: Vec<FlowshopJob>) -> Result<Objective> {
        check_job_count(jobs.len())?;
        for (j, job) in jobs.iter().enumerate() {
            if !job.a.is_positive() || !job.b.is_positive() {
                return Err(Error::InvalidParams(format!(
                    "job {}: a and b must be positive (a={}, b={})",
                    j + 1,
                    job.a,
                    job.b
                )));
            }
        }
        Ok(Objective::from_body("flowshop2", Body::Flowshop(jobs.into())))
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    /// Declares the global optima. Each must have the objective's order and
    /// all must share the minimum value among themselves.
    pub fn with_known_optima(mut self, optima: Option<Vec<Permutation>>) -> Result<Self> {
        if let Some(opt) = &optima {
            if opt.is_empty() {
                return Err(Error::EmptyOptima);
            }
            let first = self.evaluate(&opt[0])?;
            for p in opt {
                if self.evaluate(p)? != first {
                    return Err(Error::InvalidParams(format!(
                        "declared optima {} and {} have different values",
                        opt[0].key(),
                        p.key()
                    )));
                }
            }
        }
        self.known_optima = optima.map(|mut v| {
            v.sort();
            v.dedup();
            v
        });
        self.optima = OnceLock::new();
        Ok(self)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> ObjectiveKind {
        match self.body {
            Body::Table { .. } => ObjectiveKind::Table,
            Body::Inversion { .. } => ObjectiveKind::Inversion,
            Body::SearchDistance { .. } => ObjectiveKind::SearchDistance,
            Body::Weighted(_) => ObjectiveKind::WeightedCompletion,
            Body::Flowshop(_) => ObjectiveKind::Flowshop2,
        }
    }

    /// The order this objective is defined for, if fixed.
    pub fn arity(&self) -> Option<usize> {
        match &self.body {
            Body::Table { n, .. } | Body::SearchDistance { n, .. } => Some(*n),
            Body::Inversion { n } => *n,
            Body::Weighted(jobs) => Some(jobs.len()),
            Body::Flowshop(jobs) => Some(jobs.len()),
        }
    }

    pub fn value_domain(&self) -> ValueDomain {
        let all_int = match &self.body {
            Body::Weighted(jobs) => jobs.iter().all(|j| j.p.is_integer() && j.w.is_integer()),
            Body::Flowshop(jobs) => jobs.iter().all(|j| j.a.is_integer() && j.b.is_integer()),
            _ => true,
        };
        if all_int {
            ValueDomain::Integer
        } else {
            ValueDomain::Rational
        }
    }

    pub fn descriptor(&self) -> ObjectiveDescriptor {
        ObjectiveDescriptor {
            id: self.id.clone(),
            kind: self.kind(),
            n: self.arity(),
            value_domain: self.value_domain(),
        }
    }

    /// Checks that `n` is an order this objective can score.
    pub fn check_arity(&self, n: usize) -> Result<()> {
        match self.arity() {
            Some(expected) if expected != n => Err(Error::ArityMismatch { expected, got: n }),
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, s: &Permutation) -> Result<Value> {
        self.check_arity(s.n())?;
        match &self.body {
            Body::Table { values, .. } | Body::SearchDistance { values, .. } => {
                let rank = s.lex_rank()? as usize;
                values
                    .get(rank)
                    .copied()
                    .ok_or_else(|| Error::MissingTableEntry(s.key()))
            }
            Body::Inversion { .. } => Ok(Value::from_int(s.inversion_count() as i64)),
            Body::Weighted(jobs) => Ok(weighted_completion_value(jobs, s)?),
            Body::Flowshop(jobs) => Ok(flowshop2_makespan(jobs, s)?),
        }
    }

    /// Values of every permutation in `space`, indexed by lex rank.
    pub fn evaluate_space(&self, space: &PermSpace) -> Result<Vec<Value>> {
        self.check_arity(space.n())?;
        match &self.body {
            Body::Table { values, .. } | Body::SearchDistance { values, .. } => Ok(values.to_vec()),
            _ => space.iter().map(|p| self.evaluate(&p)).collect(),
        }
    }

    pub fn known_optima(&self) -> Option<&[Permutation]> {
        self.known_optima.as_deref()
    }

    /// Global minimizers: the declared ones, or all minimizers found by
    /// exhaustive evaluation when the order is within the default cap.
    /// `None` when neither is available.
    pub fn global_optima(&self) -> Option<&[Permutation]> {
        if let Some(k) = &self.known_optima {
            return Some(k);
        }
        self.optima
            .get_or_init(|| {
                let n = self.arity()?;
                let space = PermSpace::with_cap(n, DEFAULT_ENUMERATION_CAP).ok()?;
                exhaustive_minimizers(self, &space).ok()
            })
            .as_deref()
    }

    pub fn optimum_value(&self) -> Option<Value> {
        let opt = self.global_optima()?;
        self.evaluate(&opt[0]).ok()
    }

    pub fn to_doc(&self) -> ObjectiveDoc {
        let id = Some(self.id.clone());
        let known_optima = self.known_optima.clone();
        match &self.body {
            Body::Table { n, values } => {
                let space = PermSpace::new(*n).expect("table order within cap");
                let values = space.iter().map(|p| p.key()).zip(values.iter().copied()).collect();
                ObjectiveDoc::Table {
                    id,
                    n: *n,
                    values,
                    known_optima,
                }
            }
            Body::Inversion { n } => ObjectiveDoc::Inversion {
                id,
                n: *n,
                known_optima,
            },
            Body::SearchDistance { n, k, target, .. } => ObjectiveDoc::SearchDistance {
                id,
                n: *n,
                k: *k,
                target: target.clone(),
            },
            Body::Weighted(jobs) => ObjectiveDoc::WeightedCompletion {
                id,
                jobs: jobs.to_vec(),
                known_optima,
            },
            Body::Flowshop(jobs) => ObjectiveDoc::Flowshop2 {
                id,
                jobs: jobs.to_vec(),
                known_optima,
            },
        }
    }

    pub fn from_doc(doc: ObjectiveDoc) -> Result<Objective> {
        let (obj, id) = match doc {
            ObjectiveDoc::Table {
                id,
                n,
                values,
                known_optima,
            } => {
                let mut entries = Vec::with_capacity(values.len());
                for (key, v) in values {
                    let p: Permutation = key.parse()?;
                    if p.n() != n {
                        return Err(Error::ArityMismatch {
                            expected: n,
                            got: p.n(),
                        });
                    }
                    entries.push((p, v));
                }
                (Objective::table_from_entries("table", n, entries, known_optima)?, id)
            }
            ObjectiveDoc::Inversion { id, n, known_optima } => {
                if let Some(n) = n {
                    PermSpace::with_cap(n, usize::MAX).map_err(|e| Error::InvalidParams(e.to_string()))?;
                }
                (Objective::inversion(n).with_known_optima(known_optima)?, id)
            }
            ObjectiveDoc::SearchDistance { id, n, k, target } => {
                if target.n() != n {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        got: target.n(),
                    });
                }
                let space = PermSpace::new(n)?;
                (Objective::search_distance(&space, k, &target)?, id)
            }
            ObjectiveDoc::WeightedCompletion { id, jobs, known_optima } => (
                Objective::weighted_completion(jobs)?.with_known_optima(known_optima)?,
                id,
            ),
            ObjectiveDoc::Flowshop2 { id, jobs, known_optima } => {
                (Objective::flowshop2(jobs)?.with_known_optima(known_optima)?, id)
            }
        };
        Ok(match id {
            Some(id) => obj.with_id(id),
            None => obj,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Objective> {
        let doc: ObjectiveDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Objective::from_doc(doc)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Objective> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Objective::from_json_str(&text)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("objective documents serialize")
    }
}

fn check_job_count(n: usize) -> Result<()> {
    if !(crate::perm::MIN_ORDER..=crate::perm::MAX_ORDER).contains(&n) {
        return Err(Error::InvalidParams(format!(
            "job count {n} outside {}..={}",
            crate::perm::MIN_ORDER,
            crate::perm::MAX_ORDER
        )));
    }
    Ok(())
}

/// All minimizers of `f` over `space`, in lexicographic order.
pub fn exhaustive_minimizers(f: &Objective, space: &PermSpace) -> Result<Vec<Permutation>> {
    let values = f.evaluate_space(space)?;
    let best = *values.iter().min().expect("space is nonempty");
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == best)
        .map(|(r, _)| space.unrank(r))
        .collect()
}

/// On-disk objective document (JSON). Unknown fields are rejected.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectiveDoc {
    Table {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        n: usize,
        values: BTreeMap<String, Value>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        known_optima: Option<Vec<Permutation>>,
    },
    Inversion {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        known_optima: Option<Vec<Permutation>>,
    },
    SearchDistance {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        n: usize,
        k: usize,
        target: Permutation,
    },
    WeightedCompletion {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        jobs: Vec<WeightedJob>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        known_optima: Option<Vec<Permutation>>,
    },
    Flowshop2 {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        jobs: Vec<FlowshopJob>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        known_optima: Option<Vec<Permutation>>,
    },
}

pub fn evaluate(f: &Objective, s: &Permutation) -> Result<Value> {
    f.evaluate(s)
}

pub fn load_objective(path: impl AsRef<Path>) -> Result<Objective> {
    Objective::load(path)
}

/// `g_k` towards `target` as a table objective.
pub fn build_search_distance_objective(n: usize, k: usize, target: &Permutation) -> Result<Objective> {
    Objective::search_distance(&PermSpace::new(n)?, k, target)
}

/// `Σ_j w_j C_j` for the processing order `s`.
pub fn weighted_completion_value(jobs: &[WeightedJob], s: &Permutation) -> Result<Value> {
    if jobs.len() != s.n() {
        return Err(Error::ArityMismatch {
            expected: jobs.len(),
            got: s.n(),
        });
    }
    Ok(weighted_sum(jobs, s.as_slice()))
}

// `order` holds 1-based job indices.
fn weighted_sum(jobs: &[WeightedJob], order: &[u8]) -> Value {
    let mut clock = Value::default();
    let mut total = Value::default();
    for &j in order {
        let job = &jobs[j as usize - 1];
        clock = clock + job.p;
        total = total + job.w * clock;
    }
    total
}

/// Two-machine permutation flow-shop makespan: machine 2 starts a job once
/// machine 1 has finished it and machine 2 is free.
pub fn flowshop2_makespan(jobs: &[FlowshopJob], s: &Permutation) -> Result<Value> {
    if jobs.len() != s.n() {
        return Err(Error::ArityMismatch {
            expected: jobs.len(),
            got: s.n(),
        });
    }
    Ok(makespan(jobs, s.as_slice()))
}

fn makespan(jobs: &[FlowshopJob], order: &[u8]) -> Value {
    let mut m1 = Value::default();
    let mut m2 = Value::default();
    for &j in order {
        let job = &jobs[j as usize - 1];
        m1 = m1 + job.a;
        m2 = m1.max(m2) + job.b;
    }
    m2
}

/// Smith's rule: non-increasing `w/p`, ties by job index.
pub fn smith_order(jobs: &[WeightedJob]) -> Result<Permutation> {
    let mut order: Vec<usize> = (1..=jobs.len()).collect();
    let ratio = |j: usize| jobs[j - 1].w.0 / jobs[j - 1].p.0;
    order.sort_by(|&x, &y| ratio(y).cmp(&ratio(x)).then(x.cmp(&y)));
    Permutation::new(&order)
}

/// Johnson's rule: jobs with `a <= b` by increasing `a`, then the rest by
/// decreasing `b`; ties by job index.
pub fn johnson_order(jobs: &[FlowshopJob]) -> Result<Permutation> {
    let (mut first, mut second): (Vec<usize>, Vec<usize>) =
        (1..=jobs.len()).partition(|&j| jobs[j - 1].a <= jobs[j - 1].b);
    first.sort_by(|&x, &y| jobs[x - 1].a.cmp(&jobs[y - 1].a).then(x.cmp(&y)));
    second.sort_by(|&x, &y| jobs[y - 1].b.cmp(&jobs[x - 1].b).then(x.cmp(&y)));
    first.extend(second);
    Permutation::new(&first)
}

/// Random weighted-completion instance with integer parameters in
/// `1..=max_param`.
pub fn random_weighted_jobs(n: usize, max_param: i64, seed: u64) -> Vec<WeightedJob> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| WeightedJob {
            p: Value::from_int(rng.gen_range(1..=max_param)),
            w: Value::from_int(rng.gen_range(1..=max_param)),
        })
        .collect()
}

/// Random flow-shop instance with integer times in `1..=max_param`.
pub fn random_flowshop_jobs(n: usize, max_param: i64, seed: u64) -> Vec<FlowshopJob> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| FlowshopJob {
            a: Value::from_int(rng.gen_range(1..=max_param)),
            b: Value::from_int(rng.gen_range(1..=max_param)),
        })
        .collect()
}
