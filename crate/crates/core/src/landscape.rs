//! Operational digraphs over the whole permutation space.
//!
//! Nodes are all `n!` permutations, indexed by lexicographic rank. Arcs come
//! from k-interchange neighborhoods and, depending on [`DigraphMode`], are
//! filtered by objective value:
//!
//! - `moves`: every neighbor (`G^k`, symmetric).
//! - `strict`: arcs `u -> v` with `f(v) < f(u)` (`D^{k<}`, acyclic).
//! - `weak`: arcs `u -> v` with `f(v) <= f(u)` (`D^{k<=}`); each equal-valued
//!   adjacent pair contributes arcs in both directions.
//!
//! Reachability to the optimum set is computed by reverse breadth-first
//! traversal from the optima, which also yields the shortest directed path
//! length from each node.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::table_row;
use crate::objective::{exhaustive_minimizers, Objective, ObjectiveDescriptor, Value};
use crate::perm::{KNeighborhood, PermSpace, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DigraphMode {
    Moves,
    Strict,
    Weak,
}

impl DigraphMode {
    fn admits(self, from: Value, to: Value) -> bool {
        match self {
            DigraphMode::Moves => true,
            DigraphMode::Strict => to < from,
            DigraphMode::Weak => to <= from,
        }
    }
}

impl fmt::Display for DigraphMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DigraphMode::Moves => "moves",
            DigraphMode::Strict => "strict",
            DigraphMode::Weak => "weak",
        })
    }
}

impl std::str::FromStr for DigraphMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moves" => Ok(DigraphMode::Moves),
            "strict" => Ok(DigraphMode::Strict),
            "weak" => Ok(DigraphMode::Weak),
            other => Err(Error::InvalidConfig(format!("unknown digraph mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OperationalDigraph {
    space: PermSpace,
    k: usize,
    mode: DigraphMode,
    // Sorted out-neighbor ranks per node.
    arcs: Vec<Vec<u32>>,
    objective_id: Option<String>,
    values: Option<Vec<Value>>,
}

impl OperationalDigraph {
    pub fn space(&self) -> &PermSpace {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> DigraphMode {
        self.mode
    }

    pub fn objective_id(&self) -> Option<&str> {
        self.objective_id.as_deref()
    }

    /// Objective values by node, absent in moves mode without an objective.
    pub fn values(&self) -> Option<&[Value]> {
        self.values.as_deref()
    }

    pub fn node_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.iter().map(Vec::len).sum()
    }

    pub fn out_arcs(&self, node: usize) -> &[u32] {
        &self.arcs[node]
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs[from].binary_search(&(to as u32)).is_ok()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.arcs.len()];
        for outs in &self.arcs {
            for &v in outs {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    pub fn reversed(&self) -> Vec<Vec<u32>> {
        let mut rev = vec![Vec::new(); self.arcs.len()];
        for (u, outs) in self.arcs.iter().enumerate() {
            for &v in outs {
                rev[v as usize].push(u as u32);
            }
        }
        rev
    }

    /// Arc set containment in another digraph over the same space.
    pub fn arcs_subset_of(&self, other: &OperationalDigraph) -> bool {
        self.node_count() == other.node_count()
            && self
                .arcs
                .iter()
                .enumerate()
                .all(|(u, outs)| outs.iter().all(|&v| other.has_arc(u, v as usize)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(u, outs)| outs.iter().all(|&v| self.has_arc(v as usize, u)))
    }

    /// Kahn's algorithm.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = self.in_degrees();
        let mut queue: VecDeque<usize> = (0..indeg.len()).filter(|&u| indeg[u] == 0).collect();
        let mut seen = 0;
        while let Some(u) = queue.pop_front() {
            seen += 1;
            for &v in &self.arcs[u] {
                let v = v as usize;
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        seen == self.arcs.len()
    }
}

/// Builds `G^k` (moves), `D^{k<}` (strict) or `D^{k<=}` (weak). Node-local
/// neighborhoods are generated in parallel.
pub fn build_digraph(
    space: &PermSpace,
    f: Option<&Objective>,
    k: usize,
    mode: DigraphMode,
) -> Result<OperationalDigraph> {
    let hood = KNeighborhood::new(space.n(), k)?;
    if mode != DigraphMode::Moves && f.is_none() {
        return Err(Error::MissingObjective);
    }
    let values = f.map(|f| f.evaluate_space(space)).transpose()?;
    let arcs = (0..space.len())
        .into_par_iter()
        .map(|u| {
            let s = space.unrank(u)?;
            let mut outs = Vec::with_capacity(hood.max_size());
            for x in hood.neighbors(&s)? {
                let v = space.rank(&x)?;
                let keep = match &values {
                    Some(vals) => mode.admits(vals[u], vals[v]),
                    None => true,
                };
                if keep {
                    outs.push(v as u32);
                }
            }
            outs.sort_unstable();
            Ok(outs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OperationalDigraph {
        space: *space,
        k,
        mode,
        arcs,
        objective_id: f.map(|f| f.id().to_string()),
        values,
    })
}

/// Breadth-first distances in the k-interchange move graph from every
/// permutation to `target`, indexed by lex rank. The move graph is
/// connected for every `k >= 2`, so all distances are finite.
pub fn move_distances(space: &PermSpace, k: usize, target: &Permutation) -> Result<Vec<u32>> {
    move_distances_multi(space, k, std::slice::from_ref(target))
}

fn move_distances_multi(space: &PermSpace, k: usize, sources: &[Permutation]) -> Result<Vec<u32>> {
    let hood = KNeighborhood::new(space.n(), k)?;
    let mut dist = vec![u32::MAX; space.len()];
    let mut queue = VecDeque::new();
    for s in sources {
        let r = space.rank(s)?;
        if dist[r] != 0 {
            dist[r] = 0;
            queue.push_back(r);
        }
    }
    // Moves are symmetric, so distance to the sources equals distance from them.
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for x in hood.neighbors(&space.unrank(u)?)? {
            let v = space.rank(&x)?;
            if dist[v] == u32::MAX {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// Distance levels `g_k` around a target set in the move graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStructure {
    pub n: usize,
    pub k: usize,
    pub targets: Vec<Permutation>,
    /// `g_k` per node, indexed by lex rank.
    pub distances: Vec<u32>,
    /// `L`, the largest distance.
    pub max_distance: u32,
    /// Level `i` holds the lex ranks of the nodes at distance `i`.
    pub levels: Vec<Vec<usize>>,
}

impl LevelStructure {
    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    fn from_distances(space: &PermSpace, k: usize, targets: Vec<Permutation>, distances: Vec<u32>) -> Self {
        let max_distance = distances.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); max_distance as usize + 1];
        for (r, &d) in distances.iter().enumerate() {
            levels[d as usize].push(r);
        }
        LevelStructure {
            n: space.n(),
            k,
            targets,
            distances,
            max_distance,
            levels,
        }
    }
}

pub fn compute_levels(space: &PermSpace, k: usize, target: &Permutation) -> Result<LevelStructure> {
    let distances = move_distances(space, k, target)?;
    Ok(LevelStructure::from_distances(
        space,
        k,
        vec![target.clone()],
        distances,
    ))
}

/// Levels around a set of targets (multi-source distances).
pub fn compute_levels_multi(space: &PermSpace, k: usize, targets: &[Permutation]) -> Result<LevelStructure> {
    if targets.is_empty() {
        return Err(Error::EmptyOptima);
    }
    let distances = move_distances_multi(space, k, targets)?;
    Ok(LevelStructure::from_distances(space, k, targets.to_vec(), distances))
}

/// Shortest directed path length from every node to the nearest optimum,
/// `None` where no directed path exists.
pub fn distances_to_optima(d: &OperationalDigraph, optima: &[Permutation]) -> Result<Vec<Option<u32>>> {
    if optima.is_empty() {
        return Err(Error::EmptyOptima);
    }
    let rev = d.reversed();
    let mut dist = vec![None; d.node_count()];
    let mut queue = VecDeque::new();
    for p in optima {
        let r = d.space.rank(p)?;
        if dist[r].is_none() {
            dist[r] = Some(0);
            queue.push_back(r);
        }
    }
    while let Some(v) = queue.pop_front() {
        let next = dist[v].map(|x| x + 1);
        for &u in &rev[v] {
            let u = u as usize;
            if dist[u].is_none() {
                dist[u] = next;
                queue.push_back(u);
            }
        }
    }
    Ok(dist)
}

/// All nodes with a directed path (possibly empty) to some optimum, in
/// lexicographic order.
pub fn reachability_to_optima(d: &OperationalDigraph, optima: &[Permutation]) -> Result<Vec<Permutation>> {
    distances_to_optima(d, optima)?
        .iter()
        .enumerate()
        .filter(|(_, x)| x.is_some())
        .map(|(r, _)| d.space.unrank(r))
        .collect()
}

fn local_optimum_mask(values: &[Value], space: &PermSpace, k: usize) -> Result<Vec<bool>> {
    let hood = KNeighborhood::new(space.n(), k)?;
    (0..space.len())
        .into_par_iter()
        .map(|u| {
            for x in hood.neighbors(&space.unrank(u)?)? {
                if values[space.rank(&x)?] < values[u] {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect()
}

/// Every permutation whose improving set `V^{k<}` is empty.
pub fn enumerate_local_optima(f: &Objective, space: &PermSpace, k: usize) -> Result<Vec<Permutation>> {
    let values = f.evaluate_space(space)?;
    let mask = local_optimum_mask(&values, space, k)?;
    mask.iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(r, _)| space.unrank(r))
        .collect()
}

/// Weak-mode reachability computed without the digraph: sweep objective
/// values upward; a node joins when it has an improving neighbor already
/// known to reach an optimum, then membership floods across its
/// equal-valued plateau.
pub fn plateau_escape_fixpoint(
    f: &Objective,
    space: &PermSpace,
    k: usize,
    optima: &[Permutation],
) -> Result<Vec<Permutation>> {
    if optima.is_empty() {
        return Err(Error::EmptyOptima);
    }
    let hood = KNeighborhood::new(space.n(), k)?;
    let values = f.evaluate_space(space)?;
    let mut good = vec![false; space.len()];
    for p in optima {
        good[space.rank(p)?] = true;
    }
    let mut by_value: BTreeMap<Value, Vec<usize>> = BTreeMap::new();
    for (r, v) in values.iter().enumerate() {
        by_value.entry(*v).or_default().push(r);
    }
    for (level_value, nodes) in &by_value {
        let mut queue = VecDeque::new();
        for &u in nodes {
            if good[u] {
                queue.push_back(u);
                continue;
            }
            for x in hood.neighbors(&space.unrank(u)?)? {
                let v = space.rank(&x)?;
                if values[v] < *level_value && good[v] {
                    good[u] = true;
                    queue.push_back(u);
                    break;
                }
            }
        }
        while let Some(u) = queue.pop_front() {
            for x in hood.neighbors(&space.unrank(u)?)? {
                let v = space.rank(&x)?;
                if values[v] == *level_value && !good[v] {
                    good[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    good.iter()
        .enumerate()
        .filter(|(_, &g)| g)
        .map(|(r, _)| space.unrank(r))
        .collect()
}

/// Every non-optimal point has a nonempty improving set.
pub fn improving_everywhere(f: &Objective, space: &PermSpace, k: usize) -> Result<bool> {
    let values = f.evaluate_space(space)?;
    let best = *values.iter().min().expect("nonempty space");
    let mask = local_optimum_mask(&values, space, k)?;
    Ok(mask.iter().zip(&values).all(|(&lo, &v)| !lo || v == best))
}

/// Every non-optimal point either has an improving neighbor or reaches,
/// through equal-valued neighbors, a point that does.
pub fn plateau_escape_everywhere(f: &Objective, space: &PermSpace, k: usize) -> Result<bool> {
    let hood = KNeighborhood::new(space.n(), k)?;
    let values = f.evaluate_space(space)?;
    let best = *values.iter().min().expect("nonempty space");
    let lo = local_optimum_mask(&values, space, k)?;
    let mut escapes: Vec<bool> = lo.iter().map(|&l| !l).collect();
    let mut queue: VecDeque<usize> = (0..space.len()).filter(|&u| escapes[u]).collect();
    while let Some(u) = queue.pop_front() {
        for x in hood.neighbors(&space.unrank(u)?)? {
            let v = space.rank(&x)?;
            if values[v] == values[u] && !escapes[v] {
                escapes[v] = true;
                queue.push_back(v);
            }
        }
    }
    Ok(escapes.iter().zip(&values).all(|(&e, &v)| e || v == best))
}

/// One nesting comparison `arcs(k) ⊆ arcs(k + 1)` in a given mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestingCheck {
    pub k: usize,
    pub mode: DigraphMode,
    pub arcs_k: usize,
    pub arcs_next: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestingReport {
    pub n: usize,
    pub kmax: usize,
    pub checks: Vec<NestingCheck>,
    pub holds: bool,
}

/// Checks `O^k ⊆ O^{k+1}` for every `k` in `2..kmax`: always for the move
/// graphs, and for the strict and weak digraphs when `f` is supplied.
pub fn verify_nesting(space: &PermSpace, kmax: usize, f: Option<&Objective>) -> Result<NestingReport> {
    if kmax > space.n() {
        return Err(Error::InvalidK { k: kmax, n: space.n() });
    }
    let mut modes = vec![DigraphMode::Moves];
    if f.is_some() {
        modes.extend([DigraphMode::Strict, DigraphMode::Weak]);
    }
    let mut checks = Vec::new();
    for mode in modes {
        let obj = if mode == DigraphMode::Moves { None } else { f };
        let mut prev: Option<OperationalDigraph> = None;
        for k in 2..=kmax {
            let cur = build_digraph(space, obj, k, mode)?;
            if let Some(lower) = prev {
                checks.push(NestingCheck {
                    k: k - 1,
                    mode,
                    arcs_k: lower.arc_count(),
                    arcs_next: cur.arc_count(),
                    holds: lower.arcs_subset_of(&cur),
                });
            }
            prev = Some(cur);
        }
    }
    let holds = checks.iter().all(|c| c.holds);
    Ok(NestingReport {
        n: space.n(),
        kmax,
        checks,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LandscapeReport {
    pub tool_version: String,
    pub objective: ObjectiveDescriptor,
    pub n: usize,
    pub k: usize,
    pub mode: DigraphMode,
    pub node_count: usize,
    pub arc_count: usize,
    pub global_optima: Vec<Permutation>,
    pub optimum_value: Value,
    pub reach_set: Vec<Permutation>,
    pub reach_count: usize,
    /// `reach_count / n!` reduced, e.g. `"5/24"`.
    pub reach_fraction_exact: Value,
    pub reach_fraction: f64,
    /// Every node has a directed path to an optimum.
    pub property1: bool,
    pub local_optima: Vec<Permutation>,
    /// Levels of `g_k` around the optimum set in the move graph.
    pub level_count: usize,
    /// Longest shortest directed path (in arcs) from a node of the reach
    /// set to the optimum set.
    pub max_shortest_path_to_optimum: u32,
    /// `n(n-1)/2`, the explicit stand-in for a polynomial path bound.
    pub path_bound: u32,
    /// `property1` and `max_shortest_path_to_optimum <= path_bound`.
    pub property2_bound_holds: bool,
    /// Every non-optimal node has an improving neighbor.
    pub improving_everywhere: bool,
    /// Every non-optimal node escapes its plateau to a node with an
    /// improving neighbor.
    pub plateau_escape_everywhere: bool,
    /// This digraph's arcs are contained in the same mode's digraph at
    /// `k + 1` (vacuously true at `k = n`).
    pub nesting_verified: bool,
}

/// Full structural analysis of `f` under one digraph mode.
pub fn analyze(f: &Objective, space: &PermSpace, k: usize, mode: DigraphMode) -> Result<LandscapeReport> {
    f.check_arity(space.n())?;
    let n = space.n();
    let global_optima = match f.known_optima() {
        Some(opt) => opt.to_vec(),
        None => exhaustive_minimizers(f, space)?,
    };
    let optimum_value = f.evaluate(&global_optima[0])?;
    let digraph = build_digraph(space, Some(f), k, mode)?;
    let dist = distances_to_optima(&digraph, &global_optima)?;
    let reach_set: Vec<Permutation> = dist
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_some())
        .map(|(r, _)| space.unrank(r))
        .collect::<Result<_>>()?;
    let reach_count = reach_set.len();
    let max_path = dist.iter().flatten().copied().max().unwrap_or(0);
    let path_bound = (n * (n - 1) / 2) as u32;
    let property1 = reach_count == space.len();
    let levels = compute_levels_multi(space, k, &global_optima)?;
    let nesting_verified = if k < n {
        let next = build_digraph(space, Some(f), k + 1, mode)?;
        digraph.arcs_subset_of(&next)
    } else {
        true
    };
    Ok(LandscapeReport {
        tool_version: crate::VERSION.to_string(),
        objective: f.descriptor(),
        n,
        k,
        mode,
        node_count: digraph.node_count(),
        arc_count: digraph.arc_count(),
        optimum_value,
        reach_count,
        reach_fraction_exact: Value::new(reach_count as i64, space.len() as i64)?,
        reach_fraction: reach_count as f64 / space.len() as f64,
        property1,
        local_optima: enumerate_local_optima(f, space, k)?,
        level_count: levels.level_count(),
        max_shortest_path_to_optimum: max_path,
        path_bound,
        property2_bound_holds: property1 && max_path <= path_bound,
        improving_everywhere: improving_everywhere(f, space, k)?,
        plateau_escape_everywhere: plateau_escape_everywhere(f, space, k)?,
        nesting_verified,
        global_optima,
        reach_set,
    })
}

/// How node labels are numbered in DOT output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeNumbering {
    /// 1-based rows of the reference table layout (lex order rotated by half).
    #[default]
    TableRow,
    /// 0-based lexicographic rank.
    LexRank,
}

impl std::str::FromStr for NodeNumbering {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" | "table_row" => Ok(NodeNumbering::TableRow),
            "lex" | "lex_rank" => Ok(NodeNumbering::LexRank),
            other => Err(Error::InvalidConfig(format!("unknown numbering {other:?}"))),
        }
    }
}

fn node_id(p: &Permutation) -> String {
    format!(
        "p{}",
        p.as_slice().iter().map(|v| v.to_string()).collect::<Vec<_>>().join("_")
    )
}

/// Renders the digraph in DOT. Objective-filtered digraphs label nodes
/// `"<number>: <perm> (f=<value>)"` and group equal values into `rank=same`
/// subgraphs, highest value first; move graphs use undirected edge style
/// and list each edge once.
pub fn to_dot(d: &OperationalDigraph, numbering: NodeNumbering) -> Result<String> {
    let space = d.space;
    let label_num = |r: usize, p: &Permutation| -> Result<usize> {
        match numbering {
            NodeNumbering::TableRow => table_row(&space, p),
            NodeNumbering::LexRank => Ok(r),
        }
    };
    let annotate = d.mode != DigraphMode::Moves && d.values.is_some();
    let mut out = String::new();
    let name = match d.mode {
        DigraphMode::Moves => format!("G{}", d.k),
        DigraphMode::Strict => format!("D{}_strict", d.k),
        DigraphMode::Weak => format!("D{}_weak", d.k),
    };
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=ellipse];").unwrap();
    if d.mode == DigraphMode::Moves {
        writeln!(out, "  edge [dir=none];").unwrap();
    }
    if annotate {
        let values = d.values.as_ref().expect("checked above");
        let mut groups: BTreeMap<std::cmp::Reverse<Value>, Vec<usize>> = BTreeMap::new();
        for (r, v) in values.iter().enumerate() {
            groups.entry(std::cmp::Reverse(*v)).or_default().push(r);
        }
        for (i, (std::cmp::Reverse(v), nodes)) in groups.iter().enumerate() {
            writeln!(out, "  subgraph level_{i} {{").unwrap();
            writeln!(out, "    rank=same;").unwrap();
            for &r in nodes {
                let p = space.unrank(r)?;
                writeln!(
                    out,
                    "    {} [label=\"{}: {} (f={})\"];",
                    node_id(&p),
                    label_num(r, &p)?,
                    p.key(),
                    v
                )
                .unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
    } else {
        for r in 0..space.len() {
            let p = space.unrank(r)?;
            writeln!(out, "  {} [label=\"{}: {}\"];", node_id(&p), label_num(r, &p)?, p.key()).unwrap();
        }
    }
    for (u, outs) in d.arcs.iter().enumerate() {
        let pu = space.unrank(u)?;
        for &v in outs {
            let v = v as usize;
            if d.mode == DigraphMode::Moves && v < u {
                continue;
            }
            let pv = space.unrank(v)?;
            writeln!(out, "  {} -> {};", node_id(&pu), node_id(&pv)).unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn export_dot(d: &OperationalDigraph, path: impl AsRef<Path>, numbering: NodeNumbering) -> Result<()> {
    let path = path.as_ref();
    let text = to_dot(d, numbering)?;
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::table1_objective;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn keys(v: &[Permutation]) -> Vec<String> {
        v.iter().map(Permutation::key).collect()
    }

    #[test]
    fn moves_graph_k2_n4() {
        let space = PermSpace::new(4).unwrap();
        let g = build_digraph(&space, None, 2, DigraphMode::Moves).unwrap();
        assert_eq!(g.node_count(), 24);
        assert_eq!(g.arc_count() / 2, 36);
        assert!(g.is_symmetric());
    }

    #[test]
    fn strict_in_arcs_of_identity() {
        let space = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let d = build_digraph(&space, Some(&f), 2, DigraphMode::Strict).unwrap();
        let id = space.rank(&p("1234")).unwrap();
        let mut sources: Vec<String> = (0..24)
            .filter(|&u| d.has_arc(u, id))
            .map(|u| space.unrank(u).unwrap().key())
            .collect();
        sources.sort();
        assert_eq!(sources, vec!["1243", "1324", "2134"]);
        assert!(d.is_acyclic());
    }

    #[test]
    fn weak_has_opposite_arcs_on_ties() {
        let space = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let d = build_digraph(&space, Some(&f), 2, DigraphMode::Weak).unwrap();
        let a = space.rank(&p("4312")).unwrap();
        let b = space.rank(&p("3412")).unwrap();
        assert!(d.has_arc(a, b) && d.has_arc(b, a));
        assert!(!d.is_acyclic());
    }

    #[test]
    fn missing_objective() {
        let space = PermSpace::new(4).unwrap();
        assert!(matches!(
            build_digraph(&space, None, 2, DigraphMode::Strict),
            Err(Error::MissingObjective)
        ));
        assert!(matches!(
            build_digraph(&space, None, 5, DigraphMode::Moves),
            Err(Error::InvalidK { .. })
        ));
    }

    #[test]
    fn level_counts() {
        let space = PermSpace::new(4).unwrap();
        let id = p("1234");
        let l2 = compute_levels(&space, 2, &id).unwrap();
        assert_eq!(l2.level_count(), 7);
        assert_eq!(l2.levels[0], vec![0]);
        let l3 = compute_levels(&space, 3, &id).unwrap();
        assert_eq!((l3.max_distance, l3.level_count()), (3, 4));
        assert_eq!(compute_levels(&space, 4, &id).unwrap().level_count(), 2);
    }

    #[test]
    fn reach_sets_of_reference_table() {
        let space = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let opt = [p("1234")];
        let strict2 = build_digraph(&space, Some(&f), 2, DigraphMode::Strict).unwrap();
        assert_eq!(
            keys(&reachability_to_optima(&strict2, &opt).unwrap()),
            vec!["1234", "1243", "1324", "2134", "2143"]
        );
        let weak2 = build_digraph(&space, Some(&f), 2, DigraphMode::Weak).unwrap();
        assert_eq!(reachability_to_optima(&weak2, &opt).unwrap().len(), 24);
        let strict3 = build_digraph(&space, Some(&f), 3, DigraphMode::Strict).unwrap();
        assert_eq!(reachability_to_optima(&strict3, &opt).unwrap().len(), 24);
        assert!(matches!(reachability_to_optima(&strict3, &[]), Err(Error::EmptyOptima)));
    }

    #[test]
    fn local_optima_of_reference_table() {
        let space = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let lo2 = enumerate_local_optima(&f, &space, 2).unwrap();
        assert!(lo2.contains(&p("4312")));
        // Frozen from a brute-force pass over the 24 table values.
        assert_eq!(
            keys(&lo2),
            vec![
                "1234", "1342", "1423", "1432", "2314", "2413", "2431", "3124", "3214", "3412", "3421", "4213", "4312"
            ]
        );
        assert_eq!(keys(&enumerate_local_optima(&f, &space, 3).unwrap()), vec!["1234"]);
        assert_eq!(keys(&enumerate_local_optima(&f, &space, 4).unwrap()), vec!["1234"]);
    }

    #[test]
    fn nesting_small() {
        let space4 = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let r = verify_nesting(&space4, 4, Some(&f)).unwrap();
        assert!(r.holds);
        assert_eq!(r.checks.len(), 6);
        let r5 = verify_nesting(&PermSpace::new(5).unwrap(), 5, None).unwrap();
        assert!(r5.holds);
        let vacuous = verify_nesting(&space4, 2, None).unwrap();
        assert!(vacuous.holds && vacuous.checks.is_empty());
    }

    #[test]
    fn analyze_reference_table() {
        let space = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let s2 = analyze(&f, &space, 2, DigraphMode::Strict).unwrap();
        assert!(!s2.property1);
        assert_eq!(s2.reach_fraction_exact, Value::new(5, 24).unwrap());
        assert!(!s2.improving_everywhere);
        let w2 = analyze(&f, &space, 2, DigraphMode::Weak).unwrap();
        assert!(w2.property1);
        assert!(w2.plateau_escape_everywhere);
        let s3 = analyze(&f, &space, 3, DigraphMode::Strict).unwrap();
        assert!(s3.property1);
        assert_eq!(s3.max_shortest_path_to_optimum, 3);
        assert_eq!(s3.level_count, 4);
        assert!(s3.property2_bound_holds);
        assert!(s3.nesting_verified);
    }

    #[test]
    fn plateau_fixpoint_matches_reference() {
        let space = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let opt = [p("1234")];
        for k in 2..=4 {
            let weak = build_digraph(&space, Some(&f), k, DigraphMode::Weak).unwrap();
            assert_eq!(
                plateau_escape_fixpoint(&f, &space, k, &opt).unwrap(),
                reachability_to_optima(&weak, &opt).unwrap()
            );
        }
    }

    #[test]
    fn dot_labels_and_in_degree() {
        let space = PermSpace::new(4).unwrap();
        let f = table1_objective();
        let d = build_digraph(&space, Some(&f), 2, DigraphMode::Strict).unwrap();
        let text = to_dot(&d, NodeNumbering::TableRow).unwrap();
        assert!(text.contains("p1_2_3_4 [label=\"13: 1234 (f=0)\"]"));
        assert_eq!(text.matches("[label=").count(), 24);
        assert_eq!(text.matches("-> p1_2_3_4;").count(), 3);
        assert_eq!(text.matches("rank=same").count(), 4);

        let g = build_digraph(&space, None, 2, DigraphMode::Moves).unwrap();
        let text = to_dot(&g, NodeNumbering::LexRank).unwrap();
        assert!(text.contains("edge [dir=none]"));
        assert!(!text.contains("(f="));
        assert_eq!(text.matches(" -> ").count(), 36);
        assert!(text.contains("[label=\"0: 1234\"]"));
    }

    #[test]
    fn dot_unwritable_path() {
        let space = PermSpace::new(3).unwrap();
        let g = build_digraph(&space, None, 2, DigraphMode::Moves).unwrap();
        let err = export_dot(&g, "/nonexistent-dir/x/g.dot", NodeNumbering::TableRow).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }
}
