//! Switch Markov chain on the labeled realizations of a degree sequence.
//!
//! One step draws an ordered pair of distinct edges and an orientation for
//! each, giving `(a, b), (c, d)`. If the four endpoints are distinct and
//! `ac`, `bd` are both non-edges, the pair is replaced by `ac, bd`;
//! otherwise the chain stays put. The proposal is symmetric, so the
//! stationary distribution is uniform over realizations.
//!
//! Randomness comes from ChaCha8 seeded with a single `u64`
//! ([`RNG_ALGORITHM`]), so trajectories are reproducible.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::graphicality::is_graphic;
use crate::sequence::DegreeSequence;

pub const RNG_ALGORITHM: &str = "ChaCha8Rng(seed_from_u64)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainConfig {
    pub seed: u64,
    pub steps: u64,
    pub burn_in: u64,
    /// Record a progress snapshot every this many post-burn-in steps; 0 disables.
    pub report_every: u64,
}

impl Default for ChainConfig {
    fn default() -> Self {
        Self { seed: 0, steps: 10_000, burn_in: 0, report_every: 0 }
    }
}

/// Canonical key of a labeled graph: its sorted edge list.
pub type StateKey = Vec<(usize, usize)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    Switched,
    Rejected,
}

/// A running chain. Keeps an edge list next to the adjacency bitsets so an
/// edge can be drawn in O(1).
#[derive(Debug, Clone)]
pub struct SwitchChain<R: Rng = ChaCha8Rng> {
    graph: LabeledGraph,
    edges: Vec<(usize, usize)>,
    rng: R,
}

impl SwitchChain<ChaCha8Rng> {
    pub fn seeded(graph: LabeledGraph, seed: u64) -> Self {
        Self::with_rng(graph, ChaCha8Rng::seed_from_u64(seed))
    }
}

impl<R: Rng> SwitchChain<R> {
    pub fn with_rng(graph: LabeledGraph, rng: R) -> Self {
        let edges = graph.edges();
        Self { graph, edges, rng }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn into_graph(self) -> LabeledGraph {
        self.graph
    }

    pub fn step(&mut self) -> StepOutcome {
        let m = self.edges.len();
        if m < 2 {
            return StepOutcome::Rejected;
        }
        let x = self.rng.gen_range(0..m);
        let mut y = self.rng.gen_range(0..m - 1);
        if y >= x {
            y += 1;
        }
        let orient = |(u, v): (usize, usize), flip: bool| if flip { (v, u) } else { (u, v) };
        let (a, b) = orient(self.edges[x], self.rng.gen());
        let (c, d) = orient(self.edges[y], self.rng.gen());
        if a == c || a == d || b == c || b == d {
            return StepOutcome::Rejected;
        }
        if self.graph.has_edge(a, c) || self.graph.has_edge(b, d) {
            return StepOutcome::Rejected;
        }
        self.graph.remove_edge(a, b);
        self.graph.remove_edge(c, d);
        self.graph.add_edge(a, c);
        self.graph.add_edge(b, d);
        self.edges[x] = (a.min(c), a.max(c));
        self.edges[y] = (b.min(d), b.max(d));
        StepOutcome::Switched
    }
}

/// One switch step from `g`. Fails with `NoEdges` when `g` has fewer than
/// two edges, where the chain cannot move.
pub fn switch_step<R: Rng>(g: &LabeledGraph, rng: &mut R) -> Result<LabeledGraph> {
    if g.edge_count() < 2 {
        return Err(Error::NoEdges);
    }
    let mut chain = SwitchChain::with_rng(g.clone(), rng);
    chain.step();
    Ok(chain.into_graph())
}

/// Havel–Hakimi construction: repeatedly join the vertex of largest
/// residual degree to the next largest ones. Labels follow the sorted
/// order of `d`; ties are broken by smaller label.
pub fn havel_hakimi(d: &DegreeSequence) -> Result<LabeledGraph> {
    let n = d.len();
    let mut residual: Vec<u32> = d.degrees().to_vec();
    let mut g = LabeledGraph::empty(n);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let v = order[0];
        let need = residual[v] as usize;
        if need == 0 {
            break;
        }
        if need >= n || residual[order[need]] == 0 {
            return Err(Error::NotGraphic);
        }
        residual[v] = 0;
        for &u in &order[1..=need] {
            g.add_edge(v, u);
            residual[u] -= 1;
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub step: u64,
    pub distinct_states: usize,
    pub acceptance_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleResult {
    pub final_graph: LabeledGraph,
    /// Visits per state after burn-in, one per step.
    pub histogram: BTreeMap<StateKey, u64>,
    pub accepted: u64,
    pub rejected: u64,
    pub snapshots: Vec<Snapshot>,
    pub rng: String,
}

/// Runs `burn_in + steps` switch steps from the Havel–Hakimi realization
/// of `d` and records the state after each post-burn-in step.
pub fn sample(d: &DegreeSequence, cfg: &ChainConfig) -> Result<SampleResult> {
    if !is_graphic(d).graphic {
        return Err(Error::NotGraphic);
    }
    let mut chain = SwitchChain::seeded(havel_hakimi(d)?, cfg.seed);
    for _ in 0..cfg.burn_in {
        chain.step();
    }
    let mut histogram = BTreeMap::new();
    let (mut accepted, mut rejected) = (0, 0);
    let mut snapshots = Vec::new();
    for step in 1..=cfg.steps {
        match chain.step() {
            StepOutcome::Switched => accepted += 1,
            StepOutcome::Rejected => rejected += 1,
        }
        *histogram.entry(chain.graph().edges()).or_insert(0) += 1;
        if cfg.report_every > 0 && step % cfg.report_every == 0 {
            snapshots.push(Snapshot {
                step,
                distinct_states: histogram.len(),
                acceptance_rate: accepted as f64 / step as f64,
            });
        }
    }
    Ok(SampleResult {
        final_graph: chain.into_graph(),
        histogram,
        accepted,
        rejected,
        snapshots,
        rng: RNG_ALGORITHM.to_string(),
    })
}

/// Total variation distance between the empirical histogram and the uniform
/// distribution on `state_count` states. States never visited count with
/// empirical mass zero.
pub fn tv_distance_to_uniform(histogram: &BTreeMap<StateKey, u64>, state_count: usize) -> f64 {
    let total: u64 = histogram.values().sum();
    if total == 0 || state_count == 0 {
        return 1.0;
    }
    let u = 1.0 / state_count as f64;
    let visited: f64 = histogram.values().map(|&c| (c as f64 / total as f64 - u).abs()).sum();
    let unvisited = state_count.saturating_sub(histogram.len()) as f64 * u;
    0.5 * (visited + unvisited)
}

/// Every graph one switch away from `g`.
pub fn switch_neighbors(g: &LabeledGraph) -> Vec<LabeledGraph> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[x + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            for (p, q, r, s) in [(a, c, b, d), (a, d, b, c)] {
                if !g.has_edge(p, q) && !g.has_edge(r, s) {
                    let mut h = g.clone();
                    h.remove_edge(a, b);
                    h.remove_edge(c, d);
                    h.add_edge(p, q);
                    h.add_edge(r, s);
                    out.push(h);
                }
            }
        }
    }
    out
}

/// Breadth-first search of the switch graph on `states`. Returns the number
/// of states reachable from the first one.
pub fn reachable_states(states: &[LabeledGraph]) -> usize {
    let Some(start) = states.first() else {
        return 0;
    };
    let index: HashMap<&LabeledGraph, usize> = states.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut seen = HashSet::from([0usize]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(g) = queue.pop_front() {
        for h in switch_neighbors(&g) {
            let i = *index.get(&h).expect("switch preserves the degree sequence");
            if seen.insert(i) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}
