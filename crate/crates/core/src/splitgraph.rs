//! Split sequences, the split witness inside a non fully graphic region,
//! Tyshkevich composition and the non-P-stability witness built from them.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::enumeration::{h_prime_perturbation, h_realization, Counter};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::graphicality::{is_graphic, very_simple_region_fully_graphic};
use crate::sequence::{DegreeSequence, Perturbation, Region, VerySimpleRegion};

/// Hammer–Simeone test: with `m` the largest `i` such that `d_i >= i - 1`,
/// `D` is split iff `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitVerdict {
    pub is_split: bool,
    pub m: usize,
    pub lhs: u64,
    pub rhs: u64,
}

pub fn is_split_sequence(d: &DegreeSequence) -> Result<SplitVerdict> {
    if !is_graphic(d).graphic {
        return Err(Error::NotGraphic);
    }
    let v = d.degrees();
    // d_i >= i - 1 fails from some point on, since d is non-increasing
    let m = (1..=v.len()).take_while(|&i| v[i - 1] as usize + 1 >= i).last().unwrap_or(0);
    let lhs: u64 = v[..m].iter().map(|&x| x as u64).sum();
    let rhs = (m * m.saturating_sub(1)) as u64 + v[m..].iter().map(|&x| x as u64).sum::<u64>();
    Ok(SplitVerdict { is_split: lhs == rhs, m, lhs, rhs })
}

/// A graph with a chosen partition into a clique `U` and an independent set
/// `W`. The partition need not be unique; equality compares graphs only.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SplitGraph {
    pub graph: LabeledGraph,
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl PartialEq for SplitGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl Eq for SplitGraph {}

impl SplitGraph {
    pub fn new(graph: LabeledGraph, mut clique: Vec<usize>, mut independent: Vec<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        clique.sort_unstable();
        independent.sort_unstable();
        let mut seen = vec![false; n];
        for &v in clique.iter().chain(&independent) {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidInput(format!("vertex {v} is out of range or listed twice")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput("clique and independent set do not cover the graph".into()));
        }
        if !graph.is_clique(&clique) {
            return Err(Error::InvalidInput("U does not induce a complete graph".into()));
        }
        if !graph.is_independent(&independent) {
            return Err(Error::InvalidInput("W does not induce an empty graph".into()));
        }
        Ok(Self { graph, clique, independent })
    }

    /// Finds some split partition by trying every subset as the clique.
    /// Exponential; intended for small graphs.
    pub fn search(graph: &LabeledGraph) -> Option<Self> {
        let n = graph.vertex_count();
        assert!(n < 32, "partition search is limited to small graphs");
        (0u32..1 << n).find_map(|mask| {
            let (u, w): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| mask >> v & 1 == 1);
            (graph.is_clique(&u) && graph.is_independent(&w))
                .then(|| SplitGraph { graph: graph.clone(), clique: u, independent: w })
        })
    }
}

/// How the cross edges between clique and independent part were laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossEdgeLayout {
    /// Edge `i < σ` joins `v_{i mod ℓ}` and `w_{i mod (n-ℓ)}`.
    RoundRobin,
    /// Edge `i < σ` joins `v_{i mod ℓ}` and `w_{⌊i / c2⌋}`. Used when the
    /// round-robin pairs repeat, i.e. `σ > lcm(ℓ, n - ℓ)`.
    Sequential,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SplitWitness {
    pub region: VerySimpleRegion,
    pub sequence: DegreeSequence,
    pub split: SplitGraph,
    pub ell: usize,
    pub sigma: u64,
    pub c: u64,
    pub alpha: u64,
    pub layout: CrossEdgeLayout,
}

/// For a region that is not fully graphic: take the smallest `ℓ` in
/// `[c2, c1]` with `ℓ c1 > ℓ(ℓ-1) + (n-ℓ) c2`, set `σ = (n-ℓ) c2`,
/// `c = ⌊σ/ℓ⌋`, `α = σ - ℓ c`, and return
/// `(ℓ+c)_α (ℓ+c-1)_{ℓ-α} (c2)_{n-ℓ}` with the realization made of a clique
/// on `ℓ` vertices plus `σ` cross edges to the other `n - ℓ` vertices.
///
/// Returns `Ok(None)` for fully graphic regions.
pub fn split_witness(r: &VerySimpleRegion) -> Result<Option<SplitWitness>> {
    let r = VerySimpleRegion::new(r.n, r.c1, r.c2)?;
    if very_simple_region_fully_graphic(&r) {
        return Ok(None);
    }
    let (n, c1, c2) = (r.n as u64, r.c1 as u64, r.c2 as u64);
    let ell = (c2..=c1)
        .find(|&l| l * c1 > l * l.saturating_sub(1) + (n - l) * c2)
        .ok_or_else(|| Error::Construction(format!("no admissible clique size in {r}")))?;
    if ell == 0 || ell >= n {
        return Err(Error::Construction(format!("clique size {ell} degenerate for {r}")));
    }
    let sigma = (n - ell) * c2;
    let c = sigma / ell;
    let alpha = sigma - ell * c;

    let (ell_u, rest) = (ell as usize, (n - ell) as usize);
    let round_robin: Vec<(usize, usize)> =
        (0..sigma as usize).map(|i| (i % ell_u, i % rest)).collect();
    let distinct = {
        let mut p = round_robin.clone();
        p.sort_unstable();
        p.dedup();
        p.len() == round_robin.len()
    };
    let (cross, layout) = if distinct {
        (round_robin, CrossEdgeLayout::RoundRobin)
    } else {
        let per_w = c2 as usize;
        let seq = (0..sigma as usize).map(|i| (i % ell_u, i / per_w)).collect();
        (seq, CrossEdgeLayout::Sequential)
    };

    let mut g = LabeledGraph::empty(r.n);
    for u in 0..ell_u {
        for v in u + 1..ell_u {
            g.add_edge(u, v);
        }
    }
    for &(v, w) in &cross {
        let w = ell_u + w;
        if g.has_edge(v, w) {
            return Err(Error::Construction(format!("repeated cross edge ({v}, {w})")));
        }
        g.add_edge(v, w);
    }

    let mut degrees = Vec::with_capacity(r.n);
    degrees.extend(std::iter::repeat_n((ell + c) as u32, alpha as usize));
    degrees.extend(std::iter::repeat_n((ell + c - 1) as u32, (ell - alpha) as usize));
    degrees.extend(std::iter::repeat_n(r.c2, rest));
    if g.degrees() != degrees {
        return Err(Error::Construction(format!(
            "realization has degrees {:?}, expected {:?}",
            g.degrees(),
            degrees
        )));
    }
    let sequence = DegreeSequence::new(degrees)?;
    if !sequence.is_member_of(&Region::VerySimple(r)) {
        return Err(Error::Construction(format!("witness {sequence} is not a member of {r}")));
    }
    let split = SplitGraph::new(g, (0..ell_u).collect(), (ell_u..r.n).collect())?;
    Ok(Some(SplitWitness { region: r, sequence, split, ell: ell_u, sigma, c, alpha, layout }))
}

/// `G ∘ H`: disjoint union of `G` (labels first) and `H`, plus every edge
/// between the clique of `G` and the vertices of `H`.
pub fn tyshkevich_compose(g: &SplitGraph, h: &LabeledGraph) -> LabeledGraph {
    let off = g.graph.vertex_count();
    let mut k = g.graph.disjoint_union(h);
    for &u in &g.clique {
        for v in 0..h.vertex_count() {
            k.add_edge(u, off + v);
        }
    }
    k
}

/// The composite as a split graph, when `H` is itself split: the clique is
/// `U_G ∪ U_H`, the independent set `W_G ∪ W_H`.
pub fn tyshkevich_compose_split(g: &SplitGraph, h: &SplitGraph) -> Result<SplitGraph> {
    let off = g.graph.vertex_count();
    let k = tyshkevich_compose(g, &h.graph);
    let clique = g.clique.iter().copied().chain(h.clique.iter().map(|v| v + off)).collect();
    let independent = g.independent.iter().copied().chain(h.independent.iter().map(|v| v + off)).collect();
    SplitGraph::new(k, clique, independent)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativityReport {
    pub count_g: BigUint,
    pub count_h: BigUint,
    pub count_composite: BigUint,
    pub holds: bool,
}

/// Checks `|G(d(G ∘ H))| = |G(d(G))| · |G(d(H))|` by exact counting.
pub fn verify_multiplicativity(
    counter: &mut Counter<BigUint>,
    g: &SplitGraph,
    h: &LabeledGraph,
) -> Result<MultiplicativityReport> {
    counter.check_size(g.graph.vertex_count() + h.vertex_count())?;
    let k = tyshkevich_compose(g, h);
    let count_g = counter.count(&g.graph.degree_sequence())?.count;
    let count_h = counter.count(&h.degree_sequence())?.count;
    let count_composite = counter.count(&k.degree_sequence())?.count;
    let holds = count_composite == &count_g * &count_h;
    Ok(MultiplicativityReport { count_g, count_h, count_composite, holds })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NonStabilityWitness {
    pub witness: SplitWitness,
    /// `m = n' - n`, the order of the attached `h_m` block (which has `2m`
    /// vertices, so the composite has `n + 2m`).
    pub m: usize,
    pub composite: LabeledGraph,
    pub e: DegreeSequence,
    /// Positions in the sorted `e` hit by the perturbation.
    pub perturbation: Perturbation,
    pub perturbed: DegreeSequence,
    pub verification: Option<WitnessVerification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessVerification {
    pub count_split: BigUint,
    pub count_e: BigUint,
    pub count_perturbed: BigUint,
    /// The split witness has a single labeled realization.
    pub split_unique: bool,
}

/// Composes the split witness of `D(n, c1, c2)` with the unique realization
/// of `h_{n'-n}` and perturbs the composite at the two `h`-block vertices
/// that turn `h_m` into `h'_m`. The composite has as many realizations as
/// the split witness, while the perturbed sequence has that many times
/// `|G(h'_m)|`, which grows exponentially in `m`.
pub fn nonstability_witness(
    n: usize,
    n_prime: usize,
    c1: u32,
    c2: u32,
    verify: Option<&mut Counter<BigUint>>,
) -> Result<Option<NonStabilityWitness>> {
    let region = VerySimpleRegion::new(n, c1, c2)?;
    if n_prime <= n {
        return Err(Error::InvalidInput(format!("need n' > n, got n'={n_prime}, n={n}")));
    }
    let Some(witness) = split_witness(&region)? else {
        return Ok(None);
    };
    let m = n_prime - n;
    let h = h_realization(m)?;
    let composite = tyshkevich_compose(&witness.split, &h);

    // h_m + 1^{+2m}_{+m}, carried to composite labels
    let hp = h_prime_perturbation(m)?;
    let (a, b) = (n + hp.i - 1, n + hp.j.expect("pair perturbation") - 1);
    let labeled = composite.degrees();
    let e = DegreeSequence::new(labeled.clone())?;
    let position = |label: usize| {
        // any position carrying the same value gives the same multiset
        e.degrees().iter().position(|&x| x == labeled[label]).expect("degree present") + 1
    };
    let (pa, pb) = (position(a), position(b));
    let pb = if pa == pb { pb + 1 } else { pb };
    let perturbation = Perturbation::plus_plus(pa, pb)?;
    let mut raw = labeled;
    raw[a] += 1;
    raw[b] += 1;
    let perturbed = DegreeSequence::new(raw)?;
    debug_assert_eq!(e.apply(&perturbation).ok().as_ref(), Some(&perturbed));

    let verification = match verify {
        Some(counter) => {
            counter.check_size(e.len())?;
            let count_split = counter.count(&witness.sequence)?.count;
            let count_e = counter.count(&e)?.count;
            let count_perturbed = counter.count(&perturbed)?.count;
            Some(WitnessVerification {
                split_unique: count_split.is_one(),
                count_split,
                count_e,
                count_perturbed,
            })
        }
        None => None,
    };
    Ok(Some(NonStabilityWitness { witness, m, composite, e, perturbation, perturbed, verification }))
}
