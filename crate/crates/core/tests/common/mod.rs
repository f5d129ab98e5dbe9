//! Brute-force ground truth shared by the integration tests.
//!
//! Everything here walks raw edge sets and never calls into the crate's
//! counting or graphicality code.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ORACLE_MAX_N: usize = 7;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Every edge subset of `K_n` visited in Gray code order, with the degree
/// vector maintained incrementally.
fn walk(n: usize, mut visit: impl FnMut(u64, &[u32])) {
    let edges = pairs(n);
    let mut deg = vec![0u32; n];
    let mut mask = 0u64;
    visit(mask, &deg);
    for step in 1u64..1 << edges.len() {
        let bit = step.trailing_zeros() as usize;
        let (u, v) = edges[bit];
        if mask >> bit & 1 == 1 {
            deg[u] -= 1;
            deg[v] -= 1;
        } else {
            deg[u] += 1;
            deg[v] += 1;
        }
        mask ^= 1 << bit;
        visit(mask, &deg);
    }
}

pub struct Census {
    /// Labeled degree vector to number of graphs having it.
    pub counts: HashMap<Vec<u32>, u64>,
    /// Edge masks of graphs whose degree vector is non-increasing.
    pub sorted_graphs: HashMap<Vec<u32>, Vec<u64>>,
}

pub fn census(n: usize) -> &'static Census {
    static TABLES: [OnceLock<Census>; ORACLE_MAX_N + 1] = [const { OnceLock::new() }; ORACLE_MAX_N + 1];
    assert!((1..=ORACLE_MAX_N).contains(&n), "oracle covers 1..={ORACLE_MAX_N} vertices");
    TABLES[n].get_or_init(|| {
        let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
        let mut sorted_graphs: HashMap<Vec<u32>, Vec<u64>> = HashMap::new();
        walk(n, |mask, deg| {
            *counts.entry(deg.to_vec()).or_default() += 1;
            if deg.windows(2).all(|w| w[0] >= w[1]) {
                sorted_graphs.entry(deg.to_vec()).or_default().push(mask);
            }
        });
        Census { counts, sorted_graphs }
    })
}

/// Number of labeled graphs with the given positional degree vector.
pub fn brute_count(v: &[i64]) -> u64 {
    if v.iter().any(|&x| x < 0) {
        return 0;
    }
    let key: Vec<u32> = v.iter().map(|&x| x as u32).collect();
    census(v.len()).counts.get(&key).copied().unwrap_or(0)
}

pub fn brute_count_u32(v: &[u32]) -> u64 {
    census(v.len()).counts.get(v).copied().unwrap_or(0)
}

/// Realizations of a non-increasing sequence as adjacency matrices.
pub fn brute_realizations(v: &[u32]) -> Vec<Vec<Vec<bool>>> {
    let n = v.len();
    let edges = pairs(n);
    census(n)
        .sorted_graphs
        .get(v)
        .map(|masks| masks.iter().map(|&m| adjacency(n, &edges, m)).collect())
        .unwrap_or_default()
}

fn adjacency(n: usize, edges: &[(usize, usize)], mask: u64) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for (b, &(u, v)) in edges.iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    adj
}

/// Some vertex subset induces a clique whose complement is independent.
pub fn has_split_partition(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    (0u32..1 << n).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        (0..n).all(|u| {
            (u + 1..n).all(|v| match (inside(u), inside(v)) {
                (true, true) => adj[u][v],
                (false, false) => !adj[u][v],
                _ => true,
            })
        })
    })
}

/// All non-increasing sequences of length `n` with entries in `[0, n-1]`.
pub fn bounded_sequences(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in (0..=cap).rev() {
            cur.push(x);
            rec(n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n as u32 - 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Members of `D(n, sigma, c1, c2)` listed directly from the definition.
pub fn region_members(n: usize, sigma: u64, c1: u32, c2: u32) -> Vec<Vec<u32>> {
    bounded_sequences(n)
        .into_iter()
        .filter(|v| v[0] <= c1 && v[n - 1] >= c2 && v.iter().map(|&x| x as u64).sum::<u64>() == sigma)
        .collect()
}

/// Valid simple regions `(n, sigma, c1, c2)` with `n` up to the bound.
pub fn simple_regions(max_n: usize) -> Vec<(usize, u64, u32, u32)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for c1 in 0..n as u32 {
            for c2 in 0..=c1 {
                let (lo, hi) = (n as u64 * c2 as u64, n as u64 * c1 as u64);
                for sigma in (lo..=hi).filter(|s| s % 2 == 0) {
                    out.push((n, sigma, c1, c2));
                }
            }
        }
    }
    out
}

/// Small random graph for composition tests, as an edge list on `0..n`.
pub fn random_graph(n: usize, seed: u64, density: f64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs(n).into_iter().filter(|_| rng.gen_bool(density)).collect()
}
