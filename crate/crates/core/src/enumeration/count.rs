//! Exact counting of labeled realizations.
//!
//! The vertex with the largest residual degree is eliminated first: every
//! way of choosing its neighborhood among the remaining vertices is summed
//! over, and the residual problem is solved recursively. Vertices sharing a
//! residual degree are interchangeable, so neighborhoods are chosen per
//! group of equal residuals with a binomial multiplier. The number of
//! labeled realizations depends only on the multiset of residual degrees,
//! which is the memo key.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{binomial, Count};
use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountConfig {
    /// Largest sequence length accepted.
    pub max_vertices: usize,
    /// Abort a single count after this many expanded states.
    pub node_budget: u64,
    pub memoize: bool,
}

impl Default for CountConfig {
    fn default() -> Self {
        Self { max_vertices: 16, node_budget: 50_000_000, memoize: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult<C = BigUint> {
    pub count: C,
    /// States expanded by this call, memo hits excluded.
    pub nodes_explored: u64,
    /// The answer was already in the memo table from an earlier call.
    pub from_cache: bool,
}

/// A realization counter with a memo table that persists across calls.
#[derive(Debug, Clone)]
pub struct Counter<C: Count = BigUint> {
    config: CountConfig,
    memo: HashMap<Vec<u32>, C>,
    nodes: u64,
}

impl<C: Count> Default for Counter<C> {
    fn default() -> Self {
        Self::new(CountConfig::default())
    }
}

impl<C: Count> Counter<C> {
    pub fn new(config: CountConfig) -> Self {
        Self { config, memo: HashMap::new(), nodes: 0 }
    }

    pub fn config(&self) -> &CountConfig {
        &self.config
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn check_size(&self, n: usize) -> Result<()> {
        if n > self.config.max_vertices {
            return Err(Error::TooLarge(format!(
                "{n} vertices exceeds the limit of {}",
                self.config.max_vertices
            )));
        }
        Ok(())
    }

    /// Number of labeled simple graphs on `v_1..v_n` in which `v_i` has
    /// degree `d_i`. Entries above `n - 1` give 0.
    pub fn count(&mut self, d: &DegreeSequence) -> Result<CountResult<C>> {
        self.check_size(d.len())?;
        self.nodes = 0;
        if !d.has_even_sum() || !d.is_bounded() {
            return Ok(CountResult { count: C::zero(), nodes_explored: 0, from_cache: false });
        }
        let key = strip_zeros(d.degrees());
        let from_cache = self.config.memoize && self.memo.contains_key(&key);
        let count = self.solve(key)?;
        Ok(CountResult { count, nodes_explored: self.nodes, from_cache })
    }

    /// Count for a raw positional vector, e.g. a perturbed sequence before
    /// sorting. Negative entries or entries above `n - 1` give 0.
    pub fn count_vector(&mut self, raw: &[i64]) -> Result<C> {
        let n = raw.len() as i64;
        if raw.iter().any(|&x| x < 0 || x >= n) {
            self.check_size(raw.len())?;
            return Ok(C::zero());
        }
        let d = DegreeSequence::from_signed(raw)?;
        Ok(self.count(&d)?.count)
    }

    fn solve(&mut self, residual: Vec<u32>) -> Result<C> {
        if residual.is_empty() {
            return Ok(C::one());
        }
        if self.config.memoize {
            if let Some(c) = self.memo.get(&residual) {
                return Ok(c.clone());
            }
        }
        self.nodes += 1;
        if self.nodes > self.config.node_budget {
            return Err(Error::TooLarge(format!(
                "node budget of {} exhausted",
                self.config.node_budget
            )));
        }
        let head = residual[0] as usize;
        let rest = &residual[1..];
        let total = if head > rest.len() {
            C::zero()
        } else {
            let groups = group_runs(rest);
            let mut picks = vec![0usize; groups.len()];
            self.distribute(&groups, 0, head, C::one(), &mut picks)?
        };
        if self.config.memoize {
            self.memo.insert(residual, total.clone());
        }
        Ok(total)
    }

    /// Sums over all ways to take `need` neighbors from groups `gi..`.
    fn distribute(
        &mut self,
        groups: &[(u32, usize)],
        gi: usize,
        need: usize,
        weight: C,
        picks: &mut Vec<usize>,
    ) -> Result<C> {
        if gi == groups.len() {
            if need != 0 {
                return Ok(C::zero());
            }
            let child = child_residual(groups, picks);
            return Ok(weight * self.solve(child)?);
        }
        let available: usize = groups[gi..].iter().map(|g| g.1).sum();
        if need > available {
            return Ok(C::zero());
        }
        let (_, size) = groups[gi];
        let mut acc = C::zero();
        for take in 0..=size.min(need) {
            picks[gi] = take;
            let w = weight.clone() * binomial::<C>(size, take);
            acc += self.distribute(groups, gi + 1, need - take, w, picks)?;
        }
        picks[gi] = 0;
        Ok(acc)
    }
}

fn strip_zeros(d: &[u32]) -> Vec<u32> {
    d.iter().copied().take_while(|&x| x > 0).collect()
}

/// Runs of equal values in a non-increasing slice.
fn group_runs(d: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &x in d {
        match out.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn child_residual(groups: &[(u32, usize)], picks: &[usize]) -> Vec<u32> {
    let mut out = Vec::new();
    for (&(v, size), &take) in groups.iter().zip(picks) {
        out.extend(std::iter::repeat_n(v, size - take));
        if v > 1 {
            out.extend(std::iter::repeat_n(v - 1, take));
        }
    }
    out
}

/// Exact count with the default configuration.
pub fn count_realizations(d: &DegreeSequence) -> Result<CountResult<BigUint>> {
    Counter::<BigUint>::default().count(d)
}
