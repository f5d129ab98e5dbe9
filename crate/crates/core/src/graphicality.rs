//! Erdős–Gallai machinery: graphicality tests, the least Erdős–Gallai
//! (primitive) sequence of a simple region, fully graphic decisions and the
//! closed-form region predicates.
//!
//! A simple region `D(n, sigma, c1, c2)` contains exactly one sequence of the
//! shape `(c1,..,c1, a, c2,..,c2)`. It is the lexicographic maximum of the
//! region, and the whole region is graphic iff that sequence is. Every
//! region decision below reduces to one Erdős–Gallai test on it.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::{DegreeSequence, SimpleRegion, VerySimpleRegion};

/// Outcome of an Erdős–Gallai check.
///
/// `graphic` is true iff the sum is even and no inequality failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgReport {
    pub graphic: bool,
    pub odd_sum: bool,
    /// Smallest `k` (1-based) whose inequality fails.
    pub failing_k: Option<usize>,
    pub checked_ks: Vec<usize>,
}

/// Prefix sums plus the `sum_{i>k} min(d_i, k)` term in O(log n) per `k`.
struct EgTable<'a> {
    d: &'a [u32],
    prefix: Vec<u64>,
}

impl<'a> EgTable<'a> {
    fn new(d: &'a [u32]) -> Self {
        let mut prefix = Vec::with_capacity(d.len() + 1);
        prefix.push(0);
        let mut acc = 0u64;
        for &x in d {
            acc += x as u64;
            prefix.push(acc);
        }
        Self { d, prefix }
    }

    /// Left and right hand side of the k-th inequality.
    fn sides(&self, k: usize) -> (u64, u64) {
        let n = self.d.len();
        let lhs = self.prefix[k];
        // entries >= k form a prefix of the sorted sequence
        let p = self.d.partition_point(|&x| x as usize >= k);
        let capped_from = p.max(k);
        let capped = (capped_from - k) as u64 * k as u64;
        let tail = self.prefix[n] - self.prefix[capped_from];
        (lhs, (k * (k.saturating_sub(1))) as u64 + capped + tail)
    }

    fn holds(&self, k: usize) -> bool {
        let (l, r) = self.sides(k);
        l <= r
    }
}

/// Full Erdős–Gallai test over every `k` in `[1, n]`.
pub fn is_graphic(d: &DegreeSequence) -> EgReport {
    check_at(d, 1..=d.len())
}

/// Erdős–Gallai test restricted to the descent positions `{j : d_j > d_{j+1}}`
/// together with `j = n` (Tripathi–Vijay). Requires `d_1 < n`.
pub fn is_graphic_tv(d: &DegreeSequence) -> Result<EgReport> {
    if !d.is_bounded() {
        return Err(Error::InvalidInput(format!(
            "largest degree {} must be below the length {}",
            d.max(),
            d.len()
        )));
    }
    Ok(check_at(d, descent_positions(d)))
}

/// `{j : d_j > d_{j+1}} ∪ {n}`, 1-based and increasing.
pub fn descent_positions(d: &DegreeSequence) -> Vec<usize> {
    let v = d.degrees();
    let mut ks: Vec<usize> = (1..v.len()).filter(|&j| v[j - 1] > v[j]).collect();
    ks.push(v.len());
    ks
}

fn check_at(d: &DegreeSequence, ks: impl IntoIterator<Item = usize>) -> EgReport {
    if !d.has_even_sum() {
        return EgReport { graphic: false, odd_sum: true, failing_k: None, checked_ks: Vec::new() };
    }
    let table = EgTable::new(d.degrees());
    let mut checked_ks = Vec::new();
    for k in ks {
        checked_ks.push(k);
        if !table.holds(k) {
            return EgReport { graphic: false, odd_sum: false, failing_k: Some(k), checked_ks };
        }
    }
    EgReport { graphic: true, odd_sum: false, failing_k: None, checked_ks }
}

/// The least Erdős–Gallai sequence `(c1)_α a (c2)_{n-1-α}` of a simple region,
/// with `α = ⌊(Σ - n c2) / (c1 - c2)⌋` and `a = Σ - α c1 - (n-1-α) c2`.
pub fn leg(r: &SimpleRegion) -> DegreeSequence {
    let SimpleRegion { n, sigma, c1, c2 } = *r;
    if c1 == c2 {
        return DegreeSequence::constant(c1, n).expect("n >= 1");
    }
    let excess = sigma - n as u64 * c2 as u64;
    // α = n only when Σ = n c1; the same sequence is then (c1)_{n-1} with a = c1
    let alpha = ((excess / (c1 - c2) as u64) as usize).min(n - 1);
    let a = sigma - alpha as u64 * c1 as u64 - (n - 1 - alpha) as u64 * c2 as u64;
    let mut v = Vec::with_capacity(n);
    v.extend(std::iter::repeat_n(c1, alpha));
    v.push(a as u32);
    v.extend(std::iter::repeat_n(c2, n - 1 - alpha));
    DegreeSequence::new(v).expect("n >= 1")
}

/// Whether `d` has the primitive shape `(c1)_k a (c2)_{n-1-k}` with
/// `0 <= k <= n-1` and `c2 <= a <= c1`.
pub fn is_primitive(d: &DegreeSequence, c1: u32, c2: u32) -> bool {
    let v = d.degrees();
    if d.max() > c1 || d.min() < c2 {
        return false;
    }
    let k = v.iter().take_while(|&&x| x == c1).count().min(v.len() - 1);
    v[k + 1..].iter().all(|&x| x == c2)
}

/// Every member of the simple region is graphic.
pub fn region_fully_graphic(r: &SimpleRegion) -> bool {
    is_graphic(&leg(r)).graphic
}

/// Every member of the very simple region is graphic, checked one sum at a
/// time. An empty region is vacuously fully graphic.
pub fn very_simple_region_fully_graphic(r: &VerySimpleRegion) -> bool {
    r.sums().all(|s| region_fully_graphic(&r.with_sum(s).expect("sum from the region range")))
}

/// Even sums of `r` whose simple region is not fully graphic.
pub fn non_graphic_sums(r: &VerySimpleRegion) -> Vec<u64> {
    r.sums()
        .filter(|&s| !region_fully_graphic(&r.with_sum(s).expect("sum from the region range")))
        .collect()
}

/// `sum_{i<=k} d_i <= k(k-1) + d_n (n-k) + 1` for every `k`.
///
/// Graphic sequences satisfying this have a local P-stability measure of at
/// most `3 n^9`.
pub fn satisfies_stability_bound(d: &DegreeSequence) -> bool {
    stability_bound_violation(d).is_none()
}

/// Smallest `k` at which [`satisfies_stability_bound`] fails.
pub fn stability_bound_violation(d: &DegreeSequence) -> Option<usize> {
    let n = d.len() as i128;
    let dn = d.min() as i128;
    let mut prefix = 0i128;
    for (idx, &x) in d.degrees().iter().enumerate() {
        prefix += x as i128;
        let k = idx as i128 + 1;
        if prefix > k * (k - 1) + dn * (n - k) + 1 {
            return Some(idx + 1);
        }
    }
    None
}

/// The stability bound holds on the whole region iff it holds on its least
/// Erdős–Gallai sequence.
pub fn region_satisfies_stability_bound(r: &SimpleRegion) -> bool {
    satisfies_stability_bound(&leg(r))
}

/// The closed-form region predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionPredicate {
    /// `(c1 - c2 + 1)^2 <= 4 c2 (n - c1 - 1)`.
    Jms,
    /// `c1 k <= k(k-1) + c2 (n-k)` for every `k in [1, n]`.
    JmsStarK,
    /// `(Σ - n c2)(n c1 - Σ) <= (c1 - c2)[(Σ - n c2)(n - c1 - 1) + (n c1 - Σ) c2]`.
    JmsStarSigma,
    /// `c2 >= 2` and `3 <= c1 <= sqrt(Σ / 9)`.
    Gs,
    /// `c2 >= 2` and `3 <= c1 <= sqrt((1 - ε) Σ)` for rational `ε in (0, 1]`.
    Eps(Ratio<i64>),
    /// `c1 k <= k(k-1) + c2 (n-k) + 1` for every `k in [1, n]`.
    Fg,
}

impl RegionPredicate {
    pub fn eps(epsilon: Ratio<i64>) -> Result<Self> {
        if epsilon <= Ratio::from_integer(0) || epsilon > Ratio::from_integer(1) {
            return Err(Error::InvalidInput(format!("epsilon {epsilon} outside (0, 1]")));
        }
        Ok(RegionPredicate::Eps(epsilon))
    }

    pub fn name(&self) -> &'static str {
        match self {
            RegionPredicate::Jms => "phi_JMS",
            RegionPredicate::JmsStarK => "phi_JMS_star_k",
            RegionPredicate::JmsStarSigma => "phi_JMS_star_sigma",
            RegionPredicate::Gs => "phi_GS",
            RegionPredicate::Eps(_) => "phi_eps",
            RegionPredicate::Fg => "phi_FG",
        }
    }

    pub fn needs_sigma(&self) -> bool {
        matches!(self, RegionPredicate::JmsStarSigma | RegionPredicate::Gs | RegionPredicate::Eps(_))
    }

    pub fn evaluate(&self, n: usize, sigma: Option<u64>, c1: u32, c2: u32) -> Result<bool> {
        let (ni, c1i, c2i) = (n as i128, c1 as i128, c2 as i128);
        let sigma = || sigma.map(|s| s as i128).ok_or(Error::MissingSigma(self.name()));
        Ok(match self {
            RegionPredicate::Jms => (c1i - c2i + 1).pow(2) <= 4 * c2i * (ni - c1i - 1),
            RegionPredicate::JmsStarK => {
                (1..=ni).all(|k| c1i * k <= k * (k - 1) + c2i * (ni - k))
            }
            RegionPredicate::Fg => (1..=ni).all(|k| c1i * k <= k * (k - 1) + c2i * (ni - k) + 1),
            RegionPredicate::JmsStarSigma => jms_star_sigma_margin(n, sigma()? as u64, c1, c2) <= 0,
            RegionPredicate::Gs => {
                let s = sigma()?;
                c2i >= 2 && c1i >= 3 && 9 * c1i * c1i <= s
            }
            RegionPredicate::Eps(eps) => {
                let s = sigma()?;
                let keep = Ratio::from_integer(1) - eps;
                let (p, q) = (*keep.numer() as i128, *keep.denom() as i128);
                c2i >= 2 && c1i >= 3 && q * c1i * c1i <= p * s
            }
        })
    }

    /// For [`RegionPredicate::Eps`]: any non-graphic member of a region
    /// satisfying the predicate has length below this bound,
    /// `1 / (8 (1 - sqrt(1 - ε))^2)`.
    pub fn exceptional_length_bound(&self) -> Option<f64> {
        match self {
            RegionPredicate::Eps(eps) => {
                let e = *eps.numer() as f64 / *eps.denom() as f64;
                let gap = 1.0 - (1.0 - e).sqrt();
                Some(1.0 / (8.0 * gap * gap))
            }
            _ => None,
        }
    }
}

impl std::str::FromStr for RegionPredicate {
    type Err = Error;

    /// `jms`, `jms-star-k`, `jms-star-sigma`, `gs`, `fg`, or `eps:<p>/<q>`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase().replace('_', "-");
        Ok(match lower.trim_start_matches("phi-") {
            "jms" => RegionPredicate::Jms,
            "jms-star-k" => RegionPredicate::JmsStarK,
            "jms-star-sigma" => RegionPredicate::JmsStarSigma,
            "gs" => RegionPredicate::Gs,
            "fg" => RegionPredicate::Fg,
            other => {
                let Some(eps) = other.strip_prefix("eps:").or_else(|| other.strip_prefix("eps=")) else {
                    return Err(Error::Parse(format!("unknown predicate {s:?}")));
                };
                let ratio = match eps.split_once('/') {
                    Some((p, q)) => {
                        let p: i64 = p.parse().map_err(|_| Error::Parse(format!("bad epsilon {eps:?}")))?;
                        let q: i64 = q.parse().map_err(|_| Error::Parse(format!("bad epsilon {eps:?}")))?;
                        if q == 0 {
                            return Err(Error::Parse("epsilon denominator is zero".into()));
                        }
                        Ratio::new(p, q)
                    }
                    None => Ratio::from_integer(
                        eps.parse().map_err(|_| Error::Parse(format!("bad epsilon {eps:?}")))?,
                    ),
                };
                RegionPredicate::eps(ratio)?
            }
        })
    }
}

/// LHS - RHS of the Σ-form JMS inequality; the predicate holds iff this is
/// `<= 0`.
pub fn jms_star_sigma_margin(n: usize, sigma: u64, c1: u32, c2: u32) -> i128 {
    let (n, s, c1, c2) = (n as i128, sigma as i128, c1 as i128, c2 as i128);
    let low = s - n * c2;
    let high = n * c1 - s;
    low * high - (c1 - c2) * (low * (n - c1 - 1) + high * c2)
}
