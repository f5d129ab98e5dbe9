//! Perturbation families, the local P-stability measure and the
//! comparisons between the different P-stability definitions.
//!
//! For a perturbation kind, the family of `D` is the set of vectors
//! `D + 1^{±i}_{±j}` over all admissible positions. The realizations of
//! distinct vectors are disjoint sets of labeled graphs (vertex `v_i` has a
//! different prescribed degree), so the size of the union is the positional
//! sum of counts.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::enumeration::count::Counter;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::sequence::{DegreeSequence, Perturbation, PerturbationKind};

/// Every perturbation of the given kind on a sequence of length `n`.
/// Symmetric kinds use `i < j`; `PlusMinus` uses ordered `i != j`.
pub fn family_perturbations(n: usize, kind: PerturbationKind) -> Vec<Perturbation> {
    let mut out = Vec::new();
    match kind {
        PerturbationKind::PlusPlus | PerturbationKind::MinusMinus => {
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(Perturbation::pair(kind, i, j).expect("i != j"));
                }
            }
        }
        PerturbationKind::PlusMinus => {
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        out.push(Perturbation::pair(kind, i, j).expect("i != j"));
                    }
                }
            }
        }
        PerturbationKind::PlusTwo | PerturbationKind::MinusTwo => {
            out.extend((1..=n).map(|i| Perturbation::single(kind, i).expect("single index")));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbationFamilyCount {
    pub family: PerturbationKind,
    /// Labeled graphs whose degree vector lies in the family.
    pub total: BigUint,
    /// Sum of counts over distinct sorted multisets in the family.
    pub distinct_multiset_total: BigUint,
    pub members: usize,
    pub distinct_multisets: usize,
}

pub fn family_count(
    counter: &mut Counter<BigUint>,
    d: &DegreeSequence,
    kind: PerturbationKind,
) -> Result<PerturbationFamilyCount> {
    counter.check_size(d.len())?;
    let mut total = BigUint::zero();
    let mut multisets = BTreeSet::new();
    let perturbations = family_perturbations(d.len(), kind);
    for p in &perturbations {
        let raw = d.apply_raw(p)?;
        let c = counter.count_vector(&raw)?;
        total += &c;
        let mut sorted = raw;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        multisets.insert(sorted);
    }
    let mut distinct_multiset_total = BigUint::zero();
    for m in &multisets {
        distinct_multiset_total += counter.count_vector(m)?;
    }
    Ok(PerturbationFamilyCount {
        family: kind,
        total,
        distinct_multiset_total,
        members: perturbations.len(),
        distinct_multisets: multisets.len(),
    })
}

/// `p(D) = sum_{i<j} |G(D + 1^{-i}_{-j})| / |G(D)|`, exactly.
pub fn p_measure(counter: &mut Counter<BigUint>, d: &DegreeSequence) -> Result<BigRational> {
    Ok(p_measure_report(counter, d)?.positional)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PMeasureReport {
    pub base_count: BigUint,
    /// Sum over `i < j` of the `--` children.
    pub minus_minus_total: BigUint,
    /// Sum over `i` of the `-2` children.
    pub minus_two_total: BigUint,
    pub positional: BigRational,
    /// `(|G(D^{--})| + |G(D^{-2})|) / |G(D)|`, the variant that also lets a
    /// single position drop by two.
    pub with_double_steps: BigRational,
}

pub fn p_measure_report(counter: &mut Counter<BigUint>, d: &DegreeSequence) -> Result<PMeasureReport> {
    let base_count = counter.count(d)?.count;
    if base_count.is_zero() {
        return Err(Error::NotGraphic);
    }
    let mm = family_count(counter, d, PerturbationKind::MinusMinus)?.total;
    let m2 = family_count(counter, d, PerturbationKind::MinusTwo)?.total;
    let base = BigInt::from(base_count.clone());
    let positional = BigRational::new(BigInt::from(mm.clone()), base.clone());
    let with_double_steps = BigRational::new(BigInt::from(&mm + &m2), base);
    Ok(PMeasureReport { base_count, minus_minus_total: mm, minus_two_total: m2, positional, with_double_steps })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

impl InequalityCheck {
    fn new(lhs: BigUint, rhs: BigUint) -> Self {
        let holds = lhs <= rhs;
        Self { lhs, rhs, holds }
    }
}

/// The three inequalities relating the family sizes of a graphic sequence:
///
/// * (a) `max(|G(D^{++})|, |G(D^{--})|) <= n^2 (|G(D^{+-})| + |G(D)|)`
/// * (b) `max(|G(D^{+2})|, |G(D^{-2})|) <= n^2 |G(D^{+-})|`
/// * (c) `|G(D^{+-})| <= (n^4 + n^2) min(|G(D^{++})|, |G(D^{--})|)`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixReport {
    pub n: usize,
    pub base: BigUint,
    pub plus_plus: BigUint,
    pub minus_minus: BigUint,
    pub plus_minus: BigUint,
    pub plus_two: BigUint,
    pub minus_two: BigUint,
    pub a: InequalityCheck,
    pub b: InequalityCheck,
    pub c: InequalityCheck,
    /// `|G(D^{+-})| = 0`; then (a) holds only through the `|G(D)|` term.
    pub plus_minus_empty: bool,
    /// (a) would fail without the `|G(D)|` term on its right-hand side.
    pub a_needs_base_term: bool,
}

impl AppendixReport {
    pub fn all_hold(&self) -> bool {
        self.a.holds && self.b.holds && self.c.holds
    }
}

pub fn verify_appendix(counter: &mut Counter<BigUint>, d: &DegreeSequence) -> Result<AppendixReport> {
    let base = counter.count(d)?.count;
    if base.is_zero() {
        return Err(Error::NotGraphic);
    }
    let mut total = |k| family_count(counter, d, k).map(|f| f.total);
    let plus_plus = total(PerturbationKind::PlusPlus)?;
    let minus_minus = total(PerturbationKind::MinusMinus)?;
    let plus_minus = total(PerturbationKind::PlusMinus)?;
    let plus_two = total(PerturbationKind::PlusTwo)?;
    let minus_two = total(PerturbationKind::MinusTwo)?;

    let n = BigUint::from(d.len());
    let n2 = &n * &n;
    let n4 = &n2 * &n2;
    let a_max = (&plus_plus).max(&minus_minus).clone();
    let a = InequalityCheck::new(a_max.clone(), &n2 * (&plus_minus + &base));
    let b = InequalityCheck::new((&plus_two).max(&minus_two).clone(), &n2 * &plus_minus);
    let c = InequalityCheck::new(plus_minus.clone(), (&n4 + &n2) * (&plus_plus).min(&minus_minus));
    let a_needs_base_term = a_max > &n2 * &plus_minus;
    Ok(AppendixReport {
        n: d.len(),
        plus_minus_empty: plus_minus.is_zero(),
        a_needs_base_term,
        base,
        plus_plus,
        minus_minus,
        plus_minus,
        plus_two,
        minus_two,
        a,
        b,
        c,
    })
}

/// `h_m = (2m-1, 2m-2, .., m+1, m, m, m-1, .., 2, 1)`, length `2m`.
pub fn h_sequence(m: usize) -> Result<DegreeSequence> {
    if m == 0 {
        return Err(Error::InvalidInput("h_m needs m >= 1".into()));
    }
    let mut v: Vec<u32> = (m as u32 + 1..2 * m as u32).rev().collect();
    v.push(m as u32);
    v.push(m as u32);
    v.extend((1..m as u32).rev());
    DegreeSequence::new(v)
}

/// The perturbation `1^{+2m}_{+m}` turning `h_m` into `h'_m`.
pub fn h_prime_perturbation(m: usize) -> Result<Perturbation> {
    Perturbation::plus_plus(2 * m, m)
}

/// `h'_m = h_m + 1^{+2m}_{+m}`.
pub fn h_prime_sequence(m: usize) -> Result<DegreeSequence> {
    h_sequence(m)?.apply(&h_prime_perturbation(m)?)
}

/// The unique realization of `h_m` on `v_1..v_{2m}` (0-based here): the
/// top half `{m+1..2m}` is a clique and `v_i` (`i <= m`) is joined to
/// `v_j` (`j > m`) exactly when `i + j <= 2m + 1`, with 1-based `i, j`.
/// Labels are then permuted so that degrees are non-increasing.
pub fn h_realization(m: usize) -> Result<LabeledGraph> {
    if m == 0 {
        return Err(Error::InvalidInput("h_m needs m >= 1".into()));
    }
    let n = 2 * m;
    let mut g = LabeledGraph::empty(n);
    for i in m + 1..=n {
        for j in i + 1..=n {
            g.add_edge(i - 1, j - 1);
        }
    }
    for i in 1..=m {
        for j in m + 1..=n {
            if i + j <= n + 1 {
                g.add_edge(i - 1, j - 1);
            }
        }
    }
    Ok(sort_labels_by_degree(&g))
}

/// Relabels so that vertex 0 has the largest degree, ties kept in label order.
pub fn sort_labels_by_degree(g: &LabeledGraph) -> LabeledGraph {
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let mut perm = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.permuted(&perm)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFamilyCounts {
    pub m: usize,
    pub h: DegreeSequence,
    pub h_prime: DegreeSequence,
    pub count_h: BigUint,
    pub count_h_prime: BigUint,
}

pub fn count_h_family(counter: &mut Counter<BigUint>, m: usize) -> Result<HFamilyCounts> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("h-family needs m >= 2, got {m}")));
    }
    counter.check_size(2 * m)?;
    let h = h_sequence(m)?;
    let h_prime = h_prime_sequence(m)?;
    let count_h = counter.count(&h)?.count;
    let count_h_prime = counter.count(&h_prime)?.count;
    Ok(HFamilyCounts { m, h, h_prime, count_h, count_h_prime })
}
