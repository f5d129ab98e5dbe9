//! Degree sequences, degree sequence regions and perturbations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing sequence of non-negative integers.
///
/// Input is normalized by sorting, so positions always refer to the sorted
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DegreeSequence {
    degrees: Vec<u32>,
    sigma: u64,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let sigma = degrees.iter().map(|&d| d as u64).sum();
        Ok(Self { degrees, sigma })
    }

    /// Like [`DegreeSequence::new`] but rejects entries above `n - 1`.
    pub fn graphic_candidate(degrees: Vec<u32>) -> Result<Self> {
        let seq = Self::new(degrees)?;
        if !seq.is_bounded() {
            return Err(Error::ExceedsMax {
                index: 1,
                value: seq.degrees[0] as i64,
                max: seq.len() as i64 - 1,
            });
        }
        Ok(seq)
    }

    /// Sorts a raw vector that may contain negative entries. Fails on
    /// negatives, accepts anything else.
    pub fn from_signed(raw: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(raw.len());
        for (index, &v) in raw.iter().enumerate() {
            if v < 0 {
                return Err(Error::NegativeDegree { index: index + 1 });
            }
            out.push(u32::try_from(v).map_err(|_| Error::InvalidInput(format!("degree {v} too large")))?);
        }
        Self::new(out)
    }

    pub fn constant(value: u32, len: usize) -> Result<Self> {
        Self::new(vec![value; len])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    pub fn max(&self) -> u32 {
        self.degrees[0]
    }

    pub fn min(&self) -> u32 {
        *self.degrees.last().expect("non-empty")
    }

    /// Every entry lies in `[0, n - 1]`.
    pub fn is_bounded(&self) -> bool {
        (self.max() as usize) < self.len()
    }

    pub fn has_even_sum(&self) -> bool {
        self.sigma.is_multiple_of(2)
    }

    /// 1-based access, matching the usual `d_i` indexing.
    pub fn get(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|i| self.degrees.get(i).copied())
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.degrees
    }

    /// Membership in a simple region (fixed sum) or very simple region.
    pub fn is_member_of(&self, region: &Region) -> bool {
        let (n, c1, c2, sigma) = match *region {
            Region::Simple(r) => (r.n, r.c1, r.c2, Some(r.sigma)),
            Region::VerySimple(r) => (r.n, r.c1, r.c2, None),
        };
        self.len() == n
            && self.max() <= c1
            && self.min() >= c2
            && self.has_even_sum()
            && sigma.is_none_or(|s| s == self.sigma)
    }

    pub fn apply(&self, p: &Perturbation) -> Result<Self> {
        let raw = self.apply_raw(p)?;
        let max = self.len() as i64 - 1;
        if let Some((index, &value)) = raw.iter().enumerate().find(|(_, &v)| v > max) {
            return Err(Error::ExceedsMax { index: index + 1, value, max });
        }
        Self::from_signed(&raw)
    }

    /// The perturbed vector in the original positional order, without
    /// re-sorting or range checks. Entries may be negative or exceed `n - 1`;
    /// such vectors have no realizations.
    pub fn apply_raw(&self, p: &Perturbation) -> Result<Vec<i64>> {
        p.validate(self.len())?;
        let mut raw: Vec<i64> = self.degrees.iter().map(|&d| d as i64).collect();
        let (di, dj) = p.kind.deltas();
        raw[p.i - 1] += di;
        if let Some(j) = p.j {
            raw[j - 1] += dj;
        }
        Ok(raw)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.degrees {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degrees)
    }
}

impl TryFrom<Vec<u32>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DegreeSequence> for Vec<u32> {
    fn from(d: DegreeSequence) -> Self {
        d.degrees
    }
}

/// The set `D(n, c1, c2)`: all length-`n` sequences with entries in
/// `[c2, c1]` and even sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VerySimpleRegion {
    pub n: usize,
    pub c1: u32,
    pub c2: u32,
}

impl VerySimpleRegion {
    pub fn new(n: usize, c1: u32, c2: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRegion("n must be positive".into()));
        }
        if (c1 as usize) >= n {
            return Err(Error::InvalidRegion(format!("need n > c1, got n={n}, c1={c1}")));
        }
        if c1 < c2 {
            return Err(Error::InvalidRegion(format!("need c1 >= c2, got c1={c1}, c2={c2}")));
        }
        Ok(Self { n, c1, c2 })
    }

    /// Even sums admitted by the region, in increasing order.
    pub fn sums(&self) -> impl Iterator<Item = u64> {
        let lo = self.n as u64 * self.c2 as u64;
        let hi = self.n as u64 * self.c1 as u64;
        let start = lo + lo % 2;
        (start..=hi).step_by(2)
    }

    pub fn is_empty(&self) -> bool {
        self.sums().next().is_none()
    }

    pub fn with_sum(&self, sigma: u64) -> Result<SimpleRegion> {
        SimpleRegion::new(self.n, sigma, self.c1, self.c2)
    }
}

impl fmt::Display for VerySimpleRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},c1={},c2={}", self.n, self.c1, self.c2)
    }
}

/// The set `D(n, sigma, c1, c2)`: members of `D(n, c1, c2)` with sum `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleRegion {
    pub n: usize,
    pub sigma: u64,
    pub c1: u32,
    pub c2: u32,
}

impl SimpleRegion {
    pub fn new(n: usize, sigma: u64, c1: u32, c2: u32) -> Result<Self> {
        VerySimpleRegion::new(n, c1, c2)?;
        let lo = n as u64 * c2 as u64;
        let hi = n as u64 * c1 as u64;
        if sigma < lo || sigma > hi {
            return Err(Error::InvalidRegion(format!(
                "sum {sigma} outside [n*c2, n*c1] = [{lo}, {hi}]"
            )));
        }
        if !sigma.is_multiple_of(2) {
            return Err(Error::InvalidRegion(format!("sum {sigma} is odd")));
        }
        Ok(Self { n, sigma, c1, c2 })
    }

    pub fn very_simple(&self) -> VerySimpleRegion {
        VerySimpleRegion { n: self.n, c1: self.c1, c2: self.c2 }
    }

    /// All members in lexicographically decreasing order. Exponential; for
    /// small regions only.
    pub fn members(&self) -> Vec<DegreeSequence> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(self.n);
        self.members_rec(&mut buf, self.c1, self.sigma, &mut out);
        out
    }

    fn members_rec(&self, buf: &mut Vec<u32>, cap: u32, left: u64, out: &mut Vec<DegreeSequence>) {
        let slots = (self.n - buf.len()) as u64;
        if slots == 0 {
            if left == 0 {
                out.push(DegreeSequence::new(buf.clone()).expect("non-empty"));
            }
            return;
        }
        for v in (self.c2..=cap).rev() {
            let rest = slots - 1;
            if (v as u64) > left {
                continue;
            }
            let remaining = left - v as u64;
            if remaining > rest * v as u64 || remaining < rest * self.c2 as u64 {
                continue;
            }
            buf.push(v);
            self.members_rec(buf, v, remaining, out);
            buf.pop();
        }
    }
}

impl fmt::Display for SimpleRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},sigma={},c1={},c2={}", self.n, self.sigma, self.c1, self.c2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    Simple(SimpleRegion),
    VerySimple(VerySimpleRegion),
}

impl From<SimpleRegion> for Region {
    fn from(r: SimpleRegion) -> Self {
        Region::Simple(r)
    }
}

impl From<VerySimpleRegion> for Region {
    fn from(r: VerySimpleRegion) -> Self {
        Region::VerySimple(r)
    }
}

impl FromStr for Region {
    type Err = Error;

    /// Parses `n=8,sigma=16,c1=4,c2=1` (simple) or `n=10,c1=3,c2=2`
    /// (very simple).
    fn from_str(s: &str) -> Result<Self> {
        let (mut n, mut sigma, mut c1, mut c2) = (None, None, None, None);
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{part:?}: {e}")))?;
            match key.trim() {
                "n" => n = Some(value),
                "sigma" => sigma = Some(value),
                "c1" => c1 = Some(value),
                "c2" => c2 = Some(value),
                other => return Err(Error::Parse(format!("unknown region key {other:?}"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("region is missing {k}"));
        let n = n.ok_or_else(|| missing("n"))? as usize;
        let c1 = u32::try_from(c1.ok_or_else(|| missing("c1"))?).map_err(|e| Error::Parse(e.to_string()))?;
        let c2 = u32::try_from(c2.ok_or_else(|| missing("c2"))?).map_err(|e| Error::Parse(e.to_string()))?;
        match sigma {
            Some(sigma) => SimpleRegion::new(n, sigma, c1, c2).map(Region::Simple),
            None => VerySimpleRegion::new(n, c1, c2).map(Region::VerySimple),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Simple(r) => r.fmt(f),
            Region::VerySimple(r) => r.fmt(f),
        }
    }
}

/// Which unit vector combination a [`Perturbation`] adds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PerturbationKind {
    /// `-1` at `i` and at `j`, `i != j`.
    MinusMinus,
    /// `+1` at `i` and at `j`, `i != j`.
    PlusPlus,
    /// `+1` at `i`, `-1` at `j`, `i != j`.
    PlusMinus,
    /// `-2` at `i`.
    MinusTwo,
    /// `+2` at `i`.
    PlusTwo,
}

impl PerturbationKind {
    pub const ALL: [PerturbationKind; 5] = [
        PerturbationKind::PlusPlus,
        PerturbationKind::MinusMinus,
        PerturbationKind::PlusMinus,
        PerturbationKind::PlusTwo,
        PerturbationKind::MinusTwo,
    ];

    pub fn sigma_change(self) -> i64 {
        match self {
            PerturbationKind::MinusMinus | PerturbationKind::MinusTwo => -2,
            PerturbationKind::PlusPlus | PerturbationKind::PlusTwo => 2,
            PerturbationKind::PlusMinus => 0,
        }
    }

    pub fn is_single_index(self) -> bool {
        matches!(self, PerturbationKind::MinusTwo | PerturbationKind::PlusTwo)
    }

    fn deltas(self) -> (i64, i64) {
        match self {
            PerturbationKind::MinusMinus => (-1, -1),
            PerturbationKind::PlusPlus => (1, 1),
            PerturbationKind::PlusMinus => (1, -1),
            PerturbationKind::MinusTwo => (-2, 0),
            PerturbationKind::PlusTwo => (2, 0),
        }
    }

    /// Short symbol: `++`, `--`, `+-`, `+2`, `-2`.
    pub fn symbol(self) -> &'static str {
        match self {
            PerturbationKind::MinusMinus => "--",
            PerturbationKind::PlusPlus => "++",
            PerturbationKind::PlusMinus => "+-",
            PerturbationKind::MinusTwo => "-2",
            PerturbationKind::PlusTwo => "+2",
        }
    }
}

impl FromStr for PerturbationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "--" | "minus-minus" | "MinusMinus" => PerturbationKind::MinusMinus,
            "++" | "plus-plus" | "PlusPlus" => PerturbationKind::PlusPlus,
            "+-" | "-+" | "plus-minus" | "minus-plus" | "PlusMinus" | "MinusPlus" => {
                PerturbationKind::PlusMinus
            }
            "-2" | "minus-two" | "MinusTwo" => PerturbationKind::MinusTwo,
            "+2" | "plus-two" | "PlusTwo" => PerturbationKind::PlusTwo,
            other => return Err(Error::Parse(format!("unknown perturbation kind {other:?}"))),
        })
    }
}

/// A perturbation `D + 1^{±i}_{±j}` with 1-based positions into the sorted
/// sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Perturbation {
    pub kind: PerturbationKind,
    pub i: usize,
    pub j: Option<usize>,
}

impl Perturbation {
    pub fn pair(kind: PerturbationKind, i: usize, j: usize) -> Result<Self> {
        if kind.is_single_index() {
            return Err(Error::InvalidPerturbation(format!("{kind:?} takes a single index")));
        }
        if i == j {
            return Err(Error::InvalidPerturbation(format!("{kind:?} needs i != j, got {i}")));
        }
        Ok(Self { kind, i, j: Some(j) })
    }

    pub fn single(kind: PerturbationKind, i: usize) -> Result<Self> {
        if !kind.is_single_index() {
            return Err(Error::InvalidPerturbation(format!("{kind:?} takes two indices")));
        }
        Ok(Self { kind, i, j: None })
    }

    pub fn minus_minus(i: usize, j: usize) -> Result<Self> {
        Self::pair(PerturbationKind::MinusMinus, i, j)
    }

    pub fn plus_plus(i: usize, j: usize) -> Result<Self> {
        Self::pair(PerturbationKind::PlusPlus, i, j)
    }

    pub fn plus_minus(i: usize, j: usize) -> Result<Self> {
        Self::pair(PerturbationKind::PlusMinus, i, j)
    }

    fn validate(&self, n: usize) -> Result<()> {
        let check = |x: usize| {
            if x == 0 || x > n {
                Err(Error::InvalidPerturbation(format!("index {x} outside [1, {n}]")))
            } else {
                Ok(())
            }
        };
        check(self.i)?;
        match (self.kind.is_single_index(), self.j) {
            (true, None) => Ok(()),
            (false, Some(j)) if j != self.i => check(j),
            _ => Err(Error::InvalidPerturbation(format!("malformed {:?}", self))),
        }
    }
}
