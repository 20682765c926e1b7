use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An ultimately periodic subset of the nonnegative integers.
///
/// Below `threshold` membership is listed explicitly; from `threshold` on,
/// `x` is a member iff `x mod period` is one of `residues`. The form is
/// canonical (least period, then least threshold), so derived equality is
/// set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpSet {
    threshold: u64,
    prefix: Vec<u64>,
    period: u64,
    residues: Vec<u64>,
}

impl UpSet {
    /// Builds and canonicalizes. `prefix` entries at or above `threshold` are
    /// ignored; residues are reduced modulo `period`.
    pub fn from_parts(
        threshold: u64,
        prefix: impl IntoIterator<Item = u64>,
        period: u64,
        residues: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        if period == 0 {
            return Err(Error::BadCongruence { residue: 0, modulus: 0 });
        }
        let mut prefix: Vec<u64> = prefix.into_iter().filter(|&x| x < threshold).collect();
        prefix.sort_unstable();
        prefix.dedup();
        let mut residues: Vec<u64> = residues.into_iter().map(|r| r % period).collect();
        residues.sort_unstable();
        residues.dedup();
        Ok(Self::normalize(threshold, prefix, period, residues))
    }

    pub fn empty() -> Self {
        Self { threshold: 0, prefix: Vec::new(), period: 1, residues: Vec::new() }
    }

    /// All of `ℕ₀`.
    pub fn naturals() -> Self {
        Self { threshold: 0, prefix: Vec::new(), period: 1, residues: vec![0] }
    }

    /// `{x : x >= start}`.
    pub fn at_least(start: u64) -> Self {
        Self::normalize(start, Vec::new(), 1, vec![0])
    }

    pub fn finite(points: impl IntoIterator<Item = u64>) -> Self {
        let points: Vec<u64> = points.into_iter().collect();
        let threshold = points.iter().max().map_or(0, |m| m + 1);
        Self::from_parts(threshold, points, 1, []).expect("period 1")
    }

    /// `ℕ₀` minus finitely many points.
    pub fn cofinite(excluded: impl IntoIterator<Item = u64>) -> Self {
        Self::finite(excluded).complement()
    }

    /// `{y : y ≡ residue (mod modulus)}`.
    pub fn residue_class(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::BadCongruence { residue, modulus });
        }
        Self::from_parts(0, [], modulus, [residue])
    }

    /// `{start + k·step : k >= 0}`.
    pub fn progression(start: u64, step: u64) -> Result<Self> {
        if step == 0 {
            return Ok(Self::finite([start]));
        }
        Self::from_parts(start, [], step, [start])
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// Members below the threshold.
    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Residues modulo the period that the tail contains.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    fn tail_contains(&self, x: u64) -> bool {
        self.residues.binary_search(&(x % self.period)).is_ok()
    }

    pub fn contains(&self, x: u64) -> bool {
        if x < self.threshold {
            self.prefix.binary_search(&x).is_ok()
        } else {
            self.tail_contains(x)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty() && self.residues.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_cofinite(&self) -> bool {
        self.residues.len() as u64 == self.period
    }

    pub fn min(&self) -> Result<u64> {
        if let Some(&x) = self.prefix.first() {
            return Ok(x);
        }
        let base = self.threshold - self.threshold % self.period;
        (0..2 * self.period)
            .map(|k| base + k)
            .find(|&x| x >= self.threshold && self.tail_contains(x))
            .ok_or(Error::EmptySetMin)
    }

    /// Largest member of a finite nonempty set.
    pub fn max(&self) -> Option<u64> {
        if self.is_finite() {
            self.prefix.last().copied()
        } else {
            None
        }
    }

    /// Members of a finite set, ascending.
    pub fn finite_members(&self) -> Option<&[u64]> {
        self.is_finite().then_some(&self.prefix[..])
    }

    /// Members below `bound`, ascending.
    pub fn members_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&x| self.contains(x)).collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> Self {
        let prefix = (0..self.threshold).filter(|&x| !self.contains(x)).collect();
        let residues = (0..self.period).filter(|&r| !self.tail_contains(r)).collect();
        Self::normalize(self.threshold, prefix, self.period, residues)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// Aligns both sets to the larger threshold and the common period, then
    /// combines membership pointwise.
    fn zip_with(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let threshold = self.threshold.max(other.threshold);
        let period = self.period.lcm(&other.period);
        let prefix = (0..threshold).filter(|&x| op(self.contains(x), other.contains(x))).collect();
        let residues = (0..period).filter(|&r| op(self.tail_contains(r), other.tail_contains(r))).collect();
        Self::normalize(threshold, prefix, period, residues)
    }

    /// Shrinks the period to the least one the tail admits, then pulls the
    /// threshold down while the point just below it already follows the tail.
    fn normalize(mut threshold: u64, mut prefix: Vec<u64>, period: u64, residues: Vec<u64>) -> Self {
        let least = least_period(period, &residues);
        let mut residues: Vec<u64> = residues.into_iter().filter(|&r| r < least).collect();
        residues.dedup();
        let period = least;
        let tail = |x: u64| residues.binary_search(&(x % period)).is_ok();
        while threshold > 0 {
            let x = threshold - 1;
            let listed = prefix.last() == Some(&x);
            if listed != tail(x) {
                break;
            }
            if listed {
                prefix.pop();
            }
            threshold = x;
        }
        Self { threshold, prefix, period, residues }
    }
}

/// Least divisor `d` of `period` such that the residue set is invariant
/// under adding `d`.
fn least_period(period: u64, residues: &[u64]) -> u64 {
    let mut divisors: Vec<u64> = (1..)
        .take_while(|d| d * d <= period)
        .filter(|d| period.is_multiple_of(*d))
        .flat_map(|d| [d, period / d])
        .collect();
    divisors.sort_unstable();
    divisors.dedup();
    divisors
        .into_iter()
        .find(|&d| residues.iter().all(|&r| residues.binary_search(&((r + d) % period)).is_ok()))
        .unwrap_or(period)
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        if self.is_empty() {
            return f.write_str("∅");
        }
        let mut parts = Vec::new();
        if !self.prefix.is_empty() {
            parts.push(format!("{{{}}}", list(&self.prefix)));
        }
        if !self.residues.is_empty() {
            if self.is_cofinite() {
                parts.push(format!("{{x ≥ {}}}", self.threshold));
            } else {
                parts.push(format!(
                    "{{x ≥ {} : x mod {} ∈ {{{}}}}}",
                    self.threshold,
                    self.period,
                    list(&self.residues)
                ));
            }
        }
        f.write_str(&parts.join(" ∪ "))
    }
}

/// Which natural numbers form the carrier: `offset = 0` for `ℕ₀`, `1` for
/// the positive integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    pub offset: u64,
}

impl Carrier {
    pub const N0: Carrier = Carrier { offset: 0 };
    pub const N1: Carrier = Carrier { offset: 1 };

    pub fn full(self) -> UpSet {
        UpSet::at_least(self.offset)
    }

    pub fn contains_set(self, s: &UpSet) -> bool {
        s.is_subset(&self.full())
    }

    pub fn complement(self, s: &UpSet) -> UpSet {
        self.full().difference(s)
    }

    /// Whether `s` lies in the carrier and misses only finitely many of its points.
    pub fn is_cofinite(self, s: &UpSet) -> bool {
        self.contains_set(s) && self.complement(s).is_finite()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetOp {
    Union,
    Intersect,
    Difference,
    Complement,
}

impl SetOp {
    fn name(self) -> &'static str {
        match self {
            SetOp::Union => "union",
            SetOp::Intersect => "intersect",
            SetOp::Difference => "difference",
            SetOp::Complement => "complement",
        }
    }

    fn arity(self) -> usize {
        if self == SetOp::Complement {
            1
        } else {
            2
        }
    }
}

pub fn up_combine(op: SetOp, s: &UpSet, s2: Option<&UpSet>) -> Result<UpSet> {
    match (op, s2) {
        (SetOp::Complement, None) => Ok(s.complement()),
        (SetOp::Union, Some(t)) => Ok(s.union(t)),
        (SetOp::Intersect, Some(t)) => Ok(s.intersection(t)),
        (SetOp::Difference, Some(t)) => Ok(s.difference(t)),
        _ => Err(Error::ArityMismatch(op.name(), op.arity())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetQuery<'a> {
    Member(u64),
    IsEmpty,
    IsFinite,
    IsCofinite,
    Min,
    Equals(&'a UpSet),
    Subset(&'a UpSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryAnswer {
    Bool(bool),
    Value(u64),
}

pub fn up_query(s: &UpSet, q: SetQuery<'_>) -> Result<QueryAnswer> {
    Ok(match q {
        SetQuery::Member(x) => QueryAnswer::Bool(s.contains(x)),
        SetQuery::IsEmpty => QueryAnswer::Bool(s.is_empty()),
        SetQuery::IsFinite => QueryAnswer::Bool(s.is_finite()),
        SetQuery::IsCofinite => QueryAnswer::Bool(s.is_cofinite()),
        SetQuery::Min => QueryAnswer::Value(s.min()?),
        SetQuery::Equals(t) => QueryAnswer::Bool(s == t),
        SetQuery::Subset(t) => QueryAnswer::Bool(s.is_subset(t)),
    })
}
