//! Topological spaces on a small labeled ground set `{0, .., n-1}`.
//!
//! Point sets are bitmasks and a topology is stored as a 64-bit family mask:
//! bit `s` is set when the subset with bitmask `s` is open. With `n <= 6`
//! there are at most 64 subsets, so every topology on the carrier fits one
//! word and equality of topologies is equality of words.

mod properties;
mod sober;

pub use properties::PropertyKind;
pub use sober::Soberification;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::Preorder;

/// Hard cap on the ground size.
pub const MAX_POINTS: usize = 6;

/// A subset of `{0, .., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PointSet {
    n: u8,
    bits: u8,
}

impl PointSet {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        check_ground(n)?;
        if bits >= 1u64 << n {
            return Err(Error::BadPoint { n, bits });
        }
        Ok(Self::from_bits(n, bits as u8))
    }

    pub(crate) fn from_bits(n: usize, bits: u8) -> Self {
        debug_assert!(n <= MAX_POINTS && (bits as u64) < (1u64 << n));
        Self { n: n as u8, bits }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_bits(n, 0)
    }

    pub fn full(n: usize) -> Self {
        Self::from_bits(n, full_mask(n))
    }

    pub fn singleton(n: usize, x: usize) -> Result<Self> {
        if x >= n {
            return Err(Error::BadPoint { n, bits: 1u64.checked_shl(x as u32).unwrap_or(u64::MAX) });
        }
        Ok(Self::from_bits(n, 1 << x))
    }

    pub fn from_points(n: usize, points: &[usize]) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        for &x in points {
            if x >= n {
                return Err(Error::BadPoint { n, bits: 1u64.checked_shl(x as u32).unwrap_or(u64::MAX) });
            }
            bits |= 1 << x;
        }
        Ok(Self::from_bits(n, bits as u8))
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x < self.n() && self.bits >> x & 1 == 1
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        Self::from_bits(self.n(), self.bits | other.bits)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        Self::from_bits(self.n(), self.bits & other.bits)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        Self::from_bits(self.n(), self.bits & !other.bits)
    }

    pub fn complement(self) -> PointSet {
        Self::from_bits(self.n(), !self.bits & full_mask(self.n()))
    }

    pub fn insert(self, x: usize) -> PointSet {
        assert!(x < self.n(), "point {x} outside ground set of size {}", self.n);
        Self::from_bits(self.n(), self.bits | 1 << x)
    }

    pub fn remove(self, x: usize) -> PointSet {
        Self::from_bits(self.n(), self.bits & !(1u8.checked_shl(x as u32).unwrap_or(0)))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.n()).filter(move |&x| bits >> x & 1 == 1)
    }

    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// All subsets of `{0, .., n-1}` in canonical order.
    pub fn all(n: usize) -> impl Iterator<Item = PointSet> {
        let mut v: Vec<PointSet> = (0..1u16 << n).map(|b| Self::from_bits(n, b as u8)).collect();
        v.sort();
        v.into_iter()
    }
}

/// Canonical order: by ground size, then cardinality, then numeric mask.
impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.bits.count_ones(), self.bits).cmp(&(other.n, other.bits.count_ones(), other.bits))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn check_ground(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::GroundTooLarge(n));
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u8 {
    ((1u16 << n) - 1) as u8
}

fn subset_count(n: usize) -> usize {
    1 << n
}

fn full_family(n: usize) -> u64 {
    match subset_count(n) {
        64 => u64::MAX,
        c => (1u64 << c) - 1,
    }
}

pub(crate) fn family_members(family: u64) -> impl Iterator<Item = u8> {
    let mut rest = family;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let s = rest.trailing_zeros() as u8;
        rest &= rest - 1;
        Some(s)
    })
}

/// A topology on `{0, .., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FiniteTopology {
    n: u8,
    opens: u64,
}

impl FiniteTopology {
    /// Validates and canonicalizes a family of open sets.
    pub fn new(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_ground(n)?;
        let mut family = 0u64;
        for s in opens {
            if s.n() != n {
                return Err(Error::BadPoint { n, bits: s.bits as u64 });
            }
            family |= 1 << s.bits;
        }
        Self::from_family(n, family)
    }

    pub fn from_masks(n: usize, masks: &[u64]) -> Result<Self> {
        check_ground(n)?;
        let sets = masks.iter().map(|&m| PointSet::new(n, m)).collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    fn from_family(n: usize, family: u64) -> Result<Self> {
        let full = full_mask(n);
        if family & 1 == 0 {
            return Err(Error::NotATopology("empty set is not open".into()));
        }
        if family >> full & 1 == 0 {
            return Err(Error::NotATopology("full set is not open".into()));
        }
        for a in family_members(family) {
            for b in family_members(family) {
                if b < a {
                    continue;
                }
                if family >> (a | b) & 1 == 0 {
                    return Err(Error::NotATopology(format!(
                        "union of {} and {} is not open",
                        PointSet::from_bits(n, a),
                        PointSet::from_bits(n, b)
                    )));
                }
                if family >> (a & b) & 1 == 0 {
                    return Err(Error::NotATopology(format!(
                        "intersection of {} and {} is not open",
                        PointSet::from_bits(n, a),
                        PointSet::from_bits(n, b)
                    )));
                }
            }
        }
        Ok(Self { n: n as u8, opens: family })
    }

    /// Caller guarantees the family is a topology.
    pub(crate) fn from_family_unchecked(n: usize, family: u64) -> Self {
        debug_assert!(Self::from_family(n, family).is_ok(), "family {family:#x} on {n} points");
        Self { n: n as u8, opens: family }
    }

    pub fn discrete(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self::from_family_unchecked(n, full_family(n))
    }

    pub fn indiscrete(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self::from_family_unchecked(n, 1 | 1u64 << full_mask(n))
    }

    /// The two-point space in which `open_point` is the only proper open point.
    pub fn sierpinski(open_point: usize) -> Self {
        assert!(open_point < 2);
        Self::from_family_unchecked(2, 1 | 1 << (1 << open_point) | 1 << 3)
    }

    /// Smallest topology containing every set of `subbase`.
    ///
    /// Finite carriers make every topology Alexandroff, so the result is
    /// described by the minimal neighbourhood of each point: the intersection
    /// of all subbasic sets that contain it (the full set when there are none).
    pub fn generate(n: usize, subbase: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_ground(n)?;
        let full = full_mask(n);
        let mut nbhd = [full; MAX_POINTS];
        for s in subbase {
            if s.n() != n {
                return Err(Error::BadPoint { n, bits: s.bits as u64 });
            }
            for x in s.iter() {
                nbhd[x] &= s.bits;
            }
        }
        Ok(Self::from_family_unchecked(n, upward_family(n, &nbhd[..n])))
    }

    /// Topology whose closed sets are generated by `closed_subbase` under
    /// finite unions and arbitrary intersections.
    pub fn generate_from_closed(n: usize, closed_subbase: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let complements: Vec<PointSet> = closed_subbase.into_iter().map(PointSet::complement).collect();
        Self::generate(n, complements)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn ground(&self) -> PointSet {
        PointSet::full(self.n())
    }

    /// Raw family word: bit `s` set iff subset `s` is open.
    pub fn family(&self) -> u64 {
        self.opens
    }

    pub fn open_count(&self) -> usize {
        self.opens.count_ones() as usize
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.n() == self.n() && self.opens >> s.bits & 1 == 1
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.n() == self.n() && self.is_open(s.complement())
    }

    /// Open sets in canonical order.
    pub fn opens(&self) -> Vec<PointSet> {
        let n = self.n();
        let mut v: Vec<PointSet> = family_members(self.opens).map(|b| PointSet::from_bits(n, b)).collect();
        v.sort();
        v
    }

    /// Closed sets in canonical order.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = self.opens().into_iter().map(PointSet::complement).collect();
        v.sort();
        v
    }

    /// Canonical encoding: sorted list of open-set masks.
    pub fn masks(&self) -> Vec<u8> {
        self.opens().into_iter().map(PointSet::bits).collect()
    }

    /// `self ⊆ other` as families of open sets.
    pub fn is_coarser_than(&self, other: &FiniteTopology) -> bool {
        self.n == other.n && self.opens & !other.opens == 0
    }

    pub fn is_strictly_coarser_than(&self, other: &FiniteTopology) -> bool {
        self.is_coarser_than(other) && self.opens != other.opens
    }

    pub fn meet_with(&self, other: &FiniteTopology) -> FiniteTopology {
        assert_eq!(self.n, other.n);
        Self::from_family_unchecked(self.n(), self.opens & other.opens)
    }

    pub fn join_with(&self, other: &FiniteTopology) -> FiniteTopology {
        assert_eq!(self.n, other.n);
        let sets = self.opens().into_iter().chain(other.opens());
        Self::generate(self.n(), sets).expect("ground sizes agree")
    }

    fn check_set(&self, a: PointSet) -> Result<()> {
        if a.n() != self.n() {
            return Err(Error::BadPoint { n: self.n(), bits: a.bits as u64 });
        }
        Ok(())
    }

    pub(crate) fn closure_bits(&self, a: u8) -> u8 {
        // complement of the union of all opens missing `a`
        let mut interior_of_complement = 0u8;
        for u in family_members(self.opens) {
            if u & a == 0 {
                interior_of_complement |= u;
            }
        }
        !interior_of_complement & full_mask(self.n())
    }

    /// Smallest closed set containing `a`.
    pub fn closure(&self, a: PointSet) -> Result<PointSet> {
        self.check_set(a)?;
        Ok(PointSet::from_bits(self.n(), self.closure_bits(a.bits)))
    }

    /// `cl({x})`. Panics when `x` is not a point of the carrier.
    pub fn point_closure(&self, x: usize) -> PointSet {
        assert!(x < self.n(), "point {x} outside ground set of size {}", self.n);
        PointSet::from_bits(self.n(), self.closure_bits(1 << x))
    }

    pub(crate) fn point_closures(&self) -> [u8; MAX_POINTS] {
        let mut cls = [0u8; MAX_POINTS];
        for (x, c) in cls.iter_mut().enumerate().take(self.n()) {
            *c = self.closure_bits(1 << x);
        }
        cls
    }

    /// Union of the point closures of the members of `a`.
    pub fn tilde(&self, a: PointSet) -> Result<PointSet> {
        self.check_set(a)?;
        let bits = a.iter().fold(0u8, |acc, x| acc | self.closure_bits(1 << x));
        Ok(PointSet::from_bits(self.n(), bits))
    }

    /// Specialization preorder: `x <= y` iff `x ∈ cl({y})`.
    pub fn specialization(&self) -> Preorder {
        let n = self.n();
        let cls = self.point_closures();
        let mut up = [0u8; MAX_POINTS];
        for (y, &cl) in cls.iter().enumerate().take(n) {
            for (x, row) in up.iter_mut().enumerate().take(n) {
                if cl >> x & 1 == 1 {
                    *row |= 1 << y;
                }
            }
        }
        Preorder::from_rows_unchecked(n, up)
    }

    /// Whether `a` is irreducible, tested through open sets: any two opens
    /// meeting `a` must meet inside `a`.
    pub fn is_irreducible(&self, a: PointSet) -> bool {
        if a.is_empty() || a.n() != self.n() {
            return false;
        }
        let meeting: Vec<u8> = family_members(self.opens).filter(|&u| u & a.bits != 0).collect();
        meeting.iter().all(|&u| meeting.iter().all(|&v| u & v & a.bits != 0))
    }

    /// Closed irreducible sets, by the closed-cover definition, in canonical order.
    pub fn irr_closed(&self) -> Vec<PointSet> {
        let n = self.n();
        let full = full_mask(n);
        let closed: Vec<u8> = family_members(self.opens).map(|u| !u & full).collect();
        let mut out: Vec<PointSet> = closed
            .iter()
            .copied()
            .filter(|&c| c != 0)
            .filter(|&c| {
                closed.iter().all(|&f| closed.iter().all(|&g| c & !(f | g) != 0 || c & !f == 0 || c & !g == 0))
            })
            .map(|c| PointSet::from_bits(n, c))
            .collect();
        out.sort();
        out
    }

    /// Subspace topology on `m`, relabeled to `{0, .., |m|-1}` in increasing order.
    pub fn subspace(&self, m: PointSet) -> Result<FiniteTopology> {
        self.check_set(m)?;
        let points: Vec<usize> = m.iter().collect();
        let k = points.len();
        let mut family = 0u64;
        for u in family_members(self.opens) {
            let mut relabeled = 0u8;
            for (i, &p) in points.iter().enumerate() {
                if u >> p & 1 == 1 {
                    relabeled |= 1 << i;
                }
            }
            family |= 1 << relabeled;
        }
        Ok(Self::from_family_unchecked(k, family))
    }
}

impl Ord for FiniteTopology {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.opens).cmp(&(other.n, other.opens))
    }
}

impl PartialOrd for FiniteTopology {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FiniteTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.opens().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Family of sets `u` with `nbhd[x] ⊆ u` for every `x ∈ u`.
pub(crate) fn upward_family(n: usize, nbhd: &[u8]) -> u64 {
    let mut family = 0u64;
    for u in 0..subset_count(n) {
        let u = u as u8;
        if (0..n).all(|x| u >> x & 1 == 0 || nbhd[x] & !u == 0) {
            family |= 1 << u;
        }
    }
    family
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts).unwrap()
    }

    #[test]
    fn make_topology_examples() {
        let sier = FiniteTopology::new(2, [ps(2, &[]), ps(2, &[1]), ps(2, &[0, 1])]).unwrap();
        assert_eq!(sier, FiniteTopology::sierpinski(1));

        let err = FiniteTopology::new(2, [ps(2, &[]), ps(2, &[0]), ps(2, &[1])]).unwrap_err();
        assert!(matches!(err, Error::NotATopology(_)));

        let t = FiniteTopology::from_masks(3, &[0, 0b001, 0b010, 0b011, 0b111]).unwrap();
        assert_eq!(t.open_count(), 5);
    }

    #[test]
    fn make_topology_rejects_missing_union_and_bad_points() {
        assert!(matches!(FiniteTopology::from_masks(3, &[0, 0b001, 0b010, 0b111]), Err(Error::NotATopology(_))));
        assert!(matches!(FiniteTopology::from_masks(3, &[0, 0b011, 0b110, 0b111]), Err(Error::NotATopology(_))));
        assert!(matches!(FiniteTopology::from_masks(2, &[0, 4, 3]), Err(Error::BadPoint { .. })));
        assert!(matches!(PointSet::from_points(2, &[2]), Err(Error::BadPoint { .. })));
        assert!(matches!(FiniteTopology::from_masks(7, &[]), Err(Error::GroundTooLarge(7))));
    }

    #[test]
    fn generate_examples() {
        let t = FiniteTopology::generate(3, [ps(3, &[0, 1]), ps(3, &[1, 2])]).unwrap();
        assert_eq!(t.masks(), vec![0b000, 0b010, 0b011, 0b110, 0b111]);
        assert_eq!(FiniteTopology::generate(2, []).unwrap(), FiniteTopology::indiscrete(2));
        assert_eq!(FiniteTopology::generate(2, [ps(2, &[0]), ps(2, &[1])]).unwrap(), FiniteTopology::discrete(2));
    }

    #[test]
    fn closure_examples() {
        let sier = FiniteTopology::sierpinski(1);
        assert_eq!(sier.closure(ps(2, &[1])).unwrap(), ps(2, &[0, 1]));
        assert_eq!(sier.closure(ps(2, &[0])).unwrap(), ps(2, &[0]));
        // {∅,{2},{2,3},{1,2},X} on {1,2,3}, relabeled to 0..2
        let t = FiniteTopology::from_masks(3, &[0, 0b010, 0b110, 0b011, 0b111]).unwrap();
        assert_eq!(t.closure(ps(3, &[1])).unwrap(), ps(3, &[0, 1, 2]));
        assert!(matches!(t.closure(ps(2, &[1])), Err(Error::BadPoint { .. })));
    }

    #[test]
    fn specialization_examples() {
        let sp = FiniteTopology::sierpinski(1).specialization();
        assert!(sp.leq(0, 1) && !sp.leq(1, 0));
        let d = FiniteTopology::discrete(4).specialization();
        assert_eq!(d, Preorder::discrete(4));
        let i = FiniteTopology::indiscrete(2).specialization();
        assert!(i.leq(0, 1) && i.leq(1, 0));
    }

    #[test]
    fn irr_closed_examples() {
        assert_eq!(FiniteTopology::sierpinski(1).irr_closed(), vec![ps(2, &[0]), ps(2, &[0, 1])]);
        assert_eq!(FiniteTopology::indiscrete(2).irr_closed(), vec![ps(2, &[0, 1])]);
        assert!(FiniteTopology::indiscrete(0).irr_closed().is_empty());
    }

    #[test]
    fn tilde_examples() {
        let sier = FiniteTopology::sierpinski(1);
        assert_eq!(sier.tilde(ps(2, &[1])).unwrap(), ps(2, &[0, 1]));
        assert_eq!(sier.tilde(ps(2, &[0])).unwrap(), ps(2, &[0]));
        assert_eq!(sier.tilde(PointSet::empty(2)).unwrap(), PointSet::empty(2));
    }

    #[test]
    fn subspace_relabels() {
        let t = FiniteTopology::from_masks(3, &[0, 0b001, 0b011, 0b111]).unwrap();
        let sub = t.subspace(ps(3, &[0, 2])).unwrap();
        assert_eq!(sub.masks(), vec![0b00, 0b01, 0b11]);
    }

    #[test]
    fn canonical_order_is_popcount_then_value() {
        let all: Vec<u8> = PointSet::all(3).map(PointSet::bits).collect();
        assert_eq!(all, vec![0, 1, 2, 4, 3, 5, 6, 7]);
        assert_eq!(ps(3, &[0, 2]).to_string(), "{0,2}");
    }

    #[test]
    fn six_point_extremes() {
        let d = FiniteTopology::discrete(6);
        assert_eq!(d.open_count(), 64);
        assert_eq!(FiniteTopology::indiscrete(6).open_count(), 2);
        assert_eq!(d.point_closure(5), ps(6, &[5]));
    }
}
