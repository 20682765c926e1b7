//! The lattice `T(X)` of all topologies on a finite set.

use crate::error::{Error, Result};
use crate::finspace::{check_ground, full_mask, FiniteTopology, PropertyKind};
use crate::order::{alexandroff_topology, Preorder};

/// Largest ground size for which `T(X)` is enumerated.
pub const ENUMERATION_LIMIT: usize = 5;
/// Largest ground size for searches over subsets of `T(X)`.
pub const SEARCH_LIMIT: usize = 4;

fn require(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    Ok(())
}

/// Duplicate-free family of topologies on a common carrier, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TopologyFamily {
    n: usize,
    members: Vec<FiniteTopology>,
}

impl TopologyFamily {
    pub fn new(n: usize, members: impl IntoIterator<Item = FiniteTopology>) -> Result<Self> {
        check_ground(n)?;
        let mut members: Vec<FiniteTopology> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|t| t.n() != n) {
            return Err(Error::MixedGroundSize(n, bad.n()));
        }
        members.sort();
        members.dedup();
        Ok(Self { n, members })
    }

    /// Ground size taken from the first member.
    pub fn from_members(members: impl IntoIterator<Item = FiniteTopology>) -> Result<Self> {
        let members: Vec<FiniteTopology> = members.into_iter().collect();
        let n = members.first().ok_or(Error::EmptyFamily)?.n();
        Self::new(n, members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[FiniteTopology] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &FiniteTopology) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FiniteTopology> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a TopologyFamily {
    type Item = &'a FiniteTopology;
    type IntoIter = std::slice::Iter<'a, FiniteTopology>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Intersection of the open families.
pub fn meet(fam: &TopologyFamily) -> Result<FiniteTopology> {
    let (first, rest) = fam.members.split_first().ok_or(Error::EmptyFamily)?;
    Ok(rest.iter().fold(*first, |acc, t| acc.meet_with(t)))
}

/// Topology generated by the union of the open families.
pub fn join(fam: &TopologyFamily) -> Result<FiniteTopology> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    FiniteTopology::generate(fam.n, fam.members.iter().flat_map(|t| t.opens()))
}

/// Every topology on `n` points, optionally filtered, in the canonical
/// order of the preorder encoding (finite topologies are exactly the
/// Alexandroff topologies of preorders).
pub fn enumerate_topologies(n: usize, filter: Option<PropertyKind>) -> Result<Vec<FiniteTopology>> {
    require(n, ENUMERATION_LIMIT)?;
    Ok(Preorder::all(n)?
        .iter()
        .map(alexandroff_topology)
        .filter(|t| filter.is_none_or(|p| t.has_property(p)))
        .collect())
}

/// Counts topologies by searching open-set families directly, without going
/// through preorders.
///
/// Subsets are decided in increasing numeric order. Intersections and the
/// subsets whose union produces a set are numerically smaller than it, so
/// each decision is checked against earlier ones only and every leaf of the
/// search is a topology.
pub fn enumerate_by_family(n: usize) -> Result<Vec<FiniteTopology>> {
    require(n, ENUMERATION_LIMIT)?;
    let full = full_mask(n);
    let mut out = Vec::new();
    if n == 0 {
        out.push(FiniteTopology::indiscrete(0));
        return Ok(out);
    }
    let mut included: Vec<u8> = vec![0];
    family_search(n, 1, full, 1, &mut included, &mut out);
    out.sort();
    Ok(out)
}

fn family_search(n: usize, next: u8, full: u8, family: u64, included: &mut Vec<u8>, out: &mut Vec<FiniteTopology>) {
    if next == full {
        let family = family | 1 << full;
        out.push(FiniteTopology::from_family_unchecked(n, family));
        return;
    }
    let forced = included.iter().any(|&a| included.iter().any(|&b| a | b == next));
    let meets_ok = included.iter().all(|&a| family >> (a & next) & 1 == 1);
    if meets_ok {
        included.push(next);
        family_search(n, next + 1, full, family | 1 << next, included, out);
        included.pop();
    }
    if !forced {
        family_search(n, next + 1, full, family, included, out);
    }
}

/// Members of the class with no strictly coarser member of the class.
pub fn minimal_in_class(n: usize, p: PropertyKind) -> Result<TopologyFamily> {
    require(n, SEARCH_LIMIT)?;
    let class = enumerate_topologies(n, Some(p))?;
    let minimal = class.iter().filter(|t| !class.iter().any(|s| s.is_strictly_coarser_than(t))).copied();
    TopologyFamily::new(n, minimal)
}

/// Whether every nonempty family joining to `t` contains `t`.
///
/// Only topologies below `t` can occur in such a family. If a nonempty
/// family of strictly coarser topologies joins to `t`, fold it left to
/// right: the running join stays strictly below `t` until some step first
/// reaches `t`, and that step is a join of two strictly coarser topologies.
/// So it suffices to test pairs from the strict downset.
pub fn strongly_irreducible(t: &FiniteTopology) -> Result<bool> {
    require(t.n(), SEARCH_LIMIT)?;
    let below = strict_downset(t)?;
    for (i, a) in below.iter().enumerate() {
        for b in &below[i..] {
            if a.join_with(b) == *t {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Same question decided by computing the join of every nonempty subfamily
/// of the strict downset (as the set of reachable join values).
pub fn strongly_irreducible_exhaustive(t: &FiniteTopology) -> Result<bool> {
    require(t.n(), 3)?;
    let below = strict_downset(t)?;
    let mut reachable: std::collections::BTreeSet<FiniteTopology> = Default::default();
    for d in &below {
        let extended: Vec<FiniteTopology> = reachable.iter().map(|r| r.join_with(d)).collect();
        reachable.extend(extended);
        reachable.insert(*d);
    }
    Ok(!reachable.contains(t))
}

fn strict_downset(t: &FiniteTopology) -> Result<Vec<FiniteTopology>> {
    Ok(enumerate_topologies(t.n(), None)?.into_iter().filter(|s| s.is_strictly_coarser_than(t)).collect())
}

/// Least number of sober topologies joining to a given topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SoberWidth {
    Count(usize),
    /// No family of sober topologies joins to it.
    Undecomposable,
}

pub fn sober_join_width(t: &FiniteTopology) -> Result<SoberWidth> {
    require(t.n(), SEARCH_LIMIT)?;
    if t.is_sober() {
        return Ok(SoberWidth::Count(1));
    }
    let sober_below: Vec<FiniteTopology> =
        enumerate_topologies(t.n(), Some(PropertyKind::Sober))?.into_iter().filter(|s| s.is_coarser_than(t)).collect();
    let all = TopologyFamily::new(t.n(), sober_below.iter().copied())?;
    if all.is_empty() || join(&all)? != *t {
        return Ok(SoberWidth::Undecomposable);
    }
    // joins of k-subsets, tracked as sets of reachable values
    let mut layer: std::collections::BTreeSet<FiniteTopology> = sober_below.iter().copied().collect();
    for k in 2..=sober_below.len() {
        layer = layer.iter().flat_map(|a| sober_below.iter().map(move |b| a.join_with(b))).collect();
        if layer.contains(t) {
            return Ok(SoberWidth::Count(k));
        }
    }
    Ok(SoberWidth::Undecomposable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::PointSet;

    fn fam(ts: &[FiniteTopology]) -> TopologyFamily {
        TopologyFamily::from_members(ts.iter().copied()).unwrap()
    }

    #[test]
    fn meet_examples() {
        let s0 = FiniteTopology::sierpinski(0);
        let s1 = FiniteTopology::sierpinski(1);
        assert_eq!(meet(&fam(&[s0, s1])).unwrap(), FiniteTopology::indiscrete(2));
        assert_eq!(meet(&fam(&[s0])).unwrap(), s0);
        let t0s = enumerate_topologies(2, Some(PropertyKind::T0)).unwrap();
        assert_eq!(t0s.len(), 3);
        assert_eq!(meet(&fam(&t0s)).unwrap(), FiniteTopology::indiscrete(2));
    }

    #[test]
    fn join_examples() {
        let s0 = FiniteTopology::sierpinski(0);
        let s1 = FiniteTopology::sierpinski(1);
        assert_eq!(join(&fam(&[s0, s1])).unwrap(), FiniteTopology::discrete(2));
        assert_eq!(join(&fam(&[s1, FiniteTopology::indiscrete(2)])).unwrap(), s1);
    }

    #[test]
    fn family_errors() {
        let empty = TopologyFamily::new(2, []).unwrap();
        assert_eq!(meet(&empty), Err(Error::EmptyFamily));
        assert_eq!(join(&empty), Err(Error::EmptyFamily));
        assert_eq!(
            TopologyFamily::from_members([FiniteTopology::discrete(2), FiniteTopology::discrete(3)]),
            Err(Error::MixedGroundSize(2, 3))
        );
    }

    #[test]
    fn join_is_least_upper_bound_on_three_points() {
        let all = enumerate_topologies(3, None).unwrap();
        for a in &all {
            for b in &all {
                let j = a.join_with(b);
                assert!(a.is_coarser_than(&j) && b.is_coarser_than(&j));
                for c in &all {
                    if a.is_coarser_than(c) && b.is_coarser_than(c) {
                        assert!(j.is_coarser_than(c));
                    }
                }
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_topologies(2, None).unwrap().len(), 4);
        assert_eq!(enumerate_topologies(3, None).unwrap().len(), 29);
        assert_eq!(enumerate_topologies(3, Some(PropertyKind::T0)).unwrap().len(), 19);
        assert_eq!(enumerate_by_family(2).unwrap().len(), 4);
        assert_eq!(enumerate_topologies(6, None), Err(Error::TooLarge { n: 6, limit: 5 }));
    }

    #[test]
    fn family_search_matches_brute_force_over_all_families() {
        // every family of subsets of a 3-set containing ∅ and X
        let mut brute = Vec::new();
        for rest in 0..1u64 << 6 {
            let family = 1 | (rest << 1) | 1 << 7;
            let sets: Vec<PointSet> =
                (0..8u64).filter(|s| family >> s & 1 == 1).map(|s| PointSet::new(3, s).unwrap()).collect();
            if let Ok(t) = FiniteTopology::new(3, sets) {
                brute.push(t);
            }
        }
        brute.sort();
        assert_eq!(brute, enumerate_by_family(3).unwrap());
    }

    #[test]
    fn minimal_sober_on_two_points() {
        let m = minimal_in_class(2, PropertyKind::Sober).unwrap();
        let mut expected = [FiniteTopology::sierpinski(0), FiniteTopology::sierpinski(1)];
        expected.sort();
        assert_eq!(m.members(), &expected[..]);
        assert!(matches!(minimal_in_class(5, PropertyKind::Sober), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn strongly_irreducible_examples() {
        for n in 0..=4 {
            assert!(strongly_irreducible(&FiniteTopology::indiscrete(n)).unwrap());
        }
        assert!(!strongly_irreducible(&FiniteTopology::discrete(2)).unwrap());
        assert!(strongly_irreducible(&FiniteTopology::sierpinski(1)).unwrap());
    }

    #[test]
    fn pair_reduction_agrees_with_exhaustion() {
        for n in 0..=3 {
            for t in enumerate_topologies(n, None).unwrap() {
                assert_eq!(strongly_irreducible(&t).unwrap(), strongly_irreducible_exhaustive(&t).unwrap(), "{t}");
            }
        }
    }

    #[test]
    fn sober_width_examples() {
        assert_eq!(sober_join_width(&FiniteTopology::sierpinski(1)).unwrap(), SoberWidth::Count(1));
        assert_eq!(sober_join_width(&FiniteTopology::indiscrete(2)).unwrap(), SoberWidth::Undecomposable);
        for t in enumerate_topologies(3, Some(PropertyKind::T0)).unwrap() {
            assert_eq!(sober_join_width(&t).unwrap(), SoberWidth::Count(1));
        }
    }
}
