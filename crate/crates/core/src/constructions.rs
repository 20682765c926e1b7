//! Named refinements and coarsenings of finite topologies, each returning a
//! topology that can be checked against the properties it is built to have.

use std::fmt;

use crate::error::{Error, Result};
use crate::finspace::{check_ground, FiniteTopology, PointSet, PropertyKind};
use crate::lattice::{enumerate_topologies, meet, TopologyFamily, SEARCH_LIMIT};
use crate::order::{alexandroff_topology, scott_topology, upper_topology, Poset, Preorder};

fn precondition(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(what()))
    }
}

fn check_point(n: usize, x: usize) -> Result<()> {
    if x >= n {
        return Err(Error::BadPoint { n, bits: 1u64 << x.min(63) });
    }
    Ok(())
}

/// Sober coarsening of a T1 topology in which `a` stays closed: the opens are
/// `∅`, every set containing both `xa` and `ya`, and the traces of those sets
/// on the complement of `a`.
///
/// Closed irreducible sets are the singletons away from `xa` and `ya`, then
/// `a = cl{xa}` and `X = cl{ya}`.
pub fn tau_a(t: &FiniteTopology, a: PointSet, xa: usize, ya: usize) -> Result<FiniteTopology> {
    let n = t.n();
    precondition(t.is_t1(), || "topology is not T1".into())?;
    precondition(a.n() == n, || format!("{a} is not a subset of a {n}-point carrier"))?;
    precondition(!a.is_empty() && a != t.ground(), || format!("{a} is not a proper nonempty subset"))?;
    precondition(t.is_closed(a), || format!("{a} is not closed"))?;
    precondition(xa < n && a.contains(xa), || format!("x_A = {xa} is not in {a}"))?;
    precondition(ya < n && !a.contains(ya), || format!("y_A = {ya} is in {a}"))?;

    let pair = PointSet::from_points(n, &[xa, ya])?;
    let mut opens = vec![PointSet::empty(n)];
    for v in PointSet::all(n).filter(|v| pair.is_subset(*v)) {
        opens.push(v);
        opens.push(v.difference(a));
    }
    let result = FiniteTopology::new(n, opens)?;
    debug_assert!(result.is_coarser_than(t));
    Ok(result)
}

/// The discrete topology as a join of [`tau_a`] coarsenings, one for each
/// nonempty proper subset `A`, with `x_A = min A` and `y_A` the first point
/// outside `A` after `x_A`, wrapping around. (Always taking `y_A = min Aᶜ`
/// makes several singletons give the same topology.)
pub fn t1_join_decomposition(t: &FiniteTopology) -> Result<TopologyFamily> {
    if !t.is_t1() {
        return Err(Error::NotT1);
    }
    let n = t.n();
    if n <= 1 {
        return TopologyFamily::new(n, [*t]);
    }
    let members = PointSet::all(n)
        .filter(|a| !a.is_empty() && *a != t.ground())
        .map(|a| {
            let xa = a.first().unwrap();
            let ya = (1..n).map(|k| (xa + k) % n).find(|&y| !a.contains(y)).unwrap();
            tau_a(t, a, xa, ya)
        })
        .collect::<Result<Vec<_>>>()?;
    TopologyFamily::new(n, members)
}

/// A representative for each class of topologically indistinguishable points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChoiceFunction {
    n: usize,
    classes: Vec<PointSet>,
    picks: Vec<usize>,
}

impl ChoiceFunction {
    pub fn new(n: usize, classes: Vec<PointSet>, picks: Vec<usize>) -> Result<Self> {
        check_ground(n)?;
        if classes.len() != picks.len() {
            return Err(Error::BadPartition(format!("{} classes but {} picks", classes.len(), picks.len())));
        }
        let mut covered = PointSet::empty(n);
        for (&c, &p) in classes.iter().zip(&picks) {
            if c.n() != n || c.is_empty() {
                return Err(Error::BadPartition(format!("bad class {c}")));
            }
            if !covered.intersection(c).is_empty() {
                return Err(Error::BadPartition(format!("class {c} overlaps an earlier class")));
            }
            if p >= n || !c.contains(p) {
                return Err(Error::BadPartition(format!("pick {p} is not in its class {c}")));
            }
            covered = covered.union(c);
        }
        if covered != PointSet::full(n) {
            return Err(Error::BadPartition(format!("classes cover only {covered}")));
        }
        Ok(Self { n, classes, picks })
    }

    /// Least point of every class of `t`.
    pub fn least(t: &FiniteTopology) -> Self {
        let classes = t.specialization().classes();
        let picks = classes.iter().map(|c| c.first().unwrap()).collect();
        Self { n: t.n(), classes, picks }
    }

    /// Picks `x` in its own class and the least point elsewhere.
    pub fn through(t: &FiniteTopology, x: usize) -> Result<Self> {
        check_point(t.n(), x)?;
        let mut f = Self::least(t);
        let i = f.class_index(x);
        f.picks[i] = x;
        Ok(f)
    }

    /// Every choice function for the classes of `t`.
    pub fn all(t: &FiniteTopology) -> Vec<Self> {
        let base = Self::least(t);
        let mut out = vec![base.clone()];
        for (i, c) in base.classes.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|f| {
                    c.iter().map(move |p| {
                        let mut g = f.clone();
                        g.picks[i] = p;
                        g
                    })
                })
                .collect();
        }
        out
    }

    pub fn classes(&self) -> &[PointSet] {
        &self.classes
    }

    pub fn picks(&self) -> &[usize] {
        &self.picks
    }

    fn class_index(&self, x: usize) -> usize {
        self.classes.iter().position(|c| c.contains(x)).expect("classes cover the carrier")
    }

    /// The representative of the class of `x`.
    pub fn retract(&self, x: usize) -> usize {
        self.picks[self.class_index(x)]
    }

    /// Image of the retraction: one point per class.
    pub fn image(&self) -> PointSet {
        self.picks.iter().fold(PointSet::empty(self.n), |acc, &p| acc.insert(p))
    }
}

/// T0 refinement of `t`: its closed sets together with every subset of a
/// class that contains the class representative, as a closed subbase.
pub fn tau_f(t: &FiniteTopology, f: &ChoiceFunction) -> Result<FiniteTopology> {
    let n = t.n();
    let mut expected = t.specialization().classes();
    let mut given = f.classes.clone();
    expected.sort();
    given.sort();
    if f.n != n || expected != given {
        return Err(Error::BadPartition("classes differ from those of the topology".into()));
    }
    let mut closed = t.closed_sets();
    for (&c, &p) in f.classes.iter().zip(&f.picks) {
        closed.extend(PointSet::all(n).filter(|s| s.contains(p) && s.is_subset(c)));
    }
    FiniteTopology::generate_from_closed(n, closed)
}

/// Direct sum of the discrete space on `X − m` with `mu`, where `mu` lives on
/// `{0, .., |m|-1}` and point `i` stands for the `i`-th smallest member of `m`.
pub fn tau_m(n: usize, m: PointSet, mu: &FiniteTopology) -> Result<FiniteTopology> {
    check_ground(n)?;
    if m.n() != n {
        return Err(Error::BadSubspace(format!("{m} is not a subset of a {n}-point carrier")));
    }
    if mu.n() != m.len() {
        return Err(Error::BadSubspace(format!("topology on {} points for a {}-point subset", mu.n(), m.len())));
    }
    let points: Vec<usize> = m.iter().collect();
    let outside = m.complement();
    let mut closed = Vec::new();
    for b in mu.closed_sets() {
        let lifted = b.iter().fold(PointSet::empty(n), |acc, i| acc.insert(points[i]));
        for a in PointSet::all(n).filter(|a| a.is_subset(outside)) {
            closed.push(a.union(lifted).complement());
        }
    }
    FiniteTopology::new(n, closed)
}

/// Which construction produced a member of a meet decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RefinementKind {
    /// The topology was already sober.
    Itself,
    /// [`tau_f`] with the witness pair inside one class.
    ChoiceFunction,
    /// [`tau_m`] over a two-point Sierpiński subspace.
    SierpinskiPair,
}

impl fmt::Display for RefinementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RefinementKind::Itself => "itself",
            RefinementKind::ChoiceFunction => "choice-function",
            RefinementKind::SierpinskiPair => "sierpinski-pair",
        })
    }
}

/// A sober refinement in which `kills` is not closed (`None` for the input itself).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub kills: Option<PointSet>,
    pub topology: FiniteTopology,
    pub kind: RefinementKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetSoberDecomposition {
    /// The distinct sober refinements; their meet is the input.
    pub family: TopologyFamily,
    /// One entry per non-closed set of the input, in canonical set order.
    pub refinements: Vec<Refinement>,
    /// Whether the meet of all sober refinements of the input also equals it.
    pub fallback_agrees: bool,
}

impl MeetSoberDecomposition {
    pub fn uses(&self, kind: RefinementKind) -> bool {
        self.refinements.iter().any(|r| r.kind == kind)
    }
}

/// A family of sober topologies, each finer than `t`, meeting exactly to `t`.
///
/// For each non-closed `A` take the least `a ∈ A` whose closure leaves `A`,
/// and the least `b` in `cl{a} − A`. If `a` and `b` are indistinguishable a
/// choice function through `b` gives `cl{a} = {a, b}`; otherwise `{a, b}` is a
/// Sierpiński subspace and the direct sum over it keeps `b ∈ cl{a}`. Either
/// way `A` stops being closed.
pub fn meet_sober_decomposition(t: &FiniteTopology) -> Result<MeetSoberDecomposition> {
    let n = t.n();
    if n > SEARCH_LIMIT {
        return Err(Error::TooLarge { n, limit: SEARCH_LIMIT });
    }
    let fallback = TopologyFamily::new(
        n,
        enumerate_topologies(n, Some(PropertyKind::Sober))?.into_iter().filter(|s| t.is_coarser_than(s)),
    )?;
    let fallback_agrees = meet(&fallback)? == *t;

    if t.is_sober() {
        let refinements = vec![Refinement { kills: None, topology: *t, kind: RefinementKind::Itself }];
        return Ok(MeetSoberDecomposition { family: TopologyFamily::new(n, [*t])?, refinements, fallback_agrees });
    }

    let spec = t.specialization();
    let mut refinements = Vec::new();
    for a_set in PointSet::all(n).filter(|s| !t.is_closed(*s)) {
        let (a, b) = a_set
            .iter()
            .find_map(|a| t.point_closure(a).difference(a_set).first().map(|b| (a, b)))
            .expect("a finite set is closed once it contains its point closures");
        let (topology, kind) = if spec.equivalent(a, b) {
            (tau_f(t, &ChoiceFunction::through(t, b)?)?, RefinementKind::ChoiceFunction)
        } else {
            let m = PointSet::from_points(n, &[a, b])?;
            (tau_m(n, m, &t.subspace(m)?)?, RefinementKind::SierpinskiPair)
        };
        debug_assert!(topology.is_sober() && t.is_coarser_than(&topology) && !topology.is_closed(a_set));
        refinements.push(Refinement { kills: Some(a_set), topology, kind });
    }
    let family = TopologyFamily::new(n, refinements.iter().map(|r| r.topology))?;
    if meet(&family)? != *t {
        return Err(Error::PreconditionViolated(format!("refinements of {t} do not meet back to it")));
    }
    Ok(MeetSoberDecomposition { family, refinements, fallback_agrees })
}

/// Identity order plus the single relation `a ≤ b`.
pub fn order_ab(n: usize, a: usize, b: usize) -> Result<Poset> {
    check_ground(n)?;
    check_point(n, a)?;
    check_point(n, b)?;
    if a == b {
        return Err(Error::EqualPoints(a as u64));
    }
    Poset::new(Preorder::from_pairs(n, &[(a, b)])?)
}

/// Alexandroff topologies of the one-relation orders below `p`; their meet is
/// the Alexandroff topology of `p`.
pub fn alexandroff_meet_decomposition(p: &Poset) -> TopologyFamily {
    let n = p.n();
    let pairs = p.strict_pairs();
    let members: Vec<FiniteTopology> = if pairs.is_empty() {
        vec![FiniteTopology::discrete(n)]
    } else {
        pairs
            .into_iter()
            .map(|(a, b)| alexandroff_topology(&order_ab(n, a, b).expect("strict pair of distinct points")))
            .collect()
    };
    TopologyFamily::new(n, members).expect("members share the carrier")
}

/// Two points neither of which lies in the closure of the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncomparablePair {
    x: usize,
    y: usize,
}

impl NoncomparablePair {
    pub fn new(t: &FiniteTopology, x: usize, y: usize) -> Result<Self> {
        check_point(t.n(), x)?;
        check_point(t.n(), y)?;
        if x == y {
            return Err(Error::EqualPoints(x as u64));
        }
        if t.specialization().comparable(x, y) {
            return Err(Error::ComparablePair(x, y));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    /// Every ordered noncomparable pair, lexicographically.
    pub fn all(t: &FiniteTopology) -> Vec<Self> {
        let n = t.n();
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter_map(|(x, y)| Self::new(t, x, y).ok()).collect()
    }
}

/// Coarsening of a T0 topology that places `y` below `x`: keep the opens
/// containing `x` and those avoiding both points.
pub fn tau_star(t: &FiniteTopology, p: NoncomparablePair) -> Result<FiniteTopology> {
    if !t.is_t0() {
        return Err(Error::NotT0);
    }
    let (x, y) = (p.x, p.y);
    check_point(t.n(), x.max(y))?;
    if t.specialization().comparable(x, y) {
        return Err(Error::ComparablePair(x, y));
    }
    FiniteTopology::new(t.n(), t.opens().into_iter().filter(|u| u.contains(x) || !u.contains(y)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotMinimalWitness {
    /// Feeds [`tau_star`] to obtain a strictly coarser sober topology.
    Pair(NoncomparablePair),
    Coarser(FiniteTopology),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityVerdict {
    Minimal,
    NotMinimal(NotMinimalWitness),
}

/// Decides whether no strictly coarser topology is sober: the specialization
/// order must be a chain carrying its Scott topology.
pub fn minimal_sober_certificate(t: &FiniteTopology) -> Result<MinimalityVerdict> {
    if !t.is_sober() {
        return Err(Error::NotSober);
    }
    if let Some(&pair) = NoncomparablePair::all(t).first() {
        return Ok(MinimalityVerdict::NotMinimal(NotMinimalWitness::Pair(pair)));
    }
    let poset = Poset::new(t.specialization()).expect("sober spaces are T0");
    let scott = scott_topology(&poset);
    if *t == scott {
        return Ok(MinimalityVerdict::Minimal);
    }
    // a chain whose topology is not its Scott topology; the upper topology
    // is sober, coarser, and here different from it
    Ok(MinimalityVerdict::NotMinimal(NotMinimalWitness::Coarser(upper_topology(&poset))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts).unwrap()
    }

    fn top(n: usize, sets: &[&[usize]]) -> FiniteTopology {
        FiniteTopology::new(n, sets.iter().map(|s| ps(n, s))).unwrap()
    }

    #[test]
    fn tau_a_example() {
        let d = FiniteTopology::discrete(3);
        let t = tau_a(&d, ps(3, &[0]), 0, 1).unwrap();
        assert_eq!(t, top(3, &[&[], &[1], &[1, 2], &[0, 1], &[0, 1, 2]]));
        assert_eq!(t.irr_closed(), vec![ps(3, &[0]), ps(3, &[2]), ps(3, &[0, 1, 2])]);
        assert_eq!(t.point_closure(0), ps(3, &[0]));
        assert_eq!(t.point_closure(1), ps(3, &[0, 1, 2]));
        assert!(t.is_sober());
    }

    #[test]
    fn tau_a_preconditions() {
        let d = FiniteTopology::discrete(3);
        let bad = |r: Result<FiniteTopology>| matches!(r, Err(Error::PreconditionViolated(_)));
        assert!(bad(tau_a(&FiniteTopology::indiscrete(3), ps(3, &[0]), 0, 1)));
        assert!(bad(tau_a(&d, ps(3, &[]), 0, 1)));
        assert!(bad(tau_a(&d, ps(3, &[0, 1, 2]), 0, 1)));
        assert!(bad(tau_a(&d, ps(3, &[0]), 1, 2)));
        assert!(bad(tau_a(&d, ps(3, &[0]), 0, 0)));
    }

    #[test]
    fn t1_join_sizes() {
        for (n, size) in [(1, 1), (2, 2), (3, 6), (4, 14)] {
            let d = FiniteTopology::discrete(n);
            let fam = t1_join_decomposition(&d).unwrap();
            assert_eq!(fam.len(), size);
            assert_eq!(crate::lattice::join(&fam).unwrap(), d);
            assert!(fam.iter().all(|t| t.is_sober()));
        }
        assert_eq!(t1_join_decomposition(&FiniteTopology::sierpinski(0)), Err(Error::NotT1));
    }

    #[test]
    fn tau_f_examples() {
        let t = top(3, &[&[], &[0, 1], &[0, 1, 2]]);
        let f0 = ChoiceFunction::through(&t, 0).unwrap();
        assert_eq!(tau_f(&t, &f0).unwrap(), top(3, &[&[], &[1], &[2], &[1, 2], &[0, 1], &[0, 1, 2]]));
        let f1 = ChoiceFunction::through(&t, 1).unwrap();
        assert_eq!(tau_f(&t, &f1).unwrap(), top(3, &[&[], &[0], &[2], &[0, 2], &[0, 1], &[0, 1, 2]]));
        // every representative becomes a closed point, so a T0 input is
        // refined all the way to the discrete topology
        let s = FiniteTopology::sierpinski(0);
        assert_eq!(tau_f(&s, &ChoiceFunction::least(&s)).unwrap(), FiniteTopology::discrete(2));
    }

    #[test]
    fn choice_function_validation() {
        let t = top(3, &[&[], &[0, 1], &[0, 1, 2]]);
        assert!(ChoiceFunction::new(3, vec![ps(3, &[0, 1]), ps(3, &[2])], vec![1, 2]).is_ok());
        assert!(matches!(ChoiceFunction::new(3, vec![ps(3, &[0, 1])], vec![1]), Err(Error::BadPartition(_))));
        assert!(matches!(
            ChoiceFunction::new(3, vec![ps(3, &[0, 1]), ps(3, &[2])], vec![2, 2]),
            Err(Error::BadPartition(_))
        ));
        let wrong = ChoiceFunction::new(3, vec![ps(3, &[0]), ps(3, &[1, 2])], vec![0, 1]).unwrap();
        assert!(matches!(tau_f(&t, &wrong), Err(Error::BadPartition(_))));
        assert_eq!(ChoiceFunction::all(&t).len(), 2);
    }

    #[test]
    fn tau_m_examples() {
        let t = tau_m(3, ps(3, &[0, 1]), &FiniteTopology::sierpinski(0)).unwrap();
        assert!(t.is_open(ps(3, &[2])) && t.is_open(ps(3, &[0])) && !t.is_open(ps(3, &[1])));
        assert!(t.is_sober());
        assert_eq!(t.subspace(ps(3, &[0, 1])).unwrap(), FiniteTopology::sierpinski(0));
        assert_eq!(tau_m(2, ps(2, &[0, 1]), &FiniteTopology::indiscrete(2)).unwrap(), FiniteTopology::indiscrete(2));
        assert_eq!(tau_m(3, ps(3, &[1]), &FiniteTopology::discrete(1)).unwrap(), FiniteTopology::discrete(3));
        assert!(matches!(tau_m(3, ps(3, &[1]), &FiniteTopology::discrete(2)), Err(Error::BadSubspace(_))));
    }

    #[test]
    fn meet_sober_examples() {
        let d = meet_sober_decomposition(&FiniteTopology::indiscrete(2)).unwrap();
        assert_eq!(
            d.family.members(),
            TopologyFamily::from_members([FiniteTopology::sierpinski(0), FiniteTopology::sierpinski(1)])
                .unwrap()
                .members()
        );
        assert!(d.fallback_agrees);

        let t = top(3, &[&[], &[0, 1], &[0, 1, 2]]);
        let d = meet_sober_decomposition(&t).unwrap();
        for x in [0, 1] {
            let f = tau_f(&t, &ChoiceFunction::through(&t, x).unwrap()).unwrap();
            assert!(d.family.contains(&f));
        }
        assert!(d.uses(RefinementKind::SierpinskiPair));

        let s = FiniteTopology::sierpinski(1);
        assert_eq!(meet_sober_decomposition(&s).unwrap().family.members(), &[s]);
    }

    #[test]
    fn order_ab_examples() {
        let p = order_ab(3, 0, 1).unwrap();
        assert_eq!(p.strict_pairs(), vec![(0, 1)]);
        assert_eq!(alexandroff_topology(&p), top(3, &[&[], &[1], &[2], &[1, 2], &[0, 1], &[0, 1, 2]]));
        assert_eq!(order_ab(3, 1, 1).unwrap_err(), Error::EqualPoints(1));
    }

    #[test]
    fn alexandroff_meet_examples() {
        let chain = Poset::chain(&[0, 1, 2]).unwrap();
        let fam = alexandroff_meet_decomposition(&chain);
        assert_eq!(fam.len(), 3);
        assert_eq!(meet(&fam).unwrap(), top(3, &[&[], &[2], &[1, 2], &[0, 1, 2]]));
        let fam = alexandroff_meet_decomposition(&Poset::antichain(2));
        assert_eq!(fam.members(), &[FiniteTopology::discrete(2)]);
    }

    #[test]
    fn tau_star_examples() {
        let d2 = FiniteTopology::discrete(2);
        let t = tau_star(&d2, NoncomparablePair::new(&d2, 0, 1).unwrap()).unwrap();
        assert_eq!(t, FiniteTopology::sierpinski(0));
        assert_eq!(t.point_closure(0), ps(2, &[0, 1]));

        let d3 = FiniteTopology::discrete(3);
        let t = tau_star(&d3, NoncomparablePair::new(&d3, 0, 1).unwrap()).unwrap();
        assert_eq!(t, top(3, &[&[], &[2], &[0], &[0, 1], &[0, 2], &[0, 1, 2]]));
        assert_eq!(t.point_closure(1), ps(3, &[1]));
        assert_eq!(t.point_closure(0), ps(3, &[0, 1]));

        let s = FiniteTopology::sierpinski(0);
        assert_eq!(NoncomparablePair::new(&s, 0, 1), Err(Error::ComparablePair(0, 1)));
        let p = NoncomparablePair::new(&d2, 0, 1).unwrap();
        assert_eq!(tau_star(&FiniteTopology::indiscrete(2), p), Err(Error::NotT0));
        assert_eq!(tau_star(&s, p), Err(Error::ComparablePair(0, 1)));
    }

    #[test]
    fn minimal_sober_examples() {
        let chain = Poset::chain(&[0, 1, 2]).unwrap();
        assert_eq!(minimal_sober_certificate(&alexandroff_topology(&chain)).unwrap(), MinimalityVerdict::Minimal);
        assert_eq!(minimal_sober_certificate(&FiniteTopology::sierpinski(0)).unwrap(), MinimalityVerdict::Minimal);
        let d2 = FiniteTopology::discrete(2);
        let v = minimal_sober_certificate(&d2).unwrap();
        let MinimalityVerdict::NotMinimal(NotMinimalWitness::Pair(p)) = v else { panic!("{v:?}") };
        assert_eq!((p.x(), p.y()), (0, 1));
        assert_eq!(tau_star(&d2, p).unwrap(), FiniteTopology::sierpinski(0));
        assert_eq!(minimal_sober_certificate(&FiniteTopology::indiscrete(2)), Err(Error::NotSober));
    }
}
