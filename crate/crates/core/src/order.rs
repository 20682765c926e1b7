//! Preorders and posets on small carriers, and the topologies they induce.

use std::fmt;

use crate::error::{Error, Result};
use crate::finspace::{check_ground, full_mask, upward_family, FiniteTopology, PointSet, MAX_POINTS};

/// Reflexive, transitive relation. Row `x` holds `{y : x <= y}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Preorder {
    n: u8,
    up: [u8; MAX_POINTS],
}

impl Preorder {
    /// Validates rows `up[x] = {y : x <= y}`.
    pub fn from_rows(n: usize, up: &[u8]) -> Result<Self> {
        check_ground(n)?;
        if up.len() != n {
            return Err(Error::NotAPreorder(format!("expected {n} rows, got {}", up.len())));
        }
        let mut rows = [0u8; MAX_POINTS];
        for (x, &row) in up.iter().enumerate() {
            if row & !full_mask(n) != 0 {
                return Err(Error::BadPoint { n, bits: row as u64 });
            }
            if row >> x & 1 == 0 {
                return Err(Error::NotAPreorder(format!("{x} <= {x} missing")));
            }
            rows[x] = row;
        }
        let p = Self { n: n as u8, up: rows };
        if let Some((x, y, z)) = p.transitivity_violation() {
            return Err(Error::NotAPreorder(format!("{x} <= {y} <= {z} but not {x} <= {z}")));
        }
        Ok(p)
    }

    pub(crate) fn from_rows_unchecked(n: usize, up: [u8; MAX_POINTS]) -> Self {
        let p = Self { n: n as u8, up };
        debug_assert!(p.transitivity_violation().is_none());
        p
    }

    /// Reflexive-transitive closure of `pairs` (each pair reads `x <= y`).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_ground(n)?;
        let mut up = [0u8; MAX_POINTS];
        for (x, row) in up.iter_mut().enumerate().take(n) {
            *row = 1 << x;
        }
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::BadPoint { n, bits: 1u64 << x.max(y).min(63) });
            }
            up[x] |= 1 << y;
        }
        // Warshall
        for k in 0..n {
            for x in 0..n {
                if up[x] >> k & 1 == 1 {
                    up[x] |= up[k];
                }
            }
        }
        Ok(Self { n: n as u8, up })
    }

    /// Identity relation (the antichain order).
    pub fn discrete(n: usize) -> Self {
        Self::from_pairs(n, &[]).expect("ground size within cap")
    }

    fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                if self.leq(x, y) {
                    let missing = self.up[y] & !self.up[x];
                    if missing != 0 {
                        return Some((x, y, missing.trailing_zeros() as usize));
                    }
                }
            }
        }
        None
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    /// `x ~ y`: both `x <= y` and `y <= x`.
    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `↑x`.
    pub fn up(&self, x: usize) -> PointSet {
        PointSet::from_bits(self.n(), self.up[x])
    }

    /// `↓x`.
    pub fn down(&self, x: usize) -> PointSet {
        let bits = (0..self.n()).filter(|&y| self.leq(y, x)).fold(0u8, |acc, y| acc | 1 << y);
        PointSet::from_bits(self.n(), bits)
    }

    pub fn rows(&self) -> &[u8] {
        &self.up[..self.n()]
    }

    /// Equivalence classes of `~`, each listed once, ordered by least member.
    pub fn classes(&self) -> Vec<PointSet> {
        let n = self.n();
        let mut seen = 0u8;
        let mut out = Vec::new();
        for x in 0..n {
            if seen >> x & 1 == 1 {
                continue;
            }
            let class = (0..n).filter(|&y| self.equivalent(x, y)).fold(0u8, |acc, y| acc | 1 << y);
            seen |= class;
            out.push(PointSet::from_bits(n, class));
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (x + 1..n).all(|y| !self.equivalent(x, y)))
    }

    pub fn is_upper_set(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.up[x] & !s.bits() == 0)
    }

    pub fn is_lower_set(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.down(x).is_subset(s))
    }

    /// Nonempty, and every two members have an upper bound inside the set.
    pub fn is_directed(&self, d: PointSet) -> bool {
        !d.is_empty() && d.iter().all(|x| d.iter().all(|y| self.up[x] & self.up[y] & d.bits() != 0))
    }

    pub fn is_chain(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (0..n).all(|y| self.comparable(x, y)))
    }

    /// Strictly related pairs `x <= y`, `x != y`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y && self.leq(x, y)).collect()
    }

    /// Bit-encoding of the off-diagonal part, pairs `(x, y)` with `x != y`
    /// taken in lexicographic order.
    pub fn code(&self) -> u32 {
        let n = self.n();
        let mut code = 0u32;
        let mut bit = 0;
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                if self.leq(x, y) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    /// Every preorder on `n` points in increasing `code` order: iterate all
    /// reflexive relations and keep the transitive ones.
    pub fn all(n: usize) -> Result<Vec<Preorder>> {
        if n > 5 {
            return Err(Error::TooLarge { n, limit: 5 });
        }
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
        let mut out = Vec::new();
        for code in 0..1u32 << pairs.len() {
            let mut up = [0u8; MAX_POINTS];
            for (x, row) in up.iter_mut().enumerate().take(n) {
                *row = 1 << x;
            }
            for (bit, &(x, y)) in pairs.iter().enumerate() {
                if code >> bit & 1 == 1 {
                    up[x] |= 1 << y;
                }
            }
            let p = Preorder { n: n as u8, up };
            if p.transitivity_violation().is_none() {
                out.push(p);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self.strict_pairs();
        f.write_str("[")?;
        for (i, (x, y)) in pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}<={y}")?;
        }
        f.write_str("]")
    }
}

/// A partial order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Poset(Preorder);

impl Poset {
    pub fn new(p: Preorder) -> Result<Self> {
        let n = p.n();
        for x in 0..n {
            for y in x + 1..n {
                if p.equivalent(x, y) {
                    return Err(Error::NotAntisymmetric(x, y));
                }
            }
        }
        Ok(Poset(p))
    }

    pub fn antichain(n: usize) -> Self {
        Poset(Preorder::discrete(n))
    }

    /// Total order listing `order[0] < order[1] < ...`.
    pub fn chain(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let pairs: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
        let mut seen = vec![false; n];
        for &x in order {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::PreconditionViolated(format!("{order:?} is not a permutation")));
            }
        }
        Poset::new(Preorder::from_pairs(n, &pairs)?)
    }

    /// All partial orders on `n` points, in preorder code order.
    pub fn all(n: usize) -> Result<Vec<Poset>> {
        Ok(Preorder::all(n)?.into_iter().filter(Preorder::is_antisymmetric).map(Poset).collect())
    }

    pub fn preorder(&self) -> &Preorder {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.0.leq(x, y)
    }

    /// Least upper bound of `s`, when it exists.
    pub fn sup(&self, s: PointSet) -> Option<usize> {
        let n = self.n();
        let ubs = s.iter().fold(full_mask(n), |acc, x| acc & self.0.up[x]);
        let ubs = PointSet::from_bits(n, ubs);
        ubs.iter().find(|&l| ubs.iter().all(|u| self.leq(l, u)))
    }

    /// Directed subsets together with their suprema (when they exist).
    pub fn directed_subsets(&self) -> Vec<(PointSet, Option<usize>)> {
        let n = self.n();
        (1..1u16 << n)
            .map(|d| PointSet::from_bits(n, d as u8))
            .filter(|&d| self.0.is_directed(d))
            .map(|d| (d, self.sup(d)))
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        self.0.is_chain()
    }

    pub fn is_dcpo(&self) -> bool {
        self.directed_subsets().iter().all(|(_, s)| s.is_some())
    }

    pub fn is_sup_complete(&self) -> bool {
        let n = self.n();
        (1..1u16 << n).all(|s| self.sup(PointSet::from_bits(n, s as u8)).is_some())
    }

    /// `x ≪ y`: every directed set whose supremum exists and lies above `y`
    /// has a member above `x`.
    pub fn way_below(&self, x: usize, y: usize) -> bool {
        self.way_below_with(&self.directed_subsets(), x, y)
    }

    fn way_below_with(&self, directed: &[(PointSet, Option<usize>)], x: usize, y: usize) -> bool {
        directed.iter().all(|&(d, sup)| match sup {
            Some(s) if self.leq(y, s) => d.iter().any(|e| self.leq(x, e)),
            _ => true,
        })
    }

    /// `↡y = {x : x ≪ y}`.
    pub fn way_below_set(&self, y: usize) -> PointSet {
        let directed = self.directed_subsets();
        let bits = (0..self.n()).filter(|&x| self.way_below_with(&directed, x, y)).fold(0u8, |a, x| a | 1 << x);
        PointSet::from_bits(self.n(), bits)
    }

    /// A dcpo in which every `↡x` is directed with supremum `x`.
    pub fn is_domain(&self) -> bool {
        self.is_dcpo()
            && (0..self.n()).all(|x| {
                let wb = self.way_below_set(x);
                self.0.is_directed(wb) && self.sup(wb) == Some(x)
            })
    }
}

impl std::ops::Deref for Poset {
    type Target = Preorder;

    fn deref(&self) -> &Preorder {
        &self.0
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderPredicate {
    Chain,
    Dcpo,
    SupComplete,
    Domain,
    DirectedSubset,
}

pub fn order_predicate(p: &Poset, q: OrderPredicate, witness: Option<PointSet>) -> Result<bool> {
    Ok(match q {
        OrderPredicate::Chain => p.is_chain(),
        OrderPredicate::Dcpo => p.is_dcpo(),
        OrderPredicate::SupComplete => p.is_sup_complete(),
        OrderPredicate::Domain => p.is_domain(),
        OrderPredicate::DirectedSubset => {
            let w = witness.ok_or(Error::MissingWitness)?;
            if w.n() != p.n() {
                return Err(Error::BadPoint { n: p.n(), bits: w.bits() as u64 });
            }
            p.is_directed(w)
        }
    })
}

/// All upper sets.
pub fn alexandroff_topology(p: &Preorder) -> FiniteTopology {
    FiniteTopology::from_family_unchecked(p.n(), upward_family(p.n(), p.rows()))
}

/// Scott-open sets, from the definition: upper sets `U` such that every
/// directed `D` whose supremum exists and lies in `U` already meets `U`.
pub fn scott_topology(p: &Poset) -> FiniteTopology {
    let n = p.n();
    let directed = p.directed_subsets();
    let mut family = 0u64;
    for u in 0..1u16 << n {
        let u = PointSet::from_bits(n, u as u8);
        if !p.is_upper_set(u) {
            continue;
        }
        let inaccessible =
            directed.iter().all(|&(d, sup)| !sup.is_some_and(|s| u.contains(s)) || !d.intersection(u).is_empty());
        if inaccessible {
            family |= 1 << u.bits();
        }
    }
    FiniteTopology::new(n, crate::finspace::family_members(family).map(|b| PointSet::from_bits(n, b)))
        .expect("Scott-open sets form a topology")
}

/// Topology generated by the complements of principal downsets.
pub fn upper_topology(p: &Poset) -> FiniteTopology {
    let subbase: Vec<PointSet> = (0..p.n()).map(|x| p.down(x).complement()).collect();
    FiniteTopology::generate(p.n(), subbase).expect("ground size within cap")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(order: &[usize]) -> Poset {
        Poset::chain(order).unwrap()
    }

    #[test]
    fn alexandroff_examples() {
        assert_eq!(alexandroff_topology(&chain(&[0, 1])).masks(), vec![0, 0b10, 0b11]);
        assert_eq!(alexandroff_topology(&Preorder::discrete(2)), FiniteTopology::discrete(2));
        assert_eq!(alexandroff_topology(&chain(&[0, 1, 2])).masks(), vec![0, 0b100, 0b110, 0b111]);
    }

    #[test]
    fn scott_examples() {
        assert_eq!(scott_topology(&chain(&[0, 1, 2])).masks(), vec![0, 0b100, 0b110, 0b111]);
        assert_eq!(scott_topology(&Poset::antichain(3)), FiniteTopology::discrete(3));
    }

    #[test]
    fn upper_examples() {
        assert_eq!(upper_topology(&chain(&[0, 1, 2])).masks(), vec![0, 0b100, 0b110, 0b111]);
        assert_eq!(upper_topology(&Poset::antichain(2)), FiniteTopology::discrete(2));
    }

    #[test]
    fn predicates() {
        let c3 = chain(&[0, 1, 2]);
        assert!(order_predicate(&c3, OrderPredicate::Chain, None).unwrap());
        assert!(!order_predicate(&Poset::antichain(2), OrderPredicate::Chain, None).unwrap());
        assert!(order_predicate(&Poset::antichain(3), OrderPredicate::Dcpo, None).unwrap());
        assert_eq!(order_predicate(&c3, OrderPredicate::DirectedSubset, None), Err(Error::MissingWitness));
        let both = PointSet::from_points(2, &[0, 1]).unwrap();
        assert!(!order_predicate(&Poset::antichain(2), OrderPredicate::DirectedSubset, Some(both)).unwrap());
        assert!(order_predicate(&chain(&[0, 1]), OrderPredicate::DirectedSubset, Some(both)).unwrap());
        // an antichain has no supremum for two incomparable points
        assert!(!order_predicate(&Poset::antichain(2), OrderPredicate::SupComplete, None).unwrap());
        assert!(order_predicate(&c3, OrderPredicate::SupComplete, None).unwrap());
        assert!(order_predicate(&Poset::antichain(3), OrderPredicate::Domain, None).unwrap());
    }

    #[test]
    fn way_below_on_two_chain() {
        let c2 = chain(&[0, 1]);
        assert!(c2.way_below(0, 1));
        assert!(c2.way_below(1, 1));
        assert!(!c2.way_below(1, 0));
    }

    #[test]
    fn preorder_validation() {
        assert!(matches!(Preorder::from_rows(2, &[0b01, 0b00]), Err(Error::NotAPreorder(_))));
        // 0 <= 1 <= 2 without 0 <= 2
        assert!(matches!(Preorder::from_rows(3, &[0b011, 0b110, 0b100]), Err(Error::NotAPreorder(_))));
        let full = Preorder::from_rows(2, &[0b11, 0b11]).unwrap();
        assert_eq!(Poset::new(full), Err(Error::NotAntisymmetric(0, 1)));
        assert_eq!(full.classes(), vec![PointSet::full(2)]);
    }

    #[test]
    fn preorder_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| Preorder::all(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
        let posets: Vec<usize> = (0..=4).map(|n| Poset::all(n).unwrap().len()).collect();
        assert_eq!(posets, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn chain_rejects_non_permutations() {
        assert!(Poset::chain(&[0, 0]).is_err());
        assert!(Poset::chain(&[0, 2]).is_err());
    }
}
