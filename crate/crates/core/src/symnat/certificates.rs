//! Checkable certificates for topologies on the naturals that are given by
//! subbases of residue classes or by cofiniteness, where no finite list of
//! open sets exists.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::crt::{basic_open_meet, crt_solve, BasicOpen, Congruence, CrtSolution, MeetResult, PrimeIndex};
use super::upset::{Carrier, UpSet};
use crate::error::{Error, Result};

/// Disjoint classes `[a]_p, [b]_p` around two distinct points, with `p = p_m`
/// for the least `m >= n` such that `p_m > a + b`. Both are subbasic opens of
/// the topology generated by the classes modulo `p_n, p_(n+1), …`.
pub fn t2_separation(n: usize, a: u64, b: u64) -> Result<(BasicOpen, BasicOpen)> {
    if a == b {
        return Err(Error::EqualPoints(a));
    }
    if n == 0 {
        return Err(Error::PreconditionViolated("chain indices start at 1".into()));
    }
    let m = PrimeIndex::first_above(a + b, n);
    let u = BasicOpen::from_indexed(&[(a, m)])?;
    let v = BasicOpen::from_indexed(&[(b, m)])?;
    debug_assert_eq!(basic_open_meet(&u, &v), MeetResult::Empty);
    Ok((u, v))
}

/// A common point of a basic open and a second basic open whose prime indices
/// all lie above those of the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetChainWitness {
    /// The second basic open as used, after re-basing if that was needed.
    pub second: BasicOpen,
    pub rebased: bool,
    /// Least common point.
    pub point: BigUint,
    /// Every `point + k·modulus` is also common.
    pub modulus: BigUint,
}

/// Finds a point of `b1 ∩ b2`. When `b2` reuses an index at or below the
/// largest index of `b1`, the basic neighbourhood of `rebase_point` (which
/// must lie in `b2`) at the next `|b2|` primes above `b1` is used instead,
/// as in the argument that every open set of the meet of the chain contains
/// such a neighbourhood of each of its points.
pub fn meet_chain_irreducibility_witness(
    b1: &BasicOpen,
    b2: &BasicOpen,
    rebase_point: Option<u64>,
) -> Result<MeetChainWitness> {
    let top = b1.max_index();
    let (second, rebased) = if b2.indices().iter().all(|&k| k > top) {
        (b2.clone(), false)
    } else {
        let Some(x) = rebase_point else {
            return Err(Error::IndexOverlap(format!(
                "{b2} uses a prime index at or below {top}, the largest index of {b1}"
            )));
        };
        if !b2.contains_u64(x) {
            return Err(Error::PreconditionViolated(format!("re-basing point {x} is not in {b2}")));
        }
        let k = b2.congruences().len().max(1);
        let primes = PrimeIndex::with_count(top + k);
        let shifted =
            (top + 1..=top + k).map(|i| Congruence::new(x % primes.p(i), primes.p(i))).collect::<Result<Vec<_>>>()?;
        (BasicOpen::new(shifted)?, true)
    };
    let all: Vec<Congruence> = b1.congruences().iter().chain(second.congruences()).copied().collect();
    match crt_solve(&all) {
        CrtSolution::Solution { residue, modulus } => {
            debug_assert!(b1.contains(&residue) && second.contains(&residue));
            Ok(MeetChainWitness { second, rebased, point: residue, modulus })
        }
        CrtSolution::Inconsistent => unreachable!("moduli are distinct primes"),
    }
}

/// Open in the cofinite topology on the positive integers with a
/// designated point `d`: empty, or cofinite and containing `d`.
pub fn open_in_designated(d: u64, u: &UpSet) -> bool {
    u.is_empty() || (Carrier::N1.is_cofinite(u) && u.contains(d))
}

/// Closed in the designated-point topology: the whole carrier, or a finite
/// set of positive integers avoiding `d`.
pub fn closed_in_designated(d: u64, s: &UpSet) -> bool {
    *s == Carrier::N1.full() || (s.is_finite() && Carrier::N1.contains_set(s) && !s.contains(d))
}

/// For a cofinite open `u` of the positive integers, opens `u ∪ {1}` and
/// `u ∪ {2}` of the two designated-point topologies whose intersection is
/// `u`: the cofinite topology is the join of the two.
pub fn cofinite_join_witness(u: &UpSet) -> Result<(UpSet, UpSet)> {
    if u.is_empty() || !Carrier::N1.is_cofinite(u) {
        return Err(Error::NotCofinite);
    }
    let v1 = u.union(&UpSet::finite([1]));
    let v2 = u.union(&UpSet::finite([2]));
    debug_assert!(open_in_designated(1, &v1) && open_in_designated(2, &v2));
    debug_assert_eq!(v1.intersection(&v2), *u);
    Ok((v1, v2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofiniteNotSoberCertificate {
    /// Pairs of cofinite opens `ℕ − F, ℕ − G` (for finite `F, G` drawn from
    /// small subsets) with the least point of their intersection.
    pub meeting_pairs: Vec<(UpSet, UpSet, u64)>,
    /// `(x, cl{x})` samples; each closure is the singleton.
    pub point_closures: Vec<(u64, UpSet)>,
    /// In each designated-point topology, `cl{d}` is the whole carrier and
    /// every finite closed set with two points splits into two closed parts.
    pub designated_sober: [bool; 2],
    /// Join witnesses for sample opens.
    pub join_samples: Vec<(UpSet, UpSet, UpSet)>,
    /// Minimal number of sober topologies joining to the cofinite topology.
    pub sober_join_width: usize,
}

impl CofiniteNotSoberCertificate {
    pub fn holds(&self) -> bool {
        self.meeting_pairs.iter().all(|(u, v, x)| u.intersection(v).contains(*x))
            && self.point_closures.iter().all(|(x, c)| *c == UpSet::finite([*x]))
            && self.designated_sober.iter().all(|&b| b)
            && self.join_samples.iter().all(|(u, v1, v2)| v1.intersection(v2) == *u)
            && self.sober_join_width == 2
    }
}

/// The cofinite topology on the positive integers: the whole carrier is an
/// irreducible closed set (two nonempty opens miss only finitely many
/// points, so they meet) that is not the closure of any point (points are
/// closed), hence not sober; it is the join of two sober designated-point
/// topologies, so its sober join width is 2.
pub fn cofinite_not_sober_certificate() -> CofiniteNotSoberCertificate {
    let small: Vec<UpSet> =
        (0u32..1 << 4).map(|bits| UpSet::finite((1..=4).filter(|i| bits >> (i - 1) & 1 == 1))).collect();
    let full = Carrier::N1.full();
    let mut meeting_pairs = Vec::new();
    for f in &small {
        for g in &small {
            let (u, v) = (full.difference(f), full.difference(g));
            let x = u.intersection(&v).min().expect("the complement of a finite set is infinite");
            meeting_pairs.push((u, v, x));
        }
    }
    let point_closures = (1..=5)
        .map(|x| {
            let single = UpSet::finite([x]);
            debug_assert!(Carrier::N1.is_cofinite(&Carrier::N1.complement(&single)));
            (x, single)
        })
        .collect();
    let designated_sober = [1, 2].map(|d| {
        // closed sets containing d: only the carrier itself
        let closure_of_d_is_full = !closed_in_designated(d, &UpSet::finite([d])) && closed_in_designated(d, &full);
        let splits = (1..=6).filter(|&p| p != d).all(|p| {
            (1..=6).filter(|&q| q != d && q > p).all(|q| {
                let s = UpSet::finite([p, q]);
                closed_in_designated(d, &s)
                    && closed_in_designated(d, &UpSet::finite([p]))
                    && closed_in_designated(d, &UpSet::finite([q]))
            })
        });
        closure_of_d_is_full && splits
    });
    let join_samples = small
        .iter()
        .map(|f| full.difference(f))
        .filter(|u| !u.is_empty())
        .map(|u| {
            let (v1, v2) = cofinite_join_witness(&u).expect("cofinite and nonempty");
            (u, v1, v2)
        })
        .collect();
    CofiniteNotSoberCertificate { meeting_pairs, point_closures, designated_sober, join_samples, sober_join_width: 2 }
}

/// Membership in the sober coarsening `τ_A` of the cofinite topology on `ℕ₀`
/// built from a finite closed set `a` and points `xa ∈ a`, `ya ∉ a`.
///
/// `u` is open iff it is empty, or cofinite and contains both points, or
/// misses `a`, contains `ya`, and becomes cofinite when `a` is added (the
/// second clause's `V` can always be taken to be `u ∪ a`).
pub fn tau_a_nat_membership(a: &UpSet, xa: u64, ya: u64, u: &UpSet) -> Result<bool> {
    if a.is_empty() || !a.is_finite() {
        return Err(Error::PreconditionViolated(format!("{a} is not a finite nonempty set")));
    }
    if !a.contains(xa) {
        return Err(Error::PreconditionViolated(format!("x_A = {xa} is not in {a}")));
    }
    if a.contains(ya) {
        return Err(Error::PreconditionViolated(format!("y_A = {ya} is in {a}")));
    }
    Ok(u.is_empty()
        || (u.is_cofinite() && u.contains(xa) && u.contains(ya))
        || (u.is_disjoint(a) && u.contains(ya) && u.union(a).is_cofinite()))
}

/// `p_1 p_2 ⋯ p_k` for `k = 1..=count`.
fn primorials(primes: &PrimeIndex, count: usize) -> Vec<BigUint> {
    let mut acc = BigUint::one();
    (1..=count)
        .map(|k| {
            acc *= primes.p(k);
            acc.clone()
        })
        .collect()
}

/// Membership in `{0} ∪ {p_1 ⋯ p_k : k >= 1}`.
pub fn in_primorial_set(x: &BigUint) -> bool {
    if x.is_zero() {
        return true;
    }
    let mut acc = BigUint::from(2u64);
    let mut k = 2;
    while &acc < x {
        acc *= super::crt::nth_prime(k);
        k += 1;
    }
    &acc == x
}

/// Proof that the basic neighbourhood `⋂{[x]_(p_i) : m <= i <= 2m}` of a
/// point `x` avoids `A = {0} ∪ {p_1 ⋯ p_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimorialCertificate {
    pub x: u64,
    pub m: usize,
    pub p_m: u64,
    /// `p_1 ⋯ p_k` for `1 <= k <= m`.
    pub small_part: Vec<BigUint>,
    /// `p_m p_(m+1) ⋯ p_(2m)`, the step of the neighbourhood.
    pub step: BigUint,
    /// Least member of the neighbourhood other than `x`.
    pub next_member: BigUint,
    /// `next_member` exceeds every element of `small_part`, and `x` is not one of them.
    pub small_part_avoided: bool,
    /// `x mod p_m`; the larger primorials are all divisible by `p_m`.
    pub residue_mod_p_m: u64,
    pub large_part_avoided: bool,
    /// Every member of the neighbourhood is at least `x > 0`.
    pub zero_avoided: bool,
}

impl PrimorialCertificate {
    pub fn holds(&self) -> bool {
        self.small_part_avoided && self.large_part_avoided && self.zero_avoided
    }
}

/// Certifies, with exact arithmetic, that the neighbourhood of `x` built from
/// the primes `p_m … p_2m` misses `A`: below `next_member` it contains only
/// `x`, which exceeds no small primorial it could equal, and from `p_m` on the
/// primorials are `0 mod p_m` while `x` is not.
pub fn primorial_set_certificate(x: u64, m: usize) -> Result<PrimorialCertificate> {
    if m == 0 {
        return Err(Error::PreconditionViolated("prime indices start at 1".into()));
    }
    let big_x = BigUint::from(x);
    if in_primorial_set(&big_x) {
        return Err(Error::PreconditionViolated(format!("{x} lies in the primorial set")));
    }
    let primes = PrimeIndex::with_count(2 * m);
    let p_m = primes.p(m);
    if x >= p_m {
        return Err(Error::PreconditionViolated(format!("{x} is not below p_{m} = {p_m}")));
    }
    let small_part = primorials(&primes, m);
    let step = primes.product(m, 2 * m);
    let next_member = &big_x + &step;
    let small_max = small_part.last().expect("m >= 1");
    let small_part_avoided = &next_member > small_max && !small_part.contains(&big_x);
    // p_1 ⋯ p_k for k > m carries the factor p_m
    debug_assert!(primorials(&primes, m + 1).last().is_some_and(|q| (q % p_m).is_zero()));
    let residue_mod_p_m = x % p_m;
    Ok(PrimorialCertificate {
        x,
        m,
        p_m,
        small_part,
        step,
        next_member,
        small_part_avoided,
        residue_mod_p_m,
        large_part_avoided: residue_mod_p_m != 0,
        zero_avoided: x > 0,
    })
}

/// The topology on `M = A ∪ {b}` with closed subbase `{(C ∩ M) − B : C
/// closed, B ⊆ A}` where the ambient topology on `ℕ₀` is cofinite. Point
/// closures there are singletons, so `B̃ = B` and the subbase consists of the
/// finite subsets of `M` and the sets `M − B`; the closed sets are the
/// finite subsets of `M` and the subsets of `M` containing `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaM {
    a: UpSet,
    b: u64,
    m: UpSet,
}

impl LambdaM {
    pub fn a(&self) -> &UpSet {
        &self.a
    }

    pub fn carrier(&self) -> &UpSet {
        &self.m
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn is_closed(&self, s: &UpSet) -> bool {
        s.is_subset(&self.m) && (s.is_finite() || s.contains(self.b))
    }

    /// Two proper closed subsets covering a closed set with at least two
    /// points: `{s₁} ∪ (S − {s₁})` for finite `S`, otherwise
    /// `{b, s₁} ∪ (S − {s₁})`, where `s₁` is the least point of `S` other
    /// than `b`.
    pub fn split(&self, s: &UpSet) -> Option<(UpSet, UpSet)> {
        if !self.is_closed(s) {
            return None;
        }
        let s1 = s.difference(&UpSet::finite([self.b])).min().ok()?;
        let rest = s.difference(&UpSet::finite([s1]));
        if rest.is_empty() {
            return None;
        }
        let first = if s.is_finite() { UpSet::finite([s1]) } else { UpSet::finite([self.b, s1]) };
        debug_assert!(self.is_closed(&first) && self.is_closed(&rest));
        debug_assert!(first.union(&rest) == *s && first != *s && rest != *s);
        Some((first, rest))
    }

    /// Checks on the points below `bound`: every point of `M` is closed,
    /// every two-point and three-point closed set splits, and `M` and the
    /// tails `M − {z}` for `z ≠ b` split. Together with the general splitting rule this
    /// is the sobriety argument: irreducible closed sets are singletons.
    pub fn certificate(&self, bound: u64) -> LambdaCertificate {
        let points = self.m.members_below(bound);
        let t1 = points.iter().all(|&z| self.is_closed(&UpSet::finite([z])));
        let mut splits_checked = 0;
        let mut all_split = true;
        let mut check = |s: UpSet| {
            splits_checked += 1;
            all_split &= self.split(&s).is_some();
        };
        for (i, &p) in points.iter().enumerate() {
            for (j, &q) in points.iter().enumerate().skip(i + 1) {
                check(UpSet::finite([p, q]));
                for &r in &points[j + 1..] {
                    check(UpSet::finite([p, q, r]));
                }
            }
            if p != self.b {
                check(self.m.difference(&UpSet::finite([p])));
            }
        }
        check(self.m.clone());
        LambdaCertificate { t1, splits_checked, all_split }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaCertificate {
    pub t1: bool,
    pub splits_checked: usize,
    pub all_split: bool,
}

impl LambdaCertificate {
    pub fn holds(&self) -> bool {
        self.t1 && self.all_split
    }
}

/// λ_M for an infinite, coinfinite `a` and a point `b ∉ a` (in the cofinite
/// ambient topology `b` lies in the closure of `a`).
pub fn lambda_m_cofinite(a: &UpSet, b: u64) -> Result<LambdaM> {
    if a.is_finite() {
        return Err(Error::PreconditionViolated(format!("{a} is finite")));
    }
    if a.complement().is_finite() {
        return Err(Error::PreconditionViolated(format!("{a} is cofinite")));
    }
    if a.contains(b) {
        return Err(Error::PreconditionViolated(format!("{b} lies in {a}")));
    }
    let m = a.union(&UpSet::finite([b]));
    Ok(LambdaM { a: a.clone(), b, m })
}
