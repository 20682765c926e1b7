use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::UpSet;
use crate::error::{Error, Result};

/// `x ≡ residue (mod modulus)` with `0 <= residue < modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    residue: u64,
    modulus: u64,
}

impl Congruence {
    pub fn new(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::BadCongruence { residue, modulus });
        }
        Ok(Self { residue, modulus })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn holds(&self, x: &BigUint) -> bool {
        x % self.modulus == BigUint::from(self.residue)
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self.residue, self.modulus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CrtSolution {
    /// All solutions are `residue + k·modulus`; `residue` is the least one.
    Solution {
        residue: BigUint,
        modulus: BigUint,
    },
    Inconsistent,
}

impl CrtSolution {
    pub fn is_consistent(&self) -> bool {
        matches!(self, CrtSolution::Solution { .. })
    }
}

/// Solves a system of congruences by merging them pairwise through the
/// extended gcd; moduli need not be coprime. The empty system is `0 mod 1`.
pub fn crt_solve(cs: &[Congruence]) -> CrtSolution {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for c in cs {
        let (a2, m2) = (BigInt::from(c.residue), BigInt::from(c.modulus));
        let e = m.extended_gcd(&m2);
        let g = e.gcd;
        let diff = &a2 - &x;
        if !(&diff % &g).is_zero() {
            return CrtSolution::Inconsistent;
        }
        let step = &m2 / &g;
        // m·k ≡ diff (mod m2)  ⇔  k ≡ (diff/g)·(m/g)⁻¹ (mod m2/g), and e.x is that inverse
        let k = ((&diff / &g) * &e.x).mod_floor(&step);
        x += &m * k;
        m *= &step;
        x = x.mod_floor(&m);
    }
    CrtSolution::Solution {
        residue: x.to_biguint().expect("reduced modulo a positive modulus"),
        modulus: m.to_biguint().expect("product of positive moduli"),
    }
}

/// The primes in increasing order, indexed from 1 (`p_1 = 2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIndex {
    primes: Vec<u64>,
}

impl PrimeIndex {
    /// Table holding at least the first `count` primes.
    pub fn with_count(count: usize) -> Self {
        let mut primes: Vec<u64> = Vec::with_capacity(count);
        let mut candidate = 2u64;
        while primes.len() < count {
            if primes.iter().take_while(|&&p| p * p <= candidate).all(|&p| !candidate.is_multiple_of(p)) {
                primes.push(candidate);
            }
            candidate += 1;
        }
        Self { primes }
    }

    /// `p_k`; panics on `k = 0` or past the table.
    pub fn p(&self, k: usize) -> u64 {
        assert!(k >= 1, "primes are indexed from 1");
        self.primes[k - 1]
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Index of `p` if it is one of the tabulated primes.
    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok().map(|i| i + 1)
    }

    /// Least index `k >= from` with `p_k > bound`.
    pub fn first_above(bound: u64, from: usize) -> usize {
        let mut k = from.max(1);
        loop {
            if nth_prime(k) > bound {
                return k;
            }
            k += 1;
        }
    }

    /// `p_from · p_(from+1) ⋯ p_to`.
    pub fn product(&self, from: usize, to: usize) -> BigUint {
        (from..=to).map(|k| BigUint::from(self.p(k))).product()
    }
}

/// `p_k`, with `p_1 = 2`.
pub fn nth_prime(k: usize) -> u64 {
    PrimeIndex::with_count(k).p(k)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Intersection of residue classes modulo distinct primes; the empty list
/// denotes all of `ℕ₀`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicOpen {
    congruences: Vec<Congruence>,
}

impl BasicOpen {
    pub fn new(congruences: impl IntoIterator<Item = Congruence>) -> Result<Self> {
        let mut congruences: Vec<Congruence> = congruences.into_iter().collect();
        congruences.sort_by_key(|c| c.modulus);
        for c in &congruences {
            if !is_prime(c.modulus) {
                return Err(Error::BadBasicOpen(format!("modulus {} is not prime", c.modulus)));
            }
        }
        if let Some(w) = congruences.windows(2).find(|w| w[0].modulus == w[1].modulus) {
            return Err(Error::BadBasicOpen(format!("modulus {} repeats", w[0].modulus)));
        }
        Ok(Self { congruences })
    }

    /// From `(residue, modulus)` pairs.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(r, m)| Congruence::new(r, m)).collect::<Result<Vec<_>>>()?)
    }

    /// From `(residue, prime index)` pairs.
    pub fn from_indexed(pairs: &[(u64, usize)]) -> Result<Self> {
        let top = pairs.iter().map(|&(_, k)| k).max().unwrap_or(0);
        let primes = PrimeIndex::with_count(top);
        if pairs.iter().any(|&(_, k)| k == 0) {
            return Err(Error::BadBasicOpen("prime indices start at 1".into()));
        }
        Self::new(pairs.iter().map(|&(r, k)| Congruence::new(r, primes.p(k))).collect::<Result<Vec<_>>>()?)
    }

    pub fn naturals() -> Self {
        Self { congruences: Vec::new() }
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn is_whole(&self) -> bool {
        self.congruences.is_empty()
    }

    /// Prime indices of the moduli, ascending.
    pub fn indices(&self) -> Vec<usize> {
        let top = self.congruences.last().map_or(0, |c| c.modulus);
        let table = PrimeIndex::with_count(prime_count_upto(top));
        self.congruences.iter().map(|c| table.index_of(c.modulus).expect("moduli are prime")).collect()
    }

    pub fn max_index(&self) -> usize {
        self.indices().last().copied().unwrap_or(0)
    }

    /// Whether every modulus is `p_k` with `k >= n`, i.e. the set is a basic
    /// open of the topology generated by the classes modulo `p_n, p_(n+1), …`.
    pub fn lies_in_level(&self, n: usize) -> bool {
        self.indices().iter().all(|&k| k >= n)
    }

    pub fn contains(&self, x: &BigUint) -> bool {
        self.congruences.iter().all(|c| c.holds(x))
    }

    pub fn contains_u64(&self, x: u64) -> bool {
        self.contains(&BigUint::from(x))
    }

    pub fn to_upset(&self) -> Option<UpSet> {
        match crt_solve(&self.congruences) {
            CrtSolution::Solution { residue, modulus } => {
                Some(UpSet::residue_class(residue.to_u64()?, modulus.to_u64()?).ok()?)
            }
            CrtSolution::Inconsistent => Some(UpSet::empty()),
        }
    }
}

impl fmt::Display for BasicOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.congruences.is_empty() {
            return f.write_str("ℕ₀");
        }
        let parts: Vec<String> = self.congruences.iter().map(Congruence::to_string).collect();
        f.write_str(&parts.join(" ∩ "))
    }
}

fn prime_count_upto(n: u64) -> usize {
    (2..=n).filter(|&k| is_prime(k)).count()
}

/// An infinite arithmetic progression `{start + k·modulus}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Progression {
    pub start: BigUint,
    pub modulus: BigUint,
}

impl Progression {
    pub fn to_upset(&self) -> Option<UpSet> {
        UpSet::progression(self.start.to_u64()?, self.modulus.to_u64()?).ok()
    }

    pub fn contains(&self, x: &BigUint) -> bool {
        x >= &self.start && ((x - &self.start) % &self.modulus).is_zero()
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.start, self.modulus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MeetResult {
    Progression(Progression),
    Empty,
}

/// Intersection of two basic opens, solved as one congruence system.
pub fn basic_open_meet(b1: &BasicOpen, b2: &BasicOpen) -> MeetResult {
    let all: Vec<Congruence> = b1.congruences.iter().chain(&b2.congruences).copied().collect();
    match crt_solve(&all) {
        CrtSolution::Solution { residue, modulus } => MeetResult::Progression(Progression { start: residue, modulus }),
        CrtSolution::Inconsistent => MeetResult::Empty,
    }
}
