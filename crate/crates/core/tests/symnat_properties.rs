use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

use toposcope::symnat::{
    basic_open_meet, crt_solve, t2_separation, BasicOpen, Congruence, CrtSolution, MeetResult, UpSet,
};

fn upset() -> impl Strategy<Value = UpSet> {
    (0u64..=12, 1u64..=10).prop_flat_map(|(threshold, period)| {
        (
            prop::collection::vec(any::<bool>(), threshold as usize),
            prop::collection::vec(any::<bool>(), period as usize),
        )
            .prop_map(move |(prefix, mask)| {
                UpSet::from_parts(
                    threshold,
                    (0..threshold).filter(|&x| prefix[x as usize]),
                    period,
                    (0..period).filter(|&r| mask[r as usize]),
                )
                .unwrap()
            })
    })
}

fn window(sets: &[&UpSet]) -> u64 {
    let t = sets.iter().map(|s| s.threshold()).max().unwrap();
    let q = sets.iter().fold(1, |acc, s| acc.lcm(&s.period()));
    t + 2 * q
}

proptest! {
    #[test]
    fn operations_match_pointwise(a in upset(), b in upset()) {
        let w = window(&[&a, &b]);
        let (u, i, d, c) = (a.union(&b), a.intersection(&b), a.difference(&b), a.complement());
        for x in 0..w {
            prop_assert_eq!(u.contains(x), a.contains(x) || b.contains(x));
            prop_assert_eq!(i.contains(x), a.contains(x) && b.contains(x));
            prop_assert_eq!(d.contains(x), a.contains(x) && !b.contains(x));
            prop_assert_eq!(c.contains(x), !a.contains(x));
        }
        prop_assert_eq!(a.is_subset(&b), (0..w).all(|x| !a.contains(x) || b.contains(x)));
        prop_assert_eq!(a == b, (0..w).all(|x| a.contains(x) == b.contains(x)));
    }

    #[test]
    fn canonical_form_is_minimal(a in upset()) {
        // no smaller period or threshold describes the same set
        let q = a.period();
        for d in (1..q).filter(|d| q % d == 0) {
            let shorter = UpSet::from_parts(a.threshold(), a.prefix().to_vec(), d, a.residues().iter().map(|r| r % d));
            prop_assert_ne!(shorter.unwrap(), a.clone());
        }
        if a.threshold() > 0 {
            let x = a.threshold() - 1;
            prop_assert_ne!(a.contains(x), a.residues().contains(&(x % q)));
        }
    }

    #[test]
    fn min_is_least_member(a in upset()) {
        match a.min() {
            Ok(m) => {
                prop_assert!(a.contains(m));
                prop_assert!((0..m).all(|x| !a.contains(x)));
            }
            Err(_) => prop_assert!(a.is_empty()),
        }
        prop_assert_eq!(a.is_finite(), a.residues().is_empty());
        prop_assert_eq!(a.is_cofinite(), a.complement().is_finite());
    }

    #[test]
    fn distributive_laws(a in upset(), b in upset(), c in upset()) {
        prop_assert_eq!(a.intersection(&b.union(&c)), a.intersection(&b).union(&a.intersection(&c)));
        prop_assert_eq!(a.union(&b.intersection(&c)), a.union(&b).intersection(&a.union(&c)));
    }

    #[test]
    fn crt_matches_brute_force(system in prop::collection::vec((0u64..1000, 1u64..=12), 0..4)) {
        let cs: Vec<Congruence> = system.iter().map(|&(r, m)| Congruence::new(r % m, m).unwrap()).collect();
        let lcm = cs.iter().fold(1u64, |acc, c| acc.lcm(&c.modulus()));
        let solutions: Vec<u64> =
            (0..lcm).filter(|&x| cs.iter().all(|c| x % c.modulus() == c.residue())).collect();
        match crt_solve(&cs) {
            CrtSolution::Solution { residue, modulus } => {
                prop_assert_eq!(modulus, BigUint::from(lcm));
                prop_assert_eq!(solutions, vec![u64::try_from(residue).unwrap()]);
            }
            CrtSolution::Inconsistent => prop_assert!(solutions.is_empty()),
        }
    }

    #[test]
    fn separation_beyond_the_grid(n in 1usize..=6, a in 0u64..500, b in 0u64..500) {
        prop_assume!(a != b);
        let (u, v) = t2_separation(n, a, b).unwrap();
        prop_assert!(u.contains_u64(a) && v.contains_u64(b));
        prop_assert!(u.lies_in_level(n) && v.lies_in_level(n));
        prop_assert_eq!(basic_open_meet(&u, &v), MeetResult::Empty);
    }

    #[test]
    fn basic_open_meet_is_intersection(r in prop::collection::vec(0u64..13, 6), pick in prop::collection::vec(any::<bool>(), 6)) {
        let primes = [2u64, 3, 5, 7, 11, 13];
        let b1: Vec<(u64, u64)> = (0..3).filter(|&i| pick[i]).map(|i| (r[i] % primes[i], primes[i])).collect();
        let b2: Vec<(u64, u64)> = (1..6).filter(|&i| pick[i] || i == 5).map(|i| (r[i] % primes[i], primes[i])).collect();
        let (b1, b2) = (BasicOpen::from_pairs(&b1).unwrap(), BasicOpen::from_pairs(&b2).unwrap());
        let both = b1.to_upset().unwrap().intersection(&b2.to_upset().unwrap());
        match basic_open_meet(&b1, &b2) {
            MeetResult::Progression(p) => prop_assert_eq!(p.to_upset().unwrap(), both),
            MeetResult::Empty => prop_assert!(both.is_empty()),
        }
    }
}

/// Every coprime system with modulus product at most 10^4 whose moduli are
/// drawn from a small pool of pairwise coprime values.
#[test]
fn crt_coprime_exhaustive() {
    let pool = [2u64, 3, 5, 7, 11, 13];
    for mask in 1u32..1 << pool.len() {
        let moduli: Vec<u64> = (0..pool.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
        let product: u64 = moduli.iter().product();
        if product > 10_000 {
            continue;
        }
        // walk every residue vector via the solution it should produce
        for x in 0..product {
            let cs: Vec<Congruence> = moduli.iter().map(|&m| Congruence::new(x % m, m).unwrap()).collect();
            assert_eq!(crt_solve(&cs), CrtSolution::Solution { residue: x.into(), modulus: product.into() }, "{cs:?}");
        }
    }
}
