//! Exact computation with infinite subsets of the naturals.
//!
//! [`UpSet`] is the Boolean algebra of ultimately periodic sets, which holds
//! residue classes and finite/cofinite sets. Topologies generated by residue
//! classes modulo primes are never materialized: [`BasicOpen`] and the
//! certificates in this module reason about subbasic data directly.

mod certificates;
mod crt;
mod upset;

pub use certificates::{
    closed_in_designated, cofinite_join_witness, cofinite_not_sober_certificate, in_primorial_set, lambda_m_cofinite,
    meet_chain_irreducibility_witness, open_in_designated, primorial_set_certificate, t2_separation,
    tau_a_nat_membership, CofiniteNotSoberCertificate, LambdaCertificate, LambdaM, MeetChainWitness,
    PrimorialCertificate,
};
pub use crt::{
    basic_open_meet, crt_solve, is_prime, nth_prime, BasicOpen, Congruence, CrtSolution, MeetResult, PrimeIndex,
    Progression,
};
pub use upset::{up_combine, up_query, Carrier, QueryAnswer, SetOp, SetQuery, UpSet};
