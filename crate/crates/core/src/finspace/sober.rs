use super::{family_members, FiniteTopology, PointSet};
use crate::error::{Error, Result};

/// The space of closed irreducible sets with the lower Vietoris topology,
/// together with the embedding `x ↦ cl({x})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Soberification {
    /// Topology on `{0, .., points.len()-1}`; point `i` stands for `points[i]`.
    pub space: FiniteTopology,
    /// Closed irreducible sets of the source, in canonical order.
    pub points: Vec<PointSet>,
    /// `embedding[x]` is the index of `cl({x})` in `points`.
    pub embedding: Vec<usize>,
}

impl FiniteTopology {
    /// `◇U = {C ∈ Irr_c : C ∩ U ≠ ∅}` as a subset of the closed irreducible sets.
    pub fn diamond(irr: &[PointSet], u: PointSet) -> u64 {
        irr.iter().enumerate().filter(|(_, c)| !c.intersection(u).is_empty()).fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn soberify(&self) -> Result<Soberification> {
        if !self.is_t0() {
            return Err(Error::NotT0);
        }
        let points = self.irr_closed();
        let k = points.len();
        if k > super::MAX_POINTS {
            return Err(Error::GroundTooLarge(k));
        }
        let n = self.n();
        let opens = family_members(self.family())
            .map(|u| PointSet::new(k, Self::diamond(&points, PointSet::from_bits(n, u))))
            .collect::<Result<Vec<_>>>()?;
        let space = FiniteTopology::new(k, opens)?;
        let embedding = (0..n)
            .map(|x| {
                let cl = self.point_closure(x);
                points.iter().position(|&c| c == cl).expect("point closures are irreducible")
            })
            .collect();
        Ok(Soberification { space, points, embedding })
    }
}
