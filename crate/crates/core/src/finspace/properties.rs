//! Separation and sobriety-like properties, each checked from its definition.

use std::fmt;
use std::str::FromStr;

use super::{family_members, full_mask, FiniteTopology, PointSet};
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PropertyKind {
    T0,
    T1,
    T2,
    TD,
    Sober,
    DSpace,
    WellFiltered,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 7] = [
        PropertyKind::T0,
        PropertyKind::T1,
        PropertyKind::T2,
        PropertyKind::TD,
        PropertyKind::Sober,
        PropertyKind::DSpace,
        PropertyKind::WellFiltered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::T0 => "t0",
            PropertyKind::T1 => "t1",
            PropertyKind::T2 => "t2",
            PropertyKind::TD => "td",
            PropertyKind::Sober => "sober",
            PropertyKind::DSpace => "d-space",
            PropertyKind::WellFiltered => "well-filtered",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        PropertyKind::ALL
            .into_iter()
            .find(|p| p.name() == key || (key == "dspace" && *p == PropertyKind::DSpace))
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown property `{s}`")))
    }
}

/// Families larger than this many saturated sets are not enumerated
/// subset-by-subset when checking well-filteredness.
const WELL_FILTERED_BRUTE_FORCE_LIMIT: usize = 16;

impl FiniteTopology {
    pub fn has_property(&self, p: PropertyKind) -> bool {
        match p {
            PropertyKind::T0 => self.is_t0(),
            PropertyKind::T1 => self.is_t1(),
            PropertyKind::T2 => self.is_t2(),
            PropertyKind::TD => self.is_td(),
            PropertyKind::Sober => self.is_sober(),
            PropertyKind::DSpace => self.is_d_space(),
            PropertyKind::WellFiltered => self.is_well_filtered(),
        }
    }

    pub fn is_t0(&self) -> bool {
        let cls = self.point_closures();
        let n = self.n();
        (0..n).all(|x| (x + 1..n).all(|y| cls[x] != cls[y]))
    }

    pub fn is_t1(&self) -> bool {
        (0..self.n()).all(|x| self.closure_bits(1 << x) == 1 << x)
    }

    pub fn is_t2(&self) -> bool {
        let n = self.n();
        let opens: Vec<u8> = family_members(self.opens).collect();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                opens.iter().any(|&u| {
                    u >> x & 1 == 1 && u >> y & 1 == 0 && opens.iter().any(|&v| v >> y & 1 == 1 && u & v == 0)
                })
            })
        })
    }

    /// `cl({x}) - {x}` is closed for every point.
    pub fn is_td(&self) -> bool {
        (0..self.n()).all(|x| {
            let rest = self.closure_bits(1 << x) & !(1 << x);
            self.closure_bits(rest) == rest
        })
    }

    /// The closure criterion: `cl(A) = cl({x})` forces `x ∈ A`, for every
    /// point and every subset.
    pub fn is_td_by_closure_criterion(&self) -> bool {
        let n = self.n();
        let cls = self.point_closures();
        (0..1u16 << n).all(|a| {
            let a = a as u8;
            let cl = self.closure_bits(a);
            (0..n).all(|x| cl != cls[x] || a >> x & 1 == 1)
        })
    }

    /// Every closed irreducible set is the closure of exactly one point.
    pub fn is_sober(&self) -> bool {
        let cls = self.point_closures();
        let n = self.n();
        self.irr_closed().into_iter().all(|c| (0..n).filter(|&x| cls[x] == c.bits()).count() == 1)
    }

    /// Directed-set characterization: for every directed `D` of the
    /// specialization order and open `U`, `⋂{↑d : d ∈ D} ⊆ U` implies `d ∈ U`
    /// for some `d ∈ D`.
    pub fn is_d_space(&self) -> bool {
        if !self.is_t0() {
            return false;
        }
        let n = self.n();
        let spec = self.specialization();
        let ups: Vec<u8> = (0..n).map(|d| spec.up(d).bits()).collect();
        let opens: Vec<u8> = family_members(self.opens).collect();
        for d_set in 1..1u16 << n {
            let d_set = d_set as u8;
            if !spec.is_directed(PointSet::from_bits(n, d_set)) {
                continue;
            }
            let common = (0..n).filter(|&d| d_set >> d & 1 == 1).fold(full_mask(n), |acc, d| acc & ups[d]);
            for &u in &opens {
                if common & !u == 0 && u & d_set == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// The original d-space definition: the specialization order is a dcpo
    /// and every open set is Scott open in it.
    pub fn is_d_space_by_scott(&self) -> bool {
        let Ok(poset) = crate::order::Poset::new(self.specialization()) else {
            return false;
        };
        if !poset.is_dcpo() {
            return false;
        }
        self.is_coarser_than(&crate::order::scott_topology(&poset))
    }

    /// Well-filtered: for every open `U` and filtered family `F` of saturated
    /// compact sets, `⋂F ⊆ U` implies some member of `F` lies in `U`.
    ///
    /// On a finite carrier every set is compact and the saturated sets are the
    /// upper sets of the specialization order. Filtered families are
    /// enumerated exhaustively while there are at most 16 saturated sets.
    pub fn is_well_filtered(&self) -> bool {
        if !self.is_t0() {
            return false;
        }
        let n = self.n();
        let spec = self.specialization();
        let saturated: Vec<u8> =
            (0..1u16 << n).map(|s| s as u8).filter(|&s| spec.is_upper_set(PointSet::from_bits(n, s))).collect();
        let k = saturated.len();
        let opens: Vec<u8> = family_members(self.opens).collect();
        if k > WELL_FILTERED_BRUTE_FORCE_LIMIT {
            return well_filtered_by_least_member(&saturated, &opens);
        }

        // below[i][j]: members lying inside saturated[i] ∩ saturated[j]
        let mut below = vec![vec![0u32; k]; k];
        for i in 0..k {
            for j in 0..k {
                let meet = saturated[i] & saturated[j];
                for (m, &s) in saturated.iter().enumerate() {
                    if s & !meet == 0 {
                        below[i][j] |= 1 << m;
                    }
                }
            }
        }
        let inside: Vec<u32> = opens
            .iter()
            .map(|&u| {
                saturated.iter().enumerate().filter(|&(_, &s)| s & !u == 0).fold(0u32, |acc, (m, _)| acc | 1 << m)
            })
            .collect();

        for fam in 1..1u32 << k {
            let members: Vec<usize> = (0..k).filter(|&m| fam >> m & 1 == 1).collect();
            let filtered = members.iter().all(|&i| members.iter().all(|&j| fam & below[i][j] != 0));
            if !filtered {
                continue;
            }
            let common = members.iter().fold(full_mask(n), |acc, &m| acc & saturated[m]);
            for (ui, &u) in opens.iter().enumerate() {
                if common & !u == 0 && fam & inside[ui] == 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// A finite filtered family contains its own intersection (its least
/// member), so the condition is checked once per candidate least member.
fn well_filtered_by_least_member(saturated: &[u8], opens: &[u8]) -> bool {
    saturated
        .iter()
        .all(|&least| opens.iter().all(|&u| least & !u != 0 || saturated.iter().any(|&s| s == least && s & !u == 0)))
}
