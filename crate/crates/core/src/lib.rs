//! Finite topologies, their lattice, and symbolic topologies on the naturals.
//!
//! The finite side works with topologies on `{0, .., n-1}` for `n <= 6`,
//! stored as bitmask families. The symbolic side handles ultimately periodic
//! subsets of the naturals and arithmetic-progression topologies, where sets
//! are infinite and only a finite description is manipulated.

pub mod constructions;
pub mod error;
pub mod finspace;
pub mod lattice;
pub mod order;
pub mod symnat;

pub use error::{Error, Result};
pub use finspace::{FiniteTopology, PointSet, PropertyKind, Soberification};
pub use lattice::{SoberWidth, TopologyFamily};
pub use order::{Poset, Preorder};
