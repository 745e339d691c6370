//! Galois coverings of Brauer graph algebras: group weights on Brauer
//! permutations and bound quivers, their smash products, and the standard
//! weight choices that remove multiplicities, loops, multiple edges and cycles.

pub mod brauer;
pub mod covering;
pub mod deletions;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod groups;
pub mod iso;
pub mod quiver;
pub mod random;
pub mod smash;
pub mod weights;

pub use brauer::{BrauerData, BrauerPermutation, HalfEdge, Violation};
pub use covering::{check_covering, cross_validate_theorem, smash_quiver, CoveringQuiver};
pub use deletions::{DeletionKind, DeletionPlan};
pub use error::{Error, Result};
pub use graph::{BrauerGraph, Classification, Multigraph};
pub use groups::{CyclicFactor, GroupElement, GroupSpec, Order};
pub use iso::{graph_iso, ribbon_iso, RibbonIsomorphism};
pub use quiver::{Arrow, BoundQuiver, Path, Relation};
pub use smash::{smash_brauer, smash_brauer_finite, CoveredHalfEdge, WindowedBrauerPermutation};
pub use weights::{GWeight, is_admissible, is_homogeneous_brauer, is_homogeneous_quiver};
