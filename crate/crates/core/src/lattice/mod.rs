//! Exact integer-lattice primitives: points and exponent sets, determinants and
//! lattice index, the origin-in-hull predicate, semigroup membership and
//! minimal generators, unimodular maps and guiding forms.

mod form;
mod hull;
mod map;
mod point;
mod quad;
mod semigroup;

pub use form::{eval_form, GuidingForm};
pub(crate) use hull::origin_in_hull_of;
pub use hull::{origin_in_hull, separating_form};
pub use map::{apply_map, UnimodularMap};
pub use point::{det2, index_of_points, lattice_index, ExponentSet, LatticePoint};
pub use quad::{is_valid_radicand, QuadExt};
pub use semigroup::{member, minimal_generators, same_semigroup, SemigroupOracle};
