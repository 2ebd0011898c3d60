//! Exact combinatorial invariants of torus manifolds whose orbit space is a
//! simple polytope with simple holes.
//!
//! The pipeline runs on exact integers and rationals end to end:
//!
//! * [`exactlin`]: determinants, Smith/Hermite forms, kernel lattices.
//! * [`polytope`]: half-space polytopes, holes, fiber-sum placement.
//! * [`charpair`]: characteristic functions, vertex frames and signs.
//! * [`genus`]: edge vectors, vertex indices and the χ_y genus.
//! * [`dim4`]: homology, intersection forms and Chern numbers when n = 2.
//! * [`mac`]: moment-angle data (embedding chart, kernel lattice, freeness).
//! * [`cli`]: JSON spec documents, reports and the `tmh` command dispatcher.
//!
//! ```
//! use tmh::{catalog, dim4, genus};
//!
//! let y = catalog::pentagon_y();
//! let chi = genus::chi_y(&y, None).unwrap();
//! assert_eq!(chi.polynomial.top_chern(), 5);
//! assert_eq!(dim4::chern_numbers_dim4(&y).unwrap(), (19, 5));
//! ```

pub mod catalog;
pub mod charpair;
pub mod cli;
pub mod dim4;
pub mod exactlin;
pub mod genus;
pub mod mac;
pub mod polytope;

pub use charpair::{CharacteristicPair, VertexFrame};
pub use exactlin::{IntMatrix, RatVector};
pub use polytope::{FacetId, Halfspace, PolytopeWithHoles, SimplePolytope, VertexId};

