//! Exact computations with Lie color algebras given by structure constants.
//!
//! The crate covers the whole path from a graded algebra over `Q(zeta_N)` to
//! a decision about its enveloping algebra:
//!
//! * [`abgroup`]: grading groups `Z^r x Z/m1 x ... x Z/ms` and their homomorphisms;
//! * [`cyclo`]: exact scalars in cyclotomic fields;
//! * [`pairings`]: bicharacters, commutation factors, cocycles and the
//!   superizing cocycle;
//! * [`color`]: graded associative algebras, graded modules, Lie color algebras,
//!   cocycle twists and the descending central series;
//! * [`lie`]: ordinary Lie algebras, the index, codimension-one abelian ideals,
//!   central abelian factors and the classification verdict;
//! * [`pbw`]: PBW normal forms in enveloping algebras and the check that
//!   twisting commutes with taking enveloping algebras;
//! * [`gradings`]: group gradings, induced gradings and coarsenings.

pub mod abgroup;
pub mod color;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod gradings;
pub mod lie;
pub mod linalg;
pub mod mpoly;
pub mod pairings;
pub mod pbw;
pub mod table;

pub use abgroup::{GroupElement, GroupHom, GroupSpec};
pub use cyclo::{CycloField, CycloScalar};
pub use error::{Error, Result};
