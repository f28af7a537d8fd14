//! Orthoscalar representations of separated single quivers.
//!
//! The crate is organised bottom-up:
//!
//! * [`catalog`]: quivers and the built-in Dynkin / extended Dynkin graphs.
//! * [`roots`]: exact integer root-lattice arithmetic.
//! * [`rep`] and [`morphism`]: concrete complex representations, characters,
//!   orthoscalarity, morphism spaces and decomposition.
//! * [`functors`]: Coxeter reflection functors and the real-root constructor.
//! * [`families`]: explicit families in dimension δ for extended graphs.
//! * [`io`]: JSON formats.

pub mod catalog;
pub mod families;
pub mod functors;
pub mod io;
pub mod linalg;
pub mod morphism;
pub mod rep;
pub mod roots;

pub use catalog::{build_catalog_quiver, catalog, validate_quiver, CatalogEntry, CatalogName, Parity, Quiver};
pub use families::{construct_family, count_free_parameters, random_parameter_point, ParameterPoint};
pub use functors::{apply_reflection_functor, construct_real_root_rep};
pub use morphism::{is_schur, morphism_space_dim, split_decomposition, unitary_equivalent, Category};
pub use rep::{orthoscalarity_report, Character, Representation};
pub use roots::{classify_vector, GVector, RootClass, RootTag};
