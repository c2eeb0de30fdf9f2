//! Finite quivers and the category they form.
//!
//! A quiver is a directed multigraph `(V, E, source, target)`: parallel edges
//! and loops are allowed, and a quiver map is a pair of functions on vertices
//! and edges commuting with `source` and `target`. This crate implements that
//! category over finite label sets, the vertex and edge projection functors,
//! and the four classical constructions adjoint to them:
//!
//! * the empty quiver (independent set of vertices) on a set,
//! * the independent set of edges on a set,
//! * the complete digraph on a set,
//! * the bouquet of loops on a set.
//!
//! Each construction comes with its factorization operation, and every
//! universal property — existence, the factorization identity, and
//! uniqueness — is certified mechanically by exhaustive enumeration of
//! hom-sets on small instances, rather than trusted.

pub mod adjunction;
pub mod constructions;
pub mod format;
pub mod oracle;
pub mod quiver;
pub mod set;

pub use adjunction::{
    check_adjunction_laws, check_all_adjunction_laws, coreflect_edges, coreflect_vertices,
    factorize, reflect_edges, reflect_vertices, AdjunctionError, FactorizationResult, LawKind,
    LawReport, LawRow, LawViolation,
};
pub use constructions::{bouquet, complete_quiver, empty_quiver, independent_edges, Construction};
pub use format::{export_dot, parse_quiver, serialize_quiver, FormatError, QuiverDocument};
pub use oracle::{enumerate_homs, quiver_catalogue, set_catalogue, OracleError, SizeCaps};
pub use quiver::{Quiver, QuiverError, QuiverMorphism, StructureMap};
pub use set::{
    enumerate_functions, pairing, Coordinate, FiniteSet, Label, SetError, SetFunction, Tag,
};
