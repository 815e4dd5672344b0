//! Exact computation of Jack symmetric functions by two independent routes.
//!
//! The algebraic route orthogonalizes the monomial basis against the
//! α-deformed Hall inner product ([`jack`]). The geometric route works
//! with the torus fixed points of the Hilbert scheme of points on a
//! surface, whose tangent weights give the norms of the fixed-point
//! classes by localization ([`localization`]). The [`verify`] suites
//! compare the two, along with the Heisenberg operator calculus on the
//! Fock space model of Λ ([`symfunc`]).
//!
//! All arithmetic is exact, over ℚ(α) ([`scalar`]).

pub mod jack;
pub mod json;
pub mod localization;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use jack::{
    c_lambda, jack_J, jack_P, jack_table, norm_closed_form, positivity_check, JackTable,
};
pub use localization::{
    euler_classes, f_pairing, goettsche_dim, s1_weight, tangent_character, FixedPointData,
    LaurentChar,
};
pub use partition::{enumerate_partitions, Cell, Partition, PartitionError};
pub use report::CheckReport;
pub use scalar::{AlphaPoly, BigRat, RatFun, ScalarError};
pub use symfunc::{geometric_pairing, inner_product, Basis, SymError, SymFunc};
