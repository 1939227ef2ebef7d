//! Exact invariants of rational knots `R(n1, ..., nN)`.
//!
//! The determinant of a rational knot is computed four ways that are checked
//! against each other: evaluating the coefficient-one polynomials indexed by
//! increasing even-odd sequences ([`poly`], [`propagation`]), the continuant
//! recursion ([`trees`]), the Matrix-Tree count on the checkerboard graph
//! ([`checkerboard`], [`trees`]) and a first minor of the Fox coloring matrix
//! of an explicit 4-plat diagram ([`plat`], [`matrix`]). Coloring counts modulo
//! `r` come from the gcd formula, the Smith normal form ([`snf`]) and an
//! exhaustive search ([`coloring`]).
//!
//! All linear algebra is generic over an exact integer [`Scalar`]; the aliases
//! below fix it to arbitrary precision.

pub mod checkerboard;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod ieo;
pub mod matrix;
pub mod plat;
pub mod poly;
pub mod propagation;
pub mod scalar;
pub mod snf;
pub mod trees;
pub mod twist;
pub mod verify;

pub use checkerboard::{checkerboard_graph, CheckerboardGraph};
pub use coloring::{count_colorings_bruteforce, count_colorings_formula, count_colorings_snf, DEFAULT_WORK_BOUND};
pub use error::{Error, Result};
pub use ieo::{enumerate_ieo, is_ieo, IeoSequence};
pub use matrix::IntMatrix;
pub use plat::{build_plat, Closure, Crossing, PlatDiagram};
pub use poly::{build_p, Monomial, MultilinearPoly, Part};
pub use propagation::{
    determinant, determinant_as, determinant_polynomial, propagate, propagate_numeric, reduced_cse, ColorState,
    Determinant, ReducedEquation,
};
pub use scalar::Scalar;
pub use snf::{smith_normal_form, SnfResult};
pub use trees::{continuant, laplacian, tree_count_matrix, tree_count_recursion};
pub use twist::TwistVector;

/// Arbitrary-precision integer used wherever results must never overflow.
pub type Int = num_bigint::BigInt;
/// Integer matrix over [`Int`].
pub type Matrix = IntMatrix<Int>;
/// Fox coloring matrix: one row per crossing, one column per arc.
pub type ColoringMatrix<T = Int> = IntMatrix<T>;
/// Machine-word matrix; overflow is reported as [`Error::Overflow`].
pub type Matrix64 = IntMatrix<i64>;
