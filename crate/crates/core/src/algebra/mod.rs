//! Exact scalars, sparse polynomials and linear algebra.

mod gaussian;
mod matrix;
mod poly;
mod rational;
mod square;

pub use gaussian::GaussianRational;
pub use matrix::{det_poly_matrix, kernel_basis, PolyMatrix, RationalMatrix};
pub use poly::{Monomial, MultiPoly, Scalar};
pub use rational::{
    format_rational, is_perfect_square_rational, parse_rational, rat, ratio, Rational,
};
pub use square::{is_square_up_to_constant, ScaledSquare};
