//! Exact algebra for the rational tetrahedron problem.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, Gaussian rationals, sparse multivariate
//!   polynomials, polynomial matrices and exact kernels.
//! * [`cayley_menger`]: the Cayley-Menger and Heron polynomials, the Neiss
//!   and Ankum/Schulz shift identities, realizability of edge tuples.
//! * [`tetrahedroid`]: the quartic `T_{a,b,c}`, its dual, the sixteen nodes
//!   and tropes and the irrational form.
//! * [`weddle`]: six-point configurations, quadrics through them, the Weddle
//!   determinant, the symmetroid and the `S*` system with its central identity.
//! * [`points`]: generators and classifiers of rational points on `y^2 = ±CM`.
//! * [`suite`] and [`cli`]: verdict aggregation and the `rtetra` front-end.
//!
//! Every value is immutable once built and all operations are pure, so
//! everything here is `Send + Sync`.

pub mod algebra;
pub mod cayley_menger;
pub mod cli;
mod error;
pub mod points;
pub mod sampling;
pub mod suite;
pub mod tetrahedroid;
pub mod verdict;
pub mod weddle;

pub use algebra::{GaussianRational, MultiPoly, PolyMatrix, Rational, RationalMatrix};
pub use error::{Error, Result};
