//! Rational points on `y^2 = ±CM`, Heron triangles, face square classes and
//! the integer search.

mod arith;
pub mod checks;
mod classify;
mod generate;
mod heron;
mod search;

use std::fmt::Display;

pub use arith::{factorize, is_norm_from_qi, is_probable_prime, square_class, squarefree_part, SquareClass};
pub use classify::{classify_faces, FaceClassReport, FacePair};
pub use generate::{
    cm_sign, conic_descent, descent_family, descent_shift, gaussian_point, reverse_slope, weddle_point, CMPoint,
};
pub use heron::{heron_cubic_check, heron_fixture_check, heron_point, heron_sampling_check, HeronPoint};
pub use search::{
    collinear_tuples, edge_permutations, hits_to_csv, hits_to_json, is_canonical, search_integer_tetrahedra,
    SearchHit, SearchOptions,
};

pub(crate) fn ser_display<T: Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn ser_display_array<T: Display, S: serde::Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}
