//! Square classes of the four faces.

use serde::Serialize;

use crate::algebra::Rational;
use crate::cayley_menger::{cm_value, EdgeTuple, Face};
use crate::error::{Error, Result};

use super::arith::{is_norm_from_qi, square_class, SquareClass};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacePair {
    pub faces: (Face, Face),
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceClassReport {
    #[serde(serialize_with = "crate::points::ser_display")]
    pub cm: Rational,
    #[serde(serialize_with = "crate::points::ser_display_array")]
    pub heron: [Rational; 4],
    pub classes: [SquareClass; 4],
    /// Equal square classes, for each of the six face pairs.
    pub equal: Vec<FacePair>,
    /// `H_i / H_j` a norm from Q(i) up to squares.
    pub norm: Vec<FacePair>,
}

impl FaceClassReport {
    pub fn all_equal(&self) -> bool {
        self.equal.iter().all(|p| p.holds)
    }

    pub fn all_norms(&self) -> bool {
        self.norm.iter().all(|p| p.holds)
    }
}

pub fn classify_faces(d: &EdgeTuple) -> Result<FaceClassReport> {
    let heron = d.face_herons();
    for (f, h) in Face::ALL.iter().zip(&heron) {
        if num_traits::Zero::is_zero(h) {
            return Err(Error::ZeroFaceHeron(f.label().to_string()));
        }
    }
    let classes: Vec<SquareClass> = heron.iter().map(square_class).collect::<Result<_>>()?;
    let mut equal = Vec::new();
    let mut norm = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let faces = (Face::ALL[i], Face::ALL[j]);
            equal.push(FacePair {
                faces,
                holds: classes[i] == classes[j],
            });
            norm.push(FacePair {
                faces,
                holds: is_norm_from_qi(&(&heron[i] * &heron[j])),
            });
        }
    }
    Ok(FaceClassReport {
        cm: cm_value(d),
        heron,
        classes: classes.try_into().expect("four faces"),
        equal,
        norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rectangle_and_regular() {
        let r = classify_faces(&EdgeTuple::from_ints([3, 5, 4, 4, 5, 3])).unwrap();
        assert_eq!(r.cm, rat(0));
        assert!(r.all_equal());
        assert!(r.classes.iter().all(|c| c.representative == 1.into()));
        let r = classify_faces(&EdgeTuple::from_ints([1; 6])).unwrap();
        assert!(r.all_equal() && r.all_norms());
        assert!(r.classes.iter().all(|c| c.representative == 3.into()));
    }

    #[test]
    fn zero_face_is_an_error() {
        assert!(matches!(
            classify_faces(&EdgeTuple::from_ints([1, 2, 3, 1, 2, 1])),
            Err(Error::ZeroFaceHeron(_))
        ));
    }
}
