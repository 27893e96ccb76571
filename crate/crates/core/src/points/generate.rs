//! Points on `y^2 = -CM` over Q, on `y^2 = CM` over Q(i), and the descent
//! along the shift line.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{GaussianRational, Rational};
use crate::cayley_menger::{ankum_shift, cm_value, EdgeTuple};
use crate::error::{Error, Result};
use crate::tetrahedroid::TetraParams;
use crate::weddle::{q_vector_values, s_star_system, weddle_value};

/// `y^2 = sign * CM(edges)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMPoint {
    pub edges: EdgeTuple,
    pub y: GaussianRational,
    pub sign: i8,
}

impl CMPoint {
    /// A real point on `y^2 = sign * CM`, verified.
    pub fn new(edges: EdgeTuple, y: Rational, sign: i8) -> Result<Self> {
        let p = CMPoint {
            edges,
            y: GaussianRational::from_rational(y),
            sign,
        };
        p.verified()
    }

    fn verified(self) -> Result<Self> {
        if self.satisfies() {
            Ok(self)
        } else {
            Err(Error::VerificationFailed(format!(
                "y^2 != {}CM at {}",
                if self.sign < 0 { "-" } else { "" },
                self.edges
            )))
        }
    }

    /// Exact check of the defining equation.
    pub fn satisfies(&self) -> bool {
        let cm = cm_value(&self.edges);
        let rhs = if self.sign < 0 { -cm } else { cm };
        self.y.clone() * self.y.clone() == GaussianRational::from_rational(rhs)
    }

    pub fn y_rational(&self) -> Option<Rational> {
        self.y.is_real().then(|| self.y.re.clone())
    }
}

impl fmt::Display for CMPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edges={} y={} sign={}", self.edges, self.y, self.sign)
    }
}

#[derive(Serialize)]
struct CMPointJson {
    edges: [String; 6],
    y: String,
    sign: i8,
}

impl Serialize for CMPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CMPointJson {
            edges: self.edges.to_strings(),
            y: self.y.to_string(),
            sign: self.sign,
        }
        .serialize(s)
    }
}

/// Edges `(a, b, S2*/S1*, c, S3*/S1*, S4*/S1*)` and `y = W_{1,q}/(c S1*^2)`
/// on `y^2 = -CM`.
pub fn weddle_point(a: &Rational, b: &Rational, c: &Rational, x: &[Rational; 4]) -> Result<CMPoint> {
    if c.is_zero() {
        return Err(Error::DegenerateParameters("c = 0".into()));
    }
    let params = TetraParams {
        a: crate::MultiPoly::from_rational(a.clone()),
        b: crate::MultiPoly::from_rational(b.clone()),
        c: crate::MultiPoly::from_rational(c.clone()),
    };
    let s = s_star_system(&params).eval(x);
    if s[0].is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let edges = EdgeTuple::new([
        a.clone(),
        b.clone(),
        &s[1] / &s[0],
        c.clone(),
        &s[2] / &s[0],
        &s[3] / &s[0],
    ]);
    let w = weddle_value(&q_vector_values(a, b, c), x);
    let y = w / (c * &s[0] * &s[0]);
    CMPoint::new(edges, y, -1)
}

/// The same edges with `i y` on `y^2 = CM` over Q(i).
pub fn gaussian_point(a: &Rational, b: &Rational, c: &Rational, x: &[Rational; 4]) -> Result<CMPoint> {
    let p = weddle_point(a, b, c, x)?;
    let y = p.y_rational().expect("real");
    CMPoint {
        edges: p.edges,
        y: GaussianRational::new(Rational::zero(), y),
        sign: 1,
    }
    .verified()
}

/// Second intersection of the line `y = y0 + t s` with
/// `y^2 = CM(d12, d13, d14+s, d23, d24+s, d34+s)`.
///
/// When the shift quadratic vanishes identically every shift is a solution
/// with `y = 0`, and the slope is used as the shift.
pub fn conic_descent(seed: &CMPoint, t: &Rational) -> Result<CMPoint> {
    if seed.sign != 1 {
        return Err(Error::InvalidArgument("descent needs a point on y^2 = CM".into()));
    }
    let y0 = seed
        .y_rational()
        .ok_or_else(|| Error::InvalidArgument("descent needs a rational y".into()))?;
    let q = ankum_shift(&seed.edges);
    if q.gamma != &y0 * &y0 {
        return Err(Error::VerificationFailed("seed is not on y^2 = CM".into()));
    }
    let (s, y) = if q.is_identically_zero() {
        (t.clone(), Rational::zero())
    } else {
        let den = t * t - &q.alpha;
        if den.is_zero() {
            return Err(Error::ParallelSlope);
        }
        let s = (&q.beta - t * &y0 * Rational::from_integer(2.into())) / den;
        let y = &y0 + t * &s;
        (s, y)
    };
    CMPoint::new(seed.edges.shifted(&s), y, 1)
}

/// Shift `s` and new `y` that [`conic_descent`] would use, without
/// verification; `None` for a parallel slope.
pub fn descent_shift(seed: &CMPoint, t: &Rational) -> Option<Rational> {
    let y0 = seed.y_rational()?;
    let q = ankum_shift(&seed.edges);
    if q.is_identically_zero() {
        return Some(t.clone());
    }
    let den = t * t - &q.alpha;
    (!den.is_zero()).then(|| (&q.beta - t * &y0 * Rational::from_integer(2.into())) / den)
}

/// `count` points from slopes `1, 2, 3, ...` skipping parallel ones.
pub fn descent_family(seed: &CMPoint, count: usize) -> Result<Vec<CMPoint>> {
    let mut out = Vec::with_capacity(count);
    let mut k = 1i64;
    while out.len() < count {
        match conic_descent(seed, &Rational::from_integer(k.into())) {
            Ok(p) => out.push(p),
            Err(Error::ParallelSlope) => {}
            Err(e) => return Err(e),
        }
        k += 1;
    }
    Ok(out)
}

/// Slope of the line from `from` back to `to`, for points on the same fiber.
pub fn reverse_slope(t: &Rational, degenerate: bool) -> Rational {
    if degenerate {
        -t.clone()
    } else {
        t.clone()
    }
}

/// The sign of CM at the point decides which generator it can seed.
pub fn cm_sign(edges: &EdgeTuple) -> i8 {
    let v = cm_value(edges);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn x1234() -> [Rational; 4] {
        [rat(1), rat(2), rat(3), rat(4)]
    }

    #[test]
    fn weddle_fixture() {
        let p = weddle_point(&rat(3), &rat(4), &rat(5), &x1234()).unwrap();
        assert_eq!(
            p.edges,
            EdgeTuple::new([rat(3), rat(4), ratio(7, 5), rat(5), ratio(8, 5), rat(3)])
        );
        assert_eq!(p.y_rational(), Some(ratio(672, 25)));
        assert_eq!(p.sign, -1);
        let g = gaussian_point(&rat(3), &rat(4), &rat(5), &x1234()).unwrap();
        assert_eq!(g.y, GaussianRational::new(rat(0), ratio(672, 25)));
        assert_eq!(g.y.norm(), cm_value(&g.edges).abs());
    }

    #[test]
    fn weddle_errors() {
        let ones = [rat(1), rat(1), rat(1), rat(1)];
        assert!(matches!(
            weddle_point(&rat(3), &rat(4), &rat(5), &ones),
            Err(Error::PointAtInfinity)
        ));
        assert!(matches!(
            weddle_point(&rat(3), &rat(4), &rat(0), &x1234()),
            Err(Error::DegenerateParameters(_))
        ));
    }

    #[test]
    fn descent_from_collinear_seed() {
        let seed = CMPoint::new(EdgeTuple::from_ints([1, 2, 3, 1, 2, 1]), rat(0), 1).unwrap();
        let p = conic_descent(&seed, &rat(1)).unwrap();
        assert_eq!(p.edges, EdgeTuple::from_ints([1, 2, 4, 1, 3, 2]));
        assert_eq!(p.y_rational(), Some(rat(0)));
        let fam = descent_family(&seed, 10).unwrap();
        let mut e: Vec<_> = fam.iter().map(|p| p.edges.clone()).collect();
        e.sort();
        e.dedup();
        assert_eq!(e.len(), 10);
    }

    #[test]
    fn descent_involution_and_fixed_point() {
        let seed = CMPoint::new(EdgeTuple::from_ints([3, 5, 4, 4, 5, 3]), rat(0), 1).unwrap();
        let t = rat(7);
        let p = conic_descent(&seed, &t).unwrap();
        assert!(p.satisfies());
        assert_ne!(p.y_rational(), Some(rat(0)));
        let back = conic_descent(&p, &reverse_slope(&t, false)).unwrap();
        assert_eq!(back, seed);
        // the slope with s = 0 returns the point itself
        let q = ankum_shift(&p.edges);
        let y1 = p.y_rational().unwrap();
        let fixed = &q.beta / (rat(2) * y1);
        assert_eq!(conic_descent(&p, &fixed).unwrap(), p);
    }

    #[test]
    fn parallel_slope_is_rejected() {
        let seed = CMPoint::new(EdgeTuple::from_ints([2, 4, 1, 4, 2, 3]), rat(0), 1).unwrap();
        assert_eq!(ankum_shift(&seed.edges).alpha, rat(144));
        assert!(matches!(conic_descent(&seed, &rat(12)), Err(Error::ParallelSlope)));
        assert!(matches!(conic_descent(&seed, &rat(-12)), Err(Error::ParallelSlope)));
        assert!(CMPoint::new(EdgeTuple::from_ints([1; 6]), rat(0), 1).is_err());
    }
}
