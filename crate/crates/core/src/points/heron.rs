//! Rational Heron triangles from the conic `Z^2 = U V (1 - U - V)`.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::{rat, MultiPoly, Rational};
use crate::cayley_menger::heron_eval;
use crate::error::{Error, Result};
use crate::sampling;
use crate::verdict::Verdict;

/// Sides normalized to `a + b + c = 1`, with `Y^2 = H(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeronPoint {
    #[serde(serialize_with = "crate::points::ser_display")]
    pub u: Rational,
    #[serde(serialize_with = "crate::points::ser_display")]
    pub v: Rational,
    #[serde(serialize_with = "crate::points::ser_display")]
    pub z: Rational,
    #[serde(serialize_with = "crate::points::ser_display")]
    pub a: Rational,
    #[serde(serialize_with = "crate::points::ser_display")]
    pub b: Rational,
    #[serde(serialize_with = "crate::points::ser_display")]
    pub c: Rational,
    #[serde(serialize_with = "crate::points::ser_display")]
    pub y: Rational,
}

/// `U = V(1-V)/(t^2+V)`, `Z = t U`, sides `((1-U)/2, (1-V)/2, (U+V)/2)`.
pub fn heron_point(v: &Rational, t: &Rational) -> Result<HeronPoint> {
    let den = t * t + v;
    if den.is_zero() {
        return Err(Error::DegenerateParameters("t^2 + V = 0".into()));
    }
    let one = Rational::one();
    let half = Rational::new(1.into(), 2.into());
    let u = v * (&one - v) / den;
    let z = t * &u;
    let a = (&one - &u) * &half;
    let b = (&one - v) * &half;
    let c = (&u + v) * &half;
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::DegenerateParameters(format!(
            "zero side at V = {v}, t = {t}"
        )));
    }
    let p = HeronPoint {
        u,
        v: v.clone(),
        y: z.clone(),
        z,
        a,
        b,
        c,
    };
    if &p.y * &p.y != heron_eval(&p.a, &p.b, &p.c) {
        return Err(Error::VerificationFailed(format!("Y^2 != H at V = {v}, t = {t}")));
    }
    Ok(p)
}

/// `H((1-U)/2, (1-V)/2, (U+V)/2)` against `UV(2-U-V)` as written and
/// `UV(1-U-V)`, and the parametrization against the corrected cubic.
pub fn heron_cubic_check() -> Verdict {
    let start = Instant::now();
    let u = MultiPoly::symbol("U");
    let v = MultiPoly::symbol("V");
    let t = MultiPoly::symbol("t");
    let one = MultiPoly::from_int(1);
    let half = Rational::new(1.into(), 2.into());
    let a = (&one - &u).scale(&half);
    let b = (&one - &v).scale(&half);
    let c = (&u + &v).scale(&half);
    let h = heron_eval(&a, &b, &c);
    let literal = &h - &(&u * &v * (MultiPoly::from_int(2) - &u - &v));
    let corrected = &h - &(&u * &v * (&one - &u - &v));
    let mut verdict = Verdict::corrected_or_fail(
        "points.heron_cubic",
        &literal,
        &corrected,
        "H/(a+b+c)^4 equals UV(1-U-V), not UV(2-U-V)",
        start,
    );
    // U = N/D with N = V(1-V), D = t^2+V, Z = tU: D^2 (Z^2 - UV(1-U-V))
    let n = &v * (&one - &v);
    let d = t.square() + &v;
    let param = (&t * &n).square() - &n * &v * (&d - &n - &v * &d);
    if !param.is_zero() {
        verdict.fail("the line parametrization does not lie on Z^2 = UV(1-U-V)");
    }
    verdict
}

pub fn heron_fixture_check() -> Verdict {
    let start = Instant::now();
    let half = Rational::new(1.into(), 2.into());
    let ok = match heron_point(&half, &rat(1)) {
        Ok(p) => {
            p.u == Rational::new(1.into(), 6.into())
                && p.z == Rational::new(1.into(), 6.into())
                && [p.a.clone(), p.b.clone(), p.c.clone()]
                    == [
                        Rational::new(5.into(), 12.into()),
                        Rational::new(1.into(), 4.into()),
                        Rational::new(1.into(), 3.into()),
                    ]
                && heron_eval(&p.a, &p.b, &p.c) == Rational::new(1.into(), 36.into())
        }
        Err(_) => false,
    };
    Verdict::from_bool(
        "points.heron_fixture",
        ok,
        "(V,t) = (1/2,1) gives sides (5/12,1/4,1/3) with H = 1/36".into(),
        start,
    )
}

pub fn heron_sampling_check(seed: u64, samples: usize) -> Verdict {
    let start = Instant::now();
    let mut rng = sampling::rng(seed, sampling::stream::POINTS);
    let mut ok = 0;
    let mut bad = 0;
    while ok + bad < samples {
        let v = Rational::new(rng.gen_range(1i64..=50).into(), rng.gen_range(51i64..=100).into());
        let t = Rational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=10).into());
        match heron_point(&v, &t) {
            Ok(_) => ok += 1,
            Err(Error::DegenerateParameters(_)) => {}
            Err(_) => bad += 1,
        }
    }
    let mut verdict = Verdict::from_bool(
        "points.heron_sampling",
        bad == 0,
        format!("Y^2 = H on {ok} of {samples} sampled (V,t)"),
        start,
    );
    verdict.residual_terms = bad;
    verdict
}
