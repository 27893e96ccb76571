use std::collections::HashMap;

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::rational::{rat, Rational};

/// `p = (scale_num / scale_den) * root^2`, with both scale polynomials free
/// of the main variables.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledSquare {
    pub scale_num: MultiPoly,
    pub scale_den: MultiPoly,
    pub root: MultiPoly,
}

impl ScaledSquare {
    /// Re-expands and compares with `p`.
    pub fn reproduces(&self, p: &MultiPoly) -> bool {
        p * &self.scale_den == &self.scale_num * &self.root.square()
    }

    /// The scale as a rational number, when it is one.
    pub fn scale_value(&self) -> Option<Rational> {
        let n = self.scale_num.constant_value()?;
        let d = self.scale_den.constant_value()?;
        (!d.is_zero()).then(|| n / d)
    }
}

/// Decides whether `p` is a constant times a perfect square, where
/// "constant" means free of the `main` variables (it may depend on the
/// others, which act as parameters).
///
/// `p` must be homogeneous of even degree in `main`; anything else is
/// reported as absent.
pub fn is_square_up_to_constant<S: AsRef<str>>(p: &MultiPoly, main: &[S]) -> Option<ScaledSquare> {
    let main: Vec<&str> = main.iter().map(AsRef::as_ref).collect();
    if p.is_zero() {
        return None;
    }
    let deg = p.homogeneous_degree_in(&main)?;
    if deg % 2 == 1 {
        return None;
    }
    if deg == 0 {
        return Some(ScaledSquare {
            scale_num: p.clone(),
            scale_den: MultiPoly::from_int(1),
            root: MultiPoly::from_int(1),
        });
    }
    let present: Vec<&str> = main.iter().copied().filter(|v| p.uses_var(v)).collect();

    // A main variable with a pure power term has a parameter-only leading
    // coefficient, which keeps the coefficient matching polynomial.
    if let Some(v) = present.iter().copied().find(|v| p.degree_in(v) == deg) {
        return square_root_in(p, v, deg);
    }

    // Otherwise shear x_j -> x_j + k_j * x_v to create one, then undo it.
    let v = present[0];
    let others: Vec<&str> = present.iter().copied().filter(|w| *w != v).collect();
    let x_v = MultiPoly::symbol(v);
    for trial in 1..=16i64 {
        let shifts: Vec<i64> = (0..others.len())
            .map(|j| (trial + 3 * j as i64) % 7 + 1)
            .collect();
        let forward = shear(&others, &x_v, &shifts, 1);
        let q = p.substitute_some(&forward);
        if q.degree_in(v) != deg {
            continue;
        }
        let found = square_root_in(&q, v, deg)?;
        let back = shear(&others, &x_v, &shifts, -1);
        let root = found.root.substitute_some(&back);
        let out = normalize_content(ScaledSquare { root, ..found });
        return out.reproduces(p).then_some(out);
    }
    None
}

fn shear(others: &[&str], x_v: &MultiPoly, shifts: &[i64], sign: i64) -> HashMap<String, MultiPoly> {
    others
        .iter()
        .zip(shifts)
        .map(|(w, &k)| {
            (
                w.to_string(),
                MultiPoly::symbol(w) + x_v.scale(&rat(sign * k)),
            )
        })
        .collect()
}

/// Fraction-free square root: with `g` the leading coefficient in `v`,
/// `g * p = R^2` where `R` has leading coefficient `g`, so each step only
/// divides by the parameter-only polynomial `2g`.
fn square_root_in(p: &MultiPoly, v: &str, deg: u32) -> Option<ScaledSquare> {
    let coeffs = p.coefficients_in(v);
    let n = deg as usize;
    let m = n / 2;
    let g = coeffs[n].clone();
    let gp: Vec<MultiPoly> = coeffs.iter().map(|c| c * &g).collect();
    let two_g = g.scale(&rat(2));
    // root[k] is the coefficient of v^k.
    let mut root: Vec<MultiPoly> = vec![MultiPoly::from_int(0); m + 1];
    root[m] = g.clone();
    for j in 1..=m {
        let mut rhs = gp[n - j].clone();
        for i in 1..j {
            rhs = rhs - &root[m - i] * &root[m - j + i];
        }
        root[m - j] = rhs.exact_div(&two_g)?;
    }
    let x_v = MultiPoly::symbol(v);
    let mut r = MultiPoly::from_int(0);
    for (k, c) in root.iter().enumerate() {
        r = r + c * &x_v.pow(k as u32);
    }
    let gp_total = p * &g;
    if r.square() != gp_total {
        return None;
    }
    // p = R^2 / g; prefer p = g * (R/g)^2 when R/g is a polynomial.
    let out = match r.exact_div(&g) {
        Some(q) => ScaledSquare {
            scale_num: g,
            scale_den: MultiPoly::from_int(1),
            root: q,
        },
        None => ScaledSquare {
            scale_num: MultiPoly::from_int(1),
            scale_den: g,
            root: r,
        },
    };
    Some(normalize_content(out))
}

/// Moves the rational content of the root into the scale.
fn normalize_content(s: ScaledSquare) -> ScaledSquare {
    let Some((_, lead)) = s.root.terms().next() else {
        return s;
    };
    let c = lead.clone();
    if c.is_one() || c.is_zero() {
        return s;
    }
    let inv = Rational::one() / &c;
    ScaledSquare {
        scale_num: s.scale_num.scale(&(&c * &c)),
        scale_den: s.scale_den,
        root: s.root.scale(&inv),
    }
}
