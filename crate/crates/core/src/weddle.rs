//! Six-point configurations, the quadrics through them, the Weddle
//! determinant, the symmetroid, and the `S*` system with the identity
//! `c^2 T(S*(X)) = -W_{1,q}(X)^2`.

use std::collections::HashMap;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

use crate::algebra::{rat, MultiPoly, PolyMatrix, Rational, RationalMatrix};
use crate::cayley_menger::{cm_value, EdgeTuple};
use crate::error::{Error, Result};
use crate::sampling;
use crate::tetrahedroid::{t_polynomial, t_symbolic, ProjPoint4, TetraParams, X_VARS};
use crate::verdict::{Status, Verdict};

/// Coordinates of the six-point space.
pub const POINT_VARS: [&str; 4] = ["x1", "x2", "x3", "x4"];
/// Coordinates of the `S*` system.
pub const S_STAR_VARS: [&str; 4] = ["X1", "X2", "X3", "X4"];
/// Coordinates of the symmetroid pencil.
pub const PENCIL_VARS: [&str; 4] = ["z1", "z2", "z3", "z4"];

fn var(names: &[&str; 4], i: usize) -> MultiPoly {
    MultiPoly::symbol(names[i])
}

/// `(q1, q2, q3, q4)`.
pub fn q_vector(params: &TetraParams) -> [MultiPoly; 4] {
    let (a, b, c) = (&params.a, &params.b, &params.c);
    [
        (a + b - c) * (a - b + c),
        -((a + b + c) * (b + c - a)),
        -((b + c - a) * (a + b - c)),
        (a + b + c) * (a - b + c),
    ]
}

pub fn q_vector_values(a: &Rational, b: &Rational, c: &Rational) -> [Rational; 4] {
    [
        (a + b - c) * (a - b + c),
        -((a + b + c) * (b + c - a)),
        -((b + c - a) * (a + b - c)),
        (a + b + c) * (a - b + c),
    ]
}

/// The four coordinate points together with `p` and `q`.
#[derive(Debug, Clone)]
pub struct SixPointConfig {
    pub p: [MultiPoly; 4],
    pub q: [MultiPoly; 4],
}

fn unit(i: usize) -> [MultiPoly; 4] {
    std::array::from_fn(|j| MultiPoly::from_int(i64::from(i == j)))
}

impl SixPointConfig {
    /// Rejects configurations with four coplanar points.
    pub fn new(p: [MultiPoly; 4], q: [MultiPoly; 4]) -> Result<Self> {
        let cfg = SixPointConfig { p, q };
        if let Some(quad) = cfg.coplanar_quadruple() {
            return Err(Error::DegenerateConfiguration(format!(
                "points {quad:?} are coplanar"
            )));
        }
        Ok(cfg)
    }

    pub fn from_ints(p: [i64; 4], q: [i64; 4]) -> Result<Self> {
        SixPointConfig::new(p.map(MultiPoly::from_int), q.map(MultiPoly::from_int))
    }

    /// `p = (1,1,1,1)`, `q = q_vector(a,b,c)`.
    pub fn tetrahedroid(params: &TetraParams) -> Result<Self> {
        SixPointConfig::new(std::array::from_fn(|_| MultiPoly::from_int(1)), q_vector(params))
    }

    /// Integer coordinates in `[-9, 9]`, rejection-sampled.
    pub fn random(rng: &mut impl Rng) -> Self {
        loop {
            let p = std::array::from_fn(|_| rng.gen_range(-9i64..=9));
            let q = std::array::from_fn(|_| rng.gen_range(-9i64..=9));
            if let Ok(cfg) = SixPointConfig::from_ints(p, q) {
                return cfg;
            }
        }
    }

    /// `e1, e2, e3, e4, p, q`.
    pub fn points(&self) -> [[MultiPoly; 4]; 6] {
        [unit(0), unit(1), unit(2), unit(3), self.p.clone(), self.q.clone()]
    }

    pub fn proj_points(&self) -> Vec<ProjPoint4> {
        self.points()
            .into_iter()
            .map(|c| ProjPoint4::new(c).expect("nonzero"))
            .collect()
    }

    /// First quadruple (in lexicographic order) with zero determinant.
    pub fn coplanar_quadruple(&self) -> Option<[usize; 4]> {
        let pts = self.points();
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    for l in k + 1..6 {
                        let m = PolyMatrix::from_rows(
                            [i, j, k, l].iter().map(|&r| pts[r].to_vec()).collect(),
                        )
                        .expect("4x4");
                        if m.determinant().expect("square").is_zero() {
                            return Some([i, j, k, l]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_numeric(&self) -> bool {
        self.p.iter().chain(&self.q).all(|c| c.constant_value().is_some())
    }
}

/// Exponent pairs `(i, j)`, `i <= j`, of the ten quadric monomials.
pub fn quadric_monomials() -> Vec<(usize, usize)> {
    (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect()
}

fn quadric_from_coefficients(coeffs: &[MultiPoly]) -> MultiPoly {
    quadric_monomials()
        .iter()
        .zip(coeffs)
        .map(|(&(i, j), c)| c * &var(&POINT_VARS, i) * var(&POINT_VARS, j))
        .sum()
}

/// Symmetric coefficient matrix: `x_i^2` coefficient on the diagonal, half
/// the `x_i x_j` coefficient off it.
pub fn symmetric_matrix(form: &MultiPoly, vars: &[&str; 4]) -> [[MultiPoly; 4]; 4] {
    let half = Rational::new(1.into(), 2.into());
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut e = [0u16; 4];
            e[i] += 1;
            e[j] += 1;
            let c = form.coefficient_of(vars, &e);
            if i == j {
                c
            } else {
                c.scale(&half)
            }
        })
    })
}

#[derive(Debug, Clone)]
pub struct QuadricBasis {
    pub forms: [MultiPoly; 4],
    pub matrices: [[[MultiPoly; 4]; 4]; 4],
}

impl QuadricBasis {
    fn from_forms(forms: [MultiPoly; 4]) -> Self {
        let matrices = std::array::from_fn(|k| symmetric_matrix(&forms[k], &POINT_VARS));
        QuadricBasis { forms, matrices }
    }

    pub fn vanishes_at(&self, point: &[MultiPoly; 4]) -> bool {
        let map = point_assignment(point);
        self.forms.iter().all(|f| f.substitute_some(&map).is_zero())
    }

    /// Rank of the 4x10 coefficient matrix, for numeric bases.
    pub fn rank(&self) -> Option<usize> {
        let rows: Option<Vec<Vec<Rational>>> = self
            .forms
            .iter()
            .map(|f| coefficient_row(f).into_iter().map(|c| c.constant_value()).collect())
            .collect();
        Some(RationalMatrix::from_rows(rows?).ok()?.rank())
    }
}

fn coefficient_row(form: &MultiPoly) -> Vec<MultiPoly> {
    quadric_monomials()
        .iter()
        .map(|&(i, j)| {
            let mut e = [0u16; 4];
            e[i] += 1;
            e[j] += 1;
            form.coefficient_of(&POINT_VARS, &e)
        })
        .collect()
}

fn point_assignment(point: &[MultiPoly; 4]) -> HashMap<String, MultiPoly> {
    POINT_VARS
        .iter()
        .zip(point)
        .map(|(v, c)| (v.to_string(), c.clone()))
        .collect()
}

/// The quadrics through the six points. Numeric configurations use the
/// kernel of the 6x10 evaluation matrix; symbolic ones use cross products
/// of the two rows left after the coordinate points kill the squares.
pub fn quadric_basis_through(cfg: &SixPointConfig) -> Result<QuadricBasis> {
    let basis = if cfg.is_numeric() {
        numeric_kernel_basis(cfg)?
    } else {
        symbolic_kernel_basis(cfg)?
    };
    for pt in cfg.points() {
        if !basis.vanishes_at(&pt) {
            return Err(Error::VerificationFailed(
                "quadric basis does not vanish at a configuration point".into(),
            ));
        }
    }
    Ok(basis)
}

fn numeric_kernel_basis(cfg: &SixPointConfig) -> Result<QuadricBasis> {
    let rows: Vec<Vec<Rational>> = cfg
        .points()
        .iter()
        .map(|pt| {
            let v: Vec<Rational> = pt.iter().map(|c| c.constant_value().expect("numeric")).collect();
            quadric_monomials().iter().map(|&(i, j)| &v[i] * &v[j]).collect()
        })
        .collect();
    let m = RationalMatrix::from_rows(rows)?;
    let kernel = m.kernel_basis();
    if kernel.len() != 4 {
        return Err(Error::DegenerateConfiguration(format!(
            "quadrics through the points form a space of dimension {}",
            kernel.len()
        )));
    }
    let forms: Vec<MultiPoly> = kernel
        .iter()
        .map(|k| {
            let c: Vec<MultiPoly> = k.iter().cloned().map(MultiPoly::from_rational).collect();
            quadric_from_coefficients(&c)
        })
        .collect();
    Ok(QuadricBasis::from_forms(forms.try_into().expect("four forms")))
}

fn symbolic_kernel_basis(cfg: &SixPointConfig) -> Result<QuadricBasis> {
    let pairs: Vec<(usize, usize)> = quadric_monomials().into_iter().filter(|(i, j)| i != j).collect();
    let u: Vec<MultiPoly> = pairs.iter().map(|&(i, j)| &cfg.p[i] * &cfg.p[j]).collect();
    let v: Vec<MultiPoly> = pairs.iter().map(|&(i, j)| &cfg.q[i] * &cfg.q[j]).collect();
    let minor = |k: usize, l: usize| &u[k] * &v[l] - &u[l] * &v[k];
    let (k, l) = (0..6)
        .flat_map(|k| (k + 1..6).map(move |l| (k, l)))
        .find(|&(k, l)| !minor(k, l).is_zero())
        .ok_or_else(|| Error::DegenerateConfiguration("p and q give dependent conditions".into()))?;
    let forms: Vec<MultiPoly> = (0..6)
        .filter(|&m| m != k && m != l)
        .map(|m| {
            // cross product of (u_k, u_l, u_m) and (v_k, v_l, v_m)
            let mut w = vec![MultiPoly::from_int(0); 6];
            w[k] = minor(l, m);
            w[l] = minor(m, k);
            w[m] = minor(k, l);
            pairs
                .iter()
                .zip(&w)
                .map(|(&(i, j), c)| c * &var(&POINT_VARS, i) * var(&POINT_VARS, j))
                .sum()
        })
        .collect();
    Ok(QuadricBasis::from_forms(forms.try_into().expect("four forms")))
}

/// `det(x_i^2, p_i x_i, q_i x_i, p_i q_i)`.
pub fn weddle_determinant(p: &[MultiPoly; 4], q: &[MultiPoly; 4], vars: &[&str; 4]) -> MultiPoly {
    let rows = (0..4)
        .map(|i| {
            let x = var(vars, i);
            vec![x.square(), &p[i] * &x, &q[i] * &x, &p[i] * &q[i]]
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("4x4").determinant().expect("square")
}

/// `det(dS_i / dx_j)`.
pub fn jacobian(basis: &QuadricBasis) -> MultiPoly {
    let rows = basis
        .forms
        .iter()
        .map(|f| {
            POINT_VARS
                .iter()
                .map(|v| f.partial_derivative(v).unwrap_or_else(|_| MultiPoly::from_int(0)))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("4x4").determinant().expect("square")
}

/// `(num, den)` with `den * lhs = num * rhs`, comparing at the leading
/// monomial of `rhs` in `vars`. `None` if not proportional or either is zero.
pub fn proportionality<S: AsRef<str>>(
    lhs: &MultiPoly,
    rhs: &MultiPoly,
    vars: &[S],
) -> Option<(MultiPoly, MultiPoly)> {
    if lhs.is_zero() || rhs.is_zero() {
        return None;
    }
    let names: Vec<&str> = vars.iter().map(AsRef::as_ref).collect();
    let idx: Vec<Option<usize>> = names
        .iter()
        .map(|n| rhs.vars().iter().position(|v| v == n))
        .collect();
    let (m, _) = rhs.terms().next()?;
    let exps: Vec<u16> = idx.iter().map(|i| i.map(|i| m.exponents()[i]).unwrap_or(0)).collect();
    let num = lhs.coefficient_of(&names, &exps);
    let den = rhs.coefficient_of(&names, &exps);
    (!num.is_zero() && &den * lhs == &num * rhs).then_some((num, den))
}

#[derive(Debug, Clone)]
pub struct JacobianWeddle {
    pub jacobian: MultiPoly,
    pub weddle: MultiPoly,
    /// `JS = (scale_num / scale_den) * W`.
    pub scale_num: MultiPoly,
    pub scale_den: MultiPoly,
}

impl JacobianWeddle {
    pub fn scale_value(&self) -> Option<Rational> {
        Some(self.scale_num.constant_value()? / self.scale_den.constant_value()?)
    }
}

/// Proportionality of the Jacobian and the Weddle determinant.
pub fn jacobian_weddle(cfg: &SixPointConfig) -> Result<JacobianWeddle> {
    let basis = quadric_basis_through(cfg)?;
    let js = jacobian(&basis);
    let w = weddle_determinant(&cfg.p, &cfg.q, &POINT_VARS);
    if js.is_zero() || w.is_zero() {
        return Err(Error::DegenerateConfiguration(
            "Jacobian or Weddle determinant vanishes identically".into(),
        ));
    }
    let (num, den) = proportionality(&js, &w, &POINT_VARS).ok_or_else(|| {
        Error::VerificationFailed("Jacobian is not a multiple of the Weddle determinant".into())
    })?;
    Ok(JacobianWeddle {
        jacobian: js,
        weddle: w,
        scale_num: num,
        scale_den: den,
    })
}

pub fn jacobian_weddle_check(cfg: &SixPointConfig) -> Verdict {
    let start = Instant::now();
    match jacobian_weddle(cfg) {
        Ok(jw) => {
            let scale = match jw.scale_value() {
                Some(s) => s.to_string(),
                None => format!(
                    "a ratio of polynomials in the parameters with {} and {} terms",
                    jw.scale_num.term_count(),
                    jw.scale_den.term_count()
                ),
            };
            Verdict::from_bool("weddle.jacobian", true, format!("JS = {scale} * W"), start)
        }
        Err(e) => Verdict::from_bool("weddle.jacobian", false, e.to_string(), start),
    }
}

/// `det(z1 S1 + z2 S2 + z3 S3 + z4 S4)` with the symmetric-matrix convention.
pub fn symmetroid_quartic(basis: &QuadricBasis) -> MultiPoly {
    let z: [MultiPoly; 4] = std::array::from_fn(|k| var(&PENCIL_VARS, k));
    let rows = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| (0..4).map(|k| &z[k] * &basis.matrices[k][i][j]).sum())
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("4x4").determinant().expect("square")
}

/// Determinant of the numeric pencil at `z`.
pub fn pencil_determinant(basis: &QuadricBasis, z: &[Rational; 4]) -> Option<Rational> {
    let mut rows = vec![vec![Rational::zero(); 4]; 4];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            for (k, zk) in z.iter().enumerate() {
                *entry += zk * basis.matrices[k][i][j].constant_value()?;
            }
        }
    }
    RationalMatrix::from_rows(rows).ok()?.determinant().ok()
}

/// The general basis as printed, for span comparison.
pub fn printed_basis(p: &[MultiPoly; 4], q: &[MultiPoly; 4]) -> [MultiPoly; 4] {
    let [p1, p2, p3, p4] = p;
    let [q1, q2, q3, q4] = q;
    let x = |i: usize| var(&POINT_VARS, i - 1);
    let xx = |i: usize, j: usize| x(i) * x(j);
    [
        (p4 * q3 - p3 * q4) * xx(1, 2) + (p2 * q4 - p4 * q2) * xx(1, 3) + (p3 * q2 - p2 * q3) * xx(1, 4),
        p3 * q3 * (p2 * q1 - p1 * q2) * xx(1, 2)
            + p2 * q2 * (p1 * q3 - p3 * q1) * xx(1, 3)
            + p1 * q1 * (p3 * q2 - p2 * q3) * xx(2, 3),
        (p2 * q4 * q1 * q3 - p1 * p3 * q2 * q4) * xx(1, 2)
            + p2 * q2 * (p1 * q4 - p4 * q1) * xx(1, 3)
            + p1 * q1 * (p3 * q2 - p3 * q3) * xx(2, 4),
        p3 * q3 * (p4 * q1 - p1 * q4) * xx(1, 2)
            + (p1 * p2 * q3 * q4 - p3 * p4 * q1 * q2) * xx(1, 3)
            + q1 * (q2 - q3) * xx(3, 4),
    ]
}

/// Which printed forms vanish at `p`, at `q`, and lie in the computed span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedSpanReport {
    pub vanishes_at_p: [bool; 4],
    pub vanishes_at_q: [bool; 4],
    pub in_span: [bool; 4],
}

pub fn printed_span_report(cfg: &SixPointConfig) -> Result<PrintedSpanReport> {
    let basis = quadric_basis_through(cfg)?;
    let printed = printed_basis(&cfg.p, &cfg.q);
    let at = |pt: &[MultiPoly; 4]| -> [bool; 4] {
        let map = point_assignment(pt);
        std::array::from_fn(|k| printed[k].substitute_some(&map).is_zero())
    };
    let base_rows: Vec<Vec<MultiPoly>> = basis.forms.iter().map(coefficient_row).collect();
    let in_span = std::array::from_fn(|k| {
        let mut rows = base_rows.clone();
        rows.push(coefficient_row(&printed[k]));
        poly_rank(&rows) == 4
    });
    Ok(PrintedSpanReport {
        vanishes_at_p: at(&cfg.p),
        vanishes_at_q: at(&cfg.q),
        in_span,
    })
}

/// Rank over the fraction field by fraction-free elimination.
fn poly_rank(rows: &[Vec<MultiPoly>]) -> usize {
    let mut m: Vec<Vec<MultiPoly>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let (f, g) = (m[rank][col].clone(), m[r][col].clone());
            let pivot_row = m[rank].clone();
            for (x, p) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &*x * &f - p * &g;
            }
        }
        rank += 1;
    }
    rank
}

pub fn printed_basis_check(seed: u64) -> Verdict {
    let start = Instant::now();
    let mut rng = sampling::rng(seed, sampling::stream::CONFIGURATION);
    let cfg = SixPointConfig::random(&mut rng);
    match printed_span_report(&cfg) {
        Ok(r) => {
            let in_span = r.in_span.iter().filter(|&&b| b).count();
            let notes = format!(
                "printed S1..S4 vanish at p: {:?}, at q: {:?}, in span: {:?}",
                r.vanishes_at_p, r.vanishes_at_q, r.in_span
            );
            let (status, notes) = if in_span == 4 {
                (Status::Pass, notes)
            } else {
                (
                    Status::Corrected,
                    format!("{notes}; the kernel basis of the 6x10 system is used instead"),
                )
            };
            Verdict::new("weddle.printed_basis", status, 4 - in_span, notes, start)
        }
        Err(e) => Verdict::from_bool("weddle.printed_basis", false, e.to_string(), start),
    }
}

/// The four forms of the `S*` system in `X1..X4`.
#[derive(Debug, Clone)]
pub struct SStarSystem {
    pub forms: [MultiPoly; 4],
}

pub fn s_star_system(params: &TetraParams) -> SStarSystem {
    let (a, b, c) = (&params.a, &params.b, &params.c);
    let x = |i: usize| var(&S_STAR_VARS, i - 1);
    let xx = |i: usize, j: usize| x(i) * x(j);
    let (s, ma, mb, mc) = (a + b + c, b + c - a, a - b + c, a + b - c);
    let two = |p: &MultiPoly| p.scale(&rat(2));
    SStarSystem {
        forms: [
            two(&(xx(1, 2) - xx(3, 4))),
            &s * &xx(1, 3) - &ma * &xx(1, 4) - &mb * &xx(2, 3) - &mc * &xx(2, 4),
            -(two(a) * xx(1, 2)) + &s * &xx(1, 3) - &ma * &xx(1, 4) + &mb * &xx(2, 3) + &mc * &xx(2, 4)
                - two(a) * xx(3, 4),
            -(two(b) * xx(1, 2)) + &s * &xx(1, 3) + &ma * &xx(1, 4) - &mb * &xx(2, 3) + &mc * &xx(2, 4)
                - two(b) * xx(3, 4),
        ],
    }
}

impl SStarSystem {
    pub fn eval(&self, x: &[Rational; 4]) -> [Rational; 4] {
        let pt: Vec<(&str, Rational)> = S_STAR_VARS.iter().copied().zip(x.iter().cloned()).collect();
        std::array::from_fn(|k| self.forms[k].eval_at(&pt).expect("S* variables assigned"))
    }

    /// Assignment `X0..X3 -> S1*..S4*` into the quartic's variables.
    pub fn as_t_assignment(&self) -> HashMap<String, MultiPoly> {
        X_VARS
            .iter()
            .zip(&self.forms)
            .map(|(v, f)| (v.to_string(), f.clone()))
            .collect()
    }
}

/// `W_{1,q}(X)` in `X1..X4`.
pub fn weddle_one_q(params: &TetraParams) -> MultiPoly {
    let ones = std::array::from_fn(|_| MultiPoly::from_int(1));
    weddle_determinant(&ones, &q_vector(params), &S_STAR_VARS)
}

/// `c^2 T(S*(X))` and `W_{1,q}(X)` over symbolic `a, b, c`.
pub struct CentralSides {
    pub lhs: MultiPoly,
    pub w: MultiPoly,
}

pub fn central_sides() -> &'static CentralSides {
    static SIDES: OnceLock<CentralSides> = OnceLock::new();
    SIDES.get_or_init(|| {
        let p = TetraParams::symbolic();
        let s = s_star_system(&p);
        let lhs = p.c.square() * t_symbolic().substitute_some(&s.as_t_assignment());
        CentralSides {
            lhs,
            w: weddle_one_q(&p),
        }
    })
}

pub fn central_identity_check() -> Verdict {
    let start = Instant::now();
    let sides = central_sides();
    let residual = &sides.lhs + &sides.w.square();
    Verdict::from_residual(
        "weddle.central_identity",
        &residual,
        format!(
            "c^2 T(S*) has {} terms, W_(1,q) has {} terms",
            sides.lhs.term_count(),
            sides.w.term_count()
        ),
        start,
    )
}

/// Both sides at numeric parameters and `X`, computed without the symbolic
/// expansion.
pub fn central_identity_numeric(a: &Rational, b: &Rational, c: &Rational, x: &[Rational; 4]) -> (Rational, Rational) {
    let params = TetraParams {
        a: MultiPoly::from_rational(a.clone()),
        b: MultiPoly::from_rational(b.clone()),
        c: MultiPoly::from_rational(c.clone()),
    };
    let s = s_star_system(&params).eval(x);
    let t = t_polynomial(&params);
    let tv = t
        .eval_at(&[
            ("X0", s[0].clone()),
            ("X1", s[1].clone()),
            ("X2", s[2].clone()),
            ("X3", s[3].clone()),
        ])
        .expect("assigned");
    let w = weddle_value(&q_vector_values(a, b, c), x);
    (c * c * tv, -(&w * &w))
}

/// `W_{1,q}(x)` for numeric `q` and `x`.
pub fn weddle_value(q: &[Rational; 4], x: &[Rational; 4]) -> Rational {
    let rows = (0..4)
        .map(|i| vec![&x[i] * &x[i], x[i].clone(), &q[i] * &x[i], q[i].clone()])
        .collect();
    RationalMatrix::from_rows(rows)
        .expect("4x4")
        .determinant()
        .expect("square")
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-40i64..=40).into(), rng.gen_range(1i64..=12).into())
}

pub fn central_identity_sampling_check(seed: u64, samples: usize) -> Verdict {
    let start = Instant::now();
    let mut rng = sampling::rng(seed, sampling::stream::TETRAHEDROID);
    let points: Vec<([Rational; 3], [Rational; 4])> = (0..samples)
        .map(|_| {
            (
                std::array::from_fn(|_| random_rational(&mut rng)),
                std::array::from_fn(|_| random_rational(&mut rng)),
            )
        })
        .collect();
    let bad = points
        .par_iter()
        .filter(|(p, x)| {
            let (l, r) = central_identity_numeric(&p[0], &p[1], &p[2], x);
            l != r
        })
        .count();
    let mut v = Verdict::from_bool(
        "weddle.central_numeric",
        bad == 0,
        format!("{} of {} random rational points agree", samples - bad, samples),
        start,
    );
    v.residual_terms = bad;
    v
}

/// `-CM(a, b, S2*/S1*, c, S3*/S1*, S4*/S1*) = (W / (c S1*^2))^2`.
pub fn bridge_identity(a: &Rational, b: &Rational, c: &Rational, x: &[Rational; 4]) -> Option<(Rational, Rational)> {
    let params = TetraParams {
        a: MultiPoly::from_rational(a.clone()),
        b: MultiPoly::from_rational(b.clone()),
        c: MultiPoly::from_rational(c.clone()),
    };
    let s = s_star_system(&params).eval(x);
    if s[0].is_zero() || c.is_zero() {
        return None;
    }
    let e = EdgeTuple::new([
        a.clone(),
        b.clone(),
        &s[1] / &s[0],
        c.clone(),
        &s[2] / &s[0],
        &s[3] / &s[0],
    ]);
    let w = weddle_value(&q_vector_values(a, b, c), x);
    let y = w / (c * &s[0] * &s[0]);
    Some((-cm_value(&e), &y * &y))
}

pub fn q_vector_check() -> Verdict {
    let start = Instant::now();
    let p = TetraParams::symbolic();
    let [q1, q2, q3, q4] = q_vector(&p);
    let h = crate::cayley_menger::heron_eval(&p.a, &p.b, &p.c);
    let residual = (&q1 * &q2 - &q3 * &q4).square() + (&q1 * &q2 + &h).square();
    let mut v = Verdict::from_residual("weddle.q_vector", &residual, "q1q2 - q3q4 and q1q2 + H".into(), start);
    if q_vector_values(&rat(3), &rat(4), &rat(5)) != [rat(8), rat(-72), rat(-12), rat(48)] {
        v.fail("q(3,4,5) differs from (8,-72,-12,48)");
    }
    v
}

pub fn random_jacobian_check(seed: u64, configs: usize) -> Verdict {
    let start = Instant::now();
    let mut rng = sampling::rng(seed, sampling::stream::CONFIGURATION);
    let cfgs: Vec<SixPointConfig> = (0..configs).map(|_| SixPointConfig::random(&mut rng)).collect();
    let failures: Vec<String> = cfgs
        .par_iter()
        .filter_map(|cfg| {
            let ok = jacobian_weddle(cfg).is_ok_and(|jw| jw.scale_value().is_some_and(|s| !s.is_zero()))
                && cfg
                    .points()
                    .iter()
                    .all(|pt| weddle_determinant(&cfg.p, &cfg.q, &POINT_VARS).substitute_some(&point_assignment(pt)).is_zero());
            (!ok).then(|| format!("{:?}", cfg.p))
        })
        .collect();
    let mut v = Verdict::from_bool(
        "weddle.jacobian_random",
        failures.is_empty(),
        format!("JS proportional to W on {} of {} random configurations", configs - failures.len(), configs),
        start,
    );
    v.residual_terms = failures.len();
    v
}

pub fn symbolic_jacobian_check() -> Verdict {
    let start = Instant::now();
    let cfg = match SixPointConfig::tetrahedroid(&TetraParams::symbolic()) {
        Ok(c) => c,
        Err(e) => return Verdict::from_bool("weddle.jacobian_tetrahedroid", false, e.to_string(), start),
    };
    let mut v = jacobian_weddle_check(&cfg);
    v.check = "weddle.jacobian_tetrahedroid".into();
    v.elapsed_ms = start.elapsed().as_millis() as u64;
    v
}

pub fn symmetroid_check(seed: u64, evaluations: usize) -> Verdict {
    let start = Instant::now();
    let mut rng = sampling::rng(seed, sampling::stream::CONFIGURATION);
    let cfg = SixPointConfig::random(&mut rng);
    let basis = match quadric_basis_through(&cfg) {
        Ok(b) => b,
        Err(e) => return Verdict::from_bool("weddle.symmetroid", false, e.to_string(), start),
    };
    let quartic = symmetroid_quartic(&basis);
    let mut bad = 0;
    for _ in 0..evaluations {
        let z: [Rational; 4] = std::array::from_fn(|_| random_rational(&mut rng));
        let pt: Vec<(&str, Rational)> = PENCIL_VARS.iter().copied().zip(z.iter().cloned()).collect();
        if Some(quartic.eval_at(&pt).expect("assigned")) != pencil_determinant(&basis, &z) {
            bad += 1;
        }
    }
    let degree = quartic.homogeneous_degree_in(&PENCIL_VARS);
    let ok = bad == 0 && degree == Some(4) && !quartic.is_zero() && basis.rank() == Some(4);
    let mut v = Verdict::from_bool(
        "weddle.symmetroid",
        ok,
        format!(
            "quartic of degree {} with {} terms; pencil agrees at {} of {} points",
            degree.map_or("none".to_string(), |d| d.to_string()),
            quartic.term_count(),
            evaluations - bad,
            evaluations
        ),
        start,
    );
    v.residual_terms = bad;
    v
}

pub fn s_star_regression_check() -> Verdict {
    let start = Instant::now();
    let p = TetraParams::numeric(rat(3), rat(4), rat(5)).expect("nondegenerate");
    let x = [rat(1), rat(2), rat(3), rat(4)];
    let s = s_star_system(&p).eval(&x);
    let w = weddle_value(&q_vector_values(&rat(3), &rat(4), &rat(5)), &x);
    let ones = s_star_system(&p).eval(&[rat(1), rat(1), rat(1), rat(1)]);
    let ok = s == [rat(-20), rat(-28), rat(-32), rat(-60)] && w == rat(53760) && ones[0].is_zero();
    Verdict::from_bool(
        "weddle.s_star_values",
        ok,
        format!(
            "S*(1,2,3,4) at (3,4,5) = ({}, {}, {}, {}), W = {}",
            s[0], s[1], s[2], s[3], w
        ),
        start,
    )
}

pub fn bridge_check(seed: u64, samples: usize) -> Verdict {
    let start = Instant::now();
    let mut rng = sampling::rng(seed, sampling::stream::POINTS);
    let mut tested = 0;
    let mut bad = 0;
    while tested < samples {
        let p: [Rational; 3] = std::array::from_fn(|_| random_rational(&mut rng));
        let x: [Rational; 4] = std::array::from_fn(|_| random_rational(&mut rng));
        if let Some((l, r)) = bridge_identity(&p[0], &p[1], &p[2], &x) {
            tested += 1;
            bad += usize::from(l != r);
        }
    }
    let mut v = Verdict::from_bool(
        "weddle.bridge",
        bad == 0,
        format!("-CM(a,b,S2*/S1*,c,S3*/S1*,S4*/S1*) = (W/(c S1*^2))^2 at {} of {} points", samples - bad, samples),
        start,
    );
    v.residual_terms = bad;
    v
}

/// Every check of this module, in a fixed order.
pub fn all_checks(seed: u64) -> Vec<Verdict> {
    vec![
        q_vector_check(),
        random_jacobian_check(seed, 20),
        symbolic_jacobian_check(),
        symmetroid_check(seed, 50),
        printed_basis_check(seed),
        s_star_regression_check(),
        central_identity_check(),
        central_identity_sampling_check(seed, 100),
        bridge_check(seed, 100),
    ]
}

/// `W_{p,q}` scaled: rescaling `p` and `q` by nonzero factors changes `W` by
/// a constant.
pub fn rescaled_weddle_is_proportional(cfg: &SixPointConfig, sp: &Rational, sq: &Rational) -> bool {
    let w = weddle_determinant(&cfg.p, &cfg.q, &POINT_VARS);
    let p2 = cfg.p.clone().map(|c| c.scale(sp));
    let q2 = cfg.q.clone().map(|c| c.scale(sq));
    let w2 = weddle_determinant(&p2, &q2, &POINT_VARS);
    proportionality(&w2, &w, &POINT_VARS).is_some()
}

impl SixPointConfig {
    /// `p` and `q` as rationals, for numeric configurations.
    pub fn values(&self) -> Option<([Rational; 4], [Rational; 4])> {
        let f = |v: &[MultiPoly; 4]| -> Option<[Rational; 4]> {
            let r: Vec<Rational> = v.iter().map(MultiPoly::constant_value).collect::<Option<_>>()?;
            r.try_into().ok()
        };
        Some((f(&self.p)?, f(&self.q)?))
    }
}
