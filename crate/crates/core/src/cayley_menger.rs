//! Cayley-Menger and Heron polynomials, the Neiss identity, the Ankum/Schulz
//! shift and realizability of edge tuples.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::{
    is_perfect_square_rational, parse_rational, rat, MultiPoly, PolyMatrix, Rational,
    RationalMatrix,
};
use crate::error::{Error, Result};
use crate::sampling;
use crate::verdict::Verdict;

/// Edge variables in argument order of `CM`.
pub const EDGE_VARS: [&str; 6] = ["d12", "d13", "d14", "d23", "d24", "d34"];
/// Variables of the Heron polynomial.
pub const HERON_VARS: [&str; 3] = ["a", "b", "c"];
/// Shift variable of the Ankum/Schulz expansions.
pub const SHIFT_VAR: &str = "s";

/// Six edge lengths in the order `(d12, d13, d14, d23, d24, d34)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeTuple {
    pub d: [Rational; 6],
}

/// The four triangular faces of a tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Face {
    #[serde(rename = "123")]
    F123,
    #[serde(rename = "124")]
    F124,
    #[serde(rename = "134")]
    F134,
    #[serde(rename = "234")]
    F234,
}

impl Face {
    pub const ALL: [Face; 4] = [Face::F123, Face::F124, Face::F134, Face::F234];

    pub fn label(self) -> &'static str {
        match self {
            Face::F123 => "123",
            Face::F124 => "124",
            Face::F134 => "134",
            Face::F234 => "234",
        }
    }

    /// Positions in [`EDGE_VARS`] of the face's sides.
    pub fn edge_indices(self) -> [usize; 3] {
        match self {
            Face::F123 => [0, 1, 3],
            Face::F124 => [0, 2, 4],
            Face::F134 => [1, 2, 5],
            Face::F234 => [3, 4, 5],
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTriple {
    pub face: Face,
    pub sides: [Rational; 3],
}

impl FaceTriple {
    pub fn heron(&self) -> Rational {
        heron_eval(&self.sides[0], &self.sides[1], &self.sides[2])
    }
}

impl EdgeTuple {
    pub fn new(d: [Rational; 6]) -> Self {
        EdgeTuple { d }
    }

    pub fn from_ints(d: [i64; 6]) -> Self {
        EdgeTuple { d: d.map(rat) }
    }

    /// Parses six `p/q` strings.
    pub fn parse<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != 6 {
            return Err(Error::InvalidArgument(format!(
                "expected 6 edge lengths, got {}",
                parts.len()
            )));
        }
        let mut d: [Rational; 6] = Default::default();
        for (slot, p) in d.iter_mut().zip(parts) {
            *slot = parse_rational(p.as_ref())?;
        }
        Ok(EdgeTuple { d })
    }

    pub fn to_strings(&self) -> [String; 6] {
        self.d.clone().map(|r| r.to_string())
    }

    pub fn face(&self, face: Face) -> FaceTriple {
        let [i, j, k] = face.edge_indices();
        FaceTriple {
            face,
            sides: [self.d[i].clone(), self.d[j].clone(), self.d[k].clone()],
        }
    }

    pub fn face_herons(&self) -> [Rational; 4] {
        Face::ALL.map(|f| self.face(f).heron())
    }

    /// Adds `s` to `d14`, `d24` and `d34`.
    pub fn shifted(&self, s: &Rational) -> EdgeTuple {
        let mut d = self.d.clone();
        for i in [2, 4, 5] {
            d[i] += s;
        }
        EdgeTuple { d }
    }

    /// Assignment `d_ij -> value` for polynomial evaluation.
    pub fn assignment(&self) -> HashMap<String, Rational> {
        EDGE_VARS
            .iter()
            .zip(&self.d)
            .map(|(v, x)| (v.to_string(), x.clone()))
            .collect()
    }

    pub fn squares(&self) -> [Rational; 6] {
        self.d.clone().map(|x| &x * &x)
    }
}

impl fmt::Display for EdgeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

/// `CM` as a cubic in the squared lengths `u_ij = d_ij^2`.
pub fn cm_from_squares<T>(u: &[T; 6]) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let [u12, u13, u14, u23, u24, u34] = u.clone();
    // the 22 monomials: 12 positive, 10 negative
    let t = |a: &T, b: &T, c: &T| a.clone() * b.clone() * c.clone();
    let pos = t(&u12, &u13, &u24)
        + t(&u12, &u13, &u34)
        + t(&u12, &u14, &u23)
        + t(&u12, &u14, &u34)
        + t(&u12, &u23, &u34)
        + t(&u12, &u24, &u34)
        + t(&u13, &u14, &u23)
        + t(&u13, &u14, &u24)
        + t(&u13, &u23, &u24)
        + t(&u13, &u24, &u34)
        + t(&u14, &u23, &u24)
        + t(&u14, &u23, &u34);
    let neg = t(&u12, &u12, &u34)
        + t(&u12, &u13, &u23)
        + t(&u12, &u14, &u24)
        + t(&u12, &u34, &u34)
        + t(&u13, &u13, &u24)
        + t(&u13, &u14, &u34)
        + t(&u13, &u24, &u24)
        + t(&u14, &u14, &u23)
        + t(&u14, &u23, &u23)
        + t(&u23, &u24, &u34);
    pos - neg
}

/// `CM(d)` evaluated from the closed form.
pub fn cm_value(d: &EdgeTuple) -> Rational {
    cm_from_squares(&d.squares())
}

/// `CM(d)` as half the 5x5 bordered determinant, by fraction-free
/// elimination. Independent of [`cm_value`].
pub fn cm_value_by_determinant(d: &EdgeTuple) -> Rational {
    let u = d.squares();
    let z = Rational::zero();
    let o = Rational::one();
    let m = RationalMatrix::from_rows(vec![
        vec![z.clone(), o.clone(), o.clone(), o.clone(), o.clone()],
        vec![o.clone(), z.clone(), u[0].clone(), u[1].clone(), u[2].clone()],
        vec![o.clone(), u[0].clone(), z.clone(), u[3].clone(), u[4].clone()],
        vec![o.clone(), u[1].clone(), u[3].clone(), z.clone(), u[5].clone()],
        vec![o, u[2].clone(), u[4].clone(), u[5].clone(), z],
    ])
    .expect("5x5");
    m.determinant().expect("square") / rat(2)
}

/// Heron function `H(a,b,c) = 2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4`.
pub fn heron_eval<T>(a: &T, b: &T, c: &T) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let a2 = a.clone() * a.clone();
    let b2 = b.clone() * b.clone();
    let c2 = c.clone() * c.clone();
    let two_ab = a2.clone() * b2.clone() + a2.clone() * b2.clone();
    let two_bc = b2.clone() * c2.clone() + b2.clone() * c2.clone();
    let two_ca = c2.clone() * a2.clone() + c2.clone() * a2.clone();
    two_ab + two_bc + two_ca - a2.clone() * a2 - b2.clone() * b2 - c2.clone() * c2
}

fn edge_var(name: &str) -> MultiPoly {
    MultiPoly::var(&EDGE_VARS, name).expect("edge variable")
}

fn sq(p: &MultiPoly) -> MultiPoly {
    p.square()
}

/// The bordered matrix whose determinant is `CM_0`.
pub fn cm_matrix(x: &[MultiPoly; 6]) -> PolyMatrix {
    let o = || MultiPoly::from_int(1);
    let z = || MultiPoly::from_int(0);
    let u: Vec<MultiPoly> = x.iter().map(sq).collect();
    PolyMatrix::from_rows(vec![
        vec![z(), o(), o(), o(), o()],
        vec![o(), z(), u[0].clone(), u[1].clone(), u[2].clone()],
        vec![o(), u[0].clone(), z(), u[3].clone(), u[4].clone()],
        vec![o(), u[1].clone(), u[3].clone(), z(), u[5].clone()],
        vec![o(), u[2].clone(), u[4].clone(), u[5].clone(), z()],
    ])
    .expect("5x5")
}

fn edge_symbols() -> [MultiPoly; 6] {
    EDGE_VARS.map(edge_var)
}

/// `CM_0`, the expanded 5x5 bordered determinant.
pub fn cm0_polynomial() -> &'static MultiPoly {
    static CM0: OnceLock<MultiPoly> = OnceLock::new();
    CM0.get_or_init(|| {
        cm_matrix(&edge_symbols())
            .determinant()
            .expect("square")
    })
}

/// `CM = CM_0 / 2` in the six edge variables.
pub fn cm_polynomial() -> &'static MultiPoly {
    static CM: OnceLock<MultiPoly> = OnceLock::new();
    CM.get_or_init(|| cm0_polynomial().scale(&Rational::new(1.into(), 2.into())))
}

/// `CM(x12, ..., x34)` for arbitrary polynomial arguments.
pub fn cm_of(args: &[MultiPoly; 6]) -> MultiPoly {
    let map: HashMap<String, MultiPoly> = EDGE_VARS
        .iter()
        .zip(args)
        .map(|(v, p)| (v.to_string(), p.clone()))
        .collect();
    cm_polynomial().substitute(&map).expect("all edges assigned")
}

/// `H(x, y, z)` as minus the 4x4 bordered determinant.
pub fn heron_determinant(x: &MultiPoly, y: &MultiPoly, z: &MultiPoly) -> MultiPoly {
    let o = || MultiPoly::from_int(1);
    let n = || MultiPoly::from_int(0);
    let (x2, y2, z2) = (sq(x), sq(y), sq(z));
    // Rows as printed for H(x12, x23, x13): the third argument sits at (1,3).
    let m = PolyMatrix::from_rows(vec![
        vec![n(), o(), o(), o()],
        vec![o(), n(), x2.clone(), z2.clone()],
        vec![o(), x2, n(), y2.clone()],
        vec![o(), z2, y2, n()],
    ])
    .expect("4x4");
    -m.determinant().expect("square")
}

/// `(a+b+c)(a+b-c)(a-b+c)(-a+b+c)`.
pub fn heron_product(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> MultiPoly {
    (a + b + c) * (a + b - c) * (a - b + c) * (b + c - a)
}

/// Heron polynomial in `a, b, c` (quartic form).
pub fn heron_polynomial() -> MultiPoly {
    let [a, b, c] = HERON_VARS.map(|v| MultiPoly::var(&HERON_VARS, v).unwrap());
    heron_eval(&a, &b, &c)
}

/// `H` on arbitrary polynomial arguments.
pub fn heron_of(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> MultiPoly {
    heron_eval(a, b, c)
}

/// The 4x4 determinant `D12` exactly as printed (last row
/// `1, d13^2, d23^2, d34^2`).
pub fn d12_matrix(x: &[MultiPoly; 6]) -> PolyMatrix {
    let o = || MultiPoly::from_int(1);
    let z = || MultiPoly::from_int(0);
    let u: Vec<MultiPoly> = x.iter().map(sq).collect();
    PolyMatrix::from_rows(vec![
        vec![z(), o(), o(), o()],
        vec![o(), z(), u[0].clone(), u[2].clone()],
        vec![o(), u[0].clone(), z(), u[4].clone()],
        vec![o(), u[1].clone(), u[3].clone(), u[5].clone()],
    ])
    .expect("4x4")
}

pub fn d12_polynomial() -> &'static MultiPoly {
    static D12: OnceLock<MultiPoly> = OnceLock::new();
    D12.get_or_init(|| d12_matrix(&edge_symbols()).determinant().expect("square"))
}

/// Residual `H(d12,d13,d23) H(d12,d24,d14) - D12^2 - (2 d12)^2 CM`.
pub fn neiss_residual() -> MultiPoly {
    let [d12, d13, d14, d23, d24, _] = edge_symbols();
    let lhs = heron_of(&d12, &d13, &d23) * heron_of(&d12, &d24, &d14);
    let d = d12_polynomial();
    let four_d12_sq = d12.square().scale(&rat(4));
    lhs - d.square() - four_d12_sq * cm_polynomial()
}

/// Coefficients of the shift `d14, d24, d34 -> +s` of `CM` and `D12`, as
/// polynomials in the edge variables, indexed by the power of `s`.
#[derive(Debug, Clone)]
pub struct ShiftExpansion {
    pub cm_coefficients: Vec<MultiPoly>,
    pub d12_coefficients: Vec<MultiPoly>,
}

pub fn shift_expansion() -> &'static ShiftExpansion {
    static EXP: OnceLock<ShiftExpansion> = OnceLock::new();
    EXP.get_or_init(|| {
        let mut vars: Vec<&str> = EDGE_VARS.to_vec();
        vars.push(SHIFT_VAR);
        let s = MultiPoly::var(&vars, SHIFT_VAR).unwrap();
        let mut map = HashMap::new();
        for (i, v) in EDGE_VARS.iter().enumerate() {
            let x = MultiPoly::var(&vars, v).unwrap();
            let img = if [2, 4, 5].contains(&i) { &x + &s } else { x };
            map.insert(v.to_string(), img);
        }
        let cm_s = cm_polynomial().substitute(&map).expect("assigned");
        let d_s = d12_polynomial().substitute(&map).expect("assigned");
        ShiftExpansion {
            cm_coefficients: cm_s.coefficients_in(SHIFT_VAR),
            d12_coefficients: d_s.coefficients_in(SHIFT_VAR),
        }
    })
}

/// `CM(shifted) = alpha s^2 + beta s + gamma`, `D12(shifted) = A s + B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftQuadratic<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub a: T,
    pub b: T,
}

impl<T> ShiftQuadratic<T> {
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> ShiftQuadratic<U> {
        ShiftQuadratic {
            alpha: f(&self.alpha),
            beta: f(&self.beta),
            gamma: f(&self.gamma),
            a: f(&self.a),
            b: f(&self.b),
        }
    }
}

impl ShiftQuadratic<Rational> {
    /// `alpha s^2 + beta s + gamma`.
    pub fn cm_at(&self, s: &Rational) -> Rational {
        &self.alpha * s * s + &self.beta * s + &self.gamma
    }

    pub fn is_identically_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }
}

fn coefficient(list: &[MultiPoly], k: usize) -> MultiPoly {
    list.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(&EDGE_VARS))
}

/// Symbolic shift coefficients. Fails if the shifted `CM` has degree above
/// two or the shifted `D12` degree above one in `s`.
pub fn ankum_shift_symbolic() -> Result<ShiftQuadratic<MultiPoly>> {
    let e = shift_expansion();
    if e.cm_coefficients.len() > 3 || e.d12_coefficients.len() > 2 {
        return Err(Error::VerificationFailed(format!(
            "shift degrees {} (CM) and {} (D12)",
            e.cm_coefficients.len() - 1,
            e.d12_coefficients.len() - 1
        )));
    }
    Ok(ShiftQuadratic {
        alpha: coefficient(&e.cm_coefficients, 2),
        beta: coefficient(&e.cm_coefficients, 1),
        gamma: coefficient(&e.cm_coefficients, 0),
        a: coefficient(&e.d12_coefficients, 1),
        b: coefficient(&e.d12_coefficients, 0),
    })
}

/// Shift coefficients at a numeric edge tuple.
pub fn ankum_shift(d: &EdgeTuple) -> ShiftQuadratic<Rational> {
    static SYM: OnceLock<ShiftQuadratic<MultiPoly>> = OnceLock::new();
    let sym = SYM.get_or_init(|| ankum_shift_symbolic().expect("shift degrees verified"));
    let point = d.assignment();
    sym.map(|p| p.evaluate(&point).expect("edge variables assigned"))
}

/// `A` as printed: `-2((d12^2-d13^2+d23^2) d14^2 + (d12^2+d13^2-d23^2) d24^2
/// - 2 d12^2 d34^2)`.
pub fn schulz_a_printed() -> MultiPoly {
    schulz_a_with(2)
}

/// The same expression with `d14, d24, d34` to the first power, which is the
/// actual `s`-coefficient of the shifted `D12`.
pub fn schulz_a_corrected() -> MultiPoly {
    schulz_a_with(1)
}

fn schulz_a_with(power: u32) -> MultiPoly {
    let [d12, d13, d14, d23, d24, d34] = edge_symbols();
    let (u12, u13, u23) = (d12.square(), d13.square(), d23.square());
    let inner = (&u12 - &u13 + &u23) * d14.pow(power) + (&u12 + &u13 - &u23) * d24.pow(power)
        - (&u12 * &d34.pow(power)).scale(&rat(2));
    inner.scale(&rat(-2))
}

/// Result of [`realizability`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub cm_value: Rational,
    pub face_heron: [Rational; 4],
    pub realizable: bool,
    pub degenerate: bool,
    /// `y / 12` when `CM = y^2` for a rational `y >= 0`.
    pub volume: Option<Rational>,
}

/// Sign conditions of the 3- and 4-point Cayley-Menger determinants.
pub fn realizability(d: &EdgeTuple) -> Result<RealizabilityReport> {
    if let Some(neg) = d.d.iter().find(|x| x.is_negative()) {
        return Err(Error::NegativeLength(neg.to_string()));
    }
    let cm = cm_value(d);
    let face_heron = d.face_herons();
    let faces_positive = face_heron.iter().all(Signed::is_positive);
    let faces_nonnegative = face_heron.iter().all(|h| !h.is_negative());
    let realizable = faces_positive && cm.is_positive();
    let degenerate = cm.is_zero() && faces_nonnegative;
    let volume = is_perfect_square_rational(&cm).map(|y| y / rat(12));
    Ok(RealizabilityReport {
        cm_value: cm,
        face_heron,
        realizable,
        degenerate,
        volume,
    })
}

// ---- verdicts ----

pub fn cm_expansion_check() -> Verdict {
    let start = Instant::now();
    let cm = cm_polynomial();
    let cm0 = cm0_polynomial();
    let coeffs = cm.coefficient_set();
    let coeffs0 = cm0.coefficient_set();
    let ok = cm.term_count() == 22
        && coeffs == vec![rat(-1), rat(1)]
        && coeffs0 == vec![rat(-2), rat(2)]
        && cm.homogeneous_degree_in(&EDGE_VARS) == Some(6)
        && cm_value(&EdgeTuple::from_ints([1; 6])) == rat(2);
    let notes = format!(
        "{} monomials, coefficients {{{}}}, CM0 coefficients {{{}}}",
        cm.term_count(),
        join(&coeffs),
        join(&coeffs0)
    );
    Verdict::from_bool("cm.expansion", ok, notes, start)
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

pub fn heron_forms_check() -> Verdict {
    let start = Instant::now();
    let [a, b, c] = HERON_VARS.map(|v| MultiPoly::var(&HERON_VARS, v).unwrap());
    let det = heron_determinant(&a, &c, &b);
    let quartic = heron_polynomial();
    let product = heron_product(&a, &b, &c);
    let residual = (&det - &quartic) + (&quartic - &product).scale(&rat(3));
    let mut v = Verdict::from_residual(
        "cm.heron_forms",
        &residual,
        "determinant = quartic = four-factor product".into(),
        start,
    );
    if heron_eval(&rat(3), &rat(4), &rat(5)) != rat(576) {
        v.fail("H(3,4,5) != 576");
    }
    v
}

/// `(12V)^2 = CM` for a tetrahedron with symbolic coordinates
/// `0, (x1,0,0), (x2,y2,0), (x3,y3,z3)`.
pub fn lagrange_volume_check() -> Verdict {
    let start = Instant::now();
    let vars = ["x1", "x2", "y2", "x3", "y3", "z3"];
    let v = |n: &str| MultiPoly::var(&vars, n).unwrap();
    let zero = MultiPoly::zero(&vars);
    let pts = [
        [zero.clone(), zero.clone(), zero.clone()],
        [v("x1"), zero.clone(), zero.clone()],
        [v("x2"), v("y2"), zero.clone()],
        [v("x3"), v("y3"), v("z3")],
    ];
    let dist2 = |i: usize, j: usize| -> MultiPoly {
        (0..3).map(|k| (&pts[i][k] - &pts[j][k]).square()).sum()
    };
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let u: Vec<MultiPoly> = pairs.iter().map(|&(i, j)| dist2(i, j)).collect();
    let u: [MultiPoly; 6] = u.try_into().unwrap();
    let cm = cm_from_squares(&u);
    let twelve_v_sq = (v("x1") * v("y2") * v("z3")).square().scale(&rat(4));
    let residual = cm - twelve_v_sq;
    Verdict::from_residual(
        "cm.lagrange_volume",
        &residual,
        "(12V)^2 - CM over symbolic coordinates".into(),
        start,
    )
}

pub fn neiss_identity_check() -> Verdict {
    let start = Instant::now();
    let residual = neiss_residual();
    let mut v = Verdict::from_residual(
        "cm.neiss",
        &residual,
        "H(d12,d13,d23)H(d12,d24,d14) - D12^2 - (2d12)^2 CM with D12 as printed".into(),
        start,
    );
    for d in [[3, 5, 4, 4, 5, 3], [1, 1, 1, 1, 1, 1]] {
        let e = EdgeTuple::from_ints(d);
        if !residual.evaluate(&e.assignment()).unwrap().is_zero() {
            v.fail(&format!("numeric spot check failed at {e}"));
        }
    }
    v
}

pub fn ankum_degree_check() -> Verdict {
    let start = Instant::now();
    let e = shift_expansion();
    let high: MultiPoly = e.cm_coefficients.iter().skip(3).cloned().sum();
    let notes = format!(
        "shifted CM has degree {} in s; s^3 and s^4 coefficients vanish",
        e.cm_coefficients.len() - 1
    );
    Verdict::from_residual("cm.ankum_quadratic", &high, notes, start)
}

/// Linear shift of `D12`, compared with the printed and the corrected `A`.
pub fn schulz_linear_check() -> Verdict {
    let start = Instant::now();
    let e = shift_expansion();
    let mut v = if e.d12_coefficients.len() > 2 {
        let high: MultiPoly = e.d12_coefficients.iter().skip(2).cloned().sum();
        Verdict::from_residual("cm.schulz_linear", &high, "D12 shift not linear".into(), start)
    } else {
        let actual = coefficient(&e.d12_coefficients, 1);
        let printed = &actual - &schulz_a_printed();
        let corrected = &actual - &schulz_a_corrected();
        Verdict::corrected_or_fail(
            "cm.schulz_linear",
            &printed,
            &corrected,
            "printed A has d14^2, d24^2, d34^2 where the s-coefficient has d14, d24, d34",
            start,
        )
    };
    if e.d12_coefficients.len() > 2 {
        v.fail("shifted D12 has degree > 1");
    }
    v
}

/// Draws realizable integer tuples with edges in `1..=max_edge`.
pub fn sample_realizable(rng: &mut impl Rng, max_edge: i64) -> EdgeTuple {
    loop {
        let d = EdgeTuple::from_ints(std::array::from_fn(|_| rng.gen_range(1..=max_edge)));
        if realizability(&d).map(|r| r.realizable).unwrap_or(false) {
            return d;
        }
    }
}

/// Outcome of sampling the sign of the leading shift coefficient.
#[derive(Debug, Clone)]
pub struct LeadingSignSample {
    pub samples: usize,
    pub nonpositive: Vec<(EdgeTuple, Rational)>,
}

/// Edge range of the alpha sampling; the search bound of the acceptance run.
pub const ALPHA_SAMPLE_MAX_EDGE: i64 = 16;

pub fn sample_leading_sign(seed: u64, samples: usize) -> LeadingSignSample {
    let mut rng = sampling::rng(seed, sampling::stream::ALPHA);
    let mut nonpositive = Vec::new();
    for _ in 0..samples {
        let d = sample_realizable(&mut rng, ALPHA_SAMPLE_MAX_EDGE);
        let q = ankum_shift(&d);
        if !q.alpha.is_positive() {
            nonpositive.push((d, q.alpha));
        }
    }
    LeadingSignSample {
        samples,
        nonpositive,
    }
}

pub fn shift_leading_positive_check(seed: u64, samples: usize) -> Verdict {
    let start = Instant::now();
    let s = sample_leading_sign(seed, samples);
    let mut v = Verdict::from_bool(
        "cm.shift_leading_positive",
        s.nonpositive.is_empty(),
        format!(
            "alpha > 0 on {} of {} realizable tuples with edges in 1..={}",
            s.samples - s.nonpositive.len(),
            s.samples,
            ALPHA_SAMPLE_MAX_EDGE
        ),
        start,
    );
    if let Some((d, a)) = s.nonpositive.first() {
        v.notes.push_str(&format!("; first counterexample {d} with alpha = {a}"));
        v.residual_terms = s.nonpositive.len();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn cm_closed_form_matches_polynomial() {
        let d = EdgeTuple::from_ints([3, 5, 7, 4, 6, 2]);
        assert_eq!(
            cm_polynomial().evaluate(&d.assignment()).unwrap(),
            cm_value(&d)
        );
        assert_eq!(cm_value(&d), cm_value_by_determinant(&d));
    }

    #[test]
    fn cm_examples() {
        assert_eq!(cm_polynomial().term_count(), 22);
        assert_eq!(cm_value(&EdgeTuple::from_ints([1; 6])), rat(2));
        assert_eq!(
            cm0_polynomial()
                .evaluate(&EdgeTuple::from_ints([1; 6]).assignment())
                .unwrap(),
            rat(4)
        );
    }

    #[test]
    fn heron_examples() {
        assert_eq!(heron_eval(&rat(3), &rat(4), &rat(5)), rat(576));
        assert_eq!(heron_eval(&rat(1), &rat(1), &rat(2)), rat(0));
        assert_eq!(heron_eval(&rat(1), &rat(1), &rat(1)), rat(3));
        let [a, b, c] = HERON_VARS.map(|v| MultiPoly::var(&HERON_VARS, v).unwrap());
        let det = heron_determinant(&rat_poly(3), &rat_poly(4), &rat_poly(5));
        assert_eq!(det.constant_value(), Some(rat(576)));
        assert_eq!(heron_product(&a, &b, &c), heron_polynomial());
    }

    fn rat_poly(n: i64) -> MultiPoly {
        MultiPoly::from_int(n)
    }

    #[test]
    fn heron_partial_derivative() {
        let h = heron_polynomial();
        let da = h.partial_derivative("a").unwrap();
        let v = da
            .eval_at(&[("a", rat(3)), ("b", rat(4)), ("c", rat(5))])
            .unwrap();
        assert_eq!(v, rat(384));
        // central finite difference of a quartic in a: exact up to the h^2 term
        let f = |x: Rational| heron_eval(&x, &rat(4), &rat(5));
        let step = ratio(1, 1000);
        let fd = (f(rat(3) + &step) - f(rat(3) - &step)) / (rat(2) * &step);
        let err = (fd - rat(384)).abs();
        assert!(err < ratio(1, 1000));
    }

    #[test]
    fn realizability_examples() {
        let r = realizability(&EdgeTuple::from_ints([1; 6])).unwrap();
        assert!(r.realizable && !r.degenerate);
        assert_eq!(r.cm_value, rat(2));
        assert_eq!(r.volume, None);

        let r = realizability(&EdgeTuple::from_ints([3, 5, 4, 4, 5, 3])).unwrap();
        assert!(r.degenerate && !r.realizable);
        assert_eq!(r.volume, Some(rat(0)));

        let r = realizability(&EdgeTuple::from_ints([1, 1, 1, 1, 1, 3])).unwrap();
        assert!(!r.realizable);
        assert!(r.face_heron[2].is_negative());

        let neg = EdgeTuple::new([rat(-1), rat(1), rat(1), rat(1), rat(1), rat(1)]);
        assert!(matches!(realizability(&neg), Err(Error::NegativeLength(_))));
    }

    #[test]
    fn face_selection() {
        let d = EdgeTuple::from_ints([1, 2, 3, 4, 5, 6]);
        assert_eq!(d.face(Face::F123).sides, [rat(1), rat(2), rat(4)]);
        assert_eq!(d.face(Face::F124).sides, [rat(1), rat(3), rat(5)]);
        assert_eq!(d.face(Face::F134).sides, [rat(2), rat(3), rat(6)]);
        assert_eq!(d.face(Face::F234).sides, [rat(4), rat(5), rat(6)]);
    }

    #[test]
    fn shift_coefficients_at_examples() {
        let q = ankum_shift(&EdgeTuple::from_ints([3, 5, 4, 4, 5, 3]));
        assert_eq!((q.alpha.clone(), q.beta.clone(), q.gamma.clone()), (rat(368), rat(2304), rat(0)));
        let q = ankum_shift(&EdgeTuple::from_ints([1, 2, 3, 1, 2, 1]));
        assert!(q.is_identically_zero());
        let d = EdgeTuple::from_ints([2, 3, 4, 3, 3, 2]);
        let q = ankum_shift(&d);
        assert_eq!(q.gamma, cm_value(&d));
        for s in [rat(1), ratio(-2, 3), rat(5)] {
            assert_eq!(q.cm_at(&s), cm_value(&d.shifted(&s)));
        }
    }

    #[test]
    fn alpha_counterexample() {
        let d = EdgeTuple::from_ints([16, 28, 17, 13, 19, 28]);
        assert!(realizability(&d).unwrap().realizable);
        assert_eq!(ankum_shift(&d).alpha, rat(-15625));
    }

    #[test]
    fn verdicts_pass() {
        for v in [
            cm_expansion_check(),
            heron_forms_check(),
            lagrange_volume_check(),
            neiss_identity_check(),
            ankum_degree_check(),
        ] {
            assert!(v.is_pass(), "{v:?}");
        }
        assert!(schulz_linear_check().is_corrected());
    }
}
