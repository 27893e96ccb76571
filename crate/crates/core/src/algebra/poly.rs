use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational;
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector, one entry per declared variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first declared variable, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A commutative ring the polynomials can be evaluated in.
pub trait Scalar: Clone + Add<Output = Self> + Mul<Output = Self> {
    fn scalar_zero() -> Self;
    fn scalar_one() -> Self;
    fn embed(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn scalar_zero() -> Self {
        Zero::zero()
    }
    fn scalar_one() -> Self {
        One::one()
    }
    fn embed(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for GaussianRational {
    fn scalar_zero() -> Self {
        GaussianRational::from_rational(Zero::zero())
    }
    fn scalar_one() -> Self {
        GaussianRational::from_rational(One::one())
    }
    fn embed(r: &Rational) -> Self {
        GaussianRational::from_rational(r.clone())
    }
}

/// Sparse multivariate polynomial with rational coefficients over a declared,
/// ordered list of variables.
///
/// Binary operations between polynomials over different variable lists work
/// over the union of the lists (left operand's order first). Equality compares
/// the polynomials as functions of named variables, so it does not depend on
/// the declared lists.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

fn var_list<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: var_list(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let vars = var_list(vars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars.len()), c);
        }
        MultiPoly { vars, terms }
    }

    /// A rational constant with no declared variables.
    pub fn from_rational(c: Rational) -> Self {
        MultiPoly::constant::<&str>(&[], c)
    }

    pub fn from_int(c: i64) -> Self {
        MultiPoly::from_rational(Rational::from_integer(c.into()))
    }

    /// The variable `name` as a polynomial over `vars`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let vars = var_list(vars);
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), Rational::one());
        Ok(MultiPoly { vars, terms })
    }

    /// A single-variable polynomial `name`.
    pub fn symbol(name: &str) -> Self {
        MultiPoly::var(&[name], name).expect("declared")
    }

    /// Builds from `(exponents, coefficient)` pairs; zero coefficients are
    /// dropped and repeated monomials summed.
    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<u16>, Rational)>,
    ) -> Result<Self> {
        let vars = var_list(vars);
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector of length {} for {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            add_term(&mut map, Monomial(exps), c);
        }
        Ok(MultiPoly { vars, terms: map })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is a constant.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Names of variables that occur with a positive exponent.
    pub fn support(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    pub fn uses_var(&self, name: &str) -> bool {
        self.index_of(name)
            .is_some_and(|i| self.terms.keys().any(|m| m.0[i] > 0))
    }

    /// True when none of `names` occurs.
    pub fn free_of<S: AsRef<str>>(&self, names: &[S]) -> bool {
        names.iter().all(|n| !self.uses_var(n.as_ref()))
    }

    /// Degree in `name`; zero for a declared-but-absent or undeclared
    /// variable.
    pub fn degree_in(&self, name: &str) -> u32 {
        match self.index_of(name) {
            Some(i) => self
                .terms
                .keys()
                .map(|m| u32::from(m.0[i]))
                .max()
                .unwrap_or(0),
            None => 0,
        }
    }

    /// Joint degree in a subset of the variables.
    pub fn degree_in_vars<S: AsRef<str>>(&self, names: &[S]) -> u32 {
        let idx: Vec<usize> = names
            .iter()
            .filter_map(|n| self.index_of(n.as_ref()))
            .collect();
        self.terms
            .keys()
            .map(|m| idx.iter().map(|&i| u32::from(m.0[i])).sum())
            .max()
            .unwrap_or(0)
    }

    /// `Some(d)` if every term has joint degree `d` in `names`.
    pub fn homogeneous_degree_in<S: AsRef<str>>(&self, names: &[S]) -> Option<u32> {
        let idx: Vec<usize> = names
            .iter()
            .filter_map(|n| self.index_of(n.as_ref()))
            .collect();
        let mut degs = self
            .terms
            .keys()
            .map(|m| idx.iter().map(|&i| u32::from(m.0[i])).sum::<u32>());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// Coefficients as a univariate polynomial in `name`: entry `k` is the
    /// coefficient of `name^k`, expressed over the same variable list.
    pub fn coefficients_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.index_of(name) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(name) as usize;
        let mut out: Vec<BTreeMap<Monomial, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut e = m.0.clone();
            e[i] = 0;
            out[k].insert(Monomial(e), c.clone());
        }
        out.into_iter()
            .map(|terms| MultiPoly {
                vars: self.vars.clone(),
                terms,
            })
            .collect()
    }

    /// Coefficient (a polynomial in the remaining variables) of the monomial
    /// in `names` with the given exponents.
    pub fn coefficient_of<S: AsRef<str>>(&self, names: &[S], exps: &[u16]) -> MultiPoly {
        let idx: Vec<Option<usize>> = names.iter().map(|n| self.index_of(n.as_ref())).collect();
        let mut terms = BTreeMap::new();
        'outer: for (m, c) in &self.terms {
            let mut e = m.0.clone();
            for (k, slot) in idx.iter().enumerate() {
                let want = exps[k];
                match slot {
                    Some(i) => {
                        if m.0[*i] != want {
                            continue 'outer;
                        }
                        e[*i] = 0;
                    }
                    None => {
                        if want != 0 {
                            continue 'outer;
                        }
                    }
                }
            }
            terms.insert(Monomial(e), c.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that occurs.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<MultiPoly> {
        let vars = var_list(vars);
        self.remap(&vars)
    }

    fn remap(&self, vars: &Arc<[String]>) -> Result<MultiPoly> {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return Ok(MultiPoly {
                vars: vars.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut slots = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => slots.push(Some(j)),
                None => {
                    if self.terms.keys().any(|m| m.0[i] > 0) {
                        return Err(Error::UnknownVariable(v.clone()));
                    }
                    slots.push(None);
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u16; vars.len()];
            for (i, slot) in slots.iter().enumerate() {
                if let Some(j) = slot {
                    e[*j] = m.0[i];
                }
            }
            terms.insert(Monomial(e), c.clone());
        }
        Ok(MultiPoly {
            vars: vars.clone(),
            terms,
        })
    }

    fn union_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
        if Arc::ptr_eq(a, b) || a[..] == b[..] {
            return a.clone();
        }
        if b.iter().all(|v| a.contains(v)) {
            return a.clone();
        }
        let mut out: Vec<String> = a.to_vec();
        for v in b.iter() {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out.into()
    }

    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let vars = Self::union_vars(&self.vars, &other.vars);
        (
            self.remap(&vars).expect("union contains all"),
            other.remap(&vars).expect("union contains all"),
        )
    }

    fn same_vars(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars[..] == other.vars[..]
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(&self.vars, Rational::one());
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn square(&self) -> MultiPoly {
        self * self
    }

    /// Formal partial derivative with respect to a declared variable.
    pub fn partial_derivative(&self, name: &str) -> Result<MultiPoly> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut ex = m.0.clone();
            ex[i] -= 1;
            terms.insert(Monomial(ex), c * Rational::from_integer(e.into()));
        }
        Ok(MultiPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Evaluates at a point; every occurring variable must be assigned.
    pub fn evaluate(&self, point: &HashMap<String, Rational>) -> Result<Rational> {
        self.evaluate_in(point)
    }

    /// Evaluates in any commutative ring containing Q.
    pub fn evaluate_in<T: Scalar>(&self, point: &HashMap<String, T>) -> Result<T> {
        let mut values: Vec<Option<&T>> = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let val = point.get(v);
            if val.is_none() && self.terms.keys().any(|m| m.0[i] > 0) {
                return Err(Error::UnassignedVariable(v.clone()));
            }
            values.push(val);
        }
        let mut powers: Vec<Vec<T>> = values
            .iter()
            .map(|v| match v {
                Some(x) => vec![T::scalar_one(), (*x).clone()],
                None => vec![T::scalar_one()],
            })
            .collect();
        let mut acc = T::scalar_zero();
        for (m, c) in &self.terms {
            let mut term = T::embed(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().clone() * powers[i][1].clone();
                    powers[i].push(next);
                }
                term = term * powers[i][e].clone();
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Evaluates with a list of `(name, value)` pairs.
    pub fn eval_at(&self, assignment: &[(&str, Rational)]) -> Result<Rational> {
        let point: HashMap<String, Rational> = assignment
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.evaluate(&point)
    }

    /// Simultaneous substitution. Every occurring variable needs an image.
    pub fn substitute(&self, assignment: &HashMap<String, MultiPoly>) -> Result<MultiPoly> {
        for (i, v) in self.vars.iter().enumerate() {
            if !assignment.contains_key(v) && self.terms.keys().any(|m| m.0[i] > 0) {
                return Err(Error::UnassignedVariable(v.clone()));
            }
        }
        Ok(self.substitute_some(assignment))
    }

    /// Simultaneous substitution leaving unassigned variables in place.
    pub fn substitute_some(&self, assignment: &HashMap<String, MultiPoly>) -> MultiPoly {
        let mut images: Vec<MultiPoly> = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            match assignment.get(v) {
                Some(p) => images.push(p.clone()),
                None => images.push(MultiPoly::var(&self.vars, v).expect("declared")),
            }
        }
        // Common variable list for every image and the result.
        let mut vars: Arc<[String]> = Arc::from(Vec::<String>::new());
        for img in &images {
            vars = Self::union_vars(&vars, &img.vars);
        }
        let images: Vec<MultiPoly> = images
            .iter()
            .map(|p| p.remap(&vars).expect("union"))
            .collect();
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant(&vars, Rational::one()), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &powers[i][1];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            for (mm, cc) in term.terms {
                accumulate(&mut acc, mm, cc);
            }
        }
        MultiPoly {
            vars,
            terms: finish(acc),
        }
    }

    /// Substitutes rational values for some variables, keeping the rest.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> MultiPoly {
        let map: HashMap<String, MultiPoly> = values
            .iter()
            .map(|(k, v)| (k.to_string(), MultiPoly::constant(&self.vars, v.clone())))
            .collect();
        self.substitute_some(&map)
            .remap(&self.vars)
            .expect("specialization keeps the variable list")
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (a, b) = self.aligned(divisor);
        let (lm, lc) = b.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = a.terms;
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = &c / &lc;
            for (bm, bc) in &b.terms {
                add_term(&mut rem, bm.mul(&qm), -(bc * &qc));
            }
            debug_assert!(!rem.contains_key(&m));
            quot.insert(qm, qc);
        }
        Some(MultiPoly {
            vars: a.vars,
            terms: quot,
        })
    }

    /// Canonical text: `+`-joined `coeff*v1^e1*v2^e2` terms in descending
    /// graded-lex order; exponents of one are omitted, `0` for zero.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms() {
            let mut s = c.to_string();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => {
                        s.push('*');
                        s.push_str(&self.vars[i]);
                    }
                    _ => {
                        s.push('*');
                        s.push_str(&self.vars[i]);
                        s.push('^');
                        s.push_str(&e.to_string());
                    }
                }
            }
            parts.push(s);
        }
        parts.join("+")
    }

    /// Parses the canonical text form over the given variables.
    pub fn parse<S: AsRef<str>>(vars: &[S], text: &str) -> Result<MultiPoly> {
        let vars = var_list(vars);
        let mut map = BTreeMap::new();
        let text = text.trim();
        if text == "0" {
            return Ok(MultiPoly { vars, terms: map });
        }
        for term in text.split('+') {
            let mut factors = term.split('*');
            let coeff = parse_rational(factors.next().unwrap_or(""))?;
            let mut exps = vec![0u16; vars.len()];
            for f in factors {
                let (name, e) = match f.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u16>()
                            .map_err(|_| Error::parse(text, format!("bad exponent in `{f}`")))?,
                    ),
                    None => (f, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                exps[idx] += e;
            }
            add_term(&mut map, Monomial(exps), coeff);
        }
        Ok(MultiPoly { vars, terms: map })
    }

    /// Set of distinct coefficient values.
    pub fn coefficient_set(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.terms.values().cloned().collect();
        out.sort();
        out.dedup();
        out
    }

    /// Largest absolute coefficient numerator/denominator, a cheap size hint.
    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Number of distinct monomials in the given variables.
    pub fn monomial_count_in<S: AsRef<str>>(&self, names: &[S]) -> usize {
        let idx: Vec<usize> = names
            .iter()
            .filter_map(|n| self.index_of(n.as_ref()))
            .collect();
        let mut seen: Vec<Vec<u16>> = self
            .terms
            .keys()
            .map(|m| idx.iter().map(|&i| m.0[i]).collect())
            .collect();
        seen.sort();
        seen.dedup();
        seen.len()
    }
}

fn add_term(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn accumulate(map: &mut HashMap<Monomial, Rational>, m: Monomial, c: Rational) {
    match map.entry(m) {
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::hash_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
        }
    }
}

fn finish(map: HashMap<Monomial, Rational>) -> BTreeMap<Monomial, Rational> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.same_vars(other) {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = if self.same_vars(rhs) {
            (self.clone(), rhs.clone())
        } else {
            self.aligned(rhs)
        };
        for (m, c) in b.terms {
            add_term(&mut a.terms, m, c);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = if self.same_vars(rhs) {
            (self.clone(), rhs.clone())
        } else {
            self.aligned(rhs)
        };
        for (m, c) in b.terms {
            add_term(&mut a.terms, m, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let aligned;
        let (a, b) = if self.same_vars(rhs) {
            (self, rhs)
        } else {
            aligned = self.aligned(rhs);
            (&aligned.0, &aligned.1)
        };
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                accumulate(&mut acc, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly {
            vars: a.vars.clone(),
            terms: finish(acc),
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::from_int(0), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn xy() -> (MultiPoly, MultiPoly) {
        let vars = ["x", "y"];
        (
            MultiPoly::var(&vars, "x").unwrap(),
            MultiPoly::var(&vars, "y").unwrap(),
        )
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy();
        let p = (&x + &y) * (&x - &y);
        assert_eq!(p, x.square() - y.square());
        assert_eq!(p.to_canonical_string(), "1*x^2+-1*y^2");
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let (x, y) = xy();
        let p = &x + &y.pow(3) + MultiPoly::from_int(2) + x.square() * &y;
        assert_eq!(p.to_canonical_string(), "1*x^2*y+1*y^3+1*x+2");
    }

    #[test]
    fn equality_ignores_declared_order() {
        let p = MultiPoly::var(&["x", "y"], "x").unwrap();
        let q = MultiPoly::var(&["y", "x", "z"], "x").unwrap();
        assert_eq!(p, q);
        assert_ne!(p, MultiPoly::symbol("y"));
    }

    #[test]
    fn substitution_examples() {
        let (x, y) = xy();
        let p = x.square() + &y;
        let mut a = HashMap::new();
        a.insert("x".to_string(), MultiPoly::from_int(1));
        a.insert("y".to_string(), MultiPoly::from_int(2));
        assert_eq!(p.substitute(&a).unwrap(), MultiPoly::from_int(3));

        let mut id = HashMap::new();
        id.insert("x".to_string(), x.clone());
        assert_eq!(x.substitute(&id).unwrap(), x);

        let mut partial = HashMap::new();
        partial.insert("x".to_string(), MultiPoly::from_int(1));
        assert_eq!(
            p.substitute(&partial),
            Err(Error::UnassignedVariable("y".into()))
        );
    }

    #[test]
    fn substitution_is_simultaneous() {
        let (x, y) = xy();
        let p = &x * &y.square();
        let mut swap = HashMap::new();
        swap.insert("x".to_string(), y.clone());
        swap.insert("y".to_string(), x.clone());
        assert_eq!(p.substitute(&swap).unwrap(), &y * &x.square());
    }

    #[test]
    fn derivative_examples() {
        let (x, y) = xy();
        let p = x.square() * &y;
        assert_eq!(
            p.partial_derivative("x").unwrap(),
            (&x * &y).scale(&rat(2))
        );
        assert!(matches!(
            p.partial_derivative("z"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let f = &x + &y.scale(&ratio(1, 2));
        let g = x.square() - &y + MultiPoly::from_int(3);
        let prod = &f * &g;
        assert_eq!(prod.exact_div(&f).unwrap(), g);
        assert_eq!(prod.exact_div(&g).unwrap(), f);
        assert!((&prod + &MultiPoly::from_int(1)).exact_div(&f).is_none());
        assert!(x.exact_div(&MultiPoly::from_int(0)).is_none());
    }

    #[test]
    fn parse_roundtrip_examples() {
        let vars = ["a", "b"];
        for s in ["0", "3", "-1/2*a^2*b+7*b+-3", "1*a*b^3"] {
            let p = MultiPoly::parse(&vars, s).unwrap();
            assert_eq!(p.to_canonical_string(), s);
        }
        assert!(MultiPoly::parse(&vars, "1*c").is_err());
    }

    #[test]
    fn coefficients_in_variable() {
        let (x, y) = xy();
        let p = x.square() * &y + &x * y.scale(&rat(3)) + MultiPoly::from_int(5);
        let cs = p.coefficients_in("x");
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], MultiPoly::from_int(5));
        assert_eq!(cs[1], y.scale(&rat(3)));
        assert_eq!(cs[2], y);
    }

    #[test]
    fn evaluation_in_gaussian_rationals() {
        let (x, y) = xy();
        let p = x.square() + y.square();
        let mut pt = HashMap::new();
        pt.insert("x".to_string(), GaussianRational::i());
        pt.insert("y".to_string(), GaussianRational::from_rational(rat(1)));
        assert!(p.evaluate_in(&pt).unwrap().is_zero());
    }
}
