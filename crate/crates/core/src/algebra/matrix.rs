use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Rectangular matrix of polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Ragged {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::Ragged {
                    expected: ncols,
                    got: r.len(),
                });
            }
            entries.extend(r);
        }
        PolyMatrix::new(nrows, ncols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    /// Determinant by Laplace expansion along rows, memoizing minors by the
    /// set of remaining columns.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(MultiPoly::from_int(1));
        }
        assert!(n <= 63, "cofactor expansion limited to 63 columns");
        let mut memo: HashMap<u64, MultiPoly> = HashMap::new();
        Ok(self.minor(0, (1u64 << n) - 1, &mut memo))
    }

    fn minor(&self, row: usize, cols: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
        if row == self.rows {
            return MultiPoly::from_int(1);
        }
        if let Some(m) = memo.get(&cols) {
            return m.clone();
        }
        let mut acc = MultiPoly::from_int(0);
        let mut position = 0;
        for j in 0..self.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = self.get(row, j);
            if !entry.is_zero() {
                let sub = self.minor(row + 1, cols & !(1 << j), memo);
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if position % 2 == 0 { acc + term } else { acc - term };
                }
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Entrywise map, e.g. to evaluate or specialize.
    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Exact determinant of a square polynomial matrix.
pub fn det_poly_matrix(m: &PolyMatrix) -> Result<MultiPoly> {
    m.determinant()
}

/// Rectangular matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Integer row-echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    swaps: usize,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Ragged {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::Ragged {
                    expected: ncols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        RationalMatrix::new(nrows, ncols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Rows scaled to integers; also returns the scale factor of each row.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            out.push(
                row.iter()
                    .map(|r| r.numer() * (&l / r.denom()))
                    .collect::<Vec<_>>(),
            );
            scales.push(l);
        }
        (out, scales)
    }

    /// Fraction-free (Bareiss) elimination with first-nonzero pivoting.
    fn echelon(&self) -> (Echelon, Vec<BigInt>) {
        let (mut a, scales) = self.integer_rows();
        let mut prev = BigInt::one();
        let mut r = 0;
        let mut pivots = Vec::new();
        let mut swaps = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                swaps += 1;
            }
            for i in r + 1..self.rows {
                for j in col + 1..self.cols {
                    let v = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                    let (q, rem) = v.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    a[i][j] = q;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[r][col].clone();
            pivots.push(col);
            r += 1;
        }
        (
            Echelon {
                rows: a,
                pivots,
                swaps,
            },
            scales,
        )
    }

    pub fn rank(&self) -> usize {
        self.echelon().0.pivots.len()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (ech, scales) = self.echelon();
        if ech.pivots.len() < n {
            return Ok(Rational::zero());
        }
        // The last Bareiss pivot is the determinant of the integer matrix.
        let mut det = Rational::from_integer(ech.rows[n - 1][n - 1].clone());
        if ech.swaps % 2 == 1 {
            det = -det;
        }
        let scale: BigInt = scales.iter().product();
        Ok(det / Rational::from_integer(scale))
    }

    /// Basis of the right kernel: one vector per non-pivot column, with that
    /// coordinate equal to one and the other free coordinates zero.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (ech, _) = self.echelon();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !ech.pivots.contains(c))
            .collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (r, &pc) in ech.pivots.iter().enumerate().rev() {
                let mut s = Rational::zero();
                for (e, x) in ech.rows[r][pc + 1..].iter().zip(&v[pc + 1..]) {
                    if !e.is_zero() && !x.is_zero() {
                        s += Rational::from_integer(e.clone()) * x;
                    }
                }
                v[pc] = -s / Rational::from_integer(ech.rows[r][pc].clone());
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Converts to a polynomial matrix of constants.
    pub fn to_poly(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .data
                .iter()
                .map(|r| MultiPoly::from_rational(r.clone()))
                .collect(),
        }
    }

    pub fn max_abs(&self) -> Rational {
        self.data
            .iter()
            .map(|r| r.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Exact basis of the right kernel of `m`.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}
