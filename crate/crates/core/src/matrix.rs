//! Dense square matrices over exact rationals.

use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// `n × n` exact rational matrix, row-major; serialized as nested arrays of
/// rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<rational::RationalStr>>", into = "Vec<Vec<rational::RationalStr>>")]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Invalid("matrix must be at least 1 × 1".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Invalid(format!(
                "matrix is not square: {n} rows but a row of length {}",
                bad.len()
            )));
        }
        Ok(RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let entries = (0..n * n).map(|t| f(t / n, t % n)).collect();
        RationalMatrix { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        Self::from_fn(values.len(), |i, j| {
            if i == j {
                values[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n).map(<[Rational]>::to_vec).collect()
    }

    /// `diag(z) · self`.
    pub fn scale_rows(&self, z: &[Rational]) -> Result<Self> {
        if z.len() != self.n {
            return Err(Error::SizeMismatch {
                left: z.len(),
                right: self.n,
            });
        }
        Ok(Self::from_fn(self.n, |i, j| &z[i] * self.get(i, j)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Determinant by Gaussian elimination with row pivoting.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut m = self.rows();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= &m[col][col];
            let (top, rest) = m.split_at_mut(col + 1);
            let pivot_row = &top[col];
            for row in rest.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot_row[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut m = self.rows();
        let mut inv = Self::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or_else(|| Error::Invalid("matrix is singular".into()))?;
            m.swap(pivot, col);
            inv.swap(pivot, col);
            let p = m[col][col].clone();
            for c in 0..n {
                m[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for c in 0..n {
                    let (a, b) = (&factor * &m[col][c], &factor * &inv[col][c]);
                    m[r][c] -= a;
                    inv[r][c] -= b;
                }
            }
        }
        Self::new(inv)
    }

    /// Coefficients `a_0 = 1, a_1, ..., a_n` with
    /// `det(xI - M) = Σ_k x^(n-k) (-1)^k a_k`, so `a_k = e_k(eigenvalues)`.
    /// Faddeev–LeVerrier recursion.
    pub fn charpoly(&self) -> Vec<Rational> {
        let n = self.n;
        // c[i] is the coefficient of x^i in det(xI - M)
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        let mut mk = Self::zeros(n);
        for k in 1..=n {
            let mut next = self * &mk;
            for i in 0..n {
                next.entries[i * n + i] += &c[n - k + 1];
            }
            mk = next;
            c[n - k] = -(self * &mk).trace() / int(k as i64);
        }
        (0..=n)
            .map(|k| {
                let v = c[n - k].clone();
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect()
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, rhs.n, "matrix product of mismatched sizes");
        let n = self.n;
        RationalMatrix::from_fn(n, |i, j| (0..n).map(|t| self.get(i, t) * rhs.get(t, j)).sum())
    }
}

impl TryFrom<Vec<Vec<rational::RationalStr>>> for RationalMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<rational::RationalStr>>) -> Result<Self> {
        Self::new(rows.into_iter().map(|r| r.into_iter().map(|q| q.0).collect()).collect())
    }
}

impl From<RationalMatrix> for Vec<Vec<rational::RationalStr>> {
    fn from(m: RationalMatrix) -> Self {
        m.rows()
            .into_iter()
            .map(|r| r.into_iter().map(rational::RationalStr).collect())
            .collect()
    }
}
