use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// Eigenvalues of a normal `d × d` matrix, as exact rationals; `d >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<rational::RationalStr>", into = "Vec<rational::RationalStr>")]
pub struct Spectrum(Vec<Rational>);

impl Spectrum {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("a spectrum needs at least one eigenvalue".into()));
        }
        Ok(Spectrum(values))
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// Entries at the given positions, e.g. `A_S`.
    pub fn restrict(&self, indices: &[usize]) -> Result<Spectrum> {
        Spectrum::new(indices.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn negated(&self) -> Spectrum {
        Spectrum(self.0.iter().map(|v| -v).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rational::to_f64).collect()
    }
}

impl TryFrom<Vec<rational::RationalStr>> for Spectrum {
    type Error = Error;

    fn try_from(v: Vec<rational::RationalStr>) -> Result<Self> {
        Spectrum::new(v.into_iter().map(|q| q.0).collect())
    }
}

impl From<Spectrum> for Vec<rational::RationalStr> {
    fn from(s: Spectrum) -> Self {
        s.0.into_iter().map(rational::RationalStr).collect()
    }
}
