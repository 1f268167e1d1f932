use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{next_permutation, Partition};
use crate::error::{Error, Result};

/// Bijection of `{0..k}`; `images[i]` is the image of `i`.
///
/// Serializes in 1-indexed one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-indexed images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-indexed one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid("one-line notation is 1-indexed".into()));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// A permutation with the given cycle type, cycles laid out consecutively.
    pub fn of_cycle_type(rho: &Partition) -> Self {
        let mut images = Vec::with_capacity(rho.size());
        let mut start = 0;
        for &len in rho.parts() {
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    /// All of `S_k` in lexicographic order of the one-line notation.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..k).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Permutation { images: cur.clone() });
        }
        out
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths())
    }

    pub fn num_cycles(&self) -> usize {
        self.cycle_lengths().len()
    }

    /// `(-1)^(k - #cycles)`.
    pub fn sign(&self) -> i64 {
        if (self.len() - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images.into_iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_line: Vec<usize> = self.images.iter().map(|i| i + 1).collect();
        write!(f, "Permutation{one_line:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    #[test]
    fn basics() {
        let s = Permutation::from_one_line(&[2, 3, 1, 4]).unwrap();
        assert_eq!(s.cycle_type(), Partition::new(vec![3, 1]).unwrap());
        assert_eq!(s.sign(), 1);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(4));
        assert_eq!(Permutation::identity(3).cycle_type(), Partition::column(3));
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        let t = Permutation::from_one_line(&[2, 1, 3, 4]).unwrap();
        // (s∘t)(0) = s(t(0)) = s(1) = 2
        assert_eq!(s.compose(&t).apply(0), 2);
    }

    #[test]
    fn all_and_cycle_types() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(5).len(), 120);
        for k in 1..7 {
            for rho in partitions_of(k) {
                let s = Permutation::of_cycle_type(&rho);
                assert_eq!(s.cycle_type(), rho);
            }
        }
    }

    #[test]
    fn serde_one_indexed() {
        let s = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,1]");
        assert_eq!(serde_json::from_str::<Permutation>("[2,1]").unwrap(), s);
    }
}
