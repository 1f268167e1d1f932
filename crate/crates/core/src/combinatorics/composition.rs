use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::Partition;
use crate::rational::factorial;

/// Finite sequence of non-negative integers (zeros allowed).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(pub Vec<usize>);

impl WeakComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        WeakComposition(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted descending with zeros dropped.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// `Orb(I)`: the distinct rearrangements, in lexicographic order.
    pub fn orbit(&self) -> Vec<WeakComposition> {
        let mut current = self.0.clone();
        current.sort_unstable();
        let mut out = vec![WeakComposition(current.clone())];
        while next_permutation(&mut current) {
            out.push(WeakComposition(current.clone()));
        }
        out
    }

    /// `|Orb(I)| = len! / ∏ mult!`.
    pub fn orbit_size(&self) -> BigInt {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        let denom = sorted
            .chunk_by(|a, b| a == b)
            .fold(BigInt::from(1), |acc, run| acc * factorial(run.len()));
        factorial(self.len()) / denom
    }

    /// Whether `self` is a rearrangement of `other`.
    pub fn is_rearrangement_of(&self, other: &WeakComposition) -> bool {
        let mut a = self.0.clone();
        let mut b = other.0.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// Lexicographic successor, handling repeated entries; false at the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_of_two_one_zero() {
        for k in 0..8 {
            for q in 0..=k / 2 {
                let mut e = vec![2; q];
                e.extend(std::iter::repeat_n(1, k - 2 * q));
                e.extend(std::iter::repeat_n(0, q));
                let c = WeakComposition(e);
                let orbit = c.orbit();
                assert_eq!(BigInt::from(orbit.len()), c.orbit_size());
                // |Orb(2^q,1^(k-2q),0^q)| = C(k,q) C(k-q,q)
                let expected = crate::rational::binomial(k as i64, q as i64)
                    * crate::rational::binomial((k - q) as i64, q as i64);
                assert_eq!(c.orbit_size(), expected);
            }
        }
    }

    #[test]
    fn to_partition_drops_zeros() {
        let c = WeakComposition(vec![0, 1, 2, 0, 1]);
        assert_eq!(c.to_partition(), Partition::new(vec![2, 1, 1]).unwrap());
        assert_eq!(c.size(), 4);
    }
}
