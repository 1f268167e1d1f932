use num_bigint::BigInt;
use num_traits::Zero;

use super::{character, dim_irrep, Permutation};
use crate::caps::Caps;
use crate::combinatorics::{
    kostka, set_partition_type_count, set_partitions_of_type, Partition, SetPartition,
};
use crate::error::{check_cap, Error, Result};
use crate::rational::{big, binomial, factorial, Rational};

/// `S_π`: permutations fixing every block of `π` setwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungSubgroup {
    pub blocks: SetPartition,
}

impl YoungSubgroup {
    pub fn new(blocks: SetPartition) -> Self {
        YoungSubgroup { blocks }
    }

    /// `∏ |block|!`.
    pub fn order(&self) -> BigInt {
        self.blocks
            .blocks()
            .iter()
            .fold(BigInt::from(1), |acc, b| acc * factorial(b.len()))
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        let labels = self.blocks.labels();
        (0..sigma.len()).all(|i| labels[i] == labels[sigma.apply(i)])
    }

    /// Every member, as a product of permutations of the individual blocks.
    pub fn members(&self) -> Vec<Permutation> {
        let k = self.blocks.size();
        let mut out = vec![(0..k).collect::<Vec<usize>>()];
        for block in self.blocks.blocks() {
            let local = Permutation::all(block.len());
            let mut next = Vec::with_capacity(out.len() * local.len());
            for images in &out {
                for s in &local {
                    let mut v = images.clone();
                    for (pos, &point) in block.iter().enumerate() {
                        v[point - 1] = block[s.apply(pos)] - 1;
                    }
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|v| Permutation::new(v).expect("block permutations compose to a bijection"))
            .collect()
    }
}

fn same_size(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(())
}

/// `C_{λ,μ} = p_μ |S_μ| K(λ,μ) / dim(λ)`.
pub fn c_constant(lambda: &Partition, mu: &Partition, caps: &Caps) -> Result<Rational> {
    same_size(lambda, mu)?;
    let p_mu = set_partition_type_count(mu);
    let young_order = mu.parts().iter().fold(BigInt::from(1), |acc, &p| acc * factorial(p));
    let k = BigInt::from(kostka(lambda, mu, caps)?);
    Ok(Rational::new(p_mu * young_order * k, dim_irrep(lambda)))
}

/// Two-column case `C_{2_k^p, 2_k^q} = p!/(p-q)! · C(k-p+1, q)`, zero for `q > p`.
pub fn c_constant_two_column(k: usize, p: usize, q: usize) -> Result<Rational> {
    if 2 * p > k || 2 * q > k {
        return Err(Error::OutOfRange(format!("p={p}, q={q} must not exceed k/2 for k={k}")));
    }
    if q > p {
        return Ok(Rational::zero());
    }
    Ok(big(factorial(p) / factorial(p - q) * binomial((k - p + 1) as i64, q as i64)))
}

/// Character sum `Σ_{π: t(π)=μ} Σ_{τ ∈ S_π} χ^λ(στ)` together with `χ^λ(σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBruteForce {
    pub raw_sum: i64,
    pub character: i64,
}

impl CBruteForce {
    /// The ratio against `χ^λ(σ)`, when that character value is non-zero.
    pub fn ratio(&self) -> Option<Rational> {
        (self.character != 0).then(|| Rational::new(self.raw_sum.into(), self.character.into()))
    }
}

pub fn c_constant_bruteforce(
    lambda: &Partition,
    mu: &Partition,
    sigma: &Permutation,
    caps: &Caps,
) -> Result<CBruteForce> {
    same_size(lambda, mu)?;
    same_size(lambda, &sigma.cycle_type())?;
    check_cap("brute-force C size k", lambda.size(), caps.c_bruteforce_k)?;
    let mut raw_sum = 0;
    for pi in set_partitions_of_type(mu, caps)? {
        for tau in YoungSubgroup::new(pi).members() {
            raw_sum += character(lambda, &sigma.compose(&tau).cycle_type(), caps)?;
        }
    }
    Ok(CBruteForce {
        raw_sum,
        character: character(lambda, &sigma.cycle_type(), caps)?,
    })
}
