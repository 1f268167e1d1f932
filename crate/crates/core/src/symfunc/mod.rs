//! Monomial, elementary, quasisymmetric and Schur evaluations, basis
//! transitions through Kostka numbers, and kernel sums over index maps.

mod expansion;
mod spectrum;

pub use expansion::{e_to_m, m_to_e, Basis, SymExpansion, SymExpansionJson, TermJson};
pub use spectrum::Spectrum;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::combinatorics::{next_permutation, ssyt, Partition, SetPartition, WeakComposition};
use crate::error::{check_cap, Error, Result};
use crate::rational::{big, factorial, falling, Rational};
use crate::symgroup::dim_irrep;

fn pow(x: &Rational, n: usize) -> Rational {
    num_traits::pow(x.clone(), n)
}

/// `e_0(x), ..., e_d(x)`.
pub fn elementary_all(x: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); x.len() + 1];
    e[0] = Rational::one();
    for (n, xi) in x.iter().enumerate() {
        for j in (1..=n + 1).rev() {
            let add = &e[j - 1] * xi;
            e[j] += add;
        }
    }
    e
}

/// `e_j(x)`, zero for `j > d`.
pub fn elementary(j: usize, x: &[Rational]) -> Rational {
    elementary_all(x).get(j).cloned().unwrap_or_else(Rational::zero)
}

/// `m_λ(x)`: sum over the distinct rearrangements of `λ` padded with zeros.
pub fn eval_monomial(lambda: &Partition, x: &Spectrum) -> Rational {
    let d = x.dim();
    if lambda.len() > d {
        return Rational::zero();
    }
    let mut exps: Vec<usize> = lambda.parts().to_vec();
    exps.resize(d, 0);
    exps.sort_unstable();
    let mut total = Rational::zero();
    loop {
        total += exps
            .iter()
            .zip(x.values())
            .fold(Rational::one(), |acc, (&e, xi)| acc * pow(xi, e));
        if !next_permutation(&mut exps) {
            break;
        }
    }
    total
}

/// `e_λ(x) = ∏ e_{λ_i}(x)`.
pub fn eval_elementary(lambda: &Partition, x: &Spectrum) -> Rational {
    let e = elementary_all(x.values());
    lambda
        .parts()
        .iter()
        .map(|&p| e.get(p).cloned().unwrap_or_else(Rational::zero))
        .product()
}

/// `M_I(x) = Σ_{s_1 < ... < s_k} ∏ x_{s_j}^{I_j}`, zero entries allowed.
pub fn eval_quasisym(composition: &WeakComposition, x: &Spectrum) -> Result<Rational> {
    let k = composition.len();
    let d = x.dim();
    if k > d {
        return Err(Error::OutOfRange(format!("composition length {k} exceeds dimension {d}")));
    }
    // acc[j]: sum over s_1 < ... < s_j among the variables seen so far
    let mut acc = vec![Rational::zero(); k + 1];
    acc[0] = Rational::one();
    for xi in x.values() {
        for j in (1..=k).rev() {
            let add = &acc[j - 1] * pow(xi, composition.entries()[j - 1]);
            acc[j] += add;
        }
    }
    Ok(acc[k].clone())
}

/// `s_λ(1^d) = dim(λ)/k! · ∏ (d + content)`.
pub fn schur_principal(lambda: &Partition, d: usize) -> Rational {
    let prod = crate::combinatorics::hooks_and_contents(lambda)
        .iter()
        .fold(BigInt::one(), |acc, c| acc * BigInt::from(d as i64 + c.content));
    Rational::new(dim_irrep(lambda) * prod, factorial(lambda.size()))
}

/// `s_{2_k^p}(1^d) = (k-2p+1)/(p!(k-p+1)!) · (d+1)_p · (d)_{k-p}`, falling factorials.
pub fn schur_principal_two_column(k: usize, p: usize, d: usize) -> Result<Rational> {
    if 2 * p > k {
        return Err(Error::OutOfRange(format!("p={p} exceeds k/2 for k={k}")));
    }
    let d = d as i64;
    Ok(Rational::new(
        BigInt::from(k - 2 * p + 1) * falling(d + 1, p) * falling(d, k - p),
        factorial(p) * factorial(k - p + 1),
    ))
}

/// `s_λ(x)` summed over semistandard tableaux with entries at most `dim x`.
pub fn schur_eval(lambda: &Partition, x: &Spectrum, caps: &Caps) -> Result<Rational> {
    Ok(ssyt(lambda, x.dim(), caps)?
        .iter()
        .map(|t| {
            t.weight(x.dim())
                .entries()
                .iter()
                .zip(x.values())
                .fold(Rational::one(), |acc, (&w, xi)| acc * pow(xi, w))
        })
        .sum())
}

/// `s_λ(α, β, 0, ..., 0)` as `Σ_{t=0}^{λ1-λ2} α^(k-λ2-t) β^(λ2+t)`; zero when `ℓ(λ) > 2`.
pub fn schur_rank_two(lambda: &Partition, alpha: &Rational, beta: &Rational) -> Rational {
    if lambda.len() > 2 {
        return Rational::zero();
    }
    let k = lambda.size();
    let (l1, l2) = (lambda.part(0), lambda.part(1));
    (0..=l1 - l2)
        .map(|t| pow(alpha, k - l2 - t) * pow(beta, l2 + t))
        .sum()
}

/// `Σ_{p : [k] -> [d], ker p = π} ∏ b_{p(i)}` by enumerating all `d^k` maps.
pub fn kernel_sum(pi: &SetPartition, b: &Spectrum, caps: &Caps) -> Result<Rational> {
    let k = pi.size();
    check_cap("kernel sum size k", k, caps.kernel_k)?;
    let d = b.dim();
    let mut map = vec![0usize; k];
    let mut total = Rational::zero();
    loop {
        if &SetPartition::kernel_of(&map) == pi {
            total += map.iter().fold(Rational::one(), |acc, &i| acc * &b.values()[i]);
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(total);
            }
            map[pos] += 1;
            if map[pos] < d {
                break;
            }
            map[pos] = 0;
            pos += 1;
        }
    }
}

/// Multiplier `ℓ(μ)! / |Orb(μ)| = ∏ m_j!` relating a kernel sum to `m_μ`.
pub fn kernel_multiplier(mu: &Partition) -> BigInt {
    mu.multiplicities()
        .iter()
        .fold(BigInt::one(), |acc, &(_, m)| acc * factorial(m))
}

/// `ℓ(μ)!/|Orb(μ)| · m_μ(b)` with `μ = t(π)`.
pub fn kernel_sum_closed(pi: &SetPartition, b: &Spectrum) -> Rational {
    let mu = pi.block_type();
    big(kernel_multiplier(&mu)) * eval_monomial(&mu, b)
}

/// `Σ_{|S|=k} e_i(A_S) e_j(A_S)` by subset enumeration.
pub fn subset_sum_ee(i: usize, j: usize, k: usize, a: &Spectrum) -> Rational {
    let d = a.dim();
    if k > d {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for subset in itertools::Itertools::combinations(0..d, k) {
        let vals: Vec<Rational> = subset.iter().map(|&s| a.values()[s].clone()).collect();
        let e = elementary_all(&vals);
        total += &e[i] * &e[j];
    }
    total
}

#[cfg(test)]
mod tests;
