//! Immanants, the matrices `δ_±(X) = (x_i ± x_j)`, and two closed forms for
//! the commutator case.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::combinatorics::Partition;
use crate::error::{check_cap, Error, Result};
use crate::finfree::MonicPoly;
use crate::matrix::RationalMatrix;
use crate::rational::{big, common_denominator, factorial, int, Rational};
use crate::symfunc::{elementary_all, Spectrum};
use crate::symgroup::character;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaSign {
    Plus,
    Minus,
}

/// `(x_i ± x_j)_{i,j}`.
pub fn delta(x: &Spectrum, sign: DeltaSign) -> RationalMatrix {
    let v = x.values();
    RationalMatrix::from_fn(v.len(), |i, j| match sign {
        DeltaSign::Plus => &v[i] + &v[j],
        DeltaSign::Minus => &v[i] - &v[j],
    })
}

/// `Σ_{σ of cycle type ρ} ∏_i y_{iσ(i)}` for every cycle type `ρ` that occurs
/// with a nonzero sum.
pub fn class_sums(y: &RationalMatrix, caps: &Caps) -> Result<HashMap<Partition, Rational>> {
    let n = y.n();
    check_cap("immanant size n", n, caps.immanant_n)?;
    let den = common_denominator((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| y.get(i, j)));
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| (y.get(i, j) * big(den.clone())).to_integer()).collect())
        .collect();
    let mut sums: HashMap<Partition, BigInt> = HashMap::new();
    let mut images = vec![0usize; n];
    let mut used = vec![false; n];
    fn go(
        row: usize,
        prefix: BigInt,
        m: &[Vec<BigInt>],
        images: &mut [usize],
        used: &mut [bool],
        sums: &mut HashMap<Partition, BigInt>,
    ) {
        let n = m.len();
        if row == n {
            *sums.entry(cycle_type(images)).or_insert_with(BigInt::zero) += prefix;
            return;
        }
        for col in 0..n {
            if used[col] || m[row][col].is_zero() {
                continue;
            }
            used[col] = true;
            images[row] = col;
            go(row + 1, &prefix * &m[row][col], m, images, used, sums);
            used[col] = false;
        }
    }
    go(0, BigInt::one(), &m, &mut images, &mut used, &mut sums);
    let scale = big(num_traits::pow(den, n));
    Ok(sums
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(rho, v)| (rho, big(v) / &scale))
        .collect())
}

fn cycle_type(images: &[usize]) -> Partition {
    let mut seen = vec![false; images.len()];
    let mut lengths = Vec::new();
    for start in 0..images.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    Partition::from_unsorted(lengths)
}

/// `Imm^λ(Y) = Σ_σ χ^λ(σ) ∏_i y_{iσ(i)}`.
pub fn immanant_direct(lambda: &Partition, y: &RationalMatrix, caps: &Caps) -> Result<Rational> {
    if lambda.size() != y.n() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: y.n(),
        });
    }
    immanant_from_class_sums(lambda, &class_sums(y, caps)?, caps)
}

/// Combines precomputed [`class_sums`] with `χ^λ`.
pub fn immanant_from_class_sums(
    lambda: &Partition,
    sums: &HashMap<Partition, Rational>,
    caps: &Caps,
) -> Result<Rational> {
    let mut total = Rational::zero();
    for (rho, s) in sums {
        total += int(character(lambda, rho, caps)?) * s;
    }
    Ok(total)
}

/// `Imm^λ(δ_−(X)) = (-1)^{λ_2} Σ_l (-1)^l (k-l)! l! e_{k-l}(X) e_l(X)` when
/// `ℓ(λ) <= 2`, and `0` otherwise.
pub fn imm_delta_minus(lambda: &Partition, x: &Spectrum) -> Result<Rational> {
    let k = x.dim();
    if lambda.size() != k {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: k,
        });
    }
    if lambda.len() > 2 {
        return Ok(Rational::zero());
    }
    let e = elementary_all(x.values());
    let mut total = Rational::zero();
    for l in 0..=k {
        let term = big(factorial(k - l) * factorial(l)) * &e[k - l] * &e[l];
        total += if l % 2 == 0 { term } else { -term };
    }
    Ok(if lambda.part(1).is_multiple_of(2) { total } else { -total })
}

/// Characteristic polynomial of `Z δ_−(X)` with `Z = diag(z)`:
/// `x^k + (Σ_{i<j} z_i z_j (x_i - x_j)²) x^(k-2)`.
///
/// Both the closed form and a direct expansion are computed; disagreement is
/// reported as [`Error::RouteMismatch`].
pub fn charpoly_z_delta(x: &Spectrum, z: &Spectrum) -> Result<MonicPoly> {
    let k = x.dim();
    if z.dim() != k {
        return Err(Error::SizeMismatch { left: k, right: z.dim() });
    }
    if k < 2 {
        return Err(Error::OutOfRange("charpoly of Z δ_−(X) needs k >= 2".into()));
    }
    let (xs, zs) = (x.values(), z.values());
    let mut a = vec![Rational::zero(); k + 1];
    a[0] = Rational::one();
    for i in 0..k {
        for j in i + 1..k {
            let diff = &xs[i] - &xs[j];
            a[2] += &zs[i] * &zs[j] * &diff * &diff;
        }
    }
    let closed = MonicPoly::new(a)?;
    let direct = MonicPoly::new(delta(x, DeltaSign::Minus).scale_rows(zs)?.charpoly())?;
    if closed != direct {
        return Err(Error::RouteMismatch(format!(
            "charpoly of Z δ_−(X): closed form {closed} but direct expansion {direct}"
        )));
    }
    Ok(closed)
}

/// `e_1, ..., e_n` from power sums `p_1, ..., p_n` by Newton's identities.
pub fn newton_elementary(p: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for j in 1..=p.len() {
        let mut acc = Rational::zero();
        for i in 1..=j {
            let term = &e[j - i] * &p[i - 1];
            acc += if i % 2 == 1 { term } else { -term };
        }
        e.push(acc / int(j as i64));
    }
    e
}

/// `s_λ` from `e_0, e_1, ...` by the dual Jacobi–Trudi determinant
/// `det(e_{λ'_i - i + j})`.
pub fn schur_from_elementary(lambda: &Partition, e: &[Rational]) -> Rational {
    let conj = lambda.transpose();
    let n = conj.len();
    if n == 0 {
        return Rational::one();
    }
    let m = RationalMatrix::from_fn(n, |i, j| {
        let idx = conj.part(i) as i64 - i as i64 + j as i64;
        if idx < 0 {
            Rational::zero()
        } else {
            e.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
        }
    });
    m.determinant()
}

/// `Imm^λ(Y)` as the coefficient of `z_1 ⋯ z_n` in `s_λ(eigenvalues of ZY)`,
/// extracted by inclusion–exclusion over `z ∈ {0,1}^n`. Each evaluation uses
/// traces of powers, Newton's identities and the dual Jacobi–Trudi identity.
pub fn immanant_gj(lambda: &Partition, y: &RationalMatrix, caps: &Caps) -> Result<Rational> {
    let n = y.n();
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: n,
        });
    }
    check_cap("coefficient-extraction size n", n, caps.gj_n)?;
    let mut total = Rational::zero();
    for mask in 0u32..(1 << n) {
        let z: Vec<Rational> = (0..n).map(|i| int(i64::from((mask >> i) & 1))).collect();
        let zy = y.scale_rows(&z)?;
        let mut power = zy.clone();
        let mut p = Vec::with_capacity(n);
        for j in 1..=n {
            p.push(power.trace());
            if j < n {
                power = &power * &zy;
            }
        }
        let s = schur_from_elementary(lambda, &newton_elementary(&p));
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += s;
        } else {
            total -= s;
        }
    }
    Ok(total)
}
