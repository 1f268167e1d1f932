//! Identities behind the splitting of the commutator expectation into a factor
//! depending only on `A` and one depending only on `B`. Each function returns
//! both sides so callers can assert equality.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::caps::Caps;
use crate::combinatorics::{two_column, two_one_zero};
use crate::error::{check_cap, Error, Result};
use crate::rational::{big, binomial, binomial_q, factorial, int, ratio, sign, Rational};
use crate::symfunc::{
    elementary_all, eval_monomial, eval_quasisym, schur_principal_two_column, subset_sum_ee, Basis, Spectrum,
    SymExpansion,
};
use crate::combinatorics::Partition;
use crate::symgroup::{c_constant_two_column, dim_two_column};

fn check_k_d(k: usize, d: usize, caps: &Caps) -> Result<()> {
    check_cap("identity dimension d", d, caps.identity_d)?;
    if k > d {
        return Err(Error::OutOfRange(format!("k = {k} exceeds d = {d}")));
    }
    Ok(())
}

/// `Σ_{i+j=k} (-1)^i (d-i)!(d-j)! e_i e_j`.
fn signed_factorial_pairs(e: &[Rational], d: usize, k: usize) -> Rational {
    (0..=k)
        .map(|i| int(sign(i)) * big(factorial(d - i) * factorial(d - k + i)) * &e[i] * &e[k - i])
        .sum()
}

/// The `A`-dependent factor.
///
/// raw: `Σ_l (-1)^l / C(k,l) Σ_{|S|=k} e_{k-l}(A_S) e_l(A_S)`;
/// closed: `(k/2)!/k! Σ_{i+j=k} (-1)^i (d-i)!(d-j)! / ((d-k)!(d-k/2)!) e_i(A) e_j(A)`
/// for even `k`, and `0` for odd `k`.
pub fn identity_leftdep(a: &Spectrum, k: usize, caps: &Caps) -> Result<(Rational, Rational)> {
    let d = a.dim();
    check_k_d(k, d, caps)?;
    let raw: Rational = (0..=k)
        .map(|l| int(sign(l)) / binomial_q(k as i64, l as i64) * subset_sum_ee(k - l, l, k, a))
        .sum();
    let closed = if k % 2 == 1 {
        Rational::zero()
    } else {
        let h = k / 2;
        let e = elementary_all(a.values());
        big(factorial(h)) / big(factorial(k)) * signed_factorial_pairs(&e, d, k)
            / big(factorial(d - k) * factorial(d - h))
    };
    Ok((raw, closed))
}

/// The `B`-dependent factor, for even `k`.
///
/// raw: `(1/k!) Σ_p (-1)^p dim(2_k^p)² / s_{2_k^p}(1^d) Σ_q C_{2_k^p, 2_k^q} q! (k-2q)! m_{2_k^q}(B)`;
/// closed: `k!(d+1-k/2) / ((d+1)! d!) Σ_{i+j=k} (-1)^i (d-i)!(d-j)! e_i(B) e_j(B)`.
pub fn identity_rightdep(b: &Spectrum, k: usize, caps: &Caps) -> Result<(Rational, Rational)> {
    let d = b.dim();
    check_k_d(k, d, caps)?;
    if k % 2 == 1 {
        return Err(Error::OutOfRange(format!("k = {k} must be even")));
    }
    let h = k / 2;
    let monomials: Vec<Rational> = (0..=h)
        .map(|q| Ok(eval_monomial(&two_column(k, q)?, b)))
        .collect::<Result<_>>()?;
    let mut raw = Rational::zero();
    for p in 0..=h {
        let dim = big(dim_two_column(k, p)?);
        let weight = int(sign(p)) * &dim * &dim / schur_principal_two_column(k, p, d)?;
        let mut inner = Rational::zero();
        for (q, m) in monomials.iter().enumerate().take(p + 1) {
            inner += c_constant_two_column(k, p, q)? * big(factorial(q) * factorial(k - 2 * q)) * m;
        }
        raw += weight * inner;
    }
    raw /= big(factorial(k));
    let e = elementary_all(b.values());
    let closed = big(factorial(k)) * int((d + 1 - h) as i64) / big(factorial(d + 1) * factorial(d))
        * signed_factorial_pairs(&e, d, k);
    Ok((raw, closed))
}

/// `Σ_{s=0}^{2n} (-1)^s C(2n,s) / C(2n+2y, s+y)` against
/// `C(2n,n) / (C(y+n,n) C(2y+2n, y+n))`.
pub fn binomial_ratio_identity(n: usize, y: usize) -> (Rational, Rational) {
    let (n, y) = (n as i64, y as i64);
    let lhs = (0..=2 * n)
        .map(|s| {
            Rational::new(
                binomial(2 * n, s) * BigInt::from(if s % 2 == 0 { 1 } else { -1 }),
                binomial(2 * n + 2 * y, s + y),
            )
        })
        .sum();
    let rhs = Rational::new(
        binomial(2 * n, n),
        binomial(y + n, n) * binomial(2 * y + 2 * n, y + n),
    );
    (lhs, rhs)
}

/// `Σ_{s=0}^n n/(n+s) C(n+s,s) C(y-s, n-s)` against `C(n+y, n)`, for `n >= 1`.
pub fn rothe_hagen_identity(n: usize, y: usize) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(Error::OutOfRange("the Rothe–Hagen sum needs n >= 1".into()));
    }
    let (n, y) = (n as i64, y as i64);
    let lhs = (0..=n)
        .map(|s| ratio(n, n + s) * binomial_q(n + s, s) * binomial_q(y - s, n - s))
        .sum();
    Ok((lhs, binomial_q(n + y, n)))
}

/// `Σ_{q<=r<=p} (k-2q)! (k-2r+1) / ((r-q)! (k-r-q+1)!)` against `C(k-2q, p-q)`.
pub fn telescoping_identity(k: usize, q: usize, p: usize) -> Result<(Rational, Rational)> {
    if q > p || 2 * p > k {
        return Err(Error::OutOfRange(format!("need q <= p <= k/2, got k={k} p={p} q={q}")));
    }
    let lhs = (q..=p)
        .map(|r| {
            Rational::new(
                factorial(k - 2 * q) * BigInt::from(k - 2 * r + 1),
                factorial(r - q) * factorial(k - r - q + 1),
            )
        })
        .sum();
    Ok((lhs, binomial_q((k - 2 * q) as i64, (p - q) as i64)))
}

/// `Σ_{I ∈ Orb(2^q, 1^(k-2q), 0^q)} M_I(A)` against `C(d-(k-q), q) m_{2_k^q}(A)`.
pub fn padding_identity(a: &Spectrum, k: usize, q: usize) -> Result<(Rational, Rational)> {
    if 2 * q > k {
        return Err(Error::OutOfRange(format!("q = {q} exceeds k/2 for k = {k}")));
    }
    let d = a.dim();
    let lhs = if k > d {
        // no strictly increasing chain of length k in [d]
        Rational::zero()
    } else {
        two_one_zero(k, q)
            .orbit()
            .iter()
            .map(|i| eval_quasisym(i, a))
            .sum::<Result<Rational>>()?
    };
    let rhs = binomial_q(d as i64 - (k - q) as i64, q as i64) * eval_monomial(&two_column(k, q)?, a);
    Ok((lhs, rhs))
}

/// `e_{(k-p,p)} = Σ_q C(k-2q, p-q) m_{2_k^q}` as a monomial expansion.
pub fn two_row_e_closed(k: usize, p: usize) -> Result<SymExpansion> {
    if 2 * p > k {
        return Err(Error::OutOfRange(format!("p = {p} exceeds k/2 for k = {k}")));
    }
    let mut out = SymExpansion::new(Basis::Monomial, k);
    for q in 0..=p {
        out.add(two_column(k, q)?, binomial_q((k - 2 * q) as i64, (p - q) as i64))?;
    }
    Ok(out)
}

/// `m_{2_k^q}` in the elementary basis: for `q < k/2`,
/// `Σ_{r<=q} (-1)^{q+r} (C(k-q-r, k-2q) + C(k-q-r-1, k-2q)) e_{(k-r,r)}`, and for
/// `q = k/2`, `(-1)^{k/2} Σ_{i+j=k} (-1)^i e_i e_j`.
pub fn two_column_m_closed(k: usize, q: usize) -> Result<SymExpansion> {
    if 2 * q > k {
        return Err(Error::OutOfRange(format!("q = {q} exceeds k/2 for k = {k}")));
    }
    let mut out = SymExpansion::new(Basis::Elementary, k);
    if 2 * q == k {
        for i in 0..=k {
            out.add(Partition::from_unsorted(vec![i, k - i]), int(sign(q + i)))?;
        }
        return Ok(out);
    }
    let (kk, qq) = (k as i64, q as i64);
    for r in 0..=q {
        let rr = r as i64;
        let c = binomial(kk - qq - rr, kk - 2 * qq) + binomial(kk - qq - rr - 1, kk - 2 * qq);
        out.add(Partition::from_unsorted(vec![k - r, r]), big(c) * int(sign(q + r)))?;
    }
    Ok(out)
}
