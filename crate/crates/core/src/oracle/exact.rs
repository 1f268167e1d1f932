//! Exact expectation of `e_k(AUBU* − UBU*A)` by summing Haar moments.
//!
//! With `A = diag(a)`, `B = diag(b)` and `V = UBU*`, the commutator has entries
//! `(a_i − a_j) V_ij`, so
//!
//! `E e_k = Σ_{|S|=k} Σ_{p:S→[d]} ∏ b_{p(i)} Σ_{σ ∈ Sym(S)} sgn σ ∏ (a_i − a_σ(i))
//!          · E[∏_i u_{i p(i)} ū_{σ(i) p(i)}]`.
//!
//! The moment depends on `(p, σ)` only through positions in `S`, so it is
//! tabulated once per `(k, d)` with [`integrate_moment_with`] and reused for
//! every subset and every pair of spectra.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};
use crate::finfree::MonicPoly;
use crate::rational::{int, Rational};
use crate::symfunc::Spectrum;
use crate::symgroup::Permutation;
use crate::weingarten::{integrate_moment_with, weingarten, ClassFunction, IndexMap};

/// `E[∏_x u_{x p(x)} ū_{σ(x) p(x)}]` for every `σ ∈ S_k` and `p : [k] → [d]`.
pub struct MomentTable {
    k: usize,
    d: usize,
    perms: Vec<Permutation>,
    /// `values[σ][p]`, with `p` read as base-`d` digits, least significant first.
    values: Vec<Vec<Rational>>,
}

impl MomentTable {
    pub fn new(wg: &ClassFunction, k: usize, d: usize, caps: &Caps) -> Result<Self> {
        if k > d {
            return Err(Error::OutOfRange(format!("k = {k} exceeds d = {d}")));
        }
        let perms = Permutation::all(k);
        let maps = all_maps(k, d);
        let mut values = Vec::with_capacity(perms.len());
        if k == 0 {
            values.push(vec![Rational::one()]);
            return Ok(MomentTable { k, d, perms, values });
        }
        let rows = IndexMap::new((1..=k).collect())?;
        for sigma in &perms {
            let rows_bar = IndexMap::new(sigma.images().iter().map(|&s| s + 1).collect())?;
            let mut row = Vec::with_capacity(maps.len());
            for p in &maps {
                let cols = IndexMap::new(p.iter().map(|&c| c + 1).collect())?;
                row.push(integrate_moment_with(wg, &rows, &cols, &rows_bar, &cols, d, caps)?);
            }
            values.push(row);
        }
        Ok(MomentTable { k, d, perms, values })
    }

    /// `E e_k(AUBU* − UBU*A)` for diagonal `A`, `B` of this table's dimension.
    pub fn expected_ek(&self, a: &Spectrum, b: &Spectrum) -> Result<Rational> {
        for s in [a, b] {
            if s.dim() != self.d {
                return Err(Error::SizeMismatch {
                    left: s.dim(),
                    right: self.d,
                });
            }
        }
        let (k, d) = (self.k, self.d);
        let maps = all_maps(k, d);
        let weights: Vec<Rational> = maps
            .iter()
            .map(|p| p.iter().map(|&c| b.values()[c].clone()).product())
            .collect();
        let subsets: Vec<Vec<usize>> = itertools::Itertools::combinations(0..d, k).collect();
        let mut total = Rational::zero();
        for (sigma, row) in self.perms.iter().zip(&self.values) {
            let mut a_factor = Rational::zero();
            for s in &subsets {
                let prod: Rational = (0..k)
                    .map(|x| &a.values()[s[x]] - &a.values()[s[sigma.apply(x)]])
                    .product();
                a_factor += prod;
            }
            if a_factor.is_zero() {
                continue;
            }
            let b_factor: Rational = row.iter().zip(&weights).map(|(w, b)| w * b).sum();
            total += int(sigma.sign()) * a_factor * b_factor;
        }
        Ok(total)
    }
}

fn all_maps(k: usize, d: usize) -> Vec<Vec<usize>> {
    let count = d.pow(k as u32);
    (0..count)
        .map(|mut idx| {
            (0..k)
                .map(|_| {
                    let digit = idx % d;
                    idx /= d;
                    digit
                })
                .collect()
        })
        .collect()
}

type TableCache = RwLock<HashMap<(usize, usize), Arc<MomentTable>>>;

fn cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_inputs(a: &Spectrum, b: &Spectrum, k: usize, caps: &Caps) -> Result<usize> {
    let d = a.dim();
    if b.dim() != d {
        return Err(Error::SizeMismatch { left: d, right: b.dim() });
    }
    check_cap("brute-force dimension d", d, caps.brute_force_d)?;
    if k > d {
        return Err(Error::OutOfRange(format!("k = {k} exceeds d = {d}")));
    }
    Ok(d)
}

/// `E e_k(AUBU* − UBU*A)` by the explicit Weingarten sum.
pub fn brute_force_expected_ek(a: &Spectrum, b: &Spectrum, k: usize, caps: &Caps) -> Result<Rational> {
    let d = check_inputs(a, b, k, caps)?;
    let cached = cache().read().expect("moment table cache poisoned").get(&(k, d)).cloned();
    let table = match cached {
        Some(t) => t,
        None => {
            let t = Arc::new(MomentTable::new(weingarten(k, d, caps)?.as_ref(), k, d, caps)?);
            cache()
                .write()
                .expect("moment table cache poisoned")
                .insert((k, d), t.clone());
            t
        }
    };
    table.expected_ek(a, b)
}

/// [`brute_force_expected_ek`] against a supplied Weingarten table, uncached.
pub fn brute_force_expected_ek_with(
    wg: &ClassFunction,
    a: &Spectrum,
    b: &Spectrum,
    k: usize,
    caps: &Caps,
) -> Result<Rational> {
    let d = check_inputs(a, b, k, caps)?;
    MomentTable::new(wg, k, d, caps)?.expected_ek(a, b)
}

/// All coefficients `E e_0, ..., E e_d` as a monic polynomial.
pub fn brute_force_expected_charpoly(a: &Spectrum, b: &Spectrum, caps: &Caps) -> Result<MonicPoly> {
    let d = a.dim();
    let coeffs = (0..=d)
        .map(|k| brute_force_expected_ek(a, b, k, caps))
        .collect::<Result<Vec<_>>>()?;
    MonicPoly::new(coeffs)
}
