//! Unitary Weingarten functions and Haar moments of matrix entries.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::combinatorics::{partitions_of, Partition};
use crate::error::{check_cap, Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{big, factorial, int, Rational, RationalStr};
use crate::symfunc::schur_principal;
use crate::symgroup::{character, dim_irrep, Permutation};

/// A function on `S_k` given by its value on each cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    k: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    /// `values` must have exactly one entry per partition of `k`.
    pub fn new(k: usize, values: BTreeMap<Partition, Rational>) -> Result<Self> {
        let expected = partitions_of(k);
        if values.len() != expected.len() || expected.iter().any(|p| !values.contains_key(p)) {
            return Err(Error::Invalid(format!(
                "class function on S_{k} needs one value per partition of {k}"
            )));
        }
        Ok(ClassFunction { k, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, cycle_type: &Partition) -> &Rational {
        &self.values[cycle_type]
    }

    pub fn at(&self, sigma: &Permutation) -> &Rational {
        self.get(&sigma.cycle_type())
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rational> {
        &self.values
    }

    /// Replaces one value; used to build corrupted tables for negative controls.
    pub fn with_value(mut self, cycle_type: &Partition, value: Rational) -> Result<Self> {
        match self.values.get_mut(cycle_type) {
            Some(v) => *v = value,
            None => return Err(Error::Invalid(format!("{cycle_type} is not a cycle type of S_{}", self.k))),
        }
        Ok(self)
    }

    pub fn to_json(&self, d: Option<usize>) -> ClassFunctionJson {
        ClassFunctionJson {
            k: self.k,
            d,
            values: self
                .values
                .iter()
                .rev()
                .map(|(p, v)| ClassValueJson {
                    cycle_type: p.clone(),
                    rational: RationalStr(v.clone()),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ClassFunctionJson) -> Result<Self> {
        let mut values = BTreeMap::new();
        for entry in &json.values {
            if values.insert(entry.cycle_type.clone(), entry.rational.0.clone()).is_some() {
                return Err(Error::Parse(format!("duplicate cycle type {}", entry.cycle_type)));
            }
        }
        Self::new(json.k, values)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunctionJson {
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub values: Vec<ClassValueJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassValueJson {
    pub cycle_type: Partition,
    pub rational: RationalStr,
}

/// A map `[k] -> [d]`, stored 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IndexMap(Vec<usize>);

impl IndexMap {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Invalid("index map needs k >= 1".into()));
        }
        if entries.contains(&0) {
            return Err(Error::Invalid("index map entries are 1-indexed".into()));
        }
        Ok(IndexMap(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check_range(&self, d: usize) -> Result<()> {
        match self.0.iter().find(|&&e| e > d) {
            Some(e) => Err(Error::OutOfRange(format!("index {e} exceeds d = {d}"))),
            None => Ok(()),
        }
    }
}

impl TryFrom<Vec<usize>> for IndexMap {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<IndexMap> for Vec<usize> {
    fn from(m: IndexMap) -> Self {
        m.0
    }
}

type WgCache = RwLock<HashMap<(usize, usize), Arc<ClassFunction>>>;

fn cache() -> &'static WgCache {
    static CACHE: OnceLock<WgCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Wg_{k,d}(ρ) = (1/k!²) Σ_{λ ⊢ k, ℓ(λ) <= d} dim(λ)² / s_λ(1^d) · χ^λ(ρ)`,
/// computed once per `(k, d)`.
pub fn weingarten(k: usize, d: usize, caps: &Caps) -> Result<Arc<ClassFunction>> {
    if d == 0 {
        return Err(Error::OutOfRange("Weingarten function needs d >= 1".into()));
    }
    check_cap("Weingarten size k", k, caps.partition_k)?;
    if let Some(wg) = cache().read().expect("Weingarten cache poisoned").get(&(k, d)) {
        return Ok(wg.clone());
    }
    let kf = big(factorial(k));
    let norm = &kf * &kf;
    let weights: Vec<(Partition, Rational)> = partitions_of(k)
        .into_iter()
        .filter(|lam| lam.len() <= d)
        .map(|lam| {
            let dim = big(dim_irrep(&lam));
            let w = &dim * &dim / schur_principal(&lam, d) / &norm;
            (lam, w)
        })
        .collect();
    let mut values = BTreeMap::new();
    for rho in partitions_of(k) {
        let mut v = Rational::zero();
        for (lam, w) in &weights {
            v += w * int(character(lam, &rho, caps)?);
        }
        values.insert(rho, v);
    }
    let wg = Arc::new(ClassFunction::new(k, values)?);
    cache()
        .write()
        .expect("Weingarten cache poisoned")
        .insert((k, d), wg.clone());
    Ok(wg)
}

/// Independent route for `d >= k`: the matrix `[Wg(π⁻¹τ)]` is the inverse of
/// the Gram matrix `[d^{#cycles(π⁻¹τ)}]` over `S_k`.
pub fn weingarten_gram(k: usize, d: usize, caps: &Caps) -> Result<ClassFunction> {
    check_cap("Gram system size k", k, caps.gram_k)?;
    if d < k {
        return Err(Error::OutOfRange(format!("Gram matrix is singular for d = {d} < k = {k}")));
    }
    let perms = Permutation::all(k);
    let gram = RationalMatrix::from_fn(perms.len(), |a, b| {
        let cycles = perms[a].inverse().compose(&perms[b]).num_cycles();
        num_traits::pow(int(d as i64), cycles)
    });
    let inv = gram.inverse()?;
    // perms[0] is the identity, so row 0 holds Wg(τ)
    let mut values = BTreeMap::new();
    for (b, tau) in perms.iter().enumerate() {
        values.entry(tau.cycle_type()).or_insert_with(|| inv.get(0, b).clone());
    }
    ClassFunction::new(k, values)
}

/// All `π` with `a = b ∘ π`.
fn matching_permutations(a: &[usize], b: &[usize]) -> Vec<Permutation> {
    fn go(a: &[usize], b: &[usize], used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let x = cur.len();
        if x == a.len() {
            out.push(Permutation::new(cur.clone()).expect("bijection"));
            return;
        }
        for y in 0..b.len() {
            if !used[y] && b[y] == a[x] {
                used[y] = true;
                cur.push(y);
                go(a, b, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut vec![false; a.len()], &mut Vec::new(), &mut out);
    out
}

/// `E[u_{i(1) j(1)} ⋯ u_{i(k) j(k)} ū_{i′(1) j′(1)} ⋯ ū_{i′(k′) j′(k′)}]` for
/// Haar `U` in `U(d)`.
pub fn integrate_moment(
    i: &IndexMap,
    j: &IndexMap,
    i_bar: &IndexMap,
    j_bar: &IndexMap,
    d: usize,
    caps: &Caps,
) -> Result<Rational> {
    let k = i.len();
    check_cap("moment order k", k.max(i_bar.len()), caps.moment_k)?;
    if k != i_bar.len() {
        return Ok(Rational::zero());
    }
    let wg = weingarten(k, d, caps)?;
    integrate_moment_with(&wg, i, j, i_bar, j_bar, d, caps)
}

/// [`integrate_moment`] against a supplied Weingarten table.
pub fn integrate_moment_with(
    wg: &ClassFunction,
    i: &IndexMap,
    j: &IndexMap,
    i_bar: &IndexMap,
    j_bar: &IndexMap,
    d: usize,
    caps: &Caps,
) -> Result<Rational> {
    for (a, b) in [(i, j), (i_bar, j_bar)] {
        if a.len() != b.len() {
            return Err(Error::SizeMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
    }
    for m in [i, j, i_bar, j_bar] {
        m.check_range(d)?;
    }
    let k = i.len();
    check_cap("moment order k", k.max(i_bar.len()), caps.moment_k)?;
    if k != i_bar.len() {
        return Ok(Rational::zero());
    }
    if wg.k() != k {
        return Err(Error::SizeMismatch {
            left: wg.k(),
            right: k,
        });
    }
    let pis = matching_permutations(i.entries(), i_bar.entries());
    let sigmas = matching_permutations(j.entries(), j_bar.entries());
    let mut total = Rational::zero();
    for pi in &pis {
        let pi_inv = pi.inverse();
        for sigma in &sigmas {
            total += wg.at(&pi_inv.compose(sigma));
        }
    }
    Ok(total)
}
