use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::caps::Caps;
use crate::combinatorics::{kostka, kostka_table, Partition};
use crate::error::{Error, Result};

type InverseCache = RwLock<HashMap<usize, Arc<Vec<Vec<i64>>>>>;

/// Inverse of the (upper unitriangular) Kostka matrix of `k`, by back substitution.
fn inverse_table(k: usize, caps: &Caps) -> Result<Arc<Vec<Vec<i64>>>> {
    static CACHE: OnceLock<InverseCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("inverse kostka cache poisoned").get(&k) {
        return Ok(t.clone());
    }
    let table = kostka_table(k, caps)?;
    let n = table.partitions.len();
    let kk: Vec<Vec<i64>> = table
        .values
        .iter()
        .map(|r| r.iter().map(|&v| v as i64).collect())
        .collect();
    // K X = I column by column; X is upper unitriangular too
    let mut inv = vec![vec![0i64; n]; n];
    for row in (0..n).rev() {
        let mut x = vec![0i64; n];
        x[row] = 1;
        for (mid, lower) in inv.iter().enumerate().skip(row + 1) {
            let c = kk[row][mid];
            if c != 0 {
                x.iter_mut().zip(lower).for_each(|(v, l)| *v -= c * l);
            }
        }
        inv[row] = x;
    }
    let inv = Arc::new(inv);
    cache
        .write()
        .expect("inverse kostka cache poisoned")
        .entry(k)
        .or_insert(inv.clone());
    Ok(inv)
}

/// `K⁻¹(λ, μ)`.
pub fn inverse_kostka(lambda: &Partition, mu: &Partition, caps: &Caps) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let k = lambda.size();
    let table = kostka_table(k, caps)?;
    let inv = inverse_table(k, caps)?;
    Ok(inv[table.index[lambda]][table.index[mu]])
}

/// Multiplicity of the irreducible `V^λ` in the permutation module induced
/// from the trivial representation of `S_μ`; by Young's rule this is `K(λ, μ)`.
pub fn young_rule_multiplicity(lambda: &Partition, mu: &Partition, caps: &Caps) -> Result<u64> {
    kostka(lambda, mu, caps)
}
