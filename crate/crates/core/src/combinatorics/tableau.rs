use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::{partitions_of, Partition, WeakComposition};
use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};

/// Young tableau: a filling of a shape by positive integers, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::Invalid("tableau entries must be positive".into()));
        }
        Ok(Tableau { shape, rows })
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    /// `ω(T)`: entry `i-1` counts the `i`s, padded to `len` entries.
    pub fn weight(&self, len: usize) -> WeakComposition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut w = vec![0; len.max(max)];
        for &e in self.rows.iter().flatten() {
            w[e - 1] += 1;
        }
        WeakComposition(w)
    }
}

/// `SST(λ)` with entries in `1..=max_entry`, by row-major backtracking.
pub fn ssyt(shape: &Partition, max_entry: usize, caps: &Caps) -> Result<Vec<Tableau>> {
    check_cap("tableau size", shape.size(), caps.partition_k)?;
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        max_entry: usize,
        shape: &Partition,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { rows[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        for e in lo_row.max(lo_col)..=max_entry {
            rows[i].push(e);
            go(idx + 1, cells, max_entry, shape, rows, out);
            rows[i].pop();
        }
    }

    go(0, &cells, max_entry, shape, &mut rows, &mut out);
    Ok(out)
}

/// Shapes `ν ⊇ inner` with `ν / inner` a horizontal strip of `n` cells.
fn horizontal_strips(inner: &[usize], n: usize, outer: &Partition) -> Vec<Vec<usize>> {
    let rows = outer.len();
    let mut out = Vec::new();
    fn go(
        i: usize,
        left: usize,
        inner: &[usize],
        outer: &Partition,
        rows: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == rows {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let base = inner.get(i).copied().unwrap_or(0);
        // strip: row i grows to at most the previous row of `inner`
        let cap_above = if i == 0 { usize::MAX } else { inner.get(i - 1).copied().unwrap_or(0) };
        let max_len = outer.part(i).min(cap_above);
        if max_len < base {
            return;
        }
        for add in 0..=(max_len - base).min(left) {
            cur.push(base + add);
            go(i + 1, left - add, inner, outer, rows, cur, out);
            cur.pop();
        }
    }
    go(0, n, inner, outer, rows, &mut Vec::new(), &mut out);
    out
}

/// `K(λ, μ)`: number of SSYT of shape `λ` and weight `μ`, counted by adding
/// horizontal strips of sizes `μ_1, μ_2, ...`.
pub fn kostka(lambda: &Partition, mu: &Partition, caps: &Caps) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    check_cap("Kostka size k", lambda.size(), caps.partition_k)?;
    let mut memo: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
    fn go(
        inner: Vec<usize>,
        step: usize,
        lambda: &Partition,
        mu: &Partition,
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        if step == mu.len() {
            return u64::from(inner.as_slice() == lambda.parts());
        }
        if let Some(&v) = memo.get(&(inner.clone(), step)) {
            return v;
        }
        let total = horizontal_strips(&inner, mu.part(step), lambda)
            .into_iter()
            .map(|next| go(next, step + 1, lambda, mu, memo))
            .sum();
        memo.insert((inner, step), total);
        total
    }
    Ok(go(Vec::new(), 0, lambda, mu, &mut memo))
}

/// Kostka matrix of `k`, rows and columns in reverse-lexicographic order,
/// which makes it upper unitriangular.
#[derive(Debug)]
pub struct KostkaTable {
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub values: Vec<Vec<u64>>,
}

impl KostkaTable {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> u64 {
        self.values[self.index[lambda]][self.index[mu]]
    }
}

fn build_kostka_table(k: usize, caps: &Caps) -> Result<KostkaTable> {
    let partitions = partitions_of(k);
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let values = partitions
        .iter()
        .map(|l| partitions.iter().map(|m| kostka(l, m, caps)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(KostkaTable {
        partitions,
        index,
        values,
    })
}

type KostkaCache = RwLock<HashMap<usize, Arc<KostkaTable>>>;

/// Memoized [`KostkaTable`]; identical to a fresh computation.
pub fn kostka_table(k: usize, caps: &Caps) -> Result<Arc<KostkaTable>> {
    check_cap("Kostka size k", k, caps.partition_k)?;
    static CACHE: OnceLock<KostkaCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("kostka cache poisoned").get(&k) {
        return Ok(t.clone());
    }
    let table = Arc::new(build_kostka_table(k, caps)?);
    cache
        .write()
        .expect("kostka cache poisoned")
        .entry(k)
        .or_insert(table.clone());
    Ok(table)
}
