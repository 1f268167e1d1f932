use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::combinatorics::{hooks_and_contents, partitions_of, Partition};
use crate::error::{check_cap, Error, Result};
use crate::rational::factorial;

type CharacterCache = RwLock<HashMap<(Partition, Partition), i64>>;

fn cache() -> &'static CharacterCache {
    static CACHE: OnceLock<CharacterCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule, memoized on `(λ, ρ)`.
pub fn character(lambda: &Partition, rho: &Partition, caps: &Caps) -> Result<i64> {
    validate(lambda, rho, caps)?;
    Ok(murnaghan_nakayama(lambda, rho.parts(), true))
}

/// Same as [`character`] without touching the memo table.
pub fn character_uncached(lambda: &Partition, rho: &Partition, caps: &Caps) -> Result<i64> {
    validate(lambda, rho, caps)?;
    Ok(murnaghan_nakayama(lambda, rho.parts(), false))
}

fn validate(lambda: &Partition, rho: &Partition, caps: &Caps) -> Result<()> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    check_cap("character size k", lambda.size(), caps.partition_k)
}

/// Removes rim hooks of length `rho[0]`, `rho[1]`, ... on the abacus: a rim hook
/// of length `r` moves one bead from `b` to the empty position `b - r`, with sign
/// `(-1)^(beads strictly between)`.
fn murnaghan_nakayama(lambda: &Partition, rho: &[usize], memo: bool) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.clone(), Partition::from_unsorted(rho.to_vec()));
    if memo {
        if let Some(&v) = cache().read().expect("character cache poisoned").get(&key) {
            return v;
        }
    }
    let len = lambda.len();
    let beads: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        let smaller = Partition::from_unsorted(parts);
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&smaller, rest, memo);
    }
    if memo {
        cache()
            .write()
            .expect("character cache poisoned")
            .insert(key, total);
    }
    total
}

/// `z_ρ = ∏ i^(m_i) m_i!`, so that the class of `ρ` has `k!/z_ρ` elements.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    rho.multiplicities()
        .iter()
        .fold(BigInt::from(1), |acc, &(i, m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
}

pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size()) / centralizer_order(rho)
}

/// `dim(λ) = k! / ∏ hooks`.
pub fn dim_irrep(lambda: &Partition) -> BigInt {
    let hooks = hooks_and_contents(lambda)
        .iter()
        .fold(BigInt::from(1), |acc, c| acc * c.hook);
    factorial(lambda.size()) / hooks
}

/// `dim(2_k^p) = k! (k-2p+1) / (p! (k-p+1)!)`.
pub fn dim_two_column(k: usize, p: usize) -> Result<BigInt> {
    if 2 * p > k {
        return Err(Error::OutOfRange(format!("p={p} exceeds k/2 for k={k}")));
    }
    Ok(factorial(k) * (k - 2 * p + 1) / (factorial(p) * factorial(k - p + 1)))
}

/// Full character table of `S_k`, rows `λ` and columns `ρ` both in
/// reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub k: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(k: usize, caps: &Caps) -> Result<Self> {
        check_cap("character size k", k, caps.partition_k)?;
        let partitions = partitions_of(k);
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|r| character(l, r, caps)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            k,
            partitions,
            values,
        })
    }

    pub fn get(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == rho)?;
        Some(self.values[i][j])
    }

    /// JSON form: keys `"λ|ρ"` with comma-separated parts, e.g. `"2,1|3"`.
    pub fn to_json_map(&self) -> CharacterTableJson {
        let mut values = BTreeMap::new();
        for (i, l) in self.partitions.iter().enumerate() {
            for (j, r) in self.partitions.iter().enumerate() {
                values.insert(format!("{}|{}", join(l), join(r)), self.values[i][j]);
            }
        }
        CharacterTableJson { k: self.k, values }
    }

    pub fn from_json_map(json: &CharacterTableJson) -> Result<Self> {
        let partitions = partitions_of(json.k);
        let mut values = vec![vec![0; partitions.len()]; partitions.len()];
        let mut filled = 0;
        for (key, &v) in &json.values {
            let (l, r) = key
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("bad character key {key:?}")))?;
            let l: Partition = l.parse()?;
            let r: Partition = r.parse()?;
            let i = partitions.iter().position(|p| *p == l);
            let j = partitions.iter().position(|p| *p == r);
            match (i, j) {
                (Some(i), Some(j)) => values[i][j] = v,
                _ => return Err(Error::Parse(format!("key {key:?} is not a pair of partitions of {}", json.k))),
            }
            filled += 1;
        }
        if filled != partitions.len() * partitions.len() {
            return Err(Error::Parse("incomplete character table".into()));
        }
        Ok(CharacterTable {
            k: json.k,
            partitions,
            values,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTableJson {
    pub k: usize,
    pub values: BTreeMap<String, i64>,
}

fn join(p: &Partition) -> String {
    p.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::two_column;
    use crate::symgroup::Permutation;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        let caps = Caps::DEFAULT;
        for k in 1..=7 {
            for rho in partitions_of(k) {
                assert_eq!(character(&Partition::row(k), &rho, &caps).unwrap(), 1);
                let sgn = Permutation::of_cycle_type(&rho).sign();
                assert_eq!(character(&Partition::column(k), &rho, &caps).unwrap(), sgn);
            }
        }
    }

    #[test]
    fn standard_rep_of_s3() {
        let caps = Caps::DEFAULT;
        let lam = p(&[2, 1]);
        let got: Vec<i64> = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]
            .iter()
            .map(|r| character(&lam, r, &caps).unwrap())
            .collect();
        assert_eq!(got, vec![2, 0, -1]);
        assert!(character(&lam, &p(&[2]), &caps).is_err());
    }

    #[test]
    fn identity_value_is_dimension() {
        let caps = Caps::DEFAULT;
        for k in 0..=8 {
            for lam in partitions_of(k) {
                let chi = character(&lam, &Partition::column(k), &caps).unwrap();
                assert_eq!(BigInt::from(chi), dim_irrep(&lam));
            }
        }
    }

    #[test]
    fn transpose_twists_by_sign() {
        let caps = Caps::DEFAULT;
        for k in 1..=8 {
            for lam in partitions_of(k) {
                for rho in partitions_of(k) {
                    let sgn = Permutation::of_cycle_type(&rho).sign();
                    assert_eq!(
                        character(&lam.transpose(), &rho, &caps).unwrap(),
                        sgn * character(&lam, &rho, &caps).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        let caps = Caps::DEFAULT;
        for k in 1..=7 {
            let table = CharacterTable::new(k, &caps).unwrap();
            let sizes: Vec<BigInt> = table.partitions.iter().map(class_size).collect();
            for (a, ra) in table.values.iter().enumerate() {
                for (b, rb) in table.values.iter().enumerate() {
                    let s: BigInt = (0..sizes.len()).map(|c| &sizes[c] * ra[c] * rb[c]).sum();
                    let expected = if a == b { factorial(k) } else { BigInt::from(0) };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn memo_is_transparent() {
        let caps = Caps::DEFAULT;
        for k in 0..=7 {
            for lam in partitions_of(k) {
                for rho in partitions_of(k) {
                    assert_eq!(
                        character(&lam, &rho, &caps).unwrap(),
                        character_uncached(&lam, &rho, &caps).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_irrep(&p(&[2, 1, 1])), BigInt::from(3));
        assert_eq!(dim_irrep(&Partition::row(6)), BigInt::from(1));
        for k in 0..=10 {
            for q in 0..=k / 2 {
                assert_eq!(dim_two_column(k, q).unwrap(), dim_irrep(&two_column(k, q).unwrap()));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let t = CharacterTable::new(4, &Caps::DEFAULT).unwrap();
        let json = t.to_json_map();
        assert_eq!(json.values["2,1,1|4"], 1);
        let s = serde_json::to_string(&json).unwrap();
        let back: CharacterTableJson = serde_json::from_str(&s).unwrap();
        assert_eq!(CharacterTable::from_json_map(&back).unwrap(), t);
    }
}
