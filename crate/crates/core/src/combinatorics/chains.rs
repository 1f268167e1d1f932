use num_bigint::BigInt;

use super::WeakComposition;
use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};
use crate::rational::binomial;

/// `C_m(k, l)`: maps `i : [k] -> [m]` (values 1-indexed) strictly increasing on
/// the first `k - l` slots and on the last `l` slots.
pub fn split_chains(k: usize, l: usize, m: usize, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    if l > k || k > m {
        return Err(Error::OutOfRange(format!("split chains need l <= k <= m, got k={k} l={l} m={m}")));
    }
    check_cap("split chain target m", m, caps.split_chain_m)?;
    let heads = increasing_sequences(k - l, m);
    let tails = increasing_sequences(l, m);
    let mut out = Vec::with_capacity(heads.len() * tails.len());
    for h in &heads {
        for t in &tails {
            let mut v = h.clone();
            v.extend_from_slice(t);
            out.push(v);
        }
    }
    Ok(out)
}

fn increasing_sequences(len: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=m {
            cur.push(v);
            go(v + 1, len, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, len, m, &mut Vec::new(), &mut out);
    out
}

/// `I(i) = (|i⁻¹(1)|, ..., |i⁻¹(m)|)`.
pub fn chain_weight(map: &[usize], m: usize) -> WeakComposition {
    let mut w = vec![0; m];
    for &v in map {
        w[v - 1] += 1;
    }
    WeakComposition(w)
}

/// `(2^q, 1^(k-2q), 0^q)`.
pub fn two_one_zero(k: usize, q: usize) -> WeakComposition {
    let mut e = vec![2; q];
    e.extend(std::iter::repeat_n(1, k - 2 * q));
    e.extend(std::iter::repeat_n(0, q));
    WeakComposition(e)
}

/// Number of `i ∈ C_k(k, l)` whose `I(i)` is a rearrangement of
/// `(2^q, 1^(k-2q), 0^q)`, by enumeration.
pub fn split_chain_count_of_type(k: usize, l: usize, q: usize, caps: &Caps) -> Result<u64> {
    if 2 * q > k {
        return Err(Error::OutOfRange(format!("q={q} exceeds k/2 for k={k}")));
    }
    let target = two_one_zero(k, q);
    Ok(split_chains(k, l, k, caps)?
        .iter()
        .filter(|i| chain_weight(i, k).is_rearrangement_of(&target))
        .count() as u64)
}

/// `C(k,l) C(k-l,q) C(l,q)` for `q <= l <= k-q`, else 0.
pub fn split_chain_count_formula(k: usize, l: usize, q: usize) -> BigInt {
    if q <= l && l + q <= k {
        let (k, l, q) = (k as i64, l as i64, q as i64);
        binomial(k, l) * binomial(k - l, q) * binomial(l, q)
    } else {
        BigInt::from(0)
    }
}
