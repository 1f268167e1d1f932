use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition: weakly decreasing positive parts. The empty partition is
/// the unique partition of 0.
///
/// `Ord` is lexicographic on the parts, so the reverse-lexicographic listing
/// used throughout the crate is the descending order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts descending and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, the one-row shape.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`, the one-column shape.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Cells `(row, col)`, 0-indexed, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.0[i] >= other.0[i])
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `2,1,1`, `(2,1,1)`, `[2, 1, 1]`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `k` in reverse-lexicographic order, `(k)` first and
/// `(1^k)` last. `partitions_of(0)` is `[()]`.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// `2_k^p = (2^p, 1^(k-2p))`, of length `k - p`.
pub fn two_column(k: usize, p: usize) -> Result<Partition> {
    if 2 * p > k {
        return Err(Error::OutOfRange(format!("2_k^p needs p <= k/2, got k={k}, p={p}")));
    }
    let mut parts = vec![2; p];
    parts.extend(std::iter::repeat_n(1, k - 2 * p));
    Ok(Partition(parts))
}

/// `μ ⊴ λ`: every partial sum of `μ` is at most the matching partial sum of `λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    let (mut sm, mut sl) = (0, 0);
    for i in 0..mu.len().max(lambda.len()) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hook length and content of one cell, `(row, col)` 0-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellData {
    pub row: usize,
    pub col: usize,
    pub hook: usize,
    pub content: i64,
}

/// Hook lengths `arm + leg + 1` and contents `col - row`, row-major.
pub fn hooks_and_contents(lambda: &Partition) -> Vec<CellData> {
    let t = lambda.transpose();
    lambda
        .cells()
        .map(|(i, j)| CellData {
            row: i,
            col: j,
            hook: (lambda.part(i) - j - 1) + (t.part(j) - i - 1) + 1,
            content: j as i64 - i as i64,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        // descending in the lexicographic Ord
        for k in 0..8 {
            let ps = partitions_of(k);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!("(2,1,1)".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn two_column_shapes() {
        assert_eq!(two_column(5, 2).unwrap(), p(&[2, 2, 1]));
        assert_eq!(two_column(4, 0).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(two_column(6, 3).unwrap(), p(&[2, 2, 2]));
        assert_eq!(two_column(5, 2).unwrap().len(), 3);
        assert!(two_column(5, 3).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2, 1, 1]), &p(&[2, 2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 2, 2]), &p(&[2, 2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[3])).is_ok());
        assert!(dominance_leq(&p(&[2]), &p(&[3])).is_err());
        // the partitions of 6 below (2,2,2)
        let below: Vec<_> = partitions_of(6)
            .into_iter()
            .filter(|mu| dominance_leq(mu, &p(&[2, 2, 2])).unwrap())
            .collect();
        assert_eq!(
            below,
            vec![p(&[2, 2, 2]), p(&[2, 2, 1, 1]), p(&[2, 1, 1, 1, 1]), p(&[1; 6])]
        );
    }

    #[test]
    fn hooks_contents() {
        let cells = hooks_and_contents(&p(&[2, 1, 1]));
        let hooks: Vec<_> = cells.iter().map(|c| c.hook).collect();
        let contents: Vec<_> = cells.iter().map(|c| c.content).collect();
        assert_eq!(hooks, vec![4, 1, 2, 1]);
        assert_eq!(contents, vec![0, 1, -1, -2]);
        let row: Vec<_> = hooks_and_contents(&p(&[5])).iter().map(|c| c.hook).collect();
        assert_eq!(row, vec![5, 4, 3, 2, 1]);
        assert_eq!(
            hooks_and_contents(&p(&[1])),
            vec![CellData { row: 0, col: 0, hook: 1, content: 0 }]
        );
    }

    #[test]
    fn two_column_hooks_follow_the_figure() {
        // first column k-p+1, k-p, ..., k-2p+2 then k-2p .. 1; second column p .. 1
        for k in 2..9 {
            for q in 1..=k / 2 {
                let lam = two_column(k, q).unwrap();
                for c in hooks_and_contents(&lam) {
                    let expected = if c.col == 1 {
                        q - c.row
                    } else if c.row < q {
                        k - q + 1 - c.row
                    } else {
                        k - q - c.row
                    };
                    assert_eq!(c.hook, expected, "k={k} p={q} cell {c:?}");
                }
            }
        }
    }

    #[test]
    fn transpose_involution() {
        for k in 0..=10 {
            for lam in partitions_of(k) {
                assert_eq!(lam.transpose().transpose(), lam);
                assert_eq!(lam.transpose().size(), k);
            }
        }
    }

    #[test]
    fn serde_as_array() {
        let lam = p(&[3, 1]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), lam);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
