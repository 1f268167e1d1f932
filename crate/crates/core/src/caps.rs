use serde::{Deserialize, Serialize};

/// Enumeration limits for the factorial- and Bell-growth operations.
///
/// Every capped operation takes a `&Caps` and fails with
/// [`Error::CapExceeded`](crate::Error::CapExceeded) beyond it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Partitions, tableaux, characters and Kostka matrices.
    pub partition_k: usize,
    /// Set partitions (Bell growth).
    pub set_partition_k: usize,
    /// Target size `m` of split-chain enumeration.
    pub split_chain_m: usize,
    /// Double sum over set partitions and Young subgroups.
    pub c_bruteforce_k: usize,
    /// Direct enumeration of maps `[k] -> [d]` in kernel sums.
    pub kernel_k: usize,
    /// `n! * n` permutation expansion of an immanant.
    pub immanant_n: usize,
    /// `2^n` exact evaluations of the coefficient-extraction route.
    pub gj_n: usize,
    /// `k!^2` pairs in a Haar moment.
    pub moment_k: usize,
    /// `k! × k!` exact Gram system solved by the Weingarten cross-check.
    pub gram_k: usize,
    /// Dimension of the exact brute-force commutator oracle.
    pub brute_force_d: usize,
    /// Dimension of the subset-enumeration identity checks.
    pub identity_d: usize,
}

impl Caps {
    pub const DEFAULT: Caps = Caps {
        partition_k: 10,
        set_partition_k: 8,
        split_chain_m: 10,
        c_bruteforce_k: 6,
        kernel_k: 6,
        immanant_n: 9,
        gj_n: 5,
        moment_k: 6,
        gram_k: 5,
        brute_force_d: 4,
        identity_d: 8,
    };
}

impl Default for Caps {
    fn default() -> Self {
        Caps::DEFAULT
    }
}
