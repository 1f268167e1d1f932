//! Integer partitions, compositions, set partitions, tableaux and split chains.

mod chains;
mod composition;
mod partition;
mod set_partition;
mod tableau;

pub use chains::{chain_weight, split_chain_count_formula, split_chain_count_of_type, split_chains, two_one_zero};
pub(crate) use composition::next_permutation;
pub use composition::WeakComposition;
pub use partition::{dominance_leq, hooks_and_contents, partitions_of, two_column, CellData, Partition};
pub use set_partition::{set_partition_type_count, set_partitions, set_partitions_of_type, SetPartition};
pub use tableau::{kostka, kostka_table, ssyt, KostkaTable, Tableau};
