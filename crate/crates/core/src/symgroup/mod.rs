//! Permutations, characters of `S_k`, inverse Kostka numbers, Young subgroups
//! and the central constants `C_{λ,μ}`.

mod character;
mod kostka_inverse;
mod permutation;
mod young;

pub use character::{
    centralizer_order, character, character_uncached, class_size, dim_irrep, dim_two_column, CharacterTable,
    CharacterTableJson,
};
pub use kostka_inverse::{inverse_kostka, young_rule_multiplicity};
pub use permutation::Permutation;
pub use young::{c_constant, c_constant_bruteforce, c_constant_two_column, CBruteForce, YoungSubgroup};
