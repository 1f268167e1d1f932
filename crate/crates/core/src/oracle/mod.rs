//! Independent checks of the closed forms: an exact Weingarten-sum oracle, the
//! binomial and symmetric-function identity suite, and Haar Monte Carlo.

pub mod exact;
pub mod haar;
pub mod identities;
pub mod montecarlo;

pub use exact::{brute_force_expected_charpoly, brute_force_expected_ek, brute_force_expected_ek_with, MomentTable};
pub use haar::{haar_sample, haar_sample_with, ComplexMatrix};
pub use identities::{
    binomial_ratio_identity, identity_leftdep, identity_rightdep, padding_identity, rothe_hagen_identity,
    telescoping_identity, two_column_m_closed, two_row_e_closed,
};
pub use montecarlo::{
    mc_boxplus, mc_boxtimes, mc_commutator_charpoly, mc_conjugation, mc_entry_moments, BandCheck, Estimate,
    McConfig, McReport,
};
