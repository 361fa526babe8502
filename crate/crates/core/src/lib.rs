//! RSK correspondence on square nonnegative integer matrices, inversion
//! statistics, and an exhaustive harness for the minimal-inversion matrices of
//! a fixed RSK shape.

pub mod cli;
pub mod greene;
pub mod matrices;
pub mod minimal;
pub mod partitions;
pub mod rsk;
pub mod search;
pub mod tableaux;

pub use greene::{greene_shape, max_k_increasing, GreeneOracle, GreeneProfile};
pub use matrices::{hankel_from_params, Biword, HankelParams, Matrix};
pub use minimal::{minimal_hankel_candidates, minimal_inversion_formula, two_row_minimal};
pub use partitions::{enumerate_partitions, ColumnMultiplicities, Partition};
pub use rsk::{row_insert, rsk_forward, rsk_inverse, shape_of_matrix, TableauPair};
pub use search::{
    brute_force_minimum, enumerate_shape_class, enumerate_via_inverse_rsk, sweep, verify_partition,
    Caps, SweepSpec, VerificationRecord,
};
pub use tableaux::{enumerate_ssyt, Tableau};
