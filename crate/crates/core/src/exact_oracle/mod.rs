//! Brute-force ground truth on small chains.
//!
//! Majoranas are represented by Jordan-Wigner Pauli strings on `n/2` qubits and every
//! observable is assembled as an explicit `2^{n/2}`-dimensional complex matrix. Dense
//! Hermitian eigensolves supply ground states and their Majorana covariances.

mod dense;
mod pauli;

pub use dense::{
    expectation, ground_state, majorana_covariance, DenseGroundState, DenseOperator, MajoranaOracle, OracleInput,
};
pub use pauli::{jordan_wigner, Pauli, PauliString, MAX_MAJORANAS};
