//! SU(2)_k anyonic chains.
//!
//! States are admissible labelings of a fusion tree of sigma = 1/2 anyons. The local
//! projector onto the vacuum channel of two neighboring anyons is assembled from
//! F-symbols, and `e_x = d_sigma P_x` realizes the Temperley-Lieb algebra with
//! `delta = 2 cos(pi / (k+2))`. F-symbols come from the q-Racah formula in the unitary gauge
//! or from a JSON table.

mod basis;
mod fsymbol;
mod label;
mod operators;

pub use basis::{transfer_count, Boundary, FusionBasis};
pub use fsymbol::{quantum_6j, quantum_integer, FKey, FSymbolTable, FusionCategoryData};
pub use label::{admissible, Label};
pub use operators::{fusion_tl_generator, hamiltonian, projector_p0, verify_fusion_relations, SparseMatrix};
