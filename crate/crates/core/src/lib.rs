//! Braiding renormalization group for anyonic chains.
//!
//! The crate is organized around the pieces of the construction:
//!
//! * [`tl_diagram`]: exact Temperley-Lieb diagrams with Kauffman-bracket braiding.
//! * [`fusion_chain`]: SU(2)_k fusion-tree spaces, F-symbols and the local projectors.
//! * [`majorana_rep`]: the free-fermion realization of the critical Ising chain.
//! * [`rg_flow`]: the refinement channel, its iterates and the scaling limit.
//! * [`exact_oracle`]: Jordan-Wigner matrices and dense diagonalization used as ground truth.
//! * [`cli`]: the `anyonrg` command-line surface.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the diagram algebra is generic
//! over its coefficient ring. The aliases below fix the common `f64` instantiations.

pub mod cli;
pub mod error;
pub mod exact_oracle;
pub mod fusion_chain;
pub mod majorana_rep;
pub mod rg_flow;
pub mod scalar;
pub mod tl_diagram;

pub use error::{Error, Result};
pub use scalar::Real;

/// Exact diagram-algebra element with Laurent-polynomial coefficients in `A`.
pub type SymbolicTl = tl_diagram::TlElement<tl_diagram::LaurentPoly>;
/// Diagram-algebra element with coefficients evaluated at a concrete complex `A`.
pub type NumericTl = tl_diagram::TlElement<num_complex::Complex64>;
pub type Lattice = majorana_rep::LatticeSpec<f64>;
pub type Quadratic = majorana_rep::MajoranaQuadratic<f64>;
pub type Covariance = majorana_rep::CovarianceState<f64>;
pub type Refinement = rg_flow::RefinementSpec<f64>;
pub type Flow = rg_flow::FlowState<f64>;
pub type FusionData = fusion_chain::FusionCategoryData<f64>;
pub type Dense = exact_oracle::DenseOperator<f64>;
