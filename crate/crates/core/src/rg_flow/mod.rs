//! Braiding renormalization of the critical Ising chain.
//!
//! The refinement `alpha` attaches through-strings at every step and carries the Majoranas
//! of the chain at scale `N` to block Majoranas of the chain at scale `N+M`. Iterating it on
//! the fine ground state gives the flow `omega_M = omega_0 o alpha^M`, which converges at
//! rate `4^{-M}` to the two-point function of the Ising CFT on a circle. Everything is done
//! at the level of covariances: a flow entry is one lookup in a memoized momentum-sum
//! profile of the fine ground state.

mod chiral;
mod flow;
mod limit;
mod spec;

pub use chiral::{chiral_correlators, chiral_correlators_cached, ChiralTable, Chirality};
pub use flow::{
    braided_correlator, braided_correlator_cached, compose_flow, flow_covariance, flow_covariance_cached,
    refined_kernel, separated_observable, FlowState,
};
pub use limit::{
    abel_closed_form, abel_extrapolated, abel_regularized_exact, abel_regularized_series, cesaro_mean,
    convergence_series, fit_normalization, infinite_volume_generator, infinite_volume_two_point, partial_sums,
    scaling_limit_two_point, AbelEstimate, ConvergenceSeries, Normalization,
};
pub use spec::{embed_sites, Attachment, RefinementSpec};
