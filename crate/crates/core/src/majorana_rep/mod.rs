//! Free-fermion realization of the critical Ising chain.
//!
//! Majoranas `psi_x` live on a dyadic periodic lattice with the anti-periodic seam
//! `psi_L = -psi_{-L}`. Observables of the form `c + i sum_{x<y} alpha_xy psi_x psi_y` carry
//! the Temperley-Lieb generators `e_x = (1 + i psi_{x+eps} psi_x)/sqrt 2` and the braids
//! `b_x = (i/sqrt 2)(psi_{x+eps} psi_x - 1)`. Gaussian states are stored through their
//! covariance `Gamma_xy = -i(<psi_x psi_y> - delta_xy)`; higher moments follow by Wick's
//! theorem.

mod covariance;
mod ground_state;
mod lattice;
mod quadratic;
mod site_map;

pub use covariance::{pfaffian, CovarianceState};
pub use ground_state::{
    energy_density_limit, ground_energy, ground_state_bogoliubov, ground_state_momentum,
    hamiltonian_form, momentum_sum, quadratic_ground_energy, GroundStateCache, GroundStateProfile,
};
pub use lattice::LatticeSpec;
pub use quadratic::{braid_unitary, ising_hamiltonian, tl_generator, BraidSign, MajoranaQuadratic};
pub use site_map::{conjugate_action, separate_pair, Direction, SignedSiteMap};
