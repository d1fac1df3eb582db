use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;

use super::covariance::CovarianceState;
use super::lattice::LatticeSpec;
use super::quadratic::{ising_hamiltonian, MajoranaQuadratic};
use crate::{Error, Real, Result};

/// Single-mode momentum sum of the anti-periodic Fermi sea at lattice offset `j >= 0`:
/// `(1/l) sum_{m<l} sin(pi (m + 1/2) j / l)`, i.e. `(eps/L) sum_k sin(k eps j)` over the
/// positive anti-periodic momenta `k = (pi/L)(m + 1/2)`.
///
/// Phases are reduced exactly in integer arithmetic before the sine is taken.
pub fn momentum_sum<T: Real>(half_sites: usize, j: usize) -> T {
    let l = half_sites;
    let period = 4 * l as u128;
    let mut acc = T::zero();
    let mut comp = T::zero();
    let unit = T::pi() / T::of_usize(2 * l);
    for m in 0..l {
        let p = ((2 * m + 1) as u128 * j as u128 % period) as usize;
        let term = (unit * T::of_usize(p)).sin() - comp;
        let next = acc + term;
        comp = (next - acc) - term;
        acc = next;
    }
    acc / T::of_usize(l)
}

/// Translation-invariant ground-state profile `Gamma_{x+j, x} = g(j)`, memoized per offset.
///
/// Reads and inserts may happen concurrently from many threads.
#[derive(Debug)]
pub struct GroundStateProfile<T: Real> {
    lattice: LatticeSpec<T>,
    memo: RwLock<HashMap<usize, T>>,
}

impl<T: Real> GroundStateProfile<T> {
    pub fn new(lattice: LatticeSpec<T>) -> Self {
        Self { lattice, memo: RwLock::new(HashMap::new()) }
    }

    pub fn lattice(&self) -> &LatticeSpec<T> {
        &self.lattice
    }

    /// `Gamma_{x+offset, x}` for any integer offset, using `g(j + n) = -g(j)`.
    pub fn value(&self, offset: isize) -> T {
        let n = self.lattice.site_count() as isize;
        let wraps = offset.div_euclid(n);
        let j = offset.rem_euclid(n) as usize;
        let base = self.reduced(j);
        if wraps.rem_euclid(2) == 0 {
            base
        } else {
            -base
        }
    }

    fn reduced(&self, j: usize) -> T {
        if j == 0 {
            return T::zero();
        }
        if let Some(v) = self.memo.read().expect("profile lock").get(&j) {
            return *v;
        }
        let v = momentum_sum(self.lattice.half_sites(), j);
        self.memo.write().expect("profile lock").insert(j, v);
        v
    }

    pub fn memoized_offsets(&self) -> usize {
        self.memo.read().expect("profile lock").len()
    }
}

/// Lattice identity: scale, base half-sites and the bit pattern of the base spacing.
type LatticeKey = (u32, usize, u64);

/// Process-wide cache of ground-state profiles keyed by lattice.
#[derive(Debug, Default)]
pub struct GroundStateCache<T: Real> {
    profiles: RwLock<HashMap<LatticeKey, Arc<GroundStateProfile<T>>>>,
}

impl<T: Real> GroundStateCache<T> {
    pub fn new() -> Self {
        Self { profiles: RwLock::new(HashMap::new()) }
    }

    /// Returns the shared profile for `lattice`, creating it on first use.
    pub fn profile(&self, lattice: &LatticeSpec<T>) -> Arc<GroundStateProfile<T>> {
        let key = lattice.key();
        if let Some(p) = self.profiles.read().expect("cache lock").get(&key) {
            return Arc::clone(p);
        }
        let mut guard = self.profiles.write().expect("cache lock");
        Arc::clone(guard.entry(key).or_insert_with(|| Arc::new(GroundStateProfile::new(*lattice))))
    }

    pub fn len(&self) -> usize {
        self.profiles.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Ground state of the critical anti-periodic chain from the momentum sum.
pub fn ground_state_momentum<T: Real>(lattice: &LatticeSpec<T>) -> Result<CovarianceState<T>> {
    let n = lattice.site_count();
    let l = lattice.half_sites();
    let profile: Vec<T> = (0..n).into_par_iter().map(|j| if j == 0 { T::zero() } else { momentum_sum(l, j) }).collect();
    let gamma = DMatrix::from_fn(n, n, |x, y| {
        if x >= y {
            profile[x - y]
        } else {
            -profile[y - x]
        }
    });
    CovarianceState::new(*lattice, gamma)
}

/// Antisymmetric single-particle matrix of `H = J sum e_x`, written `c + (i/2) psi^T alpha psi`.
pub fn hamiltonian_form<T: Real>(lattice: &LatticeSpec<T>, coupling: T) -> MajoranaQuadratic<T> {
    ising_hamiltonian(lattice, coupling)
}

/// Ground state by diagonalizing the quadratic form: `Gamma = alpha |alpha|^{-1}`.
pub fn ground_state_bogoliubov<T: Real>(lattice: &LatticeSpec<T>) -> Result<CovarianceState<T>> {
    let h = hamiltonian_form(lattice, T::one());
    let alpha = h.alpha();
    let eig = SymmetricEigen::new(alpha.transpose() * alpha);
    let top = eig.eigenvalues.iter().fold(T::zero(), |m, &v| m.max(v));
    let floor = eig.eigenvalues.iter().fold(top, |m, &v| m.min(v));
    if floor <= top * T::lit(1e-12) {
        return Err(Error::ZeroMode);
    }
    let inv_sqrt = eig.eigenvalues.map(|v| T::one() / v.sqrt());
    let abs_inv = &eig.eigenvectors * DMatrix::from_diagonal(&inv_sqrt) * eig.eigenvectors.transpose();
    CovarianceState::new(*lattice, alpha * abs_inv)
}

/// Ground energy of `c + (i/2) psi^T alpha psi`: `c - (1/2) tr |alpha|`.
pub fn quadratic_ground_energy<T: Real>(h: &MajoranaQuadratic<T>) -> T {
    let alpha = h.alpha();
    let eig = SymmetricEigen::new(alpha.transpose() * alpha);
    let trace_abs = eig.eigenvalues.iter().fold(T::zero(), |acc, &v| acc + v.max(T::zero()).sqrt());
    h.scalar.re - trace_abs * T::lit(0.5)
}

/// Ground energy of `J sum e_x` from the single-particle mode sum.
pub fn ground_energy<T: Real>(lattice: &LatticeSpec<T>, coupling: T) -> T {
    quadratic_ground_energy(&hamiltonian_form(lattice, coupling))
}

/// Thermodynamic-limit energy per site of `J sum e_x`: `J (1/sqrt 2 - sqrt 2 / pi)`.
pub fn energy_density_limit<T: Real>(coupling: T) -> T {
    let r = T::lit(std::f64::consts::FRAC_1_SQRT_2);
    coupling * (r - T::lit(std::f64::consts::SQRT_2) / T::pi())
}
