use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex;
use rayon::prelude::*;

use super::spec::RefinementSpec;
use crate::majorana_rep::{
    separate_pair, CovarianceState, Direction, GroundStateCache, GroundStateProfile, LatticeSpec, MajoranaQuadratic,
};
use crate::{Error, Real, Result};

/// The refined state `omega_M = omega_0 o alpha^M` on the coarse lattice.
#[derive(Clone, Debug)]
pub struct FlowState<T: Real> {
    pub spec: RefinementSpec<T>,
    state: CovarianceState<T>,
    closed_form: DMatrix<T>,
}

impl<T: Real> FlowState<T> {
    /// Covariance obtained by restricting the fine ground state.
    pub fn state(&self) -> &CovarianceState<T> {
        &self.state
    }

    pub fn gamma(&self) -> &DMatrix<T> {
        self.state.gamma()
    }

    /// Same covariance from the closed-form momentum sum.
    pub fn closed_form(&self) -> &DMatrix<T> {
        &self.closed_form
    }

    /// Largest entrywise difference between the two routes.
    pub fn route_discrepancy(&self) -> T {
        (self.state.gamma() - &self.closed_form).amax()
    }

    /// `Gamma_M(i, j)`, i.e. `-i <psi_i psi_j>` for `i != j`.
    pub fn entry(&self, i: usize, j: usize) -> T {
        self.state.gamma()[(i, j)]
    }
}

/// Covariance of block Majoranas `chi_z = (psi_{2z} + beta psi_{2z+1}) / sqrt 2` at block
/// offset `dz = z - w` in a translation-invariant state with profile `g`.
pub(crate) fn block_covariance<T: Real>(profile: &GroundStateProfile<T>, beta: T, dz: isize) -> T {
    if dz == 0 {
        return T::zero();
    }
    let d = 2 * dz;
    let half = T::lit(0.5);
    half * (profile.value(d) * T::lit(2.0) + beta * (profile.value(d + 1) + profile.value(d - 1)))
}

/// Closed-form momentum sum of the depth-`M` flow at coarse offset `D`:
/// `2^{M(s-1)} beta (1 / 2 l_N) sum_{m < l_{N+M}} sin(pi (m+1/2) D / l_N) 2 cos(pi (m+1/2) / 2 l_{N+M})`.
pub fn refined_kernel<T: Real>(spec: &RefinementSpec<T>, offset: isize) -> T {
    if offset == 0 {
        return T::zero();
    }
    let ln = spec.coarse.half_sites();
    let lf = spec.block_lattice().half_sites();
    let period = 4 * ln as i128;
    let unit = T::pi() / T::of_usize(2 * ln);
    let cos_unit = T::pi() / T::of_usize(4 * lf);
    let mut acc = T::zero();
    let mut comp = T::zero();
    for m in 0..lf {
        let odd = (2 * m + 1) as i128;
        let p = (odd * offset as i128).rem_euclid(period) as usize;
        let term = (unit * T::of_usize(p)).sin() * (cos_unit * T::of_usize(2 * m + 1)).cos() * T::lit(2.0) - comp;
        let next = acc + term;
        comp = (next - acc) - term;
        acc = next;
    }
    let weight = T::lit(2.0).powf((spec.scaling_exponent - T::one()) * T::of_usize(spec.depth as usize));
    weight * spec.beta() * acc / T::of_usize(2 * ln)
}

/// Depth-`M` flow using a shared cache of fine ground-state profiles.
pub fn flow_covariance_cached<T: Real>(spec: &RefinementSpec<T>, cache: &GroundStateCache<T>) -> Result<FlowState<T>> {
    let profile = cache.profile(&spec.majorana_lattice());
    let n = spec.coarse.site_count();
    let weight = spec.bilinear_weight();
    let beta = spec.beta();
    let embed: Vec<isize> = (0..n).map(|i| spec.embed(i) as isize).collect();
    let rows: Vec<Vec<T>> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|j| weight * block_covariance(&profile, beta, embed[i] - embed[j])).collect())
        .collect();
    let restricted = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let kernel: Vec<T> =
        (0..n as isize).into_par_iter().map(|d| refined_kernel(spec, d)).collect();
    let closed_form = DMatrix::from_fn(n, n, |i, j| {
        if i >= j {
            kernel[i - j]
        } else {
            -kernel[j - i]
        }
    });
    Ok(FlowState { spec: *spec, state: CovarianceState::new(spec.coarse, restricted)?, closed_form })
}

/// Depth-`M` flow with a private cache.
pub fn flow_covariance<T: Real>(spec: &RefinementSpec<T>) -> Result<FlowState<T>> {
    flow_covariance_cached(spec, &GroundStateCache::new())
}

/// Pulls a flow computed on the depth-`M1` block lattice back through the first `M1` steps:
/// `alpha^{M1}` applied to the inner state.
pub fn compose_flow<T: Real>(outer: &RefinementSpec<T>, inner: &FlowState<T>) -> Result<CovarianceState<T>> {
    if inner.spec.coarse != outer.block_lattice() {
        return Err(Error::LatticeMismatch);
    }
    let n = outer.coarse.site_count();
    let w = outer.bilinear_weight();
    let g = DMatrix::from_fn(n, n, |i, j| w * inner.entry(outer.embed(i), outer.embed(j)));
    CovarianceState::new(outer.coarse, g)
}

/// Observable on the coarse lattice whose two legs sit at `x` and `y`, obtained from a
/// Temperley-Lieb generator by braiding one leg away.
pub fn separated_observable<T: Real>(
    lattice: &LatticeSpec<T>,
    x: usize,
    y: usize,
    spec: &RefinementSpec<T>,
) -> Result<MajoranaQuadratic<T>> {
    lattice.check_site(x)?;
    lattice.check_site(y)?;
    if x == y {
        return Err(Error::CoincidentPoints);
    }
    let (start, dir, m) = if y > x { (x, Direction::Right, y - x) } else { (x - 1, Direction::Left, x - y) };
    Ok(separate_pair(lattice, start, m, dir, spec.braid)?.1)
}

/// Correlation function at scale `N` by annihilating two anyons at `x`, braiding them apart
/// to `y`, refining `M` times and evaluating in the fine ground state.
pub fn braided_correlator_cached<T: Real>(
    spec: &RefinementSpec<T>,
    x: usize,
    y: usize,
    cache: &GroundStateCache<T>,
) -> Result<Complex<T>> {
    let obs = separated_observable(&spec.coarse, x, y, spec)?;
    let profile: Arc<GroundStateProfile<T>> = cache.profile(&spec.majorana_lattice());
    let weight = spec.bilinear_weight();
    let mut value = obs.scalar;
    for (u, v) in obs.support() {
        let g = weight * block_covariance(&profile, spec.beta(), spec.embed(u) as isize - spec.embed(v) as isize);
        value -= Complex::new(obs.bilinear(u, v) * g, T::zero());
    }
    Ok(value)
}

pub fn braided_correlator<T: Real>(spec: &RefinementSpec<T>, x: usize, y: usize) -> Result<Complex<T>> {
    braided_correlator_cached(spec, x, y, &GroundStateCache::new())
}
