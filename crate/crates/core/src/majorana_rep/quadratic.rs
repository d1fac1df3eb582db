use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::{One, Zero};

use super::lattice::LatticeSpec;
use crate::{Error, Real, Result};

/// Operator `c + i sum_{x<y} alpha_xy psi_x psi_y` with real antisymmetric `alpha`.
///
/// Equivalently `c + (i/2) sum_{x,y} alpha_xy psi_x psi_y`.
#[derive(Clone, Debug, PartialEq)]
pub struct MajoranaQuadratic<T: Real> {
    pub scalar: Complex<T>,
    alpha: DMatrix<T>,
}

impl<T: Real> MajoranaQuadratic<T> {
    pub fn constant(sites: usize, c: Complex<T>) -> Self {
        Self { scalar: c, alpha: DMatrix::zeros(sites, sites) }
    }

    pub fn identity(sites: usize) -> Self {
        Self::constant(sites, Complex::one())
    }

    /// Builds from an antisymmetric coefficient matrix.
    pub fn from_parts(scalar: Complex<T>, alpha: DMatrix<T>) -> Result<Self> {
        if !alpha.is_square() {
            return Err(Error::DimensionMismatch { expected: alpha.nrows(), got: alpha.ncols() });
        }
        let mut q = Self { scalar, alpha };
        q.antisymmetrize();
        Ok(q)
    }

    fn antisymmetrize(&mut self) {
        let half = T::lit(0.5);
        self.alpha = (&self.alpha - self.alpha.transpose()) * half;
    }

    pub fn site_count(&self) -> usize {
        self.alpha.nrows()
    }

    pub fn alpha(&self) -> &DMatrix<T> {
        &self.alpha
    }

    /// Adds `coeff * i psi_x psi_y`.
    pub fn add_bilinear(&mut self, x: usize, y: usize, coeff: T) {
        assert_ne!(x, y, "bilinear on a single site");
        self.alpha[(x, y)] += coeff;
        self.alpha[(y, x)] -= coeff;
    }

    /// Coefficient of `i psi_x psi_y`.
    pub fn bilinear(&self, x: usize, y: usize) -> T {
        self.alpha[(x, y)]
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.site_count() != other.site_count() {
            return Err(Error::DimensionMismatch {
                expected: self.site_count(),
                got: other.site_count(),
            });
        }
        Ok(Self { scalar: self.scalar + other.scalar, alpha: &self.alpha + &other.alpha })
    }

    pub fn scale(&self, s: T) -> Self {
        Self { scalar: self.scalar * s, alpha: &self.alpha * s }
    }

    pub fn adjoint(&self) -> Self {
        Self { scalar: self.scalar.conj(), alpha: self.alpha.clone() }
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.scalar.im == T::zero()
    }

    /// Pairs `(x, y)` with `x < y` carrying a nonzero bilinear coefficient.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let n = self.site_count();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if self.alpha[(x, y)] != T::zero() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let ds = T::cabs(self.scalar - other.scalar);
        let da = (&self.alpha - &other.alpha).amax();
        ds.max(da)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.alpha.iter().all(|a| a.is_zero())
    }
}

/// `e_x = (1 + i psi_{x+eps} psi_x) / sqrt 2`, with the anti-periodic sign at the seam.
pub fn tl_generator<T: Real>(lattice: &LatticeSpec<T>, x: usize) -> Result<MajoranaQuadratic<T>> {
    lattice.check_site(x)?;
    let n = lattice.site_count();
    let r = T::lit(std::f64::consts::FRAC_1_SQRT_2);
    let (next, sign) = lattice.shift(x, 1);
    let mut q = MajoranaQuadratic::constant(n, Complex::new(r, T::zero()));
    q.add_bilinear(next, x, sign * r);
    Ok(q)
}

/// Direct or inverse braid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum BraidSign {
    Direct,
    Inverse,
}

impl BraidSign {
    pub fn inverse(self) -> Self {
        match self {
            Self::Direct => Self::Inverse,
            Self::Inverse => Self::Direct,
        }
    }
}

/// `b_x = (i / sqrt 2)(psi_{x+eps} psi_x - 1)`; the inverse braid is its adjoint.
pub fn braid_unitary<T: Real>(
    lattice: &LatticeSpec<T>,
    x: usize,
    sign: BraidSign,
) -> Result<MajoranaQuadratic<T>> {
    lattice.check_site(x)?;
    let n = lattice.site_count();
    let r = T::lit(std::f64::consts::FRAC_1_SQRT_2);
    let (next, seam) = lattice.shift(x, 1);
    let mut b = MajoranaQuadratic::constant(n, Complex::new(T::zero(), -r));
    b.add_bilinear(next, x, seam * r);
    Ok(match sign {
        BraidSign::Direct => b,
        BraidSign::Inverse => b.adjoint(),
    })
}

/// `H = J sum_x e_x` on the anti-periodic chain.
pub fn ising_hamiltonian<T: Real>(lattice: &LatticeSpec<T>, coupling: T) -> MajoranaQuadratic<T> {
    let n = lattice.site_count();
    (0..n).fold(MajoranaQuadratic::constant(n, Complex::zero()), |acc, x| {
        let e = tl_generator(lattice, x).expect("site in range");
        acc.add(&e.scale(coupling)).expect("same size")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat() -> LatticeSpec<f64> {
        LatticeSpec::new(0, 1.0, 2).unwrap()
    }

    #[test]
    fn generator_coefficients() {
        let e = tl_generator(&lat(), 1).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(e.scalar, Complex::new(r, 0.0));
        assert_eq!(e.bilinear(2, 1), r);
        assert_eq!(e.bilinear(1, 2), -r);
        assert!(e.is_self_adjoint());
        assert_eq!(e.support(), vec![(1, 2)]);
    }

    #[test]
    fn generator_at_seam_flips_sign() {
        let e = tl_generator(&lat(), 3).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(e.bilinear(0, 3), -r);
    }

    #[test]
    fn braid_is_not_self_adjoint_and_inverse_is_adjoint() {
        let b = braid_unitary(&lat(), 0, BraidSign::Direct).unwrap();
        let bi = braid_unitary(&lat(), 0, BraidSign::Inverse).unwrap();
        assert!(!b.is_self_adjoint());
        assert_eq!(bi, b.adjoint());
    }

    #[test]
    fn out_of_range_site() {
        assert!(tl_generator(&lat(), 4).is_err());
    }
}
