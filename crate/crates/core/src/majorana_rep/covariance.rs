use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::{One, Zero};

use super::lattice::LatticeSpec;
use super::quadratic::MajoranaQuadratic;
use crate::{Error, Real, Result};

/// Gaussian state given by `Gamma_xy = -i(<psi_x psi_y> - delta_xy)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CovarianceState<T: Real> {
    lattice: LatticeSpec<T>,
    gamma: DMatrix<T>,
}

impl<T: Real> CovarianceState<T> {
    /// Wraps a covariance matrix; it must be square, sized to the lattice and antisymmetric
    /// up to `sqrt(eps)` (the stored matrix is exactly antisymmetrized).
    pub fn new(lattice: LatticeSpec<T>, gamma: DMatrix<T>) -> Result<Self> {
        let n = lattice.site_count();
        if gamma.nrows() != n || gamma.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: gamma.nrows() });
        }
        let asym = (&gamma + gamma.transpose()).amax();
        if asym > T::eps().sqrt() {
            return Err(Error::Config(format!("covariance is not antisymmetric (defect {asym})")));
        }
        let gamma = (&gamma - gamma.transpose()) * T::lit(0.5);
        Ok(Self { lattice, gamma })
    }

    pub fn lattice(&self) -> &LatticeSpec<T> {
        &self.lattice
    }

    pub fn gamma(&self) -> &DMatrix<T> {
        &self.gamma
    }

    pub fn into_gamma(self) -> DMatrix<T> {
        self.gamma
    }

    /// `max |Gamma^T Gamma - 1|`; zero for pure states.
    pub fn purity_defect(&self) -> T {
        let n = self.gamma.nrows();
        (self.gamma.transpose() * &self.gamma - DMatrix::identity(n, n)).amax()
    }

    pub fn is_pure(&self, tol: T) -> bool {
        self.purity_defect() <= tol
    }

    /// Largest singular value; at most one for a physical state.
    pub fn max_singular_value(&self) -> T {
        let gtg = self.gamma.transpose() * &self.gamma;
        let eig = nalgebra::SymmetricEigen::new(gtg);
        eig.eigenvalues.iter().fold(T::zero(), |m, &v| m.max(v)).max(T::zero()).sqrt()
    }

    pub fn is_physical(&self, tol: T) -> bool {
        self.max_singular_value() <= T::one() + tol
    }

    /// `<psi_x psi_y>`.
    pub fn two_point(&self, x: usize, y: usize) -> Complex<T> {
        if x == y {
            Complex::one()
        } else {
            Complex::new(T::zero(), self.gamma[(x, y)])
        }
    }

    /// Expectation of a quadratic observable: `c - (1/2) sum_xy alpha_xy Gamma_xy`.
    pub fn expect(&self, obs: &MajoranaQuadratic<T>) -> Result<Complex<T>> {
        self.check_size(obs.site_count())?;
        Ok(obs.scalar + Complex::new(self.quadratic_part(obs), T::zero()))
    }

    fn quadratic_part(&self, obs: &MajoranaQuadratic<T>) -> T {
        let mut acc = T::zero();
        for (x, y) in obs.support() {
            acc -= obs.bilinear(x, y) * self.gamma[(x, y)];
        }
        acc
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if n != self.lattice.site_count() {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }

    /// Expectation of a Majorana monomial `psi_{s_1} ... psi_{s_k}` by Wick's theorem.
    pub fn expect_monomial(&self, sites: &[usize]) -> Result<Complex<T>> {
        let n = self.lattice.site_count();
        for &s in sites {
            self.lattice.check_site(s)?;
            debug_assert!(s < n);
        }
        let (sign, reduced) = normal_order(sites);
        if reduced.len() % 2 == 1 {
            return Ok(Complex::zero());
        }
        let m = reduced.len();
        // Pf(i Gamma_restricted) = i^{m/2} Pf(Gamma_restricted); the ordering is preserved.
        let sub = DMatrix::from_fn(m, m, |a, b| self.gamma[(reduced[a], reduced[b])]);
        let pf = pfaffian(sub);
        let phase = match (m / 2) % 4 {
            0 => Complex::new(T::one(), T::zero()),
            1 => Complex::new(T::zero(), T::one()),
            2 => Complex::new(-T::one(), T::zero()),
            _ => Complex::new(T::zero(), -T::one()),
        };
        Ok(phase * (pf * T::of_isize(sign as isize)))
    }

    /// Expectation of the operator product `p q` of two quadratics, via Wick's theorem.
    pub fn expect_product(
        &self,
        p: &MajoranaQuadratic<T>,
        q: &MajoranaQuadratic<T>,
    ) -> Result<Complex<T>> {
        self.check_size(p.site_count())?;
        self.check_size(q.site_count())?;
        let pq = self.quadratic_part(p);
        let qq = self.quadratic_part(q);
        let mut acc = p.scalar * q.scalar
            + p.scalar * Complex::new(qq, T::zero())
            + q.scalar * Complex::new(pq, T::zero());
        // (i a psi_a psi_b)(i c psi_c psi_d) = -a c psi_a psi_b psi_c psi_d.
        for (a, b) in p.support() {
            for (c, d) in q.support() {
                let w = self.expect_monomial(&[a, b, c, d])?;
                acc -= w * (p.bilinear(a, b) * q.bilinear(c, d));
            }
        }
        Ok(acc)
    }

    /// Maximum entrywise difference to another covariance on the same lattice.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_size(other.lattice.site_count())?;
        Ok((&self.gamma - &other.gamma).amax())
    }
}

/// Sorts a Majorana word with anticommutation signs and cancels `psi_x^2 = 1`.
fn normal_order(sites: &[usize]) -> (i32, Vec<usize>) {
    let mut word = sites.to_vec();
    let mut sign = 1i32;
    // Bubble sort: each adjacent swap of distinct Majoranas flips the sign.
    for i in 0..word.len() {
        for j in 0..word.len().saturating_sub(1 + i) {
            if word[j] > word[j + 1] {
                word.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    let mut out: Vec<usize> = Vec::with_capacity(word.len());
    for s in word {
        if out.last() == Some(&s) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    (sign, out)
}

/// Pfaffian of a real antisymmetric matrix by Parlett-Reid style elimination with pivoting.
pub fn pfaffian<T: Real>(mut a: DMatrix<T>) -> T {
    let n = a.nrows();
    assert!(a.is_square(), "pfaffian of a non-square matrix");
    if n % 2 == 1 {
        return T::zero();
    }
    let mut pf = T::one();
    let mut k = 0;
    while k + 1 < n {
        let (mut piv, mut best) = (k + 1, a[(k, k + 1)].abs());
        for j in k + 2..n {
            if a[(k, j)].abs() > best {
                piv = j;
                best = a[(k, j)].abs();
            }
        }
        if piv != k + 1 {
            a.swap_rows(k + 1, piv);
            a.swap_columns(k + 1, piv);
            pf = -pf;
        }
        let head = a[(k, k + 1)];
        if head == T::zero() {
            return T::zero();
        }
        pf *= head;
        if k + 2 < n {
            let m = n - k - 2;
            let tau: Vec<T> = (0..m).map(|j| a[(k, k + 2 + j)] / head).collect();
            let col: Vec<T> = (0..m).map(|j| a[(k + 2 + j, k + 1)]).collect();
            for r in 0..m {
                for c in 0..m {
                    let upd = tau[r] * col[c] - col[r] * tau[c];
                    a[(k + 2 + r, k + 2 + c)] += upd;
                }
            }
        }
        k += 2;
    }
    pf
}
