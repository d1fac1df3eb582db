use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex;
use num_traits::Zero;

use super::pauli::{jordan_wigner, phase_of, PauliString};
use crate::majorana_rep::{braid_unitary, tl_generator, BraidSign, LatticeSpec, MajoranaQuadratic};
use crate::{Error, Real, Result};

/// Explicit complex matrix on the Jordan-Wigner Fock space.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator<T: Real> {
    pub matrix: DMatrix<Complex<T>>,
}

impl<T: Real> DenseOperator<T> {
    pub fn identity(dim: usize) -> Self {
        Self { matrix: DMatrix::identity(dim, dim) }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { matrix: DMatrix::zeros(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn from_pauli(p: &PauliString) -> Self {
        let dim = 1usize << p.qubits();
        let (flip, zmask, phase) = p.action();
        let c = phase_of::<T>(phase);
        let mut m = DMatrix::zeros(dim, dim);
        for b in 0..dim {
            let s = if (b & zmask).count_ones() % 2 == 1 { -c } else { c };
            m[(b ^ flip, b)] = s;
        }
        Self { matrix: m }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { matrix: &self.matrix * &other.matrix }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { matrix: &self.matrix + &other.matrix }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { matrix: &self.matrix - &other.matrix }
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self { matrix: &self.matrix * c }
    }

    pub fn adjoint(&self) -> Self {
        Self { matrix: self.matrix.adjoint() }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.matrix.iter().fold(T::zero(), |m, z| m.max(T::cabs(*z)))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.sub(other).max_abs()
    }

    /// `max |U U^dagger - 1|`.
    pub fn unitarity_defect(&self) -> T {
        self.mul(&self.adjoint()).max_abs_diff(&Self::identity(self.dim()))
    }

    pub fn hermiticity_defect(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    /// Eigenvalues of a Hermitian operator in ascending order.
    pub fn eigenvalues(&self) -> Vec<T> {
        let mut ev: Vec<T> = SymmetricEigen::new(self.matrix.clone()).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalue"));
        ev
    }
}

/// Input accepted by [`MajoranaOracle::build`].
#[derive(Clone, Copy, Debug)]
pub enum OracleInput<'a, T: Real> {
    Quadratic(&'a MajoranaQuadratic<T>),
    /// Product `e_{x_1} e_{x_2} ...` (leftmost factor first).
    TlWord(&'a [usize]),
    /// Product of braids `b_{x_1}^{+-} b_{x_2}^{+-} ...`.
    BraidWord(&'a [(usize, BraidSign)]),
}

/// Matrices of the Majoranas of a lattice, built once.
#[derive(Clone, Debug)]
pub struct MajoranaOracle<T: Real> {
    lattice: LatticeSpec<T>,
    strings: Vec<PauliString>,
}

impl<T: Real> MajoranaOracle<T> {
    pub fn new(lattice: LatticeSpec<T>) -> Result<Self> {
        let strings = jordan_wigner(lattice.site_count())?;
        Ok(Self { lattice, strings })
    }

    pub fn lattice(&self) -> &LatticeSpec<T> {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        1 << (self.strings.len() / 2)
    }

    pub fn strings(&self) -> &[PauliString] {
        &self.strings
    }

    pub fn psi(&self, x: usize) -> Result<DenseOperator<T>> {
        self.lattice.check_site(x)?;
        Ok(DenseOperator::from_pauli(&self.strings[x]))
    }

    /// Substitutes the Majorana matrices into `c + i sum_{x<y} alpha_xy psi_x psi_y`.
    pub fn quadratic(&self, q: &MajoranaQuadratic<T>) -> Result<DenseOperator<T>> {
        if q.site_count() != self.strings.len() {
            return Err(Error::DimensionMismatch { expected: self.strings.len(), got: q.site_count() });
        }
        let dim = self.dim();
        let mut m = DMatrix::identity(dim, dim) * q.scalar;
        for (x, y) in q.support() {
            // i psi_x psi_y as a single Pauli string.
            let p = self.strings[x].mul(&self.strings[y]).scale_phase(1);
            let (flip, zmask, phase) = p.action();
            let c = phase_of::<T>(phase) * q.bilinear(x, y);
            for b in 0..dim {
                let s = if (b & zmask).count_ones() % 2 == 1 { -c } else { c };
                m[(b ^ flip, b)] += s;
            }
        }
        Ok(DenseOperator { matrix: m })
    }

    pub fn build(&self, input: OracleInput<'_, T>) -> Result<DenseOperator<T>> {
        match input {
            OracleInput::Quadratic(q) => self.quadratic(q),
            OracleInput::TlWord(word) => word.iter().try_fold(DenseOperator::identity(self.dim()), |acc, &x| {
                Ok(acc.mul(&self.quadratic(&tl_generator(&self.lattice, x)?)?))
            }),
            OracleInput::BraidWord(word) => {
                word.iter().try_fold(DenseOperator::identity(self.dim()), |acc, &(x, s)| {
                    Ok(acc.mul(&self.quadratic(&braid_unitary(&self.lattice, x, s)?)?))
                })
            }
        }
    }
}

/// Lowest eigenvector of a Hermitian operator together with its Majorana covariance.
#[derive(Clone, Debug)]
pub struct DenseGroundState<T: Real> {
    pub energy: T,
    pub gap: T,
    pub vector: DVector<Complex<T>>,
    /// `Gamma_xy = -i(<psi_x psi_y> - delta_xy)`.
    pub covariance: DMatrix<T>,
}

/// Dense ground state of `h`. Degenerate ground spaces are reported as errors, never
/// resolved by an arbitrary choice.
pub fn ground_state<T: Real>(oracle: &MajoranaOracle<T>, h: &DenseOperator<T>) -> Result<DenseGroundState<T>> {
    if h.dim() != oracle.dim() {
        return Err(Error::DimensionMismatch { expected: oracle.dim(), got: h.dim() });
    }
    let scale = h.max_abs().max(T::one());
    if h.hermiticity_defect() > T::lit(1e-10) * scale {
        return Err(Error::Config("operator is not Hermitian".into()));
    }
    let eig = SymmetricEigen::new(h.matrix.clone());
    let mut order: Vec<usize> = (0..h.dim()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).expect("finite eigenvalue"));
    let e0 = eig.eigenvalues[order[0]];
    let tol = T::lit(1e-9) * scale;
    let degeneracy = order.iter().take_while(|&&i| eig.eigenvalues[i] - e0 <= tol).count();
    if degeneracy > 1 {
        return Err(Error::DegenerateGroundSpace(degeneracy));
    }
    let gap = order.get(1).map(|&i| eig.eigenvalues[i] - e0).unwrap_or_else(T::zero);
    let vector: DVector<Complex<T>> = eig.eigenvectors.column(order[0]).into_owned();
    let covariance = majorana_covariance(oracle, vector.as_slice());
    Ok(DenseGroundState { energy: e0, gap, vector, covariance })
}

/// `Gamma_xy = -i <v| psi_x psi_y |v>` for `x != y`, from `<psi_x v, psi_y v>`.
pub fn majorana_covariance<T: Real>(oracle: &MajoranaOracle<T>, v: &[Complex<T>]) -> DMatrix<T> {
    let n = oracle.strings().len();
    let images: Vec<Vec<Complex<T>>> = oracle.strings().iter().map(|s| s.apply(v)).collect();
    let mut g = DMatrix::zeros(n, n);
    for x in 0..n {
        for y in x + 1..n {
            let inner = images[x]
                .iter()
                .zip(&images[y])
                .fold(Complex::<T>::zero(), |acc, (a, b)| acc + a.conj() * *b);
            // -i * inner; its real part is the covariance entry.
            let val = (Complex::new(T::zero(), -T::one()) * inner).re;
            g[(x, y)] = val;
            g[(y, x)] = -val;
        }
    }
    g
}

/// Expectation `<v|A|v>`.
pub fn expectation<T: Real>(a: &DenseOperator<T>, v: &DVector<Complex<T>>) -> Complex<T> {
    let av = &a.matrix * v;
    v.iter().zip(av.iter()).fold(Complex::zero(), |acc, (x, y)| acc + x.conj() * *y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorana_rep::{
        conjugate_action, ground_energy, ground_state_momentum, ising_hamiltonian, separate_pair, Direction,
        SignedSiteMap,
    };

    fn oracle(half: usize) -> MajoranaOracle<f64> {
        MajoranaOracle::new(LatticeSpec::new(0, 1.0, half).unwrap()).unwrap()
    }

    #[test]
    fn majorana_algebra() {
        let o = oracle(4);
        let id = DenseOperator::identity(o.dim());
        for a in 0..8 {
            let pa = o.psi(a).unwrap();
            assert!(pa.hermiticity_defect() < 1e-12);
            for b in 0..8 {
                let pb = o.psi(b).unwrap();
                let anti = pa.mul(&pb).add(&pb.mul(&pa));
                let want = if a == b { id.scale(Complex::new(2.0, 0.0)) } else { DenseOperator::zeros(o.dim()) };
                assert!(anti.max_abs_diff(&want) < 1e-12);
            }
        }
    }

    #[test]
    fn generator_squares_and_braid_acts_on_majoranas() {
        let o = oracle(3);
        let lat = *o.lattice();
        for x in 0..6 {
            let e = o.build(OracleInput::TlWord(&[x])).unwrap();
            let e2 = o.build(OracleInput::TlWord(&[x, x])).unwrap();
            assert!(e2.max_abs_diff(&e.scale(Complex::new(2f64.sqrt(), 0.0))) < 1e-12);
            let b = o.build(OracleInput::BraidWord(&[(x, BraidSign::Direct)])).unwrap();
            assert!(b.unitarity_defect() < 1e-12);
            let bi = o.build(OracleInput::BraidWord(&[(x, BraidSign::Inverse)])).unwrap();
            assert!(bi.max_abs_diff(&b.adjoint()) < 1e-12);
            // Conjugation agrees with the signed site map on every Majorana.
            let map = conjugate_action(&lat, &SignedSiteMap::identity(6), x, BraidSign::Direct).unwrap();
            for y in 0..6 {
                let lhs = b.mul(&o.psi(y).unwrap()).mul(&b.adjoint());
                let (z, s) = map.apply(y);
                let rhs = o.psi(z).unwrap().scale(Complex::new(s as f64, 0.0));
                assert!(lhs.max_abs_diff(&rhs) < 1e-12, "x = {x}, y = {y}");
            }
        }
    }

    #[test]
    fn braid_is_kauffman_combination_at_default_point() {
        let o = oracle(2);
        let a = Complex::from_polar(1.0, 3.0 * std::f64::consts::PI / 8.0);
        for x in 0..4 {
            let b = o.build(OracleInput::BraidWord(&[(x, BraidSign::Direct)])).unwrap();
            let e = o.build(OracleInput::TlWord(&[x])).unwrap();
            let id = DenseOperator::identity(o.dim());
            let k_minus = id.scale(a.inv()).add(&e.scale(a));
            assert!(b.max_abs_diff(&k_minus.scale(a.inv())) < 1e-12);
        }
    }

    #[test]
    fn yang_baxter() {
        let o = oracle(3);
        for x in 0..4 {
            for s in [BraidSign::Direct, BraidSign::Inverse] {
                let l = o.build(OracleInput::BraidWord(&[(x, s), (x + 1, s), (x, s)])).unwrap();
                let r = o.build(OracleInput::BraidWord(&[(x + 1, s), (x, s), (x + 1, s)])).unwrap();
                assert!(l.max_abs_diff(&r) < 1e-12);
            }
        }
    }

    #[test]
    fn dense_ground_state_matches_momentum_route() {
        let o = oracle(4);
        let lat = *o.lattice();
        let h = o.quadratic(&ising_hamiltonian(&lat, 1.0)).unwrap();
        let gs = ground_state(&o, &h).unwrap();
        let mom = ground_state_momentum(&lat).unwrap();
        assert!((&gs.covariance - mom.gamma()).amax() < 1e-10);
        assert!((gs.energy - ground_energy(&lat, 1.0)).abs() < 1e-10);
        assert!(gs.gap > 1e-3);
        let shifted = h.add(&DenseOperator::identity(o.dim()).scale(Complex::new(5.0, 0.0)));
        let gs2 = ground_state(&o, &shifted).unwrap();
        assert!((&gs2.covariance - &gs.covariance).amax() < 1e-10);
        assert!((gs2.energy - gs.energy - 5.0).abs() < 1e-10);
    }

    #[test]
    fn degenerate_ground_space_is_reported() {
        let o = oracle(2);
        let h = DenseOperator::zeros(o.dim());
        assert!(matches!(ground_state(&o, &h), Err(Error::DegenerateGroundSpace(4))));
    }

    #[test]
    fn separate_pair_equals_matrix_conjugation() {
        let o = oracle(3);
        let lat = *o.lattice();
        for x in 0..6 {
            for m in 1..=4 {
                for dir in [Direction::Left, Direction::Right] {
                    let Ok((_, q)) = separate_pair(&lat, x, m, dir, BraidSign::Direct) else { continue };
                    let mut u = DenseOperator::identity(o.dim());
                    for j in 1..m {
                        let site = if dir == Direction::Right { x + j } else { x - j };
                        let b = o.build(OracleInput::BraidWord(&[(site, BraidSign::Direct)])).unwrap();
                        u = b.mul(&u);
                    }
                    let e = o.build(OracleInput::TlWord(&[x])).unwrap();
                    let conj = u.mul(&e).mul(&u.adjoint());
                    assert!(conj.max_abs_diff(&o.quadratic(&q).unwrap()) < 1e-12);
                    let ev = o.quadratic(&q).unwrap().eigenvalues();
                    assert!(ev.iter().all(|v| v.abs() < 1e-12 || (v - 2f64.sqrt()).abs() < 1e-12));
                }
            }
        }
    }
}
