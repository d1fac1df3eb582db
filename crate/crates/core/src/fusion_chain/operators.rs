use nalgebra::{DMatrix, SymmetricEigen};

use super::basis::FusionBasis;
use super::fsymbol::FusionCategoryData;
use super::label::Label;
use crate::tl_diagram::{RelationReport, COMMUTE, NEIGHBOR, SQUARE};
use crate::{Error, Real, Result};

/// Row-major sparse matrix with sorted column indices.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    dim: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Real> SparseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn add_entry(&mut self, r: usize, c: usize, v: T) {
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |&(col, _)| col) {
            Ok(i) => row[i].1 += v,
            Err(i) => row.insert(i, (c, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |&(col, _)| col).map(|i| row[i].1).unwrap_or_else(|_| T::zero())
    }

    pub fn add_scaled(&mut self, other: &Self, s: T) -> Result<()> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        for (r, row) in other.rows.iter().enumerate() {
            for &(c, v) in row {
                self.add_entry(r, c, v * s);
            }
        }
        Ok(())
    }

    pub fn to_dense(&self) -> DMatrix<T> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m[(r, c)] = v;
            }
        }
        m
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        self.rows.iter().map(|row| row.iter().fold(T::zero(), |acc, &(c, x)| acc + x * v[c])).collect()
    }

    pub fn symmetry_defect(&self) -> T {
        let mut worst = T::zero();
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                worst = worst.max((v - self.get(c, r)).abs());
            }
        }
        worst
    }

    /// Ascending eigenvalues of the (symmetric) matrix by dense diagonalization.
    pub fn eigenvalues(&self) -> Vec<T> {
        let mut ev: Vec<T> = SymmetricEigen::new(self.to_dense()).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalue"));
        ev
    }
}

/// Local projector onto the vacuum channel of the two sigma-anyons meeting at label `j_x`.
///
/// `<..k_x..|P|..j_x..> = [F^{a s s}_d]_{j_x, 0} [F^{a s s}_d]_{k_x, 0}` with
/// `a = j_{x-1}`, `d = j_{x+1}`, diagonal in every other label.
pub fn projector_p0<T: Real>(data: &FusionCategoryData<T>, basis: &FusionBasis, x: usize) -> Result<SparseMatrix<T>> {
    if data.level() != basis.level() {
        return Err(Error::Config("fusion data and basis have different levels".into()));
    }
    if !basis.generator_sites().contains(&x) {
        return Err(Error::SiteOutOfRange { site: x, sites: basis.sites() });
    }
    let s = Label::SIGMA;
    let mut p = SparseMatrix::zeros(basis.dim());
    for (col, state) in basis.states().iter().enumerate() {
        let (a, j, d) = basis.neighborhood(state, x);
        let fj = data.fsymbol(a, s, s, d, j, Label::VACUUM)?;
        if fj == T::zero() {
            continue;
        }
        for kx in data.labels() {
            let fk = data.fsymbol(a, s, s, d, kx, Label::VACUUM)?;
            if fk == T::zero() {
                continue;
            }
            let mut target = state.clone();
            target[x] = kx;
            let row = basis.index_of(&target).ok_or(Error::InadmissibleState { site: x })?;
            p.add_entry(row, col, fj * fk);
        }
    }
    Ok(p)
}

/// `e_x = d_sigma P_x`.
pub fn fusion_tl_generator<T: Real>(
    data: &FusionCategoryData<T>,
    basis: &FusionBasis,
    x: usize,
) -> Result<SparseMatrix<T>> {
    let mut e = SparseMatrix::zeros(basis.dim());
    e.add_scaled(&projector_p0(data, basis, x)?, data.sigma_dimension())?;
    Ok(e)
}

/// `H = sum_x J_x P_x` over the generator sites of the basis.
pub fn hamiltonian<T: Real>(
    data: &FusionCategoryData<T>,
    basis: &FusionBasis,
    couplings: &[T],
) -> Result<SparseMatrix<T>> {
    let sites = basis.generator_sites();
    if couplings.len() != sites.len() {
        return Err(Error::DimensionMismatch { expected: sites.len(), got: couplings.len() });
    }
    let mut h = SparseMatrix::zeros(basis.dim());
    for (&x, &j) in sites.iter().zip(couplings) {
        if j != T::zero() {
            h.add_scaled(&projector_p0(data, basis, x)?, j)?;
        }
    }
    Ok(h)
}

/// Checks projector properties and the Temperley-Lieb relations with `delta = d_sigma`.
pub fn verify_fusion_relations<T: Real>(
    data: &FusionCategoryData<T>,
    basis: &FusionBasis,
    tol: f64,
) -> Result<RelationReport> {
    let sites = basis.generator_sites();
    let delta = data.sigma_dimension();
    let mut report = RelationReport::default();
    let mut gens = Vec::with_capacity(sites.len());
    for &x in &sites {
        let p = projector_p0(data, basis, x)?.to_dense();
        let idem = (&p * &p - &p).amax().max((&p - p.transpose()).amax());
        report.push("P_x^2 = P_x = P_x^T", vec![x], idem.to_f64(), tol);
        gens.push(p * delta);
    }
    for (i, ex) in gens.iter().enumerate() {
        let sq = (ex * ex - ex * delta).amax();
        report.push(SQUARE, vec![sites[i]], sq.to_f64(), tol);
        for (j, ey) in gens.iter().enumerate() {
            if i == j {
                continue;
            }
            if basis.are_adjacent(sites[i], sites[j]) {
                let r = (ex * ey * ex - ex).amax();
                report.push(NEIGHBOR, vec![sites[i], sites[j]], r.to_f64(), tol);
            } else if i < j {
                let r = (ex * ey - ey * ex).amax();
                report.push(COMMUTE, vec![sites[i], sites[j]], r.to_f64(), tol);
            }
        }
    }
    Ok(report)
}
