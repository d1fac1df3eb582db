use serde::Serialize;

use super::element::{CrossingSign, TlAlgebra, TlElement};
use super::ring::Coefficient;
use crate::Result;

/// One checked identity.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub indices: Vec<usize>,
    pub residual: f64,
    pub passed: bool,
}

/// Outcome of a batch of identity checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    /// Names of the relations with at least one failing instance.
    pub fn failed_relations(&self) -> Vec<&str> {
        let mut names: Vec<&str> =
            self.checks.iter().filter(|c| !c.passed).map(|c| c.relation.as_str()).collect();
        names.dedup();
        names
    }

    pub fn push(&mut self, relation: &str, indices: Vec<usize>, residual: f64, tol: f64) {
        self.checks.push(RelationCheck {
            relation: relation.to_string(),
            indices,
            residual,
            passed: residual <= tol,
        });
    }

    pub fn extend(&mut self, other: RelationReport) {
        self.checks.extend(other.checks);
    }
}

pub const SQUARE: &str = "e_i^2 = delta e_i";
pub const NEIGHBOR: &str = "e_i e_j e_i = e_i (|i-j| = 1)";
pub const COMMUTE: &str = "e_i e_j = e_j e_i (|i-j| >= 2)";
pub const REIDEMEISTER_II: &str = "b_i b_i^-1 = 1";
pub const REIDEMEISTER_III: &str = "b_i b_(i+1) b_i = b_(i+1) b_i b_(i+1)";

fn residual<R: Coefficient>(lhs: &TlElement<R>, rhs: &TlElement<R>) -> Result<f64> {
    Ok(lhs.sub(rhs)?.max_magnitude())
}

/// Checks the three defining relations for every valid index pair on `n` strands.
///
/// `tol` is zero for exact rings.
pub fn verify_relations<R: Coefficient>(
    alg: &TlAlgebra<R>,
    n: usize,
    tol: f64,
) -> Result<RelationReport> {
    let gens: Vec<TlElement<R>> = (1..n).map(|i| alg.generator(n, i)).collect::<Result<_>>()?;
    let mut report = RelationReport::default();
    for (i, e) in gens.iter().enumerate() {
        let lhs = alg.compose(e, e)?;
        report.push(SQUARE, vec![i + 1], residual(&lhs, &e.scale(alg.loop_value()))?, tol);
    }
    for (i, ei) in gens.iter().enumerate() {
        for (j, ej) in gens.iter().enumerate() {
            let gap = i.abs_diff(j);
            if gap == 1 {
                let lhs = alg.product(n, [ei, ej, ei])?;
                report.push(NEIGHBOR, vec![i + 1, j + 1], residual(&lhs, ei)?, tol);
            } else if gap >= 2 && i < j {
                let lhs = alg.compose(ei, ej)?;
                let rhs = alg.compose(ej, ei)?;
                report.push(COMMUTE, vec![i + 1, j + 1], residual(&lhs, &rhs)?, tol);
            }
        }
    }
    Ok(report)
}

/// Reidemeister II and III for every adjacent position on `n` strands.
pub fn verify_braid_relations<R: Coefficient>(
    alg: &TlAlgebra<R>,
    n: usize,
    tol: f64,
) -> Result<RelationReport> {
    let mut report = RelationReport::default();
    let id = alg.identity(n)?;
    for i in 1..n {
        let p = alg.kauffman_braid(n, i, CrossingSign::Positive)?;
        let m = alg.kauffman_braid(n, i, CrossingSign::Negative)?;
        let r = residual(&alg.compose(&p, &m)?, &id)?.max(residual(&alg.compose(&m, &p)?, &id)?);
        report.push(REIDEMEISTER_II, vec![i], r, tol);
    }
    for i in 1..n.saturating_sub(1) {
        for sign in [CrossingSign::Positive, CrossingSign::Negative] {
            let bi = alg.kauffman_braid(n, i, sign)?;
            let bj = alg.kauffman_braid(n, i + 1, sign)?;
            let lhs = alg.product(n, [&bi, &bj, &bi])?;
            let rhs = alg.product(n, [&bj, &bi, &bj])?;
            report.push(REIDEMEISTER_III, vec![i, i + 1], residual(&lhs, &rhs)?, tol);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl_diagram::LaurentPoly;
    use num_complex::Complex64;

    #[test]
    fn relations_hold_symbolically() {
        let alg = TlAlgebra::symbolic();
        for n in [3, 6] {
            let r = verify_relations(&alg, n, 0.0).unwrap();
            assert!(r.all_passed(), "{:?}", r.failed_relations());
            assert!(!r.checks.is_empty());
        }
    }

    #[test]
    fn corrupted_loop_factor_fails_square_relation() {
        let d = LaurentPoly::loop_value();
        let alg = TlAlgebra::symbolic().with_compose_loop_factor(d.clone() * d);
        let r = verify_relations(&alg, 4, 0.0).unwrap();
        assert!(!r.all_passed());
        assert_eq!(r.failed_relations(), vec![SQUARE]);
    }

    #[test]
    fn braid_relations_hold_symbolically() {
        let alg = TlAlgebra::symbolic();
        let r = verify_braid_relations(&alg, 4, 0.0).unwrap();
        assert!(r.all_passed());
    }

    #[test]
    fn numeric_relations_at_all_roots() {
        for angle in [3.0, -3.0, 5.0, 11.0] {
            let a = Complex64::from_polar(1.0, angle * std::f64::consts::PI / 8.0);
            let alg = TlAlgebra::at(a);
            assert!((alg.loop_value() - Complex64::new(2f64.sqrt(), 0.0)).norm() < 1e-12);
            assert!(verify_relations(&alg, 5, 1e-12).unwrap().all_passed());
            assert!(verify_braid_relations(&alg, 4, 1e-12).unwrap().all_passed());
        }
    }
}
