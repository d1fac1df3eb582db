use num_complex::Complex;
use serde::Serialize;

use super::spec::RefinementSpec;
use crate::majorana_rep::{GroundStateCache, GroundStateProfile};
use crate::{Real, Result};

/// Chirality index: `+` or `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub const BOTH: [Chirality; 2] = [Chirality::Plus, Chirality::Minus];

    fn index(self) -> usize {
        match self {
            Chirality::Plus => 0,
            Chirality::Minus => 1,
        }
    }

    fn sign<T: Real>(self) -> T {
        match self {
            Chirality::Plus => -T::one(),
            Chirality::Minus => T::one(),
        }
    }
}

/// `table[s][s'] = 2^{M s_exp} <psi_{s|x} psi_{s'|y}>` with `s, s'` in `[+, -]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiralTable<T: Real> {
    pub entries: [[Complex<T>; 2]; 2],
}

impl<T: Real> ChiralTable<T> {
    pub fn get(&self, s: Chirality, t: Chirality) -> Complex<T> {
        self.entries[s.index()][t.index()]
    }

    /// Table with `+` and `-` exchanged on both indices.
    pub fn swapped(&self) -> Self {
        let e = &self.entries;
        Self { entries: [[e[1][1], e[1][0]], [e[0][1], e[0][0]]] }
    }

    /// `|<psi_+ psi_->| / max(|<psi_+ psi_+>|, |<psi_- psi_->|)`.
    pub fn cross_ratio(&self) -> T {
        let diag = T::cabs(self.entries[0][0]).max(T::cabs(self.entries[1][1]));
        T::cabs(self.entries[0][1]) / diag
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut m = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                m = m.max(T::cabs(self.entries[i][j] - other.entries[i][j]));
            }
        }
        m
    }
}

fn two_point<T: Real>(profile: &GroundStateProfile<T>, a: isize, b: isize) -> Complex<T> {
    if a == b {
        Complex::new(T::one(), T::zero())
    } else {
        Complex::new(T::zero(), profile.value(a - b))
    }
}

/// Chiral components `psi_{+-|z} = (psi_{2z} -+ beta psi_{2z+1}) / sqrt 2` of the refined chain
/// at the embedded positions of coarse sites `x` and `y`. The braid (`beta = +1`) carries the
/// coarse Majorana on `psi_-`; its inverse on `psi_+`.
pub fn chiral_correlators_cached<T: Real>(
    spec: &RefinementSpec<T>,
    x: usize,
    y: usize,
    cache: &GroundStateCache<T>,
) -> Result<ChiralTable<T>> {
    spec.coarse.check_site(x)?;
    spec.coarse.check_site(y)?;
    let profile = cache.profile(&spec.majorana_lattice());
    let beta = spec.beta();
    let weight = spec.bilinear_weight();
    let zx = 2 * spec.embed(x) as isize;
    let zy = 2 * spec.embed(y) as isize;
    let mut entries = [[Complex::new(T::zero(), T::zero()); 2]; 2];
    for s in Chirality::BOTH {
        for t in Chirality::BOTH {
            let (cs, ct) = (s.sign::<T>() * beta, t.sign::<T>() * beta);
            let v = two_point(&profile, zx, zy)
                + two_point(&profile, zx, zy + 1) * ct
                + two_point(&profile, zx + 1, zy) * cs
                + two_point(&profile, zx + 1, zy + 1) * (cs * ct);
            entries[s.index()][t.index()] = v * (weight * T::lit(0.5));
        }
    }
    Ok(ChiralTable { entries })
}

pub fn chiral_correlators<T: Real>(spec: &RefinementSpec<T>, x: usize, y: usize) -> Result<ChiralTable<T>> {
    chiral_correlators_cached(spec, x, y, &GroundStateCache::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorana_rep::{BraidSign, LatticeSpec};
    use crate::rg_flow::{flow_covariance, Attachment};

    fn spec(m: u32, a: Attachment, b: BraidSign) -> RefinementSpec<f64> {
        RefinementSpec::new(LatticeSpec::new(0, 1.0, 4).unwrap(), m, a, b).unwrap()
    }

    #[test]
    fn minus_component_is_the_flow_for_the_braid() {
        let s = spec(2, Attachment::Right, BraidSign::Direct);
        let t = chiral_correlators(&s, 3, 0).unwrap();
        let f = flow_covariance(&s).unwrap();
        let want = Complex::new(0.0, f.entry(3, 0));
        assert!((t.get(Chirality::Minus, Chirality::Minus) - want).norm() < 1e-14);
    }

    #[test]
    fn attachment_and_inverse_braid_swap_labels() {
        for m in [0, 1, 3] {
            let lb = chiral_correlators(&spec(m, Attachment::Left, BraidSign::Direct), 5, 1).unwrap();
            let rbi = chiral_correlators(&spec(m, Attachment::Right, BraidSign::Inverse), 5, 1).unwrap();
            assert!(lb.max_abs_diff(&rbi.swapped()) < 1e-15);
        }
    }

    #[test]
    fn cross_ratio_shrinks_with_depth() {
        let mut prev = f64::INFINITY;
        for m in [0, 2, 4, 6] {
            let r = chiral_correlators(&spec(m, Attachment::Right, BraidSign::Direct), 2, 0).unwrap().cross_ratio();
            assert!(r < prev);
            prev = r;
        }
    }
}
