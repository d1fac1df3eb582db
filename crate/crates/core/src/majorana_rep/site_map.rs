use num_complex::Complex;
use num_traits::Zero;

use super::lattice::LatticeSpec;
use super::quadratic::{tl_generator, BraidSign, MajoranaQuadratic};
use crate::{Error, Real, Result};

/// Conjugation action `psi_x -> s(x) psi_{pi(x)}` of a Gaussian unitary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSiteMap {
    image: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedSiteMap {
    pub fn identity(sites: usize) -> Self {
        Self { image: (0..sites).collect(), sign: vec![1; sites] }
    }

    /// Builds a map after checking that it is a signed permutation.
    pub fn new(image: Vec<usize>, sign: Vec<i8>) -> Result<Self> {
        if image.len() != sign.len() {
            return Err(Error::DimensionMismatch { expected: image.len(), got: sign.len() });
        }
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Config("site map is not a bijection".into()));
            }
        }
        if sign.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Config("site-map signs must be +1 or -1".into()));
        }
        Ok(Self { image, sign })
    }

    pub fn site_count(&self) -> usize {
        self.image.len()
    }

    /// `(pi(x), s(x))`.
    pub fn apply(&self, x: usize) -> (usize, i8) {
        (self.image[x], self.sign[x])
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i == p) && self.sign.iter().all(|&s| s == 1)
    }

    /// Applies the conjugation to a quadratic observable.
    pub fn transform<T: Real>(&self, q: &MajoranaQuadratic<T>) -> Result<MajoranaQuadratic<T>> {
        if q.site_count() != self.site_count() {
            return Err(Error::DimensionMismatch { expected: self.site_count(), got: q.site_count() });
        }
        let mut out = MajoranaQuadratic::constant(q.site_count(), q.scalar);
        for (x, y) in q.support() {
            let (px, sx) = self.apply(x);
            let (py, sy) = self.apply(y);
            let s = T::of_isize((sx * sy) as isize);
            out.add_bilinear(px, py, s * q.bilinear(x, y));
        }
        Ok(out)
    }
}

/// Action of conjugation by `b_x` (or its inverse) on a single Majorana index.
///
/// `b_x psi_x b_x^* = -psi_{x+eps}` and `b_x psi_{x+eps} b_x^* = psi_x`; the inverse braid
/// moves the sign to the other leg. Seam signs enter through the lattice shift helper.
fn braid_on_site<T: Real>(lattice: &LatticeSpec<T>, x: usize, sign: BraidSign, y: usize) -> (usize, i8) {
    let (next, seam) = lattice.shift(x, 1);
    let seam: i8 = if seam > T::zero() { 1 } else { -1 };
    let dir: i8 = match sign {
        BraidSign::Direct => 1,
        BraidSign::Inverse => -1,
    };
    if y == x {
        // psi_x -> -dir * psi_{x+eps} = -dir * seam * psi_next
        (next, -dir * seam)
    } else if y == next {
        // psi_next = seam * psi_{x+eps} -> seam * dir * psi_x
        (x, dir * seam)
    } else {
        (y, 1)
    }
}

/// Composes `map` with conjugation by the braid at `x`: the result is `Ad(b_x) o map`.
pub fn conjugate_action<T: Real>(
    lattice: &LatticeSpec<T>,
    map: &SignedSiteMap,
    x: usize,
    sign: BraidSign,
) -> Result<SignedSiteMap> {
    lattice.check_site(x)?;
    if map.site_count() != lattice.site_count() {
        return Err(Error::LatticeMismatch);
    }
    let mut image = Vec::with_capacity(map.site_count());
    let mut signs = Vec::with_capacity(map.site_count());
    for y in 0..map.site_count() {
        let (z, s1) = map.apply(y);
        let (w, s2) = braid_on_site(lattice, x, sign, z);
        image.push(w);
        signs.push(s1 * s2);
    }
    Ok(SignedSiteMap { image, sign: signs })
}

/// Side towards which a pair of legs is pulled apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Direction {
    Left,
    Right,
}

/// Separates the two legs of `e_x` to distance `m` lattice steps by successive braiding.
///
/// Right: conjugation by `b_{x+eps}`, then `b_{x+2eps}`, ..., moves the leg at `x+eps`
/// outwards. Left: conjugation by `b_{x-eps}`, `b_{x-2eps}`, ... moves the leg at `x`.
/// The path must not cross the seam. Returns the accumulated map and the separated
/// observable, which is `(1 + (+-) i psi_u psi_v) / sqrt 2` with `|u - v| = m`.
pub fn separate_pair<T: Real>(
    lattice: &LatticeSpec<T>,
    x: usize,
    m: usize,
    direction: Direction,
    sign: BraidSign,
) -> Result<(SignedSiteMap, MajoranaQuadratic<T>)> {
    lattice.check_site(x)?;
    if m == 0 {
        return Err(Error::InvalidSeparation("separation must be at least one step".into()));
    }
    let n = lattice.site_count();
    let wraps = match direction {
        Direction::Right => x + m >= n,
        Direction::Left => x + 1 >= n || x + 1 < m,
    };
    if wraps {
        return Err(Error::WrapAround { site: x, distance: m });
    }
    let mut map = SignedSiteMap::identity(n);
    for j in 1..m {
        let site = match direction {
            Direction::Right => x + j,
            Direction::Left => x - j,
        };
        map = conjugate_action(lattice, &map, site, sign)?;
    }
    let obs = map.transform(&tl_generator(lattice, x)?)?;
    debug_assert!(obs.scalar != Complex::zero());
    Ok((map, obs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat() -> LatticeSpec<f64> {
        LatticeSpec::new(0, 1.0, 3).unwrap()
    }

    #[test]
    fn braid_moves_psi_x_to_minus_next() {
        let l = lat();
        let id = SignedSiteMap::identity(6);
        let m = conjugate_action(&l, &id, 2, BraidSign::Direct).unwrap();
        assert_eq!(m.apply(2), (3, -1));
        assert_eq!(m.apply(3), (2, 1));
        assert_eq!(m.apply(0), (0, 1));
    }

    #[test]
    fn double_braid_is_minus_one_on_both_legs() {
        let l = lat();
        let id = SignedSiteMap::identity(6);
        let m1 = conjugate_action(&l, &id, 2, BraidSign::Direct).unwrap();
        let m2 = conjugate_action(&l, &m1, 2, BraidSign::Direct).unwrap();
        assert_eq!(m2.apply(2), (2, -1));
        assert_eq!(m2.apply(3), (3, -1));
    }

    #[test]
    fn braid_then_inverse_is_identity() {
        let l = lat();
        for x in 0..6 {
            let id = SignedSiteMap::identity(6);
            let m = conjugate_action(&l, &id, x, BraidSign::Direct).unwrap();
            let back = conjugate_action(&l, &m, x, BraidSign::Inverse).unwrap();
            assert!(back.is_identity(), "x = {x}");
        }
    }

    #[test]
    fn seam_braid_carries_antiperiodic_sign() {
        let l = lat();
        let m = conjugate_action(&l, &SignedSiteMap::identity(6), 5, BraidSign::Direct).unwrap();
        // psi_5 -> -psi_{6} = +psi_0
        assert_eq!(m.apply(5), (0, 1));
        // psi_0 = -psi_6 -> -psi_5
        assert_eq!(m.apply(0), (5, -1));
    }

    #[test]
    fn unit_separation_is_the_generator() {
        let l = lat();
        for dir in [Direction::Left, Direction::Right] {
            let (map, q) = separate_pair(&l, 2, 1, dir, BraidSign::Direct).unwrap();
            assert!(map.is_identity());
            assert_eq!(q, tl_generator(&l, 2).unwrap());
        }
    }

    #[test]
    fn separated_support_has_requested_distance() {
        let l = lat();
        let (_, q) = separate_pair(&l, 1, 3, Direction::Right, BraidSign::Direct).unwrap();
        assert_eq!(q.support(), vec![(1, 4)]);
        let (_, q) = separate_pair(&l, 3, 3, Direction::Left, BraidSign::Direct).unwrap();
        assert_eq!(q.support(), vec![(1, 4)]);
        assert!(q.is_self_adjoint());
    }

    #[test]
    fn wrapping_paths_are_rejected() {
        let l = lat();
        assert!(matches!(
            separate_pair(&l, 4, 2, Direction::Right, BraidSign::Direct),
            Err(Error::WrapAround { .. })
        ));
        assert!(separate_pair(&l, 1, 3, Direction::Left, BraidSign::Direct).is_err());
        assert!(separate_pair(&l, 1, 0, Direction::Left, BraidSign::Direct).is_err());
    }

    #[test]
    fn signed_map_validation() {
        assert!(SignedSiteMap::new(vec![1, 0], vec![1, -1]).is_ok());
        assert!(SignedSiteMap::new(vec![1, 1], vec![1, 1]).is_err());
        assert!(SignedSiteMap::new(vec![1, 0], vec![2, 1]).is_err());
    }
}
