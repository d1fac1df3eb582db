use serde::{Deserialize, Serialize};

use crate::majorana_rep::{BraidSign, LatticeSpec};
use crate::{Error, Real, Result};

/// Side on which new through-strings are attached at every refinement step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Attachment {
    Left,
    Right,
}

impl std::str::FromStr for Attachment {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "left" => Ok(Self::Left),
            "right" => Ok(Self::Right),
            _ => Err(Error::Config(format!("unknown attachment {s:?}"))),
        }
    }
}

/// Parameters of the `M`-fold refinement from scale `N`.
///
/// A coarse Majorana at scale `N` is carried to the block Majorana
/// `(psi_{2z} + beta psi_{2z+1}) / sqrt 2` of the chain at scale `N+M`, whose Majoranas live
/// on the lattice of scale `N+M+1`; `beta = +1` for the braid and `-1` for its inverse.
/// Every bilinear picks up `2^{M s}` with `s` the scaling exponent.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementSpec<T> {
    pub coarse: LatticeSpec<T>,
    pub depth: u32,
    pub attachment: Attachment,
    pub braid: BraidSign,
    pub scaling_exponent: T,
}

impl<T: Real> RefinementSpec<T> {
    pub fn new(coarse: LatticeSpec<T>, depth: u32, attachment: Attachment, braid: BraidSign) -> Result<Self> {
        if coarse.scale + depth + 1 > 40 {
            return Err(Error::Config(format!("refinement depth {depth} too large")));
        }
        Ok(Self { coarse, depth, attachment, braid, scaling_exponent: T::one() })
    }

    pub fn with_scaling_exponent(mut self, s: T) -> Self {
        self.scaling_exponent = s;
        self
    }

    pub fn with_depth(mut self, depth: u32) -> Self {
        self.depth = depth;
        self
    }

    /// Chain at scale `N+M`; one site per coarse-grained anyon position.
    pub fn block_lattice(&self) -> LatticeSpec<T> {
        self.coarse.refined(self.depth)
    }

    /// Lattice of scale `N+M+1` carrying the Majoranas of the refined chain.
    pub fn majorana_lattice(&self) -> LatticeSpec<T> {
        self.coarse.refined(self.depth + 1)
    }

    /// `2^{M s}`, the weight of one bilinear.
    pub fn bilinear_weight(&self) -> T {
        T::lit(2.0).powf(self.scaling_exponent * T::of_usize(self.depth as usize))
    }

    pub fn beta(&self) -> T {
        match self.braid {
            BraidSign::Direct => T::one(),
            BraidSign::Inverse => -T::one(),
        }
    }

    /// Position of coarse site `i` on the block lattice.
    pub fn embed(&self, i: usize) -> usize {
        let stride = 1usize << self.depth;
        match self.attachment {
            Attachment::Right => i * stride,
            Attachment::Left => i * stride + stride - 1,
        }
    }
}

/// Coarse-to-fine site map: right attachment lands on `i 2^M` (the even sublattice), left
/// attachment on `i 2^M + 2^M - 1` (odd for `M >= 1`). `M = 0` is the identity and the maps
/// compose: `embed_{M1+M2} = embed_{M2} o embed_{M1}`.
pub fn embed_sites<T: Real>(spec: &RefinementSpec<T>) -> Vec<usize> {
    (0..spec.coarse.site_count()).map(|i| spec.embed(i)).collect()
}
