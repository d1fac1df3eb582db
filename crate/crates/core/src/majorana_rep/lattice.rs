use serde::{Deserialize, Serialize};

use crate::{Error, Real, Result};

/// Dyadic periodic lattice at log-scale `N`.
///
/// With base spacing `eps0` and base half-site count `L0`, the spacing is `eps0 / 2^N`,
/// the half-length `L = eps0 * L0` is scale independent, and the `2 * L0 * 2^N` sites sit
/// at `x = eps * j` for `j` in `-l..l`. Site index `i` corresponds to `j = i - l`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeSpec<T> {
    pub scale: u32,
    pub base_spacing: T,
    pub base_half_sites: usize,
}

impl<T: Real> LatticeSpec<T> {
    pub fn new(scale: u32, base_spacing: T, base_half_sites: usize) -> Result<Self> {
        if base_half_sites == 0 {
            return Err(Error::InvalidLattice("base half-site count must be positive".into()));
        }
        if base_spacing <= T::zero() {
            return Err(Error::InvalidLattice("base spacing must be positive".into()));
        }
        if scale > 40 {
            return Err(Error::InvalidLattice(format!("scale {scale} too large")));
        }
        Ok(Self { scale, base_spacing, base_half_sites })
    }

    pub fn spacing(&self) -> T {
        self.base_spacing / T::lit(2f64.powi(self.scale as i32))
    }

    pub fn half_length(&self) -> T {
        self.base_spacing * T::of_usize(self.base_half_sites)
    }

    /// Number of sites on the half chain, `L / eps`.
    pub fn half_sites(&self) -> usize {
        self.base_half_sites << self.scale
    }

    pub fn site_count(&self) -> usize {
        2 * self.half_sites()
    }

    /// Lattice `m` dyadic steps finer.
    pub fn refined(&self, m: u32) -> Self {
        Self { scale: self.scale + m, ..*self }
    }

    pub fn position(&self, site: usize) -> T {
        self.spacing() * (T::of_usize(site) - T::of_usize(self.half_sites()))
    }

    pub fn check_site(&self, site: usize) -> Result<()> {
        if site >= self.site_count() {
            return Err(Error::SiteOutOfRange { site, sites: self.site_count() });
        }
        Ok(())
    }

    /// Site reached after `steps` lattice steps from `site`, with the anti-periodic sign
    /// picked up from every crossing of the seam between the last and first site.
    ///
    /// All boundary signs of the chain go through this function.
    pub fn shift(&self, site: usize, steps: isize) -> (usize, T) {
        let n = self.site_count() as isize;
        let raw = site as isize + steps;
        let wraps = raw.div_euclid(n);
        let idx = raw.rem_euclid(n) as usize;
        let sign = if wraps.rem_euclid(2) == 0 { T::one() } else { -T::one() };
        (idx, sign)
    }

    pub(crate) fn key(&self) -> (u32, usize, u64) {
        (self.scale, self.base_half_sites, self.base_spacing.to_f64().to_bits())
    }
}
