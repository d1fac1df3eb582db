use std::collections::BTreeMap;

use num_complex::Complex;

use super::pairing::PlanarPairing;
use super::ring::{Coefficient, LaurentPoly};
use crate::{Error, Real, Result};

/// Finite linear combination of planar pairings on a fixed number of strands.
#[derive(Clone, Debug, PartialEq)]
pub struct TlElement<R> {
    strands: usize,
    terms: BTreeMap<PlanarPairing, R>,
}

impl<R: Coefficient> TlElement<R> {
    pub fn zero(strands: usize) -> Self {
        Self { strands, terms: BTreeMap::new() }
    }

    pub fn from_pairing(pairing: PlanarPairing, coeff: R) -> Self {
        let mut e = Self::zero(pairing.strand_count());
        e.add_term(pairing, coeff);
        e
    }

    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarPairing, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pairing: &PlanarPairing) -> R {
        self.terms.get(pairing).cloned().unwrap_or_else(R::zero)
    }

    fn add_term(&mut self, pairing: PlanarPairing, coeff: R) {
        let merged = match self.terms.remove(&pairing) {
            Some(old) => old + coeff,
            None => coeff,
        };
        if !merged.is_negligible() {
            self.terms.insert(pairing, merged);
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = Self::zero(self.strands);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), s.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-R::one()))
    }

    /// Largest coefficient magnitude; zero iff the element is zero.
    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(Coefficient::magnitude).fold(0.0, f64::max)
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> TlElement<S> {
        let mut out = TlElement::zero(self.strands);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c));
        }
        out
    }
}

impl TlElement<LaurentPoly> {
    /// Evaluates the coefficients at a concrete `A`.
    pub fn eval<T: Real>(&self, a: Complex<T>) -> TlElement<Complex<T>> {
        self.map_coeffs(|c| c.eval(a))
    }
}

/// Over- or under-crossing of two adjacent strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn inverse(self) -> Self {
        match self {
            Self::Positive => Self::Negative,
            Self::Negative => Self::Positive,
        }
    }
}

/// The Temperley-Lieb algebra over a coefficient ring, fixed by the Kauffman variable `A`,
/// its inverse, and the loop value.
#[derive(Clone, Debug)]
pub struct TlAlgebra<R> {
    a: R,
    a_inv: R,
    loop_value: R,
    /// Factor applied per closed loop when stacking; equals `loop_value` unless corrupted.
    compose_loop: R,
}

impl TlAlgebra<LaurentPoly> {
    /// Exact algebra over `Z[A, A^{-1}]` with loop value `-A^2 - A^{-2}`.
    pub fn symbolic() -> Self {
        Self {
            a: LaurentPoly::a(),
            a_inv: LaurentPoly::a_inv(),
            loop_value: LaurentPoly::loop_value(),
            compose_loop: LaurentPoly::loop_value(),
        }
    }
}

impl<T: Real> TlAlgebra<Complex<T>> {
    /// Numeric algebra at a concrete nonzero `A`.
    pub fn at(a: Complex<T>) -> Self {
        let a_inv = a.inv();
        let loop_value = -(a * a) - a_inv * a_inv;
        Self { a, a_inv, compose_loop: loop_value, loop_value }
    }
}

impl<R: Coefficient> TlAlgebra<R> {
    /// Same algebra, but stacking removes each closed loop with `factor` instead of the
    /// loop value. Used as a negative control for the relation checks.
    pub fn with_compose_loop_factor(mut self, factor: R) -> Self {
        self.compose_loop = factor;
        self
    }

    pub fn loop_value(&self) -> &R {
        &self.loop_value
    }

    pub fn a(&self) -> &R {
        &self.a
    }

    pub fn identity(&self, n: usize) -> Result<TlElement<R>> {
        if n == 0 {
            return Err(Error::EmptyDiagram);
        }
        Ok(TlElement::from_pairing(PlanarPairing::identity(n), R::one()))
    }

    /// Generator `e_i` for `1 <= i <= n-1`.
    pub fn generator(&self, n: usize, i: usize) -> Result<TlElement<R>> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, strands: n });
        }
        Ok(TlElement::from_pairing(PlanarPairing::cup_cap(n, i - 1), R::one()))
    }

    /// Vertical stacking: `a` on top of `b`, i.e. the operator product `a b`.
    pub fn compose(&self, a: &TlElement<R>, b: &TlElement<R>) -> Result<TlElement<R>> {
        a.check_strands(b)?;
        let mut out = TlElement::zero(a.strands);
        let mut loop_powers: Vec<R> = vec![R::one()];
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                let (p, loops) = pa.stack_over(pb);
                while loop_powers.len() <= loops {
                    let next = loop_powers.last().cloned().unwrap() * self.compose_loop.clone();
                    loop_powers.push(next);
                }
                out.add_term(p, ca.clone() * cb.clone() * loop_powers[loops].clone());
            }
        }
        Ok(out)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a>(
        &self,
        n: usize,
        factors: impl IntoIterator<Item = &'a TlElement<R>>,
    ) -> Result<TlElement<R>>
    where
        R: 'a,
    {
        factors
            .into_iter()
            .try_fold(self.identity(n)?, |acc, f| self.compose(&acc, f))
    }

    /// Kauffman resolution of a crossing: `A + A^{-1} e_i` or `A^{-1} + A e_i`.
    pub fn kauffman_braid(&self, n: usize, i: usize, sign: CrossingSign) -> Result<TlElement<R>> {
        let id = self.identity(n)?;
        let e = self.generator(n, i)?;
        let (c_id, c_e) = match sign {
            CrossingSign::Positive => (&self.a, &self.a_inv),
            CrossingSign::Negative => (&self.a_inv, &self.a),
        };
        id.scale(c_id).add(&e.scale(c_e))
    }

    /// Markov trace: close every strand around the side and count loops.
    pub fn trace_closure(&self, x: &TlElement<R>) -> R {
        x.terms.iter().fold(R::zero(), |acc, (p, c)| {
            let loops = p.closure_loops();
            let weight = (0..loops).fold(R::one(), |w, _| w * self.compose_loop.clone());
            acc + c.clone() * weight
        })
    }
}
