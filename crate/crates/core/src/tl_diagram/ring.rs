use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::Real;

/// Coefficient ring of the diagram algebra.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Size of the coefficient used for residuals; zero iff the coefficient is zero
    /// (up to rounding for inexact rings).
    fn magnitude(&self) -> f64;

    /// Whether the coefficient should be pruned from an element.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

/// Laurent polynomial in the Kauffman variable `A` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(coeff: i64, power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(power, coeff);
        }
        Self { terms }
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    /// `A^{-1}`.
    pub fn a_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// The loop value `-A^2 - A^{-2}`.
    pub fn loop_value() -> Self {
        Self::monomial(-1, 2) + Self::monomial(-1, -2)
    }

    pub fn coeff(&self, power: i32) -> i64 {
        self.terms.get(&power).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&p, &c)| (p, c))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Evaluation homomorphism at a concrete nonzero `A`.
    pub fn eval<T: Real>(&self, a: Complex<T>) -> Complex<T> {
        self.terms.iter().fold(Complex::zero(), |acc, (&p, &c)| {
            acc + a.powi(p) * T::lit(c as f64)
        })
    }

    fn insert_add(&mut self, power: i32, coeff: i64) {
        let entry = self.terms.entry(power).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&power);
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&p, &c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let c = c.abs();
            match (c, p) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "A")?,
                (1, p) => write!(f, "A^{p}")?,
                (c, 1) => write!(f, "{c}A")?,
                (c, p) => write!(f, "{c}A^{p}")?,
            }
        }
        Ok(())
    }
}

impl Add for LaurentPoly {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (p, c) in rhs.terms {
            self.insert_add(p, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul for LaurentPoly {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (&p, &c) in &self.terms {
            for (&q, &d) in &rhs.terms {
                out.insert_add(p + q, c * d);
            }
        }
        out
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Coefficient for LaurentPoly {
    fn magnitude(&self) -> f64 {
        self.terms.values().map(|c| c.unsigned_abs() as f64).fold(0.0, f64::max)
    }
}

impl<T: Real> Coefficient for Complex<T> {
    fn magnitude(&self) -> f64 {
        let (re, im) = (self.re.to_f64(), self.im.to_f64());
        re.hypot(im)
    }

    fn is_negligible(&self) -> bool {
        self.magnitude() < 1e-14
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i32..=4, -5i64..=5), 0..5).prop_map(|ts| {
            ts.into_iter()
                .fold(LaurentPoly::zero(), |acc, (p, c)| acc + LaurentPoly::monomial(c, p))
        })
    }

    #[test]
    fn a_times_inverse_is_one() {
        assert_eq!(LaurentPoly::a() * LaurentPoly::a_inv(), LaurentPoly::one());
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::loop_value().to_string(), "-A^2 - A^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn ring_laws(p in poly(), q in poly(), r in poly()) {
            prop_assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
            prop_assert_eq!((p.clone() * q.clone()) * r.clone(), p.clone() * (q.clone() * r.clone()));
            prop_assert_eq!(p.clone() * (q.clone() + r.clone()), p.clone() * q.clone() + p.clone() * r);
            prop_assert!((p.clone() - p).is_zero());
        }

        #[test]
        fn evaluation_is_multiplicative(p in poly(), q in poly(), theta in 0.1f64..6.2) {
            let a = Complex::from_polar(1.0, theta);
            let lhs = (p.clone() * q.clone()).eval(a);
            let rhs = p.eval(a) * q.eval(a);
            let scale = lhs.norm().max(rhs.norm()).max(1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }
    }
}
