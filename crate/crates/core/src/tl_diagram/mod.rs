//! Planar Temperley-Lieb diagrams with Kauffman-bracket braiding.
//!
//! Elements are linear combinations of non-crossing pairings. Composition stacks
//! diagrams and replaces every closed loop by the loop value `-A^2 - A^{-2}`.
//! Coefficients live in an exact Laurent ring by default; evaluation at a concrete `A`
//! is an explicit conversion.

mod element;
mod pairing;
mod relations;
mod ring;
mod words;

pub use element::{CrossingSign, TlAlgebra, TlElement};
pub use pairing::{Boundary, PlanarPairing};
pub use relations::{
    verify_braid_relations, verify_relations, RelationCheck, RelationReport, COMMUTE, NEIGHBOR,
    REIDEMEISTER_II, REIDEMEISTER_III, SQUARE,
};
pub use ring::{Coefficient, LaurentPoly};
pub use words::{reduced_words, random_word, Letter};

/// Default Kauffman variable for the Ising loop value: `A = e^{3 i pi / 8}`.
pub fn default_kauffman_a() -> num_complex::Complex64 {
    num_complex::Complex64::from_polar(1.0, 3.0 * std::f64::consts::PI / 8.0)
}

/// The four unit-modulus solutions of `-A^2 - A^{-2} = sqrt 2`.
pub fn ising_kauffman_roots() -> [num_complex::Complex64; 4] {
    use std::f64::consts::PI;
    [3.0, -3.0, 5.0, 11.0].map(|k| num_complex::Complex64::from_polar(1.0, k * PI / 8.0))
}
