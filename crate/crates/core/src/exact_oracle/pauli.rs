use std::fmt;

use num_complex::Complex;

use crate::{Error, Real, Result};

/// Largest Majorana count the dense oracle accepts (2^12-dimensional matrices).
pub const MAX_MAJORANAS: usize = 24;

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// `self * other = i^phase * letter`.
    pub fn product(self, other: Pauli) -> (u8, Pauli) {
        use Pauli::*;
        match (self, other) {
            (I, p) | (p, I) => (0, p),
            (a, b) if a == b => (0, I),
            (X, Y) => (1, Z),
            (Y, X) => (3, Z),
            (Y, Z) => (1, X),
            (Z, Y) => (3, X),
            (Z, X) => (1, Y),
            (X, Z) => (3, Y),
            _ => unreachable!(),
        }
    }

    fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// `i^phase` times a tensor product of Pauli letters; qubit `q` is bit `q` of a basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    pub phase: u8,
    pub letters: Vec<Pauli>,
}

impl PauliString {
    pub fn identity(qubits: usize) -> Self {
        Self { phase: 0, letters: vec![Pauli::I; qubits] }
    }

    pub fn qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.qubits(), other.qubits(), "pauli strings on different registers");
        let mut phase = self.phase + other.phase;
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| {
                let (p, l) = a.product(b);
                phase += p;
                l
            })
            .collect();
        Self { phase: phase % 4, letters }
    }

    pub fn scale_phase(&self, extra: u8) -> Self {
        Self { phase: (self.phase + extra) % 4, letters: self.letters.clone() }
    }

    /// `P |b> = coeff(b) |b ^ flip>`; returns the flip mask and a coefficient function.
    pub(crate) fn action(&self) -> (usize, usize, u8) {
        let mut flip = 0usize;
        let mut zmask = 0usize;
        let mut ys = 0u8;
        for (q, l) in self.letters.iter().enumerate() {
            match l {
                Pauli::I => {}
                Pauli::X => flip |= 1 << q,
                Pauli::Z => zmask |= 1 << q,
                Pauli::Y => {
                    flip |= 1 << q;
                    zmask |= 1 << q;
                    ys += 1;
                }
            }
        }
        (flip, zmask, (self.phase + ys) % 4)
    }

    /// Applies the string to a state vector.
    pub fn apply<T: Real>(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        let (flip, zmask, phase) = self.action();
        let mut out = vec![Complex::new(T::zero(), T::zero()); v.len()];
        for (b, amp) in v.iter().enumerate() {
            let mut c = phase_of::<T>(phase) * *amp;
            if (b & zmask).count_ones() % 2 == 1 {
                c = -c;
            }
            out[b ^ flip] += c;
        }
        out
    }
}

pub(crate) fn phase_of<T: Real>(p: u8) -> Complex<T> {
    match p % 4 {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["+", "+i", "-", "-i"][self.phase as usize % 4];
        write!(f, "{prefix}")?;
        for l in &self.letters {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

/// Jordan-Wigner Majoranas: `psi_{2q} = Z...Z X_q`, `psi_{2q+1} = Z...Z Y_q`.
pub fn jordan_wigner(majoranas: usize) -> Result<Vec<PauliString>> {
    if majoranas % 2 == 1 {
        return Err(Error::OddMajoranaCount(majoranas));
    }
    if majoranas > MAX_MAJORANAS {
        return Err(Error::SizeCap(majoranas, MAX_MAJORANAS));
    }
    let qubits = majoranas / 2;
    let mut out = Vec::with_capacity(majoranas);
    for q in 0..qubits {
        for last in [Pauli::X, Pauli::Y] {
            let mut s = PauliString::identity(qubits);
            for l in s.letters.iter_mut().take(q) {
                *l = Pauli::Z;
            }
            s.letters[q] = last;
            out.push(s);
        }
    }
    Ok(out)
}
