use std::collections::{BTreeMap, VecDeque};

use rand::Rng;

use super::element::{CrossingSign, TlAlgebra, TlElement};
use super::pairing::PlanarPairing;
use super::ring::Coefficient;
use crate::Result;

/// A letter of a word in generators and braids; positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Generator(usize),
    Braid(usize, CrossingSign),
}

impl<R: Coefficient> TlAlgebra<R> {
    pub fn letter(&self, n: usize, letter: Letter) -> Result<TlElement<R>> {
        match letter {
            Letter::Generator(i) => self.generator(n, i),
            Letter::Braid(i, s) => self.kauffman_braid(n, i, s),
        }
    }

    pub fn word(&self, n: usize, word: &[Letter]) -> Result<TlElement<R>> {
        word.iter().try_fold(self.identity(n)?, |acc, &l| self.compose(&acc, &self.letter(n, l)?))
    }
}

/// Uniformly random word of `len` letters on `n >= 2` strands.
pub fn random_word(rng: &mut impl Rng, n: usize, len: usize, braids: bool) -> Vec<Letter> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            if braids && rng.gen_bool(0.5) {
                let s = if rng.gen_bool(0.5) { CrossingSign::Positive } else { CrossingSign::Negative };
                Letter::Braid(i, s)
            } else {
                Letter::Generator(i)
            }
        })
        .collect()
}

/// A shortest generator word for every planar pairing on `n` strands, found by
/// breadth-first search from the identity. Shortest words never close a loop, so each
/// word composes to its pairing with coefficient one.
pub fn reduced_words(n: usize) -> BTreeMap<PlanarPairing, Vec<usize>> {
    let mut found = BTreeMap::new();
    let id = PlanarPairing::identity(n);
    found.insert(id.clone(), Vec::new());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        let word = found[&p].clone();
        for i in 1..n {
            let (next, loops) = p.stack_over(&PlanarPairing::cup_cap(n, i - 1));
            if loops == 0 && !found.contains_key(&next) {
                let mut w = word.clone();
                w.push(i);
                found.insert(next.clone(), w);
                queue.push_back(next);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl_diagram::LaurentPoly;
    use num_traits::One;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reduced_words_reach_every_pairing() {
        let alg = TlAlgebra::symbolic();
        for n in 2..=6 {
            let words = reduced_words(n);
            assert_eq!(words.len(), PlanarPairing::enumerate(n).len());
            for (p, w) in &words {
                let letters: Vec<Letter> = w.iter().map(|&i| Letter::Generator(i)).collect();
                let el = alg.word(n, &letters).unwrap();
                assert_eq!(el, TlElement::from_pairing(p.clone(), LaurentPoly::one()));
            }
        }
    }

    #[test]
    fn composition_is_associative_on_random_words() {
        let alg = TlAlgebra::symbolic();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(2..=5);
            let len = rng.gen_range(0..=6);
            let w = random_word(&mut rng, n, len, true);
            let split1 = rng.gen_range(0..=len);
            let split2 = rng.gen_range(split1..=len);
            let a = alg.word(n, &w[..split1]).unwrap();
            let b = alg.word(n, &w[split1..split2]).unwrap();
            let c = alg.word(n, &w[split2..]).unwrap();
            let left = alg.compose(&alg.compose(&a, &b).unwrap(), &c).unwrap();
            let right = alg.compose(&a, &alg.compose(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
            for (p, _) in left.terms() {
                assert!(p.is_planar());
            }
        }
    }
}
