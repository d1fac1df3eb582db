use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::label::{admissible, Label};
use crate::{Error, Real, Result};

/// `[n] = sin(n pi / (k+2)) / sin(pi / (k+2))`.
pub fn quantum_integer<T: Real>(k: u32, n: i64) -> T {
    let q = T::pi() / T::of_usize(k as usize + 2);
    (q * T::of_isize(n as isize)).sin() / q.sin()
}

fn quantum_factorial<T: Real>(k: u32, n: i64) -> T {
    (1..=n).fold(T::one(), |acc, m| acc * quantum_integer::<T>(k, m))
}

/// Index `(a, b, c, d, e, f)` of `[F^{abc}_d]_{ef}`: `(a b -> e) c -> d` versus `a (b c -> f) -> d`.
pub type FKey = [Label; 6];

/// Tabulated F-symbols; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FSymbolTable<T> {
    pub entries: BTreeMap<FKey, T>,
}

#[derive(Serialize, Deserialize)]
struct FEntryJson {
    a: Label,
    b: Label,
    c: Label,
    d: Label,
    e: Label,
    f: Label,
    value: f64,
}

#[derive(Serialize, Deserialize)]
struct FTableJson {
    k: u32,
    entries: Vec<FEntryJson>,
}

/// Level-`k` SU(2) data: labels `0, 1/2, ..., k/2`, quantum dimensions and F-symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionCategoryData<T: Real> {
    level: u32,
    quantum_dimensions: Vec<T>,
    fsymbols: FSymbolTable<T>,
}

fn triangle_coefficient<T: Real>(k: u32, a: i64, b: i64, c: i64) -> T {
    // Arguments are twice-spins; the combinations below are integers for admissible triples.
    let num = quantum_factorial::<T>(k, (a + b - c) / 2)
        * quantum_factorial::<T>(k, (a - b + c) / 2)
        * quantum_factorial::<T>(k, (-a + b + c) / 2);
    (num / quantum_factorial::<T>(k, (a + b + c) / 2 + 1)).sqrt()
}

/// q-deformed Racah-Wigner 6j symbol `{j1 j2 j12; j3 j j23}_q`, arguments as labels.
pub fn quantum_6j<T: Real>(k: u32, j1: Label, j2: Label, j12: Label, j3: Label, j: Label, j23: Label) -> T {
    if !(admissible(k, j1, j2, j12) && admissible(k, j12, j3, j) && admissible(k, j2, j3, j23) && admissible(k, j1, j23, j))
    {
        return T::zero();
    }
    let [a, b, e, c, d, f] = [j1, j2, j12, j3, j, j23].map(|l| l.0 as i64);
    let delta = triangle_coefficient::<T>(k, a, b, e)
        * triangle_coefficient::<T>(k, e, c, d)
        * triangle_coefficient::<T>(k, b, c, f)
        * triangle_coefficient::<T>(k, a, f, d);
    // Sum over z (integer) between the triad sums and the quad sums.
    let lo = [a + b + e, e + c + d, b + c + f, a + f + d].into_iter().max().unwrap() / 2;
    let hi = [a + b + c + d, a + e + c + f, b + e + d + f].into_iter().min().unwrap() / 2;
    let mut sum = T::zero();
    for z in lo..=hi {
        let den = quantum_factorial::<T>(k, z - (a + b + e) / 2)
            * quantum_factorial::<T>(k, z - (e + c + d) / 2)
            * quantum_factorial::<T>(k, z - (b + c + f) / 2)
            * quantum_factorial::<T>(k, z - (a + f + d) / 2)
            * quantum_factorial::<T>(k, (a + b + c + d) / 2 - z)
            * quantum_factorial::<T>(k, (a + e + c + f) / 2 - z)
            * quantum_factorial::<T>(k, (b + e + d + f) / 2 - z);
        let term = quantum_factorial::<T>(k, z + 1) / den;
        sum += if z % 2 == 0 { term } else { -term };
    }
    delta * sum
}

impl<T: Real> FusionCategoryData<T> {
    /// Unitary-gauge data from the q-Racah formula.
    pub fn su2(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidLevel);
        }
        let labels: Vec<Label> = (0..=level).map(Label).collect();
        let quantum_dimensions = labels.iter().map(|l| quantum_integer::<T>(level, l.0 as i64 + 1)).collect();
        let mut entries = BTreeMap::new();
        for &a in &labels {
            for &b in &labels {
                for &c in &labels {
                    for &d in &labels {
                        for &e in &labels {
                            for &f in &labels {
                                let v = Self::racah_entry(level, [a, b, c, d, e, f]);
                                if v != T::zero() {
                                    entries.insert([a, b, c, d, e, f], v);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Self { level, quantum_dimensions, fsymbols: FSymbolTable { entries } })
    }

    fn racah_entry(k: u32, key: FKey) -> T {
        let [a, b, c, d, e, f] = key;
        let sixj = quantum_6j::<T>(k, a, b, e, c, d, f);
        if sixj == T::zero() {
            return T::zero();
        }
        let norm = (quantum_integer::<T>(k, e.0 as i64 + 1) * quantum_integer::<T>(k, f.0 as i64 + 1)).sqrt();
        let sign = if ((a.0 + b.0 + c.0 + d.0) / 2) % 2 == 0 { T::one() } else { -T::one() };
        sign * norm * sixj
    }

    /// Loads an F-symbol table from JSON `{"k": .., "entries": [{"a",..,"f","value"}]}`.
    pub fn from_json_str(json: &str) -> Result<Self> {
        let raw: FTableJson = serde_json::from_str(json)?;
        let base = Self::su2(raw.k)?;
        let mut entries = BTreeMap::new();
        for e in raw.entries {
            let key = [e.a, e.b, e.c, e.d, e.e, e.f];
            for l in key {
                base.check_label(l)?;
            }
            entries.insert(key, T::lit(e.value));
        }
        Ok(Self { fsymbols: FSymbolTable { entries }, ..base })
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> Result<String> {
        let entries = self
            .fsymbols
            .entries
            .iter()
            .map(|(&[a, b, c, d, e, f], v)| FEntryJson { a, b, c, d, e, f, value: v.to_f64() })
            .collect();
        Ok(serde_json::to_string_pretty(&FTableJson { k: self.level, entries })?)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        (0..=self.level).map(Label)
    }

    pub fn sigma(&self) -> Label {
        Label::SIGMA
    }

    pub fn check_label(&self, l: Label) -> Result<()> {
        if l.0 > self.level {
            return Err(Error::LabelOutOfRange { label: l.to_string(), level: self.level });
        }
        Ok(())
    }

    pub fn quantum_dimension(&self, l: Label) -> Result<T> {
        self.check_label(l)?;
        Ok(self.quantum_dimensions[l.0 as usize])
    }

    /// `d_sigma = 2 cos(pi / (k+2))`, the loop value of the chain.
    pub fn sigma_dimension(&self) -> T {
        self.quantum_dimensions[1]
    }

    pub fn admissible(&self, a: Label, b: Label, c: Label) -> bool {
        admissible(self.level, a, b, c)
    }

    pub fn fsymbols(&self) -> &FSymbolTable<T> {
        &self.fsymbols
    }

    /// `[F^{abc}_d]_{ef}`; zero when a vertex is inadmissible.
    pub fn fsymbol(&self, a: Label, b: Label, c: Label, d: Label, e: Label, f: Label) -> Result<T> {
        for l in [a, b, c, d, e, f] {
            self.check_label(l)?;
        }
        Ok(self.f_unchecked([a, b, c, d, e, f]))
    }

    fn f_unchecked(&self, key: FKey) -> T {
        self.fsymbols.entries.get(&key).copied().unwrap_or_else(T::zero)
    }

    /// The matrix `[F^{abc}_d]` with rows `e` and columns `f` over all labels.
    pub fn fmatrix(&self, a: Label, b: Label, c: Label, d: Label) -> nalgebra::DMatrix<T> {
        let n = self.level as usize + 1;
        nalgebra::DMatrix::from_fn(n, n, |e, f| self.f_unchecked([a, b, c, d, Label(e as u32), Label(f as u32)]))
    }

    /// Largest deviation of any F-matrix from orthogonality on its admissible block.
    pub fn orthogonality_residual(&self) -> T {
        let mut worst = T::zero();
        for a in self.labels() {
            for b in self.labels() {
                for c in self.labels() {
                    for d in self.labels() {
                        let m = self.fmatrix(a, b, c, d);
                        let rows: Vec<usize> = (0..m.nrows())
                            .filter(|&e| self.admissible(a, b, Label(e as u32)) && self.admissible(Label(e as u32), c, d))
                            .collect();
                        let cols: Vec<usize> = (0..m.ncols())
                            .filter(|&f| self.admissible(b, c, Label(f as u32)) && self.admissible(a, Label(f as u32), d))
                            .collect();
                        if rows.is_empty() && cols.is_empty() {
                            continue;
                        }
                        if rows.len() != cols.len() {
                            return T::one();
                        }
                        let block = m.select_rows(&rows).select_columns(&cols);
                        let defect = (&block * block.transpose() - nalgebra::DMatrix::identity(rows.len(), rows.len())).amax();
                        worst = worst.max(defect);
                    }
                }
            }
        }
        worst
    }

    /// Largest pentagon-equation residual
    /// `[F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}`.
    pub fn pentagon_residual(&self) -> T {
        let labels: Vec<Label> = self.labels().collect();
        let ok = |x, y, z| self.admissible(x, y, z);
        let mut worst = T::zero();
        // Every nonzero term on either side needs the vertices (a b f), (f c g), (g d e),
        // (c d l) and (b l k); other tuples are skipped.
        for &a in &labels {
            for &b in &labels {
                for &f in labels.iter().filter(|&&f| ok(a, b, f)) {
                    for &c in &labels {
                        for &g in labels.iter().filter(|&&g| ok(f, c, g)) {
                            for &d in &labels {
                                for &e in labels.iter().filter(|&&e| ok(g, d, e)) {
                                    for &l in labels.iter().filter(|&&l| ok(c, d, l)) {
                                        for &k in labels.iter().filter(|&&k| ok(b, l, k)) {
                                            let lhs = self.f_unchecked([f, c, d, e, g, l])
                                                * self.f_unchecked([a, b, l, e, f, k]);
                                            let rhs = labels.iter().fold(T::zero(), |acc, &h| {
                                                acc + self.f_unchecked([a, b, c, g, f, h])
                                                    * self.f_unchecked([a, h, d, e, g, k])
                                                    * self.f_unchecked([b, c, d, k, h, l])
                                            });
                                            worst = worst.max((lhs - rhs).abs());
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert!((quantum_integer::<f64>(2, 2) - 2f64.sqrt()).abs() < 1e-14);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((quantum_integer::<f64>(3, 2) - phi).abs() < 1e-14);
        for k in 1..6 {
            assert!((quantum_integer::<f64>(k, 1) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn sigma_dimension() {
        for k in 1..6u32 {
            let d = FusionCategoryData::<f64>::su2(k).unwrap();
            let want = 2.0 * (std::f64::consts::PI / (k as f64 + 2.0)).cos();
            assert!((d.sigma_dimension() - want).abs() < 1e-12);
        }
        assert!(FusionCategoryData::<f64>::su2(0).is_err());
    }

    #[test]
    fn ising_sigma_fmatrix_is_hadamard_up_to_sign() {
        let d = FusionCategoryData::<f64>::su2(2).unwrap();
        let s = Label::SIGMA;
        let m = d.fmatrix(s, s, s, s);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let block = nalgebra::Matrix2::new(m[(0, 0)], m[(0, 2)], m[(2, 0)], m[(2, 2)]);
        // Sign conventions are a gauge choice; moduli, symmetry and orthogonality are not.
        assert!(block.iter().all(|x| (x.abs() - r).abs() < 1e-14), "{block}");
        assert!((block - block.transpose()).amax() < 1e-14);
        assert!((block * block.transpose() - nalgebra::Matrix2::identity()).amax() < 1e-14);
        assert_eq!(m[(1, 1)], 0.0);
    }

    #[test]
    fn inadmissible_entries_vanish_and_labels_checked() {
        let d = FusionCategoryData::<f64>::su2(2).unwrap();
        let (z, s, o) = (Label(0), Label(1), Label(2));
        assert_eq!(d.fsymbol(s, s, s, s, s, z).unwrap(), 0.0);
        assert_eq!(d.fsymbol(o, o, o, o, o, o).unwrap(), 0.0);
        assert!(matches!(d.fsymbol(Label(3), s, s, s, z, z), Err(Error::LabelOutOfRange { .. })));
    }

    #[test]
    fn orthogonal_and_pentagon_for_small_levels() {
        for k in 1..=4 {
            let d = FusionCategoryData::<f64>::su2(k).unwrap();
            assert!(d.orthogonality_residual() < 1e-12, "k = {k}");
            assert!(d.pentagon_residual() < 1e-12, "k = {k}: {}", d.pentagon_residual());
        }
    }

    #[test]
    fn json_round_trip() {
        let d = FusionCategoryData::<f64>::su2(3).unwrap();
        let json = d.to_json_string().unwrap();
        let back = FusionCategoryData::<f64>::from_json_str(&json).unwrap();
        for (key, v) in &d.fsymbols().entries {
            assert!((back.fsymbols().entries[key] - v).abs() < 1e-15);
        }
        assert!(FusionCategoryData::<f64>::from_json_str(r#"{"k":2,"entries":[{"a":"3/2","b":"0","c":"0","d":"0","e":"0","f":"0","value":1.0}]}"#).is_err());
    }
}
