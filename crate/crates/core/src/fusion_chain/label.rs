use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// SU(2)_k label `j` stored as the integer `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Label(pub u32);

impl Label {
    pub const VACUUM: Label = Label(0);
    pub const SIGMA: Label = Label(1);

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn spin(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Config(format!("cannot parse fusion label {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((num, "2")) => {
                let n: u32 = num.trim().parse().map_err(|_| bad())?;
                Ok(Label(n))
            }
            Some(_) => Err(bad()),
            None => {
                let n: u32 = s.parse().map_err(|_| bad())?;
                Ok(Label(2 * n))
            }
        }
    }
}

impl TryFrom<String> for Label {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<Label> for String {
    fn from(l: Label) -> String {
        l.to_string()
    }
}

/// `a x b -> c` is allowed at level `k`: triangle rule, integral total spin, `a + b + c <= k`.
pub fn admissible(k: u32, a: Label, b: Label, c: Label) -> bool {
    let (a, b, c) = (a.0, b.0, c.0);
    a.abs_diff(b) <= c && c <= a + b && (a + b + c) % 2 == 0 && a + b + c <= 2 * k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for l in 0..7 {
            let label = Label(l);
            assert_eq!(label.to_string().parse::<Label>().unwrap(), label);
        }
        assert_eq!("1/2".parse::<Label>().unwrap(), Label::SIGMA);
        assert_eq!("3/2".parse::<Label>().unwrap(), Label(3));
        assert!("1/3".parse::<Label>().is_err());
        assert!("x".parse::<Label>().is_err());
    }

    #[test]
    fn ising_fusion_rules() {
        let (z, s, o) = (Label(0), Label(1), Label(2));
        assert!(admissible(2, s, s, z));
        assert!(admissible(2, s, s, o));
        assert!(admissible(2, o, s, s));
        assert!(!admissible(2, o, o, o));
        assert!(!admissible(2, s, s, s));
        assert!(!admissible(1, s, s, o));
    }
}
