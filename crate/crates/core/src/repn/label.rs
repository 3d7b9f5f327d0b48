use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Names of the classes that span the projective class ring.
///
/// `S`/`P` index simples and their projective covers by the weight (i, j) of the top;
/// `V(l, r)` is the l-dimensional simple with twist r and `Pr(l, r)` its projective
/// cover, which only exists as a separate class for l < n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    S(usize, usize),
    P(usize, usize),
    V(usize, usize),
    Pr(usize, usize),
}

impl Label {
    pub fn is_projective_family(self) -> bool {
        matches!(self, Label::P(..) | Label::Pr(..))
    }

    /// Checks the index ranges for order n.
    pub fn validate(self, n: usize) -> Result<Self> {
        let ok = match self {
            Label::S(i, j) | Label::P(i, j) => i < n && j < n,
            Label::V(l, r) => (1..=n).contains(&l) && r < n,
            Label::Pr(l, r) => (1..n).contains(&l) && r < n,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidLabel(format!("{self} (n = {n})")))
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::S(i, j) => write!(f, "S({i},{j})"),
            Label::P(i, j) => write!(f, "P({i},{j})"),
            Label::V(l, r) => write!(f, "V({l},{r})"),
            Label::Pr(l, r) => write!(f, "Pr({l},{r})"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let t = s.trim();
        let open = t.find('(').ok_or_else(bad)?;
        let inner = t[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let (x, y) = inner.split_once(',').ok_or_else(bad)?;
        let x: usize = x.trim().parse().map_err(|_| bad())?;
        let y: usize = y.trim().parse().map_err(|_| bad())?;
        match &t[..open] {
            "S" => Ok(Label::S(x, y)),
            "P" => Ok(Label::P(x, y)),
            "V" => Ok(Label::V(x, y)),
            "Pr" => Ok(Label::Pr(x, y)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_roundtrip() {
        for l in [Label::S(1, 2), Label::P(0, 0), Label::V(3, 1), Label::Pr(2, 0)] {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
        assert!("Q(1,1)".parse::<Label>().is_err());
        assert!("V(1,".parse::<Label>().is_err());
    }

    #[test]
    fn ranges() {
        assert!(Label::Pr(3, 0).validate(3).is_err());
        assert!(Label::V(3, 2).validate(3).is_ok());
        assert!(Label::V(0, 0).validate(3).is_err());
        assert!(Label::S(3, 0).validate(3).is_err());
    }
}
