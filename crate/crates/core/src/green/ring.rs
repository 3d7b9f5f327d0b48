use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{AlgebraSpec, Family};
use crate::repn::{DecompVector, Label};

/// The three algebra families whose projective class rings are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingFamily {
    /// A_n(q) ⊗ A_n(q^{-1}): basic, labels S(i,j), P(i,j).
    TensorTaft,
    /// H_n(0,q): basic, labels S(i,j), P(i,j).
    H0,
    /// H_n(p,q) with p ≠ 0: labels V(l,r), Pr(l,r).
    H1,
}

impl RingFamily {
    pub fn of(spec: &AlgebraSpec) -> Result<RingFamily> {
        match spec.family {
            Family::TensorTaft => Ok(RingFamily::TensorTaft),
            Family::Hpq if spec.is_h0() => Ok(RingFamily::H0),
            Family::Hpq => Ok(RingFamily::H1),
            f => Err(Error::InvalidSpec(format!("no projective class ring tabulated for family {f}"))),
        }
    }

    /// Representative algebra: p = 1 for the non-basic family.
    pub fn spec(self, n: usize) -> Result<AlgebraSpec> {
        match self {
            RingFamily::TensorTaft => AlgebraSpec::tensor_taft(n),
            RingFamily::H0 => AlgebraSpec::hpq(n, 0),
            RingFamily::H1 => AlgebraSpec::hpq(n, 1),
        }
    }

    pub fn is_basic(self) -> bool {
        self != RingFamily::H1
    }

    /// Labels of the ℤ-basis of r_p: simples first, then the projectives that are not simple.
    pub fn basis(self, n: usize) -> Vec<Label> {
        let grid = |f: fn(usize, usize) -> Label| (0..n).flat_map(move |i| (0..n).map(move |j| f(i, j)));
        match self {
            RingFamily::TensorTaft | RingFamily::H0 => grid(Label::S).chain(grid(Label::P)).collect(),
            RingFamily::H1 => {
                let mut out: Vec<Label> = (1..=n).flat_map(|l| (0..n).map(move |r| Label::V(l, r))).collect();
                out.extend((1..n).flat_map(|l| (0..n).map(move |r| Label::Pr(l, r))));
                out
            }
        }
    }

    pub fn unit(self) -> Label {
        if self.is_basic() {
            Label::S(0, 0)
        } else {
            Label::V(1, 0)
        }
    }

    /// Whether `l` names a basis class of this family at order n.
    pub fn check_label(self, n: usize, l: Label) -> Result<Label> {
        let ok = matches!((self.is_basic(), l), (true, Label::S(..) | Label::P(..)) | (false, Label::V(..) | Label::Pr(..)));
        if !ok {
            return Err(Error::InvalidLabel(format!("{l} does not name a class for {self:?}")));
        }
        l.validate(n)
    }

    /// Dimension of the module named by `l`.
    pub fn label_dim(self, n: usize, l: Label) -> usize {
        match l {
            Label::S(..) => 1,
            Label::P(..) => n * n,
            Label::V(k, _) => k,
            Label::Pr(..) => 2 * n,
        }
    }
}

impl fmt::Display for RingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingFamily::TensorTaft => "tensor-taft",
            RingFamily::H0 => "hpq(p=0)",
            RingFamily::H1 => "hpq(p≠0)",
        })
    }
}

/// A ℤ-linear combination of basis classes. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElt(BTreeMap<Label, i64>);

impl RingElt {
    pub fn zero() -> RingElt {
        RingElt::default()
    }

    pub fn from_label(l: Label) -> RingElt {
        RingElt::term(l, 1)
    }

    pub fn term(l: Label, c: i64) -> RingElt {
        let mut out = RingElt::zero();
        out.add_term(l, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, l: Label) -> i64 {
        self.0.get(&l).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, i64)> + '_ {
        self.0.iter().map(|(l, c)| (*l, *c))
    }

    pub fn add_term(&mut self, l: Label, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(l).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&l);
        }
    }

    pub fn add_scaled(&mut self, other: &RingElt, s: i64) {
        for (l, c) in other.iter() {
            self.add_term(l, c * s);
        }
    }

    pub fn add(&self, other: &RingElt) -> RingElt {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn sub(&self, other: &RingElt) -> RingElt {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn scale(&self, s: i64) -> RingElt {
        let mut out = RingElt::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|&c| c > 0)
    }

    /// Σ c_l · dim(l).
    pub fn dim(&self, family: RingFamily, n: usize) -> i64 {
        self.iter().map(|(l, c)| c * family.label_dim(n, l) as i64).sum()
    }

    /// Terms in display order: simple classes before projective ones, longer first.
    pub fn display_terms(&self) -> Vec<(Label, i64)> {
        let mut terms: Vec<(Label, i64)> = self.iter().collect();
        terms.sort_by_key(|(l, _)| match *l {
            Label::S(i, j) => (0, 0, i, j),
            Label::V(k, r) => (0, usize::MAX - k, r, 0),
            Label::P(i, j) => (1, 0, i, j),
            Label::Pr(k, r) => (1, usize::MAX - k, r, 0),
        });
        terms
    }

    pub fn to_pairs(&self) -> Vec<LabelMult> {
        self.iter().map(|(label, mult)| LabelMult { label, mult }).collect()
    }
}

impl From<&DecompVector> for RingElt {
    fn from(d: &DecompVector) -> RingElt {
        let mut out = RingElt::zero();
        for (l, c) in d.classes() {
            out.add_term(l, c as i64);
        }
        out
    }
}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.display_terms().into_iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c.abs()) {
                (0, 1) if c < 0 => write!(f, "-{l}")?,
                (0, 1) => write!(f, "{l}")?,
                (0, a) => write!(f, "{}{a}·{l}", if c < 0 { "-" } else { "" })?,
                (_, 1) => write!(f, " {sign} {l}")?,
                (_, a) => write!(f, " {sign} {a}·{l}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMult {
    pub label: Label,
    pub mult: i64,
}

impl Serialize for RingElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut x = RingElt::term(Label::V(2, 0), 3);
        x.add_term(Label::V(2, 0), -3);
        assert!(x.is_zero());
        assert_eq!(x.to_string(), "0");
    }

    #[test]
    fn display_puts_simples_first_longest_first() {
        let x = RingElt::from_label(Label::V(1, 1)).add(&RingElt::from_label(Label::V(3, 0)));
        assert_eq!(x.to_string(), "V(3,0) + V(1,1)");
        let y = RingElt::term(Label::V(3, 1), 2).add(&RingElt::from_label(Label::Pr(2, 0)));
        assert_eq!(y.to_string(), "2·V(3,1) + Pr(2,0)");
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(RingFamily::TensorTaft.basis(3).len(), 18);
        assert_eq!(RingFamily::H0.basis(4).len(), 32);
        assert_eq!(RingFamily::H1.basis(3).len(), 15);
        assert_eq!(RingFamily::H1.basis(5).len(), 45);
    }
}
