use serde::Serialize;

use super::ring::{RingElt, RingFamily};
use crate::error::{Error, Result};
use crate::repn::Label;

/// Which closed-form rule produced a product. The `H1*` rules partition all products of
/// basis classes of H_n(1,q) up to commutativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FusionRule {
    /// S ⊗ S: weights add.
    SimpleSimple,
    /// S ⊗ P: the cover is twisted.
    SimpleProj,
    /// P ⊗ P in 𝓗_n(q): every P(r,t) once.
    ProjProjAll,
    /// P ⊗ P in H_n(0,q): n copies along the diagonal shift.
    ProjProjDiagonal,
    /// V(1,r) ⊗ V(l,r').
    H1TwistSimple,
    /// V(1,r) ⊗ P(l,r').
    H1TwistProj,
    /// V ⊗ V with l ≤ l' and l + l' ≤ n + 1: Clebsch-Gordan.
    H1SimpleSimpleLow,
    /// V ⊗ V with l + l' > n + 1: the top of the ladder becomes projective.
    H1SimpleSimpleHigh,
    /// V(l) ⊗ P(l') with l ≤ l' < n and l + l' ≤ n.
    H1SimpleProjLow,
    /// V(l) ⊗ P(l') with l ≤ l' < n and l + l' ≥ n + 1.
    H1SimpleProjHigh,
    /// V(l) ⊗ P(l') with l' < l < n and l + l' ≤ n.
    H1LongSimpleProjLow,
    /// V(l) ⊗ P(l') with l' < l < n and l + l' ≥ n + 1.
    H1LongSimpleProjHigh,
    /// V(n) ⊗ P(l).
    H1FullSimpleProj,
    /// P ⊗ P with l ≤ l' < n and l + l' ≤ n.
    H1ProjProjLow,
    /// P ⊗ P with l ≤ l' < n and l + l' ≥ n + 1.
    H1ProjProjHigh,
}

impl FusionRule {
    pub const H1_RULES: [FusionRule; 11] = [
        FusionRule::H1TwistSimple,
        FusionRule::H1TwistProj,
        FusionRule::H1SimpleSimpleLow,
        FusionRule::H1SimpleSimpleHigh,
        FusionRule::H1SimpleProjLow,
        FusionRule::H1SimpleProjHigh,
        FusionRule::H1LongSimpleProjLow,
        FusionRule::H1LongSimpleProjHigh,
        FusionRule::H1FullSimpleProj,
        FusionRule::H1ProjProjLow,
        FusionRule::H1ProjProjHigh,
    ];
}

/// The closed-form product of two basis classes.
pub fn closed_form_fusion(family: RingFamily, n: usize, a: Label, b: Label) -> Result<RingElt> {
    Ok(closed_form_with_rule(family, n, a, b)?.0)
}

/// The closed-form product and the rule that produced it.
pub fn closed_form_with_rule(family: RingFamily, n: usize, a: Label, b: Label) -> Result<(RingElt, FusionRule)> {
    let a = family.check_label(n, a)?;
    let b = family.check_label(n, b)?;
    match family {
        RingFamily::TensorTaft | RingFamily::H0 => Ok(basic(family, n, a, b)),
        RingFamily::H1 => h1(n, a, b),
    }
}

fn basic(family: RingFamily, n: usize, a: Label, b: Label) -> (RingElt, FusionRule) {
    let add = |x: usize, y: usize| (x + y) % n;
    match (a, b) {
        (Label::S(i, j), Label::S(k, l)) => (RingElt::from_label(Label::S(add(i, k), add(j, l))), FusionRule::SimpleSimple),
        (Label::S(i, j), Label::P(k, l)) | (Label::P(k, l), Label::S(i, j)) => {
            (RingElt::from_label(Label::P(add(i, k), add(j, l))), FusionRule::SimpleProj)
        }
        (Label::P(i, j), Label::P(k, l)) => {
            let mut out = RingElt::zero();
            if family == RingFamily::TensorTaft {
                for r in 0..n {
                    for t in 0..n {
                        out.add_term(Label::P(r, t), 1);
                    }
                }
                (out, FusionRule::ProjProjAll)
            } else {
                for t in 0..n {
                    out.add_term(Label::P(add(add(i, k), t), add(add(j, l), t)), n as i64);
                }
                (out, FusionRule::ProjProjDiagonal)
            }
        }
        _ => unreachable!("labels were checked against the family"),
    }
}

/// ⌊(t + 1) / 2⌋.
fn c(t: i64) -> i64 {
    (t + 1).div_euclid(2)
}

/// Accumulates Σ_{i=lo}^{hi} mult · X(len(i), twist(i)), with P(n, ·) read as V(n, ·).
/// An empty range (lo > hi) contributes nothing.
struct Acc {
    n: i64,
    out: RingElt,
    bad: Option<String>,
}

impl Acc {
    fn new(n: usize) -> Acc {
        Acc { n: n as i64, out: RingElt::zero(), bad: None }
    }

    fn label(&self, proj: bool, len: i64, twist: i64) -> Option<Label> {
        if !(1..=self.n).contains(&len) {
            return None;
        }
        let (len, r) = (len as usize, twist.rem_euclid(self.n) as usize);
        Some(if proj && len < self.n as usize { Label::Pr(len, r) } else { Label::V(len, r) })
    }

    fn sum(&mut self, proj: bool, mult: i64, lo: i64, hi: i64, len: impl Fn(i64) -> i64, twist: impl Fn(i64) -> i64) {
        for i in lo..=hi {
            match self.label(proj, len(i), twist(i)) {
                Some(l) => self.out.add_term(l, mult),
                None if self.bad.is_none() => self.bad = Some(format!("length {} at i = {i}", len(i))),
                None => {}
            }
        }
    }

    fn finish(self, rule: FusionRule, l: i64, l2: i64) -> Result<(RingElt, FusionRule)> {
        match self.bad {
            None => Ok((self.out, rule)),
            Some(why) => Err(Error::UncoveredCase(format!("(l, l', t) = ({l}, {l2}, {}): {rule:?} produced {why}", l + l2 - self.n - 1))),
        }
    }
}

fn h1(n: usize, a: Label, b: Label) -> Result<(RingElt, FusionRule)> {
    use FusionRule::*;
    let ni = n as i64;
    let twist = |x: Label, s: usize| match x {
        Label::V(l, r) => (RingElt::from_label(Label::V(l, (r + s) % n)), H1TwistSimple),
        Label::Pr(l, r) => (RingElt::from_label(Label::Pr(l, (r + s) % n)), H1TwistProj),
        _ => unreachable!(),
    };
    match (a, b) {
        (Label::V(1, r), x) | (x, Label::V(1, r)) => Ok(twist(x, r)),
        (Label::V(l1, r1), Label::V(l2, r2)) => {
            let ((l, r), (l2, r2)) = order((l1, r1), (l2, r2));
            let (l, l2, rr) = (l as i64, l2 as i64, (r + r2) as i64);
            let t = l + l2 - (ni + 1);
            let mut acc = Acc::new(n);
            let len = |i: i64| l + l2 - 1 - 2 * i;
            let tw = |i: i64| rr + i;
            if t <= 0 {
                acc.sum(false, 1, 0, l - 1, len, tw);
                acc.finish(H1SimpleSimpleLow, l, l2)
            } else {
                acc.sum(true, 1, c(t), t, len, tw);
                acc.sum(false, 1, t + 1, l - 1, len, tw);
                acc.finish(H1SimpleSimpleHigh, l, l2)
            }
        }
        (Label::V(lv, rv), Label::Pr(lp, rp)) | (Label::Pr(lp, rp), Label::V(lv, rv)) => {
            let (l, l2, rr) = (lv as i64, lp as i64, (rv + rp) as i64);
            let t = l + l2 - (ni + 1);
            let mut acc = Acc::new(n);
            let tw = |i: i64| rr + i;
            let low = |i: i64| l + l2 - 1 - 2 * i;
            let wrap = |i: i64| ni + l + l2 - 1 - 2 * i;
            if lv == n {
                acc.sum(true, 2, c(l2 - 1), l2 - 1, |i| ni + l2 - 1 - 2 * i, tw);
                acc.sum(true, 2, 1, c(ni - l2), |i| l2 - 1 + 2 * i, |i| rr - i);
                acc.finish(H1FullSimpleProj, l, l2)
            } else if l <= l2 {
                if t < 0 {
                    acc.sum(true, 1, 0, l - 1, low, tw);
                    acc.finish(H1SimpleProjLow, l, l2)
                } else {
                    acc.sum(true, 2, c(t), t, low, tw);
                    acc.sum(true, 1, t + 1, l - 1, low, tw);
                    acc.finish(H1SimpleProjHigh, l, l2)
                }
            } else if t < 0 {
                acc.sum(true, 1, 0, l2 - 1, low, tw);
                acc.sum(true, 2, c(l + l2 - 1), l - 1, wrap, tw);
                acc.finish(H1LongSimpleProjLow, l, l2)
            } else {
                acc.sum(true, 2, c(t), t, low, tw);
                acc.sum(true, 1, t + 1, l2 - 1, low, tw);
                acc.sum(true, 2, c(l + l2 - 1), l - 1, wrap, tw);
                acc.finish(H1LongSimpleProjHigh, l, l2)
            }
        }
        (Label::Pr(l1, r1), Label::Pr(l2, r2)) => {
            let ((l, r), (l2, r2)) = order((l1, r1), (l2, r2));
            let (l, l2, rr) = (l as i64, l2 as i64, (r + r2) as i64);
            let t = l + l2 - (ni + 1);
            let mut acc = Acc::new(n);
            let tw = |i: i64| rr + i;
            let low = |i: i64| l + l2 - 1 - 2 * i;
            let wrap = |i: i64| ni + l + l2 - 1 - 2 * i;
            if t < 0 {
                acc.sum(true, 2, 0, l - 1, low, tw);
                acc.sum(true, 2, l2, l2 + l - 1, wrap, tw);
                acc.sum(true, 4, c(l2 + l - 1), l2 - 1, wrap, tw);
                acc.sum(true, 4, 1, c(ni - l - l2), |i| l + l2 - 1 + 2 * i, |i| rr - i);
                acc.finish(H1ProjProjLow, l, l2)
            } else {
                acc.sum(true, 4, c(t), t, low, tw);
                acc.sum(true, 2, t + 1, l - 1, low, tw);
                acc.sum(true, 2, l2, ni - 1, wrap, tw);
                acc.sum(true, 4, c(l2 + l - 1), l2 - 1, wrap, tw);
                acc.finish(H1ProjProjHigh, l, l2)
            }
        }
        (x, y) => Err(Error::UncoveredCase(format!("{x} ⊗ {y}"))),
    }
}

/// Orders two (length, twist) pairs so the shorter comes first.
fn order(x: (usize, usize), y: (usize, usize)) -> ((usize, usize), (usize, usize)) {
    if x.0 <= y.0 {
        (x, y)
    } else {
        (y, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h1(n: usize, a: &str, b: &str) -> RingElt {
        closed_form_fusion(RingFamily::H1, n, a.parse().unwrap(), b.parse().unwrap()).unwrap()
    }

    #[test]
    fn twist_by_one_dimensional() {
        assert_eq!(h1(3, "V(1,1)", "V(2,0)").to_string(), "V(2,1)");
    }

    #[test]
    fn clebsch_gordan_at_the_boundary() {
        assert_eq!(h1(3, "V(2,0)", "V(2,0)").to_string(), "V(3,0) + V(1,1)");
    }

    #[test]
    fn simple_times_projective() {
        assert_eq!(h1(3, "V(2,0)", "Pr(1,0)").to_string(), "2·V(3,1) + Pr(2,0)");
        assert_eq!(h1(3, "V(3,0)", "Pr(1,0)").to_string(), "2·V(3,0) + 2·Pr(2,2)");
    }

    #[test]
    fn h0_projective_square() {
        let x = closed_form_fusion(RingFamily::H0, 3, Label::P(0, 0), Label::P(0, 0)).unwrap();
        let want: RingElt = (0..3).fold(RingElt::zero(), |acc, t| acc.add(&RingElt::term(Label::P(t, t), 3)));
        assert_eq!(x, want);
    }

    #[test]
    fn dimensions_multiply_for_all_families() {
        for n in 3..=6 {
            for fam in [RingFamily::TensorTaft, RingFamily::H0, RingFamily::H1] {
                let basis = fam.basis(n);
                for &a in &basis {
                    for &b in &basis {
                        let x = closed_form_fusion(fam, n, a, b).unwrap();
                        assert!(x.is_nonnegative(), "{a} ⊗ {b} = {x}");
                        let want = (fam.label_dim(n, a) * fam.label_dim(n, b)) as i64;
                        assert_eq!(x.dim(fam, n), want, "n = {n}: {a} ⊗ {b} = {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn labels_from_the_wrong_family_are_rejected() {
        assert!(closed_form_fusion(RingFamily::H1, 3, Label::S(0, 0), Label::V(1, 0)).is_err());
        assert!(closed_form_fusion(RingFamily::H1, 3, Label::Pr(3, 0), Label::V(1, 0)).is_err());
    }
}
