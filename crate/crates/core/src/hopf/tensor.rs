use std::borrow::Cow;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{Algebra, AlgebraSpec, FiniteAlgebra, HopfStructure};
use super::elt::{AlgElt, TensorElt};
use super::verify::axiom_failures_at;
use crate::cyclo::{CycloField, CycloNum};
use crate::error::Result;
use crate::linalg::Mat;

/// A ⊗ B with componentwise product, coproduct, counit and antipode.
/// Basis element (u, v) has index u · dim B + v.
pub struct TensorAlgebra<'a, A: HopfStructure, B: HopfStructure> {
    left: &'a A,
    right: &'a B,
    delta_memo: Vec<OnceLock<TensorElt>>,
}

impl<'a, A: HopfStructure, B: HopfStructure> TensorAlgebra<'a, A, B> {
    pub fn new(left: &'a A, right: &'a B) -> Self {
        let dim = left.dim() * right.dim();
        TensorAlgebra { left, right, delta_memo: (0..dim).map(|_| OnceLock::new()).collect() }
    }

    pub fn index(&self, u: usize, v: usize) -> usize {
        u * self.right.dim() + v
    }

    fn split(&self, w: usize) -> (usize, usize) {
        (w / self.right.dim(), w % self.right.dim())
    }

    fn pair(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        let mut out = AlgElt::zero();
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                out.add_term(self.index(*u, *v), &(cu * cv));
            }
        }
        out
    }
}

impl<A: HopfStructure, B: HopfStructure> FiniteAlgebra for TensorAlgebra<'_, A, B> {
    fn field(&self) -> &'static CycloField {
        self.left.field()
    }

    fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    fn unit_index(&self) -> usize {
        self.index(self.left.unit_index(), self.right.unit_index())
    }

    fn mul_basis(&self, w1: usize, w2: usize) -> Cow<'_, AlgElt> {
        let (u1, v1) = self.split(w1);
        let (u2, v2) = self.split(w2);
        Cow::Owned(self.pair(&self.left.mul_basis(u1, u2), &self.right.mul_basis(v1, v2)))
    }

    fn basis_label(&self, w: usize) -> String {
        let (u, v) = self.split(w);
        format!("{}⊗{}", self.left.basis_label(u), self.right.basis_label(v))
    }
}

impl<A: HopfStructure, B: HopfStructure> HopfStructure for TensorAlgebra<'_, A, B> {
    fn coproduct_basis(&self, w: usize) -> Cow<'_, TensorElt> {
        Cow::Borrowed(self.delta_memo[w].get_or_init(|| {
            let (u, v) = self.split(w);
            let mut out = TensorElt::zero();
            for ((u1, u2), cu) in self.left.coproduct_basis(u).iter() {
                for ((v1, v2), cv) in self.right.coproduct_basis(v).iter() {
                    out.add_term((self.index(*u1, *v1), self.index(*u2, *v2)), &(cu * cv));
                }
            }
            out
        }))
    }

    fn counit_basis(&self, w: usize) -> CycloNum {
        let (u, v) = self.split(w);
        &self.left.counit_basis(u) * &self.right.counit_basis(v)
    }

    fn antipode_basis(&self, w: usize) -> Cow<'_, AlgElt> {
        let (u, v) = self.split(w);
        Cow::Owned(self.pair(&self.left.antipode_basis(u), &self.right.antipode_basis(v)))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorIsoReport {
    pub n: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub target_axioms_hold: bool,
    pub bijective: bool,
    pub products_checked: usize,
    pub multiplicative: bool,
    pub comultiplicative: bool,
    pub counit_preserved: bool,
    pub antipode_preserved: bool,
    pub first_failure: Option<String>,
    pub passed: bool,
}

/// Verifies that a ↦ 1⊗x₁, b ↦ 1⊗g₁, c ↦ g⊗1, d ↦ x⊗1 extends to an isomorphism of
/// Hopf algebras from the four-generator presentation onto A_n(q) ⊗ A_n(q^{-1}).
pub fn tensor_iso_check(n: usize) -> Result<TensorIsoReport> {
    let source = Algebra::build(&AlgebraSpec::tensor_taft(n)?)?;
    let a = Algebra::build(&AlgebraSpec::taft(n)?)?;
    let b = Algebra::build(&AlgebraSpec::taft_opp(n)?)?;
    let target = TensorAlgebra::new(&a, &b);
    let f = source.field();
    let dim = source.dim();

    let (g, x) = (a.gen_index(0), a.gen_index(1));
    let (g1, x1) = (b.gen_index(0), b.gen_index(1));
    let gen_images = [target.index(0, x1), target.index(0, g1), target.index(g, 0), target.index(x, 0)];

    // Image of each PBW monomial, built as image(leftmost generator) · image(rest).
    let mut images: Vec<AlgElt> = Vec::with_capacity(dim);
    for u in 0..dim {
        let mut e = source.exps(u);
        let img = match e.iter().position(|&k| k > 0) {
            None => target.one(),
            Some(gen) => {
                e[gen] -= 1;
                let rest = &images[source.index(&e)];
                target.mul(&AlgElt::basis(f, gen_images[gen]), rest)
            }
        };
        images.push(img);
    }
    let phi = |x: &AlgElt| x.map_linear(|u| images[u].clone());

    let mut first_failure: Option<String> = None;
    let mut note = |msg: String| {
        if first_failure.is_none() {
            first_failure = Some(msg);
        }
    };

    let target_bad: Vec<String> =
        (0..target.dim()).into_par_iter().flat_map(|w| axiom_failures_at(&target, w)).collect();
    if let Some(m) = target_bad.first() {
        note(format!("tensor product: {m}"));
    }

    let columns: Vec<Vec<CycloNum>> = images.iter().map(|e| e.to_dense(f, target.dim())).collect();
    let bijective = dim == target.dim() && Mat::from_columns(f, &columns, target.dim())?.rank() == dim;
    if !bijective {
        note("generator assignment is not bijective on the PBW basis".into());
    }

    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|u| (0..dim).map(move |v| (u, v))).collect();
    let bad_mul = pairs.par_iter().find_first(|&&(u, v)| {
        phi(&source.mul_basis(u, v)) != target.mul(&images[u], &images[v])
    });
    if let Some(&(u, v)) = bad_mul {
        note(format!("product {} * {} not preserved", source.basis_label(u), source.basis_label(v)));
    }

    let bad_delta = (0..dim).into_par_iter().find_first(|&u| {
        let lhs = target.coproduct(&images[u]);
        let mut rhs = TensorElt::zero();
        for ((x, y), c) in source.coproduct_basis(u).iter() {
            for (ix, cx) in images[*x].iter() {
                for (iy, cy) in images[*y].iter() {
                    rhs.add_term((*ix, *iy), &(&(c * cx) * cy));
                }
            }
        }
        lhs != rhs
    });
    if let Some(u) = bad_delta {
        note(format!("coproduct of {} not preserved", source.basis_label(u)));
    }
    let bad_eps = (0..dim).find(|&u| target.counit(&images[u]) != source.counit_basis(u));
    if let Some(u) = bad_eps {
        note(format!("counit of {} not preserved", source.basis_label(u)));
    }
    let bad_s = (0..dim).into_par_iter().find_first(|&u| target.antipode(&images[u]) != phi(&source.antipode_basis(u)));
    if let Some(u) = bad_s {
        note(format!("antipode of {} not preserved", source.basis_label(u)));
    }

    Ok(TensorIsoReport {
        n,
        dim_source: dim,
        dim_target: target.dim(),
        target_axioms_hold: target_bad.is_empty(),
        bijective,
        products_checked: pairs.len(),
        multiplicative: bad_mul.is_none(),
        comultiplicative: bad_delta.is_none(),
        counit_preserved: bad_eps.is_none(),
        antipode_preserved: bad_s.is_none(),
        passed: first_failure.is_none(),
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_of_ba_is_q_times_image_of_ab() {
        let a = Algebra::build(&AlgebraSpec::taft(3).unwrap()).unwrap();
        let b = Algebra::build(&AlgebraSpec::taft_opp(3).unwrap()).unwrap();
        let t = TensorAlgebra::new(&a, &b);
        let f = t.field();
        let ia = AlgElt::basis(f, t.index(0, b.gen_index(1)));
        let ib = AlgElt::basis(f, t.index(0, b.gen_index(0)));
        assert_eq!(t.mul(&ib, &ia), t.mul(&ia, &ib).scale(&f.q()));
    }

    #[test]
    fn isomorphism_holds_for_n3() {
        let r = tensor_iso_check(3).unwrap();
        assert_eq!((r.dim_source, r.dim_target), (81, 81));
        assert_eq!(r.products_checked, 81 * 81);
        assert!(r.passed, "{:?}", r.first_failure);
    }
}
