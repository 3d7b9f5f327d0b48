use std::borrow::Cow;

use serde::Serialize;

use super::ring::RingFamily;
use super::table::FusionTable;
use crate::cyclo::{cyclo_field, CycloField};
use crate::error::{Error, Result};
use crate::hopf::{ideal_generated, jacobson_radical, AlgElt, FiniteAlgebra};
use crate::linalg::{Subspace, Vector};
use crate::repn::Label;

/// R_p = ℚ(ζ_n) ⊗ r_p as an algebra on the basis classes.
pub struct ClassAlgebra {
    field: &'static CycloField,
    basis: Vec<Label>,
    unit: usize,
    products: Vec<Vec<AlgElt>>,
}

impl ClassAlgebra {
    pub fn new(table: &FusionTable) -> Result<ClassAlgebra> {
        let field = cyclo_field(table.n())?;
        let basis = table.basis().to_vec();
        let pos = |l: Label| basis.iter().position(|&b| b == l).expect("table basis");
        let mut products = Vec::with_capacity(basis.len());
        for &a in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for &b in &basis {
                let mut e = AlgElt::zero();
                for (l, c) in table.get(a, b)?.iter() {
                    e.add_term(pos(l), &field.from_int(c));
                }
                row.push(e);
            }
            products.push(row);
        }
        let unit = pos(table.family().unit());
        Ok(ClassAlgebra { field, basis, unit, products })
    }

    pub fn class(&self, l: Label) -> Result<AlgElt> {
        let i = self.basis.iter().position(|&b| b == l).ok_or_else(|| Error::InvalidLabel(l.to_string()))?;
        Ok(AlgElt::basis(self.field, i))
    }

    pub fn pow(&self, x: &AlgElt, k: usize) -> AlgElt {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    fn dense(&self, x: &AlgElt) -> Vector {
        x.to_dense(self.field, self.dim())
    }

    /// The ideal x · R_p.
    fn principal(&self, x: &AlgElt) -> Subspace {
        let vecs: Vec<Vector> = (0..self.dim()).map(|u| self.dense(&self.mul(x, &AlgElt::basis(self.field, u)))).collect();
        Subspace::from_vectors(self.field, self.dim(), vecs)
    }
}

impl FiniteAlgebra for ClassAlgebra {
    fn field(&self) -> &'static CycloField {
        self.field
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn unit_index(&self) -> usize {
        self.unit
    }

    fn mul_basis(&self, u: usize, v: usize) -> Cow<'_, AlgElt> {
        Cow::Borrowed(&self.products[u][v])
    }

    fn basis_label(&self, u: usize) -> String {
        self.basis[u].to_string()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentCensus {
    pub count: usize,
    /// e² ≡ e modulo the radical for each member.
    pub idempotent: bool,
    /// e e' ≡ 0 modulo the radical for distinct members.
    pub orthogonal: bool,
    /// Σ e ≡ 1 modulo the radical.
    pub complete: bool,
    /// Each e · R_p is one-dimensional modulo the radical.
    pub primitive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRadicalReport {
    pub family: RingFamily,
    pub n: usize,
    pub dim: usize,
    pub radical_dim: usize,
    pub generators: Vec<String>,
    pub generators_square_to_zero: bool,
    pub generated_ideal_dim: usize,
    pub radical_equals_generated_ideal: bool,
    pub quotient_dim: usize,
    pub expected_quotient_dim: usize,
    pub idempotents: IdempotentCensus,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Radical of R_p for the basic families, compared with the ideal generated by
/// (1 − x)z (and (1 − y)z for the tensor family), plus the split idempotent census.
pub fn class_algebra_radical(table: &FusionTable) -> Result<ClassRadicalReport> {
    let family = table.family();
    let n = table.n();
    let (x_label, expected) = match family {
        RingFamily::TensorTaft => (Label::S(1, 0), n * n + 1),
        RingFamily::H0 => (Label::S(1, 1), n * (n + 1)),
        RingFamily::H1 => return Err(Error::InvalidSpec("class algebra radical is tabulated for the basic families".into())),
    };
    let r = ClassAlgebra::new(table)?;
    let f = r.field();
    let (x, y, z) = (r.class(x_label)?, r.class(Label::S(0, 1))?, r.class(Label::P(0, 0))?);
    let one = r.one();
    let mut gens = vec![("(1 - x)z", r.mul(&one.sub(&x), &z))];
    if family == RingFamily::TensorTaft {
        gens.push(("(1 - y)z", r.mul(&one.sub(&y), &z)));
    }
    let mut failures = Vec::new();

    let rad = jacobson_radical(&r);
    let gen_elts: Vec<AlgElt> = gens.iter().map(|(_, g)| g.clone()).collect();
    let ideal = ideal_generated(&r, &gen_elts);
    let equal = ideal.dim() == rad.dim() && ideal.is_subspace_of(&rad);
    if !equal {
        failures.push(format!("radical has dimension {}, generated ideal {}", rad.dim(), ideal.dim()));
    }
    let squares_zero = gen_elts.iter().all(|g| r.mul(g, g).is_zero());
    if !squares_zero {
        failures.push("a radical generator does not square to zero".into());
    }
    let quotient_dim = r.dim() - rad.dim();
    if quotient_dim != expected {
        failures.push(format!("quotient dimension {quotient_dim}, expected {expected}"));
    }

    // Character sums n^{-1} Σ_i q^{ki} u^i.
    let n_inv = f.from_int(n as i64).inv()?;
    let avg = |u: &AlgElt, k: usize| -> AlgElt {
        let mut out = AlgElt::zero();
        for i in 0..n {
            out.add_scaled(&r.pow(u, i), &(&f.q_pow((k * i) as i64) * &n_inv));
        }
        out
    };
    let z_norm = z.scale(&(&n_inv * &n_inv));
    let mut family_elts: Vec<AlgElt> = Vec::new();
    let fx: Vec<AlgElt> = (0..n).map(|k| avg(&x, k)).collect();
    let gy: Vec<AlgElt> = (0..n).map(|k| avg(&y, k)).collect();
    match family {
        RingFamily::TensorTaft => {
            for k in 1..n {
                for l in 0..n {
                    family_elts.push(r.mul(&fx[k], &gy[l]));
                }
            }
            for k in 1..n {
                family_elts.push(r.mul(&fx[0], &gy[k]));
            }
            family_elts.push(r.mul(&fx[0], &gy[0]).sub(&z_norm));
            family_elts.push(z_norm.clone());
        }
        _ => {
            for k in 1..n {
                for l in 0..n {
                    family_elts.push(r.mul(&fx[k], &gy[l]));
                }
            }
            for l in 0..n {
                family_elts.push(r.mul(&fx[0].sub(&z_norm), &gy[l]));
                family_elts.push(r.mul(&z_norm, &gy[l]));
            }
        }
    }
    let idempotents = census(&r, &rad, &family_elts);
    if !(idempotents.idempotent && idempotents.orthogonal && idempotents.complete && idempotents.primitive) {
        failures.push(format!("idempotent census fails: {idempotents:?}"));
    }
    if idempotents.count != expected {
        failures.push(format!("{} idempotents for a quotient of dimension {expected}", idempotents.count));
    }

    Ok(ClassRadicalReport {
        family,
        n,
        dim: r.dim(),
        radical_dim: rad.dim(),
        generators: gens.iter().map(|(s, _)| s.to_string()).collect(),
        generators_square_to_zero: squares_zero,
        generated_ideal_dim: ideal.dim(),
        radical_equals_generated_ideal: equal,
        quotient_dim,
        expected_quotient_dim: expected,
        idempotents,
        passed: failures.is_empty(),
        failures,
    })
}

fn census(r: &ClassAlgebra, rad: &Subspace, es: &[AlgElt]) -> IdempotentCensus {
    let zero_mod = |x: &AlgElt| rad.contains(&r.dense(x));
    let mut idempotent = true;
    let mut orthogonal = true;
    for (i, a) in es.iter().enumerate() {
        idempotent &= zero_mod(&r.mul(a, a).sub(a));
        for b in &es[i + 1..] {
            orthogonal &= zero_mod(&r.mul(a, b));
        }
    }
    let sum = es.iter().fold(AlgElt::zero(), |acc, e| acc.add(e));
    let complete = zero_mod(&sum.sub(&r.one()));
    let primitive = es.iter().all(|e| r.principal(e).sum(rad).dim() == rad.dim() + 1);
    IdempotentCensus { count: es.len(), idempotent, orthogonal, complete, primitive }
}

impl std::fmt::Debug for ClassAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ClassAlgebra(dim {})", self.basis.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_dims_at_n3() {
        let t = FusionTable::closed_form(RingFamily::TensorTaft, 3).unwrap();
        let r = class_algebra_radical(&t).unwrap();
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!((r.quotient_dim, r.idempotents.count), (10, 10));
        let t = FusionTable::closed_form(RingFamily::H0, 3).unwrap();
        let r = class_algebra_radical(&t).unwrap();
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!(r.quotient_dim, 12);
        assert!(r.generators_square_to_zero);
    }
}
