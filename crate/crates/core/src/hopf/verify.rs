use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{Algebra, FiniteAlgebra, HopfStructure};
use super::elt::{AlgElt, Tensor3Elt};

/// Which basis elements an axiom sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    All,
    Seeded { count: usize, seed: u64 },
}

impl Sampling {
    /// Full enumeration when the basis has at most `count` elements, else a seeded sample.
    pub fn at_least(count: usize, seed: u64, dim: usize) -> Sampling {
        if dim <= count {
            Sampling::All
        } else {
            Sampling::Seeded { count, seed }
        }
    }

    pub fn indices(&self, dim: usize) -> Vec<usize> {
        match *self {
            Sampling::All => (0..dim).collect(),
            Sampling::Seeded { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count).map(|_| rng.gen_range(0..dim)).collect()
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub dim: usize,
    pub basis_elements_checked: usize,
    pub full_enumeration: bool,
    pub coassociativity: bool,
    pub counit: bool,
    pub antipode: bool,
    pub coproduct_respects_relations: bool,
    pub counit_respects_relations: bool,
    pub counit_is_character: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Failure messages for the coalgebra and antipode axioms on one basis element.
pub fn axiom_failures_at<H: HopfStructure>(h: &H, u: usize) -> Vec<String> {
    let f = h.field();
    let mut out = Vec::new();
    let label = h.basis_label(u);
    let delta = h.coproduct_basis(u);

    let mut left = Tensor3Elt::zero();
    let mut right = Tensor3Elt::zero();
    for ((x, y), c) in delta.iter() {
        for ((x1, x2), c1) in h.coproduct_basis(*x).iter() {
            left.add_term((*x1, *x2, *y), &(c * c1));
        }
        for ((y1, y2), c2) in h.coproduct_basis(*y).iter() {
            right.add_term((*x, *y1, *y2), &(c * c2));
        }
    }
    if left != right {
        out.push(format!("coassociativity fails on {label}"));
    }

    let basis_u = AlgElt::basis(f, u);
    let mut eps_left = AlgElt::zero();
    let mut eps_right = AlgElt::zero();
    for ((x, y), c) in delta.iter() {
        eps_left.add_term(*y, &(c * &h.counit_basis(*x)));
        eps_right.add_term(*x, &(c * &h.counit_basis(*y)));
    }
    if eps_left != basis_u || eps_right != basis_u {
        out.push(format!("counit axiom fails on {label}"));
    }

    let target = h.one().scale(&h.counit_basis(u));
    let mut s_left = AlgElt::zero();
    let mut s_right = AlgElt::zero();
    for ((x, y), c) in delta.iter() {
        let ey = AlgElt::basis(f, *y);
        let ex = AlgElt::basis(f, *x);
        s_left.add_scaled(&h.mul(&h.antipode_basis(*x), &ey), c);
        s_right.add_scaled(&h.mul(&ex, &h.antipode_basis(*y)), c);
    }
    if s_left != target || s_right != target {
        out.push(format!("antipode axiom fails on {label}"));
    }
    out
}

/// Checks coassociativity, counit and antipode axioms on the sampled basis elements,
/// that Δ and ε respect the defining relations, and that ε is multiplicative.
pub fn verify_hopf_axioms(alg: &Algebra, sampling: Sampling) -> AxiomReport {
    let dim = alg.dim();
    let idx = sampling.indices(dim);
    let per: Vec<Vec<String>> = idx.par_iter().map(|&u| axiom_failures_at(alg, u)).collect();
    let mut failures: Vec<String> = per.into_iter().flatten().collect();
    let has = |fs: &[String], key: &str| fs.iter().any(|m| m.starts_with(key));
    let coassociativity = !has(&failures, "coassociativity");
    let counit = !has(&failures, "counit axiom");
    let antipode = !has(&failures, "antipode");

    let (bad_delta, bad_eps) = alg.check_maps_respect_relations();
    failures.extend(bad_delta.iter().map(|r| format!("coproduct violates relation {r}")));
    failures.extend(bad_eps.iter().map(|r| format!("counit violates relation {r}")));

    let pairs: Vec<(usize, usize)> = idx.iter().zip(idx.iter().rev()).map(|(&u, &v)| (u, v)).collect();
    let bad_char: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(u, v)| {
            let lhs = alg.counit(&alg.mul_basis(u, v));
            let rhs = &alg.counit_basis(u) * &alg.counit_basis(v);
            (lhs != rhs).then(|| format!("counit not multiplicative on {} * {}", alg.basis_label(u), alg.basis_label(v)))
        })
        .collect();
    let counit_is_character = bad_char.is_empty();
    failures.extend(bad_char);

    AxiomReport {
        algebra: alg.spec().name(),
        dim,
        basis_elements_checked: idx.len(),
        full_enumeration: sampling == Sampling::All,
        coassociativity,
        counit,
        antipode,
        coproduct_respects_relations: bad_delta.is_empty(),
        counit_respects_relations: bad_eps.is_empty(),
        counit_is_character,
        passed: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::AlgebraSpec;

    #[test]
    fn all_three_algebras_pass_at_n3() {
        for spec in [
            AlgebraSpec::tensor_taft(3).unwrap(),
            AlgebraSpec::hpq(3, 0).unwrap(),
            AlgebraSpec::hpq(3, 1).unwrap(),
        ] {
            let alg = Algebra::build(&spec).unwrap();
            let r = verify_hopf_axioms(&alg, Sampling::All);
            assert!(r.passed, "{}: {:?}", r.algebra, r.failures);
            assert_eq!(r.basis_elements_checked, 81);
        }
    }

    #[test]
    fn taft_algebras_pass() {
        for spec in [AlgebraSpec::taft(5).unwrap(), AlgebraSpec::taft_opp(4).unwrap()] {
            let alg = Algebra::build(&spec).unwrap();
            assert!(verify_hopf_axioms(&alg, Sampling::All).passed);
        }
    }

    #[test]
    fn sampling_is_seeded() {
        let s = Sampling::at_least(500, 7, 625);
        assert_eq!(s.indices(625), s.indices(625));
        assert_eq!(Sampling::at_least(500, 7, 256), Sampling::All);
    }
}
