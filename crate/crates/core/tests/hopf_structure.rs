use std::borrow::Cow;

use projring::hopf::*;
use projring::{cyclo_field, CycloField};

fn build(spec: AlgebraSpec) -> Algebra {
    Algebra::build(&spec).unwrap()
}

/// Group algebra of Z_n × Z_n, a semisimple fixture.
struct GroupAlgebra {
    field: &'static CycloField,
    n: usize,
}

impl FiniteAlgebra for GroupAlgebra {
    fn field(&self) -> &'static CycloField {
        self.field
    }
    fn dim(&self) -> usize {
        self.n * self.n
    }
    fn unit_index(&self) -> usize {
        0
    }
    fn mul_basis(&self, u: usize, v: usize) -> Cow<'_, AlgElt> {
        let n = self.n;
        let w = ((u / n + v / n) % n) * n + (u % n + v % n) % n;
        Cow::Owned(AlgElt::basis(self.field, w))
    }
    fn basis_label(&self, u: usize) -> String {
        format!("b^{}c^{}", u / self.n, u % self.n)
    }
    fn generator_indices(&self) -> Vec<usize> {
        vec![self.n, 1]
    }
}

#[test]
fn skew_pairing_values() {
    let f = cyclo_field(3).unwrap();
    let one = f.one();
    assert!(skew_pairing_tau(f, &one, (0, 1), (2, 0)).unwrap().is_zero());
    assert!(skew_pairing_tau(f, &one, (0, 0), (0, 0)).unwrap().is_one());
    let expect = &f.q() * &(&f.one() + &f.q());
    assert_eq!(skew_pairing_tau(f, &one, (1, 2), (2, 1)).unwrap(), expect);
    assert!(skew_pairing_tau(f, &one, (3, 0), (0, 0)).is_err());
}

#[test]
fn group_idempotents_are_a_complete_orthogonal_family() {
    for (spec, shift_j) in [(AlgebraSpec::tensor_taft(3).unwrap(), 0), (AlgebraSpec::hpq(3, 0).unwrap(), 1)] {
        let h = build(spec);
        let n = 3;
        let e = group_idempotents(&h).unwrap();
        assert!(check_idempotent_family(&h, &e).passed());
        let a = h.generator(0);
        for i in 0..n {
            for j in 0..n {
                let lhs = h.mul(&a, &e[i * n + j]);
                let rhs = h.mul(&e[((i + 1) % n) * n + (j + shift_j) % n], &a);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn radicals_at_n3() {
    let (_, r) = radical_report(&build(AlgebraSpec::tensor_taft(3).unwrap())).unwrap();
    assert_eq!(r.radical_dim, 81 - 9);
    assert_eq!(r.loewy_length, 5);
    assert_eq!(r.equals_ideal_of_a_d, Some(true));
    assert!(r.quotient_semisimple);

    let (_, r) = radical_report(&build(AlgebraSpec::hpq(3, 0).unwrap())).unwrap();
    assert_eq!(r.quotient_dim, 9);
    assert_eq!(r.loewy_length, 5);
    assert_eq!(r.equals_ideal_of_a_d, Some(true));

    // Simples of the double have dimensions 1..n, each n times: n(1 + 4 + 9).
    let (_, r) = radical_report(&build(AlgebraSpec::hpq(3, 1).unwrap())).unwrap();
    assert_eq!(r.quotient_dim, 3 * (1 + 4 + 9));
    assert!(r.quotient_semisimple);
    assert_eq!(r.equals_ideal_of_a_d, None);
}

#[test]
fn semisimple_fixture_has_loewy_length_one() {
    let g = GroupAlgebra { field: cyclo_field(3).unwrap(), n: 3 };
    let j = jacobson_radical(&g);
    assert_eq!(j.dim(), 0);
    assert_eq!(loewy_length(&g, &j).unwrap(), 1);
    assert!(quotient_is_semisimple(&g, &j));
}

#[test]
fn integrals_and_unimodularity() {
    let r = integrals_and_symmetry(&build(AlgebraSpec::hpq(3, 0).unwrap())).unwrap();
    assert!(r.unimodular && r.s2_inner_by_b && r.s2_inner_by_c);
    assert_eq!((r.left_integral_dim, r.right_integral_dim), (1, 1));
    let r = integrals_and_symmetry(&build(AlgebraSpec::tensor_taft(3).unwrap())).unwrap();
    assert!(!r.unimodular);
    assert_eq!((r.left_integral_dim, r.right_integral_dim), (1, 1));
}

#[test]
fn block_counts_at_n3() {
    let r = center_and_blocks(&build(AlgebraSpec::tensor_taft(3).unwrap())).unwrap();
    assert_eq!(r.block_count, 1);
    let r = center_and_blocks(&build(AlgebraSpec::hpq(3, 0).unwrap())).unwrap();
    assert_eq!(r.block_count, 3);
    let c = r.central_idempotents.unwrap();
    assert!(c.family.passed() && c.central && c.primitive, "{c:?}");
    let r = center_and_blocks(&build(AlgebraSpec::hpq(3, 1).unwrap())).unwrap();
    assert_eq!(r.block_count, 6);
}

#[test]
fn h0_blocks_share_one_table() {
    let r = blocks_isomorphic_h0(&build(AlgebraSpec::hpq(3, 0).unwrap())).unwrap();
    assert_eq!(r.block_dims, vec![27, 27, 27]);
    assert!(r.passed, "{r:?}");
    assert!(blocks_isomorphic_h0(&build(AlgebraSpec::tensor_taft(3).unwrap())).is_err());
}

#[test]
fn radical_of_basic_algebras_is_a_hopf_ideal() {
    use projring::hopf::{hopf_ideal_check, radical_report};
    use projring::Subspace;
    for spec in [AlgebraSpec::tensor_taft(3).unwrap(), AlgebraSpec::hpq(3, 0).unwrap()] {
        let alg = Algebra::build(&spec).unwrap();
        let (j, _) = radical_report(&alg).unwrap();
        assert!(hopf_ideal_check(&alg, &j).passed(), "{spec:?}");
        let everything = Subspace::full(alg.field(), alg.dim());
        assert!(!hopf_ideal_check(&alg, &everything).counit_vanishes);
    }
}
