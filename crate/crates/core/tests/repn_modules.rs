use std::sync::Arc;

use projring::hopf::{radical_report, FiniteAlgebra};
use projring::repn::*;
use projring::{Algebra, AlgebraSpec};

fn alg(spec: AlgebraSpec) -> Arc<Algebra> {
    Arc::new(Algebra::build(&spec).unwrap())
}

#[test]
fn simple_scalars_and_homs() {
    let h = alg(AlgebraSpec::tensor_taft(3).unwrap());
    let f = h.field();
    let s = simple_s(&h, 1, 2).unwrap();
    assert_eq!(s.act(1).get(0, 0), f.q());
    assert_eq!(s.act(2).get(0, 0), f.q_pow(2));
    assert!(s.act(0).is_zero() && s.act(3).is_zero());
    let triv = simple_s(&h, 0, 0).unwrap();
    for g in 0..4 {
        assert_eq!(triv.act(g).get(0, 0), *h.gen_counit(g));
    }
    assert_eq!(hom_dim(&h, &s, &s).unwrap(), 1);
    assert_eq!(hom_dim(&h, &triv, &simple_s(&h, 1, 0).unwrap()).unwrap(), 0);
}

#[test]
fn projective_dims_and_tops() {
    for spec in [AlgebraSpec::tensor_taft(3).unwrap(), AlgebraSpec::hpq(3, 0).unwrap()] {
        let h = alg(spec);
        let p = projective_p(&h, 1, 2).unwrap();
        assert_eq!(p.dim(), 9);
        let simples: Vec<Module> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| simple_s(&h, i, j).unwrap()).collect();
        let (_, top) = radical_by_homs(&simples, &p).unwrap();
        let expected: Vec<usize> = (0..9).map(|k| usize::from(k == 5)).collect();
        assert_eq!(top, expected);
    }
}

#[test]
fn h0_d_action_carries_q_power() {
    // d·(a^k d^l e) = q^k a^k d^{l+1} e, reading the basis index as k·n + l.
    let h = alg(AlgebraSpec::hpq(3, 0).unwrap());
    let f = h.field();
    let p = projective_p(&h, 0, 0).unwrap();
    for k in 0..3 {
        for l in 0..2 {
            let col = k * 3 + l;
            assert_eq!(p.act(3).get(k * 3 + l + 1, col), f.q_pow(k as i64), "k={k} l={l}");
            assert_eq!(p.act(3).row(k * 3 + l + 1).len(), 1);
        }
    }
}

#[test]
fn tensor_unit_and_dims() {
    let h = alg(AlgebraSpec::tensor_taft(3).unwrap());
    let f = h.field();
    let triv = simple_s(&h, 0, 0).unwrap();
    let p = projective_p(&h, 0, 1).unwrap();
    let t = tensor_module(&h, &triv, &p).unwrap();
    assert_eq!(t.acts(), p.acts());
    let s = tensor_module(&h, &simple_s(&h, 1, 0).unwrap(), &simple_s(&h, 0, 1).unwrap()).unwrap();
    assert_eq!((s.act(1).get(0, 0), s.act(2).get(0, 0)), (f.q(), f.q()));
    assert_eq!(tensor_module(&h, &p, &p).unwrap().dim(), 81);
    let z = Module::zero(&h).unwrap();
    assert_eq!(tensor_module(&h, &z, &p).unwrap().dim(), 0);
}

#[test]
fn hom_routes_agree() {
    let h = alg(AlgebraSpec::tensor_taft(3).unwrap());
    let p = projective_p(&h, 0, 0).unwrap();
    // dim Hom(P(S), M) = [M : S], and S(0,0) occurs once in P(0,0).
    assert_eq!(hom_dim(&h, &p, &p).unwrap(), 1);
    assert_eq!(hom_dim_unstructured(&p, &p).unwrap(), 1);
    let total: usize = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| hom_dim(&h, &projective_p(&h, i, j).unwrap(), &p).unwrap())
        .sum();
    assert_eq!(total, 9);
    for m in hom_basis(&p, &p).unwrap() {
        assert!(is_homomorphism(&p, &p, &m).unwrap());
    }
    let q = projective_p(&h, 1, 1).unwrap();
    assert_eq!(hom_dim(&h, &p, &q).unwrap(), hom_dim_unstructured(&p, &q).unwrap());
}

#[test]
fn regular_weight_spaces() {
    let h = alg(AlgebraSpec::tensor_taft(3).unwrap());
    let r = regular_representation(&h).unwrap();
    let parts = weight_decomposition(&r).unwrap();
    assert_eq!(parts.len(), 9);
    for (w, s) in &parts {
        assert_eq!(s.dim(), 9);
        assert_eq!(*s, weight_space_by_kernel(&r, *w).unwrap());
    }
    // a raises the b-weight by one and fixes the c-weight.
    for ((i, j), s) in &parts {
        let target = &parts[&((i + 1) % 3, *j)];
        for v in s.basis() {
            assert!(target.contains(&r.act(0).apply(v)));
        }
    }
}

#[test]
fn filtration_of_p00_is_a_diamond() {
    let h = alg(AlgebraSpec::tensor_taft(3).unwrap());
    let cat = Catalog::build(h.clone(), 0).unwrap();
    let p = projective_p(&h, 0, 0).unwrap();
    let fl = cat.radical_filtration(&p).unwrap();
    assert_eq!(fl.layer_dims, vec![1, 2, 3, 2, 1]);
    assert_eq!(fl.composition, vec![1; 9]);
    let (_, rep) = radical_report(&h).unwrap();
    assert_eq!(fl.loewy_length(), rep.loewy_length);
}

#[test]
fn h0_cartan_rows() {
    let h = alg(AlgebraSpec::hpq(3, 0).unwrap());
    let cat = Catalog::build(h, 0).unwrap();
    let c = cat.cartan();
    let p00 = c.labels.iter().position(|l| *l == Label::S(0, 0)).unwrap();
    for (s, l) in c.labels.iter().enumerate() {
        let Label::S(i, j) = *l else { panic!() };
        assert_eq!(c.entries[p00][s], if i == j { 3 } else { 0 }, "{l}");
    }
}

#[test]
fn ideal_and_hom_radicals_agree() {
    let h = alg(AlgebraSpec::hpq(3, 0).unwrap());
    let simples: Vec<Module> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| simple_s(&h, i, j).unwrap()).collect();
    let p = projective_p(&h, 2, 1).unwrap();
    let pp = tensor_module(&h, &p, &simple_s(&h, 1, 1).unwrap()).unwrap();
    for m in [p, pp] {
        let by_ideal = radical_via_ideal(&h, &m, &[h.generator(0), h.generator(3)]).unwrap();
        let (by_homs, _) = radical_by_homs(&simples, &m).unwrap();
        assert_eq!(by_ideal, by_homs);
    }
}

#[test]
fn search_recovers_basic_simples() {
    let h = alg(AlgebraSpec::tensor_taft(3).unwrap());
    let found = search_simples(&h).unwrap();
    assert_eq!(found.simples.len(), 9);
    for (s, w) in found.simples.iter().zip(&found.highest) {
        assert_eq!(s.dim(), 1);
        assert_eq!(hom_dim(&h, s, &simple_s(&h, w.0, w.1).unwrap()).unwrap(), 1);
    }
}
