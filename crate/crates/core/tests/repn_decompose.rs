use std::collections::BTreeMap;
use std::sync::Arc;

use projring::repn::*;
use projring::{Algebra, AlgebraSpec};

fn catalog(spec: AlgebraSpec) -> Catalog {
    Catalog::build(Arc::new(Algebra::build(&spec).unwrap()), 0).unwrap()
}

#[test]
fn tensor_taft_p00_squared_is_every_projective() {
    let cat = catalog(AlgebraSpec::tensor_taft(3).unwrap());
    let p = cat.module_for(Label::P(0, 0)).unwrap();
    let d = cat.decompose_tensor(p, p).unwrap();
    assert!(d.simple_mults.is_empty());
    let expected: BTreeMap<Label, usize> = (0..3).flat_map(|r| (0..3).map(move |t| (Label::P(r, t), 1))).collect();
    assert_eq!(d.proj_mults, expected);
}

#[test]
fn h0_p00_squared() {
    let cat = catalog(AlgebraSpec::hpq(3, 0).unwrap());
    let p = cat.module_for(Label::P(0, 0)).unwrap();
    let d = cat.decompose_tensor(p, p).unwrap();
    let expected: BTreeMap<Label, usize> = (0..3).map(|t| (Label::P(t, t), 3)).collect();
    assert!(d.simple_mults.is_empty());
    assert_eq!(d.proj_mults, expected);
}

#[test]
fn h1_catalog_at_n3() {
    let cat = catalog(AlgebraSpec::hpq(3, 1).unwrap());
    let mut dims: Vec<usize> = cat.simples().iter().map(Module::dim).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 1, 1, 2, 2, 2, 3, 3, 3]);
    for (s, p) in cat.simples().iter().zip(cat.pims()) {
        let Some(Label::V(l, _)) = s.label() else { panic!() };
        assert_eq!(p.dim(), if l == 3 { 3 } else { 6 }, "{:?}", s.label());
    }
    let total: usize = cat.simples().iter().zip(cat.pims()).map(|(s, p)| s.dim() * p.dim()).sum();
    assert_eq!(total, 81);
    let c = cat.calibration().unwrap();
    assert!(c.one_dim_closed_form_agrees);

    let v20 = cat.module_for(Label::V(2, 0)).unwrap();
    let v30 = cat.module_for(Label::V(3, 0)).unwrap();
    let d = cat.decompose_tensor(v20, v30).unwrap();
    assert!(d.simple_mults.is_empty());
    assert_eq!(d.proj_mults, BTreeMap::from([(Label::Pr(2, 1), 1)]));

    let d = cat.decompose_tensor(v20, v20).unwrap();
    assert_eq!(d.simple_mults, BTreeMap::from([(Label::V(3, 0), 1), (Label::V(1, 1), 1)]));
}

#[test]
fn zero_module_decomposes_to_nothing() {
    let cat = catalog(AlgebraSpec::tensor_taft(3).unwrap());
    let z = Module::zero(cat.alg()).unwrap();
    assert!(cat.decompose(&z).unwrap().is_empty());
}
