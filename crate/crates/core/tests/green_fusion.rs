use std::sync::Arc;
use std::time::Instant;

use projring::green::{crosscheck, FusionRule, FusionTable, RingElt, RingFamily};
use projring::repn::{Catalog, Label};
use projring::Algebra;

fn tables(fam: RingFamily, n: usize) -> (FusionTable, FusionTable) {
    let t0 = Instant::now();
    let alg = Arc::new(Algebra::build(&fam.spec(n).unwrap()).unwrap());
    let cat = Catalog::build(alg, 0).unwrap();
    let computed = FusionTable::computed(&cat).unwrap();
    eprintln!("{fam} n={n}: computed table in {:?}", t0.elapsed());
    (FusionTable::closed_form(fam, n).unwrap(), computed)
}

fn assert_agree(fam: RingFamily, n: usize) -> FusionTable {
    let (closed, computed) = tables(fam, n);
    let r = crosscheck(&closed, &computed);
    assert!(r.passed, "{fam} n={n}: {} mismatches, first {:?}", r.mismatches.len(), r.mismatches.first());
    assert_eq!(r.entries_compared, closed.basis().len().pow(2));
    closed
}

#[test]
fn basic_families_agree_at_n3() {
    assert_agree(RingFamily::TensorTaft, 3);
    let t = assert_agree(RingFamily::H0, 3);
    let want = (0..3).fold(RingElt::zero(), |acc, i| acc.add(&RingElt::term(Label::P(i, i), 3)));
    assert_eq!(t.get(Label::P(0, 0), Label::P(0, 0)).unwrap(), &want);
}

#[test]
fn nonbasic_family_agrees_at_n3() {
    let t = assert_agree(RingFamily::H1, 3);
    assert_eq!(t.basis().len(), 15);
}

#[test]
fn nonbasic_family_agrees_at_n4_and_every_rule_fires() {
    let t = assert_agree(RingFamily::H1, 4);
    for rule in FusionRule::H1_RULES {
        assert!(t.rule_census().get(&rule).copied().unwrap_or(0) > 0, "{rule:?} never fired");
    }
}

#[test]
fn basic_families_agree_at_n4() {
    assert_agree(RingFamily::TensorTaft, 4);
    assert_agree(RingFamily::H0, 4);
}

#[test]
fn presentations_hold() {
    use projring::green::verify_presentation;
    for (fam, ns) in [(RingFamily::TensorTaft, 3..=4), (RingFamily::H0, 3..=4), (RingFamily::H1, 3..=5)] {
        for n in ns {
            let t = FusionTable::closed_form(fam, n).unwrap();
            let r = verify_presentation(&t).unwrap();
            assert!(r.passed, "{fam} n={n}: {:?}", r.failures);
            assert_eq!(r.basis_size, r.ring_rank);
        }
    }
}
