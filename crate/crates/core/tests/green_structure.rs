use std::time::Instant;

use projring::green::{class_algebra_radical, identity_suite_h1, quiver_check_h0, FusionTable, IdentityGroup, RingFamily};
use projring::{Algebra, AlgebraSpec};

#[test]
fn class_algebra_radicals_at_n3_and_n4() {
    for n in 3..=4 {
        for (fam, q) in [(RingFamily::TensorTaft, n * n + 1), (RingFamily::H0, n * (n + 1))] {
            let r = class_algebra_radical(&FusionTable::closed_form(fam, n).unwrap()).unwrap();
            assert!(r.passed, "{fam} n={n}: {:?}", r.failures);
            assert_eq!(r.quotient_dim, q);
            assert_eq!(r.idempotents.count, q);
            assert_eq!(r.radical_dim + q, 2 * n * n);
        }
    }
}

#[test]
fn quiver_crown_in_every_block() {
    for n in 3..=4 {
        let t0 = Instant::now();
        let alg = Algebra::build(&AlgebraSpec::hpq(n, 0).unwrap()).unwrap();
        for block in 0..n {
            let r = quiver_check_h0(&alg, block).unwrap();
            assert!(r.passed, "n={n} block {block}: {:?}", r.failures);
            assert_eq!(r.arrow_count, 2 * n);
        }
        eprintln!("quiver n={n}: {:?}", t0.elapsed());
    }
}

#[test]
fn identity_groups_all_fire_at_n3_to_n5() {
    let groups = [
        IdentityGroup::PowerLadder,
        IdentityGroup::Recurrences,
        IdentityGroup::Generation,
        IdentityGroup::ClosedExpansions,
        IdentityGroup::ProductRelation,
        IdentityGroup::MonomialBasis,
    ];
    for n in 3..=5 {
        let r = identity_suite_h1(&FusionTable::closed_form(RingFamily::H1, n).unwrap()).unwrap();
        for g in groups {
            assert!(r.group_passed(g), "n={n}: {g:?} {:?}", r.group(g));
        }
        assert_eq!(r.group(IdentityGroup::PowerLadder).len(), n - 2);
    }
}
