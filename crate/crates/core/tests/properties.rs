use num_bigint::BigInt;
use proptest::prelude::*;

use projring::green::{int_determinant, FusionTable, RingElt, RingFamily};
use projring::{cyclo_field, CycloNum, Mat};

fn elt(n: usize, coeffs: &[i64]) -> CycloNum {
    let f = cyclo_field(n).unwrap();
    coeffs.iter().enumerate().fold(f.zero(), |acc, (k, &c)| &acc + &f.q_pow(k as i64).scale_int(c))
}

fn cyclo_triple() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (3usize..=12).prop_flat_map(|n| {
        let v = || prop::collection::vec(-6i64..=6, n);
        (Just(n), v(), v(), v())
    })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

fn to_mat(n: usize, rows: &[Vec<i64>]) -> Mat {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Mat::from_ints(cyclo_field(n).unwrap(), &refs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms((n, a, b, c) in cyclo_triple()) {
        let (x, y, z) = (elt(n, &a), elt(n, &b), elt(n, &c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn display_then_parse_round_trips((n, a, _, _) in cyclo_triple()) {
        let x = elt(n, &a);
        let f = cyclo_field(n).unwrap();
        prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn rank_plus_nullity_is_column_count(n in 3usize..=6, m in (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let a = to_mat(n, &m);
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.dim(), a.ncols());
        for v in kernel.basis() {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(CycloNum::is_zero));
        }
    }

    #[test]
    fn kronecker_trace_is_product(a in int_matrix(3, 3), b in int_matrix(2, 2), n in 3usize..=5) {
        let (x, y) = (to_mat(n, &a), to_mat(n, &b));
        prop_assert_eq!(x.kronecker(&y).trace().unwrap(), &x.trace().unwrap() * &y.trace().unwrap());
    }

    #[test]
    fn integer_determinant_is_multiplicative(a in int_matrix(4, 4), b in int_matrix(4, 4)) {
        let ab: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect();
        prop_assert_eq!(int_determinant(&ab), int_determinant(&a) * int_determinant(&b));
    }

    #[test]
    fn integer_determinant_matches_field_elimination(a in int_matrix(4, 4)) {
        let singular = to_mat(3, &a).rank() < 4;
        prop_assert_eq!(int_determinant(&a) == BigInt::from(0), singular);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Closed-form tables are commutative rings with unit, graded by dimension, on sampled triples.
    #[test]
    fn closed_form_tables_are_rings(fam in prop::sample::select(vec![RingFamily::TensorTaft, RingFamily::H0, RingFamily::H1]),
                                    n in 3usize..=6, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(),
                                    k in any::<prop::sample::Index>()) {
        let t = FusionTable::closed_form(fam, n).unwrap();
        let basis = t.basis();
        let (a, b, c) = (basis[i.index(basis.len())], basis[j.index(basis.len())], basis[k.index(basis.len())]);
        let ab = t.get(a, b).unwrap();
        prop_assert_eq!(ab, t.get(b, a).unwrap());
        prop_assert_eq!(ab.dim(fam, n), (fam.label_dim(n, a) * fam.label_dim(n, b)) as i64);
        let c1 = RingElt::from_label(c);
        let left = t.mul(ab, &c1).unwrap();
        let right = t.mul(&RingElt::from_label(a), t.get(b, c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(t.mul(&t.unit(), &c1).unwrap(), c1);
    }
}
