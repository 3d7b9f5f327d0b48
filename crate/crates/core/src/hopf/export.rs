use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{Algebra, FiniteAlgebra};

/// Sparse product table of the PBW basis; coefficients in the cyclotomic text format.
#[derive(Clone, Debug, Serialize)]
pub struct StructureConstants {
    pub family: String,
    pub n: usize,
    pub p: Option<String>,
    pub generators: String,
    pub basis: Vec<Vec<u8>>,
    /// (u, v, [(w, coefficient of w in u·v)]) for every pair with u·v ≠ 0.
    pub products: Vec<(usize, usize, Vec<(usize, String)>)>,
}

pub fn structure_constants(alg: &Algebra) -> StructureConstants {
    let dim = alg.dim();
    let spec = alg.spec();
    let products = (0..dim)
        .into_par_iter()
        .flat_map_iter(|u| {
            (0..dim).filter_map(move |v| {
                let p = alg.mul_basis(u, v);
                (!p.is_zero()).then(|| (u, v, p.iter().map(|(w, c)| (*w, c.to_string())).collect()))
            })
        })
        .collect();
    StructureConstants {
        family: spec.family.to_string(),
        n: spec.n,
        p: spec.p.as_ref().map(|p| p.to_string()),
        generators: alg.generator_names().iter().collect(),
        basis: (0..dim).map(|u| alg.exps(u)).collect(),
        products,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::AlgebraSpec;

    #[test]
    fn taft_table_lists_every_nonzero_product() {
        let alg = Algebra::build(&AlgebraSpec::taft(3).unwrap()).unwrap();
        let sc = structure_constants(&alg);
        assert_eq!(sc.basis.len(), 9);
        // g^i x^j · g^k x^l vanishes iff j + l ≥ 3.
        let zero_pairs = (0..9).flat_map(|u| (0..9).map(move |v| (u, v))).filter(|(u, v)| u % 3 + v % 3 >= 3).count();
        assert_eq!(sc.products.len(), 81 - zero_pairs);
        let json = serde_json::to_string(&sc).unwrap();
        assert!(json.contains("\"family\":\"taft\""));
    }
}
