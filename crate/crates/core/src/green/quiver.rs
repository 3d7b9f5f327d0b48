use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{group_idempotents, jacobson_radical, left_ideal_generators, AlgElt, Algebra, FiniteAlgebra};
use crate::linalg::{Subspace, Vector};

#[derive(Clone, Debug, Serialize)]
pub struct QuiverReport {
    pub n: usize,
    pub block: usize,
    pub vertices: usize,
    /// arrows[k][j] = dim ē_k (J/J²) ē_j.
    pub arrows: Vec<Vec<usize>>,
    pub arrow_count: usize,
    pub crown: bool,
    /// λ_j with β_j α_j = λ_j α_{j−1} β_{j−1}, as field elements.
    pub commutation_scalars: Vec<String>,
    /// k with λ_j = q^k, when λ_j is a power of q.
    pub commutation_q_exponents: Vec<Option<usize>>,
    pub commutation_is_q: bool,
    pub alpha_paths_vanish: bool,
    pub beta_paths_vanish: bool,
    /// Paths of length n − 1 are nonzero, so n is the exact vanishing length.
    pub shorter_paths_nonzero: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Gabriel quiver of the block cut by Σ_j e_{i+j,j} in H_n(0,q): arrow counts from the
/// radical layers, and the commutation and path relations on α_j = a ē_j, β_j = d ē_{j+1}.
pub fn quiver_check_h0(alg: &Algebra, block: usize) -> Result<QuiverReport> {
    if !alg.spec().is_h0() {
        return Err(Error::InvalidSpec(format!("quiver check needs H_n(0,q), got {}", alg.spec().name())));
    }
    let n = alg.order();
    let f = alg.field();
    let dim = alg.dim();
    let e = group_idempotents(alg)?;
    let bar: Vec<AlgElt> = (0..n).map(|j| e[((block + j) % n) * n + j].clone()).collect();
    let mut failures = Vec::new();

    let rad = jacobson_radical(alg);
    let gens = left_ideal_generators(alg, &rad);
    let elt = |v: &Vector| AlgElt::from_dense(v);
    let rad_elts: Vec<AlgElt> = rad.basis().iter().map(elt).collect();
    let rad2_elts: Vec<AlgElt> = rad_elts.iter().flat_map(|u| gens.iter().map(move |g| alg.mul(u, g))).collect();

    let sandwich_dim = |k: usize, j: usize, xs: &[AlgElt]| -> usize {
        let vecs = xs.iter().map(|x| alg.mul(&alg.mul(&bar[k], x), &bar[j]).to_dense(f, dim));
        Subspace::from_vectors(f, dim, vecs).dim()
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|k| (0..n).map(move |j| (k, j))).collect();
    let counts: Vec<usize> =
        pairs.par_iter().map(|&(k, j)| sandwich_dim(k, j, &rad_elts) - sandwich_dim(k, j, &rad2_elts)).collect();
    let arrows: Vec<Vec<usize>> = counts.chunks(n).map(|c| c.to_vec()).collect();
    let arrow_count: usize = counts.iter().sum();
    let crown = (0..n).all(|k| (0..n).all(|j| arrows[k][j] == usize::from(k == (j + 1) % n || j == (k + 1) % n)));
    if !crown || arrow_count != 2 * n {
        failures.push(format!("arrow matrix {arrows:?} is not the {}-arrow crown", 2 * n));
    }

    let (a, d) = (alg.generator(0), alg.generator(3));
    let alpha: Vec<AlgElt> = (0..n).map(|j| alg.mul(&a, &bar[j])).collect();
    let beta: Vec<AlgElt> = (0..n).map(|j| alg.mul(&d, &bar[(j + 1) % n])).collect();

    let mut scalars = Vec::new();
    let mut exps = Vec::new();
    let mut is_q = true;
    for j in 0..n {
        let prev = (j + n - 1) % n;
        let lhs = alg.mul(&beta[j], &alpha[j]);
        let rhs = alg.mul(&alpha[prev], &beta[prev]);
        let lambda = rhs.iter().next().and_then(|(u, c)| lhs.coeff(u).map(|l| l * &c.inv().expect("nonzero coefficient")));
        match lambda {
            Some(l) if lhs == rhs.scale(&l) => {
                is_q &= l == f.q();
                exps.push(f.discrete_log(&l));
                scalars.push(l.to_string());
            }
            _ => {
                is_q = false;
                exps.push(None);
                scalars.push("not proportional".into());
                failures.push(format!("β_{j}α_{j} is not a multiple of α_{prev}β_{prev}"));
            }
        }
    }
    if !is_q {
        failures.push(format!("commutation scalars {scalars:?} are not all q"));
    }

    let path = |arrs: &[AlgElt], start: usize, len: usize, step: fn(usize, usize, usize) -> usize| -> AlgElt {
        let mut p = bar[start].clone();
        let mut at = start;
        for _ in 0..len {
            p = alg.mul(&arrs[at], &p);
            at = step(at, 1, n);
        }
        p
    };
    let up = |j: usize, s: usize, n: usize| (j + s) % n;
    let down = |j: usize, s: usize, n: usize| (j + n - s) % n;
    // α_j leaves ē_j towards ē_{j+1}; β_j leaves ē_{j+1} towards ē_j, so the β path from
    // ē_j starts with β_{j−1}.
    let beta_from: Vec<AlgElt> = (0..n).map(|j| beta[(j + n - 1) % n].clone()).collect();
    let alpha_vanish = (0..n).all(|j| path(&alpha, j, n, up).is_zero());
    let beta_vanish = (0..n).all(|j| path(&beta_from, j, n, down).is_zero());
    let shorter = (0..n).all(|j| !path(&alpha, j, n - 1, up).is_zero() && !path(&beta_from, j, n - 1, down).is_zero());
    if !alpha_vanish {
        failures.push(format!("an α path of length {n} is nonzero"));
    }
    if !beta_vanish {
        failures.push(format!("a β path of length {n} is nonzero"));
    }
    if !shorter {
        failures.push(format!("a path of length {} already vanishes", n - 1));
    }

    Ok(QuiverReport {
        n,
        block,
        vertices: n,
        arrows,
        arrow_count,
        crown,
        commutation_scalars: scalars,
        commutation_q_exponents: exps,
        commutation_is_q: is_q,
        alpha_paths_vanish: alpha_vanish,
        beta_paths_vanish: beta_vanish,
        shorter_paths_nonzero: shorter,
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::AlgebraSpec;

    #[test]
    fn triangle_quiver_at_n3() {
        let alg = Algebra::build(&AlgebraSpec::hpq(3, 0).unwrap()).unwrap();
        let r = quiver_check_h0(&alg, 0).unwrap();
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!((r.vertices, r.arrow_count), (3, 6));
        assert_eq!(r.commutation_q_exponents, vec![Some(1); 3]);
    }
}
