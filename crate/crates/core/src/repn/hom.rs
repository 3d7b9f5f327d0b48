use std::collections::{BTreeMap, HashMap};

use super::graded::{to_weight_basis, Grading};
use super::module::Module;
use crate::cyclo::CycloNum;
use crate::error::Result;
use crate::hopf::Algebra;
use crate::linalg::{kernel_from_echelon, rref_rows, zero_vector, Mat, SparseMat, Vector};

/// Equation (g, r, c) is entry (r, c) of ρ_N(g)·F − F·ρ_M(g).
type Equations = HashMap<(usize, usize, usize), BTreeMap<usize, CycloNum>>;

fn add_term(eqs: &mut Equations, key: (usize, usize, usize), unknown: usize, c: &CycloNum) {
    let f = c.field();
    let e = eqs.entry(key).or_default().entry(unknown).or_insert_with(|| f.zero());
    *e += c;
}

/// Adds the entries of ρ_N(g)·F − F·ρ_M(g) as equations tagged with g, where `unknown(r, c)` names the free
/// entries of F and returns None for entries forced to vanish.
fn commutator_equations(
    eqs: &mut Equations,
    g: usize,
    act_m: &SparseMat,
    act_n: &SparseMat,
    cols_for: impl Fn(usize) -> Vec<usize>,
    rows_for: impl Fn(usize) -> Vec<usize>,
    unknown: impl Fn(usize, usize) -> Option<usize>,
) {
    for r in 0..act_n.nrows() {
        for (k, v) in act_n.row(r) {
            for c in cols_for(*k) {
                if let Some(u) = unknown(*k, c) {
                    add_term(eqs, (g, r, c), u, v);
                }
            }
        }
    }
    for k in 0..act_m.nrows() {
        for (c, v) in act_m.row(k) {
            let neg = -v;
            for r in rows_for(k) {
                if let Some(u) = unknown(r, k) {
                    add_term(eqs, (g, r, *c), u, &neg);
                }
            }
        }
    }
}

fn solve(eqs: Equations, unknowns: usize, field: &'static crate::CycloField) -> Vec<Vector> {
    let mut keys: Vec<_> = eqs.keys().copied().collect();
    keys.sort_unstable();
    let mut eqs = eqs;
    let rows: Vec<Vector> = keys
        .into_iter()
        .filter_map(|k| {
            let terms = eqs.remove(&k)?;
            let mut row = zero_vector(field, unknowns);
            let mut nonzero = false;
            for (u, c) in terms {
                nonzero |= !c.is_zero();
                row[u] = c;
            }
            nonzero.then_some(row)
        })
        .collect();
    let e = rref_rows(rows, unknowns);
    kernel_from_echelon(field, &e, unknowns).basis().to_vec()
}

/// Basis of Hom_H(M, N) for modules on weight bases. A homomorphism preserves
/// weights, so only weight-diagonal blocks are unknowns and only a and d give equations.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<Mat>> {
    let f = m.field();
    let gm = Grading::of(m)?;
    let gn = Grading::of(n)?;
    let mut offset = BTreeMap::new();
    let mut total = 0;
    for (w, cm) in gm.classes() {
        let dn = gn.class_dim(*w);
        if dn > 0 {
            offset.insert(*w, total);
            total += dn * cm.len();
        }
    }
    if total == 0 {
        return Ok(Vec::new());
    }
    let unknown = |r: usize, c: usize| {
        let w = gm.weight(c);
        (gn.weight(r) == w).then(|| offset[&w] + gn.local_index(r) * gm.class_dim(w) + gm.local_index(c))
    };
    let mut eqs = Equations::new();
    for g in [0, 3] {
        commutator_equations(
            &mut eqs,
            g,
            m.act(g),
            n.act(g),
            |k| gm.class(gn.weight(k)).to_vec(),
            |k| gn.class(gm.weight(k)).to_vec(),
            unknown,
        );
    }
    let kernel = solve(eqs, total, f);
    Ok(kernel
        .into_iter()
        .map(|x| {
            let mut map = Mat::zeros(f, n.dim(), m.dim());
            for r in 0..n.dim() {
                for &c in gm.class(gn.weight(r)) {
                    if let Some(u) = unknown(r, c) {
                        map.set(r, c, x[u].clone());
                    }
                }
            }
            map
        })
        .collect())
}

/// dim Hom_H(M, N); modules not on a weight basis are rebased first.
pub fn hom_dim(alg: &Algebra, m: &Module, n: &Module) -> Result<usize> {
    let (m, n) = (rebased(alg, m)?, rebased(alg, n)?);
    Ok(hom_basis(&m, &n)?.len())
}

fn rebased(alg: &Algebra, m: &Module) -> Result<Module> {
    if m.is_graded() {
        Ok(m.clone())
    } else {
        Ok(to_weight_basis(alg, m)?.0)
    }
}

/// dim Hom_H(M, N) from the full system F·ρ_M(g) = ρ_N(g)·F over all four generators,
/// with no use of weights. Quadratic in dim M · dim N; meant for cross-checks.
pub fn hom_dim_unstructured(m: &Module, n: &Module) -> Result<usize> {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let total = dm * dn;
    if total == 0 {
        return Ok(0);
    }
    let mut eqs = Equations::new();
    for g in 0..4 {
        commutator_equations(&mut eqs, g, m.act(g), n.act(g), |_| (0..dm).collect(), |_| (0..dn).collect(), |r, c| Some(r * dm + c));
    }
    Ok(solve(eqs, total, f).len())
}

/// Whether F·ρ_M(g) = ρ_N(g)·F for all generators.
pub fn is_homomorphism(m: &Module, n: &Module, map: &Mat) -> Result<bool> {
    for g in 0..4 {
        if map.mul(&m.act(g).to_dense())? != n.act(g).to_dense().mul(map)? {
            return Ok(false);
        }
    }
    Ok(true)
}
