use rayon::prelude::*;
use serde::Serialize;

use super::graded::{spin, submodule, to_weight_basis, GradedSub, Grading};
use super::hom::hom_basis;
use super::module::Module;
use crate::error::{Error, Result};
use crate::hopf::{AlgElt, Algebra};
use crate::linalg::{zero_vector, Mat, Subspace, Vector};

/// Radical layers of a module, counted against a fixed list of simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filtration {
    /// layers[k][s] = multiplicity of simple s in rad^k M / rad^{k+1} M.
    pub layers: Vec<Vec<usize>>,
    pub layer_dims: Vec<usize>,
    /// Composition multiplicities: the column sums of `layers`.
    pub composition: Vec<usize>,
}

impl Filtration {
    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }

    pub fn top(&self) -> Option<&[usize]> {
        self.layers.first().map(Vec::as_slice)
    }
}

/// rad M as the common kernel of all maps M → S over the given simples, plus the
/// top multiplicities dim Hom(M, S). `m` must be on a weight basis. Fails if the
/// top is not accounted for by the simples, which means the list is incomplete.
pub fn radical_by_homs(simples: &[Module], m: &Module) -> Result<(GradedSub, Vec<usize>)> {
    let f = m.field();
    let gm = Grading::of(m)?;
    let homs: Vec<Vec<Mat>> = simples.par_iter().map(|s| hom_basis(m, s)).collect::<Result<_>>()?;
    let mut parts = std::collections::BTreeMap::new();
    for (w, class) in gm.classes() {
        let mut rows: Vec<Vector> = Vec::new();
        for (s, maps) in simples.iter().zip(&homs) {
            let gs = Grading::of(s)?;
            for map in maps {
                for &r in gs.class(*w) {
                    rows.push(class.iter().map(|&c| map.get(r, c).clone()).collect());
                }
            }
        }
        let k = class.len();
        let rad = if rows.is_empty() { Subspace::full(f, k) } else { Mat::from_rows(f, rows, k)?.kernel_basis() };
        parts.insert(*w, rad);
    }
    let rad = GradedSub::from_parts(parts);
    let mults: Vec<usize> = homs.iter().map(Vec::len).collect();
    let top_dim: usize = mults.iter().zip(simples).map(|(t, s)| t * s.dim()).sum();
    if top_dim != m.dim() - rad.dim() {
        return Err(Error::Check(format!(
            "top of a {}-dimensional module has dimension {} but the simples account for {top_dim}",
            m.dim(),
            m.dim() - rad.dim()
        )));
    }
    Ok((rad, mults))
}

/// Successive radicals computed by [`radical_by_homs`]; modules off a weight basis
/// are rebased first.
pub fn filtration_by_homs(alg: &Algebra, simples: &[Module], m: &Module) -> Result<Filtration> {
    let mut cur = if m.is_graded() { m.clone() } else { to_weight_basis(alg, m)?.0 };
    let mut layers = Vec::new();
    let mut layer_dims = Vec::new();
    while cur.dim() > 0 {
        let (rad, mults) = radical_by_homs(simples, &cur)?;
        if rad.dim() == cur.dim() {
            return Err(Error::Check("module has no simple quotient among the given simples".into()));
        }
        layer_dims.push(cur.dim() - rad.dim());
        layers.push(mults);
        let g = Grading::of(&cur)?;
        cur = submodule(alg, &cur, &g, &rad)?.0;
    }
    let composition = (0..simples.len()).map(|s| layers.iter().map(|l| l[s]).sum()).collect();
    Ok(Filtration { layers, layer_dims, composition })
}

/// J·M as the submodule generated by x·v for x in `ideal_gens` and v in a basis of M,
/// where `ideal_gens` generate J as a left ideal. `m` must be on a weight basis.
pub fn radical_via_ideal(alg: &Algebra, m: &Module, ideal_gens: &[AlgElt]) -> Result<GradedSub> {
    let f = m.field();
    let g = Grading::of(m)?;
    let mut seeds = Vec::new();
    for x in ideal_gens {
        let act = m.act_elt(alg, x)?;
        for k in 0..m.dim() {
            let mut e = zero_vector(f, m.dim());
            e[k] = f.one();
            seeds.push(act.apply(&e));
        }
    }
    Ok(spin(m, &g, &seeds))
}
