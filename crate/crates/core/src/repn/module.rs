use std::collections::BTreeMap;

use serde::Serialize;

use super::label::Label;
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::hopf::{failing_relations, AlgElt, Algebra, AlgebraSpec, FiniteAlgebra, RelTarget};
use crate::linalg::{BasisCoords, Mat, SparseMat, Vector};

/// Joint eigenvalue exponents (i, j): b acts by q^i and c by q^j.
pub type Weight = (usize, usize);

/// A finite-dimensional module over one of the four-generator algebras, stored as
/// sparse matrices for a, b, c, d.
///
/// When b and c are diagonal the basis is a weight basis and `weights` records the
/// weight of each basis vector; most algorithms work weight space by weight space.
#[derive(Clone, Debug)]
pub struct Module {
    spec: AlgebraSpec,
    dim: usize,
    acts: Vec<SparseMat>,
    weights: Option<Vec<Weight>>,
    label: Option<Label>,
}

struct MatrixTarget<'a> {
    field: &'static CycloField,
    dim: usize,
    acts: &'a [SparseMat],
}

impl RelTarget for MatrixTarget<'_> {
    type V = SparseMat;
    fn zero(&self) -> SparseMat {
        SparseMat::zeros(self.field, self.dim, self.dim)
    }
    fn one(&self) -> SparseMat {
        SparseMat::identity(self.field, self.dim)
    }
    fn gen(&self, g: usize) -> SparseMat {
        self.acts[g].clone()
    }
    fn mul(&self, x: &SparseMat, y: &SparseMat) -> SparseMat {
        x.mul(y).expect("square matrices of one size")
    }
    fn add(&self, x: &SparseMat, y: &SparseMat) -> SparseMat {
        x.add(y).expect("square matrices of one size")
    }
    fn scale(&self, x: &SparseMat, c: &CycloNum) -> SparseMat {
        x.scale(c)
    }
    fn is_zero(&self, x: &SparseMat) -> bool {
        x.is_zero()
    }
}

pub(crate) fn require_abcd(alg: &Algebra) -> Result<()> {
    if alg.ngen() != 4 {
        return Err(Error::InvalidSpec(format!("{} is not presented on a, b, c, d", alg.spec().name())));
    }
    Ok(())
}

fn diagonal_weights(field: &'static CycloField, b: &SparseMat, c: &SparseMat) -> Option<Vec<Weight>> {
    if !b.is_diagonal() || !c.is_diagonal() {
        return None;
    }
    (0..b.nrows())
        .map(|i| Some((field.discrete_log(&b.get(i, i))?, field.discrete_log(&c.get(i, i))?)))
        .collect()
}

impl Module {
    /// Checks sizes and every defining relation of `alg` on the given matrices.
    pub fn new(alg: &Algebra, acts: Vec<SparseMat>, label: Option<Label>) -> Result<Module> {
        require_abcd(alg)?;
        let f = alg.field();
        let dim = acts.first().map_or(0, SparseMat::nrows);
        if acts.len() != 4 || acts.iter().any(|m| m.nrows() != dim || m.ncols() != dim || m.field() != f) {
            return Err(Error::Dimension("a module needs four square matrices of one size over the algebra's field".into()));
        }
        let bad = failing_relations(alg.relations(), &MatrixTarget { field: f, dim, acts: &acts });
        if let Some(r) = bad.first() {
            return Err(Error::RelationFailure {
                relation: r.clone(),
                detail: format!("on a {dim}-dimensional module{}", label.map(|l| format!(" {l}")).unwrap_or_default()),
            });
        }
        let weights = diagonal_weights(f, &acts[1], &acts[2]);
        Ok(Module { spec: alg.spec().clone(), dim, acts, weights, label })
    }

    /// The zero module.
    pub fn zero(alg: &Algebra) -> Result<Module> {
        let f = alg.field();
        Module::new(alg, vec![SparseMat::zeros(f, 0, 0); 4], None)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn field(&self) -> &'static CycloField {
        self.spec.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of generator g (0 = a, 1 = b, 2 = c, 3 = d); columns are images.
    pub fn act(&self, g: usize) -> &SparseMat {
        &self.acts[g]
    }

    pub fn acts(&self) -> &[SparseMat] {
        &self.acts
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn with_label(mut self, label: Label) -> Module {
        self.label = Some(label);
        self
    }

    /// Weight of each basis vector when the basis is a weight basis.
    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.weights.is_some()
    }

    pub(crate) fn same_algebra(&self, alg: &Algebra) -> Result<()> {
        if self.spec != *alg.spec() {
            return Err(Error::InvalidSpec(format!("module over {} used with {}", self.spec.name(), alg.spec().name())));
        }
        Ok(())
    }

    /// Action of the PBW monomial a^i b^j c^k d^l with index u.
    pub fn act_monomial(&self, alg: &Algebra, u: usize) -> Result<SparseMat> {
        self.same_algebra(alg)?;
        let mut m = SparseMat::identity(self.field(), self.dim);
        for (g, &e) in alg.exps(u).iter().enumerate() {
            if e > 0 {
                m = m.mul(&self.acts[g].pow(e as u64)?)?;
            }
        }
        Ok(m)
    }

    /// Action of an arbitrary algebra element.
    pub fn act_elt(&self, alg: &Algebra, x: &AlgElt) -> Result<SparseMat> {
        let mut out = SparseMat::zeros(self.field(), self.dim, self.dim);
        for (u, c) in x.iter() {
            out = out.add(&self.act_monomial(alg, *u)?.scale(c))?;
        }
        Ok(out)
    }

    /// Conjugates by an invertible matrix: the new basis is the columns of `p`.
    pub fn change_basis(&self, alg: &Algebra, p: &Mat) -> Result<Module> {
        let inv = p.inverse()?;
        let acts = self
            .acts
            .iter()
            .map(|m| Ok(SparseMat::from_dense(&inv.mul(&m.to_dense())?.mul(p)?)))
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg, acts, self.label)
    }

    /// The module on the span of `basis`, which must be a linearly independent list
    /// spanning a submodule.
    pub fn restrict_to(&self, alg: &Algebra, basis: &[Vector], label: Option<Label>) -> Result<Module> {
        let f = self.field();
        let coords = BasisCoords::new(f, self.dim, basis)?;
        let k = basis.len();
        let mut acts = Vec::with_capacity(4);
        for m in &self.acts {
            let mut trip = Vec::new();
            for (col, v) in basis.iter().enumerate() {
                let img = m.apply(v);
                let c = coords.coords(&img).ok_or_else(|| Error::Check("span is not stable under the action".into()))?;
                trip.extend(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(row, x)| (row, col, x)));
            }
            acts.push(SparseMat::from_triplets(f, k, k, trip)?);
        }
        Module::new(alg, acts, label)
    }

    /// JSON form: dimension, label and the four matrices as nonzero entry lists.
    pub fn export(&self) -> ModuleExport {
        let names = ["a", "b", "c", "d"];
        let acts = names
            .iter()
            .zip(&self.acts)
            .map(|(name, m)| {
                let entries = (0..m.nrows())
                    .flat_map(|i| m.row(i).iter().map(move |(j, v)| (i, *j, v.to_string())))
                    .collect();
                (name.to_string(), entries)
            })
            .collect();
        ModuleExport { algebra: self.spec.name(), dim: self.dim, label: self.label, acts }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleExport {
    pub algebra: String,
    pub dim: usize,
    pub label: Option<Label>,
    /// Generator name to (row, column, value) triples.
    pub acts: BTreeMap<String, Vec<(usize, usize, String)>>,
}

/// The left regular module, on the PBW basis.
pub fn regular_representation(alg: &Algebra) -> Result<Module> {
    require_abcd(alg)?;
    Module::new(alg, (0..4).map(|g| alg.left_mult_matrix(g)).collect(), None)
}

/// The one-dimensional module with a, d acting by 0, b by q^i and c by q^j.
/// Fails unless these scalars satisfy the relations.
pub fn one_dim(alg: &Algebra, i: usize, j: usize, label: Option<Label>) -> Result<Module> {
    let f = alg.field();
    let s = |x: CycloNum| SparseMat::scalar(f, 1, &x);
    let n = alg.order() as i64;
    let acts = vec![s(f.zero()), s(f.q_pow(i as i64 % n)), s(f.q_pow(j as i64 % n)), s(f.zero())];
    Module::new(alg, acts, label)
}

fn require_basic(alg: &Algebra) -> Result<()> {
    require_abcd(alg)?;
    if alg.spec().is_h1() {
        return Err(Error::InvalidSpec(format!("{} has simples of dimension above one", alg.spec().name())));
    }
    Ok(())
}

/// The simple module S(i, j) of a basic algebra.
pub fn simple_s(alg: &Algebra, i: usize, j: usize) -> Result<Module> {
    require_basic(alg)?;
    let label = Label::S(i, j).validate(alg.order())?;
    one_dim(alg, i, j, Some(label))
}

/// The left ideal H·e_{i,j} with basis a^k d^l e_{i,j} (index k·n + l).
pub fn left_ideal_module(alg: &Algebra, i: usize, j: usize, label: Option<Label>) -> Result<Module> {
    require_abcd(alg)?;
    let n = alg.order();
    if i >= n || j >= n {
        return Err(Error::InvalidSpec(format!("idempotent index ({i},{j}) out of range")));
    }
    let f = alg.field();
    let dim = alg.dim();
    let e = &crate::hopf::group_idempotents(alg)?[i * n + j];
    let basis: Vec<AlgElt> = (0..n)
        .flat_map(|k| (0..n).map(move |l| (k, l)))
        .map(|(k, l)| alg.mul(&alg.monomial(&[k as u8, 0, 0, l as u8]), e))
        .collect();
    let dense: Vec<Vector> = basis.iter().map(|x| x.to_dense(f, dim)).collect();
    let coords = BasisCoords::new(f, dim, &dense)?;
    let mut acts = Vec::with_capacity(4);
    for g in 0..4 {
        let mut trip = Vec::new();
        for (col, x) in basis.iter().enumerate() {
            let img = alg.lmul_gen_elt(g, x).to_dense(f, dim);
            let c = coords.coords(&img).ok_or_else(|| Error::Check("H·e is not spanned by a^k d^l e".into()))?;
            trip.extend(c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(r, v)| (r, col, v)));
        }
        acts.push(SparseMat::from_triplets(f, n * n, n * n, trip)?);
    }
    Module::new(alg, acts, label)
}

/// The indecomposable projective P(i, j) = H·e_{i,j} of a basic algebra.
pub fn projective_p(alg: &Algebra, i: usize, j: usize) -> Result<Module> {
    require_basic(alg)?;
    let label = Label::P(i, j).validate(alg.order())?;
    left_ideal_module(alg, i, j, Some(label))
}

/// M ⊗ N with g acting by Σ (first leg of Δg on M) ⊗ (second leg on N).
/// Basis vector m_s ⊗ n_t has index s · dim N + t.
pub fn tensor_module(alg: &Algebra, m: &Module, n: &Module) -> Result<Module> {
    m.same_algebra(alg)?;
    n.same_algebra(alg)?;
    let f = alg.field();
    let dim = m.dim * n.dim;
    let mut cache_m: BTreeMap<usize, SparseMat> = BTreeMap::new();
    let mut cache_n: BTreeMap<usize, SparseMat> = BTreeMap::new();
    let mut acts = Vec::with_capacity(4);
    for g in 0..4 {
        let mut acc = SparseMat::zeros(f, dim, dim);
        for ((x, y), c) in alg.gen_coproduct(g).iter() {
            if !cache_m.contains_key(x) {
                cache_m.insert(*x, m.act_monomial(alg, *x)?);
            }
            if !cache_n.contains_key(y) {
                cache_n.insert(*y, n.act_monomial(alg, *y)?);
            }
            acc = acc.add(&cache_m[x].kron(&cache_n[y]).scale(c))?;
        }
        acts.push(acc);
    }
    Module::new(alg, acts, None)
}

/// M ⊕ N, with the basis of M first.
pub fn direct_sum(alg: &Algebra, m: &Module, n: &Module) -> Result<Module> {
    m.same_algebra(alg)?;
    n.same_algebra(alg)?;
    let acts = m.acts.iter().zip(&n.acts).map(|(x, y)| x.direct_sum(y)).collect();
    Module::new(alg, acts, None)
}
