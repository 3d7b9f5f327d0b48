use std::collections::{BTreeMap, VecDeque};

use super::module::{Module, Weight};
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::hopf::Algebra;
use crate::linalg::{zero_vector, BasisCoords, Mat, SparseMat, Subspace, Vector};

/// Basis vectors of a weight-basis module grouped by weight.
#[derive(Clone, Debug)]
pub struct Grading {
    dim: usize,
    weights: Vec<Weight>,
    classes: BTreeMap<Weight, Vec<usize>>,
    local: Vec<usize>,
}

impl Grading {
    pub fn of(m: &Module) -> Result<Grading> {
        let weights = m.weights().ok_or_else(|| Error::Check("module basis is not a weight basis".into()))?.to_vec();
        let mut classes: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        let mut local = Vec::with_capacity(weights.len());
        for (i, w) in weights.iter().enumerate() {
            let c = classes.entry(*w).or_default();
            local.push(c.len());
            c.push(i);
        }
        Ok(Grading { dim: weights.len(), weights, classes, local })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weight(&self, i: usize) -> Weight {
        self.weights[i]
    }

    pub fn local_index(&self, i: usize) -> usize {
        self.local[i]
    }

    pub fn classes(&self) -> &BTreeMap<Weight, Vec<usize>> {
        &self.classes
    }

    pub fn class(&self, w: Weight) -> &[usize] {
        self.classes.get(&w).map_or(&[], Vec::as_slice)
    }

    pub fn class_dim(&self, w: Weight) -> usize {
        self.class(w).len()
    }

    /// Splits a vector into its nonzero weight components, in local coordinates.
    pub fn split(&self, v: &[CycloNum]) -> Vec<(Weight, Vector)> {
        let mut out = Vec::new();
        for (w, idx) in &self.classes {
            if idx.iter().any(|&i| !v[i].is_zero()) {
                out.push((*w, idx.iter().map(|&i| v[i].clone()).collect()));
            }
        }
        out
    }

    /// Embeds a local vector of weight w into the whole module.
    pub fn embed(&self, field: &'static CycloField, w: Weight, local: &[CycloNum]) -> Vector {
        let mut v = zero_vector(field, self.dim);
        for (&i, x) in self.class(w).iter().zip(local) {
            v[i] = x.clone();
        }
        v
    }
}

/// A subspace that is a sum of its weight components, stored per weight in local
/// coordinates of that weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSub {
    parts: BTreeMap<Weight, Subspace>,
}

impl GradedSub {
    pub fn zero(field: &'static CycloField, g: &Grading) -> GradedSub {
        GradedSub { parts: g.classes.iter().map(|(w, c)| (*w, Subspace::zero(field, c.len()))).collect() }
    }

    pub fn full(field: &'static CycloField, g: &Grading) -> GradedSub {
        GradedSub { parts: g.classes.iter().map(|(w, c)| (*w, Subspace::full(field, c.len()))).collect() }
    }

    pub fn from_parts(parts: BTreeMap<Weight, Subspace>) -> GradedSub {
        GradedSub { parts }
    }

    pub fn dim(&self) -> usize {
        self.parts.values().map(Subspace::dim).sum()
    }

    pub fn part(&self, w: Weight) -> Option<&Subspace> {
        self.parts.get(&w)
    }

    pub fn parts(&self) -> &BTreeMap<Weight, Subspace> {
        &self.parts
    }

    /// Inserts each weight component; true if the space grew.
    pub fn insert(&mut self, g: &Grading, v: &[CycloNum]) -> bool {
        let mut grew = false;
        for (w, local) in g.split(v) {
            grew |= self.parts.get_mut(&w).expect("weight of the grading").insert(local);
        }
        grew
    }

    pub fn contains(&self, g: &Grading, v: &[CycloNum]) -> bool {
        g.split(v).iter().all(|(w, local)| self.parts[w].contains(local))
    }

    pub fn sum(&self, other: &GradedSub) -> GradedSub {
        GradedSub { parts: self.parts.iter().map(|(w, s)| (*w, s.sum(&other.parts[w]))).collect() }
    }

    pub fn intersect(&self, other: &GradedSub) -> GradedSub {
        GradedSub { parts: self.parts.iter().map(|(w, s)| (*w, s.intersect(&other.parts[w]))).collect() }
    }

    /// Basis in ambient coordinates, weight by weight.
    pub fn basis(&self, field: &'static CycloField, g: &Grading) -> Vec<Vector> {
        self.parts.iter().flat_map(|(w, s)| s.basis().iter().map(move |b| g.embed(field, *w, b))).collect()
    }
}

/// Smallest submodule containing `seeds`. Seeds may mix weights.
pub fn spin(m: &Module, g: &Grading, seeds: &[Vector]) -> GradedSub {
    let f = m.field();
    let mut sub = GradedSub::zero(f, g);
    let mut queue: VecDeque<Vector> = VecDeque::new();
    let push = |sub: &mut GradedSub, queue: &mut VecDeque<Vector>, v: &[CycloNum]| {
        for (w, local) in g.split(v) {
            let part = sub.parts.get_mut(&w).expect("weight of the grading");
            let r = part.reduce(&local);
            if part.insert(r.clone()) {
                queue.push_back(g.embed(f, w, &r));
            }
        }
    };
    for s in seeds {
        push(&mut sub, &mut queue, s);
    }
    while let Some(v) = queue.pop_front() {
        // b and c preserve weight spaces, so only a and d can produce new vectors.
        for gen in [0, 3] {
            let img = m.act(gen).apply(&v);
            push(&mut sub, &mut queue, &img);
        }
    }
    sub
}

/// Whether `sub` is stable under all four generators.
pub fn is_submodule(m: &Module, g: &Grading, sub: &GradedSub) -> bool {
    let f = m.field();
    sub.basis(f, g).iter().all(|v| (0..4).all(|gen| sub.contains(g, &m.act(gen).apply(v))))
}

/// The submodule on `sub`, with basis the echelon bases of its weight parts in
/// weight order. Returns the module and its basis in ambient coordinates.
pub fn submodule(alg: &Algebra, m: &Module, g: &Grading, sub: &GradedSub) -> Result<(Module, Vec<Vector>)> {
    let f = m.field();
    let basis = sub.basis(f, g);
    let mut offset = BTreeMap::new();
    let mut o = 0;
    for (w, s) in &sub.parts {
        offset.insert(*w, o);
        o += s.dim();
    }
    let k = basis.len();
    let mut acts = Vec::with_capacity(4);
    for gen in 0..4 {
        let mut trip = Vec::new();
        for (col, v) in basis.iter().enumerate() {
            for (w, local) in g.split(&m.act(gen).apply(v)) {
                let c = sub.parts[&w].coords(&local).ok_or_else(|| Error::Check("subspace is not a submodule".into()))?;
                trip.extend(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(r, x)| (offset[&w] + r, col, x)));
            }
        }
        acts.push(SparseMat::from_triplets(f, k, k, trip)?);
    }
    Ok((Module::new(alg, acts, None)?, basis))
}

/// M / sub on the basis of complement coordinates of each weight part.
pub fn quotient(alg: &Algebra, m: &Module, g: &Grading, sub: &GradedSub) -> Result<Module> {
    let f = m.field();
    let mut reps = Vec::new();
    let mut offset = BTreeMap::new();
    for (w, s) in &sub.parts {
        offset.insert(*w, reps.len());
        let class = g.class(*w);
        reps.extend(s.complement_indices().into_iter().map(|li| class[li]));
    }
    let k = reps.len();
    let mut acts = Vec::with_capacity(4);
    for gen in 0..4 {
        let mut trip = Vec::new();
        for (col, &i) in reps.iter().enumerate() {
            let mut e = zero_vector(f, g.dim);
            e[i] = f.one();
            for (w, local) in g.split(&m.act(gen).apply(&e)) {
                let c = sub.parts[&w].quotient_coords(&local);
                trip.extend(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(r, x)| (offset[&w] + r, col, x)));
            }
        }
        acts.push(SparseMat::from_triplets(f, k, k, trip)?);
    }
    Module::new(alg, acts, None)
}

/// Joint eigenspaces of b and c, computed with the projectors
/// π_(i,j) = n^{-2} Σ_{s,t} q^{-is-jt} b^s c^t applied to the standard basis.
/// Fails if the weight spaces do not span or a vector is not an eigenvector.
pub fn weight_decomposition(m: &Module) -> Result<BTreeMap<Weight, Subspace>> {
    let f = m.field();
    let n = f.order();
    let dim = m.dim();
    let mut parts: BTreeMap<Weight, Subspace> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|w| (w, Subspace::zero(f, dim))).collect();
    for k in 0..dim {
        // orbit[s][t] = b^s c^t e_k
        let mut e = zero_vector(f, dim);
        e[k] = f.one();
        let mut orbit: Vec<Vec<Vector>> = Vec::with_capacity(n);
        let mut row = e;
        for _ in 0..n {
            let mut line = Vec::with_capacity(n);
            let mut v = row.clone();
            for _ in 0..n {
                let next = m.act(2).apply(&v);
                line.push(v);
                v = next;
            }
            orbit.push(line);
            row = m.act(1).apply(&row);
        }
        for (w, part) in parts.iter_mut() {
            let mut p = zero_vector(f, dim);
            for (s, line) in orbit.iter().enumerate() {
                for (t, v) in line.iter().enumerate() {
                    let c = f.q_pow(-((w.0 * s + w.1 * t) as i64));
                    for (x, y) in p.iter_mut().zip(v) {
                        if !y.is_zero() {
                            x.add_mul(&c, y);
                        }
                    }
                }
            }
            // The factor n^{-2} does not change the span.
            if p.iter().any(|x| !x.is_zero()) {
                part.insert(p);
            }
        }
    }
    let total: usize = parts.values().map(Subspace::dim).sum();
    if total != dim {
        return Err(Error::Check(format!("weight spaces span {total} of {dim} dimensions")));
    }
    for ((i, j), s) in &parts {
        let (qi, qj) = (f.q_pow(*i as i64), f.q_pow(*j as i64));
        for v in s.basis() {
            let scaled = |q: &CycloNum| v.iter().map(|x| x * q).collect::<Vector>();
            if m.act(1).apply(v) != scaled(&qi) || m.act(2).apply(v) != scaled(&qj) {
                return Err(Error::Check(format!("vector of weight ({i},{j}) is not a joint eigenvector")));
            }
        }
    }
    parts.retain(|_, s| s.dim() > 0);
    Ok(parts)
}

/// Joint eigenspace for (q^i, q^j) as the kernel of the stacked matrix [b − q^i; c − q^j].
pub fn weight_space_by_kernel(m: &Module, w: Weight) -> Result<Subspace> {
    let f = m.field();
    let dim = m.dim();
    let shift = |g: usize, e: usize| m.act(g).sub(&SparseMat::scalar(f, dim, &f.q_pow(e as i64))).map(|x| x.to_dense());
    Mat::vstack(f, &[shift(1, w.0)?, shift(2, w.1)?], dim).map(|s| s.kernel_basis())
}

/// Re-expresses a module on a weight basis. Returns the graded module and the
/// matrix whose columns are the new basis vectors in old coordinates.
pub fn to_weight_basis(alg: &Algebra, m: &Module) -> Result<(Module, Mat)> {
    let f = m.field();
    if m.is_graded() {
        return Ok((m.clone(), Mat::identity(f, m.dim())));
    }
    let parts = weight_decomposition(m)?;
    let basis: Vec<Vector> = parts.values().flat_map(|s| s.basis().iter().cloned()).collect();
    let change = Mat::from_columns(f, &basis, m.dim())?;
    let coords = BasisCoords::new(f, m.dim(), &basis)?;
    let k = basis.len();
    let mut acts = Vec::with_capacity(4);
    for gen in 0..4 {
        let mut trip = Vec::new();
        for (col, v) in basis.iter().enumerate() {
            let c = coords.coords(&m.act(gen).apply(v)).ok_or_else(|| Error::Check("weight basis does not span".into()))?;
            trip.extend(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(r, x)| (r, col, x)));
        }
        acts.push(SparseMat::from_triplets(f, k, k, trip)?);
    }
    let out = Module::new(alg, acts, m.label())?;
    if !out.is_graded() {
        return Err(Error::Check("rebased module is not diagonal in b and c".into()));
    }
    Ok((out, change))
}
