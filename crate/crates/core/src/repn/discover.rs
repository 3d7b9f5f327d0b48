use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graded::{quotient, spin, submodule, GradedSub, Grading};
use super::hom::{hom_basis, hom_dim};
use super::layers::{radical_by_homs, radical_via_ideal};
use super::module::{left_ideal_module, Module, Weight};
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::hopf::{jacobson_radical, left_ideal_generators, Algebra, FiniteAlgebra};
use crate::linalg::{BasisCoords, Mat, Subspace, Vector};

/// One left ideal H·e_{i,j} with its radical J·H·e_{i,j}.
pub struct IdealPiece {
    pub idempotent: (usize, usize),
    pub module: Module,
    pub radical: GradedSub,
}

/// Simples found inside the tops of the left ideals H·e_{i,j}.
pub struct SimpleSearch {
    pub simples: Vec<Module>,
    /// Weight of the vector killed by a that generates each simple.
    pub highest: Vec<Weight>,
    pub pieces: Vec<IdealPiece>,
    /// dim H/J, which equals Σ (dim S)² over the simples.
    pub semisimple_dim: usize,
}

/// Kernel of the a-action restricted to the weight-w basis vectors, in local coordinates.
fn a_kernel_at(m: &Module, g: &Grading, w: Weight) -> Result<Subspace> {
    let f = m.field();
    let class = g.class(w);
    let cols: Vec<Vector> = class
        .iter()
        .map(|&i| {
            let mut e = crate::linalg::zero_vector(f, m.dim());
            e[i] = f.one();
            m.act(0).apply(&e)
        })
        .collect();
    Ok(Mat::from_columns(f, &cols, m.dim())?.kernel_basis())
}

/// Whether a module is simple by the certificate: ker a is one-dimensional and
/// generates the module. Every nonzero submodule meets ker a because a is nilpotent.
pub fn certified_simple(m: &Module) -> Result<bool> {
    let g = Grading::of(m)?;
    let mut kernel = Vec::new();
    for w in g.classes().keys() {
        for v in a_kernel_at(m, &g, *w)?.basis() {
            kernel.push(g.embed(m.field(), *w, v));
        }
    }
    Ok(kernel.len() == 1 && spin(m, &g, &kernel).dim() == m.dim())
}

/// Searches the tops H·e/J·H·e for simples: every a-killed weight vector of a top
/// generates a simple submodule. Works for all four-generator algebras.
pub fn search_simples(alg: &Algebra) -> Result<SimpleSearch> {
    let n = alg.order();
    let j = jacobson_radical(alg);
    let semisimple_dim = alg.dim() - j.dim();
    let gens = left_ideal_generators(alg, &j);
    let mut simples: Vec<Module> = Vec::new();
    let mut highest = Vec::new();
    let mut pieces = Vec::new();
    for i in 0..n {
        for jj in 0..n {
            let module = left_ideal_module(alg, i, jj, None)?;
            let radical = radical_via_ideal(alg, &module, &gens)?;
            let g = Grading::of(&module)?;
            let top = quotient(alg, &module, &g, &radical)?;
            let gt = Grading::of(&top)?;
            for w in gt.classes().keys() {
                let k = a_kernel_at(&top, &gt, *w)?;
                let Some(v) = k.basis().first() else { continue };
                let sub = spin(&top, &gt, &[gt.embed(top.field(), *w, v)]);
                let (s, _) = submodule(alg, &top, &gt, &sub)?;
                if !certified_simple(&s)? {
                    return Err(Error::Calibration(format!("a-killed vector of weight {w:?} in the top of H·e({i},{jj}) generates a non-simple module")));
                }
                if hom_dim(alg, &s, &s)? != 1 {
                    return Err(Error::Calibration(format!("simple of weight {w:?} has endomorphisms beyond scalars")));
                }
                let mut known = false;
                for t in &simples {
                    if t.dim() == s.dim() && hom_dim(alg, &s, t)? > 0 {
                        known = true;
                        break;
                    }
                }
                if !known {
                    simples.push(s);
                    highest.push(*w);
                }
            }
            pieces.push(IdealPiece { idempotent: (i, jj), module, radical });
        }
    }
    let found: usize = simples.iter().map(|s| s.dim() * s.dim()).sum();
    if found != semisimple_dim {
        return Err(Error::Calibration(format!("simples account for {found} of dim H/J = {semisimple_dim}")));
    }
    Ok(SimpleSearch { simples, highest, pieces, semisimple_dim })
}

/// A splitting H·e = ⊕ H·v_k into summands with simple tops.
pub struct Splitting {
    /// (simple index, summand) for each piece.
    pub summands: Vec<(usize, Module)>,
    pub attempts: usize,
}

fn random_endomorphism(rng: &mut ChaCha8Rng, basis: &[Mat], field: &'static crate::CycloField, dim: usize) -> Result<Mat> {
    let mut x = Mat::zeros(field, dim, dim);
    for b in basis {
        let c: i64 = rng.gen_range(-20..=20);
        if c != 0 {
            x = x.add(&b.scale(&field.from_int(c)))?;
        }
    }
    Ok(x)
}

/// Splits one left ideal into cyclic summands H·v, one per simple summand of its top.
///
/// A seeded random endomorphism x acts on the top by a scalar λ_S on each simple
/// summand; when these scalars are distinct the generalized eigenspaces of x are the
/// indecomposable summands. Each summand is then rebuilt as H·v, where v is the
/// component in that eigenspace of a lifted a-killed top vector, and must have a
/// simple top. Retries with fresh randomness up to `max_attempts` times.
pub fn split_ideal(
    alg: &Algebra,
    simples: &[Module],
    highest: &[Weight],
    piece: &IdealPiece,
    seed: u64,
    max_attempts: usize,
) -> Result<Splitting> {
    let m = &piece.module;
    let f = m.field();
    let d = m.dim();
    let g = Grading::of(m)?;
    let (rad, tops) = radical_by_homs(simples, m)?;
    if rad != piece.radical {
        return Err(Error::Check(format!("radical of H·e{:?} differs between the Hom and ideal routes", piece.idempotent)));
    }
    let top = quotient(alg, m, &g, &rad)?;
    let gt = Grading::of(&top)?;
    // (simple, weight, lifted top vector in local coordinates of that weight)
    let mut lifts = Vec::new();
    for (s, &t) in tops.iter().enumerate() {
        if t == 0 {
            continue;
        }
        if t > 1 {
            return Err(Error::Calibration(format!("simple {s} occurs {t} times in the top of H·e{:?}", piece.idempotent)));
        }
        let w = highest[s];
        let k = a_kernel_at(&top, &gt, w)?;
        if k.dim() != 1 {
            return Err(Error::Check(format!("top of H·e{:?} has {} a-killed vectors of weight {w:?}", piece.idempotent, k.dim())));
        }
        let complement = rad.part(w).map(Subspace::complement_indices).unwrap_or_default();
        let mut local = crate::linalg::zero_vector(f, g.class_dim(w));
        for (c, x) in complement.iter().zip(&k.basis()[0]) {
            local[*c] = x.clone();
        }
        lifts.push((s, w, local));
    }
    let ends = hom_basis(m, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((piece.idempotent.0 as u64) << 32 | piece.idempotent.1 as u64));
    'attempt: for attempt in 1..=max_attempts {
        let x = random_endomorphism(&mut rng, &ends, f, d)?;
        let mut lambdas: Vec<CycloNum> = Vec::new();
        for (_, w, local) in &lifts {
            let img = x.mul_vec(&g.embed(f, *w, local))?;
            let (_, img_local) = g.split(&img).into_iter().find(|(u, _)| u == w).unwrap_or((*w, crate::linalg::zero_vector(f, local.len())));
            let part = rad.part(*w).expect("weight of the module");
            let (y, u) = (part.quotient_coords(&img_local), part.quotient_coords(local));
            let p = u.iter().position(|c| !c.is_zero()).expect("lift of a nonzero top vector");
            let lambda = &y[p] * &u[p].inv()?;
            if y.iter().zip(&u).any(|(a, b)| *a != &lambda * b) {
                return Err(Error::Check("endomorphism does not act by a scalar on a simple summand of the top".into()));
            }
            if lambdas.contains(&lambda) {
                continue 'attempt;
            }
            lambdas.push(lambda);
        }
        let mut spaces = Vec::new();
        for lambda in &lambdas {
            let shifted = x.sub(&Mat::scalar(f, d, lambda))?;
            spaces.push(shifted.pow(d as u64)?.kernel_basis());
        }
        if spaces.iter().map(Subspace::dim).sum::<usize>() != d {
            continue;
        }
        let all: Vec<Vector> = spaces.iter().flat_map(|s| s.basis().iter().cloned()).collect();
        let coords = BasisCoords::new(f, d, &all)?;
        let mut summands = Vec::new();
        let mut offset = 0;
        for ((s, w, local), space) in lifts.iter().zip(&spaces) {
            let c = coords.coords(&g.embed(f, *w, local)).expect("eigenspaces span the module");
            let mut v = crate::linalg::zero_vector(f, d);
            for (k, b) in space.basis().iter().enumerate() {
                for (o, e) in v.iter_mut().zip(b) {
                    o.add_mul(&c[offset + k], e);
                }
            }
            offset += space.dim();
            let sub = spin(m, &g, &[v]);
            if sub.dim() != space.dim() {
                continue 'attempt;
            }
            let (u, _) = submodule(alg, m, &g, &sub)?;
            let (_, ut) = radical_by_homs(simples, &u)?;
            if ut.iter().sum::<usize>() != 1 || ut[*s] != 1 {
                continue 'attempt;
            }
            summands.push((*s, u));
        }
        return Ok(Splitting { summands, attempts: attempt });
    }
    Err(Error::Calibration(format!("no direct splitting of H·e{:?} within {max_attempts} attempts", piece.idempotent)))
}
