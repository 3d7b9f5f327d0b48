use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{Algebra, FiniteAlgebra, HopfStructure};
use super::elt::AlgElt;
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::{bilinear_radical, rref_rows, zero_vector, Mat, SparseMat, Subspace, Vector};

/// τ_p(g^i x^j, x₁^k g₁^l) = δ_{jk} p^j q^{il} (j)!_q.
pub fn skew_pairing_tau(field: &'static CycloField, p: &CycloNum, (i, j): (usize, usize), (k, l): (usize, usize)) -> Result<CycloNum> {
    let n = field.order();
    if [i, j, k, l].iter().any(|&e| e >= n) {
        return Err(Error::InvalidSpec(format!("exponents must lie in [0, {n})")));
    }
    if j != k {
        return Ok(field.zero());
    }
    Ok(&(&p.pow(j as u64) * &field.q_pow((i * l) as i64)) * &field.q_factorial(j))
}

fn dense(field: &'static CycloField, x: &AlgElt, dim: usize) -> Vector {
    x.to_dense(field, dim)
}

fn elt(v: &[CycloNum]) -> AlgElt {
    AlgElt::from_dense(v)
}

/// Requires the four-generator presentation.
fn require_abcd(alg: &Algebra) -> Result<()> {
    if alg.ngen() != 4 {
        return Err(Error::InvalidSpec(format!("{} is not presented on a, b, c, d", alg.spec().name())));
    }
    Ok(())
}

/// e_{i,j} = n^{-2} Σ_{k,l} q^{-ik-jl} b^k c^l, returned in order i·n + j.
pub fn group_idempotents(alg: &Algebra) -> Result<Vec<AlgElt>> {
    require_abcd(alg)?;
    let f = alg.field();
    let n = alg.order();
    let inv_n2 = f.from_int((n * n) as i64).inv()?;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = AlgElt::zero();
            for k in 0..n {
                for l in 0..n {
                    let c = &f.q_pow(-((i * k + j * l) as i64)) * &inv_n2;
                    e.add_term(alg.index(&[0, k as u8, l as u8, 0]), &c);
                }
            }
            out.push(e);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdempotentCheck {
    pub count: usize,
    pub idempotent: bool,
    pub orthogonal: bool,
    pub complete: bool,
}

impl IdempotentCheck {
    pub fn passed(&self) -> bool {
        self.idempotent && self.orthogonal && self.complete
    }
}

/// Checks e_i e_j = δ_{ij} e_i and Σ e_i = 1.
pub fn check_idempotent_family<A: FiniteAlgebra>(alg: &A, es: &[AlgElt]) -> IdempotentCheck {
    let k = es.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let results: Vec<(bool, bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let p = alg.mul(&es[i], &es[j]);
            if i == j {
                (p == es[i], true)
            } else {
                (true, p.is_zero())
            }
        })
        .collect();
    let mut sum = AlgElt::zero();
    for e in es {
        sum = sum.add(e);
    }
    IdempotentCheck {
        count: k,
        idempotent: results.iter().all(|r| r.0),
        orthogonal: results.iter().all(|r| r.1),
        complete: sum == alg.one(),
    }
}

/// t(w) = Tr(L_w) for every basis element w.
pub fn regular_traces<A: FiniteAlgebra>(alg: &A) -> Vec<CycloNum> {
    let dim = alg.dim();
    let f = alg.field();
    (0..dim)
        .into_par_iter()
        .map(|w| {
            let mut t = f.zero();
            for v in 0..dim {
                if let Some(c) = alg.mul_basis(w, v).coeff(&v) {
                    t += c;
                }
            }
            t
        })
        .collect()
}

/// Gram matrix of the trace form (u, v) ↦ Tr(L_{uv}).
pub fn trace_form<A: FiniteAlgebra>(alg: &A) -> Mat {
    let dim = alg.dim();
    let f = alg.field();
    let t = regular_traces(alg);
    let rows: Vec<Vector> = (0..dim)
        .into_par_iter()
        .map(|u| {
            (0..dim)
                .map(|v| {
                    let mut acc = f.zero();
                    for (w, c) in alg.mul_basis(u, v).iter() {
                        if !t[*w].is_zero() {
                            acc.add_mul(c, &t[*w]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Mat::from_rows(f, rows, dim).expect("square")
}

/// Jacobson radical as the radical of the trace form of the regular representation
/// (valid in characteristic zero).
pub fn jacobson_radical<A: FiniteAlgebra>(alg: &A) -> Subspace {
    bilinear_radical(&trace_form(alg)).expect("square Gram matrix")
}

/// Whether A / I is semisimple, tested with the trace form of the quotient algebra.
/// `ideal` must be a two-sided ideal.
pub fn quotient_is_semisimple<A: FiniteAlgebra>(alg: &A, ideal: &Subspace) -> bool {
    let f = alg.field();
    let dim = alg.dim();
    let comp = ideal.complement_indices();
    let k = comp.len();
    let class = |u: usize, v: usize| ideal.quotient_coords(&dense(f, &alg.mul_basis(u, v), dim));
    let prods: Vec<Vec<Vector>> =
        comp.par_iter().map(|&u| comp.iter().map(|&v| class(u, v)).collect()).collect();
    let traces: Vec<CycloNum> = (0..k)
        .map(|i| {
            let mut t = f.zero();
            for (j, row) in prods[i].iter().enumerate() {
                t += &row[j];
            }
            t
        })
        .collect();
    let mut gram = Mat::zeros(f, k, k);
    for i in 0..k {
        for j in 0..k {
            let mut acc = f.zero();
            for (c, t) in prods[i][j].iter().zip(&traces) {
                if !c.is_zero() && !t.is_zero() {
                    acc.add_mul(c, t);
                }
            }
            gram.set(i, j, acc);
        }
    }
    gram.rank() == k
}

fn right_mul_by<A: FiniteAlgebra>(alg: &A, x: &AlgElt, g: usize) -> AlgElt {
    let mut out = AlgElt::zero();
    for (u, c) in x.iter() {
        out.add_scaled(&alg.mul_basis(*u, g), c);
    }
    out
}

fn left_mul_by<A: FiniteAlgebra>(alg: &A, g: usize, x: &AlgElt) -> AlgElt {
    let mut out = AlgElt::zero();
    for (u, c) in x.iter() {
        out.add_scaled(&alg.mul_basis(g, *u), c);
    }
    out
}

/// Closure of `seeds` under left and/or right multiplication by the algebra generators.
pub fn spin_ideal<A: FiniteAlgebra>(alg: &A, seeds: &[AlgElt], left: bool, right: bool) -> Subspace {
    let f = alg.field();
    let dim = alg.dim();
    let gens = alg.generator_indices();
    let mut span = Subspace::zero(f, dim);
    let mut queue: VecDeque<AlgElt> = VecDeque::new();
    for s in seeds {
        if span.insert(dense(f, s, dim)) {
            queue.push_back(s.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let mut imgs = Vec::with_capacity(2);
            if left {
                imgs.push(left_mul_by(alg, g, &x));
            }
            if right {
                imgs.push(right_mul_by(alg, &x, g));
            }
            for y in imgs {
                if !y.is_zero() && span.insert(dense(f, &y, dim)) {
                    queue.push_back(y);
                }
            }
        }
    }
    span
}

/// Two-sided ideal generated by the given elements.
pub fn ideal_generated<A: FiniteAlgebra>(alg: &A, gens: &[AlgElt]) -> Subspace {
    spin_ideal(alg, gens, true, true)
}

/// Elements g_1, ..., g_r of the two-sided ideal `ideal` with ideal = Σ A·g_i, chosen greedily.
pub fn left_ideal_generators<A: FiniteAlgebra>(alg: &A, ideal: &Subspace) -> Vec<AlgElt> {
    let f = alg.field();
    let mut gens: Vec<AlgElt> = Vec::new();
    let mut span = Subspace::zero(f, alg.dim());
    for v in ideal.basis() {
        if span.dim() == ideal.dim() {
            break;
        }
        if span.contains(v) {
            continue;
        }
        gens.push(elt(v));
        span = spin_ideal(alg, &gens, true, false);
    }
    gens
}

/// Smallest m with J^m = 0, for a nilpotent two-sided ideal J.
/// Uses J^m = span{x·g : x ∈ J^{m-1}, g a left-ideal generator of J}.
pub fn loewy_length<A: FiniteAlgebra>(alg: &A, radical: &Subspace) -> Result<usize> {
    let f = alg.field();
    let dim = alg.dim();
    if radical.dim() == 0 {
        return Ok(1);
    }
    let gens = left_ideal_generators(alg, radical);
    let mut cur = radical.clone();
    let mut m = 1;
    loop {
        let prods: Vec<Vector> = cur
            .basis()
            .par_iter()
            .flat_map_iter(|x| {
                let xe = elt(x);
                gens.iter().map(move |g| dense(f, &alg.mul(&xe, g), dim)).collect::<Vec<_>>()
            })
            .collect();
        let next = Subspace::from_vectors(f, dim, prods);
        m += 1;
        if next.dim() == 0 {
            return Ok(m);
        }
        if next.dim() >= cur.dim() {
            return Err(Error::Check(format!("ideal is not nilpotent: power {m} has dimension {}", next.dim())));
        }
        cur = next;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalReport {
    pub algebra: String,
    pub dim: usize,
    pub radical_dim: usize,
    pub quotient_dim: usize,
    pub quotient_semisimple: bool,
    pub loewy_length: usize,
    /// Whether J equals the ideal generated by a and d; checked for the basic algebras only.
    pub equals_ideal_of_a_d: Option<bool>,
}

pub fn radical_report(alg: &Algebra) -> Result<(Subspace, RadicalReport)> {
    let j = jacobson_radical(alg);
    let semisimple = quotient_is_semisimple(alg, &j);
    let ll = loewy_length(alg, &j)?;
    let spec = alg.spec();
    let basic = alg.ngen() == 4 && !spec.is_h1();
    let equals = basic.then(|| ideal_generated(alg, &[alg.generator(0), alg.generator(3)]) == j);
    let report = RadicalReport {
        algebra: spec.name(),
        dim: alg.dim(),
        radical_dim: j.dim(),
        quotient_dim: alg.dim() - j.dim(),
        quotient_semisimple: semisimple,
        loewy_length: ll,
        equals_ideal_of_a_d: equals,
    };
    Ok((j, report))
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfIdealCheck {
    /// Δ(I) ⊆ I ⊗ H + H ⊗ I.
    pub coideal: bool,
    pub counit_vanishes: bool,
    pub antipode_stable: bool,
}

impl HopfIdealCheck {
    pub fn passed(&self) -> bool {
        self.coideal && self.counit_vanishes && self.antipode_stable
    }
}

/// Whether a two-sided ideal is a Hopf ideal. The coideal test is (π ⊗ π)Δ(v) = 0 for the
/// projection π onto H / I.
pub fn hopf_ideal_check(alg: &Algebra, ideal: &Subspace) -> HopfIdealCheck {
    let f = alg.field();
    let dim = alg.dim();
    let k = dim - ideal.dim();
    let unit_vec = |u: usize| {
        let mut v = zero_vector(f, dim);
        v[u] = f.one();
        ideal.quotient_coords(&v)
    };
    let proj: Vec<Vector> = (0..dim).into_par_iter().map(unit_vec).collect();
    let per: Vec<(bool, bool, bool)> = ideal
        .basis()
        .par_iter()
        .map(|v| {
            let x = elt(v);
            let mut image = vec![f.zero(); k * k];
            for ((a, b), c) in alg.coproduct(&x).iter() {
                for (i, pa) in proj[*a].iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                    let ca = c * pa;
                    for (j, pb) in proj[*b].iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                        image[i * k + j].add_mul(&ca, pb);
                    }
                }
            }
            let coideal = image.iter().all(CycloNum::is_zero);
            let counit = alg.counit(&x).is_zero();
            let antipode = ideal.contains(&dense(f, &alg.antipode(&x), dim));
            (coideal, counit, antipode)
        })
        .collect();
    HopfIdealCheck {
        coideal: per.iter().all(|r| r.0),
        counit_vanishes: per.iter().all(|r| r.1),
        antipode_stable: per.iter().all(|r| r.2),
    }
}

fn stacked_kernel(field: &'static CycloField, dim: usize, blocks: Vec<SparseMat>) -> Subspace {
    let mut rows: Vec<Vector> = Vec::new();
    for b in blocks {
        for i in 0..b.nrows() {
            if b.row(i).is_empty() {
                continue;
            }
            let mut r = zero_vector(field, dim);
            for (j, v) in b.row(i) {
                r[*j] = v.clone();
            }
            rows.push(r);
        }
    }
    let e = rref_rows(rows, dim);
    let m = Mat::from_rows(field, e.rows, dim).expect("width");
    m.kernel_basis()
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegralReport {
    pub algebra: String,
    pub left_integral_dim: usize,
    pub right_integral_dim: usize,
    pub left_integral: Vec<String>,
    pub right_integral: Vec<String>,
    pub unimodular: bool,
    pub s2_inner_by_b: bool,
    pub s2_inner_by_c: bool,
}

/// Left integrals (uΛ = ε(u)Λ), right integrals (Λu = ε(u)Λ), unimodularity, and whether
/// S²(x) = b x b^{-1} = c x c^{-1} on the whole basis.
pub fn integrals_and_symmetry(alg: &Algebra) -> Result<IntegralReport> {
    require_abcd(alg)?;
    let f = alg.field();
    let dim = alg.dim();
    let shifted = |m: SparseMat, g: usize| m.sub(&SparseMat::scalar(f, dim, alg.gen_counit(g))).expect("square");
    let left = stacked_kernel(f, dim, (0..4).map(|g| shifted(alg.left_mult_matrix(g), g)).collect());
    let right = stacked_kernel(f, dim, (0..4).map(|g| shifted(alg.right_mult_matrix(g), g)).collect());
    let inner_by = |g: usize| {
        let gi = alg.gen_index(g);
        (0..dim).into_par_iter().all(|u| {
            let s2 = alg.antipode(&alg.antipode_basis(u));
            right_mul_by(alg, &s2, gi) == *alg.mul_basis(gi, u)
        })
    };
    let show = |s: &Subspace| s.basis().iter().map(|v| alg.format_elt(&elt(v))).collect();
    Ok(IntegralReport {
        algebra: alg.spec().name(),
        left_integral_dim: left.dim(),
        right_integral_dim: right.dim(),
        left_integral: show(&left),
        right_integral: show(&right),
        unimodular: left == right,
        s2_inner_by_b: inner_by(1),
        s2_inner_by_c: inner_by(2),
    })
}

/// Center of the algebra, as the common kernel of L_g − R_g over the generators.
pub fn center(alg: &Algebra) -> Subspace {
    let f = alg.field();
    let dim = alg.dim();
    let blocks = (0..alg.ngen()).map(|g| alg.left_mult_matrix(g).sub(&alg.right_mult_matrix(g)).expect("square")).collect();
    stacked_kernel(f, dim, blocks)
}

/// Structure constants of a subalgebra given by a subspace, in its echelon basis:
/// result[i][j] are the coordinates of z_i z_j.
fn subalgebra_products(alg: &Algebra, z: &Subspace) -> Result<Vec<Vec<Vector>>> {
    let f = alg.field();
    let dim = alg.dim();
    let elts: Vec<AlgElt> = z.basis().iter().map(|v| elt(v)).collect();
    let k = elts.len();
    (0..k)
        .into_par_iter()
        .map(|i| {
            (0..k)
                .map(|j| {
                    let p = dense(f, &alg.mul(&elts[i], &elts[j]), dim);
                    z.coords(&p).ok_or_else(|| Error::Check("subspace is not closed under multiplication".into()))
                })
                .collect()
        })
        .collect()
}

/// Radical of a subalgebra given by structure constants, as a subspace of its coordinate space.
fn radical_from_constants(field: &'static CycloField, prods: &[Vec<Vector>]) -> Subspace {
    let k = prods.len();
    let traces: Vec<CycloNum> = (0..k)
        .map(|i| {
            let mut t = field.zero();
            for (j, row) in prods[i].iter().enumerate() {
                t += &row[j];
            }
            t
        })
        .collect();
    let mut gram = Mat::zeros(field, k, k);
    for i in 0..k {
        for j in 0..k {
            let mut acc = field.zero();
            for (c, t) in prods[i][j].iter().zip(&traces) {
                if !c.is_zero() && !t.is_zero() {
                    acc.add_mul(c, t);
                }
            }
            gram.set(i, j, acc);
        }
    }
    bilinear_radical(&gram).expect("square")
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralIdempotentCheck {
    pub family: IdempotentCheck,
    pub central: bool,
    /// dim of the semisimple part of e_i·Z for each i; all ones means each e_i is primitive.
    pub semisimple_part_dims: Vec<usize>,
    pub primitive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub algebra: String,
    pub center_dim: usize,
    pub center_radical_dim: usize,
    pub block_count: usize,
    pub central_idempotents: Option<CentralIdempotentCheck>,
}

/// The central idempotents e_i = Σ_j e_{i+j, j} of H_n(0,q).
pub fn h0_central_idempotents(alg: &Algebra) -> Result<Vec<AlgElt>> {
    let n = alg.order();
    let e = group_idempotents(alg)?;
    Ok((0..n)
        .map(|i| {
            let mut s = AlgElt::zero();
            for j in 0..n {
                s = s.add(&e[((i + j) % n) * n + j]);
            }
            s
        })
        .collect())
}

/// Center, its radical, and the number of blocks dim Z − dim rad Z. For H_n(0,q) the explicit
/// central idempotents are also checked.
pub fn center_and_blocks(alg: &Algebra) -> Result<CenterReport> {
    let f = alg.field();
    let dim = alg.dim();
    let z = center(alg);
    let prods = subalgebra_products(alg, &z)?;
    let rad_coords = radical_from_constants(f, &prods);
    let block_count = z.dim() - rad_coords.dim();

    let central_idempotents = if alg.spec().is_h0() {
        let es = h0_central_idempotents(alg)?;
        let family = check_idempotent_family(alg, &es);
        let central = es.iter().all(|e| z.contains(&dense(f, e, dim)));
        // rad Z as vectors of the algebra.
        let rad: Vec<Vector> = rad_coords
            .basis()
            .iter()
            .map(|c| {
                let mut v = zero_vector(f, dim);
                for (ci, zb) in c.iter().zip(z.basis()) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(zb) {
                        x.add_mul(ci, y);
                    }
                }
                v
            })
            .collect();
        let rad = Subspace::from_vectors(f, dim, rad);
        let dims: Vec<usize> = es
            .iter()
            .map(|e| {
                let ez = Subspace::from_vectors(
                    f,
                    dim,
                    z.basis().iter().map(|zb| dense(f, &alg.mul(e, &elt(zb)), dim)).collect::<Vec<_>>(),
                );
                ez.dim() - ez.intersect(&rad).dim()
            })
            .collect();
        let primitive = dims.iter().all(|&d| d == 1);
        Some(CentralIdempotentCheck { family, central, semisimple_part_dims: dims, primitive })
    } else {
        None
    };
    Ok(CenterReport {
        algebra: alg.spec().name(),
        center_dim: z.dim(),
        center_radical_dim: rad_coords.dim(),
        block_count,
        central_idempotents,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockIsoReport {
    pub n: usize,
    pub block_dims: Vec<usize>,
    pub bases_independent: bool,
    pub unit_is_block_idempotent: bool,
    pub tables_identical: bool,
    pub first_mismatch: Option<String>,
    pub passed: bool,
}

/// For H_n(0,q): each block H·e_i has basis {a^j d^k b^l e_i}, and all blocks share one
/// structure-constant table under the correspondence of these bases.
pub fn blocks_isomorphic_h0(alg: &Algebra) -> Result<BlockIsoReport> {
    if !alg.spec().is_h0() {
        return Err(Error::InvalidSpec("block comparison applies to hpq with p = 0".into()));
    }
    let f = alg.field();
    let n = alg.order();
    let dim = alg.dim();
    let es = h0_central_idempotents(alg)?;
    let labels: Vec<[u8; 3]> =
        (0..n).flat_map(|j| (0..n).flat_map(move |k| (0..n).map(move |l| [j as u8, k as u8, l as u8]))).collect();
    let mut tables: Vec<Vec<Vec<Vector>>> = Vec::new();
    let mut block_dims = Vec::new();
    let mut independent = true;
    let mut unit_ok = true;
    for e in &es {
        let basis: Vec<AlgElt> = labels
            .iter()
            .map(|&[j, k, l]| {
                let m = alg.mul(&alg.monomial(&[j, 0, 0, k]), &alg.monomial(&[0, l, 0, 0]));
                alg.mul(&m, e)
            })
            .collect();
        let vecs: Vec<Vector> = basis.iter().map(|b| dense(f, b, dim)).collect();
        let block = Subspace::from_vectors(f, dim, vecs.clone());
        block_dims.push(block.dim());
        let coords = match crate::linalg::BasisCoords::new(f, dim, &vecs) {
            Ok(c) => c,
            Err(_) => {
                independent = false;
                continue;
            }
        };
        unit_ok &= basis[0] == *e;
        let table: Result<Vec<Vec<Vector>>> = basis
            .par_iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| {
                        coords
                            .coords(&dense(f, &alg.mul(x, y), dim))
                            .ok_or_else(|| Error::Check("block is not closed under multiplication".into()))
                    })
                    .collect()
            })
            .collect();
        tables.push(table?);
    }
    let mut first_mismatch = None;
    if independent {
        'outer: for (i, t) in tables.iter().enumerate().skip(1) {
            for (x, row) in t.iter().enumerate() {
                for (y, c) in row.iter().enumerate() {
                    if *c != tables[0][x][y] {
                        first_mismatch = Some(format!("block {i}: product of basis {:?} and {:?}", labels[x], labels[y]));
                        break 'outer;
                    }
                }
            }
        }
    }
    let tables_identical = independent && first_mismatch.is_none();
    let n3 = n * n * n;
    Ok(BlockIsoReport {
        n,
        passed: tables_identical && unit_ok && block_dims.iter().all(|&d| d == n3),
        block_dims,
        bases_independent: independent,
        unit_is_block_idempotent: unit_ok,
        tables_identical,
        first_mismatch,
    })
}
