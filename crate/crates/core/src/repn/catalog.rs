use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::discover::{search_simples, split_ideal, SimpleSearch};
use super::graded::to_weight_basis;
use super::hom::hom_dim;
use super::label::Label;
use super::layers::{filtration_by_homs, radical_by_homs, Filtration};
use super::module::{one_dim, projective_p, simple_s, tensor_module, Module};
use crate::error::{Error, Result};
use crate::hopf::{Algebra, FiniteAlgebra};
use crate::linalg::Mat;

/// Retry budget for the randomized splitting of left ideals.
pub const MAX_SPLIT_ATTEMPTS: usize = 64;

/// Multiplicities of simples (a_S) and of projective covers (b_T) in a module that is a
/// direct sum of simples and projectives.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecompVector {
    pub simple_mults: BTreeMap<Label, usize>,
    pub proj_mults: BTreeMap<Label, usize>,
}

impl DecompVector {
    pub fn is_empty(&self) -> bool {
        self.simple_mults.is_empty() && self.proj_mults.is_empty()
    }

    /// All multiplicities keyed by class label.
    pub fn classes(&self) -> BTreeMap<Label, usize> {
        self.simple_mults.iter().chain(&self.proj_mults).map(|(l, m)| (*l, *m)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CartanMatrix {
    pub labels: Vec<Label>,
    /// entries[t][s] = [P(t) : s].
    pub entries: Vec<Vec<usize>>,
}

/// How labels V(l, r) were attached to the simples of the p = 1 algebra.
#[derive(Clone, Debug, Serialize)]
pub struct CalibrationReport {
    /// Labels in the order the search found the simples.
    pub labels_in_search_order: Vec<Label>,
    /// Weight (i, j) of V(1,1): b acts by q^i, c by q^j.
    pub x_weight: (usize, usize),
    /// Two-dimensional simples passed over because the one-dimensional summand of
    /// their square does not generate all one-dimensional classes.
    pub skipped_two_dim: usize,
    pub one_dim_closed_form_agrees: bool,
    pub splitting_attempts: Vec<usize>,
    pub note: String,
}

/// Simples and indecomposable projectives of one algebra, with the Cartan matrix.
pub struct Catalog {
    alg: Arc<Algebra>,
    simples: Vec<Module>,
    pims: Vec<Module>,
    projective_simple: Vec<bool>,
    proj_labels: Vec<Option<Label>>,
    cartan: Vec<Vec<usize>>,
    pim_tops: Vec<Vec<usize>>,
    nonproj: Vec<usize>,
    solver: Mat,
    calibration: Option<CalibrationReport>,
}

fn identify(alg: &Algebra, simples: &[Module], m: &Module) -> Result<Option<usize>> {
    for (s, t) in simples.iter().enumerate() {
        if t.dim() == m.dim() && hom_dim(alg, m, t)? > 0 {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct Assigner {
    labels: Vec<Option<Label>>,
}

impl Assigner {
    fn set(&mut self, s: Option<usize>, l: Label) -> Result<usize> {
        let s = s.ok_or_else(|| Error::Calibration(format!("no simple matches {l}")))?;
        match self.labels[s] {
            Some(old) if old != l => Err(Error::Calibration(format!("simple labeled both {old} and {l}"))),
            _ => {
                self.labels[s] = Some(l);
                Ok(s)
            }
        }
    }
}

/// Attaches labels V(l, r): V(1,1) is the one-dimensional summand of T ⊗ T for a
/// two-dimensional simple T = V(2,0), V(1,r) = V(1,1)^r, V(l+1,0) is the
/// (l+1)-dimensional summand of V(2,0) ⊗ V(l,0), and V(l,r) = V(l,0) ⊗ V(1,r).
fn calibrate(alg: &Algebra, search: &SimpleSearch) -> Result<(Vec<Label>, CalibrationReport)> {
    let n = alg.order();
    let sims = &search.simples;
    let mut dims_count = vec![0; n + 1];
    for s in sims {
        if s.dim() == 0 || s.dim() > n {
            return Err(Error::Calibration(format!("simple of dimension {}", s.dim())));
        }
        dims_count[s.dim()] += 1;
    }
    if sims.len() != n * n || dims_count[1..].iter().any(|&c| c != n) {
        return Err(Error::Calibration(format!("found {} simples with dimension counts {:?}", sims.len(), &dims_count[1..])));
    }

    // The characters b ↦ q^r, c ↦ q^{-r}.
    let mut closed = Vec::with_capacity(n);
    for r in 0..n {
        closed.push(identify(alg, sims, &one_dim(alg, r, (n - r) % n, None)?)?);
    }
    let mut seen: Vec<usize> = closed.iter().flatten().copied().collect();
    seen.sort_unstable();
    seen.dedup();
    let one_dim_closed_form_agrees = seen.len() == n && closed.iter().all(Option::is_some);

    let mut skipped = 0;
    let mut chosen = None;
    for (t, tm) in sims.iter().enumerate().filter(|(_, s)| s.dim() == 2) {
        let sq = tensor_module(alg, tm, tm)?;
        let mut ones = Vec::new();
        for (s, sm) in sims.iter().enumerate().filter(|(_, s)| s.dim() == 1) {
            if hom_dim(alg, &sq, sm)? > 0 {
                ones.push(s);
            }
        }
        let [x] = ones[..] else {
            return Err(Error::Calibration(format!("square of a 2-dimensional simple has {} one-dimensional summands", ones.len())));
        };
        let r = closed.iter().position(|c| *c == Some(x));
        match r {
            Some(r) if gcd(r, n) == 1 => {
                chosen = Some((t, x));
                break;
            }
            _ => skipped += 1,
        }
    }
    let (t, x) = chosen.ok_or_else(|| Error::Calibration("no 2-dimensional simple yields a generating V(1,1)".into()))?;

    let mut asg = Assigner { labels: vec![None; sims.len()] };
    let mut cur = one_dim(alg, 0, 0, None)?;
    let mut v1 = Vec::with_capacity(n);
    for r in 0..n {
        let s = identify(alg, sims, &cur)?;
        v1.push(asg.set(s, Label::V(1, r))?);
        cur = tensor_module(alg, &cur, &sims[x])?;
    }
    let mut v0 = vec![v1[0], t];
    asg.set(Some(t), Label::V(2, 0))?;
    for l in 2..n {
        let prod = tensor_module(alg, &sims[t], &sims[v0[l - 1]])?;
        let mut hits = Vec::new();
        for (s, sm) in sims.iter().enumerate().filter(|(_, s)| s.dim() == l + 1) {
            if hom_dim(alg, &prod, sm)? > 0 {
                hits.push(s);
            }
        }
        let [h] = hits[..] else {
            return Err(Error::Calibration(format!("V(2,0) ⊗ V({l},0) has {} summands of dimension {}", hits.len(), l + 1)));
        };
        v0.push(asg.set(Some(h), Label::V(l + 1, 0))?);
    }
    for l in 2..=n {
        for r in 1..n {
            let prod = tensor_module(alg, &sims[v0[l - 1]], &sims[v1[r]])?;
            let s = identify(alg, sims, &prod)?;
            asg.set(s, Label::V(l, r))?;
        }
    }
    let labels: Vec<Label> = asg
        .labels
        .into_iter()
        .map(|l| l.ok_or_else(|| Error::Calibration("a simple received no label".into())))
        .collect::<Result<_>>()?;
    let xw = sims[x].weights().map_or((0, 0), |w| w[0]);
    let report = CalibrationReport {
        labels_in_search_order: labels.clone(),
        x_weight: xw,
        skipped_two_dim: skipped,
        one_dim_closed_form_agrees,
        splitting_attempts: Vec::new(),
        note: "labels are fixed up to an automorphism of the fusion ring; every verified identity is invariant".into(),
    };
    Ok((labels, report))
}

impl Catalog {
    /// Builds simples, projective covers and the Cartan matrix. The seed only drives
    /// the randomized splitting used for the p = 1 algebra.
    pub fn build(alg: Arc<Algebra>, seed: u64) -> Result<Catalog> {
        super::module::require_abcd(&alg)?;
        if alg.spec().is_h1() {
            Self::build_h1(alg, seed)
        } else {
            let n = alg.order();
            let mut simples = Vec::with_capacity(n * n);
            let mut pims = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    simples.push(simple_s(&alg, i, j)?);
                    pims.push(projective_p(&alg, i, j)?);
                }
            }
            let proj_labels = simples.iter().map(|s| match s.label() {
                Some(Label::S(i, j)) => Some(Label::P(i, j)),
                _ => None,
            });
            let proj_labels = proj_labels.collect();
            Self::finish(alg, simples, pims, proj_labels, None)
        }
    }

    fn build_h1(alg: Arc<Algebra>, seed: u64) -> Result<Catalog> {
        let n = alg.order();
        let search = search_simples(&alg)?;
        let (labels, mut report) = calibrate(&alg, &search)?;
        let k = search.simples.len();
        let mut covers: Vec<Option<Module>> = vec![None; k];
        let mut counts = vec![0usize; k];
        for piece in &search.pieces {
            let split = split_ideal(&alg, &search.simples, &search.highest, piece, seed, MAX_SPLIT_ATTEMPTS)?;
            report.splitting_attempts.push(split.attempts);
            for (s, u) in split.summands {
                counts[s] += 1;
                match &covers[s] {
                    Some(old) if old.dim() != u.dim() => {
                        return Err(Error::Check(format!("projective covers of {} with dimensions {} and {}", labels[s], old.dim(), u.dim())));
                    }
                    Some(_) => {}
                    None => covers[s] = Some(u),
                }
            }
        }
        for s in 0..k {
            if counts[s] != search.simples[s].dim() {
                return Err(Error::Check(format!("cover of {} occurs {} times in H, expected {}", labels[s], counts[s], search.simples[s].dim())));
            }
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&s| labels[s]);
        let mut simples = Vec::with_capacity(k);
        let mut pims = Vec::with_capacity(k);
        let mut proj_labels = Vec::with_capacity(k);
        for s in order {
            let Label::V(l, r) = labels[s] else { unreachable!("calibration assigns V labels") };
            let simple = search.simples[s].clone().with_label(labels[s]);
            let cover = covers[s].take().ok_or_else(|| Error::Check(format!("no projective cover for {}", labels[s])))?;
            let is_simple = cover.dim() == simple.dim();
            if is_simple != (l == n) {
                return Err(Error::Check(format!("{} has a {}-dimensional projective cover", labels[s], cover.dim())));
            }
            if is_simple {
                pims.push(simple.clone());
                proj_labels.push(None);
            } else {
                pims.push(cover.with_label(Label::Pr(l, r)));
                proj_labels.push(Some(Label::Pr(l, r)));
            }
            simples.push(simple);
        }
        Self::finish(alg, simples, pims, proj_labels, Some(report))
    }

    fn finish(
        alg: Arc<Algebra>,
        simples: Vec<Module>,
        pims: Vec<Module>,
        proj_labels: Vec<Option<Label>>,
        calibration: Option<CalibrationReport>,
    ) -> Result<Catalog> {
        let k = simples.len();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
        let homs: Vec<usize> = pairs.par_iter().map(|&(a, b)| hom_dim(&alg, &simples[a], &simples[b])).collect::<Result<_>>()?;
        if let Some(&(a, b)) = pairs.iter().zip(&homs).find(|((a, b), h)| **h != usize::from(a == b)).map(|(p, _)| p) {
            return Err(Error::Check(format!(
                "dim Hom({}, {}) = {}",
                simples[a].label().map(|l| l.to_string()).unwrap_or_default(),
                simples[b].label().map(|l| l.to_string()).unwrap_or_default(),
                homs[a * k + b]
            )));
        }
        let filts: Vec<Filtration> = pims.par_iter().map(|p| filtration_by_homs(&alg, &simples, p)).collect::<Result<_>>()?;
        let mut cartan = Vec::with_capacity(k);
        let mut pim_tops = Vec::with_capacity(k);
        for (t, fl) in filts.into_iter().enumerate() {
            let top = fl.top().map(<[usize]>::to_vec).unwrap_or_default();
            if top.iter().enumerate().any(|(s, &m)| m != usize::from(s == t)) {
                return Err(Error::Check(format!("projective cover of simple {t} does not have a simple top")));
            }
            let weighted: usize = fl.composition.iter().zip(&simples).map(|(c, s)| c * s.dim()).sum();
            if weighted != pims[t].dim() {
                return Err(Error::Check(format!("Cartan row {t} accounts for {weighted} of {} dimensions", pims[t].dim())));
            }
            cartan.push(fl.composition);
            pim_tops.push(top);
        }
        let projective_simple: Vec<bool> = proj_labels.iter().map(Option::is_none).collect();
        let nonproj: Vec<usize> = (0..k).filter(|&s| !projective_simple[s]).collect();
        let f = alg.field();
        let mut a = Mat::zeros(f, nonproj.len(), nonproj.len());
        for (r, &s) in nonproj.iter().enumerate() {
            for (c, &t) in nonproj.iter().enumerate() {
                let v = cartan[t][s] as i64 - i64::from(s == t);
                a.set(r, c, f.from_int(v));
            }
        }
        let solver = a.inverse().map_err(|_| Error::Check("C^T - I is singular on the non-projective simples".into()))?;
        Ok(Catalog { alg, simples, pims, projective_simple, proj_labels, cartan, pim_tops, nonproj, solver, calibration })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn alg_arc(&self) -> Arc<Algebra> {
        Arc::clone(&self.alg)
    }

    pub fn simples(&self) -> &[Module] {
        &self.simples
    }

    /// pims()[s] is the projective cover of simples()[s].
    pub fn pims(&self) -> &[Module] {
        &self.pims
    }

    pub fn is_projective_simple(&self, s: usize) -> bool {
        self.projective_simple[s]
    }

    pub fn simple_label(&self, s: usize) -> Label {
        self.simples[s].label().expect("catalog simples are labeled")
    }

    /// Label of the projective cover of simple s, or None when s is itself projective.
    pub fn proj_label(&self, s: usize) -> Option<Label> {
        self.proj_labels[s]
    }

    /// Basis of the projective class ring: all simples, then the projective covers
    /// that are not simple.
    pub fn basis_labels(&self) -> Vec<Label> {
        let mut out: Vec<Label> = (0..self.simples.len()).map(|s| self.simple_label(s)).collect();
        out.extend(self.proj_labels.iter().flatten());
        out
    }

    pub fn module_for(&self, l: Label) -> Result<&Module> {
        if let Some(s) = (0..self.simples.len()).find(|&s| self.simple_label(s) == l) {
            return Ok(&self.simples[s]);
        }
        if let Some(s) = (0..self.simples.len()).find(|&s| self.proj_labels[s] == Some(l)) {
            return Ok(&self.pims[s]);
        }
        Err(Error::InvalidLabel(format!("{l} for {}", self.alg.spec().name())))
    }

    pub fn cartan(&self) -> CartanMatrix {
        CartanMatrix { labels: (0..self.simples.len()).map(|s| self.simple_label(s)).collect(), entries: self.cartan.clone() }
    }

    pub fn calibration(&self) -> Option<&CalibrationReport> {
        self.calibration.as_ref()
    }

    /// dim Hom(M, S) for each simple S.
    pub fn top(&self, m: &Module) -> Result<Vec<usize>> {
        let m = self.graded(m)?;
        Ok(radical_by_homs(&self.simples, &m)?.1)
    }

    pub fn radical_filtration(&self, m: &Module) -> Result<Filtration> {
        filtration_by_homs(&self.alg, &self.simples, m)
    }

    fn graded(&self, m: &Module) -> Result<Module> {
        m.same_algebra(&self.alg)?;
        if m.is_graded() {
            Ok(m.clone())
        } else {
            Ok(to_weight_basis(&self.alg, m)?.0)
        }
    }

    /// Splits M into simples and projective covers by counting: t_S = dim Hom(M, S),
    /// c_S = [M : S], and t = a + b, c = a + Cᵀb.
    pub fn decompose(&self, m: &Module) -> Result<DecompVector> {
        if m.dim() == 0 {
            m.same_algebra(&self.alg)?;
            return Ok(DecompVector::default());
        }
        let fl = self.radical_filtration(m)?;
        let t = fl.top().expect("nonzero module has a top").to_vec();
        let c = fl.composition.clone();
        let k = self.simples.len();
        let f = self.alg.field();
        let outside = |why: String| Error::OutsideSubcategory(why);

        let rhs: Vec<_> = self.nonproj.iter().map(|&s| f.from_int(c[s] as i64 - t[s] as i64)).collect();
        let sol = self.solver.mul_vec(&rhs)?;
        let mut b = vec![0usize; k];
        for (x, &s) in sol.iter().zip(&self.nonproj) {
            let v = x
                .as_rational()
                .filter(|r| r.is_integer())
                .and_then(|r| r.to_i64())
                .ok_or_else(|| outside(format!("non-integral multiplicity {x} for the cover of {}", self.simple_label(s))))?;
            b[s] = usize::try_from(v).map_err(|_| outside(format!("negative multiplicity {v} for the cover of {}", self.simple_label(s))))?;
        }
        let mut a = vec![0usize; k];
        for s in 0..k {
            a[s] = t[s].checked_sub(b[s]).ok_or_else(|| outside(format!("negative simple multiplicity at {}", self.simple_label(s))))?;
        }

        // The pieces must reproduce both measured vectors and the dimension.
        let mut t2 = vec![0usize; k];
        let mut c2 = vec![0usize; k];
        let mut dim = 0;
        for s in 0..k {
            t2[s] += a[s];
            c2[s] += a[s];
            dim += a[s] * self.simples[s].dim();
            if b[s] > 0 {
                for u in 0..k {
                    t2[u] += b[s] * self.pim_tops[s][u];
                    c2[u] += b[s] * self.cartan[s][u];
                }
                dim += b[s] * self.pims[s].dim();
            }
        }
        if t2 != t || c2 != c || dim != m.dim() {
            return Err(outside(format!("pieces give top {t2:?}, composition {c2:?}, dimension {dim}; measured {t:?}, {c:?}, {}", m.dim())));
        }

        let mut out = DecompVector::default();
        for s in 0..k {
            if a[s] > 0 {
                out.simple_mults.insert(self.simple_label(s), a[s]);
            }
            if b[s] > 0 {
                let l = self.proj_labels[s].expect("projective simples have b = 0");
                out.proj_mults.insert(l, b[s]);
            }
        }
        Ok(out)
    }

    /// Decomposition of M ⊗ N.
    pub fn decompose_tensor(&self, m: &Module, n: &Module) -> Result<DecompVector> {
        self.decompose(&tensor_module(&self.alg, m, n)?)
    }
}
