use std::collections::HashMap;

use super::elt::AlgElt;
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};

/// What `g^n` rewrites to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerRule {
    Zero,
    One,
}

/// Right-hand side of a commutation rule: coefficient times a normal-form monomial (exponents).
pub type RuleRhs = Vec<(CycloNum, Vec<u8>)>;

/// Rewriting system for an algebra presented by generators x_0 < ... < x_{m-1},
/// power rules x_g^n → 0 or 1, and rules x_j x_i → (normal forms) for j > i.
///
/// Normal forms are the ordered monomials x_0^{e_0}⋯x_{m-1}^{e_{m-1}} with e_g < n,
/// indexed by Σ e_g n^{m-1-g}. Left multiplication by every generator on every normal
/// form is precomputed, which fixes the product completely.
pub struct Rewriter {
    field: &'static CycloField,
    n: usize,
    ngen: usize,
    dim: usize,
    lmul: Vec<Vec<AlgElt>>,
}

struct Builder<'a> {
    field: &'static CycloField,
    n: usize,
    ngen: usize,
    power: &'a [PowerRule],
    rules: &'a HashMap<(usize, usize), RuleRhs>,
    memo: HashMap<(usize, usize), AlgElt>,
    depth_limit: usize,
}

impl Builder<'_> {
    fn exps(&self, idx: usize) -> Vec<u8> {
        exps_of(idx, self.n, self.ngen)
    }

    fn index(&self, e: &[u8]) -> usize {
        index_of(e, self.n)
    }

    fn lmul(&mut self, g: usize, idx: usize, depth: usize) -> Result<AlgElt> {
        if let Some(r) = self.memo.get(&(g, idx)) {
            return Ok(r.clone());
        }
        if depth > self.depth_limit {
            return Err(Error::NonTerminating(format!("generator {g} on normal form {idx:?}")));
        }
        let mut e = self.exps(idx);
        let h = e.iter().position(|&x| x > 0);
        let out = match h {
            Some(h) if h < g => {
                let rhs = self
                    .rules
                    .get(&(g, h))
                    .ok_or_else(|| Error::InvalidSpec(format!("no commutation rule for generators {g}, {h}")))?
                    .clone();
                e[h] -= 1;
                let rest = self.index(&e);
                let mut acc = AlgElt::zero();
                for (c, w) in &rhs {
                    let prod = self.lmul_monomial(w, rest, depth + 1)?;
                    acc.add_scaled(&prod, c);
                }
                acc
            }
            _ => {
                e[g] += 1;
                if e[g] as usize == self.n {
                    match self.power[g] {
                        PowerRule::Zero => AlgElt::zero(),
                        PowerRule::One => {
                            e[g] = 0;
                            AlgElt::basis(self.field, self.index(&e))
                        }
                    }
                } else {
                    AlgElt::basis(self.field, self.index(&e))
                }
            }
        };
        self.memo.insert((g, idx), out.clone());
        Ok(out)
    }

    /// monomial(w) · basis(idx), applying the generators of `w` from the right.
    fn lmul_monomial(&mut self, w: &[u8], idx: usize, depth: usize) -> Result<AlgElt> {
        let mut elt = AlgElt::basis(self.field, idx);
        for g in (0..self.ngen).rev() {
            for _ in 0..w[g] {
                let mut next = AlgElt::zero();
                for (k, c) in elt.iter() {
                    let p = self.lmul(g, *k, depth)?;
                    next.add_scaled(&p, c);
                }
                elt = next;
            }
        }
        Ok(elt)
    }
}

pub(crate) fn exps_of(mut idx: usize, n: usize, ngen: usize) -> Vec<u8> {
    let mut e = vec![0u8; ngen];
    for g in (0..ngen).rev() {
        e[g] = (idx % n) as u8;
        idx /= n;
    }
    e
}

pub(crate) fn index_of(e: &[u8], n: usize) -> usize {
    e.iter().fold(0, |acc, &x| acc * n + x as usize)
}

impl Rewriter {
    pub fn new(
        field: &'static CycloField,
        ngen: usize,
        power: &[PowerRule],
        rules: &HashMap<(usize, usize), RuleRhs>,
    ) -> Result<Self> {
        let n = field.order();
        if power.len() != ngen {
            return Err(Error::InvalidSpec("one power rule per generator required".into()));
        }
        let dim = n.pow(ngen as u32);
        let mut b = Builder {
            field,
            n,
            ngen,
            power,
            rules,
            memo: HashMap::new(),
            depth_limit: 8 * ngen * n + 16,
        };
        let mut lmul = Vec::with_capacity(ngen);
        for g in 0..ngen {
            let row = (0..dim).map(|idx| b.lmul(g, idx, 0)).collect::<Result<Vec<_>>>()?;
            lmul.push(row);
        }
        Ok(Rewriter { field, n, ngen, dim, lmul })
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn exps(&self, idx: usize) -> Vec<u8> {
        exps_of(idx, self.n, self.ngen)
    }

    pub fn index(&self, e: &[u8]) -> usize {
        index_of(e, self.n)
    }

    pub fn gen_index(&self, g: usize) -> usize {
        self.n.pow((self.ngen - 1 - g) as u32)
    }

    /// Generators of the normal form `idx`, left to right, with multiplicity.
    pub fn word(&self, idx: usize) -> Vec<usize> {
        let e = self.exps(idx);
        (0..self.ngen).flat_map(|g| std::iter::repeat_n(g, e[g] as usize)).collect()
    }

    pub fn lmul_gen(&self, g: usize, idx: usize) -> &AlgElt {
        &self.lmul[g][idx]
    }

    pub fn lmul_gen_elt(&self, g: usize, x: &AlgElt) -> AlgElt {
        let mut out = AlgElt::zero();
        for (k, c) in x.iter() {
            out.add_scaled(&self.lmul[g][*k], c);
        }
        out
    }

    /// Product of two normal forms.
    pub fn mul_basis(&self, u: usize, v: usize) -> AlgElt {
        let mut elt = AlgElt::basis(self.field, v);
        for g in self.word(u).into_iter().rev() {
            elt = self.lmul_gen_elt(g, &elt);
        }
        elt
    }
}
