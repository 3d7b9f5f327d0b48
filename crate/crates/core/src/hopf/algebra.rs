use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::elt::{failing_relations, AlgElt, NcPoly, RelTarget, Relation, TensorElt};
use super::rewrite::{PowerRule, Rewriter, RuleRhs};
use crate::cyclo::{cyclo_field, CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;

/// Structure tables are cached once the algebra has at most this many basis elements.
const TABLE_DIM_LIMIT: usize = 256;
/// Basis triples sampled by the associativity check at construction.
const ASSOC_SAMPLES: usize = 500;
const ASSOC_SEED: u64 = 0x5eed_a550c;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// A_n(q) on generators g, x.
    Taft,
    /// A_n(q^{-1}) on generators g, x.
    TaftOpp,
    /// A_n(q) ⊗ A_n(q^{-1}) presented on a, b, c, d.
    TensorTaft,
    /// The deformation with da − q·ad = p(1 − bc).
    Hpq,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Taft => "taft",
            Family::TaftOpp => "taft-opp",
            Family::TensorTaft => "tensor-taft",
            Family::Hpq => "hpq",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "taft" => Ok(Family::Taft),
            "taft-opp" | "taftopp" => Ok(Family::TaftOpp),
            "tensor-taft" | "tensortaft" => Ok(Family::TensorTaft),
            "hpq" => Ok(Family::Hpq),
            other => Err(Error::InvalidSpec(format!("unknown family '{other}'"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub family: Family,
    pub n: usize,
    /// Deformation parameter; present exactly for `Hpq`.
    pub p: Option<CycloNum>,
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl AlgebraSpec {
    pub fn new(family: Family, n: usize, p: Option<CycloNum>) -> Result<Self> {
        let field = cyclo_field(n)?;
        match (&family, &p) {
            (Family::Hpq, None) => return Err(Error::InvalidSpec("hpq requires a parameter p".into())),
            (Family::Hpq, Some(p)) if p.field() != field => {
                return Err(Error::InvalidSpec("p must lie in the field of order n".into()))
            }
            (Family::Hpq, _) => {}
            (_, Some(_)) => return Err(Error::InvalidSpec(format!("family {family} takes no parameter p"))),
            _ => {}
        }
        Ok(AlgebraSpec { family, n, p })
    }

    pub fn taft(n: usize) -> Result<Self> {
        Self::new(Family::Taft, n, None)
    }

    pub fn taft_opp(n: usize) -> Result<Self> {
        Self::new(Family::TaftOpp, n, None)
    }

    pub fn tensor_taft(n: usize) -> Result<Self> {
        Self::new(Family::TensorTaft, n, None)
    }

    pub fn hpq(n: usize, p: i64) -> Result<Self> {
        let f = cyclo_field(n)?;
        Self::new(Family::Hpq, n, Some(f.from_int(p)))
    }

    /// Parses the parameter in the cyclotomic text format.
    pub fn parse(family: &str, n: usize, p: Option<&str>) -> Result<Self> {
        let family: Family = family.parse()?;
        let field = cyclo_field(n)?;
        let p = p.map(|s| field.parse(s)).transpose()?;
        Self::new(family, n, p)
    }

    pub fn field(&self) -> &'static CycloField {
        cyclo_field(self.n).expect("validated order")
    }

    /// Whether this is H_n(0,q).
    pub fn is_h0(&self) -> bool {
        self.family == Family::Hpq && self.p.as_ref().is_some_and(CycloNum::is_zero)
    }

    /// Whether this is H_n(p,q) with p ≠ 0.
    pub fn is_h1(&self) -> bool {
        self.family == Family::Hpq && self.p.as_ref().is_some_and(|p| !p.is_zero())
    }

    pub fn name(&self) -> String {
        match (&self.family, &self.p) {
            (Family::Hpq, Some(p)) => format!("hpq(n={}, p={})", self.n, p),
            (f, _) => format!("{f}(n={})", self.n),
        }
    }
}

/// A finite-dimensional algebra with a distinguished basis.
pub trait FiniteAlgebra: Sync {
    fn field(&self) -> &'static CycloField;
    fn dim(&self) -> usize;
    fn unit_index(&self) -> usize;
    fn mul_basis(&self, u: usize, v: usize) -> Cow<'_, AlgElt>;
    fn basis_label(&self, u: usize) -> String;

    /// Basis elements generating the algebra; used to spin ideals.
    fn generator_indices(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    fn one(&self) -> AlgElt {
        AlgElt::basis(self.field(), self.unit_index())
    }

    fn mul(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        let mut out = AlgElt::zero();
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                out.add_scaled(&self.mul_basis(*u, *v), &(cu * cv));
            }
        }
        out
    }
}

/// Basis-level Hopf structure. Everything else is extended linearly.
pub trait HopfStructure: FiniteAlgebra {
    fn coproduct_basis(&self, u: usize) -> Cow<'_, TensorElt>;
    fn counit_basis(&self, u: usize) -> CycloNum;
    fn antipode_basis(&self, u: usize) -> Cow<'_, AlgElt>;

    fn mul_tensor(&self, x: &TensorElt, y: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero();
        for ((u1, v1), c1) in x.iter() {
            for ((u2, v2), c2) in y.iter() {
                let left = self.mul_basis(*u1, *u2);
                let right = self.mul_basis(*v1, *v2);
                let c = c1 * c2;
                for (l, cl) in left.iter() {
                    let cl = &c * cl;
                    for (r, cr) in right.iter() {
                        out.add_term((*l, *r), &(&cl * cr));
                    }
                }
            }
        }
        out
    }

    fn coproduct(&self, x: &AlgElt) -> TensorElt {
        x.map_linear(|u| self.coproduct_basis(u).into_owned())
    }

    fn counit(&self, x: &AlgElt) -> CycloNum {
        let mut acc = self.field().zero();
        for (u, c) in x.iter() {
            let e = self.counit_basis(*u);
            if !e.is_zero() {
                acc.add_mul(c, &e);
            }
        }
        acc
    }

    fn antipode(&self, x: &AlgElt) -> AlgElt {
        x.map_linear(|u| self.antipode_basis(u).into_owned())
    }
}

/// A finite-dimensional Hopf algebra on the normal-form basis of a rewriting system.
pub struct Algebra {
    spec: AlgebraSpec,
    names: Vec<char>,
    rw: Rewriter,
    relations: Vec<Relation>,
    gen_delta: Vec<TensorElt>,
    gen_eps: Vec<CycloNum>,
    gen_s: Vec<AlgElt>,
    table: Option<Vec<OnceLock<AlgElt>>>,
    delta_memo: Vec<OnceLock<TensorElt>>,
    s_memo: Vec<OnceLock<AlgElt>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.spec.name(), self.dim())
    }
}

fn mono(ngen: usize, parts: &[(usize, u8)]) -> Vec<u8> {
    let mut e = vec![0u8; ngen];
    for &(g, k) in parts {
        e[g] = k;
    }
    e
}

fn poly(terms: Vec<(CycloNum, Vec<usize>)>) -> NcPoly {
    NcPoly { terms }
}

/// Generator data of a presentation, before the rewriting system is built.
struct Presentation {
    names: Vec<char>,
    power: Vec<PowerRule>,
    rules: HashMap<(usize, usize), RuleRhs>,
    relations: Vec<Relation>,
    /// Δ(g) as pairs of generator words.
    delta: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
    eps: Vec<i64>,
    /// S(g) = sign · g · h^{n-1} for the listed h, or g^{n-1} if h is None.
    antipode: Vec<(i64, Option<usize>)>,
}

fn presentation(spec: &AlgebraSpec) -> Presentation {
    let f = spec.field();
    let n = spec.n;
    let one = f.one();
    let q = f.q();
    let r = |name: &str, terms: Vec<(CycloNum, Vec<usize>)>| Relation { name: name.to_string(), poly: poly(terms) };
    let pow = |g: usize| vec![g; n];
    match spec.family {
        Family::Taft | Family::TaftOpp => {
            let qt = if spec.family == Family::Taft { q } else { f.q_pow(-1) };
            let mut rules = HashMap::new();
            rules.insert((1, 0), vec![(qt.clone(), mono(2, &[(0, 1), (1, 1)]))]);
            Presentation {
                names: vec!['g', 'x'],
                power: vec![PowerRule::One, PowerRule::Zero],
                rules,
                relations: vec![
                    r("g^n=1", vec![(one.clone(), pow(0)), (-&one, vec![])]),
                    r("x^n=0", vec![(one.clone(), pow(1))]),
                    r("xg=qgx", vec![(one.clone(), vec![1, 0]), (-&qt, vec![0, 1])]),
                ],
                delta: vec![vec![(vec![0], vec![0])], vec![(vec![1], vec![0]), (vec![], vec![1])]],
                eps: vec![1, 0],
                antipode: vec![(1, None), (-1, Some(0))],
            }
        }
        Family::TensorTaft | Family::Hpq => {
            let h = spec.family == Family::Hpq;
            let p = spec.p.clone().unwrap_or_else(|| f.zero());
            let (a, b, c, d) = (0, 1, 2, 3);
            let m = |parts: &[(usize, u8)]| mono(4, parts);
            let mut rules: HashMap<(usize, usize), RuleRhs> = HashMap::new();
            let qa = if h { q.clone() } else { one.clone() };
            rules.insert((b, a), vec![(q.clone(), m(&[(a, 1), (b, 1)]))]);
            rules.insert((c, a), vec![(qa.clone(), m(&[(a, 1), (c, 1)]))]);
            rules.insert((c, b), vec![(one.clone(), m(&[(b, 1), (c, 1)]))]);
            rules.insert((d, b), vec![(qa.clone(), m(&[(b, 1), (d, 1)]))]);
            rules.insert((d, c), vec![(q.clone(), m(&[(c, 1), (d, 1)]))]);
            let mut da = vec![(qa.clone(), m(&[(a, 1), (d, 1)]))];
            if h && !p.is_zero() {
                da.push((p.clone(), m(&[])));
                da.push((-&p, m(&[(b, 1), (c, 1)])));
            }
            rules.insert((d, a), da);
            let comm = |name: &str, x: usize, y: usize, coeff: &CycloNum| {
                r(name, vec![(one.clone(), vec![x, y]), (-coeff, vec![y, x])])
            };
            let mut relations = vec![
                comm("ba=qab", b, a, &q),
                comm(if h { "db=qbd" } else { "db=bd" }, d, b, &qa),
                comm(if h { "ca=qac" } else { "ca=ac" }, c, a, &qa),
                comm("dc=qcd", d, c, &q),
                comm("cb=bc", c, b, &one),
                r("a^n=0", vec![(one.clone(), pow(a))]),
                r("b^n=1", vec![(one.clone(), pow(b)), (-&one, vec![])]),
                r("c^n=1", vec![(one.clone(), pow(c)), (-&one, vec![])]),
                r("d^n=0", vec![(one.clone(), pow(d))]),
            ];
            if h {
                relations.push(r(
                    "da-qad=p(1-bc)",
                    vec![
                        (one.clone(), vec![d, a]),
                        (-&q, vec![a, d]),
                        (-&p, vec![]),
                        (p.clone(), vec![b, c]),
                    ],
                ));
            } else {
                relations.push(comm("da=ad", d, a, &one));
            }
            Presentation {
                names: vec!['a', 'b', 'c', 'd'],
                power: vec![PowerRule::Zero, PowerRule::One, PowerRule::One, PowerRule::Zero],
                rules,
                relations,
                delta: vec![
                    vec![(vec![a], vec![b]), (vec![], vec![a])],
                    vec![(vec![b], vec![b])],
                    vec![(vec![c], vec![c])],
                    vec![(vec![d], vec![c]), (vec![], vec![d])],
                ],
                eps: vec![0, 1, 1, 0],
                antipode: vec![(-1, Some(b)), (1, None), (1, None), (-1, Some(c))],
            }
        }
    }
}

impl Algebra {
    /// Builds the algebra and checks that the rewriting system is sound: every defining
    /// relation vanishes and the product is associative on all generator triples and on
    /// a seeded sample of basis triples.
    pub fn build(spec: &AlgebraSpec) -> Result<Algebra> {
        let field = spec.field();
        let pres = presentation(spec);
        let ngen = pres.names.len();
        let rw = Rewriter::new(field, ngen, &pres.power, &pres.rules)?;
        let dim = rw.dim();
        let table = (dim <= TABLE_DIM_LIMIT).then(|| (0..dim * dim).map(|_| OnceLock::new()).collect());
        let mut alg = Algebra {
            spec: spec.clone(),
            names: pres.names.clone(),
            rw,
            relations: pres.relations,
            gen_delta: vec![],
            gen_eps: pres.eps.iter().map(|&e| field.from_int(e)).collect(),
            gen_s: vec![],
            table,
            delta_memo: (0..dim).map(|_| OnceLock::new()).collect(),
            s_memo: (0..dim).map(|_| OnceLock::new()).collect(),
        };
        alg.check_rewriting()?;

        let word_elt = |w: &[usize]| -> usize {
            let mut e = vec![0u8; ngen];
            for &g in w {
                e[g] += 1;
            }
            alg.rw.index(&e)
        };
        alg.gen_delta = pres
            .delta
            .iter()
            .map(|terms| {
                let mut t = TensorElt::zero();
                for (l, r) in terms {
                    t.add_term((word_elt(l), word_elt(r)), &field.one());
                }
                t
            })
            .collect();
        let n = spec.n as u8;
        alg.gen_s = pres
            .antipode
            .iter()
            .enumerate()
            .map(|(g, &(sign, h))| match h {
                None => AlgElt::basis(field, alg.rw.index(&mono(ngen, &[(g, n - 1)]))),
                Some(h) => {
                    let gi = alg.rw.gen_index(g);
                    let hi = alg.rw.index(&mono(ngen, &[(h, n - 1)]));
                    alg.rw.mul_basis(gi, hi).scale(&field.from_int(sign))
                }
            })
            .collect();
        Ok(alg)
    }

    fn check_rewriting(&self) -> Result<()> {
        let failing = failing_relations(&self.relations, &AlgebraTarget(self));
        if let Some(name) = failing.first() {
            return Err(Error::RelationFailure {
                relation: name.clone(),
                detail: format!("does not vanish in {}", self.spec.name()),
            });
        }
        let ngen = self.ngen();
        let gens: Vec<usize> = (0..ngen).map(|g| self.rw.gen_index(g)).collect();
        let mut triples: Vec<(usize, usize, usize)> = Vec::new();
        for &x in &gens {
            for &y in &gens {
                for &z in &gens {
                    triples.push((x, y, z));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
        let dim = self.dim();
        for _ in 0..ASSOC_SAMPLES {
            triples.push((rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim)));
        }
        for (x, y, z) in triples {
            let f = self.field();
            let left = self.mul(&self.mul_basis(x, y), &AlgElt::basis(f, z));
            let right = self.mul(&AlgElt::basis(f, x), &self.mul_basis(y, z));
            if left != right {
                return Err(Error::NonAssociative(format!(
                    "({} {}) {} differs from {} ({} {})",
                    self.basis_label(x),
                    self.basis_label(y),
                    self.basis_label(z),
                    self.basis_label(x),
                    self.basis_label(y),
                    self.basis_label(z)
                )));
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.spec.n
    }

    pub fn ngen(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[char] {
        &self.names
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn exps(&self, u: usize) -> Vec<u8> {
        self.rw.exps(u)
    }

    pub fn index(&self, e: &[u8]) -> usize {
        self.rw.index(e)
    }

    /// The normal form with the given exponents, each below n.
    pub fn monomial(&self, e: &[u8]) -> AlgElt {
        AlgElt::basis(self.field(), self.rw.index(e))
    }

    pub fn gen_index(&self, g: usize) -> usize {
        self.rw.gen_index(g)
    }

    pub fn generator(&self, g: usize) -> AlgElt {
        AlgElt::basis(self.field(), self.rw.gen_index(g))
    }

    pub fn gen_coproduct(&self, g: usize) -> &TensorElt {
        &self.gen_delta[g]
    }

    pub fn gen_counit(&self, g: usize) -> &CycloNum {
        &self.gen_eps[g]
    }

    pub fn gen_antipode(&self, g: usize) -> &AlgElt {
        &self.gen_s[g]
    }

    /// x ↦ g·x on basis elements.
    pub fn lmul_gen(&self, g: usize, u: usize) -> &AlgElt {
        self.rw.lmul_gen(g, u)
    }

    pub fn lmul_gen_elt(&self, g: usize, x: &AlgElt) -> AlgElt {
        self.rw.lmul_gen_elt(g, x)
    }

    /// Power of an element.
    pub fn pow(&self, x: &AlgElt, k: usize) -> AlgElt {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of left multiplication by generator g (columns are images of basis elements).
    pub fn left_mult_matrix(&self, g: usize) -> SparseMat {
        let f = self.field();
        let dim = self.dim();
        let entries = (0..dim).flat_map(|u| {
            self.rw.lmul_gen(g, u).iter().map(move |(k, c)| (*k, u, c.clone())).collect::<Vec<_>>()
        });
        SparseMat::from_triplets(f, dim, dim, entries.collect::<Vec<_>>()).expect("in range")
    }

    /// Matrix of right multiplication by generator g.
    pub fn right_mult_matrix(&self, g: usize) -> SparseMat {
        let f = self.field();
        let dim = self.dim();
        let gi = self.gen_index(g);
        let mut entries = Vec::new();
        for u in 0..dim {
            for (k, c) in self.mul_basis(u, gi).iter() {
                entries.push((*k, u, c.clone()));
            }
        }
        SparseMat::from_triplets(f, dim, dim, entries).expect("in range")
    }

    /// Names of the defining relations that fail to be respected by Δ and by ε.
    pub fn check_maps_respect_relations(&self) -> (Vec<String>, Vec<String>) {
        (
            failing_relations(&self.relations, &CoproductTarget(self)),
            failing_relations(&self.relations, &CounitTarget(self)),
        )
    }

    /// Names of the defining relations that do not vanish in the algebra itself.
    pub fn check_relations(&self) -> Vec<String> {
        failing_relations(&self.relations, &AlgebraTarget(self))
    }

    pub fn format_elt(&self, x: &AlgElt) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x.iter().map(|(u, c)| format!("({c})*{}", self.basis_label(*u))).collect();
        parts.join(" + ")
    }
}

impl FiniteAlgebra for Algebra {
    fn field(&self) -> &'static CycloField {
        self.rw.field()
    }

    fn dim(&self) -> usize {
        self.rw.dim()
    }

    fn unit_index(&self) -> usize {
        0
    }

    fn mul_basis(&self, u: usize, v: usize) -> Cow<'_, AlgElt> {
        match &self.table {
            Some(t) => Cow::Borrowed(t[u * self.dim() + v].get_or_init(|| self.rw.mul_basis(u, v))),
            None => Cow::Owned(self.rw.mul_basis(u, v)),
        }
    }

    fn basis_label(&self, u: usize) -> String {
        let e = self.exps(u);
        let parts: Vec<String> = e
            .iter()
            .zip(&self.names)
            .filter(|(k, _)| **k > 0)
            .map(|(k, c)| if *k == 1 { c.to_string() } else { format!("{c}^{k}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }

    fn generator_indices(&self) -> Vec<usize> {
        (0..self.ngen()).map(|g| self.gen_index(g)).collect()
    }

    fn mul(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        if self.table.is_some() {
            let mut out = AlgElt::zero();
            for (u, cu) in x.iter() {
                for (v, cv) in y.iter() {
                    out.add_scaled(&self.mul_basis(*u, *v), &(cu * cv));
                }
            }
            return out;
        }
        // Without a table, push all of y through the word of each u at once.
        let mut out = AlgElt::zero();
        for (u, cu) in x.iter() {
            let mut part = y.clone();
            for g in self.rw.word(*u).into_iter().rev() {
                part = self.rw.lmul_gen_elt(g, &part);
            }
            out.add_scaled(&part, cu);
        }
        out
    }
}

impl HopfStructure for Algebra {
    fn coproduct_basis(&self, u: usize) -> Cow<'_, TensorElt> {
        Cow::Borrowed(self.delta_memo[u].get_or_init(|| {
            let mut e = self.exps(u);
            let Some(g) = e.iter().position(|&x| x > 0) else {
                return TensorElt::basis(self.field(), (0, 0));
            };
            e[g] -= 1;
            let rest = self.coproduct_basis(self.index(&e));
            self.mul_tensor(&self.gen_delta[g], &rest)
        }))
    }

    fn counit_basis(&self, u: usize) -> CycloNum {
        let e = self.exps(u);
        let mut acc = self.field().one();
        for (g, &k) in e.iter().enumerate() {
            if k > 0 {
                acc = &acc * &self.gen_eps[g].pow(k as u64);
            }
        }
        acc
    }

    fn antipode_basis(&self, u: usize) -> Cow<'_, AlgElt> {
        Cow::Borrowed(self.s_memo[u].get_or_init(|| {
            let mut e = self.exps(u);
            let Some(g) = e.iter().position(|&x| x > 0) else {
                return self.one();
            };
            e[g] -= 1;
            let rest = self.antipode_basis(self.index(&e));
            self.mul(&rest, &self.gen_s[g])
        }))
    }
}

/// Relation evaluation inside the algebra.
pub struct AlgebraTarget<'a>(pub &'a Algebra);

impl RelTarget for AlgebraTarget<'_> {
    type V = AlgElt;
    fn zero(&self) -> AlgElt {
        AlgElt::zero()
    }
    fn one(&self) -> AlgElt {
        self.0.one()
    }
    fn gen(&self, g: usize) -> AlgElt {
        self.0.generator(g)
    }
    fn mul(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        self.0.mul(x, y)
    }
    fn add(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        x.add(y)
    }
    fn scale(&self, x: &AlgElt, c: &CycloNum) -> AlgElt {
        x.scale(c)
    }
    fn is_zero(&self, x: &AlgElt) -> bool {
        x.is_zero()
    }
}

/// Relation evaluation in H ⊗ H on the generator coproducts.
pub struct CoproductTarget<'a>(pub &'a Algebra);

impl RelTarget for CoproductTarget<'_> {
    type V = TensorElt;
    fn zero(&self) -> TensorElt {
        TensorElt::zero()
    }
    fn one(&self) -> TensorElt {
        TensorElt::basis(self.0.field(), (0, 0))
    }
    fn gen(&self, g: usize) -> TensorElt {
        self.0.gen_delta[g].clone()
    }
    fn mul(&self, x: &TensorElt, y: &TensorElt) -> TensorElt {
        self.0.mul_tensor(x, y)
    }
    fn add(&self, x: &TensorElt, y: &TensorElt) -> TensorElt {
        x.add(y)
    }
    fn scale(&self, x: &TensorElt, c: &CycloNum) -> TensorElt {
        x.scale(c)
    }
    fn is_zero(&self, x: &TensorElt) -> bool {
        x.is_zero()
    }
}

/// Relation evaluation in the base field through ε.
pub struct CounitTarget<'a>(pub &'a Algebra);

impl RelTarget for CounitTarget<'_> {
    type V = CycloNum;
    fn zero(&self) -> CycloNum {
        self.0.field().zero()
    }
    fn one(&self) -> CycloNum {
        self.0.field().one()
    }
    fn gen(&self, g: usize) -> CycloNum {
        self.0.gen_eps[g].clone()
    }
    fn mul(&self, x: &CycloNum, y: &CycloNum) -> CycloNum {
        x * y
    }
    fn add(&self, x: &CycloNum, y: &CycloNum) -> CycloNum {
        x + y
    }
    fn scale(&self, x: &CycloNum, c: &CycloNum) -> CycloNum {
        x * c
    }
    fn is_zero(&self, x: &CycloNum) -> bool {
        x.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn da(alg: &Algebra) -> AlgElt {
        alg.mul(&alg.generator(3), &alg.generator(0))
    }

    #[test]
    fn tensor_taft_d_commutes_with_a() {
        let h = Algebra::build(&AlgebraSpec::tensor_taft(3).unwrap()).unwrap();
        assert_eq!(h.dim(), 81);
        assert_eq!(da(&h), h.monomial(&[1, 0, 0, 1]));
    }

    #[test]
    fn deformed_relation_for_p_one() {
        let h = Algebra::build(&AlgebraSpec::hpq(3, 1).unwrap()).unwrap();
        let f = h.field();
        let mut expect = h.monomial(&[1, 0, 0, 1]).scale(&f.q());
        expect.add_term(0, &f.one());
        expect.add_term(h.index(&[0, 1, 1, 0]), &f.from_int(-1));
        assert_eq!(da(&h), expect);
    }

    #[test]
    fn unit_is_two_sided() {
        for spec in [AlgebraSpec::taft(4).unwrap(), AlgebraSpec::hpq(3, 1).unwrap()] {
            let h = Algebra::build(&spec).unwrap();
            for u in 0..h.dim() {
                let b = AlgElt::basis(h.field(), u);
                assert_eq!(h.mul(&h.one(), &b), b);
                assert_eq!(h.mul(&b, &h.one()), b);
            }
        }
    }

    #[test]
    fn generator_hopf_maps() {
        let h = Algebra::build(&AlgebraSpec::tensor_taft(3).unwrap()).unwrap();
        let b = h.gen_index(1);
        assert_eq!(*h.coproduct_basis(b), TensorElt::basis(h.field(), (b, b)));
        assert!(h.counit_basis(b).is_one());
        assert_eq!(*h.antipode_basis(b), h.monomial(&[0, 2, 0, 0]));
        assert_eq!(*h.coproduct_basis(0), TensorElt::basis(h.field(), (0, 0)));
        // Δ(ad) = (a⊗b + 1⊗a)(d⊗c + 1⊗d) has four PBW⊗PBW terms.
        let ad = h.index(&[1, 0, 0, 1]);
        let expect = h.mul_tensor(h.gen_coproduct(0), h.gen_coproduct(3));
        assert_eq!(*h.coproduct_basis(ad), expect);
        assert_eq!(expect.len(), 4);
    }

    #[test]
    fn regular_generators_have_expected_orders() {
        let h = Algebra::build(&AlgebraSpec::hpq(3, 1).unwrap()).unwrap();
        let a = h.left_mult_matrix(0);
        assert!(!a.pow(2).unwrap().is_zero());
        assert!(a.pow(3).unwrap().is_zero());
        let b = h.left_mult_matrix(1);
        assert_eq!(b.pow(3).unwrap(), SparseMat::identity(h.field(), 81));
    }

    #[test]
    fn rejects_invalid_specs() {
        assert!(AlgebraSpec::hpq(2, 1).is_err());
        assert!(AlgebraSpec::new(Family::Hpq, 3, None).is_err());
        let f = cyclo_field(3).unwrap();
        assert!(AlgebraSpec::new(Family::Taft, 3, Some(f.one())).is_err());
        assert!(AlgebraSpec::parse("nope", 3, None).is_err());
    }
}
