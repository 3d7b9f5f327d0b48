use std::collections::BTreeMap;

use crate::cyclo::{CycloField, CycloNum};
use crate::linalg::{zero_vector, Vector};

/// Finitely supported linear combination of basis keys. No zero coefficients are stored,
/// so structural equality is equality of elements.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparseElt<K: Ord> {
    terms: BTreeMap<K, CycloNum>,
}

/// Element of an algebra in its PBW basis.
pub type AlgElt = SparseElt<usize>;
/// Element of H ⊗ H on pairs of basis indices.
pub type TensorElt = SparseElt<(usize, usize)>;
/// Element of H ⊗ H ⊗ H.
pub type Tensor3Elt = SparseElt<(usize, usize, usize)>;

impl<K: Ord + Copy + std::fmt::Debug> std::fmt::Debug for SparseElt<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})*{k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<K: Ord + Copy> SparseElt<K> {
    pub fn zero() -> Self {
        SparseElt { terms: BTreeMap::new() }
    }

    pub fn term(k: K, c: CycloNum) -> Self {
        let mut e = Self::zero();
        e.add_term(k, &c);
        e
    }

    pub fn basis(field: &'static CycloField, k: K) -> Self {
        Self::term(k, field.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Option<&CycloNum> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &CycloNum)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &Self, s: &CycloNum) {
        if s.is_zero() {
            return;
        }
        let unit = s.is_one();
        for (k, c) in &other.terms {
            if unit {
                self.add_term(*k, c);
            } else {
                self.add_term(*k, &(c * s));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &other.terms {
            r.add_term(*k, c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &other.terms {
            r.add_term(*k, &-c);
        }
        r
    }

    pub fn scale(&self, s: &CycloNum) -> Self {
        let mut r = Self::zero();
        r.add_scaled(self, s);
        r
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<L: Ord + Copy>(&self, f: impl Fn(K) -> SparseElt<L>) -> SparseElt<L> {
        let mut r = SparseElt::zero();
        for (k, c) in &self.terms {
            r.add_scaled(&f(*k), c);
        }
        r
    }
}

impl AlgElt {
    pub fn to_dense(&self, field: &'static CycloField, dim: usize) -> Vector {
        let mut v = zero_vector(field, dim);
        for (k, c) in self.iter() {
            v[*k] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[CycloNum]) -> Self {
        let mut e = Self::zero();
        for (k, c) in v.iter().enumerate() {
            e.add_term(k, c);
        }
        e
    }
}

/// Noncommutative polynomial in the generators: a sum of coefficient times word.
#[derive(Clone, Debug)]
pub struct NcPoly {
    pub terms: Vec<(CycloNum, Vec<usize>)>,
}

impl NcPoly {
    /// Evaluates the polynomial in any target that supplies the generators.
    pub fn eval<T: RelTarget>(&self, t: &T) -> T::V {
        let mut acc = t.zero();
        for (c, word) in &self.terms {
            let mut m = t.one();
            for &g in word {
                m = t.mul(&m, &t.gen(g));
            }
            acc = t.add(&acc, &t.scale(&m, c));
        }
        acc
    }
}

/// A named defining relation `poly = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub poly: NcPoly,
}

/// A structure in which generators can be evaluated: the algebra itself, H ⊗ H via Δ,
/// scalars via ε, or matrices of a representation.
pub trait RelTarget {
    type V: Clone;
    fn zero(&self) -> Self::V;
    fn one(&self) -> Self::V;
    fn gen(&self, g: usize) -> Self::V;
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn add(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn scale(&self, x: &Self::V, c: &CycloNum) -> Self::V;
    fn is_zero(&self, x: &Self::V) -> bool;
}

/// Returns the names of the relations that do not vanish in `t`.
pub fn failing_relations<T: RelTarget>(rels: &[Relation], t: &T) -> Vec<String> {
    rels.iter().filter(|r| !t.is_zero(&r.poly.eval(t))).map(|r| r.name.clone()).collect()
}
