use crate::cyclo::{CycloField, CycloNum};

pub type Vector = Vec<CycloNum>;

pub fn zero_vector(field: &'static CycloField, len: usize) -> Vector {
    vec![field.zero(); len]
}

pub fn is_zero_vector(v: &[CycloNum]) -> bool {
    v.iter().all(CycloNum::is_zero)
}

/// Index of the first nonzero entry.
pub fn leading_index(v: &[CycloNum]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// `dst -= f * src`, touching only the nonzero entries of `src` listed in `support`.
pub(crate) fn axpy_neg(dst: &mut [CycloNum], f: &CycloNum, src: &[CycloNum], support: &[usize]) {
    for &j in support {
        let p = f * &src[j];
        dst[j] -= &p;
    }
}

pub(crate) fn support_of(v: &[CycloNum]) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

/// A linear subspace of K^ambient, stored as a reduced row echelon basis.
///
/// The basis is canonical: two subspaces are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: &'static CycloField,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}, pivots {:?})", self.dim(), self.ambient, self.pivots)
    }
}

impl Subspace {
    pub fn zero(field: &'static CycloField, ambient: usize) -> Self {
        Subspace { field, ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(field: &'static CycloField, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = zero_vector(field, ambient);
            v[i] = field.one();
            s.basis.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn from_vectors<I>(field: &'static CycloField, ambient: usize, vecs: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the basis; zero iff `v` lies in the span.
    /// The result vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &[CycloNum]) -> Vector {
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v
    }

    pub fn reduce_in_place(&self, v: &mut [CycloNum]) {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, r) in row.iter().enumerate().skip(p) {
                if !r.is_zero() {
                    let t = &f * r;
                    v[j] -= &t;
                }
            }
        }
    }

    pub fn contains(&self, v: &[CycloNum]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[CycloNum]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.contains(v) {
            Some(c)
        } else {
            None
        }
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        self.reduce_in_place(&mut v);
        let Some(p) = leading_index(&v) else {
            return false;
        };
        if !v[p].is_one() {
            let inv = v[p].inv().expect("nonzero pivot");
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support = support_of(&v);
        for row in self.basis.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                axpy_neg(row, &f, &v, &support);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, v);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Intersection, computed from the kernel of [A | -B].
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let f = self.field;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Subspace::zero(f, self.ambient);
        }
        let mut m = super::Mat::zeros(f, self.ambient, da + db);
        for (j, v) in self.basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, da + j, -x);
            }
        }
        let ker = m.kernel_basis();
        let vecs = ker.basis().iter().map(|k| {
            let mut out = zero_vector(f, self.ambient);
            for (j, c) in k.iter().take(da).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, x) in self.basis[j].iter().enumerate() {
                    out[i].add_mul(c, x);
                }
            }
            out
        });
        Subspace::from_vectors(f, self.ambient, vecs.collect::<Vec<_>>())
    }

    /// Coordinates that are not pivots; their unit vectors give a canonical
    /// basis of the quotient K^ambient / self.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in the quotient basis given by
    /// [`Subspace::complement_indices`].
    pub fn quotient_coords(&self, v: &[CycloNum]) -> Vector {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|i| r[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::cyclo_field;

    fn v(f: &'static CycloField, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let f = cyclo_field(3).unwrap();
        let a = Subspace::from_vectors(f, 3, vec![v(f, &[1, 2, 3]), v(f, &[0, 1, 1])]);
        let b = Subspace::from_vectors(f, 3, vec![v(f, &[1, 3, 4]), v(f, &[2, 4, 6])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(f, &[1, 1, 2])));
        assert!(!a.contains(&v(f, &[0, 0, 1])));
    }

    #[test]
    fn intersection_and_sum() {
        let f = cyclo_field(4).unwrap();
        let a = Subspace::from_vectors(f, 3, vec![v(f, &[1, 0, 0]), v(f, &[0, 1, 0])]);
        let b = Subspace::from_vectors(f, 3, vec![v(f, &[0, 1, 0]), v(f, &[0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::from_vectors(f, 3, vec![v(f, &[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(f, 3));
    }

    #[test]
    fn quotient_coordinates() {
        let f = cyclo_field(3).unwrap();
        let w = Subspace::from_vectors(f, 3, vec![v(f, &[1, 1, 0])]);
        assert_eq!(w.complement_indices(), vec![1, 2]);
        assert_eq!(w.quotient_coords(&v(f, &[1, 0, 0])), v(f, &[-1, 0]));
    }
}
