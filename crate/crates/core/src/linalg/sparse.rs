use super::dense::Mat;
use super::subspace::{zero_vector, Vector};
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};

/// Row-sparse matrix. Each row holds strictly increasing column indices and no zeros,
/// so structural equality is matrix equality.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMat {
    field: &'static CycloField,
    cols: usize,
    rows: Vec<Vec<(usize, CycloNum)>>,
}

impl std::fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SparseMat {}x{} ({} nonzeros)", self.nrows(), self.cols, self.nnz())
    }
}

fn push_entry(row: &mut Vec<(usize, CycloNum)>, j: usize, v: CycloNum) {
    if !v.is_zero() {
        row.push((j, v));
    }
}

impl SparseMat {
    pub fn zeros(field: &'static CycloField, rows: usize, cols: usize) -> Self {
        SparseMat { field, cols, rows: vec![Vec::new(); rows] }
    }

    pub fn identity(field: &'static CycloField, n: usize) -> Self {
        Self::scalar(field, n, &field.one())
    }

    pub fn scalar(field: &'static CycloField, n: usize, s: &CycloNum) -> Self {
        let mut m = Self::zeros(field, n, n);
        if !s.is_zero() {
            for (i, r) in m.rows.iter_mut().enumerate() {
                r.push((i, s.clone()));
            }
        }
        m
    }

    /// Diagonal matrix; zero entries are dropped.
    pub fn diagonal(field: &'static CycloField, diag: Vec<CycloNum>) -> Self {
        let n = diag.len();
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, d)| if d.is_zero() { vec![] } else { vec![(i, d)] })
            .collect();
        SparseMat { field, cols: n, rows }
    }

    /// Builds from (row, col, value) triples; repeated positions are summed.
    pub fn from_triplets(
        field: &'static CycloField,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, CycloNum)>,
    ) -> Result<Self> {
        let mut acc: Vec<std::collections::BTreeMap<usize, CycloNum>> = vec![Default::default(); rows];
        for (i, j, v) in entries {
            if i >= rows || j >= cols {
                return Err(Error::Dimension(format!("entry ({i}, {j}) outside {rows}x{cols}")));
            }
            let e = acc[i].entry(j).or_insert_with(|| field.zero());
            *e += &v;
        }
        let rows = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMat { field, cols, rows })
    }

    pub fn from_dense(m: &Mat) -> Self {
        let rows = (0..m.nrows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMat { field: m.field(), cols: m.ncols(), rows }
    }

    pub fn to_dense(&self) -> Mat {
        let mut m = Mat::zeros(self.field, self.nrows(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, CycloNum)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> CycloNum {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Whether the matrix is diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.iter().all(|(j, _)| *j == i))
    }

    pub fn transpose(&self) -> SparseMat {
        let mut rows = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                rows[*j].push((i, v.clone()));
            }
        }
        SparseMat { field: self.field, cols: self.nrows(), rows }
    }

    pub fn apply(&self, v: &[CycloNum]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        self.rows
            .iter()
            .map(|r| {
                let mut acc = self.field.zero();
                for (j, a) in r {
                    if !v[*j].is_zero() {
                        acc.add_mul(a, &v[*j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.cols != other.nrows() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.cols,
                other.nrows(),
                other.cols
            )));
        }
        let mut scratch = zero_vector(self.field, other.cols);
        let mut touched = vec![false; other.cols];
        let mut rows = Vec::with_capacity(self.nrows());
        for r in &self.rows {
            let mut idx = Vec::new();
            for (k, a) in r {
                for (j, b) in &other.rows[*k] {
                    if !touched[*j] {
                        touched[*j] = true;
                        idx.push(*j);
                    }
                    scratch[*j].add_mul(a, b);
                }
            }
            idx.sort_unstable();
            let mut out = Vec::with_capacity(idx.len());
            for j in idx {
                touched[j] = false;
                let v = std::mem::replace(&mut scratch[j], self.field.zero());
                push_entry(&mut out, j, v);
            }
            rows.push(out);
        }
        Ok(SparseMat { field: self.field, cols: other.cols, rows })
    }

    fn merge(&self, other: &SparseMat, sign: bool) -> Result<SparseMat> {
        if self.nrows() != other.nrows() || self.cols != other.cols {
            return Err(Error::Dimension("shape mismatch in sparse sum".into()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut k) = (0, 0);
                while i < a.len() || k < b.len() {
                    let ja = a.get(i).map_or(usize::MAX, |e| e.0);
                    let jb = b.get(k).map_or(usize::MAX, |e| e.0);
                    let bv = |v: &CycloNum| if sign { v.clone() } else { -v };
                    if ja < jb {
                        out.push(a[i].clone());
                        i += 1;
                    } else if jb < ja {
                        out.push((jb, bv(&b[k].1)));
                        k += 1;
                    } else {
                        let v = if sign { &a[i].1 + &b[k].1 } else { &a[i].1 - &b[k].1 };
                        push_entry(&mut out, ja, v);
                        i += 1;
                        k += 1;
                    }
                }
                out
            })
            .collect();
        Ok(SparseMat { field: self.field, cols: self.cols, rows })
    }

    pub fn add(&self, other: &SparseMat) -> Result<SparseMat> {
        self.merge(other, true)
    }

    pub fn sub(&self, other: &SparseMat) -> Result<SparseMat> {
        self.merge(other, false)
    }

    pub fn scale(&self, s: &CycloNum) -> SparseMat {
        if s.is_zero() {
            return Self::zeros(self.field, self.nrows(), self.cols);
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v * s)).collect()).collect();
        SparseMat { field: self.field, cols: self.cols, rows }
    }

    /// Kronecker product; row index of (i, k) is i * other.rows + k.
    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let (or, oc) = (other.nrows(), other.cols);
        let mut rows = Vec::with_capacity(self.nrows() * or);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut out = Vec::with_capacity(ra.len() * rb.len());
                for (j, a) in ra {
                    for (l, b) in rb {
                        out.push((j * oc + l, a * b));
                    }
                }
                rows.push(out);
            }
        }
        SparseMat { field: self.field, cols: self.cols * oc, rows }
    }

    pub fn direct_sum(&self, other: &SparseMat) -> SparseMat {
        let mut rows = self.rows.clone();
        let off = self.cols;
        rows.extend(other.rows.iter().map(|r| r.iter().map(|(j, v)| (j + off, v.clone())).collect()));
        SparseMat { field: self.field, cols: self.cols + other.cols, rows }
    }

    pub fn pow(&self, mut e: u64) -> Result<SparseMat> {
        if self.nrows() != self.cols {
            return Err(Error::Dimension("power of non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = SparseMat::identity(self.field, self.cols);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> CycloNum {
        let mut t = self.field.zero();
        for i in 0..self.nrows().min(self.cols) {
            t += &self.get(i, i);
        }
        t
    }

    /// Sub-block with the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SparseMat {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let out = rows
            .iter()
            .map(|&i| {
                let mut r: Vec<(usize, CycloNum)> = self.rows[i]
                    .iter()
                    .filter(|(j, _)| pos[*j] != usize::MAX)
                    .map(|(j, v)| (pos[*j], v.clone()))
                    .collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        SparseMat { field: self.field, cols: cols.len(), rows: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::cyclo_field;

    #[test]
    fn sparse_matches_dense() {
        let f = cyclo_field(5).unwrap();
        let q = f.q();
        let mut a = Mat::from_ints(f, &[&[1, 0, 2], &[0, 0, 0], &[3, 1, 0]]);
        a.set(1, 2, q.clone());
        let b = Mat::from_ints(f, &[&[0, 1], &[1, 1], &[2, 0]]);
        let (sa, sb) = (SparseMat::from_dense(&a), SparseMat::from_dense(&b));
        assert_eq!(sa.mul(&sb).unwrap().to_dense(), a.mul(&b).unwrap());
        assert_eq!(sa.kron(&sb).to_dense(), a.kronecker(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert_eq!(sa.sub(&sa).unwrap(), SparseMat::zeros(f, 3, 3));
        assert_eq!(sa.add(&sa).unwrap().to_dense(), a.scale(&f.from_int(2)));
        assert_eq!(sa.pow(3).unwrap().to_dense(), a.pow(3).unwrap());
        assert_eq!(sa.trace(), a.trace().unwrap());
    }
}
