use super::subspace::{axpy_neg, support_of, zero_vector, Subspace, Vector};
use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};

/// Dense row-major matrix over Q(ζ_n).
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: &'static CycloField,
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Outcome of Gauss-Jordan elimination: nonzero rows in RREF and their pivot columns.
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination. Pivots are chosen by lowest arithmetic cost so
/// that rational entries are preferred over dense field elements.
pub fn rref_rows(mut rows: Vec<Vector>, ncols: usize) -> Echelon {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        let mut best: Option<(usize, (usize, u64))> = None;
        for (r, row) in rows.iter().enumerate().skip(rank) {
            if !row[c].is_zero() {
                let cost = row[c].cost();
                if best.is_none_or(|(_, b)| cost < b) {
                    best = Some((r, cost));
                }
            }
        }
        let Some((r, _)) = best else { continue };
        rows.swap(rank, r);
        if !rows[rank][c].is_one() {
            let inv = rows[rank][c].inv().expect("nonzero pivot");
            for x in rows[rank].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[rank]);
        let support = support_of(&pivot_row);
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                axpy_neg(row, &f, &pivot_row, &support);
            }
        }
        rows[rank] = pivot_row;
        pivots.push(c);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Echelon { rows, pivots }
}

/// Kernel of a matrix given by its RREF rows.
pub(crate) fn kernel_from_echelon(field: &'static CycloField, e: &Echelon, ncols: usize) -> Subspace {
    let mut is_pivot = vec![false; ncols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let vecs = (0..ncols).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = zero_vector(field, ncols);
        v[f] = field.one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if !row[f].is_zero() {
                v[p] = -&row[f];
            }
        }
        v
    });
    Subspace::from_vectors(field, ncols, vecs.collect::<Vec<_>>())
}

impl Mat {
    pub fn zeros(field: &'static CycloField, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &'static CycloField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: &'static CycloField, n: usize, s: &CycloNum) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(field: &'static CycloField, rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in matrix with {cols} columns", r.len())));
            }
            data.extend(r);
        }
        Ok(Mat { field, rows: nrows, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &'static CycloField, columns: &[Vector], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Dimension(format!("column of length {} in matrix with {rows} rows", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_ints(field: &'static CycloField, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs = rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        Self::from_rows(field, vecs, cols).expect("ragged integer matrix")
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut CycloNum {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CycloNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloNum::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycloNum]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        let mut out = zero_vector(self.field, self.rows);
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    o.add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(&CycloNum, &CycloNum) -> CycloNum) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Mat { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &CycloNum) -> Mat {
        let data = self.data.iter().map(|x| x * s).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Result<CycloNum> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("trace of non-square {}x{} matrix", self.rows, self.cols)));
        }
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    pub fn pow(&self, mut e: u64) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension("power of non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field, self.rows);
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

    /// Kronecker product; row index of (i, k) is i * other.rows + k.
    pub fn kronecker(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: &'static CycloField, blocks: &[Mat], cols: usize) -> Result<Mat> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Dimension(format!("block with {} columns in stack of width {cols}", b.cols)));
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(Mat { field, rows, cols, data })
    }

    pub fn echelon(&self) -> Echelon {
        rref_rows(self.rows_vec(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Right kernel {v : Mv = 0}.
    pub fn kernel_basis(&self) -> Subspace {
        kernel_from_echelon(self.field, &self.echelon(), self.cols)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, self.transpose().rows_vec())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, self.rows_vec())
    }

    /// A particular solution of Mx = b together with the kernel, or `None` if inconsistent.
    pub fn solve(&self, b: &[CycloNum]) -> Result<Option<(Vector, Subspace)>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let aug: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let e = rref_rows(aug, self.cols + 1);
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.field, self.cols);
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some((x, self.kernel_basis())))
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                r
            })
            .collect();
        let e = rref_rows(aug, 2 * n);
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        let rows = e.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Mat::from_rows(self.field, rows, n)
    }

    /// Matrix of the restriction of `self` to an invariant subspace `w`, in the echelon basis of `w`.
    pub fn restrict(&self, w: &Subspace) -> Result<Mat> {
        let d = w.dim();
        let mut out = Mat::zeros(self.field, d, d);
        for (j, b) in w.basis().iter().enumerate() {
            let img = self.mul_vec(b)?;
            let c = w
                .coords(&img)
                .ok_or_else(|| Error::Dimension("subspace is not invariant under the map".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    /// Matrix of the map induced on K^n / w, in the basis of [`Subspace::complement_indices`].
    /// Requires `w` to be invariant.
    pub fn induced_on_quotient(&self, w: &Subspace) -> Result<Mat> {
        let comp = w.complement_indices();
        let d = comp.len();
        let mut out = Mat::zeros(self.field, d, d);
        for (j, &cj) in comp.iter().enumerate() {
            let img = self.column(cj);
            for (i, x) in w.quotient_coords(&img).into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }
}

/// Coordinates relative to a fixed linearly independent list of vectors.
pub struct BasisCoords {
    field: &'static CycloField,
    ambient: usize,
    len: usize,
    echelon: Vec<Vector>,
    pivots: Vec<usize>,
    /// Row r of the echelon form equals Σ_α transform[r][α] · basis[α].
    transform: Vec<Vector>,
}

impl BasisCoords {
    pub fn new(field: &'static CycloField, ambient: usize, basis: &[Vector]) -> Result<Self> {
        let k = basis.len();
        let rows: Vec<Vector> = basis
            .iter()
            .enumerate()
            .map(|(a, b)| {
                let mut r = b.clone();
                r.extend((0..k).map(|j| if j == a { field.one() } else { field.zero() }));
                r
            })
            .collect();
        let e = rref_rows(rows, ambient + k);
        if e.pivots.len() < k || e.pivots.iter().any(|&p| p >= ambient) {
            return Err(Error::Dimension("basis vectors are linearly dependent".into()));
        }
        let (echelon, transform) = e.rows.into_iter().map(|mut r| {
            let t = r.split_off(ambient);
            (r, t)
        }).unzip();
        Ok(BasisCoords { field, ambient, len: k, echelon, pivots: e.pivots, transform })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is outside its span.
    pub fn coords(&self, v: &[CycloNum]) -> Option<Vector> {
        let mut rest = v.to_vec();
        let mut out = zero_vector(self.field, self.len);
        for ((row, &p), t) in self.echelon.iter().zip(&self.pivots).zip(&self.transform) {
            if rest[p].is_zero() {
                continue;
            }
            let c = rest[p].clone();
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    let x = &c * &row[j];
                    rest[j] -= &x;
                }
            }
            for (o, tv) in out.iter_mut().zip(t) {
                if !tv.is_zero() {
                    o.add_mul(&c, tv);
                }
            }
        }
        rest.iter().all(CycloNum::is_zero).then_some(out)
    }
}

/// Radical {v : B(u, v) = 0 for all u} of a bilinear form given by its Gram matrix.
pub fn bilinear_radical(gram: &Mat) -> Result<Subspace> {
    if !gram.is_square() {
        return Err(Error::Dimension(format!("Gram matrix is {}x{}", gram.nrows(), gram.ncols())));
    }
    Ok(gram.kernel_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::cyclo_field;

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        let f = cyclo_field(3).unwrap();
        let m = Mat::from_ints(f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(m.mul_vec(&k.basis()[0]).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn trace_form_of_cyclotomic_field_is_nondegenerate() {
        // Basis 1, q of Q(ζ_3); Tr(1) = 2, Tr(q) = Tr(q^2) = -1.
        let f = cyclo_field(3).unwrap();
        let gram = Mat::from_ints(f, &[&[2, -1], &[-1, -1]]);
        assert_eq!(bilinear_radical(&gram).unwrap().dim(), 0);
        let degenerate = Mat::from_ints(f, &[&[1, 1], &[1, 1]]);
        assert_eq!(bilinear_radical(&degenerate).unwrap().dim(), 1);
        assert!(bilinear_radical(&Mat::zeros(f, 2, 3)).is_err());
    }

    #[test]
    fn coordinates_in_a_given_basis() {
        let f = cyclo_field(3).unwrap();
        let b1: Vector = [1, 1, 0].iter().map(|&x| f.from_int(x)).collect();
        let b2: Vector = [0, 1, 1].iter().map(|&x| f.from_int(x)).collect();
        let bc = BasisCoords::new(f, 3, &[b1, b2]).unwrap();
        let v: Vector = [2, 5, 3].iter().map(|&x| f.from_int(x)).collect();
        assert_eq!(bc.coords(&v).unwrap(), vec![f.from_int(2), f.from_int(3)]);
        assert!(bc.coords(&[f.one(), f.zero(), f.zero()]).is_none());
        let dup: Vector = [2, 2, 0].iter().map(|&x| f.from_int(x)).collect();
        assert!(BasisCoords::new(f, 3, &[dup.clone(), dup]).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let f = cyclo_field(4).unwrap();
        let i = f.q();
        let mut m = Mat::identity(f, 2);
        m.set(0, 1, i.clone());
        m.set(1, 0, i.clone());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Mat::identity(f, 2));
        let (x, k) = m.solve(&[f.one(), f.zero()]).unwrap().unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(m.mul_vec(&x).unwrap(), vec![f.one(), f.zero()]);
        let sing = Mat::from_ints(f, &[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[f.one(), f.zero()]).unwrap().is_none());
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn restriction_and_quotient_of_nilpotent_shift() {
        let f = cyclo_field(3).unwrap();
        // e0 -> e1 -> e2 -> 0; span(e1, e2) is invariant.
        let m = Mat::from_ints(f, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let w = Subspace::from_vectors(f, 3, vec![m.column(0), m.column(1)]);
        let r = m.restrict(&w).unwrap();
        assert_eq!(r.rank(), 1);
        let q = m.induced_on_quotient(&w).unwrap();
        assert!(q.is_zero() && q.nrows() == 1);
    }
}
