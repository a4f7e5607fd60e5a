use std::fmt;

use crate::{Field, LinAlgError, Scalar};

/// Dense row-major matrix over an exact field.
///
/// Matrices act on column vectors, so a linear map `K^n -> K^m` is an
/// `m x n` matrix. Tensor products use the Kronecker layout: the basis vector
/// `e_i (x) e_j` of `K^a (x) K^b` sits at index `i * b + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    elems: Vec<Scalar>,
}

/// A linear map is stored as its matrix (codomain x domain).
pub type LinearMap = Mat;

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field: field.clone(),
            rows,
            cols,
            elems: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.elems[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut elems = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                elems.push(f(i, j));
            }
        }
        Mat { field: field.clone(), rows, cols, elems }
    }

    pub fn from_elems(field: &Field, rows: usize, cols: usize, elems: Vec<Scalar>) -> Result<Mat, LinAlgError> {
        if elems.len() != rows * cols {
            return Err(LinAlgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                elems.len()
            )));
        }
        if let Some(bad) = elems.iter().find(|e| !field.contains(e)) {
            return Err(LinAlgError::Parse(format!("{bad:?} is not an element of {field}")));
        }
        Ok(Mat { field: field.clone(), rows, cols, elems })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Scalar>]) -> Result<Mat, LinAlgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::Shape("ragged rows".into()));
        }
        Mat::from_elems(field, rows.len(), cols, rows.concat())
    }

    /// Convenience constructor from small integers, row-major.
    pub fn from_i64(field: &Field, rows: usize, cols: usize, vals: &[i64]) -> Mat {
        assert_eq!(vals.len(), rows * cols, "from_i64: wrong number of entries");
        Mat {
            field: field.clone(),
            rows,
            cols,
            elems: vals.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn column_vector(field: &Field, v: &[Scalar]) -> Mat {
        Mat { field: field.clone(), rows: v.len(), cols: 1, elems: v.to_vec() }
    }

    pub fn row_vector(field: &Field, v: &[Scalar]) -> Mat {
        Mat { field: field.clone(), rows: 1, cols: v.len(), elems: v.to_vec() }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "from_columns: column of wrong length");
            for i in 0..rows {
                m.elems[i * columns.len() + j] = c[i].clone();
            }
        }
        m
    }

    pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn elems(&self) -> &[Scalar] {
        &self.elems
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.elems[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.elems[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.elems[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.elems.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    fn same_field(&self, other: &Mat) -> Result<(), LinAlgError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(LinAlgError::FieldMismatch)
        }
    }

    /// `self * other`; errors on shape or field mismatch.
    pub fn try_mul(&self, other: &Mat) -> Result<Mat, LinAlgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinAlgError::Shape(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.elems[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.elems[k * other.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    f.add_mul_assign(&mut out.elems[i * other.cols + j], a, b);
                }
            }
        }
        Ok(out)
    }

    /// `self * other`.
    ///
    /// # Panics
    /// On shape or field mismatch; use [`Mat::try_mul`] for checked input.
    pub fn mul(&self, other: &Mat) -> Mat {
        self.try_mul(other).expect("matrix product")
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: vector of wrong length");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (k, x) in v.iter().enumerate() {
                let a = &self.elems[i * self.cols + k];
                if !a.is_zero() && !x.is_zero() {
                    f.add_mul_assign(o, a, x);
                }
            }
        }
        out
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat, LinAlgError> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinAlgError::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let elems = self.elems.iter().zip(&other.elems).map(|(a, b)| f.add(a, b)).collect();
        Ok(Mat { field: f.clone(), rows: self.rows, cols: self.cols, elems })
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.try_add(other).expect("matrix sum")
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat, LinAlgError> {
        self.try_add(&other.neg())
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.try_sub(other).expect("matrix difference")
    }

    pub fn neg(&self) -> Mat {
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            elems: self.elems.iter().map(|a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let f = &self.field;
        Mat {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            elems: self.elems.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    /// Adds `s * other` into `self`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Mat) {
        assert_eq!(self.shape(), other.shape(), "add_scaled: shape mismatch");
        if s.is_zero() {
            return;
        }
        let f = self.field.clone();
        for (a, b) in self.elems.iter_mut().zip(&other.elems) {
            if !b.is_zero() {
                f.add_mul_assign(a, s, b);
            }
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product; `(A (x) B)[(i1,i2),(j1,j2)] = A[i1,j1] B[i2,j2]`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let (r2, c2) = other.shape();
        let mut out = Mat::zeros(f, self.rows * r2, self.cols * c2);
        let oc = self.cols * c2;
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.elems[(i1 * r2 + i2) * oc + j1 * c2 + j2] = f.mul(a, b);
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "set_block out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.elems[(r0 + i) * self.cols + c0 + j] = block.get(i, j).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack: row count mismatch");
        let mut out = Mat::zeros(&self.field, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack: column count mismatch");
        let mut out = Mat::zeros(&self.field, self.rows + other.rows, self.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, 0, other);
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row-reduces in place, choosing pivots only among the first
    /// `pivot_cols` columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.elems[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in c..cols {
                    self.elems.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&self.elems[r * cols + c]).expect("nonzero pivot");
            for j in c..cols {
                let e = &mut self.elems[r * cols + j];
                if !e.is_zero() {
                    *e = f.mul(e, &inv);
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..cols)
                .filter_map(|j| {
                    let e = &self.elems[r * cols + j];
                    (!e.is_zero()).then(|| (j, e.clone()))
                })
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.elems[i * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                let nf = f.neg(&factor);
                for (j, v) in &pivot_row {
                    f.add_mul_assign(&mut self.elems[i * cols + j], &nf, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as the columns of a `cols x k` matrix.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = &self.field;
        let mut out = Mat::zeros(f, self.cols, free.len());
        for (k, &j) in free.iter().enumerate() {
            out.set(j, k, f.one());
            for (i, &p) in pivots.iter().enumerate() {
                let e = r.get(i, j);
                if !e.is_zero() {
                    out.set(p, k, f.neg(e));
                }
            }
        }
        out
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "solve: right-hand side of wrong length");
        let rhs = Mat::column_vector(&self.field, b);
        self.solve_mat(&rhs).map(|x| x.column(0))
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve_mat(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(rhs.rows, self.rows, "solve_mat: right-hand side of wrong height");
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref_in_place(self.cols);
        let rank = pivots.len();
        for i in rank..self.rows {
            if (self.cols..aug.cols).any(|j| !aug.get(i, j).is_zero()) {
                return None;
            }
        }
        let mut x = Mat::zeros(&self.field, self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, aug.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_mat(&Mat::identity(&self.field, self.rows))?;
        self.mul(&x).is_identity().then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Row-major vectorisation, the coordinates of `self` in `K^rows (x) K^cols`.
    pub fn vec(&self) -> Vec<Scalar> {
        self.elems.clone()
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, v: &[Scalar]) -> Mat {
        assert_eq!(v.len(), rows * cols, "from_vec: wrong length");
        Mat { field: field.clone(), rows, cols, elems: v.to_vec() }
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The swap `K^a (x) K^b -> K^b (x) K^a`.
pub fn swap_matrix(field: &Field, a: usize, b: usize) -> Mat {
    let mut m = Mat::zeros(field, a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            m.set(j * a + i, i * b + j, field.one());
        }
    }
    m
}

/// Vector in `K^a (x) K^b` with coordinates `u_i v_j`.
pub fn tensor_vectors(field: &Field, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(field.mul(a, b));
        }
    }
    out
}
