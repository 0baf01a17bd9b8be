//! Dense exact matrices acting on row vectors.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Field, Scalar};
use super::LinAlgError;

/// A dense matrix over a single field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// Solution space of `a·x = b`: a particular solution and a kernel basis (as columns).
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Matrix,
    pub kernel: Matrix,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, field, data }
    }

    /// Builds a matrix from integer rows.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect(),
        )
    }

    /// A single row vector.
    pub fn row_vector(field: Field, v: Vec<Scalar>) -> Matrix {
        let n = v.len();
        Matrix { rows: 1, cols: n, field, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    t[(j, i)] = x.clone();
                }
            }
        }
        t
    }

    /// Matrix product; skips zero entries of the left factor.
    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        if o.cols == 0 {
            return out;
        }
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let orow = &o.data[k * o.cols..(k + 1) * o.cols];
                let base = i * o.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        let cell = &mut out.data[base + j];
                        *cell = cell.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
        assert_eq!(v.len(), m.rows, "dimension mismatch in vector product");
        let mut out = vec![m.field.zero(); m.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in m.row(k).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = out[j].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert!(self.rows == o.rows && self.cols == o.cols, "dimension mismatch in sum");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert!(self.rows == o.rows && self.cols == o.cols, "dimension mismatch in difference");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(Scalar::neg).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    /// Adds `c·o` in place.
    pub fn add_scaled(&mut self, c: &Scalar, o: &Matrix) {
        assert!(self.rows == o.rows && self.cols == o.cols, "dimension mismatch in sum");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a = a.add(&c.mul(b));
            }
        }
    }

    /// Kronecker product, left-factor-major: basis pair `(i,j)` has flat index `i·dim(b)+j`.
    pub fn kronecker(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o[(k, l)];
                        if !b.is_zero() {
                            out[(i * o.rows + k, j * o.cols + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        let field = parts[0].field;
        let rows = parts[0].rows;
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            out.set_block(0, off, p);
            off += p.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let field = parts[0].field;
        let cols = parts[0].cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            data.extend(p.data.iter().cloned());
            rows += p.rows;
        }
        Matrix { rows, cols, field, data }
    }

    pub fn block_diag(field: Field, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for p in parts {
            out.set_block(r, c, p);
            r += p.rows;
            c += p.cols;
        }
        out
    }

    /// Copies `b` into the block with top-left corner `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, b: &Matrix) {
        assert!(r + b.rows <= self.rows && c + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r + i, c + j)] = b[(i, j)].clone();
            }
        }
    }

    /// The submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out[(i, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { rows: rows.len(), cols: self.cols, field: self.field, data }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    /// Contiguous row range.
    pub fn row_range(&self, from: usize, to: usize) -> Matrix {
        let rows: Vec<usize> = (from..to).collect();
        self.select_rows(&rows)
    }

    /// Contiguous column range.
    pub fn col_range(&self, from: usize, to: usize) -> Matrix {
        let cols: Vec<usize> = (from..to).collect();
        self.select_cols(&cols)
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut nz: Vec<usize> = Vec::new();
        let mut prow: Vec<Scalar> = Vec::new();
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv().expect("nonzero pivot");
            nz.clear();
            prow.clear();
            for j in c..cols {
                let x = &self.data[r * cols + j];
                if !x.is_zero() {
                    let y = if j == c { self.field.one() } else { x.mul(&inv) };
                    self.data[r * cols + j] = y.clone();
                    nz.push(j);
                    prow.push(y);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, y) in nz.iter().zip(&prow) {
                    let cell = &mut self.data[i * cols + j];
                    *cell = cell.sub_mul(&f, y);
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

    /// Basis (as rows) of the row space, in reduced echelon form.
    pub fn row_space(&self) -> Matrix {
        let (r, p) = self.rref();
        r.row_range(0, p.len())
    }

    /// Basis (as rows) of `{x : self·xᵀ = 0}`, one vector per free column with a 1 there.
    pub fn right_kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols, self.field)
    }

    /// Right kernel basis together with the free columns: row `i` has a 1 at `free[i]`
    /// and 0 at every other free column.
    pub fn right_kernel_free(&self) -> (Matrix, Vec<usize>) {
        let (r, pivots) = self.rref();
        let mut is_piv = vec![false; self.cols];
        for &p in &pivots {
            is_piv[p] = true;
        }
        let free = (0..self.cols).filter(|&c| !is_piv[c]).collect();
        (kernel_from_rref(&r, &pivots, self.cols, self.field), free)
    }

    /// Basis (as rows) of `{y : y·self = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().right_kernel()
    }

    /// Solves `a·x = b` column-wise.
    pub fn solve(a: &Matrix, b: &Matrix) -> Result<Solution, LinAlgError> {
        assert_eq!(a.rows, b.rows, "solve: row mismatch");
        let aug = Matrix::hstack(&[a, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= a.cols) {
            return Err(LinAlgError::Inconsistent);
        }
        let mut part = Matrix::zeros(a.field, a.cols, b.cols);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                part[(p, j)] = r[(k, a.cols + j)].clone();
            }
        }
        let apiv: Vec<usize> = pivots.clone();
        let ra = r.col_range(0, a.cols);
        let kernel = kernel_from_rref(&ra, &apiv, a.cols, a.field).transpose();
        Ok(Solution { particular: part, kernel })
    }

    /// A particular solution of `x·a = b`.
    pub fn solve_left(a: &Matrix, b: &Matrix) -> Result<Matrix, LinAlgError> {
        Ok(Matrix::solve(&a.transpose(), &b.transpose())?.particular.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self, &Matrix::identity(self.field, n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.col_range(n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Quotient of the ambient space by the row space of `rel`.
    ///
    /// Returns `(q, s, free)`: `q` (n × f) sends each ambient basis vector to its class,
    /// `s` (f × n) is the section through the free columns, and `free` lists those columns.
    pub fn cokernel_map(rel: &Matrix) -> (Matrix, Matrix, Vec<usize>) {
        let n = rel.cols;
        let field = rel.field;
        let (r, pivots) = rel.rref();
        let mut is_piv = vec![None; n];
        for (k, &p) in pivots.iter().enumerate() {
            is_piv[p] = Some(k);
        }
        let free: Vec<usize> = (0..n).filter(|&c| is_piv[c].is_none()).collect();
        let mut q = Matrix::zeros(field, n, free.len());
        let mut s = Matrix::zeros(field, free.len(), n);
        for (j, &f) in free.iter().enumerate() {
            q[(f, j)] = field.one();
            s[(j, f)] = field.one();
        }
        for (c, piv) in is_piv.iter().enumerate() {
            if let Some(k) = piv {
                for (j, &f) in free.iter().enumerate() {
                    let x = &r[(*k, f)];
                    if !x.is_zero() {
                        q[(c, j)] = x.neg();
                    }
                }
            }
        }
        (q, s, free)
    }

    /// Pushout of `f: X→A` and `g: X→B`, returned as `(dim P, inA, inB)`.
    pub fn pushout(f: &Matrix, g: &Matrix) -> (usize, Matrix, Matrix) {
        assert_eq!(f.rows, g.rows, "pushout: domain mismatch");
        let rel = Matrix::hstack(&[f, &g.neg()]);
        let (q, _, free) = Matrix::cokernel_map(&rel);
        (free.len(), q.row_range(0, f.cols), q.row_range(f.cols, f.cols + g.cols))
    }

    /// Pullback of `f: A→Y` and `g: B→Y`, returned as `(dim Q, prA, prB)`.
    pub fn pullback(f: &Matrix, g: &Matrix) -> (usize, Matrix, Matrix) {
        assert_eq!(f.cols, g.cols, "pullback: codomain mismatch");
        let k = Matrix::vstack(&[f, &g.neg()]).left_kernel();
        (k.rows, k.col_range(0, f.rows), k.col_range(f.rows, f.rows + g.rows))
    }

    /// Entries flattened row-major.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Reshapes flattened entries.
    pub fn from_flat(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "flat data length mismatch");
        Matrix { rows, cols, field, data }
    }

    /// Square power.
    pub fn pow(&self, mut e: u32) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize], cols: usize, field: Field) -> Matrix {
    let mut is_piv = vec![false; cols];
    for &p in pivots {
        is_piv[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_piv[c]).collect();
    let mut k = Matrix::zeros(field, free.len(), cols);
    for (i, &f) in free.iter().enumerate() {
        k[(i, f)] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            let x = &r[(row, f)];
            if !x.is_zero() {
                k[(i, p)] = x.neg();
            }
        }
    }
    k
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Coordinates with respect to a fixed linearly independent family of row vectors.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Matrix,
    reduced: Matrix,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl Coordinates {
    /// Prepares coordinate extraction; fails if the rows of `basis` are dependent.
    pub fn new(basis: &Matrix) -> Result<Coordinates, LinAlgError> {
        let k = basis.rows;
        let n = basis.cols;
        let aug = Matrix::hstack(&[basis, &Matrix::identity(basis.field, k)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < k || pivots.iter().any(|&p| p >= n) {
            return Err(LinAlgError::Dependent);
        }
        Ok(Coordinates {
            basis: basis.clone(),
            reduced: r.col_range(0, n),
            pivots,
            transform: r.col_range(n, n + k),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let field = self.basis.field;
        let lead: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = Matrix::vec_mul(&lead, &self.reduced);
        if back.iter().zip(v).any(|(a, b)| a != b) {
            return None;
        }
        if self.dim() == 0 {
            return Some(Vec::new());
        }
        let c = Matrix::vec_mul(&lead, &self.transform);
        debug_assert_eq!(c.len(), self.dim());
        let _ = field;
        Some(c)
    }

    /// Coordinates of every row of `m`; `None` if some row lies outside the span.
    pub fn coords_rows(&self, m: &Matrix) -> Option<Matrix> {
        let mut rows = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            rows.push(self.coords(m.row(i))?);
        }
        Some(Matrix::from_rows(self.basis.field, self.dim(), rows))
    }
}
