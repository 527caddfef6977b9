//! Dense exact matrices and a sparse reduced-row-echelon engine.
//!
//! Row-vector convention: a vector is a row, a linear map `V -> W` is a
//! `dim V x dim W` matrix acting by right multiplication, and composition
//! "first `f` then `g`" is the product `F * G`.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// A sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, Rat)>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Serialized as a list of rows of `"num/den"` strings.
impl serde::Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &Rat) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rat>) -> Mat {
        assert_eq!(data.len(), rows * cols, "flat data length");
        Mat { rows, cols, data }
    }

    /// Builds a matrix from row vectors; `cols` disambiguates the empty case.
    pub fn from_rows(rows: &[Vec<Rat>], cols: usize) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Mat { rows: rows.len(), cols, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rat>> =
            rows.iter().map(|r| r.iter().map(|&v| Rat::from_int(v)).collect()).collect();
        Mat::from_rows(&rows, cols)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Rat] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn data(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rat> {
        self.data
    }

    /// Same data viewed with a different shape.
    pub fn reshape(self, rows: usize, cols: usize) -> Mat {
        assert_eq!(rows * cols, self.data.len(), "reshape size");
        Mat { rows, cols, data: self.data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.check_same(other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.check_same(other)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, other: &Mat, s: &Rat) {
        assert_eq!(self.shape(), other.shape(), "add_scaled shape");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    fn check_same(&self, other: &Mat) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {:?} and {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = vec![Rat::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(k)) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Mat) -> Mat {
        let (r2, c2) = other.shape();
        let mut out = Mat::zeros(self.rows * r2, self.cols * c2);
        let oc = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out.data[(i * r2 + k) * oc + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(parts: &[&Mat]) -> Result<Mat> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if parts.iter().any(|m| m.rows != rows) {
            return Err(Error::ShapeMismatch("hstack row counts differ".into()));
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for m in parts {
                data.extend_from_slice(m.row(i));
            }
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn vstack(parts: &[&Mat], cols: usize) -> Result<Mat> {
        if parts.iter().any(|m| m.cols != cols) {
            return Err(Error::ShapeMismatch("vstack column counts differ".into()));
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend_from_slice(&m.data);
        }
        Ok(Mat { rows, cols, data })
    }

    /// Block-diagonal sum.
    pub fn block_diag(parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out[(r0 + i, c0 + j)] = m[(i, j)].clone();
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat { rows: idx.len(), cols: self.cols, data }
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn sparse_row(&self, i: usize) -> SparseRow {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect()
    }

    pub fn sparse_col(&self, j: usize) -> SparseRow {
        (0..self.rows)
            .filter(|&i| !self[(i, j)].is_zero())
            .map(|i| (i, self[(i, j)].clone()))
            .collect()
    }

    /// Rank by exact elimination.
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(self.sparse_row(i));
            if ech.rank() == self.cols {
                break;
            }
        }
        ech.rank()
    }

    /// Basis of the left kernel `{v : v * self = 0}`; it has `rows - rank` vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut ech = Echelon::new(self.rows);
        for j in 0..self.cols {
            ech.insert(self.sparse_col(j));
            if ech.rank() == self.rows {
                break;
            }
        }
        ech.nullspace()
    }

    /// Reduced row-echelon basis of the row space.
    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.cols, self.to_rows())
    }

    /// One solution `X` of `X * self = rhs`, or `None` when inconsistent.
    ///
    /// Free variables are set to zero; the homogeneous part is `kernel_basis`.
    pub fn solve_left(&self, rhs: &Mat) -> Result<Option<Mat>> {
        if rhs.cols != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "system {:?} with right-hand side {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        let n = self.rows;
        let k = rhs.rows;
        // One augmented equation per column: [self[:, j] | rhs[:, j]].
        let mut ech = Echelon::with_limit(n + k, n);
        for j in 0..self.cols {
            let mut row = self.sparse_col(j);
            for t in 0..k {
                let v = &rhs[(t, j)];
                if !v.is_zero() {
                    row.push((n + t, v.clone()));
                }
            }
            if ech.insert(row) == Insert::Inconsistent {
                return Ok(None);
            }
        }
        let mut x = Mat::zeros(k, n);
        for (r, &p) in ech.pivots.iter().enumerate() {
            for (c, v) in &ech.rows[r] {
                if *c >= n {
                    x[(c - n, p)] = v.clone();
                }
            }
        }
        Ok(Some(x))
    }

    /// Exact inverse, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Mat>> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        self.solve_left(&Mat::identity(self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insert {
    /// Row was independent; its pivot column.
    Pivot(usize),
    Dependent,
    /// Row reduced to something nonzero only beyond the pivot limit.
    Inconsistent,
}

/// Incrementally maintained reduced row-echelon form over sparse rows.
///
/// Pivots are only taken in columns `< limit`; the remaining columns ride
/// along as an augmented block.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    limit: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon::with_limit(ncols, ncols)
    }

    pub fn with_limit(ncols: usize, limit: usize) -> Echelon {
        assert!(limit <= ncols);
        Echelon { ncols, limit, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Reduces `v` against the current rows, returning the dense remainder.
    pub fn reduce_dense(&self, v: &[Rat]) -> Vec<Rat> {
        let mut buf = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if buf[p].is_zero() {
                continue;
            }
            let f = buf[p].clone();
            for (c, x) in &self.rows[r] {
                buf[*c] -= &f * x;
            }
        }
        buf
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce_dense(v).iter().all(Rat::is_zero)
    }

    pub fn insert_dense(&mut self, v: &[Rat]) -> Insert {
        assert_eq!(v.len(), self.ncols);
        let buf = self.reduce_dense(v);
        self.finish_insert(buf)
    }

    pub fn insert(&mut self, row: SparseRow) -> Insert {
        if row.is_empty() {
            return Insert::Dependent;
        }
        let mut buf = vec![Rat::zero(); self.ncols];
        for (c, v) in row {
            buf[c] += v;
        }
        let buf = self.reduce_dense(&buf);
        self.finish_insert(buf)
    }

    fn finish_insert(&mut self, buf: Vec<Rat>) -> Insert {
        let lead = buf[..self.limit].iter().position(|v| !v.is_zero());
        let Some(p) = lead else {
            return if buf.iter().all(Rat::is_zero) { Insert::Dependent } else { Insert::Inconsistent };
        };
        let inv = buf[p].recip();
        let new_row: SparseRow = buf
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v * &inv))
            .collect();
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let f = row[pos].1.clone();
                *row = axpy_sparse(row, &new_row, &f);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.rows.push(new_row);
        Insert::Pivot(p)
    }

    /// Basis of `{x : row . x = 0 for every stored row}` over the first
    /// `limit` columns. Vector `k` has a 1 at the k-th free column and 0 at
    /// every other free column.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        self.nullspace_subspace().basis
    }

    pub fn nullspace_subspace(&self) -> Subspace {
        let free: Vec<usize> = (0..self.limit).filter(|&c| self.pivot_row[c].is_none()).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.limit];
            v[f] = Rat::one();
            for (r, &p) in self.pivots.iter().enumerate() {
                if let Ok(pos) = self.rows[r].binary_search_by_key(&f, |(c, _)| *c) {
                    v[p] = -&self.rows[r][pos].1;
                }
            }
            basis.push(v);
        }
        Subspace { ambient: self.limit, basis, keys: free }
    }

    /// Row space as a subspace (rows are already reduced).
    pub fn to_subspace(&self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivots[r]);
        let basis = order
            .iter()
            .map(|&r| {
                let mut v = vec![Rat::zero(); self.ncols];
                for (c, x) in &self.rows[r] {
                    v[*c] = x.clone();
                }
                v
            })
            .collect();
        let keys = order.iter().map(|&r| self.pivots[r]).collect();
        Subspace { ambient: self.ncols, basis, keys }
    }
}

/// `a - f * b` on sparse rows.
fn axpy_sparse(a: &SparseRow, b: &SparseRow, f: &Rat) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(f * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A subspace with a basis normalized on key columns: `basis[i][keys[j]]`
/// is 1 when `i == j` and 0 otherwise, so coordinates are read off directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    keys: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new(), keys: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        let basis = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Subspace { ambient, basis, keys: (0..ambient).collect() }
    }

    pub fn span<I: IntoIterator<Item = Vec<Rat>>>(ambient: usize, vectors: I) -> Subspace {
        let mut ech = Echelon::new(ambient);
        for v in vectors {
            ech.insert_dense(&v);
            if ech.rank() == ambient {
                break;
            }
        }
        ech.to_subspace()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn keys(&self) -> &[usize] {
        &self.keys
    }

    pub fn basis_matrix(&self) -> Mat {
        Mat::from_rows(&self.basis, self.ambient)
    }

    /// Coordinates of `v` in this basis, `None` if `v` is not in the subspace.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c: Vec<Rat> = self.keys.iter().map(|&k| v[k].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= ci * x;
                }
            }
        }
        rest.iter().all(Rat::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    pub fn combine(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Rat::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Non-key columns, which index a basis of the quotient `ambient / self`.
    pub fn complement(&self) -> Vec<usize> {
        let mut is_key = vec![false; self.ambient];
        for &k in &self.keys {
            is_key[k] = true;
        }
        (0..self.ambient).filter(|&c| !is_key[c]).collect()
    }

    /// Projection onto the quotient in the complement basis (`ambient x q`).
    pub fn quotient_projection(&self) -> Mat {
        let comp = self.complement();
        let mut pos = vec![usize::MAX; self.ambient];
        for (i, &c) in comp.iter().enumerate() {
            pos[c] = i;
        }
        let mut p = Mat::zeros(self.ambient, comp.len());
        for (i, &c) in comp.iter().enumerate() {
            p[(c, i)] = Rat::one();
        }
        for (b, &k) in self.basis.iter().zip(&self.keys) {
            for (c, v) in b.iter().enumerate() {
                if pos[c] != usize::MAX && !v.is_zero() {
                    p[(k, pos[c])] = -v;
                }
            }
        }
        p
    }

    /// Section of the quotient projection: unit vectors at complement columns.
    pub fn quotient_section(&self) -> Mat {
        let comp = self.complement();
        Mat::from_fn(comp.len(), self.ambient, |i, j| if comp[i] == j { Rat::one() } else { Rat::zero() })
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Nullspace of a homogeneous system given as sparse equations over `nvars` unknowns.
pub fn solve_homogeneous<I: IntoIterator<Item = SparseRow>>(nvars: usize, equations: I) -> Subspace {
    let mut ech = Echelon::new(nvars);
    for eq in equations {
        ech.insert(eq);
        if ech.rank() == nvars {
            break;
        }
    }
    ech.nullspace_subspace()
}

/// All `F` (`ds x dt`) with `A * F = F * B` for every pair `(A, B)`, flattened row-major.
pub fn intertwiners(ds: usize, dt: usize, pairs: &[(Mat, Mat)]) -> Subspace {
    let nvars = ds * dt;
    let mut ech = Echelon::new(nvars);
    'outer: for (a, b) in pairs {
        debug_assert_eq!(a.shape(), (ds, ds));
        debug_assert_eq!(b.shape(), (dt, dt));
        for r in 0..ds {
            let arow = a.sparse_row(r);
            for s in 0..dt {
                let mut eq: Vec<(usize, Rat)> = Vec::new();
                for (p, v) in &arow {
                    eq.push((p * dt + s, v.clone()));
                }
                for qq in 0..dt {
                    let v = &b[(qq, s)];
                    if !v.is_zero() {
                        eq.push((r * dt + qq, -v));
                    }
                }
                let eq = normalize_sparse(eq);
                if eq.is_empty() {
                    continue;
                }
                ech.insert(eq);
                if ech.rank() == nvars {
                    break 'outer;
                }
            }
        }
    }
    ech.nullspace_subspace()
}

/// Sorts by column and merges duplicate columns, dropping zeros.
pub fn normalize_sparse(mut v: Vec<(usize, Rat)>) -> SparseRow {
    v.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += x,
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}
