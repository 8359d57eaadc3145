//! Dense exact matrices and canonical subspaces.
//!
//! A [`Subspace`] is always stored as the fully reduced row-echelon basis of
//! its row space, so two subspaces are equal exactly when their stored bases
//! are equal entrywise.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Row-major dense matrix over an exact field. Matrices act on column vectors.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.render(x)).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &F::Elem) {
        let idx = r * self.cols + c;
        self.data[idx] = self.field.add(&self.data[idx], v);
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !self.field.is_zero(v) {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for (j, b) in rhs.row(k).iter().enumerate() {
                    if !f.is_zero(b) {
                        f.add_mul_assign(&mut out_row[j], a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &F::Elem) -> Matrix<F> {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product; the row index of the result is `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let f = &self.field;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.add_mul_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, k: usize) -> Result<Matrix<F>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.field, self.row_vecs(), self.cols)
    }

    pub fn row_space(&self) -> Subspace<F> {
        rref(self)
    }

    pub fn kernel(&self) -> Subspace<F> {
        kernel(self)
    }

    /// Two-sided inverse, `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug: Vec<Vec<F::Elem>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { f.one() } else { f.zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(&aug[r][col]))?;
            aug.swap(col, pivot);
            let inv = f.inv(&aug[col][col])?;
            for x in aug[col].iter_mut() {
                *x = f.mul(x, &inv);
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r != col && !f.is_zero(&row[col]) {
                    let factor = row[col].clone();
                    sub_scaled(f, row, &factor, &pivot_row);
                }
            }
        }
        let rows = aug.into_iter().map(|row| row[n..].to_vec()).collect();
        Matrix::from_rows(f, n, rows).ok()
    }

    /// Block matrix `[self; rhs]`.
    pub fn vstack(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }
}

/// `row -= factor * other`, skipping zero entries of `other`.
fn sub_scaled<F: Field>(f: &F, row: &mut [F::Elem], factor: &F::Elem, other: &[F::Elem]) {
    for (x, y) in row.iter_mut().zip(other) {
        if !f.is_zero(y) {
            f.sub_mul_assign(x, factor, y);
        }
    }
}

/// Rank by forward elimination (no back substitution).
pub fn rank_of_rows<F: Field>(f: &F, mut rows: Vec<Vec<F::Elem>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(&rows[rank][col]).expect("nonzero pivot");
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if !f.is_zero(&row[col]) {
                let factor = f.mul(&row[col], &inv);
                sub_scaled(f, &mut row[col..], &factor, &pivot_row[col..]);
            }
        }
        rank += 1;
    }
    rank
}

/// Canonical (fully reduced, row-echelon) basis of a subspace of `F^ambient`.
#[derive(Clone)]
pub struct Subspace<F: Field> {
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.dim(),
            self.ambient_dim(),
            self.basis
        )
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: &F, ambient: usize, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            ech.insert(v);
        }
        ech.finish()
    }

    /// Wraps rows that the caller guarantees are already in canonical form.
    pub(crate) fn from_rref_unchecked(field: &F, ambient: usize, rows: Vec<(usize, Vec<F::Elem>)>) -> Self {
        let pivots = rows.iter().map(|(p, _)| *p).collect();
        let basis = Matrix::from_rows(field, ambient, rows.into_iter().map(|(_, r)| r).collect())
            .expect("rows have ambient length");
        let s = Subspace { basis, pivots };
        debug_assert!(s.is_canonical());
        s
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vector(&self, k: usize) -> &[F::Elem] {
        self.basis.row(k)
    }

    /// Checks the stored basis really is a reduced row-echelon form.
    pub fn is_canonical(&self) -> bool {
        let f = self.field();
        if !self.pivots.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        for (k, &p) in self.pivots.iter().enumerate() {
            let row = self.basis.row(k);
            if row[..p].iter().any(|x| !f.is_zero(x)) || !f.is_one(&row[p]) {
                return false;
            }
            for (j, &q) in self.pivots.iter().enumerate() {
                if j != k && !f.is_zero(&row[q]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        match self.coordinates(v) {
            Ok(_) => Ok(true),
            Err(Error::NotAMember) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Coordinates of `v` over the canonical basis.
    pub fn coordinates(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.len(),
            });
        }
        let f = self.field();
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (k, c) in coords.iter().enumerate() {
            if !f.is_zero(c) {
                sub_scaled(f, &mut residual, c, self.basis.row(k));
            }
        }
        if residual.iter().all(|x| f.is_zero(x)) {
            Ok(coords)
        } else {
            Err(Error::NotAMember)
        }
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> Result<bool> {
        for k in 0..other.dim() {
            if !self.contains(other.basis_vector(k))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let mut ech = Echelon::from_subspace(self);
        for k in 0..other.dim() {
            ech.insert(other.basis_vector(k).to_vec());
        }
        Ok(ech.finish())
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        intersect(self, other)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix<F>) -> Result<Subspace<F>> {
        if map.cols() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: map.cols(),
            });
        }
        let mut ech = Echelon::new(self.field(), map.rows());
        for k in 0..self.dim() {
            ech.insert(map.apply(self.basis_vector(k))?);
        }
        Ok(ech.finish())
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }
}

/// Incremental reduced row-echelon form.
///
/// Rows are kept fully reduced at all times, so reducing a new vector only
/// touches the pivot columns where it is nonzero.
pub struct Echelon<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ambient: usize) -> Self {
        Echelon {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ambient],
        }
    }

    pub fn from_subspace(s: &Subspace<F>) -> Self {
        let mut ech = Self::new(s.field(), s.ambient_dim());
        for (k, &p) in s.pivots().iter().enumerate() {
            ech.pivot_row[p] = Some(k);
            ech.pivots.push(p);
            ech.rows.push(s.basis_vector(k).to_vec());
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows in place.
    fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (k, &p) in self.pivots.iter().enumerate() {
            if !f.is_zero(&v[p]) {
                let factor = v[p].clone();
                sub_scaled(f, v, &factor, &self.rows[k]);
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(lead) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[lead]).expect("nonzero leading entry");
        if !f.is_one(&inv) {
            for x in v.iter_mut().skip(lead) {
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
        }
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[lead]) {
                let factor = row[lead].clone();
                sub_scaled(&f, row, &factor, &v);
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.pivots.push(lead);
        self.rows.push(v);
        true
    }

    pub fn finish(self) -> Subspace<F> {
        let Echelon {
            field,
            ambient,
            rows,
            pivots,
            ..
        } = self;
        let mut tagged: Vec<(usize, Vec<F::Elem>)> = pivots.into_iter().zip(rows).collect();
        tagged.sort_by_key(|(p, _)| *p);
        Subspace::from_rref_unchecked(&field, ambient, tagged)
    }
}

/// Row space of `m` in canonical form.
pub fn rref<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let mut ech = Echelon::new(m.field(), m.cols());
    for r in 0..m.rows() {
        ech.insert(m.row(r).to_vec());
    }
    ech.finish()
}

/// Right kernel `{v : m v = 0}`.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let f = m.field();
    let rs = rref(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in rs.pivots() {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols()).filter(|&c| !is_pivot[c]).map(|free| {
        let mut v = vec![f.zero(); m.cols()];
        v[free] = f.one();
        for (k, &p) in rs.pivots().iter().enumerate() {
            let x = rs.basis_vector(k)[free].clone();
            if !f.is_zero(&x) {
                v[p] = f.neg(&x);
            }
        }
        v
    });
    Subspace::span(f, m.cols(), vectors)
}

/// `a ∩ b`, computed as the vectors of `a` annihilated by a basis of `b`'s
/// orthogonal complement.
pub fn intersect<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
    a.check_ambient(b)?;
    let f = a.field();
    if a.is_zero() || b.is_zero() {
        return Ok(Subspace::zero(f, a.ambient_dim()));
    }
    if b.is_full() {
        return Ok(a.clone());
    }
    if a.is_full() {
        return Ok(b.clone());
    }
    // complement of b: u with B u = 0, so v ∈ b iff <v, u> = 0 for all u
    let complement = kernel(b.basis());
    // coefficients c with (c^T A) U^T = 0, i.e. c ∈ ker(U A^T)
    let pairing = complement.basis().mul(&a.basis().transpose())?;
    let coeffs = kernel(&pairing);
    let combos = coeffs.basis().mul(a.basis())?;
    Ok(rref(&combos))
}
