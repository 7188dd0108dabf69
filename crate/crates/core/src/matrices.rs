//! Dense exact linear algebra over GF(2^m).
//!
//! Entries are stored row-major as raw `u16` field elements. Elimination and
//! multiplication over GF(2) go through [`BitMatrix`], which packs each row
//! into 64-bit words; every other field uses the generic path.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u16) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from raw rows; every row must have the same length and
    /// every entry must lie in the field.
    pub fn from_rows(field: Field, rows: &[Vec<u16>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for &v in r {
                if (v as u32) >= field.order() {
                    return Err(Error::BadScalar(format!("{v:#x}")));
                }
                data.push(v);
            }
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    /// A single column built from raw entries.
    pub fn column(field: Field, entries: &[u16]) -> Self {
        Matrix { field, rows: entries.len(), cols: 1, data: entries.to_vec() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.field.scalar(self.get(i, j)).expect("entry in field")
    }

    pub fn set_entry(&mut self, i: usize, j: usize, s: Scalar) -> Result<()> {
        self.field.ensure_same(&s.field())?;
        self.set(i, j, s.bits());
        Ok(())
    }

    pub fn raw_data(&self) -> &[u16] {
        &self.data
    }

    pub fn col_vec(&self, j: usize) -> Vec<u16> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u16::from(i == j)))
    }

    fn ensure_same_field(&self, other: &Matrix) -> Result<()> {
        self.field.ensure_same(&other.field)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "add {}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: Scalar) -> Result<Matrix> {
        self.field.ensure_same(&s.field())?;
        let data = self.data.iter().map(|&a| self.field.mul_raw(a, s.bits())).collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "mul {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field.is_prime_field() {
            return Ok(self.mul_gf2(other));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    if b != 0 {
                        *o ^= self.field.mul_raw(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn mul_gf2(&self, other: &Matrix) -> Matrix {
        let b = BitMatrix::from_matrix(other);
        let mut acc = vec![0u64; b.words];
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            acc.iter_mut().for_each(|w| *w = 0);
            for k in 0..self.cols {
                if self.data[i * self.cols + k] != 0 {
                    for (a, w) in acc.iter_mut().zip(b.row(k)) {
                        *a ^= w;
                    }
                }
            }
            for j in 0..other.cols {
                out.data[i * other.cols + j] = ((acc[j / 64] >> (j % 64)) & 1) as u16;
            }
        }
        out
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
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

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack row count".into()));
        }
        let cols = self.cols + other.cols;
        Ok(Matrix::from_fn(self.field, self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack column count".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_same_field(other)?;
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Ok(Matrix::from_fn(self.field, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j)
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols)
            } else {
                0
            }
        }))
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows.start + i, cols.start + j))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<u16>]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i])
    }

    /// Same entries over a larger field. Only GF(2) embeds canonically into
    /// every GF(2^m), so lifting from any other field is an error.
    pub fn lift(&self, field: Field) -> Result<Matrix> {
        if self.field == field {
            return Ok(self.clone());
        }
        if !self.field.is_prime_field() {
            return Err(Error::FieldMismatch { left: self.field.degree(), right: field.degree() });
        }
        Ok(Matrix { field, ..self.clone() })
    }

    pub fn echelon(&self) -> Echelon {
        if self.field.is_prime_field() {
            let mut b = BitMatrix::from_matrix(self);
            let pivots = b.rref();
            Echelon { pivots, form: EchelonForm::Packed(b), cols: self.cols }
        } else {
            let mut m = self.clone();
            let pivots = m.rref_generic();
            Echelon { pivots, form: EchelonForm::Dense(m), cols: self.cols }
        }
    }

    fn rref_generic(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv_raw(self.get(r, c)).expect("pivot nonzero");
            for j in c..self.cols {
                let v = self.get(r, j);
                self.set(r, j, f.mul_raw(v, inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(r, j);
                    if v != 0 {
                        let cur = self.get(i, j);
                        self.set(i, j, cur ^ f.mul_raw(factor, v));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the null space, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<u16>> {
        self.echelon().kernel()
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        let k = self.kernel();
        Matrix::from_columns(self.field, self.cols, &k)
    }

    /// Some `x` with `self * x = b`, if one exists. `b` is a column.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.solve_many(b)
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve_many(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        let aug = self.hstack(rhs)?;
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &p) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, ech.get(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Two-sided inverse, or `None` when singular.
    pub fn invert(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let ech = self.hstack(&Matrix::identity(self.field, n))?.echelon();
        // pivots are increasing, so A is invertible iff the first n land in A's block
        if n > 0 && (ech.pivots.len() < n || ech.pivots[n - 1] >= n) {
            return Ok(None);
        }
        Ok(Some(Matrix::from_fn(self.field, n, n, |i, j| ech.get(i, n + j))))
    }

    /// True iff `self^d = 0` where `d` is the size.
    pub fn is_nilpotent(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut p = self.clone();
        let mut reach = 1usize;
        while reach < self.rows {
            if p.is_zero() {
                return Ok(true);
            }
            p = p.mul(&p)?;
            reach *= 2;
        }
        Ok(p.is_zero())
    }

    /// Basis of the column space (the pivot columns of `self`).
    pub fn column_space(&self) -> Matrix {
        let ech = self.echelon();
        self.select_columns(&ech.pivots)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF(2^{})", self.rows, self.cols, self.field.degree())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:x}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a matrix plus its pivot columns.
pub struct Echelon {
    pivots: Vec<usize>,
    form: EchelonForm,
    cols: usize,
}

enum EchelonForm {
    Packed(BitMatrix),
    Dense(Matrix),
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn get(&self, i: usize, j: usize) -> u16 {
        match &self.form {
            EchelonForm::Packed(b) => b.get(i, j) as u16,
            EchelonForm::Dense(m) => m.get(i, j),
        }
    }

    pub fn kernel(&self) -> Vec<Vec<u16>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u16; self.cols];
            v[free] = 1;
            for (i, &p) in self.pivots.iter().enumerate() {
                // characteristic 2: -x = x
                v[p] = self.get(i, free);
            }
            basis.push(v);
        }
        basis
    }
}

/// GF(2) matrix with rows packed into `u64` words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let mut b = BitMatrix::zeros(m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                if m.get(i, j) & 1 == 1 {
                    b.flip(i, j);
                }
            }
        }
        b
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(Field::gf2(), self.rows, self.cols, |i, j| self.get(i, j) as u16)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// Row-reduces and wraps the result for kernel and rank queries.
    pub fn into_echelon(mut self) -> Echelon {
        let pivots = self.rref();
        let cols = self.cols;
        Echelon { pivots, form: EchelonForm::Packed(self), cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let w = self.words;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (wi, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (r..self.rows).find(|&i| self.data[i * w + wi] & bit != 0) else { continue };
            if p != r {
                for k in 0..w {
                    self.data.swap(p * w + k, r * w + k);
                }
            }
            let (head, tail) = self.data.split_at_mut(r * w);
            let (pivot_row, rest) = tail.split_at_mut(w);
            for row in head.chunks_exact_mut(w).chain(rest.chunks_exact_mut(w)) {
                if row[wi] & bit != 0 {
                    for k in wi..w {
                        row[k] ^= pivot_row[k];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    field_m: u32,
    entries: Vec<String>,
}

impl From<Matrix> for MatrixJson {
    fn from(m: Matrix) -> Self {
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            field_m: m.field.degree(),
            entries: m.data.iter().map(|v| format!("{v:x}")).collect(),
        }
    }
}

impl TryFrom<MatrixJson> for Matrix {
    type Error = Error;
    fn try_from(j: MatrixJson) -> Result<Matrix> {
        let field = Field::new(j.field_m)?;
        if j.entries.len() != j.rows * j.cols {
            return Err(Error::Malformed(format!(
                "{} entries for a {}x{} matrix",
                j.entries.len(),
                j.rows,
                j.cols
            )));
        }
        let data = j
            .entries
            .iter()
            .map(|e| field.parse_scalar(e).map(|s| s.bits()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { field, rows: j.rows, cols: j.cols, data })
    }
}
