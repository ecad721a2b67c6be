use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
///
/// Shapes with zero rows or zero columns are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Square matrix with `diag` on the diagonal.
    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in diag.iter().enumerate() {
            m[(i, i)] = x.clone().into();
        }
        m
    }

    /// Builds a matrix from nested rows. Panics if rows are ragged; intended
    /// for literals in code and tests.
    pub fn from_rows<T: Into<BigInt> + Clone, R: AsRef<[T]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows in IntMatrix::from_rows");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
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

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product on column vectors.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Invalid(format!(
                "vector of length {} does not fit a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `self - rhs` for equal shapes.
    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Invalid(format!(
                "cannot subtract {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination. `None` for
    /// non-square input.
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Some(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Some(sign * &m[(n - 1, n - 1)])
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Replaces rows `(a, b)` by `(p·a + q·b, r·a + s·b)`.
    pub(crate) fn combine_rows(&mut self, a: usize, b: usize, coef: [&BigInt; 4]) {
        let [p, q, r, s] = coef;
        for j in 0..self.cols {
            let x = &self[(a, j)];
            let y = &self[(b, j)];
            let na = p * x + q * y;
            let nb = r * x + s * y;
            self[(a, j)] = na;
            self[(b, j)] = nb;
        }
    }

    /// Replaces columns `(a, b)` by `(p·a + q·b, r·a + s·b)`.
    pub(crate) fn combine_cols(&mut self, a: usize, b: usize, coef: [&BigInt; 4]) {
        let [p, q, r, s] = coef;
        for i in 0..self.rows {
            let x = &self[(i, a)];
            let y = &self[(i, b)];
            let na = p * x + q * y;
            let nb = r * x + s * y;
            self[(i, a)] = na;
            self[(i, b)] = nb;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Largest absolute value among the entries, zero for empty matrices.
    pub fn max_abs_entry(&self) -> BigInt {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// Text format: rows separated by `;`, entries by `,`, e.g. `-2,0;-1,-2`.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Parses the text format accepted by [`Display`](fmt::Display), with
/// optional surrounding brackets and free whitespace. The empty string (or
/// `[]`) is the 0x0 matrix.
impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s;
        let mut offset = 0;
        let trimmed_start = body.len() - body.trim_start().len();
        body = body.trim();
        offset += trimmed_start;
        if let Some(rest) = body.strip_prefix('[') {
            body = rest
                .strip_suffix(']')
                .ok_or_else(|| Error::parse(offset + body.len(), "missing closing ']'"))?;
            offset += 1;
        } else if body.ends_with(']') {
            return Err(Error::parse(offset, "missing opening '['"));
        }
        if body.trim().is_empty() {
            return Ok(IntMatrix::zeros(0, 0));
        }

        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut pos = offset;
        for row_text in body.split(';') {
            let mut row = Vec::new();
            let mut cell_pos = pos;
            for cell in row_text.split(',') {
                let lead = cell.len() - cell.trim_start().len();
                let token = cell.trim();
                if token.is_empty() {
                    return Err(Error::parse(cell_pos + lead, "empty matrix entry"));
                }
                let value = BigInt::from_str(token).map_err(|_| {
                    Error::parse(cell_pos + lead, format!("invalid integer '{token}'"))
                })?;
                row.push(value);
                cell_pos += cell.len() + 1;
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::parse(
                        pos,
                        format!("row has {} entries, expected {}", row.len(), first.len()),
                    ));
                }
            }
            rows.push(row);
            pos += row_text.len() + 1;
        }
        Ok(IntMatrix::from_rows(&rows))
    }
}
