use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows. An empty outer vector yields the 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(data).expect("rectangular literal")
    }

    pub fn diagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
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
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .fold(BigInt::zero(), |acc, x| acc + x)
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Principal submatrix on the given (ordered) index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> IntMatrix {
        let n = idx.len();
        let mut m = Self::zeros(n, n);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Block upper-triangular matrix `[[top_left, top_right], [0, bottom_right]]`.
    pub fn block_upper(
        top_left: &IntMatrix,
        top_right: &IntMatrix,
        bottom_right: &IntMatrix,
    ) -> Result<IntMatrix> {
        let (p, q) = (top_left.rows, bottom_right.rows);
        if !top_left.is_square()
            || !bottom_right.is_square()
            || top_right.rows != p
            || top_right.cols != q
        {
            return Err(Error::Dimension("incompatible blocks".into()));
        }
        let n = p + q;
        let mut m = Self::zeros(n, n);
        for i in 0..p {
            for j in 0..p {
                m.set(i, j, top_left.get(i, j).clone());
            }
            for j in 0..q {
                m.set(i, p + j, top_right.get(i, j).clone());
            }
        }
        for i in 0..q {
            for j in 0..q {
                m.set(p + i, p + j, bottom_right.get(i, j).clone());
            }
        }
        Ok(m)
    }

    pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
        Self::block_upper(a, &IntMatrix::zeros(a.rows, b.rows), b)
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v.div_floor(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    /// Inverse of a unimodular matrix via the adjugate-free Gauss-Jordan route over Z.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = IntMatrix::identity(n).to_rows();
        for col in 0..n {
            // Euclid down the column until a single nonzero remains at `col`.
            loop {
                let pivot = (col..n)
                    .filter(|&i| !a[i][col].is_zero())
                    .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
                let Some(p) = pivot else {
                    return Err(Error::Domain("matrix is not unimodular".into()));
                };
                a.swap(p, col);
                inv.swap(p, col);
                let mut done = true;
                for i in col + 1..n {
                    if a[i][col].is_zero() {
                        continue;
                    }
                    let q = a[i][col].div_floor(&a[col][col]);
                    for j in 0..n {
                        let (t, u) = (a[col][j].clone(), inv[col][j].clone());
                        a[i][j] -= &q * t;
                        inv[i][j] -= &q * u;
                    }
                    if !a[i][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if !a[col][col].abs().is_one() {
                return Err(Error::Domain("matrix is not unimodular".into()));
            }
            if a[col][col].is_negative() {
                for j in 0..n {
                    a[col][j] = -a[col][j].clone();
                    inv[col][j] = -inv[col][j].clone();
                }
            }
        }
        for col in (0..n).rev() {
            for i in 0..col {
                let q = a[i][col].clone();
                if q.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let (t, u) = (a[col][j].clone(), inv[col][j].clone());
                    a[i][j] -= &q * t;
                    inv[i][j] -= &q * u;
                }
            }
        }
        IntMatrix::from_rows(inv)
    }

    /// Companion matrix of a monic polynomial (lowest degree first).
    /// Its characteristic polynomial is the input.
    pub fn companion(monic_coeffs_low_first: &[BigInt]) -> Result<IntMatrix> {
        let n = monic_coeffs_low_first
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Domain("companion of the zero polynomial".into()))?;
        if !monic_coeffs_low_first[n].is_one() {
            return Err(Error::Domain("companion matrix needs a monic polynomial".into()));
        }
        let mut m = IntMatrix::zeros(n, n);
        for i in 1..n {
            m.set(i, i - 1, BigInt::one());
        }
        for i in 0..n {
            m.set(i, n - 1, -monic_coeffs_low_first[i].clone());
        }
        Ok(m)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &'a IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<'a> Add<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &'a IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &'a IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64(&[&[2, -1, 0], &[1, 3, 2], &[0, 5, -4]]);
        // cofactor expansion: 2*(-12-10) + 1*(-4-0) = -48
        assert_eq!(m.determinant().unwrap(), BigInt::from(-48));
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
        let singular = IntMatrix::from_i64(&[&[0, 1], &[0, 2]]);
        assert!(singular.determinant().unwrap().is_zero());
    }

    #[test]
    fn unimodular_inverse_round_trip() {
        let u = IntMatrix::from_i64(&[&[2, 3, 1], &[1, 2, 1], &[0, 0, 1]]);
        assert!(u.is_unimodular());
        let inv = u.unimodular_inverse().unwrap();
        assert_eq!(&u * &inv, IntMatrix::identity(3));
        let not_unimodular = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(not_unimodular.unimodular_inverse().is_err());
    }

    #[test]
    fn companion_shape() {
        let p: Vec<BigInt> = [-5, 2, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        let c = IntMatrix::companion(&p).unwrap();
        assert_eq!(c, IntMatrix::from_i64(&[&[0, 0, 5], &[1, 0, -2], &[0, 1, 0]]));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![BigInt::one()], vec![]];
        assert!(matches!(IntMatrix::from_rows(rows), Err(Error::Dimension(_))));
    }
}
