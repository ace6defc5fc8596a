use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Characteristic polynomial `det(xI - m)` by Berkowitz's division-free algorithm.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    // Coefficients highest degree first.
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let a = m.get(r, r);
        let col: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        let row: Vec<BigInt> = (0..r).map(|j| m.get(r, j).clone()).collect();

        // First column of the Toeplitz matrix: 1, -a, -R C, -R A C, ..., -R A^{r-1} C.
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a.clone());
        let mut v = col;
        for _ in 0..r {
            let dot = row.iter().zip(&v).fold(BigInt::zero(), |s, (x, y)| s + x * y);
            t.push(-dot);
            v = (0..r)
                .map(|i| (0..r).fold(BigInt::zero(), |s, j| s + m.get(i, j) * &v[j]))
                .collect();
        }

        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=r.min(i))
                    .filter(|&j| i - j < t.len())
                    .fold(BigInt::zero(), |s, j| s + &t[i - j] * &p[j])
            })
            .collect();
        p = next;
    }
    p.reverse();
    Ok(IntPolynomial::new(p))
}
