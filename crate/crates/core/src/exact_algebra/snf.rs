use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `left * input * right = diag(diagonal, 0, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    /// Nonzero invariant factors, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn swap_rows(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    a.swap(i, j);
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i -= q * row_j
fn row_axpy(a: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    let src = a[j].clone();
    for (x, s) in a[i].iter_mut().zip(src) {
        *x -= q * s;
    }
}

/// col_i -= q * col_j
fn col_axpy(a: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let s = row[j].clone();
        row[i] -= q * s;
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut left = IntMatrix::identity(rows).to_rows();
    // Column operations are tracked on the transpose of `right`.
    let mut right_t = IntMatrix::identity(cols).to_rows();
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(diagonal, left, right_t);
            };
            swap_rows(&mut a, t, pi);
            swap_rows(&mut left, t, pi);
            swap_cols(&mut a, t, pj);
            swap_rows(&mut right_t, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut left, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                row_axpy(&mut right_t, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t]))
            });
            match bad {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut left, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            a[t] = a[t].iter().map(|x| -x).collect();
            left[t] = left[t].iter().map(|x| -x).collect();
        }
        diagonal.push(a[t][t].clone());
    }
    finish(diagonal, left, right_t)
}

fn finish(
    diagonal: Vec<BigInt>,
    left: Vec<Vec<BigInt>>,
    right_t: Vec<Vec<BigInt>>,
) -> SmithNormalForm {
    let left = IntMatrix::from_rows(left).expect("square transform");
    let right = IntMatrix::from_rows(right_t).expect("square transform").transpose();
    SmithNormalForm {
        diagonal,
        left,
        right,
    }
}

/// Basis of the integer kernel `{v : m v = 0}`, each vector normalised so its
/// first nonzero entry is positive.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank()..m.cols())
        .map(|j| {
            let mut v = snf.right.column(j);
            if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
                v = v.iter().map(|x| -x).collect();
            }
            v
        })
        .collect()
}
