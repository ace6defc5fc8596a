//! Independent oracles and generators shared by the integration tests. Nothing
//! here calls into the factorization or class code under test.
#![allow(dead_code)]

use lefschetz_core::exact_algebra::{IntMatrix, IntPolynomial};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
        .collect();
    IntMatrix::from_rows(rows).unwrap()
}

pub fn random_rect(rng: &mut ChaCha8Rng, r: usize, c: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..r)
        .map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
        .collect();
    if r == 0 {
        IntMatrix::zeros(0, c)
    } else {
        IntMatrix::from_rows(rows).unwrap()
    }
}

/// `(U, U⁻¹)` as products of elementary row operations, built side by side.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut u = vec![vec![0i64; n]; n];
    let mut v = vec![vec![0i64; n]; n];
    for i in 0..n {
        u[i][i] = 1;
        v[i][i] = 1;
    }
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            u[0][0] = -1;
            v[0][0] = -1;
        }
    } else {
        for _ in 0..steps {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let k = rng.gen_range(-2i64..=2);
            // U ← E·U with E = I + k e_ij adds k·row j to row i;
            // U⁻¹ ← U⁻¹·E⁻¹ subtracts k·column i from column j.
            for c in 0..n {
                u[i][c] += k * u[j][c];
            }
            for r in 0..n {
                v[r][j] -= k * v[r][i];
            }
        }
    }
    (IntMatrix::from_i64(&as_slices(&u)), IntMatrix::from_i64(&as_slices(&v)))
}

fn as_slices(m: &[Vec<i64>]) -> Vec<&[i64]> {
    m.iter().map(Vec::as_slice).collect()
}

/// Product of two coefficient lists, lowest degree first.
pub fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Whether the monic `d` divides `f` exactly over Z.
fn divides(f: &[i128], d: &[i128]) -> bool {
    let mut r = f.to_vec();
    let dd = d.len() - 1;
    if r.len() < d.len() {
        return false;
    }
    for top in (dd..r.len()).rev() {
        let q = r[top];
        if q == 0 {
            continue;
        }
        for (k, c) in d.iter().enumerate() {
            r[top - dd + k] -= q * c;
        }
    }
    r.iter().all(|&x| x == 0)
}

fn binom(n: usize, k: usize) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// A monic integer polynomial is irreducible over Q iff it has no monic
/// integer divisor of degree ≤ deg/2. Divisor coefficients are bounded by
/// `binom(d, i) · ‖f‖₂`, so the search is finite.
pub fn is_irreducible(f: &[i128]) -> bool {
    let n = f.len() - 1;
    assert_eq!(f[n], 1, "oracle expects monic input");
    if n <= 1 {
        return n == 1;
    }
    let norm = (f.iter().map(|c| c * c).sum::<i128>() as f64).sqrt().ceil() as i128 + 1;
    for d in 1..=n / 2 {
        let bounds: Vec<i128> = (0..d).map(|i| binom(d, i) * norm).collect();
        let mut g: Vec<i128> = bounds.iter().map(|b| -b).collect();
        g.push(1);
        loop {
            if divides(f, &g) {
                return false;
            }
            let mut i = 0;
            while i < d {
                if g[i] < bounds[i] {
                    g[i] += 1;
                    break;
                }
                g[i] = -bounds[i];
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    true
}

/// Random monic irreducible polynomial of the given degree, small coefficients.
pub fn random_irreducible(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> Vec<i128> {
    loop {
        let mut f: Vec<i128> = (0..degree).map(|_| rng.gen_range(-bound..=bound) as i128).collect();
        f.push(1);
        if is_irreducible(&f) {
            return f;
        }
    }
}

pub fn to_poly(f: &[i128]) -> IntPolynomial {
    IntPolynomial::new(f.iter().map(|&c| BigInt::from(c)).collect())
}

pub fn to_i128(p: &IntPolynomial) -> Vec<i128> {
    p.coeffs().iter().map(|c| i128::try_from(c).expect("small coefficient")).collect()
}
