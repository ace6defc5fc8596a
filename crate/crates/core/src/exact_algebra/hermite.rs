use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite basis of a sublattice of `Z^dim`.
///
/// Rows are in echelon form with positive pivots and every entry above a
/// pivot reduced into `[0, pivot)`. Reducing a vector against it gives a
/// canonical representative of its coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteBasis {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl HermiteBasis {
    /// Lattice spanned by the given generators (each of length `dim`).
    pub fn from_generators(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        let mut a: Vec<Vec<BigInt>> = gens.iter().filter(|g| g.iter().any(|x| !x.is_zero())).cloned().collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        let mut col = 0;
        while col < dim && !a.is_empty() {
            // Euclid down the column across all remaining generators.
            loop {
                let nonzero: Vec<usize> = (0..a.len()).filter(|&i| !a[i][col].is_zero()).collect();
                if nonzero.len() <= 1 {
                    break;
                }
                let p = *nonzero.iter().min_by_key(|&&i| a[i][col].abs()).unwrap();
                for &i in &nonzero {
                    if i == p {
                        continue;
                    }
                    let q = a[i][col].div_floor(&a[p][col]);
                    let src = a[p].clone();
                    for (x, s) in a[i].iter_mut().zip(src) {
                        *x -= &q * s;
                    }
                }
            }
            if let Some(p) = (0..a.len()).find(|&i| !a[i][col].is_zero()) {
                let mut r = a.swap_remove(p);
                if r[col].is_negative() {
                    r = r.iter().map(|x| -x).collect();
                }
                rows.push(r);
                pivots.push(col);
            }
            a.retain(|g| g.iter().any(|x| !x.is_zero()));
            col += 1;
        }
        // Reduce entries above each pivot.
        for k in 0..rows.len() {
            let c = pivots[k];
            for i in 0..k {
                let q = rows[i][c].div_floor(&rows[k][c]);
                if q.is_zero() {
                    continue;
                }
                let src = rows[k].clone();
                for (x, s) in rows[i].iter_mut().zip(src) {
                    *x -= &q * s;
                }
            }
        }
        HermiteBasis { dim, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// True when the quotient `Z^dim / L` is finite.
    pub fn has_finite_quotient(&self) -> bool {
        self.rank() == self.dim
    }

    /// Order of `Z^dim / L` when finite.
    pub fn index(&self) -> Option<BigInt> {
        self.has_finite_quotient().then(|| {
            self.rows
                .iter()
                .zip(&self.pivots)
                .fold(BigInt::one(), |acc, (r, &c)| acc * &r[c])
        })
    }

    /// Canonical coset representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = v.to_vec();
        for (r, &c) in self.rows.iter().zip(&self.pivots) {
            let q = out[c].div_floor(&r[c]);
            if q.is_zero() {
                continue;
            }
            for (x, s) in out.iter_mut().zip(r) {
                *x -= &q * s;
            }
        }
        out
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// All canonical representatives when the quotient is finite, in
    /// lexicographic order. `None` for an infinite quotient.
    pub fn enumerate_quotient(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.has_finite_quotient() {
            return None;
        }
        let diag: Vec<BigInt> = (0..self.dim).map(|i| self.rows[i][i].clone()).collect();
        let mut out = vec![vec![]];
        for d in &diag {
            let mut next = Vec::new();
            for prefix in &out {
                let mut x = BigInt::zero();
                while &x < d {
                    let mut v: Vec<BigInt> = prefix.clone();
                    v.push(x.clone());
                    next.push(v);
                    x += 1;
                }
            }
            out = next;
        }
        Some(out)
    }
}
