use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// `input = unit * prod(factor^multiplicity)`, factors primitive with positive
/// leading coefficient, irreducible over Q, sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigInt,
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }
}

impl std::fmt::Display for Factorization {
    /// `(x−1)²·(x²+1)`, with the unit in front when it is not 1.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string().replace('-', "\u{2212}"));
        }
        for (p, m) in &self.factors {
            let exp = if *m > 1 { super::poly::superscript(*m as usize) } else { String::new() };
            parts.push(format!("({p}){exp}"));
        }
        f.write_str(&parts.join("\u{00B7}"))
    }
}

pub fn factor_over_q(p: &IntPolynomial) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let f = p.primitive_part();
    let unit = &p.leading() / &f.leading();
    let mut factors = Vec::new();
    if f.degree() != Some(0) {
        let sqf = f.div_exact(&f.gcd(&f.derivative())).ok_or_else(|| {
            Error::Internal("squarefree part does not divide".into())
        })?;
        let mut rest = f.clone();
        for g in factor_squarefree(&sqf)? {
            let mut mult = 0u32;
            while let Some(q) = rest.div_exact(&g) {
                rest = q;
                mult += 1;
            }
            if mult == 0 {
                return Err(Error::Internal(format!("factor {g} does not divide {p}")));
            }
            factors.push((g, mult));
        }
        if rest.degree() != Some(0) || !rest.leading().abs().is_one() {
            return Err(Error::Internal(format!("incomplete factorization of {p}")));
        }
    }
    factors.sort();
    let out = Factorization { unit, factors };
    if out.expand() != *p {
        return Err(Error::Internal(format!("factorization of {p} does not reconstruct")));
    }
    Ok(out)
}

/// Irreducible factors of a primitive squarefree polynomial of positive degree.
fn factor_squarefree(f: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return Ok(vec![f.primitive_part()]);
    }
    let lc = f.leading();

    // Try a handful of good primes and keep the one with the fewest modular factors.
    let mut best: Option<(BigInt, Vec<Vec<BigInt>>)> = None;
    let mut tried = 0;
    let mut cand = 3u64;
    while tried < 5 && cand < 100_000 {
        let p = BigInt::from(cand);
        cand += 2;
        if !is_prime(&p) || lc.is_multiple_of(&p) {
            continue;
        }
        let fp = modp::reduce(f.coeffs(), &p);
        let dfp = modp::reduce(f.derivative().coeffs(), &p);
        if modp::degree(&modp::gcd(&fp, &dfp, &p)) != Some(0) {
            continue;
        }
        tried += 1;
        let monic = modp::make_monic(&fp, &p);
        let facs = berlekamp(&monic, &p);
        if facs.len() == 1 {
            return Ok(vec![f.primitive_part()]);
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, modular) = best.ok_or_else(|| Error::Internal("no suitable prime".into()))?;

    // Lift until p^k exceeds twice the coefficient bound for any factor.
    let norm: BigInt = f.coeffs().iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = BigInt::from(2) * &lc.abs() * &lc.abs() * (BigInt::one() << n) * norm;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
    }
    let lifted = hensel_lift_all(f, &modular, &p, &pk);
    Ok(recombine(f, lifted, &pk))
}

fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Deterministic Berlekamp factorization of a monic squarefree polynomial mod p.
fn berlekamp(f: &[BigInt], p: &BigInt) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    // Row i of Q holds x^(i p) mod f.
    let xp = modp::pow_mod(&[BigInt::zero(), BigInt::one()], p, f, p);
    let mut q = Vec::with_capacity(n);
    let mut cur = vec![BigInt::one()];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, BigInt::zero());
        q.push(row);
        cur = modp::rem(&modp::mul(&cur, &xp, p), f, p);
    }
    // v with v^p = v mod f solve v^T (Q - I) = 0, i.e. (Q - I)^T v = 0.
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let mut x = q[i][j].clone();
                    if i == j {
                        x -= 1;
                    }
                    x.mod_floor(p)
                })
                .collect()
        })
        .collect();
    let basis = modp::nullspace(&mut m, p);
    let r = basis.len();

    let mut factors = vec![f.to_vec()];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let v = modp::trim(v.clone());
        if modp::degree(&v).unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if modp::degree(&u) == Some(1) || next.len() + 1 > r {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            let mut s = BigInt::zero();
            while &s < p {
                let shifted = modp::sub(&v, &[s.clone()], p);
                let mut split = Vec::new();
                for w in pieces {
                    let g = modp::gcd(&w, &shifted, p);
                    let dg = modp::degree(&g).unwrap_or(0);
                    if dg > 0 && dg < modp::degree(&w).unwrap_or(0) {
                        let (h, _) = modp::divrem(&w, &g, p);
                        split.push(g);
                        split.push(h);
                    } else {
                        split.push(w);
                    }
                }
                pieces = split;
                s += 1;
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors
}

/// Lift `f = lc * prod(g_i) mod p` to the same identity mod `pk`, each lifted
/// factor monic.
fn hensel_lift_all(
    f: &IntPolynomial,
    modular: &[Vec<BigInt>],
    p: &BigInt,
    pk: &BigInt,
) -> Vec<Vec<BigInt>> {
    let lc_inv = modp::inverse(&f.leading(), pk);
    let mut target = modp::scale(&modp::reduce(f.coeffs(), pk), &lc_inv, pk);
    let mut out = Vec::new();
    for i in 0..modular.len() - 1 {
        let a0 = modular[i].clone();
        let b0 = modular[i + 1..]
            .iter()
            .fold(vec![BigInt::one()], |acc, g| modp::mul(&acc, g, p));
        let (a, b) = hensel_lift_pair(&target, a0, b0, p, pk);
        out.push(a);
        target = b;
    }
    out.push(target);
    out
}

/// Linear Hensel lifting of `f = a b mod p` (all monic) up to modulus `pk`.
fn hensel_lift_pair(
    f: &[BigInt],
    mut a: Vec<BigInt>,
    mut b: Vec<BigInt>,
    p: &BigInt,
    pk: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, t) = modp::ext_gcd(&a, &b, p);
    let mut m = p.clone();
    while &m < pk {
        let ab = modp::mul(&a, &b, pk);
        let diff = modp::sub(f, &ab, pk);
        let e: Vec<BigInt> = modp::trim(diff.iter().map(|c| (c / &m).mod_floor(p)).collect());
        let (q, alpha) = modp::divrem(&modp::mul(&e, &t, p), &a, p);
        let beta = modp::add(&modp::mul(&e, &s, p), &modp::mul(&q, &b, p), p);
        let next = &m * p;
        a = modp::add(&a, &modp::scale(&alpha, &m, &next), &next);
        b = modp::add(&b, &modp::scale(&beta, &m, &next), &next);
        m = next;
    }
    (a, b)
}

/// Zassenhaus subset recombination of lifted factors.
fn recombine(f: &IntPolynomial, mut lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<IntPolynomial> {
    let mut g = f.primitive_part();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        for subset in subsets(lifted.len(), size) {
            let lc = IntPolynomial::constant(g.leading());
            let prod = subset
                .iter()
                .fold(lc, |acc, &i| &acc * &IntPolynomial::new(lifted[i].clone()));
            let cand = prod.symmetric_mod(pk).primitive_part();
            if cand.degree().unwrap_or(0) == 0 {
                continue;
            }
            if let Some(q) = g.div_exact(&cand) {
                found.push(cand);
                g = q.primitive_part();
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, h)| h)
                    .collect();
                continue 'outer;
            }
        }
        size += 1;
    }
    if g.degree().unwrap_or(0) > 0 {
        found.push(g);
    }
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Dense polynomials over Z/m, lowest degree first, trailing zeros trimmed.
mod modp {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn degree(v: &[BigInt]) -> Option<usize> {
        v.len().checked_sub(1)
    }

    pub fn reduce(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        trim(v.iter().map(|c| c.mod_floor(m)).collect())
    }

    pub fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m))
                .collect(),
        )
    }

    pub fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m))
                .collect(),
        )
    }

    pub fn scale(a: &[BigInt], k: &BigInt, m: &BigInt) -> Vec<BigInt> {
        trim(a.iter().map(|c| (c * k).mod_floor(m)).collect())
    }

    pub fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        reduce(&out, m)
    }

    /// Modular inverse; `a` must be a unit mod `m`.
    pub fn inverse(a: &BigInt, m: &BigInt) -> BigInt {
        let e = a.mod_floor(m).extended_gcd(m);
        debug_assert!(e.gcd.is_one());
        e.x.mod_floor(m)
    }

    /// Division by a polynomial whose leading coefficient is a unit mod `m`.
    pub fn divrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
        let db = b.len() - 1;
        let inv = inverse(&b[db], m);
        let mut r = reduce(a, m);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = (r.last().unwrap() * &inv).mod_floor(m);
            for (j, y) in b.iter().enumerate() {
                r[shift + j] = (&r[shift + j] - &c * y).mod_floor(m);
            }
            q[shift] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn rem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        divrem(a, b, m).1
    }

    pub fn make_monic(a: &[BigInt], p: &BigInt) -> Vec<BigInt> {
        match a.last() {
            Some(l) => scale(a, &inverse(l, p), p),
            None => Vec::new(),
        }
    }

    /// Monic gcd over the field Z/p.
    pub fn gcd(a: &[BigInt], b: &[BigInt], p: &BigInt) -> Vec<BigInt> {
        let (mut x, mut y) = (reduce(a, p), reduce(b, p));
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        make_monic(&x, p)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(
        a: &[BigInt],
        b: &[BigInt],
        p: &BigInt,
    ) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
        let (mut r0, mut r1) = (reduce(a, p), reduce(b, p));
        let (mut s0, mut s1) = (vec![BigInt::one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![BigInt::one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            let t = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inverse(r0.last().expect("gcd of two zeros"), p);
        (scale(&r0, &inv, p), scale(&s0, &inv, p), scale(&t0, &inv, p))
    }

    pub fn pow_mod(base: &[BigInt], e: &BigInt, f: &[BigInt], p: &BigInt) -> Vec<BigInt> {
        let mut result = vec![BigInt::one()];
        let mut b = rem(base, f, p);
        let mut e = e.clone();
        let two = BigInt::from(2);
        while !e.is_zero() {
            if e.is_odd() {
                result = rem(&mul(&result, &b, p), f, p);
            }
            b = rem(&mul(&b, &b, p), f, p);
            e /= &two;
        }
        result
    }

    /// Basis of `{v : m v = 0}` over Z/p; `m` is destroyed.
    pub fn nullspace(m: &mut [Vec<BigInt>], p: &BigInt) -> Vec<Vec<BigInt>> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            let inv = inverse(&m[r][c], p);
            for x in m[r].iter_mut() {
                *x = (&*x * &inv).mod_floor(p);
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let k = m[i][c].clone();
                    let src = m[r].clone();
                    for (x, s) in m[i].iter_mut().zip(src) {
                        *x = (&*x - &k * s).mod_floor(p);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        (0..cols)
            .filter(|c| !pivot_cols.contains(c))
            .map(|free| {
                let mut v = vec![BigInt::zero(); cols];
                v[free] = BigInt::one();
                for (i, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = (-&m[i][free]).mod_floor(p);
                }
                v
            })
            .collect()
    }
}
