//! The group U(Z): classes of integer endomorphisms up to the relations of K_0,
//! freely generated by irreducible monic integer polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::{char_poly, factor_over_q, IntMatrix, IntPolynomial};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UZClass {
    terms: BTreeMap<IntPolynomial, BigInt>,
}

impl UZClass {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The generator of a single irreducible monic polynomial.
    pub fn generator(p: IntPolynomial) -> Result<Self> {
        if !p.is_monic() {
            return Err(Error::Domain(format!("generator {p} is not monic")));
        }
        let f = factor_over_q(&p)?;
        if f.factors.len() != 1 || f.factors[0].1 != 1 {
            return Err(Error::Domain(format!("generator {p} is reducible")));
        }
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::from(1));
        Ok(UZClass { terms })
    }

    /// `sum_i m_i [f_i]` for `char_poly(a) = prod f_i^m_i`.
    pub fn of_polynomial(p: &IntPolynomial) -> Result<Self> {
        if !p.is_monic() {
            return Err(Error::Domain(format!("{p} is not monic")));
        }
        let f = factor_over_q(p)?;
        let terms = f
            .factors
            .into_iter()
            .map(|(g, m)| (g, BigInt::from(m)))
            .collect();
        Ok(UZClass { terms })
    }

    pub fn terms(&self) -> &BTreeMap<IntPolynomial, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, p: &IntPolynomial) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = UZClass::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    fn add_term(&mut self, p: IntPolynomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&p).unwrap_or_default() + c;
        if !sum.is_zero() {
            self.terms.insert(p, sum);
        }
    }

    /// Characteristic polynomial of any representative: `prod f^c` (needs c >= 0).
    pub fn polynomial(&self) -> Option<IntPolynomial> {
        let mut out = IntPolynomial::one();
        for (p, c) in &self.terms {
            let e = u32::try_from(c).ok()?;
            out = &out * &p.pow(e);
        }
        Some(out)
    }
}

/// Class `[A]` of a square integer matrix; the 0x0 matrix has class 0.
pub fn class_of_matrix(a: &IntMatrix) -> Result<UZClass> {
    UZClass::of_polynomial(&char_poly(a)?)
}

pub fn uz_add(a: &UZClass, b: &UZClass) -> UZClass {
    a + b
}

pub fn uz_neg(a: &UZClass) -> UZClass {
    -a
}

pub fn uz_eq(a: &UZClass, b: &UZClass) -> bool {
    a == b
}

impl Add for &UZClass {
    type Output = UZClass;
    fn add(self, rhs: &UZClass) -> UZClass {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &UZClass {
    type Output = UZClass;
    fn sub(self, rhs: &UZClass) -> UZClass {
        self + &(-rhs)
    }
}

impl Neg for &UZClass {
    type Output = UZClass;
    fn neg(self) -> UZClass {
        UZClass {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for UZClass {
    /// `+2·(x−1) −1·(x²+1)`; the zero class prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let sign = if c.is_negative() { '\u{2212}' } else { '+' };
                format!("{sign}{}\u{00B7}({p})", c.abs())
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn identity_class() {
        let c = class_of_matrix(&IntMatrix::identity(2)).unwrap();
        assert_eq!(c.to_string(), "+2\u{00B7}(x\u{2212}1)");
    }

    #[test]
    fn rotation_class() {
        let c = class_of_matrix(&m(&[&[0, -1], &[1, 0]])).unwrap();
        assert_eq!(c.to_string(), "+1\u{00B7}(x²+1)");
    }

    #[test]
    fn triangular_class() {
        let c = class_of_matrix(&m(&[&[2, 7], &[0, 3]])).unwrap();
        let expect = &class_of_matrix(&m(&[&[2]])).unwrap() + &class_of_matrix(&m(&[&[3]])).unwrap();
        assert_eq!(c, expect);
        assert_eq!(c.to_string(), "+1\u{00B7}(x\u{2212}2) +1\u{00B7}(x\u{2212}3)");
    }

    #[test]
    fn zero_and_generator_x() {
        assert!(class_of_matrix(&IntMatrix::zeros(0, 0)).unwrap().is_zero());
        assert_eq!(UZClass::zero().to_string(), "0");
        assert_eq!(class_of_matrix(&m(&[&[0]])).unwrap().to_string(), "+1\u{00B7}(x)");
    }

    #[test]
    fn group_laws() {
        let a = class_of_matrix(&m(&[&[1, 2], &[3, 4]])).unwrap();
        assert!((&a + &(-&a)).is_zero());
        let one = class_of_matrix(&m(&[&[1]])).unwrap();
        assert_eq!(&one + &one, class_of_matrix(&IntMatrix::identity(2)).unwrap());
        assert!(uz_eq(&uz_add(&a, &uz_neg(&a)), &UZClass::zero()));
    }

    #[test]
    fn mixed_signs_render_in_canonical_order() {
        let a = class_of_matrix(&m(&[&[0, 1], &[1, 0]])).unwrap();
        let b = class_of_matrix(&m(&[&[3]])).unwrap();
        assert_eq!(
            (&a - &b).to_string(),
            "+1\u{00B7}(x\u{2212}1) +1\u{00B7}(x+1) \u{2212}1\u{00B7}(x\u{2212}3)"
        );
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(class_of_matrix(&IntMatrix::zeros(1, 2)), Err(Error::Dimension(_))));
    }
}
