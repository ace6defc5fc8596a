use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::aut::{AutGroup, TwistData};
use crate::exact_algebra::{HermiteBasis, IntMatrix};

/// Twisted conjugacy classes of `Z^k` under `a ~ theta(w) a + (phi_pi - I) m`.
///
/// Vectors are first reduced modulo the lattice spanned by the columns of
/// `phi_pi - I` and then minimised lexicographically over the W-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedClassSet {
    lattice: HermiteBasis,
    thetas: Vec<IntMatrix>,
}

impl TwistedClassSet {
    /// Classes including the Weyl part of the relation.
    pub fn new(aut: &AutGroup, twist: &TwistData) -> Self {
        Self::build(aut, twist, aut.actions().to_vec())
    }

    /// Classes of `pi1` alone (W acts trivially on the relation).
    pub fn pi1_only(aut: &AutGroup, twist: &TwistData) -> Self {
        Self::build(aut, twist, vec![IntMatrix::identity(aut.pi1_rank)])
    }

    fn build(aut: &AutGroup, twist: &TwistData, thetas: Vec<IntMatrix>) -> Self {
        let k = aut.pi1_rank;
        let shifted = &twist.phi_pi - &IntMatrix::identity(k);
        let gens: Vec<Vec<BigInt>> = (0..k).map(|j| shifted.column(j)).collect();
        TwistedClassSet {
            lattice: HermiteBasis::from_generators(k, &gens),
            thetas,
        }
    }

    pub fn rank(&self) -> usize {
        self.lattice.dim()
    }

    pub fn representative(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.thetas
            .iter()
            .map(|t| self.lattice.reduce(&t.mul_vec(v)))
            .min()
            .expect("at least the identity action")
    }

    pub fn same_class(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.representative(a) == self.representative(b)
    }

    pub fn is_finite(&self) -> bool {
        self.lattice.has_finite_quotient()
    }

    /// All class representatives in increasing order, when finite.
    pub fn enumerate(&self) -> Option<Vec<Vec<BigInt>>> {
        let mut reps: Vec<Vec<BigInt>> = self
            .lattice
            .enumerate_quotient()?
            .iter()
            .map(|v| self.representative(v))
            .collect();
        reps.sort();
        reps.dedup();
        Some(reps)
    }
}

pub fn twisted_classes(aut: &AutGroup, twist: &TwistData) -> TwistedClassSet {
    TwistedClassSet::new(aut, twist)
}

/// Finitely supported integer combination of twisted class representatives.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSum {
    terms: BTreeMap<Vec<BigInt>, BigInt>,
}

impl ClassSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(rep: Vec<BigInt>, coeff: BigInt) -> Self {
        let mut s = Self::zero();
        s.add_term(rep, coeff);
        s
    }

    pub fn add_term(&mut self, rep: Vec<BigInt>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let sum = self.terms.remove(&rep).unwrap_or_default() + coeff;
        if !sum.is_zero() {
            self.terms.insert(rep, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<BigInt>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, rep: &[BigInt]) -> BigInt {
        self.terms.get(rep).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (r, c) in &self.terms {
            out.add_term(r.clone(), c * k);
        }
        out
    }

    /// Re-key every term through `f`, merging coefficients.
    pub fn map_classes(&self, mut f: impl FnMut(&[BigInt]) -> Vec<BigInt>) -> Self {
        let mut out = Self::zero();
        for (r, c) in &self.terms {
            out.add_term(f(r), c.clone());
        }
        out
    }
}

/// `1` for the trivial class, `(a,b)` otherwise.
pub fn render_class(rep: &[BigInt]) -> String {
    if rep.iter().all(Zero::is_zero) {
        "1".to_string()
    } else {
        let parts: Vec<String> = rep.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(","))
    }
}

impl Add for &ClassSum {
    type Output = ClassSum;
    fn add(self, rhs: &ClassSum) -> ClassSum {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for ClassSum {
    /// `2[1] − [(3)]`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (r, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("\u{2212}")?,
                (0, false) => {}
                (_, true) => f.write_str(" \u{2212} ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "[{}]", render_class(r))?;
        }
        Ok(())
    }
}
