use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::aut::{AutElem, AutGroup, TwistData};
use super::twisted::{ClassSum, TwistedClassSet};
use crate::error::{Error, Result};
use crate::exact_algebra::IntMatrix;

/// Element of the integral group ring `Z[Aut(x)]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingElement {
    terms: BTreeMap<AutElem, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(g: AutElem, coeff: BigInt) -> Self {
        let mut e = Self::zero();
        e.add_term(g, coeff);
        e
    }

    pub fn one(aut: &AutGroup) -> Self {
        Self::monomial(aut.identity(), BigInt::one())
    }

    pub fn integer(aut: &AutGroup, n: BigInt) -> Self {
        Self::monomial(aut.identity(), n)
    }

    pub fn add_term(&mut self, g: AutElem, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let sum = self.terms.remove(&g).unwrap_or_default() + coeff;
        if !sum.is_zero() {
            self.terms.insert(g, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<AutElem, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn check(&self, aut: &AutGroup) -> Result<()> {
        self.terms.keys().try_for_each(|g| aut.check(g))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, aut: &AutGroup, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(aut.mul(a, b), x * y);
            }
        }
        out
    }

    /// Image under `phi` extended linearly.
    pub fn apply_twist(&self, twist: &TwistData) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            out.add_term(twist.apply(g), c.clone());
        }
        out
    }

    /// Augmentation: every group element maps to 1.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficient of the identity element.
    pub fn identity_coefficient(&self, aut: &AutGroup) -> BigInt {
        self.terms.get(&aut.identity()).cloned().unwrap_or_default()
    }

    /// Canonical form in `Z[Aut/S]`: each support element `g` is replaced by
    /// the smallest element of its coset `g S`.
    pub fn reduce_right(&self, aut: &AutGroup, stabilizer: &[AutElem]) -> Self {
        if stabilizer.len() <= 1 {
            return self.clone();
        }
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            let rep = stabilizer
                .iter()
                .map(|s| aut.mul(g, s))
                .min()
                .expect("nonempty stabilizer");
            out.add_term(rep, c.clone());
        }
        out
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("{c}{g:?}")).collect();
        f.write_str(&parts.join("+"))
    }
}

/// Projection to twisted classes: terms outside `pi1` are dropped and the rest
/// are keyed by their class representative.
pub fn pi1_projection(
    e: &GroupRingElement,
    aut: &AutGroup,
    classes: &TwistedClassSet,
) -> Result<ClassSum> {
    let mut out = ClassSum::zero();
    for (g, c) in e.terms() {
        if g.v.len() != classes.rank() {
            return Err(Error::Domain(format!(
                "element {g:?} is not in Z^{}",
                classes.rank()
            )));
        }
        aut.check(g)?;
        if g.is_pi1(aut) {
            out.add_term(classes.representative(&g.v), c.clone());
        }
    }
    Ok(out)
}

/// Matrix over `Z[Aut(x)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl GroupRingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GroupRingMatrix {
            rows,
            cols,
            entries: vec![GroupRingElement::zero(); rows * cols],
        }
    }

    pub fn identity(aut: &AutGroup, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GroupRingElement::one(aut));
        }
        m
    }

    /// Integer matrix embedded through the identity element.
    pub fn from_int_matrix(aut: &AutGroup, a: &IntMatrix) -> Self {
        let mut m = Self::zeros(a.rows(), a.cols());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                m.set(i, j, GroupRingElement::integer(aut, a.get(i, j).clone()));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GroupRingElement>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("expected rows of length {cols}")));
        }
        Ok(GroupRingMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: GroupRingElement) {
        self.entries[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> &[GroupRingElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<GroupRingElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GroupRingElement::is_zero)
    }

    pub fn check(&self, aut: &AutGroup) -> Result<()> {
        self.entries.iter().try_for_each(|e| e.check(aut))
    }

    pub fn mul(&self, aut: &AutGroup, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = GroupRingElement::zero();
                for l in 0..self.cols {
                    let (a, b) = (self.get(i, l), other.get(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(aut, b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("adding matrices of different shapes".into()));
        }
        Ok(GroupRingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupRingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(k)).collect(),
        }
    }

    pub fn apply_twist(&self, twist: &TwistData) -> Self {
        GroupRingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.apply_twist(twist)).collect(),
        }
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> GroupRingElement {
        (0..self.rows.min(self.cols)).fold(GroupRingElement::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Entrywise augmentation.
    pub fn augmentation(&self) -> IntMatrix {
        let entries = self.entries.iter().map(GroupRingElement::augmentation).collect();
        IntMatrix::from_entries(self.rows, self.cols, entries).expect("shape preserved")
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Integer matrix when every entry is supported on the identity.
    pub fn as_integer_matrix(&self, aut: &AutGroup) -> Option<IntMatrix> {
        let id = aut.identity();
        let entries = self
            .entries
            .iter()
            .map(|e| match e.terms().len() {
                0 => Some(BigInt::zero()),
                1 => e.terms().get(&id).cloned(),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        IntMatrix::from_entries(self.rows, self.cols, entries).ok()
    }
}

impl fmt::Debug for GroupRingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|e| format!("{e:?}")).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Human-readable entry such as `−g`, `2`, `t·g` using Weyl labels and
/// `t^(v)` for pi1 parts.
pub fn render_element(e: &GroupRingElement, aut: &AutGroup) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (g, c)) in e.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i > 0 {
            out.push_str(if neg { "\u{2212}" } else { "+" });
        } else if neg {
            out.push('\u{2212}');
        }
        let mag = c.abs();
        let mut word = Vec::new();
        if g.v.iter().any(|x| !x.is_zero()) {
            let v: Vec<String> = g.v.iter().map(ToString::to_string).collect();
            word.push(format!("t^({})", v.join(",")));
        }
        if !g.is_pi1(aut) {
            word.push(aut.weyl.label(g.w).to_string());
        }
        if word.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('\u{00B7}');
            }
            out.push_str(&word.join("\u{00B7}"));
        }
    }
    out
}

pub fn render_matrix(m: &GroupRingMatrix, aut: &AutGroup) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let r: Vec<String> = m.row(i).iter().map(|e| render_element(e, aut)).collect();
            format!("[{}]", r.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{twisted_classes, FiniteGroup};

    fn z2() -> AutGroup {
        AutGroup::finite(FiniteGroup::cyclic(2))
    }

    #[test]
    fn projection_drops_non_pi1() {
        let aut = z2();
        let classes = twisted_classes(&aut, &TwistData::identity(0));
        let minus_g = GroupRingElement::monomial(AutElem::new(vec![], 1), BigInt::from(-1));
        assert!(pi1_projection(&minus_g, &aut, &classes).unwrap().is_zero());
        let minus_one = GroupRingElement::integer(&aut, BigInt::from(-1));
        let p = pi1_projection(&minus_one, &aut, &classes).unwrap();
        assert_eq!(p.coefficient(&[]), BigInt::from(-1));
    }

    #[test]
    fn projection_with_pi1() {
        let aut = AutGroup::new(
            1,
            FiniteGroup::cyclic(2),
            vec![IntMatrix::identity(1), IntMatrix::identity(1)],
        )
        .unwrap();
        let classes = twisted_classes(&aut, &TwistData::identity(1));
        let mut e = GroupRingElement::monomial(aut.pi1(vec![BigInt::from(3)]), BigInt::from(2));
        e.add_term(AutElem::new(vec![BigInt::from(1)], 1), BigInt::from(5));
        let p = pi1_projection(&e, &aut, &classes).unwrap();
        assert_eq!(p, ClassSum::single(vec![BigInt::from(3)], BigInt::from(2)));
    }

    #[test]
    fn mixed_groups_rejected() {
        let aut = z2();
        let classes = twisted_classes(&aut, &TwistData::identity(0));
        let e = GroupRingElement::monomial(AutElem::new(vec![BigInt::one()], 0), BigInt::one());
        assert!(matches!(pi1_projection(&e, &aut, &classes), Err(Error::Domain(_))));
    }

    #[test]
    fn ring_arithmetic() {
        let aut = z2();
        let g = GroupRingElement::monomial(AutElem::new(vec![], 1), BigInt::one());
        let one = GroupRingElement::one(&aut);
        assert_eq!(g.mul(&aut, &g), one);
        let x = one.add(&g);
        // (1 + g)^2 = 2 (1 + g)
        assert_eq!(x.mul(&aut, &x), x.scale(&BigInt::from(2)));
        let m = GroupRingMatrix::from_rows(vec![vec![g.clone(), one.clone()], vec![one.clone(), g.clone()]], 2).unwrap();
        let sq = m.mul(&aut, &m).unwrap();
        assert_eq!(sq.get(0, 0), &one.scale(&BigInt::from(2)));
        assert_eq!(sq.get(0, 1), &g.scale(&BigInt::from(2)));
        assert_eq!(m.trace(), g.scale(&BigInt::from(2)));
        assert_eq!(render_element(&g.neg(), &aut), "\u{2212}g");
    }

    #[test]
    fn right_reduction() {
        let aut = z2();
        let stab = vec![aut.identity(), AutElem::new(vec![], 1)];
        let g = GroupRingElement::monomial(AutElem::new(vec![], 1), BigInt::one());
        assert_eq!(g.reduce_right(&aut, &stab), GroupRingElement::one(&aut));
    }
}
