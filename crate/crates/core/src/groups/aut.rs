use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::finite::FiniteGroup;
use crate::error::{Error, Result};
use crate::exact_algebra::IntMatrix;

/// Element `(v, w)` of `Z^k ⋊ W`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutElem {
    pub v: Vec<BigInt>,
    pub w: usize,
}

impl AutElem {
    pub fn new(v: Vec<BigInt>, w: usize) -> Self {
        AutElem { v, w }
    }

    pub fn is_pi1(&self, aut: &AutGroup) -> bool {
        self.w == aut.weyl.identity()
    }
}

impl fmt::Debug for AutElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.v.iter().map(ToString::to_string).collect();
        write!(f, "(({}),{})", v.join(","), self.w)
    }
}

/// Split extension `Aut(x) = Z^k ⋊ W` with `W` acting through `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    pub pi1_rank: usize,
    pub weyl: FiniteGroup,
    action: Vec<IntMatrix>,
}

impl AutGroup {
    pub fn new(pi1_rank: usize, weyl: FiniteGroup, action: Vec<IntMatrix>) -> Result<Self> {
        if action.len() != weyl.order() {
            return Err(Error::Schema(format!(
                "action lists {} matrices for a Weyl part of order {}",
                action.len(),
                weyl.order()
            )));
        }
        for (w, m) in action.iter().enumerate() {
            if m.rows() != pi1_rank || m.cols() != pi1_rank {
                return Err(Error::Dimension(format!(
                    "action of '{}' is {}x{}, expected {pi1_rank}x{pi1_rank}",
                    weyl.label(w),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if action[weyl.identity()] != IntMatrix::identity(pi1_rank) {
            return Err(Error::Schema("the identity must act trivially on pi1".into()));
        }
        for a in weyl.elements() {
            for b in weyl.elements() {
                if action[weyl.mul(a, b)] != &action[a] * &action[b] {
                    return Err(Error::Schema(format!(
                        "action is not a homomorphism at ('{}', '{}')",
                        weyl.label(a),
                        weyl.label(b)
                    )));
                }
            }
        }
        Ok(AutGroup {
            pi1_rank,
            weyl,
            action,
        })
    }

    /// `Z^k` with trivial Weyl part.
    pub fn free_abelian(k: usize) -> Self {
        AutGroup {
            pi1_rank: k,
            weyl: FiniteGroup::trivial(),
            action: vec![IntMatrix::identity(k)],
        }
    }

    /// `Z^0 ⋊ W`
    pub fn finite(weyl: FiniteGroup) -> Self {
        let action = vec![IntMatrix::identity(0); weyl.order()];
        AutGroup {
            pi1_rank: 0,
            weyl,
            action,
        }
    }

    pub fn theta(&self, w: usize) -> &IntMatrix {
        &self.action[w]
    }

    pub fn actions(&self) -> &[IntMatrix] {
        &self.action
    }

    pub fn identity(&self) -> AutElem {
        AutElem::new(vec![BigInt::zero(); self.pi1_rank], self.weyl.identity())
    }

    pub fn pi1(&self, v: Vec<BigInt>) -> AutElem {
        AutElem::new(v, self.weyl.identity())
    }

    pub fn check(&self, a: &AutElem) -> Result<()> {
        if a.v.len() != self.pi1_rank || a.w >= self.weyl.order() {
            return Err(Error::Domain(format!(
                "element {a:?} does not belong to Z^{} ⋊ W(order {})",
                self.pi1_rank,
                self.weyl.order()
            )));
        }
        Ok(())
    }

    /// `(v, w)(v', w') = (v + theta(w) v', w w')`
    pub fn mul(&self, a: &AutElem, b: &AutElem) -> AutElem {
        let tv = self.action[a.w].mul_vec(&b.v);
        AutElem::new(
            a.v.iter().zip(tv).map(|(x, y)| x + y).collect(),
            self.weyl.mul(a.w, b.w),
        )
    }

    /// `(v, w)^-1 = (-theta(w^-1) v, w^-1)`
    pub fn inv(&self, a: &AutElem) -> AutElem {
        let wi = self.weyl.inv(a.w);
        let tv = self.action[wi].mul_vec(&a.v);
        AutElem::new(tv.into_iter().map(|x| -x).collect(), wi)
    }

    /// Closure of `gens` when it is a finite subgroup mapping injectively to `W`.
    pub fn finite_closure(&self, gens: &[AutElem]) -> Option<Vec<AutElem>> {
        let mut set: BTreeSet<AutElem> = BTreeSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.mul(&x, g);
                if set.insert(y.clone()) {
                    if set.len() > self.weyl.order() {
                        return None;
                    }
                    frontier.push(y);
                }
            }
        }
        let images: BTreeSet<usize> = set.iter().map(|a| a.w).collect();
        (images.len() == set.len()).then(|| set.into_iter().collect())
    }
}

/// The action `phi_pi` of the self-map on `pi1`; the Weyl component is fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    pub phi_pi: IntMatrix,
}

impl TwistData {
    pub fn identity(k: usize) -> Self {
        TwistData {
            phi_pi: IntMatrix::identity(k),
        }
    }

    /// `phi(v, w) = (phi_pi v, w)` is a homomorphism iff `phi_pi` commutes with
    /// every `theta(w)`.
    pub fn validate(&self, aut: &AutGroup) -> Result<()> {
        let k = aut.pi1_rank;
        if self.phi_pi.rows() != k || self.phi_pi.cols() != k {
            return Err(Error::Dimension(format!(
                "phi_pi is {}x{}, expected {k}x{k}",
                self.phi_pi.rows(),
                self.phi_pi.cols()
            )));
        }
        for w in aut.weyl.elements() {
            let t = aut.theta(w);
            if &self.phi_pi * t != t * &self.phi_pi {
                return Err(Error::Schema(format!(
                    "phi_pi does not commute with the action of '{}'",
                    aut.weyl.label(w)
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self, a: &AutElem) -> AutElem {
        AutElem::new(self.phi_pi.mul_vec(&a.v), a.w)
    }
}
