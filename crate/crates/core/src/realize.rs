//! Wedges of 2- and 3-spheres realizing a prescribed class in `U(Z)`.

use crate::complex::{ChainDegree, EquivariantComplex, IsoClassData, IsoClassKey};
use crate::error::{Error, Result};
use crate::exact_algebra::IntMatrix;
use crate::groups::{AutGroup, FiniteGroup, GroupRingMatrix, Subgroup, TwistData};

/// Target `[a] − [b′]`: `a` acts on the 2-spheres, `[1] ⊕ b′` on the 3-spheres.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationTarget {
    pub a: IntMatrix,
    pub b_prime: IntMatrix,
}

impl RealizationTarget {
    pub fn new(a: IntMatrix, b_prime: IntMatrix) -> Result<Self> {
        for (name, m) in [("a", &a), ("b_prime", &b_prime)] {
            if !m.is_square() {
                return Err(Error::Dimension(format!(
                    "{name} must be square, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(RealizationTarget { a, b_prime })
    }
}

/// `X = S^3 ∨ ⋁_n S^2 ∨ ⋁_m S^3` with one 0-cell, no 1-cells and zero boundaries.
pub fn realize(t: &RealizationTarget) -> Result<EquivariantComplex> {
    let group = FiniteGroup::trivial();
    let aut = AutGroup::free_abelian(0);
    let (n, m) = (t.a.rows(), t.b_prime.rows());
    let top = IntMatrix::block_diag(&IntMatrix::identity(1), &t.b_prime)?;
    let maps = [IntMatrix::identity(1), IntMatrix::zeros(0, 0), t.a.clone(), top];
    let ranks = [1, 0, n, m + 1];
    let chain = maps
        .iter()
        .enumerate()
        .map(|(p, a)| {
            let mut c = ChainDegree::free(&aut, p, GroupRingMatrix::from_int_matrix(&aut, a));
            if p > 0 {
                c.boundary = Some(GroupRingMatrix::zeros(ranks[p], ranks[p - 1]));
            }
            c
        })
        .collect();
    let key = IsoClassKey {
        subgroup: Subgroup::trivial(&group),
        component: "X".into(),
    };
    let data = IsoClassData::new(key, aut, TwistData::identity(0), chain, Vec::new())?;
    EquivariantComplex::new(
        "wedge",
        format!("wedge of one 3-sphere, {n} 2-spheres and {m} further 3-spheres"),
        group,
        vec![data],
    )
}
