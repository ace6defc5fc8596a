use num_bigint::BigInt;

use crate::complex::{EquivariantComplex, FixedPointDatum, IsoClassData, IsoClassKey};
use crate::error::Result;
use crate::exact_algebra::IntMatrix;
use crate::groups::{pi1_projection, AutGroup, ClassSum, Subgroup, TwistedClassSet};

pub(crate) fn sign(p: usize) -> BigInt {
    BigInt::from(if p.is_multiple_of(2) { 1 } else { -1 })
}

fn coset_of(aut: &AutGroup, c: usize, stab: &[usize]) -> usize {
    stab.iter().map(|&s| aut.weyl.mul(c, s)).min().expect("stabilizer contains the identity")
}

/// Smallest element of each left coset `c·S` of `S` in `W`.
pub(crate) fn coset_reps(aut: &AutGroup, stab: &[usize]) -> Vec<usize> {
    let mut reps: Vec<usize> = aut.weyl.elements().map(|c| coset_of(aut, c, stab)).collect();
    reps.sort_unstable();
    reps.dedup();
    reps
}

/// Alternating `Z[pi1]`-trace of the absolute chain map, projected to
/// twisted conjugacy classes of `pi1`.
///
/// The free `Z[Aut/S_i]` summand of basis element `e_i` restricts to a free
/// `Z[pi1]`-module with basis `(0,c)·e_i`, one for each coset `c·S̄_i` of `W`.
/// A term `(v,w)` of the diagonal entry contributes to the coefficient of that
/// basis element iff `w ∈ S̄_i`, and then the `pi1` part is `θ(c)(v − s_v)`
/// with `s = (s_v, w)` the stabilizer element over `w`.
pub fn reidemeister_trace(d: &IsoClassData) -> ClassSum {
    let classes = TwistedClassSet::pi1_only(&d.aut, &d.twist);
    let mut out = ClassSum::zero();
    for c in &d.chain {
        let sgn = sign(c.degree);
        for i in 0..c.rank() {
            let entry = c.map.get(i, i);
            for rep in coset_reps(&d.aut, &c.weyl_stabilizer(i)) {
                let theta = d.aut.theta(rep);
                for (g, coeff) in entry.terms() {
                    let Some(s) = c.isotropy[i].iter().find(|s| s.w == g.w) else {
                        continue;
                    };
                    let diff: Vec<BigInt> = g.v.iter().zip(&s.v).map(|(a, b)| a - b).collect();
                    out.add_term(classes.representative(&theta.mul_vec(&diff)), coeff * &sgn);
                }
            }
        }
    }
    out
}

/// `Σ index · [path class]` over validated fixed-point data.
pub fn reidemeister_from_fixed_points(
    data: &[FixedPointDatum],
    classes: &TwistedClassSet,
) -> Result<ClassSum> {
    crate::complex::check_fixed_points("fixed point data", classes.rank(), data)?;
    let mut out = ClassSum::zero();
    for fp in data {
        out.add_term(classes.representative(&fp.path_class), fp.index.clone());
    }
    Ok(out)
}

/// Integer matrix of the chain map on the component `X(x) = X̃(x)/pi1` in
/// degree `p`, with cells indexed by basis element and Weyl coset.
pub fn component_matrix(d: &IsoClassData, p: usize) -> IntMatrix {
    let Some(c) = d.degree(p) else {
        return IntMatrix::zeros(0, 0);
    };
    let stabs: Vec<Vec<usize>> = (0..c.rank()).map(|j| c.weyl_stabilizer(j)).collect();
    let reps: Vec<Vec<usize>> = stabs.iter().map(|s| coset_reps(&d.aut, s)).collect();
    let mut offsets = Vec::with_capacity(reps.len());
    let mut n = 0;
    for r in &reps {
        offsets.push(n);
        n += r.len();
    }
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..c.rank() {
        for (a, &ci) in reps[i].iter().enumerate() {
            for j in 0..c.rank() {
                for (g, coeff) in c.map.get(i, j).terms() {
                    let target = coset_of(&d.aut, d.aut.weyl.mul(ci, g.w), &stabs[j]);
                    let b = reps[j].iter().position(|&r| r == target).expect("coset listed");
                    let (r, col) = (offsets[i] + a, offsets[j] + b);
                    let updated = m.get(r, col) + coeff;
                    m.set(r, col, updated);
                }
            }
        }
    }
    m
}

/// Lefschetz number of the map on the component `X(x)`.
pub fn lefschetz_number(d: &IsoClassData) -> BigInt {
    d.chain
        .iter()
        .map(|c| sign(c.degree) * component_matrix(d, c.degree).trace())
        .sum()
}

/// Lefschetz number of the induced map on the quotient `W_x \ X(x)`.
pub fn quotient_lefschetz_number(d: &IsoClassData) -> BigInt {
    d.chain
        .iter()
        .map(|c| sign(c.degree) * (0..c.rank()).map(|i| c.map.get(i, i).augmentation()).sum::<BigInt>())
        .sum()
}

/// `Σ_p (−1)^p` of the projected trace of the relative chain map.
pub fn lambda_of_class(d: &IsoClassData) -> Result<ClassSum> {
    let classes = TwistedClassSet::new(&d.aut, &d.twist);
    let mut out = ClassSum::zero();
    for c in &d.chain {
        let idx = c.unmasked();
        let tr = c.map.submatrix(&idx, &idx).trace();
        out = &out + &pi1_projection(&tr, &d.aut, &classes)?.scale(&sign(c.degree));
    }
    Ok(out)
}

/// λ per isomorphism class, in key order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVector {
    pub entries: Vec<(IsoClassKey, ClassSum)>,
}

impl LambdaVector {
    pub fn get(&self, key: &IsoClassKey) -> Option<&ClassSum> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_zero())
    }

    /// Sums over the component orbits of each subgroup class, class labels merged.
    pub fn by_subgroup(&self) -> Vec<(Subgroup, ClassSum)> {
        let mut out: Vec<(Subgroup, ClassSum)> = Vec::new();
        for (k, v) in &self.entries {
            match out.last_mut() {
                Some((h, total)) if *h == k.subgroup => *total = &*total + v,
                _ => out.push((k.subgroup.clone(), v.clone())),
            }
        }
        out
    }
}

pub fn lambda_invariant(c: &EquivariantComplex) -> Result<LambdaVector> {
    let entries = c
        .iso_classes
        .iter()
        .map(|d| Ok((d.key.clone(), lambda_of_class(d)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LambdaVector { entries })
}
