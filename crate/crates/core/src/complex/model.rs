use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groups::{
    class_representative, weyl_group, AutElem, AutGroup, FiniteGroup, GroupRingElement,
    GroupRingMatrix, Subgroup, TwistData,
};

/// A conjugacy class `(H)` together with a component-orbit label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoClassKey {
    /// Canonical representative of the subgroup class.
    pub subgroup: Subgroup,
    pub component: String,
}

impl Ord for IsoClassKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.subgroup.order(), self.subgroup.elements(), &self.component).cmp(&(
            other.subgroup.order(),
            other.subgroup.elements(),
            &other.component,
        ))
    }
}

impl PartialOrd for IsoClassKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl IsoClassKey {
    pub fn describe(&self, g: &FiniteGroup) -> String {
        format!("{}:{}", self.subgroup.describe(g), self.component)
    }
}

/// Chain data in one degree. Row `i` of `map` is the image of basis element
/// `e_i`; row `i` of `boundary` is `∂ e_i` in the basis of degree `p - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDegree {
    pub degree: usize,
    /// `true` marks basis elements lying in the singular part `X^{>H}(x)`.
    pub mask: Vec<bool>,
    /// Stabilizer in `Aut(x)` of each basis element (a finite subgroup, sorted).
    pub isotropy: Vec<Vec<AutElem>>,
    pub map: GroupRingMatrix,
    pub boundary: Option<GroupRingMatrix>,
}

impl ChainDegree {
    /// Free basis with no singular cells and no boundary.
    pub fn free(aut: &AutGroup, degree: usize, map: GroupRingMatrix) -> Self {
        let n = map.rows();
        ChainDegree {
            degree,
            mask: vec![false; n],
            isotropy: vec![vec![aut.identity()]; n],
            map,
            boundary: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.mask.len()
    }

    /// Indices of basis elements outside the singular part.
    pub fn unmasked(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.mask[i]).collect()
    }

    /// Images in `W` of the stabilizer of basis element `j`.
    pub fn weyl_stabilizer(&self, j: usize) -> Vec<usize> {
        self.isotropy[j].iter().map(|s| s.w).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub point: String,
    pub orbit: String,
    pub index: BigInt,
    pub path_class: Vec<BigInt>,
}

/// Chain-level data of one isomorphism class of the fundamental category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClassData {
    pub key: IsoClassKey,
    pub aut: AutGroup,
    pub twist: TwistData,
    /// Sorted by degree, degrees distinct.
    pub chain: Vec<ChainDegree>,
    pub fixed_points: Vec<FixedPointDatum>,
}

impl IsoClassData {
    /// Closes the isotropy generators, reduces coefficients to canonical form
    /// and validates everything that is local to the class.
    pub fn new(
        key: IsoClassKey,
        aut: AutGroup,
        twist: TwistData,
        mut chain: Vec<ChainDegree>,
        fixed_points: Vec<FixedPointDatum>,
    ) -> Result<Self> {
        twist.validate(&aut)?;
        chain.sort_by_key(|c| c.degree);
        if let Some(w) = chain.windows(2).find(|w| w[0].degree == w[1].degree) {
            return Err(Error::Schema(format!("degree {} listed twice", w[0].degree)));
        }
        for c in &mut chain {
            close_isotropy(&aut, c)?;
        }
        let ranks: BTreeMap<usize, usize> = chain.iter().map(|c| (c.degree, c.rank())).collect();
        let stabs: BTreeMap<usize, Vec<Vec<AutElem>>> =
            chain.iter().map(|c| (c.degree, c.isotropy.clone())).collect();
        for c in &mut chain {
            shape_check(&aut, c, &ranks)?;
            let own = stabs[&c.degree].clone();
            c.map = reduce_columns(&aut, &c.map, &own);
            if let Some(b) = &c.boundary {
                let below = stabs.get(&(c.degree.wrapping_sub(1))).cloned().unwrap_or_default();
                c.boundary = Some(reduce_columns(&aut, b, &below));
            }
        }
        let data = IsoClassData {
            key,
            aut,
            twist,
            chain,
            fixed_points,
        };
        super::validate::validate_iso_class(&data)?;
        Ok(data)
    }

    pub fn degree(&self, p: usize) -> Option<&ChainDegree> {
        self.chain.iter().find(|c| c.degree == p)
    }

    pub fn rank(&self, p: usize) -> usize {
        self.degree(p).map_or(0, ChainDegree::rank)
    }

    pub fn stabilizers(&self, p: usize) -> Vec<Vec<AutElem>> {
        self.degree(p).map(|c| c.isotropy.clone()).unwrap_or_default()
    }
}

fn close_isotropy(aut: &AutGroup, c: &mut ChainDegree) -> Result<()> {
    let n = c.map.rows();
    if c.isotropy.is_empty() {
        c.isotropy = vec![Vec::new(); n];
    }
    if c.mask.is_empty() && n > 0 {
        c.mask = vec![false; n];
    }
    if c.isotropy.len() != n || c.mask.len() != n {
        return Err(Error::Schema(format!(
            "degree {}: rank, mask and isotropy lengths disagree",
            c.degree
        )));
    }
    for (j, gens) in c.isotropy.iter_mut().enumerate() {
        for g in gens.iter() {
            aut.check(g).map_err(|e| Error::Isotropy {
                degree: c.degree,
                detail: format!("basis element {j}: {e}"),
            })?;
        }
        *gens = aut.finite_closure(gens).ok_or_else(|| Error::Isotropy {
            degree: c.degree,
            detail: format!(
                "stabilizer of basis element {j} is not a finite subgroup mapping injectively to W"
            ),
        })?;
    }
    Ok(())
}

fn shape_check(aut: &AutGroup, c: &ChainDegree, ranks: &BTreeMap<usize, usize>) -> Result<()> {
    let n = c.rank();
    if c.map.rows() != n || c.map.cols() != n {
        return Err(Error::Dimension(format!(
            "degree {}: map is {}x{}, rank is {n}",
            c.degree,
            c.map.rows(),
            c.map.cols()
        )));
    }
    c.map.check(aut)?;
    if let Some(b) = &c.boundary {
        let below = if c.degree == 0 { 0 } else { ranks.get(&(c.degree - 1)).copied().unwrap_or(0) };
        if b.rows() != n || b.cols() != below {
            return Err(Error::Dimension(format!(
                "degree {}: boundary is {}x{}, expected {n}x{below}",
                c.degree,
                b.rows(),
                b.cols()
            )));
        }
        b.check(aut)?;
    }
    Ok(())
}

/// Column `j` of a matrix has coefficients in `Z[Aut / S_j]`.
pub(crate) fn reduce_columns(
    aut: &AutGroup,
    m: &GroupRingMatrix,
    stabs: &[Vec<AutElem>],
) -> GroupRingMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e: &GroupRingElement = m.get(i, j);
            out.set(i, j, e.reduce_right(aut, &stabs[j]));
        }
    }
    out
}

/// Finite G-CW complex presented by chain data per isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantComplex {
    pub name: String,
    pub description: String,
    pub group: FiniteGroup,
    /// Sorted by key.
    pub iso_classes: Vec<IsoClassData>,
}

impl EquivariantComplex {
    pub fn new(
        name: impl Into<String>,
        description: impl Into<String>,
        group: FiniteGroup,
        mut iso_classes: Vec<IsoClassData>,
    ) -> Result<Self> {
        let mut keys = BTreeSet::new();
        for d in &mut iso_classes {
            let h = Subgroup::new(&group, d.key.subgroup.elements().iter().copied())?;
            d.key.subgroup = class_representative(&group, &h);
            let w = weyl_group(&group, &d.key.subgroup)?;
            if w.order() % d.aut.weyl.order() != 0 {
                return Err(Error::Schema(format!(
                    "class {}: Weyl part of order {} does not divide |W_G H| = {}",
                    d.key.describe(&group),
                    d.aut.weyl.order(),
                    w.order()
                )));
            }
            if !keys.insert(d.key.clone()) {
                return Err(Error::Schema(format!(
                    "duplicate isomorphism class {}",
                    d.key.describe(&group)
                )));
            }
        }
        iso_classes.sort_by(|a, b| a.key.cmp(&b.key));
        Ok(EquivariantComplex {
            name: name.into(),
            description: description.into(),
            group,
            iso_classes,
        })
    }

    pub fn empty(group: FiniteGroup) -> Self {
        EquivariantComplex {
            name: "empty".into(),
            description: String::new(),
            group,
            iso_classes: Vec::new(),
        }
    }

    pub fn class(&self, key: &IsoClassKey) -> Option<&IsoClassData> {
        self.iso_classes.iter().find(|d| &d.key == key)
    }

    /// Order of `W_G H` for the subgroup of `key`.
    pub fn weyl_order(&self, key: &IsoClassKey) -> usize {
        weyl_group(&self.group, &key.subgroup)
            .map(|w| w.order())
            .expect("validated subgroup")
    }
}
