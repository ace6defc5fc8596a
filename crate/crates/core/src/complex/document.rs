//! The JSON document format for equivariant complexes.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::model::{ChainDegree, EquivariantComplex, FixedPointDatum, IsoClassData, IsoClassKey};
use crate::error::{Error, Result};
use crate::exact_algebra::IntMatrix;
use crate::groups::{AutElem, AutGroup, FiniteGroup, GroupRingElement, GroupRingMatrix, Subgroup, TwistData};
use crate::json::{from_json_ints, to_json_ints, JsonInt};

/// A group: builtin name, bare multiplication table, or labelled table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Name(String),
    Table(Vec<Vec<usize>>),
    Labeled {
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
}

impl GroupDoc {
    pub fn resolve(&self) -> Result<FiniteGroup> {
        match self {
            GroupDoc::Name(n) => FiniteGroup::builtin(n),
            GroupDoc::Table(t) => FiniteGroup::from_table(t.clone()),
            GroupDoc::Labeled { labels, table } => FiniteGroup::new(labels.clone(), table.clone()),
        }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupDoc::Labeled {
            labels: g.labels().to_vec(),
            table: g.table().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub group: GroupDoc,
    #[serde(default)]
    pub iso_classes: Vec<IsoClassDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsoClassDoc {
    /// Element labels of any subgroup in the conjugacy class.
    pub subgroup_class: Vec<String>,
    pub component: String,
    #[serde(default)]
    pub pi1_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl: Option<GroupDoc>,
    /// One k×k matrix per Weyl element, in the Weyl group's element order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<JsonInt>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_pi: Option<Vec<Vec<JsonInt>>>,
    /// Extension cocycle; only split extensions are supported.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<serde_json::Value>,
    pub chain: Vec<ChainDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixed_points: Vec<FixedPointDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDoc {
    pub degree: usize,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relative_mask: Option<Vec<bool>>,
    /// Generators of the stabilizer of each basis element.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isotropy: Option<Vec<Vec<ElemDoc>>>,
    pub map: Vec<Vec<EntryDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<Vec<EntryDoc>>>,
}

/// A group-ring entry: a plain integer (multiple of the identity) or a list of terms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryDoc {
    Int(JsonInt),
    Terms(Vec<TermDoc>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: JsonInt,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl_elem: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElemDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl_elem: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedPointDoc {
    pub point: String,
    pub orbit: String,
    pub index: JsonInt,
    #[serde(default)]
    pub path_class: Vec<JsonInt>,
}

fn json_error(e: serde_json::Error) -> Error {
    if e.is_syntax() || e.is_eof() {
        Error::Parse(e.to_string())
    } else {
        Error::Schema(e.to_string())
    }
}

/// Parses and fully validates a complex document.
pub fn load_complex(text: &str) -> Result<EquivariantComplex> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(json_error)?;
    doc.to_complex()
}

pub fn to_json(c: &EquivariantComplex) -> String {
    let mut s = serde_json::to_string_pretty(&ComplexDoc::from_complex(c)).expect("serializable");
    s.push('\n');
    s
}

fn int_matrix(rows: &[Vec<JsonInt>], n: usize, what: &str) -> Result<IntMatrix> {
    if n == 0 && rows.iter().all(Vec::is_empty) {
        return Ok(IntMatrix::identity(0));
    }
    let m = IntMatrix::from_rows(rows.iter().map(|r| from_json_ints(r)).collect())?;
    if m.rows() != n || m.cols() != n {
        return Err(Error::Dimension(format!("{what} must be {n}x{n}")));
    }
    Ok(m)
}

fn elem(aut: &AutGroup, vector: &Option<Vec<JsonInt>>, weyl_elem: &Option<String>) -> Result<AutElem> {
    let v = match vector {
        Some(v) => from_json_ints(v),
        None => vec![BigInt::from(0); aut.pi1_rank],
    };
    if v.len() != aut.pi1_rank {
        return Err(Error::Dimension(format!(
            "vector of length {} in a class with pi1 rank {}",
            v.len(),
            aut.pi1_rank
        )));
    }
    let w = match weyl_elem {
        Some(l) => aut.weyl.index_of(l)?,
        None => aut.weyl.identity(),
    };
    Ok(AutElem::new(v, w))
}

fn entry(aut: &AutGroup, e: &EntryDoc) -> Result<GroupRingElement> {
    match e {
        EntryDoc::Int(n) => Ok(GroupRingElement::integer(aut, n.0.clone())),
        EntryDoc::Terms(ts) => {
            let mut out = GroupRingElement::zero();
            for t in ts {
                out.add_term(elem(aut, &t.vector, &t.weyl_elem)?, t.coeff.0.clone());
            }
            Ok(out)
        }
    }
}

fn matrix(aut: &AutGroup, rows: &[Vec<EntryDoc>], nrows: usize, ncols: usize, what: &str) -> Result<GroupRingMatrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension(format!("{what} must be {nrows}x{ncols}")));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|e| entry(aut, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    GroupRingMatrix::from_rows(rows, ncols)
}

impl ComplexDoc {
    pub fn to_complex(&self) -> Result<EquivariantComplex> {
        let group = self.group.resolve()?;
        let classes = self
            .iso_classes
            .iter()
            .map(|d| d.to_data(&group))
            .collect::<Result<Vec<_>>>()?;
        EquivariantComplex::new(self.name.clone(), self.description.clone(), group, classes)
    }

    pub fn from_complex(c: &EquivariantComplex) -> Self {
        ComplexDoc {
            name: c.name.clone(),
            description: c.description.clone(),
            group: GroupDoc::from_group(&c.group),
            iso_classes: c.iso_classes.iter().map(|d| IsoClassDoc::from_data(&c.group, d)).collect(),
        }
    }
}

impl IsoClassDoc {
    fn to_data(&self, group: &FiniteGroup) -> Result<IsoClassData> {
        if self.cocycle.is_some() {
            return Err(Error::NonSplit(format!(
                "class '{}' supplies an extension cocycle; only split extensions Z^k ⋊ W are supported",
                self.component
            )));
        }
        let elems = self
            .subgroup_class
            .iter()
            .map(|l| group.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        let subgroup = Subgroup::new(group, elems)?;
        let weyl = match &self.weyl {
            Some(w) => w.resolve()?,
            None => FiniteGroup::trivial(),
        };
        let k = self.pi1_rank;
        let action = match &self.action {
            Some(ms) => ms
                .iter()
                .map(|m| int_matrix(m, k, "action matrix"))
                .collect::<Result<Vec<_>>>()?,
            None => vec![IntMatrix::identity(k); weyl.order()],
        };
        let aut = AutGroup::new(k, weyl, action)?;
        let twist = TwistData {
            phi_pi: match &self.phi_pi {
                Some(m) => int_matrix(m, k, "phi_pi")?,
                None => IntMatrix::identity(k),
            },
        };
        let ranks: std::collections::BTreeMap<usize, usize> =
            self.chain.iter().map(|c| (c.degree, c.rank)).collect();
        let mut chain = Vec::new();
        for c in &self.chain {
            let n = c.rank;
            let map = matrix(&aut, &c.map, n, n, &format!("map in degree {}", c.degree))?;
            let boundary = match &c.boundary {
                Some(b) => {
                    let below = if c.degree == 0 { 0 } else { ranks.get(&(c.degree - 1)).copied().unwrap_or(0) };
                    Some(matrix(&aut, b, n, below, &format!("boundary in degree {}", c.degree))?)
                }
                None => None,
            };
            let mask = c.relative_mask.clone().unwrap_or_else(|| vec![false; n]);
            if mask.len() != n {
                return Err(Error::Schema(format!(
                    "relative_mask in degree {} has length {}, rank is {n}",
                    c.degree,
                    mask.len()
                )));
            }
            let isotropy = match &c.isotropy {
                Some(iso) => {
                    if iso.len() != n {
                        return Err(Error::Schema(format!(
                            "isotropy in degree {} lists {} entries, rank is {n}",
                            c.degree,
                            iso.len()
                        )));
                    }
                    iso.iter()
                        .map(|gens| gens.iter().map(|g| elem(&aut, &g.vector, &g.weyl_elem)).collect())
                        .collect::<Result<Vec<Vec<_>>>>()?
                }
                None => vec![Vec::new(); n],
            };
            chain.push(ChainDegree {
                degree: c.degree,
                mask,
                isotropy,
                map,
                boundary,
            });
        }
        let fixed_points = self
            .fixed_points
            .iter()
            .map(|f| FixedPointDatum {
                point: f.point.clone(),
                orbit: f.orbit.clone(),
                index: f.index.0.clone(),
                path_class: if f.path_class.is_empty() {
                    vec![BigInt::from(0); k]
                } else {
                    from_json_ints(&f.path_class)
                },
            })
            .collect();
        let key = IsoClassKey {
            subgroup,
            component: self.component.clone(),
        };
        IsoClassData::new(key, aut, twist, chain, fixed_points)
    }

    fn from_data(group: &FiniteGroup, d: &IsoClassData) -> Self {
        let aut = &d.aut;
        let k = aut.pi1_rank;
        let elem_doc = |g: &AutElem| ElemDoc {
            vector: (k > 0).then(|| to_json_ints(&g.v)),
            weyl_elem: Some(aut.weyl.label(g.w).to_string()),
        };
        let entry_doc = |e: &GroupRingElement| {
            EntryDoc::Terms(
                e.terms()
                    .iter()
                    .map(|(g, c)| TermDoc {
                        coeff: c.into(),
                        vector: (k > 0).then(|| to_json_ints(&g.v)),
                        weyl_elem: Some(aut.weyl.label(g.w).to_string()),
                    })
                    .collect(),
            )
        };
        let matrix_doc = |m: &GroupRingMatrix| -> Vec<Vec<EntryDoc>> {
            m.to_rows().iter().map(|r| r.iter().map(entry_doc).collect()).collect()
        };
        let int_doc = |m: &IntMatrix| -> Vec<Vec<JsonInt>> {
            m.to_rows().iter().map(|r| to_json_ints(r)).collect()
        };
        let chain = d
            .chain
            .iter()
            .map(|c| {
                let nontrivial = c.isotropy.iter().any(|s| s.len() > 1);
                ChainDoc {
                    degree: c.degree,
                    rank: c.rank(),
                    relative_mask: Some(c.mask.clone()),
                    isotropy: nontrivial.then(|| {
                        c.isotropy
                            .iter()
                            .map(|s| s.iter().filter(|g| **g != aut.identity()).map(elem_doc).collect())
                            .collect()
                    }),
                    map: matrix_doc(&c.map),
                    boundary: c.boundary.as_ref().map(matrix_doc),
                }
            })
            .collect();
        IsoClassDoc {
            subgroup_class: d.key.subgroup.elements().iter().map(|&x| group.label(x).to_string()).collect(),
            component: d.key.component.clone(),
            pi1_rank: k,
            weyl: Some(GroupDoc::from_group(&aut.weyl)),
            action: Some(aut.actions().iter().map(int_doc).collect()),
            phi_pi: Some(int_doc(&d.twist.phi_pi)),
            cocycle: None,
            chain,
            fixed_points: d
                .fixed_points
                .iter()
                .map(|f| FixedPointDoc {
                    point: f.point.clone(),
                    orbit: f.orbit.clone(),
                    index: (&f.index).into(),
                    path_class: to_json_ints(&f.path_class),
                })
                .collect(),
        }
    }
}
