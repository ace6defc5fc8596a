use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::complex::{EquivariantComplex, IsoClassKey};
use crate::error::Result;
use crate::groups::{render_matrix, AutGroup, GroupRingMatrix};
use crate::uz::{class_of_matrix, UZClass};

use super::traces::sign;

/// Blocks up to this size are brought to a permutation-invariant normal form.
const CANONICAL_BLOCK_LIMIT: usize = 6;

/// Formal combination of φ-endomorphism matrices for one isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KEntry {
    pub key: IsoClassKey,
    pub aut: AutGroup,
    /// Normalised: irreducible blocks in canonical form, nonzero coefficients.
    pub terms: BTreeMap<GroupRingMatrix, BigInt>,
    /// Image in `U(Z)` when `Aut(x)` is trivial.
    pub uz: Option<UZClass>,
}

impl KEntry {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// e.g. `−[−1]`, `[−g] + [[0, 1], [1, 0]]`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let body = if m.rows() == 1 {
                format!("[{}]", crate::groups::render_element(m.get(0, 0), &self.aut))
            } else {
                render_matrix(m, &self.aut)
            };
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('\u{2212}'),
                (0, false) => {}
                (_, true) => out.push_str(" \u{2212} "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag}\u{00B7}"));
            }
            out.push_str(&body);
        }
        out
    }
}

/// The universal invariant, one entry per isomorphism class in key order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    pub entries: Vec<KEntry>,
}

impl KClass {
    pub fn get(&self, key: &IsoClassKey) -> Option<&KEntry> {
        self.entries.iter().find(|e| &e.key == key)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(KEntry::is_zero)
    }
}

/// Diagonal blocks of the finest visible block-triangular form: the strongly
/// connected components of the support graph.
pub fn split_blocks(m: &GroupRingMatrix) -> Vec<GroupRingMatrix> {
    let n = m.rows();
    let mut g = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && !m.get(i, j).is_zero() {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    tarjan_scc(&g)
        .into_iter()
        .map(|comp| {
            let mut idx: Vec<usize> = comp.iter().map(|v| v.index()).collect();
            idx.sort_unstable();
            canonical_block(&m.submatrix(&idx, &idx))
        })
        .collect()
}

/// Least conjugate under basis permutations (for small blocks).
pub fn canonical_block(m: &GroupRingMatrix) -> GroupRingMatrix {
    let n = m.rows();
    if n <= 1 || n > CANONICAL_BLOCK_LIMIT {
        return m.clone();
    }
    (0..n)
        .permutations(n)
        .map(|p| m.submatrix(&p, &p))
        .min()
        .expect("at least one permutation")
}

/// Splits, canonicalises and cancels a signed list of matrices.
pub fn normalize_terms(
    terms: impl IntoIterator<Item = (GroupRingMatrix, BigInt)>,
) -> BTreeMap<GroupRingMatrix, BigInt> {
    let mut out: BTreeMap<GroupRingMatrix, BigInt> = BTreeMap::new();
    for (m, c) in terms {
        if m.rows() == 0 || c.is_zero() {
            continue;
        }
        for b in split_blocks(&m) {
            *out.entry(b).or_default() += &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Σ_p (−1)^p [relative chain map in degree p]` per isomorphism class.
pub fn universal_invariant(c: &EquivariantComplex) -> Result<KClass> {
    let mut entries = Vec::new();
    for d in &c.iso_classes {
        let raw = d.chain.iter().map(|ch| {
            let idx = ch.unmasked();
            (ch.map.submatrix(&idx, &idx), sign(ch.degree))
        });
        let terms = normalize_terms(raw);
        let uz = if d.aut.pi1_rank == 0 && d.aut.weyl.order() == 1 {
            let mut total = UZClass::zero();
            for (m, k) in &terms {
                let a = m.as_integer_matrix(&d.aut).expect("trivial Aut(x)");
                total = &total + &class_of_matrix(&a)?.scale(k);
            }
            Some(total)
        } else {
            None
        };
        entries.push(KEntry {
            key: d.key.clone(),
            aut: d.aut.clone(),
            terms,
            uz,
        });
    }
    Ok(KClass { entries })
}
