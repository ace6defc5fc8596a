use std::collections::BTreeSet;

use super::finite::FiniteGroup;
use crate::error::{Error, Result};

/// Subgroup as a sorted set of element indices of its parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Checks that `elements` is a subgroup of `g`.
    pub fn new(g: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&x| x >= g.order()) {
            return Err(Error::NotSubgroup(format!("index {bad} is not an element")));
        }
        if !set.contains(&g.identity()) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &a in &set {
            if !set.contains(&g.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of '{}' missing", g.label(a))));
            }
            for &b in &set {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "product '{}'*'{}' missing",
                        g.label(a),
                        g.label(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            elements: set.into_iter().collect(),
        })
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup {
            elements: vec![g.identity()],
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            elements: g.elements().collect(),
        }
    }

    /// Subgroup generated by `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        let mut set: BTreeSet<usize> = BTreeSet::from([g.identity()]);
        let mut frontier: Vec<usize> = vec![g.identity()];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = g.mul(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            elements: set.into_iter().collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `a H a^-1`
    pub fn conjugate(&self, g: &FiniteGroup, a: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&h| g.conjugate(a, h)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    pub fn normalizer(&self, g: &FiniteGroup) -> Subgroup {
        Subgroup {
            elements: g.elements().filter(|&a| self.conjugate(g, a) == *self).collect(),
        }
    }

    /// Key used for canonical ordering: order first, then the index set.
    fn key(&self) -> (usize, &[usize]) {
        (self.order(), &self.elements)
    }

    /// `{1, g}` style rendering with element labels.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        let names: Vec<&str> = self.elements.iter().map(|&x| g.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A conjugacy class of subgroups with its canonical representative (the member
/// with the smallest index set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = g
        .elements()
        .map(|a| Subgroup::generated(g, &[a]))
        .collect();
    let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for a in g.elements() {
            if s.contains(a) {
                continue;
            }
            let mut gens = s.elements.clone();
            gens.push(a);
            let t = Subgroup::generated(g, &gens);
            if found.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.key().cmp(&b.key()));
    out
}

/// Conjugacy classes of subgroups ordered by (order, representative).
pub fn conjugacy_classes_of_subgroups(g: &FiniteGroup) -> Vec<SubgroupClass> {
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut assigned: BTreeSet<Subgroup> = BTreeSet::new();
    for s in all_subgroups(g) {
        if assigned.contains(&s) {
            continue;
        }
        let members: BTreeSet<Subgroup> = g.elements().map(|a| s.conjugate(g, a)).collect();
        let mut members: Vec<Subgroup> = members.into_iter().collect();
        members.sort_by(|a, b| a.key().cmp(&b.key()));
        assigned.extend(members.iter().cloned());
        classes.push(SubgroupClass {
            representative: members[0].clone(),
            members,
        });
    }
    classes.sort_by(|a, b| a.representative.key().cmp(&b.representative.key()));
    classes
}

/// Canonical representative of the conjugacy class of `h`.
pub fn class_representative(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    g.elements()
        .map(|a| h.conjugate(g, a))
        .min_by(|a, b| a.key().cmp(&b.key()))
        .expect("nonempty group")
}

/// `N_G(H)/H` with each coset represented by its smallest element.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub group: FiniteGroup,
    /// Coset representatives in the parent group, indexed like `group`.
    pub representatives: Vec<usize>,
    pub normalizer: Subgroup,
    pub subgroup: Subgroup,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Image in the quotient of an element of the normalizer.
    pub fn project(&self, parent: &FiniteGroup, x: usize) -> Option<usize> {
        if !self.normalizer.contains(x) {
            return None;
        }
        let rep = self
            .subgroup
            .elements()
            .iter()
            .map(|&h| parent.mul(x, h))
            .min()
            .expect("nonempty subgroup");
        self.representatives.iter().position(|&r| r == rep)
    }
}

pub fn weyl_group(g: &FiniteGroup, h: &Subgroup) -> Result<WeylGroup> {
    let h = Subgroup::new(g, h.elements().iter().copied())?;
    let n = h.normalizer(g);
    let mut reps: Vec<usize> = n
        .elements()
        .iter()
        .map(|&x| h.elements().iter().map(|&y| g.mul(x, y)).min().unwrap())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    reps.sort_unstable();
    let coset_of = |x: usize| {
        let r = h.elements().iter().map(|&y| g.mul(x, y)).min().unwrap();
        reps.iter().position(|&q| q == r).unwrap()
    };
    let table = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of(g.mul(a, b))).collect())
        .collect();
    let labels = reps.iter().map(|&r| g.label(r).to_string()).collect();
    let group = FiniteGroup::new(labels, table)?;
    Ok(WeylGroup {
        group,
        representatives: reps,
        normalizer: n,
        subgroup: h,
    })
}
