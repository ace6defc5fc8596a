use std::fmt;

use crate::complex::EquivariantComplex;
use crate::groups::{ClassSum, Subgroup, TwistedClassSet};

use super::traces::reidemeister_trace;

/// Contribution of one component orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllComponent {
    pub component: String,
    /// Orbit size `|W_G H| / |W_x|`.
    pub multiplicity: usize,
    /// Weyl-quotiented Reidemeister trace, already multiplied through the orbit.
    pub value: ClassSum,
}

/// The summand of ℓ at one subgroup class `(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllSummand {
    pub subgroup: Subgroup,
    pub weyl_order: usize,
    /// Sorted by component label.
    pub components: Vec<EllComponent>,
}

impl EllSummand {
    /// All components merged, class labels identified.
    pub fn total(&self) -> ClassSum {
        self.components.iter().fold(ClassSum::zero(), |acc, c| &acc + &c.value)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.value.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllInvariant {
    /// One summand per subgroup class present, ordered by (order, elements).
    pub summands: Vec<EllSummand>,
}

impl EllInvariant {
    pub fn is_zero(&self) -> bool {
        self.summands.iter().all(EllSummand::is_zero)
    }

    pub fn summand(&self, h: &Subgroup) -> Option<&EllSummand> {
        self.summands.iter().find(|s| &s.subgroup == h)
    }
}

impl fmt::Display for EllInvariant {
    /// `2[1] ⊕ 0 ⊕ 0 ⊕ 2[1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.total().to_string()).collect();
        f.write_str(&parts.join(" \u{2295} "))
    }
}

pub(crate) fn sort_key(h: &Subgroup) -> (usize, Vec<usize>) {
    (h.order(), h.elements().to_vec())
}

/// Klein–Williams invariant through its decomposition over subgroup classes.
pub fn klein_williams(c: &EquivariantComplex) -> EllInvariant {
    let mut summands: Vec<EllSummand> = Vec::new();
    for d in &c.iso_classes {
        let weyl_order = c.weyl_order(&d.key);
        let multiplicity = weyl_order / d.aut.weyl.order();
        let weyl_classes = TwistedClassSet::new(&d.aut, &d.twist);
        let value = reidemeister_trace(d)
            .map_classes(|v| weyl_classes.representative(v))
            .scale(&multiplicity.into());
        let comp = EllComponent {
            component: d.key.component.clone(),
            multiplicity,
            value,
        };
        match summands.last_mut() {
            Some(s) if s.subgroup == d.key.subgroup => s.components.push(comp),
            _ => summands.push(EllSummand {
                subgroup: d.key.subgroup.clone(),
                weyl_order,
                components: vec![comp],
            }),
        }
    }
    for s in &mut summands {
        s.components.sort_by(|a, b| a.component.cmp(&b.component));
    }
    EllInvariant { summands }
}
