//! Finite groups, Weyl groups, the split extensions `Z^k ⋊ W`, their group
//! rings and twisted conjugacy classes.

mod aut;
mod finite;
mod group_ring;
mod subgroups;
mod twisted;

pub use aut::{AutElem, AutGroup, TwistData};
pub use finite::FiniteGroup;
pub use group_ring::{pi1_projection, render_element, render_matrix, GroupRingElement, GroupRingMatrix};
pub use subgroups::{
    all_subgroups, class_representative, conjugacy_classes_of_subgroups, weyl_group, Subgroup,
    SubgroupClass, WeylGroup,
};
pub use twisted::{render_class, twisted_classes, ClassSum, TwistedClassSet};
