use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{EquivariantComplex, IsoClassKey};
use crate::error::{Error, Result};
use crate::groups::{class_representative, weyl_group, FiniteGroup, Subgroup};

use super::ell::{sort_key, EllComponent, EllInvariant, EllSummand};

fn check_embedding(h: &FiniteGroup, g: &FiniteGroup, map: &[usize]) -> Result<()> {
    if map.len() != h.order() {
        return Err(Error::Domain(format!(
            "embedding lists {} images for a group of order {}",
            map.len(),
            h.order()
        )));
    }
    if let Some(&x) = map.iter().find(|&&x| x >= g.order()) {
        return Err(Error::Domain(format!("image index {x} is outside the target group")));
    }
    if map.iter().collect::<BTreeSet<_>>().len() != map.len() {
        return Err(Error::Domain("embedding is not injective".into()));
    }
    if !h.is_homomorphism(g, map) {
        return Err(Error::Domain("embedding is not a homomorphism".into()));
    }
    Ok(())
}

fn image(g: &FiniteGroup, map: &[usize], n: &Subgroup) -> Result<Subgroup> {
    Subgroup::new(g, n.elements().iter().map(|&x| map[x]))
}

/// Class representatives in `G` and component labels for induced keys. Labels
/// of classes that fuse in `G` get their subgroup in `H` appended.
fn induced_keys(
    h: &FiniteGroup,
    g: &FiniteGroup,
    map: &[usize],
    keys: &[(Subgroup, String)],
) -> Result<Vec<IsoClassKey>> {
    let reps = keys
        .iter()
        .map(|(n, _)| Ok(class_representative(g, &image(g, map, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut count: BTreeMap<(Vec<usize>, &str), usize> = BTreeMap::new();
    for (r, (_, comp)) in reps.iter().zip(keys) {
        *count.entry((r.elements().to_vec(), comp.as_str())).or_default() += 1;
    }
    Ok(reps
        .iter()
        .zip(keys)
        .map(|(r, (n, comp))| {
            let clash = count[&(r.elements().to_vec(), comp.as_str())] > 1;
            IsoClassKey {
                subgroup: r.clone(),
                component: if clash { format!("{comp}@{}", n.describe(h)) } else { comp.clone() },
            }
        })
        .collect())
}

/// `G ×_H X` for an embedding `H → G` given as image indices. Each class of
/// `Π(H, X)` becomes one class of the induced complex with the same chain
/// data: the stabilizer of the slice component in `W_G N` is the one in `W_H N`.
pub fn induce(c: &EquivariantComplex, g: &FiniteGroup, map: &[usize]) -> Result<EquivariantComplex> {
    check_embedding(&c.group, g, map)?;
    let keys: Vec<(Subgroup, String)> = c
        .iso_classes
        .iter()
        .map(|d| (d.key.subgroup.clone(), d.key.component.clone()))
        .collect();
    let new_keys = induced_keys(&c.group, g, map, &keys)?;
    let classes = c
        .iso_classes
        .iter()
        .zip(new_keys)
        .map(|(d, key)| {
            let mut d = d.clone();
            d.key = key;
            d
        })
        .collect();
    EquivariantComplex::new(c.name.clone(), c.description.clone(), g.clone(), classes)
}

/// `i_*` on ℓ: a class at `(N)` in `H` is summed over the cosets `gH` with
/// `g ∈ N_G(N)`, i.e. multiplied by `|N_G(N)| / |N_H(N)|`.
pub fn induce_ell(
    ell: &EllInvariant,
    h: &FiniteGroup,
    g: &FiniteGroup,
    map: &[usize],
) -> Result<EllInvariant> {
    check_embedding(h, g, map)?;
    let keys: Vec<(Subgroup, String)> = ell
        .summands
        .iter()
        .flat_map(|s| s.components.iter().map(|c| (s.subgroup.clone(), c.component.clone())))
        .collect();
    let new_keys = induced_keys(h, g, map, &keys)?;
    let mut new_keys = new_keys.into_iter();
    let mut merged: BTreeMap<(usize, Vec<usize>), EllSummand> = BTreeMap::new();
    for s in &ell.summands {
        let img = image(g, map, &s.subgroup)?;
        let factor = img.normalizer(g).order() / s.subgroup.normalizer(h).order();
        for comp in &s.components {
            let key = new_keys.next().expect("one key per component");
            let entry = merged.entry(sort_key(&key.subgroup)).or_insert_with(|| EllSummand {
                weyl_order: weyl_group(g, &key.subgroup).map(|w| w.order()).unwrap_or(0),
                subgroup: key.subgroup.clone(),
                components: Vec::new(),
            });
            entry.components.push(EllComponent {
                component: key.component,
                multiplicity: comp.multiplicity * factor,
                value: comp.value.scale(&factor.into()),
            });
        }
    }
    let mut summands: Vec<EllSummand> = merged.into_values().collect();
    for s in &mut summands {
        s.components.sort_by(|a, b| a.component.cmp(&b.component));
    }
    Ok(EllInvariant { summands })
}
