use std::collections::BTreeMap;

use super::model::{reduce_columns, EquivariantComplex, FixedPointDatum, IsoClassData, IsoClassKey};
use crate::error::{Error, Result};
use crate::groups::{render_element, GroupRingElement, GroupRingMatrix};

pub(crate) fn validate_iso_class(d: &IsoClassData) -> Result<()> {
    for c in &d.chain {
        check_isotropy(d, c.degree)?;
        check_mask(d, c.degree)?;
    }
    check_boundary_square(d)?;
    check_commuting(d)?;
    check_fixed_points(&d.key.component, d.aut.pi1_rank, &d.fixed_points)
}

fn check_isotropy(d: &IsoClassData, p: usize) -> Result<()> {
    let c = d.degree(p).expect("existing degree");
    let aut = &d.aut;
    for j in 0..c.rank() {
        if !c.mask[j] && c.isotropy[j].len() > 1 {
            return Err(Error::Isotropy {
                degree: p,
                detail: format!("basis element {j} is outside the singular part but has nontrivial stabilizer"),
            });
        }
    }
    let own = &c.isotropy;
    let below = if p == 0 { Vec::new() } else { d.stabilizers(p - 1) };
    for k in 0..c.rank() {
        for s in &own[k] {
            if *s == aut.identity() {
                continue;
            }
            let fs = d.twist.apply(s);
            for j in 0..c.rank() {
                let e = c.map.get(k, j);
                let moved = GroupRingElement::monomial(fs.clone(), 1.into())
                    .mul(aut, e)
                    .reduce_right(aut, &own[j]);
                if &moved != e {
                    return Err(Error::Isotropy {
                        degree: p,
                        detail: format!(
                            "map row {k} is not invariant under its stabilizer element {s:?}"
                        ),
                    });
                }
            }
            if let Some(b) = &c.boundary {
                for j in 0..b.cols() {
                    let e = b.get(k, j);
                    let moved = GroupRingElement::monomial(s.clone(), 1.into())
                        .mul(aut, e)
                        .reduce_right(aut, &below[j]);
                    if &moved != e {
                        return Err(Error::Isotropy {
                            degree: p,
                            detail: format!(
                                "boundary row {k} is not invariant under its stabilizer element {s:?}"
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_mask(d: &IsoClassData, p: usize) -> Result<()> {
    let c = d.degree(p).expect("existing degree");
    for i in (0..c.rank()).filter(|&i| c.mask[i]) {
        for j in c.unmasked() {
            if !c.map.get(i, j).is_zero() {
                return Err(Error::Mask {
                    degree: p,
                    detail: format!("singular basis element {i} maps onto non-singular element {j}"),
                });
            }
        }
        if let (Some(b), Some(lower)) = (&c.boundary, p.checked_sub(1).and_then(|q| d.degree(q))) {
            for j in lower.unmasked() {
                if !b.get(i, j).is_zero() {
                    return Err(Error::Mask {
                        degree: p,
                        detail: format!(
                            "boundary of singular basis element {i} meets non-singular element {j}"
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

fn first_nonzero(m: &GroupRingMatrix) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m.get(i, j).is_zero())
}

fn check_boundary_square(d: &IsoClassData) -> Result<()> {
    for c in &d.chain {
        let Some(p) = c.degree.checked_sub(2) else { continue };
        let (Some(dp), Some(lower)) = (&c.boundary, d.degree(c.degree - 1)) else {
            continue;
        };
        let Some(dq) = &lower.boundary else { continue };
        let prod = reduce_columns(&d.aut, &dp.mul(&d.aut, dq)?, &d.stabilizers(p));
        if let Some((i, j)) = first_nonzero(&prod) {
            return Err(Error::BoundarySquare {
                degree: c.degree,
                detail: format!(
                    "entry ({i},{j}) of the composite is {}",
                    render_element(prod.get(i, j), &d.aut)
                ),
            });
        }
    }
    Ok(())
}

fn check_commuting(d: &IsoClassData) -> Result<()> {
    for c in &d.chain {
        let Some(b) = &c.boundary else { continue };
        if b.cols() == 0 {
            continue;
        }
        let q = c.degree - 1;
        let lower = d.degree(q).expect("nonzero rank below");
        let stabs = d.stabilizers(q);
        let left = reduce_columns(&d.aut, &c.map.mul(&d.aut, b)?, &stabs);
        let right = reduce_columns(&d.aut, &b.apply_twist(&d.twist).mul(&d.aut, &lower.map)?, &stabs);
        if left != right {
            let diff = left.add(&right.scale(&(-1).into()))?;
            let (i, j) = first_nonzero(&diff).unwrap_or((0, 0));
            return Err(Error::ChainMapNotCommuting {
                degree: c.degree,
                detail: format!(
                    "entry ({i},{j}): f∂ gives {}, ∂f gives {}",
                    render_element(right.get(i, j), &d.aut),
                    render_element(left.get(i, j), &d.aut)
                ),
            });
        }
    }
    Ok(())
}

pub(crate) fn check_fixed_points(component: &str, k: usize, data: &[FixedPointDatum]) -> Result<()> {
    let mut seen: BTreeMap<&str, &FixedPointDatum> = BTreeMap::new();
    for fp in data {
        if fp.path_class.len() != k {
            return Err(Error::Schema(format!(
                "fixed point '{}' has a path class of length {}, expected {k}",
                fp.point,
                fp.path_class.len()
            )));
        }
        match seen.get(fp.orbit.as_str()) {
            Some(first) if first.index != fp.index => {
                return Err(Error::OrbitIndexMismatch {
                    iso_class: component.to_string(),
                    orbit: fp.orbit.clone(),
                    first: format!("{} ({})", first.index, first.point),
                    second: format!("{} ({})", fp.index, fp.point),
                });
            }
            Some(_) => {}
            None => {
                seen.insert(&fp.orbit, fp);
            }
        }
    }
    Ok(())
}

/// Accepts fixed-point data iff indices agree along every orbit label.
pub fn validate_fixed_point_data(
    c: &EquivariantComplex,
    data: &[(IsoClassKey, FixedPointDatum)],
) -> Result<()> {
    let mut grouped: BTreeMap<&IsoClassKey, Vec<FixedPointDatum>> = BTreeMap::new();
    for (key, fp) in data {
        grouped.entry(key).or_default().push(fp.clone());
    }
    for (key, fps) in grouped {
        let d = c.class(key).ok_or_else(|| {
            Error::Schema(format!("unknown isomorphism class {}", key.describe(&c.group)))
        })?;
        check_fixed_points(&key.describe(&c.group), d.aut.pi1_rank, &fps)?;
    }
    Ok(())
}
