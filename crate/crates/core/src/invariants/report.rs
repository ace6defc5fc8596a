use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::EquivariantComplex;
use crate::error::Result;
use crate::groups::{ClassSum, TwistedClassSet};
use crate::json::{to_json_ints, JsonInt};
use crate::uz::UZClass;

use super::ell::{klein_williams, EllInvariant};
use super::kclass::{universal_invariant, KClass};
use super::traces::{
    lambda_invariant, lefschetz_number, quotient_lefschetz_number, reidemeister_from_fixed_points,
    reidemeister_trace, LambdaVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub ell_zero: bool,
    pub lambda_zero: bool,
    pub consistent: bool,
}

fn verdict(ell: &EllInvariant, lambda: &LambdaVector) -> VanishingReport {
    let ell_zero = ell.is_zero();
    let lambda_zero = lambda.is_zero();
    VanishingReport {
        ell_zero,
        lambda_zero,
        consistent: ell_zero == lambda_zero,
    }
}

/// Computes ℓ and λ and reports whether they vanish together.
pub fn vanishing_report(c: &EquivariantComplex) -> Result<VanishingReport> {
    Ok(verdict(&klein_williams(c), &lambda_invariant(c)?))
}

/// Per-class numbers that are not part of u, λ or ℓ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTraces {
    pub reidemeister: ClassSum,
    /// Only when the class carries fixed-point data.
    pub reidemeister_fixed_points: Option<ClassSum>,
    pub lefschetz: BigInt,
    pub quotient_lefschetz: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub complex: EquivariantComplex,
    pub u: KClass,
    pub lambda: LambdaVector,
    pub traces: Vec<ClassTraces>,
    pub ell: EllInvariant,
    pub vanishing: VanishingReport,
}

impl InvariantReport {
    pub fn compute(c: &EquivariantComplex) -> Result<Self> {
        let u = universal_invariant(c)?;
        let lambda = lambda_invariant(c)?;
        let ell = klein_williams(c);
        let traces = c
            .iso_classes
            .iter()
            .map(|d| {
                let fixed = if d.fixed_points.is_empty() {
                    None
                } else {
                    let classes = TwistedClassSet::pi1_only(&d.aut, &d.twist);
                    Some(reidemeister_from_fixed_points(&d.fixed_points, &classes)?)
                };
                Ok(ClassTraces {
                    reidemeister: reidemeister_trace(d),
                    reidemeister_fixed_points: fixed,
                    lefschetz: lefschetz_number(d),
                    quotient_lefschetz: quotient_lefschetz_number(d),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let vanishing = verdict(&ell, &lambda);
        Ok(InvariantReport {
            complex: c.clone(),
            u,
            lambda,
            traces,
            ell,
            vanishing,
        })
    }

    fn view(&self) -> ReportView {
        let g = &self.complex.group;
        let classes = self
            .complex
            .iso_classes
            .iter()
            .zip(&self.u.entries)
            .zip(&self.lambda.entries)
            .zip(&self.traces)
            .map(|(((d, u), (_, lambda)), t)| ClassView {
                subgroup: d.key.subgroup.describe(g),
                component: d.key.component.clone(),
                pi1_rank: d.aut.pi1_rank,
                weyl_order: d.aut.weyl.order(),
                u: u
                    .terms
                    .iter()
                    .map(|(m, k)| UTermView {
                        coeff: k.into(),
                        matrix: m
                            .to_rows()
                            .iter()
                            .map(|r| r.iter().map(|e| crate::groups::render_element(e, &d.aut)).collect())
                            .collect(),
                    })
                    .collect(),
                u_rendered: u.render(),
                uz: u.uz.as_ref().map(UZClass::to_string),
                lambda: class_view(lambda),
                reidemeister: class_view(&t.reidemeister),
                reidemeister_fixed_points: t.reidemeister_fixed_points.as_ref().map(class_view),
                lefschetz: (&t.lefschetz).into(),
                quotient_lefschetz: (&t.quotient_lefschetz).into(),
            })
            .collect();
        ReportView {
            name: self.complex.name.clone(),
            group_order: g.order(),
            classes,
            lambda_by_subgroup: self
                .lambda
                .by_subgroup()
                .iter()
                .map(|(h, s)| SubgroupSumView {
                    subgroup: h.describe(g),
                    total: class_view(s),
                })
                .collect(),
            ell: self
                .ell
                .summands
                .iter()
                .map(|s| EllView {
                    subgroup: s.subgroup.describe(g),
                    weyl_order: s.weyl_order,
                    total: class_view(&s.total()),
                    components: s
                        .components
                        .iter()
                        .map(|c| EllComponentView {
                            component: c.component.clone(),
                            multiplicity: c.multiplicity,
                            value: class_view(&c.value),
                        })
                        .collect(),
                })
                .collect(),
            vanishing: self.vanishing,
        }
    }

    /// Pretty JSON with a trailing newline; ordering is fully deterministic.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.view()).expect("serializable");
        s.push('\n');
        s
    }

    /// Human-readable summary with the same numbers as the JSON.
    pub fn summary(&self) -> String {
        let c = &self.complex;
        let g = &c.group;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "complex {} (group of order {}, {} isomorphism classes)",
            if c.name.is_empty() { "<unnamed>" } else { &c.name },
            g.order(),
            c.iso_classes.len()
        );
        for (((d, u), (_, lambda)), t) in c
            .iso_classes
            .iter()
            .zip(&self.u.entries)
            .zip(&self.lambda.entries)
            .zip(&self.traces)
        {
            let _ = writeln!(
                out,
                "class {}  pi1 rank {}, |W_x| = {}",
                d.key.describe(g),
                d.aut.pi1_rank,
                d.aut.weyl.order()
            );
            let _ = writeln!(out, "  u = {}", u.render());
            if let Some(uz) = &u.uz {
                let _ = writeln!(out, "  u in U(Z) = {uz}");
            }
            let _ = writeln!(out, "  \u{03BB} = {lambda}");
            let _ = write!(out, "  R = {}", t.reidemeister);
            if let Some(fp) = &t.reidemeister_fixed_points {
                let _ = write!(out, "  (from fixed points: {fp})");
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "  L = {}  quotient L = {}", t.lefschetz, t.quotient_lefschetz);
        }
        let _ = writeln!(out, "\u{2113} = {}", self.ell);
        for s in &self.ell.summands {
            let _ = writeln!(out, "  ({}) {}", s.subgroup.describe(g), s.total());
        }
        let by: Vec<String> = self
            .lambda
            .by_subgroup()
            .iter()
            .map(|(h, s)| format!("({}) {s}", h.describe(g)))
            .collect();
        let _ = writeln!(out, "\u{03BB} by subgroup class: {}", if by.is_empty() { "0".into() } else { by.join(", ") });
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            out,
            "vanishing: \u{2113} = 0: {}, \u{03BB} = 0: {}, consistent: {}",
            yes(self.vanishing.ell_zero),
            yes(self.vanishing.lambda_zero),
            yes(self.vanishing.consistent)
        );
        out
    }
}

#[derive(Serialize)]
struct ClassTermView {
    class: Vec<JsonInt>,
    coeff: JsonInt,
}

fn class_view(s: &ClassSum) -> Vec<ClassTermView> {
    s.terms()
        .iter()
        .map(|(r, c)| ClassTermView {
            class: to_json_ints(r),
            coeff: c.into(),
        })
        .collect()
}

#[derive(Serialize)]
struct UTermView {
    coeff: JsonInt,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct ClassView {
    subgroup: String,
    component: String,
    pi1_rank: usize,
    weyl_order: usize,
    u: Vec<UTermView>,
    u_rendered: String,
    uz: Option<String>,
    lambda: Vec<ClassTermView>,
    reidemeister: Vec<ClassTermView>,
    reidemeister_fixed_points: Option<Vec<ClassTermView>>,
    lefschetz: JsonInt,
    quotient_lefschetz: JsonInt,
}

#[derive(Serialize)]
struct SubgroupSumView {
    subgroup: String,
    total: Vec<ClassTermView>,
}

#[derive(Serialize)]
struct EllComponentView {
    component: String,
    multiplicity: usize,
    value: Vec<ClassTermView>,
}

#[derive(Serialize)]
struct EllView {
    subgroup: String,
    weyl_order: usize,
    total: Vec<ClassTermView>,
    components: Vec<EllComponentView>,
}

#[derive(Serialize)]
struct ReportView {
    name: String,
    group_order: usize,
    classes: Vec<ClassView>,
    lambda_by_subgroup: Vec<SubgroupSumView>,
    ell: Vec<EllView>,
    vanishing: VanishingReport,
}
