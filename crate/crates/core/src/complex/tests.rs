use super::*;
use crate::groups::FiniteGroup;

#[test]
fn builtins_load() {
    let e1 = builtin("example1").unwrap();
    assert_eq!(e1.iso_classes.len(), 2);
    assert_eq!(e1.iso_classes[0].key.subgroup.order(), 1);
    assert_eq!(e1.iso_classes[1].key.subgroup.order(), 2);
    let e3 = builtin("example3").unwrap();
    let comps: Vec<&str> = e3.iso_classes.iter().map(|d| d.key.component.as_str()).collect();
    assert_eq!(comps, ["S2", "S1g", "S1h", "a", "b"]);
    assert!(builtin("example4").is_err());
}

#[test]
fn round_trip() {
    for name in BUILTIN_NAMES {
        let c = builtin(name).unwrap();
        let again = load_complex(&to_json(&c)).unwrap();
        assert_eq!(c, again, "{name}");
        assert_eq!(to_json(&c), to_json(&again));
    }
}

#[test]
fn empty_complex() {
    let c = load_complex(r#"{"group": "Z2"}"#).unwrap();
    assert!(c.iso_classes.is_empty());
    assert_eq!(c.group, FiniteGroup::cyclic(2));
}

fn one_class(chain: &str) -> String {
    format!(r#"{{"group": "Zn:1", "iso_classes": [{{"subgroup_class": ["1"], "component": "X", "chain": {chain}}}]}}"#)
}

#[test]
fn boundary_square_rejected() {
    let doc = one_class(
        r#"[{"degree": 0, "rank": 1, "map": [[1]]},
            {"degree": 1, "rank": 1, "map": [[1]], "boundary": [[1]]},
            {"degree": 2, "rank": 1, "map": [[1]], "boundary": [[1]]}]"#,
    );
    assert!(matches!(load_complex(&doc), Err(Error::BoundarySquare { degree: 2, .. })));
}

#[test]
fn non_commuting_rejected() {
    let doc = one_class(
        r#"[{"degree": 0, "rank": 1, "map": [[1]]},
            {"degree": 1, "rank": 1, "map": [[2]], "boundary": [[1]]}]"#,
    );
    assert!(matches!(load_complex(&doc), Err(Error::ChainMapNotCommuting { degree: 1, .. })));
}

#[test]
fn mask_violation_rejected() {
    let doc = one_class(
        r#"[{"degree": 0, "rank": 2, "relative_mask": [true, false], "map": [[1, 1], [0, 1]]}]"#,
    );
    assert!(matches!(load_complex(&doc), Err(Error::Mask { degree: 0, .. })));
}

#[test]
fn cocycle_rejected() {
    let doc = r#"{"group": "Zn:1", "iso_classes": [{"subgroup_class": ["1"], "component": "X",
        "cocycle": [[0]], "chain": []}]}"#;
    assert!(matches!(load_complex(doc), Err(Error::NonSplit(_))));
}

#[test]
fn bad_group_and_subgroup() {
    let doc = r#"{"group": [[0, 0], [1, 1]]}"#;
    assert!(matches!(load_complex(doc), Err(Error::GroupAxiom(_))));
    let doc = r#"{"group": "Z2xZ2", "iso_classes": [{"subgroup_class": ["1", "g", "h"], "component": "X", "chain": []}]}"#;
    assert!(matches!(load_complex(doc), Err(Error::NotSubgroup(_))));
    assert!(matches!(load_complex("{"), Err(Error::Parse(_))));
    assert!(matches!(load_complex(r#"{"grp": "Z2"}"#), Err(Error::Schema(_))));
}

#[test]
fn orbit_index_mismatch_rejected() {
    let doc = r#"{"group": "Zn:1", "iso_classes": [{"subgroup_class": ["1"], "component": "X",
        "chain": [{"degree": 0, "rank": 1, "map": [[1]]}],
        "fixed_points": [{"point": "p", "orbit": "o", "index": 1},
                         {"point": "q", "orbit": "o", "index": -1}]}]}"#;
    let err = load_complex(doc).unwrap_err();
    assert!(matches!(err, Error::OrbitIndexMismatch { .. }));
}

#[test]
fn fixed_point_report() {
    let c = builtin("example2").unwrap();
    let key = c.iso_classes[0].key.clone();
    let fp = |point: &str, index: i64| FixedPointDatum {
        point: point.into(),
        orbit: "o".into(),
        index: index.into(),
        path_class: vec![],
    };
    assert!(validate_fixed_point_data(&c, &[(key.clone(), fp("p", 1)), (key.clone(), fp("q", 1))]).is_ok());
    assert!(validate_fixed_point_data(&c, &[(key.clone(), fp("p", 1)), (key, fp("q", -1))]).is_err());
}

#[test]
fn isotropy_must_be_respected() {
    // A free cell cannot carry a nontrivial stabilizer.
    let doc = r#"{"group": "Z2", "iso_classes": [{"subgroup_class": ["1"], "component": "X", "weyl": "Z2",
        "chain": [{"degree": 0, "rank": 1, "isotropy": [[{"weyl_elem": "g"}]], "map": [[1]]}]}]}"#;
    assert!(matches!(load_complex(doc), Err(Error::Isotropy { .. })));
    // Map rows must be invariant under the stabilizer.
    let doc = r#"{"group": "Z2", "iso_classes": [{"subgroup_class": ["1"], "component": "X", "weyl": "Z2",
        "chain": [{"degree": 0, "rank": 2, "relative_mask": [true, false],
                   "isotropy": [[{"weyl_elem": "g"}], []], "map": [[1, 0], [0, 1]]},
                  {"degree": 1, "rank": 1, "map": [[1]], "boundary": [[0, 1]]}]}]}"#;
    assert!(load_complex(doc).is_ok());
}

#[test]
fn weyl_order_must_divide() {
    let doc = r#"{"group": "Z2", "iso_classes": [{"subgroup_class": ["1", "g"], "component": "X", "weyl": "Z2", "chain": []}]}"#;
    assert!(matches!(load_complex(doc), Err(Error::Schema(_))));
}
