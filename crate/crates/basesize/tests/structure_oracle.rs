//! Oracle values for root systems, subgroup dimensions and class datasets.

use basesize::classdata::*;
use basesize::rootsys::*;

#[test]
fn root_counts_and_dimensions() {
    for (name, roots, dim) in [("E8", 120, 248), ("E7", 63, 133), ("E6", 36, 78), ("F4", 24, 52), ("G2", 6, 14), ("A3", 6, 15), ("D5", 20, 45)] {
        let t: SimpleType = name.parse().unwrap();
        let rs = build_root_system(t.family, t.rank).unwrap();
        assert_eq!(rs.num_positive_roots(), roots, "{name}");
        assert_eq!(dim_group(&rs), dim, "{name}");
    }
}

#[test]
fn invalid_types_are_rejected() {
    assert!(SimpleType::new(Family::E, 9).is_err());
    assert!(SimpleType::new(Family::D, 3).is_err());
    assert!("X3".parse::<SimpleType>().is_err());
}

#[test]
fn parabolic_quotients_of_exceptional_groups() {
    let expected: &[(&str, &[usize])] = &[
        ("E8", &[78, 92, 98, 106, 104, 97, 83, 57]),
        ("E7", &[33, 42, 47, 53, 50, 42, 27]),
        ("E6", &[16, 21, 25, 29, 25, 16]),
        ("F4", &[15, 20, 20, 15]),
        ("G2", &[5, 5]),
    ];
    for (name, dims) in expected {
        let t: SimpleType = name.parse().unwrap();
        for (i, &d) in dims.iter().enumerate() {
            let p = ParabolicDescriptor::new(build_root_system(t.family, t.rank).unwrap(), i + 1).unwrap();
            assert_eq!(parabolic_quotient_dim(&p), d, "{name} P{}", i + 1);
        }
    }
}

#[test]
fn long_root_class_dimensions() {
    for (name, dim) in [("E8", 58), ("E7", 34), ("E6", 22), ("F4", 16), ("G2", 6)] {
        let t: SimpleType = name.parse().unwrap();
        assert_eq!(build_root_system(t.family, t.rank).unwrap().long_root_class_dim(), dim, "{name}");
    }
}

#[test]
fn subgroup_labels() {
    assert_eq!(SubgroupDescriptor::parse("A1E7").unwrap().dimension, 136);
    assert_eq!(SubgroupDescriptor::parse("D8").unwrap().dimension, 120);
    assert_eq!(SubgroupDescriptor::parse("T1E6").unwrap().dimension, 79);
    assert_eq!(canonical_label("D5T1").unwrap(), "T1D5");
    let e8: SimpleType = "E8".parse().unwrap();
    let (row, desc) = lookup_maximal(e8, "E7A1").unwrap();
    assert_eq!((row.label, desc.dimension), ("A1E7", 136));
    assert!(lookup_maximal(e8, "A3").is_err());
}

#[test]
fn shipped_datasets_load_and_declare_their_supremum() {
    for name in SHIPPED_DATASETS {
        let ds = load_dataset(resolve_dataset(name).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
        let (sup, _) = sup_ratio(&ds.records).unwrap();
        assert_eq!(sup, parse_ratio(&ds.header.expected_sup_ratio).unwrap(), "{name}");
    }
}

#[test]
fn dataset_validation_rejects_bad_rows() {
    let header = r#"{"schema":1,"group":"G2","subgroup":"A2","expected_sup_ratio":"2/3","source":"t","characteristic":null,"completeness":"partial"}"#;
    let bad_dims = r#"{"class_label":"x","element_kind":"unipotent","element_order":0,"dim_class_in_G":6,"dim_intersection_with_H":7,"is_long_root":true}"#;
    assert!(parse_dataset(&format!("{header}\n{bad_dims}\n")).is_err());
    let good = r#"{"class_label":"x","element_kind":"unipotent","element_order":0,"dim_class_in_G":6,"dim_intersection_with_H":4,"is_long_root":true}"#;
    assert!(parse_dataset(&format!("{header}\n{good}\n")).is_ok());
    let wrong_sup = header.replace("2/3", "1/2");
    assert!(matches!(parse_dataset(&format!("{wrong_sup}\n{good}\n")), Err(ClassDataError::RatioMismatch { .. })));
}

#[test]
fn involution_inverting_a_torus() {
    for (name, dim) in [("E8", 120), ("E7", 63), ("E6", 36), ("F4", 24), ("G2", 6)] {
        let t: SimpleType = name.parse().unwrap();
        let rec = involution_record(t);
        assert!(rec.inverts_maximal_torus);
        assert_eq!(rec.centralizer_dim, dim, "{name}");
    }
}
