//! Oracle values for the dimension bounds and the fixed-point-ratio
//! criterion.

use basesize::bounds::*;
use basesize::classdata::{load_dataset, resolve_dataset, ClassFusionRecord, ElementKind};
use num_rational::Ratio;

fn records(name: &str) -> Vec<ClassFusionRecord> {
    load_dataset(resolve_dataset(name).unwrap()).unwrap().records
}

fn unipotent(dim_g: u32, dim_h: u32, long_root: bool) -> ClassFusionRecord {
    ClassFusionRecord {
        group: "G2".into(),
        subgroup_label: "H".into(),
        class_label: "u".into(),
        element_kind: ElementKind::Unipotent,
        element_order: 0,
        dim_class_in_g: dim_g,
        dim_intersection_with_h: dim_h,
        is_long_root: long_root,
        charp_condition: None,
        excludable: false,
        upper_bound: false,
    }
}

#[test]
fn lower_bound_is_a_ceiling() {
    assert_eq!(lower_bound_b0(248, 57).unwrap(), 5);
    assert_eq!(lower_bound_b0(133, 27).unwrap(), 5);
    assert_eq!(lower_bound_b0(78, 16).unwrap(), 5);
    assert_eq!(lower_bound_b0(15, 4).unwrap(), 4);
    assert_eq!(lower_bound_b0(14, 7).unwrap(), 2);
    assert!(matches!(lower_bound_b0(14, 0), Err(BoundsError::NonPositiveOmega(0))));
}

#[test]
fn fixed_space_dimension() {
    assert_eq!(fixed_space_dim(16, 16, 12).unwrap(), 12);
    assert!(fixed_space_dim(16, 10, 12).is_err());
}

#[test]
fn exact_threshold_comparisons() {
    // 2/3 < 1 - 1/c holds for c >= 4 only; 2/3 <= 1 - 1/c from c = 3.
    assert!(!strictly_below(2, 3, 3));
    assert!(strictly_below(2, 3, 4));
    assert!(weakly_below(2, 3, 3));
    assert!(!weakly_below(2, 3, 2));
    assert_eq!(q_value(&[unipotent(6, 4, true)], 4).unwrap(), Ratio::new(8, 9));
}

#[test]
fn g2_reference_dataset() {
    let r = records("g2_na2");
    assert_eq!(upper_bound_b1(&r, false).unwrap().value, 4);
    assert_eq!(upper_bound_b1(&r, true).unwrap().value, 3);
}

#[test]
fn f4_reference_dataset() {
    let r = records("f4_b4");
    assert_eq!(upper_bound_b1(&r, true).unwrap().value, 4);
    assert_eq!(upper_bound_b1(&r, false).unwrap().value, 5);
}

#[test]
fn refinement_ignores_short_classes() {
    let r = vec![unipotent(6, 4, false)];
    assert_eq!(upper_bound_b1(&r, true).unwrap().value, 4);
}

#[test]
fn empty_records_are_rejected() {
    assert!(matches!(upper_bound_b1(&[], false), Err(BoundsError::EmptyRecords)));
}

#[test]
fn sandwich_is_consistent_on_every_dataset() {
    for name in basesize::classdata::SHIPPED_DATASETS {
        let ds = load_dataset(resolve_dataset(name).unwrap()).unwrap();
        let rep = sandwich(name, &ds).unwrap();
        assert!(rep.consistent, "{name}: {rep:?}");
    }
}

#[test]
fn semisimple_reduction_and_b0_bound() {
    let r = records("e8_a1e7");
    assert_eq!(upper_bound_b0(&r, None).unwrap().value, 3);
    assert!(apply_semisimple_reduction(&r).len() <= r.len());
    assert!(matches!(upper_bound_b0(&records("f4_b4"), None), Err(BoundsError::NoSemisimpleFamily)));
}
