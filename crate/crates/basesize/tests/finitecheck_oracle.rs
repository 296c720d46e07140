//! Oracle values for enumerated finite classical groups and their actions.

use basesize::finitecheck::*;

fn group(family: FiniteFamily, n: usize, q: u32, projective: bool) -> MatrixGroup {
    MatrixGroup::generate(family, n, q, projective, ELEMENT_BOUND).unwrap()
}

#[test]
fn group_orders() {
    assert_eq!(group(FiniteFamily::GL, 2, 5, true).order(), 120);
    assert_eq!(group(FiniteFamily::GL, 2, 7, true).order(), 336);
    assert_eq!(group(FiniteFamily::SL, 2, 11, false).order(), 1320);
    assert_eq!(group(FiniteFamily::GL, 3, 3, true).order(), 5616);
    assert_eq!(group(FiniteFamily::Sp, 4, 3, false).order(), 51840);
    assert_eq!(group(FiniteFamily::Sp, 4, 3, true).order(), 25920);
    assert_eq!(group(FiniteFamily::GL, 2, 3, false).order(), 48);
}

#[test]
fn bad_fields_and_bounds_are_rejected() {
    assert!(matches!(MatrixGroup::generate(FiniteFamily::GL, 2, 4, true, ELEMENT_BOUND), Err(FiniteError::BadField(4))));
    assert!(matches!(MatrixGroup::generate(FiniteFamily::SL, 3, 5, false, 1000), Err(FiniteError::TooLarge { .. })));
    assert!("SU".parse::<FiniteFamily>().is_err());
    assert!("subspaces:x".parse::<ActionKind>().is_err());
}

#[test]
fn projective_line_base_sizes() {
    let a = FiniteGroupAction::new(group(FiniteFamily::GL, 2, 5, true), ActionKind::Subspaces { d: 1 }).unwrap();
    assert_eq!(a.degree(), 6);
    let r = a.exact_base_size(1).unwrap();
    assert_eq!(r.base_size, 3);
    assert_eq!(a.stabilizer_order(&r.witness).unwrap(), 1);
    assert!(a.base_of_length(2).is_none());
}

#[test]
fn torus_normalizer_cosets() {
    let a = FiniteGroupAction::new(group(FiniteFamily::GL, 2, 7, true), ActionKind::TorusNormalizer).unwrap();
    assert_eq!(a.degree(), 28);
    let hist = a.pair_histogram();
    assert_eq!(hist.into_iter().collect::<Vec<_>>(), vec![(1, 12), (2, 12), (4, 3), (12, 1)]);
    let partner = a.general_position_partner();
    assert_eq!(a.stabilizer_order(&[0, partner]).unwrap(), 2);
    assert_eq!(a.exact_base_size(1).unwrap().base_size, 2);
}

#[test]
fn two_forms_for_sl2() {
    let a = FiniteGroupAction::new(group(FiniteFamily::SL, 2, 11, false), ActionKind::Forms).unwrap();
    assert_eq!(a.degree(), 110);
    let partner = a.general_position_partner();
    let elems = a.stabilizer_elements(&[0, partner]).unwrap();
    assert_eq!(elems, vec![vec![1, 0, 0, 1], vec![10, 0, 0, 10]]);
}

#[test]
fn pair_stabilizers_respect_orbit_counting() {
    let a = FiniteGroupAction::new(group(FiniteFamily::GL, 3, 3, true), ActionKind::Subspaces { d: 1 }).unwrap();
    let point_stabilizer = a.group.order() / a.degree();
    assert_eq!(a.stabilizer_order(&[0]).unwrap(), point_stabilizer);
    let hist = a.pair_histogram();
    assert_eq!(hist.values().sum::<usize>(), a.degree());
    for (&s, &count) in &hist {
        assert_eq!(point_stabilizer % s, 0);
        assert_eq!(count % (point_stabilizer / s), 0, "partners with stabilizer {s} form whole orbits");
    }
}

#[test]
fn symplectic_pairs() {
    let a = FiniteGroupAction::new(group(FiniteFamily::Sp, 4, 3, true), ActionKind::NondegPairs).unwrap();
    assert_eq!(a.degree(), 45);
    assert_eq!(a.exact_base_size(1).unwrap().base_size, 4);
}

#[test]
fn unfaithful_actions_are_reported() {
    let a = FiniteGroupAction::new(group(FiniteFamily::SL, 2, 5, false), ActionKind::Subspaces { d: 1 }).unwrap();
    assert_eq!(a.kernel_order(), 2);
    assert!(matches!(a.exact_base_size(1), Err(FiniteError::NotFaithful { kernel: 2 })));
}

#[test]
fn subspace_tuples_via_the_algebra() {
    let r = random_subspace_tuple_stabilizers(4, 2, 5, 3, false, 1, 20).unwrap();
    assert_eq!(r.min_order, 2);
    assert_eq!(r.histogram.values().sum::<usize>(), 20);
    // Four lines in general position in F_3^2: only scalars fix them all.
    let lines = [vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]];
    assert_eq!(algebra_stabilizer_order(3, 2, &lines, false).unwrap(), 2);
    assert_eq!(algebra_stabilizer_order(3, 2, &lines[..2], false).unwrap(), 4);
}

#[test]
fn shipped_cross_checks_pass() {
    let checks = shipped_cross_checks(1).unwrap();
    assert_eq!(checks.len(), 6);
    let sizes: Vec<usize> = checks.iter().map(|c| c.finite_base_size).collect();
    assert_eq!(sizes, vec![3, 3, 2, 2, 4, 4]);
    assert!(checks.iter().all(|c| c.applicable && c.pass));
}
