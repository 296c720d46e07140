//! Oracle values for the closed-form triples.

use basesize::formulas::*;
use basesize::rootsys::{Family, SimpleType};

fn sub(family: GroupFamily, n: usize, d: usize, flavor: Option<Flavor>, c: CharCase) -> BaseTriple {
    triple(&ActionSpec::subspace(family, n, d, flavor, c)).unwrap_or_else(|e| panic!("{family} n={n} d={d}: {e}"))
}

fn points(t: &BaseTriple) -> (u32, u32, u32) {
    assert!(t.b0.is_point() && t.b.is_point() && t.b1.is_point(), "expected point values, got {t:?}");
    (t.b0.lo, t.b.lo, t.b1.lo)
}

fn nonsub(family: GroupFamily, n: Option<usize>, label: &str, c: CharCase) -> BaseTriple {
    triple(&ActionSpec::nonsubspace(family, n, label, c)).unwrap_or_else(|e| panic!("{family} {label}: {e}"))
}

#[test]
fn linear_divisible_cases() {
    assert_eq!(points(&sub(GroupFamily::SL, 4, 2, None, CharCase::Any)), (5, 5, 5));
    assert_eq!(points(&sub(GroupFamily::SL, 6, 3, None, CharCase::Any)), (5, 5, 5));
    assert_eq!(points(&sub(GroupFamily::SL, 6, 2, None, CharCase::Any)), (5, 5, 5));
    assert_eq!(points(&sub(GroupFamily::SL, 8, 2, None, CharCase::Any)), (6, 6, 6));
    for n in 2..12 {
        let v = n as u32 + 1;
        assert_eq!(points(&sub(GroupFamily::SL, n, 1, None, CharCase::Any)), (v, v, v), "n = {n}");
    }
}

#[test]
fn linear_non_divisible_cases_are_intervals() {
    // n = 7, d = 3: k = 3, so the range is [4, 6].
    let t = sub(GroupFamily::SL, 7, 3, None, CharCase::Any);
    assert_eq!((t.b0, t.b, t.b1), (Interval::new(4, 6), Interval::new(4, 6), Interval::new(4, 6)));
    // n = 9, d = 2: k = 5, range [6, 7].
    let t = sub(GroupFamily::SL, 9, 2, None, CharCase::Any);
    assert_eq!(t.b0, Interval::new(6, 7));
}

#[test]
fn linear_rejects_d_above_half() {
    assert!(triple(&ActionSpec::subspace(GroupFamily::SL, 4, 3, None, CharCase::Any)).is_err());
}

#[test]
fn symplectic_cases() {
    assert_eq!(points(&sub(GroupFamily::Sp, 6, 2, Some(Flavor::Nondeg), CharCase::Any)), (4, 4, 4));
    assert_eq!(points(&sub(GroupFamily::Sp, 6, 2, Some(Flavor::TotallySingular), CharCase::Any)), (4, 4, 4));
    assert_eq!(points(&sub(GroupFamily::Sp, 8, 4, Some(Flavor::TotallySingular), CharCase::Odd)), (4, 4, 5));
    assert_eq!(points(&sub(GroupFamily::Sp, 8, 4, Some(Flavor::TotallySingular), CharCase::Two)), (4, 4, 4));
    assert_eq!(points(&sub(GroupFamily::Sp, 12, 2, Some(Flavor::Nondeg), CharCase::Any)), (6, 6, 6));
    assert_eq!(points(&sub(GroupFamily::Sp, 10, 3, Some(Flavor::TotallySingular), CharCase::Any)), (4, 4, 4));
    assert_eq!(points(&sub(GroupFamily::Sp, 4, 2, Some(Flavor::Nondeg), CharCase::Any)), (4, 4, 5));
}

#[test]
fn symplectic_orthogonal_subgroup_in_characteristic_two() {
    let spec = ActionSpec::subspace(GroupFamily::Sp, 8, 1, Some(Flavor::OnInSpn), CharCase::Two);
    assert_eq!(points(&triple(&spec).unwrap()), (8, 8, 9));
    let odd = spec.with_char(CharCase::Odd);
    assert!(matches!(triple(&odd), Err(FormulaError::CharIncompatible(_))));
}

#[test]
fn orthogonal_cases() {
    assert_eq!(points(&sub(GroupFamily::SO, 7, 1, Some(Flavor::Nondeg), CharCase::Odd)), (6, 6, 7));
    assert_eq!(points(&sub(GroupFamily::SO, 8, 1, Some(Flavor::Nondeg), CharCase::Odd)), (7, 7, 7));
    assert_eq!(points(&sub(GroupFamily::SO, 8, 4, Some(Flavor::TotallySingular), CharCase::Any)), (7, 7, 7));
    assert_eq!(points(&sub(GroupFamily::SO, 12, 6, Some(Flavor::TotallySingular), CharCase::Any)), (6, 6, 6));
    assert_eq!(points(&sub(GroupFamily::SO, 16, 8, Some(Flavor::TotallySingular), CharCase::Any)), (5, 5, 5));
    let t = sub(GroupFamily::SO, 10, 5, Some(Flavor::TotallySingular), CharCase::Any);
    assert_eq!((t.b0, t.b, t.b1), (Interval::point(5), Interval::new(5, 6), Interval::new(5, 6)));
    // k = 3 totally singular: n = 3d gives 3, otherwise 4.
    assert_eq!(points(&sub(GroupFamily::SO, 9, 3, Some(Flavor::TotallySingular), CharCase::Odd)), (3, 3, 3));
    assert_eq!(points(&sub(GroupFamily::SO, 10, 4, Some(Flavor::TotallySingular), CharCase::Any)), (4, 4, 4));
    // n = (k-1)d + 1 with k >= 4 for totally singular: n = 13, d = 3, k = 5.
    assert_eq!(points(&sub(GroupFamily::SO, 13, 3, Some(Flavor::TotallySingular), CharCase::Odd)), (4, 4, 5));
    assert_eq!(points(&sub(GroupFamily::SO, 14, 3, Some(Flavor::Nondeg), CharCase::Odd)), (5, 5, 5));
}

#[test]
fn orthogonal_odd_dimension_needs_odd_characteristic() {
    let spec = ActionSpec::subspace(GroupFamily::SO, 9, 2, Some(Flavor::TotallySingular), CharCase::Two);
    assert!(matches!(triple(&spec), Err(FormulaError::CharIncompatible(_))));
}

#[test]
fn exceptional_parabolics_follow_the_table() {
    let e6 = triple(&ActionSpec::parabolic(GroupFamily::E6, 4)).unwrap();
    assert_eq!((e6.b0, e6.b1), (Interval::new(3, 4), Interval::new(3, 4)));
    assert_eq!(points(&triple(&ActionSpec::parabolic(GroupFamily::E7, 7)).unwrap()), (6, 6, 6));
    assert_eq!(points(&triple(&ActionSpec::parabolic(GroupFamily::E8, 8)).unwrap()), (5, 5, 5));
    let g2 = triple(&ActionSpec::parabolic(GroupFamily::G2, 1)).unwrap();
    assert_eq!(g2.b1, Interval::new(3, 4));
    assert!(triple(&ActionSpec::parabolic(GroupFamily::G2, 3)).is_err());
}

#[test]
fn exceptional_nonparabolic_values() {
    assert_eq!(points(&nonsub(GroupFamily::E8, None, "A1E7", CharCase::Any)), (3, 3, 3));
    assert_eq!(points(&nonsub(GroupFamily::E6, None, "F4", CharCase::Any)), (4, 4, 4));
    assert_eq!(points(&nonsub(GroupFamily::E6, None, "D5T1", CharCase::Any)), (3, 3, 3));
    assert_eq!(points(&nonsub(GroupFamily::G2, None, "A2", CharCase::Any)), (3, 3, 3));
    assert_eq!(points(&nonsub(GroupFamily::E8, None, "D8", CharCase::Odd)), (2, 2, 3));
    assert_eq!(points(&nonsub(GroupFamily::E8, None, "A1A2", CharCase::Any)), (2, 2, 2));
    let e7 = nonsub(GroupFamily::E7, None, "A7", CharCase::Two);
    assert_eq!((e7.b0, e7.b, e7.b1), (Interval::point(2), Interval::new(2, 3), Interval::new(2, 3)));
    assert_eq!(points(&nonsub(GroupFamily::F4, None, "C4", CharCase::Two)), (4, 4, 4));
    assert!(triple(&ActionSpec::nonsubspace(GroupFamily::F4, None, "C4", CharCase::Odd)).is_err());
    assert!(matches!(
        triple(&ActionSpec::nonsubspace(GroupFamily::E8, None, "A3", CharCase::Any)),
        Err(FormulaError::UnknownLabel { .. })
    ));
}

#[test]
fn classical_nonsubspace_values() {
    assert_eq!(points(&nonsub(GroupFamily::SL, Some(6), "Sp_n", CharCase::Any)), (4, 4, 4));
    assert_eq!(points(&nonsub(GroupFamily::SL, Some(8), "Sp_n", CharCase::Any)), (3, 3, 3));
    assert_eq!(points(&nonsub(GroupFamily::SL, Some(8), "GL_{n/2} wr S_2", CharCase::Any)), (3, 3, 3));
    assert_eq!(points(&nonsub(GroupFamily::Sp, Some(6), "Sp_{n/3} wr S_3", CharCase::Any)), (3, 3, 3));
    assert_eq!(points(&nonsub(GroupFamily::Sp, Some(6), "G_2", CharCase::Two)), (4, 4, 4));
    assert_eq!(points(&nonsub(GroupFamily::SO, Some(7), "G_2", CharCase::Odd)), (4, 4, 4));
    assert_eq!(points(&nonsub(GroupFamily::SO, Some(12), "GL_{n/2}", CharCase::Any)), (3, 3, 3));
    let so = nonsub(GroupFamily::SO, Some(12), "O_{n/2} wr S_2", CharCase::Odd);
    assert_eq!(points(&so), (2, 2, 3));
}

#[test]
fn nonsubspace_cap_of_four() {
    for (family, n, label, c) in [
        (GroupFamily::SL, 6, "Sp_n", CharCase::Any),
        (GroupFamily::SO, 7, "G_2", CharCase::Odd),
        (GroupFamily::Sp, 6, "G_2", CharCase::Two),
    ] {
        assert_eq!(nonsub(family, Some(n), label, c).b1.hi, 4);
    }
}

#[test]
fn torus_normalizer_of_sl2() {
    let spec = ActionSpec {
        family: GroupFamily::SL,
        n: Some(2),
        subgroup: SubgroupSpec::TorusNormalizer,
        char_case: CharCase::Any,
    };
    let t = triple(&spec).unwrap();
    assert_eq!(points(&t), (2, 2, 3));
    assert_eq!(t.pair_stabilizer_order, Some(2));
}

#[test]
fn dimhalf_characterization() {
    let so = ActionSpec::subspace(GroupFamily::SO, 10, 4, Some(Flavor::Nondeg), CharCase::Odd);
    assert!(dimhalf_predicate(&so).unwrap());
    assert!(dimhalf_predicate(&ActionSpec::nonsubspace(GroupFamily::E6, None, "A1A5", CharCase::Odd)).unwrap());
    assert!(dimhalf_predicate(&ActionSpec::nonsubspace(GroupFamily::SL, Some(6), "GL_{n/2} wr S_2", CharCase::Odd)).unwrap());
    assert!(!dimhalf_predicate(&ActionSpec::nonsubspace(GroupFamily::E8, None, "A1A2", CharCase::Odd)).unwrap());
    assert!(matches!(
        dimhalf_predicate(&ActionSpec::nonsubspace(GroupFamily::E8, None, "A1A2", CharCase::Any)),
        Err(FormulaError::NeedsOddCharacteristic)
    ));
    assert!(matches!(
        dimhalf_predicate_p2(&ActionSpec::nonsubspace(GroupFamily::E7, None, "A7", CharCase::Two)),
        Err(FormulaError::ExcludedPair(_))
    ));
}

#[test]
fn involution_centralizers_give_small_triples() {
    for g in basesize::rootsys::exceptional_types() {
        let t = involution_triple(g);
        t.check_invariants().unwrap();
        assert!(t.b0.lo >= 2);
    }
    let g2 = involution_triple(SimpleType::new(Family::G, 2).unwrap());
    assert!(g2.b0.lo >= 2 && g2.b1.hi <= 4);
}

#[test]
fn spec_json_round_trip_and_rejection() {
    let spec: ActionSpec = serde_json::from_str(r#"{"family":"SL","n":4,"subgroup":{"subspace":{"d":2}}}"#).unwrap();
    assert_eq!(spec, ActionSpec::subspace(GroupFamily::SL, 4, 2, None, CharCase::Any));
    let back: ActionSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(back, spec);
    assert!(serde_json::from_str::<ActionSpec>(r#"{"family":"SL","n":4,"subgroup":{"subspace":{"d":2}},"extra":1}"#).is_err());
}

#[test]
fn dimension_bound_lifts_values_below_it() {
    // dim Sp_10 = 55 and the totally singular 4-spaces form an 18-dimensional
    // variety, so three points cannot have a finite stabilizer.
    let t = sub(GroupFamily::Sp, 10, 4, Some(Flavor::TotallySingular), CharCase::Odd);
    assert_eq!(t.b0, Interval::point(4));
    assert_eq!(t.b1, Interval::new(4, 5));
    assert!(t.notes.iter().any(|n| n.contains("dimension bound")));
    // SL_12 on 5-spaces: dim G / dim Omega = 143/35, so the interval starts at 5.
    let t = sub(GroupFamily::SL, 12, 5, None, CharCase::Any);
    assert_eq!(t.b0, Interval::new(5, 6));
}
