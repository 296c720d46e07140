//! Shared generators and property checks for the property and acceptance
//! suites.

#![allow(dead_code)]

use basesize::bounds::lower_bound_b0;
use basesize::formulas::*;
use basesize::genstab::{self, Geometry, PartKind, SubspaceGeometry, DEFAULT_PRIME};
use basesize::linalg::Fp;
use basesize::rootsys::{exceptional_types, maximal_nonparabolic};
use proptest::prelude::*;

fn char_strategy() -> impl Strategy<Value = CharCase> {
    prop_oneof![Just(CharCase::Any), Just(CharCase::Odd), Just(CharCase::Two), Just(CharCase::Zero), Just(CharCase::Good), Just(CharCase::Three)]
}

fn odd_char() -> impl Strategy<Value = CharCase> {
    prop_oneof![Just(CharCase::Odd), Just(CharCase::Zero), Just(CharCase::Good)]
}

fn exceptional_family(i: usize) -> GroupFamily {
    GroupFamily::from_simple_type(exceptional_types()[i % 5]).expect("exceptional")
}

/// Random action specs over every action class. Some are invalid on
/// purpose (e.g. characteristic conditions) and are skipped by the checks.
pub fn spec_strategy() -> impl Strategy<Value = ActionSpec> {
    let linear = (2usize..13, any::<prop::sample::Index>(), char_strategy())
        .prop_map(|(n, d, c)| ActionSpec::subspace(GroupFamily::SL, n, 1 + d.index(n / 2), None, c));
    let symplectic = (2usize..7, any::<prop::sample::Index>(), any::<bool>(), char_strategy()).prop_map(|(m, d, ts, c)| {
        let n = 2 * m;
        if ts {
            ActionSpec::subspace(GroupFamily::Sp, n, 1 + d.index(m), Some(Flavor::TotallySingular), c)
        } else {
            ActionSpec::subspace(GroupFamily::Sp, n, 2 * (1 + d.index(m / 2)), Some(Flavor::Nondeg), c)
        }
    });
    let orthogonal = (7usize..17, any::<prop::sample::Index>(), any::<bool>(), odd_char()).prop_map(|(n, d, ts, c)| {
        let flavor = if ts { Flavor::TotallySingular } else { Flavor::Nondeg };
        ActionSpec::subspace(GroupFamily::SO, n, 1 + d.index(n / 2), Some(flavor), c)
    });
    let parabolic = (0usize..5, any::<prop::sample::Index>()).prop_map(|(g, i)| {
        let t = exceptional_types()[g];
        ActionSpec::parabolic(exceptional_family(g), 1 + i.index(t.rank))
    });
    let exceptional = (0usize..5, any::<prop::sample::Index>(), char_strategy()).prop_map(|(g, i, c)| {
        let rows = maximal_nonparabolic(exceptional_types()[g]);
        let row = &rows[i.index(rows.len())];
        ActionSpec::nonsubspace(exceptional_family(g), None, row.label, c)
    });
    let classical = (0usize..9, 2usize..7, char_strategy()).prop_map(|(k, m, c)| {
        let (family, n, label) = match k {
            0 => (GroupFamily::SL, 2 * m, "GL_{n/2} wr S_2"),
            1 => (GroupFamily::SL, 2 * m, "Sp_n"),
            2 => (GroupFamily::Sp, 4 * m, "Sp_{n/2} wr S_2"),
            3 => (GroupFamily::Sp, 6, "Sp_{n/3} wr S_3"),
            4 => (GroupFamily::Sp, 6, "G_2"),
            5 => (GroupFamily::SO, 7, "G_2"),
            6 => (GroupFamily::SO, 4 * m, "GL_{n/2}"),
            7 => (GroupFamily::SO, 4 * m, "O_{n/2} wr S_2"),
            _ => (GroupFamily::SL, m + 1, "SO_n"),
        };
        ActionSpec::nonsubspace(family, Some(n), label, c)
    });
    prop_oneof![linear, symplectic, orthogonal, parabolic, exceptional, classical]
}

/// The three pairs with generic base size 6 outside subspace actions.
pub const SIX_PAIRS: &[(GroupFamily, usize)] = &[(GroupFamily::E7, 7), (GroupFamily::E6, 1), (GroupFamily::E6, 6)];

fn is_six_pair(spec: &ActionSpec) -> bool {
    matches!(spec.subgroup, SubgroupSpec::Parabolic { i } if SIX_PAIRS.contains(&(spec.family, i)))
}

/// Checks the invariants of one spec. Returns `Ok(false)` when the spec is
/// rejected by validation (nothing to check).
pub fn check_spec(spec: &ActionSpec) -> Result<bool, String> {
    let t = match triple(spec) {
        Ok(t) => t,
        Err(_) => return Ok(false),
    };
    t.check_invariants().map_err(|e| format!("{}: {e}", spec.describe()))?;
    if t.b0.is_point() && t.b1.is_point() && t.b1.lo > t.b0.lo + 1 {
        return Err(format!("{}: b1 > b0 + 1", spec.describe()));
    }
    let subspace_like = is_subspace_action(spec).unwrap_or(false);
    if !subspace_like {
        if t.b1.hi > 6 {
            return Err(format!("{}: b1 = {} exceeds 6", spec.describe(), t.b1));
        }
        if t.b1.hi == 6 && !is_six_pair(spec) {
            return Err(format!("{}: b1 reaches 6 outside the three listed pairs", spec.describe()));
        }
        if is_six_pair(spec) && t.b1.lo != 6 {
            return Err(format!("{}: listed pair does not reach 6", spec.describe()));
        }
        if spec.family.is_classical() && t.b1.hi > 4 {
            return Err(format!("{}: classical non-subspace b1 = {} exceeds 4", spec.describe(), t.b1));
        }
    }
    let p = spec.char_case.representatives()[0];
    if let Ok(Some(dims)) = action_dims(spec, p) {
        let lb = lower_bound_b0(dims.dim_g as i64, dims.dim_omega as i64).map_err(|e| e.to_string())?;
        if lb > t.b0.lo as u64 {
            return Err(format!("{}: lower bound {lb} exceeds b0 = {}", spec.describe(), t.b0));
        }
    }
    if !spec.char_case.admits_two() {
        if let Ok(pred) = dimhalf_predicate(spec) {
            let consistent = if t.b.lo > 2 {
                pred
            } else if t.b.hi <= 2 {
                !pred
            } else {
                true
            };
            if !consistent {
                return Err(format!("{}: dimhalf predicate {pred} disagrees with b = {}", spec.describe(), t.b));
            }
        }
    }
    Ok(true)
}

/// One seeded genstab run: non-increasing prefix profile, a degenerate
/// configuration (a repeated part) never has a smaller stabilizer, and for
/// SL the annihilator dual has the same stabilizer dimension.
pub fn genstab_run(seed: u64) -> Result<(), String> {
    let f = Fp::new(DEFAULT_PRIME);
    let choice = seed % 4;
    let geo = match choice {
        0 | 1 => {
            let n = 3 + (seed / 4 % 4) as usize;
            let d = 1 + (seed / 16 % (n as u64 - 1)) as usize;
            SubspaceGeometry { geometry: Geometry::Linear, n, d, kind: PartKind::Any }
        }
        2 => {
            let n = 2 * (2 + (seed / 4 % 2) as usize);
            SubspaceGeometry { geometry: Geometry::Symplectic, n, d: n / 2, kind: PartKind::TotallySingular }
        }
        _ => SubspaceGeometry { geometry: Geometry::Orthogonal, n: 7, d: 1 + (seed / 4 % 3) as usize, kind: PartKind::Nondeg },
    };
    let c = 2 + (seed % 5) as usize;
    let cfg = genstab::sample_configuration_in(&f, geo, c, seed, 0).map_err(|e| e.to_string())?;
    genstab::validate_configuration(&cfg)?;
    let profile = genstab::dimension_profile(&f, geo, c, seed, 0).map_err(|e| e.to_string())?;
    if profile.windows(2).any(|w| w[1] > w[0]) {
        return Err(format!("seed {seed}: profile {profile:?} increases"));
    }
    let generic = genstab::stabilizer_algebra_dim(&cfg).projective_dim;
    let mut degenerate = cfg.clone();
    let last = degenerate.parts.len() - 1;
    degenerate.parts[last] = degenerate.parts[0].clone();
    let special = genstab::stabilizer_algebra_dim(&degenerate).projective_dim;
    if special < generic {
        return Err(format!("seed {seed}: degenerate configuration has smaller stabilizer ({special} < {generic})"));
    }
    if geo.geometry == Geometry::Linear {
        let (a, b) = genstab::dual_pair_dims(&cfg).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("seed {seed}: dual dimensions differ ({a} vs {b}) for n = {}, d = {}", geo.n, geo.d));
        }
    }
    Ok(())
}
