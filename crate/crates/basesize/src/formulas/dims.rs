//! `dim G`, `dim H` and `dim Omega` for each action class.

use super::nonsubspace::{classical_label_dim, parse_classical};
use super::{ActionSpec, Flavor, FormulaError, GroupFamily, SubgroupSpec};
use crate::rootsys::{build_root_system, lookup_maximal, ParabolicDescriptor};
use serde::Serialize;

/// Dimensions attached to an action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ActionDims {
    pub dim_g: usize,
    pub dim_h: usize,
    pub dim_omega: usize,
}

impl ActionDims {
    fn from_gh(dim_g: usize, dim_h: usize) -> Self {
        ActionDims { dim_g, dim_h, dim_omega: dim_g - dim_h }
    }

    fn from_omega(dim_g: usize, dim_omega: usize) -> Self {
        ActionDims { dim_g, dim_h: dim_g - dim_omega, dim_omega }
    }
}

/// The dimension of the classical group of `family` on an `n`-space.
pub fn classical_dim(family: GroupFamily, n: usize) -> usize {
    match family {
        GroupFamily::SL => n * n - 1,
        GroupFamily::Sp => n * (n + 1) / 2,
        GroupFamily::SO => n * (n - 1) / 2,
        _ => 0,
    }
}

/// Dimensions of the action, or `None` when the subgroup is an
/// irreducible subgroup named only symbolically.
pub fn action_dims(spec: &ActionSpec, p: u32) -> Result<Option<ActionDims>, FormulaError> {
    if let Some(g) = spec.family.exceptional_type() {
        let dim_g = g.dim();
        return match &spec.subgroup {
            SubgroupSpec::Parabolic { i } => {
                let rs = build_root_system(g.family, g.rank)?;
                let pd = ParabolicDescriptor::new(rs, *i)?;
                Ok(Some(ActionDims::from_gh(dim_g, pd.parabolic_dim())))
            }
            SubgroupSpec::Nonsubspace { label } => {
                let (_, d) = lookup_maximal(g, label)?;
                Ok(Some(ActionDims::from_gh(dim_g, d.dimension)))
            }
            SubgroupSpec::TorusNormalizer => Ok(Some(ActionDims::from_gh(dim_g, g.rank))),
            SubgroupSpec::Subspace { .. } => Err(FormulaError::InvalidSpec("exceptional groups have no subspace actions here".into())),
        };
    }
    let n = spec.classical_n()?;
    let dim_g = classical_dim(spec.family, n);
    let dims = match &spec.subgroup {
        SubgroupSpec::Subspace { d, flavor } => {
            let d = *d;
            if spec.family == GroupFamily::Sp && *flavor == Some(Flavor::OnInSpn) {
                ActionDims::from_omega(dim_g, n)
            } else if 2 * d > n {
                return Err(FormulaError::InvalidSpec(format!("d = {d} exceeds n/2")));
            } else {
                match (spec.family, flavor) {
                    (GroupFamily::SL, _) => ActionDims::from_omega(dim_g, d * (n - d)),
                    (GroupFamily::Sp, Some(Flavor::TotallySingular)) => ActionDims::from_omega(dim_g, d * n - (3 * d * d - d) / 2),
                    (GroupFamily::SO, Some(Flavor::TotallySingular)) => {
                        ActionDims::from_omega(dim_g, d * (n - d) - d * (d + 1) / 2)
                    }
                    (GroupFamily::Sp, Some(Flavor::Nondeg)) => {
                        ActionDims::from_gh(dim_g, d * (d + 1) / 2 + (n - d) * (n - d + 1) / 2)
                    }
                    (GroupFamily::SO, Some(Flavor::NonsingularOneSpace)) if p == 2 => ActionDims::from_omega(dim_g, n - 1),
                    (GroupFamily::SO, Some(Flavor::Nondeg | Flavor::NonsingularOneSpace)) => {
                        ActionDims::from_gh(dim_g, d * (d.saturating_sub(1)) / 2 + (n - d) * (n - d - 1) / 2)
                    }
                    _ => return Err(FormulaError::InvalidSpec("flavor does not match the group family".into())),
                }
            }
        }
        SubgroupSpec::Nonsubspace { label } => {
            let parsed = parse_classical(label, n).ok_or_else(|| FormulaError::UnknownLabel {
                group: format!("{}_{}", spec.family, n),
                label: label.clone(),
            })?;
            match classical_label_dim(&parsed) {
                Some(h) => {
                    let h = if spec.family == GroupFamily::SL && matches!(parsed, super::nonsubspace::ClassicalLabel::Wreath { .. }) {
                        h - 1
                    } else {
                        h
                    };
                    ActionDims::from_gh(dim_g, h)
                }
                None => return Ok(None),
            }
        }
        SubgroupSpec::TorusNormalizer => {
            let rank = match spec.family {
                GroupFamily::SL => n - 1,
                _ => n / 2,
            };
            ActionDims::from_gh(dim_g, rank)
        }
        SubgroupSpec::Parabolic { .. } => return Err(FormulaError::NotExceptional(spec.family.to_string())),
    };
    Ok(Some(dims))
}
