//! Dimension bounds for base measures: the lower bound `dim G / dim Omega`,
//! fixed-point-space dimensions, and the fixed-point-ratio criterion
//! `Q(G, c) = c/(c-1) · sup dim(x^G ∩ H)/dim x^G` with its refinements.
//!
//! All comparisons are exact: `a/b < 1 - 1/c` is decided as `a c < b (c-1)`.

use crate::classdata::{sup_ratio, ClassFusionRecord, Dataset};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors raised by the bound machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("dim Omega must be positive, got {0}")]
    NonPositiveOmega(i64),
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
    #[error("no class records supplied")]
    EmptyRecords,
    #[error("c must be at least 2, got {0}")]
    InvalidC(u64),
    #[error("criterion inconclusive: {0}")]
    Inconclusive(String),
    #[error("no semisimple family of prime order different from the characteristic is present")]
    NoSemisimpleFamily,
}

/// Which base measure a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    LowerB0,
    UpperB1,
    UpperB0,
}

/// A proven bound `value` on a base measure, with the data that attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub kind: BoundKind,
    pub value: u64,
    pub witness: String,
    /// `Q(G, value)` over all supplied records, rendered exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_value: Option<String>,
    /// `Q(G, value)` over the records that must satisfy the strict inequality.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_value_strict_part: Option<String>,
    pub records_used: usize,
}

/// `ceil(dim G / dim Omega)`, a lower bound for `b^0`.
pub fn lower_bound_b0(dim_g: i64, dim_omega: i64) -> Result<u64, BoundsError> {
    if dim_omega <= 0 {
        return Err(BoundsError::NonPositiveOmega(dim_omega));
    }
    if dim_g < 0 {
        return Err(BoundsError::InconsistentInputs(format!("dim G = {dim_g} is negative")));
    }
    Ok(((dim_g + dim_omega - 1) / dim_omega) as u64)
}

/// Full [`BoundResult`] for the dimension lower bound.
pub fn lower_bound_result(dim_g: i64, dim_omega: i64) -> Result<BoundResult, BoundsError> {
    let value = lower_bound_b0(dim_g, dim_omega)?;
    Ok(BoundResult {
        kind: BoundKind::LowerB0,
        value,
        witness: format!("dim G / dim Omega = {dim_g}/{dim_omega}"),
        q_value: None,
        q_value_strict_part: None,
        records_used: 0,
    })
}

/// `dim C_Omega(x) = dim Omega - dim x^G + dim (x^G ∩ H)`.
pub fn fixed_space_dim(dim_omega: i64, dim_xg: i64, dim_xg_cap_h: i64) -> Result<u64, BoundsError> {
    if dim_omega < 0 || dim_xg < 0 || dim_xg_cap_h < 0 {
        return Err(BoundsError::InconsistentInputs("dimensions must be nonnegative".into()));
    }
    if dim_xg_cap_h > dim_xg {
        return Err(BoundsError::InconsistentInputs(format!(
            "dim(x^G ∩ H) = {dim_xg_cap_h} exceeds dim x^G = {dim_xg}"
        )));
    }
    let r = dim_omega - dim_xg + dim_xg_cap_h;
    if r < 0 {
        return Err(BoundsError::InconsistentInputs(format!(
            "fixed space dimension {dim_omega} - {dim_xg} + {dim_xg_cap_h} is negative"
        )));
    }
    Ok(r as u64)
}

/// `Q(G, c)` over the supplied records, as an exact rational.
pub fn q_value(records: &[ClassFusionRecord], c: u64) -> Result<Ratio<u64>, BoundsError> {
    if c < 2 {
        return Err(BoundsError::InvalidC(c));
    }
    let (sup, _) = sup_ratio(records).ok_or(BoundsError::EmptyRecords)?;
    Ok(Ratio::new(c, c - 1) * sup)
}

/// `a/b < 1 - 1/c`, i.e. `a c < b (c - 1)`.
pub fn strictly_below(a: u64, b: u64, c: u64) -> bool {
    (a as u128) * (c as u128) < (b as u128) * ((c - 1) as u128)
}

/// `a/b <= 1 - 1/c`, i.e. `a c <= b (c - 1)`.
pub fn weakly_below(a: u64, b: u64, c: u64) -> bool {
    (a as u128) * (c as u128) <= (b as u128) * ((c - 1) as u128)
}

/// Smallest `c >= 2` with `a/b < 1 - 1/c`, or `None` when `a >= b`.
fn threshold_strict(a: u64, b: u64) -> Option<u64> {
    if a >= b {
        return None;
    }
    // a c < b (c-1)  <=>  c (b - a) > b  <=>  c > b/(b-a)
    let c = b / (b - a) + 1;
    Some(c.max(2))
}

/// Smallest `c >= 2` with `a/b <= 1 - 1/c`, or `None` when `a >= b > 0`.
fn threshold_weak(a: u64, b: u64) -> Option<u64> {
    if a >= b {
        return None;
    }
    let c = b.div_ceil(b - a);
    Some(c.max(2))
}

fn ratio_string(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Smallest `c` with `Q(G, c) < 1`, so `b^1 <= c`. With the long-root
/// refinement, records of long root elements may meet
/// `dim (x^G ∩ H) = (1 - 1/c) dim x^G` without blocking `c`.
pub fn upper_bound_b1(records: &[ClassFusionRecord], long_root_refinement: bool) -> Result<BoundResult, BoundsError> {
    if records.is_empty() {
        return Err(BoundsError::EmptyRecords);
    }
    let mut best_c = 2u64;
    let mut witness_idx = 0usize;
    for (i, r) in records.iter().enumerate() {
        let (a, b) = (r.dim_intersection_with_h as u64, r.dim_class_in_g as u64);
        let weak = long_root_refinement && r.is_long_root;
        let t = if weak { threshold_weak(a, b) } else { threshold_strict(a, b) };
        let t = t.ok_or_else(|| {
            BoundsError::Inconclusive(format!(
                "class `{}` has ratio {a}/{b} >= 1",
                r.class_label
            ))
        })?;
        if t > best_c {
            best_c = t;
            witness_idx = i;
        }
    }
    let c = best_c;
    debug_assert!(records.iter().all(|r| {
        let (a, b) = (r.dim_intersection_with_h as u64, r.dim_class_in_g as u64);
        if long_root_refinement && r.is_long_root {
            weakly_below(a, b, c)
        } else {
            strictly_below(a, b, c)
        }
    }));
    let q_all = q_value(records, c)?;
    let strict: Vec<ClassFusionRecord> = records
        .iter()
        .filter(|r| !(long_root_refinement && r.is_long_root))
        .cloned()
        .collect();
    let q_strict = if strict.is_empty() { None } else { Some(ratio_string(q_value(&strict, c)?)) };
    let w = &records[witness_idx];
    Ok(BoundResult {
        kind: BoundKind::UpperB1,
        value: c,
        witness: format!(
            "class `{}` with ratio {}/{}{}",
            w.class_label,
            w.dim_intersection_with_h,
            w.dim_class_in_g,
            if long_root_refinement && w.is_long_root { " (long root, equality allowed)" } else { "" }
        ),
        q_value: Some(ratio_string(q_all)),
        q_value_strict_part: q_strict,
        records_used: records.len(),
    })
}

/// Upper bound for `b^0`: the smallest `c` such that for some prime `r`
/// different from the characteristic every semisimple record of order `r`
/// satisfies the strict inequality, and every unipotent record satisfies the
/// non-strict one.
pub fn upper_bound_b0(records: &[ClassFusionRecord], characteristic: Option<u32>) -> Result<BoundResult, BoundsError> {
    if records.is_empty() {
        return Err(BoundsError::EmptyRecords);
    }
    let p = characteristic.filter(|&p| p != 0);
    let mut c_unip = 2u64;
    let mut unip_witness: Option<usize> = None;
    for (i, r) in records.iter().enumerate() {
        if !r.may_be_unipotent(p) {
            continue;
        }
        let (a, b) = (r.dim_intersection_with_h as u64, r.dim_class_in_g as u64);
        let t = threshold_weak(a, b).ok_or_else(|| {
            BoundsError::Inconclusive(format!("unipotent class `{}` has ratio >= 1", r.class_label))
        })?;
        if t > c_unip || unip_witness.is_none() && t >= c_unip {
            c_unip = c_unip.max(t);
            unip_witness = Some(i);
        }
    }
    let mut families: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        if r.may_be_semisimple(p) && r.element_order != 0 && Some(r.element_order) != p {
            families.entry(r.element_order).or_default().push(i);
        }
    }
    if families.is_empty() {
        return Err(BoundsError::NoSemisimpleFamily);
    }
    let mut best: Option<(u64, u32, usize)> = None;
    for (&order, idxs) in &families {
        let mut c_r = 2u64;
        let mut w = idxs[0];
        let mut ok = true;
        for &i in idxs {
            let r = &records[i];
            match threshold_strict(r.dim_intersection_with_h as u64, r.dim_class_in_g as u64) {
                Some(t) => {
                    if t > c_r {
                        c_r = t;
                        w = i;
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && best.is_none_or(|(c, _, _)| c_r < c) {
            best = Some((c_r, order, w));
        }
    }
    let (c_ss, order, ss_w) = best.ok_or_else(|| {
        BoundsError::Inconclusive("every semisimple family has a class with ratio >= 1".into())
    })?;
    let value = c_unip.max(c_ss);
    let witness = if c_ss >= c_unip {
        let r = &records[ss_w];
        format!(
            "semisimple family of order {order}, class `{}` with ratio {}/{} (strict)",
            r.class_label, r.dim_intersection_with_h, r.dim_class_in_g
        )
    } else {
        let r = &records[unip_witness.expect("set when c_unip > 2")];
        format!(
            "unipotent class `{}` with ratio {}/{} (non-strict); semisimple family of order {order}",
            r.class_label, r.dim_intersection_with_h, r.dim_class_in_g
        )
    };
    Ok(BoundResult {
        kind: BoundKind::UpperB0,
        value,
        witness,
        q_value: Some(ratio_string(q_value(records, value)?)),
        q_value_strict_part: None,
        records_used: records.len(),
    })
}

/// Drops semisimple records that the dataset marks excludable, i.e. those
/// with `dim Z(C_G(x)^0) + rank H > rank G`, which may be ignored when
/// bounding `b^1` over the reduced prime-order set.
pub fn apply_semisimple_reduction(records: &[ClassFusionRecord]) -> Vec<ClassFusionRecord> {
    records
        .iter()
        .filter(|r| !(r.excludable && r.element_kind != crate::classdata::ElementKind::Unipotent))
        .cloned()
        .collect()
}

/// Result of comparing a dataset's bounds with its recorded known values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SandwichReport {
    pub dataset: String,
    pub lower_b0: Option<u64>,
    pub known_b0: Option<u32>,
    pub known_b1_max: Option<u32>,
    pub upper_b1: u64,
    pub consistent: bool,
}

/// Checks `lower_bound_b0 <= known b^0 <= known b^1 <= upper_bound_b1`.
pub fn sandwich(name: &str, ds: &Dataset) -> Result<SandwichReport, BoundsError> {
    let g: crate::rootsys::SimpleType = ds
        .header
        .group
        .parse()
        .map_err(|e| BoundsError::InconsistentInputs(format!("{e}")))?;
    let lower = match ds.header.dim_omega {
        Some(d) => Some(lower_bound_b0(g.dim() as i64, d as i64)?),
        None => None,
    };
    let upper = upper_bound_b1(&ds.records, true)?.value;
    let mut ok = true;
    if let (Some(l), Some(k)) = (lower, ds.header.known_b0) {
        ok &= l <= k as u64;
    }
    if let (Some(k0), Some(k1)) = (ds.header.known_b0, ds.header.known_b1_max) {
        ok &= k0 <= k1;
    }
    if let Some(k1) = ds.header.known_b1_max {
        ok &= (k1 as u64) <= upper;
    }
    Ok(SandwichReport {
        dataset: name.to_string(),
        lower_b0: lower,
        known_b0: ds.header.known_b0,
        known_b1_max: ds.header.known_b1_max,
        upper_b1: upper,
        consistent: ok,
    })
}
