//! Closed-form values and intervals for `(b^0, b, b^1)` across every
//! primitive action class: classical subspace actions, classical
//! non-subspace actions, exceptional parabolic and non-parabolic actions,
//! torus normalizers and centralizers of involutions.
//!
//! A spec carries a characteristic case; formulas are evaluated at one
//! representative characteristic per residue class admitted by the case and
//! the resulting triples are merged into their interval hull.

mod dims;
mod nonsubspace;
mod subspace;
pub mod tables;

pub use dims::{action_dims, ActionDims};
pub use tables::{parabolic_value, EpEntry};

use crate::classdata::{exceptional_involution_centralizers, involution_record, InvolutionRecord};
use crate::rootsys::{RootSysError, SimpleType};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Errors raised while validating or evaluating an action spec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("invalid action spec: {0}")]
    InvalidSpec(String),
    #[error("characteristic incompatible: {0}")]
    CharIncompatible(String),
    #[error("unknown subgroup label `{label}` for {group}")]
    UnknownLabel { group: String, label: String },
    #[error("parabolic tables cover exceptional groups only, got {0}")]
    NotExceptional(String),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error("the predicate requires p != 2; use dimhalf_predicate_p2 for characteristic 2")]
    NeedsOddCharacteristic,
    #[error("pair excluded from the characteristic 2 predicate: {0}")]
    ExcludedPair(String),
    #[error("dimensions are not available for {0}")]
    DimsUnavailable(String),
    #[error("predicate value depends on the characteristic within the case `{0}`")]
    CharacteristicDependent(String),
}

/// Group families accepted by [`ActionSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupFamily {
    #[serde(rename = "SL")]
    SL,
    #[serde(rename = "Sp")]
    Sp,
    #[serde(rename = "SO")]
    SO,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl GroupFamily {
    pub fn is_classical(self) -> bool {
        matches!(self, GroupFamily::SL | GroupFamily::Sp | GroupFamily::SO)
    }

    /// The simple type of an exceptional family.
    pub fn exceptional_type(self) -> Option<SimpleType> {
        let s = match self {
            GroupFamily::E6 => "E6",
            GroupFamily::E7 => "E7",
            GroupFamily::E8 => "E8",
            GroupFamily::F4 => "F4",
            GroupFamily::G2 => "G2",
            _ => return None,
        };
        s.parse().ok()
    }

    pub fn from_simple_type(t: SimpleType) -> Option<Self> {
        match t.to_string().as_str() {
            "E6" => Some(GroupFamily::E6),
            "E7" => Some(GroupFamily::E7),
            "E8" => Some(GroupFamily::E8),
            "F4" => Some(GroupFamily::F4),
            "G2" => Some(GroupFamily::G2),
            _ => None,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupFamily::SL => "SL",
            GroupFamily::Sp => "Sp",
            GroupFamily::SO => "SO",
            GroupFamily::E6 => "E6",
            GroupFamily::E7 => "E7",
            GroupFamily::E8 => "E8",
            GroupFamily::F4 => "F4",
            GroupFamily::G2 => "G2",
        };
        f.write_str(s)
    }
}

/// The kind of subspace fixed by a subspace-action stabilizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Nondeg,
    TotallySingular,
    #[serde(rename = "nonsingular_1space")]
    NonsingularOneSpace,
    #[serde(rename = "On_in_Spn")]
    OnInSpn,
}

fn default_d() -> usize {
    1
}

/// The point stabilizer of an action.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupSpec {
    Subspace {
        #[serde(default = "default_d")]
        d: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        flavor: Option<Flavor>,
    },
    Nonsubspace {
        label: String,
    },
    Parabolic {
        i: usize,
    },
    TorusNormalizer,
}

/// Characteristic constraint attached to a spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum CharCase {
    #[serde(rename = "p=0", alias = "p0", alias = "zero")]
    Zero,
    #[serde(rename = "p=2", alias = "p2", alias = "two")]
    Two,
    #[serde(rename = "p=3", alias = "p3", alias = "three")]
    Three,
    #[serde(rename = "p_odd", alias = "p!=2", alias = "odd")]
    Odd,
    #[serde(rename = "p_not_2_3_5", alias = "good")]
    Good,
    #[default]
    #[serde(rename = "any")]
    Any,
}

impl CharCase {
    /// Representative characteristics, one per behaviour class; `7` stands
    /// for every characteristic outside `{2, 3, 5}` and `0` for zero.
    pub fn representatives(self) -> &'static [u32] {
        match self {
            CharCase::Zero => &[0],
            CharCase::Two => &[2],
            CharCase::Three => &[3],
            CharCase::Odd => &[0, 3, 5, 7],
            CharCase::Good => &[0, 7],
            CharCase::Any => &[0, 2, 3, 5, 7],
        }
    }

    /// The point case for a single characteristic.
    pub fn point(p: u32) -> CharCase {
        match p {
            0 => CharCase::Zero,
            2 => CharCase::Two,
            3 => CharCase::Three,
            _ => CharCase::Good,
        }
    }

    pub fn admits_two(self) -> bool {
        self.representatives().contains(&2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CharCase::Zero => "p=0",
            CharCase::Two => "p=2",
            CharCase::Three => "p=3",
            CharCase::Odd => "p_odd",
            CharCase::Good => "p_not_2_3_5",
            CharCase::Any => "any",
        }
    }
}

/// A primitive action: group, point stabilizer and characteristic case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub family: GroupFamily,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub subgroup: SubgroupSpec,
    #[serde(rename = "char", alias = "char_case", default)]
    pub char_case: CharCase,
}

impl ActionSpec {
    pub fn subspace(family: GroupFamily, n: usize, d: usize, flavor: Option<Flavor>, char_case: CharCase) -> Self {
        ActionSpec { family, n: Some(n), subgroup: SubgroupSpec::Subspace { d, flavor }, char_case }
    }

    pub fn nonsubspace(family: GroupFamily, n: Option<usize>, label: &str, char_case: CharCase) -> Self {
        ActionSpec { family, n, subgroup: SubgroupSpec::Nonsubspace { label: label.to_string() }, char_case }
    }

    pub fn parabolic(family: GroupFamily, i: usize) -> Self {
        ActionSpec { family, n: None, subgroup: SubgroupSpec::Parabolic { i }, char_case: CharCase::Any }
    }

    pub fn with_char(&self, char_case: CharCase) -> Self {
        ActionSpec { char_case, ..self.clone() }
    }

    pub(crate) fn classical_n(&self) -> Result<usize, FormulaError> {
        self.n
            .ok_or_else(|| FormulaError::InvalidSpec(format!("{} requires the natural module dimension `n`", self.family)))
    }

    /// Short human-readable description.
    pub fn describe(&self) -> String {
        let g = match self.n {
            Some(n) if self.family.is_classical() => format!("{}_{}", self.family, n),
            _ => self.family.to_string(),
        };
        let h = match &self.subgroup {
            SubgroupSpec::Subspace { d, flavor } => match flavor {
                None => format!("{d}-spaces"),
                Some(Flavor::Nondeg) => format!("non-degenerate {d}-spaces"),
                Some(Flavor::TotallySingular) => format!("totally singular {d}-spaces"),
                Some(Flavor::NonsingularOneSpace) => "non-singular 1-spaces".to_string(),
                Some(Flavor::OnInSpn) => "cosets of O_n".to_string(),
            },
            SubgroupSpec::Nonsubspace { label } => format!("cosets of {label}"),
            SubgroupSpec::Parabolic { i } => format!("cosets of P{i}"),
            SubgroupSpec::TorusNormalizer => "cosets of a maximal torus normalizer".to_string(),
        };
        format!("{g} on {h} ({})", self.char_case.as_str())
    }
}

/// A closed integer interval; a point when `lo == hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Interval {
    pub fn point(v: u32) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn new(lo: u32, hi: u32) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn contains(&self, v: u32) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_point() {
            s.serialize_u32(self.lo)
        } else {
            let mut seq = s.serialize_seq(Some(2))?;
            seq.serialize_element(&self.lo)?;
            seq.serialize_element(&self.hi)?;
            seq.end()
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Values or intervals for the three base measures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseTriple {
    pub b0: Interval,
    pub b: Interval,
    pub b1: Interval,
    pub case_tag: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Order of the generic two-point stabilizer, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_stabilizer_order: Option<u64>,
    /// Set when the action is equivalent to a subspace action of an
    /// isogenous classical group, naming that action.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subspace_equivalent: Option<String>,
}

impl BaseTriple {
    pub fn all(v: u32, tag: impl Into<String>) -> Self {
        Self::points(v, v, v, tag)
    }

    pub fn points(b0: u32, b: u32, b1: u32, tag: impl Into<String>) -> Self {
        BaseTriple {
            b0: Interval::point(b0),
            b: Interval::point(b),
            b1: Interval::point(b1),
            case_tag: tag.into(),
            notes: Vec::new(),
            pair_stabilizer_order: None,
            subspace_equivalent: None,
        }
    }

    pub fn intervals(b0: Interval, b: Interval, b1: Interval, tag: impl Into<String>) -> Self {
        BaseTriple { b0, b, b1, case_tag: tag.into(), notes: Vec::new(), pair_stabilizer_order: None, subspace_equivalent: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// `b0 <= b <= b1` on both interval ends, and `b1 <= b0 + 1` when
    /// both are points.
    pub fn check_invariants(&self) -> Result<(), String> {
        if !(self.b0.lo <= self.b.lo && self.b.lo <= self.b1.lo) {
            return Err(format!("lower ends out of order: {} {} {}", self.b0, self.b, self.b1));
        }
        if !(self.b0.hi <= self.b.hi && self.b.hi <= self.b1.hi) {
            return Err(format!("upper ends out of order: {} {} {}", self.b0, self.b, self.b1));
        }
        if self.b0.is_point() && self.b1.is_point() && self.b1.lo > self.b0.lo + 1 {
            return Err(format!("b1 = {} exceeds b0 + 1 = {}", self.b1.lo, self.b0.lo + 1));
        }
        if self.b0.lo == 0 {
            return Err("b0 must be positive".into());
        }
        Ok(())
    }

    fn hull(&self, other: &BaseTriple) -> BaseTriple {
        let mut tag = self.case_tag.clone();
        if !self.case_tag.split(" | ").any(|t| t == other.case_tag) {
            tag = format!("{tag} | {}", other.case_tag);
        }
        let mut notes = self.notes.clone();
        for n in &other.notes {
            if !notes.contains(n) {
                notes.push(n.clone());
            }
        }
        BaseTriple {
            b0: self.b0.hull(&other.b0),
            b: self.b.hull(&other.b),
            b1: self.b1.hull(&other.b1),
            case_tag: tag,
            notes,
            pair_stabilizer_order: if self.pair_stabilizer_order == other.pair_stabilizer_order {
                self.pair_stabilizer_order
            } else {
                None
            },
            subspace_equivalent: if self.subspace_equivalent == other.subspace_equivalent {
                self.subspace_equivalent.clone()
            } else {
                None
            },
        }
    }
}

/// Evaluates `f` at each representative characteristic of `case`,
/// skipping characteristic-incompatible ones, and merges the results.
pub(crate) fn over_characteristics<F>(case: CharCase, f: F) -> Result<BaseTriple, FormulaError>
where
    F: Fn(u32) -> Result<BaseTriple, FormulaError>,
{
    let mut acc: Option<BaseTriple> = None;
    let mut first_err: Option<FormulaError> = None;
    for &p in case.representatives() {
        match f(p) {
            Ok(t) => {
                acc = Some(match acc {
                    None => t,
                    Some(a) => a.hull(&t),
                });
            }
            Err(e @ FormulaError::CharIncompatible(_)) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    acc.ok_or_else(|| first_err.expect("representative set is nonempty"))
}

/// Triple for a classical subspace action.
pub fn subspace_triple(spec: &ActionSpec) -> Result<BaseTriple, FormulaError> {
    match &spec.subgroup {
        SubgroupSpec::Subspace { d, flavor } => {
            let n = spec.classical_n()?;
            over_characteristics(spec.char_case, |p| {
                let t = subspace::at(spec.family, n, *d, *flavor, p)?;
                let dims = action_dims(&spec.with_char(CharCase::point(p)), p)?;
                Ok(match dims {
                    Some(dims) => apply_dimension_bound(t, &dims),
                    None => t,
                })
            })
        }
        _ => Err(FormulaError::InvalidSpec("subspace_triple expects a subspace subgroup".into())),
    }
}

/// Raises the triple to `ceil(dim G / dim Omega)`, which bounds `b^0` from
/// below for every action. Interval lower ends are lifted; a point value
/// below the bound is replaced by the bound for `b^0`, with `b` and `b^1`
/// in `[bound, bound + 1]`.
pub fn apply_dimension_bound(mut t: BaseTriple, dims: &ActionDims) -> BaseTriple {
    let Ok(lb) = crate::bounds::lower_bound_b0(dims.dim_g as i64, dims.dim_omega as i64) else {
        return t;
    };
    let lb = lb as u32;
    if lb <= t.b0.lo {
        return t;
    }
    if lb <= t.b0.hi {
        let old = t.b0;
        for iv in [&mut t.b0, &mut t.b, &mut t.b1] {
            iv.lo = iv.lo.max(lb);
        }
        return t.with_note(format!("lower ends raised from {old} to the dimension bound {lb}"));
    }
    let old = t.b0;
    t.b0 = Interval::point(lb);
    t.b = Interval::new(lb, t.b.hi.max(lb + 1));
    t.b1 = Interval::new(lb, t.b1.hi.max(lb + 1));
    if t.b.hi > t.b1.hi {
        t.b1.hi = t.b.hi;
    }
    t.with_note(format!("closed-form value {old} lies below the dimension bound {lb}; b0 raised to {lb}"))
}

/// Triple for a classical non-subspace action or an exceptional
/// non-parabolic action.
pub fn nonsubspace_triple(spec: &ActionSpec) -> Result<BaseTriple, FormulaError> {
    match &spec.subgroup {
        SubgroupSpec::Nonsubspace { label } => over_characteristics(spec.char_case, |p| nonsubspace::at(spec, label, p)),
        _ => Err(FormulaError::InvalidSpec("nonsubspace_triple expects a non-subspace subgroup label".into())),
    }
}

/// Triple for an exceptional group acting on cosets of `P_i`.
pub fn parabolic_triple(family: GroupFamily, i: usize) -> Result<BaseTriple, FormulaError> {
    let g = family.exceptional_type().ok_or_else(|| FormulaError::NotExceptional(family.to_string()))?;
    let e = parabolic_value(g, i)?;
    let tag = format!("exceptional parabolic {g}/P{i}");
    Ok(if e.asterisk {
        let iv = Interval::new(e.c - 1, e.c);
        BaseTriple::intervals(iv, iv, iv, format!("{tag}, c = {}*", e.c))
    } else {
        BaseTriple::all(e.c, format!("{tag}, c = {}", e.c))
    })
}

/// Triple for the normalizer of a maximal torus.
pub fn torus_normalizer_triple(spec: &ActionSpec) -> Result<BaseTriple, FormulaError> {
    if spec.family == GroupFamily::SL && spec.classical_n()? == 2 {
        let mut t = BaseTriple::points(2, 2, 3, "torus normalizer in SL_2");
        t.pair_stabilizer_order = Some(2);
        return Ok(t);
    }
    if spec.family.is_classical() {
        let n = spec.classical_n()?;
        subspace::validate_classical_n(spec.family, n)?;
    }
    Ok(BaseTriple::all(2, "torus normalizer, rank at least 2"))
}

/// Dispatches on the subgroup kind.
pub fn triple(spec: &ActionSpec) -> Result<BaseTriple, FormulaError> {
    let t = match &spec.subgroup {
        SubgroupSpec::Subspace { .. } => subspace_triple(spec)?,
        SubgroupSpec::Nonsubspace { .. } => nonsubspace_triple(spec)?,
        SubgroupSpec::Parabolic { i } => {
            if spec.family.is_classical() {
                return Err(FormulaError::NotExceptional(spec.family.to_string()));
            }
            parabolic_triple(spec.family, *i)?
        }
        SubgroupSpec::TorusNormalizer => torus_normalizer_triple(spec)?,
    };
    debug_assert!(t.check_invariants().is_ok(), "{:?}", t);
    Ok(t)
}

/// The subspace action equivalent to `spec` at characteristic `p`, if
/// `spec` is one of the tabulated non-subspace presentations of a subspace
/// action.
pub fn subspace_equivalent(spec: &ActionSpec, p: u32) -> Result<Option<(ActionSpec, &'static str)>, FormulaError> {
    match &spec.subgroup {
        SubgroupSpec::Nonsubspace { label } => nonsubspace::equivalent(spec, label, p),
        _ => Ok(None),
    }
}

/// Whether `spec` is a subspace action, either directly or through an
/// equivalence at some admitted characteristic.
pub fn is_subspace_action(spec: &ActionSpec) -> Result<bool, FormulaError> {
    match &spec.subgroup {
        SubgroupSpec::Subspace { .. } => Ok(true),
        SubgroupSpec::Nonsubspace { .. } => {
            for &p in spec.char_case.representatives() {
                if subspace_equivalent(spec, p)?.is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        _ => Ok(false),
    }
}

/// Triple for `H = C_G(tau)` with `tau` the involution of `g` inverting a
/// maximal torus (`p != 2`).
pub fn involution_triple(g: SimpleType) -> BaseTriple {
    let rec = involution_record(g);
    involution_triple_for(g, &rec)
}

/// Triple for the centralizer of a given involution record.
pub fn involution_triple_for(g: SimpleType, rec: &InvolutionRecord) -> BaseTriple {
    if rec.inverts_maximal_torus {
        let mut t = BaseTriple::points(2, 2, 3, format!("centralizer of a torus-inverting involution in {g}"));
        t.pair_stabilizer_order = Some(1u64 << g.rank);
        t
    } else {
        let h = rec.centralizer_dim as u32;
        BaseTriple::intervals(
            Interval::new(3, h + 1),
            Interval::new(3, h + 2),
            Interval::new(3, h + 2),
            format!("centralizer {} of an involution not inverting a maximal torus in {g}", rec.centralizer_type),
        )
        .with_note("only b0 >= 3 is determined; upper ends come from b0 <= dim H + 1 and b1 <= b0 + 1")
    }
}

/// All involution centralizers recorded for `g`, with their triples.
pub fn involution_triples(g: SimpleType) -> Vec<(InvolutionRecord, BaseTriple)> {
    let mut out = vec![(involution_record(g), involution_triple(g))];
    for r in exceptional_involution_centralizers(g) {
        if !r.inverts_maximal_torus {
            let t = involution_triple_for(g, &r);
            out.push((r, t));
        }
    }
    out
}

fn dimhalf_clause(spec: &ActionSpec, p: u32) -> Result<bool, FormulaError> {
    let eq = subspace_equivalent(spec, p)?;
    let spec = match &eq {
        Some((s, _)) => s,
        None => spec,
    };
    let dims = action_dims(spec, p)?.ok_or_else(|| FormulaError::DimsUnavailable(spec.describe()))?;
    if 2 * dims.dim_h > dims.dim_g {
        return Ok(true);
    }
    let n = spec.n.unwrap_or(0);
    match (&spec.subgroup, spec.family) {
        (SubgroupSpec::Subspace { d, flavor: Some(Flavor::Nondeg) }, GroupFamily::SO) => {
            let d = *d;
            if n >= 2 * d + 2 {
                let l = n - 2 * d;
                return Ok(l <= d && l * l <= n);
            }
            Ok(false)
        }
        (SubgroupSpec::Nonsubspace { label }, GroupFamily::SL) => {
            Ok(n >= 4 && n % 2 == 0 && nonsubspace::is_label(label, n, "GLwr", n / 2, 2))
        }
        (SubgroupSpec::Nonsubspace { label }, GroupFamily::Sp) => Ok(n == 6 && nonsubspace::is_label(label, n, "Spwr", 2, 3)),
        (SubgroupSpec::Nonsubspace { label }, GroupFamily::E6) => {
            Ok(crate::rootsys::canonical_label(label).map(|c| c == "A1A5").unwrap_or(false) && p != 2)
        }
        _ => Ok(false),
    }
}

fn dimhalf_over(spec: &ActionSpec, reps: &[u32]) -> Result<bool, FormulaError> {
    let mut value: Option<bool> = None;
    let mut first_err = None;
    for &p in reps {
        if p == 2 {
            continue;
        }
        if let Err(e) = triple(&spec.with_char(CharCase::point(p))) {
            first_err.get_or_insert(e);
            continue;
        }
        let v = dimhalf_clause(spec, p)?;
        match value {
            None => value = Some(v),
            Some(w) if w != v => return Err(FormulaError::CharacteristicDependent(spec.char_case.as_str().into())),
            _ => {}
        }
    }
    value.ok_or_else(|| first_err.unwrap_or(FormulaError::NeedsOddCharacteristic))
}

/// Whether `b(G, H) > 2`, decided by the structural characterization valid
/// for `p != 2`: `dim H > dim G / 2`, or one of four listed families.
pub fn dimhalf_predicate(spec: &ActionSpec) -> Result<bool, FormulaError> {
    if spec.char_case.admits_two() {
        return Err(FormulaError::NeedsOddCharacteristic);
    }
    dimhalf_over(spec, spec.char_case.representatives())
}

/// Same as [`dimhalf_predicate`] with caller-supplied dimensions for the
/// first clause.
pub fn dimhalf_predicate_with_dims(spec: &ActionSpec, dims: &ActionDims) -> Result<bool, FormulaError> {
    if spec.char_case.admits_two() {
        return Err(FormulaError::NeedsOddCharacteristic);
    }
    if 2 * dims.dim_h > dims.dim_g {
        return Ok(true);
    }
    dimhalf_predicate(spec)
}

/// The characteristic 2 version: clauses (`dim H > dim G / 2`, SO
/// non-degenerate, SL wreath, Sp_6 wreath) characterize `b > 2` except for
/// four excluded pairs, which are rejected.
pub fn dimhalf_predicate_p2(spec: &ActionSpec) -> Result<bool, FormulaError> {
    if let Some(why) = nonsubspace::p2_excluded(spec)? {
        return Err(FormulaError::ExcludedPair(why));
    }
    triple(&spec.with_char(CharCase::Two))?;
    let v = dimhalf_clause(spec, 2)?;
    Ok(v)
}
