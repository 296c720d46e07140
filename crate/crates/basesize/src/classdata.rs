//! Conjugacy-class dimension records for the fixed-point-ratio criterion and
//! the table of involutions inverting a maximal torus.
//!
//! Datasets are line-oriented JSON. The first non-blank line is a header:
//!
//! ```json
//! {"schema":1,"group":"G2","subgroup":"N(A2)","expected_sup_ratio":"2/3",
//!  "source":"...","characteristic":null,"completeness":"..."}
//! ```
//!
//! Every following non-blank line is one class record:
//!
//! ```json
//! {"class_label":"A1 (long root)","element_kind":"unipotent","element_order":0,
//!  "dim_class_in_G":6,"dim_intersection_with_H":4,"is_long_root":true}
//! ```
//!
//! Optional record fields: `charp_condition` (`"p=2"`, `"p!=2"`, `"p=3"`),
//! `excludable` (the centraliser of `x` has a central torus large enough to
//! drop `x` from the reduced prime-order set) and `upper_bound` (the
//! intersection dimension is an upper bound rather than an exact value).
//! Lines starting with `#` are comments.

use crate::rootsys::{CharCondition, SimpleType};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::io;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Current dataset schema version.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the directory searched for datasets.
pub const DATA_DIR_ENV: &str = "BASESIZE_DATA_DIR";

/// Errors raised while loading or validating datasets.
#[derive(Debug, Error)]
pub enum ClassDataError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("line {line}: parse error: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: invariant violated: {message}")]
    Invariant { line: usize, message: String },
    #[error("header: {0}")]
    Header(String),
    #[error("sup ratio {found} over the records differs from the declared {expected}")]
    RatioMismatch { expected: String, found: String },
    #[error("dataset `{0}` not found (set {DATA_DIR_ENV} or pass a path)")]
    NotFound(String),
}

/// Kind of element a class record describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElementKind {
    #[serde(rename = "unipotent")]
    Unipotent,
    #[serde(rename = "semisimple")]
    Semisimple,
    /// An element of `H \ H^0`.
    #[serde(rename = "mixed-coset")]
    MixedCoset,
}

/// One class `x^G` with `dim x^G` and `dim (x^G ∩ H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFusionRecord {
    pub group: String,
    pub subgroup_label: String,
    pub class_label: String,
    pub element_kind: ElementKind,
    /// Prime order, or 0 for a unipotent element in characteristic zero.
    pub element_order: u32,
    #[serde(rename = "dim_class_in_G")]
    pub dim_class_in_g: u32,
    #[serde(rename = "dim_intersection_with_H")]
    pub dim_intersection_with_h: u32,
    pub is_long_root: bool,
    pub charp_condition: Option<CharCondition>,
    pub excludable: bool,
    pub upper_bound: bool,
}

impl ClassFusionRecord {
    /// `dim (x^G ∩ H) / dim x^G`.
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.dim_intersection_with_h as u64, self.dim_class_in_g as u64)
    }

    /// Whether this is a unipotent element when the characteristic is `p`
    /// (`None` when unknown). Elements of `H \ H^0` of order `p` are unipotent;
    /// with unknown characteristic they are treated as possibly unipotent.
    pub fn may_be_unipotent(&self, p: Option<u32>) -> bool {
        match self.element_kind {
            ElementKind::Unipotent => true,
            ElementKind::Semisimple => false,
            ElementKind::MixedCoset => match p {
                Some(p) => self.element_order == p,
                None => true,
            },
        }
    }

    /// Whether this is a semisimple element when the characteristic is `p`.
    pub fn may_be_semisimple(&self, p: Option<u32>) -> bool {
        match self.element_kind {
            ElementKind::Unipotent => false,
            ElementKind::Semisimple => true,
            ElementKind::MixedCoset => match p {
                Some(p) => self.element_order != p,
                None => true,
            },
        }
    }
}

/// Parsed dataset header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetHeader {
    pub schema: u32,
    pub group: String,
    pub subgroup: String,
    pub expected_sup_ratio: String,
    pub source: String,
    #[serde(default)]
    pub characteristic: Option<u32>,
    #[serde(default)]
    pub completeness: String,
    /// Known value of `b^0` for sandwich checks, if established.
    #[serde(default)]
    pub known_b0: Option<u32>,
    /// Known upper bound for `b^1`, if established.
    #[serde(default)]
    pub known_b1_max: Option<u32>,
    /// Dimension of `Omega = G/H`, used for the dimension lower bound.
    #[serde(default)]
    pub dim_omega: Option<u32>,
}

/// A validated dataset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dataset {
    pub header: DatasetHeader,
    pub records: Vec<ClassFusionRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    class_label: String,
    element_kind: ElementKind,
    element_order: u32,
    #[serde(rename = "dim_class_in_G")]
    dim_class_in_g: i64,
    #[serde(rename = "dim_intersection_with_H")]
    dim_intersection_with_h: i64,
    #[serde(default)]
    is_long_root: bool,
    #[serde(default)]
    charp_condition: Option<String>,
    #[serde(default)]
    excludable: bool,
    #[serde(default)]
    upper_bound: bool,
}

fn parse_char_condition(s: &str) -> Option<CharCondition> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    match t.as_str() {
        "p=2" => Some(CharCondition::Two),
        "p!=2" | "p≠2" => Some(CharCondition::NotTwo),
        "p=3" => Some(CharCondition::Three),
        "any" | "" => Some(CharCondition::Any),
        _ => None,
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses `"a/b"` or `"a"` into an exact rational.
pub fn parse_ratio(s: &str) -> Option<Ratio<u64>> {
    let t = s.trim();
    match t.split_once('/') {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().ok()?;
            let b: u64 = b.trim().parse().ok()?;
            if b == 0 {
                None
            } else {
                Some(Ratio::new(a, b))
            }
        }
        None => t.parse().ok().map(Ratio::from_integer),
    }
}

/// Maximum of `dim (x^G ∩ H)/dim x^G` over records, with the attaining index.
pub fn sup_ratio(records: &[ClassFusionRecord]) -> Option<(Ratio<u64>, usize)> {
    records
        .iter()
        .enumerate()
        .map(|(i, r)| (r.ratio(), i))
        .fold(None, |acc, (q, i)| match acc {
            Some((best, j)) if best >= q => Some((best, j)),
            _ => Some((q, i)),
        })
}

/// Parses and validates dataset text. Line numbers in errors are 1-based.
pub fn parse_dataset(text: &str) -> Result<Dataset, ClassDataError> {
    let mut header: Option<(DatasetHeader, SimpleType)> = None;
    let mut records = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match &header {
            None => {
                let h: DatasetHeader = serde_json::from_str(line)
                    .map_err(|e| ClassDataError::Parse { line: line_no, message: e.to_string() })?;
                if h.schema != SCHEMA_VERSION {
                    return Err(ClassDataError::Header(format!(
                        "unsupported schema {} (expected {SCHEMA_VERSION})",
                        h.schema
                    )));
                }
                let g: SimpleType = h
                    .group
                    .parse()
                    .map_err(|e| ClassDataError::Header(format!("group: {e}")))?;
                if parse_ratio(&h.expected_sup_ratio).is_none() {
                    return Err(ClassDataError::Header(format!(
                        "expected_sup_ratio `{}` is not a rational",
                        h.expected_sup_ratio
                    )));
                }
                header = Some((h, g));
            }
            Some((h, g)) => {
                let r: RawRecord = serde_json::from_str(line)
                    .map_err(|e| ClassDataError::Parse { line: line_no, message: e.to_string() })?;
                records.push(validate_record(r, h, *g, line_no)?);
            }
        }
    }
    let (header, _) = header.ok_or_else(|| ClassDataError::Header("missing header line".into()))?;
    if records.is_empty() {
        return Err(ClassDataError::Header("dataset has no records".into()));
    }
    let expected = parse_ratio(&header.expected_sup_ratio).expect("checked above");
    let (found, _) = sup_ratio(&records).expect("nonempty");
    if found != expected {
        return Err(ClassDataError::RatioMismatch {
            expected: header.expected_sup_ratio.clone(),
            found: found.to_string(),
        });
    }
    Ok(Dataset { header, records })
}

fn validate_record(
    r: RawRecord,
    h: &DatasetHeader,
    g: SimpleType,
    line: usize,
) -> Result<ClassFusionRecord, ClassDataError> {
    let bad = |message: String| ClassDataError::Invariant { line, message };
    if r.dim_class_in_g <= 0 {
        return Err(bad(format!("dim_class_in_G = {} must be positive", r.dim_class_in_g)));
    }
    if r.dim_intersection_with_h < 0 {
        return Err(bad(format!(
            "dim_intersection_with_H = {} is negative",
            r.dim_intersection_with_h
        )));
    }
    if r.dim_intersection_with_h > r.dim_class_in_g {
        return Err(bad(format!(
            "dim_intersection_with_H = {} exceeds dim_class_in_G = {}",
            r.dim_intersection_with_h, r.dim_class_in_g
        )));
    }
    let class_cap = (g.dim() - g.rank) as i64;
    if r.dim_class_in_g > class_cap {
        return Err(bad(format!(
            "dim_class_in_G = {} exceeds dim G - rank G = {class_cap}",
            r.dim_class_in_g
        )));
    }
    if r.is_long_root && r.element_kind != ElementKind::Unipotent {
        return Err(bad("a long root element must be unipotent".into()));
    }
    if r.element_order != 0 && !is_prime(r.element_order) {
        return Err(bad(format!("element_order {} is neither 0 nor prime", r.element_order)));
    }
    if r.element_order == 0 && r.element_kind != ElementKind::Unipotent {
        return Err(bad("element_order 0 is reserved for unipotent elements".into()));
    }
    let charp_condition = match &r.charp_condition {
        None => None,
        Some(s) => Some(
            parse_char_condition(s).ok_or_else(|| bad(format!("unknown charp_condition `{s}`")))?,
        ),
    };
    Ok(ClassFusionRecord {
        group: h.group.clone(),
        subgroup_label: h.subgroup.clone(),
        class_label: r.class_label,
        element_kind: r.element_kind,
        element_order: r.element_order,
        dim_class_in_g: r.dim_class_in_g as u32,
        dim_intersection_with_h: r.dim_intersection_with_h as u32,
        is_long_root: r.is_long_root,
        charp_condition,
        excludable: r.excludable,
        upper_bound: r.upper_bound,
    })
}

/// Directory holding the shipped datasets: `$BASESIZE_DATA_DIR` when set,
/// otherwise the crate's `data/` directory.
pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

/// Resolves a dataset argument: an existing path, or a name looked up in
/// [`data_dir`] (with or without the `.jsonl` extension).
pub fn resolve_dataset(name: &str) -> Result<PathBuf, ClassDataError> {
    let p = Path::new(name);
    if p.is_file() {
        return Ok(p.to_path_buf());
    }
    let dir = data_dir();
    for cand in [dir.join(name), dir.join(format!("{name}.jsonl"))] {
        if cand.is_file() {
            return Ok(cand);
        }
    }
    Err(ClassDataError::NotFound(name.to_string()))
}

/// Loads and validates a dataset file.
pub fn load_dataset(path: impl AsRef<Path>) -> Result<Dataset, ClassDataError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| ClassDataError::Io { path: path.to_path_buf(), source })?;
    parse_dataset(&text)
}

/// Names of the datasets shipped with the crate.
pub const SHIPPED_DATASETS: &[&str] = &[
    "g2_na2",
    "f4_b4",
    "e6_f4",
    "e8_a1e7",
    "e8_d8_p2",
    "e7_a7_p2",
    "e6_a1a5_p2",
];

/// Records whose characteristic condition admits `p`.
pub fn records_for_characteristic(records: &[ClassFusionRecord], p: u32) -> Vec<ClassFusionRecord> {
    records
        .iter()
        .filter(|r| r.charp_condition.is_none_or(|c| c.admits(p)))
        .cloned()
        .collect()
}

/// Kind of an involutory automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionKind {
    Inner,
    Graph,
}

/// The centraliser type of an involution `tau` of a simple group, `p != 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionRecord {
    pub group: String,
    pub centralizer_type: String,
    pub involution_kind: InvolutionKind,
    pub inverts_maximal_torus: bool,
    pub centralizer_dim: usize,
}

/// The involution inverting a maximal torus of `g` (unique up to
/// conjugacy). Its centraliser has dimension `(dim G - rank)/2`.
pub fn involution_record(g: SimpleType) -> InvolutionRecord {
    use crate::rootsys::Family::*;
    let n = g.rank;
    let (cent, kind) = match g.family {
        A => {
            let c = if n == 1 { "SO2 (torus normalizer)".to_string() } else { format!("SO{}", n + 1) };
            (c, if n == 1 { InvolutionKind::Inner } else { InvolutionKind::Graph })
        }
        B => (format!("SO{} x SO{}", n + 1, n), InvolutionKind::Inner),
        C => (format!("GL{n}"), InvolutionKind::Inner),
        D => (
            format!("SO{n} x SO{n}"),
            if n.is_multiple_of(2) { InvolutionKind::Inner } else { InvolutionKind::Graph },
        ),
        E => match n {
            8 => ("D8".into(), InvolutionKind::Inner),
            7 => ("A7".into(), InvolutionKind::Inner),
            _ => ("C4".into(), InvolutionKind::Graph),
        },
        F => ("A1C3".into(), InvolutionKind::Inner),
        G => ("A1A~1".into(), InvolutionKind::Inner),
    };
    InvolutionRecord {
        group: g.to_string(),
        centralizer_type: cent,
        involution_kind: kind,
        inverts_maximal_torus: true,
        centralizer_dim: g.positive_root_count(),
    }
}

/// All involution centralisers of the exceptional group `g` (`p != 2`),
/// including those of involutions that do not invert a maximal torus.
pub fn exceptional_involution_centralizers(g: SimpleType) -> Vec<InvolutionRecord> {
    let mut out = vec![involution_record(g)];
    let others: &[(&str, InvolutionKind, usize)] = match (g.family, g.rank) {
        (crate::rootsys::Family::E, 8) => &[("A1E7", InvolutionKind::Inner, 136)],
        (crate::rootsys::Family::E, 7) => {
            &[("A1D6", InvolutionKind::Inner, 69), ("T1E6", InvolutionKind::Inner, 79)]
        }
        (crate::rootsys::Family::E, 6) => &[
            ("A1A5", InvolutionKind::Inner, 38),
            ("T1D5", InvolutionKind::Inner, 46),
            ("F4", InvolutionKind::Graph, 52),
        ],
        (crate::rootsys::Family::F, 4) => &[("B4", InvolutionKind::Inner, 36)],
        _ => &[],
    };
    for (c, k, d) in others {
        out.push(InvolutionRecord {
            group: g.to_string(),
            centralizer_type: (*c).to_string(),
            involution_kind: *k,
            inverts_maximal_torus: false,
            centralizer_dim: *d,
        });
    }
    out
}
