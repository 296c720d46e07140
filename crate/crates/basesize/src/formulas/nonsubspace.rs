//! Non-subspace actions: classical groups on cosets of irreducible or
//! imprimitive subgroups, and exceptional groups on cosets of maximal
//! non-parabolic subgroups.

use super::{subspace, ActionSpec, BaseTriple, CharCase, Flavor, FormulaError, GroupFamily, Interval};
use crate::rootsys::{canonical_label, lookup_maximal, CharCondition};

/// Parsed shape of a classical subgroup label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum ClassicalLabel {
    /// `X_m wr S_t` with `X` one of GL, Sp, O.
    Wreath { kind: String, m: usize, t: usize },
    /// A single classical group `X_m`.
    Simple { kind: String, m: usize },
    /// `X_a ⊗ Y_b`.
    Tensor { left: (String, usize), right: (String, usize) },
    G2,
    /// An irreducible subgroup given only by name.
    Irreducible(String),
}

fn normalize(label: &str, n: usize) -> String {
    let mut s: String = label
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}' | '\\'))
        .collect();
    s = s.replace('≀', "wr").replace("(x)", "⊗").replace("otimes", "⊗");
    for t in (2..=n.max(2)).rev() {
        if n.is_multiple_of(t) {
            s = s.replace(&format!("n/{t}"), &(n / t).to_string());
        }
    }
    apply_n(&s, n)
}

/// Replaces a bare `n` following a group name (as in `Sp_n`, `O_n`, `S_n`)
/// with its value.
fn apply_n(s: &str, n: usize) -> String {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::new();
    for (i, &c) in chars.iter().enumerate() {
        let after_letter = i > 0 && chars[i - 1].is_ascii_alphabetic();
        let before_letter = i + 1 < chars.len() && chars[i + 1].is_ascii_alphabetic();
        if c == 'n' && after_letter && !before_letter {
            out.push_str(&n.to_string());
        } else {
            out.push(c);
        }
    }
    out
}

fn split_kind(s: &str) -> Option<(String, usize)> {
    let idx = s.find(|c: char| c.is_ascii_digit())?;
    let (k, num) = s.split_at(idx);
    if k.is_empty() || !k.chars().all(|c| c.is_ascii_alphabetic()) {
        return None;
    }
    let m = num.parse().ok()?;
    Some((k.to_string(), m))
}

pub(crate) fn parse_classical(label: &str, n: usize) -> Option<ClassicalLabel> {
    let raw = label.trim();
    for prefix in ["irreducible:", "irr:"] {
        if let Some(rest) = raw.strip_prefix(prefix) {
            return Some(ClassicalLabel::Irreducible(rest.trim().to_string()));
        }
    }
    let s = normalize(raw, n);
    if s == "G2" {
        return Some(ClassicalLabel::G2);
    }
    if let Some((lhs, rhs)) = s.split_once("wr") {
        let (kind, m) = split_kind(lhs)?;
        let t: usize = rhs.strip_prefix('S')?.parse().ok()?;
        return Some(ClassicalLabel::Wreath { kind, m, t });
    }
    if let Some((lhs, rhs)) = s.split_once('⊗') {
        return Some(ClassicalLabel::Tensor { left: split_kind(lhs)?, right: split_kind(rhs)? });
    }
    let (kind, m) = split_kind(&s)?;
    Some(ClassicalLabel::Simple { kind, m })
}

/// Whether `label` parses as a wreath product of the given kind (`GLwr`,
/// `Spwr`, `Owr`) with block size `m` and `t` blocks.
pub(crate) fn is_label(label: &str, n: usize, what: &str, m: usize, t: usize) -> bool {
    match parse_classical(label, n) {
        Some(ClassicalLabel::Wreath { kind, m: mm, t: tt }) => format!("{kind}wr") == what && mm == m && tt == t,
        _ => false,
    }
}

fn unknown(spec: &ActionSpec, label: &str) -> FormulaError {
    FormulaError::UnknownLabel { group: spec_group(spec), label: label.to_string() }
}

fn spec_group(spec: &ActionSpec) -> String {
    match spec.n {
        Some(n) if spec.family.is_classical() => format!("{}_{}", spec.family, n),
        _ => spec.family.to_string(),
    }
}

fn incompatible(msg: impl Into<String>) -> FormulaError {
    FormulaError::CharIncompatible(msg.into())
}

fn invalid(msg: impl Into<String>) -> FormulaError {
    FormulaError::InvalidSpec(msg.into())
}

fn group_dim_kind(kind: &str, m: usize) -> Option<usize> {
    match kind {
        "SL" | "GL" => Some(m * m - 1 + usize::from(kind == "GL")),
        "Sp" => Some(m * (m + 1) / 2),
        "SO" | "O" => Some(m * (m - 1) / 2),
        _ => None,
    }
}

pub(crate) fn classical_label_dim(label: &ClassicalLabel) -> Option<usize> {
    match label {
        ClassicalLabel::Wreath { kind, m, t } => {
            let base = match kind.as_str() {
                "GL" => m * m,
                other => group_dim_kind(other, *m)?,
            };
            Some(base * t)
        }
        ClassicalLabel::Simple { kind, m } => group_dim_kind(kind, *m),
        ClassicalLabel::Tensor { left, right } => {
            let l = group_dim_kind(if left.0 == "GL" { "SL" } else { &left.0 }, left.1)?;
            let r = group_dim_kind(if right.0 == "GL" { "SL" } else { &right.0 }, right.1)?;
            Some(l + r)
        }
        ClassicalLabel::G2 => Some(14),
        ClassicalLabel::Irreducible(_) => None,
    }
}

/// The equivalent subspace action for the presentations that are
/// subspace actions of an isogenous group in disguise.
pub(crate) fn equivalent(spec: &ActionSpec, label: &str, p: u32) -> Result<Option<(ActionSpec, &'static str)>, FormulaError> {
    if !spec.family.is_classical() {
        return Ok(None);
    }
    let n = spec.classical_n()?;
    let parsed = match parse_classical(label, n) {
        Some(l) => l,
        None => return Ok(None),
    };
    let point = CharCase::point(p);
    let so = |m: usize, d: usize, f: Flavor| ActionSpec::subspace(GroupFamily::SO, m, d, Some(f), point);
    let r = match (spec.family, n, &parsed) {
        (GroupFamily::Sp, _, ClassicalLabel::Simple { kind, m }) if kind == "O" && *m == n && p == 2 => Some((
            ActionSpec::subspace(GroupFamily::Sp, n, 1, Some(Flavor::OnInSpn), point),
            "SO_{n+1} on non-singular 1-spaces (O_n in Sp_n, p = 2)",
        )),
        (GroupFamily::SO, 8, ClassicalLabel::Tensor { left, right })
            if p != 2 && left.0 == "Sp" && right.0 == "Sp" && [left.1, right.1] == [4, 2] =>
        {
            Some((so(8, 3, Flavor::Nondeg), "SO_8 on non-degenerate 3-spaces"))
        }
        (GroupFamily::SO, 8, ClassicalLabel::Simple { kind, m }) if kind == "GL" && *m == 4 => {
            Some((so(8, 2, Flavor::Nondeg), "SO_8 on non-degenerate 2-spaces"))
        }
        (GroupFamily::SO, 8, ClassicalLabel::Simple { kind, m }) if kind == "SO" && *m == 7 && p != 2 => {
            Some((so(8, 1, Flavor::Nondeg), "SO_8 on non-degenerate 1-spaces"))
        }
        (GroupFamily::SO, 8, ClassicalLabel::Simple { kind, m }) if kind == "Sp" && *m == 6 && p == 2 => {
            Some((so(8, 1, Flavor::NonsingularOneSpace), "SO_8 on non-singular 1-spaces"))
        }
        (GroupFamily::SL, 4, ClassicalLabel::Simple { kind, m }) if kind == "Sp" && *m == 4 => {
            Some((so(6, 1, Flavor::Nondeg), "SO_6 on non-degenerate 1-spaces"))
        }
        (GroupFamily::Sp, 4, ClassicalLabel::Wreath { kind, m: 2, t: 2 }) if kind == "Sp" => {
            if p == 2 {
                Some((so(5, 1, Flavor::NonsingularOneSpace), "SO_5 on non-singular 1-spaces"))
            } else {
                Some((so(5, 1, Flavor::Nondeg), "SO_5 on non-degenerate 1-spaces"))
            }
        }
        _ => None,
    };
    Ok(r)
}

pub(crate) fn at(spec: &ActionSpec, label: &str, p: u32) -> Result<BaseTriple, FormulaError> {
    if spec.family.is_classical() {
        classical(spec, label, p)
    } else {
        exceptional(spec, label, p)
    }
}

fn classical(spec: &ActionSpec, label: &str, p: u32) -> Result<BaseTriple, FormulaError> {
    let n = spec.classical_n()?;
    if spec.family == GroupFamily::SL && n == 2 {
        if matches!(parse_classical(label, n), Some(ClassicalLabel::Wreath { ref kind, m: 1, t: 2 }) if kind == "GL") {
            let mut t = BaseTriple::points(2, 2, 3, "SL_2, H of type GL_1 wr S_2");
            t.pair_stabilizer_order = Some(2);
            return Ok(t);
        }
    } else {
        subspace::validate_classical_n(spec.family, n)?;
    }
    if let Some((eq, desc)) = equivalent(spec, label, p)? {
        let (d, flavor) = match eq.subgroup {
            super::SubgroupSpec::Subspace { d, flavor } => (d, flavor),
            _ => unreachable!(),
        };
        let mut t = subspace::at(eq.family, eq.n.expect("classical"), d, flavor, p)?;
        t.case_tag = format!("equivalent to {desc}: {}", t.case_tag);
        t.subspace_equivalent = Some(desc.to_string());
        return Ok(t);
    }
    let parsed = parse_classical(label, n).ok_or_else(|| unknown(spec, label))?;
    let two = || BaseTriple::all(2, "classical non-subspace, generic case (2)");
    match (spec.family, &parsed) {
        (_, ClassicalLabel::Irreducible(_)) => Ok(two()),
        (_, ClassicalLabel::Tensor { left, right }) => {
            if left.1 * right.1 != n || left.1 < 2 || right.1 < 2 {
                return Err(invalid(format!("tensor factors of {label} do not multiply to n = {n}")));
            }
            Ok(two())
        }
        (GroupFamily::SL, ClassicalLabel::Wreath { kind, m, t }) if kind == "GL" => {
            if m * t != n || *t < 2 {
                return Err(invalid(format!("{label}: block structure does not match n = {n}")));
            }
            if *t == 2 && n >= 4 {
                Ok(BaseTriple::all(3, "SL_n, H of type GL_{n/2} wr S_2, n >= 4"))
            } else {
                Ok(two())
            }
        }
        (GroupFamily::SL, ClassicalLabel::Simple { kind, m }) if kind == "Sp" && *m == n => {
            if n % 2 == 1 {
                return Err(invalid("Sp_n needs n even"));
            }
            match n {
                6 => Ok(BaseTriple::all(4, "SL_n, H of type Sp_n, n = 6")),
                _ => Ok(BaseTriple::all(3, "SL_n, H of type Sp_n, n >= 8")),
            }
        }
        (GroupFamily::SL, ClassicalLabel::Simple { kind, m }) if kind == "SO" && *m == n => {
            if p == 2 {
                return Err(incompatible("SO_n < SL_n is not maximal when p = 2"));
            }
            Ok(BaseTriple::points(2, 2, 3, "SL_n, H of type SO_n, p != 2"))
        }
        (GroupFamily::Sp, ClassicalLabel::Wreath { kind, m, t }) if kind == "Sp" => {
            if m * t != n || *t < 2 || m % 2 == 1 {
                return Err(invalid(format!("{label}: block structure does not match n = {n}")));
            }
            if *t == 2 {
                Ok(BaseTriple::all(3, "Sp_n, H of type Sp_{n/2} wr S_2, n >= 8"))
            } else if *t == 3 && n == 6 {
                Ok(BaseTriple::all(3, "Sp_6, H of type Sp_2 wr S_3"))
            } else {
                Ok(two())
            }
        }
        (GroupFamily::Sp, ClassicalLabel::Simple { kind, m }) if kind == "GL" && 2 * m == n => {
            if p == 2 {
                return Err(incompatible("GL_{n/2} < Sp_n is not maximal when p = 2"));
            }
            Ok(BaseTriple::points(2, 2, 3, "Sp_n, H of type GL_{n/2}, p != 2"))
        }
        (GroupFamily::Sp, ClassicalLabel::Simple { kind, m }) if kind == "O" && *m == n => {
            Err(incompatible("O_n < Sp_n arises only when p = 2"))
        }
        (GroupFamily::Sp, ClassicalLabel::G2) => {
            if n != 6 {
                return Err(invalid("G_2 < Sp_n requires n = 6"));
            }
            if p != 2 {
                return Err(incompatible("G_2 < Sp_6 is maximal only when p = 2"));
            }
            Ok(BaseTriple::all(4, "Sp_6, H = G_2, p = 2"))
        }
        (GroupFamily::SO, ClassicalLabel::Wreath { kind, m, t }) if kind == "O" => {
            if m * t != n || *t < 2 {
                return Err(invalid(format!("{label}: block structure does not match n = {n}")));
            }
            if *t > 2 {
                return Ok(two());
            }
            if p != 2 {
                Ok(BaseTriple::points(2, 2, 3, "SO_n, H of type O_{n/2} wr S_2, p != 2"))
            } else if n % 4 == 0 && n >= 8 {
                Ok(BaseTriple::intervals(
                    Interval::point(2),
                    Interval::new(2, 3),
                    Interval::point(3),
                    "SO_n, H of type O_{n/2} wr S_2, p = 2, n = 0 mod 4",
                ))
            } else {
                Err(incompatible("O_{n/2} wr S_2 with n/2 odd is not maximal when p = 2"))
            }
        }
        (GroupFamily::SO, ClassicalLabel::Simple { kind, m }) if kind == "GL" && 2 * m == n => {
            if n >= 10 {
                Ok(BaseTriple::all(3, "SO_n, H of type GL_{n/2}, n >= 10"))
            } else {
                Err(invalid(format!("GL_{{n/2}} < SO_{n} is not a maximal non-subspace subgroup")))
            }
        }
        (GroupFamily::SO, ClassicalLabel::G2) => {
            if n != 7 {
                return Err(invalid("G_2 < SO_n requires n = 7"));
            }
            if p == 2 {
                return Err(incompatible("SO_7 requires p != 2"));
            }
            Ok(BaseTriple::all(4, "SO_7, H = G_2, p != 2"))
        }
        (GroupFamily::SO, ClassicalLabel::Simple { kind, m }) if n == 8 && ((kind == "SO" && *m == 7) || (kind == "Sp" && *m == 6)) => {
            Err(incompatible(format!("{label} < SO_8 is irreducible and maximal only for {}", if kind == "SO" { "p != 2" } else { "p = 2" })))
        }
        _ => Err(unknown(spec, label)),
    }
}

fn exceptional(spec: &ActionSpec, label: &str, p: u32) -> Result<BaseTriple, FormulaError> {
    let g = spec.family.exceptional_type().expect("exceptional family");
    let (row, _desc) = lookup_maximal(g, label).map_err(|_| unknown(spec, label))?;
    if !row.condition.admits(p) {
        return Err(incompatible(format!("{} < {g} requires {}", row.label, row.condition.describe())));
    }
    let key = canonical_label(label)?;
    let name = format!("{g}, H = N(X) with X = {}", row.label);
    if g.to_string() == "F4" && key == "A1C3" && p == 2 {
        return Err(incompatible("A1C3 < F4 is treated as requiring p != 2"));
    }
    let table = super::tables::table_e_value(g, &key, p);
    if let Some(b) = table {
        return Ok(BaseTriple::all(b, format!("{name}, listed value {b}")));
    }
    let clause_iii = [("E8", "D8"), ("E7", "A7"), ("E6", "C4"), ("F4", "A1C3"), ("G2", "A1A~1")];
    let clause_iv = [("E7", "A7"), ("E6", "A1A5"), ("G2", "A1A~1")];
    let gs = g.to_string();
    if p != 2 && clause_iii.iter().any(|(a, b)| *a == gs && *b == key) {
        return Ok(BaseTriple::points(2, 2, 3, format!("{name}, p != 2 (2, 2, 3)")));
    }
    if p == 2 && clause_iv.iter().any(|(a, b)| *a == gs && *b == key) {
        return Ok(BaseTriple::intervals(
            Interval::point(2),
            Interval::new(2, 3),
            Interval::new(2, 3),
            format!("{name}, p = 2 (b0 = 2 <= b <= b1 <= 3)"),
        ));
    }
    let mut t = BaseTriple::all(2, format!("{name}, generic case (2)"));
    if row.condition != CharCondition::Any {
        t.notes.push(format!("maximal only for {}", row.condition.describe()));
    }
    Ok(t)
}

/// The characteristic 2 predicate excludes four pairs; returns why when
/// `spec` is one of them.
pub(crate) fn p2_excluded(spec: &ActionSpec) -> Result<Option<String>, FormulaError> {
    let label = match &spec.subgroup {
        super::SubgroupSpec::Nonsubspace { label } => label,
        _ => return Ok(None),
    };
    if spec.family == GroupFamily::SO {
        let n = spec.classical_n()?;
        if n % 4 == 0 && is_label(label, n, "Owr", n / 2, 2) {
            return Ok(Some(format!("(SO_{n}, O_{{n/2}} wr S_2) with n/2 even")));
        }
        return Ok(None);
    }
    if let Some(g) = spec.family.exceptional_type() {
        let key = canonical_label(label).unwrap_or_default();
        let gs = g.to_string();
        for (a, b) in [("E7", "A7"), ("E6", "A1A5"), ("G2", "A1A~1")] {
            if a == gs && b == key {
                return Ok(Some(format!("({a}, {b})")));
            }
        }
    }
    Ok(None)
}
