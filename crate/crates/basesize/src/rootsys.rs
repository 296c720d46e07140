//! Root systems of simple types, Levi subsystems of maximal parabolics and
//! dimension arithmetic for reductive subgroups given by subsystem labels.
//!
//! Roots are integer coefficient vectors over the simple roots, numbered as in
//! Bourbaki:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n          (n short)
//! C_n  1 - 2 - ... - (n-1) <= n          (n long)
//! D_n  1 - 2 - ... - (n-2) - (n-1)
//!                      \
//!                       n
//! E_n  1 - 3 - 4 - 5 - 6 - 7 - 8         (node 2 attached to node 4)
//!              |
//!              2
//! F_4  1 - 2 => 3 - 4                    (1, 2 long)
//! G_2  1 <= 2                            (1 short, 2 long)
//! ```

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors raised while building root systems or resolving subgroup labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error("invalid simple type {family}{rank}")]
    InvalidType { family: Family, rank: usize },
    #[error("node {node} is outside 1..={rank}")]
    InvalidNode { node: usize, rank: usize },
    #[error("cannot resolve subgroup label `{0}`")]
    UnresolvableLabel(String),
    #[error("cannot parse simple type `{0}`")]
    UnparsableType(String),
}

/// Cartan–Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        match c {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// A validated simple type such as `E8` or `B4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    /// Validates `(family, rank)` against the classification.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(RootSysError::InvalidType { family, rank })
        }
    }

    /// Number of positive roots, by the closed formulas of the classification.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Dimension of the simple group of this type.
    pub fn dim(&self) -> usize {
        2 * self.positive_root_count() + self.rank
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootSysError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let mut chars = t.chars();
        let fam = chars
            .next()
            .and_then(Family::from_char)
            .ok_or_else(|| RootSysError::UnparsableType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| RootSysError::UnparsableType(s.to_string()))?;
        SimpleType::new(fam, rank)
    }
}

/// A simple root system with its positive roots and Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// Positive roots as coefficient vectors, sorted lexicographically.
    pub positive_roots: Vec<Vec<i32>>,
    /// `cartan[i][j] = 2 (a_i, a_j) / (a_i, a_i)`.
    pub cartan: Vec<Vec<i32>>,
    /// Symmetrised Gram matrix of the simple roots (short roots of a
    /// non-simply-laced type have squared length 2).
    gram: Vec<Vec<i32>>,
}

fn simple_gram(t: SimpleType) -> Vec<Vec<i32>> {
    let n = t.rank;
    let mut g = vec![vec![0i32; n]; n];
    let edge = |g: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match t.family {
        Family::A => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n {
                edge(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 1..n {
                g[i - 1][i - 1] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 1..n {
                edge(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 1..n {
                g[i - 1][i - 1] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                edge(&mut g, i, i + 1, -1);
            }
            edge(&mut g, n - 1, n, -2);
        }
        Family::D => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                edge(&mut g, i, i + 1, -1);
            }
            edge(&mut g, n - 2, n, -1);
        }
        Family::E => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            edge(&mut g, 1, 3, -1);
            edge(&mut g, 2, 4, -1);
            for i in 3..n {
                edge(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            edge(&mut g, 1, 2, -2);
            edge(&mut g, 2, 3, -2);
            edge(&mut g, 3, 4, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            edge(&mut g, 1, 2, -3);
        }
    }
    g
}

impl RootSystem {
    /// Builds the root system of type `(family, rank)` by the root-string
    /// closure algorithm.
    pub fn build(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let t = SimpleType::new(family, rank)?;
        let gram = simple_gram(t);
        let n = rank;
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        let mut all: HashSet<Vec<i32>> = HashSet::new();
        let mut layer: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        all.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next: Vec<Vec<i32>> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // <beta, a_i^vee>
                    let pairing: i32 =
                        (0..n).map(|j| beta[j] * cartan[i][j]).sum::<i32>();
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if all.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pairing;
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if all.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut positive_roots: Vec<Vec<i32>> = all.into_iter().collect();
        positive_roots.sort();
        Ok(RootSystem { family, rank, positive_roots, cartan, gram })
    }

    pub fn simple_type(&self) -> SimpleType {
        SimpleType { family: self.family, rank: self.rank }
    }

    /// Symmetric bilinear form on coefficient vectors.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        a.iter()
            .zip(&self.gram)
            .filter(|(ai, _)| **ai != 0)
            .map(|(ai, row)| ai * row.iter().zip(b).map(|(g, bj)| g * bj).sum::<i32>())
            .sum()
    }

    /// Squared length of the long roots.
    pub fn long_length(&self) -> i32 {
        (0..self.rank).map(|i| self.gram[i][i]).max().unwrap_or(2)
    }

    pub fn is_long(&self, root: &[i32]) -> bool {
        self.inner(root, root) == self.long_length()
    }

    /// The highest root (unique root of maximal height).
    pub fn highest_root(&self) -> &[i32] {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i32>())
            .expect("root systems are nonempty")
    }

    /// Dual Coxeter number `1 + sum_i m_i (a_i, a_i) / (theta, theta)`.
    pub fn dual_coxeter_number(&self) -> usize {
        let theta = self.highest_root();
        let tt = self.inner(theta, theta);
        let s: i32 = (0..self.rank)
            .map(|i| theta[i] * self.gram[i][i] / tt)
            .sum();
        (1 + s) as usize
    }

    /// Dimension of the class of long root elements, `2 h^vee - 2`.
    pub fn long_root_class_dim(&self) -> usize {
        2 * self.dual_coxeter_number() - 2
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Returns true when `v` or `-v` is a positive root.
    pub fn is_root(&self, v: &[i32]) -> bool {
        let neg: Vec<i32> = v.iter().map(|x| -x).collect();
        self.positive_roots.binary_search_by(|r| r.as_slice().cmp(v)).is_ok()
            || self.positive_roots.binary_search(&neg).is_ok()
    }
}

/// `dim G = 2 |Phi^+| + rank`.
pub fn dim_group(rs: &RootSystem) -> usize {
    2 * rs.num_positive_roots() + rs.rank
}

/// Builds a root system; alias kept for symmetry with the other constructors.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem, RootSysError> {
    RootSystem::build(family, rank)
}

/// The maximal parabolic `P_i` obtained by deleting node `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicDescriptor {
    pub ambient: RootSystem,
    pub deleted_node: usize,
}

impl ParabolicDescriptor {
    pub fn new(ambient: RootSystem, deleted_node: usize) -> Result<Self, RootSysError> {
        if deleted_node == 0 || deleted_node > ambient.rank {
            return Err(RootSysError::InvalidNode { node: deleted_node, rank: ambient.rank });
        }
        Ok(ParabolicDescriptor { ambient, deleted_node })
    }

    /// Positive roots of the Levi subsystem spanned by the remaining nodes.
    pub fn levi_positive_roots(&self) -> Vec<Vec<i32>> {
        restrict_to_levi(&self.ambient.positive_roots, self.deleted_node)
    }

    /// Dimension of the Levi factor `L_i`.
    pub fn levi_dim(&self) -> usize {
        2 * self.levi_positive_roots().len() + self.ambient.rank
    }

    /// Dimension of `P_i`.
    pub fn parabolic_dim(&self) -> usize {
        dim_group(&self.ambient) - parabolic_quotient_dim(self)
    }
}

/// Keeps only roots whose coefficient at `node` (1-based) vanishes.
pub fn restrict_to_levi(roots: &[Vec<i32>], node: usize) -> Vec<Vec<i32>> {
    roots.iter().filter(|r| r[node - 1] == 0).cloned().collect()
}

/// `dim G/P_i = |Phi^+| - |Phi^+(L_i)|`.
pub fn parabolic_quotient_dim(p: &ParabolicDescriptor) -> usize {
    p.ambient.num_positive_roots() - p.levi_positive_roots().len()
}

/// One simple factor of a reductive subgroup label, e.g. `G2^2` or `A~1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelFactor {
    pub family: Family,
    pub rank: usize,
    /// Marks the short-root (tilde) variant; it has the same dimension.
    pub short_root_variant: bool,
    pub multiplicity: usize,
}

/// A reductive subgroup given by a subsystem-style label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupDescriptor {
    pub label: String,
    pub factors: Vec<LabelFactor>,
    pub torus_rank: usize,
    pub rank: usize,
    pub dimension: usize,
    pub component_group_order: u64,
}

fn normalize_label(label: &str) -> String {
    let mut out = String::new();
    for ch in label.chars() {
        match ch {
            'Ã' => out.push_str("A~"),
            '\u{0303}' => out.push('~'),
            '²' => out.push_str("^2"),
            '³' => out.push_str("^3"),
            '⁴' => out.push_str("^4"),
            '⁷' => out.push_str("^7"),
            '⁸' => out.push_str("^8"),
            '₁' => out.push('1'),
            '₂' => out.push('2'),
            '₃' => out.push('3'),
            '₄' => out.push('4'),
            '₅' => out.push('5'),
            '₆' => out.push('6'),
            '₇' => out.push('7'),
            '₈' => out.push('8'),
            c if c.is_whitespace() || c == '_' || c == '{' || c == '}' => {}
            c => out.push(c),
        }
    }
    out
}

fn read_number(chars: &[char], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        None
    } else {
        chars[start..*pos].iter().collect::<String>().parse().ok()
    }
}

impl SubgroupDescriptor {
    /// Parses labels such as `A1E7`, `T1E6`, `A1G2^2`, `A2A~2`, `D~4`, `T8`.
    /// The component group order defaults to 1.
    pub fn parse(label: &str) -> Result<Self, RootSysError> {
        let err = || RootSysError::UnresolvableLabel(label.to_string());
        let norm = normalize_label(label);
        let chars: Vec<char> = norm.chars().collect();
        if chars.is_empty() {
            return Err(err());
        }
        let mut pos = 0;
        let mut factors = Vec::new();
        let mut torus_rank = 0;
        while pos < chars.len() {
            let c = chars[pos];
            pos += 1;
            let tilde_before_rank = pos < chars.len() && chars[pos] == '~';
            if tilde_before_rank {
                pos += 1;
            }
            let rank = read_number(&chars, &mut pos).ok_or_else(err)?;
            let tilde_after_rank = pos < chars.len() && chars[pos] == '~';
            if tilde_after_rank {
                pos += 1;
            }
            let mut mult = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                mult = read_number(&chars, &mut pos).ok_or_else(err)?;
            }
            if c == 'T' {
                if tilde_before_rank || tilde_after_rank {
                    return Err(err());
                }
                torus_rank += rank * mult;
                continue;
            }
            let family = Family::from_char(c).ok_or_else(err)?;
            SimpleType::new(family, rank).map_err(|_| err())?;
            factors.push(LabelFactor {
                family,
                rank,
                short_root_variant: tilde_before_rank || tilde_after_rank,
                multiplicity: mult,
            });
        }
        let mut rank = torus_rank;
        let mut dimension = torus_rank;
        for f in &factors {
            let t = SimpleType { family: f.family, rank: f.rank };
            rank += f.rank * f.multiplicity;
            dimension += t.dim() * f.multiplicity;
        }
        Ok(SubgroupDescriptor {
            label: label.to_string(),
            factors,
            torus_rank,
            rank,
            dimension,
            component_group_order: 1,
        })
    }

    /// Semisimple part dimension computed by actually building each factor's
    /// root system; agrees with `dimension` by construction of the types.
    pub fn dimension_from_roots(&self) -> usize {
        let mut d = self.torus_rank;
        for f in &self.factors {
            let rs = RootSystem::build(f.family, f.rank).expect("validated at parse");
            d += dim_group(&rs) * f.multiplicity;
        }
        d
    }
}

/// `dim` of a subgroup given by its label.
pub fn subgroup_dim(s: &SubgroupDescriptor) -> usize {
    s.dimension
}

/// Characteristic restriction attached to a table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharCondition {
    Any,
    NotTwo,
    Two,
    Three,
}

impl CharCondition {
    /// Whether characteristic `p` (0 for characteristic zero) satisfies it.
    pub fn admits(&self, p: u32) -> bool {
        match self {
            CharCondition::Any => true,
            CharCondition::NotTwo => p != 2,
            CharCondition::Two => p == 2,
            CharCondition::Three => p == 3,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            CharCondition::Any => "",
            CharCondition::NotTwo => "p != 2",
            CharCondition::Two => "p = 2",
            CharCondition::Three => "p = 3",
        }
    }
}

/// A row of the list of maximal non-parabolic subgroups `N_G(X)` of an
/// exceptional group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalSubgroupRow {
    pub group: String,
    pub label: &'static str,
    pub condition: CharCondition,
    pub component_group: &'static str,
    pub component_group_order: u64,
}

const MAX_ROWS: &[(&str, &str, CharCondition, &str, u64)] = &[
    ("E8", "A1", CharCondition::Any, "1", 1),
    ("E8", "B2", CharCondition::Any, "1", 1),
    ("E8", "A1A2", CharCondition::Any, "Z2", 2),
    ("E8", "A1G2^2", CharCondition::NotTwo, "Z2", 2),
    ("E8", "G2F4", CharCondition::Any, "1", 1),
    ("E8", "D8", CharCondition::Any, "1", 1),
    ("E8", "A1E7", CharCondition::Any, "1", 1),
    ("E8", "A8", CharCondition::Any, "Z2", 2),
    ("E8", "A2E6", CharCondition::Any, "Z2", 2),
    ("E8", "A4^2", CharCondition::Any, "Z4", 4),
    ("E8", "D4^2", CharCondition::Any, "Z2 x S3", 12),
    ("E8", "A2^4", CharCondition::Any, "GL2(3)", 48),
    ("E8", "A1^8", CharCondition::Any, "AGL2(3)", 432),
    ("E8", "T8", CharCondition::Any, "2.O8+(2)", 696_729_600),
    ("E7", "A1", CharCondition::Any, "1", 1),
    ("E7", "A2", CharCondition::Any, "Z2", 2),
    ("E7", "A1^2", CharCondition::Any, "1", 1),
    ("E7", "A1G2", CharCondition::Any, "1", 1),
    ("E7", "A1F4", CharCondition::Any, "1", 1),
    ("E7", "G2C3", CharCondition::Any, "1", 1),
    ("E7", "T1E6", CharCondition::Any, "Z2", 2),
    ("E7", "A1D6", CharCondition::Any, "1", 1),
    ("E7", "A7", CharCondition::Any, "Z2", 2),
    ("E7", "A2A5", CharCondition::Any, "Z2", 2),
    ("E7", "A1^3D4", CharCondition::Any, "S3", 6),
    ("E7", "A1^7", CharCondition::Any, "GL3(2)", 168),
    ("E7", "T7", CharCondition::Any, "Z2 x Sp6(2)", 2_903_040),
    ("E6", "A2", CharCondition::Any, "Z2", 2),
    ("E6", "G2", CharCondition::Any, "1", 1),
    ("E6", "C4", CharCondition::NotTwo, "1", 1),
    ("E6", "F4", CharCondition::Any, "1", 1),
    ("E6", "A2G2", CharCondition::Any, "Z2", 2),
    ("E6", "T1D5", CharCondition::Any, "1", 1),
    ("E6", "T2D4", CharCondition::Any, "S3", 6),
    ("E6", "A1A5", CharCondition::Any, "1", 1),
    ("E6", "A2^3", CharCondition::Any, "S3", 6),
    ("E6", "T6", CharCondition::Any, "O6-(2)", 51_840),
    ("F4", "A1", CharCondition::Any, "1", 1),
    ("F4", "G2", CharCondition::Any, "1", 1),
    ("F4", "A1G2", CharCondition::Any, "1", 1),
    ("F4", "A1C3", CharCondition::Any, "1", 1),
    ("F4", "B4", CharCondition::Any, "1", 1),
    ("F4", "C4", CharCondition::Two, "1", 1),
    ("F4", "D4", CharCondition::Any, "S3", 6),
    ("F4", "D~4", CharCondition::Two, "S3", 6),
    ("F4", "A2A~2", CharCondition::Any, "Z2", 2),
    ("G2", "A1", CharCondition::Any, "1", 1),
    ("G2", "A1A~1", CharCondition::Any, "1", 1),
    ("G2", "A2", CharCondition::Any, "Z2", 2),
    ("G2", "A~2", CharCondition::Three, "Z2", 2),
];

/// The maximal non-parabolic subgroups `N_G(X)` of the exceptional group `g`.
pub fn maximal_nonparabolic(g: SimpleType) -> Vec<MaximalSubgroupRow> {
    let name = g.to_string();
    MAX_ROWS
        .iter()
        .filter(|r| r.0 == name)
        .map(|r| MaximalSubgroupRow {
            group: name.clone(),
            label: r.1,
            condition: r.2,
            component_group: r.3,
            component_group_order: r.4,
        })
        .collect()
}

/// Canonical form of a label used for table lookup (`D̃4` and `D~4` agree,
/// as do `T1D5` and `D5T1`).
pub fn canonical_label(label: &str) -> Result<String, RootSysError> {
    let s = SubgroupDescriptor::parse(label)?;
    let mut parts: Vec<String> = Vec::new();
    for f in &s.factors {
        for _ in 0..f.multiplicity {
            parts.push(format!(
                "{}{}{}",
                f.family,
                if f.short_root_variant { "~" } else { "" },
                f.rank
            ));
        }
    }
    parts.sort();
    let mut out = String::new();
    if s.torus_rank > 0 {
        out.push_str(&format!("T{}", s.torus_rank));
    }
    for p in parts {
        out.push_str(&p);
    }
    Ok(out)
}

/// Looks up the table row for `label` in `g`, filling the component group
/// order into the descriptor.
pub fn lookup_maximal(g: SimpleType, label: &str) -> Result<(MaximalSubgroupRow, SubgroupDescriptor), RootSysError> {
    let key = canonical_label(label)?;
    for row in maximal_nonparabolic(g) {
        if canonical_label(row.label)? == key {
            let mut d = SubgroupDescriptor::parse(label)?;
            d.component_group_order = row.component_group_order;
            return Ok((row, d));
        }
    }
    Err(RootSysError::UnresolvableLabel(format!("{label} in {g}")))
}

/// The five exceptional types in the order used by the tables.
pub fn exceptional_types() -> [SimpleType; 5] {
    [
        SimpleType { family: Family::E, rank: 8 },
        SimpleType { family: Family::E, rank: 7 },
        SimpleType { family: Family::E, rank: 6 },
        SimpleType { family: Family::F, rank: 4 },
        SimpleType { family: Family::G, rank: 2 },
    ]
}
