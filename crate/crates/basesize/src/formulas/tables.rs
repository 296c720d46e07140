//! Tabulated values: base sizes for exceptional parabolic actions, the
//! non-parabolic exceptional values above 2, the classical non-subspace
//! values above 2, and the dimensions `dim G/P_i`.

use super::FormulaError;
use crate::rootsys::{build_root_system, exceptional_types, parabolic_quotient_dim, ParabolicDescriptor, RootSysError, SimpleType};
use serde::Serialize;

/// An entry `c` (with optional asterisk) for `(G, P_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EpEntry {
    pub c: u32,
    pub asterisk: bool,
}

const EP: &[(&str, &[(u32, bool)])] = &[
    ("E8", &[(4, false), (3, false), (3, false), (3, false), (3, false), (3, false), (4, false), (5, false)]),
    ("E7", &[(5, false), (4, false), (4, false), (3, false), (3, false), (4, false), (6, false)]),
    ("E6", &[(6, false), (5, false), (4, false), (4, true), (4, false), (6, false)]),
    ("F4", &[(5, true), (4, true), (4, true), (5, true)]),
    ("G2", &[(4, true), (4, true)]),
];

/// The tabulated `c` for `(g, P_i)`.
pub fn parabolic_value(g: SimpleType, i: usize) -> Result<EpEntry, FormulaError> {
    let name = g.to_string();
    let row = EP
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| FormulaError::NotExceptional(name.clone()))?;
    if i == 0 || i > row.1.len() {
        return Err(FormulaError::RootSys(RootSysError::InvalidNode { node: i, rank: row.1.len() }));
    }
    let (c, asterisk) = row.1[i - 1];
    Ok(EpEntry { c, asterisk })
}

/// Rows `(G, H^0, condition, b)` of the exceptional non-parabolic values
/// above 2. Labels are canonical (torus first, factors sorted).
pub const TABLE_E: &[(&str, &str, &str, u32)] = &[
    ("E8", "A1E7", "", 3),
    ("E7", "A1D6", "", 3),
    ("E7", "T1E6", "", 3),
    ("E6", "F4", "", 4),
    ("E6", "T1D5", "", 3),
    ("E6", "A1A5", "p != 2", 3),
    ("F4", "B4", "", 4),
    ("F4", "C4", "p = 2", 4),
    ("F4", "D4", "", 3),
    ("F4", "D~4", "p = 2", 3),
    ("G2", "A2", "", 3),
    ("G2", "A~2", "p = 3", 3),
];

/// The display form of the labels in [`TABLE_E`], matching the source
/// table's orientation.
const TABLE_E_DISPLAY: &[&str] = &["A1E7", "A1D6", "T1E6", "F4", "D5T1", "A1A5", "B4", "C4", "D4", "D~4", "A2", "A~2"];

fn condition_admits(cond: &str, p: u32) -> bool {
    match cond {
        "" => true,
        "p != 2" => p != 2,
        "p = 2" => p == 2,
        "p = 3" => p == 3,
        _ => false,
    }
}

/// The listed value for `(g, canonical label)` at characteristic `p`.
pub fn table_e_value(g: SimpleType, key: &str, p: u32) -> Option<u32> {
    let gs = g.to_string();
    TABLE_E
        .iter()
        .find(|(a, b, c, _)| *a == gs && *b == key && condition_admits(c, p))
        .map(|r| r.3)
}

/// A reproduced table with named columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for r in &self.rows {
            let cells: Vec<String> = r
                .iter()
                .map(|c| if c.contains(',') || c.contains('"') { format!("\"{}\"", c.replace('"', "\"\"")) } else { c.clone() })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let objs: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| {
                self.columns
                    .iter()
                    .zip(r)
                    .map(|(k, v)| {
                        let val = match v.parse::<u64>() {
                            Ok(x) => serde_json::Value::from(x),
                            Err(_) => match v.as_str() {
                                "true" => serde_json::Value::Bool(true),
                                "false" => serde_json::Value::Bool(false),
                                _ => serde_json::Value::String(v.clone()),
                            },
                        };
                        (k.clone(), val)
                    })
                    .collect()
            })
            .collect();
        let doc = serde_json::json!({ "table": self.name, "columns": self.columns, "rows": objs });
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }
}

/// `dim G/P_i` for every exceptional group and node, computed from roots.
pub fn table_parab() -> Table {
    let mut rows = Vec::new();
    for g in exceptional_types() {
        let rs = build_root_system(g.family, g.rank).expect("valid exceptional type");
        for i in 1..=g.rank {
            let p = ParabolicDescriptor::new(rs.clone(), i).expect("valid node");
            rows.push(vec![g.to_string(), format!("P{i}"), parabolic_quotient_dim(&p).to_string()]);
        }
    }
    Table { name: "parab".into(), columns: vec!["group".into(), "node".into(), "dim".into()], rows }
}

/// The parabolic base-size table with asterisks.
pub fn table_ep() -> Table {
    let mut rows = Vec::new();
    for (g, entries) in EP {
        for (i, (c, star)) in entries.iter().enumerate() {
            rows.push(vec![
                g.to_string(),
                format!("P{}", i + 1),
                c.to_string(),
                star.to_string(),
                if *star { format!("{c}*") } else { c.to_string() },
            ]);
        }
    }
    Table {
        name: "ep".into(),
        columns: vec!["group".into(), "node".into(), "c".into(), "asterisk".into(), "entry".into()],
        rows,
    }
}

/// Classical non-subspace values above 2.
pub const TABLE_C: &[(&str, &str, &str, u32)] = &[
    ("SL_n", "GL_{n/2} wr S_2", "n >= 4", 3),
    ("SL_n", "Sp_n", "n = 6", 4),
    ("SL_n", "Sp_n", "n >= 8", 3),
    ("Sp_n", "Sp_{n/2} wr S_2", "n >= 8", 3),
    ("Sp_n", "Sp_{n/3} wr S_3", "n = 6", 3),
    ("Sp_n", "G_2", "(n,p) = (6,2)", 4),
    ("SO_n", "GL_{n/2}", "n >= 10", 3),
    ("SO_n", "G_2", "n = 7, p != 2", 4),
];

pub fn table_c() -> Table {
    let rows = TABLE_C
        .iter()
        .map(|(g, h, c, b)| vec![g.to_string(), h.to_string(), c.to_string(), b.to_string()])
        .collect();
    Table {
        name: "c".into(),
        columns: vec!["group".into(), "subgroup".into(), "conditions".into(), "b".into()],
        rows,
    }
}

pub fn table_e() -> Table {
    let rows = TABLE_E
        .iter()
        .zip(TABLE_E_DISPLAY)
        .map(|((g, _, c, b), disp)| vec![g.to_string(), disp.to_string(), c.to_string(), b.to_string()])
        .collect();
    Table {
        name: "e".into(),
        columns: vec!["group".into(), "subgroup".into(), "conditions".into(), "b".into()],
        rows,
    }
}

/// Looks up a table by its emit name (`parab`, `ep`, `c`, `e`).
pub fn table_by_name(name: &str) -> Option<Table> {
    match name {
        "parab" => Some(table_parab()),
        "ep" => Some(table_ep()),
        "c" => Some(table_c()),
        "e" => Some(table_e()),
        _ => None,
    }
}
