//! The Niemeier catalog and the isotropic-subspace table, embedded at build time.

use std::path::Path;

use griess_core::niemeier::{NiemeierEntry, Table2Edge, Table2Row};
use griess_core::rootsys::parse_components;
use griess_core::Rational;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::formats::FormatError;

const NIEMEIER_JSON: &str = include_str!("../data/niemeier.json");
const TABLE2_JSON: &str = include_str!("../data/table2.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogFile {
    pub entries: Vec<CatalogRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub name: String,
    /// Empty for the Leech lattice.
    pub components: String,
    pub mass: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table2File {
    pub source: String,
    #[serde(default)]
    pub note: String,
    pub rows: Vec<Table2Record>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table2Record {
    pub symbol: String,
    pub dim: usize,
    #[serde(default)]
    pub pointwise: String,
    #[serde(default)]
    pub quotient: String,
    pub stabilizer_order: Option<String>,
    pub edges: Vec<Table2EdgeRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table2EdgeRecord {
    pub extensions: u64,
    pub containments: u64,
    pub child: String,
}

pub fn parse_catalog(json: &str) -> Result<Vec<NiemeierEntry>, FormatError> {
    let file: CatalogFile = serde_json::from_str(json)?;
    file.entries
        .into_iter()
        .map(|r| {
            let components = if r.components.trim().is_empty() {
                Vec::new()
            } else {
                parse_components(&r.components)?
            };
            let mass: Rational = r.mass.parse().map_err(|_| FormatError::Rational(r.mass.clone()))?;
            Ok(NiemeierEntry::new(r.name, components, mass)?)
        })
        .collect()
}

/// The 24 catalog entries, Leech first.
pub fn catalog() -> Vec<NiemeierEntry> {
    parse_catalog(NIEMEIER_JSON).expect("embedded catalog is valid")
}

/// Looks an entry up by name (`A5^4D4`) or by root system (`A5^4+D4`).
pub fn find_entry(name: &str) -> Option<NiemeierEntry> {
    let all = catalog();
    if let Some(e) = all.iter().find(|e| e.name().eq_ignore_ascii_case(name)) {
        return Some(e.clone());
    }
    let mut wanted = parse_components(name).ok()?;
    wanted.sort();
    all.into_iter().find(|e| {
        let mut c = e.components().to_vec();
        c.sort();
        c == wanted
    })
}

pub fn parse_table2(json: &str) -> Result<(String, Vec<Table2Row>), FormatError> {
    let file: Table2File = serde_json::from_str(json)?;
    let rows = file
        .rows
        .into_iter()
        .map(|r| {
            let stabilizer_order = match r.stabilizer_order {
                None => None,
                Some(s) => Some(s.parse::<BigUint>().map_err(|_| FormatError::Integer(s.clone()))?),
            };
            let edges = r
                .edges
                .into_iter()
                .map(|e| Table2Edge { extensions: e.extensions, containments: e.containments, child: e.child })
                .collect();
            Ok(Table2Row { symbol: r.symbol, dim: r.dim, stabilizer_order, edges })
        })
        .collect::<Result<_, FormatError>>()?;
    Ok((file.source, rows))
}

/// Table rows with their stabilizer orders, and the provenance marker of the orders.
pub fn table2() -> (String, Vec<Table2Row>) {
    parse_table2(TABLE2_JSON).expect("embedded table is valid")
}

pub fn load_table2(path: &Path) -> Result<(String, Vec<Table2Row>), FormatError> {
    parse_table2(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_24_entries() {
        let c = catalog();
        assert_eq!(c.len(), 24);
        assert!(c[0].is_leech());
        assert_eq!(c.iter().filter(|e| !e.is_leech()).count(), 23);
    }

    #[test]
    fn table2_marked_external() {
        let (source, rows) = table2();
        assert_eq!(source, "external: standard group orders");
        assert!(rows.iter().all(|r| r.stabilizer_order.is_some()));
    }

    #[test]
    fn lookup_by_name_or_system() {
        assert_eq!(find_entry("A5^4D4").unwrap().k(), 5);
        assert_eq!(find_entry("D4+A5^4").unwrap().name(), "A5^4D4");
        assert!(find_entry("A3").is_none());
    }
}
