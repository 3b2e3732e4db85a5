//! Golden key-avoidance counts shipped with the crate.
//!
//! The fixture file is tab separated: table number, excluded pattern sets
//! (`a & b`, alternatives joined by ` or `), comma separated counts for
//! `n = 1, 2, …`, and a free-text label.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::patterns::PatternSet;

pub const TABLES: &str = include_str!("../fixtures/tables.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub table: u8,
    /// The excluded-pattern column as written in the file.
    pub excluded: String,
    /// Pattern sets that share this row.
    pub sets: Vec<PatternSet>,
    /// Counts for `n = 1 ..= counts.len()`.
    pub counts: Vec<u64>,
    pub label: String,
}

impl FixtureRow {
    pub fn expected(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.counts.get(i)).copied()
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != 4 {
            return Err(parse_err(line, 1, format!("expected 4 fields, found {}", fields.len())));
        }
        let table = fields[0]
            .trim()
            .parse()
            .map_err(|_| parse_err(line, 1, "bad table number"))?;
        let sets = fields[1]
            .split(" or ")
            .map(|alt| alt.replace(' ', "").parse::<PatternSet>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_err(line, 2, e.to_string()))?;
        let counts = fields[2]
            .split(',')
            .map(str::trim)
            .filter(|t| *t != "...")
            .map(|t| t.parse::<u64>().map_err(|_| parse_err(line, 3, format!("bad count {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        rows.push(FixtureRow {
            table,
            excluded: fields[1].to_string(),
            sets,
            counts,
            label: fields[3].to_string(),
        });
    }
    Ok(rows)
}

/// The parsed shipped fixtures.
pub fn golden_rows() -> &'static [FixtureRow] {
    static ROWS: OnceLock<Vec<FixtureRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_fixtures(TABLES).expect("shipped fixture file parses"))
}

/// Rows of one table.
pub fn table(number: u8) -> Vec<&'static FixtureRow> {
    golden_rows().iter().filter(|r| r.table == number).collect()
}

/// The fixture row a pattern set belongs to, if any.
pub fn row_for(set: &PatternSet) -> Option<&'static FixtureRow> {
    golden_rows().iter().find(|r| r.sets.contains(set))
}

/// Expected key-avoidance count for `set` at size `n`, if a fixture has it.
pub fn expected_count(set: &PatternSet, n: usize) -> Option<u64> {
    row_for(set).and_then(|r| r.expected(n))
}
