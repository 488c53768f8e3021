//! Certificate tables: one row per shadowing system with its weights and
//! the exact minimum they give.
//!
//! CSV layout, header included:
//!
//! ```text
//! j_3,...,j_V,c_2,...,c_V,min_f
//! 1,1,94,46,97,1560613/17904
//! ```
//!
//! Rows must list every system exactly once, in canonical order.
//! Published tables for `V = 4..7` are bundled with the crate; loading one
//! checks its SHA-256 against a pinned value.

use std::path::Path;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::expansion::{system_count, ExpansionError, ShadowSystem};
use crate::prover::{verify_certificate, ProverError};
use crate::ratcore::Rational;

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Parse { line: u64, msg: String },
    #[error("line {line}: {msg}")]
    Range { line: u64, msg: String },
    #[error("expected {expected} rows for V = {v}, found {found}")]
    RowCount { v: usize, expected: usize, found: usize },
    #[error("no bundled table for V = {0} (available: 4, 5, 6, 7)")]
    NoBundled(usize),
    #[error("checksum mismatch for {name}: expected {expected}, found {found}")]
    Checksum { name: String, expected: String, found: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Prover(#[from] ProverError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub system: ShadowSystem,
    /// `c_2..c_V`.
    pub coeffs: Vec<u64>,
    pub min_f: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateTable {
    pub v: usize,
    pub rows: Vec<TableRow>,
}

fn header_for(v: usize) -> Vec<String> {
    (3..=v)
        .map(|i| format!("j_{i}"))
        .chain((2..=v).map(|i| format!("c_{i}")))
        .chain(std::iter::once("min_f".to_string()))
        .collect()
}

impl CertificateTable {
    pub fn parse_str(text: &str) -> Result<Self, TableError> {
        let mut reader = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(text.as_bytes());
        let header = reader.headers().map_err(|e| TableError::Parse { line: 1, msg: e.to_string() })?.clone();
        let j_cols = header.iter().filter(|h| h.starts_with("j_")).count();
        let v = j_cols + 2;
        let expected = header_for(v);
        if v < 4 || header.iter().ne(expected.iter().map(String::as_str)) {
            return Err(TableError::Parse {
                line: 1,
                msg: format!("bad header {:?}; expected \"{}\"", header.iter().collect::<Vec<_>>(), expected.join(",")),
            });
        }

        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record
                .map_err(|e| TableError::Parse { line: e.position().map_or(0, |p| p.line()), msg: e.to_string() })?;
            let line = record.position().map_or(0, |p| p.line());
            let parse_err = |msg: String| TableError::Parse { line, msg };
            let ints = |range: std::ops::Range<usize>| -> Result<Vec<u64>, TableError> {
                range
                    .map(|c| {
                        record[c].parse::<u64>().map_err(|_| {
                            parse_err(format!("column {}: {:?} is not a non-negative integer", expected[c], &record[c]))
                        })
                    })
                    .collect()
            };
            let tail: Vec<usize> = ints(0..v - 2)?.into_iter().map(|j| j as usize).collect();
            let coeffs = ints(v - 2..2 * v - 3)?;
            let min_f: Rational = record[2 * v - 3].parse().map_err(|e| parse_err(format!("min_f: {e}")))?;
            let system = ShadowSystem::from_tail(v, &tail).map_err(|e| match e {
                ExpansionError::ShadowerOutOfRange { .. } => TableError::Range { line, msg: e.to_string() },
                other => parse_err(other.to_string()),
            })?;
            if let Some(pos) = coeffs.iter().position(|&c| c == 0) {
                return Err(TableError::Range { line, msg: format!("c_{} must be positive", pos + 2) });
            }
            let expected_id = rows.len();
            if system.id() != expected_id {
                let msg = if rows.iter().any(|r: &TableRow| r.system == system) {
                    format!("duplicate system {system}")
                } else {
                    format!(
                        "system {system} out of order or system {} missing",
                        ShadowSystem::from_id(v, expected_id).map_or("?".into(), |s| s.to_string())
                    )
                };
                return Err(TableError::Parse { line, msg });
            }
            rows.push(TableRow { system, coeffs, min_f });
        }
        let expected_rows = system_count(v);
        if rows.len() != expected_rows {
            return Err(TableError::RowCount { v, expected: expected_rows, found: rows.len() });
        }
        Ok(CertificateTable { v, rows })
    }

    pub fn parse_file(path: &Path) -> Result<Self, TableError> {
        let text = read_text(path)?;
        CertificateTable::parse_str(&text)
    }

    pub fn to_csv(&self) -> String {
        let mut out = header_for(self.v).join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row
                .system
                .tail()
                .iter()
                .map(ToString::to_string)
                .chain(row.coeffs.iter().map(ToString::to_string))
                .chain(std::iter::once(row.min_f.to_string()))
                .collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// `(system, weights)` pairs, for building a proof report from the table.
    pub fn certificates(&self) -> Vec<(ShadowSystem, Vec<u64>)> {
        self.rows.iter().map(|r| (r.system.clone(), r.coeffs.clone())).collect()
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String, TableError> {
    std::fs::read_to_string(path).map_err(|source| TableError::Io { path: path.display().to_string(), source })
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A published table compiled into the crate.
#[derive(Clone, Copy, Debug)]
pub struct BundledDataset {
    pub v: usize,
    pub name: &'static str,
    pub sha256: &'static str,
    pub text: &'static str,
}

pub const BUNDLED: [BundledDataset; 4] = [
    BundledDataset {
        v: 4,
        name: "appendix_v4.csv",
        sha256: "773c1122021a46de045740da4bbb9343318d1652018ccdb13c828ee0ca505517",
        text: include_str!("../data/appendix_v4.csv"),
    },
    BundledDataset {
        v: 5,
        name: "appendix_v5.csv",
        sha256: "5d5bc25ea936c2bb45aa8d4468415e229aabaaa33b739f1341fbde618ea7a2a7",
        text: include_str!("../data/appendix_v5.csv"),
    },
    BundledDataset {
        v: 6,
        name: "appendix_v6.csv",
        sha256: "63ea8a6dc33220e061314ca2f780653c3f1640f96e5aa0890c49e1f37f3a2f26",
        text: include_str!("../data/appendix_v6.csv"),
    },
    BundledDataset {
        v: 7,
        name: "appendix_v7.csv",
        sha256: "e5a3a99a77f40f83c629c7c43372d3487fcfe07ed6df4b2e4c8d2d625c9feb19",
        text: include_str!("../data/appendix_v7.csv"),
    },
];

impl BundledDataset {
    pub fn get(v: usize) -> Result<&'static BundledDataset, TableError> {
        BUNDLED.iter().find(|d| d.v == v).ok_or(TableError::NoBundled(v))
    }

    /// Name of the bundled dataset with this checksum, if any.
    pub fn matching(sha256: &str) -> Option<&'static str> {
        BUNDLED.iter().find(|d| d.sha256 == sha256).map(|d| d.name)
    }

    pub fn load(&self) -> Result<CertificateTable, TableError> {
        check_sha256(self.name, self.text.as_bytes(), self.sha256)?;
        CertificateTable::parse_str(self.text)
    }
}

pub fn check_sha256(name: &str, bytes: &[u8], expected: &str) -> Result<(), TableError> {
    let found = sha256_hex(bytes);
    if !found.eq_ignore_ascii_case(expected) {
        return Err(TableError::Checksum { name: name.to_string(), expected: expected.to_string(), found });
    }
    Ok(())
}

/// Bundled table for `v`, checksum-verified.
pub fn bundled_table(v: usize) -> Result<CertificateTable, TableError> {
    BundledDataset::get(v)?.load()
}

/// Recomputation of one table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub row: usize,
    pub system: ShadowSystem,
    pub coeffs: Vec<u64>,
    pub expected: Rational,
    pub computed: Option<Rational>,
    pub hessian_pd: bool,
    pub positive: bool,
}

impl RowCheck {
    pub fn ok(&self) -> bool {
        self.hessian_pd && self.positive && self.computed.as_ref() == Some(&self.expected)
    }
}

/// Recomputes every row exactly: definiteness, exact minimum, positivity.
pub fn verify_table(table: &CertificateTable, jobs: usize) -> Result<Vec<RowCheck>, TableError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| ProverError::Pool(e.to_string()))?;
    let checks: Result<Vec<RowCheck>, ProverError> = pool.install(|| {
        table
            .rows
            .par_iter()
            .enumerate()
            .map(|(idx, row)| {
                let r = verify_certificate(&row.system, &row.coeffs)?;
                Ok(RowCheck {
                    row: idx + 1,
                    system: row.system.clone(),
                    coeffs: row.coeffs.clone(),
                    expected: row.min_f.clone(),
                    computed: r.min_value,
                    hessian_pd: r.hessian_pd,
                    positive: r.positive,
                })
            })
            .collect()
    });
    Ok(checks?)
}
