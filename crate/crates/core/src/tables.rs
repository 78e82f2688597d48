// Copyright 2026 The chiral-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Bundled reference quantile tables and critical-value lookup.
//!
//! The tables cover `n = 3..=100`, `n = 110..=1000` in steps of 10 and
//! `n = 10000`, for the levels 0.90, 0.95, 0.98 and 0.99, under the
//! uniform `U(0,1)` and normal `N(0,1)` parent laws. Each row holds the
//! mean quantile and its Monte-Carlo standard deviation. The data files
//! ship in `data/` and are compiled in; their SHA-256 digests are pinned
//! below.

use std::fmt;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::format::{emit_table, parse_paper_text, TableFormat};
use crate::montecarlo::QuantileTableRow;
use crate::sampling::Law;

pub const TABULATED_LEVELS: [f64; 4] = [0.90, 0.95, 0.98, 0.99];
pub const MIN_TABULATED_N: usize = 3;
pub const MAX_TABULATED_N: usize = 10_000;

/// Rows from this size on must not increase in `n` at any level; the
/// 0.98 and 0.99 columns rise from `n = 3` to `n = 4`.
pub const CROSS_SIZE_CHECK_FROM: usize = 5;

pub const UNIFORM_TABLE_TEXT: &str = include_str!("../data/uniform.txt");
pub const NORMAL_TABLE_TEXT: &str = include_str!("../data/normal.txt");

pub const UNIFORM_TABLE_SHA256: &str =
    "6d0fa1e43a3dd2579474f06e4de4043c777943c8b90ecc1e89c783e371dbc2b3";
pub const NORMAL_TABLE_SHA256: &str =
    "47c0e3dbea3714f9d9fb452d5d2f7a55155a36364bbeef6f0513bb656fc8ad18";

pub fn table_text(law: Law) -> &'static str {
    match law {
        Law::Uniform => UNIFORM_TABLE_TEXT,
        Law::Normal => NORMAL_TABLE_TEXT,
    }
}

pub fn pinned_sha256(law: Law) -> &'static str {
    match law {
        Law::Uniform => UNIFORM_TABLE_SHA256,
        Law::Normal => NORMAL_TABLE_SHA256,
    }
}

/// The tabulated sample sizes, ascending.
pub fn tabulated_sizes() -> Vec<usize> {
    (3..=100)
        .chain((110..=1000).step_by(10))
        .chain(std::iter::once(MAX_TABULATED_N))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LookupPolicy {
    /// Only tabulated sizes.
    #[default]
    Exact,
    /// Linear in `1/n` between the bracketing tabulated sizes.
    Interpolate,
}

impl LookupPolicy {
    pub fn name(self) -> &'static str {
        match self {
            LookupPolicy::Exact => "exact",
            LookupPolicy::Interpolate => "interpolate",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTable {
    pub law: Law,
    pub rows: Vec<QuantileTableRow>,
}

impl ReferenceTable {
    pub fn parse(law: Law, text: &str) -> Result<Self> {
        Ok(Self {
            law,
            rows: parse_paper_text(text)?,
        })
    }

    pub fn row(&self, n: usize) -> Option<&QuantileTableRow> {
        self.rows
            .binary_search_by_key(&n, |r| r.n)
            .ok()
            .map(|i| &self.rows[i])
    }

    /// Critical value `K_p` for sample size `n` at `level`.
    pub fn lookup(&self, n: usize, level: f64, policy: LookupPolicy) -> Result<f64> {
        let column = level_index(level)?;
        if !(MIN_TABULATED_N..=MAX_TABULATED_N).contains(&n) {
            return Err(Error::SampleSizeOutOfRange { n });
        }
        let mean_at = |row: &QuantileTableRow| row.estimates[column].mean_k;
        match self.rows.binary_search_by_key(&n, |r| r.n) {
            Ok(i) => Ok(mean_at(&self.rows[i])),
            Err(_) if policy == LookupPolicy::Exact => Err(Error::SampleSizeNotTabulated { n }),
            Err(i) => {
                if i == 0 || i == self.rows.len() {
                    return Err(Error::SampleSizeOutOfRange { n });
                }
                let (lo, hi) = (&self.rows[i - 1], &self.rows[i]);
                let t =
                    (1.0 / n as f64 - 1.0 / lo.n as f64) / (1.0 / hi.n as f64 - 1.0 / lo.n as f64);
                Ok(mean_at(lo) + t * (mean_at(hi) - mean_at(lo)))
            }
        }
    }

    /// Structural invariants of a reference table; empty when all hold.
    pub fn violations(&self) -> Vec<Violation> {
        let law = self.law;
        let mut found = Vec::new();
        let mut push = |kind, message: String| found.push(Violation { law, kind, message });

        let grid = tabulated_sizes();
        if self.rows.len() != grid.len() {
            push(
                ViolationKind::RowCount,
                format!("{} rows, expected {}", self.rows.len(), grid.len()),
            );
        } else if let Some((row, &want)) = self
            .rows
            .iter()
            .zip(&grid)
            .find(|(row, &want)| row.n != want)
        {
            push(
                ViolationKind::Grid,
                format!("found n={} where n={want} was expected", row.n),
            );
        }

        for row in &self.rows {
            let levels_ok = row.estimates.len() == TABULATED_LEVELS.len()
                && row
                    .estimates
                    .iter()
                    .zip(TABULATED_LEVELS)
                    .all(|(e, l)| (e.level - l).abs() < 1e-9);
            if !levels_ok {
                push(
                    ViolationKind::Levels,
                    format!("n={}: levels differ from 0.90/0.95/0.98/0.99", row.n),
                );
                continue;
            }
            if row.estimates.windows(2).any(|w| w[1].mean_k < w[0].mean_k) {
                push(
                    ViolationKind::LevelMonotonicity,
                    format!("n={}: quantiles decrease with the level", row.n),
                );
            }
            if row
                .estimates
                .iter()
                .any(|e| !(e.mean_k > 0.0 && e.mean_k < 0.5))
            {
                push(
                    ViolationKind::Range,
                    format!("n={}: quantile outside (0, 0.5)", row.n),
                );
            }
            if row.estimates.iter().any(|e| e.sd_k < 0.0) {
                push(
                    ViolationKind::Range,
                    format!("n={}: negative standard deviation", row.n),
                );
            }
        }

        for pair in self.rows.windows(2) {
            let (prev, cur) = (&pair[0], &pair[1]);
            if cur.n < CROSS_SIZE_CHECK_FROM || prev.estimates.len() != cur.estimates.len() {
                continue;
            }
            for (a, b) in prev.estimates.iter().zip(&cur.estimates) {
                if b.mean_k > a.mean_k {
                    push(
                        ViolationKind::SizeMonotonicity,
                        format!(
                            "level {}: quantile rises from n={} to n={}",
                            a.level, prev.n, cur.n
                        ),
                    );
                }
            }
        }
        found
    }
}

fn level_index(level: f64) -> Result<usize> {
    TABULATED_LEVELS
        .iter()
        .position(|l| (l - level).abs() < 1e-9)
        .ok_or(Error::UnsupportedLevel(level))
}

/// Returns the canonical tabulated level equal to `level`, if any.
pub fn tabulated_level(level: f64) -> Result<f64> {
    level_index(level).map(|i| TABULATED_LEVELS[i])
}

/// The bundled table for `law`.
pub fn reference_table(law: Law) -> &'static ReferenceTable {
    static UNIFORM: OnceLock<ReferenceTable> = OnceLock::new();
    static NORMAL: OnceLock<ReferenceTable> = OnceLock::new();
    let cell = match law {
        Law::Uniform => &UNIFORM,
        Law::Normal => &NORMAL,
    };
    cell.get_or_init(|| {
        ReferenceTable::parse(law, table_text(law)).expect("bundled table data is well formed")
    })
}

/// Critical value from the bundled table for `law`.
pub fn lookup_critical(law: Law, n: usize, level: f64, policy: LookupPolicy) -> Result<f64> {
    reference_table(law).lookup(n, level, policy)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    Checksum,
    Format,
    RowCount,
    Grid,
    Levels,
    LevelMonotonicity,
    SizeMonotonicity,
    Range,
    RoundTrip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub kind: ViolationKind,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} table: {:?}: {}", self.law, self.kind, self.message)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Audits table text for `law`: pinned digest, parseability, structural
/// invariants, and that re-rendering the parsed rows reproduces the text
/// byte for byte.
pub fn verify_table_text(law: Law, text: &str) -> Vec<Violation> {
    let mut found = Vec::new();
    let digest = sha256_hex(text.as_bytes());
    if digest != pinned_sha256(law) {
        found.push(Violation {
            law,
            kind: ViolationKind::Checksum,
            message: format!("sha256 {digest} differs from pinned {}", pinned_sha256(law)),
        });
    }
    let table = match ReferenceTable::parse(law, text) {
        Ok(table) => table,
        Err(e) => {
            found.push(Violation {
                law,
                kind: ViolationKind::Format,
                message: e.to_string(),
            });
            return found;
        }
    };
    found.extend(table.violations());
    match emit_table(law, &table.rows, TableFormat::PaperText) {
        Ok(bytes) if bytes == text.as_bytes() => {}
        _ => found.push(Violation {
            law,
            kind: ViolationKind::RoundTrip,
            message: "text is not in canonical six-decimal layout".into(),
        }),
    }
    found
}

/// Audits both bundled tables; empty on success.
pub fn verify_embedded_tables() -> Vec<Violation> {
    Law::ALL
        .iter()
        .flat_map(|&law| verify_table_text(law, table_text(law)))
        .collect()
}
