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

//! Text and CSV renderings of quantile tables.
//!
//! The paper-text layout is one header line followed by one line per
//! sample size: `n`, the mean quantile for each level, then the standard
//! deviation for each level, single-space separated with six decimals.
//! The bundled reference tables are stored in exactly this layout.
//!
//! The CSV layout has the header `law,n,level,mean_K,sd_K` and one record
//! per `(n, level)` at full double precision.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::montecarlo::{QuantileEstimate, QuantileTableRow};
use crate::sampling::Law;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFormat {
    PaperText,
    Csv,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-text" | "text" => Ok(TableFormat::PaperText),
            "csv" => Ok(TableFormat::Csv),
            other => Err(Error::InvalidConfig(format!(
                "unknown table format {other:?}"
            ))),
        }
    }
}

/// Renders `rows` in `format`.
pub fn emit_table(law: Law, rows: &[QuantileTableRow], format: TableFormat) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    write_table(&mut out, law, rows, format)?;
    Ok(out)
}

pub fn write_table<W: Write>(
    out: W,
    law: Law,
    rows: &[QuantileTableRow],
    format: TableFormat,
) -> Result<()> {
    let first = rows.first().ok_or(Error::EmptyTable)?;
    let levels: Vec<f64> = first.estimates.iter().map(|e| e.level).collect();
    if let Some(row) = rows.iter().find(|r| {
        r.estimates.len() != levels.len()
            || r.estimates.iter().zip(&levels).any(|(e, l)| e.level != *l)
    }) {
        return Err(Error::TableFormat {
            line: 0,
            message: format!("row n={} has a different set of levels", row.n),
        });
    }
    match format {
        TableFormat::PaperText => write_paper_text(out, rows, &levels),
        TableFormat::Csv => write_csv(out, law, rows),
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::TableFormat {
        line: 0,
        message: format!("write failed: {e}"),
    }
}

fn write_paper_text<W: Write>(mut out: W, rows: &[QuantileTableRow], levels: &[f64]) -> Result<()> {
    let mut header = String::from("n");
    for prefix in ["K", "S"] {
        for &level in levels {
            header.push(' ');
            header.push_str(prefix);
            header.push_str(&level_label(level));
        }
    }
    writeln!(out, "{header}").map_err(io_error)?;
    for row in rows {
        let mut line = row.n.to_string();
        for e in &row.estimates {
            line.push_str(&format!(" {:.6}", e.mean_k));
        }
        for e in &row.estimates {
            line.push_str(&format!(" {:.6}", e.sd_k));
        }
        writeln!(out, "{line}").map_err(io_error)?;
    }
    Ok(())
}

/// `0.95` -> `"95"`, `0.975` -> `"97.5"`.
pub fn level_label(level: f64) -> String {
    let percent = level * 100.0;
    if (percent - percent.round()).abs() < 1e-9 {
        format!("{}", percent.round() as i64)
    } else {
        let s = format!("{percent:.6}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

fn parse_level_label(label: &str) -> Option<f64> {
    let percent: f64 = label.parse().ok()?;
    let level = percent / 100.0;
    (level > 0.0 && level < 1.0).then_some(level)
}

/// Parses the paper-text layout produced by [`emit_table`]. Blank lines are
/// ignored.
pub fn parse_paper_text(text: &str) -> Result<Vec<QuantileTableRow>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(Error::EmptyTable)?;
    let levels = parse_header(header_line, header)?;
    let width = 1 + 2 * levels.len();

    let mut rows = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != width {
            return Err(Error::TableFormat {
                line,
                message: format!("expected {width} fields, found {}", fields.len()),
            });
        }
        let n = fields[0].parse::<usize>().map_err(|_| Error::TableFormat {
            line,
            message: format!("bad sample size {:?}", fields[0]),
        })?;
        let number = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::TableFormat {
                    line,
                    message: format!("bad number {s:?}"),
                })
        };
        let mut estimates = Vec::with_capacity(levels.len());
        for (j, &level) in levels.iter().enumerate() {
            estimates.push(QuantileEstimate {
                level,
                mean_k: number(fields[1 + j])?,
                sd_k: number(fields[1 + levels.len() + j])?,
            });
        }
        rows.push(QuantileTableRow { n, estimates });
    }
    Ok(rows)
}

fn parse_header(line: usize, header: &str) -> Result<Vec<f64>> {
    let bad = |message: String| Error::TableFormat { line, message };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&"n") || fields.len() < 3 || fields.len() % 2 == 0 {
        return Err(bad(format!("unexpected header {header:?}")));
    }
    let half = (fields.len() - 1) / 2;
    let mut levels = Vec::with_capacity(half);
    for j in 0..half {
        let k = fields[1 + j]
            .strip_prefix('K')
            .and_then(parse_level_label)
            .ok_or_else(|| bad(format!("bad column {:?}", fields[1 + j])))?;
        let s = fields[1 + half + j]
            .strip_prefix('S')
            .and_then(parse_level_label)
            .ok_or_else(|| bad(format!("bad column {:?}", fields[1 + half + j])))?;
        if k != s {
            return Err(bad(format!(
                "K and S columns disagree at position {}",
                j + 1
            )));
        }
        levels.push(k);
    }
    Ok(levels)
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRecord {
    law: String,
    n: usize,
    level: f64,
    #[serde(rename = "mean_K")]
    mean_k: f64,
    #[serde(rename = "sd_K")]
    sd_k: f64,
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::TableFormat {
        line,
        message: e.to_string(),
    }
}

fn write_csv<W: Write>(out: W, law: Law, rows: &[QuantileTableRow]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    for row in rows {
        for e in &row.estimates {
            wtr.serialize(CsvRecord {
                law: law.name().to_string(),
                n: row.n,
                level: e.level,
                mean_k: e.mean_k,
                sd_k: e.sd_k,
            })
            .map_err(csv_error)?;
        }
    }
    wtr.flush().map_err(io_error)
}

/// Parses the CSV layout back into rows; consecutive records with the same
/// `n` form one row.
pub fn parse_csv(text: &str) -> Result<(Law, Vec<QuantileTableRow>)> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut law: Option<Law> = None;
    let mut rows: Vec<QuantileTableRow> = Vec::new();
    for record in rdr.deserialize::<CsvRecord>() {
        let record = record.map_err(csv_error)?;
        let record_law: Law = record.law.parse()?;
        match law {
            None => law = Some(record_law),
            Some(l) if l != record_law => {
                return Err(Error::TableFormat {
                    line: 0,
                    message: "mixed laws in one table".into(),
                })
            }
            Some(_) => {}
        }
        let estimate = QuantileEstimate {
            level: record.level,
            mean_k: record.mean_k,
            sd_k: record.sd_k,
        };
        match rows.last_mut() {
            Some(row) if row.n == record.n => row.estimates.push(estimate),
            _ => rows.push(QuantileTableRow {
                n: record.n,
                estimates: vec![estimate],
            }),
        }
    }
    let law = law.ok_or(Error::EmptyTable)?;
    Ok((law, rows))
}
