//! Output rendering: text tables, RFC-4180 CSV and JSON, each carrying the
//! tool version and full invocation for reproducibility (a leading `#`
//! comment line on text/CSV, a `meta` object in JSON).

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;

use serde_json::json;

use cumsub::analysis::{DiscrepancyRecord, ScanPoint};
use cumsub::{Convention, SolveTable, SubtractionSet};

use crate::CliError;

/// Reproducibility metadata: version, the invocation, and per-command keys.
pub struct Meta {
    pairs: Vec<(String, String)>,
}

impl Meta {
    pub fn new() -> Meta {
        let args: Vec<String> = std::env::args().skip(1).collect();
        Meta {
            pairs: vec![
                ("tool".into(), "cumsub".into()),
                ("version".into(), env!("CARGO_PKG_VERSION").into()),
                ("invocation".into(), format!("cumsub {}", args.join(" "))),
            ],
        }
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Meta {
        self.pairs.push((key.into(), value.to_string()));
        self
    }

    pub fn comment_line(&self) -> String {
        let body: Vec<String> = self
            .pairs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("# {}\n", body.join(" | "))
    }

    pub fn json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.pairs {
            map.insert(k.clone(), json!(v));
        }
        serde_json::Value::Object(map)
    }
}

/// Writes to the file when `--out` was given, otherwise to stdout.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::io(&format!("writing {}", path.display()), e)),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn moves_cell(moves: &[u64]) -> String {
    let parts: Vec<String> = moves.iter().map(u64::to_string).collect();
    parts.join(",")
}

fn outcome_cell(table: &SolveTable, x: Convention, h: u64) -> String {
    let sol = table.solution(x, h);
    if sol.pspe_moves.is_empty() {
        sol.outcome.to_string()
    } else {
        format!("{}, {}", sol.outcome, moves_cell(&sol.pspe_moves))
    }
}

fn deltas(table: &SolveTable, x: Convention, h: u64) -> (i64, i64) {
    let base = table.outcome(Convention::FvF, h);
    let o = table.outcome(x, h);
    (o.o1 as i64 - base.o1 as i64, o.o2 as i64 - base.o2 as i64)
}

fn render_aligned(header: Vec<String>, rows: Vec<Vec<String>>, meta: &Meta) -> String {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut text = meta.comment_line();
    for row in std::iter::once(&header).chain(rows.iter()) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{:<width$}", cell, width = widths[i]));
        }
        text.push_str(line.trim_end());
        text.push('\n');
    }
    text
}

fn csv_from_records(
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    meta: &Meta,
) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&header).expect("in-memory csv");
    for row in rows {
        writer.write_record(&row).expect("in-memory csv");
    }
    let body = String::from_utf8(writer.into_inner().expect("in-memory csv")).unwrap();
    format!("{}{body}", meta.comment_line())
}

fn solve_header(shown: &[Convention]) -> Vec<String> {
    let mut header = vec!["heap".to_string()];
    for &x in shown {
        header.push(x.to_string());
        header.push(format!("{x}_moves"));
        if x != Convention::FvF {
            header.push(format!("{x}_d1"));
            header.push(format!("{x}_d2"));
        }
    }
    header
}

fn solve_rows(table: &SolveTable, shown: &[Convention], split_moves: bool) -> Vec<Vec<String>> {
    (0..=table.hmax())
        .map(|h| {
            let mut row = vec![h.to_string()];
            for &x in shown {
                if split_moves {
                    row.push(table.outcome(x, h).to_string());
                    row.push(moves_cell(&table.solution(x, h).pspe_moves));
                } else {
                    row.push(outcome_cell(table, x, h));
                }
                if x != Convention::FvF {
                    let (d1, d2) = deltas(table, x, h);
                    row.push(d1.to_string());
                    row.push(d2.to_string());
                }
            }
            row
        })
        .collect()
}

pub fn solve_text(table: &SolveTable, shown: &[Convention], meta: &Meta) -> String {
    let mut header = vec!["heap".to_string()];
    for &x in shown {
        header.push(x.to_string());
        if x != Convention::FvF {
            header.push("d1".into());
            header.push("d2".into());
        }
    }
    render_aligned(header, solve_rows(table, shown, false), meta)
}

pub fn solve_csv(table: &SolveTable, shown: &[Convention], meta: &Meta) -> String {
    csv_from_records(solve_header(shown), solve_rows(table, shown, true), meta)
}

pub fn solve_json(table: &SolveTable, shown: &[Convention], meta: &Meta) -> String {
    let rows: Vec<serde_json::Value> = (0..=table.hmax())
        .map(|h| {
            let mut row = serde_json::Map::new();
            row.insert("heap".into(), json!(h));
            for &x in shown {
                let sol = table.solution(x, h);
                let (d1, d2) = deltas(table, x, h);
                row.insert(
                    x.to_string(),
                    json!({
                        "o1": sol.outcome.o1,
                        "o2": sol.outcome.o2,
                        "moves": sol.pspe_moves,
                        "d1": d1,
                        "d2": d2,
                    }),
                );
            }
            serde_json::Value::Object(row)
        })
        .collect();
    let doc = json!({ "meta": meta.json(), "rows": rows });
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}

pub fn zs_text(values: &[i64], meta: &Meta) -> String {
    let rows = values
        .iter()
        .enumerate()
        .map(|(h, v)| vec![h.to_string(), v.to_string()])
        .collect();
    render_aligned(vec!["heap".into(), "score".into()], rows, meta)
}

pub fn zs_csv(values: &[i64], meta: &Meta) -> String {
    let rows = values
        .iter()
        .enumerate()
        .map(|(h, v)| vec![h.to_string(), v.to_string()])
        .collect();
    csv_from_records(vec!["heap".into(), "score".into()], rows, meta)
}

pub fn zs_json(values: &[i64], meta: &Meta) -> String {
    let rows: Vec<serde_json::Value> = values
        .iter()
        .enumerate()
        .map(|(h, v)| json!({ "heap": h, "score": v }))
        .collect();
    let doc = json!({ "meta": meta.json(), "rows": rows });
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}

pub fn line_text(
    set: &SubtractionSet,
    heap: u64,
    convention: Option<Convention>,
    line: &[(u8, u64)],
    score: Option<i64>,
    meta: &Meta,
) -> String {
    let mut text = meta.comment_line();
    match convention {
        Some(x) => text.push_str(&format!("set {set} convention {x} heap {heap}\n")),
        None => text.push_str(&format!("set {set} zero-sum heap {heap}\n")),
    }
    let dashed: Vec<String> = line.iter().map(|&(_, a)| a.to_string()).collect();
    text.push_str(&format!("moves: {}\n", dashed.join("-")));
    let detail: Vec<String> = line
        .iter()
        .map(|&(m, a)| format!("({m},{a})"))
        .collect();
    text.push_str(&format!("detail: {}\n", detail.join(" ")));
    let take = |m: u8| -> u64 { line.iter().filter(|&&(p, _)| p == m).map(|&(_, a)| a).sum() };
    text.push_str(&format!("mover 1 total: {}\n", take(1)));
    text.push_str(&format!("mover 2 total: {}\n", take(2)));
    text.push_str(&format!("slack: {}\n", heap - take(1) - take(2)));
    if let Some(score) = score {
        text.push_str(&format!("score: {score}\n"));
    }
    text
}

fn diff_rows(records: &[DiscrepancyRecord]) -> Vec<Vec<String>> {
    records
        .iter()
        .map(|r| {
            vec![
                r.heap.to_string(),
                r.d1.to_string(),
                r.d2.to_string(),
                r.diff_of_diff.to_string(),
            ]
        })
        .collect()
}

const DIFF_HEADER: [&str; 4] = ["heap", "d1", "d2", "diff_of_diff"];

pub fn diff_text(records: &[DiscrepancyRecord], meta: &Meta) -> String {
    let header = DIFF_HEADER.iter().map(|s| s.to_string()).collect();
    render_aligned(header, diff_rows(records), meta)
}

pub fn diff_csv(records: &[DiscrepancyRecord], meta: &Meta) -> String {
    let header = DIFF_HEADER.iter().map(|s| s.to_string()).collect();
    csv_from_records(header, diff_rows(records), meta)
}

pub fn diff_json(records: &[DiscrepancyRecord], meta: &Meta) -> String {
    let rows: Vec<serde_json::Value> = records
        .iter()
        .map(|r| json!({ "heap": r.heap, "d1": r.d1, "d2": r.d2, "diff_of_diff": r.diff_of_diff }))
        .collect();
    let doc = json!({ "meta": meta.json(), "rows": rows });
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}

/// Point file behind the parameter-space figures: one row per divergent set,
/// `s3` empty for pairs.
pub fn scan_csv(points: &[ScanPoint], meta: &Meta) -> String {
    let header = vec![
        "s3".to_string(),
        "s2".to_string(),
        "s1".to_string(),
        "first_heap".to_string(),
    ];
    let rows = points
        .iter()
        .map(|p| {
            let a = p.set.actions();
            let mut row = Vec::with_capacity(4);
            if a.len() == 2 {
                row.push(String::new());
            }
            row.extend(a.iter().map(u64::to_string));
            row.push(p.first_heap.map(|h| h.to_string()).unwrap_or_default());
            row
        })
        .collect();
    csv_from_records(header, rows, meta)
}
