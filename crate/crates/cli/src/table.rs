//! Table rendering for `polyb table`.

use std::str::FromStr;

use polyb::exactmath::{polybernoulli_formula_with, StirlingTable};
use polyb::BigNat;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Bfile,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "bfile" => Ok(TableFormat::Bfile),
            other => Err(format!("unknown table format {other:?} (expected csv, json or bfile)")),
        }
    }
}

#[derive(Serialize)]
struct Cell {
    n: usize,
    k: usize,
    value: String,
}

pub fn json_cell(n: usize, k: usize, value: &BigNat) -> String {
    serde_json::to_string(&Cell { n, k, value: value.to_string() }).expect("plain struct serializes")
}

pub fn render(max_n: usize, max_k: usize, format: TableFormat) -> String {
    let table = StirlingTable::new(max_n.max(max_k) + 1);
    let value = |n, k| polybernoulli_formula_with(&table, n, k);
    let mut s = String::new();
    match format {
        TableFormat::Csv => {
            let header: Vec<String> = std::iter::once("n".to_string()).chain((0..=max_k).map(|k| k.to_string())).collect();
            s.push_str(&header.join(","));
            s.push('\n');
            for n in 0..=max_n {
                let row: Vec<String> = std::iter::once(n.to_string()).chain((0..=max_k).map(|k| value(n, k).to_string())).collect();
                s.push_str(&row.join(","));
                s.push('\n');
            }
        }
        TableFormat::Json => {
            let cells: Vec<Cell> = (0..=max_n)
                .flat_map(|n| (0..=max_k).map(move |k| (n, k)))
                .map(|(n, k)| Cell { n, k, value: value(n, k).to_string() })
                .collect();
            s = serde_json::to_string_pretty(&cells).expect("plain structs serialize");
            s.push('\n');
        }
        TableFormat::Bfile => {
            let mut index = 0usize;
            for diagonal in 0..=max_n + max_k {
                for n in 0..=diagonal.min(max_n) {
                    let k = diagonal - n;
                    if k > max_k {
                        continue;
                    }
                    s.push_str(&format!("{index} {}\n", value(n, k)));
                    index += 1;
                }
            }
        }
    }
    s
}
