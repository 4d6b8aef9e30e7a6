//! Tables of power index vectors as aligned text, CSV or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use super::rational::{format_decimal, format_exact};
use crate::indices::PowerIndexVector;

pub const DEFAULT_DIGITS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown output format {0:?} (expected table, csv or json)")]
pub struct UnknownFormat(String);

impl FromStr for OutputFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    /// Decimal places; values are rounded half-to-even.
    pub digits: usize,
    /// Also emit each value as an exact `p/q`.
    pub exact: bool,
    pub format: OutputFormat,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            digits: DEFAULT_DIGITS,
            exact: false,
            format: OutputFormat::Table,
        }
    }
}

#[derive(Serialize)]
struct JsonTable<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    title: Option<&'a str>,
    players: &'a [String],
    indices: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonRow {
    index: &'static str,
    values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<Vec<String>>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders one row per index and one column per player, as in the usual
/// published tables. With `exact`, the text and CSV forms switch to one line
/// per (index, player) so the exact value gets its own column.
pub fn render_table(
    title: Option<&str>,
    players: &[String],
    vectors: &[PowerIndexVector],
    opts: &RenderOptions,
) -> String {
    for v in vectors {
        assert_eq!(v.len(), players.len(), "one name per player");
    }
    let dec = |v: &PowerIndexVector| -> Vec<String> {
        v.values
            .iter()
            .map(|x| format_decimal(x, opts.digits))
            .collect()
    };
    match opts.format {
        OutputFormat::Json => {
            let table = JsonTable {
                title,
                players,
                indices: vectors
                    .iter()
                    .map(|v| JsonRow {
                        index: v.kind.label(),
                        values: dec(v),
                        exact: opts
                            .exact
                            .then(|| v.values.iter().map(format_exact).collect()),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&table).expect("tables serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            if opts.exact {
                out.push_str("index,player,value,exact\n");
                for v in vectors {
                    for (name, x) in players.iter().zip(&v.values) {
                        let _ = writeln!(
                            out,
                            "{},{},{},{}",
                            v.kind.label(),
                            csv_field(name),
                            format_decimal(x, opts.digits),
                            format_exact(x)
                        );
                    }
                }
            } else {
                let header: Vec<String> = players.iter().map(|p| csv_field(p)).collect();
                let _ = writeln!(out, "index,{}", header.join(","));
                for v in vectors {
                    let _ = writeln!(out, "{},{}", v.kind.label(), dec(v).join(","));
                }
            }
            out
        }
        OutputFormat::Table => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            if opts.exact {
                rows.push(vec![
                    "index".into(),
                    "player".into(),
                    "value".into(),
                    "exact".into(),
                ]);
                for v in vectors {
                    for (name, x) in players.iter().zip(&v.values) {
                        rows.push(vec![
                            v.kind.label().into(),
                            name.clone(),
                            format_decimal(x, opts.digits),
                            format_exact(x),
                        ]);
                    }
                }
            } else {
                let mut header = vec![String::new()];
                header.extend(players.iter().cloned());
                rows.push(header);
                for v in vectors {
                    let mut row = vec![v.kind.label().to_string()];
                    row.extend(dec(v));
                    rows.push(row);
                }
            }
            let mut out = String::new();
            if let Some(t) = title {
                let _ = writeln!(out, "{t}");
            }
            out.push_str(&align(&rows));
            out
        }
    }
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::IndexKind;
    use crate::WeightedMajorityGame;

    fn example() -> (Vec<String>, Vec<PowerIndexVector>) {
        let g = WeightedMajorityGame::from_integers(51, &[50, 46, 4, 1]).unwrap();
        let names = ["A", "B", "C", "D"].map(String::from).to_vec();
        let v = [IndexKind::ColomerMartinez, IndexKind::Hcm]
            .map(|k| k.compute(&g))
            .to_vec();
        (names, v)
    }

    #[test]
    fn text_table() {
        let (names, v) = example();
        let out = render_table(None, &names, &v, &RenderOptions::default());
        assert_eq!(
            out,
            "     A       B       C       D\n\
             CM   0.6068  0.3453  0.0381  0.0098\n\
             HCM  0.5952  0.3651  0.0317  0.0079\n"
        );
    }

    #[test]
    fn csv_with_exact() {
        let (names, v) = example();
        let opts = RenderOptions {
            exact: true,
            format: OutputFormat::Csv,
            ..Default::default()
        };
        let out = render_table(None, &names, &v, &opts);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "index,player,value,exact");
        assert_eq!(lines[5], "HCM,A,0.5952,25/42");
        assert_eq!(lines.len(), 9);
    }

    #[test]
    fn json_is_parseable() {
        let (names, v) = example();
        let opts = RenderOptions {
            digits: 2,
            exact: true,
            format: OutputFormat::Json,
        };
        let out = render_table(Some("t"), &names, &v, &opts);
        let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed["indices"][1]["values"][0], "0.60");
        assert_eq!(parsed["indices"][1]["exact"][3], "1/126");
        assert_eq!(parsed["players"][2], "C");
    }

    #[test]
    fn csv_quotes_names() {
        let names = vec!["a,b".to_string()];
        let g = WeightedMajorityGame::from_integers(1, &[1]).unwrap();
        let opts = RenderOptions {
            format: OutputFormat::Csv,
            ..Default::default()
        };
        let out = render_table(None, &names, &[IndexKind::PublicGood.compute(&g)], &opts);
        assert_eq!(out, "index,\"a,b\"\nPG,1.0000\n");
    }
}
