//! Emitters for the four data tables (levels and Joseph weights, theta pairs,
//! induced levels for classical and exceptional types).

use serde_json::{json, Value};

use crate::chevalley::build_lie_algebra;
use crate::error::{LieError, Result};
use crate::minimal_data::{deligne_level, g_natural, SummandKind};
use crate::rational::{fmt_q, q, qf, Q};
use crate::rootsys::{build_root_system, shifted_weyl_action, Root, Series, SimpleType, Weight};
use crate::symmod::theta_pairs;

pub const SCHEMA: &str = "minvert.table/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// One cell: plain text plus its JSON form.
#[derive(Clone, Debug)]
pub struct Cell {
    pub text: String,
    pub json: Value,
}

impl Cell {
    fn text(s: impl Into<String>) -> Cell {
        let s = s.into();
        Cell {
            json: Value::String(s.clone()),
            text: s,
        }
    }

    fn root(r: &Root) -> Cell {
        Cell {
            text: r.to_string(),
            json: json!(r.0),
        }
    }

    fn weight(w: &Weight) -> Cell {
        Cell {
            text: w.fmt_fundamental(),
            json: weight_json(w),
        }
    }

    fn rational(x: &Q) -> Cell {
        Cell::text(fmt_q(x))
    }
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.0.iter().map(|c| Value::String(fmt_q(c))).collect())
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub table: u8,
    pub cells: Vec<(&'static str, Cell)>,
}

#[derive(Clone, Debug)]
pub struct Table {
    pub id: u8,
    pub title: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
}

impl Table {
    pub fn render_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for r in &self.rows {
            for (i, (_, c)) in r.cells.iter().enumerate() {
                widths[i] = widths[i].max(c.text.len());
            }
        }
        let line = |cells: Vec<&str>| {
            let s: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            s.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = format!("Table {}: {}\n", self.id, self.title);
        out += &line(self.columns.clone());
        out += &line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
        for r in &self.rows {
            out += &line(r.cells.iter().map(|(_, c)| c.text.as_str()).collect());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.cells.iter().map(|(_, c)| c.json.clone()).collect()))
            .collect();
        json!({
            "schema": SCHEMA,
            "table": self.id,
            "title": self.title,
            "columns": self.columns,
            "rows": rows,
        })
    }
}

fn ty(s: &str) -> SimpleType {
    s.parse().expect("built-in type name")
}

/// `lambda_0` and the words of `W_0` (1-based simple reflections, rightmost acts first).
fn joseph_data(t: SimpleType) -> Option<(Vec<Q>, Vec<Vec<usize>>)> {
    let (half, third, one, zero) = (qf(1, 2), qf(1, 3), q(1), q(0));
    let e6_words = vec![vec![], vec![2], vec![3], vec![1, 3], vec![5], vec![6, 5]];
    let mut e7_words = e6_words.clone();
    e7_words.push(vec![7, 6, 5]);
    let mut e8_words = e7_words.clone();
    e8_words.push(vec![8, 7, 6, 5]);
    let ones_except_4 = |l: usize| (1..=l).map(|i| if i == 4 { zero.clone() } else { one.clone() }).collect();
    Some(match (t.series(), t.rank()) {
        (Series::G, 2) => (vec![one.clone(), third], vec![vec![], vec![2]]),
        (Series::D, 4) => (
            vec![one.clone(), zero.clone(), one.clone(), one.clone()],
            vec![vec![], vec![1], vec![3], vec![4]],
        ),
        (Series::F, 4) => (
            vec![half.clone(), half, one.clone(), one.clone()],
            vec![vec![], vec![1], vec![2]],
        ),
        (Series::E, 6) => (ones_except_4(6), e6_words),
        (Series::E, 7) => (ones_except_4(7), e7_words),
        (Series::E, 8) => (ones_except_4(8), e8_words),
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct JosephWeightList {
    pub ty: SimpleType,
    pub lambda0: Weight,
    /// `(word, w o (lambda_0 - rho))`
    pub weights: Vec<(Vec<usize>, Weight)>,
}

pub fn joseph_weights(t: SimpleType) -> Result<JosephWeightList> {
    let (lam, words) = joseph_data(t).ok_or_else(|| LieError::Unsupported(format!("no Joseph weight data for {t}")))?;
    let rs = build_root_system(t);
    let lambda0 = Weight(lam);
    let base = lambda0.sub(rs.rho());
    let weights = words
        .into_iter()
        .map(|w| shifted_weyl_action(&rs, &w, &base).map(|x| (w, x)))
        .collect::<Result<Vec<_>>>()?;
    Ok(JosephWeightList {
        ty: t,
        lambda0,
        weights,
    })
}

fn word_string(w: &[usize]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect()
    }
}

fn table1() -> Result<Table> {
    let mut rows = Vec::new();
    for name in ["G2", "D4", "F4", "E6", "E7", "E8"] {
        let t = ty(name);
        let rs = build_root_system(t);
        let jw = joseph_weights(t)?;
        let words: Vec<String> = jw.weights.iter().map(|(w, _)| word_string(w)).collect();
        let weights: Vec<String> = jw.weights.iter().map(|(_, x)| format!("[{}]", x.fmt_fundamental())).collect();
        rows.push(TableRow {
            table: 1,
            cells: vec![
                ("type", Cell::text(name)),
                ("level", Cell::rational(&deligne_level(&rs)?)),
                ("lambda0", Cell::weight(&jw.lambda0)),
                (
                    "W0",
                    Cell {
                        text: format!("{{{}}}", words.join(", ")),
                        json: json!(words),
                    },
                ),
                (
                    "weights",
                    Cell {
                        text: weights.join(" "),
                        json: Value::Array(jw.weights.iter().map(|(_, x)| weight_json(x)).collect()),
                    },
                ),
            ],
        });
    }
    Ok(Table {
        id: 1,
        title: "Deligne levels, lambda0, W0 and the weights w o (lambda0 - rho)",
        columns: vec!["type", "level", "lambda0", "W0", "weights"],
        rows,
    })
}

fn table2() -> Result<Table> {
    let mut rows = Vec::new();
    for name in ["D4", "E6", "E7", "E8"] {
        let rs = build_root_system(ty(name));
        let lie = build_lie_algebra(&rs);
        let pl = theta_pairs(&lie, 1)?;
        let theta1 = rs.theta().sub(&pl.target);
        let count = qf(rs.h_dual(), 6) + q(1);
        let pairs_text: Vec<String> = pl.pairs.iter().map(|(b, d)| format!("{b},{d}")).collect();
        rows.push(TableRow {
            table: 2,
            cells: vec![
                ("type", Cell::text(name)),
                ("h/6+1", Cell::rational(&count)),
                ("theta", Cell::root(rs.theta())),
                ("theta1", Cell::root(&theta1)),
                (
                    "pairs",
                    Cell {
                        text: pairs_text.join(" "),
                        json: Value::Array(pl.pairs.iter().map(|(b, d)| json!([b.0, d.0])).collect()),
                    },
                ),
            ],
        });
    }
    Ok(Table {
        id: 2,
        title: "pairs of positive roots (beta_j, delta_j) with beta_j + delta_j = theta - theta1",
        columns: vec!["type", "h/6+1", "theta", "theta1", "pairs"],
        rows,
    })
}

/// Classical name of a simple type (sl_n, so_n, sp_2n); exceptional types keep their letter.
pub fn classical_name(t: SimpleType) -> String {
    let l = t.rank();
    match t.series() {
        Series::A => format!("sl{}", l + 1),
        Series::B => format!("so{}", 2 * l + 1),
        Series::C => format!("sp{}", 2 * l),
        Series::D => format!("so{}", 2 * l),
        _ => t.to_string(),
    }
}

fn natural_rows(table: u8, names: &[&str]) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for name in names {
        let t = ty(name);
        let lie = build_lie_algebra(&build_root_system(t));
        let summands = g_natural(&lie)?;
        let mut parts = Vec::new();
        let mut levels = Vec::new();
        for s in summands.iter().filter(|s| s.dim() > 0) {
            let label = match &s.kind {
                SummandKind::Center => "C".to_string(),
                SummandKind::Simple(st) => classical_name(*st),
            };
            parts.push(format!("g{}={}", s.index, label));
            levels.push(format!("k{} = {}", s.index, s.level_poly));
        }
        rows.push(TableRow {
            table,
            cells: vec![
                ("type", Cell::text(*name)),
                ("g", Cell::text(classical_name(t))),
                (
                    "g_natural",
                    Cell {
                        text: parts.join(" + "),
                        json: json!(parts),
                    },
                ),
                (
                    "levels",
                    Cell {
                        text: levels.join(", "),
                        json: json!(levels),
                    },
                ),
            ],
        });
    }
    Ok(rows)
}

fn table3() -> Result<Table> {
    Ok(Table {
        id: 3,
        title: "g_natural and induced levels, classical types (representatives)",
        columns: vec!["type", "g", "g_natural", "levels"],
        rows: natural_rows(3, &["A2", "A3", "A4", "C2", "C3", "C4", "B3", "D4", "B4", "D5", "B5", "D6"])?,
    })
}

fn table4() -> Result<Table> {
    Ok(Table {
        id: 4,
        title: "g_natural and induced levels, exceptional types",
        columns: vec!["type", "g", "g_natural", "levels"],
        rows: natural_rows(4, &["G2", "F4", "E6", "E7", "E8"])?,
    })
}

pub fn build_table(id: u8) -> Result<Table> {
    match id {
        1 => table1(),
        2 => table2(),
        3 => table3(),
        4 => table4(),
        _ => Err(LieError::Parse(format!("no table {id}"))),
    }
}

pub fn emit_table(id: u8, format: Format) -> Result<String> {
    let t = build_table(id)?;
    Ok(match format {
        Format::Text => t.render_text(),
        Format::Json => serde_json::to_string_pretty(&t.to_json()).expect("serializable") + "\n",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn joseph_weight_counts() {
        for (t, n) in [("G2", 2), ("D4", 4), ("F4", 3), ("E6", 6), ("E7", 7), ("E8", 8)] {
            assert_eq!(joseph_weights(ty(t)).unwrap().weights.len(), n);
        }
        assert!(joseph_weights(ty("B3")).is_err());
    }

    #[test]
    fn table_one_e8_row() {
        let txt = emit_table(1, Format::Text).unwrap();
        let row = txt.lines().find(|l| l.starts_with("E8")).unwrap();
        assert!(row.contains("-6"));
        assert!(row.contains("w1 + w2 + w3 + w5 + w6 + w7 + w8"));
        assert!(row.contains("{1, s2, s3, s1s3, s5, s6s5, s7s6s5, s8s7s6s5}"));
    }

    #[test]
    fn so8_row() {
        let txt = emit_table(3, Format::Text).unwrap();
        let row = txt.lines().find(|l| l.starts_with("D4")).unwrap();
        assert!(row.contains("g1=sl2 + g2=sl2 + g3=sl2"), "{row}");
        assert!(row.contains("k1 = k + 2, k2 = k + 2, k3 = k + 2"));
    }

    #[test]
    fn json_is_deterministic() {
        let a = emit_table(2, Format::Json).unwrap();
        let b = emit_table(2, Format::Json).unwrap();
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["rows"][0][4][0], json!([[0, 1, 0, 0], [0, 1, 1, 1]]));
    }
}
