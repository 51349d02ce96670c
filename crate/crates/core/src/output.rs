//! Output records and the summary table in text, markdown, CSV and JSON.
//!
//! Rationals are printed as `num/den` (just `num` for integers); in JSON they
//! become `{"num": "...", "den": "..."}` with string fields, never floats.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::eulerhodge::{chi_product, proportionality_k, tau};
use crate::exactnum::Rational;
use crate::lagrangian::lg_euler_char_cells;

pub const TABLE_MAX_G: usize = 500;

pub fn rational_to_json(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let field = |k: &str| {
        v.get(k)
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse(format!("missing string field {k:?} in {v}")))
    };
    format!("{}/{}", field("num")?, field("den")?).parse()
}

/// One computed value with its parameters and the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub quantity: String,
    pub params: Vec<(String, String)>,
    pub value: Rational,
    pub route: String,
}

impl OutputRecord {
    pub fn new(quantity: &str, params: &[(&str, String)], value: Rational, route: &str) -> Self {
        OutputRecord {
            quantity: quantity.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            value,
            route: route.to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        let params: serde_json::Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "quantity": self.quantity,
            "params": params,
            "value": rational_to_json(&self.value),
            "route": self.route,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let s = |k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("missing {k:?}")))
        };
        let params = v
            .get("params")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing \"params\"".into()))?
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.as_str().unwrap_or_default().to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(OutputRecord {
            quantity: s("quantity")?,
            params,
            value: rational_from_json(v.get("value").unwrap_or(&Value::Null))?,
            route: s("route")?,
        })
    }
}

/// `quantity[k=v, ...] = value (route)`
impl fmt::Display for OutputRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}[{}] = {}", self.quantity, params.join(", "), self.value)?;
        if !self.route.is_empty() {
            write!(f, " ({})", self.route)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub g: usize,
    pub chi: Rational,
    pub tau: Option<Rational>,
    pub k: Rational,
    pub chi_lg: Rational,
}

pub const TABLE_COLUMNS: [&str; 5] = ["g", "chi", "tau", "K", "chi_LG"];

pub fn table_rows(gmax: usize) -> Result<Vec<TableRow>> {
    if gmax == 0 {
        return Err(Error::InvalidGenus { g: 0, min: 1 });
    }
    if gmax > TABLE_MAX_G {
        return Err(Error::OutOfBounds {
            what: "gmax".into(),
            value: gmax,
            max: TABLE_MAX_G,
        });
    }
    (1..=gmax)
        .map(|g| {
            Ok(TableRow {
                g,
                chi: chi_product(g)?,
                tau: if g >= 2 { Some(tau(g)?) } else { None },
                k: proportionality_k(g)?,
                chi_lg: Rational::from_int(lg_euler_char_cells(g)?),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Md,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" => Ok(TableFormat::Md),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::Parse(format!("unknown table format {s:?}"))),
        }
    }
}

fn cells(row: &TableRow) -> [String; 5] {
    [
        row.g.to_string(),
        row.chi.to_string(),
        row.tau.as_ref().map(Rational::to_string).unwrap_or_default(),
        row.k.to_string(),
        row.chi_lg.to_string(),
    ]
}

pub fn render_table(rows: &[TableRow], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = TABLE_COLUMNS.join(",");
            out.push('\n');
            for r in rows {
                out.push_str(&cells(r).join(","));
                out.push('\n');
            }
            out
        }
        TableFormat::Md => {
            let mut out = format!("| {} |\n", TABLE_COLUMNS.join(" | "));
            out.push_str(&format!("|{}\n", "---|".repeat(TABLE_COLUMNS.len())));
            for r in rows {
                out.push_str(&format!("| {} |\n", cells(r).join(" | ")));
            }
            out
        }
        TableFormat::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "g": r.g,
                        "chi": rational_to_json(&r.chi),
                        "tau": r.tau.as_ref().map_or(Value::Null, rational_to_json),
                        "K": rational_to_json(&r.k),
                        "chi_LG": rational_to_json(&r.chi_lg),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&Value::Array(arr)).expect("json");
            s.push('\n');
            s
        }
    }
}

fn row_from_cells(c: &[&str]) -> Result<TableRow> {
    if c.len() != TABLE_COLUMNS.len() {
        return Err(Error::Parse(format!("expected 5 cells, got {}", c.len())));
    }
    Ok(TableRow {
        g: c[0]
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad genus {:?}", c[0])))?,
        chi: c[1].parse()?,
        tau: if c[2].trim().is_empty() {
            None
        } else {
            Some(c[2].parse()?)
        },
        k: c[3].parse()?,
        chi_lg: c[4].parse()?,
    })
}

/// Inverse of `render_table`.
pub fn parse_table(text: &str, format: TableFormat) -> Result<Vec<TableRow>> {
    match format {
        TableFormat::Csv => text
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|l| row_from_cells(&l.split(',').collect::<Vec<_>>()))
            .collect(),
        TableFormat::Md => text
            .lines()
            .skip(2)
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let inner = l.trim().trim_start_matches('|').trim_end_matches('|');
                row_from_cells(&inner.split('|').collect::<Vec<_>>())
            })
            .collect(),
        TableFormat::Json => {
            let v: Value =
                serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad json: {e}")))?;
            v.as_array()
                .ok_or_else(|| Error::Parse("expected a JSON array".into()))?
                .iter()
                .map(|r| {
                    let g = r
                        .get("g")
                        .and_then(Value::as_u64)
                        .ok_or_else(|| Error::Parse("missing g".into()))?;
                    let get = |k: &str| rational_from_json(r.get(k).unwrap_or(&Value::Null));
                    Ok(TableRow {
                        g: g as usize,
                        chi: get("chi")?,
                        tau: match r.get("tau") {
                            None | Some(Value::Null) => None,
                            Some(t) => Some(rational_from_json(t)?),
                        },
                        k: get("K")?,
                        chi_lg: get("chi_LG")?,
                    })
                })
                .collect()
        }
    }
}
