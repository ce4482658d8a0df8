//! CSV and JSON serialisation of margin records, verification reports and
//! tables.
//!
//! CSV uses LF line endings and `.` as decimal separator; floats are
//! printed in shortest round-trip form. JSON objects have sorted keys;
//! non-finite floats become `null`.

use std::io::Write;

use serde_json::{json, Value};

use crate::registry::{MarginRecord, VerifyReport};
use crate::scaled::ScaledReal;
use crate::tables::TableCell;

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w)
}

/// Shortest round-trip form; exponent notation outside [1e-4, 1e16).
pub fn num(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || !a.is_finite() || (1e-4..1e16).contains(&a) {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

/// [`num`] for extended-range values; beyond f64 range the decimal
/// exponent form of [`ScaledReal`]'s `Display` is used.
pub fn scaled_num(v: ScaledReal) -> String {
    let f = v.to_f64();
    if f.is_finite() && (f == 0.0) == v.is_zero() {
        num(f)
    } else {
        v.to_string()
    }
}

fn io_err(e: csv::Error) -> std::io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => std::io::Error::other(format!("{other:?}")),
    }
}

/// Columns: id, nu, beta, n, x, lhs, rhs, rel_margin.
pub fn write_records_csv<W: Write>(records: &[MarginRecord], w: W) -> std::io::Result<()> {
    let mut w = writer(w);
    w.write_record(["id", "nu", "beta", "n", "x", "lhs", "rhs", "rel_margin"]).map_err(io_err)?;
    for r in records {
        w.write_record([
            r.id.clone(),
            num(r.nu),
            num(r.beta),
            num(r.n),
            num(r.x),
            num(r.lhs),
            num(r.rhs),
            num(r.rel_margin),
        ])
        .map_err(io_err)?;
    }
    w.flush()
}

pub fn records_csv(records: &[MarginRecord]) -> String {
    let mut buf = Vec::new();
    write_records_csv(records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

/// A verification report as a JSON document.
pub fn report_json(report: &VerifyReport) -> Value {
    // round-trip through Value so that struct fields come out sorted
    let mut v = serde_json::to_value(report).expect("report serialises");
    if let Value::Object(m) = &mut v {
        m.insert(
            "summary".into(),
            json!({
                "records": report.records.len(),
                "violations": report.violations.len(),
                "equality_breaks": report.equality_breaks.len(),
                "failures": report.failures.len(),
            }),
        );
    }
    v
}

/// Columns: table, nu, x, rel_err, and with `compare` also reference and
/// abs_diff.
pub fn write_table_csv<W: Write>(cells: &[TableCell], compare: bool, w: W) -> std::io::Result<()> {
    let mut w = writer(w);
    let mut head = vec!["table", "nu", "x", "rel_err"];
    if compare {
        head.extend(["reference", "abs_diff"]);
    }
    w.write_record(&head).map_err(io_err)?;
    for c in cells {
        let mut row = vec![c.table.to_string(), num(c.nu), num(c.x), format!("{:.4}", c.rel_err)];
        if compare {
            row.push(c.reference.map(|r| format!("{r:.4}")).unwrap_or_default());
            row.push(c.diff().map(|d| format!("{d:.4}")).unwrap_or_default());
        }
        w.write_record(&row).map_err(io_err)?;
    }
    w.flush()
}

pub fn table_csv(cells: &[TableCell], compare: bool) -> String {
    let mut buf = Vec::new();
    write_table_csv(cells, compare, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

/// Tables as `{"T1": [...], "T2": [...]}`; with `compare`, each cell carries
/// `reference` and `abs_diff`, and each table a `max_abs_diff`.
pub fn tables_json(tables: &[Vec<TableCell>], compare: bool) -> Value {
    let mut out = serde_json::Map::new();
    for cells in tables {
        let Some(first) = cells.first() else { continue };
        let rows: Vec<Value> = cells
            .iter()
            .map(|c| {
                let mut o = json!({ "nu": c.nu, "x": c.x, "rel_err": c.rel_err });
                if compare {
                    o["reference"] = json!(c.reference);
                    o["abs_diff"] = json!(c.diff());
                }
                o
            })
            .collect();
        let mut t = json!({ "cells": rows });
        if compare {
            let max = cells.iter().filter_map(TableCell::diff).fold(0.0, f64::max);
            t["max_abs_diff"] = json!(max);
        }
        out.insert(first.table.to_string(), t);
    }
    Value::Object(out)
}

/// Pretty JSON followed by a newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serialises");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{eval_case, Params};

    #[test]
    fn csv_uses_lf() {
        let r = eval_case("nasell", &Params::new(1.0, 0.0, 0.0, 2.0)).unwrap();
        let s = records_csv(&[r]);
        assert!(!s.contains('\r'));
        assert!(s.starts_with("id,nu,beta,n,x,lhs,rhs,rel_margin\nnasell,1,0,0,2,"));
    }

    #[test]
    fn number_formats_round_trip() {
        assert_eq!(num(0.25), "0.25");
        assert_eq!(num(7.5e-15), "7.5e-15");
        assert_eq!(num(0.0), "0");
        for v in [1.234e-300, 0.1 + 0.2, 3.0e20, -4.5e-7] {
            assert_eq!(num(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(scaled_num(ScaledReal::exp(1000.0)).split_once('e').unwrap().1, "434");
    }

    #[test]
    fn json_keys_sorted() {
        let v = json!({"b": 1, "a": 2});
        assert!(to_json_string(&v).find("\"a\"").unwrap() < to_json_string(&v).find("\"b\"").unwrap());
    }
}
