//! Rendering of command results as JSON, CSV or an aligned text table.
//!
//! Classification rows use the fixed CSV header [`ROW_HEADER`], one line per
//! K-orbit. JSON output is pretty-printed with a trailing newline.

use nilorbit::unipotent::ClassificationRow;
use serde_json::Value;

use crate::config::Format;

pub const ROW_HEADER: [&str; 7] = [
    "form",
    "parity",
    "orbit_columns",
    "inf_char",
    "k_orbit_diagram",
    "|A_X|",
    "total",
];

/// Result of a command: a JSON value plus the same data as a flat table.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Rendered {
    pub fn new(json: Value, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        Rendered {
            json,
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => to_csv(&self.headers, &self.rows),
            Format::Table => to_table(&self.headers, &self.rows),
        }
    }
}

fn to_csv(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn to_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers);
    out.push_str(&line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>()));
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

/// One table line per K-orbit; rows without K-orbits keep a line with empty
/// diagram cells.
pub fn row_cells(row: &ClassificationRow) -> Vec<Vec<String>> {
    let head = [
        row.form.to_string(),
        row.parity.to_string(),
        row.orbit.columns.to_string(),
        row.inf_char.to_string(),
    ];
    let total = row.total.to_string();
    if row.k_orbits.is_empty() {
        let mut r = head.to_vec();
        r.extend([String::new(), String::new(), total]);
        return vec![r];
    }
    row.k_orbits
        .iter()
        .map(|(k, a)| {
            let mut r = head.to_vec();
            r.extend([k.diagram.to_string(), a.to_string(), total.clone()]);
            r
        })
        .collect()
}

pub fn export_rows(rows: &[ClassificationRow], format: Format) -> String {
    rows_rendered(rows).render(format)
}

pub fn rows_rendered(rows: &[ClassificationRow]) -> Rendered {
    let json = serde_json::to_value(rows).expect("rows serialize");
    Rendered::new(json, &ROW_HEADER, rows.iter().flat_map(row_cells).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use nilorbit::unipotent::classify;

    #[test]
    fn empty_csv_is_header_only() {
        assert_eq!(
            export_rows(&[], Format::Csv),
            "form,parity,orbit_columns,inf_char,k_orbit_diagram,|A_X|,total\n"
        );
        assert_eq!(export_rows(&[], Format::Json), "[]\n");
    }

    #[test]
    fn single_row_json_schema() {
        let rows = classify(&"Sp(2,R)".parse().unwrap(), 1);
        assert_eq!(rows.len(), 1);
        let v: Value = serde_json::from_str(&export_rows(&rows, Format::Json)).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 1);
        let keys: Vec<&str> = arr[0].as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["form", "genuine", "inf_char", "k_orbits", "orbit", "parity", "total"]);
        assert_eq!(arr[0]["total"], 4);
    }

    #[test]
    fn table_alignment() {
        let t = to_table(
            &["a".into(), "bbb".into()],
            &[vec!["xxxx".into(), "y".into()]],
        );
        assert_eq!(t, "a     bbb\n----  ---\nxxxx  y\n");
    }
}
