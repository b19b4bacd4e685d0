//! Structured experiment reports with deterministic JSON/CSV/table output.

use serde_json::{Map, Number, Value as Json};
use std::fmt::Write as _;

/// One cell of a report row.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    F(f64),
    I(i64),
    B(bool),
    S(String),
}

impl Cell {
    fn to_json(&self) -> Json {
        match self {
            Cell::F(x) => Number::from_f64(*x)
                .map(Json::Number)
                .unwrap_or(Json::Null),
            Cell::I(i) => Json::Number((*i).into()),
            Cell::B(b) => Json::Bool(*b),
            Cell::S(s) => Json::String(s.clone()),
        }
    }

    /// 17 significant digits for floats; plain rendering otherwise.
    fn to_csv(&self) -> String {
        match self {
            Cell::F(x) => format!("{x:.16e}"),
            Cell::I(i) => i.to_string(),
            Cell::B(b) => b.to_string(),
            Cell::S(s) => s.clone(),
        }
    }

    /// 10 significant digits for the human table.
    fn to_human(&self) -> String {
        match self {
            Cell::F(x) => format!("{x:.9e}"),
            Cell::I(i) => i.to_string(),
            Cell::B(b) => b.to_string(),
            Cell::S(s) => s.clone(),
        }
    }
}

/// Least-squares fit summary.
#[derive(Clone, Debug)]
pub struct FitBlock {
    pub model: String,
    pub c0_hat: f64,
    pub coefficients: Vec<(String, f64)>,
    pub rms_residual: f64,
}

/// Structured sweep output: parameter echo, per-point records, optional fit
/// block, and deterministic metadata.
#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub experiment: String,
    pub params: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub fit: Option<FitBlock>,
    pub meta: Vec<(String, String)>,
}

impl ExperimentReport {
    pub fn new(experiment: &str, columns: Vec<&'static str>) -> Self {
        ExperimentReport {
            experiment: experiment.to_string(),
            params: Vec::new(),
            columns,
            rows: Vec::new(),
            fit: None,
            meta: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push((key.to_string(), value.to_string()));
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row/column mismatch");
        self.rows.push(row);
    }

    /// Column values by name (for tests and assertions).
    pub fn column(&self, name: &str) -> Vec<&Cell> {
        let idx = self
            .columns
            .iter()
            .position(|c| *c == name)
            .unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| &r[idx]).collect()
    }

    pub fn column_f64(&self, name: &str) -> Vec<f64> {
        self.column(name)
            .iter()
            .map(|c| match c {
                Cell::F(x) => *x,
                Cell::I(i) => *i as f64,
                other => panic!("column {name} is not numeric: {other:?}"),
            })
            .collect()
    }

    /// JSON form: `{experiment, params, rows[], fit?, meta}`; key order is
    /// fixed, floats are shortest round-trip decimal literals.
    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert("experiment".into(), Json::String(self.experiment.clone()));
        let mut params = Map::new();
        for (k, v) in &self.params {
            params.insert(k.clone(), Json::String(v.clone()));
        }
        root.insert("params".into(), Json::Object(params));
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|r| {
                let mut obj = Map::new();
                for (c, cell) in self.columns.iter().zip(r) {
                    obj.insert((*c).to_string(), cell.to_json());
                }
                Json::Object(obj)
            })
            .collect();
        root.insert("rows".into(), Json::Array(rows));
        if let Some(fit) = &self.fit {
            let mut obj = Map::new();
            obj.insert("model".into(), Json::String(fit.model.clone()));
            obj.insert(
                "c0_hat".into(),
                Number::from_f64(fit.c0_hat).map(Json::Number).unwrap(),
            );
            for (name, value) in &fit.coefficients {
                obj.insert(
                    name.clone(),
                    Number::from_f64(*value).map(Json::Number).unwrap(),
                );
            }
            obj.insert(
                "rms_residual".into(),
                Number::from_f64(fit.rms_residual)
                    .map(Json::Number)
                    .unwrap(),
            );
            root.insert("fit".into(), Json::Object(obj));
        }
        let mut meta = Map::new();
        for (k, v) in &self.meta {
            meta.insert(k.clone(), Json::String(v.clone()));
        }
        root.insert("meta".into(), Json::Object(meta));
        let mut out = serde_json::to_string_pretty(&Json::Object(root)).expect("serialize");
        out.push('\n');
        out
    }

    /// CSV form: fixed documented column order, LF newlines, C locale.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::to_csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Human-readable table.
    pub fn to_table(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::to_human).collect())
            .collect();
        for row in &rendered {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.experiment);
        for (k, v) in &self.params {
            let _ = writeln!(out, "#   {k} = {v}");
        }
        let header: Vec<String> = self
            .columns
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", header.join("  "));
        for row in &rendered {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  "));
        }
        if let Some(fit) = &self.fit {
            let _ = writeln!(out, "fit: {}", fit.model);
            let _ = writeln!(out, "  c0_hat       = {:.9e}", fit.c0_hat);
            for (name, value) in &fit.coefficients {
                let _ = writeln!(out, "  {name:<12} = {value:.9e}");
            }
            let _ = writeln!(out, "  rms_residual = {:.9e}", fit.rms_residual);
        }
        for (k, v) in &self.meta {
            let _ = writeln!(out, "meta: {k} = {v}");
        }
        out
    }
}
