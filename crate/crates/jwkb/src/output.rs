//! In-memory result tables and their CSV form.
//!
//! Reals are written with 17 significant digits (`{:.16e}`), so a value read
//! back is the value computed. Missing values are empty fields.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::pipeline::RowError;

/// One CSV field.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Integer.
    Int(i64),
    /// Real, full precision.
    Real(f64),
    /// Free text.
    Text(String),
    /// Not available.
    Missing,
}

impl Cell {
    /// `Real` when present, `Missing` otherwise.
    pub fn opt(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Real)
    }

    /// Index cell.
    pub fn index(m: usize) -> Self {
        Cell::Int(m as i64)
    }

    /// Numeric value, if any.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Int(v) => Some(*v as f64),
            Cell::Real(v) => Some(*v),
            _ => None,
        }
    }

    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format!("{v:.16e}"),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }
}

/// Header plus rows, with the diagnostics of rows that failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// File stem.
    pub name: String,
    /// Column names.
    pub columns: Vec<String>,
    /// Rows, each as long as `columns`.
    pub rows: Vec<Vec<Cell>>,
    /// Failed pipeline rows.
    pub failures: Vec<RowError>,
}

/// Status text of a successful row.
pub const OK: &str = "ok";

impl Table {
    /// Empty table.
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            failures: Vec::new(),
        }
    }

    /// Appends a row.
    ///
    /// # Panics
    /// When the row length differs from the header.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width of {}", self.name);
        self.rows.push(row);
    }

    /// Appends a row of missing values with the failure in the `status`
    /// column (and the index in `m` when there is one).
    pub fn push_failure(&mut self, err: RowError) {
        let row = self
            .columns
            .iter()
            .map(|c| match c.as_str() {
                "m" => Cell::index(err.m),
                "status" => Cell::Text(err.to_string()),
                _ => Cell::Missing,
            })
            .collect();
        self.rows.push(row);
        self.failures.push(err);
    }

    /// Position of a column.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Numeric value at `(row, column)`.
    pub fn value(&self, row: usize, name: &str) -> Option<f64> {
        self.rows.get(row)?.get(self.column(name)?)?.as_f64()
    }

    /// First row whose `m` column equals `m`.
    pub fn row_of(&self, m: usize) -> Option<usize> {
        let col = self.column("m")?;
        self.rows.iter().position(|r| r[col] == Cell::index(m))
    }

    /// CSV text.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    /// Writes `<dir>/<name>.csv`, creating `dir` if needed.
    pub fn write(&self, dir: &Path) -> io::Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}.csv", self.name));
        fs::write(&path, self.to_csv())?;
        Ok(path)
    }
}
