use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use scrollar_core::scalar::format_rational;
use scrollar_core::BigRational;

/// Largest integer a JSON number carries without loss in a double.
pub const SAFE_INTEGER: u128 = (1 << 53) - 1;

/// One table cell. Integers outside the 53-bit range and all rationals are
/// carried as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Bool(bool),
    Int(i64),
    Text(String),
}

impl Cell {
    pub fn uint(n: u128) -> Self {
        if n <= SAFE_INTEGER {
            Cell::Int(n as i64)
        } else {
            Cell::Text(n.to_string())
        }
    }

    pub fn int(n: i64) -> Self {
        if n.unsigned_abs() as u128 <= SAFE_INTEGER {
            Cell::Int(n)
        } else {
            Cell::Text(n.to_string())
        }
    }

    pub fn rational(q: &BigRational) -> Self {
        Cell::Text(format_rational(q))
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    /// The form written to csv and markdown.
    pub fn render(&self) -> String {
        match self {
            Cell::Bool(b) => b.to_string(),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::uint(n as u128)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::uint(n as u128)
    }
}

impl From<u128> for Cell {
    fn from(n: u128) -> Self {
        Cell::uint(n)
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Self {
        Cell::int(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Table { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// A two-column `field`/`value` table.
    pub fn fields(name: impl Into<String>, pairs: Vec<(&str, Cell)>) -> Self {
        let mut t = Table::new(name, &["field", "value"]);
        for (k, v) in pairs {
            t.push(vec![Cell::text(k), v]);
        }
        t
    }
}

/// Everything a command prints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub tables: Vec<Table>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), tables: Vec::new() }
    }

    pub fn with(mut self, t: Table) -> Self {
        self.tables.push(t);
        self
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Csv => self.to_csv(),
            Format::Md => self.to_markdown(),
        }
    }

    /// Tables separated by `# name` lines.
    fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, t) in self.tables.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            writeln!(out, "# {}", t.name).unwrap();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&t.columns).expect("in-memory csv");
            for r in &t.rows {
                w.write_record(r.iter().map(Cell::render)).expect("in-memory csv");
            }
            out.push_str(&String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8"));
        }
        out
    }

    fn to_markdown(&self) -> String {
        let mut out = format!("# {}\n", self.command);
        for t in &self.tables {
            writeln!(out, "\n## {}\n", t.name).unwrap();
            writeln!(out, "| {} |", t.columns.join(" | ")).unwrap();
            writeln!(out, "|{}", t.columns.iter().map(|_| "---|").collect::<String>()).unwrap();
            for r in &t.rows {
                let cells: Vec<String> = r.iter().map(|c| c.render().replace('|', "\\|")).collect();
                writeln!(out, "| {} |", cells.join(" | ")).unwrap();
            }
        }
        out
    }
}

/// Parses the csv rendering back into `(table name, header, rows)`.
pub fn parse_csv(s: &str) -> Vec<(String, Vec<String>, Vec<Vec<String>>)> {
    let mut out = Vec::new();
    for block in s.split("\n# ").map(|b| b.trim_start_matches("# ")) {
        let Some((name, body)) = block.split_once('\n') else {
            continue;
        };
        let mut r = csv::Reader::from_reader(body.as_bytes());
        let header = r.headers().expect("csv header").iter().map(str::to_string).collect();
        let rows = r.records().map(|rec| rec.expect("csv row").iter().map(str::to_string).collect()).collect();
        out.push((name.to_string(), header, rows));
    }
    out
}
