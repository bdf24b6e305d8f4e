//! Report rendering: the common header, float rounding, and the three
//! output encodings (JSON, CSV, Graphviz DOT).

use std::fmt::Write as _;

use permsym::{Complex64, Limits, TABLEAU_ORDERING};
use serde::Serialize;
use serde_json::{Number, Value};

pub const TOOL: &str = "permsym";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Caps {
    pub group_n: usize,
    pub partition_n: usize,
    pub genealogy_n: usize,
    pub config_dim: usize,
    pub dense_dim: usize,
}

impl From<Limits> for Caps {
    fn from(l: Limits) -> Self {
        Caps {
            group_n: l.group_n,
            partition_n: l.partition_n,
            genealogy_n: l.genealogy_n,
            config_dim: l.config_dim,
            dense_dim: l.dense_dim,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub caps: Caps,
    pub tableau_ordering: &'static str,
}

impl Header {
    pub fn new(command: &'static str, seed: u64, limits: Limits) -> Self {
        Header {
            tool: TOOL,
            version: VERSION,
            command,
            seed,
            caps: limits.into(),
            tableau_ordering: TABLEAU_ORDERING,
        }
    }

    fn lines(&self) -> Vec<String> {
        let c = &self.caps;
        vec![
            format!("tool={}", self.tool),
            format!("version={}", self.version),
            format!("command={}", self.command),
            format!("seed={}", self.seed),
            format!(
                "caps=group_n:{},partition_n:{},genealogy_n:{},config_dim:{},dense_dim:{}",
                c.group_n, c.partition_n, c.genealogy_n, c.config_dim, c.dense_dim
            ),
            format!("tableau_ordering={}", self.tableau_ordering),
        ]
    }
}

/// Rounds to 15 significant digits. Negative zero becomes zero.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Text form of [`sig15`], without exponent for moderate magnitudes.
pub fn fmt_float(x: f64) -> String {
    let r = sig15(x);
    let a = r.abs();
    if r == 0.0 || (1e-5..1e15).contains(&a) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

pub fn complex_pair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            *v = Number::from_f64(sig15(x)).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// A finished report, renderable in any encoding the command supports.
pub struct Report {
    pub header: Header,
    pub passed: bool,
    pub body: Value,
    pub table: Option<Table>,
    pub graph: Option<String>,
}

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new<T: Serialize>(header: Header, passed: bool, body: &T) -> anyhow::Result<Self> {
        Ok(Report {
            header,
            passed,
            body: serde_json::to_value(body)?,
            table: None,
            graph: None,
        })
    }

    pub fn with_table(mut self, columns: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.table = Some(Table { columns, rows });
        self
    }

    pub fn with_graph(mut self, graph: String) -> Self {
        self.graph = Some(graph);
        self
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Dot => self.render_dot(),
        }
    }

    fn render_json(&self) -> anyhow::Result<String> {
        let mut doc = serde_json::Map::new();
        doc.insert("header".into(), serde_json::to_value(&self.header)?);
        doc.insert("passed".into(), Value::Bool(self.passed));
        doc.insert("report".into(), self.body.clone());
        let mut doc = Value::Object(doc);
        round_floats(&mut doc);
        let mut out = serde_json::to_string_pretty(&doc)?;
        out.push('\n');
        Ok(out)
    }

    fn render_csv(&self) -> anyhow::Result<String> {
        let table = self.table.as_ref().ok_or_else(|| {
            anyhow::anyhow!("command `{}` has no csv output", self.header.command)
        })?;
        let mut out = String::new();
        for line in self.header.lines() {
            writeln!(out, "# {line}")?;
        }
        writeln!(out, "# passed={}", self.passed)?;
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&table.columns)?;
        for row in &table.rows {
            w.write_record(row)?;
        }
        out.push_str(std::str::from_utf8(&w.into_inner()?)?);
        Ok(out)
    }

    fn render_dot(&self) -> anyhow::Result<String> {
        let graph = self.graph.as_ref().ok_or_else(|| {
            anyhow::anyhow!("command `{}` has no dot output", self.header.command)
        })?;
        let mut out = String::new();
        for line in self.header.lines() {
            writeln!(out, "// {line}")?;
        }
        out.push_str(graph);
        Ok(out)
    }
}
