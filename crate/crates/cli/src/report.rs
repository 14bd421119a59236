//! Reports and their text, CSV and JSON renderings.

use std::io::Write;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::json_int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    /// `None` writes bare rows.
    pub header: Option<Vec<String>>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn with_header<S: Into<String>>(cols: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: Some(cols.into_iter().map(Into::into).collect()),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// One command result. Field order is insertion order, which keeps the JSON
/// byte-stable.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub formula: &'static str,
    fields: Map<String, Value>,
    provenance: Map<String, Value>,
    pub flags: Vec<String>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
    pub table: Option<Table>,
    /// Print the table in text output too.
    pub text_table: bool,
}

impl Report {
    pub fn new(command: &'static str, formula: &'static str) -> Self {
        Report {
            command,
            formula,
            fields: Map::new(),
            provenance: Map::new(),
            flags: Vec::new(),
            warnings: Vec::new(),
            notes: Vec::new(),
            table: None,
            text_table: true,
        }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn int(&mut self, key: &str, value: &BigInt) -> &mut Self {
        self.field(key, json_int::to_value(value))
    }

    pub fn ints(&mut self, key: &str, values: &[BigInt]) -> &mut Self {
        self.field(key, ints_value(values))
    }

    pub fn source(&mut self, key: &str, origin: &str) -> &mut Self {
        self.provenance
            .insert(key.to_string(), Value::String(origin.to_string()));
        self
    }

    pub fn flag(&mut self, flag: impl Into<String>) -> &mut Self {
        self.flags.push(flag.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), Value::String(self.command.into()));
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.clone());
        }
        obj.insert("formula".into(), Value::String(self.formula.into()));
        obj.insert("provenance".into(), Value::Object(self.provenance.clone()));
        obj.insert("flags".into(), strings_value(&self.flags));
        obj.insert("warnings".into(), strings_value(&self.warnings));
        Value::Object(obj)
    }

    pub fn render(&self, format: Format, w: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *w, &self.to_json())?;
                writeln!(w)
            }
            Format::Csv => self.render_csv(w),
            Format::Text => self.render_text(w),
        }
    }

    fn render_text(&self, w: &mut dyn Write) -> std::io::Result<()> {
        writeln!(w, "{} [{}]", self.command, self.formula)?;
        for (k, v) in &self.fields {
            writeln!(w, "  {k} = {}", plain(v))?;
        }
        for line in &self.notes {
            writeln!(w, "{line}")?;
        }
        if let Some(table) = self.table.as_ref().filter(|_| self.text_table) {
            if let Some(h) = &table.header {
                writeln!(w, "  {}", h.join("\t"))?;
            }
            for row in &table.rows {
                writeln!(w, "  {}", row.join("\t"))?;
            }
        }
        for (k, v) in &self.provenance {
            writeln!(w, "  {k}: {}", plain(v))?;
        }
        for f in &self.flags {
            writeln!(w, "flag: {f}")?;
        }
        for m in &self.warnings {
            writeln!(w, "warning: {m}")?;
        }
        Ok(())
    }

    fn render_csv(&self, w: &mut dyn Write) -> std::io::Result<()> {
        let table = match &self.table {
            Some(t) => t.clone(),
            None => self.scalar_table(),
        };
        let mut out = csv::WriterBuilder::new()
            .flexible(true)
            .has_headers(false)
            .from_writer(w);
        if let Some(h) = &table.header {
            out.write_record(h)?;
        }
        for row in &table.rows {
            out.write_record(row)?;
        }
        out.flush()
    }

    /// One header row of field names and one row of values.
    fn scalar_table(&self) -> Table {
        let mut t = Table::with_header(self.fields.keys().cloned());
        t.push(self.fields.values().map(plain).collect());
        t
    }
}

/// Strings without quotes, everything else as compact JSON.
pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn ints_value(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(json_int::to_value).collect())
}

fn strings_value(values: &[String]) -> Value {
    Value::Array(values.iter().cloned().map(Value::String).collect())
}
