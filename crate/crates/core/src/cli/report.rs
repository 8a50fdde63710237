use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One checked item. All values are exact strings: integers in decimal,
/// rationals as `p/q`, intervals as `[p/q, p'/q']`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub check: String,
    pub inputs: Vec<(String, String)>,
    pub outputs: Vec<(String, String)>,
    pub status: Status,
    pub note: Option<String>,
}

impl Row {
    pub fn new(check: &str, status: Status) -> Self {
        Self {
            check: check.to_string(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            status,
            note: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn output(mut self, key: &str, value: impl ToString) -> Self {
        self.outputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn input_value(&self, key: &str) -> Option<&str> {
        lookup(&self.inputs, key)
    }

    pub fn output_value(&self, key: &str) -> Option<&str> {
        lookup(&self.outputs, key)
    }
}

fn lookup<'a>(pairs: &'a [(String, String)], key: &str) -> Option<&'a str> {
    pairs
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, params: Vec<(String, String)>) -> Self {
        Self {
            command: command.to_string(),
            params,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
        self.notes.extend(other.notes);
    }

    pub fn rows_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a Row> + 'a {
        self.rows.iter().filter(move |r| r.check == check)
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.rows.len(),
            ..Summary::default()
        };
        for row in &self.rows {
            match row.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }

    /// 0 when every row passed; inconclusive rows count as not passing.
    pub fn exit_code(&self) -> i32 {
        let s = self.summary();
        if s.fail == 0 && s.inconclusive == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let s = self.summary();
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                obj.insert("check".into(), Value::String(row.check.clone()));
                obj.insert("inputs".into(), pairs_to_object(&row.inputs));
                obj.insert("outputs".into(), pairs_to_object(&row.outputs));
                obj.insert("status".into(), Value::String(row.status.as_str().into()));
                if let Some(note) = &row.note {
                    obj.insert("note".into(), Value::String(note.clone()));
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "command": self.command,
            "params": pairs_to_object(&self.params),
            "results": results,
            "summary": {
                "total": s.total,
                "pass": s.pass,
                "fail": s.fail,
                "inconclusive": s.inconclusive,
                "notes": self.notes,
            },
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let io = |e: csv::Error| Error::Usage(format!("csv output failed: {e}"));
        writer
            .write_record(["check", "inputs", "outputs", "status", "note"])
            .map_err(io)?;
        for row in &self.rows {
            writer
                .write_record([
                    row.check.as_str(),
                    &join_pairs(&row.inputs),
                    &join_pairs(&row.outputs),
                    row.status.as_str(),
                    row.note.as_deref().unwrap_or(""),
                ])
                .map_err(io)?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| Error::Usage(format!("csv output failed: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if !self.params.is_empty() {
            writeln!(out, "params: {}", join_pairs_spaced(&self.params)).unwrap();
        }
        for row in &self.rows {
            write!(
                out,
                "[{}] {}",
                row.status.as_str().to_uppercase(),
                row.check
            )
            .unwrap();
            if !row.inputs.is_empty() {
                write!(out, " {}", join_pairs_spaced(&row.inputs)).unwrap();
            }
            if !row.outputs.is_empty() {
                write!(out, " -> {}", join_pairs_spaced(&row.outputs)).unwrap();
            }
            if let Some(note) = &row.note {
                write!(out, " ({note})").unwrap();
            }
            out.push('\n');
        }
        let s = self.summary();
        writeln!(
            out,
            "summary: total={} pass={} fail={} inconclusive={}",
            s.total, s.pass, s.fail, s.inconclusive
        )
        .unwrap();
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        out
    }
}

fn pairs_to_object(pairs: &[(String, String)]) -> Value {
    Value::Object(
        pairs
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect(),
    )
}

fn join_pairs(pairs: &[(String, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn join_pairs_spaced(pairs: &[(String, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// One `index value` line per term, newline-terminated, no header.
pub fn emit_bfile<T: ToString>(name: &str, values: &[T]) -> Result<String> {
    if name.trim().is_empty() {
        return Err(Error::Usage("b-file needs a nonempty sequence name".into()));
    }
    if values.is_empty() {
        return Err(Error::Usage(format!("sequence {name} has no terms")));
    }
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{i} {}", v.to_string()).unwrap();
    }
    Ok(out)
}
