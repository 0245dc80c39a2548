//! The report printed by every inspecting subcommand: a command echo, the
//! semantic inputs (never file paths, so piped and file-based invocations
//! produce identical output), a list of keyed results, and a verdict.
//!
//! The same structure renders as aligned text tables or as JSON (`--json`);
//! both carry identical numeric content, and the JSON form round-trips
//! through serde.

use serde::{Deserialize, Serialize};

/// A result value: scalars, sequences, or a labeled table. Rationals are
/// carried as reduced `p/q` strings (`p` when q = 1) — never decimals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    Seq(Vec<Value>),
    Table { header: Vec<String>, rows: Vec<Vec<Value>> },
}

impl Value {
    pub fn rational(x: &graphgeom::Rational) -> Value {
        Value::Text(graphgeom::format_rational(x))
    }

    pub fn nat(x: usize) -> Value {
        Value::Int(x as i64)
    }

    pub fn nat_seq(xs: &[usize]) -> Value {
        Value::Seq(xs.iter().map(|&x| Value::nat(x)).collect())
    }

    fn render_inline(&self) -> String {
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Int(i) => i.to_string(),
            Value::Text(t) => t.clone(),
            Value::Seq(items) => {
                let inner: Vec<String> = items.iter().map(Value::render_inline).collect();
                format!("[{}]", inner.join(", "))
            }
            Value::Table { .. } => "<table>".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Verdict {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// The exit code this verdict dictates: failed verification is 1.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Fail => 1,
            Verdict::Pass | Verdict::NotApplicable => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Semantic echoes of the inputs (orders, seeds, levels) — no paths.
    pub inputs: Vec<Entry>,
    pub results: Vec<Entry>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            results: Vec::new(),
            verdict: Verdict::NotApplicable,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.push(Entry { key: key.into(), value: Value::Text(value.into()) });
        self
    }

    pub fn result(&mut self, key: &str, value: Value) -> &mut Self {
        self.results.push(Entry { key: key.into(), value });
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
            out.push('\n');
            out
        } else {
            self.render_text()
        }
    }

    fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for entry in &self.inputs {
            out.push_str(&format!("input {}: {}\n", entry.key, entry.value.render_inline()));
        }
        for entry in &self.results {
            match &entry.value {
                Value::Table { header, rows } => {
                    out.push_str(&format!("{}:\n", entry.key));
                    render_table(&mut out, header, rows);
                }
                other => {
                    out.push_str(&format!("{}: {}\n", entry.key, other.render_inline()));
                }
            }
        }
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        };
        out.push_str(&format!("verdict: {verdict}\n"));
        out
    }
}

fn render_table(out: &mut String, header: &[String], rows: &[Vec<Value>]) {
    let mut cells: Vec<Vec<String>> = vec![header.to_vec()];
    cells.extend(rows.iter().map(|row| row.iter().map(Value::render_inline).collect()));
    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let width = |c: usize| cells.iter().filter_map(|row| row.get(c)).map(String::len).max();
    let widths: Vec<usize> = (0..columns).map(|c| width(c).unwrap_or(0)).collect();
    for row in &cells {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            line.push_str(&format!("  {cell:<w$}", w = widths[c]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("curvature");
        r.input("graph", "order 3, size 3");
        r.result(
            "curvature",
            Value::Table {
                header: vec!["vertex".into(), "K".into()],
                rows: vec![
                    vec![Value::Int(0), Value::Text("1/3".into())],
                    vec![Value::Int(1), Value::Text("1/3".into())],
                    vec![Value::Int(2), Value::Text("1/3".into())],
                ],
            },
        );
        r.result("total", Value::Text("1".into()));
        r.result("euler_characteristic", Value::Int(1));
        r.verdict = Verdict::Pass;
        r
    }

    #[test]
    fn json_round_trips() {
        let report = sample();
        let json = report.render(true);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.render(true), json);
    }

    #[test]
    fn text_and_json_share_numeric_content() {
        let report = sample();
        let text = report.render(false);
        let json = report.render(true);
        for token in ["1/3", "curvature", "pass", "order 3, size 3"] {
            assert!(text.contains(token), "text misses {token}: {text}");
            assert!(json.contains(token), "json misses {token}");
        }
        assert!(text.contains("vertex"));
        assert!(text.ends_with("verdict: pass\n"));
    }

    #[test]
    fn tables_align_columns() {
        let mut r = Report::new("demo");
        r.result(
            "t",
            Value::Table {
                header: vec!["a".into(), "long".into()],
                rows: vec![vec![Value::Int(100), Value::Int(1)]],
            },
        );
        let text = r.render(false);
        assert!(text.contains("  a    long\n  100  1\n"), "unaligned: {text:?}");
    }

    #[test]
    fn verdict_exit_codes() {
        assert_eq!(Verdict::Pass.exit_code(), 0);
        assert_eq!(Verdict::NotApplicable.exit_code(), 0);
        assert_eq!(Verdict::Fail.exit_code(), 1);
        assert_eq!(Verdict::from_pass(false), Verdict::Fail);
    }
}
