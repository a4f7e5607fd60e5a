//! Reports: a command echo and an ordered list of checks. The JSON form
//! carries every line of the text form.

use std::fmt::Write;

use exactla::{Mat, Scalar, Subspace, Violation};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unsupported,
}

impl Status {
    pub fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unsupported => "unsupported",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Count(usize),
    Flag(bool),
    Text(String),
    Dims(Vec<usize>),
    Vector(Vec<String>),
    Matrix(Vec<Vec<String>>),
}

impl Value {
    pub fn vector(v: &[Scalar]) -> Value {
        Value::Vector(v.iter().map(Scalar::to_string).collect())
    }

    pub fn matrix(m: &Mat) -> Value {
        Value::Matrix(m.to_rows().iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect())
    }

    /// Basis vectors as rows.
    pub fn basis(s: &Subspace) -> Value {
        Value::Matrix(s.basis_vectors().iter().map(|v| v.iter().map(Scalar::to_string).collect()).collect())
    }

    fn render(&self) -> String {
        let row = |r: &[String]| format!("[{}]", r.join(", "));
        match self {
            Value::Count(n) => n.to_string(),
            Value::Flag(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::Dims(d) => format!("({})", d.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")),
            Value::Vector(v) => row(v),
            Value::Matrix(m) => format!("[{}]", m.iter().map(|r| row(r)).collect::<Vec<_>>().join(", ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub key: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub subject: String,
    pub property: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
}

impl Check {
    pub fn new(subject: impl Into<String>, property: impl Into<String>, status: Status) -> Check {
        Check { subject: subject.into(), property: property.into(), status, facts: Vec::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: Value) -> Check {
        self.facts.push(Fact { key: key.into(), value });
        self
    }

    pub fn count(self, key: impl Into<String>, n: usize) -> Check {
        self.with(key, Value::Count(n))
    }

    pub fn flag(self, key: impl Into<String>, b: bool) -> Check {
        self.with(key, Value::Flag(b))
    }

    pub fn text(self, key: impl Into<String>, s: impl Into<String>) -> Check {
        self.with(key, Value::Text(s.into()))
    }

    /// Passes when there are no violations; each one becomes a witness.
    pub fn from_violations(subject: impl Into<String>, property: impl Into<String>, v: &[Violation]) -> Check {
        v.iter().fold(Check::new(subject, property, Status::of(v.is_empty())), |c, v| {
            c.with(format!("witness: {}", v.law), Value::vector(&v.witness))
        })
    }

    pub fn unsupported(subject: impl Into<String>, property: impl Into<String>, reason: impl std::fmt::Display) -> Check {
        Check::new(subject, property, Status::Unsupported).text("reason", reason.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report { command: command.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    /// 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().all(|c| c.status == Status::Pass) {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for c in &self.checks {
            writeln!(out, "[{}] {}: {}", c.status.label(), c.subject, c.property).unwrap();
            for f in &c.facts {
                writeln!(out, "    {} = {}", f.key, f.value.render()).unwrap();
            }
        }
        writeln!(
            out,
            "summary: {} pass, {} fail, {} unsupported",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Unsupported)
        )
        .unwrap();
        out
    }
}
