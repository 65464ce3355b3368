use std::fmt::Write as _;

use regring::lab::{CheckVerdict, SuiteReport};
use regring::{render, Ring};
use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "regring";

#[derive(Debug, Clone, Serialize)]
pub struct RingJson {
    pub kind: String,
    pub size: u64,
    pub semiprime: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub status: String,
    pub witnesses: Vec<WitnessJson>,
    pub note: String,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct SummaryJson {
    pub pass: usize,
    pub violation: usize,
    pub skipped: usize,
}

/// The document every command prints. Commands other than `check` leave
/// `checks` empty and put their payload in `result`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub ring: RingJson,
    pub checks: Vec<CheckJson>,
    pub summary: SummaryJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Report {
    pub fn new(ring: RingJson) -> Report {
        Report {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            ring,
            checks: Vec::new(),
            summary: SummaryJson::default(),
            result: None,
        }
    }

    pub fn from_suite(ring: &Ring, suite: &SuiteReport, semiprime: bool, timing: bool) -> Report {
        let mut report = Report::new(RingJson { kind: suite.kind.to_string(), size: suite.size, semiprime });
        report.checks = suite.checks.iter().map(|c| check_json(ring, c, timing)).collect();
        let s = suite.summary();
        report.summary = SummaryJson { pass: s.pass, violation: s.violation, skipped: s.skipped };
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn check_json(ring: &Ring, c: &CheckVerdict, timing: bool) -> CheckJson {
    let elapsed_ms = if timing { (c.elapsed.as_secs_f64() * 1e6).round() / 1e3 } else { 0.0 };
    CheckJson {
        name: c.name.as_str().to_string(),
        status: c.status.as_str().to_string(),
        witnesses: c.witnesses.iter().map(|w| WitnessJson { name: w.name.clone(), value: render(ring, &w.value) }).collect(),
        note: c.note.clone(),
        elapsed_ms,
    }
}

fn ring_line(ring: &RingJson, description: &str) -> String {
    let semiprime = if ring.semiprime { "semiprime" } else { "not semiprime" };
    format!("ring: {description} ({}, {} elements, {semiprime})", ring.kind, ring.size)
}

pub fn check_text(report: &Report, description: &str, timing: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", report.tool, report.version);
    let _ = writeln!(out, "{}", ring_line(&report.ring, description));
    for c in &report.checks {
        let time = if timing { format!(" {:>10.3} ms", c.elapsed_ms) } else { String::new() };
        let _ = writeln!(out, "{:<18} {:<9}{time}  {}", c.name, c.status, c.note);
        if !c.witnesses.is_empty() {
            let ws: Vec<String> = c.witnesses.iter().map(|w| format!("{} = {}", w.name, w.value)).collect();
            let _ = writeln!(out, "    witnesses: {}", ws.join(", "));
        }
    }
    let s = report.summary;
    let _ = writeln!(out, "summary: {} pass, {} violation, {} skipped", s.pass, s.violation, s.skipped);
    out
}

/// Key-value rendering of a command result.
pub fn result_text(report: &Report, description: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", ring_line(&report.ring, description));
    if let Some(Value::Object(map)) = &report.result {
        for (key, value) in map {
            write_value(&mut out, key, value, 0);
        }
    }
    out
}

fn write_value(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in map {
                write_value(out, k, v, depth + 1);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object()) => {
            let items: Vec<String> = items.iter().map(plain).collect();
            let _ = writeln!(out, "{pad}{key}: {{{}}}", items.join(", "));
        }
        Value::Array(items) if items.iter().all(|v| v.get("elements").is_some()) => {
            for set in items {
                let elements: Vec<String> = set["elements"].as_array().into_iter().flatten().map(plain).collect();
                let more = match set["elided"].as_u64() {
                    Some(n) if n > 0 => format!(", ... {n} more"),
                    _ => String::new(),
                };
                let _ = writeln!(out, "{pad}{} [{}]: {{{}{more}}}", plain(&set["name"]), set["count"], elements.join(", "));
            }
        }
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, v) in items.iter().enumerate() {
                write_value(out, &i.to_string(), v, depth + 1);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {}", plain(other));
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
