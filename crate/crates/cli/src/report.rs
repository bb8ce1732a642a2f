use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;

use crate::Global;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Invalid,
    OracleFailed,
}

impl Status {
    fn exit_code(self) -> ExitCode {
        match self {
            Status::Ok => ExitCode::SUCCESS,
            Status::Invalid => ExitCode::from(1),
            Status::OracleFailed => ExitCode::from(2),
        }
    }
}

/// What a command produced, before rendering.
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub status: Status,
    pub result: Value,
    pub cases_checked: usize,
    pub failures: Vec<Value>,
    /// Human-readable rendering.
    pub text: String,
}

impl Outcome {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Outcome {
            command,
            inputs,
            status: Status::Ok,
            result: Value::Null,
            cases_checked: 0,
            failures: Vec::new(),
            text: String::new(),
        }
    }

    /// An invalid-input outcome naming the violated invariant.
    pub fn invalid(command: &'static str, inputs: Value, err: &grpact::Error) -> Self {
        let mut o = Outcome::new(command, inputs);
        o.status = Status::Invalid;
        o.result = serde_json::json!({ "error": err.kind(), "message": err.to_string() });
        o.text = format!("invalid: {}: {err}\n", err.kind());
        o
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    status: Status,
    inputs: &'a Value,
    result: &'a Value,
    cases_checked: usize,
    failures: &'a [Value],
    wall_time_ms: Option<u64>,
}

pub fn emit(global: &Global, outcome: Outcome, wall_time_ms: Option<u64>) -> std::io::Result<ExitCode> {
    let body = if global.json {
        let env = Envelope {
            command: outcome.command,
            status: outcome.status,
            inputs: &outcome.inputs,
            result: &outcome.result,
            cases_checked: outcome.cases_checked,
            failures: &outcome.failures,
            wall_time_ms,
        };
        serde_json::to_string_pretty(&env).expect("report serializes") + "\n"
    } else {
        let mut text = outcome.text.clone();
        if let Some(ms) = wall_time_ms {
            text.push_str(&format!("wall time: {ms} ms\n"));
        }
        text
    };
    match &global.output {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(outcome.status.exit_code())
}
