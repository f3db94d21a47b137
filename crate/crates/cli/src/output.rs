//! Results of a subcommand, printed as literals or as one JSON record.

use std::process::ExitCode;

use fdds::{Fdds, TraceStep};
use serde::Serialize;

#[derive(Serialize)]
pub struct Step {
    depth: u32,
    term: u32,
    accepted: bool,
}

impl From<&TraceStep> for Step {
    fn from(s: &TraceStep) -> Self {
        Step {
            depth: s.depth,
            term: s.term,
            accepted: s.accepted,
        }
    }
}

/// `value` is a single literal, a list of literals, or absent.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Value {
    One(String),
    Many(Vec<String>),
}

#[derive(Serialize)]
pub struct Report {
    pub status: &'static str,
    pub value: Option<Value>,
    pub trace: Vec<Step>,
    /// Explanation printed in text mode when there is no value.
    #[serde(skip)]
    pub message: Option<String>,
    #[serde(skip)]
    pub success: bool,
    /// Systems written by `--dot`, with graph names.
    #[serde(skip)]
    pub graphs: Vec<(String, Fdds)>,
}

impl Report {
    pub fn ok(value: Value) -> Report {
        Report {
            status: "ok",
            value: Some(value),
            trace: Vec::new(),
            message: None,
            success: true,
            graphs: Vec::new(),
        }
    }

    pub fn with_graph(mut self, name: &str, x: &Fdds) -> Report {
        self.graphs.push((name.to_string(), x.clone()));
        self
    }

    pub fn boolean(value: bool, message: String) -> Report {
        Report {
            status: if value { "true" } else { "false" },
            value: None,
            trace: Vec::new(),
            message: Some(message),
            success: value,
            graphs: Vec::new(),
        }
    }

    pub fn solved(value: Option<String>, trace: &[TraceStep]) -> Report {
        let success = value.is_some();
        Report {
            status: if success { "solution" } else { "no_solution" },
            message: (!success).then(|| "no solution".to_string()),
            value: value.map(Value::One),
            trace: trace.iter().map(Step::from).collect(),
            success,
            graphs: Vec::new(),
        }
    }

    pub fn print(&self, json: bool) -> ExitCode {
        if json {
            println!("{}", serde_json::to_string(self).expect("reports serialize"));
        } else {
            match &self.value {
                Some(Value::One(v)) => println!("{v}"),
                Some(Value::Many(vs)) => vs.iter().for_each(|v| println!("{v}")),
                None => {}
            }
            if let Some(m) = &self.message {
                println!("{m}");
            }
        }
        self.exit_code()
    }

    pub fn exit_code(&self) -> ExitCode {
        if self.success {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }

    pub fn dot(&self) -> Option<String> {
        if self.graphs.is_empty() {
            return None;
        }
        Some(
            self.graphs
                .iter()
                .map(|(name, x)| x.to_dot(name))
                .collect::<Vec<_>>()
                .join("\n"),
        )
    }
}
