use serde_json::{json, Value};

/// What a command prints: a JSON report and its text rendering.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    /// Canonical form of the input, or the inputs for two-input commands.
    pub input: Value,
    pub result: Value,
    pub notes: Vec<String>,
    pub text: String,
    /// The result shows the input is not trivial.
    pub nontrivial: bool,
    /// A check inside the command failed.
    pub failed: bool,
}

impl Report {
    pub fn new(command: &str, input: Value, result: Value, text: String) -> Self {
        Report {
            command: command.to_string(),
            input,
            result,
            notes: Vec::new(),
            text,
            nontrivial: false,
            failed: false,
        }
    }

    pub fn note(mut self, note: &str) -> Self {
        self.notes.push(note.to_string());
        self
    }

    pub fn nontrivial(mut self, yes: bool) -> Self {
        self.nontrivial = yes;
        self
    }

    /// Object keys come out sorted, so parsing and re-serializing the
    /// output reproduces it byte for byte.
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "notes": self.notes,
        })
    }
}

/// JSON for a failed command.
pub fn error_json(command: &str, message: &str) -> Value {
    json!({ "command": command, "error": message })
}
