use thiserror::Error;

/// Errors raised by the algebra engine and the spec-file front end.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Inconsistent inputs: ring mismatch, unknown generator, bad arity.
    #[error("structural error: {0}")]
    Structural(String),

    /// The rewrite budget ran out while reducing `word`.
    #[error("rewrite budget of {budget} steps exceeded while reducing {word}")]
    Budget { word: String, budget: usize },

    /// A generator or element is not homogeneous for the declared character.
    #[error("grading error: {0}")]
    Grading(String),

    /// Spec-file diagnostics with 1-based line/column positions.
    #[error("{}", format_diagnostics(.0))]
    Parse(Vec<Diagnostic>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    let lines: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
    format!("spec file rejected:\n  {}", lines.join("\n  "))
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}
