use std::fmt;

/// Failure classes map straight to exit codes so CI and scripts can tell
/// a malformed file (2) from an inconsistent one (3) from a task that
/// could not run (4).
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Validation(String),
    Task(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Task(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Validation(m) => write!(f, "validation error: {m}"),
            CliError::Task(m) => write!(f, "task error: {m}"),
        }
    }
}
