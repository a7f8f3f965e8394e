use std::fmt;

/// One broken invariant, with the ids it concerns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
    pub ids: Vec<String>,
}

/// Outcome of a structural check. Violations are data, not failures.
///
/// `notes` carry informational remarks that do not affect validity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, code: &'static str, message: impl Into<String>, ids: Vec<String>) {
        self.violations.push(Violation { code, message: message.into(), ids });
    }

    pub fn note(&mut self, message: impl Into<String>) {
        self.notes.push(message.into());
    }

    pub fn has(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| format!("[{}] {}", v.code, v.message)).collect();
        write!(f, "{}", parts.join("; "))
    }
}
