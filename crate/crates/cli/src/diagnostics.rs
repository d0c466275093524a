//! Human- and machine-readable error reports. Every failing CLI run emits
//! exactly one primary diagnostic, whose kind determines the exit code.

use crate::surface::Span;
use mltt_core::Error;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
}

/// The failure phase: parsing (including name resolution), type checking,
/// fuel exhaustion, or an internal ill-formedness the kernel flagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Parse,
    Type,
    Fuel,
    Internal,
}

impl DiagnosticKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticKind::Parse => "parse",
            DiagnosticKind::Type => "type",
            DiagnosticKind::Fuel => "fuel",
            DiagnosticKind::Internal => "internal",
        }
    }

    /// Process exit code: 1 type error, 2 parse error, 3 out of fuel,
    /// 4 internal ill-formedness. Success is 0.
    pub fn exit_code(self) -> i32 {
        match self {
            DiagnosticKind::Type => 1,
            DiagnosticKind::Parse => 2,
            DiagnosticKind::Fuel => 3,
            DiagnosticKind::Internal => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub message: String,
    pub span: Span,
}

impl Diagnostic {
    pub fn new(kind: DiagnosticKind, message: impl Into<String>, span: Span) -> Diagnostic {
        Diagnostic {
            severity: Severity::Error,
            kind,
            message: message.into(),
            span,
        }
    }

    pub fn parse(message: impl Into<String>, span: Span) -> Diagnostic {
        Diagnostic::new(DiagnosticKind::Parse, message, span)
    }

    /// Wraps a kernel error. The kernel works on span-free de Bruijn terms,
    /// so the caller supplies the span of the phrase it was checking.
    pub fn from_core(err: &Error, span: Span) -> Diagnostic {
        match err {
            Error::Type(te) => Diagnostic::new(DiagnosticKind::Type, te.to_string(), span),
            Error::OutOfFuel => Diagnostic::new(
                DiagnosticKind::Fuel,
                "out of fuel; rerun with a larger --fuel budget",
                span,
            ),
            Error::IllFormed(reason) => Diagnostic::new(
                DiagnosticKind::Internal,
                format!("internal ill-formed state: {reason}"),
                span,
            ),
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.kind.exit_code()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.as_str(),
            "message": self.message,
            "span": { "start": self.span.start, "end": self.span.end },
            "exit": self.exit_code(),
        })
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "error[{}] at {}..{}: {}",
            self.kind.as_str(),
            self.span.start,
            self.span.end,
            self.message
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_matches_the_schema() {
        let d = Diagnostic::parse("unexpected token", Span::new(3, 5));
        let json = d.to_json();
        assert_eq!(json["kind"], "parse");
        assert_eq!(json["span"]["start"], 3);
        assert_eq!(json["span"]["end"], 5);
        assert_eq!(json["exit"], 2);
        assert!(json["message"].is_string());
    }

    #[test]
    fn exit_codes_by_kind() {
        assert_eq!(DiagnosticKind::Type.exit_code(), 1);
        assert_eq!(DiagnosticKind::Parse.exit_code(), 2);
        assert_eq!(DiagnosticKind::Fuel.exit_code(), 3);
        assert_eq!(DiagnosticKind::Internal.exit_code(), 4);
    }
}
