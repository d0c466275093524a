//! Failure modes shared by every kernel routine.

use crate::syntax::Term;
use std::fmt;
use thiserror::Error;

/// Outcome of a kernel routine: a payload, a typed error, fuel exhaustion,
/// or an ill-formed input that a well-typed caller could never produce.
pub type CheckResult<T> = Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // Boxed so the error variant stays pointer-sized: kernel routines return
    // this on every call, and the payload carries whole terms.
    #[error("{0}")]
    Type(Box<TypeError>),
    /// The shared step budget ran out before the routine finished.
    #[error("out of fuel")]
    OutOfFuel,
    /// A configuration that is unreachable from well-typed inputs, e.g. a
    /// canonical head under an incompatible elimination frame.
    #[error("ill-formed input: {0}")]
    IllFormed(&'static str),
}

impl From<TypeError> for Error {
    fn from(err: TypeError) -> Error {
        Error::Type(Box::new(err))
    }
}

impl Error {
    pub(crate) fn ty(kind: TypeErrorKind) -> Error {
        TypeError {
            kind,
            path: Vec::new(),
        }
        .into()
    }

    /// The type-error payload, when there is one.
    pub fn as_type_error(&self) -> Option<&TypeError> {
        match self {
            Error::Type(te) => Some(te),
            _ => None,
        }
    }
}

/// A type error together with the path of subterm positions it surfaced
/// through. The payload is complete: rendering a message never requires
/// re-running the checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeError {
    pub kind: TypeErrorKind,
    /// Position labels collected while unwinding, innermost first.
    pub path: Vec<&'static str>,
}

impl TypeError {
    /// The offending subterm path from the root of the checked term.
    pub fn path_from_root(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.path.iter().rev().copied()
    }
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if !self.path.is_empty() {
            let path: Vec<_> = self.path_from_root().collect();
            write!(f, " (at {})", path.join("."))?;
        }
        Ok(())
    }
}

impl std::error::Error for TypeError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeErrorKind {
    /// Variable index out of range for the context.
    UnboundVar { index: usize, depth: usize },
    /// The universe is a type but not a term: there is exactly one universe.
    UnivHasNoType,
    /// A term stood where a type was required.
    NotAType { term: Term },
    /// Applied a term whose type does not reduce to a function type.
    ExpectedPi { term: Term, found: Term },
    /// Projected from a term whose type does not reduce to a pair type.
    ExpectedSigma { term: Term, found: Term },
    /// Two types reduce to different head constructors.
    TypeHeadMismatch { left: Term, right: Term },
    /// Two terms disagree at the given type.
    TermMismatch { left: Term, right: Term, ty: Term },
    /// Two neutral spines differ in head variable or shape.
    NeutralMismatch { left: Term, right: Term },
}

impl fmt::Display for TypeErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TypeErrorKind::*;
        match self {
            UnboundVar { index, depth } => {
                write!(f, "unbound variable #{index} in a context of length {depth}")
            }
            UnivHasNoType => write!(f, "Type is not a term: it has no type"),
            NotAType { term } => write!(f, "not a type: {term}"),
            ExpectedPi { term, found } => {
                write!(f, "{term} is applied but has type {found}, not a function type")
            }
            ExpectedSigma { term, found } => {
                write!(f, "{term} is projected but has type {found}, not a pair type")
            }
            TypeHeadMismatch { left, right } => {
                write!(f, "type mismatch: {left} vs {right}")
            }
            TermMismatch { left, right, ty } => {
                write!(f, "terms not convertible at {ty}: {left} vs {right}")
            }
            NeutralMismatch { left, right } => {
                write!(f, "neutral terms differ: {left} vs {right}")
            }
        }
    }
}

/// Extends the error path of a failing premise with the position it was
/// checked at.
pub(crate) trait At {
    fn at(self, label: &'static str) -> Self;
}

impl<T> At for CheckResult<T> {
    fn at(self, label: &'static str) -> Self {
        self.map_err(|err| match err {
            Error::Type(mut te) => {
                te.path.push(label);
                Error::Type(te)
            }
            other => other,
        })
    }
}
