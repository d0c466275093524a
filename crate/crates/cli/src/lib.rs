//! Surface language for the mltt kernel: parser, name resolution to de
//! Bruijn indices, pretty-printer, diagnostics and the command-line driver.
//!
//! The core calculus lives in `mltt-core`; this crate only translates
//! between text and kernel terms. Definitions are transparent abbreviations
//! inlined during resolution, so the kernel sees nothing but closed terms.

pub mod cli;
pub mod diagnostics;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod resolve;
pub mod surface;

pub use cli::{check_source, run};
pub use diagnostics::{Diagnostic, DiagnosticKind, Severity};
pub use parser::{parse_file, parse_term};
pub use printer::print;
pub use resolve::{resolve, resolve_file, Defs, ResolvedDef};
pub use surface::{Definition, Span, SurfaceKind, SurfaceTerm};
