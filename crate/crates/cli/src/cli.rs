//! Command-line driver: `check`, `infer`, `nf` and `conv` over the kernel.
//!
//! Exit codes: 0 success, 1 type error, 2 parse error, 3 out of fuel,
//! 4 internal ill-formedness.

use crate::diagnostics::Diagnostic;
use crate::parser::{parse_file, parse_term};
use crate::printer::print;
use crate::resolve::{resolve, resolve_file, Defs};
use crate::surface::Span;
use clap::{ArgAction, Parser, Subcommand};
use mltt_core::{
    check, conv_tm, infer, nf_tm, wf_ty, Context, Fuel, Term,
};
use std::path::PathBuf;

const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "mltt", version, about = "Type checker for a small dependent type theory")]
struct Cli {
    /// Machine-step budget shared by reduction, checking and normalization.
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL)]
    fuel: u64,

    /// Render the diagnostic as JSON on stderr instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Type-check a file of definitions, or an expression against a type.
    Check {
        /// File of `def name : ty := body` definitions.
        file: Option<PathBuf>,
        /// Expression to check (requires --type).
        #[arg(short = 'e', long = "expr")]
        expr: Option<String>,
        /// Type to check the expression against.
        #[arg(short = 't', long = "type")]
        ty: Option<String>,
    },
    /// Infer and print the type of an expression.
    Infer {
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// Print the eta-long normal form of an expression.
    Nf {
        #[arg(short = 'e', long = "expr")]
        expr: String,
        /// Normalize at this type instead of the inferred one.
        #[arg(short = 't', long = "type")]
        ty: Option<String>,
    },
    /// Check two expressions for convertibility at a type.
    Conv {
        /// The two expressions to compare (pass -e twice).
        #[arg(short = 'e', long = "expr", action = ArgAction::Append)]
        exprs: Vec<String>,
        #[arg(short = 't', long = "type")]
        ty: String,
    },
}

/// Runs the CLI on the given arguments and returns the process exit code.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own usage message; --help and --version land
            // here too and exit successfully.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let json = cli.json;
    let mut fuel = Fuel::new(cli.fuel);
    match dispatch(cli.cmd, &mut fuel) {
        Ok(output) => {
            if let Some(line) = output {
                println!("{line}");
            }
            0
        }
        Err(diag) => {
            if json {
                eprintln!("{}", diag.to_json());
            } else {
                eprintln!("{diag}");
            }
            diag.exit_code()
        }
    }
}

fn dispatch(cmd: Cmd, fuel: &mut Fuel) -> Result<Option<String>, Diagnostic> {
    match cmd {
        Cmd::Check { file, expr, ty } => match (file, expr, ty) {
            (Some(path), None, None) => {
                check_file(&path, fuel)?;
                Ok(None)
            }
            (None, Some(expr), Some(ty)) => {
                check_expr(&expr, &ty, fuel)?;
                Ok(None)
            }
            _ => Err(Diagnostic::parse(
                "check needs either FILE or both --expr and --type",
                Span::new(0, 0),
            )),
        },
        Cmd::Infer { expr } => {
            let (term, span) = parse_closed(&expr)?;
            let ty = infer(&Context::empty(), &term, fuel)
                .map_err(|e| Diagnostic::from_core(&e, span))?;
            Ok(Some(print(&ty, &[])))
        }
        Cmd::Nf { expr, ty } => {
            let (term, span) = parse_closed(&expr)?;
            let ctx = Context::empty();
            let ty = match ty {
                Some(ty_text) => {
                    let (ty_term, ty_span) = parse_closed(&ty_text)?;
                    wf_ty(&ctx, &ty_term, fuel)
                        .map_err(|e| Diagnostic::from_core(&e, ty_span))?;
                    check(&ctx, &term, &ty_term, fuel)
                        .map_err(|e| Diagnostic::from_core(&e, span))?;
                    ty_term
                }
                None => infer(&ctx, &term, fuel).map_err(|e| Diagnostic::from_core(&e, span))?,
            };
            let nf = nf_tm(&ctx, &term, &ty, fuel).map_err(|e| Diagnostic::from_core(&e, span))?;
            Ok(Some(print(&nf, &[])))
        }
        Cmd::Conv { exprs, ty } => {
            let [left_text, right_text]: [String; 2] = exprs.try_into().map_err(|_| {
                Diagnostic::parse("conv needs exactly two --expr arguments", Span::new(0, 0))
            })?;
            let ctx = Context::empty();
            let (ty_term, ty_span) = parse_closed(&ty)?;
            wf_ty(&ctx, &ty_term, fuel).map_err(|e| Diagnostic::from_core(&e, ty_span))?;
            let (left, left_span) = parse_closed(&left_text)?;
            check(&ctx, &left, &ty_term, fuel)
                .map_err(|e| Diagnostic::from_core(&e, left_span))?;
            let (right, right_span) = parse_closed(&right_text)?;
            check(&ctx, &right, &ty_term, fuel)
                .map_err(|e| Diagnostic::from_core(&e, right_span))?;
            conv_tm(&ctx, &left, &right, &ty_term, fuel)
                .map_err(|e| Diagnostic::from_core(&e, left_span.join(right_span)))?;
            Ok(Some("convertible".to_string()))
        }
    }
}

fn parse_closed(text: &str) -> Result<(Term, Span), Diagnostic> {
    let surface = parse_term(text)?;
    let span = surface.span;
    let term = resolve(&surface, &mut Vec::new(), &Defs::new())?;
    Ok((term, span))
}

fn check_expr(expr: &str, ty: &str, fuel: &mut Fuel) -> Result<(), Diagnostic> {
    let ctx = Context::empty();
    let (ty_term, ty_span) = parse_closed(ty)?;
    wf_ty(&ctx, &ty_term, fuel).map_err(|e| Diagnostic::from_core(&e, ty_span))?;
    let (term, span) = parse_closed(expr)?;
    check(&ctx, &term, &ty_term, fuel).map_err(|e| Diagnostic::from_core(&e, span))
}

fn check_file(path: &PathBuf, fuel: &mut Fuel) -> Result<(), Diagnostic> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Diagnostic::new(
            crate::diagnostics::DiagnosticKind::Internal,
            format!("cannot read {}: {e}", path.display()),
            Span::new(0, 0),
        )
    })?;
    check_source(&text, fuel)
}

/// Checks every definition of a file in order: the declared type must be a
/// well-formed type, and the body must check against it. Definitions are
/// inlined into later ones, so each check runs over closed terms.
pub fn check_source(text: &str, fuel: &mut Fuel) -> Result<(), Diagnostic> {
    let defs = parse_file(text)?;
    let resolved = resolve_file(&defs)?;
    let ctx = Context::empty();
    for def in resolved.iter() {
        wf_ty(&ctx, &def.ty, fuel).map_err(|e| Diagnostic::from_core(&e, def.ty_span))?;
        check(&ctx, &def.body, &def.ty, fuel)
            .map_err(|e| Diagnostic::from_core(&e, def.body_span))?;
    }
    Ok(())
}
