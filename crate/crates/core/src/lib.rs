//! An executable kernel for a small dependent type theory with dependent
//! functions and pairs (both with eta), natural numbers and identity types
//! with large elimination, the empty type, and one predicative universe.
//!
//! The pieces:
//!
//! - [`syntax`]: de Bruijn terms, contexts, lifting and substitution;
//! - [`reduction`]: weak-head reduction as a stack machine over elimination
//!   frames, with whnf classification;
//! - [`typing`]: bidirectional type inference and checking;
//! - [`conversion`]: algorithmic conversion: type conversion, type-directed
//!   term conversion with eta for Pi and Sigma, and type-synthesizing
//!   comparison of neutrals;
//! - [`normalizer`]: an independent eta-long deep normalizer, the
//!   differential-testing oracle for conversion;
//! - [`testing`]: seeded term generators and reference oracles for tests and
//!   benchmarks.
//!
//! Every routine is partial only through an explicit [`Fuel`] budget; all
//! data is immutable and every function is pure, so concurrent use needs no
//! coordination.

pub mod conversion;
pub mod error;
pub mod fuel;
pub mod normalizer;
pub mod reduction;
pub mod syntax;
pub mod testing;
pub mod typing;

pub use conversion::{conv_ne, conv_tm, conv_ty};
pub use error::{CheckResult, Error, TypeError, TypeErrorKind};
pub use fuel::Fuel;
pub use normalizer::{nf_tm, nf_ty, oracle_conv};
pub use reduction::{classify, whnf, zip, Frame, WhnfView};
pub use syntax::{alpha_eq, lift, subst1, subst2, Context, Term};
pub use typing::{check, check_ctx, infer, infer_red, wf_ty};
