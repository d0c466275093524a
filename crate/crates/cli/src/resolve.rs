//! Name resolution: surface terms become de Bruijn core terms. References to
//! earlier definitions are inlined on the spot (transparent abbreviations),
//! so resolved terms are closed under their binder scope and the kernel
//! needs no global environment.

use crate::diagnostics::Diagnostic;
use crate::surface::{Definition, Span, SurfaceKind, SurfaceTerm};
use mltt_core::Term;

/// Previously resolved definitions, in file order. Bodies are fully inlined
/// and therefore closed.
#[derive(Debug, Clone, Default)]
pub struct Defs {
    items: Vec<(String, ResolvedDef)>,
}

#[derive(Debug, Clone)]
pub struct ResolvedDef {
    pub name: String,
    pub name_span: Span,
    pub ty: Term,
    pub ty_span: Span,
    pub body: Term,
    pub body_span: Span,
}

impl Defs {
    pub fn new() -> Defs {
        Defs::default()
    }

    pub fn get(&self, name: &str) -> Option<&ResolvedDef> {
        self.items
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ResolvedDef> {
        self.items.iter().map(|(_, d)| d)
    }

    fn insert(&mut self, def: ResolvedDef) {
        self.items.push((def.name.clone(), def));
    }
}

/// Resolves a surface term. `scope` lists binder names outermost first;
/// lookup is innermost-first, with binders shadowing definitions.
pub fn resolve(
    term: &SurfaceTerm,
    scope: &mut Vec<String>,
    defs: &Defs,
) -> Result<Term, Diagnostic> {
    match &term.kind {
        SurfaceKind::Var(name) => {
            if let Some(offset) = scope.iter().rev().position(|n| n == name) {
                return Ok(Term::Var(offset));
            }
            if let Some(def) = defs.get(name) {
                // Inlined bodies are closed, so no shifting is needed.
                return Ok(def.body.clone());
            }
            Err(Diagnostic::parse(
                format!("unbound identifier `{name}`"),
                term.span,
            ))
        }
        SurfaceKind::Univ => Ok(Term::Univ),
        SurfaceKind::Nat => Ok(Term::Nat),
        SurfaceKind::Empty => Ok(Term::Empty),
        SurfaceKind::Zero => Ok(Term::Zero),
        SurfaceKind::Succ(pred) => Ok(Term::succ(resolve(pred, scope, defs)?)),
        SurfaceKind::Pi { name, dom, cod } => {
            let dom = resolve(dom, scope, defs)?;
            let cod = under(scope, name, defs, cod)?;
            Ok(Term::pi(dom, cod))
        }
        SurfaceKind::Lam { name, dom, body } => {
            let dom = resolve(dom, scope, defs)?;
            let body = under(scope, name, defs, body)?;
            Ok(Term::lam(dom, body))
        }
        SurfaceKind::App(func, arg) => Ok(Term::app(
            resolve(func, scope, defs)?,
            resolve(arg, scope, defs)?,
        )),
        SurfaceKind::Sigma { name, dom, cod } => {
            let dom = resolve(dom, scope, defs)?;
            let cod = under(scope, name, defs, cod)?;
            Ok(Term::sigma(dom, cod))
        }
        SurfaceKind::Pair {
            dom,
            name,
            cod,
            fst,
            snd,
        } => {
            let dom = resolve(dom, scope, defs)?;
            let cod = under(scope, name, defs, cod)?;
            let fst = resolve(fst, scope, defs)?;
            let snd = resolve(snd, scope, defs)?;
            Ok(Term::pair(dom, cod, fst, snd))
        }
        SurfaceKind::Fst(p) => Ok(Term::fst(resolve(p, scope, defs)?)),
        SurfaceKind::Snd(p) => Ok(Term::snd(resolve(p, scope, defs)?)),
        SurfaceKind::NatElim {
            name,
            motive,
            base,
            step,
            scrut,
        } => {
            let motive = under(scope, name, defs, motive)?;
            let base = resolve(base, scope, defs)?;
            let step = resolve(step, scope, defs)?;
            let scrut = resolve(scrut, scope, defs)?;
            Ok(Term::nat_elim(motive, base, step, scrut))
        }
        SurfaceKind::Id(ty, lhs, rhs) => Ok(Term::id(
            resolve(ty, scope, defs)?,
            resolve(lhs, scope, defs)?,
            resolve(rhs, scope, defs)?,
        )),
        SurfaceKind::Refl(ty, tm) => Ok(Term::refl(
            resolve(ty, scope, defs)?,
            resolve(tm, scope, defs)?,
        )),
        SurfaceKind::IdElim {
            ty,
            lhs,
            rhs_name,
            proof_name,
            motive,
            base,
            rhs,
            proof,
        } => {
            let ty = resolve(ty, scope, defs)?;
            let lhs = resolve(lhs, scope, defs)?;
            scope.push(rhs_name.clone());
            scope.push(proof_name.clone());
            let motive = resolve(motive, scope, defs);
            scope.pop();
            scope.pop();
            let base = resolve(base, scope, defs)?;
            let rhs = resolve(rhs, scope, defs)?;
            let proof = resolve(proof, scope, defs)?;
            Ok(Term::id_elim(ty, lhs, motive?, base, rhs, proof))
        }
        SurfaceKind::EmptyElim {
            name,
            motive,
            scrut,
        } => {
            let motive = under(scope, name, defs, motive)?;
            let scrut = resolve(scrut, scope, defs)?;
            Ok(Term::empty_elim(motive, scrut))
        }
    }
}

fn under(
    scope: &mut Vec<String>,
    name: &str,
    defs: &Defs,
    body: &SurfaceTerm,
) -> Result<Term, Diagnostic> {
    scope.push(name.to_string());
    let result = resolve(body, scope, defs);
    scope.pop();
    result
}

/// Resolves a whole file, inlining each definition into the later ones.
/// Names must be unique; bodies may reference earlier definitions only.
pub fn resolve_file(defs: &[Definition]) -> Result<Defs, Diagnostic> {
    let mut resolved = Defs::new();
    for def in defs {
        if resolved.get(&def.name).is_some() {
            return Err(Diagnostic::parse(
                format!("duplicate definition `{}`", def.name),
                def.name_span,
            ));
        }
        let mut scope = Vec::new();
        let ty = resolve(&def.ty, &mut scope, &resolved)?;
        let body = resolve(&def.body, &mut scope, &resolved)?;
        resolved.insert(ResolvedDef {
            name: def.name.clone(),
            name_span: def.name_span,
            ty,
            ty_span: def.ty.span,
            body,
            body_span: def.body.span,
        });
    }
    Ok(resolved)
}
