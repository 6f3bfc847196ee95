use std::collections::HashMap;

use thiserror::Error;

use super::syntax::Expr;
use crate::cardinal::CardinalError;
use crate::functions::kpair;
use crate::kernel::{HSet, KernelError, Limits};
use crate::notation::{Nota, NotationError};
use crate::order::{Order, OrderError};
use crate::ordinal::OrdinalError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound identifier '{0}'")]
    Unbound(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Notation(#[from] NotationError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error(transparent)]
    Cardinal(#[from] CardinalError),
}

/// Name bindings plus the limits checked during evaluation.
#[derive(Debug, Clone, Default)]
pub struct Env {
    bindings: HashMap<String, HSet>,
    limits: Limits,
}

impl Env {
    pub fn new(limits: Limits) -> Env {
        Env {
            bindings: HashMap::new(),
            limits,
        }
    }

    pub fn get(&self, name: &str) -> Option<&HSet> {
        self.bindings.get(name)
    }

    pub fn bind(&mut self, name: String, value: HSet) {
        self.bindings.insert(name, value);
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }
}

pub fn eval(e: &Expr, env: &Env) -> Result<HSet, EvalError> {
    eval_in(e, env, &mut Vec::new())
}

// `locals` holds lambda parameters, innermost last.
fn eval_in(e: &Expr, env: &Env, locals: &mut Vec<(String, HSet)>) -> Result<HSet, EvalError> {
    let limits = env.limits();
    Ok(match e {
        Expr::SetLit(items) => set_literal(items, env, locals)?,
        Expr::Ord(n) => HSet::ord_with(*n, limits)?,
        Expr::Pair(a, b) => kpair(eval_in(a, env, locals)?, eval_in(b, env, locals)?),
        Expr::Pow(a) => eval_in(a, env, locals)?.powerset_with(limits)?,
        Expr::Union(a) => eval_in(a, env, locals)?.union_family_with(limits)?,
        Expr::Im(lambda, over) => {
            let carrier = eval_in(over, env, locals)?;
            carrier.try_image(|x| {
                locals.push((lambda.param.clone(), x.clone()));
                let v = eval_in(&lambda.body, env, locals);
                locals.pop();
                v
            })?
        }
        Expr::Tag(word, arity) => Nota::new(word, *arity)?.encode(),
        Expr::Order(carrier, pairs) => {
            let carrier = eval_in(carrier, env, locals)?;
            let pairs = pairs
                .iter()
                .map(|(u, v)| Ok((eval_in(u, env, locals)?, eval_in(v, env, locals)?)))
                .collect::<Result<Vec<_>, EvalError>>()?;
            Order::new(carrier, pairs)?.into_set()
        }
        Expr::Ident(name) => locals
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.clone())
            .or_else(|| env.get(name).cloned())
            .ok_or_else(|| EvalError::Unbound(name.clone()))?,
    })
}

// Separate from `eval_in` to keep the frame small on deeply nested literals.
fn set_literal(items: &[Expr], env: &Env, locals: &mut Vec<(String, HSet)>) -> Result<HSet, EvalError> {
    let mut elems = Vec::with_capacity(items.len());
    for item in items {
        elems.push(eval_in(item, env, locals)?);
    }
    Ok(HSet::from_elements_with(elems, env.limits())?)
}
