//! The set expression language: parsing, evaluation and interactive
//! sessions.

mod eval;
mod syntax;

pub use eval::{eval, Env, EvalError};
pub use syntax::{parse, parse_command, Command, Expr, Lambda, StepName, SyntaxError, MAX_NESTING};

use thiserror::Error;

use crate::cardinal::{bcs, cardinality};
use crate::kernel::{HSet, Limits};
use crate::order::Order;
use crate::ordinal::{chain_generate_with, is_ordinal, wo_ordinal, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LangError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// The bit-exact canonical text form.
pub fn print_canonical(x: &HSet) -> String {
    x.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SessionConfig {
    pub limits: Limits,
    /// Default fuel for `chain` when none is given.
    pub fuel: usize,
    pub seed: u64,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            limits: Limits::default(),
            fuel: 16,
            seed: 0,
        }
    }
}

/// A sequence of commands sharing `let` bindings.
#[derive(Debug, Default)]
pub struct Session {
    env: Env,
    config: SessionConfig,
}

impl Session {
    pub fn new(config: SessionConfig) -> Session {
        Session {
            env: Env::new(config.limits),
            config,
        }
    }

    pub fn config(&self) -> &SessionConfig {
        &self.config
    }

    pub fn lookup(&self, name: &str) -> Option<&HSet> {
        self.env.get(name)
    }

    /// Runs one line. Returns the text to print, if any.
    pub fn execute(&mut self, line: &str) -> Result<Option<String>, LangError> {
        let cmd = parse_command(line)?;
        Ok(self.run(&cmd)?)
    }

    pub fn run(&mut self, cmd: &Command) -> Result<Option<String>, EvalError> {
        let value = |e: &Expr| eval(e, &self.env);
        let out = match cmd {
            Command::Nothing => return Ok(None),
            Command::Let(name, e) => {
                let v = value(e)?;
                self.env.bind(name.clone(), v);
                return Ok(None);
            }
            Command::Eval(e) => print_canonical(&value(e)?),
            Command::Card(e) => print_canonical(&cardinality(&value(e)?)),
            Command::IsOrdinal(e) => is_ordinal(&value(e)?).to_string(),
            Command::WoOrd(e) => {
                let a = Order::from_struct(value(e)?);
                print_canonical(&wo_ordinal(&a)?)
            }
            Command::Zorn(e) => {
                let a = Order::from_struct(value(e)?);
                print_canonical(&a.maximal_element()?)
            }
            Command::Bcs(x, y, f, g) => {
                let b = bcs(&value(x)?, &value(y)?, &value(f)?, &value(g)?)?;
                print_canonical(b.graph())
            }
            Command::Chain(step, fuel) => {
                let step = match step {
                    StepName::Id => Step::Identity,
                    StepName::Succ => Step::Successor,
                    StepName::Const(e) => Step::Constant(value(e)?),
                };
                let fuel = fuel.unwrap_or(self.config.fuel);
                let chain = chain_generate_with(&step, fuel, &self.config.limits)?;
                let items: Vec<String> = chain.elements.iter().map(print_canonical).collect();
                let mut text = format!("[{}]", items.join(","));
                if chain.repeated {
                    text.push_str(" repeated");
                }
                text
            }
        };
        Ok(Some(out))
    }

    /// Runs a batch script, one command per line, stopping at the first error.
    pub fn run_script(&mut self, text: &str) -> Result<Vec<String>, (usize, LangError)> {
        let mut out = Vec::new();
        for (n, line) in text.lines().enumerate() {
            match self.execute(line) {
                Ok(Some(s)) => out.push(s),
                Ok(None) => {}
                Err(e) => return Err((n + 1, e)),
            }
        }
        Ok(out)
    }
}
