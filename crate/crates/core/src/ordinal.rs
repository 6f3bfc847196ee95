//! Transfinite recursion at finite scale: compatible well-orders, the
//! generated order `leq_gen`, ordinals, and the map from a well-ordered set
//! onto its ordinal.
//!
//! A well-order `a` is compatible with a step function `f` when every `x` in
//! its carrier equals `f` applied to the set of elements strictly below `x`.
//! Compatible orders are initial segments of one canonical chain
//! `e_0 = f({})`, `e_{k+1} = f({e_0, ..., e_k})`, so `leq_gen` reduces to a
//! bounded walk along that chain.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::kernel::{HSet, KernelError, Limits};
use crate::order::Order;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("not a well-order")]
    NotWellOrder,
    #[error("{0} is not in the carrier")]
    NotInCarrier(HSet),
    #[error("{0} is not an ordinal")]
    NotOrdinal(HSet),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A total map `E -> E` driving transfinite recursion.
pub trait StepFunction: Sync {
    fn step(&self, x: &HSet) -> HSet;

    /// Lets `leq_gen` use the exact ordinal decision procedure.
    fn is_identity(&self) -> bool {
        false
    }
}

impl<F: Fn(&HSet) -> HSet + Sync> StepFunction for F {
    fn step(&self, x: &HSet) -> HSet {
        self(x)
    }
}

/// Named step functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Identity,
    Constant(HSet),
    /// `x ↦ x ∪ {x}`.
    Successor,
}

impl StepFunction for Step {
    fn step(&self, x: &HSet) -> HSet {
        match self {
            Step::Identity => x.clone(),
            Step::Constant(c) => c.clone(),
            Step::Successor => x.successor(),
        }
    }

    fn is_identity(&self) -> bool {
        matches!(self, Step::Identity)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriBool {
    True,
    False,
    Unknown,
}

impl fmt::Display for TriBool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriBool::True => "true",
            TriBool::False => "false",
            TriBool::Unknown => "unknown",
        })
    }
}

/// True iff every `x` in the carrier is `f` of its punctured downward set.
pub fn is_compatible<F: StepFunction + ?Sized>(a: &Order, f: &F) -> Result<bool, OrdinalError> {
    if !a.is_well_order() {
        return Err(OrdinalError::NotWellOrder);
    }
    Ok(a.carrier().iter().all(|x| *x == f.step(&a.punctured_downward(x))))
}

/// The canonical compatible chain, listed in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub elements: Vec<HSet>,
    /// Generation stopped because `f` returned an earlier element.
    pub repeated: bool,
}

impl Chain {
    pub fn order(&self) -> Order {
        let carrier = HSet::collect_unchecked(self.elements.clone());
        let pairs = self
            .elements
            .iter()
            .enumerate()
            .flat_map(|(i, u)| self.elements[i..].iter().map(move |v| (u.clone(), v.clone())));
        Order::new(carrier, pairs).expect("chain pairs lie in the chain")
    }

    pub fn position(&self, x: &HSet) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }
}

fn walk_chain<F, P>(f: &F, fuel: usize, mut done: P) -> Chain
where
    F: StepFunction + ?Sized,
    P: FnMut(&[HSet]) -> bool,
{
    let mut elements: Vec<HSet> = Vec::new();
    let mut below = HSet::empty();
    while elements.len() < fuel && !done(&elements) {
        let next = f.step(&below);
        if below.contains(&next) {
            return Chain {
                elements,
                repeated: true,
            };
        }
        below = below.insert(next.clone());
        elements.push(next);
    }
    Chain {
        elements,
        repeated: false,
    }
}

/// Generates up to `fuel` elements of the canonical `f`-compatible chain.
pub fn chain_generate<F: StepFunction + ?Sized>(f: &F, fuel: usize) -> Result<Chain, OrdinalError> {
    chain_generate_with(f, fuel, &Limits::current())
}

pub fn chain_generate_with<F: StepFunction + ?Sized>(
    f: &F,
    fuel: usize,
    limits: &Limits,
) -> Result<Chain, OrdinalError> {
    if fuel > limits.max_size {
        return Err(KernelError::ResourceLimit {
            what: "chain fuel",
            needed: fuel,
            limit: limits.max_size,
        }
        .into());
    }
    let too_deep = |seen: &[HSet]| seen.last().is_some_and(|e| e.rank() > limits.max_rank);
    let chain = walk_chain(f, fuel, too_deep);
    match chain.elements.last() {
        Some(e) if e.rank() > limits.max_rank => Err(KernelError::ResourceLimit {
            what: "chain element rank",
            needed: e.rank(),
            limit: limits.max_rank,
        }
        .into()),
        _ => Ok(chain),
    }
}

/// `x ≤ y` in some `f`-compatible well-order. Exact for the identity step;
/// a fuel-bounded chain search otherwise.
pub fn leq_gen<F: StepFunction + ?Sized>(f: &F, x: &HSet, y: &HSet, fuel: usize) -> TriBool {
    if f.is_identity() {
        return if is_ordinal(x) && is_ordinal(y) && x.is_subset(y) {
            TriBool::True
        } else {
            TriBool::False
        };
    }
    leq_gen_by_chain(f, x, y, fuel)
}

/// The chain search behind `leq_gen`, for any step function.
pub fn leq_gen_by_chain<F: StepFunction + ?Sized>(f: &F, x: &HSet, y: &HSet, fuel: usize) -> TriBool {
    let chain = walk_chain(f, fuel, |seen| seen.contains(x) && seen.contains(y));
    match (chain.position(x), chain.position(y)) {
        (Some(px), Some(py)) if px <= py => TriBool::True,
        (Some(_), Some(_)) => TriBool::False,
        _ if chain.repeated => TriBool::False,
        _ => TriBool::Unknown,
    }
}

/// A transitive set of transitive sets.
pub fn is_ordinal(o: &HSet) -> bool {
    o.is_transitive() && o.iter().all(HSet::is_transitive)
}

pub fn ordinal_leq(o1: &HSet, o2: &HSet) -> Result<bool, OrdinalError> {
    for o in [o1, o2] {
        if !is_ordinal(o) {
            return Err(OrdinalError::NotOrdinal(o.clone()));
        }
    }
    Ok(o1.is_subset(o2))
}

struct Avatars<'a> {
    order: &'a Order,
    memo: HashMap<HSet, HSet>,
}

impl Avatars<'_> {
    // avatar(x) = { avatar(y) | y < x }
    fn get(&mut self, x: &HSet) -> HSet {
        if let Some(v) = self.memo.get(x) {
            return v.clone();
        }
        let below = self.order.punctured_downward(x);
        let value = below.image(|y| self.get(y));
        self.memo.insert(x.clone(), value.clone());
        value
    }
}

fn check_well_order(a: &Order) -> Result<(), OrdinalError> {
    if a.is_well_order() {
        Ok(())
    } else {
        Err(OrdinalError::NotWellOrder)
    }
}

/// The ordinal assigned to `x` by transfinite recursion along `a`.
pub fn wo_avatar(a: &Order, x: &HSet) -> Result<HSet, OrdinalError> {
    check_well_order(a)?;
    if !a.carrier().contains(x) {
        return Err(OrdinalError::NotInCarrier(x.clone()));
    }
    Ok(Avatars {
        order: a,
        memo: HashMap::new(),
    }
    .get(x))
}

/// `wo_avatar(a, x)` for every `x` in the carrier, sharing one memo table.
pub fn wo_avatars(a: &Order) -> Result<Vec<(HSet, HSet)>, OrdinalError> {
    check_well_order(a)?;
    Ok(avatars_unchecked(a))
}

/// For orders already known to be well-orders.
pub(crate) fn avatars_unchecked(a: &Order) -> Vec<(HSet, HSet)> {
    let mut avatars = Avatars {
        order: a,
        memo: HashMap::new(),
    };
    a.carrier().iter().map(|x| (x.clone(), avatars.get(x))).collect()
}

/// The image of `wo_avatar`: the ordinal isomorphic to `a`.
pub fn wo_ordinal(a: &Order) -> Result<HSet, OrdinalError> {
    let avatars = wo_avatars(a)?;
    Ok(HSet::collect_unchecked(
        avatars.into_iter().map(|(_, v)| v).collect(),
    ))
}
