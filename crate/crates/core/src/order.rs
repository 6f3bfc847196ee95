//! Ordered sets as structures with an `Underlying` carrier and an
//! `OrderGraph` relation holding the pairs `(u, v)` with `u ≤ v`.

use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::functions::{apply, as_kpair, kpair};
use crate::kernel::HSet;
use crate::notation::{order_graph_key, underlying_key, U};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("pair ({0}, {1}) is not in carrier × carrier")]
    PairOutOfCarrier(HSet, HSet),
    #[error("{0} is not a subset of the carrier")]
    NotSubset(HSet),
    #[error("relation is not a partial order")]
    NotAnOrder,
    #[error("not a well-order")]
    NotWellOrder,
    #[error("{0} is not in the carrier")]
    NotInCarrier(HSet),
    #[error("empty carrier has no maximal element")]
    EmptyCarrier,
}

/// Carriers up to this size are checked exhaustively by `is_well_order`.
pub const EXHAUSTIVE_WELL_ORDER_LIMIT: usize = 16;
/// Subsets sampled by `is_well_order` above the exhaustive limit.
pub const WELL_ORDER_SAMPLES: usize = 1000;

#[derive(Debug, Clone)]
pub struct Order {
    set: HSet,
    carrier: HSet,
    relation: HSet,
    index: Arc<HashSet<(HSet, HSet)>>,
}

impl PartialEq for Order {
    fn eq(&self, other: &Order) -> bool {
        self.set == other.set
    }
}

impl Eq for Order {}

impl Hash for Order {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

fn pair_index(relation: &HSet) -> Arc<HashSet<(HSet, HSet)>> {
    Arc::new(relation.iter().filter_map(as_kpair).collect())
}

impl Order {
    /// Builds an order from its carrier and `≤` pairs. The pairs are stored as
    /// given; nothing is closed under reflexivity or transitivity.
    pub fn new<I>(carrier: HSet, pairs: I) -> Result<Order, OrderError>
    where
        I: IntoIterator<Item = (HSet, HSet)>,
    {
        let mut rel = Vec::new();
        for (u, v) in pairs {
            if !carrier.contains(&u) || !carrier.contains(&v) {
                return Err(OrderError::PairOutOfCarrier(u, v));
            }
            rel.push(kpair(u, v));
        }
        Ok(Order::from_parts(carrier, HSet::collect_unchecked(rel)))
    }

    fn from_parts(carrier: HSet, relation: HSet) -> Order {
        let set = HSet::pair(
            kpair(underlying_key().clone(), carrier.clone()),
            kpair(order_graph_key().clone(), relation.clone()),
        );
        Order {
            set,
            index: pair_index(&relation),
            carrier,
            relation,
        }
    }

    /// Reads an order out of an arbitrary structure.
    pub fn from_struct(set: HSet) -> Order {
        let relation = apply(&set, order_graph_key());
        Order {
            carrier: U(&set),
            index: pair_index(&relation),
            relation,
            set,
        }
    }

    /// `u ≤ v` iff `u = v` or `u ∈ v`, over `x`.
    pub fn membership(x: &HSet) -> Order {
        let pairs = x.iter().flat_map(|v| {
            x.iter()
                .filter(move |u| *u == v || v.contains(u))
                .map(move |u| (u.clone(), v.clone()))
        });
        Order::new(x.clone(), pairs).expect("pairs drawn from the carrier")
    }

    /// The order on `x` induced by the canonical order on sets.
    pub fn canonical(x: &HSet) -> Order {
        let elems = x.elements();
        let pairs = elems
            .iter()
            .enumerate()
            .flat_map(|(i, u)| elems[i..].iter().map(move |v| (u.clone(), v.clone())));
        Order::new(x.clone(), pairs).expect("pairs drawn from the carrier")
    }

    pub fn as_set(&self) -> &HSet {
        &self.set
    }

    pub fn into_set(self) -> HSet {
        self.set
    }

    pub fn carrier(&self) -> &HSet {
        &self.carrier
    }

    pub fn relation(&self) -> &HSet {
        &self.relation
    }

    /// The `≤` pairs as components.
    pub fn pairs(&self) -> impl Iterator<Item = (HSet, HSet)> + '_ {
        self.relation.iter().filter_map(as_kpair)
    }

    pub fn leq(&self, u: &HSet, v: &HSet) -> bool {
        self.index.contains(&(u.clone(), v.clone()))
    }

    pub fn lt(&self, u: &HSet, v: &HSet) -> bool {
        u != v && self.leq(u, v)
    }

    fn matrix(&self) -> Vec<Vec<bool>> {
        let c = self.carrier.elements();
        c.iter()
            .map(|u| c.iter().map(|v| self.leq(u, v)).collect())
            .collect()
    }

    /// Reflexive, antisymmetric and transitive on the carrier, with every
    /// stored pair inside the carrier.
    pub fn is_order(&self) -> bool {
        let inside = self
            .pairs()
            .all(|(u, v)| self.carrier.contains(&u) && self.carrier.contains(&v));
        if !inside || self.pairs().count() != self.relation.size() {
            return false;
        }
        let m = self.matrix();
        let n = m.len();
        (0..n).all(|i| m[i][i])
            && (0..n).all(|i| (0..n).all(|j| i == j || !(m[i][j] && m[j][i])))
            && (0..n).all(|i| (0..n).all(|j| !m[i][j] || (0..n).all(|k| !m[j][k] || m[i][k])))
    }

    pub fn is_total(&self) -> bool {
        let m = self.matrix();
        let n = m.len();
        (0..n).all(|i| (0..n).all(|j| m[i][j] || m[j][i]))
    }

    /// An order in which every nonempty subset of the carrier has a least
    /// element. Exhaustive up to [`EXHAUSTIVE_WELL_ORDER_LIMIT`] elements,
    /// sampled above it.
    pub fn is_well_order(&self) -> bool {
        if !self.is_order() {
            return false;
        }
        let m = self.matrix();
        let n = m.len();
        if n <= EXHAUSTIVE_WELL_ORDER_LIMIT {
            let above: Vec<u32> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, b)| **b)
                        .fold(0u32, |acc, (j, _)| acc | 1 << j)
                })
                .collect();
            return (1u32..(1u32 << n))
                .all(|subset| (0..n).any(|i| subset >> i & 1 == 1 && above[i] & subset == subset));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n as u64);
        (0..WELL_ORDER_SAMPLES).all(|_| {
            let mut subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if subset.is_empty() {
                subset.push(rng.gen_range(0..n));
            }
            subset.iter().any(|&i| subset.iter().all(|&j| m[i][j]))
        })
    }

    /// The element of `s` below all of `s`, or `{}` when there is none.
    pub fn least(&self, s: &HSet) -> Result<HSet, OrderError> {
        if !s.is_subset(&self.carrier) {
            return Err(OrderError::NotSubset(s.clone()));
        }
        Ok(s.choose(|x| s.iter().all(|y| self.leq(x, y))))
    }

    /// `{y ∈ U(a) | y < x}`.
    pub fn punctured_downward(&self, x: &HSet) -> HSet {
        self.carrier.separation(|y| self.lt(y, x))
    }

    /// The restriction of the order to `u`.
    pub fn suborder(&self, u: &HSet) -> Result<Order, OrderError> {
        if !u.is_subset(&self.carrier) {
            return Err(OrderError::NotSubset(u.clone()));
        }
        let relation = self
            .relation
            .separation(|p| as_kpair(p).is_some_and(|(x, y)| u.contains(&x) && u.contains(&y)));
        Ok(Order::from_parts(u.clone(), relation))
    }

    pub fn is_chain(&self, c: &HSet) -> bool {
        c.is_subset(&self.carrier)
            && c.iter()
                .all(|x| c.iter().all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// The greatest element of `c` when it has one, else the canonically least
    /// upper bound of `c` in the carrier, else `{}`.
    pub fn upper_bound(&self, c: &HSet) -> HSet {
        let bounds = |m: &HSet| c.iter().all(|x| self.leq(x, m));
        match c.iter().find(|m| bounds(m)) {
            Some(top) => top.clone(),
            None => self.carrier.choose(bounds),
        }
    }

    /// The canonically least element with no strict successor.
    pub fn maximal_element(&self) -> Result<HSet, OrderError> {
        if self.carrier.is_empty() {
            return Err(OrderError::EmptyCarrier);
        }
        if !self.is_order() {
            return Err(OrderError::NotAnOrder);
        }
        let maximal = |m: &HSet| !self.carrier.iter().any(|x| self.lt(m, x));
        self.carrier
            .iter()
            .find(|m| maximal(m))
            .cloned()
            .ok_or(OrderError::NotAnOrder)
    }
}

pub fn canonical_well_order(x: &HSet) -> Order {
    Order::canonical(x)
}
