//! Cardinality as the least equipotent ordinal, and the
//! Bernstein-Cantor-Schroeder theorem obtained from it.
//!
//! `bcs` never builds a back-and-forth map. It compares cardinalities through
//! the subset lemma (`u ⊆ x ⇒ |u| ≤ |x|`) and antisymmetry of the ordinal
//! order, then reads the bijection off the two cardinality isomorphisms.

use std::fmt;

use thiserror::Error;

use crate::functions::{apply, compose_graphs, domain, inverse_graph, is_function_graph, kpair, range};
use crate::kernel::HSet;
use crate::order::canonical_well_order;
use crate::ordinal::{avatars_unchecked, ordinal_leq, OrdinalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CardinalError {
    #[error("{name} is not a function graph")]
    NotFunction { name: &'static str },
    #[error("{name} has domain {found}, expected {expected}")]
    WrongDomain {
        name: &'static str,
        found: HSet,
        expected: HSet,
    },
    #[error("{name} maps {point} to {image}, outside {codomain}")]
    OutsideCodomain {
        name: &'static str,
        point: HSet,
        image: HSet,
        codomain: HSet,
    },
    #[error("{name} is not injective: {first} and {second} both map to {image}")]
    Collision {
        name: &'static str,
        first: HSet,
        second: HSet,
        image: HSet,
    },
    #[error("graph is not a bijection between its domain and range")]
    NotBijection,
    #[error("cardinalities {0} and {1} differ")]
    CardinalityMismatch(HSet, HSet),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

/// An injective function graph, recorded with its domain and range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bijection {
    graph: HSet,
    domain: HSet,
    range: HSet,
}

impl Bijection {
    /// Certifies that `graph` is functional and injective.
    pub fn certify(graph: HSet) -> Result<Bijection, CardinalError> {
        if !is_function_graph(&graph) {
            return Err(CardinalError::NotBijection);
        }
        let (dom, ran) = (domain(&graph), range(&graph));
        if ran.size() != graph.size() {
            return Err(CardinalError::NotBijection);
        }
        Ok(Bijection {
            graph,
            domain: dom,
            range: ran,
        })
    }

    pub fn graph(&self) -> &HSet {
        &self.graph
    }

    pub fn domain(&self) -> &HSet {
        &self.domain
    }

    pub fn range(&self) -> &HSet {
        &self.range
    }

    pub fn apply(&self, x: &HSet) -> HSet {
        apply(&self.graph, x)
    }

    pub fn inverse(&self) -> Bijection {
        Bijection {
            graph: inverse_graph(&self.graph),
            domain: self.range.clone(),
            range: self.domain.clone(),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.graph, f)
    }
}

pub fn equipotent(x: &HSet, y: &HSet) -> bool {
    x.size() == y.size()
}

/// Pairs the i-th element of `x` with the i-th element of `y`.
pub fn bijection_witness(x: &HSet, y: &HSet) -> Option<Bijection> {
    if !equipotent(x, y) {
        return None;
    }
    let graph = HSet::collect_unchecked(
        x.iter()
            .zip(y.iter())
            .map(|(a, b)| kpair(a.clone(), b.clone()))
            .collect(),
    );
    Some(Bijection {
        graph,
        domain: x.clone(),
        range: y.clone(),
    })
}

/// The ordinal of the canonical well-ordering of `x`.
pub fn cardinality(x: &HSet) -> HSet {
    cardinal_iso(x).range
}

/// `x ≅ cardinality(x)`, following the canonical well-ordering.
pub fn cardinal_iso(x: &HSet) -> Bijection {
    // Canonical orders are total orders on finite sets, hence well-orders.
    let avatars = avatars_unchecked(&canonical_well_order(x));
    let range = HSet::collect_unchecked(avatars.iter().map(|(_, o)| o.clone()).collect());
    let graph = HSet::collect_unchecked(avatars.into_iter().map(|(e, o)| kpair(e, o)).collect());
    Bijection {
        graph,
        domain: x.clone(),
        range,
    }
}

fn check_injection(name: &'static str, f: &HSet, from: &HSet, into: &HSet) -> Result<(), CardinalError> {
    if !is_function_graph(f) {
        return Err(CardinalError::NotFunction { name });
    }
    let dom = domain(f);
    if &dom != from {
        return Err(CardinalError::WrongDomain {
            name,
            found: dom,
            expected: from.clone(),
        });
    }
    let mut seen: Vec<(HSet, HSet)> = Vec::with_capacity(from.size());
    for x in from.iter() {
        let image = apply(f, x);
        if !into.contains(&image) {
            return Err(CardinalError::OutsideCodomain {
                name,
                point: x.clone(),
                image,
                codomain: into.clone(),
            });
        }
        if let Some((first, _)) = seen.iter().find(|(_, y)| *y == image) {
            return Err(CardinalError::Collision {
                name,
                first: first.clone(),
                second: x.clone(),
                image,
            });
        }
        seen.push((x.clone(), image));
    }
    Ok(())
}

/// Bernstein-Cantor-Schroeder: injections `f: x → y` and `g: y → x` yield a
/// bijection `x → y`.
pub fn bcs(x: &HSet, y: &HSet, f: &HSet, g: &HSet) -> Result<Bijection, CardinalError> {
    check_injection("f", f, x, y)?;
    check_injection("g", g, y, x)?;

    // f: x ≅ range(f) ⊆ y, so |x| = |range f| ≤ |y|; symmetrically |y| ≤ |x|.
    let (iso_x, iso_y) = (cardinal_iso(x), cardinal_iso(y));
    let (card_x, card_y) = (iso_x.range().clone(), iso_y.range().clone());
    let via_f = cardinality(&range(f));
    let via_g = cardinality(&range(g));
    if via_f != card_x {
        return Err(CardinalError::CardinalityMismatch(via_f, card_x));
    }
    if via_g != card_y {
        return Err(CardinalError::CardinalityMismatch(via_g, card_y));
    }
    let x_le_y = ordinal_leq(&via_f, &card_y)?;
    let y_le_x = ordinal_leq(&via_g, &card_x)?;
    if !(x_le_y && y_le_x) || card_x != card_y {
        return Err(CardinalError::CardinalityMismatch(card_x, card_y));
    }

    let graph = compose_graphs(iso_y.inverse().graph(), iso_x.graph());
    let out = Bijection::certify(graph)?;
    if out.domain() != x || out.range() != y {
        return Err(CardinalError::NotBijection);
    }
    Ok(out)
}
