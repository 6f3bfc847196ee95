//! Functions as sets of Kuratowski pairs, with total evaluation.
//!
//! Evaluation never fails: applying a set `f` at `x` picks the canonically
//! least pair `(x, y) ∈ f` and returns `y`, or `{}` when there is none.

use crate::kernel::{HSet, KernelError, Limits};

/// `(x, y) = {{x}, {x, y}}`.
pub fn kpair(x: HSet, y: HSet) -> HSet {
    HSet::pair(HSet::singleton(x.clone()), HSet::pair(x, y))
}

/// Splits a Kuratowski pair into its components.
pub fn as_kpair(p: &HSet) -> Option<(HSet, HSet)> {
    match p.elements() {
        [only] => match only.elements() {
            [x] => Some((x.clone(), x.clone())),
            _ => None,
        },
        [a, b] => {
            let split = |single: &HSet, double: &HSet| -> Option<(HSet, HSet)> {
                let [x] = single.elements() else {
                    return None;
                };
                match double.elements() {
                    [u, v] if u == x => Some((x.clone(), v.clone())),
                    [u, v] if v == x => Some((x.clone(), u.clone())),
                    _ => None,
                }
            };
            split(a, b).or_else(|| split(b, a))
        }
        _ => None,
    }
}

pub fn is_kpair(p: &HSet) -> bool {
    as_kpair(p).is_some()
}

/// First component, or `{}` when `p` is not a pair.
pub fn pr1(p: &HSet) -> HSet {
    as_kpair(p).map(|(x, _)| x).unwrap_or_default()
}

/// Second component, or `{}` when `p` is not a pair.
pub fn pr2(p: &HSet) -> HSet {
    as_kpair(p).map(|(_, y)| y).unwrap_or_default()
}

/// `{(x, m(x)) | x ∈ d}`.
pub fn graph_from_map<F: FnMut(&HSet) -> HSet>(d: &HSet, m: F) -> Result<HSet, KernelError> {
    graph_from_map_with(d, m, &Limits::current())
}

pub fn graph_from_map_with<F: FnMut(&HSet) -> HSet>(
    d: &HSet,
    mut m: F,
    limits: &Limits,
) -> Result<HSet, KernelError> {
    if d.size() > limits.max_size {
        return Err(KernelError::ResourceLimit {
            what: "graph size",
            needed: d.size(),
            limit: limits.max_size,
        });
    }
    Ok(d.image(|x| kpair(x.clone(), m(x))))
}

/// Total evaluation of `f` at `x`.
pub fn apply(f: &HSet, x: &HSet) -> HSet {
    let chosen = f.choose(|p| as_kpair(p).is_some_and(|(a, _)| &a == x));
    pr2(&chosen)
}

pub fn domain(f: &HSet) -> HSet {
    HSet::collect_unchecked(f.iter().filter_map(as_kpair).map(|(x, _)| x).collect())
}

pub fn range(f: &HSet) -> HSet {
    HSet::collect_unchecked(f.iter().filter_map(as_kpair).map(|(_, y)| y).collect())
}

/// All elements are pairs and no two share a first component.
pub fn is_function_graph(f: &HSet) -> bool {
    let mut firsts = Vec::with_capacity(f.size());
    for p in f.iter() {
        match as_kpair(p) {
            Some((x, _)) => firsts.push(x),
            None => return false,
        }
    }
    firsts.sort();
    firsts.windows(2).all(|w| w[0] != w[1])
}

/// Functional and no two pairs share a second component.
pub fn is_injective_graph(f: &HSet) -> bool {
    is_function_graph(f) && range(f).size() == f.size()
}

/// `g ∘ f`, restricted to points whose image under `f` lies in `domain(g)`.
pub fn compose_graphs(g: &HSet, f: &HSet) -> HSet {
    let g_dom = domain(g);
    let pairs = domain(f)
        .iter()
        .filter_map(|x| {
            let y = apply(f, x);
            g_dom.contains(&y).then(|| kpair(x.clone(), apply(g, &y)))
        })
        .collect();
    HSet::collect_unchecked(pairs)
}

pub fn identity_graph(s: &HSet) -> HSet {
    s.image(|x| kpair(x.clone(), x.clone()))
}

/// Swaps every pair; a function graph iff `f` is injective.
pub fn inverse_graph(f: &HSet) -> HSet {
    HSet::collect_unchecked(f.iter().filter_map(as_kpair).map(|(x, y)| kpair(y, x)).collect())
}
