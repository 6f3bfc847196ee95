//! Morphisms between underlying sets, shared by every kind of structure.

use thiserror::Error;

use crate::functions::{
    apply, compose_graphs, domain, identity_graph, inverse_graph, is_function_graph, is_injective_graph,
    range,
};
use crate::kernel::HSet;
use crate::notation::{make_struct, mapping_key, source_key, tags, target_key, U};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UmorphismError {
    #[error("cannot compose: target {target} of the first map is not source {next} of the second")]
    NotComposable { target: HSet, next: HSet },
    #[error("not a valid umorphism: {0}")]
    Invalid(HSet),
}

pub fn make_umorphism(src: HSet, tgt: HSet, mapping: HSet) -> HSet {
    make_struct([
        (&tags::source(), src),
        (&tags::target(), tgt),
        (&tags::mapping(), mapping),
    ])
    .expect("standard tags are distinct")
}

pub fn source(f: &HSet) -> HSet {
    apply(f, source_key())
}

pub fn target(f: &HSet) -> HSet {
    apply(f, target_key())
}

pub fn mapping(f: &HSet) -> HSet {
    apply(f, mapping_key())
}

/// The mapping is a function from `U(source)` into `U(target)`.
pub fn umorphism_ok(f: &HSet) -> bool {
    let m = mapping(f);
    is_function_graph(&m) && domain(&m) == U(&source(f)) && range(&m).is_subset(&U(&target(f)))
}

pub fn uidentity(a: &HSet) -> HSet {
    make_umorphism(a.clone(), a.clone(), identity_graph(&U(a)))
}

/// `g ∘ f`.
pub fn ucompose(g: &HSet, f: &HSet) -> Result<HSet, UmorphismError> {
    let (tf, sg) = (target(f), source(g));
    if tf != sg {
        return Err(UmorphismError::NotComposable { target: tf, next: sg });
    }
    for h in [f, g] {
        if !umorphism_ok(h) {
            return Err(UmorphismError::Invalid(h.clone()));
        }
    }
    Ok(make_umorphism(
        source(f),
        target(g),
        compose_graphs(&mapping(g), &mapping(f)),
    ))
}

/// The inverse, when the mapping is a bijection onto `U(target)`.
pub fn uinverse(f: &HSet) -> Option<HSet> {
    let m = mapping(f);
    if !umorphism_ok(f) || !is_injective_graph(&m) || range(&m) != U(&target(f)) {
        return None;
    }
    Some(make_umorphism(target(f), source(f), inverse_graph(&m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{graph_from_map, kpair};
    use crate::notation::struct_domain;

    fn ord(n: usize) -> HSet {
        HSet::ord(n).unwrap()
    }

    fn obj(carrier: HSet) -> HSet {
        make_struct([(&tags::underlying(), carrier)]).unwrap()
    }

    #[test]
    fn slots() {
        let (a, b) = (obj(ord(2)), obj(ord(3)));
        let g = graph_from_map(&ord(2), |x| x.clone()).unwrap();
        let f = make_umorphism(a.clone(), b.clone(), g.clone());
        assert_eq!(source(&f), a);
        assert_eq!(target(&f), b);
        assert_eq!(mapping(&f), g);
        let expected = HSet::from_elements(vec![
            source_key().clone(),
            target_key().clone(),
            mapping_key().clone(),
        ])
        .unwrap();
        assert_eq!(struct_domain(&f), expected);
        assert!(umorphism_ok(&f));
    }

    #[test]
    fn validity() {
        let a = obj(ord(3));
        assert!(umorphism_ok(&uidentity(&a)));
        let missing = graph_from_map(&ord(2), |x| x.clone()).unwrap();
        assert!(!umorphism_ok(&make_umorphism(a.clone(), a.clone(), missing)));
        let escaping = graph_from_map(&ord(3), |x| x.clone())
            .unwrap()
            .difference(&HSet::singleton(kpair(ord(2), ord(2))))
            .insert(kpair(ord(2), ord(7)));
        assert!(!umorphism_ok(&make_umorphism(a.clone(), a, escaping)));
    }

    #[test]
    fn category_laws_small() {
        let (a, b) = (obj(ord(3)), obj(ord(2)));
        let f = make_umorphism(
            a.clone(),
            b.clone(),
            graph_from_map(&ord(3), |x| if x.is_empty() { ord(1) } else { ord(0) }).unwrap(),
        );
        assert_eq!(ucompose(&uidentity(&b), &f).unwrap(), f);
        assert_eq!(ucompose(&f, &uidentity(&a)).unwrap(), f);
        assert!(matches!(
            ucompose(&f, &f),
            Err(UmorphismError::NotComposable { .. })
        ));
        assert_eq!(uinverse(&f), None);
    }

    #[test]
    fn inverse_round_trip() {
        let (a, b) = (
            obj(ord(3)),
            obj(HSet::from_elements(vec![ord(4), ord(5), ord(6)]).unwrap()),
        );
        let f = make_umorphism(
            a.clone(),
            b.clone(),
            graph_from_map(&ord(3), |x| HSet::ord(x.as_natural().unwrap() + 4).unwrap()).unwrap(),
        );
        let inv = uinverse(&f).unwrap();
        assert!(umorphism_ok(&inv));
        assert_eq!(ucompose(&inv, &f).unwrap(), uidentity(&a));
        assert_eq!(ucompose(&f, &inv).unwrap(), uidentity(&b));
    }
}
