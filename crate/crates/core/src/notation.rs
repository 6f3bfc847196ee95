//! Tags naming the slots of structured objects, and structures as functions
//! on tag domains.
//!
//! A tag is a nonempty word over `a..z` plus an arity, built like the term
//! `u_(n_(d_(r_(l_(DOT 0)))))`: each letter constructor becomes a pair
//! `(ord(c), rest)` with `a = 0, ..., z = 25`, and `DOT n` becomes
//! `(ord(26), ord(n))`.

use std::fmt;
use std::sync::LazyLock;

use thiserror::Error;

use crate::functions::{apply, as_kpair, domain, kpair};
use crate::kernel::HSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("invalid tag letters {0:?}: expected a nonempty word over a..z")]
    InvalidLetters(String),
    #[error("duplicate tag {0} in structure")]
    DuplicateTag(Nota),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nota {
    letters: String,
    arity: usize,
}

const TERMINATOR: usize = 26;

impl Nota {
    pub fn new(letters: &str, arity: usize) -> Result<Nota, NotationError> {
        if letters.is_empty() || !letters.bytes().all(|b| b.is_ascii_lowercase()) {
            return Err(NotationError::InvalidLetters(letters.to_owned()));
        }
        Ok(Nota {
            letters: letters.to_owned(),
            arity,
        })
    }

    pub fn letters(&self) -> &str {
        &self.letters
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `DOT n` encodes as `(ord(26), ord(n))` and letter `c` applied to a
    /// tail `t` as `(ord(c), t)`.
    pub fn encode(&self) -> HSet {
        let dot = kpair(HSet::numeral(TERMINATOR), HSet::numeral(self.arity));
        self.letters
            .bytes()
            .rev()
            .fold(dot, |tail, b| kpair(HSet::numeral((b - b'a') as usize), tail))
    }

    pub fn decode(x: &HSet) -> Option<Nota> {
        let mut letters = String::new();
        let mut cell = x.clone();
        loop {
            let (head, tail) = as_kpair(&cell)?;
            match head.as_natural()? {
                c if c < TERMINATOR => letters.push((b'a' + c as u8) as char),
                TERMINATOR if !letters.is_empty() => {
                    return Some(Nota {
                        letters,
                        arity: tail.as_natural()?,
                    });
                }
                _ => return None,
            }
            cell = tail;
        }
    }
}

/// Tags print as their literal form, e.g. `#plus.2`.
impl fmt::Display for Nota {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}.{}", self.letters, self.arity)
    }
}

pub fn tag(letters: &str, arity: usize) -> Result<Nota, NotationError> {
    Nota::new(letters, arity)
}

pub fn encode_tag(t: &Nota) -> HSet {
    t.encode()
}

pub fn decode_tag(x: &HSet) -> Option<Nota> {
    Nota::decode(x)
}

/// The standard tags.
pub mod tags {
    use super::Nota;

    fn fixed(letters: &str, arity: usize) -> Nota {
        Nota {
            letters: letters.to_owned(),
            arity,
        }
    }

    pub fn underlying() -> Nota {
        fixed("undrl", 0)
    }
    pub fn plus() -> Nota {
        fixed("plus", 2)
    }
    pub fn times() -> Nota {
        fixed("times", 2)
    }
    pub fn mult() -> Nota {
        fixed("mult", 2)
    }
    pub fn source() -> Nota {
        fixed("src", 0)
    }
    pub fn target() -> Nota {
        fixed("trg", 0)
    }
    pub fn mapping() -> Nota {
        fixed("map", 0)
    }
    pub fn order_graph() -> Nota {
        fixed("leq", 2)
    }
}

struct Encoded {
    underlying: HSet,
    plus: HSet,
    times: HSet,
    mult: HSet,
    source: HSet,
    target: HSet,
    mapping: HSet,
    order_graph: HSet,
}

static ENCODED: LazyLock<Encoded> = LazyLock::new(|| Encoded {
    underlying: tags::underlying().encode(),
    plus: tags::plus().encode(),
    times: tags::times().encode(),
    mult: tags::mult().encode(),
    source: tags::source().encode(),
    target: tags::target().encode(),
    mapping: tags::mapping().encode(),
    order_graph: tags::order_graph().encode(),
});

pub(crate) fn underlying_key() -> &'static HSet {
    &ENCODED.underlying
}
pub(crate) fn source_key() -> &'static HSet {
    &ENCODED.source
}
pub(crate) fn target_key() -> &'static HSet {
    &ENCODED.target
}
pub(crate) fn mapping_key() -> &'static HSet {
    &ENCODED.mapping
}
pub(crate) fn order_graph_key() -> &'static HSet {
    &ENCODED.order_graph
}

/// `{Underlying, Plus, Times}`, encoded.
pub fn dom_ring() -> HSet {
    HSet::collect_unchecked(vec![
        ENCODED.underlying.clone(),
        ENCODED.plus.clone(),
        ENCODED.times.clone(),
    ])
}

/// `{Underlying, Plus, Mult}`, encoded.
pub fn dom_module() -> HSet {
    HSet::collect_unchecked(vec![
        ENCODED.underlying.clone(),
        ENCODED.plus.clone(),
        ENCODED.mult.clone(),
    ])
}

/// `{Underlying, Plus, Times, Mult}`, encoded.
pub fn dom_algebra() -> HSet {
    HSet::collect_unchecked(vec![
        ENCODED.underlying.clone(),
        ENCODED.plus.clone(),
        ENCODED.times.clone(),
        ENCODED.mult.clone(),
    ])
}

/// A structure: the graph sending each encoded tag to its value.
pub fn make_struct<'a, I>(assoc: I) -> Result<HSet, NotationError>
where
    I: IntoIterator<Item = (&'a Nota, HSet)>,
{
    let mut seen: Vec<&Nota> = Vec::new();
    let mut pairs = Vec::new();
    for (t, v) in assoc {
        if seen.contains(&t) {
            return Err(NotationError::DuplicateTag(t.clone()));
        }
        seen.push(t);
        pairs.push(kpair(t.encode(), v));
    }
    Ok(HSet::collect_unchecked(pairs))
}

pub fn struct_domain(s: &HSet) -> HSet {
    domain(s)
}

/// True iff `s` is a function graph on encoded tags.
pub fn is_struct(s: &HSet) -> bool {
    crate::functions::is_function_graph(s) && domain(s).iter().all(|t| Nota::decode(t).is_some())
}

/// The underlying set: evaluation at `Underlying`.
#[allow(non_snake_case)]
pub fn U(a: &HSet) -> HSet {
    apply(a, underlying_key())
}

pub fn underlying(a: &HSet) -> HSet {
    U(a)
}

/// Curried evaluation: `ev_chain(f, [x, y]) = V(y, V(x, f))`.
pub fn ev_chain(f: &HSet, args: &[HSet]) -> HSet {
    args.iter().fold(f.clone(), |acc, x| apply(&acc, x))
}

/// Applies the operation stored under `t` in `a` to curried arguments.
pub fn operation(t: &Nota, a: &HSet, args: &[HSet]) -> HSet {
    ev_chain(&apply(a, &t.encode()), args)
}

/// Scalar multiplication; one definition serves modules and algebras alike.
pub fn mult(a: &HSet, x: &HSet, y: &HSet) -> HSet {
    ev_chain(&apply(a, &ENCODED.mult), &[x.clone(), y.clone()])
}

pub fn plus(a: &HSet, x: &HSet, y: &HSet) -> HSet {
    ev_chain(&apply(a, &ENCODED.plus), &[x.clone(), y.clone()])
}

pub fn times(a: &HSet, x: &HSet, y: &HSet) -> HSet {
    ev_chain(&apply(a, &ENCODED.times), &[x.clone(), y.clone()])
}

/// Whether `t` is being used with as many curried arguments as its arity.
pub fn arity_matches(t: &Nota, args: &[HSet]) -> bool {
    t.arity == args.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::graph_from_map;

    fn ord(n: usize) -> HSet {
        HSet::ord(n).unwrap()
    }

    #[test]
    fn tag_round_trip() {
        for (w, n) in [("a", 0), ("undrl", 0), ("plus", 2), ("zzz", 7), ("abcxyz", 1)] {
            let t = tag(w, n).unwrap();
            assert_eq!(decode_tag(&encode_tag(&t)), Some(t));
        }
    }

    #[test]
    fn tag_validation() {
        assert!(matches!(tag("", 0), Err(NotationError::InvalidLetters(_))));
        assert!(matches!(tag("Plus", 2), Err(NotationError::InvalidLetters(_))));
        assert!(matches!(tag("a1", 2), Err(NotationError::InvalidLetters(_))));
    }

    #[test]
    fn underlying_spelling() {
        // u_(n_(d_(r_(l_(DOT 0))))).
        let expected = [20usize, 13, 3, 17, 11]
            .iter()
            .rev()
            .fold(kpair(ord(26), ord(0)), |t, c| kpair(ord(*c), t));
        assert_eq!(encode_tag(&tags::underlying()), expected);
        assert_eq!(tags::underlying(), tag("undrl", 0).unwrap());
        assert_eq!(tags::plus(), tag("plus", 2).unwrap());
        assert_ne!(encode_tag(&tags::plus()), encode_tag(&tags::mult()));
    }

    #[test]
    fn decode_rejects_non_tags() {
        assert_eq!(decode_tag(&HSet::empty()), None);
        assert_eq!(decode_tag(&ord(3)), None);
        // A bare DOT has no letters.
        assert_eq!(decode_tag(&kpair(ord(26), ord(0))), None);
        assert_eq!(decode_tag(&kpair(ord(0), HSet::empty())), None);
        assert_eq!(decode_tag(&kpair(ord(0), kpair(ord(27), ord(0)))), None);
        let a0 = kpair(ord(0), kpair(ord(26), ord(0)));
        assert_eq!(decode_tag(&a0), Some(tag("a", 0).unwrap()));
    }

    #[test]
    fn structures() {
        assert_eq!(struct_domain(&make_struct([]).unwrap()), HSet::empty());
        let carrier = ord(3);
        let op = graph_from_map(&carrier, |_| HSet::empty()).unwrap();
        let (u, p, t) = (tags::underlying(), tags::plus(), tags::times());
        let ring = make_struct([(&u, carrier.clone()), (&p, op.clone()), (&t, op)]).unwrap();
        assert_eq!(struct_domain(&ring), dom_ring());
        assert_eq!(U(&ring), carrier);
        assert!(is_struct(&ring));
        let v = ord(5);
        assert_eq!(apply(&make_struct([(&p, v.clone())]).unwrap(), &p.encode()), v);
        let dup = make_struct([(&u, ord(1)), (&u, ord(2))]);
        assert!(matches!(dup, Err(NotationError::DuplicateTag(_))));
    }

    #[test]
    fn underlying_defaults() {
        assert_eq!(U(&HSet::empty()), HSet::empty());
        let s = ord(4);
        assert_eq!(U(&make_struct([(&tags::underlying(), s.clone())]).unwrap()), s);
        let m = make_struct([(&tags::plus(), ord(1))]).unwrap();
        assert_eq!(U(&m), HSet::empty());
    }

    #[test]
    fn domains() {
        let enc = |t: Nota| t.encode();
        let module = HSet::from_elements(vec![
            enc(tags::underlying()),
            enc(tags::plus()),
            enc(tags::mult()),
        ])
        .unwrap();
        assert_eq!(dom_module(), module);
        assert_eq!(dom_algebra().size(), 4);
        assert!(dom_ring().is_subset(&dom_algebra()));
        assert!(dom_module().is_subset(&dom_algebra()));
        let both = dom_ring().intersection(&dom_module());
        assert_eq!(
            both,
            HSet::from_elements(vec![enc(tags::underlying()), enc(tags::plus())]).unwrap()
        );
    }

    #[test]
    fn ev_chain_on_curried_table() {
        assert_eq!(ev_chain(&ord(3), &[]), ord(3));
        let table = [[0usize, 1, 2], [1, 2, 0], [2, 0, 1]];
        let carrier = ord(3);
        let curried = graph_from_map(&carrier, |x| {
            let i = x.as_natural().unwrap();
            graph_from_map(&carrier, |y| ord(table[i][y.as_natural().unwrap()])).unwrap()
        })
        .unwrap();
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(ev_chain(&curried, &[ord(i), ord(j)]), ord(v));
            }
        }
        let module = make_struct([(&tags::underlying(), carrier), (&tags::mult(), curried.clone())]).unwrap();
        let triple = apply(&apply(&apply(&module, &tags::mult().encode()), &ord(1)), &ord(2));
        assert_eq!(mult(&module, &ord(1), &ord(2)), triple);
        assert_eq!(triple, ord(0));
        assert_eq!(operation(&tags::mult(), &module, &[ord(2), ord(2)]), ord(1));
        assert!(arity_matches(&tags::mult(), &[ord(0), ord(0)]));
        assert!(!arity_matches(&tags::underlying(), &[ord(0)]));
    }
}
