use std::cmp::Ordering;

use hfset::functions::{as_kpair, kpair};
use hfset::lang::{eval, parse, Env};
use hfset::notation::Nota;
use hfset::HSet;
use proptest::prelude::*;

fn coded() -> impl Strategy<Value = HSet> {
    (0u64..1 << 20).prop_map(HSet::from_ackermann)
}

// Nested vectors, built into sets in whatever order they come.
#[derive(Debug, Clone)]
struct Raw(Vec<Raw>);

fn raw() -> impl Strategy<Value = Raw> {
    Just(Raw(Vec::new())).prop_recursive(5, 48, 4, |inner| prop::collection::vec(inner, 0..4).prop_map(Raw))
}

fn build(r: &Raw) -> HSet {
    HSet::from_elements(r.0.iter().map(build)).unwrap()
}

fn reversed(r: &Raw) -> Raw {
    Raw(r.0.iter().rev().map(reversed).collect())
}

proptest! {
    #[test]
    fn codes_round_trip(c in 0u64..1 << 40) {
        prop_assert_eq!(HSet::from_ackermann(c).ackermann(), Some(c));
    }

    #[test]
    fn order_follows_codes(a in coded(), b in coded()) {
        prop_assert_eq!(a.cmp(&b), a.ackermann().cmp(&b.ackermann()));
        prop_assert_eq!(a == b, a.cmp(&b) == Ordering::Equal);
    }

    #[test]
    fn members_are_smaller(x in raw()) {
        let x = build(&x);
        for e in x.iter() {
            prop_assert!(e < &x);
            prop_assert!(e.rank() < x.rank());
        }
    }

    #[test]
    fn element_order_is_irrelevant(x in raw()) {
        prop_assert_eq!(build(&x), build(&reversed(&x)));
    }

    #[test]
    fn order_is_transitive(a in raw(), b in raw(), c in raw()) {
        let mut v = [build(&a), build(&b), build(&c)];
        v.sort();
        prop_assert!(v[0] <= v[1] && v[1] <= v[2] && v[0] <= v[2]);
    }

    #[test]
    fn pairs_are_injective(a in coded(), b in coded(), c in coded(), d in coded()) {
        prop_assert_eq!(as_kpair(&kpair(a.clone(), b.clone())), Some((a.clone(), b.clone())));
        let same = kpair(a.clone(), b.clone()) == kpair(c.clone(), d.clone());
        prop_assert_eq!(same, a == c && b == d);
    }

    #[test]
    fn boolean_laws(a in coded(), b in coded()) {
        let u = a.union(&b);
        let i = a.intersection(&b);
        prop_assert!(a.is_subset(&u) && b.is_subset(&u));
        prop_assert!(i.is_subset(&a) && i.is_subset(&b));
        prop_assert_eq!(a.difference(&b).union(&i), a.clone());
        prop_assert_eq!(u.size() + i.size(), a.size() + b.size());
    }

    #[test]
    fn printed_sets_parse_back(x in raw()) {
        let x = build(&x);
        let text = x.to_string();
        prop_assert_eq!(eval(&parse(&text).unwrap(), &Env::default()).unwrap(), x);
    }

    #[test]
    fn tags_round_trip(letters in "[a-z]{1,6}", arity in 0usize..40) {
        let t = Nota::new(&letters, arity).unwrap();
        prop_assert_eq!(Nota::decode(&t.encode()), Some(t));
    }

    #[test]
    fn codes_are_not_tags(c in 0u64..1 << 20) {
        // Every tag has rank above 26, far beyond any 64-bit code.
        prop_assert_eq!(Nota::decode(&HSet::from_ackermann(c)), None);
    }
}
