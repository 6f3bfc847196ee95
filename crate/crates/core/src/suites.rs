//! Seeded property suites over every module.
//!
//! Each property runs `size` independent cases (exhaustive sweeps ignore
//! `size`). Case `i` of property `p` draws from `case_rng(seed, p, i)`, so a
//! report depends only on `(name, size, seed)` and never on scheduling.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cardinal::{bcs, cardinal_iso, cardinality, Bijection, CardinalError};
use crate::exec::Exec;
use crate::functions::{
    apply, compose_graphs, domain, graph_from_map, identity_graph, inverse_graph, is_function_graph, kpair,
    pr1, pr2, range,
};
use crate::gen::{
    case_rng, order_from_matrix, random_bijection, random_map, random_partial_order, random_set,
    random_set_of_size, random_subset, random_well_order, random_word,
};
use crate::kernel::{sub, HSet};
use crate::lang::{eval, parse, print_canonical, Env};
use crate::notation::{dom_algebra, dom_module, dom_ring, make_struct, mult, struct_domain, tags, Nota, U};
use crate::order::Order;
use crate::ordinal::{
    chain_generate, is_ordinal, leq_gen, leq_gen_by_chain, ordinal_leq, wo_avatars, wo_ordinal, Step, TriBool,
};
use crate::umorphism::{make_umorphism, ucompose, uidentity, uinverse, umorphism_ok};

/// Registered suite names, in run order.
pub const SUITES: &[&str] = &[
    "axioms",
    "numerals",
    "functions",
    "notation",
    "umorphism",
    "order",
    "ordinal",
    "cardinal",
    "bcs",
    "syntax",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; known suites: {list}", list = SUITES.join(", "))]
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub size: usize,
    pub seed: u64,
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failure.is_none())
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} size {} seed {}", self.suite, self.size, self.seed)?;
        for p in &self.properties {
            match &p.failure {
                None => writeln!(f, "PASS {} ({} cases)", p.name, p.cases)?,
                Some(fail) => writeln!(
                    f,
                    "FAIL {} ({} cases): case {}: {}",
                    p.name, p.cases, fail.case, fail.message
                )?,
            }
        }
        write!(f, "{}", if self.passed() { "ok" } else { "FAILED" })
    }
}

pub fn run_suite(name: &str, size: usize, seed: u64) -> Result<SuiteReport, SuiteError> {
    run_suite_with(name, size, seed, Exec::default())
}

pub fn run_suite_with(name: &str, size: usize, seed: u64, exec: Exec) -> Result<SuiteReport, SuiteError> {
    let mut run = Run {
        seed,
        exec,
        properties: Vec::new(),
    };
    match name {
        "axioms" => axioms(&mut run, size),
        "numerals" => numerals(&mut run, size),
        "functions" => functions(&mut run, size),
        "notation" => notation(&mut run, size),
        "umorphism" => umorphism(&mut run, size),
        "order" => order(&mut run, size),
        "ordinal" => ordinal(&mut run, size),
        "cardinal" => cardinal(&mut run, size),
        "bcs" => bcs_suite(&mut run, size),
        "syntax" => syntax(&mut run, size),
        _ => return Err(SuiteError::Unknown(name.to_owned())),
    }
    Ok(SuiteReport {
        suite: name.to_owned(),
        size,
        seed,
        properties: run.properties,
    })
}

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct Run {
    seed: u64,
    exec: Exec,
    properties: Vec<PropertyReport>,
}

impl Run {
    fn property<F>(&mut self, name: &'static str, cases: usize, check: F)
    where
        F: Fn(&mut ChaCha8Rng, usize) -> Check + Sync + Send,
    {
        let (seed, stream) = (self.seed, self.properties.len() as u64);
        let failure = self
            .exec
            .first_failure(cases, |i| check(&mut case_rng(seed, stream, i), i))
            .map(|(case, message)| Failure { case, message });
        self.properties.push(PropertyReport { name, cases, failure });
    }
}

/// Canonical text, cut short for large values such as encoded tags.
fn show(x: &HSet) -> String {
    format!("{x:?}")
}

fn small_set(rng: &mut ChaCha8Rng) -> HSet {
    random_set(rng, 5, 4)
}

fn sized_set(rng: &mut ChaCha8Rng, max: usize) -> HSet {
    let n = rng.gen_range(0..=max);
    random_set_of_size(rng, n)
}

/// A simple deterministic map picked by `k`.
fn named_map(k: usize, x: &HSet) -> HSet {
    match k % 5 {
        0 => x.clone(),
        1 => HSet::singleton(x.clone()),
        2 => x.successor(),
        3 => x.union_family().unwrap_or_default(),
        _ => HSet::from_ackermann(x.size() as u64),
    }
}

fn axioms(run: &mut Run, size: usize) {
    run.property("extensionality", size, |rng, _| {
        let a = small_set(rng);
        let b = if rng.gen_bool(0.5) {
            // Same elements, shuffled and repeated.
            let mut xs = a.elements().to_vec();
            xs.extend(a.iter().filter(|_| rng.gen_bool(0.3)).cloned());
            xs.reverse();
            HSet::from_elements(xs).map_err(|e| e.to_string())?
        } else {
            small_set(rng)
        };
        let double_sub = sub(&a, &b) && sub(&b, &a);
        let cmp_eq = a.cmp(&b) == Ordering::Equal;
        ensure!(
            (a == b) == double_sub && double_sub == cmp_eq,
            "a = {}, b = {}: equal {}, double sub {double_sub}, cmp {:?}",
            show(&a),
            show(&b),
            a == b,
            a.cmp(&b)
        );
        Ok(())
    });

    run.property("total order", size, |rng, _| {
        let (a, b, c) = (small_set(rng), small_set(rng), small_set(rng));
        ensure!(
            a.cmp(&b) == b.cmp(&a).reverse(),
            "antisymmetry fails on {} and {}",
            show(&a),
            show(&b)
        );
        let mut v = [a, b, c];
        v.sort();
        ensure!(
            v[0] <= v[2],
            "transitivity fails on {}, {}, {}",
            show(&v[0]),
            show(&v[1]),
            show(&v[2])
        );
        Ok(())
    });

    run.property("choice", size, |rng, _| {
        let s = small_set(rng);
        let k = rng.gen_range(0..3);
        let pred = |e: &HSet| e.size() % 3 == k;
        let chosen = s.choose(pred);
        match s.iter().find(|e| pred(e)) {
            Some(least) => {
                ensure!(
                    pred(&chosen) && s.contains(&chosen),
                    "choose on {} returned non-witness {}",
                    show(&s),
                    show(&chosen)
                );
                ensure!(
                    &chosen == least,
                    "choose on {} is not the least witness",
                    show(&s)
                );
            }
            None => ensure!(chosen.is_empty(), "choose without witness gave {}", show(&chosen)),
        }
        Ok(())
    });

    run.property("replacement", size, |rng, _| {
        let s = small_set(rng);
        let k = rng.gen_range(0..5);
        let img = s.image(|x| named_map(k, x));
        for x in s.iter() {
            ensure!(
                img.contains(&named_map(k, x)),
                "image of {} under map {k} misses f({})",
                show(&s),
                show(x)
            );
        }
        for y in img.iter() {
            ensure!(
                s.iter().any(|x| named_map(k, x) == *y),
                "image of {} under map {k} has {} without preimage",
                show(&s),
                show(y)
            );
        }
        Ok(())
    });

    run.property("regularity", size, |rng, _| {
        let x = small_set(rng);
        ensure!(!x.contains(&x), "{} is a member of itself", show(&x));
        if !x.is_empty() {
            ensure!(
                x.iter().any(|e| e.intersection(&x).is_empty()),
                "{} has no element disjoint from it",
                show(&x)
            );
        }
        Ok(())
    });
}

/// Exact checks for `n ≤ min(size, 64)`.
fn numerals(run: &mut Run, size: usize) {
    let bound = size.min(64);
    let cases = bound + 1;
    run.property("size and rank", cases, |_, n| {
        let o = HSet::ord(n).map_err(|e| e.to_string())?;
        ensure!(
            o.size() == n && o.rank() == n,
            "ord({n}) has size {} and rank {}",
            o.size(),
            o.rank()
        );
        ensure!(o.as_natural() == Some(n), "ord({n}) does not read back as {n}");
        ensure!(is_ordinal(&o), "ord({n}) is not an ordinal");
        Ok(())
    });
    run.property("membership is <", cases, |_, k| {
        let ok = HSet::ord(k).map_err(|e| e.to_string())?;
        for j in 0..=bound {
            let oj = HSet::ord(j).map_err(|e| e.to_string())?;
            ensure!(
                ok.contains(&oj) == (j < k),
                "ord({j}) ∈ ord({k}) is {}",
                ok.contains(&oj)
            );
            ensure!((oj == ok) == (j == k), "ord({j}) = ord({k}) is {}", oj == ok);
        }
        Ok(())
    });
    run.property("successor", bound, |_, n| {
        let o = HSet::ord(n).map_err(|e| e.to_string())?;
        let next = HSet::ord(n + 1).map_err(|e| e.to_string())?;
        ensure!(
            o.union(&HSet::singleton(o.clone())) == next,
            "ord({n}) ∪ {{ord({n})}} ≠ ord({})",
            n + 1
        );
        Ok(())
    });
}

fn functions(run: &mut Run, size: usize) {
    run.property("pairs", size, |rng, _| {
        let (a, b, c, d) = (small_set(rng), small_set(rng), small_set(rng), small_set(rng));
        let (p, q) = (kpair(a.clone(), b.clone()), kpair(c.clone(), d.clone()));
        ensure!(
            pr1(&p) == a && pr2(&p) == b,
            "projections of {} are wrong",
            show(&p)
        );
        ensure!(
            (p == q) == (a == c && b == d),
            "pairing is not injective on {} and {}",
            show(&p),
            show(&q)
        );
        Ok(())
    });

    run.property("evaluation", size, |rng, _| {
        let d = sized_set(rng, 12);
        let k = rng.gen_range(0..5);
        let g = graph_from_map(&d, |x| named_map(k, x)).map_err(|e| e.to_string())?;
        ensure!(
            is_function_graph(&g) && domain(&g) == d,
            "graph of map {k} on {} is malformed",
            show(&d)
        );
        for x in d.iter() {
            ensure!(
                apply(&g, x) == named_map(k, x),
                "graph of map {k} disagrees at {}",
                show(x)
            );
        }
        let outside = small_set(rng);
        if !d.contains(&outside) {
            ensure!(
                apply(&g, &outside).is_empty(),
                "evaluation outside the domain at {}",
                show(&outside)
            );
        }
        Ok(())
    });

    run.property("least pair wins", size, |rng, _| {
        let x = small_set(rng);
        let (y1, y2) = (small_set(rng), small_set(rng));
        let f = HSet::pair(kpair(x.clone(), y1.clone()), kpair(x.clone(), y2.clone()));
        let expected = if kpair(x.clone(), y1.clone()) <= kpair(x.clone(), y2.clone()) {
            y1
        } else {
            y2
        };
        ensure!(
            apply(&f, &x) == expected,
            "ambiguous graph {} evaluated wrongly",
            show(&f)
        );
        Ok(())
    });

    run.property("composition", size, |rng, _| {
        let a = sized_set(rng, 8);
        let b = sized_set(rng, 8).insert(HSet::empty());
        let f = random_map(rng, &a, &b);
        ensure!(
            compose_graphs(&identity_graph(&b), &f) == f,
            "id ∘ f ≠ f for f = {}",
            show(&f)
        );
        ensure!(
            compose_graphs(&f, &identity_graph(&a)) == f,
            "f ∘ id ≠ f for f = {}",
            show(&f)
        );
        let c = random_set_of_size(rng, a.size());
        let h = random_bijection(rng, &a, &c);
        let back = compose_graphs(&inverse_graph(&h), &h);
        ensure!(back == identity_graph(&a), "h⁻¹ ∘ h ≠ id for h = {}", show(&h));
        ensure!(range(&h) == c, "bijection {} misses part of its target", show(&h));
        Ok(())
    });
}

fn operation_table(rng: &mut ChaCha8Rng, carrier: &HSet) -> Vec<Vec<HSet>> {
    let elems = carrier.elements();
    elems
        .iter()
        .map(|_| {
            elems
                .iter()
                .map(|_| elems[rng.gen_range(0..elems.len())].clone())
                .collect()
        })
        .collect()
}

/// The curried graph `x ↦ (y ↦ table[x][y])`.
fn curried(carrier: &HSet, table: &[Vec<HSet>]) -> HSet {
    let elems = carrier.elements();
    HSet::from_elements(elems.iter().enumerate().map(|(i, x)| {
        let row = HSet::from_elements(
            elems
                .iter()
                .enumerate()
                .map(|(j, y)| kpair(y.clone(), table[i][j].clone())),
        )
        .expect("small table");
        kpair(x.clone(), row)
    }))
    .expect("small table")
}

fn random_tag(rng: &mut ChaCha8Rng) -> Nota {
    let word = random_word(rng, 6);
    Nota::new(&word, rng.gen_range(0..4)).expect("generated words are lowercase")
}

fn notation(run: &mut Run, size: usize) {
    run.property("tag round trip", size, |rng, _| {
        let t = random_tag(rng);
        let back = Nota::decode(&t.encode());
        ensure!(back.as_ref() == Some(&t), "{t} decodes as {back:?}");
        Ok(())
    });

    let seed = run.seed;
    run.property("tag injectivity", 1, move |_, _| {
        let mut seen: HashMap<HSet, Nota> = HashMap::new();
        let mut rng = case_rng(seed, u64::MAX, 0);
        for _ in 0..size {
            let t = random_tag(&mut rng);
            if let Some(prev) = seen.insert(t.encode(), t.clone()) {
                ensure!(prev == t, "{prev} and {t} share an encoding");
            }
        }
        Ok(())
    });

    run.property("mult unfolding", size, |rng, _| {
        let carrier = random_set_of_size(rng, 3);
        let table = operation_table(rng, &carrier);
        let graph = curried(&carrier, &table);
        let a = make_struct([(&tags::underlying(), carrier.clone()), (&tags::mult(), graph)])
            .map_err(|e| e.to_string())?;
        let key = tags::mult().encode();
        for (i, x) in carrier.iter().enumerate() {
            for (j, y) in carrier.iter().enumerate() {
                let literal = apply(&apply(&apply(&a, &key), x), y);
                let via = mult(&a, x, y);
                ensure!(
                    literal == via && via == table[i][j],
                    "mult at ({}, {}) gave {}, unfolding {}, table {}",
                    show(x),
                    show(y),
                    show(&via),
                    show(&literal),
                    show(&table[i][j])
                );
            }
        }
        ensure!(U(&a) == carrier, "underlying set is {}", show(&U(&a)));
        Ok(())
    });

    run.property("structure domains", 1, |_, _| {
        let enc = |w: &str, n: usize| Nota::new(w, n).expect("fixed word").encode();
        let set = |ts: &[HSet]| HSet::from_elements(ts.to_vec()).expect("few tags");
        let (u, p, t, m) = (enc("undrl", 0), enc("plus", 2), enc("times", 2), enc("mult", 2));
        ensure!(
            dom_ring() == set(&[u.clone(), p.clone(), t.clone()]),
            "Dom_Ring mismatch"
        );
        ensure!(
            dom_module() == set(&[u.clone(), p.clone(), m.clone()]),
            "Dom_Module mismatch"
        );
        ensure!(
            dom_algebra() == set(&[u.clone(), p.clone(), t.clone(), m.clone()]),
            "Dom_Algebra mismatch"
        );
        let ring = make_struct([
            (&tags::underlying(), HSet::empty()),
            (&tags::plus(), HSet::empty()),
            (&tags::times(), HSet::empty()),
        ])
        .map_err(|e| e.to_string())?;
        ensure!(
            struct_domain(&ring) == dom_ring(),
            "a ring's domain is not Dom_Ring"
        );
        Ok(())
    });
}

fn object(carrier: HSet) -> HSet {
    make_struct([(&tags::underlying(), carrier)]).expect("one tag")
}

fn nonempty_carrier(rng: &mut ChaCha8Rng, max: usize) -> HSet {
    let n = rng.gen_range(1..=max);
    random_set_of_size(rng, n)
}

fn umorphism(run: &mut Run, size: usize) {
    run.property("category laws", size, |rng, _| {
        let carriers: Vec<HSet> = (0..4).map(|_| nonempty_carrier(rng, 6)).collect();
        let objs: Vec<HSet> = carriers.iter().cloned().map(object).collect();
        let arrow = |rng: &mut ChaCha8Rng, i: usize| {
            make_umorphism(
                objs[i].clone(),
                objs[i + 1].clone(),
                random_map(rng, &carriers[i], &carriers[i + 1]),
            )
        };
        let (f, g, h) = (arrow(rng, 0), arrow(rng, 1), arrow(rng, 2));
        let compose = |x: &HSet, y: &HSet| ucompose(x, y).map_err(|e| e.to_string());
        for m in [&f, &g, &h] {
            ensure!(umorphism_ok(m), "generated map is invalid");
        }
        ensure!(
            compose(&uidentity(&objs[1]), &f)? == f,
            "id ∘ f ≠ f on {}",
            show(&carriers[0])
        );
        ensure!(
            compose(&f, &uidentity(&objs[0]))? == f,
            "f ∘ id ≠ f on {}",
            show(&carriers[0])
        );
        let left = compose(&h, &compose(&g, &f)?)?;
        let right = compose(&compose(&h, &g)?, &f)?;
        ensure!(left == right, "associativity fails from {}", show(&carriers[0]));
        ensure!(umorphism_ok(&left), "composite is invalid");
        Ok(())
    });

    run.property("inverse round trip", size, |rng, _| {
        let a = sized_set(rng, 6);
        let b = random_set_of_size(rng, a.size());
        let (oa, ob) = (object(a.clone()), object(b.clone()));
        let f = make_umorphism(oa.clone(), ob.clone(), random_bijection(rng, &a, &b));
        let inv = uinverse(&f).ok_or_else(|| format!("no inverse for a bijection on {}", show(&a)))?;
        let there = ucompose(&inv, &f).map_err(|e| e.to_string())?;
        let back = ucompose(&f, &inv).map_err(|e| e.to_string())?;
        ensure!(there == uidentity(&oa), "f⁻¹ ∘ f ≠ id on {}", show(&a));
        ensure!(back == uidentity(&ob), "f ∘ f⁻¹ ≠ id on {}", show(&b));
        Ok(())
    });
}

/// Carrier size and relation bits for case `i` of the sweep over all
/// reflexive relations on carriers of size ≤ 4.
fn relation_case(mut i: usize) -> (usize, u32) {
    for n in 0..=4usize {
        let count = 1usize << (n * n - n);
        if i < count {
            return (n, i as u32);
        }
        i -= count;
    }
    unreachable!("case index beyond the sweep")
}

const RELATION_SWEEP: usize = 1 + 1 + 4 + 64 + 4096;

fn relation_matrix(n: usize, bits: u32) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    let mut k = 0;
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i == j {
                *cell = true;
            } else {
                *cell = bits >> k & 1 == 1;
                k += 1;
            }
        }
    }
    m
}

fn check_maximal(a: &Order) -> Check {
    if a.carrier().is_empty() {
        ensure!(a.maximal_element().is_err(), "empty order has a maximal element");
        return Ok(());
    }
    let m = a.maximal_element().map_err(|e| e.to_string())?;
    ensure!(
        a.carrier().contains(&m),
        "maximal element {} is outside the carrier",
        show(&m)
    );
    if let Some(v) = a.carrier().iter().find(|v| a.lt(&m, v)) {
        return Err(format!(
            "{} lies strictly above the maximal element {}",
            show(v),
            show(&m)
        ));
    }
    Ok(())
}

fn order(run: &mut Run, size: usize) {
    run.property("zorn random", size, |rng, _| {
        let carrier = sized_set(rng, 10);
        let density = rng.gen_range(0.0..0.6);
        let a = random_partial_order(rng, &carrier, density);
        ensure!(
            a.is_order(),
            "generator produced a non-order on {}",
            show(&carrier)
        );
        check_maximal(&a)
    });

    run.property("zorn exhaustive", RELATION_SWEEP, |_, i| {
        let (n, bits) = relation_case(i);
        let elems: Vec<HSet> = (0..n).map(|k| HSet::ord(k).expect("small")).collect();
        let m = relation_matrix(n, bits);
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(m[i][j] && m[j][i])));
        let transitive = (0..n).all(|i| (0..n).all(|j| !m[i][j] || (0..n).all(|k| !m[j][k] || m[i][k])));
        let a = order_from_matrix(&elems, &m);
        ensure!(
            a.is_order() == (antisymmetric && transitive),
            "is_order misjudges relation {bits:#b} on {n} elements"
        );
        if a.is_order() {
            check_maximal(&a)?;
            let top = a.upper_bound(a.carrier());
            if a.carrier()
                .iter()
                .any(|g| a.carrier().iter().all(|x| a.leq(x, g)))
            {
                ensure!(
                    a.carrier().contains(&top),
                    "greatest element missed for {bits:#b} on {n}"
                );
            }
        }
        Ok(())
    });
}

/// Ackermann codes below this bound are exactly the sets of rank ≤ 4.
pub const RANK4_CODES: u64 = 1 << 16;

fn ordinal(run: &mut Run, size: usize) {
    run.property("characterization", RANK4_CODES as usize, |_, code| {
        let o = HSet::from_ackermann(code as u64);
        let expected = is_ordinal(&o);
        let exact = leq_gen(&Step::Identity, &o, &o, 0) == TriBool::True;
        let chained = leq_gen_by_chain(&Step::Identity, &o, &o, o.rank() + 1) == TriBool::True;
        ensure!(
            expected == exact && expected == chained,
            "{}: ordinal {expected}, leq_gen {exact}, chain {chained}",
            show(&o)
        );
        Ok(())
    });

    run.property("identity chain", 1, |_, _| {
        let chain = chain_generate(&Step::Identity, 16).map_err(|e| e.to_string())?;
        for (k, e) in chain.elements.iter().enumerate() {
            ensure!(e.as_natural() == Some(k), "chain element {k} is {}", show(e));
        }
        Ok(())
    });

    run.property("avatars", size, |rng, _| {
        let carrier = sized_set(rng, 12);
        let a = random_well_order(rng, &carrier);
        let avatars: HashMap<HSet, HSet> = wo_avatars(&a).map_err(|e| e.to_string())?.into_iter().collect();
        let ordinal = wo_ordinal(&a).map_err(|e| e.to_string())?;
        let n = carrier.size();
        ensure!(
            Some(n) == ordinal.as_natural(),
            "wo_ordinal of {n} elements is {}",
            show(&ordinal)
        );
        let image = HSet::from_elements(avatars.values().cloned()).map_err(|e| e.to_string())?;
        ensure!(
            image == ordinal && avatars.len() == n,
            "avatars are not a bijection onto the ordinal"
        );
        for x in carrier.iter() {
            let expected = a.punctured_downward(x).image(|y| avatars[y].clone());
            ensure!(avatars[x] == expected, "recursion equation fails at {}", show(x));
            for y in carrier.iter() {
                ensure!(
                    a.lt(x, y) == avatars[y].contains(&avatars[x]),
                    "avatar map is not strictly increasing at {} < {}",
                    show(x),
                    show(y)
                );
            }
        }
        Ok(())
    });

    run.property("suborder", size, |rng, _| {
        let carrier = sized_set(rng, 12);
        let a = random_well_order(rng, &carrier);
        let u = random_subset(rng, &carrier);
        let b = a.suborder(&u).map_err(|e| e.to_string())?;
        let (small, big) = (
            wo_ordinal(&b).map_err(|e| e.to_string())?,
            wo_ordinal(&a).map_err(|e| e.to_string())?,
        );
        ensure!(
            ordinal_leq(&small, &big).map_err(|e| e.to_string())?,
            "suborder on {} has ordinal {} above {}",
            show(&u),
            show(&small),
            show(&big)
        );
        Ok(())
    });
}

fn cardinal(run: &mut Run, size: usize) {
    run.property("cardinality", size, |rng, _| {
        let x = sized_set(rng, 32);
        let card = cardinality(&x);
        ensure!(is_ordinal(&card), "cardinality of {} is not an ordinal", show(&x));
        let iso = cardinal_iso(&x);
        Bijection::certify(iso.graph().clone()).map_err(|e| e.to_string())?;
        ensure!(
            domain(iso.graph()) == x && range(iso.graph()) == card,
            "cardinal isomorphism of {} is not onto {}",
            show(&x),
            show(&card)
        );
        // Minimality: every smaller ordinal is too small to be equipotent.
        ensure!(
            card.iter().all(|o| o.size() < x.size()),
            "cardinality of {} is not least",
            show(&x)
        );
        Ok(())
    });
}

fn bcs_suite(run: &mut Run, size: usize) {
    run.property("bcs", size, |rng, _| {
        let n = rng.gen_range(0..=64);
        let (x, y) = (random_set_of_size(rng, n), random_set_of_size(rng, n));
        let f = random_bijection(rng, &x, &y);
        let g = random_bijection(rng, &y, &x);
        let b = bcs(&x, &y, &f, &g).map_err(|e| e.to_string())?;
        let graph = b.graph();
        ensure!(is_function_graph(graph), "bcs result is not a function");
        ensure!(
            domain(graph) == x && range(graph) == y,
            "bcs result is not onto y"
        );
        ensure!(range(graph).size() == graph.size(), "bcs result is not injective");
        ensure!(
            cardinality(&x) == cardinality(&y),
            "cardinalities differ for n = {n}"
        );
        Ok(())
    });

    run.property("bcs rejects collisions", size, |rng, _| {
        let n = rng.gen_range(2..=16);
        let (x, y) = (random_set_of_size(rng, n), random_set_of_size(rng, n));
        let y0 = y.elements()[0].clone();
        let f = graph_from_map(&x, |_| y0.clone()).map_err(|e| e.to_string())?;
        let g = random_bijection(rng, &y, &x);
        ensure!(
            matches!(bcs(&x, &y, &f, &g), Err(CardinalError::Collision { .. })),
            "a constant map was accepted as an injection"
        );
        Ok(())
    });
}

fn syntax(run: &mut Run, size: usize) {
    run.property("round trip", size, |rng, _| {
        let x = small_set(rng);
        let text = print_canonical(&x);
        let expr = parse(&text).map_err(|e| e.to_string())?;
        let value = eval(&expr, &Env::default()).map_err(|e| e.to_string())?;
        ensure!(value == x, "{text} evaluates to {}", show(&value));
        let again = parse(&print_canonical(&value)).map_err(|e| e.to_string())?;
        ensure!(again == expr, "parse ∘ print ∘ parse is not idempotent on {text}");
        Ok(())
    });
}
