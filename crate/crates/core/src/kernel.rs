//! Canonical hereditarily finite sets.
//!
//! Every value is a finite set of finite sets, stored as a strictly ascending
//! sequence of its elements under the Ackermann order: `x < y` iff
//! `A(x) < A(y)` where `A(x) = Σ_{e ∈ x} 2^{A(e)}`. Extensional equality is
//! therefore structural equality of the stored sequences.
//!
//! Constructors that can grow a set beyond its inputs are checked against
//! [`Limits`]; the remaining constructors are total.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::{Arc, LazyLock, RwLock, Weak};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("resource limit: {what} would need {needed}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        needed: usize,
        limit: usize,
    },
}

/// Size and rank bounds for checked constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_size: usize,
    pub max_rank: usize,
}

pub const DEFAULT_MAX_SIZE: usize = 65536;
/// Encoded tags alone reach rank 28 and grow by 2 per letter.
pub const DEFAULT_MAX_RANK: usize = 256;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_size: DEFAULT_MAX_SIZE,
            max_rank: DEFAULT_MAX_RANK,
        }
    }
}

static MAX_SIZE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_SIZE);
static MAX_RANK: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_RANK);

impl Limits {
    /// The process-wide limits used by the unsuffixed constructors.
    pub fn current() -> Limits {
        Limits {
            max_size: MAX_SIZE.load(AtomicOrdering::Relaxed),
            max_rank: MAX_RANK.load(AtomicOrdering::Relaxed),
        }
    }

    pub fn install(self) {
        MAX_SIZE.store(self.max_size, AtomicOrdering::Relaxed);
        MAX_RANK.store(self.max_rank, AtomicOrdering::Relaxed);
    }

    fn check_size(&self, what: &'static str, needed: usize) -> Result<(), KernelError> {
        if needed > self.max_size {
            return Err(KernelError::ResourceLimit {
                what,
                needed,
                limit: self.max_size,
            });
        }
        Ok(())
    }

    fn check_rank(&self, what: &'static str, needed: usize) -> Result<(), KernelError> {
        if needed > self.max_rank {
            return Err(KernelError::ResourceLimit {
                what,
                needed,
                limit: self.max_rank,
            });
        }
        Ok(())
    }
}

struct Node {
    elems: Box<[HSet]>,
    rank: usize,
    // Ackermann code when it fits in 64 bits.
    code: Option<u64>,
    hash: u64,
}

/// A hereditarily finite set. Cloning is cheap; values are immutable.
///
/// Nodes are hash-consed, so two live values are equal iff they share a node.
#[derive(Clone)]
pub struct HSet(Arc<Node>);

const SHARDS: usize = 64;

/// Weak table of live nodes keyed by structural hash. Reads run concurrently;
/// inserts take the shard's write lock.
struct Interner {
    shards: Vec<RwLock<Shard>>,
}

#[derive(Default)]
struct Shard {
    table: HashMap<u64, Vec<Weak<Node>>>,
    entries: usize,
    sweep_at: usize,
}

fn same_elements(a: &[HSet], b: &[HSet]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| Arc::ptr_eq(&x.0, &y.0))
}

impl Shard {
    fn find(&self, hash: u64, elems: &[HSet]) -> Option<Arc<Node>> {
        self.table
            .get(&hash)?
            .iter()
            .filter_map(Weak::upgrade)
            .find(|n| same_elements(&n.elems, elems))
    }

    fn sweep(&mut self) {
        self.table.retain(|_, bucket| {
            bucket.retain(|w| w.strong_count() > 0);
            !bucket.is_empty()
        });
        self.entries = self.table.values().map(Vec::len).sum();
        self.sweep_at = (self.entries * 2).max(1024);
    }
}

static INTERNER: LazyLock<Interner> = LazyLock::new(|| Interner {
    shards: (0..SHARDS).map(|_| RwLock::new(Shard::default())).collect(),
});

impl Interner {
    fn intern(&self, node: Node) -> Arc<Node> {
        let shard = &self.shards[(node.hash as usize) % SHARDS];
        if let Some(found) = shard.read().unwrap().find(node.hash, &node.elems) {
            return found;
        }
        let mut guard = shard.write().unwrap();
        if let Some(found) = guard.find(node.hash, &node.elems) {
            return found;
        }
        if guard.entries >= guard.sweep_at {
            guard.sweep();
        }
        let hash = node.hash;
        let arc = Arc::new(node);
        let bucket = guard.table.entry(hash).or_default();
        let before = bucket.len();
        bucket.retain(|w| w.strong_count() > 0);
        let pruned = before - bucket.len();
        bucket.push(Arc::downgrade(&arc));
        guard.entries = guard.entries + 1 - pruned;
        arc
    }
}

static EMPTY: LazyLock<HSet> = LazyLock::new(|| HSet::from_canonical(Vec::new()));

// ord(0..=NUMERAL_CACHE) shared so tag encodings and numerals compare by pointer.
const NUMERAL_CACHE: usize = 64;
static NUMERALS: LazyLock<Vec<HSet>> = LazyLock::new(|| {
    let mut out = Vec::with_capacity(NUMERAL_CACHE + 1);
    let mut cur = HSet::empty();
    out.push(cur.clone());
    for _ in 0..NUMERAL_CACHE {
        cur = cur.successor();
        out.push(cur.clone());
    }
    out
});

fn mix(h: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = h.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl HSet {
    /// Builds a node from elements that are already strictly ascending.
    fn from_canonical(elems: Vec<HSet>) -> HSet {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        let rank = elems.iter().map(|e| e.rank() + 1).max().unwrap_or(0);
        let code = elems.iter().try_fold(0u64, |acc, e| match e.0.code {
            Some(c) if c < 64 => Some(acc | (1u64 << c)),
            _ => None,
        });
        let mut hash = 0x5157_u64 ^ elems.len() as u64;
        for e in &elems {
            hash = mix(hash ^ e.0.hash);
        }
        HSet(INTERNER.intern(Node {
            elems: elems.into_boxed_slice(),
            rank,
            code,
            hash,
        }))
    }

    /// Sorts and deduplicates without checking limits.
    pub(crate) fn collect_unchecked(mut elems: Vec<HSet>) -> HSet {
        elems.sort();
        elems.dedup();
        HSet::from_canonical(elems)
    }

    pub fn empty() -> HSet {
        EMPTY.clone()
    }

    pub fn singleton(x: HSet) -> HSet {
        HSet::from_canonical(vec![x])
    }

    /// `{a, b}`; the singleton when `a = b`.
    pub fn pair(a: HSet, b: HSet) -> HSet {
        match a.cmp(&b) {
            Ordering::Less => HSet::from_canonical(vec![a, b]),
            Ordering::Equal => HSet::singleton(a),
            Ordering::Greater => HSet::from_canonical(vec![b, a]),
        }
    }

    pub fn from_elements<I: IntoIterator<Item = HSet>>(xs: I) -> Result<HSet, KernelError> {
        HSet::from_elements_with(xs, &Limits::current())
    }

    pub fn from_elements_with<I: IntoIterator<Item = HSet>>(
        xs: I,
        limits: &Limits,
    ) -> Result<HSet, KernelError> {
        let set = HSet::collect_unchecked(xs.into_iter().collect());
        limits.check_size("set size", set.size())?;
        limits.check_rank("set rank", set.rank())?;
        Ok(set)
    }

    /// Decodes an Ackermann code.
    pub fn from_ackermann(code: u64) -> HSet {
        if code == 0 {
            return HSet::empty();
        }
        let elems = (0..64)
            .filter(|bit| code >> bit & 1 == 1)
            .map(HSet::from_ackermann)
            .collect();
        HSet::from_canonical(elems)
    }

    /// The Ackermann code, if it fits in a `u64`.
    pub fn ackermann(&self) -> Option<u64> {
        self.0.code
    }

    pub fn elements(&self) -> &[HSet] {
        &self.0.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HSet> {
        self.0.elems.iter()
    }

    pub fn size(&self) -> usize {
        self.0.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elems.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// Membership: `x ∈ self`.
    pub fn contains(&self, x: &HSet) -> bool {
        self.0.elems.binary_search(x).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &HSet) -> bool {
        if self.size() > other.size() {
            return false;
        }
        // Both sequences ascend, so a merge walk suffices.
        let mut rest = other.elements();
        for x in self.iter() {
            match rest.binary_search(x) {
                Ok(i) => rest = &rest[i + 1..],
                Err(_) => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &HSet) -> HSet {
        let mut elems: Vec<HSet> = Vec::with_capacity(self.size() + other.size());
        let (mut a, mut b) = (self.iter().peekable(), other.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Less => elems.push(a.next().unwrap().clone()),
                    Ordering::Greater => elems.push(b.next().unwrap().clone()),
                    Ordering::Equal => {
                        elems.push(a.next().unwrap().clone());
                        b.next();
                    }
                },
                (Some(_), None) => elems.push(a.next().unwrap().clone()),
                (None, Some(_)) => elems.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        HSet::from_canonical(elems)
    }

    pub fn intersection(&self, other: &HSet) -> HSet {
        self.separation(|x| other.contains(x))
    }

    pub fn difference(&self, other: &HSet) -> HSet {
        self.separation(|x| !other.contains(x))
    }

    /// `self ∪ {x}`.
    pub fn insert(&self, x: HSet) -> HSet {
        if self.contains(&x) {
            return self.clone();
        }
        self.union(&HSet::singleton(x))
    }

    /// `self ∪ {self}`.
    pub fn successor(&self) -> HSet {
        self.insert(self.clone())
    }

    /// `{x ∈ self | pred(x)}`.
    pub fn separation<P: FnMut(&HSet) -> bool>(&self, mut pred: P) -> HSet {
        let elems: Vec<HSet> = self.iter().filter(|x| pred(x)).cloned().collect();
        if elems.len() == self.size() {
            return self.clone();
        }
        HSet::from_canonical(elems)
    }

    /// Replacement: `{f(a) | a ∈ self}`.
    pub fn image<F: FnMut(&HSet) -> HSet>(&self, f: F) -> HSet {
        HSet::collect_unchecked(self.iter().map(f).collect())
    }

    /// Fallible replacement, for maps that can themselves fail.
    pub fn try_image<E, F: FnMut(&HSet) -> Result<HSet, E>>(&self, f: F) -> Result<HSet, E> {
        Ok(HSet::collect_unchecked(
            self.iter().map(f).collect::<Result<Vec<_>, E>>()?,
        ))
    }

    /// The canonically least element satisfying `pred`, or `{}` when none does.
    pub fn choose<P: FnMut(&HSet) -> bool>(&self, mut pred: P) -> HSet {
        self.iter().find(|x| pred(x)).cloned().unwrap_or_else(HSet::empty)
    }

    /// `⋃ self`.
    pub fn union_family(&self) -> Result<HSet, KernelError> {
        self.union_family_with(&Limits::current())
    }

    pub fn union_family_with(&self, limits: &Limits) -> Result<HSet, KernelError> {
        let elems: Vec<HSet> = self.iter().flat_map(|e| e.iter().cloned()).collect();
        let set = HSet::collect_unchecked(elems);
        limits.check_size("union size", set.size())?;
        Ok(set)
    }

    pub fn powerset(&self) -> Result<HSet, KernelError> {
        self.powerset_with(&Limits::current())
    }

    pub fn powerset_with(&self, limits: &Limits) -> Result<HSet, KernelError> {
        let n = self.size();
        let needed = if n >= usize::BITS as usize - 1 {
            usize::MAX
        } else {
            1usize << n
        };
        limits.check_size("powerset size", needed)?;
        limits.check_rank("powerset rank", self.rank() + 1)?;
        let subsets = (0..needed)
            .map(|mask| {
                // Picking in ascending order keeps each subset canonical.
                let elems = self
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, e)| e.clone())
                    .collect();
                HSet::from_canonical(elems)
            })
            .collect();
        Ok(HSet::collect_unchecked(subsets))
    }

    /// The von Neumann numeral `n`, which has `n` elements and rank `n`.
    pub fn ord(n: usize) -> Result<HSet, KernelError> {
        HSet::ord_with(n, &Limits::current())
    }

    pub fn ord_with(n: usize, limits: &Limits) -> Result<HSet, KernelError> {
        limits.check_size("numeral size", n)?;
        limits.check_rank("numeral rank", n)?;
        Ok(HSet::numeral(n))
    }

    pub(crate) fn numeral(n: usize) -> HSet {
        if n <= NUMERAL_CACHE {
            return NUMERALS[n].clone();
        }
        let mut elems: Vec<HSet> = NUMERALS.clone();
        while elems.len() < n {
            let next = HSet::from_canonical(elems.clone());
            elems.push(next);
        }
        HSet::from_canonical(elems)
    }

    /// `Some(n)` iff `self = ord(n)`.
    pub fn as_natural(&self) -> Option<usize> {
        let elems = self.elements();
        for (i, e) in elems.iter().enumerate() {
            // Ascending order puts ord(i) at position i.
            if e.elements() != &elems[..i] {
                return None;
            }
        }
        Some(elems.len())
    }

    pub fn is_transitive(&self) -> bool {
        self.iter().all(|e| e.is_subset(self))
    }
}

impl PartialEq for HSet {
    fn eq(&self, other: &HSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for HSet {}

impl Ord for HSet {
    fn cmp(&self, other: &HSet) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        if let (Some(a), Some(b)) = (self.0.code, other.0.code) {
            return a.cmp(&b);
        }
        // Rank k sets have codes in [|V_k|, |V_{k+1}|).
        match self.0.rank.cmp(&other.0.rank) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        // Compare binary codes from the most significant set bit down.
        let (a, b) = (self.elements(), other.elements());
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                unequal => return unequal,
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for HSet {
    fn partial_cmp(&self, other: &HSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for HSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

/// The canonical text form: `{}` or `{e1,...,ek}` in ascending order.
impl fmt::Display for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            fmt::Display::fmt(e, f)?;
        }
        f.write_str("}")
    }
}

const DEBUG_TEXT_LIMIT: usize = 512;

struct Bounded(String);

impl fmt::Write for Bounded {
    fn write_str(&mut self, s: &str) -> fmt::Result {
        if self.0.len() + s.len() > DEBUG_TEXT_LIMIT {
            return Err(fmt::Error);
        }
        self.0.push_str(s);
        Ok(())
    }
}

/// The canonical text, cut short for values such as encoded tags whose full
/// text runs to gigabytes.
impl fmt::Debug for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Bounded(String::new());
        match fmt::write(&mut out, format_args!("{self}")) {
            Ok(()) => f.write_str(&out.0),
            Err(_) => write!(f, "{}... (size {}, rank {})", out.0, self.size(), self.rank()),
        }
    }
}

impl Default for HSet {
    fn default() -> Self {
        HSet::empty()
    }
}

impl<'a> IntoIterator for &'a HSet {
    type Item = &'a HSet;
    type IntoIter = std::slice::Iter<'a, HSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// `x ∈ y`.
pub fn inc(x: &HSet, y: &HSet) -> bool {
    y.contains(x)
}

/// `a ⊆ b`.
pub fn sub(a: &HSet, b: &HSet) -> bool {
    a.is_subset(b)
}

pub fn canonical_cmp(a: &HSet, b: &HSet) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> HSet {
        HSet::ord(n).unwrap()
    }

    fn set(xs: Vec<HSet>) -> HSet {
        HSet::from_elements(xs).unwrap()
    }

    // Ackermann code by big-endian bit vectors, independent of `Ord`.
    fn code_bits(x: &HSet) -> Vec<bool> {
        let mut bits: Vec<bool> = Vec::new();
        for e in x.iter() {
            let c = code_usize(e);
            if bits.len() <= c {
                bits.resize(c + 1, false);
            }
            bits[c] = true;
        }
        bits
    }

    fn code_usize(x: &HSet) -> usize {
        code_bits(x)
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| 1usize << i)
            .sum()
    }

    #[test]
    fn cmp_examples() {
        let e = HSet::empty();
        let one = HSet::singleton(e.clone());
        let two = set(vec![e.clone(), one.clone()]);
        assert_eq!(canonical_cmp(&two, &two), Ordering::Equal);
        assert_eq!(canonical_cmp(&e, &one), Ordering::Less);
        assert_eq!(canonical_cmp(&one, &two), Ordering::Less);
        assert_eq!(code_usize(&one), 1);
        assert_eq!(code_usize(&two), 3);
    }

    #[test]
    fn cmp_agrees_with_ackermann_codes_on_rank_four() {
        let all: Vec<HSet> = (0..65536u64).step_by(97).map(HSet::from_ackermann).collect();
        for w in all.windows(2) {
            assert_eq!(w[0].cmp(&w[1]), code_usize(&w[0]).cmp(&code_usize(&w[1])));
        }
        for (i, x) in all.iter().enumerate() {
            assert_eq!(code_usize(x) as u64, (i as u64) * 97);
            assert_eq!(x.ackermann(), Some(i as u64 * 97));
        }
    }

    #[test]
    fn cmp_without_cached_codes() {
        // Elements with codes ≥ 64 force the structural comparison path.
        let big_a = HSet::from_ackermann(1 << 20);
        let big_b = HSet::from_ackermann((1 << 20) | 1);
        let x = set(vec![big_a.clone()]);
        let y = set(vec![big_b.clone()]);
        let z = set(vec![big_a.clone(), HSet::empty()]);
        assert!(x.ackermann().is_none());
        assert!(x < z && z < y);
        assert!(x < y);
        assert_eq!(x.cmp(&set(vec![HSet::from_ackermann(1 << 20)])), Ordering::Equal);
    }

    #[test]
    fn empty_has_no_members() {
        let e = HSet::empty();
        assert_eq!(e.size(), 0);
        assert_eq!(e.to_string(), "{}");
        for x in [e.clone(), ord(1), ord(3)] {
            assert!(!inc(&x, &e));
        }
    }

    #[test]
    fn from_elements_examples() {
        let a = ord(2);
        assert_eq!(set(vec![a.clone(), a.clone()]), HSet::singleton(a));
        assert_eq!(set(vec![ord(1), HSet::empty()]).to_string(), "{{},{{}}}");
        assert_eq!(set(vec![]), HSet::empty());
    }

    #[test]
    fn from_elements_respects_limits() {
        let limits = Limits {
            max_size: 2,
            max_rank: 3,
        };
        let err = HSet::from_elements_with(vec![ord(0), ord(1), ord(2)], &limits).unwrap_err();
        assert!(matches!(
            err,
            KernelError::ResourceLimit {
                needed: 3,
                limit: 2,
                ..
            }
        ));
        let deep = HSet::from_elements_with(vec![ord(3)], &limits).unwrap_err();
        assert!(matches!(deep, KernelError::ResourceLimit { needed: 4, .. }));
    }

    #[test]
    fn membership_and_subset() {
        assert!(inc(&HSet::empty(), &ord(1)));
        assert!(inc(&ord(1), &ord(2)));
        assert!(sub(&HSet::empty(), &ord(4)));
        assert!(sub(&ord(2), &ord(3)));
        assert!(!sub(&HSet::singleton(ord(2)), &ord(2)));
        assert!(!sub(&ord(3), &ord(2)));
    }

    #[test]
    fn equality_is_order_insensitive() {
        let a = set(vec![HSet::empty(), ord(1)]);
        let b = set(vec![ord(1), HSet::empty()]);
        assert_eq!(a, b);
        assert_ne!(HSet::empty(), ord(1));
    }

    #[test]
    fn equal_values_share_a_node() {
        let a = set(vec![ord(3), HSet::singleton(ord(2))]);
        let b = HSet::from_ackermann(a.ackermann().unwrap());
        assert!(Arc::ptr_eq(&a.0, &b.0));
        // Rebuilding after every copy is dropped must not grow the bucket.
        let hash = HSet::singleton(HSet::singleton(ord(40))).0.hash;
        for _ in 0..1000 {
            let x = HSet::singleton(HSet::singleton(ord(40)));
            assert_eq!(x.rank(), 42);
        }
        let shard = &INTERNER.shards[(hash as usize) % SHARDS];
        let bucket_len = shard.read().unwrap().table.get(&hash).map_or(0, Vec::len);
        assert!(bucket_len <= 2, "bucket holds {bucket_len} entries");
    }

    #[test]
    fn union_family_examples() {
        assert_eq!(HSet::empty().union_family().unwrap(), HSet::empty());
        assert_eq!(HSet::singleton(ord(4)).union_family().unwrap(), ord(4));
        assert_eq!(ord(3).union_family().unwrap(), ord(2));
    }

    #[test]
    fn powerset_examples() {
        assert_eq!(HSet::empty().powerset().unwrap(), ord(1));
        assert_eq!(ord(1).powerset().unwrap(), ord(2));
        assert_eq!(ord(2).powerset().unwrap().size(), 4);
        for n in 0..6 {
            assert_eq!(ord(n).powerset().unwrap().size(), 1 << n);
        }
        let tight = Limits {
            max_size: 8,
            max_rank: 256,
        };
        assert!(ord(3).powerset_with(&tight).is_ok());
        assert!(ord(4).powerset_with(&tight).is_err());
    }

    #[test]
    fn separation_examples() {
        let s = ord(4);
        assert_eq!(s.separation(|_| true), s);
        assert_eq!(s.separation(|_| false), HSet::empty());
        assert_eq!(s.separation(|e| !e.is_empty()), set(vec![ord(1), ord(2), ord(3)]));
    }

    #[test]
    fn image_examples() {
        assert_eq!(HSet::empty().image(|e| HSet::singleton(e.clone())), HSet::empty());
        let img = ord(2).image(|e| HSet::singleton(e.clone()));
        assert_eq!(img.to_string(), "{{{}},{{{}}}}");
    }

    #[test]
    fn choose_examples() {
        let x = ord(3);
        assert_eq!(HSet::singleton(x.clone()).choose(|_| true), x);
        assert_eq!(ord(5).choose(|_| false), HSet::empty());
        let s = set(vec![HSet::empty(), ord(1), HSet::singleton(ord(1))]);
        assert_eq!(s.choose(|e| inc(&HSet::empty(), e)), ord(1));
    }

    #[test]
    fn numerals() {
        assert_eq!(ord(0), HSet::empty());
        assert_eq!(ord(1).to_string(), "{{}}");
        assert_eq!(ord(2).to_string(), "{{},{{}}}");
        assert_eq!(ord(7).size(), 7);
        for k in 0..7 {
            assert!(inc(&ord(k), &ord(7)));
        }
        // The cache boundary must not change the value.
        let built = (0..70).fold(HSet::empty(), |acc, _| acc.successor());
        assert_eq!(built, ord(70));
        assert_eq!(ord(70).as_natural(), Some(70));
        assert!(HSet::ord_with(
            9,
            &Limits {
                max_size: 8,
                max_rank: 256
            }
        )
        .is_err());
    }

    #[test]
    fn as_natural_examples() {
        assert_eq!(HSet::empty().as_natural(), Some(0));
        assert_eq!(ord(5).as_natural(), Some(5));
        assert_eq!(HSet::singleton(ord(1)).as_natural(), None);
        assert_eq!(
            set(vec![HSet::empty(), HSet::singleton(ord(1))]).as_natural(),
            None
        );
    }

    #[test]
    fn size_and_rank() {
        assert_eq!(HSet::empty().rank(), 0);
        for n in 0..10 {
            assert_eq!(ord(n).rank(), n);
        }
        assert_eq!(ord(2).powerset().unwrap().size(), 4);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(ord(2).to_string(), "{{},{{}}}");
        assert_eq!(HSet::from_ackermann(5).to_string(), "{{},{{{}}}}");
        assert_eq!(format!("{:?}", ord(2)), "{{},{{}}}");
        let long = format!("{:?}", ord(40));
        assert!(long.len() < DEBUG_TEXT_LIMIT + 40 && long.ends_with("(size 40, rank 40)"));
    }
}
