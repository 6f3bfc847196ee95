//! Seeded generators for random sets, orders and maps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::functions::kpair;
use crate::kernel::HSet;
use crate::order::Order;

/// The generator for case `case` of stream `stream` under `seed`.
pub fn case_rng(seed: u64, stream: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (case as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(stream);
    rng
}

/// A random set of rank at most `max_rank`, with at most `fanout` elements
/// per level.
pub fn random_set<R: Rng + ?Sized>(rng: &mut R, max_rank: usize, fanout: usize) -> HSet {
    if max_rank == 0 {
        return HSet::empty();
    }
    let n = rng.gen_range(0..=fanout);
    let elems: Vec<HSet> = (0..n)
        .map(|_| {
            let r = rng.gen_range(0..max_rank);
            random_set(rng, r, fanout)
        })
        .collect();
    HSet::collect_unchecked(elems)
}

/// A set of exactly `size` distinct elements drawn from the 65536 sets of
/// rank at most 4.
pub fn random_set_of_size<R: Rng + ?Sized>(rng: &mut R, size: usize) -> HSet {
    assert!(size <= 1 << 16);
    let codes = rand::seq::index::sample(rng, 1 << 16, size);
    HSet::collect_unchecked(
        codes
            .into_iter()
            .map(|c| HSet::from_ackermann(c as u64))
            .collect(),
    )
}

/// A random subset of `x`.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, x: &HSet) -> HSet {
    x.separation(|_| rng.gen_bool(0.5))
}

/// A random linear order on `carrier`.
pub fn random_well_order<R: Rng + ?Sized>(rng: &mut R, carrier: &HSet) -> Order {
    let mut elems: Vec<HSet> = carrier.elements().to_vec();
    elems.shuffle(rng);
    let pairs = elems
        .iter()
        .enumerate()
        .flat_map(|(i, u)| elems[i..].iter().map(move |v| (u.clone(), v.clone())))
        .collect::<Vec<_>>();
    Order::new(carrier.clone(), pairs).expect("pairs drawn from the carrier")
}

/// A random partial order on `carrier`: random edges consistent with a hidden
/// linear extension, closed reflexively and transitively.
pub fn random_partial_order<R: Rng + ?Sized>(rng: &mut R, carrier: &HSet, density: f64) -> Order {
    let mut elems: Vec<HSet> = carrier.elements().to_vec();
    elems.shuffle(rng);
    let n = elems.len();
    let mut m = vec![vec![false; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.gen_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][k] && m[k][j] {
                    m[i][j] = true;
                }
            }
        }
    }
    order_from_matrix(&elems, &m)
}

pub fn order_from_matrix(elems: &[HSet], m: &[Vec<bool>]) -> Order {
    let carrier = HSet::collect_unchecked(elems.to_vec());
    let pairs = (0..elems.len())
        .flat_map(|i| (0..elems.len()).filter(move |&j| m[i][j]).map(move |j| (i, j)))
        .map(|(i, j)| (elems[i].clone(), elems[j].clone()))
        .collect::<Vec<_>>();
    Order::new(carrier, pairs).expect("pairs drawn from the carrier")
}

/// A random map `from → into` as a graph. `into` must be nonempty unless
/// `from` is empty.
pub fn random_map<R: Rng + ?Sized>(rng: &mut R, from: &HSet, into: &HSet) -> HSet {
    let targets = into.elements();
    HSet::collect_unchecked(
        from.iter()
            .map(|x| kpair(x.clone(), targets[rng.gen_range(0..targets.len())].clone()))
            .collect(),
    )
}

/// A random bijection `from → into`; the sets must have equal size.
pub fn random_bijection<R: Rng + ?Sized>(rng: &mut R, from: &HSet, into: &HSet) -> HSet {
    assert_eq!(from.size(), into.size());
    let mut targets = into.elements().to_vec();
    targets.shuffle(rng);
    HSet::collect_unchecked(
        from.iter()
            .zip(targets)
            .map(|(x, y)| kpair(x.clone(), y))
            .collect(),
    )
}

/// A random lowercase word of length `1..=max_len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> String {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(b'a'..=b'z') as char).collect()
}
