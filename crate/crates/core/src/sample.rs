//! Seeded random generators shared by the verification suites, the CLI and
//! the tests.
//!
//! Every generator draws from a [`ChaCha8Rng`] created by [`rng`] with
//! `ChaCha8Rng::seed_from_u64(seed)`, and consumes draws in the order stated
//! in its doc comment, so a seed reproduces the same objects everywhere.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, LinearMap, Scalar, Vector};
use crate::blockseq::{tail_beyond, BlockSeq, Interval};
use crate::filters::{FinitePartition, IntervalSeq};
use crate::fin::{fin_universe, Coloring, FinBlockSeq, FinSet};
use crate::games::BlockFamily;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform nonzero enumeration scalar.
pub fn scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    let s = field.enumeration_scalars();
    s[rng.gen_range(0..s.len())]
}

/// A random nonzero vector supported in `[lo, hi)`: each index joins the
/// support with probability 1/2 (a uniform index is forced if none did),
/// then each support index gets a uniform nonzero scalar.
pub fn vector_in(rng: &mut ChaCha8Rng, field: Field, lo: usize, hi: usize) -> Vector {
    assert!(lo < hi, "empty window");
    let mut support: Vec<usize> = (lo..hi).filter(|_| rng.gen_bool(0.5)).collect();
    if support.is_empty() {
        support.push(rng.gen_range(lo..hi));
    }
    let terms: Vec<(usize, Scalar)> = support
        .into_iter()
        .map(|i| (i, scalar(rng, field)))
        .collect();
    Vector::new(field, terms).expect("increasing support, nonzero scalars")
}

/// Random consecutive cut of `[0, n)` into blocks: each index after the
/// first starts a new block with probability 1/2.
fn cut(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..n {
        if rng.gen_bool(0.5) {
            blocks.push((start, i));
            start = i;
        }
    }
    if n > 0 {
        blocks.push((start, n));
    }
    blocks
}

/// A random block sequence with supports in `[0, n)` and at most `max_len`
/// entries: cut `[0, n)` into blocks, keep each block with probability 1/2
/// (until `max_len` are kept), and draw a [`vector_in`] each kept block.
pub fn block_seq(rng: &mut ChaCha8Rng, field: Field, n: usize, max_len: usize) -> BlockSeq {
    let mut entries = Vec::new();
    for (lo, hi) in cut(rng, n) {
        if entries.len() < max_len && rng.gen_bool(0.5) {
            entries.push(vector_in(rng, field, lo, hi));
        }
    }
    BlockSeq::new(field, entries).expect("blocks are increasing")
}

/// A random `Y ⪯ X`: group consecutive entries of `X` (each entry after the
/// first starts a new group with probability 1/2), drop each group with
/// probability `drop`, and replace each kept group by a nonzero combination
/// of its entries with uniform nonzero scalars on a random nonempty subset.
pub fn coarsening(rng: &mut ChaCha8Rng, x: &BlockSeq, drop: f64) -> BlockSeq {
    let f = x.field();
    let mut out = Vec::new();
    for (lo, hi) in cut(rng, x.len()) {
        if rng.gen_bool(drop) {
            continue;
        }
        let mut picked: Vec<usize> = (lo..hi).filter(|_| rng.gen_bool(0.5)).collect();
        if picked.is_empty() {
            picked.push(rng.gen_range(lo..hi));
        }
        let mut v: Option<Vector> = None;
        for i in picked {
            let term = x.entries()[i]
                .scale(scalar(rng, f))
                .expect("nonzero scalar");
            v = Some(match v {
                Some(p) => p.concat_above(&term),
                None => term,
            });
        }
        out.extend(v);
    }
    BlockSeq::new(f, out).expect("groups are increasing")
}

/// A random `A ⪯ B` in FIN: group consecutive entries of `B` as in
/// [`coarsening`], drop each group with probability `drop`, and take the
/// union of a random nonempty subset of each kept group.
pub fn fin_coarsening(rng: &mut ChaCha8Rng, b: &FinBlockSeq, drop: f64) -> FinBlockSeq {
    let mut out = Vec::new();
    for (lo, hi) in cut(rng, b.len()) {
        if rng.gen_bool(drop) {
            continue;
        }
        let mut picked: Vec<usize> = (lo..hi).filter(|_| rng.gen_bool(0.5)).collect();
        if picked.is_empty() {
            picked.push(rng.gen_range(lo..hi));
        }
        let set = picked
            .iter()
            .skip(1)
            .fold(b.entries()[picked[0]].clone(), |acc, &i| {
                acc.union(&b.entries()[i])
            });
        out.push(set);
    }
    FinBlockSeq::new(out).expect("groups are increasing")
}

/// A random `n × n` linear map: each basis image is zero with probability
/// 1/4, otherwise a [`vector_in`] `[0, n)`.
pub fn linear_map(rng: &mut ChaCha8Rng, field: Field, n: usize) -> LinearMap {
    let images = (0..n)
        .map(|_| {
            if rng.gen_bool(0.25) {
                None
            } else {
                Some(vector_in(rng, field, 0, n))
            }
        })
        .collect();
    LinearMap::new(field, n, n, images).expect("images lie in the window")
}

/// Between 0 and `n` random vectors in `[0, n)`.
pub fn generators(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Vec<Vector> {
    let k = rng.gen_range(0..=n);
    (0..k).map(|_| vector_in(rng, field, 0, n)).collect()
}

/// A uniformly random 2-coloring of the nonempty subsets of `[0, n)`, drawn
/// in canonical FinSet order.
pub fn coloring(rng: &mut ChaCha8Rng, n: usize) -> Coloring {
    let table: HashMap<Vec<FinSet>, u32> = fin_universe(n)
        .into_iter()
        .map(|s| (vec![s], rng.gen_range(0..2)))
        .collect();
    Coloring::table(n, 1, table).expect("table covers the universe")
}

/// A random partition of `[0, n)`: draw a cell count `k` in `1..=max_cells`,
/// then a uniform cell for each index; empty cells are dropped.
pub fn partition(rng: &mut ChaCha8Rng, n: usize, max_cells: usize) -> FinitePartition {
    let k = rng.gen_range(1..=max_cells.max(1));
    let mut cells = vec![Vec::new(); k];
    for i in 0..n {
        cells[rng.gen_range(0..k)].push(i);
    }
    cells.retain(|c: &Vec<usize>| !c.is_empty());
    FinitePartition::new(n, cells).expect("cells cover the window")
}

/// Increasing intervals inside `[0, n)`: starting at 0, skip a gap in
/// `0..=1`, take an interval of width `1..=3`, repeat until the window ends.
pub fn interval_seq(rng: &mut ChaCha8Rng, n: usize) -> IntervalSeq {
    let mut out = Vec::new();
    let mut at = 0;
    loop {
        let lo = at + rng.gen_range(0..=1);
        let hi = lo + rng.gen_range(0..3);
        if hi >= n {
            break;
        }
        out.push(Interval::new(lo, hi).expect("lo <= hi"));
        at = hi + 1;
    }
    IntervalSeq::new(out).expect("increasing")
}

/// FNV-1a over the display form of a prefix, mixed with a salt.
fn prefix_hash(salt: u64, prefix: &[Vector]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ salt;
    for v in prefix {
        for b in v.to_string().bytes().chain(*b";") {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Entries of `x` summed in consecutive pairs; an odd last entry is dropped.
pub fn pair_sums(x: &BlockSeq) -> BlockSeq {
    let out = x
        .entries()
        .chunks_exact(2)
        .map(|p| p[0].concat_above(&p[1]))
        .collect();
    BlockSeq::new(x.field(), out).expect("pairs are increasing")
}

/// A family of block sequences below `x` indexed by finite prefixes. A salt
/// is drawn from `rng`; for a prefix with hash `h` (FNV-1a of its display
/// form), the member is `x` or its [`pair_sums`] (by `h % 2`), cut down by
/// `tail_beyond` at `(h >> 8) % (m + 2)` where `m` is the prefix's max
/// support (0 when empty).
pub fn family(rng: &mut ChaCha8Rng, x: &BlockSeq) -> Arc<BlockFamily> {
    let salt: u64 = rng.gen();
    let x = x.clone();
    let pairs = pair_sums(&x);
    Arc::new(move |prefix: &[Vector]| {
        let h = prefix_hash(salt, prefix);
        let m = prefix.last().map_or(0, Vector::max_support);
        let src = if h.is_multiple_of(2) { &x } else { &pairs };
        tail_beyond(src, ((h >> 8) % (m as u64 + 2)) as usize)
    })
}

/// A random nonempty subset of `[0, n)` in increasing order.
pub fn subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    if s.is_empty() {
        s.push(rng.gen_range(0..n));
    }
    s
}

/// Deterministic per-case sub-seed.
pub fn derive_seed(seed: u64, case: u64) -> u64 {
    seed.wrapping_add(case.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}
