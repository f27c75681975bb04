//! Brute-force oracles shared by the integration tests. They deliberately
//! avoid the library's decision procedures and work from coefficient
//! enumeration instead.
#![allow(dead_code)]

use std::collections::HashSet;

use blocklab::algebra::{Field, Scalar, Vector};
use blocklab::blockseq::BlockSeq;

pub fn scalars_with_zero(f: Field) -> Vec<Scalar> {
    let mut s = vec![f.zero()];
    s.extend(f.enumeration_scalars());
    s
}

/// Every coefficient tuple of length `k`.
pub fn tuples(scalars: &[Scalar], k: usize) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                scalars.iter().map(move |&a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

/// All nonzero vectors supported in `[0, n)`.
pub fn all_vectors(f: Field, n: usize) -> Vec<Vector> {
    tuples(&scalars_with_zero(f), n)
        .into_iter()
        .filter_map(|c| {
            let terms: Vec<(usize, Scalar)> = c
                .into_iter()
                .enumerate()
                .filter(|(_, a)| !f.is_zero(*a))
                .collect();
            (!terms.is_empty()).then(|| Vector::new(f, terms).unwrap())
        })
        .collect()
}

/// `Σ a_i x_i` computed coordinatewise; `None` for the zero vector.
pub fn combine(f: Field, xs: &[Vector], a: &[Scalar]) -> Option<Vector> {
    let top = xs.iter().map(|x| x.max_support()).max()?;
    let mut acc = vec![f.zero(); top + 1];
    for (x, &c) in xs.iter().zip(a) {
        for &(i, b) in x.coeffs() {
            acc[i] = f.add(acc[i], f.mul(c, b));
        }
    }
    let terms: Vec<(usize, Scalar)> = acc
        .into_iter()
        .enumerate()
        .filter(|(_, a)| !f.is_zero(*a))
        .collect();
    (!terms.is_empty()).then(|| Vector::new(f, terms).unwrap())
}

/// The span of `xs` (zero removed) by enumerating every coefficient tuple.
pub fn span_set(f: Field, xs: &[Vector]) -> HashSet<Vector> {
    tuples(&scalars_with_zero(f), xs.len())
        .into_iter()
        .filter_map(|a| combine(f, xs, &a))
        .collect()
}

/// Block sequences of length at most `max_len` built from `vectors`.
pub fn all_block_seqs(f: Field, vectors: &[Vector], max_len: usize) -> Vec<BlockSeq> {
    fn rec(
        f: Field,
        vs: &[Vector],
        max_len: usize,
        acc: &mut Vec<Vector>,
        out: &mut Vec<BlockSeq>,
    ) {
        out.push(BlockSeq::new(f, acc.clone()).unwrap());
        if acc.len() == max_len {
            return;
        }
        let floor = acc.last().map(|v| v.max_support() as isize).unwrap_or(-1);
        for v in vs {
            if v.min_support() as isize > floor {
                acc.push(v.clone());
                rec(f, vs, max_len, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(f, vectors, max_len, &mut Vec::new(), &mut out);
    out
}

/// Oscillation counted straight from the definition: support indices `i`
/// whose coefficient differs from the one at `i + 1` (zero off the support).
pub fn osc_oracle(v: &Vector) -> usize {
    let f = v.field();
    (v.min_support()..=v.max_support())
        .filter(|&i| !f.is_zero(v.coeff(i)) && v.coeff(i) != v.coeff(i + 1))
        .count()
}

/// Support of a vector as a plain sorted list.
pub fn support(v: &Vector) -> Vec<usize> {
    v.coeffs().iter().map(|&(i, _)| i).collect()
}

pub fn units(f: Field, n: usize) -> BlockSeq {
    BlockSeq::new(f, (0..n).map(|i| Vector::basis(f, i)).collect()).unwrap()
}
