//! Values pinned from brute-force searches.

mod common;

use blocklab::algebra::{Field, Vector};
use blocklab::blockseq::BlockSeq;
use blocklab::error::Budget;
use blocklab::filters::{density_probe, FilterBase};
use blocklab::oscillation::{osc_range, VectorPredicate};
use common::*;

fn gf2(ix: &[usize]) -> Vector {
    Vector::indicator(Field::gf2(), ix.iter().copied()).unwrap()
}

/// Least `(v, w)` in canonical order with `v`, `w`, `v + w` all of even
/// oscillation and `v` entirely below `w`.
fn least_even_pair(n: usize) -> Option<(Vector, Vector)> {
    let f = Field::gf2();
    let mut vs = all_vectors(f, n);
    vs.sort();
    let even = |v: &Vector| osc_oracle(v).is_multiple_of(2);
    for v in vs.iter().filter(|v| even(v)) {
        let top = *support(v).last().unwrap();
        for w in vs.iter().filter(|w| support(w)[0] > top && even(w)) {
            let sum = combine(f, &[v.clone(), w.clone()], &[f.one(), f.one()]).unwrap();
            if even(&sum) {
                return Some((v.clone(), w.clone()));
            }
        }
    }
    None
}

#[test]
fn density_witness_for_even_oscillation() {
    let (v, w) = least_even_pair(11).unwrap();
    assert_eq!(
        (v.clone(), w.clone()),
        (gf2(&[0, 1, 2, 3, 4, 6]), gf2(&[8, 10]))
    );
    let f = Field::gf2();
    let base = FilterBase::new(f, 11, vec![BlockSeq::unit(f, 0..11)], 1).unwrap();
    let got = density_probe(&VectorPredicate::osc_even(), &base, 2, &Budget::default()).unwrap();
    assert_eq!(got, vec![Some(BlockSeq::new(f, vec![v, w]).unwrap())]);
    // the textbook pair is valid but later in canonical order
    assert!(gf2(&[0, 1, 2, 3, 4, 6]) < gf2(&[0, 2]));
}

#[test]
fn osc_range_of_units_over_gf3() {
    let f = Field::gf3();
    for m in 1..=6 {
        let got: Vec<usize> = osc_range(&units(f, m), &Budget::default())
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, (1..=m).collect::<Vec<_>>());
    }
}
