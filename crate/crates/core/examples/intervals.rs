//! Coarsening a finite partition into intervals, q-point selectors and the
//! even/odd split.
//!
//! cargo run --example intervals

use std::collections::BTreeSet;

use blocklab::filters::{coarsen_intervals, qpoint_check, split_even_odd, FinitePartition};

fn main() -> blocklab::error::Result<()> {
    let p = FinitePartition::new(
        10,
        vec![vec![0, 3, 8], vec![1, 2], vec![4, 5, 9], vec![6, 7]],
    )?;
    let j = coarsen_intervals(&p);
    println!("cells     {:?}", p.cells());
    println!(
        "intervals {:?}",
        j.entries()
            .iter()
            .map(|iv| (iv.lo, iv.hi))
            .collect::<Vec<_>>()
    );

    for x in [vec![1, 4, 6], vec![4, 5], vec![0, 6, 9]] {
        let set: BTreeSet<usize> = x.into_iter().collect();
        match qpoint_check(&set, &p) {
            None => println!("{set:?} picks at most one point per cell"),
            Some(c) => println!("{set:?} meets cell {c} twice"),
        }
    }

    let (even, odd) = split_even_odd(&BTreeSet::from([1, 4, 7, 9]));
    println!("split {{1,4,7,9}} -> {even:?} {odd:?}");
    Ok(())
}
