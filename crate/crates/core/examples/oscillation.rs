//! Oscillation, its range on a block subspace, and the even/odd pair as a
//! finite asymptotic probe.
//!
//! cargo run --example oscillation

use blocklab::algebra::{Field, Vector};
use blocklab::blockseq::BlockSeq;
use blocklab::error::Budget;
use blocklab::oscillation::{meets_every_block_subspace, osc, osc_range, VectorPredicate};

fn main() -> blocklab::error::Result<()> {
    let f = Field::gf3();
    let v = Vector::ints(f, &[(0, 1), (1, 2), (2, 2), (4, 1)]).unwrap();
    println!("osc({v}) = {}", osc(&v));

    let budget = Budget::default();
    for m in 1..=5 {
        let r = osc_range(&BlockSeq::unit(f, 0..m), &budget)?;
        println!("osc range on (e0..e{}) = {r:?}", m - 1);
    }

    let x = BlockSeq::unit(f, 0..6);
    for p in [VectorPredicate::osc_even(), VectorPredicate::osc_odd()] {
        match meets_every_block_subspace(&p, &x, 2, &budget)? {
            None => println!("{} meets every length-2 block subspace", p.name()),
            Some(z) => println!("{} misses the span of {z}", p.name()),
        }
    }
    Ok(())
}
