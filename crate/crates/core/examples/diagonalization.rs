//! Diagonalizing against a family of block sequences: the strong-(p)
//! construction and a spread witness for an interval sequence.
//!
//! cargo run --example diagonalization

use std::sync::Arc;

use blocklab::algebra::{Field, Vector};
use blocklab::blockseq::{tail_beyond, BlockSeq};
use blocklab::filters::{
    check_spread_witness, spread_from_tail_diag, strong_p_diagonalize, FilterBase, IntervalSeq,
};
use blocklab::games::BlockFamily;

fn main() -> blocklab::error::Result<()> {
    let f = Field::gf2();
    let x = BlockSeq::unit(f, 0..8);
    let base = FilterBase::new(f, 8, vec![x.clone()], 1)?;

    let fx = x.clone();
    let family: Arc<BlockFamily> = Arc::new(move |prefix: &[Vector]| {
        tail_beyond(&fx, prefix.last().map_or(0, |v| v.max_support() + 1))
    });
    let report = strong_p_diagonalize(&base, family, &x, 3)?;
    println!(
        "strong-(p) outcome {} ({} prefixes checked)",
        report.outcome, report.prefixes_checked
    );

    let x13 = BlockSeq::unit(f, 0..13);
    let base13 = FilterBase::new(f, 13, vec![x13.clone()], 1)?;
    let i = IntervalSeq::from_pairs(&[(0, 0), (1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)])?;
    let y = spread_from_tail_diag(&base13, &x13, &i, 2)?;
    println!(
        "spread witness {y}, check: {:?}",
        check_spread_witness(&y, &i)
    );
    Ok(())
}
