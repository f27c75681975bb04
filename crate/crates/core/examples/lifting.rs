//! Support projection to FIN, lifting a FIN coarsening back to vectors, and
//! finite fusion of a decreasing chain.
//!
//! cargo run --example lifting

use blocklab::algebra::{Field, Vector};
use blocklab::blockseq::{dominates, fuse_diagonalize, lift_from_supports, tail_beyond, BlockSeq};
use blocklab::fin::{fin_dominates, supp_seq, FinBlockSeq};

fn main() -> blocklab::error::Result<()> {
    let f = Field::gf3();
    let x = BlockSeq::new(
        f,
        vec![
            Vector::ints(f, &[(0, 1), (1, 2)]).unwrap(),
            Vector::ints(f, &[(2, 2)]).unwrap(),
            Vector::ints(f, &[(4, 1), (5, 1)]).unwrap(),
            Vector::ints(f, &[(7, 2)]).unwrap(),
        ],
    )?;
    let a = FinBlockSeq::from_slices(&[&[0, 1, 2], &[4, 5, 7]])?;
    let y = lift_from_supports(&x, &a)?;
    println!("X       = {x}");
    println!("supp(X) = {}", supp_seq(&x).key());
    println!("A       = {}", a.key());
    println!("lift    = {y}");
    println!(
        "supp(lift) == A: {}, lift ⪯ X: {}",
        supp_seq(&y) == a,
        dominates(&y, &x)
    );
    println!(
        "supp monotone: {}",
        fin_dominates(&supp_seq(&y), &supp_seq(&x))
    );

    // nested tails fuse to their least diagonal
    let base = BlockSeq::unit(Field::gf2(), 0..6);
    let chain: Vec<BlockSeq> = (0..3).map(|k| tail_beyond(&base, k)).collect();
    println!("fusion of nested tails: {}", fuse_diagonalize(&chain)?);
    Ok(())
}
