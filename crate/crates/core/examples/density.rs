//! Least block subspaces inside a vector set, per generator of a base.
//!
//! cargo run --example density

use blocklab::algebra::Field;
use blocklab::blockseq::BlockSeq;
use blocklab::error::Budget;
use blocklab::filters::{density_probe, FilterBase};
use blocklab::oscillation::VectorPredicate;

fn main() -> blocklab::error::Result<()> {
    let f = Field::gf2();
    let base = FilterBase::new(
        f,
        11,
        vec![BlockSeq::unit(f, 0..11), BlockSeq::unit(f, 4..11)],
        1,
    )?;
    for name in ["osc-even", "osc-odd", "none"] {
        let d = VectorPredicate::named(name)?;
        let found = density_probe(&d, &base, 2, &Budget::default())?;
        for (k, z) in found.iter().enumerate() {
            match z {
                Some(z) => println!("{name:8} generator {k}: {z}"),
                None => println!("{name:8} generator {k}: none"),
            }
        }
    }
    Ok(())
}
