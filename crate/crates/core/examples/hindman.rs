//! First monochromatic block sequences for finite colorings of FIN.
//!
//! cargo run --example hindman

use blocklab::error::Budget;
use blocklab::fin::{finite_unions, hindman_search, hindman_threshold, milliken_search, Coloring};

fn main() -> blocklab::error::Result<()> {
    let budget = Budget::default();
    for name in ["const", "min-parity", "card-parity"] {
        let c = Coloring::named(name, 6, 1)?;
        match hindman_search(&c, 2, &budget)? {
            Some((a, color)) => {
                let unions = finite_unions(&a, &budget)?;
                println!(
                    "{name:12} {} color {color}, {} unions",
                    a.key(),
                    unions.len()
                );
            }
            None => println!("{name:12} no witness in [0,6)"),
        }
    }

    let pairs = Coloring::named("adjacency", 6, 2)?;
    match milliken_search(&pairs, 3, &budget)? {
        Some((a, color)) => println!("pairs by adjacency: {} color {color}", a.key()),
        None => println!("pairs by adjacency: none"),
    }

    // least universe forcing a length-2 witness for every 2-coloring
    let n = hindman_threshold(2, 2, 4, &budget)?;
    println!("2 colors, length 2: threshold {n:?} (searched N <= 4)");
    Ok(())
}
