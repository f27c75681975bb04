//! Span membership and domination between block sequences.
//!
//! cargo run --example span_calculus

use blocklab::algebra::{Field, Vector};
use blocklab::blockseq::{dominates, eventually_dominates, span_contains, tail_beyond, BlockSeq};

fn main() -> blocklab::error::Result<()> {
    let f = Field::gf3();
    let x = BlockSeq::unit(f, 0..6);
    let y = BlockSeq::new(
        f,
        vec![
            Vector::ints(f, &[(0, 1), (1, 2)]).unwrap(),
            Vector::ints(f, &[(3, 1), (4, 1)]).unwrap(),
        ],
    )?;
    println!("X = {x}");
    println!("Y = {y}");

    let v = Vector::ints(f, &[(0, 2), (1, 1), (3, 1), (4, 1)]).unwrap();
    match span_contains(&y, &v)? {
        Some(c) => println!("{v} = {} in the span of Y", y.combine(&c).unwrap()),
        None => println!("{v} is not in the span of Y"),
    }
    let w = Vector::ints(f, &[(0, 1), (1, 1)]).unwrap();
    println!("{w} in span(Y): {}", span_contains(&y, &w)?.is_some());

    println!("Y ⪯ X: {}", dominates(&y, &x));
    println!("X ⪯ Y: {}", dominates(&x, &y));
    let t = tail_beyond(&x, 2);
    println!(
        "X beyond 2 = {t}; Y ⪯* X/2 from index {:?}",
        eventually_dominates(&y, &t, 1)
    );
    Ok(())
}
