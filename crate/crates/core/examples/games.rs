//! Playing, recording and replaying the three block games.
//!
//! cargo run --example games

use blocklab::algebra::Field;
use blocklab::blockseq::BlockSeq;
use blocklab::filters::FilterBase;
use blocklab::games::{named_strategy, outcome_of, play, replay, GameKind, Side, Transcript};

fn main() -> blocklab::error::Result<()> {
    let f = Field::gf2();
    let x = BlockSeq::unit(f, 0..8);
    let base = FilterBase::new(f, 8, vec![x.clone()], 1)?;
    for (kind, s1, s2) in [
        (GameKind::Asymptotic, "const:1", "canonical"),
        (GameKind::Gowers, "tail", "random:7"),
        (GameKind::Restricted, "random:3", "canonical"),
    ] {
        let start = Transcript::new(
            kind,
            x.clone(),
            (kind == GameKind::Restricted).then(|| base.clone()),
        )?;
        let t = play(
            &start,
            &*named_strategy(s1, Side::I)?,
            &*named_strategy(s2, Side::II)?,
            3,
        )?;
        println!(
            "{:10} {s1} vs {s2}: outcome {}",
            kind.name(),
            outcome_of(&t)
        );
        println!("           legal on replay: {}", replay(&t).is_none());
    }

    let t = play(
        &Transcript::new(GameKind::Asymptotic, x, None)?,
        &*named_strategy("const:0", Side::I)?,
        &*named_strategy("canonical", Side::II)?,
        2,
    )?;
    println!("{}", serde_json::to_string_pretty(&t).unwrap());
    Ok(())
}
