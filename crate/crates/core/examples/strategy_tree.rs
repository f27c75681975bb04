//! The tree of answers a strategy for II gives in the restricted game, and
//! the asymptotic-game strategy read off from it.
//!
//! cargo run --example strategy_tree

use blocklab::algebra::Field;
use blocklab::blockseq::BlockSeq;
use blocklab::filters::FilterBase;
use blocklab::games::{
    into_tree_strategy_for_ii, outcome_of, play, strategy_tree_of, tree_branch_violation,
    tree_extension_violation, CanonicalII, ConstNatural, GameKind, Transcript,
};

fn main() -> blocklab::error::Result<()> {
    let f = Field::gf2();
    let x = BlockSeq::unit(f, 0..6);
    let half = BlockSeq::unit(f, 3..6);
    let base = FilterBase::new(f, 6, vec![x.clone(), half], 1)?;

    let tree = strategy_tree_of(&CanonicalII, &base, &x, 2)?;
    println!("{} nodes, depth {}", tree.len(), tree.depth());
    for path in tree.paths() {
        let shown: Vec<String> = path.iter().map(|v| v.to_string()).collect();
        println!("  ({})", shown.join(", "));
    }
    println!(
        "branch check: {:?}",
        tree_branch_violation(&tree, &CanonicalII, &base)?
    );
    println!(
        "extension check: {:?}",
        tree_extension_violation(&tree, &CanonicalII, &base)?
    );

    let sigma = into_tree_strategy_for_ii(tree, &base);
    let start = Transcript::new(GameKind::Asymptotic, x, None)?;
    match play(&start, &ConstNatural(1), &sigma, 2) {
        Ok(t) => println!("tree strategy outcome {}", outcome_of(&t)),
        Err(e) => println!("tree strategy stopped: {e}"),
    }
    Ok(())
}
