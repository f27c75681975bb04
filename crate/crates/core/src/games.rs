//! The asymptotic game `F[X]`, the Gowers game `G[X]` and the restricted
//! Gowers game `G_F[X]` as finite-round state machines, with pluggable
//! strategies and the strategy constructions behind the game
//! characterisations of the (p)-like properties.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Vector;
use crate::blockseq::{
    dominates, eventually_dominates, intersect_block, span_contains, tail_beyond, BlockSeq,
};
use crate::error::{Error, Result};
use crate::filters::FilterBase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GameKind {
    Asymptotic,
    Gowers,
    Restricted,
}

impl GameKind {
    pub fn name(self) -> &'static str {
        match self {
            GameKind::Asymptotic => "asymptotic",
            GameKind::Gowers => "gowers",
            GameKind::Restricted => "restricted",
        }
    }

    pub fn parse(s: &str) -> Result<GameKind> {
        match s {
            "asymptotic" => Ok(GameKind::Asymptotic),
            "gowers" => Ok(GameKind::Gowers),
            "restricted" => Ok(GameKind::Restricted),
            _ => Err(Error::Parse(format!("unknown game kind {s:?}"))),
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    I,
    II,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::I => "I",
            Side::II => "II",
        })
    }
}

/// A single move. Naturals and block sequences belong to I, vectors to II.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    Natural(usize),
    Block(BlockSeq),
    Vector(Vector),
}

impl Move {
    pub fn side(&self) -> Side {
        match self {
            Move::Vector(_) => Side::II,
            _ => Side::I,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Natural(n) => write!(f, "I:{n}"),
            Move::Block(y) => write!(f, "I:{y}"),
            Move::Vector(v) => write!(f, "II:{v}"),
        }
    }
}

/// Legality of a proposed move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Legal,
    Illegal(String),
}

impl Verdict {
    pub fn is_legal(&self) -> bool {
        matches!(self, Verdict::Legal)
    }
}

/// A (partial) round: kind, ambient `X`, the filter base for the
/// restricted game, and the alternating moves starting with I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    kind: GameKind,
    ambient: BlockSeq,
    base: Option<FilterBase>,
    moves: Vec<Move>,
    resigned: Option<Side>,
}

impl Transcript {
    /// An empty round. The restricted game needs a base containing `⟨X⟩`.
    pub fn new(kind: GameKind, ambient: BlockSeq, base: Option<FilterBase>) -> Result<Transcript> {
        if ambient.is_empty() {
            return Err(Error::Precondition(
                "games are played below a nonempty block sequence".into(),
            ));
        }
        match (&base, kind) {
            (None, GameKind::Restricted) => {
                return Err(Error::Precondition(
                    "the restricted game needs a filter base".into(),
                ));
            }
            (Some(b), GameKind::Restricted) => {
                if b.field() != ambient.field() {
                    return Err(Error::FieldMismatch {
                        left: ambient.field().to_string(),
                        right: b.field().to_string(),
                    });
                }
                if !b.contains(&ambient) {
                    return Err(Error::Precondition(format!(
                        "ambient {ambient} is not in the filter base"
                    )));
                }
            }
            _ => {}
        }
        let base = if kind == GameKind::Restricted {
            base
        } else {
            None
        };
        Ok(Transcript {
            kind,
            ambient,
            base,
            moves: Vec::new(),
            resigned: None,
        })
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn ambient(&self) -> &BlockSeq {
        &self.ambient
    }

    pub fn base(&self) -> Option<&FilterBase> {
        self.base.as_ref()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn resigned(&self) -> Option<Side> {
        self.resigned
    }

    pub fn to_move(&self) -> Side {
        if self.moves.len().is_multiple_of(2) {
            Side::I
        } else {
            Side::II
        }
    }

    /// Zero-based inning of the next move.
    pub fn inning(&self) -> usize {
        self.moves.len() / 2
    }

    /// II's vectors so far.
    pub fn outcome_vectors(&self) -> Vec<Vector> {
        self.moves
            .iter()
            .filter_map(|m| match m {
                Move::Vector(v) => Some(v.clone()),
                _ => None,
            })
            .collect()
    }

    /// I's moves so far.
    pub fn i_moves(&self) -> impl Iterator<Item = &Move> {
        self.moves.iter().step_by(2)
    }

    fn last_i_move(&self) -> Option<&Move> {
        self.moves
            .len()
            .checked_sub(1)
            .filter(|k| k % 2 == 0)
            .map(|k| &self.moves[k])
    }

    fn last_outcome_max(&self) -> Option<usize> {
        self.moves.iter().rev().find_map(|m| match m {
            Move::Vector(v) => Some(v.max_support()),
            _ => None,
        })
    }

    /// Appends `m` after validating it.
    pub fn push(&mut self, m: Move) -> Result<()> {
        if self.resigned.is_some() {
            return Err(Error::Precondition("the round is over".into()));
        }
        match validate_move(self, &m) {
            Verdict::Legal => {
                self.moves.push(m);
                Ok(())
            }
            Verdict::Illegal(reason) => Err(Error::IllegalMove {
                side: m.side().to_string(),
                inning: self.inning(),
                reason,
            }),
        }
    }

    pub fn resign(&mut self, side: Side) {
        self.resigned = Some(side);
    }

    /// The same round with no moves.
    pub fn restart(&self) -> Transcript {
        Transcript {
            kind: self.kind,
            ambient: self.ambient.clone(),
            base: self.base.clone(),
            moves: Vec::new(),
            resigned: None,
        }
    }

    /// Rebuilds a transcript from parts, validating every move from scratch.
    pub fn from_parts(
        kind: GameKind,
        ambient: BlockSeq,
        base: Option<FilterBase>,
        moves: Vec<Move>,
        resigned: Option<Side>,
    ) -> Result<Transcript> {
        let mut t = Transcript::new(kind, ambient, base)?;
        for m in moves {
            t.push(m)?;
        }
        t.resigned = resigned;
        Ok(t)
    }

    /// Builds a transcript without validating the moves; pair with
    /// [`replay`] to locate the first illegal move.
    pub fn unchecked(
        kind: GameKind,
        ambient: BlockSeq,
        base: Option<FilterBase>,
        moves: Vec<Move>,
        resigned: Option<Side>,
    ) -> Result<Transcript> {
        let mut t = Transcript::new(kind, ambient, base)?;
        t.moves = moves;
        t.resigned = resigned;
        Ok(t)
    }
}

/// Whether `m` may be played next in `t`.
pub fn validate_move(t: &Transcript, m: &Move) -> Verdict {
    use Verdict::Illegal;
    let side = t.to_move();
    if m.side() != side {
        return Illegal(format!("it is {side}'s turn"));
    }
    let field = t.ambient.field();
    match m {
        Move::Natural(_) if t.kind != GameKind::Asymptotic => {
            Illegal(format!("I plays block sequences in the {} game", t.kind))
        }
        Move::Block(_) if t.kind == GameKind::Asymptotic => {
            Illegal("I plays naturals in the asymptotic game".into())
        }
        Move::Natural(_) => Verdict::Legal,
        Move::Block(y) => {
            if y.field() != field {
                return Illegal(format!(
                    "block sequence over {} in a game over {field}",
                    y.field()
                ));
            }
            if y.is_empty() {
                return Illegal("empty block sequence".into());
            }
            if !dominates(y, &t.ambient) {
                return Illegal("not below the ambient block sequence".into());
            }
            if let Some(b) = &t.base {
                if !b.contains(y) {
                    return Illegal(format!(
                        "not in the filter base (needs a dominating generator and length ≥ {})",
                        b.min_tail()
                    ));
                }
            }
            Verdict::Legal
        }
        Move::Vector(v) => {
            if v.field() != field {
                return Illegal(format!("vector over {} in a game over {field}", v.field()));
            }
            if let Some(prev) = t.last_outcome_max() {
                if v.min_support() <= prev {
                    return Illegal(format!(
                        "min support {} ≤ {prev}, outcome would not be a block sequence",
                        v.min_support()
                    ));
                }
            }
            match t.last_i_move() {
                Some(Move::Natural(n)) => {
                    if v.min_support() <= *n {
                        return Illegal(format!("min support {} ≤ {n}", v.min_support()));
                    }
                    if !matches!(span_contains(&t.ambient, v), Ok(Some(_))) {
                        return Illegal("not in span of the ambient block sequence".into());
                    }
                    Verdict::Legal
                }
                Some(Move::Block(y)) => {
                    if matches!(span_contains(y, v), Ok(Some(_))) {
                        Verdict::Legal
                    } else {
                        Illegal("not in span".into())
                    }
                }
                _ => Illegal("II moves only after I".into()),
            }
        }
    }
}

/// The first illegal move of a transcript.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IllegalAt {
    pub index: usize,
    pub inning: usize,
    pub side: Side,
    pub reason: String,
}

/// Re-validates every move from an empty round.
pub fn replay(t: &Transcript) -> Option<IllegalAt> {
    let mut fresh = t.restart();
    for (index, m) in t.moves.iter().enumerate() {
        if let Verdict::Illegal(reason) = validate_move(&fresh, m) {
            return Some(IllegalAt {
                index,
                inning: index / 2,
                side: fresh.to_move(),
                reason,
            });
        }
        fresh.moves.push(m.clone());
    }
    None
}

/// The block sequence of II's moves.
pub fn outcome_of(t: &Transcript) -> BlockSeq {
    BlockSeq::from_block_unchecked(t.ambient.field(), t.outcome_vectors())
}

/// What a strategy does at its turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Response {
    Play(Move),
    Resign,
}

/// A strategy: a function of the transcript prefix at this side's turn.
pub trait Strategy: Send + Sync {
    fn side(&self) -> Side;
    fn name(&self) -> String;
    fn respond(&self, t: &Transcript) -> Result<Response>;
}

/// Runs up to `rounds` innings from an empty round, validating each move.
/// A strategy's illegal move is an error naming the side and inning.
pub fn play(
    start: &Transcript,
    s1: &dyn Strategy,
    s2: &dyn Strategy,
    rounds: usize,
) -> Result<Transcript> {
    if s1.side() != Side::I || s2.side() != Side::II {
        return Err(Error::Precondition(format!(
            "strategies {} and {} are not for I and II",
            s1.name(),
            s2.name()
        )));
    }
    let mut t = start.restart();
    while t.inning() < rounds {
        let s = if t.to_move() == Side::I { s1 } else { s2 };
        match s.respond(&t)? {
            Response::Play(m) => t.push(m)?,
            Response::Resign => {
                t.resign(s.side());
                break;
            }
        }
    }
    Ok(t)
}

/// I plays the same natural every inning (asymptotic game).
#[derive(Clone, Debug)]
pub struct ConstNatural(pub usize);

impl Strategy for ConstNatural {
    fn side(&self) -> Side {
        Side::I
    }

    fn name(&self) -> String {
        format!("const:{}", self.0)
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        match t.kind {
            GameKind::Asymptotic => Ok(Response::Play(Move::Natural(self.0))),
            k => Err(Error::Precondition(format!(
                "const:{} is an asymptotic-game strategy, not {k}",
                self.0
            ))),
        }
    }
}

/// The tail available to II: entries of I's last span above the
/// outcome so far (and above I's natural in the asymptotic game).
fn legal_tail(t: &Transcript) -> Result<BlockSeq> {
    let prev = t.last_outcome_max();
    let (span, floor) = match t.last_i_move() {
        Some(Move::Natural(n)) => (&t.ambient, Some(prev.map_or(*n, |p| p.max(*n)))),
        Some(Move::Block(y)) => (y, prev),
        _ => return Err(Error::Precondition("II responds only after I".into())),
    };
    Ok(match floor {
        Some(m) => tail_beyond(span, m),
        None => span.clone(),
    })
}

/// II plays the canonically least legal vector (or resigns if none exists
/// within the truncation).
#[derive(Clone, Debug, Default)]
pub struct CanonicalII;

impl Strategy for CanonicalII {
    fn side(&self) -> Side {
        Side::II
    }

    fn name(&self) -> String {
        "canonical".into()
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        // the least nonzero vector of a block span is its first entry, normalised
        Ok(match legal_tail(t)?.entries().first() {
            Some(v) => Response::Play(Move::Vector(v.normalized())),
            None => Response::Resign,
        })
    }
}

/// Plays a fixed list of own moves, then resigns.
#[derive(Clone, Debug)]
pub struct Scripted {
    side: Side,
    moves: Vec<Move>,
}

impl Scripted {
    pub fn new(side: Side, moves: Vec<Move>) -> Scripted {
        Scripted { side, moves }
    }
}

impl Strategy for Scripted {
    fn side(&self) -> Side {
        self.side
    }

    fn name(&self) -> String {
        format!("scripted[{}]", self.moves.len())
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        Ok(self
            .moves
            .get(t.inning())
            .cloned()
            .map_or(Response::Resign, Response::Play))
    }
}

/// I plays the tail of `X` above the outcome so far: `X/y⃗` in the Gowers
/// games, `max supp(y⃗)` (0 at the start) in the asymptotic game.
#[derive(Clone, Debug, Default)]
pub struct TailPlayer;

impl Strategy for TailPlayer {
    fn side(&self) -> Side {
        Side::I
    }

    fn name(&self) -> String {
        "tail".into()
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        let prev = t.last_outcome_max();
        if t.kind == GameKind::Asymptotic {
            return Ok(Response::Play(Move::Natural(prev.unwrap_or(0))));
        }
        let tail = match prev {
            Some(m) => tail_beyond(&t.ambient, m),
            None => t.ambient.clone(),
        };
        let needed = t.base.as_ref().map_or(1, FilterBase::min_tail);
        Ok(if tail.len() >= needed {
            Response::Play(Move::Block(tail))
        } else {
            Response::Resign
        })
    }
}

/// Seeded random legal play for either side.
///
/// The move at a prefix with `k` moves is drawn from ChaCha8 seeded with
/// `seed + k * 0x9E3779B97F4A7C15` (wrapping), so plays are reproducible.
#[derive(Clone, Debug)]
pub struct RandomStrategy {
    side: Side,
    seed: u64,
}

impl RandomStrategy {
    pub fn new(side: Side, seed: u64) -> RandomStrategy {
        RandomStrategy { side, seed }
    }

    fn rng(&self, t: &Transcript) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(
            self.seed
                .wrapping_add((t.moves.len() as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        )
    }
}

/// A random nonzero combination of a random nonempty run of entries.
fn random_vector(rng: &mut ChaCha8Rng, entries: &[Vector]) -> Option<Vector> {
    let first = entries.first()?;
    let field = first.field();
    let scalars: Vec<_> = field.enumeration_scalars();
    let lo = rng.gen_range(0..entries.len());
    let hi = rng.gen_range(lo..entries.len().min(lo + 3));
    let mut v: Option<Vector> = None;
    for (k, x) in entries[lo..=hi].iter().enumerate() {
        // endpoints always present, interior entries optional
        if k != 0 && k != hi - lo && rng.gen_bool(0.5) {
            continue;
        }
        let a = scalars[rng.gen_range(0..scalars.len())];
        let term = x.scale(a).expect("nonzero scalar");
        v = Some(match v {
            Some(p) => p.concat_above(&term),
            None => term,
        });
    }
    v
}

impl Strategy for RandomStrategy {
    fn side(&self) -> Side {
        self.side
    }

    fn name(&self) -> String {
        format!("random:{}", self.seed)
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        let mut rng = self.rng(t);
        if self.side == Side::II {
            let tail = legal_tail(t)?;
            return Ok(random_vector(&mut rng, tail.entries())
                .map_or(Response::Resign, |v| Response::Play(Move::Vector(v))));
        }
        let prev = t.last_outcome_max();
        if t.kind == GameKind::Asymptotic {
            let top = t.ambient.max_support().unwrap_or(0);
            let lo = prev.unwrap_or(0);
            return Ok(Response::Play(Move::Natural(
                rng.gen_range(lo..=top.max(lo)),
            )));
        }
        let tail = match prev {
            Some(m) => tail_beyond(&t.ambient, m),
            None => t.ambient.clone(),
        };
        let needed = t.base.as_ref().map_or(1, FilterBase::min_tail);
        if tail.len() < needed {
            return Ok(Response::Resign);
        }
        // group consecutive entries into random blocks, keeping at least `needed`
        let mut out = Vec::new();
        let mut rest = tail.entries();
        while !rest.is_empty() {
            let must_keep = needed.saturating_sub(out.len());
            let max_take = (rest.len() + 1)
                .saturating_sub(must_keep.max(1))
                .clamp(1, 3.min(rest.len()));
            let take = rng.gen_range(1..=max_take);
            if let Some(v) = random_vector(&mut rng, &rest[..take]) {
                out.push(v);
            }
            rest = &rest[take..];
        }
        let y = BlockSeq::from_block_unchecked(t.ambient.field(), out);
        Ok(if y.len() >= needed {
            Response::Play(Move::Block(y))
        } else {
            Response::Play(Move::Block(tail))
        })
    }
}

type RespondFn = Arc<dyn Fn(&Transcript) -> Result<Response> + Send + Sync>;

/// A strategy given by a closure.
#[derive(Clone)]
pub struct FnStrategy {
    side: Side,
    name: String,
    f: RespondFn,
}

impl FnStrategy {
    pub fn new(
        side: Side,
        name: impl Into<String>,
        f: impl Fn(&Transcript) -> Result<Response> + Send + Sync + 'static,
    ) -> Self {
        FnStrategy {
            side,
            name: name.into(),
            f: Arc::new(f),
        }
    }
}

impl Strategy for FnStrategy {
    fn side(&self) -> Side {
        self.side
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        (self.f)(t)
    }
}

/// Parses `const:<n>`, `canonical`, `tail` or `random:<seed>`.
pub fn named_strategy(spec: &str, side: Side) -> Result<Box<dyn Strategy>> {
    let bad = || Error::Parse(format!("unknown strategy {spec:?} for {side}"));
    let (head, arg) = spec
        .split_once(':')
        .map_or((spec, None), |(h, a)| (h, Some(a)));
    let num = |a: Option<&str>| a.and_then(|a| a.parse::<u64>().ok()).ok_or_else(bad);
    Ok(match (head, side) {
        ("const", Side::I) => Box::new(ConstNatural(num(arg)? as usize)),
        ("canonical", Side::II) if arg.is_none() => Box::new(CanonicalII),
        ("tail", Side::I) if arg.is_none() => Box::new(TailPlayer),
        ("random", s) => Box::new(RandomStrategy::new(s, num(arg)?)),
        _ => return Err(bad()),
    })
}

/// Family indexed by finite block sequences (II's moves so far).
pub type BlockFamily = dyn Fn(&[Vector]) -> BlockSeq + Send + Sync;

/// I's diagonalising strategy in `G_F[X]`: given II's moves `y⃗`, play a
/// block sequence below both I's previous move and `X_y⃗`, computed by
/// [`intersect_block`] above the outcome so far. Every outcome `Y` then
/// satisfies `Y/y⃗ ⪯ X_y⃗` for each prefix `y⃗`.
#[derive(Clone)]
pub struct DiagonalizingStrategy {
    family: Arc<BlockFamily>,
    truncation: usize,
}

/// Builds the diagonalising strategy for I from a family, a base and `X`.
pub fn diagonalizing_strategy_for_i(
    family: Arc<BlockFamily>,
    base: &FilterBase,
    x: &BlockSeq,
) -> Result<DiagonalizingStrategy> {
    if !base.contains(x) {
        return Err(Error::Precondition(format!(
            "{x} is not in the filter base"
        )));
    }
    Ok(DiagonalizingStrategy {
        family,
        truncation: base.truncation(),
    })
}

impl DiagonalizingStrategy {
    /// The family member for a prefix.
    pub fn target(&self, prefix: &[Vector]) -> BlockSeq {
        (self.family)(prefix)
    }
}

impl Strategy for DiagonalizingStrategy {
    fn side(&self) -> Side {
        Side::I
    }

    fn name(&self) -> String {
        "diagonalizing".into()
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        if t.kind != GameKind::Restricted {
            return Err(Error::Precondition(
                "the diagonalising strategy plays the restricted game".into(),
            ));
        }
        let base = t.base.as_ref().expect("restricted games carry a base");
        let ys = t.outcome_vectors();
        let previous = match t.i_moves().last() {
            Some(Move::Block(y)) => y.clone(),
            _ => t.ambient.clone(),
        };
        let previous = match ys.last() {
            Some(v) => tail_beyond(&previous, v.max_support()),
            None => previous,
        };
        let target = (self.family)(&ys);
        let y = intersect_block(&previous, &target, self.truncation)?;
        if y.len() < base.min_tail().max(1) {
            return Err(Error::Exhaustion { index: t.inning() });
        }
        Ok(Response::Play(Move::Block(y)))
    }
}

/// The bookkeeping sets `𝒜_y⃗` of a restricted round: for each prefix of
/// II's moves, the block sequences I has played along it.
pub fn bookkeeping(t: &Transcript) -> Vec<(Vec<Vector>, Vec<BlockSeq>)> {
    let ys = t.outcome_vectors();
    let played: Vec<BlockSeq> = t
        .i_moves()
        .filter_map(|m| match m {
            Move::Block(y) => Some(y.clone()),
            _ => None,
        })
        .collect();
    (0..played.len())
        .map(|k| (ys[..k.min(ys.len())].to_vec(), played[..=k].to_vec()))
        .collect()
}

/// Checks `Y/y⃗ ⪯ X_y⃗` for every prefix `y⃗ ⊑ Y`; returns the first failing
/// prefix length.
pub fn prefix_tail_violation(y: &BlockSeq, family: &BlockFamily) -> Option<usize> {
    (0..=y.len()).find(|&k| {
        let prefix = &y.entries()[..k];
        let tail = BlockSeq::from_block_unchecked(y.field(), y.entries()[k..].to_vec());
        !dominates(&tail, &family(prefix))
    })
}

/// Membership of a finite prefix in the clopen set
/// `{(x_n) : m ≤ max supp(x_0) ⇒ x_1 ∈ ⟨X_m⟩}`, decided by the first two
/// entries alone.
pub fn clopen_diag_membership(prefix: &[Vector], family: &[BlockSeq]) -> Result<bool> {
    if prefix.len() < 2 {
        return Err(Error::Precondition(
            "membership is decided by the first two entries".into(),
        ));
    }
    let prefix = BlockSeq::new(prefix[0].field(), prefix.to_vec())?;
    let (x0, x1) = (&prefix.entries()[0], &prefix.entries()[1]);
    let top = x0.max_support();
    if family.len() <= top {
        return Err(Error::Precondition(format!(
            "family defined up to {} but {} is needed",
            family.len().saturating_sub(1),
            top
        )));
    }
    for xm in &family[..=top] {
        if span_contains(xm, x1)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// I's strategy in `F[X]` for playing into the clopen set above: first 0,
/// then a natural beyond which the tail of `X` lies in every `X_m` with
/// `m ≤ max supp(y_0)`. Resigns when no such tail exists.
#[derive(Clone, Debug)]
pub struct ClopenDiagStrategy {
    family: Vec<BlockSeq>,
}

impl ClopenDiagStrategy {
    pub fn new(family: Vec<BlockSeq>) -> Self {
        ClopenDiagStrategy { family }
    }
}

impl Strategy for ClopenDiagStrategy {
    fn side(&self) -> Side {
        Side::I
    }

    fn name(&self) -> String {
        "clopen-diag".into()
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        let ys = t.outcome_vectors();
        let Some(y0) = ys.first() else {
            return Ok(Response::Play(Move::Natural(0)));
        };
        let prev = ys.last().map_or(0, Vector::max_support);
        let top = y0.max_support();
        if self.family.len() <= top {
            return Err(Error::Precondition(format!("family needs index {top}")));
        }
        let mut n = prev;
        for xm in &self.family[..=top] {
            match eventually_dominates(&t.ambient, xm, 1) {
                // entries starting at or above `start` are dominated
                Some(start) => n = n.max(start.saturating_sub(1)),
                None => return Ok(Response::Resign),
            }
        }
        Ok(Response::Play(Move::Natural(n)))
    }
}

/// A node of a strategy tree: II's moves along the branch and, in `S`, the
/// I-moves that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub path: Vec<Vector>,
    pub witnesses: Vec<BlockSeq>,
    pub children: Vec<usize>,
}

/// The pair `(T, S)` built from a II-strategy in the restricted game.
#[derive(Clone, Debug)]
pub struct StrategyTree {
    ambient: BlockSeq,
    depth: usize,
    nodes: Vec<TreeNode>,
}

impl StrategyTree {
    pub fn ambient(&self) -> &BlockSeq {
        &self.ambient
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The node reached by following `path` from the root.
    pub fn find(&self, path: &[Vector]) -> Option<usize> {
        let mut at = 0;
        for v in path {
            at = *self.nodes[at]
                .children
                .iter()
                .find(|&&c| self.nodes[c].path.last() == Some(v))?;
        }
        Some(at)
    }

    pub fn contains(&self, path: &[Vector]) -> bool {
        self.find(path).is_some()
    }

    /// All node paths, parents before children.
    pub fn paths(&self) -> Vec<Vec<Vector>> {
        self.nodes.iter().map(|n| n.path.clone()).collect()
    }

    /// Nodes without children.
    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }
}

/// Generators usable as I-moves below `X` in the restricted game.
fn legal_generators(base: &FilterBase, x: &BlockSeq) -> Vec<BlockSeq> {
    base.generators()
        .iter()
        .filter(|g| dominates(g, x) && base.contains(g))
        .cloned()
        .collect()
}

/// Replays a witness history against `alpha`, returning the transcript
/// after I's last witness.
fn witness_transcript(
    start: &Transcript,
    path: &[Vector],
    witnesses: &[BlockSeq],
) -> Result<Transcript> {
    let mut t = start.restart();
    for (k, w) in witnesses.iter().enumerate() {
        t.push(Move::Block(w.clone()))?;
        if let Some(v) = path.get(k) {
            t.push(Move::Vector(v.clone()))?;
        }
    }
    Ok(t)
}

/// Builds the tree `T` of II-responses (with witnesses `S`) to depth
/// `depth`. Level `n+1` of a node collects `alpha`'s answers to each legal
/// generator played after the node's witness history; resignations prune.
pub fn strategy_tree_of(
    alpha: &dyn Strategy,
    base: &FilterBase,
    x: &BlockSeq,
    depth: usize,
) -> Result<StrategyTree> {
    if alpha.side() != Side::II {
        return Err(Error::Precondition(
            "the tree is built from a strategy for II".into(),
        ));
    }
    let start = Transcript::new(GameKind::Restricted, x.clone(), Some(base.clone()))?;
    let gens = legal_generators(base, x);
    let mut nodes = vec![TreeNode {
        path: vec![],
        witnesses: vec![],
        children: vec![],
    }];
    let mut frontier = vec![0];
    for _ in 0..depth {
        let mut next = Vec::new();
        for id in frontier {
            let (path, witnesses) = (nodes[id].path.clone(), nodes[id].witnesses.clone());
            for g in &gens {
                let mut t = witness_transcript(&start, &path, &witnesses)?;
                if !validate_move(&t, &Move::Block(g.clone())).is_legal() {
                    continue;
                }
                t.push(Move::Block(g.clone()))?;
                let y = match alpha.respond(&t)? {
                    Response::Play(Move::Vector(y)) => y,
                    Response::Play(m) => {
                        return Err(Error::IllegalMove {
                            side: "II".into(),
                            inning: t.inning(),
                            reason: format!("played {m}"),
                        })
                    }
                    Response::Resign => continue,
                };
                t.push(Move::Vector(y.clone()))?;
                if nodes[id]
                    .children
                    .iter()
                    .any(|&c| nodes[c].path.last() == Some(&y))
                {
                    continue;
                }
                let mut p = path.clone();
                p.push(y);
                let mut w = witnesses.clone();
                w.push(g.clone());
                let child = nodes.len();
                nodes.push(TreeNode {
                    path: p,
                    witnesses: w,
                    children: vec![],
                });
                nodes[id].children.push(child);
                next.push(child);
            }
        }
        frontier = next;
    }
    Ok(StrategyTree {
        ambient: x.clone(),
        depth,
        nodes,
    })
}

/// Property (i) at finite depth: replaying each node's witnesses against
/// `alpha` reproduces its path. Returns the first failing path.
pub fn tree_branch_violation(
    tree: &StrategyTree,
    alpha: &dyn Strategy,
    base: &FilterBase,
) -> Result<Option<Vec<Vector>>> {
    let start = Transcript::new(
        GameKind::Restricted,
        tree.ambient.clone(),
        Some(base.clone()),
    )?;
    for node in &tree.nodes {
        let mut t = start.restart();
        for (k, w) in node.witnesses.iter().enumerate() {
            t.push(Move::Block(w.clone()))?;
            match alpha.respond(&t)? {
                Response::Play(Move::Vector(y)) if y == node.path[k] => t.push(Move::Vector(y))?,
                _ => return Ok(Some(node.path.clone())),
            }
        }
    }
    Ok(None)
}

/// Property (ii) at finite depth: every node above the last level has, for
/// each legal generator `Y`, a child whose last vector lies in `⟨Y⟩`.
/// Generators `alpha` resigns against are skipped. Returns the first
/// failing (path, generator index).
pub fn tree_extension_violation(
    tree: &StrategyTree,
    alpha: &dyn Strategy,
    base: &FilterBase,
) -> Result<Option<(Vec<Vector>, usize)>> {
    let start = Transcript::new(
        GameKind::Restricted,
        tree.ambient.clone(),
        Some(base.clone()),
    )?;
    let gens = legal_generators(base, &tree.ambient);
    for node in tree.nodes.iter().filter(|n| n.path.len() < tree.depth) {
        for (gi, g) in gens.iter().enumerate() {
            let t = witness_transcript(&start, &node.path, &node.witnesses)?;
            if !validate_move(&t, &Move::Block(g.clone())).is_legal() {
                continue;
            }
            let mut probe = t.clone();
            probe.push(Move::Block(g.clone()))?;
            if alpha.respond(&probe)? == Response::Resign {
                continue;
            }
            let ok = node.children.iter().any(|&c| {
                let y = tree.nodes[c]
                    .path
                    .last()
                    .expect("children are nonempty paths");
                matches!(span_contains(g, y), Ok(Some(_)))
            });
            if !ok {
                return Ok(Some((node.path.clone(), gi)));
            }
        }
    }
    Ok(None)
}

/// II's strategy in `F[X]` that stays inside `T`: against I's natural `n`,
/// move to a child whose vector lies in the span of some generator's tail
/// above `n`, taking generators in order and the least such child.
#[derive(Clone, Debug)]
pub struct TreeStrategy {
    tree: StrategyTree,
    base: FilterBase,
}

pub fn into_tree_strategy_for_ii(tree: StrategyTree, base: &FilterBase) -> TreeStrategy {
    TreeStrategy {
        tree,
        base: base.clone(),
    }
}

impl TreeStrategy {
    pub fn tree(&self) -> &StrategyTree {
        &self.tree
    }
}

impl Strategy for TreeStrategy {
    fn side(&self) -> Side {
        Side::II
    }

    fn name(&self) -> String {
        "tree".into()
    }

    fn respond(&self, t: &Transcript) -> Result<Response> {
        let Some(Move::Natural(n)) = t.last_i_move() else {
            return Err(Error::Precondition(
                "the tree strategy answers naturals in the asymptotic game".into(),
            ));
        };
        let path = t.outcome_vectors();
        let node_name = || {
            format!(
                "({})",
                path.iter()
                    .map(Vector::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        };
        let id = self.tree.find(&path).ok_or_else(|| Error::Extension {
            node: node_name(),
            n: *n,
        })?;
        let node = &self.tree.nodes[id];
        for g in self.base.generators() {
            let tail = tail_beyond(g, *n);
            let best = node
                .children
                .iter()
                .map(|&c| self.tree.nodes[c].path.last().expect("child path"))
                .filter(|y| matches!(span_contains(&tail, y), Ok(Some(_))))
                .min();
            if let Some(y) = best {
                return Ok(Response::Play(Move::Vector(y.clone())));
            }
        }
        Err(Error::Extension {
            node: node_name(),
            n: *n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn g2() -> Field {
        Field::gf2()
    }

    fn v(f: Field, t: &[(usize, i64)]) -> Vector {
        Vector::ints(f, t).unwrap()
    }

    fn unit(f: Field, r: std::ops::Range<usize>) -> BlockSeq {
        BlockSeq::unit(f, r)
    }

    #[test]
    fn asymptotic_rule() {
        let f = g2();
        let mut t = Transcript::new(GameKind::Asymptotic, unit(f, 0..6), None).unwrap();
        t.push(Move::Natural(1)).unwrap();
        assert!(validate_move(&t, &Move::Vector(Vector::basis(f, 2))).is_legal());
        assert_eq!(
            validate_move(&t, &Move::Vector(v(f, &[(0, 1), (1, 1)]))),
            Verdict::Illegal("min support 0 ≤ 1".into())
        );
        assert!(!validate_move(&t, &Move::Natural(3)).is_legal());
    }

    #[test]
    fn gowers_rule() {
        let f = g2();
        let mut t = Transcript::new(GameKind::Gowers, unit(f, 0..4), None).unwrap();
        let y = BlockSeq::new(f, vec![v(f, &[(0, 1), (1, 1)]), Vector::basis(f, 2)]).unwrap();
        t.push(Move::Block(y)).unwrap();
        assert_eq!(
            validate_move(&t, &Move::Vector(Vector::basis(f, 0))),
            Verdict::Illegal("not in span".into())
        );
        assert!(validate_move(&t, &Move::Vector(v(f, &[(0, 1), (1, 1), (2, 1)]))).is_legal());
    }

    #[test]
    fn play_examples() {
        let f = g2();
        let start = Transcript::new(GameKind::Asymptotic, unit(f, 0..6), None).unwrap();
        let t = play(&start, &ConstNatural(0), &CanonicalII, 0).unwrap();
        assert!(t.moves().is_empty() && outcome_of(&t).is_empty());
        let t = play(&start, &ConstNatural(0), &CanonicalII, 3).unwrap();
        assert_eq!(outcome_of(&t), unit(f, 1..4));
        assert_eq!(replay(&t), None);

        let script = Scripted::new(
            Side::II,
            vec![
                Move::Vector(Vector::basis(f, 1)),
                Move::Vector(Vector::basis(f, 2)),
                Move::Vector(Vector::basis(f, 2)),
            ],
        );
        let err = play(&start, &ConstNatural(0), &script, 3).unwrap_err();
        assert!(matches!(err, Error::IllegalMove { ref side, inning: 2, .. } if side == "II"));
    }

    #[test]
    fn outcome_examples() {
        let f = g2();
        let mut t = Transcript::new(GameKind::Asymptotic, unit(f, 0..6), None).unwrap();
        for m in [
            Move::Natural(1),
            Move::Vector(Vector::basis(f, 2)),
            Move::Natural(3),
            Move::Vector(Vector::basis(f, 4)),
        ] {
            t.push(m).unwrap();
        }
        assert_eq!(
            outcome_of(&t),
            BlockSeq::new(f, vec![Vector::basis(f, 2), Vector::basis(f, 4)]).unwrap()
        );
    }

    #[test]
    fn replay_finds_tampering() {
        let f = g2();
        let start = Transcript::new(GameKind::Asymptotic, unit(f, 0..6), None).unwrap();
        let t = play(&start, &ConstNatural(2), &CanonicalII, 2).unwrap();
        let mut moves = t.moves().to_vec();
        moves[3] = Move::Vector(Vector::basis(f, 1));
        let bad = Transcript::unchecked(t.kind(), t.ambient().clone(), None, moves, None).unwrap();
        let at = replay(&bad).unwrap();
        assert_eq!((at.index, at.inning, at.side), (3, 1, Side::II));
    }

    fn single_base(f: Field) -> FilterBase {
        FilterBase::new(f, 8, vec![unit(f, 0..8)], 1).unwrap()
    }

    #[test]
    fn diagonalizing_with_constant_family() {
        let f = g2();
        let x = unit(f, 0..8);
        let base = single_base(f);
        let fam_x = x.clone();
        let family: Arc<BlockFamily> = Arc::new(move |_: &[Vector]| fam_x.clone());
        let sigma = diagonalizing_strategy_for_i(family.clone(), &base, &x).unwrap();
        let start = Transcript::new(GameKind::Restricted, x.clone(), Some(base)).unwrap();
        let t = play(&start, &sigma, &CanonicalII, 3).unwrap();
        let y = outcome_of(&t);
        assert!(dominates(&y, &x));
        assert_eq!(prefix_tail_violation(&y, &*family), None);
        assert_eq!(bookkeeping(&t).len(), 3);
    }

    #[test]
    fn diagonalizing_with_tail_family() {
        let f = g2();
        let x = unit(f, 0..8);
        let base = single_base(f);
        let fam_x = x.clone();
        let family: Arc<BlockFamily> = Arc::new(move |p: &[Vector]| {
            p.last()
                .map_or(fam_x.clone(), |v| tail_beyond(&fam_x, v.max_support()))
        });
        let sigma = diagonalizing_strategy_for_i(family.clone(), &base, &x).unwrap();
        let start = Transcript::new(GameKind::Restricted, x.clone(), Some(base)).unwrap();
        let t = play(&start, &sigma, &CanonicalII, 3).unwrap();
        assert_eq!(outcome_of(&t), unit(f, 0..3));
        assert_eq!(prefix_tail_violation(&outcome_of(&t), &*family), None);
    }

    #[test]
    fn diagonalizing_exhausts_on_disjoint_family() {
        let f = g2();
        let x = unit(f, 0..4);
        let base = FilterBase::new(f, 8, vec![x.clone()], 1).unwrap();
        let family: Arc<BlockFamily> = Arc::new(move |_: &[Vector]| unit(Field::gf2(), 4..8));
        let sigma = diagonalizing_strategy_for_i(family, &base, &x).unwrap();
        let start = Transcript::new(GameKind::Restricted, x, Some(base)).unwrap();
        assert_eq!(
            play(&start, &sigma, &CanonicalII, 2).unwrap_err(),
            Error::Exhaustion { index: 0 }
        );
    }

    #[test]
    fn clopen_examples() {
        let f = g2();
        let x = unit(f, 0..8);
        let family: Vec<BlockSeq> = (0..8).map(|m| tail_beyond(&x, m)).collect();
        assert!(
            clopen_diag_membership(&[Vector::basis(f, 0), Vector::basis(f, 1)], &family).unwrap()
        );
        assert!(
            clopen_diag_membership(&[Vector::basis(f, 1), Vector::basis(f, 2)], &family).unwrap()
        );
        let shifted: Vec<BlockSeq> = (0..8).map(|m| tail_beyond(&x, m + 1)).collect();
        assert!(
            !clopen_diag_membership(&[Vector::basis(f, 0), Vector::basis(f, 1)], &shifted).unwrap()
        );
        assert!(
            clopen_diag_membership(&[Vector::basis(f, 0), Vector::basis(f, 2)], &shifted).unwrap()
        );
        assert_eq!(
            clopen_diag_membership(&[Vector::basis(f, 1), Vector::basis(f, 1)], &family)
                .unwrap_err(),
            Error::NotBlock { index: 1 }
        );
    }

    #[test]
    fn clopen_strategy_plays_into_the_set() {
        let f = g2();
        let x = unit(f, 0..10);
        let family: Vec<BlockSeq> = (0..10).map(|m| tail_beyond(&x, m + 1)).collect();
        let start = Transcript::new(GameKind::Asymptotic, x, None).unwrap();
        let t = play(
            &start,
            &ClopenDiagStrategy::new(family.clone()),
            &CanonicalII,
            2,
        )
        .unwrap();
        assert!(clopen_diag_membership(outcome_of(&t).entries(), &family).unwrap());
    }

    #[test]
    fn tree_examples() {
        let f = g2();
        let x = unit(f, 0..6);
        let base = FilterBase::new(f, 6, vec![x.clone()], 1).unwrap();
        let tree = strategy_tree_of(&CanonicalII, &base, &x, 0).unwrap();
        assert_eq!(tree.paths(), vec![Vec::<Vector>::new()]);
        let tree = strategy_tree_of(&CanonicalII, &base, &x, 1).unwrap();
        assert_eq!(tree.paths(), vec![vec![], vec![Vector::basis(f, 0)]]);

        let base = FilterBase::new(f, 6, vec![x.clone(), unit(f, 1..6)], 1).unwrap();
        let tree = strategy_tree_of(&CanonicalII, &base, &x, 1).unwrap();
        assert_eq!(
            tree.paths(),
            vec![vec![], vec![Vector::basis(f, 0)], vec![Vector::basis(f, 1)]]
        );
        assert_eq!(
            tree_branch_violation(&tree, &CanonicalII, &base).unwrap(),
            None
        );
        assert_eq!(
            tree_extension_violation(&tree, &CanonicalII, &base).unwrap(),
            None
        );

        let ii = into_tree_strategy_for_ii(tree.clone(), &base);
        let start = Transcript::new(GameKind::Asymptotic, x.clone(), None).unwrap();
        let t = play(&start, &ConstNatural(0), &ii, 1).unwrap();
        assert_eq!(outcome_of(&t).entries(), &[Vector::basis(f, 1)]);
        assert!(matches!(
            play(&start, &ConstNatural(5), &ii, 1),
            Err(Error::Extension { n: 5, .. })
        ));

        let flat = strategy_tree_of(&CanonicalII, &base, &x, 0).unwrap();
        let ii = into_tree_strategy_for_ii(flat, &base);
        assert!(matches!(
            play(&start, &ConstNatural(0), &ii, 1),
            Err(Error::Extension { .. })
        ));
    }

    #[test]
    fn named_strategies_parse() {
        assert_eq!(
            named_strategy("const:3", Side::I).unwrap().name(),
            "const:3"
        );
        assert_eq!(
            named_strategy("canonical", Side::II).unwrap().name(),
            "canonical"
        );
        assert!(named_strategy("canonical", Side::I).is_err());
        assert!(named_strategy("random:x", Side::I).is_err());
    }

    #[test]
    fn random_play_is_legal_and_reproducible() {
        let f = Field::gf3();
        let x = unit(f, 0..9);
        let base = FilterBase::new(f, 9, vec![x.clone()], 2).unwrap();
        for kind in [GameKind::Asymptotic, GameKind::Gowers, GameKind::Restricted] {
            let start = Transcript::new(kind, x.clone(), Some(base.clone())).unwrap();
            for seed in 0..20 {
                let s1 = RandomStrategy::new(Side::I, seed);
                let s2 = RandomStrategy::new(Side::II, seed + 1000);
                let t = play(&start, &s1, &s2, 4).unwrap();
                assert_eq!(replay(&t), None);
                assert!(dominates(&outcome_of(&t), &x));
                assert_eq!(play(&start, &s1, &s2, 4).unwrap(), t);
            }
        }
    }
}
