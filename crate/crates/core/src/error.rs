use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

/// Default cap on the number of states an exhaustive search may visit.
pub const DEFAULT_STATE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("invalid field `{0}`")]
    InvalidField(String),

    #[error("invalid scalar `{0}`")]
    InvalidScalar(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("not a block sequence: entry {index} does not start above its predecessor")]
    NotBlock { index: usize },

    #[error("search budget of {cap} states exhausted")]
    Budget { cap: u64 },

    #[error("decomposition failure: e{missing} is not in the span of the two subspaces")]
    NotSpanning { missing: usize },

    #[error("subspaces are not independent: dimensions {left} + {right} exceed the rank {rank}")]
    NotDirect {
        left: usize,
        right: usize,
        rank: usize,
    },

    #[error(
        "entry {index} of the support sequence is not a union of supports of the ambient entries"
    )]
    LiftPrecondition { index: usize },

    #[error("exhaustion at step {index}: no qualifying vector within the truncation")]
    Exhaustion { index: usize },

    #[error("illegal move by {side} at inning {inning}: {reason}")]
    IllegalMove {
        side: String,
        inning: usize,
        reason: String,
    },

    #[error("tree extension failure at node {node} against {n}")]
    Extension { node: String, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("operation requires a finite field, got {0}")]
    InfiniteField(String),

    #[error("internal verification failure: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Shared state counter for exhaustive searches.
///
/// Cheap to share across rayon workers; `tick` fails once the cap is passed.
#[derive(Debug)]
pub struct Budget {
    cap: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget {
            cap,
            used: AtomicU64::new(0),
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn tick(&self) -> Result<()> {
        self.spend(1)
    }

    pub fn spend(&self, n: u64) -> Result<()> {
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if used > self.cap {
            Err(Error::Budget { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_STATE_CAP)
    }
}
