//! Oscillation of vectors, the even/odd oscillation pair, and finite probes
//! of asymptoticity below a block sequence.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Field, Vector};
use crate::blockseq::{least_block_subspace, walk_span, BlockSeq};
use crate::error::{Budget, Error, Result};

/// `osc(v) = |{i ∈ supp(v) : a_i ≠ a_{i+1}}|`.
pub fn osc(v: &Vector) -> usize {
    let c = v.coeffs();
    c.iter()
        .enumerate()
        .filter(|&(k, &(i, a))| match c.get(k + 1) {
            Some(&(j, b)) => j != i + 1 || a != b,
            None => true,
        })
        .count()
}

/// `{osc(v) : v ∈ span(X)}` by exhaustive enumeration.
pub fn osc_range(x: &BlockSeq, budget: &Budget) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    // osc is scalar invariant, so normalised vectors suffice
    walk_span::<()>(x.field(), x.entries(), true, budget, &mut |v| {
        out.insert(osc(v));
        Ok(None)
    })?;
    Ok(out)
}

type Decide = Arc<dyn Fn(&Vector) -> bool + Send + Sync>;

/// A decidable set of nonzero vectors.
#[derive(Clone)]
pub struct VectorPredicate {
    name: String,
    scalar_invariant: bool,
    decide: Decide,
}

impl fmt::Debug for VectorPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VectorPredicate")
            .field("name", &self.name)
            .field("scalar_invariant", &self.scalar_invariant)
            .finish()
    }
}

impl VectorPredicate {
    pub fn new(
        name: impl Into<String>,
        scalar_invariant: bool,
        decide: impl Fn(&Vector) -> bool + Send + Sync + 'static,
    ) -> Self {
        VectorPredicate {
            name: name.into(),
            scalar_invariant,
            decide: Arc::new(decide),
        }
    }

    pub fn always() -> Self {
        VectorPredicate::new("all", true, |_| true)
    }

    pub fn never() -> Self {
        VectorPredicate::new("none", true, |_| false)
    }

    pub fn osc_even() -> Self {
        VectorPredicate::new("osc-even", true, |v| osc(v).is_multiple_of(2))
    }

    pub fn osc_odd() -> Self {
        VectorPredicate::new("osc-odd", true, |v| osc(v) % 2 == 1)
    }

    /// Membership in an explicit finite list of vectors.
    pub fn extensional(name: impl Into<String>, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let set: BTreeSet<Vector> = vectors.into_iter().collect();
        VectorPredicate::new(name, false, move |v| set.contains(v))
    }

    /// `osc-even`, `osc-odd`, `all` or `none`.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "osc-even" => Ok(Self::osc_even()),
            "osc-odd" => Ok(Self::osc_odd()),
            "all" => Ok(Self::always()),
            "none" => Ok(Self::never()),
            _ => Err(Error::Parse(format!("unknown predicate {name:?}"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_scalar_invariant(&self) -> bool {
        self.scalar_invariant
    }

    pub fn holds(&self, v: &Vector) -> bool {
        (self.decide)(v)
    }

    pub fn negate(&self) -> Self {
        let d = self.decide.clone();
        VectorPredicate {
            name: format!("not-{}", self.name),
            scalar_invariant: self.scalar_invariant,
            decide: Arc::new(move |v| !d(v)),
        }
    }
}

/// `(A₀, A₁)`: vectors of even and of odd oscillation.
pub fn parity_pair(_field: Field) -> (VectorPredicate, VectorPredicate) {
    (VectorPredicate::osc_even(), VectorPredicate::osc_odd())
}

/// `None` if every length-`d` block sequence `Z ⪯ X` has some `v ∈ span(Z)`
/// with `P(v)`; otherwise the canonically least `Z` whose span avoids `P`.
pub fn meets_every_block_subspace(
    p: &VectorPredicate,
    x: &BlockSeq,
    d: usize,
    budget: &Budget,
) -> Result<Option<BlockSeq>> {
    if !x.field().is_finite() {
        return Err(Error::InfiniteField(format!(
            "block-subspace probes need a finite field, got {}",
            x.field()
        )));
    }
    let avoid = |v: &Vector| !p.holds(v);
    let z = least_block_subspace(x.field(), x.entries(), d, budget, &avoid)?;
    Ok(z.map(|z| BlockSeq::new(x.field(), z).expect("search yields block sequences")))
}
