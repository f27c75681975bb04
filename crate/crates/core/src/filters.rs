//! Finite filter bases standing in for block filters, with constructors and
//! checkers for the (p), strong (p), spread and q-point style properties,
//! plus the interval algorithms relating spread filters to q-points.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{Field, Vector};
use crate::blockseq::{
    dominates, fuse_diagonalize, intersect_block, least_block_subspace, least_common_vector,
    span_contains, tail_beyond, BlockSeq, Interval,
};
use crate::error::{Budget, Error, Result};
use crate::fin::{FinBlockSeq, FinSet};
use crate::games::{
    diagonalizing_strategy_for_i, outcome_of, play, prefix_tail_violation, BlockFamily,
    CanonicalII, GameKind, Transcript,
};
use crate::oscillation::VectorPredicate;

/// A finite list of generators `⟨X⟩` within truncation `N`. A block
/// sequence is "in the filter" when some generator dominates it and it has
/// at least `min_tail` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterBase {
    field: Field,
    truncation: usize,
    generators: Vec<BlockSeq>,
    min_tail: usize,
}

impl FilterBase {
    pub fn new(
        field: Field,
        truncation: usize,
        generators: Vec<BlockSeq>,
        min_tail: usize,
    ) -> Result<FilterBase> {
        if min_tail == 0 {
            return Err(Error::Precondition("min_tail must be at least 1".into()));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.to_string(),
                    right: g.field().to_string(),
                });
            }
            match g.max_support() {
                None => return Err(Error::Precondition(format!("generator {k} is empty"))),
                Some(m) if m >= truncation => {
                    return Err(Error::Precondition(format!(
                        "generator {k} reaches e{m}, outside truncation {truncation}"
                    )))
                }
                _ => {}
            }
        }
        Ok(FilterBase {
            field,
            truncation,
            generators,
            min_tail,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn generators(&self) -> &[BlockSeq] {
        &self.generators
    }

    pub fn min_tail(&self) -> usize {
        self.min_tail
    }

    /// Finite reading of `⟨Y⟩ ∈ F`.
    pub fn contains(&self, y: &BlockSeq) -> bool {
        y.field() == self.field
            && y.len() >= self.min_tail
            && self.generators.iter().any(|g| dominates(y, g))
    }
}

/// First pair of generators whose block intersection is shorter than
/// `min_tail`, or `None` if the base is directed.
pub fn is_directed_base(b: &FilterBase) -> Result<Option<(usize, usize)>> {
    let g = &b.generators;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if intersect_block(&g[i], &g[j], b.truncation)?.len() < b.min_tail {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// A `⪯*`-diagonalisation of the targets: entry `j` lies in
/// `⟨X_0⟩ ∩ … ∩ ⟨X_j⟩`. The output has `max(|targets|, min_tail)` entries,
/// the last target standing in for the missing ones.
pub fn p_diagonalize(b: &FilterBase, targets: &[BlockSeq]) -> Result<BlockSeq> {
    let Some(last) = targets.last() else {
        return Err(Error::Precondition("no targets to diagonalise".into()));
    };
    if let Some(k) = targets
        .iter()
        .position(|t| t.max_support().is_some_and(|m| m >= b.truncation))
    {
        return Err(Error::Precondition(format!(
            "target {k} leaves the truncation"
        )));
    }
    let mut chain = targets.to_vec();
    while chain.len() < b.min_tail {
        chain.push(last.clone());
    }
    fuse_diagonalize(&chain)
}

/// Result of a strong-(p) diagonalisation.
#[derive(Clone, Debug)]
pub struct StrongPReport {
    pub outcome: BlockSeq,
    pub transcript: Transcript,
    /// Number of prefixes `y⃗ ⊑ Y` whose tail domination was checked.
    pub prefixes_checked: usize,
}

/// Plays I's diagonalising strategy against the canonical II for `rounds`
/// innings and verifies `Y/y⃗ ⪯ X_y⃗` for every prefix of the outcome.
/// A failed verification is reported as an internal error.
pub fn strong_p_diagonalize(
    b: &FilterBase,
    family: Arc<BlockFamily>,
    x: &BlockSeq,
    rounds: usize,
) -> Result<StrongPReport> {
    let sigma = diagonalizing_strategy_for_i(family.clone(), b, x)?;
    let start = Transcript::new(GameKind::Restricted, x.clone(), Some(b.clone()))?;
    let transcript = play(&start, &sigma, &CanonicalII, rounds)?;
    let outcome = outcome_of(&transcript);
    if let Some(k) = prefix_tail_violation(&outcome, &*family) {
        return Err(Error::Verification(format!(
            "tail of {outcome} after {k} entries escapes its family member"
        )));
    }
    Ok(StrongPReport {
        prefixes_checked: outcome.len() + 1,
        outcome,
        transcript,
    })
}

/// Strictly increasing finite intervals `I_0 < I_1 < ⋯`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalSeq {
    entries: Vec<Interval>,
}

impl IntervalSeq {
    pub fn new(entries: Vec<Interval>) -> Result<IntervalSeq> {
        if let Some(k) = entries.windows(2).position(|w| !w[0].precedes(&w[1])) {
            return Err(Error::NotBlock { index: k + 1 });
        }
        Ok(IntervalSeq { entries })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<IntervalSeq> {
        IntervalSeq::new(
            pairs
                .iter()
                .map(|&(lo, hi)| Interval::new(lo, hi))
                .collect::<Result<_>>()?,
        )
    }

    pub fn entries(&self) -> &[Interval] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Least `n` at which `X` fails to be spread by `I`: either `I_0 < supp(x_n)`
/// fails, or no `I_m` fits strictly between `supp(x_n)` and `supp(x_{n+1})`.
pub fn check_spread_witness(x: &BlockSeq, i: &IntervalSeq) -> Option<usize> {
    let supports: Vec<FinSet> = x.entries().iter().map(Vector::support).collect();
    check_spread_sets(&supports, i)
}

fn check_spread_sets(supports: &[FinSet], i: &IntervalSeq) -> Option<usize> {
    let Some(i0) = i.entries.first() else {
        return (!supports.is_empty()).then_some(0);
    };
    (0..supports.len()).find(|&n| {
        if !i0.precedes_set(&supports[n]) {
            return true;
        }
        match supports.get(n + 1) {
            Some(next) => !i
                .entries
                .iter()
                .any(|im| im.follows_set(&supports[n]) && im.precedes_set(next)),
            None => false,
        }
    })
}

/// Whether an increasing set of naturals is spread by `J`: `J_0 < x_0` and
/// consecutive elements are separated by a whole `J_k`.
pub fn is_interval_separated(x: &[usize], j: &IntervalSeq) -> bool {
    let sets: Vec<FinSet> = x.iter().map(|&n| FinSet::singleton(n)).collect();
    check_spread_sets(&sets, j).is_none()
}

/// A spread witness built from the max-support-indexed diagonalisation:
/// with `m_k` least such that `k ≤ max I_{m_k}` and `X_k = X/max I_{m_k+1}`,
/// each `y_{n+1}` is the least vector of `⟨X/max I_0⟩ ∩ ⋂_{j≤n} ⟨X_{max supp y_j}⟩`
/// above `y_n`. The result is checked against [`check_spread_witness`].
pub fn spread_from_tail_diag(
    b: &FilterBase,
    x: &BlockSeq,
    i: &IntervalSeq,
    rounds: usize,
) -> Result<BlockSeq> {
    let Some(i0) = i.entries.first() else {
        return if rounds == 0 {
            Ok(BlockSeq::empty(x.field()))
        } else {
            Err(Error::Exhaustion { index: 0 })
        };
    };
    let x_k = |k: usize| -> Option<BlockSeq> {
        let m = i.entries.iter().position(|im| k <= im.hi)?;
        i.entries.get(m + 1).map(|next| tail_beyond(x, next.hi))
    };
    let mut chain = vec![tail_beyond(x, i0.hi)];
    let mut ys: Vec<Vector> = Vec::with_capacity(rounds);
    for n in 0..rounds {
        let refs: Vec<&BlockSeq> = chain.iter().collect();
        let above = ys.last().map(Vector::max_support);
        let y = least_common_vector(&refs, above, Some(b.truncation))?
            .ok_or(Error::Exhaustion { index: n })?;
        if n + 1 < rounds {
            chain.push(x_k(y.max_support()).ok_or(Error::Exhaustion { index: n + 1 })?);
        }
        ys.push(y);
    }
    let y = BlockSeq::new(x.field(), ys)?;
    if let Some(n) = check_spread_witness(&y, i) {
        return Err(Error::Verification(format!(
            "{y} fails the spread condition at entry {n}"
        )));
    }
    Ok(y)
}

/// All vectors with support exactly `s` (every coefficient nonzero).
fn vectors_with_support(field: Field, s: &FinSet, budget: &Budget) -> Result<Vec<Vector>> {
    let scalars = field.enumeration_scalars();
    let mut out: Vec<Vec<(usize, crate::algebra::Scalar)>> = vec![Vec::new()];
    for &i in s.elements() {
        budget.spend((out.len() * scalars.len()) as u64)?;
        out = out
            .into_iter()
            .flat_map(|p| {
                scalars.iter().map(move |&a| {
                    let mut q = p.clone();
                    q.push((i, a));
                    q
                })
            })
            .collect();
    }
    Ok(out
        .into_iter()
        .map(|c| Vector::new(field, c).expect("nonzero increasing"))
        .collect())
}

/// Family indexed by FIN block sequences.
pub type FinFamily = dyn Fn(&FinBlockSeq) -> BlockSeq + Send + Sync;

/// Membership of `a⃗⌢b` in the set `ℬ`: every `v ∈ ⟨X⟩` with `supp(v) = b`
/// lies in `⟨family(c⃗)⟩` for every initial segment `c⃗ ⊑ a⃗`.
pub fn b_set_membership(
    x: &BlockSeq,
    family: &FinFamily,
    candidate: &FinBlockSeq,
    budget: &Budget,
) -> Result<bool> {
    let field = x.field();
    if !field.is_finite() {
        return Err(Error::InfiniteField(field.to_string()));
    }
    let Some((b, a)) = candidate.entries().split_last() else {
        return Err(Error::Precondition(
            "the candidate needs a last entry b".into(),
        ));
    };
    let parts: Vec<&Vector> = x
        .entries()
        .iter()
        .filter(|v| v.support().is_subset(b))
        .collect();
    if parts.iter().map(|v| v.support_len()).sum::<usize>() != b.len() {
        return Err(Error::LiftPrecondition {
            index: candidate.len() - 1,
        });
    }
    let targets: Vec<BlockSeq> = (0..=a.len())
        .map(|k| FinBlockSeq::new(a[..k].to_vec()).map(|c| family(&c)))
        .collect::<Result<_>>()?;
    // v = Σ c_i x_i over the parts with every c_i ≠ 0
    let scalars = field.enumeration_scalars();
    let mut combos: Vec<Option<Vector>> = vec![None];
    for p in &parts {
        budget.spend((combos.len() * scalars.len()) as u64)?;
        combos = combos
            .into_iter()
            .flat_map(|acc| {
                scalars.iter().map(move |&c| {
                    let term = p.scale(c).expect("nonzero scalar");
                    Some(match &acc {
                        Some(v) => v.concat_above(&term),
                        None => term,
                    })
                })
            })
            .collect();
    }
    for v in combos.into_iter().flatten() {
        for t in &targets {
            if span_contains(t, &v)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `X_a⃗` for one FIN index: a block sequence inside `⟨family(x⃗)⟩` for every
/// `x⃗` with `supp(x⃗) ⊑ a⃗` (including `x⃗ = ∅`), by chained block
/// intersection. Finite fields only.
pub fn strong_family_from_fin(
    family: &BlockFamily,
    b: &FilterBase,
    a: &FinBlockSeq,
    budget: &Budget,
) -> Result<BlockSeq> {
    let field = b.field();
    if !field.is_finite() {
        return Err(Error::InfiniteField(format!(
            "strong families from FIN need a finite field, got {field}"
        )));
    }
    let mut indices: Vec<Vec<Vector>> = vec![Vec::new()];
    let mut level: Vec<Vec<Vector>> = vec![Vec::new()];
    for ak in a.entries() {
        let vs = vectors_with_support(field, ak, budget)?;
        level = level
            .into_iter()
            .flat_map(|p| {
                vs.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
        budget.spend(level.len() as u64)?;
        indices.extend(level.iter().cloned());
    }
    let mut acc = family(&indices[0]);
    for (k, xs) in indices.iter().enumerate().skip(1) {
        acc = intersect_block(&acc, &family(xs), b.truncation)?;
        if acc.is_empty() {
            return Err(Error::Exhaustion { index: k });
        }
    }
    if acc.is_empty() {
        return Err(Error::Exhaustion { index: 0 });
    }
    Ok(acc)
}

/// For each generator `X`, the canonically least length-`d` block sequence
/// `Z ⪯ X` whose span lies inside `D`, or `None`.
pub fn density_probe(
    dset: &VectorPredicate,
    b: &FilterBase,
    d: usize,
    budget: &Budget,
) -> Result<Vec<Option<BlockSeq>>> {
    if !b.field().is_finite() {
        return Err(Error::InfiniteField(b.field().to_string()));
    }
    let holds = |v: &Vector| dset.holds(v);
    b.generators
        .par_iter()
        .map(|g| {
            let z = least_block_subspace(b.field(), g.entries(), d, budget, &holds)?;
            Ok(z.map(|z| BlockSeq::new(b.field(), z).expect("search yields block sequences")))
        })
        .collect()
}

/// `(x_0, x_2, …)` and `(x_1, x_3, …)` of the increasing enumeration.
pub fn split_even_odd(x: &BTreeSet<usize>) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let (even, odd): (Vec<_>, Vec<_>) = x.iter().enumerate().partition(|(k, _)| k % 2 == 0);
    (
        even.into_iter().map(|(_, n)| *n).collect(),
        odd.into_iter().map(|(_, n)| *n).collect(),
    )
}

/// A partition of `[0, n)` into nonempty cells `I_0, I_1, …` (in the given
/// order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePartition {
    n: usize,
    cells: Vec<Vec<usize>>,
    owner: Vec<usize>,
}

impl FinitePartition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<FinitePartition> {
        let mut owner = vec![usize::MAX; n];
        let mut cells = cells;
        for (m, cell) in cells.iter_mut().enumerate() {
            if cell.is_empty() {
                return Err(Error::Precondition(format!("cell {m} is empty")));
            }
            cell.sort_unstable();
            for &i in cell.iter() {
                if i >= n {
                    return Err(Error::Precondition(format!("cell {m} contains {i} ≥ {n}")));
                }
                if owner[i] != usize::MAX {
                    return Err(Error::Precondition(format!(
                        "{i} lies in cells {} and {m}",
                        owner[i]
                    )));
                }
                owner[i] = m;
            }
        }
        if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Precondition(format!("{i} is in no cell")));
        }
        Ok(FinitePartition { n, cells, owner })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, i: usize) -> usize {
        self.owner[i]
    }

    /// The cells as intervals, if they are increasing intervals.
    pub fn as_intervals(&self) -> Option<IntervalSeq> {
        let ivs: Vec<Interval> = self
            .cells
            .iter()
            .map(|c| {
                let (lo, hi) = (c[0], c[c.len() - 1]);
                (hi + 1 - lo == c.len()).then_some(Interval { lo, hi })
            })
            .collect::<Option<_>>()?;
        IntervalSeq::new(ivs).ok()
    }
}

/// The interval partition `J_0 < J_1 < ⋯` of `[0, n)`: `J_0 = [0, max I_0]`
/// and `J_{k+1}` is the shortest interval above `J_k` such that
/// `J_0 ∪ ⋯ ∪ J_{k+1}` covers `I_{k+1}` and every cell meeting
/// `J_0 ∪ ⋯ ∪ J_k`. When nothing new must be covered `J_{k+1}` is a single
/// point.
pub fn coarsen_intervals(p: &FinitePartition) -> IntervalSeq {
    let cell_max: Vec<usize> = p.cells.iter().map(|c| c[c.len() - 1]).collect();
    let mut hi = cell_max[0];
    let mut out = vec![Interval { lo: 0, hi }];
    // running max over cells meeting [0, hi]
    let mut reach = 0;
    let mut scanned = 0;
    let mut k = 0;
    while hi + 1 < p.n {
        while scanned <= hi {
            reach = reach.max(cell_max[p.owner[scanned]]);
            scanned += 1;
        }
        let needed = cell_max.get(k + 1).copied().unwrap_or(0).max(reach);
        let top = if needed > hi { needed } else { hi + 1 };
        out.push(Interval {
            lo: hi + 1,
            hi: top,
        });
        hi = top;
        k += 1;
    }
    IntervalSeq { entries: out }
}

/// Least cell meeting `x` at least twice.
pub fn qpoint_check(x: &BTreeSet<usize>, p: &FinitePartition) -> Option<usize> {
    let mut seen = vec![false; p.cells.len()];
    let mut worst: Option<usize> = None;
    for &i in x {
        let m = p.owner[i];
        if seen[m] {
            worst = Some(worst.map_or(m, |w| w.min(m)));
        }
        seen[m] = true;
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> Field {
        Field::gf2()
    }

    fn v(f: Field, t: &[(usize, i64)]) -> Vector {
        Vector::ints(f, t).unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn directed_examples() {
        let f = g2();
        let b = FilterBase::new(f, 8, vec![BlockSeq::unit(f, 0..4)], 1).unwrap();
        assert_eq!(is_directed_base(&b).unwrap(), None);
        let b = FilterBase::new(
            f,
            8,
            vec![BlockSeq::unit(f, 0..4), BlockSeq::unit(f, 1..4)],
            2,
        )
        .unwrap();
        assert_eq!(is_directed_base(&b).unwrap(), None);
        let b = FilterBase::new(
            f,
            8,
            vec![BlockSeq::unit(f, 0..1), BlockSeq::unit(f, 1..2)],
            1,
        )
        .unwrap();
        assert_eq!(is_directed_base(&b).unwrap(), Some((0, 1)));
    }

    #[test]
    fn p_diagonalize_examples() {
        let f = g2();
        let b = FilterBase::new(f, 6, vec![BlockSeq::unit(f, 0..6)], 1).unwrap();
        let targets: Vec<BlockSeq> = (0..3).map(|k| BlockSeq::unit(f, k..6)).collect();
        assert_eq!(
            p_diagonalize(&b, &targets).unwrap(),
            BlockSeq::unit(f, 0..3)
        );
        let b2 = FilterBase::new(f, 6, vec![BlockSeq::unit(f, 0..6)], 2).unwrap();
        assert_eq!(
            p_diagonalize(&b2, &[BlockSeq::unit(f, 2..6)]).unwrap(),
            BlockSeq::unit(f, 2..4)
        );
        let disjoint = [BlockSeq::unit(f, 0..1), BlockSeq::unit(f, 1..2)];
        assert_eq!(
            p_diagonalize(&b, &disjoint).unwrap_err(),
            Error::Exhaustion { index: 1 }
        );
    }

    #[test]
    fn strong_p_examples() {
        let f = g2();
        let x = BlockSeq::unit(f, 0..8);
        let b = FilterBase::new(f, 8, vec![x.clone()], 1).unwrap();
        let xx = x.clone();
        let family: Arc<BlockFamily> = Arc::new(move |p: &[Vector]| {
            p.last()
                .map_or(xx.clone(), |v| tail_beyond(&xx, v.max_support()))
        });
        let r = strong_p_diagonalize(&b, family, &x, 3).unwrap();
        assert_eq!(r.outcome, BlockSeq::unit(f, 0..3));
        assert_eq!(r.prefixes_checked, 4);

        let xx = x.clone();
        let r = strong_p_diagonalize(&b, Arc::new(move |_: &[Vector]| xx.clone()), &x, 3).unwrap();
        assert!(dominates(&r.outcome, &x));

        let small = BlockSeq::unit(f, 0..4);
        let r = strong_p_diagonalize(
            &b,
            Arc::new(|_: &[Vector]| BlockSeq::unit(Field::gf2(), 4..8)),
            &small,
            3,
        );
        assert_eq!(r.unwrap_err(), Error::Exhaustion { index: 0 });
    }

    #[test]
    fn spread_witness_examples() {
        let f = g2();
        let i = IntervalSeq::from_pairs(&[(0, 0), (1, 2), (3, 4), (5, 6), (7, 8)]).unwrap();
        let x = BlockSeq::unit(f, 2..3);
        assert_eq!(
            check_spread_witness(
                &BlockSeq::new(f, vec![Vector::basis(f, 2), Vector::basis(f, 7)]).unwrap(),
                &i
            ),
            None
        );
        assert_eq!(check_spread_witness(&BlockSeq::unit(f, 1..3), &i), Some(0));
        assert_eq!(check_spread_witness(&x, &i), None);
        assert_eq!(check_spread_witness(&BlockSeq::unit(f, 0..1), &i), Some(0));
    }

    #[test]
    fn spread_construction_examples() {
        let f = g2();
        let pairs: Vec<(usize, usize)> = (0..7)
            .map(|m| if m == 0 { (0, 0) } else { (2 * m - 1, 2 * m) })
            .collect();
        let i = IntervalSeq::from_pairs(&pairs).unwrap();
        let x = BlockSeq::unit(f, 0..13);
        let b = FilterBase::new(f, 13, vec![x.clone()], 1).unwrap();
        let y = spread_from_tail_diag(&b, &x, &i, 2).unwrap();
        assert_eq!(
            y,
            BlockSeq::new(f, vec![Vector::basis(f, 1), Vector::basis(f, 5)]).unwrap()
        );
        assert!(spread_from_tail_diag(&b, &x, &i, 0).unwrap().is_empty());

        let x3 = BlockSeq::unit(f, 0..3);
        let b3 = FilterBase::new(f, 3, vec![x3.clone()], 1).unwrap();
        assert!(matches!(
            spread_from_tail_diag(&b3, &x3, &i, 3),
            Err(Error::Exhaustion { .. })
        ));
    }

    #[test]
    fn b_set_examples() {
        let f = g2();
        let x = BlockSeq::unit(f, 0..2);
        let b = Budget::default();
        let xx = x.clone();
        let fam = move |_: &FinBlockSeq| xx.clone();
        assert!(
            b_set_membership(&x, &fam, &FinBlockSeq::from_slices(&[&[0, 1]]).unwrap(), &b).unwrap()
        );
        let only_e0 = |_: &FinBlockSeq| BlockSeq::unit(Field::gf2(), 0..1);
        assert!(!b_set_membership(
            &x,
            &only_e0,
            &FinBlockSeq::from_slices(&[&[1]]).unwrap(),
            &b
        )
        .unwrap());
        // a⃗ = ({0}) is indexed too, but the condition only looks at v with supp {1}
        assert!(!b_set_membership(
            &x,
            &only_e0,
            &FinBlockSeq::from_slices(&[&[0], &[1]]).unwrap(),
            &b
        )
        .unwrap());
        assert!(b_set_membership(
            &x,
            &fam,
            &FinBlockSeq::from_slices(&[&[0], &[1]]).unwrap(),
            &b
        )
        .unwrap());
    }

    #[test]
    fn strong_family_examples() {
        let f = g2();
        let x = BlockSeq::unit(f, 0..6);
        let b = FilterBase::new(f, 6, vec![x.clone()], 1).unwrap();
        let budget = Budget::default();
        let xx = x.clone();
        let constant = move |_: &[Vector]| xx.clone();
        let a = FinBlockSeq::from_slices(&[&[0]]).unwrap();
        assert_eq!(
            strong_family_from_fin(&constant, &b, &a, &budget).unwrap(),
            x
        );

        let xx = x.clone();
        let tails = move |p: &[Vector]| {
            p.last()
                .map_or(xx.clone(), |v| tail_beyond(&xx, v.max_support()))
        };
        assert_eq!(
            strong_family_from_fin(&tails, &b, &a, &budget).unwrap(),
            BlockSeq::unit(f, 1..6)
        );

        let g = Field::gf3();
        let x = BlockSeq::unit(g, 0..6);
        let b = FilterBase::new(g, 6, vec![x.clone()], 1).unwrap();
        // each of the four vectors with support {0,1} gets its own two-dimensional family member
        let fam = move |p: &[Vector]| match p.first() {
            None => BlockSeq::unit(Field::gf3(), 0..6),
            Some(w) => {
                let g = Field::gf3();
                let c = w.coeff(1);
                let head = Vector::new(g, vec![(2, g.one()), (3, c)]).unwrap();
                BlockSeq::new(g, vec![head, Vector::basis(g, 4), Vector::basis(g, 5)]).unwrap()
            }
        };
        let a = FinBlockSeq::from_slices(&[&[0, 1]]).unwrap();
        let out = strong_family_from_fin(&fam, &b, &a, &budget).unwrap();
        assert_eq!(out, BlockSeq::unit(g, 4..6));
        for c0 in 1..3 {
            for c1 in 1..3 {
                let w = v(g, &[(0, c0), (1, c1)]);
                assert!(dominates(&out, &fam(&[w])));
            }
        }

        let q = Field::rationals(2).unwrap();
        let bq = FilterBase::new(q, 4, vec![BlockSeq::unit(q, 0..4)], 1).unwrap();
        let fq = |_: &[Vector]| BlockSeq::unit(Field::rationals(2).unwrap(), 0..4);
        assert!(matches!(
            strong_family_from_fin(&fq, &bq, &a, &budget),
            Err(Error::InfiniteField(_))
        ));
    }

    #[test]
    fn density_examples() {
        let f = g2();
        let b = FilterBase::new(f, 11, vec![BlockSeq::unit(f, 0..11)], 1).unwrap();
        let budget = Budget::default();
        let all = density_probe(&VectorPredicate::always(), &b, 2, &budget).unwrap();
        assert_eq!(all, vec![Some(BlockSeq::unit(f, 0..2))]);
        let none = density_probe(&VectorPredicate::never(), &b, 2, &budget).unwrap();
        assert_eq!(none, vec![None]);
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            split_even_odd(&set(&[1, 4, 7, 9])),
            (set(&[1, 7]), set(&[4, 9]))
        );
        assert_eq!(split_even_odd(&set(&[3])), (set(&[3]), set(&[])));
        assert_eq!(split_even_odd(&set(&[])), (set(&[]), set(&[])));
    }

    #[test]
    fn coarsen_examples() {
        let p = FinitePartition::new(6, vec![(0..6).collect()]).unwrap();
        assert_eq!(
            coarsen_intervals(&p),
            IntervalSeq::from_pairs(&[(0, 5)]).unwrap()
        );
        let p = FinitePartition::new(6, vec![vec![0, 3], vec![1, 2], vec![4, 5]]).unwrap();
        assert_eq!(
            coarsen_intervals(&p),
            IntervalSeq::from_pairs(&[(0, 3), (4, 4), (5, 5)]).unwrap()
        );
        let p = FinitePartition::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(
            coarsen_intervals(&p),
            IntervalSeq::from_pairs(&[(0, 1), (2, 3), (4, 5)]).unwrap()
        );
    }

    #[test]
    fn qpoint_examples() {
        let p = FinitePartition::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(qpoint_check(&set(&[0, 2, 4]), &p), None);
        assert_eq!(qpoint_check(&set(&[0, 1]), &p), Some(0));
        assert_eq!(qpoint_check(&set(&[]), &p), None);
        assert_eq!(qpoint_check(&set(&[2, 3, 0, 1]), &p), Some(0));
    }

    #[test]
    fn partition_validation() {
        assert!(FinitePartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(FinitePartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(FinitePartition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
    }
}
