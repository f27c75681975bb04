//! Block sequences over `E = ⊕F`: spans, domination, tails, the support-lifting
//! construction, and finite fusion (diagonalisation) of ⪯-chains.

mod canonical;
mod enumerate;

use std::fmt;

use crate::algebra::{Field, Scalar, SubspaceBasis, Vector};
use crate::error::{Budget, Error, Result};
use crate::fin::{FinBlockSeq, FinSet};

pub use canonical::least_in_subspace;
pub use enumerate::{least_block_subspace, span_vectors, walk_span};

/// A finite block sequence: `max supp(x_n) < min supp(x_{n+1})`.
/// The empty sequence is allowed and stands for an exhausted tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSeq {
    field: Field,
    entries: Vec<Vector>,
}

/// A closed interval `[lo, hi]` of naturals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Interval> {
        if lo > hi {
            return Err(Error::Precondition(format!(
                "interval [{lo},{hi}] has lo > hi"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(n: usize) -> Interval {
        Interval { lo: n, hi: n }
    }

    /// `self < other`: every element of `self` is below every element of `other`.
    pub fn precedes(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    /// `self < s` for a finite set.
    pub fn precedes_set(&self, s: &FinSet) -> bool {
        self.hi < s.min_elem()
    }

    /// `s < self`.
    pub fn follows_set(&self, s: &FinSet) -> bool {
        s.max_elem() < self.lo
    }

    pub fn contains(&self, n: usize) -> bool {
        self.lo <= n && n <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// True iff consecutive supports are strictly separated.
pub fn is_block_sequence(vs: &[Vector]) -> bool {
    vs.windows(2)
        .all(|w| w[0].max_support() < w[1].min_support())
}

impl BlockSeq {
    pub fn new(field: Field, entries: Vec<Vector>) -> Result<BlockSeq> {
        for v in &entries {
            v.check_field(field)?;
        }
        if let Some(k) = entries
            .windows(2)
            .position(|w| w[0].max_support() >= w[1].min_support())
        {
            return Err(Error::NotBlock { index: k + 1 });
        }
        Ok(BlockSeq { field, entries })
    }

    pub fn empty(field: Field) -> BlockSeq {
        BlockSeq {
            field,
            entries: Vec::new(),
        }
    }

    /// `(e_lo, e_{lo+1}, …, e_{hi-1})`.
    pub fn unit(field: Field, range: std::ops::Range<usize>) -> BlockSeq {
        BlockSeq {
            field,
            entries: range.map(|i| Vector::basis(field, i)).collect(),
        }
    }

    pub(crate) fn from_block_unchecked(field: Field, entries: Vec<Vector>) -> BlockSeq {
        debug_assert!(is_block_sequence(&entries));
        BlockSeq { field, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Vector] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Vector> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_support(&self) -> Option<usize> {
        self.entries.last().map(Vector::max_support)
    }

    pub fn min_support(&self) -> Option<usize> {
        self.entries.first().map(Vector::min_support)
    }

    /// Each entry rescaled to leading coefficient 1 (same span).
    pub fn normalized(&self) -> BlockSeq {
        BlockSeq {
            field: self.field,
            entries: self.entries.iter().map(Vector::normalized).collect(),
        }
    }

    pub fn prefix(&self, n: usize) -> BlockSeq {
        BlockSeq {
            field: self.field,
            entries: self.entries[..n.min(self.len())].to_vec(),
        }
    }

    /// Entries whose support lies entirely below `n`.
    pub fn truncate_to(&self, n: usize) -> BlockSeq {
        let k = self.entries.partition_point(|x| x.max_support() < n);
        self.prefix(k)
    }

    /// Appends `v` if the result is still a block sequence.
    pub fn push(&mut self, v: Vector) -> Result<()> {
        v.check_field(self.field)?;
        if let Some(m) = self.max_support() {
            if v.min_support() <= m {
                return Err(Error::NotBlock { index: self.len() });
            }
        }
        self.entries.push(v);
        Ok(())
    }

    /// Subspace spanned by the entries, inside truncation `n`.
    pub fn subspace(&self, n: usize) -> Result<SubspaceBasis> {
        SubspaceBasis::new(self.field, n, self.truncate_to(n).entries)
    }

    /// `Σ a_i x_i` for coefficients aligned with the entries.
    pub fn combine(&self, coeffs: &[Scalar]) -> Option<Vector> {
        let f = self.field;
        Vector::from_terms(
            f,
            self.entries
                .iter()
                .zip(coeffs)
                .filter(|(_, a)| !f.is_zero(**a))
                .flat_map(|(x, &a)| x.coeffs().iter().map(move |&(j, c)| (j, f.mul(a, c)))),
        )
    }
}

impl fmt::Display for BlockSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Decides `v ∈ span(X)` and returns the coefficients `(a_i)` with
/// `v = Σ a_i x_i`.
///
/// Supports of the entries are disjoint, so each `a_i` is forced by the first
/// shared index: `a_i = v[j] / x_i[j]` for `j = min(supp x_i ∩ supp v)`, or 0
/// when they do not meet. The reconstruction is then checked exactly.
pub fn span_contains(x: &BlockSeq, v: &Vector) -> Result<Option<Vec<Scalar>>> {
    v.check_field(x.field)?;
    let f = x.field;
    let mut coeffs = vec![f.zero(); x.len()];
    let mut matched = 0;
    for (i, xi) in x.entries.iter().enumerate() {
        if xi.max_support() < v.min_support() {
            continue;
        }
        if xi.min_support() > v.max_support() {
            break;
        }
        let Some(&(j, c)) = xi.coeffs().iter().find(|(j, _)| !f.is_zero(v.coeff(*j))) else {
            continue;
        };
        let a = f.div(v.coeff(j), c).expect("nonzero coefficient");
        for &(k, ck) in xi.coeffs() {
            if v.coeff(k) != f.mul(a, ck) {
                return Ok(None);
            }
        }
        matched += xi.support_len();
        coeffs[i] = a;
    }
    Ok((matched == v.support_len()).then_some(coeffs))
}

/// `X ⪯ Y`: every entry of `X` lies in `span(Y)`.
pub fn dominates(x: &BlockSeq, y: &BlockSeq) -> bool {
    x.field == y.field
        && x.entries
            .iter()
            .all(|v| matches!(span_contains(y, v), Ok(Some(_))))
}

/// `X/n`: the entries whose supports lie entirely above `n`.
pub fn tail_beyond(x: &BlockSeq, n: usize) -> BlockSeq {
    let k = x.entries.partition_point(|v| v.min_support() <= n);
    BlockSeq {
        field: x.field,
        entries: x.entries[k..].to_vec(),
    }
}

/// `X/x⃗`: the tail above the supports of a finite block sequence
/// (all of `X` when the prefix is empty).
pub fn tail_after(x: &BlockSeq, prefix: &[Vector]) -> BlockSeq {
    match prefix.last() {
        Some(v) => tail_beyond(x, v.max_support()),
        None => x.clone(),
    }
}

/// Least `n` such that the entries of `X` with supports at or above `n`
/// number at least `min_tail` and lie in `span(Y)`; `None` if no tail works.
///
/// `n = 0` keeps all of `X`; in general the tail tested is `X/(n-1)`.
pub fn eventually_dominates(x: &BlockSeq, y: &BlockSeq, min_tail: usize) -> Option<usize> {
    if x.field != y.field {
        return None;
    }
    // dominated entries form a suffix-closed condition, so scan from the back
    let mut first_ok = x.len();
    while first_ok > 0 && matches!(span_contains(y, &x.entries[first_ok - 1]), Ok(Some(_))) {
        first_ok -= 1;
    }
    if x.len() - first_ok < min_tail {
        return None;
    }
    Some(if first_ok == 0 {
        0
    } else {
        x.entries[first_ok - 1].min_support() + 1
    })
}

/// Lifts a FIN block sequence `A ⪯ supp(X)` to `Y ⪯ X` with `supp(Y) = A`:
/// `y_k` is the coefficient-1 sum of the entries of `X` supported inside `a_k`.
pub fn lift_from_supports(x: &BlockSeq, a: &FinBlockSeq) -> Result<BlockSeq> {
    let f = x.field;
    let mut out = Vec::with_capacity(a.len());
    for (k, ak) in a.entries().iter().enumerate() {
        let parts: Vec<&Vector> = x
            .entries
            .iter()
            .filter(|v| v.support().is_subset(ak))
            .collect();
        let covered: usize = parts.iter().map(|v| v.support_len()).sum();
        if parts.is_empty() || covered != ak.len() {
            return Err(Error::LiftPrecondition { index: k });
        }
        let y = parts
            .iter()
            .skip(1)
            .fold(parts[0].clone(), |acc, v| acc.concat_above(v));
        out.push(y);
    }
    Ok(BlockSeq::from_block_unchecked(f, out))
}

fn common_field(seqs: &[&BlockSeq]) -> Result<Field> {
    let f = seqs
        .first()
        .map(|s| s.field)
        .ok_or_else(|| Error::Precondition("empty chain".into()))?;
    for s in seqs {
        if s.field != f {
            return Err(Error::FieldMismatch {
                left: f.to_string(),
                right: s.field.to_string(),
            });
        }
    }
    Ok(f)
}

/// `span(X_0) ∩ … ∩ span(X_k)` as a subspace, computed by elimination.
pub fn span_intersection(seqs: &[&BlockSeq]) -> Result<SubspaceBasis> {
    let f = common_field(seqs)?;
    let n = seqs
        .iter()
        .filter_map(|s| s.max_support())
        .max()
        .map_or(0, |m| m + 1);
    let mut acc = seqs[0].subspace(n)?;
    for s in &seqs[1..] {
        if acc.dim() == 0 {
            break;
        }
        acc = acc.intersection(&s.subspace(n)?)?;
    }
    debug_assert_eq!(acc.field(), f);
    Ok(acc)
}

/// Canonically least nonzero vector of `span(X_0) ∩ … ∩ span(X_k)` whose
/// support lies in `(above, limit)` (`above = None` means no lower bound).
pub fn least_common_vector(
    seqs: &[&BlockSeq],
    above: Option<usize>,
    limit: Option<usize>,
) -> Result<Option<Vector>> {
    let f = common_field(seqs)?;
    let lo = above.map_or(0, |m| m + 1);
    let trimmed: Vec<BlockSeq> = seqs
        .iter()
        .map(|s| {
            let t = match above {
                Some(m) => tail_beyond(s, m),
                None => (*s).clone(),
            };
            match limit {
                Some(n) => t.truncate_to(n),
                None => t,
            }
        })
        .collect();
    if trimmed.iter().any(BlockSeq::is_empty) {
        return Ok(None);
    }
    let refs: Vec<&BlockSeq> = trimmed.iter().collect();
    let space = span_intersection(&refs)?;
    Ok(least_in_subspace(f, space.basis(), lo, space.truncation()))
}

/// Finite fusion of a chain `X_0, …, X_{k-1}`: returns `(y_0, …, y_{k-1})`
/// where `y_j` is the canonically least vector of `span(X_0) ∩ … ∩ span(X_j)`
/// supported above `y_{j-1}`. Consequently `Y/y_{j-1} ⪯ X_j` for every `j`.
pub fn fuse_diagonalize(chain: &[BlockSeq]) -> Result<BlockSeq> {
    let refs: Vec<&BlockSeq> = chain.iter().collect();
    let f = common_field(&refs)?;
    let mut out: Vec<Vector> = Vec::with_capacity(chain.len());
    for j in 0..chain.len() {
        let above = out.last().map(Vector::max_support);
        match least_common_vector(&refs[..=j], above, None)? {
            Some(y) => out.push(y),
            None => return Err(Error::Exhaustion { index: j }),
        }
    }
    Ok(BlockSeq::from_block_unchecked(f, out))
}

/// A maximal block sequence inside `span(X) ∩ span(Y)` within truncation `n`,
/// built greedily from canonically least vectors. The result is below both
/// `X` and `Y` and may be empty.
pub fn intersect_block(x: &BlockSeq, y: &BlockSeq, n: usize) -> Result<BlockSeq> {
    let f = common_field(&[x, y])?;
    let mut out: Vec<Vector> = Vec::new();
    loop {
        let above = out.last().map(Vector::max_support);
        match least_common_vector(&[x, y], above, Some(n))? {
            Some(v) => out.push(v),
            None => break,
        }
    }
    Ok(BlockSeq::from_block_unchecked(f, out))
}

/// Nonzero vectors of `span(X)` in canonical order (exhaustive; budgeted).
pub fn span_of(x: &BlockSeq, budget: &Budget) -> Result<Vec<Vector>> {
    span_vectors(x.field, &x.entries, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> Field {
        Field::gf2()
    }

    fn g3() -> Field {
        Field::gf3()
    }

    fn v(f: Field, terms: &[(usize, i64)]) -> Vector {
        Vector::ints(f, terms).unwrap()
    }

    fn e(f: Field, i: usize) -> Vector {
        Vector::basis(f, i)
    }

    fn bs(f: Field, entries: Vec<Vector>) -> BlockSeq {
        BlockSeq::new(f, entries).unwrap()
    }

    #[test]
    fn block_sequence_examples() {
        let f = g2();
        assert!(is_block_sequence(&[v(f, &[(0, 1), (1, 1)]), e(f, 2)]));
        assert!(!is_block_sequence(&[v(f, &[(0, 1), (2, 1)]), e(f, 1)]));
        assert!(is_block_sequence(&[]));
        assert_eq!(
            BlockSeq::new(f, vec![e(f, 1), e(f, 1)]).unwrap_err(),
            Error::NotBlock { index: 1 }
        );
    }

    #[test]
    fn span_contains_examples() {
        let f = g2();
        let x = bs(f, vec![v(f, &[(0, 1), (1, 1)]), e(f, 2)]);
        let got = span_contains(&x, &v(f, &[(0, 1), (1, 1), (2, 1)])).unwrap();
        assert_eq!(got, Some(vec![f.one(), f.one()]));

        let x = bs(f, vec![v(f, &[(0, 1), (1, 1)])]);
        assert_eq!(span_contains(&x, &e(f, 0)).unwrap(), None);

        let f = g3();
        let x = bs(f, vec![v(f, &[(0, 1), (1, 2)]), v(f, &[(2, 1), (3, 1)])]);
        let got = span_contains(&x, &v(f, &[(0, 2), (1, 1), (2, 1), (3, 1)])).unwrap();
        assert_eq!(got, Some(vec![f.from_i64(2), f.one()]));

        assert!(span_contains(&x, &e(g2(), 0)).is_err());
    }

    #[test]
    fn span_contains_rejects_stray_indices() {
        let f = g3();
        let x = bs(f, vec![e(f, 0), e(f, 2)]);
        assert_eq!(span_contains(&x, &v(f, &[(0, 1), (1, 1)])).unwrap(), None);
        assert_eq!(span_contains(&x, &e(f, 5)).unwrap(), None);
    }

    #[test]
    fn dominates_examples() {
        let f = g2();
        let x = bs(f, vec![v(f, &[(0, 1), (1, 1)]), e(f, 2)]);
        assert!(dominates(&x, &BlockSeq::unit(f, 0..4)));
        assert!(!dominates(
            &bs(f, vec![e(f, 0)]),
            &bs(f, vec![v(f, &[(0, 1), (1, 1)])])
        ));
        assert!(dominates(&x, &x));
        assert!(dominates(&BlockSeq::empty(f), &x));
    }

    #[test]
    fn tail_examples() {
        let f = g2();
        let x = bs(f, vec![e(f, 0), v(f, &[(1, 1), (2, 1)]), e(f, 3)]);
        assert_eq!(tail_beyond(&x, 1), bs(f, vec![e(f, 3)]));
        assert_eq!(
            tail_beyond(&x, 0),
            bs(f, vec![v(f, &[(1, 1), (2, 1)]), e(f, 3)])
        );
        assert_eq!(tail_after(&x, &[e(f, 0)]), tail_beyond(&x, 0));
        assert_eq!(tail_after(&x, &[]), x);
    }

    #[test]
    fn eventually_dominates_examples() {
        let f = g2();
        let y = bs(f, vec![e(f, 1), e(f, 2), e(f, 3)]);
        assert_eq!(
            eventually_dominates(&bs(f, vec![e(f, 2), e(f, 3)]), &y, 2),
            Some(0)
        );
        assert_eq!(
            eventually_dominates(&bs(f, vec![e(f, 0), e(f, 2)]), &bs(f, vec![e(f, 2)]), 1),
            Some(1)
        );
        assert_eq!(
            eventually_dominates(
                &bs(f, vec![e(f, 0), e(f, 1)]),
                &bs(f, vec![e(f, 2), e(f, 3)]),
                1
            ),
            None
        );
    }

    #[test]
    fn lift_examples() {
        let f = g2();
        let x = BlockSeq::unit(f, 0..3);
        let a = FinBlockSeq::from_slices(&[&[0, 1], &[2]]).unwrap();
        assert_eq!(
            lift_from_supports(&x, &a).unwrap(),
            bs(f, vec![v(f, &[(0, 1), (1, 1)]), e(f, 2)])
        );

        let f = g3();
        let x = BlockSeq::unit(f, 0..2);
        let a = FinBlockSeq::from_slices(&[&[0, 1]]).unwrap();
        assert_eq!(
            lift_from_supports(&x, &a).unwrap(),
            bs(f, vec![v(f, &[(0, 1), (1, 1)])])
        );

        let a = FinBlockSeq::from_slices(&[&[0, 2]]).unwrap();
        assert_eq!(
            lift_from_supports(&x, &a).unwrap_err(),
            Error::LiftPrecondition { index: 0 }
        );
    }

    #[test]
    fn lift_keeps_ambient_coefficients() {
        let f = g3();
        let x = bs(f, vec![v(f, &[(0, 2)]), v(f, &[(1, 1), (2, 2)])]);
        let a = FinBlockSeq::from_slices(&[&[0, 1, 2]]).unwrap();
        let y = lift_from_supports(&x, &a).unwrap();
        assert_eq!(y.entries()[0], v(f, &[(0, 2), (1, 1), (2, 2)]));
        assert!(dominates(&y, &x));
    }

    #[test]
    fn fuse_examples() {
        let f = g2();
        let chain = vec![
            BlockSeq::unit(f, 0..6),
            BlockSeq::unit(f, 1..6),
            BlockSeq::unit(f, 2..6),
        ];
        assert_eq!(fuse_diagonalize(&chain).unwrap(), BlockSeq::unit(f, 0..3));

        let x = bs(f, vec![v(f, &[(1, 1), (3, 1)]), e(f, 5)]);
        assert_eq!(
            fuse_diagonalize(std::slice::from_ref(&x)).unwrap(),
            x.prefix(1)
        );

        let chain = vec![bs(f, vec![e(f, 0)]), bs(f, vec![e(f, 1)])];
        assert_eq!(
            fuse_diagonalize(&chain).unwrap_err(),
            Error::Exhaustion { index: 1 }
        );
    }

    #[test]
    fn intersect_examples() {
        let f = g2();
        let x = BlockSeq::unit(f, 0..2);
        let y = bs(f, vec![v(f, &[(0, 1), (1, 1)])]);
        assert_eq!(intersect_block(&x, &y, 4).unwrap(), y);
        let x = bs(f, vec![v(f, &[(0, 1), (2, 1)]), v(f, &[(3, 1), (4, 1)])]);
        assert_eq!(intersect_block(&x, &x, 8).unwrap(), x);
        assert!(
            intersect_block(&bs(f, vec![e(f, 0)]), &bs(f, vec![e(f, 1)]), 4)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn intersect_respects_truncation() {
        let f = g3();
        let x = BlockSeq::unit(f, 0..6);
        assert_eq!(intersect_block(&x, &x, 3).unwrap(), BlockSeq::unit(f, 0..3));
    }

    #[test]
    fn intersect_finds_combinations() {
        // span(e0+e1, e2+e3) ∩ span(e0, e1+e2+e3) = span(...)? only vectors with
        // equal e0/e1 weights and equal e2/e3 weights: e0+e1 is not in the
        // second span, e0+e1+e2+e3 is.
        let f = g2();
        let x = bs(f, vec![v(f, &[(0, 1), (1, 1)]), v(f, &[(2, 1), (3, 1)])]);
        let y = bs(f, vec![e(f, 0), v(f, &[(1, 1), (2, 1), (3, 1)])]);
        assert_eq!(
            intersect_block(&x, &y, 4).unwrap(),
            bs(f, vec![v(f, &[(0, 1), (1, 1), (2, 1), (3, 1)])])
        );
    }
}
