//! Canonical-order enumeration of spans of block sequences and of the block
//! sequences lying below them.

use crate::algebra::{Field, Scalar, Vector};
use crate::error::{Budget, Result};

/// For each entry, its enumeration scalars ordered by the leading
/// coefficient they produce, which is the canonical order of `a·x`.
fn ordered_scalars(field: Field, entries: &[Vector], normalized_only: bool) -> Vec<Vec<Scalar>> {
    let scalars = field.enumeration_scalars();
    entries
        .iter()
        .map(|x| {
            if normalized_only {
                return vec![field.inv(x.leading()).expect("nonzero leading coefficient")];
            }
            let mut s = scalars.clone();
            s.sort_by_key(|&a| field.mul(a, x.leading()));
            s
        })
        .collect()
}

/// Visits the nonzero vectors of `span(entries)` in canonical order until
/// `visit` returns `Some`. The entries must form a block sequence.
///
/// With `normalized_only`, only vectors with leading coefficient 1 are
/// visited. Over ℚ the coefficients range over the height-bounded scalars.
pub fn walk_span<T>(
    field: Field,
    entries: &[Vector],
    normalized_only: bool,
    budget: &Budget,
    visit: &mut dyn FnMut(&Vector) -> Result<Option<T>>,
) -> Result<Option<T>> {
    let all = ordered_scalars(field, entries, false);
    let first = ordered_scalars(field, entries, normalized_only);
    fn rec<T>(
        entries: &[Vector],
        start: usize,
        partial: Option<&Vector>,
        all: &[Vec<Scalar>],
        first: &[Vec<Scalar>],
        budget: &Budget,
        visit: &mut dyn FnMut(&Vector) -> Result<Option<T>>,
    ) -> Result<Option<T>> {
        for j in start..entries.len() {
            let choices = if partial.is_none() {
                &first[j]
            } else {
                &all[j]
            };
            for &a in choices {
                let term = entries[j].scale(a).expect("nonzero scalar");
                let v = match partial {
                    Some(p) => p.concat_above(&term),
                    None => term,
                };
                budget.tick()?;
                if let Some(t) = visit(&v)? {
                    return Ok(Some(t));
                }
                if let Some(t) = rec(entries, j + 1, Some(&v), all, first, budget, visit)? {
                    return Ok(Some(t));
                }
            }
        }
        Ok(None)
    }
    rec(entries, 0, None, &all, &first, budget, visit)
}

/// All nonzero vectors of the span, in canonical order.
pub fn span_vectors(field: Field, entries: &[Vector], budget: &Budget) -> Result<Vec<Vector>> {
    let mut out = Vec::new();
    walk_span::<()>(field, entries, false, budget, &mut |v| {
        out.push(v.clone());
        Ok(None)
    })?;
    Ok(out)
}

/// Canonically least block sequence `Z = (z_0, …, z_{d-1})` of normalised
/// vectors from `span(entries)` such that every nonzero vector of `span(Z)`
/// satisfies `holds`. Candidates are pruned as soon as a prefix fails.
///
/// Normalising entries does not change `span(Z)`, and the normalised
/// representative of a span is canonically least among its rescalings, so
/// the result is the least witness over all block sequences.
pub fn least_block_subspace(
    field: Field,
    entries: &[Vector],
    d: usize,
    budget: &Budget,
    holds: &dyn Fn(&Vector) -> bool,
) -> Result<Option<Vec<Vector>>> {
    let scalars = field.enumeration_scalars();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        field: Field,
        entries: &[Vector],
        d: usize,
        chosen: &mut Vec<Vector>,
        span: &[Vector],
        scalars: &[Scalar],
        budget: &Budget,
        holds: &dyn Fn(&Vector) -> bool,
    ) -> Result<bool> {
        if chosen.len() == d {
            return Ok(true);
        }
        let start = match chosen.last() {
            Some(z) => entries.partition_point(|x| x.min_support() <= z.max_support()),
            None => 0,
        };
        let tail = &entries[start..];
        let mut found = false;
        walk_span(field, tail, true, budget, &mut |z| {
            // span(prefix, z) = span(prefix) ∪ {u + a z}
            let mut extension = Vec::with_capacity((span.len() + 1) * scalars.len());
            for &a in scalars {
                let az = z.scale(a).expect("nonzero scalar");
                budget.tick()?;
                if !holds(&az) {
                    return Ok(None);
                }
                extension.push(az.clone());
                for u in span {
                    let w = u.concat_above(&az);
                    if !holds(&w) {
                        return Ok(None);
                    }
                    extension.push(w);
                }
            }
            budget.spend(extension.len() as u64)?;
            let mut next_span = span.to_vec();
            next_span.extend(extension);
            chosen.push(z.clone());
            if rec(
                field, entries, d, chosen, &next_span, scalars, budget, holds,
            )? {
                found = true;
                return Ok(Some(()));
            }
            chosen.pop();
            Ok(None)
        })?;
        Ok(found)
    }
    let mut chosen = Vec::with_capacity(d);
    if rec(field, entries, d, &mut chosen, &[], &scalars, budget, holds)? {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let f = Field::gf3();
        let xs = vec![
            Vector::ints(f, &[(0, 1), (1, 2)]).unwrap(),
            Vector::ints(f, &[(2, 2)]).unwrap(),
            Vector::ints(f, &[(3, 1), (5, 1)]).unwrap(),
        ];
        let vs = span_vectors(f, &xs, &Budget::default()).unwrap();
        assert_eq!(vs.len(), 26);
        assert!(vs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn normalized_walk_visits_leading_one_only() {
        let f = Field::Prime(5);
        let xs = vec![Vector::basis(f, 0), Vector::basis(f, 1)];
        let mut seen = Vec::new();
        walk_span::<()>(f, &xs, true, &Budget::default(), &mut |v| {
            seen.push(v.clone());
            Ok(None)
        })
        .unwrap();
        // e0, e0+a e1 (4 choices), e1
        assert_eq!(seen.len(), 6);
        assert!(seen.iter().all(|v| v.leading() == f.one()));
    }

    #[test]
    fn budget_is_enforced() {
        let f = Field::gf3();
        let xs: Vec<_> = (0..8).map(|i| Vector::basis(f, i)).collect();
        let err = span_vectors(f, &xs, &Budget::new(100)).unwrap_err();
        assert_eq!(err, crate::error::Error::Budget { cap: 100 });
    }
}
