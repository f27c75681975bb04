//! Canonically least vector of a subspace, by greedy lexicographic
//! minimisation over an affine system of coefficient constraints.
//!
//! Write a candidate as `w = Σ c_i g_i` over generators `g_i`. Each coordinate
//! `w[j]` is a linear form in `c`. Walking columns left to right we keep the
//! constraints decided so far and at each column either stop (if every later
//! coordinate can be zero), skip (if the coordinate is forced to zero), or
//! fix the least admissible nonzero value. The least nonzero scalar is `1` in
//! every supported field, so a free coordinate is always set to `1`.

use crate::algebra::{Field, Scalar, Vector};

/// Linear constraints `form · c = rhs` kept in reduced echelon form.
struct AffineSystem {
    field: Field,
    rows: Vec<(Vec<Scalar>, Scalar)>,
    pivots: Vec<usize>,
}

impl AffineSystem {
    fn new(field: Field) -> Self {
        AffineSystem {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduces a form against the pivots; returns the residual form and the
    /// value contributed by the eliminated part.
    fn reduce(&self, form: &[Scalar]) -> (Vec<Scalar>, Scalar) {
        let f = self.field;
        let mut form = form.to_vec();
        let mut value = f.zero();
        for ((row, rhs), &p) in self.rows.iter().zip(&self.pivots) {
            let k = form[p];
            if f.is_zero(k) {
                continue;
            }
            for (x, &y) in form.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(k, y));
            }
            value = f.add(value, f.mul(k, *rhs));
        }
        (form, value)
    }

    /// `Some(v)` when the form takes the single value `v` on every solution.
    fn determined(&self, form: &[Scalar]) -> Option<Scalar> {
        let (residual, value) = self.reduce(form);
        residual
            .iter()
            .all(|&x| self.field.is_zero(x))
            .then_some(value)
    }

    /// Adds `form · c = rhs`; returns false (leaving the system unchanged) if
    /// that makes it inconsistent.
    fn add(&mut self, form: &[Scalar], rhs: Scalar) -> bool {
        let f = self.field;
        let (mut residual, value) = self.reduce(form);
        let mut rhs = f.sub(rhs, value);
        let Some(p) = residual.iter().position(|&x| !f.is_zero(x)) else {
            return f.is_zero(rhs);
        };
        let inv = f.inv(residual[p]).expect("nonzero pivot");
        for x in residual.iter_mut() {
            *x = f.mul(*x, inv);
        }
        rhs = f.mul(rhs, inv);
        for ((row, r), _) in self.rows.iter_mut().zip(&self.pivots) {
            let k = row[p];
            if f.is_zero(k) {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&residual) {
                *x = f.sub(*x, f.mul(k, y));
            }
            *r = f.sub(*r, f.mul(k, rhs));
        }
        self.rows.push((residual, rhs));
        self.pivots.push(p);
        true
    }

    fn consistent_with_zeros(&self, forms: &[Vec<Scalar>]) -> bool {
        let mut probe = AffineSystem {
            field: self.field,
            rows: self.rows.clone(),
            pivots: self.pivots.clone(),
        };
        forms.iter().all(|form| probe.add(form, self.field.zero()))
    }
}

/// The canonically least nonzero vector in `span(generators)` whose support
/// lies in `[lo, n)`, or `None` if that part of the span is `{0}`.
///
/// Generators must have support below `n`; they need not be independent.
pub fn least_in_subspace(
    field: Field,
    generators: &[Vector],
    lo: usize,
    n: usize,
) -> Option<Vector> {
    if generators.is_empty() || lo >= n {
        return None;
    }
    let k = generators.len();
    // column j of the generator matrix is the linear form w[j]
    let mut forms = vec![vec![field.zero(); k]; n];
    for (i, g) in generators.iter().enumerate() {
        for &(j, c) in g.coeffs() {
            forms[j][i] = c;
        }
    }
    let mut system = AffineSystem::new(field);
    for form in &forms[..lo] {
        system.add(form, field.zero());
    }
    let mut chosen: Vec<(usize, Scalar)> = Vec::new();
    let mut col = lo;
    while col < n {
        if !chosen.is_empty() && system.consistent_with_zeros(&forms[col..]) {
            break;
        }
        match system.determined(&forms[col]) {
            Some(v) if field.is_zero(v) => {}
            Some(v) => chosen.push((col, v)),
            None => {
                system.add(&forms[col], field.one());
                chosen.push((col, field.one()));
            }
        }
        col += 1;
    }
    if chosen.is_empty() {
        return None;
    }
    Some(Vector::new(field, chosen).expect("chosen coefficients are nonzero and increasing"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_least(field: Field, gens: &[Vector], lo: usize, n: usize) -> Option<Vector> {
        let q = field.order().unwrap() as usize;
        let mut best: Option<Vector> = None;
        let total = q.pow(gens.len() as u32);
        for code in 1..total {
            let mut c = code;
            let mut terms = Vec::new();
            for g in gens {
                let a = field.from_i64((c % q) as i64);
                c /= q;
                terms.extend(g.coeffs().iter().map(|&(j, x)| (j, field.mul(a, x))));
            }
            if let Some(v) = Vector::from_terms(field, terms) {
                if v.min_support() >= lo
                    && v.max_support() < n
                    && best.as_ref().is_none_or(|b| v < *b)
                {
                    best = Some(v);
                }
            }
        }
        best
    }

    #[test]
    fn agrees_with_enumeration_on_small_spans() {
        let f = Field::gf3();
        let gens = vec![
            Vector::ints(f, &[(0, 1), (2, 2), (3, 1)]).unwrap(),
            Vector::ints(f, &[(1, 1), (2, 1)]).unwrap(),
            Vector::ints(f, &[(0, 2), (3, 1), (4, 1)]).unwrap(),
        ];
        for lo in 0..6 {
            assert_eq!(
                least_in_subspace(f, &gens, lo, 6),
                brute_least(f, &gens, lo, 6),
                "lo={lo}"
            );
        }
    }

    #[test]
    fn single_generator_is_normalised() {
        let f = Field::Prime(5);
        let g = Vector::ints(f, &[(2, 3), (4, 1)]).unwrap();
        assert_eq!(
            least_in_subspace(f, std::slice::from_ref(&g), 0, 5),
            Some(g.normalized())
        );
        assert_eq!(least_in_subspace(f, &[g], 3, 5), None);
    }

    #[test]
    fn rationals_pick_unit_coefficients() {
        let q = Field::rationals(2).unwrap();
        let a = Vector::new(q, vec![(0, q.from_i64(2)), (1, q.from_i64(3))]).unwrap();
        let b = Vector::new(q, vec![(1, q.from_i64(1)), (2, q.from_i64(1))]).unwrap();
        // leading 1 forces c_a = 1/2; the free coordinate at e1 is then set
        // to 1, which beats both e0+(3/2)e1 and e0-(3/2)e2
        let least = least_in_subspace(q, &[a, b], 0, 3).unwrap();
        let expected = Vector::new(
            q,
            vec![(0, q.one()), (1, q.one()), (2, q.fraction(-1, 2).unwrap())],
        )
        .unwrap();
        assert_eq!(least, expected);
    }
}
