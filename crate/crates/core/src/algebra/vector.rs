use std::cmp::Ordering;
use std::fmt;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};
use crate::fin::FinSet;

/// A nonzero vector of `E = ⊕F` with finite support, stored as
/// index-ascending `(index, coefficient)` pairs with no zero coefficients.
///
/// The zero vector is not representable; operations that can cancel to zero
/// return `Option<Vector>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coeffs: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn new(field: Field, coeffs: Vec<(usize, Scalar)>) -> Result<Vector> {
        if coeffs.is_empty() {
            return Err(Error::InvalidVector(
                "empty coefficient list (zero vector)".into(),
            ));
        }
        for (k, &(i, c)) in coeffs.iter().enumerate() {
            if !field.contains(c) {
                return Err(Error::InvalidVector(format!(
                    "coefficient {c} at e{i} not in {field}"
                )));
            }
            if field.is_zero(c) {
                return Err(Error::InvalidVector(format!("zero coefficient at e{i}")));
            }
            if k > 0 && coeffs[k - 1].0 >= i {
                return Err(Error::InvalidVector(format!(
                    "indices not strictly increasing at e{i}"
                )));
            }
        }
        Ok(Vector { field, coeffs })
    }

    /// Builds a vector from arbitrary `(index, coefficient)` terms, summing
    /// repeated indices and dropping zeros. Returns `None` if everything cancels.
    pub fn from_terms(
        field: Field,
        terms: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Option<Vector> {
        let mut terms: Vec<(usize, Scalar)> = terms.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut coeffs: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match coeffs.last_mut() {
                Some(last) if last.0 == i => last.1 = field.add(last.1, c),
                _ => coeffs.push((i, c)),
            }
        }
        coeffs.retain(|&(_, c)| !field.is_zero(c));
        if coeffs.is_empty() {
            None
        } else {
            Some(Vector { field, coeffs })
        }
    }

    /// Small-integer convenience constructor: `Vector::ints(gf3, &[(0, 1), (1, 2)])`.
    pub fn ints(field: Field, terms: &[(usize, i64)]) -> Option<Vector> {
        Vector::from_terms(field, terms.iter().map(|&(i, c)| (i, field.from_i64(c))))
    }

    /// The basis vector `e_n`.
    pub fn basis(field: Field, n: usize) -> Vector {
        Vector {
            field,
            coeffs: vec![(n, field.one())],
        }
    }

    /// The sum `e_i` over the given indices (coefficient 1 each).
    pub fn indicator(field: Field, indices: impl IntoIterator<Item = usize>) -> Option<Vector> {
        Vector::from_terms(field, indices.into_iter().map(|i| (i, field.one())))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[(usize, Scalar)] {
        &self.coeffs
    }

    pub fn support(&self) -> FinSet {
        FinSet::from_sorted_unchecked(self.coeffs.iter().map(|t| t.0).collect())
    }

    pub fn min_support(&self) -> usize {
        self.coeffs[0].0
    }

    pub fn max_support(&self) -> usize {
        self.coeffs[self.coeffs.len() - 1].0
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs[0].1
    }

    /// Coefficient at `e_i`, zero when `i` is outside the support.
    pub fn coeff(&self, i: usize) -> Scalar {
        match self.coeffs.binary_search_by_key(&i, |t| t.0) {
            Ok(k) => self.coeffs[k].1,
            Err(_) => self.field.zero(),
        }
    }

    pub fn scale(&self, c: Scalar) -> Option<Vector> {
        if self.field.is_zero(c) {
            return None;
        }
        let f = self.field;
        Some(Vector {
            field: f,
            coeffs: self.coeffs.iter().map(|&(i, a)| (i, f.mul(c, a))).collect(),
        })
    }

    /// Rescales so the leading coefficient is 1.
    pub fn normalized(&self) -> Vector {
        let inv = self
            .field
            .inv(self.leading())
            .expect("leading coefficient is nonzero");
        self.scale(inv).expect("nonzero scale")
    }

    pub fn add(&self, other: &Vector) -> Result<Option<Vector>> {
        self.check_field(other.field)?;
        let f = self.field;
        let (a, b) = (&self.coeffs, &other.coeffs);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let s = f.add(a[i].1, b[j].1);
                if !f.is_zero(s) {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(if out.is_empty() {
            None
        } else {
            Some(Vector {
                field: f,
                coeffs: out,
            })
        })
    }

    /// Concatenates two vectors with disjoint, ordered supports
    /// (`self.max_support() < other.min_support()`).
    pub(crate) fn concat_above(&self, other: &Vector) -> Vector {
        debug_assert!(self.max_support() < other.min_support());
        let mut coeffs = self.coeffs.clone();
        coeffs.extend_from_slice(&other.coeffs);
        Vector {
            field: self.field,
            coeffs,
        }
    }

    pub(crate) fn check_field(&self, field: Field) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: field.to_string(),
            });
        }
        Ok(())
    }

    /// Dense coefficient row of length `n` (indices `>= n` must not occur).
    pub(crate) fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut row = vec![self.field.zero(); n];
        for &(i, c) in &self.coeffs {
            row[i] = c;
        }
        row
    }

    pub(crate) fn from_dense(field: Field, row: &[Scalar]) -> Option<Vector> {
        let coeffs: Vec<_> = row
            .iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(**c))
            .map(|(i, &c)| (i, c))
            .collect();
        if coeffs.is_empty() {
            None
        } else {
            Some(Vector { field, coeffs })
        }
    }
}

impl Ord for Vector {
    /// Canonical order: lexicographic on the `(index, coefficient)` sequence,
    /// so a proper prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl PartialOrd for Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(i, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            let s = c.to_string();
            match s.as_str() {
                "1" => write!(f, "e{i}")?,
                _ if s.contains(['/', '-']) => write!(f, "({s})e{i}")?,
                _ => write!(f, "{s}e{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> Field {
        Field::gf3()
    }

    #[test]
    fn support_examples() {
        let v = Vector::ints(gf3(), &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(v.support().elements(), &[0, 1]);
        assert_eq!(Vector::basis(Field::gf2(), 5).support().elements(), &[5]);
        let w = Vector::ints(gf3(), &[(3, 2), (4, 2)]).unwrap();
        assert_eq!(w.support().elements(), &[3, 4]);
    }

    #[test]
    fn rejects_malformed() {
        let f = gf3();
        assert!(Vector::new(f, vec![]).is_err());
        assert!(Vector::new(f, vec![(0, Scalar::Residue(0))]).is_err());
        assert!(Vector::new(f, vec![(0, Scalar::Residue(3))]).is_err());
        assert!(Vector::new(f, vec![(2, f.one()), (1, f.one())]).is_err());
        assert!(Vector::new(f, vec![(1, f.one()), (1, f.one())]).is_err());
    }

    #[test]
    fn addition_cancels_to_none() {
        let f = gf3();
        let v = Vector::ints(f, &[(0, 1), (2, 1)]).unwrap();
        let w = Vector::ints(f, &[(0, 2), (2, 2)]).unwrap();
        assert_eq!(v.add(&w).unwrap(), None);
        let u = Vector::ints(f, &[(0, 2), (1, 1)]).unwrap();
        assert_eq!(v.add(&u).unwrap(), Vector::ints(f, &[(1, 1), (2, 1)]));
        assert!(v.add(&Vector::basis(Field::gf2(), 0)).is_err());
    }

    #[test]
    fn canonical_order() {
        let f = gf3();
        let e0 = Vector::basis(f, 0);
        let e0_e1 = Vector::ints(f, &[(0, 1), (1, 1)]).unwrap();
        let e0_2e1 = Vector::ints(f, &[(0, 1), (1, 2)]).unwrap();
        let two_e0 = Vector::ints(f, &[(0, 2)]).unwrap();
        let e1 = Vector::basis(f, 1);
        let mut vs = vec![
            e1.clone(),
            two_e0.clone(),
            e0_2e1.clone(),
            e0.clone(),
            e0_e1.clone(),
        ];
        vs.sort();
        assert_eq!(vs, vec![e0, e0_e1, e0_2e1, two_e0, e1]);
    }

    #[test]
    fn display() {
        let f = gf3();
        assert_eq!(
            Vector::ints(f, &[(0, 1), (3, 2)]).unwrap().to_string(),
            "e0+2e3"
        );
        let q = Field::rationals(2).unwrap();
        let v = Vector::new(q, vec![(1, q.fraction(-1, 2).unwrap())]).unwrap();
        assert_eq!(v.to_string(), "(-1/2)e1");
    }

    #[test]
    fn normalization() {
        let f = gf3();
        let v = Vector::ints(f, &[(2, 2), (4, 1)]).unwrap();
        assert_eq!(v.normalized(), Vector::ints(f, &[(2, 1), (4, 2)]).unwrap());
    }
}
