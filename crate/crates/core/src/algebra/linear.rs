use super::field::{Field, Scalar};
use super::vector::Vector;
use crate::error::{Error, Result};

/// Reduces `rows` (each of length `ncols`) to reduced row echelon form.
/// Zero rows are dropped; the returned pivots are strictly increasing.
pub(crate) fn rref(
    field: Field,
    mut rows: Vec<Vec<Scalar>>,
    ncols: usize,
) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(row[c]) {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub(crate) fn rank_of(field: Field, vectors: &[Vector], n: usize) -> usize {
    let rows = vectors.iter().map(|v| v.to_dense(n)).collect();
    rref(field, rows, n).1.len()
}

/// A finite-dimensional subspace of the truncation `span(e_0, …, e_{N-1})`,
/// given by a linearly independent basis together with its reduced echelon
/// form (the canonical representative used for equality).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Field,
    truncation: usize,
    basis: Vec<Vector>,
    echelon: Vec<Vector>,
}

fn check_truncation(field: Field, truncation: usize, vectors: &[Vector]) -> Result<()> {
    for v in vectors {
        v.check_field(field)?;
        if v.max_support() >= truncation {
            return Err(Error::Precondition(format!(
                "{v} lies outside truncation {truncation}"
            )));
        }
    }
    Ok(())
}

impl SubspaceBasis {
    /// Wraps an independent basis; dependent input is rejected.
    pub fn new(field: Field, truncation: usize, basis: Vec<Vector>) -> Result<SubspaceBasis> {
        check_truncation(field, truncation, &basis)?;
        let echelon = echelon_of(field, truncation, &basis);
        if echelon.len() != basis.len() {
            return Err(Error::Precondition(
                "basis vectors are linearly dependent".into(),
            ));
        }
        Ok(SubspaceBasis {
            field,
            truncation,
            basis,
            echelon,
        })
    }

    /// The span of arbitrary generators; the stored basis is the echelon form.
    pub fn spanned_by(
        field: Field,
        truncation: usize,
        generators: &[Vector],
    ) -> Result<SubspaceBasis> {
        check_truncation(field, truncation, generators)?;
        let echelon = echelon_of(field, truncation, generators);
        Ok(SubspaceBasis {
            field,
            truncation,
            basis: echelon.clone(),
            echelon,
        })
    }

    pub fn zero(field: Field, truncation: usize) -> SubspaceBasis {
        SubspaceBasis {
            field,
            truncation,
            basis: Vec::new(),
            echelon: Vec::new(),
        }
    }

    pub fn full(field: Field, truncation: usize) -> SubspaceBasis {
        let basis: Vec<_> = (0..truncation).map(|i| Vector::basis(field, i)).collect();
        SubspaceBasis {
            field,
            truncation,
            basis: basis.clone(),
            echelon: basis,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn echelon(&self) -> &[Vector] {
        &self.echelon
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        if v.field() != self.field || v.max_support() >= self.truncation {
            return false;
        }
        let mut all = self.echelon.clone();
        all.push(v.clone());
        rank_of(self.field, &all, self.truncation) == self.dim()
    }

    /// Same subspace (compares echelon forms).
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.field == other.field && self.echelon == other.echelon
    }

    /// `self ∩ other`, computed from the kernel of `[A | -B]`.
    pub fn intersection(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        let n = self.truncation.max(other.truncation);
        let f = self.field;
        let mut images: Vec<Option<Vector>> = self.basis.iter().cloned().map(Some).collect();
        images.extend(other.basis.iter().map(|v| v.scale(f.neg(f.one()))));
        let map = LinearMap::new(f, images.len(), n, images)?;
        let k = kernel_of(&map);
        let vectors: Vec<Vector> = k
            .basis()
            .iter()
            .filter_map(|coords| {
                Vector::from_terms(
                    f,
                    coords
                        .coeffs()
                        .iter()
                        .filter(|(j, _)| *j < self.dim())
                        .flat_map(|&(j, c)| {
                            self.basis[j]
                                .coeffs()
                                .iter()
                                .map(move |&(i, a)| (i, f.mul(c, a)))
                        }),
                )
            })
            .collect();
        SubspaceBasis::spanned_by(f, self.truncation.min(other.truncation), &vectors)
    }
}

fn echelon_of(field: Field, n: usize, vectors: &[Vector]) -> Vec<Vector> {
    let rows = vectors.iter().map(|v| v.to_dense(n)).collect();
    let (rows, _) = rref(field, rows, n);
    rows.iter()
        .filter_map(|r| Vector::from_dense(field, r))
        .collect()
}

/// A linear map from `span(e_0..e_{N-1})` into `span(f_0..f_{M-1})`, given by
/// the images of the domain basis (`None` is the zero image).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    domain_dim: usize,
    codomain_dim: usize,
    images: Vec<Option<Vector>>,
}

impl LinearMap {
    pub fn new(
        field: Field,
        domain_dim: usize,
        codomain_dim: usize,
        images: Vec<Option<Vector>>,
    ) -> Result<LinearMap> {
        if images.len() != domain_dim {
            return Err(Error::Precondition(format!(
                "expected {domain_dim} images, got {}",
                images.len()
            )));
        }
        for v in images.iter().flatten() {
            v.check_field(field)?;
            if v.max_support() >= codomain_dim {
                return Err(Error::Precondition(format!(
                    "image {v} outside codomain truncation {codomain_dim}"
                )));
            }
        }
        Ok(LinearMap {
            field,
            domain_dim,
            codomain_dim,
            images,
        })
    }

    pub fn identity(field: Field, n: usize) -> LinearMap {
        LinearMap {
            field,
            domain_dim: n,
            codomain_dim: n,
            images: (0..n).map(|i| Some(Vector::basis(field, i))).collect(),
        }
    }

    pub fn zero(field: Field, n: usize) -> LinearMap {
        LinearMap {
            field,
            domain_dim: n,
            codomain_dim: n,
            images: vec![None; n],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn images(&self) -> &[Option<Vector>] {
        &self.images
    }

    pub fn apply(&self, v: &Vector) -> Result<Option<Vector>> {
        v.check_field(self.field)?;
        if v.max_support() >= self.domain_dim {
            return Err(Error::Precondition(format!(
                "{v} outside domain truncation {}",
                self.domain_dim
            )));
        }
        let f = self.field;
        Ok(Vector::from_terms(
            f,
            v.coeffs().iter().flat_map(|&(i, c)| {
                self.images[i]
                    .iter()
                    .flat_map(move |img| img.coeffs().iter().map(move |&(j, a)| (j, f.mul(c, a))))
            }),
        ))
    }

    pub fn rank(&self) -> usize {
        let images: Vec<Vector> = self.images.iter().flatten().cloned().collect();
        rank_of(self.field, &images, self.codomain_dim)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.codomain_dim > self.domain_dim {
            return Err(Error::Precondition(
                "codomain does not fit the domain".into(),
            ));
        }
        let images = other
            .images
            .iter()
            .map(|img| match img {
                Some(v) => self.apply(v),
                None => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        LinearMap::new(self.field, other.domain_dim, self.codomain_dim, images)
    }
}

/// Basis (in echelon form) of `{v : T v = 0}` inside the domain truncation.
pub fn kernel_of(map: &LinearMap) -> SubspaceBasis {
    let f = map.field;
    let (n, m) = (map.domain_dim, map.codomain_dim);
    // rows of the matrix are codomain coordinates, columns domain basis vectors
    let mut rows = vec![vec![f.zero(); n]; m];
    for (c, img) in map.images.iter().enumerate() {
        if let Some(v) = img {
            for &(r, a) in v.coeffs() {
                rows[r][c] = a;
            }
        }
    }
    let (reduced, pivots) = rref(f, rows, n);
    let free = (0..n).filter(|c| !pivots.contains(c));
    let vectors: Vec<Vector> = free
        .map(|fc| {
            let mut terms = vec![(fc, f.one())];
            for (row, &pc) in reduced.iter().zip(&pivots) {
                terms.push((pc, f.neg(row[fc])));
            }
            Vector::from_terms(f, terms).expect("free column gives a nonzero kernel vector")
        })
        .collect();
    SubspaceBasis::spanned_by(f, n, &vectors).expect("kernel vectors lie in the domain")
}

/// Greedy direct complement: walks `e_0, e_1, …, e_{N-1}` and keeps each basis
/// vector not already in the span of `V` plus the vectors kept so far.
pub fn complement_of(space: &SubspaceBasis, truncation: usize) -> Result<SubspaceBasis> {
    let f = space.field;
    check_truncation(f, truncation, space.basis())?;
    let mut current: Vec<Vector> = space.echelon.clone();
    let mut rank = current.len();
    let mut chosen = Vec::new();
    for i in 0..truncation {
        let e = Vector::basis(f, i);
        current.push(e.clone());
        let r = rank_of(f, &current, truncation);
        if r > rank {
            rank = r;
            chosen.push(e);
        } else {
            current.pop();
        }
    }
    SubspaceBasis::new(f, truncation, chosen)
}

/// True iff `T` maps the basis of `X` to linearly independent images.
pub fn is_injective_on(map: &LinearMap, space: &SubspaceBasis) -> Result<bool> {
    let mut images = Vec::with_capacity(space.dim());
    for v in space.basis() {
        match map.apply(v)? {
            Some(w) => images.push(w),
            None => return Ok(false),
        }
    }
    Ok(rank_of(map.field, &images, map.codomain_dim) == space.dim())
}

/// The projection `T(y + y') = y'` onto `Yc` along `Y`, where `Y ⊕ Yc` is the
/// whole truncation `N`. Its kernel is exactly `Y`.
pub fn projection_along(
    y: &SubspaceBasis,
    yc: &SubspaceBasis,
    truncation: usize,
) -> Result<LinearMap> {
    let f = y.field;
    if yc.field != f {
        return Err(Error::FieldMismatch {
            left: f.to_string(),
            right: yc.field.to_string(),
        });
    }
    check_truncation(f, truncation, y.basis())?;
    check_truncation(f, truncation, yc.basis())?;
    let (a, b) = (y.dim(), yc.dim());
    let gens: Vec<Vector> = y.basis().iter().chain(yc.basis()).cloned().collect();
    let rank = rank_of(f, &gens, truncation);
    if rank < truncation {
        let mut current = gens.clone();
        for i in 0..truncation {
            current.push(Vector::basis(f, i));
            if rank_of(f, &current, truncation) > rank {
                return Err(Error::NotSpanning { missing: i });
            }
            current.pop();
        }
        unreachable!("rank deficit implies some basis vector is missing");
    }
    if a + b != truncation {
        return Err(Error::NotDirect {
            left: a,
            right: b,
            rank,
        });
    }
    // rows [g_k | unit_k]; reducing the left block to the identity leaves the
    // coordinates of each e_i in the right block
    let width = truncation + a + b;
    let rows = gens
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let mut row = g.to_dense(truncation);
            row.resize(width, f.zero());
            row[truncation + k] = f.one();
            row
        })
        .collect();
    let (reduced, _) = rref(f, rows, width);
    let images = (0..truncation)
        .map(|i| {
            let coords = &reduced[i][truncation..];
            Vector::from_terms(
                f,
                coords[a..].iter().enumerate().flat_map(|(k, &c)| {
                    yc.basis()[k]
                        .coeffs()
                        .iter()
                        .map(move |&(j, x)| (j, f.mul(c, x)))
                }),
            )
        })
        .collect();
    LinearMap::new(f, truncation, truncation, images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(f: Field, i: usize) -> Vector {
        Vector::basis(f, i)
    }

    fn sum(f: Field, idx: &[usize]) -> Vector {
        Vector::indicator(f, idx.iter().copied()).unwrap()
    }

    fn example_map() -> LinearMap {
        // GF(2): T(e0)=f0, T(e1)=f0, T(e2)=f1, T(e3)=0
        let f = Field::gf2();
        LinearMap::new(
            f,
            4,
            2,
            vec![Some(e(f, 0)), Some(e(f, 0)), Some(e(f, 1)), None],
        )
        .unwrap()
    }

    #[test]
    fn kernel_examples() {
        let f = Field::gf3();
        assert_eq!(kernel_of(&LinearMap::identity(f, 3)).dim(), 0);
        let z = kernel_of(&LinearMap::zero(f, 2));
        assert_eq!(z.basis(), &[e(f, 0), e(f, 1)]);
        let k = kernel_of(&example_map());
        let g = Field::gf2();
        assert_eq!(k.basis(), &[sum(g, &[0, 1]), e(g, 3)]);
    }

    #[test]
    fn complement_examples() {
        let g = Field::gf2();
        let v = SubspaceBasis::new(g, 2, vec![sum(g, &[0, 1])]).unwrap();
        // e0 is independent of e0+e1, so the greedy rule keeps it
        assert_eq!(complement_of(&v, 2).unwrap().basis(), &[e(g, 0)]);
        assert_eq!(
            complement_of(&SubspaceBasis::full(g, 3), 3).unwrap().dim(),
            0
        );
        let f = Field::gf3();
        let v = SubspaceBasis::new(f, 3, vec![e(f, 1)]).unwrap();
        assert_eq!(complement_of(&v, 3).unwrap().basis(), &[e(f, 0), e(f, 2)]);
    }

    #[test]
    fn injectivity_examples() {
        let g = Field::gf2();
        let t = example_map();
        let x = SubspaceBasis::new(g, 4, vec![e(g, 0), e(g, 2)]).unwrap();
        assert!(is_injective_on(&t, &x).unwrap());
        let x = SubspaceBasis::new(g, 4, vec![sum(g, &[0, 1])]).unwrap();
        assert!(!is_injective_on(&t, &x).unwrap());
        assert!(is_injective_on(&LinearMap::identity(g, 4), &SubspaceBasis::full(g, 4)).unwrap());
    }

    #[test]
    fn projection_examples() {
        let g = Field::gf2();
        let y = SubspaceBasis::new(g, 2, vec![e(g, 0)]).unwrap();
        let yc = SubspaceBasis::new(g, 2, vec![e(g, 1)]).unwrap();
        let t = projection_along(&y, &yc, 2).unwrap();
        assert_eq!(t.images(), &[None, Some(e(g, 1))]);

        let f = Field::gf3();
        let y = SubspaceBasis::new(f, 2, vec![sum(f, &[0, 1])]).unwrap();
        let yc = SubspaceBasis::new(f, 2, vec![e(f, 1)]).unwrap();
        let t = projection_along(&y, &yc, 2).unwrap();
        assert_eq!(t.images()[0], Vector::ints(f, &[(1, 2)]));
        assert_eq!(t.images()[1], Some(e(f, 1)));
        assert!(kernel_of(&t).same_span(&y));
    }

    #[test]
    fn projection_reports_missing_vector() {
        let f = Field::gf3();
        let y = SubspaceBasis::new(f, 3, vec![e(f, 0)]).unwrap();
        let yc = SubspaceBasis::new(f, 3, vec![e(f, 2)]).unwrap();
        assert_eq!(
            projection_along(&y, &yc, 3).unwrap_err(),
            Error::NotSpanning { missing: 1 }
        );
        let yc = SubspaceBasis::new(f, 3, vec![e(f, 0), e(f, 1), e(f, 2)]).unwrap();
        assert!(matches!(
            projection_along(&y, &yc, 3),
            Err(Error::NotDirect { .. })
        ));
    }

    #[test]
    fn intersection_of_subspaces() {
        let g = Field::gf2();
        let a = SubspaceBasis::new(g, 3, vec![e(g, 0), e(g, 1)]).unwrap();
        let b = SubspaceBasis::new(g, 3, vec![sum(g, &[0, 1]), e(g, 2)]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.basis(), &[sum(g, &[0, 1])]);
    }

    #[test]
    fn dependent_basis_rejected() {
        let g = Field::gf2();
        assert!(SubspaceBasis::new(g, 3, vec![e(g, 0), e(g, 0)]).is_err());
        assert!(SubspaceBasis::new(g, 2, vec![e(g, 2)]).is_err());
    }
}
