//! Exact scalar arithmetic over GF(p) and ℚ, sparse finite-support vectors,
//! and the linear-map toolkit (kernels, complements, injectivity, projections)
//! behind the subspace-maximality characterisation of filters.

mod field;
mod linear;
mod vector;

pub use field::{Field, Scalar, DEFAULT_HEIGHT};
pub use linear::{
    complement_of, is_injective_on, kernel_of, projection_along, LinearMap, SubspaceBasis,
};
pub use vector::Vector;

/// Support of a vector as an element of FIN.
pub fn support(v: &Vector) -> crate::fin::FinSet {
    v.support()
}
