//! Exact-arithmetic representations of the braid groups over truncated
//! formal power series.
//!
//! The pipeline: build a representation of the infinitesimal braid algebra
//! (a symmetric-group module plus one commutant element satisfying two
//! commutator identities), solve a rational associator degree by degree,
//! and push the infinitesimal data through the associator to get braid
//! group matrices over k[h]/(h^{D+1}), together with machine checks of
//! every algebraic identity along the way.
//!
//! No floating point is used anywhere: scalars are arbitrary-precision
//! rationals or elements of one quadratic extension Q(sqrt(d)).

pub mod error;
pub mod scalar;
pub mod poly;
pub mod matrix;
pub mod hseries;
pub mod hmatrix;
pub mod word;
pub mod series;
pub mod quotient;
pub mod symgroup;
pub mod infrep;
pub mod associator;
pub mod braid;
pub mod drinfeld;
pub mod extvariety;
pub mod constructions;
pub mod bratteli;
pub mod json;

pub use error::{Error, Result};
pub use scalar::{FieldElem, Rat};
