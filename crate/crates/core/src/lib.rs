//! Exact computations in the extended nilHecke algebra.
//!
//! The crate provides sparse polynomials over exact rationals, divided
//! difference operators, Schubert calculus, the exterior extension by odd
//! variables `ω_1..ω_n`, the extended nilHecke algebra in PBW normal form,
//! Koszul-type differentials and the cohomology computations built on them.
//!
//! All algebraic types are generic over a [`Scalar`] field; the aliases at
//! the crate root fix it to arbitrary precision rationals.

pub mod differential;
pub mod divdiff;
pub mod error;
pub mod extsym;
pub mod graded;
pub mod json;
pub mod linalg;
pub mod nilhecke;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod solomon;
pub mod superpoly;

pub use error::{AlgebraError, Result};
pub use graded::GradedDims;
pub use perm::{BinSeq, Partition, Perm};
pub use scalar::{Rat, Rat64, Scalar};

pub type Poly = poly::Polynomial<Rat>;
pub type SuperPoly = superpoly::ExtPolynomial<Rat>;
pub type NhElem = nilhecke::NhElement<Rat>;
