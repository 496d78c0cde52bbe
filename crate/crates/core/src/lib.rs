//! Symmetrized graph-monomials and the semi-invariants of binary forms they
//! produce.

pub mod construct;
pub mod dims;
pub mod edgemat;
pub mod error;
pub mod interval;
pub mod modular;
pub mod perm;
pub mod poly;
pub mod polytext;
pub mod reproduce;
pub mod semiinv;
pub mod symmetrize;
pub mod thm1;

pub use edgemat::{EdgeMatrix, IntMatrix, Shape};
pub use error::{ConstructError, MatrixError, PolyError, SymmError, Thm1Error};
pub use poly::{ExactPoly, Monomial, Poly, RatPoly};
