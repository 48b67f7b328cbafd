//! Exact orthogonal polynomials generated by a three-term recursion,
//! worked out through weighted Motzkin paths, monomer–dimer heaps and
//! J-fraction convergents.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: big rationals, sparse multivariate polynomials, univariate
//!   views, truncated series and rational functions.
//! - [`linalg`]: fraction-free determinants over the polynomial ring.
//! - [`ortho`]: the recursion engine, moments, Hankel determinants and
//!   basis expansion, plus the Catalan and Fibonacci specialisations.
//! - [`paths`]: Motzkin/Dyck path enumeration and path weights.
//! - [`heaps`]: heaps of monomers and dimers and their correspondence with
//!   closed Motzkin paths.
//! - [`contfrac`]: convergents of the J-fraction and their series.
//! - [`numeric`]: floating-point corroboration (Binet form, quadrature,
//!   Jacobi eigenvalues).
//! - [`verify`]: named identity checks shared by the CLI and the tests.

pub mod contfrac;
pub mod error;
pub mod exact;
pub mod exec;
pub mod heaps;
pub mod latex;
pub mod linalg;
pub mod numeric;
pub mod ortho;
pub mod paths;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{
    parse_poly, parse_rational, rational_to_string, MultiPoly, Rational, RationalFn, TruncatedSeries,
    UniPoly, Var,
};
pub use ortho::{CoeffSpec, MomentSeq, OrthoBasis};
