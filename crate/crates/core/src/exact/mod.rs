//! Exact arithmetic substrate.
//!
//! Everything here is immutable once built and `Send + Sync`. Coefficients
//! are always [`Rational`]s, so no operation leaves the field of fractions.

mod multi;
mod parse;
mod ratfn;
mod rational;
mod series;
mod uni;
mod var;

pub use multi::{Monomial, MultiPoly};
pub use parse::parse_poly;
pub use ratfn::RationalFn;
pub use rational::{parse_rational, rational_to_fraction_string, rational_to_string, Rational};
pub use series::{series_div, series_div_coeffs, TruncatedSeries};
pub use uni::{reciprocal_poly, UniPoly};
pub use var::Var;

/// Implements the four owned/borrowed combinations of a binary operator in
/// terms of the `&a op &b` implementation.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                std::ops::$tr::$method(&self, rhs)
            }
        }
        impl std::ops::$tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
