use std::fmt;

use serde_json::{json, Value};

use super::{MultiPoly, UniPoly};
use crate::error::{Error, Result};

/// Power series known exactly through `x^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn new(order: usize, mut coeffs: Vec<MultiPoly>) -> TruncatedSeries {
        coeffs.resize(order + 1, MultiPoly::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(order, (0..=order).map(|k| p.coeff(k)).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        assert!(k <= self.order, "coefficient x^{k} lies beyond the truncation order {}", self.order);
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::from_coeffs_unchecked(self.coeffs.clone())
    }

    fn combined_order(&self, other: &TruncatedSeries) -> usize {
        self.order.min(other.order)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.combined_order(other);
        TruncatedSeries::new(n, (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.combined_order(other);
        TruncatedSeries::new(n, (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.combined_order(other);
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = MultiPoly::zero();
                for i in 0..=k {
                    if !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero() {
                        acc += &(&self.coeffs[i] * &other.coeffs[k - i]);
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries::new(n, coeffs)
    }

    pub fn shift_vars(&self) -> TruncatedSeries {
        TruncatedSeries::new(self.order, self.coeffs.iter().map(MultiPoly::shift).collect())
    }

    pub fn map_coeffs<F>(&self, f: F) -> Result<TruncatedSeries>
    where
        F: FnMut(&MultiPoly) -> Result<MultiPoly>,
    {
        Ok(TruncatedSeries::new(self.order, self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "coeffs": self.coeffs.iter().map(MultiPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            write!(f, "O(x^{})", self.order + 1)
        } else {
            write!(f, "{p} + O(x^{})", self.order + 1)
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

/// Power-series quotient of two coefficient lists, through index `order`.
///
/// The variable is whatever the lists are indexed by, so the same routine
/// expands in `x` or in `t`. The constant term of `den` must be a nonzero
/// rational.
pub fn series_div_coeffs(num: &[MultiPoly], den: &[MultiPoly], order: usize) -> Result<Vec<MultiPoly>> {
    let d0 = den
        .first()
        .and_then(MultiPoly::constant_value)
        .filter(|c| !num_traits::Zero::is_zero(c))
        .ok_or(Error::NotExpandable)?;
    let inv = d0.recip();
    let mut out: Vec<MultiPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.get(n).cloned().unwrap_or_default();
        for k in 1..=n.min(den.len().saturating_sub(1)) {
            if !den[k].is_zero() && !out[n - k].is_zero() {
                acc -= &(&den[k] * &out[n - k]);
            }
        }
        out.push(acc.scale(&inv));
    }
    Ok(out)
}

/// Expands `num/den` at 0 through `x^order`.
pub fn series_div(num: &UniPoly, den: &UniPoly, order: usize) -> Result<TruncatedSeries> {
    Ok(TruncatedSeries::new(order, series_div_coeffs(num.coeffs(), den.coeffs(), order)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;
    use crate::exact::Var;
    use proptest::prelude::*;

    fn u(s: &str) -> UniPoly {
        UniPoly::from_multi(&parse_poly(s).unwrap())
    }

    #[test]
    fn geometric() {
        let s = series_div(&UniPoly::one(), &u("1 - x"), 3).unwrap();
        assert_eq!(s.to_poly(), u("1 + x + x^2 + x^3"));
        let s = series_div(&UniPoly::one(), &u("1 - x^2"), 4).unwrap();
        assert_eq!(s.to_poly(), u("1 + x^2 + x^4"));
        assert_eq!(s.to_string(), "x^4 + x^2 + 1 + O(x^5)");
    }

    #[test]
    fn expansion_in_t_has_polynomial_coefficients() {
        // 1/(1 - x t - t^2) in powers of t; coefficient lists are indexed by t
        let den = vec![MultiPoly::one(), -MultiPoly::x(), MultiPoly::from_int(-1)];
        let s = series_div_coeffs(&[MultiPoly::one()], &den, 2).unwrap();
        assert_eq!(s[2], parse_poly("x^2 + 1").unwrap());
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        assert_eq!(series_div(&UniPoly::one(), &u("x"), 3).unwrap_err(), Error::NotExpandable);
        assert_eq!(series_div(&UniPoly::one(), &u("c0 + x"), 3).unwrap_err(), Error::NotExpandable);
    }

    proptest! {
        #[test]
        fn division_undoes_multiplication(
            a in prop::collection::vec(-3i64..=3, 0..5),
            b in prop::collection::vec(-3i64..=3, 0..5),
            b0 in prop::sample::select(vec![-2i64, -1, 1, 3]),
            order in 0usize..8,
        ) {
            let a = UniPoly::from_coeffs_unchecked(a.into_iter().map(|c| MultiPoly::from_int(c) * MultiPoly::c(1)).collect());
            let mut bc = vec![MultiPoly::from_int(b0)];
            bc.extend(b.into_iter().map(|c| MultiPoly::from_int(c) + MultiPoly::var(Var::Lam(1))));
            let b = UniPoly::from_coeffs_unchecked(bc);
            let s = series_div(&(&a * &b), &b, order).unwrap();
            prop_assert_eq!(s.to_poly(), a.truncate(order));
        }
    }
}
