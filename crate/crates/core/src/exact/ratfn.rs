use std::fmt;

use num_traits::{One, Zero};

use super::{series_div, MultiPoly, TruncatedSeries, UniPoly};
use crate::error::{Error, Result};

/// Quotient of two univariate polynomials, kept unreduced.
///
/// The denominator has an invertible constant term, so every value has a
/// power-series expansion at 0. Equality is tested by cross multiplication.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<RationalFn> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if den.coeff(0).is_zero() {
            return Err(Error::NotExpandable);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: UniPoly) -> RationalFn {
        RationalFn { num: p, den: UniPoly::one() }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// Rescales so the denominator's constant term is 1 when that term is a
    /// rational constant; otherwise returns `self` unchanged.
    pub fn normalized(&self) -> RationalFn {
        match self.den.coeff(0).constant_value() {
            Some(c) if !c.is_one() && !c.is_zero() => {
                let inv = c.recip();
                RationalFn { num: self.num.scale_rational(&inv), den: self.den.scale_rational(&inv) }
            }
            _ => self.clone(),
        }
    }

    /// `a/b = c/d` iff `a·d = c·b`.
    pub fn equals(&self, other: &RationalFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        RationalFn {
            num: &(&self.num * &other.den) - &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn recip(&self) -> Result<RationalFn> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &MultiPoly) -> RationalFn {
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        series_div(&self.num, &self.den, order)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;

    fn u(s: &str) -> UniPoly {
        UniPoly::from_multi(&parse_poly(s).unwrap())
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = RationalFn::new(u("1 + x"), u("1 - x^2")).unwrap();
        let b = RationalFn::new(UniPoly::one(), u("1 - x")).unwrap();
        assert!(a.equals(&b));
        assert!(!a.equals(&RationalFn::from_poly(UniPoly::one())));
    }

    #[test]
    fn invariants() {
        assert!(RationalFn::new(UniPoly::one(), UniPoly::zero()).is_err());
        assert_eq!(RationalFn::new(UniPoly::one(), u("x")).unwrap_err(), Error::NotExpandable);
        let r = RationalFn::new(u("2"), u("2 - 4*x")).unwrap().normalized();
        assert_eq!(r.den(), &u("1 - 2*x"));
        assert_eq!(r.num(), &UniPoly::one());
    }

    #[test]
    fn arithmetic_matches_series() {
        let a = RationalFn::new(UniPoly::one(), u("1 - x")).unwrap();
        let b = RationalFn::new(u("x"), u("1 + x")).unwrap();
        let s = a.add(&b).series(5).unwrap();
        let t = a.series(5).unwrap().add(&b.series(5).unwrap());
        assert_eq!(s, t);
        let s = a.mul(&b).series(5).unwrap();
        let t = a.series(5).unwrap().mul(&b.series(5).unwrap());
        assert_eq!(s, t);
    }
}
