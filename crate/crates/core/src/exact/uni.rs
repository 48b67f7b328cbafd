use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::{forward_binop, Monomial, MultiPoly, Rational, Var};
use crate::error::{Error, Result};

/// Polynomial in `x` with [`MultiPoly`] coefficients that do not mention `x`.
///
/// `coeffs[k]` is the coefficient of `x^k`; trailing zeros are trimmed so the
/// zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<MultiPoly>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly::default()
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(MultiPoly::one())
    }

    pub fn x() -> UniPoly {
        UniPoly::monomial(MultiPoly::one(), 1)
    }

    pub fn constant(c: MultiPoly) -> UniPoly {
        UniPoly::from_coeffs_unchecked(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: MultiPoly, k: usize) -> UniPoly {
        let mut coeffs = vec![MultiPoly::zero(); k];
        coeffs.push(c);
        UniPoly::from_coeffs_unchecked(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Result<UniPoly> {
        if coeffs.iter().any(|c| c.contains_var(Var::X)) {
            return Err(Error::Domain("univariate coefficients must not contain x".into()));
        }
        Ok(UniPoly::from_coeffs_unchecked(coeffs))
    }

    pub(crate) fn from_coeffs_unchecked(mut coeffs: Vec<MultiPoly>) -> UniPoly {
        while coeffs.last().is_some_and(MultiPoly::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_rationals(cs: &[Rational]) -> UniPoly {
        UniPoly::from_coeffs_unchecked(cs.iter().cloned().map(MultiPoly::constant).collect())
    }

    /// Collects a multivariate polynomial by powers of `x`.
    pub fn from_multi(p: &MultiPoly) -> UniPoly {
        let mut coeffs = vec![MultiPoly::zero(); p.degree_in(Var::X) as usize + 1];
        for (m, c) in p.terms() {
            let k = m.exponent(Var::X) as usize;
            let rest = Monomial::from_pairs(m.pairs().iter().copied().filter(|(v, _)| *v != Var::X));
            coeffs[k] += &MultiPoly::term(c.clone(), rest);
        }
        UniPoly::from_coeffs_unchecked(coeffs)
    }

    pub fn to_multi(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            out += &c.mul_monomial(&Monomial::var(Var::X, k as u32), &Rational::from_integer(1.into()));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> MultiPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(MultiPoly::is_one)
    }

    pub fn scale(&self, c: &MultiPoly) -> UniPoly {
        UniPoly::from_coeffs_unchecked(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> UniPoly {
        UniPoly::from_coeffs_unchecked(self.coeffs.iter().map(|a| a.scale(r)).collect())
    }

    /// `x^k · self`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![MultiPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Truncation to powers `0..=order`.
    pub fn truncate(&self, order: usize) -> UniPoly {
        UniPoly::from_coeffs_unchecked(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// Applies the index shift to every coefficient.
    pub fn shift_vars(&self) -> UniPoly {
        UniPoly::from_coeffs_unchecked(self.coeffs.iter().map(MultiPoly::shift).collect())
    }

    pub fn map_coeffs<F>(&self, f: F) -> Result<UniPoly>
    where
        F: FnMut(&MultiPoly) -> Result<MultiPoly>,
    {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        UniPoly::from_coeffs(coeffs)
    }

    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Result<UniPoly> {
        if v == Var::X {
            return Err(Error::Domain("substitute x through evaluate".into()));
        }
        self.map_coeffs(|c| c.substitute(v, value))
    }

    /// Horner evaluation at `x = at`.
    pub fn evaluate(&self, at: &MultiPoly) -> MultiPoly {
        self.coeffs.iter().rev().fold(MultiPoly::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Degree-`n` reversal `x^n · q(1/x)`.
    pub fn reciprocal(&self, n: usize) -> Result<UniPoly> {
        if let Some(d) = self.degree() {
            if d > n {
                return Err(Error::Degree { degree: d, n });
            }
        }
        let mut coeffs: Vec<MultiPoly> = (0..=n).map(|k| self.coeff(k)).collect();
        coeffs.reverse();
        Ok(UniPoly::from_coeffs_unchecked(coeffs))
    }

    pub fn to_json(&self) -> Value {
        json!({ "coeffs": self.coeffs.iter().map(MultiPoly::to_json).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<UniPoly> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("univariate JSON: missing coeffs".into()))?;
        UniPoly::from_coeffs(arr.iter().map(MultiPoly::from_json).collect::<Result<Vec<_>>>()?)
    }
}

/// Reverses `q` at degree `n`; see [`UniPoly::reciprocal`].
pub fn reciprocal_poly(q: &UniPoly, n: usize) -> Result<UniPoly> {
    q.reciprocal(n)
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs_unchecked((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs_unchecked((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![MultiPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        UniPoly::from_coeffs_unchecked(coeffs)
    }
}

forward_binop!(UniPoly, Add, add);
forward_binop!(UniPoly, Sub, sub);
forward_binop!(UniPoly, Mul, mul);

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

fn x_power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{k}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (neg, body) = c.signed_parts();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let xp = x_power(k);
            if body.len() > 1 {
                write!(f, "({body})")?;
                if k > 0 {
                    write!(f, "*{xp}")?;
                }
            } else if k == 0 {
                write!(f, "{body}")?;
            } else if body.is_one() {
                f.write_str(&xp)?;
            } else {
                write!(f, "{body}*{xp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;
    use proptest::prelude::*;

    fn u(s: &str) -> UniPoly {
        UniPoly::from_multi(&parse_poly(s).unwrap())
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(UniPoly::one().reciprocal(0).unwrap(), UniPoly::one());
        assert_eq!(u("x - c0").reciprocal(1).unwrap(), u("1 - c0*x"));
        assert_eq!(u("x^2 + 1").reciprocal(2).unwrap(), u("1 + x^2"));
        assert!(matches!(u("x^3").reciprocal(2), Err(Error::Degree { degree: 3, n: 2 })));
        assert_eq!(UniPoly::zero().reciprocal(2).unwrap(), UniPoly::zero());
    }

    #[test]
    fn shift_of_reversed_q1() {
        let q1s = u("x - c0").reciprocal(1).unwrap();
        assert_eq!(q1s.shift_vars(), u("1 - c1*x"));
    }

    #[test]
    fn display() {
        assert_eq!(u("x^3 + 2*x").to_string(), "x^3 + 2*x");
        assert_eq!(u("x^2 - (c0 + c1)*x + c0*c1 - l1").to_string(), "x^2 - (c0 + c1)*x + (c0*c1 - l1)");
        assert_eq!(u("-x^2 + 1").to_string(), "-x^2 + 1");
        assert_eq!(u("-2*l1*x").to_string(), "-2*l1*x");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn rejects_x_in_coefficients() {
        assert!(UniPoly::from_coeffs(vec![MultiPoly::x()]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let q = u("x^2 - (c0 + c1)*x + c0*c1 - l1");
        assert_eq!(UniPoly::from_json(&q.to_json()).unwrap(), q);
    }

    proptest! {
        #[test]
        fn reciprocal_is_an_involution(cs in prop::collection::vec(-4i64..=4, 1..7), pad in 0usize..3) {
            let mut cs = cs;
            if cs[0] == 0 { cs[0] = 1; }
            let q = UniPoly::from_coeffs_unchecked(cs.into_iter().map(MultiPoly::from_int).collect());
            let n = q.degree().unwrap() + pad;
            prop_assert_eq!(q.reciprocal(n).unwrap().reciprocal(n).unwrap(), q);
        }
    }
}
