use std::fmt;

use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, MultiPoly, Rational, Var};

/// Source of the recursion coefficients `c_i` (i ≥ 0) and `λ_i` (i ≥ 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffSpec {
    /// `c_i` and `λ_i` are the indeterminates themselves.
    Symbolic,
    /// `c_i = 0`, `λ_i = 1`.
    Catalan,
    /// `c_i = 0`, `λ_i = -1`; the recursion becomes `P_{n+1} = x P_n + P_{n-1}`.
    Fibonacci,
    /// Explicit rational lists; `lambda[0]` is `λ_1`.
    Custom { c: Vec<Rational>, lambda: Vec<Rational> },
}

impl CoeffSpec {
    pub fn name(&self) -> &'static str {
        match self {
            CoeffSpec::Symbolic => "symbolic",
            CoeffSpec::Catalan => "catalan",
            CoeffSpec::Fibonacci => "fibonacci",
            CoeffSpec::Custom { .. } => "custom",
        }
    }

    pub fn c(&self, i: u32) -> Result<MultiPoly> {
        match self {
            CoeffSpec::Symbolic => Ok(MultiPoly::c(i)),
            CoeffSpec::Catalan | CoeffSpec::Fibonacci => Ok(MultiPoly::zero()),
            CoeffSpec::Custom { c, .. } => c
                .get(i as usize)
                .cloned()
                .map(MultiPoly::constant)
                .ok_or_else(|| Error::Index(format!("custom spec has no c{i} (length {})", c.len()))),
        }
    }

    pub fn lam(&self, i: u32) -> Result<MultiPoly> {
        Var::lam(i)?;
        match self {
            CoeffSpec::Symbolic => Ok(MultiPoly::lam(i)),
            CoeffSpec::Catalan => Ok(MultiPoly::one()),
            CoeffSpec::Fibonacci => Ok(MultiPoly::from_int(-1)),
            CoeffSpec::Custom { lambda, .. } => lambda
                .get(i as usize - 1)
                .cloned()
                .map(MultiPoly::constant)
                .ok_or_else(|| Error::Index(format!("custom spec has no l{i} (length {})", lambda.len()))),
        }
    }

    /// `λ_1 ⋯ λ_k` (1 for `k = 0`).
    pub fn lam_product(&self, k: u32) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one();
        for i in 1..=k {
            acc = &acc * &self.lam(i)?;
        }
        Ok(acc)
    }

    /// Whether every coefficient is a rational number.
    pub fn is_numeric(&self) -> bool {
        !matches!(self, CoeffSpec::Symbolic)
    }

    /// Replaces the indeterminates `c_i`, `λ_i` in `p` by this spec's values.
    pub fn specialize(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if *self == CoeffSpec::Symbolic {
            return Ok(p.clone());
        }
        p.substitute_with(|v| match v {
            Var::C(i) => self.c(i).map(Some),
            Var::Lam(i) => self.lam(i).map(Some),
            _ => Ok(None),
        })
    }

    /// The spec with indices advanced by one (`c_i ↦ c_{i+1}`), when it can
    /// be expressed as a spec. Symbolic shifting is done on polynomials.
    pub fn shifted(&self) -> Option<CoeffSpec> {
        match self {
            CoeffSpec::Symbolic => None,
            CoeffSpec::Catalan | CoeffSpec::Fibonacci => Some(self.clone()),
            CoeffSpec::Custom { c, lambda } => Some(CoeffSpec::Custom {
                c: c.iter().skip(1).cloned().collect(),
                lambda: lambda.iter().skip(1).cloned().collect(),
            }),
        }
    }

    /// Parses `{"c":["0","1/2",…],"lambda":["1",…]}`; numbers are accepted
    /// as well as strings.
    pub fn from_json(v: &Value) -> Result<CoeffSpec> {
        let list = |key: &str| -> Result<Vec<Rational>> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("custom spec: missing array {key:?}")))?;
            arr.iter()
                .map(|e| match e {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
                    other => Err(Error::Parse(format!("custom spec: bad rational {other}"))),
                })
                .collect()
        };
        Ok(CoeffSpec::Custom { c: list("c")?, lambda: list("lambda")? })
    }

    /// `symbolic`, `catalan`, `fib`/`fibonacci`; custom specs come from
    /// [`CoeffSpec::from_json`].
    pub fn parse_named(s: &str) -> Result<CoeffSpec> {
        match s {
            "symbolic" | "sym" => Ok(CoeffSpec::Symbolic),
            "catalan" => Ok(CoeffSpec::Catalan),
            "fib" | "fibonacci" => Ok(CoeffSpec::Fibonacci),
            other => Err(Error::Parse(format!("unknown spec {other:?}"))),
        }
    }

    pub(crate) fn check_nonzero(&self, what: &str, v: &MultiPoly) -> Result<()> {
        if v.is_zero() || v.constant_value().is_some_and(|c| c.is_zero()) {
            return Err(Error::DegenerateSpec(format!("{what} vanishes under the {} spec", self.name())));
        }
        Ok(())
    }
}

impl fmt::Display for CoeffSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn named_values() {
        assert_eq!(CoeffSpec::Symbolic.lam(2).unwrap(), MultiPoly::lam(2));
        assert_eq!(CoeffSpec::Catalan.lam(5).unwrap(), MultiPoly::one());
        assert_eq!(CoeffSpec::Fibonacci.lam(5).unwrap(), MultiPoly::from_int(-1));
        assert!(CoeffSpec::Fibonacci.c(3).unwrap().is_zero());
        assert!(matches!(CoeffSpec::Catalan.lam(0), Err(Error::Index(_))));
        assert_eq!(CoeffSpec::Fibonacci.lam_product(3).unwrap(), MultiPoly::from_int(-1));
    }

    #[test]
    fn custom_from_json() {
        let s = CoeffSpec::from_json(&json!({"c": ["0", "1/2"], "lambda": [2, "3"]})).unwrap();
        assert_eq!(s.c(1).unwrap().to_string(), "1/2");
        assert_eq!(s.lam(2).unwrap(), MultiPoly::from_int(3));
        assert!(matches!(s.c(2), Err(Error::Index(_))));
        assert!(matches!(s.lam(3), Err(Error::Index(_))));
        assert_eq!(s.shifted().unwrap().lam(1).unwrap(), MultiPoly::from_int(3));
        assert!(CoeffSpec::from_json(&json!({"c": []})).is_err());
    }

    #[test]
    fn specialize_polynomial() {
        let p = crate::exact::parse_poly("c0^2 + l1*x").unwrap();
        assert_eq!(CoeffSpec::Fibonacci.specialize(&p).unwrap().to_string(), "-x");
    }
}
