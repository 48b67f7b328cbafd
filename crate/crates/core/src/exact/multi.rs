use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use super::rational::{int, is_negative, parse_rational, rational_to_fraction_string, rational_to_string};
use super::{forward_binop, Rational, Var};
use crate::error::{Error, Result};

/// A power product of indeterminates, stored as `(var, exp)` pairs sorted by
/// variable with every exponent positive.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// of the smallest variable in the canonical order (`x` first) decides.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *acc.entry(v).or_insert(0) += e;
            }
        }
        Monomial(acc.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes `v`, returning its exponent and the remaining monomial.
    fn split_off(&self, v: Var) -> (u32, Monomial) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|(w, x)| {
                if *w == v {
                    e = *x;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (e, Monomial(rest))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for k in 0..a.len().max(b.len()) {
                match (a.get(k), b.get(k)) {
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            // the side holding the smaller variable has a
                            // positive exponent where the other has zero
                            return if va < vb { Ordering::Greater } else { Ordering::Less };
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (None, None) => break,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by [`Monomial`], so equality and hashing
/// are structural and iteration follows the canonical term order. No stored
/// coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> MultiPoly {
        MultiPoly::term(r, Monomial::one())
    }

    pub fn from_int(v: i64) -> MultiPoly {
        MultiPoly::constant(int(v))
    }

    pub fn term(coeff: Rational, mono: Monomial) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    pub fn c(i: u32) -> MultiPoly {
        MultiPoly::var(Var::C(i))
    }

    /// `λ_i`. Panics when `i == 0`.
    pub fn lam(i: u32) -> MultiPoly {
        assert!(i >= 1, "lambda index must be at least 1");
        MultiPoly::var(Var::Lam(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value of a constant polynomial (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Coefficient of the monomial `1`.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    /// All indeterminates occurring in the polynomial, ascending.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c * r)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces every occurrence of `v` by `value`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Result<MultiPoly> {
        v.validate()?;
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out += &powers[e as usize].mul_monomial(&rest, c);
        }
        Ok(out)
    }

    /// Simultaneous substitution: each variable for which `map` returns a
    /// value is replaced by it, the others are kept.
    pub fn substitute_with<F>(&self, mut map: F) -> Result<MultiPoly>
    where
        F: FnMut(Var) -> Result<Option<MultiPoly>>,
    {
        let mut cache: BTreeMap<Var, Option<MultiPoly>> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = MultiPoly::one();
            for &(v, e) in m.pairs() {
                let mapped = match cache.entry(v) {
                    std::collections::btree_map::Entry::Occupied(o) => o.into_mut(),
                    std::collections::btree_map::Entry::Vacant(slot) => slot.insert(map(v)?),
                };
                match mapped {
                    Some(p) => factor = &factor * &p.pow(e),
                    None => kept.push((v, e)),
                }
            }
            out += &factor.mul_monomial(&Monomial(kept), c);
        }
        Ok(out)
    }

    /// The index shift `c_i → c_{i+1}`, `λ_i → λ_{i+1}`.
    pub fn shift(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0.iter().map(|&(v, e)| (v.shifted(), e)).collect()), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, failing if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        let (lm, lc) = divisor
            .leading_term()
            .ok_or_else(|| Error::NotDivisible("division by zero polynomial".into()))?;
        if let Some(c) = divisor.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm
                .div(lm)
                .ok_or_else(|| Error::NotDivisible(format!("{self} by {divisor}")))?;
            let c = rc / lc;
            rem -= &divisor.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                let powers: Map<String, Value> =
                    m.pairs().iter().map(|(v, e)| (v.to_string(), json!(e))).collect();
                json!({"coeff": rational_to_fraction_string(c), "powers": powers})
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<MultiPoly> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut out = MultiPoly::zero();
        for t in terms {
            let coeff = t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("missing coeff"))?;
            let coeff = parse_rational(coeff)?;
            let mut pairs = Vec::new();
            if let Some(powers) = t.get("powers") {
                let powers = powers.as_object().ok_or_else(|| bad("powers must be an object"))?;
                for (name, e) in powers {
                    let e = e.as_u64().ok_or_else(|| bad("exponent must be a natural number"))?;
                    pairs.push((Var::parse(name)?, e as u32));
                }
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }

    /// Display with a leading sign split off: returns `(negative, body)` where
    /// `body` prints the polynomial with its leading coefficient made
    /// positive.
    pub fn signed_parts(&self) -> (bool, MultiPoly) {
        match self.leading_term() {
            Some((_, c)) if is_negative(c) => (true, -self),
            _ => (false, self.clone()),
        }
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl From<i64> for MultiPoly {
    fn from(v: i64) -> Self {
        MultiPoly::from_int(v)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

forward_binop!(MultiPoly, Add, add);
forward_binop!(MultiPoly, Sub, sub);
forward_binop!(MultiPoly, Mul, mul);

impl std::ops::AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                f.write_str(&rational_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational_to_string(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!((p("x+1") * p("x-1")).to_string(), "x^2 - 1");
    }

    #[test]
    fn substitute_lambda() {
        let q = p("c0^2 + l1").substitute(Var::Lam(1), &MultiPoly::from_int(-1)).unwrap();
        assert_eq!(q, p("c0^2 - 1"));
        assert!(matches!(p("l1").substitute(Var::Lam(0), &MultiPoly::one()), Err(Error::Index(_))));
    }

    #[test]
    fn mu4_specialises_to_catalan_two() {
        let mu4 = p("c0^4 + 3*c0^2*l1 + 2*c0*c1*l1 + c1^2*l1 + l1^2 + l1*l2");
        let v = mu4
            .substitute_with(|v| {
                Ok(match v {
                    Var::C(_) => Some(MultiPoly::zero()),
                    Var::Lam(_) => Some(MultiPoly::one()),
                    _ => None,
                })
            })
            .unwrap();
        assert_eq!(v, MultiPoly::from_int(2));
    }

    #[test]
    fn canonical_printing_order() {
        let mu4 = p("l1*l2 + l1^2 + c1^2*l1 + 2*c0*c1*l1 + 3*c0^2*l1 + c0^4");
        assert_eq!(mu4.to_string(), "c0^4 + 3*c0^2*l1 + 2*c0*c1*l1 + c1^2*l1 + l1^2 + l1*l2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("-1/2*c0 + 3").to_string(), "-1/2*c0 + 3");
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("c0").shift(), p("c1"));
        assert_eq!(p("l1*l2 + c0^2").shift(), p("l2*l3 + c1^2"));
        assert_eq!(p("x*c0 + t").shift(), p("x*c1 + t"));
    }

    #[test]
    fn exact_division() {
        let a = p("c0 + l1*c1 - 2");
        let b = p("l1^2 - c0*c1 + 1/3");
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert!(p("c0 + 1").div_exact(&p("c1")).is_err());
        assert!(p("c0").div_exact(&MultiPoly::zero()).is_err());
    }

    #[test]
    fn json_schema() {
        let q = p("3/2*x^2*c0*l1^3 - 1");
        let j = q.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"terms":[{"coeff":"3/2","powers":{"c0":1,"l1":3,"x":2}},{"coeff":"-1/1","powers":{}}]}"#
        );
        assert_eq!(MultiPoly::from_json(&j).unwrap(), q);
    }

    fn arb_var() -> impl Strategy<Value = Var> {
        prop_oneof![Just(Var::X), (0u32..3).prop_map(Var::C), (1u32..3).prop_map(Var::Lam)]
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(
            (-5i64..=5, prop::collection::vec((arb_var(), 0u32..=4), 0..3)),
            0..=5,
        )
        .prop_map(|terms| {
            let mut out = MultiPoly::zero();
            for (c, pairs) in terms {
                out += &MultiPoly::term(int(c), Monomial::from_pairs(pairs));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn shift_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).shift(), &a.shift() * &b.shift());
            prop_assert_eq!((&a + &b).shift(), &a.shift() + &b.shift());
        }

        #[test]
        fn display_parse_roundtrip(a in arb_poly()) {
            prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a);
        }
    }
}
