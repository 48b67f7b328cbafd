//! LaTeX renderings of polynomials, matrices, series and J-fractions.
//!
//! Every function returns math-mode source; [`display`] wraps it in `\[ \]`.

use num_traits::{One, Signed};

use crate::error::Result;
use crate::exact::{Monomial, MultiPoly, Rational, TruncatedSeries, UniPoly, Var};
use crate::ortho::CoeffSpec;

pub fn var(v: Var) -> String {
    match v {
        Var::X => "x".into(),
        Var::T => "t".into(),
        Var::C(i) => format!("c_{{{i}}}"),
        Var::Lam(i) => format!("\\lambda_{{{i}}}"),
    }
}

fn power(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{{{e}}}")
    }
}

pub fn monomial(m: &Monomial) -> String {
    m.pairs().iter().map(|&(v, e)| power(&var(v), e)).collect::<Vec<_>>().join(" ")
}

fn rational_abs(r: &Rational) -> String {
    let r = r.abs();
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Signed terms, first term without a leading `+`.
fn join_terms<I: IntoIterator<Item = (bool, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (neg, body) in terms {
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn multi(p: &MultiPoly) -> String {
    join_terms(p.terms().map(|(m, c)| {
        let body = match (m.is_one(), c.abs().is_one()) {
            (true, _) => rational_abs(c),
            (false, true) => monomial(m),
            (false, false) => format!("{} {}", rational_abs(c), monomial(m)),
        };
        (c.is_negative(), body)
    }))
}

/// Descending powers of `x`.
pub fn uni(p: &UniPoly) -> String {
    uni_terms(p, true)
}

/// Ascending powers of `x`, as in `1 - c_{0} x`.
pub fn uni_ascending(p: &UniPoly) -> String {
    uni_terms(p, false)
}

fn uni_terms(p: &UniPoly, descending: bool) -> String {
    let mut ks: Vec<usize> = (0..p.coeffs().len()).filter(|&k| !p.coeff(k).is_zero()).collect();
    if descending {
        ks.reverse();
    }
    join_terms(ks.into_iter().map(|k| {
        let xp = if k == 0 { String::new() } else { power("x", k as u32) };
        let (neg, c) = p.coeff(k).signed_parts();
        let body = if k == 0 {
            multi(&c)
        } else if c.is_one() {
            xp
        } else if c.len() > 1 {
            format!("\\left({}\\right) {xp}", multi(&c))
        } else {
            format!("{} {xp}", multi(&c))
        };
        (neg, body)
    }))
}

pub fn matrix(rows: &[Vec<MultiPoly>]) -> String {
    let body: Vec<String> =
        rows.iter().map(|r| r.iter().map(multi).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", body.join(" \\\\ "))
}

pub fn series(s: &TruncatedSeries) -> String {
    format!("{} + O\\left(x^{{{}}}\\right)", uni(&s.to_poly()), s.order() + 1)
}

/// `lhs &= rhs` rows inside an `aligned` block.
pub fn aligned(rows: &[(String, String)]) -> String {
    let body: Vec<String> = rows.iter().map(|(l, r)| format!("{l} &= {r}")).collect();
    format!("\\begin{{aligned}}\n{}\n\\end{{aligned}}", body.join(" \\\\\n"))
}

pub fn display(body: &str) -> String {
    format!("\\[\n{body}\n\\]")
}

/// The depth-`n` J-fraction with the spec's coefficients.
pub fn cfrac(depth: usize, spec: &CoeffSpec) -> Result<String> {
    let level = |k: usize| -> Result<UniPoly> {
        let c = spec.c(k as u32)?;
        Ok(&UniPoly::one() - &UniPoly::monomial(c, 1))
    };
    let mut inner = uni_ascending(&level(depth)?);
    for k in (0..depth).rev() {
        let lam = spec.lam(k as u32 + 1)?;
        let (neg, mag) = match lam.constant_value() {
            Some(r) if r.is_negative() => (true, MultiPoly::constant(-r)),
            _ => (false, lam),
        };
        let num = uni(&UniPoly::monomial(mag, 2));
        let op = if neg { '+' } else { '-' };
        inner = format!("{} {op} \\cfrac{{{num}}}{{{inner}}}", uni_ascending(&level(k)?));
    }
    Ok(format!("\\cfrac{{1}}{{{inner}}}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;

    #[test]
    fn polynomials() {
        assert_eq!(multi(&parse_poly("c0^2*l1 - 1/2*c1 + 3").unwrap()), "c_{0}^{2} \\lambda_{1} - \\frac{1}{2} c_{1} + 3");
        assert_eq!(multi(&MultiPoly::zero()), "0");
        let q = UniPoly::from_multi(&parse_poly("x^2 - (c0 + c1)*x + c0*c1 - l1").unwrap());
        assert_eq!(uni(&q), "x^{2} - \\left(c_{0} + c_{1}\\right) x + c_{0} c_{1} - \\lambda_{1}");
        let p = UniPoly::from_multi(&parse_poly("x^3 - 2*x + 1").unwrap());
        assert_eq!(uni(&p), "x^{3} - 2 x + 1");
    }

    #[test]
    fn matrices_and_blocks() {
        let m = vec![vec![MultiPoly::one(), MultiPoly::zero()], vec![MultiPoly::zero(), MultiPoly::one()]];
        assert_eq!(matrix(&m), "\\begin{pmatrix} 1 & 0 \\\\ 0 & 1 \\end{pmatrix}");
        assert_eq!(aligned(&[("a".into(), "b".into())]), "\\begin{aligned}\na &= b\n\\end{aligned}");
    }

    #[test]
    fn fractions() {
        assert_eq!(cfrac(0, &CoeffSpec::Symbolic).unwrap(), "\\cfrac{1}{1 - c_{0} x}");
        assert_eq!(cfrac(1, &CoeffSpec::Fibonacci).unwrap(), "\\cfrac{1}{1 + \\cfrac{x^{2}}{1}}");
        assert_eq!(cfrac(1, &CoeffSpec::Catalan).unwrap(), "\\cfrac{1}{1 - \\cfrac{x^{2}}{1}}");
    }
}
