use super::{scalar_product, MomentSeq, OrthoBasis};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, UniPoly};

/// Recursion coefficients recovered from the scalar product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionCoeffs {
    /// `c_0 … c_N`.
    pub c: Vec<MultiPoly>,
    /// `λ_1 … λ_N` (`lam[0]` is `λ_1`).
    pub lam: Vec<MultiPoly>,
}

fn self_product(q: &UniPoly, mu: &MomentSeq, n: usize) -> Result<MultiPoly> {
    let s = scalar_product(q, q, mu)?;
    if s.is_zero() {
        return Err(Error::DegenerateSpec(format!("<Q{n}, Q{n}> vanishes")));
    }
    Ok(s)
}

/// `λ_n = ⟨Q_{n-1}, xQ_n⟩ / ⟨Q_{n-1}, Q_{n-1}⟩` and
/// `c_n = ⟨Q_n, xQ_n⟩ / ⟨Q_n, Q_n⟩` for every `n ≤ N` the moments cover.
pub fn recursion_coeffs(basis: &OrthoBasis, mu: &MomentSeq) -> Result<RecursionCoeffs> {
    let n_max = basis.n_max().min(mu.max_index().saturating_sub(1) / 2);
    let qs = basis.polys();
    let norms: Vec<MultiPoly> = (0..=n_max).map(|n| self_product(&qs[n], mu, n)).collect::<Result<_>>()?;
    let mut c = Vec::with_capacity(n_max + 1);
    let mut lam = Vec::with_capacity(n_max);
    for n in 0..=n_max {
        let xq = qs[n].shift_up(1);
        c.push(scalar_product(&qs[n], &xq, mu)?.div_exact(&norms[n])?);
        if n >= 1 {
            lam.push(scalar_product(&qs[n - 1], &xq, mu)?.div_exact(&norms[n - 1])?);
        }
    }
    Ok(RecursionCoeffs { c, lam })
}

/// Coefficients `⟨P, Q_k⟩ / ⟨Q_k, Q_k⟩`, `k = 0 … deg P`, verified by
/// rebuilding `P` from them.
pub fn expand_in_basis(p: &UniPoly, basis: &OrthoBasis, mu: &MomentSeq) -> Result<Vec<MultiPoly>> {
    let Some(deg) = p.degree() else {
        return Ok(Vec::new());
    };
    if basis.n_max() < deg {
        return Err(Error::Range { needed: deg, available: basis.n_max() });
    }
    let qs = basis.polys();
    let coeffs: Vec<MultiPoly> = (0..=deg)
        .map(|k| scalar_product(p, &qs[k], mu)?.div_exact(&self_product(&qs[k], mu, k)?))
        .collect::<Result<_>>()?;
    let rebuilt = coeffs.iter().zip(qs).fold(UniPoly::zero(), |acc, (a, q)| &acc + &q.scale(a));
    if &rebuilt != p {
        return Err(Error::Reconstruction(format!("expansion of {p} rebuilds {rebuilt}")));
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::ortho::{generate_basis, stieltjes_moments, CoeffSpec};

    fn ints(v: &[MultiPoly]) -> Vec<i64> {
        v.iter()
            .map(|c| {
                let r = c.constant_value().unwrap();
                assert!(r.is_integer());
                i64::try_from(r.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn roundtrip_symbolic() {
        let b = generate_basis(2, &CoeffSpec::Symbolic).unwrap();
        let mu = stieltjes_moments(5, &CoeffSpec::Symbolic).unwrap();
        let rc = recursion_coeffs(&b, &mu).unwrap();
        assert_eq!(rc.c, vec![MultiPoly::c(0), MultiPoly::c(1), MultiPoly::c(2)]);
        assert_eq!(rc.lam, vec![MultiPoly::lam(1), MultiPoly::lam(2)]);
    }

    #[test]
    fn roundtrip_specialised() {
        for (spec, l) in [(CoeffSpec::Fibonacci, -1), (CoeffSpec::Catalan, 1)] {
            let b = generate_basis(6, &spec).unwrap();
            let mu = stieltjes_moments(13, &spec).unwrap();
            let rc = recursion_coeffs(&b, &mu).unwrap();
            assert_eq!(rc.c.len(), 7);
            assert!(rc.c.iter().all(MultiPoly::is_zero));
            assert!(rc.lam.iter().all(|v| *v == MultiPoly::from_int(l)));
        }
    }

    #[test]
    fn degenerate_custom_spec() {
        let z = Rational::from_integer(0.into());
        let spec = CoeffSpec::Custom { c: vec![z.clone(); 6], lambda: vec![z.clone(); 6] };
        let b = generate_basis(2, &spec).unwrap();
        let mu = stieltjes_moments(4, &spec).unwrap();
        assert!(matches!(recursion_coeffs(&b, &mu), Err(Error::DegenerateSpec(_))));
    }

    #[test]
    fn fibonacci_power_expansions() {
        let b = generate_basis(8, &CoeffSpec::Fibonacci).unwrap();
        let mu = stieltjes_moments(16, &CoeffSpec::Fibonacci).unwrap();
        let x = |n| UniPoly::monomial(MultiPoly::one(), n);
        assert_eq!(ints(&expand_in_basis(&x(7), &b, &mu).unwrap()), vec![0, -14, 0, 14, 0, -6, 0, 1]);
        assert_eq!(ints(&expand_in_basis(&x(8), &b, &mu).unwrap()), vec![14, 0, -28, 0, 20, 0, -7, 0, 1]);
        assert_eq!(ints(&expand_in_basis(&x(2), &b, &mu).unwrap()), vec![-1, 0, 1]);
    }
}
