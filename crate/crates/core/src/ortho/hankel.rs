use num_traits::{Signed, Zero};

use super::{CoeffSpec, MomentSeq, OrthoBasis};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rational, UniPoly};
use crate::linalg::{det_bareiss, det_bordered_by_powers, is_identity, mat_mul};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelVariant {
    /// Entries `μ_{i+j}`, `0 ≤ i, j ≤ n`.
    Plain,
    /// As `Plain` but the last row is `μ_{n+1} … μ_{2n+1}`.
    ShiftedLastRow,
}

/// Moment matrix of size `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelMatrix {
    variant: HankelVariant,
    entries: Vec<Vec<MultiPoly>>,
}

impl HankelMatrix {
    pub fn plain(n: usize, mu: &MomentSeq) -> Result<HankelMatrix> {
        mu.require(2 * n)?;
        let entries = (0..=n).map(|i| (0..=n).map(|j| mu.mu()[i + j].clone()).collect()).collect();
        Ok(HankelMatrix { variant: HankelVariant::Plain, entries })
    }

    pub fn shifted(n: usize, mu: &MomentSeq) -> Result<HankelMatrix> {
        mu.require(2 * n + 1)?;
        let entries = (0..=n)
            .map(|i| {
                let r = if i == n { n + 1 } else { i };
                (0..=n).map(|j| mu.mu()[r + j].clone()).collect()
            })
            .collect();
        Ok(HankelMatrix { variant: HankelVariant::ShiftedLastRow, entries })
    }

    pub fn variant(&self) -> HankelVariant {
        self.variant
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    pub fn det(&self) -> Result<MultiPoly> {
        det_bareiss(&self.entries)
    }

    /// Entries as rationals; fails when any entry is symbolic.
    pub fn rational_entries(&self) -> Result<Vec<Vec<Rational>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        e.constant_value()
                            .ok_or_else(|| Error::Unsupported(format!("symbolic Hankel entry {e}")))
                    })
                    .collect()
            })
            .collect()
    }
}

/// `(d_n, χ_n)`: determinants of the plain and shifted-last-row Hankel
/// matrices of size `n + 1`.
pub fn hankel_dets(n: usize, mu: &MomentSeq) -> Result<(MultiPoly, MultiPoly)> {
    let d = HankelMatrix::plain(n, mu)?.det()?;
    let chi = HankelMatrix::shifted(n, mu)?.det()?;
    Ok((d, chi))
}

/// `d_{n-1}` with the convention `d_{-1} = 1`.
pub(crate) fn d_prev(n: usize, mu: &MomentSeq) -> Result<MultiPoly> {
    if n == 0 {
        Ok(MultiPoly::one())
    } else {
        HankelMatrix::plain(n - 1, mu)?.det()
    }
}

/// The bordered moment determinant whose last row is `1, x, …, x^n`
/// (without the `1/d_{n-1}` normalisation).
pub fn bordered_moment_det(n: usize, mu: &MomentSeq) -> Result<UniPoly> {
    if n > 0 {
        mu.require(2 * n - 1)?;
    }
    let rows: Vec<Vec<MultiPoly>> = (0..n).map(|i| (0..=n).map(|j| mu.mu()[i + j].clone()).collect()).collect();
    det_bordered_by_powers(&rows)
}

/// `Q_n` rebuilt from moments alone as `det(bordered) / d_{n-1}`.
pub fn qn_via_determinant(n: usize, mu: &MomentSeq) -> Result<UniPoly> {
    let d = d_prev(n, mu)?;
    if d.is_zero() {
        return Err(Error::SingularHankel(n));
    }
    bordered_moment_det(n, mu)?.map_coeffs(|c| c.div_exact(&d))
}

/// Checks that `‖h_{n,k} / (λ_1⋯λ_k)‖` and `‖a_{n,k}‖` are mutually inverse
/// lower-triangular matrices of size `n + 1`. The moment triangle must
/// reach `μ_{2n}`.
pub fn basis_inverse_check(n: usize, basis: &OrthoBasis, mu: &MomentSeq) -> Result<bool> {
    if basis.n_max() < n {
        return Err(Error::Range { needed: n, available: basis.n_max() });
    }
    mu.require(2 * n)?;
    let spec: &CoeffSpec = basis.spec();
    let lam_products: Vec<MultiPoly> = (0..=n as u32).map(|k| spec.lam_product(k)).collect::<Result<_>>()?;
    for (k, l) in lam_products.iter().enumerate() {
        spec.check_nonzero(&format!("λ-product of order {k}"), l)?;
    }
    let mut left = vec![vec![MultiPoly::zero(); n + 1]; n + 1];
    for (i, row) in left.iter_mut().enumerate() {
        for (k, slot) in row.iter_mut().enumerate().take(i + 1) {
            let h = mu.h(i, k).ok_or(Error::Range { needed: i, available: mu.max_index() })?;
            *slot = h.div_exact(&lam_products[k])?;
        }
    }
    let right: Vec<Vec<MultiPoly>> =
        (0..=n).map(|k| (0..=n).map(|s| basis.coeff(k, s)).collect()).collect();
    Ok(is_identity(&mat_mul(&left, &right)))
}

/// Exact positivity verdict for a rational Hankel matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelVerdict {
    /// Leading principal minors of orders `1 … size`.
    pub minors: Vec<Rational>,
    /// All leading principal minors are positive (Sylvester's criterion).
    pub positive_definite: bool,
    pub determinant: Rational,
    pub nondegenerate: bool,
}

/// Sylvester-criterion verdict on a numeric Hankel matrix.
pub fn hankel_positivity(a: &HankelMatrix) -> Result<HankelVerdict> {
    let entries = a.rational_entries()?;
    let n = entries.len();
    let minors: Vec<Rational> = (1..=n)
        .map(|k| {
            let sub: Vec<Vec<MultiPoly>> = entries[..k]
                .iter()
                .map(|r| r[..k].iter().cloned().map(MultiPoly::constant).collect())
                .collect();
            Ok(det_bareiss(&sub)?.constant_value().expect("rational determinant"))
        })
        .collect::<Result<_>>()?;
    let determinant = minors.last().cloned().unwrap_or_else(|| Rational::from_integer(1.into()));
    Ok(HankelVerdict {
        positive_definite: minors.iter().all(|m| m.is_positive()),
        nondegenerate: !determinant.is_zero(),
        determinant,
        minors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;
    use crate::ortho::{generate_basis, stieltjes_moments};

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn symbolic_first_ratio() {
        let mu = stieltjes_moments(3, &CoeffSpec::Symbolic).unwrap();
        let (d1, _) = hankel_dets(1, &mu).unwrap();
        assert_eq!(d1, MultiPoly::lam(1));
        let (d0, chi0) = hankel_dets(0, &mu).unwrap();
        assert_eq!(d0, MultiPoly::one());
        assert_eq!(chi0, MultiPoly::c(0));
    }

    #[test]
    fn fibonacci_and_catalan_determinants() {
        let fib = stieltjes_moments(9, &CoeffSpec::Fibonacci).unwrap();
        let expect = [1, -1, -1, 1, 1];
        for (n, e) in expect.iter().enumerate() {
            let (d, chi) = hankel_dets(n, &fib).unwrap();
            assert_eq!(d, MultiPoly::from_int(*e), "d_{n}");
            assert!(chi.is_zero(), "chi_{n}");
        }
        let cat = stieltjes_moments(9, &CoeffSpec::Catalan).unwrap();
        for n in 0..=4 {
            let (d, chi) = hankel_dets(n, &cat).unwrap();
            assert!(d.is_one());
            assert!(chi.is_zero());
        }
    }

    #[test]
    fn determinant_formula_examples() {
        let sym = stieltjes_moments(1, &CoeffSpec::Symbolic).unwrap();
        assert_eq!(qn_via_determinant(1, &sym).unwrap().to_multi(), parse_poly("x - c0").unwrap());
        let fib = stieltjes_moments(5, &CoeffSpec::Fibonacci).unwrap();
        let bordered = bordered_moment_det(3, &fib).unwrap();
        // prefactor (-1)^{ceil((3-1)/2)} = -1
        assert_eq!(bordered.scale_rational(&r(-1)).to_multi(), parse_poly("x^3 + 2*x").unwrap());
        assert_eq!(qn_via_determinant(3, &fib).unwrap().to_multi(), parse_poly("x^3 + 2*x").unwrap());
        let cat = stieltjes_moments(3, &CoeffSpec::Catalan).unwrap();
        assert_eq!(qn_via_determinant(2, &cat).unwrap().to_multi(), parse_poly("x^2 - 1").unwrap());
        assert_eq!(qn_via_determinant(0, &cat).unwrap(), UniPoly::one());
    }

    #[test]
    fn singular_hankel() {
        let spec = CoeffSpec::Custom { c: vec![r(0); 6], lambda: vec![r(0); 6] };
        let mu = stieltjes_moments(5, &spec).unwrap();
        assert_eq!(qn_via_determinant(2, &mu).unwrap_err(), Error::SingularHankel(2));
    }

    #[test]
    fn inverse_check() {
        let b = generate_basis(0, &CoeffSpec::Symbolic).unwrap();
        let mu = stieltjes_moments(0, &CoeffSpec::Symbolic).unwrap();
        assert!(basis_inverse_check(0, &b, &mu).unwrap());
        let b = generate_basis(4, &CoeffSpec::Symbolic).unwrap();
        assert!(matches!(basis_inverse_check(4, &b, &mu), Err(Error::Range { .. })));
        let mu = stieltjes_moments(8, &CoeffSpec::Symbolic).unwrap();
        assert!(basis_inverse_check(4, &b, &mu).unwrap());
        let b = generate_basis(8, &CoeffSpec::Fibonacci).unwrap();
        let mu = stieltjes_moments(16, &CoeffSpec::Fibonacci).unwrap();
        assert!(basis_inverse_check(8, &b, &mu).unwrap());

        let spec = CoeffSpec::Custom { c: vec![r(1); 5], lambda: vec![r(2), r(0), r(1), r(1)] };
        let b = generate_basis(2, &spec).unwrap();
        let mu = stieltjes_moments(4, &spec).unwrap();
        assert!(matches!(basis_inverse_check(2, &b, &mu), Err(Error::DegenerateSpec(_))));
    }

    #[test]
    fn positivity_verdicts() {
        let cat = stieltjes_moments(4, &CoeffSpec::Catalan).unwrap();
        let a2 = HankelMatrix::plain(2, &cat).unwrap();
        let v = hankel_positivity(&a2).unwrap();
        assert_eq!(v.minors, vec![r(1), r(1), r(1)]);
        assert!(v.positive_definite);

        let fib = stieltjes_moments(8, &CoeffSpec::Fibonacci).unwrap();
        let v = hankel_positivity(&HankelMatrix::plain(4, &fib).unwrap()).unwrap();
        assert_eq!(v.determinant, r(1));
        assert!(v.nondegenerate && !v.positive_definite);

        let v = hankel_positivity(&HankelMatrix::plain(0, &cat).unwrap()).unwrap();
        assert!(v.positive_definite);

        let sym = stieltjes_moments(2, &CoeffSpec::Symbolic).unwrap();
        assert!(matches!(
            hankel_positivity(&HankelMatrix::plain(1, &sym).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }
}
