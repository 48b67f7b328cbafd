//! J-fraction convergents and their relation to the reversed basis
//! polynomials.

use crate::error::Result;
use crate::exact::{MultiPoly, RationalFn, TruncatedSeries, UniPoly};
use crate::exec::{self, Parallelism};
use crate::ortho::{generate_basis, CoeffSpec};

#[derive(Clone, Debug)]
pub struct Convergent {
    pub n: usize,
    pub spec: CoeffSpec,
    /// Denominator normalised to constant term 1.
    pub value: RationalFn,
}

/// `1 - c_k x`
fn level(spec: &CoeffSpec, k: usize) -> Result<UniPoly> {
    Ok(&UniPoly::one() - &UniPoly::monomial(spec.c(k as u32)?, 1))
}

/// The depth-`n` convergent
/// `1/(1 - c_0 x - λ_1 x²/(1 - c_1 x - … - λ_n x²/(1 - c_n x)))`.
pub fn convergent(n: usize, spec: &CoeffSpec) -> Result<Convergent> {
    // R = num/den, folded from the bottom level up
    let mut num = level(spec, n)?;
    let mut den = UniPoly::one();
    for k in (0..n).rev() {
        let lam_x2 = UniPoly::monomial(spec.lam(k as u32 + 1)?, 2);
        let next = &(&level(spec, k)? * &num) - &(&lam_x2 * &den);
        den = num;
        num = next;
    }
    let value = RationalFn::new(den, num)?.normalized();
    Ok(Convergent { n, spec: spec.clone(), value })
}

/// `Q_k` and the index-shifted `S Q_k`, both specialised to `spec`.
fn basis_pair(k: usize, spec: &CoeffSpec) -> Result<(UniPoly, UniPoly)> {
    let sym = generate_basis(k, &CoeffSpec::Symbolic)?;
    let q = sym.get(k).unwrap();
    let special = |p: &UniPoly| p.map_coeffs(|c| spec.specialize(c));
    Ok((special(q)?, special(&q.shift_vars())?))
}

/// `Q_k*(x) = x^k Q_k(1/x)` under `spec`, together with the shifted one.
fn reversed_pair(k: usize, spec: &CoeffSpec) -> Result<(UniPoly, UniPoly)> {
    let (q, sq) = basis_pair(k, spec)?;
    Ok((q.reciprocal(k)?, sq.reciprocal(k)?))
}

/// `J^(n) = S Q_n* / Q_{n+1}*`, compared by cross multiplication.
pub fn convergent_qstar_identity(n: usize, spec: &CoeffSpec) -> Result<bool> {
    let j = convergent(n, spec)?.value;
    let (_, sq_n) = reversed_pair(n, spec)?;
    let (q_next, _) = reversed_pair(n + 1, spec)?;
    Ok(j.num() * &q_next == &sq_n * j.den())
}

/// `J^(n) - J^(n-1) = λ_1⋯λ_n x^{2n} / (Q_n* Q_{n+1}*)`, for `n ≥ 1`.
pub fn convergent_difference(n: usize, spec: &CoeffSpec) -> Result<bool> {
    assert!(n >= 1, "convergent difference needs n >= 1");
    let diff = convergent(n, spec)?.value.sub(&convergent(n - 1, spec)?.value);
    let (q_n, _) = reversed_pair(n, spec)?;
    let (q_next, _) = reversed_pair(n + 1, spec)?;
    let rhs_num = UniPoly::monomial(spec.lam_product(n as u32)?, 2 * n);
    Ok(diff.num() * &(&q_n * &q_next) == &rhs_num * diff.den())
}

/// Depth needed so the convergent's series is exact through `order`.
pub fn depth_for_order(order: usize) -> usize {
    order.saturating_sub(1).div_ceil(2)
}

/// Power series of the J-fraction through `x^order`.
pub fn j_series(order: usize, spec: &CoeffSpec) -> Result<TruncatedSeries> {
    convergent(depth_for_order(order), spec)?.value.series(order)
}

/// Checks `L·(1 - c_0 x - λ_1 x² S(L)) = 1` through `x^order`, where `L` is
/// the J-fraction series and `S(L)` its index-shifted counterpart.
pub fn functional_equation_holds(order: usize, spec: &CoeffSpec) -> Result<bool> {
    let l = j_series(order, spec)?;
    let shifted = match spec.shifted() {
        Some(s) => j_series(order, &s)?,
        None => l.shift_vars(),
    };
    let c0 = spec.c(0)?;
    let lam1 = spec.lam(1)?;
    let mut inner = vec![MultiPoly::one(), -&c0];
    inner.extend(shifted.coeffs().iter().map(|s| -&(&lam1 * s)));
    let inner = TruncatedSeries::new(order, inner);
    let prod = l.mul(&inner);
    Ok(prod.coeffs().iter().enumerate().all(|(k, c)| if k == 0 { c.is_one() } else { c.is_zero() }))
}

/// Convergents `0..=n_max`, computed independently of each other.
pub fn convergents(n_max: usize, spec: &CoeffSpec, mode: Parallelism) -> Result<Vec<Convergent>> {
    exec::map_range(mode, n_max + 1, |n| convergent(n, spec)).into_iter().collect()
}
