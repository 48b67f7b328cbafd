//! Floating-point corroboration: the closed form of the Fibonacci-type
//! polynomials, the integral representation of Catalan numbers, the
//! generating function, and eigenvalue positivity of Hankel matrices.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{series_div_coeffs, MultiPoly, Rational, UniPoly};
use crate::exec::{self, Parallelism};
use crate::ortho::{generate_basis, CoeffSpec, HankelMatrix};

/// `(a^{n+1} - b^{n+1})/(a - b)` with `a, b = (x ± √(x²+4))/2`.
pub fn binet_eval(n: usize, x: f64) -> f64 {
    let r = (x * x + 4.0).sqrt();
    let a = (x + r) / 2.0;
    let b = (x - r) / 2.0;
    (a.powi(n as i32 + 1) - b.powi(n as i32 + 1)) / (a - b)
}

pub const BINET_XS: [f64; 6] = [-2.0, -1.0, -0.5, 0.5, 1.0, 3.0];

#[derive(Clone, Debug, PartialEq)]
pub struct GridReport {
    pub points: usize,
    pub max_rel_error: f64,
    /// `(n, x)` of the worst point.
    pub worst: (usize, f64),
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Compares [`binet_eval`] with exact evaluation of the recursion
/// polynomials over `n ∈ 0..=n_max` and [`BINET_XS`].
pub fn binet_grid(n_max: usize, mode: Parallelism) -> Result<GridReport> {
    let basis = generate_basis(n_max, &CoeffSpec::Fibonacci)?;
    let grid: Vec<(usize, f64)> = (0..=n_max).flat_map(|n| BINET_XS.map(|x| (n, x))).collect();
    let errs = exec::map(mode, &grid, |&(n, x)| {
        let at = MultiPoly::constant(Rational::from_float(x).unwrap());
        let exact = to_f64(&basis.get(n).unwrap().evaluate(&at).constant_value().unwrap());
        ((binet_eval(n, x) - exact) / exact).abs()
    });
    let (i, max) = errs
        .iter()
        .copied()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    Ok(GridReport { points: grid.len(), max_rel_error: max, worst: grid[i] })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    refined: f64,
    left: [f64; 2],
    error: f64,
}

impl Panel {
    fn new<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, fa: f64, fm: f64, fb: f64, evals: &mut usize) -> Panel {
        let m = 0.5 * (a + b);
        let flm = f(0.5 * (a + m));
        let frm = f(0.5 * (m + b));
        *evals += 2;
        let h = b - a;
        let whole = h / 6.0 * (fa + 4.0 * fm + fb);
        let left = h / 12.0 * (fa + 4.0 * flm + fm);
        let right = h / 12.0 * (fm + 4.0 * frm + fb);
        let refined = left + right + (left + right - whole) / 15.0;
        Panel { a, b, fa, fm, fb, refined, left: [flm, frm], error: (left + right - whole).abs() / 15.0 }
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Simpson rule: repeatedly bisects the panel with the
/// largest error estimate until the summed estimate drops below `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_evals: usize) -> Result<QuadratureResult> {
    let mut evals = 3;
    let first = Panel::new(&f, a, b, f(a), f(0.5 * (a + b)), f(b), &mut evals);
    let mut heap = BinaryHeap::new();
    let mut total_err = first.error;
    heap.push(first);
    while total_err > tol {
        if evals + 4 > max_evals {
            return Err(Error::Accuracy { estimate: total_err, target: tol });
        }
        let p = heap.pop().unwrap();
        let m = 0.5 * (p.a + p.b);
        let l = Panel::new(&f, p.a, m, p.fa, p.left[0], p.fm, &mut evals);
        let r = Panel::new(&f, m, p.b, p.fm, p.left[1], p.fb, &mut evals);
        total_err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
    }
    // re-sum from scratch so rounding in the running total does not leak
    let value = heap.iter().map(|p| p.refined).sum();
    let abs_error_estimate = heap.iter().map(|p| p.error).sum();
    Ok(QuadratureResult { value, abs_error_estimate, evaluations: evals })
}

/// `4^{m+1}/(2π) ∫₀¹ x^m √((1-x)/x) dx`, integrated after `x = t²` as
/// `∫₀¹ 2 t^{2m} √(1-t²) dt`. Equals the `m`-th Catalan number.
pub fn catalan_integral(m: usize) -> Result<QuadratureResult> {
    let scale = 4f64.powi(m as i32 + 1) / (2.0 * PI);
    let tol = 1e-10 / scale;
    let r = adaptive_simpson(|t| 2.0 * t.powi(2 * m as i32) * (1.0 - t * t).max(0.0).sqrt(), 0.0, 1.0, tol, 2_000_000)?;
    Ok(QuadratureResult {
        value: scale * r.value,
        abs_error_estimate: scale * r.abs_error_estimate,
        evaluations: r.evaluations,
    })
}

/// Coefficients of `t^0..t^{n_max}` in `1/(1 - x t - t²)`, each a
/// polynomial in `x`.
pub fn gf_coefficients(n_max: usize) -> Result<Vec<UniPoly>> {
    let den = [MultiPoly::one(), -MultiPoly::x(), MultiPoly::from_int(-1)];
    let coeffs = series_div_coeffs(&[MultiPoly::one()], &den, n_max)?;
    Ok(coeffs.iter().map(UniPoly::from_multi).collect())
}

/// Generating-function coefficients agree with the recursion for `n ≤ n_max`.
pub fn gf_coeff_check(n_max: usize) -> Result<bool> {
    let basis = generate_basis(n_max, &CoeffSpec::Fibonacci)?;
    Ok(gf_coefficients(n_max)?.iter().zip(basis.polys()).all(|(g, p)| g == p))
}

pub const JACOBI_OFF_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const EIGEN_POSITIVE_FLOOR: f64 = 1e-9;

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Numeric("matrix is not square".into()));
    }
    let mut sweeps = 0;
    while off_norm(&a) > JACOBI_OFF_TOL {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::Numeric(format!("Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Smallest eigenvalue of a rational Hankel matrix exceeds the positivity floor.
pub fn jacobi_eigen_positivity(a: &HankelMatrix) -> Result<bool> {
    if a.size() > 12 {
        return Err(Error::Unsupported(format!("eigenvalue check limited to size 12, got {}", a.size())));
    }
    let m: Vec<Vec<f64>> = a.rational_entries()?.iter().map(|r| r.iter().map(to_f64).collect()).collect();
    let ev = jacobi_eigenvalues(m)?;
    Ok(ev.first().is_some_and(|&e| e > EIGEN_POSITIVE_FLOOR))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;
    use crate::ortho::{special, stieltjes_moments};

    #[test]
    fn binet_points() {
        assert!((binet_eval(3, 2.0) - 12.0).abs() < 1e-12);
        assert!((binet_eval(0, 0.7) - 1.0).abs() < 1e-12);
        assert!((binet_eval(1, 0.5) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn binet_grid_within_1e_9_relative() {
        let r = binet_grid(20, Parallelism::default()).unwrap();
        assert_eq!(r.points, 21 * 6);
        assert!(r.max_rel_error < 1e-9, "{r:?}");
        assert_eq!(binet_grid(20, Parallelism::Sequential).unwrap(), r);
    }

    #[test]
    fn simpson_on_polynomials_is_exact() {
        let r = adaptive_simpson(|x| x * x * x, 0.0, 2.0, 1e-12, 1000).unwrap();
        assert!((r.value - 4.0).abs() < 1e-12);
        assert!(matches!(adaptive_simpson(|x: f64| x.sqrt(), 0.0, 1.0, 1e-15, 50), Err(Error::Accuracy { .. })));
    }

    #[test]
    fn catalan_integrals_within_1e_8() {
        for m in 0..=6 {
            let r = catalan_integral(m).unwrap();
            let want = special::catalan_number(m).to_f64().unwrap();
            assert!((r.value - want).abs() < 1e-8, "m={m}: {r:?}");
            assert!(r.abs_error_estimate >= 0.0);
        }
    }

    #[test]
    fn generating_function() {
        let g = gf_coefficients(5).unwrap();
        assert!(g[0].coeff(0).is_one() && g[0].degree() == Some(0));
        assert_eq!(g[2], UniPoly::from_multi(&parse_poly("x^2 + 1").unwrap()));
        assert_eq!(g[5], UniPoly::from_multi(&parse_poly("x^5 + 4*x^3 + 3*x").unwrap()));
        assert!(gf_coeff_check(10).unwrap());
    }

    #[test]
    fn eigen_positivity() {
        let cat = stieltjes_moments(24, &CoeffSpec::Catalan).unwrap();
        for n in 0..=6 {
            assert!(jacobi_eigen_positivity(&HankelMatrix::plain(n, &cat).unwrap()).unwrap());
        }
        let fib = stieltjes_moments(4, &CoeffSpec::Fibonacci).unwrap();
        let a2 = HankelMatrix::plain(2, &fib).unwrap();
        assert!(!jacobi_eigen_positivity(&a2).unwrap());
        assert!(!a2.det().unwrap().is_zero());
        let ev = jacobi_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }
}
