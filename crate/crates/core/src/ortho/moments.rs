use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::CoeffSpec;
use crate::error::{Error, Result};
use crate::exact::{rational_to_string, MultiPoly, Rational, UniPoly};
use crate::exec::{self, Parallelism};

/// Moments `μ_0 … μ_M` of a coefficient spec, optionally with the full
/// triangle `h_{n,k}` they were read off from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSeq {
    spec: CoeffSpec,
    mu: Vec<MultiPoly>,
    table: Option<Vec<Vec<MultiPoly>>>,
}

impl MomentSeq {
    /// Wraps an explicit list of moments (no triangle attached).
    pub fn from_values(spec: CoeffSpec, mu: Vec<MultiPoly>) -> MomentSeq {
        MomentSeq { spec, mu, table: None }
    }

    pub fn spec(&self) -> &CoeffSpec {
        &self.spec
    }

    pub fn mu(&self) -> &[MultiPoly] {
        &self.mu
    }

    pub fn get(&self, n: usize) -> Result<&MultiPoly> {
        self.mu.get(n).ok_or(Error::Range { needed: n, available: self.max_index() })
    }

    /// Highest available moment index.
    pub fn max_index(&self) -> usize {
        self.mu.len().saturating_sub(1)
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if n < self.mu.len() {
            Ok(())
        } else {
            Err(Error::Range { needed: n, available: self.max_index() })
        }
    }

    /// `h_{n,k}` from the attached triangle: zero for `k > n`, `None` when
    /// the entry lies beyond what the moments up to `μ_M` required
    /// (`n + k > M`).
    pub fn h(&self, n: usize, k: usize) -> Option<MultiPoly> {
        let row = self.table.as_ref()?.get(n)?;
        if k > n {
            return Some(MultiPoly::zero());
        }
        row.get(k).cloned()
    }

    pub fn table(&self) -> Option<&[Vec<MultiPoly>]> {
        self.table.as_deref()
    }

    /// Integer moments are written as JSON numbers, other rationals as
    /// `"p/q"` strings, and symbolic moments as polynomial objects.
    pub fn to_json(&self) -> Value {
        let values: Option<Vec<Rational>> = self.mu.iter().map(MultiPoly::constant_value).collect();
        let entries: Vec<Value> = match values {
            Some(vs) => vs
                .iter()
                .map(|v| match v.to_integer().to_i64() {
                    Some(i) if v.is_integer() => json!(i),
                    _ => json!(rational_to_string(v)),
                })
                .collect(),
            None => self.mu.iter().map(MultiPoly::to_json).collect(),
        };
        json!({ "moments": entries })
    }
}

/// Fills the triangle `h_{n,k} = λ_k h_{n-1,k-1} + c_k h_{n-1,k} + h_{n-1,k+1}`
/// from `h_{0,0} = 1` and reads the moments off its first column. Only the
/// entries with `n + k ≤ n_max` are kept, since no others feed `μ_{n_max}`.
pub fn stieltjes_moments(n_max: usize, spec: &CoeffSpec) -> Result<MomentSeq> {
    stieltjes_moments_with(Parallelism::default(), n_max, spec)
}

pub fn stieltjes_moments_with(mode: Parallelism, n_max: usize, spec: &CoeffSpec) -> Result<MomentSeq> {
    // rows are cut at n + k <= n_max, so levels above n_max/2 are never reached
    let top = (n_max / 2) as u32;
    let c: Vec<MultiPoly> = (0..=top).map(|i| spec.c(i)).collect::<Result<_>>()?;
    let lam: Vec<MultiPoly> = std::iter::once(Ok(MultiPoly::zero()))
        .chain((1..=top).map(|i| spec.lam(i)))
        .collect::<Result<_>>()?;
    let mut table: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one()]];
    for n in 1..=n_max {
        let prev = &table[n - 1];
        let width = n.min(n_max - n) + 1;
        let row = exec::map_range(mode, width, |k| {
            let mut acc = MultiPoly::zero();
            if k >= 1 && !prev[k - 1].is_zero() {
                acc += &(&lam[k] * &prev[k - 1]);
            }
            if k < prev.len() && !prev[k].is_zero() && !c[k].is_zero() {
                acc += &(&c[k] * &prev[k]);
            }
            if k + 1 < prev.len() {
                acc += &prev[k + 1];
            }
            acc
        });
        table.push(row);
    }
    let mu = table.iter().map(|r| r[0].clone()).collect();
    Ok(MomentSeq { spec: spec.clone(), mu, table: Some(table) })
}

/// `⟨A, B⟩ = Σ a_i b_j μ_{i+j}`.
pub fn scalar_product(a: &UniPoly, b: &UniPoly, mu: &MomentSeq) -> Result<MultiPoly> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Ok(MultiPoly::zero());
    };
    mu.require(da + db)?;
    let mut acc = MultiPoly::zero();
    for (i, ai) in a.coeffs().iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs().iter().enumerate() {
            let m = &mu.mu[i + j];
            if bj.is_zero() || m.is_zero() {
                continue;
            }
            acc += &(&(ai * bj) * m);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;
    use crate::ortho::generate_basis;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn symbolic_low_moments() {
        let m = stieltjes_moments(4, &CoeffSpec::Symbolic).unwrap();
        assert_eq!(m.mu()[0], MultiPoly::one());
        assert_eq!(m.mu()[1], p("c0"));
        assert_eq!(m.mu()[2], p("c0^2 + l1"));
        assert_eq!(m.mu()[4], p("c0^4 + 3*c0^2*l1 + 2*c0*c1*l1 + c1^2*l1 + l1^2 + l1*l2"));
    }

    #[test]
    fn last_off_diagonal_entry() {
        let m = stieltjes_moments(9, &CoeffSpec::Symbolic).unwrap();
        assert!(m.h(5, 5).is_none());
        for n in 0..=4usize {
            let csum = (0..=n as u32).fold(MultiPoly::zero(), |a, i| a + MultiPoly::c(i));
            let expect = &csum * &CoeffSpec::Symbolic.lam_product(n as u32).unwrap();
            assert_eq!(m.h(n + 1, n).unwrap(), expect, "n = {n}");
        }
    }

    #[test]
    fn modes_agree() {
        let a = stieltjes_moments_with(Parallelism::Sequential, 8, &CoeffSpec::Symbolic).unwrap();
        let b = stieltjes_moments_with(Parallelism::Parallel, 8, &CoeffSpec::Symbolic).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scalar_product_examples() {
        let one = UniPoly::one();
        let fib = stieltjes_moments(4, &CoeffSpec::Fibonacci).unwrap();
        assert_eq!(scalar_product(&one, &one, &fib).unwrap(), MultiPoly::one());
        let pb = generate_basis(2, &CoeffSpec::Fibonacci).unwrap();
        assert_eq!(scalar_product(&pb.polys()[1], &pb.polys()[1], &fib).unwrap(), MultiPoly::from_int(-1));

        let sym = stieltjes_moments(3, &CoeffSpec::Symbolic).unwrap();
        let qb = generate_basis(2, &CoeffSpec::Symbolic).unwrap();
        assert!(scalar_product(&qb.polys()[2], &qb.polys()[1], &sym).unwrap().is_zero());
        assert!(matches!(
            scalar_product(&qb.polys()[2], &qb.polys()[2], &sym),
            Err(Error::Range { needed: 4, available: 3 })
        ));
    }

    /// Brute-force expansion of ⟨Q_2, Q_1⟩ from the moment definition
    /// with hand-written coefficient lists.
    #[test]
    fn orthogonality_by_hand() {
        let sym = stieltjes_moments(3, &CoeffSpec::Symbolic).unwrap();
        let q1 = [p("-c0"), p("1")];
        let q2 = [p("c0*c1 - l1"), p("-c0 - c1"), p("1")];
        let mut acc = MultiPoly::zero();
        for (i, a) in q2.iter().enumerate() {
            for (j, b) in q1.iter().enumerate() {
                acc += &(&(a * b) * &sym.mu()[i + j]);
            }
        }
        assert!(acc.is_zero());
    }
}
