use serde_json::{json, Value};

use super::CoeffSpec;
use crate::error::Result;
use crate::exact::{MultiPoly, UniPoly};

/// The monic basis `Q_0 … Q_N` of a coefficient spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoBasis {
    spec: CoeffSpec,
    polys: Vec<UniPoly>,
}

impl OrthoBasis {
    pub fn spec(&self) -> &CoeffSpec {
        &self.spec
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> Option<&UniPoly> {
        self.polys.get(n)
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    /// `a_{n,k}`, the coefficient of `x^k` in `Q_n` (zero for `k > n`).
    pub fn coeff(&self, n: usize, k: usize) -> MultiPoly {
        self.polys[n].coeff(k)
    }

    /// Lower-triangular table `a_{n,k}`, `0 ≤ k ≤ n ≤ N`.
    pub fn coeff_table(&self) -> Vec<Vec<MultiPoly>> {
        self.polys.iter().map(|q| (0..=q.degree().unwrap_or(0)).map(|k| q.coeff(k)).collect()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "basis": self.polys.iter().map(UniPoly::to_json).collect::<Vec<_>>() })
    }
}

/// Runs the recursion up to `Q_{n_max}`.
pub fn generate_basis(n_max: usize, spec: &CoeffSpec) -> Result<OrthoBasis> {
    let mut polys = Vec::with_capacity(n_max + 1);
    let mut prev = UniPoly::zero();
    let mut cur = UniPoly::one();
    polys.push(cur.clone());
    for n in 0..n_max {
        let c = spec.c(n as u32)?;
        let shifted = &cur.shift_up(1) - &cur.scale(&c);
        let next = if n == 0 {
            shifted
        } else {
            &shifted - &prev.scale(&spec.lam(n as u32)?)
        };
        prev = std::mem::replace(&mut cur, next);
        polys.push(cur.clone());
    }
    Ok(OrthoBasis { spec: spec.clone(), polys })
}
