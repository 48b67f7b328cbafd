use std::fmt;

use crate::error::{Error, Result};

/// An indeterminate of the coefficient universe.
///
/// The derived order is the canonical one: `X < T < C(0) < C(1) < … <
/// Lam(1) < Lam(2) < …`. `Lam` indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    T,
    C(u32),
    Lam(u32),
}

impl Var {
    pub fn c(i: u32) -> Var {
        Var::C(i)
    }

    /// `λ_i`; fails for `i = 0`.
    pub fn lam(i: u32) -> Result<Var> {
        if i == 0 {
            return Err(Error::Index("lambda index must be at least 1".into()));
        }
        Ok(Var::Lam(i))
    }

    pub fn validate(self) -> Result<Var> {
        match self {
            Var::Lam(0) => Err(Error::Index("lambda index must be at least 1".into())),
            v => Ok(v),
        }
    }

    /// The index shift `c_i → c_{i+1}`, `λ_i → λ_{i+1}`; `x` and `t` are fixed.
    pub fn shifted(self) -> Var {
        match self {
            Var::C(i) => Var::C(i + 1),
            Var::Lam(i) => Var::Lam(i + 1),
            v => v,
        }
    }

    /// Parses `x`, `t`, `c<i>` or `l<i>`.
    pub fn parse(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("unknown variable {s:?}"));
        match s {
            "x" => return Ok(Var::X),
            "t" => return Ok(Var::T),
            _ => {}
        }
        let (head, idx) = s.split_at(1.min(s.len()));
        if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let i: u32 = idx.parse().map_err(|_| bad())?;
        match head {
            "c" => Ok(Var::C(i)),
            "l" => Var::lam(i),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => f.write_str("x"),
            Var::T => f.write_str("t"),
            Var::C(i) => write!(f, "c{i}"),
            Var::Lam(i) => write!(f, "l{i}"),
        }
    }
}
