//! Weighted Motzkin paths and their `a/b/c` letter words.
//!
//! Enumeration here is explicit and exponential; it serves as the
//! independent oracle for the moment triangle in [`crate::ortho`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{Monomial, MultiPoly, Rational, Var};
use crate::exec::{self, Parallelism};
use crate::ortho::CoeffSpec;

/// Longest path the enumerators accept.
pub const MAX_ENUM_STEPS: usize = 18;

/// A lattice step. The derived order `NE < E < SE` is the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    NE,
    E,
    SE,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::NE, Step::E, Step::SE];

    fn delta(self) -> i64 {
        match self {
            Step::NE => 1,
            Step::E => 0,
            Step::SE => -1,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::NE => "NE",
            Step::E => "E",
            Step::SE => "SE",
        })
    }
}

/// A path that never drops below level 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    start_level: u32,
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(start_level: u32, steps: Vec<Step>) -> Result<MotzkinPath> {
        let mut level = start_level as i64;
        for (i, s) in steps.iter().enumerate() {
            level += s.delta();
            if level < 0 {
                return Err(Error::Domain(format!("path drops below level 0 at step {}", i + 1)));
            }
        }
        Ok(MotzkinPath { start_level, steps })
    }

    pub fn start_level(&self) -> u32 {
        self.start_level
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Levels visited, starting level included.
    pub fn levels(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut level = self.start_level as i64;
        out.push(level as u32);
        for s in &self.steps {
            level += s.delta();
            out.push(level as u32);
        }
        out
    }

    pub fn end_level(&self) -> u32 {
        *self.levels().last().unwrap()
    }

    pub fn max_height(&self) -> u32 {
        self.levels().into_iter().max().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.start_level == 0 && self.end_level() == 0
    }

    /// No east steps.
    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::E)
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "@{}", self.start_level)
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    /// `"NE,E,SE@r"`; the `@r` suffix defaults to `@0`.
    fn from_str(s: &str) -> Result<MotzkinPath> {
        let (body, start) = match s.trim().rsplit_once('@') {
            Some((b, r)) => (b, r.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad start level in {s:?}")))?),
            None => (s.trim(), 0),
        };
        let steps = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "NE" => Ok(Step::NE),
                "E" => Ok(Step::E),
                "SE" => Ok(Step::SE),
                other => Err(Error::Parse(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(start, steps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    /// North-east.
    A,
    /// South-east.
    B,
    /// East.
    C,
}

/// One edge of a path, tagged by the height it starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub height: u32,
}

impl Letter {
    pub fn a(height: u32) -> Letter {
        Letter { kind: LetterKind::A, height }
    }

    pub fn b(height: u32) -> Letter {
        Letter { kind: LetterKind::B, height }
    }

    pub fn c(height: u32) -> Letter {
        Letter { kind: LetterKind::C, height }
    }

    /// Height after the edge.
    pub fn end_height(self) -> u32 {
        match self.kind {
            LetterKind::A => self.height + 1,
            LetterKind::B => self.height - 1,
            LetterKind::C => self.height,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            LetterKind::A => 'a',
            LetterKind::B => 'b',
            LetterKind::C => 'c',
        };
        write!(f, "{k}{}", self.height)
    }
}

/// The non-commutative `a/b/c` word of a path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PathWord {
    letters: Vec<Letter>,
}

impl PathWord {
    /// Checks that heights chain and that no `b_0` occurs.
    pub fn new(letters: Vec<Letter>) -> Result<PathWord> {
        for (i, l) in letters.iter().enumerate() {
            if l.kind == LetterKind::B && l.height == 0 {
                return Err(Error::Domain("b0 would leave level 0".into()));
            }
            if i > 0 && letters[i - 1].end_height() != l.height {
                return Err(Error::Domain(format!("letter {} does not start where {} ends", l, letters[i - 1])));
            }
        }
        Ok(PathWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn start_level(&self) -> u32 {
        self.letters.first().map_or(0, |l| l.height)
    }

    pub fn end_level(&self) -> u32 {
        self.letters.last().map_or(0, |l| l.end_height())
    }

    pub fn is_closed(&self) -> bool {
        self.start_level() == 0 && self.end_level() == 0
    }

    pub fn to_path(&self) -> MotzkinPath {
        let steps = self
            .letters
            .iter()
            .map(|l| match l.kind {
                LetterKind::A => Step::NE,
                LetterKind::B => Step::SE,
                LetterKind::C => Step::E,
            })
            .collect();
        MotzkinPath { start_level: self.start_level(), steps }
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = Error;

    /// Whitespace-separated tokens `a<i>`, `b<i>`, `c<i>`.
    fn from_str(s: &str) -> Result<PathWord> {
        let letters = s
            .split_whitespace()
            .map(|t| {
                let (k, idx) = t.split_at(1);
                let height: u32 = idx.parse().map_err(|_| Error::Parse(format!("bad letter {t:?}")))?;
                let kind = match k {
                    "a" => LetterKind::A,
                    "b" => LetterKind::B,
                    "c" => LetterKind::C,
                    _ => return Err(Error::Parse(format!("bad letter {t:?}"))),
                };
                Ok(Letter { kind, height })
            })
            .collect::<Result<Vec<_>>>()?;
        PathWord::new(letters)
    }
}

/// NE at height i ↦ `a_i`, E ↦ `c_i`, SE ↦ `b_i`.
pub fn path_word(p: &MotzkinPath) -> PathWord {
    let levels = p.levels();
    let letters = p
        .steps
        .iter()
        .zip(&levels)
        .map(|(s, &h)| match s {
            Step::NE => Letter::a(h),
            Step::E => Letter::c(h),
            Step::SE => Letter::b(h),
        })
        .collect();
    PathWord { letters }
}

/// Commutative symbolic weight: `a_i ↦ λ_{i+1}`, `b_i ↦ 1`, `c_i ↦ c_i`.
fn symbolic_weight<I: IntoIterator<Item = Letter>>(letters: I) -> Monomial {
    Monomial::from_pairs(letters.into_iter().filter_map(|l| match l.kind {
        LetterKind::A => Some((Var::Lam(l.height + 1), 1)),
        LetterKind::B => None,
        LetterKind::C => Some((Var::C(l.height), 1)),
    }))
}

/// Weight of a word under a coefficient spec.
pub fn path_weight(w: &PathWord, spec: &CoeffSpec) -> Result<MultiPoly> {
    let mono = symbolic_weight(w.letters.iter().copied());
    spec.specialize(&MultiPoly::term(Rational::from_integer(1.into()), mono))
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_ENUM_STEPS {
        return Err(Error::EnumerationCap { requested: n, cap: MAX_ENUM_STEPS });
    }
    Ok(())
}

/// Depth-first walk over all paths `level → target` with `remaining` steps,
/// visiting complete step sequences in lexicographic order.
fn walk<F: FnMut(&[Step])>(level: u32, target: u32, remaining: usize, stack: &mut Vec<Step>, visit: &mut F) {
    if remaining == 0 {
        if level == target {
            visit(stack);
        }
        return;
    }
    for s in Step::ALL {
        let next = level as i64 + s.delta();
        if next < 0 || (next - target as i64).unsigned_abs() as usize > remaining - 1 {
            continue;
        }
        stack.push(s);
        walk(next as u32, target, remaining - 1, stack, visit);
        stack.pop();
    }
}

/// Reachable prefixes of length `depth` (or fewer when `n` is short), with
/// the level each ends at, in lexicographic order.
fn prefixes(r: u32, s: u32, n: usize, depth: usize) -> Vec<(Vec<Step>, u32)> {
    let depth = depth.min(n);
    let mut out = vec![(Vec::new(), r)];
    for d in 0..depth {
        let rem_after = n - d - 1;
        out = out
            .into_iter()
            .flat_map(|(pre, level)| {
                Step::ALL.into_iter().filter_map(move |st| {
                    let next = level as i64 + st.delta();
                    if next < 0 || (next - s as i64).unsigned_abs() as usize > rem_after {
                        return None;
                    }
                    let mut p = pre.clone();
                    p.push(st);
                    Some((p, next as u32))
                })
            })
            .collect();
    }
    out
}

/// All `n`-step paths from level `r` to level `s`, lexicographic in steps.
pub fn enumerate_paths(r: u32, s: u32, n: usize) -> Result<Vec<MotzkinPath>> {
    enumerate_paths_with(Parallelism::default(), r, s, n)
}

pub fn enumerate_paths_with(mode: Parallelism, r: u32, s: u32, n: usize) -> Result<Vec<MotzkinPath>> {
    check_cap(n)?;
    let pre = prefixes(r, s, n, 1);
    let chunks = exec::map(mode, &pre, |(p, level)| {
        let mut out = Vec::new();
        let mut stack = p.clone();
        walk(*level, s, n - p.len(), &mut stack, &mut |steps| {
            out.push(MotzkinPath { start_level: r, steps: steps.to_vec() });
        });
        out
    });
    Ok(chunks.into_iter().flatten().collect())
}

/// Number of `n`-step paths from `r` to `s`.
pub fn count_paths(r: u32, s: u32, n: usize) -> Result<u64> {
    check_cap(n)?;
    let mut count = 0u64;
    walk(r, s, n, &mut Vec::new(), &mut |_| count += 1);
    Ok(count)
}

/// Sum of path weights over all `n`-step paths from `r` to `s`, returned
/// as symbolic monomial multiplicities.
fn weight_census(mode: Parallelism, r: u32, s: u32, n: usize) -> Result<HashMap<Monomial, u64>> {
    check_cap(n)?;
    let pre = prefixes(r, s, n, 6);
    let parts = exec::map(mode, &pre, |(p, level)| {
        let mut local: HashMap<Monomial, u64> = HashMap::new();
        let mut stack = p.clone();
        walk(*level, s, n - p.len(), &mut stack, &mut |steps| {
            let mut h = r;
            let letters = steps.iter().map(|st| {
                let l = match st {
                    Step::NE => Letter::a(h),
                    Step::E => Letter::c(h),
                    Step::SE => Letter::b(h),
                };
                h = l.end_height();
                l
            });
            *local.entry(symbolic_weight(letters)).or_insert(0) += 1;
        });
        local
    });
    let mut total: HashMap<Monomial, u64> = HashMap::new();
    for part in parts {
        for (m, c) in part {
            *total.entry(m).or_insert(0) += c;
        }
    }
    Ok(total)
}

/// `h̃_{n,k}`: sum of weights of the `n`-step paths from height 0 to `k`.
pub fn h_tilde(n: usize, k: u32, spec: &CoeffSpec) -> Result<MultiPoly> {
    h_tilde_with(Parallelism::default(), n, k, spec)
}

pub fn h_tilde_with(mode: Parallelism, n: usize, k: u32, spec: &CoeffSpec) -> Result<MultiPoly> {
    let census = weight_census(mode, 0, k, n)?;
    let mut sym = MultiPoly::zero();
    for (m, c) in census {
        sym += &MultiPoly::term(Rational::from_integer(c.into()), m);
    }
    spec.specialize(&sym)
}

/// `μ_n` as the weight sum over closed `n`-step paths.
pub fn moments_by_paths(n: usize, spec: &CoeffSpec) -> Result<MultiPoly> {
    h_tilde(n, 0, spec)
}

pub fn moments_by_paths_with(mode: Parallelism, n: usize, spec: &CoeffSpec) -> Result<MultiPoly> {
    h_tilde_with(mode, n, 0, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    /// Brute force over all 3^n step strings.
    fn brute_count(r: u32, s: u32, n: usize) -> u64 {
        let mut count = 0;
        for code in 0..3u64.pow(n as u32) {
            let mut c = code;
            let mut level = r as i64;
            let mut ok = true;
            for _ in 0..n {
                level += (c % 3) as i64 - 1;
                c /= 3;
                if level < 0 {
                    ok = false;
                    break;
                }
            }
            if ok && level == s as i64 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_paths(0, 0, 0).unwrap(), vec![MotzkinPath::new(0, vec![]).unwrap()]);
        assert!(enumerate_paths(0, 2, 1).unwrap().is_empty());
        assert_eq!(enumerate_paths(0, 0, 4).unwrap().len(), 9);
        assert!(matches!(enumerate_paths(0, 0, 19), Err(Error::EnumerationCap { .. })));
    }

    #[test]
    fn counts_match_brute_force() {
        let motzkin = [1, 1, 2, 4, 9, 21, 51];
        for (n, &m) in motzkin.iter().enumerate() {
            assert_eq!(count_paths(0, 0, n).unwrap(), m);
            assert_eq!(brute_count(0, 0, n), m);
        }
        for (r, s, n) in [(0, 2, 6), (3, 1, 7), (2, 2, 5), (1, 0, 8)] {
            assert_eq!(count_paths(r, s, n).unwrap(), brute_count(r, s, n));
            assert_eq!(enumerate_paths(r, s, n).unwrap().len() as u64, brute_count(r, s, n));
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_mode_independent() {
        let a = enumerate_paths_with(Parallelism::Parallel, 1, 1, 7).unwrap();
        let b = enumerate_paths_with(Parallelism::Sequential, 1, 1, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|x| x[0].steps() < x[1].steps()));
    }

    #[test]
    fn words() {
        assert_eq!(path_word(&"E@0".parse().unwrap()).to_string(), "c0");
        assert_eq!(path_word(&"NE,SE@0".parse().unwrap()).to_string(), "a0 b1");
        let figure: MotzkinPath = "E,SE,SE,E,NE,E,SE,E,E,NE,SE,SE,SE,NE,E,NE,SE,E@5".parse().unwrap();
        assert_eq!(figure.len(), 18);
        assert_eq!(figure.end_level(), 2);
        assert_eq!(
            path_word(&figure).to_string(),
            "c5 b5 b4 c3 a3 c4 b4 c3 c3 a3 b4 b3 b2 a1 c2 a2 b3 c2"
        );
        assert_eq!(path_word(&figure).to_path(), figure);
    }

    #[test]
    fn word_validation() {
        assert!("a0 b0".parse::<PathWord>().is_err());
        assert!("a0 a0".parse::<PathWord>().is_err());
        assert!("x1".parse::<PathWord>().is_err());
        assert!("NE,SE,SE@0".parse::<MotzkinPath>().is_err());
    }

    #[test]
    fn weights() {
        let s = CoeffSpec::Symbolic;
        assert_eq!(path_weight(&w("a0 b1"), &s).unwrap(), p("l1"));
        assert_eq!(path_weight(&w("a0 a1 b2 b1"), &s).unwrap(), p("l1*l2"));
        assert_eq!(path_weight(&w("c0 c0"), &s).unwrap(), p("c0^2"));
        assert_eq!(path_weight(&w("a0 b1"), &CoeffSpec::Fibonacci).unwrap(), p("-1"));
    }

    #[test]
    fn path_sums() {
        let s = CoeffSpec::Symbolic;
        assert!(h_tilde(0, 0, &s).unwrap().is_one());
        let h31 = h_tilde(3, 1, &s).unwrap();
        let no_c = h31.substitute_with(|v| Ok(matches!(v, Var::C(_)).then(MultiPoly::zero))).unwrap();
        assert_eq!(no_c, p("l1*l2 + l1^2"));
        assert_eq!(h_tilde(2, 2, &s).unwrap(), p("l1*l2"));
    }

    #[test]
    fn closed_path_sums() {
        let dyck = CoeffSpec::Symbolic;
        let m6 = moments_by_paths(6, &dyck)
            .unwrap()
            .substitute_with(|v| Ok(matches!(v, Var::C(_)).then(MultiPoly::zero)))
            .unwrap();
        assert_eq!(m6, p("l1*l2*l3 + l1*l2^2 + 2*l1^2*l2 + l1^3"));
        assert_eq!(
            moments_by_paths(4, &dyck).unwrap(),
            p("c0^4 + 3*c0^2*l1 + 2*c0*c1*l1 + c1^2*l1 + l1^2 + l1*l2")
        );
        for n in [1, 3, 5, 7] {
            assert!(moments_by_paths(n, &CoeffSpec::Catalan).unwrap().is_zero());
        }
        let cat: Vec<MultiPoly> = (0..=8).map(|n| moments_by_paths(n, &CoeffSpec::Catalan).unwrap()).collect();
        let want = [1, 0, 1, 0, 2, 0, 5, 0, 14];
        for (a, b) in cat.iter().zip(want) {
            assert_eq!(*a, MultiPoly::from_int(b));
        }
    }

    #[test]
    fn unit_weights_count_motzkin_paths() {
        let ones = CoeffSpec::Custom {
            c: vec![Rational::from_integer(1.into()); 8],
            lambda: vec![Rational::from_integer(1.into()); 8],
        };
        let want = [1, 1, 2, 4, 9, 21, 51];
        for (n, &m) in want.iter().enumerate() {
            assert_eq!(moments_by_paths(n, &ones).unwrap(), MultiPoly::from_int(m));
        }
    }

    #[test]
    fn sum_modes_agree() {
        let a = h_tilde_with(Parallelism::Sequential, 10, 2, &CoeffSpec::Symbolic).unwrap();
        let b = h_tilde_with(Parallelism::Parallel, 10, 2, &CoeffSpec::Symbolic).unwrap();
        assert_eq!(a, b);
    }
}
