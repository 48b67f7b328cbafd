//! Named identity checks, each producing a deterministic text report.
//!
//! Identifiers follow the numbering used on the command line, e.g. `T3.2`
//! for the Hankel-determinant identities or `E5.20` for the two power
//! expansions in the Fibonacci basis.

use std::fmt;

use num_traits::ToPrimitive;

use crate::contfrac::{self, j_series};
use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rational, UniPoly};
use crate::exec::{self, Parallelism};
use crate::heaps::{self, canonical_word, heap_to_motzkin, heaps_equivalent, motzkin_to_heap, settle, HeapWord};
use crate::numeric;
use crate::ortho::{
    basis_inverse_check, bordered_moment_det, expand_in_basis, generate_basis, hankel_dets, hankel_positivity, qn_via_determinant,
    scalar_product, special, stieltjes_moments, CoeffSpec, HankelMatrix,
};
use crate::paths::{self, PathWord};

/// Every verifier, in the order `ALL` runs them.
pub const VERIFIERS: [&str; 16] = [
    "T3.1", "T3.2", "T3.3", "T3.4", "T3.5", "T2.1", "P5.1", "P5.2", "I3", "I4", "I5", "I6", "E5.17", "E5.20",
    "E5.23", "E5.27",
];

/// Default size bound for a verifier.
pub fn default_nmax(name: &str) -> Option<usize> {
    Some(match name {
        "T3.1" => 8,
        "T3.2" => 6,
        "T3.3" => 8,
        "T3.4" | "T3.5" => 5,
        "T2.1" => 8,
        "P5.1" => 10,
        "P5.2" => 6,
        "I3" => 10,
        "I4" | "I6" => 16,
        "I5" => 6,
        "E5.17" => 5,
        "E5.20" => 8,
        "E5.23" => 20,
        "E5.27" => 6,
        _ => return None,
    })
}

fn describe(name: &str) -> &'static str {
    match name {
        "T3.1" => "path sums equal the moment triangle and <x^n, Q_k>",
        "T3.2" => "Hankel determinant ratios recover the recursion coefficients",
        "T3.3" => "scaled moment triangle inverts the basis coefficient matrix",
        "T3.4" => "convergents equal shifted over reversed basis polynomials",
        "T3.5" => "difference of consecutive convergents",
        "T2.1" => "closed Motzkin paths correspond to pyramids",
        "P5.1" => "Fibonacci basis expansions reconstruct x^n",
        "P5.2" => "Catalan Hankel matrices are positive definite",
        "I3" => "generating function of the Fibonacci polynomials",
        "I4" => "signed Catalan moments",
        "I5" => "Fibonacci Hankel determinants and the determinant formula",
        "I6" => "continued-fraction series",
        "E5.17" => "shifted Hankel determinants vanish",
        "E5.20" => "expansions of x^7 and x^8 in the Fibonacci basis",
        "E5.23" => "closed form of the Fibonacci polynomials",
        "E5.27" => "integral representation of Catalan numbers",
        _ => "",
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub nmax: usize,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl Report {
    /// First failing line, if any.
    pub fn first_failure(&self) -> Option<&str> {
        self.lines.iter().find(|l| l.starts_with("FAIL")).map(String::as_str)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{} {} (nmax={}): {}", self.name, verdict, self.nmax, describe(&self.name))?;
        for l in &self.lines {
            writeln!(f, "  {l}")?;
        }
        Ok(())
    }
}

struct Checks {
    lines: Vec<String>,
    passed: bool,
}

impl Checks {
    fn new() -> Checks {
        Checks { lines: Vec::new(), passed: true }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.passed &= ok;
        self.lines.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, what.into()));
    }

    /// Records an error as a failed check instead of aborting the report.
    fn attempt(&mut self, what: &str, r: Result<()>) {
        if let Err(e) = r {
            self.check(false, format!("{what}: {e}"));
        }
    }
}

const SPECS: [CoeffSpec; 2] = [CoeffSpec::Catalan, CoeffSpec::Fibonacci];

fn xpow(n: usize) -> UniPoly {
    UniPoly::monomial(MultiPoly::one(), n)
}

fn int(v: i64) -> MultiPoly {
    MultiPoly::from_int(v)
}

fn all_ok<T>(items: Vec<Result<T>>, pred: impl Fn(&T) -> bool) -> Result<bool> {
    let mut ok = true;
    for r in items {
        ok &= pred(&r?);
    }
    Ok(ok)
}

/// Runs a verifier by name. `nmax` overrides its default bound.
pub fn run(name: &str, nmax: Option<usize>) -> Result<Report> {
    let n = nmax.or_else(|| default_nmax(name)).ok_or_else(|| Error::Parse(format!("unknown verifier {name:?}")))?;
    let mut c = Checks::new();
    let mode = Parallelism::default();
    let outcome = match name {
        "T3.1" => path_sums(&mut c, n, mode),
        "T3.2" => hankel_ratios(&mut c, n),
        "T3.3" => inverse_matrices(&mut c, n),
        "T3.4" => convergent_ratio(&mut c, n),
        "T3.5" => convergent_differences(&mut c, n),
        "T2.1" => pyramids(&mut c, n, mode),
        "P5.1" => reconstruction(&mut c, n),
        "P5.2" => positivity(&mut c, n),
        "I3" => generating_function(&mut c, n),
        "I4" => signed_catalan(&mut c, n, mode),
        "I5" => fibonacci_determinants(&mut c, n),
        "I6" => series(&mut c, n),
        "E5.17" => shifted_vanish(&mut c, n),
        "E5.20" => power_expansions(&mut c),
        "E5.23" => binet(&mut c, n, mode),
        "E5.27" => integrals(&mut c, n),
        _ => unreachable!(),
    };
    c.attempt(name, outcome);
    Ok(Report { name: name.to_string(), nmax: n, passed: c.passed, lines: c.lines })
}

/// Runs several verifiers, up to `jobs` at a time, returning reports in
/// request order.
pub fn run_many(names: &[String], nmax: Option<usize>, jobs: usize) -> Result<Vec<Report>> {
    for name in names {
        if default_nmax(name).is_none() {
            return Err(Error::Parse(format!("unknown verifier {name:?}")));
        }
    }
    let work = || exec::map(Parallelism::Parallel, names, |name| run(name, nmax)).into_iter().collect();
    if jobs <= 1 {
        return names.iter().map(|name| run(name, nmax)).collect();
    }
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Numeric(format!("thread pool: {e}")))?;
        pool.install(work)
    }
    #[cfg(not(feature = "parallel"))]
    work()
}

fn bound(spec: &CoeffSpec, n: usize, symbolic_cap: usize) -> usize {
    if matches!(spec, CoeffSpec::Symbolic) {
        n.min(symbolic_cap)
    } else {
        n
    }
}

fn path_sums(c: &mut Checks, n: usize, mode: Parallelism) -> Result<()> {
    for spec in [CoeffSpec::Symbolic, CoeffSpec::Catalan, CoeffSpec::Fibonacci] {
        let mu = stieltjes_moments(2 * n, &spec)?;
        let basis = generate_basis(n, &spec)?;
        // path census for every (i, k) with k <= n + 1, computed once
        let pairs: Vec<(usize, usize)> = (0..=n).flat_map(|i| (0..=n + 1).map(move |k| (i, k))).collect();
        let census: Vec<MultiPoly> = exec::map(mode, &pairs, |&(i, k)| paths::h_tilde(i, k as u32, &spec))
            .into_iter()
            .collect::<Result<_>>()?;
        let ht = |i: usize, k: usize| &census[i * (n + 2) + k];
        let agree = exec::map(mode, &pairs[..], |&(i, k)| -> Result<bool> {
            if k > n {
                return Ok(true);
            }
            let h = mu.h(i, k).expect("triangle covers n + k <= 2n");
            let sp = scalar_product(&xpow(i), basis.get(k).unwrap(), &mu)?;
            Ok(h == *ht(i, k) && h == sp)
        });
        c.check(all_ok(agree, |&b| b)?, format!("h~(n,k) = h(n,k) = <x^n, Q_k> for n, k <= {n} [{spec}]"));

        let m = n.min(6);
        let js = j_series(2 * m, &spec)?;
        let mut ok = true;
        for k in 0..=m {
            let qstar = basis.get(k).unwrap().reciprocal(k)?;
            let prod = &js.to_poly() * &qstar;
            for i in 0..=m {
                ok &= prod.coeff(i + k) == mu.h(i, k).unwrap();
            }
        }
        c.check(ok, format!("h(n,k) = [x^(n+k)] J(x) Q_k*(x) for n, k <= {m} [{spec}]"));

        let mut ok = true;
        for i in 1..=n {
            for k in 0..=n {
                let lam = if k == 0 { MultiPoly::zero() } else { spec.lam(k as u32)? };
                let below = if k == 0 { MultiPoly::zero() } else { ht(i - 1, k - 1).clone() };
                let rhs = &(&(&lam * &below) + &(&spec.c(k as u32)? * ht(i - 1, k))) + ht(i - 1, k + 1);
                ok &= *ht(i, k) == rhs;
            }
        }
        c.check(ok, format!("h~ satisfies the triangle recursion for n, k <= {n} [{spec}]"));

        let top = bound(&spec, 2 * n, 10).min(paths::MAX_ENUM_STEPS).min(16);
        let mu_top = stieltjes_moments(top, &spec)?;
        let by_paths = exec::map_range(mode, top + 1, |i| paths::moments_by_paths(i, &spec));
        let ok = by_paths.into_iter().enumerate().try_fold(true, |acc, (i, m)| Ok::<_, Error>(acc && m? == mu_top.mu()[i]))?;
        c.check(ok, format!("closed path sums equal mu_n for n <= {top} [{spec}]"));
    }
    Ok(())
}

fn hankel_ratios(c: &mut Checks, n: usize) -> Result<()> {
    for spec in [CoeffSpec::Symbolic, CoeffSpec::Catalan, CoeffSpec::Fibonacci] {
        let b = bound(&spec, n, 4);
        let mu = stieltjes_moments(2 * b + 2, &spec)?;
        let (mut d_prev, mut chi_prev) = (MultiPoly::one(), MultiPoly::zero());
        let (mut ok_a, mut ok_b) = (true, true);
        for k in 0..=b {
            let (d, chi) = hankel_dets(k, &mu)?;
            ok_a &= d == &spec.lam_product(k as u32)? * &d_prev;
            // c_k = chi_k/d_k - chi_{k-1}/d_{k-1}, cross-multiplied
            ok_b &= &(&spec.c(k as u32)? * &d) * &d_prev == &(&chi * &d_prev) - &(&chi_prev * &d);
            d_prev = d;
            chi_prev = chi;
        }
        c.check(ok_a, format!("d_n = l1...ln * d_(n-1) for n <= {b} [{spec}]"));
        c.check(ok_b, format!("c_n = chi_n/d_n - chi_(n-1)/d_(n-1) for n <= {b} [{spec}]"));

        let basis = generate_basis(b + 1, &spec)?;
        let mut ok = true;
        for i in 0..=b {
            for j in 0..=b {
                let sp = scalar_product(basis.get(i).unwrap(), basis.get(j).unwrap(), &mu)?;
                let want = if i == j { spec.lam_product(i as u32)? } else { MultiPoly::zero() };
                ok &= sp == want;
            }
        }
        c.check(ok, format!("<Q_i, Q_j> = delta_ij l1...li for i, j <= {b} [{spec}]"));

        let db = bound(&spec, n + 2, 4);
        let mu_d = stieltjes_moments(2 * db, &spec)?;
        let basis = generate_basis(db, &spec)?;
        let ok = (0..=db).map(|k| qn_via_determinant(k, &mu_d).map(|q| q == *basis.get(k).unwrap())).collect::<Result<Vec<_>>>()?;
        c.check(ok.iter().all(|&b| b), format!("Q_n = bordered moment determinant / d_(n-1) for n <= {db} [{spec}]"));
    }
    let mu = stieltjes_moments(9, &CoeffSpec::Symbolic)?;
    let mut ok = true;
    for k in 0..=n.min(4) {
        let csum = (0..=k as u32).fold(MultiPoly::zero(), |a, i| a + MultiPoly::c(i));
        ok &= mu.h(k + 1, k).unwrap() == &csum * &CoeffSpec::Symbolic.lam_product(k as u32)?;
    }
    c.check(ok, format!("h(n+1,n) = (c0+...+cn) l1...ln for n <= {} [symbolic]", n.min(4)));
    Ok(())
}

fn inverse_matrices(c: &mut Checks, n: usize) -> Result<()> {
    for spec in [CoeffSpec::Symbolic, CoeffSpec::Catalan, CoeffSpec::Fibonacci] {
        let b = bound(&spec, n, 4);
        let basis = generate_basis(b, &spec)?;
        let mu = stieltjes_moments(2 * b, &spec)?;
        let ok = (0..=b).map(|k| basis_inverse_check(k, &basis, &mu)).collect::<Result<Vec<_>>>()?;
        c.check(ok.iter().all(|&v| v), format!("||h(n,k)/(l1...lk)|| * ||a(n,k)|| = I for sizes <= {} [{spec}]", b + 1));
    }
    Ok(())
}

fn convergent_ratio(c: &mut Checks, n: usize) -> Result<()> {
    for spec in [CoeffSpec::Symbolic, CoeffSpec::Catalan, CoeffSpec::Fibonacci] {
        let b = bound(&spec, n, 3);
        let ok = (0..=b).map(|k| contfrac::convergent_qstar_identity(k, &spec)).collect::<Result<Vec<_>>>()?;
        c.check(ok.iter().all(|&v| v), format!("J^(n) Q_(n+1)* = S(Q_n*) for n <= {b} [{spec}]"));
    }
    Ok(())
}

fn convergent_differences(c: &mut Checks, n: usize) -> Result<()> {
    for spec in [CoeffSpec::Symbolic, CoeffSpec::Catalan, CoeffSpec::Fibonacci] {
        let b = bound(&spec, n, 3);
        let ok = (1..=b).map(|k| contfrac::convergent_difference(k, &spec)).collect::<Result<Vec<_>>>()?;
        c.check(
            ok.iter().all(|&v| v),
            format!("(J^(n) - J^(n-1)) Q_n* Q_(n+1)* = l1...ln x^2n for 1 <= n <= {b} [{spec}]"),
        );
    }
    Ok(())
}

fn parse_word(s: &str) -> HeapWord {
    s.parse().expect("literal heap word")
}

fn pyramids(c: &mut Checks, n: usize, mode: Parallelism) -> Result<()> {
    let w1 = parse_word("m0 d2 m2 d1 m1 d2 m3 m3");
    let w2 = parse_word("m3 d2 m0 d1 m3 m1 m2 d2");
    let canon = canonical_word(&settle(&w1)).to_string();
    c.check(heaps_equivalent(&w1, &w2), format!("{w1} and {w2} settle to the same heap"));
    c.check(canon == "m0 d2 m3 d1 m2 m3 m1 d2", format!("canonical word of {w1} is {canon}"));
    let word: PathWord = "a0 c1 a1 b2 c1 a1 a2 b3 b2 b1 c0 a0 b1".parse()?;
    let image = motzkin_to_heap(&word)?;
    c.check(
        heaps_equivalent(&image, &parse_word("d1 d3 m0 d2 m1 d2 m1 d1")),
        format!("path {word} maps to {image}, equivalent to d1 d3 m0 d2 m1 d2 m1 d1"),
    );
    c.check(heap_to_motzkin(&settle(&image))? == word.to_path(), "heap of that path rebuilds the path");

    let r = heaps::check_path_heap_bijection(n, mode)?;
    c.check(
        r.holds(),
        format!("{} closed paths of length 1..={n}: pyramid with summit m0/d1, support within height, Dyck to dimers, 2d+m steps, injective, inverted uniquely", r.paths),
    );
    for f in r.failures.iter().take(5) {
        c.lines.push(format!("     {f}"));
    }
    let len = n.min(7);
    let t = heaps::trace_oracle(4, len, mode);
    c.check(
        t.agrees(),
        format!("heap equivalence = commutation closure on {} words of length <= {len} over 4 columns ({} classes)", t.words, t.classes),
    );
    Ok(())
}

fn reconstruction(c: &mut Checks, n: usize) -> Result<()> {
    let spec = CoeffSpec::Fibonacci;
    let basis = generate_basis(n, &spec)?;
    let mu = stieltjes_moments(2 * n, &spec)?;
    let mut ok_norm = true;
    for k in 0..=n {
        let p = basis.get(k).unwrap();
        ok_norm &= scalar_product(p, p, &mu)? == int(if k % 2 == 0 { 1 } else { -1 });
    }
    c.check(ok_norm, format!("<P_k, P_k> = (-1)^k for k <= {n}"));
    let mut ok = true;
    for m in 0..=n {
        let coeffs = expand_in_basis(&xpow(m), &basis, &mu)?;
        for (k, a) in coeffs.iter().enumerate() {
            let sign = int(if k % 2 == 0 { 1 } else { -1 });
            ok &= *a == &sign * &scalar_product(&xpow(m), basis.get(k).unwrap(), &mu)?;
        }
    }
    c.check(ok, format!("x^n = sum (-1)^k <x^n, P_k> P_k reconstructs exactly for n <= {n}"));
    Ok(())
}

fn positivity(c: &mut Checks, n: usize) -> Result<()> {
    let cat = stieltjes_moments(2 * n, &CoeffSpec::Catalan)?;
    let fib = stieltjes_moments(2 * n, &CoeffSpec::Fibonacci)?;
    let (mut minors_one, mut eigen_agree, mut fib_nondeg) = (true, true, true);
    for k in 0..=n {
        let a = HankelMatrix::plain(k, &cat)?;
        let v = hankel_positivity(&a)?;
        minors_one &= v.positive_definite && v.minors.iter().all(|m| *m == Rational::from_integer(1.into()));
        eigen_agree &= numeric::jacobi_eigen_positivity(&a)? == v.positive_definite;
        let f = HankelMatrix::plain(k, &fib)?;
        let fv = hankel_positivity(&f)?;
        fib_nondeg &= fv.nondegenerate;
        eigen_agree &= numeric::jacobi_eigen_positivity(&f)? == fv.positive_definite;
    }
    c.check(minors_one, format!("Catalan A_n has all leading minors 1 for n <= {n}"));
    c.check(fib_nondeg, format!("Fibonacci A_n is nondegenerate for n <= {n}"));
    c.check(eigen_agree, format!("Jacobi eigenvalue signs agree with the minor test for n <= {n}"));
    Ok(())
}

fn generating_function(c: &mut Checks, n: usize) -> Result<()> {
    c.check(numeric::gf_coeff_check(n)?, format!("[t^n] 1/(1 - x t - t^2) = P_n for n <= {n}"));
    Ok(())
}

fn signed_catalan(c: &mut Checks, n: usize, mode: Parallelism) -> Result<()> {
    for spec in SPECS {
        let want = |k: usize| match spec {
            CoeffSpec::Fibonacci => special::fibonacci_moment(k),
            _ => special::catalan_moment(k),
        };
        let mu = stieltjes_moments(n, &spec)?;
        let ok = (0..=n).all(|k| mu.mu()[k] == MultiPoly::constant(want(k)));
        c.check(ok, format!("mu_2m = {}C_m, odd moments 0, for n <= {n} [{spec}]", if matches!(spec, CoeffSpec::Fibonacci) { "(-1)^m " } else { "" }));
        let top = n.min(paths::MAX_ENUM_STEPS);
        let by_paths = exec::map_range(mode, top + 1, |k| paths::moments_by_paths(k, &spec));
        let ok = all_ok(by_paths.into_iter().enumerate().map(|(k, m)| m.map(|m| (k, m))).collect(), |(k, m)| *m == MultiPoly::constant(want(*k)))?;
        c.check(ok, format!("closed path sums give the same values for n <= {top} [{spec}]"));
    }
    Ok(())
}

fn fibonacci_determinants(c: &mut Checks, n: usize) -> Result<()> {
    let fib = stieltjes_moments(2 * n + 2, &CoeffSpec::Fibonacci)?;
    let cat = stieltjes_moments(2 * n + 2, &CoeffSpec::Catalan)?;
    let mut ok_f = true;
    let mut ok_c = true;
    for k in 0..=n {
        ok_f &= hankel_dets(k, &fib)?.0 == int(special::fibonacci_hankel_det(k));
        ok_c &= hankel_dets(k, &cat)?.0.is_one();
    }
    c.check(ok_f, format!("d_n = (-1)^ceil(n/2) for n <= {n} [Fibonacci]"));
    c.check(ok_c, format!("d_n = 1 for n <= {n} [Catalan]"));
    let basis = generate_basis(n, &CoeffSpec::Fibonacci)?;
    let mut ok = true;
    for k in 0..=n {
        let det = bordered_moment_det(k, &fib)?;
        ok &= det.scale(&int(special::fibonacci_determinant_prefactor(k))) == *basis.get(k).unwrap();
    }
    c.check(ok, format!("P_n = (-1)^ceil((n-1)/2) * bordered nu-determinant for n <= {n}"));
    Ok(())
}

fn series(c: &mut Checks, order: usize) -> Result<()> {
    let cat = j_series(order, &CoeffSpec::Catalan)?;
    let fib = j_series(order, &CoeffSpec::Fibonacci)?;
    let ok_c = (0..=order).all(|k| *cat.coeff(k) == MultiPoly::constant(special::catalan_moment(k)));
    let ok_f = (0..=order).all(|k| *fib.coeff(k) == MultiPoly::constant(special::fibonacci_moment(k)));
    c.check(ok_c, format!("1/(1 - x^2/(1 - x^2/...)) = sum C_m x^2m through x^{order}"));
    c.check(ok_f, format!("1/(1 + x^2/(1 + x^2/...)) = sum (-1)^m C_m x^2m through x^{order}"));
    let swap = (0..=order).all(|k| {
        let sign = if k % 4 == 2 { -1 } else { 1 };
        *fib.coeff(k) == cat.coeff(k) * &int(sign)
    });
    c.check(swap, "Fibonacci series is the Catalan series with x^2 -> -x^2");
    for spec in [CoeffSpec::Catalan, CoeffSpec::Fibonacci, CoeffSpec::Symbolic] {
        let o = bound(&spec, order, 6);
        c.check(
            contfrac::functional_equation_holds(o, &spec)?,
            format!("L (1 - c0 x - l1 x^2 S(L)) = 1 through x^{o} [{spec}]"),
        );
    }
    Ok(())
}

fn shifted_vanish(c: &mut Checks, n: usize) -> Result<()> {
    for (spec, b) in [(CoeffSpec::Fibonacci, n), (CoeffSpec::Catalan, n + 1)] {
        let mu = stieltjes_moments(2 * b + 1, &spec)?;
        let ok = (0..=b).map(|k| hankel_dets(k, &mu).map(|(_, chi)| chi.is_zero())).collect::<Result<Vec<_>>>()?;
        c.check(ok.iter().all(|&v| v), format!("chi_n = 0 for n <= {b} [{spec}]"));
    }
    Ok(())
}

fn power_expansions(c: &mut Checks) -> Result<()> {
    let basis = generate_basis(8, &CoeffSpec::Fibonacci)?;
    let mu = stieltjes_moments(16, &CoeffSpec::Fibonacci)?;
    for (m, want) in [(7, vec![0, -14, 0, 14, 0, -6, 0, 1]), (8, vec![14, 0, -28, 0, 20, 0, -7, 0, 1])] {
        let got = expand_in_basis(&xpow(m), &basis, &mu)?;
        let ok = got.len() == want.len() && got.iter().zip(&want).all(|(g, &w)| *g == int(w));
        let terms: Vec<String> = got
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(k, g)| if g.is_one() { format!("P{k}") } else { format!("{g}*P{k}") })
            .collect();
        c.check(ok, format!("x^{m} = {}", terms.join(" + ").replace("+ -", "- ")));
    }
    Ok(())
}

fn binet(c: &mut Checks, n: usize, mode: Parallelism) -> Result<()> {
    let r = numeric::binet_grid(n, mode)?;
    c.check(
        r.max_rel_error < 1e-9,
        format!("closed form matches P_n(x) on {} grid points, n <= {n} (relative error < 1e-9)", r.points),
    );
    Ok(())
}

fn integrals(c: &mut Checks, n: usize) -> Result<()> {
    for m in 0..=n {
        let r = numeric::catalan_integral(m)?;
        let want = special::catalan_number(m).to_f64().unwrap_or(f64::NAN);
        c.check((r.value - want).abs() < 1e-8, format!("4^(m+1)/(2 pi) int x^m sqrt((1-x)/x) = C_{m} = {want} within 1e-8"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_names_are_rejected() {
        assert!(run("T9.9", None).is_err());
        assert!(run_many(&["T9.9".into()], None, 1).is_err());
    }

    #[test]
    fn cheap_verifiers_pass() {
        for name in ["E5.20", "E5.17", "I5", "P5.1", "I3", "E5.23", "E5.27", "T3.4", "T3.5"] {
            let r = run(name, None).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn small_bounds_pass() {
        for name in VERIFIERS {
            let r = run(name, Some(3)).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn jobs_do_not_change_output() {
        let names: Vec<String> = ["E5.20", "I5", "T3.3"].iter().map(|s| s.to_string()).collect();
        let a = run_many(&names, Some(4), 1).unwrap();
        let b = run_many(&names, Some(4), 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn report_layout() {
        let r = run("E5.20", None).unwrap();
        let text = r.to_string();
        assert!(text.starts_with("E5.20 PASS (nmax=8)"));
        assert!(text.contains("x^7 = -14*P1 + 14*P3 - 6*P5 + P7"), "{text}");
        assert!(r.first_failure().is_none());
    }
}
