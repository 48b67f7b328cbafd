use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use heaporth_core::contfrac::{convergent, j_series};
use heaporth_core::heaps::{self, canonical_word, heap_to_motzkin, heaps_equivalent, motzkin_to_heap, settle, HeapWord};
use heaporth_core::ortho::{expand_in_basis, generate_basis, stieltjes_moments, CoeffSpec, HankelMatrix};
use heaporth_core::paths::{self, MotzkinPath, PathWord};
use heaporth_core::{latex, parse_poly, verify, Error, MultiPoly, UniPoly};

#[derive(Parser)]
#[command(name = "heaporth", version, about = "Orthogonal polynomials, lattice paths and heaps of pieces, in exact arithmetic")]
struct Cli {
    /// Coefficient spec: symbolic, catalan, fib, or custom:<file.json>
    #[arg(long, global = true, default_value = "symbolic")]
    spec: String,

    #[arg(long, global = true, value_enum, env = "HEAPORTH_FORMAT", default_value = "plain")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis polynomial Q_n
    Poly {
        #[arg(short, long)]
        n: usize,
        /// Print Q_0 … Q_n instead of Q_n alone
        #[arg(long)]
        all: bool,
    },
    /// Print the moments mu_0 … mu_nmax
    Moments {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Print a Hankel moment matrix and its determinant
    Hankel {
        #[arg(long, value_enum, default_value = "d")]
        which: Which,
        #[arg(short, long)]
        n: usize,
    },
    /// Expand a polynomial in x in the basis
    Expand {
        #[arg(long)]
        target: String,
    },
    /// Print a J-fraction convergent and its series
    Cf {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Heap words: settle, canonical form, equivalence, and the path correspondence
    Heap {
        #[command(subcommand)]
        op: HeapOp,
    },
    /// Motzkin paths: enumeration, letter words and weights
    Path {
        #[command(subcommand)]
        op: PathOp,
    },
    /// Check named identities (or ALL); exits 1 on the first failure
    Verify {
        #[arg(required = true)]
        names: Vec<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Number of verifiers run concurrently
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    D,
    Chi,
}

#[derive(Subcommand)]
enum HeapOp {
    /// Settle a heap word, e.g. `heap settle m0 d2 m2`
    Settle { word: Vec<String> },
    /// Canonical word of a heap word
    Canon { word: Vec<String> },
    /// Whether two quoted heap words give the same heap
    Eq { first: String, second: String },
    /// Heap word of a closed path word, e.g. `heap from-path a0 c1 b1`
    FromPath { word: Vec<String> },
    /// Closed Motzkin path whose image is the given heap word
    ToPath { word: Vec<String> },
}

#[derive(Subcommand)]
enum PathOp {
    /// All n-step paths from level `from` to level `to`
    Enum {
        #[arg(long, default_value_t = 0)]
        from: u32,
        #[arg(long, default_value_t = 0)]
        to: u32,
        #[arg(short, long)]
        n: usize,
    },
    /// Letter word of a path given as `NE,E,SE@r`
    Word { path: String },
    /// Weight of a letter word such as `a0 c1 b1`
    Weight { word: Vec<String> },
}

type CliResult = Result<String, Error>;

fn load_spec(s: &str) -> Result<CoeffSpec, Error> {
    match s.strip_prefix("custom:") {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            CoeffSpec::from_json(&v)
        }
        None => CoeffSpec::parse_named(s),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn basis_letter(spec: &CoeffSpec) -> &'static str {
    if matches!(spec, CoeffSpec::Fibonacci) {
        "P"
    } else {
        "Q"
    }
}

fn poly(spec: &CoeffSpec, n: usize, all: bool, fmt: Format) -> CliResult {
    let basis = generate_basis(n, spec)?;
    let range = if all { 0..=n } else { n..=n };
    let l = basis_letter(spec);
    Ok(match fmt {
        Format::Plain if !all => basis.get(n).unwrap().to_string(),
        Format::Plain => range.map(|k| format!("{l}_{k} = {}", basis.get(k).unwrap())).collect::<Vec<_>>().join("\n"),
        Format::Json if !all => pretty(&basis.get(n).unwrap().to_json()),
        Format::Json => pretty(&basis.to_json()),
        Format::Latex => {
            let rows: Vec<(String, String)> =
                range.map(|k| (format!("{l}_{{{k}}}(x)"), latex::uni(basis.get(k).unwrap()))).collect();
            latex::display(&latex::aligned(&rows))
        }
    })
}

fn moments(spec: &CoeffSpec, nmax: usize, fmt: Format) -> CliResult {
    let mu = stieltjes_moments(nmax, spec)?;
    Ok(match fmt {
        Format::Plain => mu.mu().iter().enumerate().map(|(k, m)| format!("mu_{k} = {m}")).collect::<Vec<_>>().join("\n"),
        Format::Json => serde_json::to_string(&mu.to_json()).expect("serialisable"),
        Format::Latex => {
            let rows: Vec<(String, String)> =
                mu.mu().iter().enumerate().map(|(k, m)| (format!("\\mu_{{{k}}}"), latex::multi(m))).collect();
            latex::display(&latex::aligned(&rows))
        }
    })
}

fn hankel(spec: &CoeffSpec, which: Which, n: usize, fmt: Format) -> CliResult {
    let mu = stieltjes_moments(2 * n + 1, spec)?;
    let (m, name, tex) = match which {
        Which::D => (HankelMatrix::plain(n, &mu)?, "d", "d"),
        Which::Chi => (HankelMatrix::shifted(n, &mu)?, "chi", "\\chi"),
    };
    let det = m.det()?;
    Ok(match fmt {
        Format::Plain => {
            let mut out: Vec<String> = m
                .entries()
                .iter()
                .map(|r| format!("[{}]", r.iter().map(MultiPoly::to_string).collect::<Vec<_>>().join(", ")))
                .collect();
            out.push(format!("{name}_{n} = {det}"));
            out.join("\n")
        }
        Format::Json => pretty(&json!({
            "which": name,
            "n": n,
            "matrix": m.entries().iter().map(|r| r.iter().map(MultiPoly::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "det": det.to_json(),
        })),
        Format::Latex => latex::display(&format!("{tex}_{{{n}}} = \\det {} = {}", latex::matrix(m.entries()), latex::multi(&det))),
    })
}

fn expand(spec: &CoeffSpec, target: &str, fmt: Format) -> CliResult {
    let p = UniPoly::from_multi(&parse_poly(target)?);
    let deg = p.degree().unwrap_or(0);
    let basis = generate_basis(deg, spec)?;
    let mu = stieltjes_moments(2 * deg + 1, spec)?;
    let coeffs = expand_in_basis(&p, &basis, &mu)?;
    let l = basis_letter(spec);
    Ok(match fmt {
        Format::Plain => {
            let mut line = String::new();
            for (k, a) in coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                let (neg, mag) = a.signed_parts();
                let body = mag.to_string();
                let term = if mag.is_one() {
                    format!("{l}{k}")
                } else if mag.len() > 1 {
                    format!("({body})*{l}{k}")
                } else {
                    format!("{body}*{l}{k}")
                };
                match (line.is_empty(), neg) {
                    (true, true) => line.push('-'),
                    (false, true) => line.push_str(" - "),
                    (false, false) => line.push_str(" + "),
                    (true, false) => {}
                }
                line.push_str(&term);
            }
            if line.is_empty() {
                line.push('0');
            }
            format!("{p} = {line}")
        }
        Format::Json => pretty(&json!({
            "target": p.to_json(),
            "coeffs": coeffs.iter().map(MultiPoly::to_json).collect::<Vec<_>>(),
        })),
        Format::Latex => {
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(k, a)| format!("\\left({}\\right) {l}_{{{k}}}", latex::multi(a)))
                .collect();
            latex::display(&format!("{} = {}", latex::uni(&p), terms.join(" + ")))
        }
    })
}

fn cf(spec: &CoeffSpec, depth: usize, order: Option<usize>, fmt: Format) -> CliResult {
    let order = order.unwrap_or(2 * depth + 1);
    let j = convergent(depth, spec)?.value;
    let series = j.series(order)?;
    let full = j_series(order, spec)?;
    Ok(match fmt {
        Format::Plain => {
            let mut out = format!("J^({depth}) = {j}\nseries: {series}");
            if full != series {
                out.push_str(&format!("\nmoments: {full}"));
            }
            out
        }
        Format::Json => pretty(&json!({
            "depth": depth,
            "num": j.num().to_json(),
            "den": j.den().to_json(),
            "series": series.to_json(),
        })),
        Format::Latex => latex::display(&latex::aligned(&[
            (format!("J^{{({depth})}}(x)"), latex::cfrac(depth, spec)?),
            (String::new(), latex::series(&series)),
        ])),
    })
}

fn join(word: &[String]) -> String {
    word.join(" ")
}

fn heap_cmd(op: &HeapOp, fmt: Format) -> CliResult {
    let heap_out = |h: &heaps::Heap| match fmt {
        Format::Json => pretty(&h.to_json()),
        _ => format!("{}{}", h.to_ascii(), canonical_word(h)),
    };
    Ok(match op {
        HeapOp::Settle { word } => heap_out(&settle(&join(word).parse()?)),
        HeapOp::Canon { word } => {
            let c = canonical_word(&settle(&join(word).parse()?));
            match fmt {
                Format::Json => json!({ "word": c.to_string() }).to_string(),
                _ => c.to_string(),
            }
        }
        HeapOp::Eq { first, second } => {
            let (a, b): (HeapWord, HeapWord) = (first.parse()?, second.parse()?);
            let eq = heaps_equivalent(&a, &b);
            match fmt {
                Format::Json => json!({ "equivalent": eq }).to_string(),
                _ => if eq { "equivalent" } else { "not equivalent" }.to_string(),
            }
        }
        HeapOp::FromPath { word } => {
            let w: PathWord = join(word).parse()?;
            let image = motzkin_to_heap(&w)?;
            match fmt {
                Format::Json => pretty(&json!({ "word": image.to_string(), "heap": settle(&image).to_json() })),
                _ => format!("{image}\n{}", heap_out(&settle(&image))),
            }
        }
        HeapOp::ToPath { word } => {
            let h = settle(&join(word).parse()?);
            let p = heap_to_motzkin(&h)?;
            let w = paths::path_word(&p);
            match fmt {
                Format::Json => json!({ "path": p.to_string(), "word": w.to_string() }).to_string(),
                _ => format!("{p}\n{w}"),
            }
        }
    })
}

fn path_cmd(spec: &CoeffSpec, op: &PathOp, fmt: Format) -> CliResult {
    Ok(match op {
        PathOp::Enum { from, to, n } => {
            let all = paths::enumerate_paths(*from, *to, *n)?;
            match fmt {
                Format::Json => pretty(&json!({ "paths": all.iter().map(|p| p.to_string()).collect::<Vec<_>>() })),
                _ => all.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n"),
            }
        }
        PathOp::Word { path } => {
            let p: MotzkinPath = path.parse()?;
            let w = paths::path_word(&p);
            match fmt {
                Format::Json => json!({ "word": w.to_string() }).to_string(),
                _ => w.to_string(),
            }
        }
        PathOp::Weight { word } => {
            let w: PathWord = join(word).parse()?;
            let weight = paths::path_weight(&w, spec)?;
            match fmt {
                Format::Json => pretty(&weight.to_json()),
                Format::Latex => latex::display(&latex::multi(&weight)),
                Format::Plain => weight.to_string(),
            }
        }
    })
}

fn verify_cmd(names: &[String], nmax: Option<usize>, jobs: usize, fmt: Format) -> Result<(String, Option<String>), Error> {
    let names: Vec<String> = if names.iter().any(|n| n == "ALL") {
        verify::VERIFIERS.iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    let reports = verify::run_many(&names, nmax, jobs)?;
    let failure = reports
        .iter()
        .find(|r| !r.passed)
        .map(|r| format!("{}: {}", r.name, r.first_failure().unwrap_or("failed")));
    let passed = reports.iter().filter(|r| r.passed).count();
    let out = match fmt {
        Format::Json => pretty(&json!({
            "reports": reports.iter().map(|r| json!({
                "name": r.name, "nmax": r.nmax, "passed": r.passed, "lines": r.lines,
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            s.push_str(&format!("{passed}/{} verifiers passed", reports.len()));
            s
        }
    };
    Ok((out, failure))
}

fn run(cli: &Cli) -> Result<(String, Option<String>), Error> {
    let fmt = cli.format;
    let spec = || load_spec(&cli.spec);
    let out = match &cli.command {
        Command::Poly { n, all } => poly(&spec()?, *n, *all, fmt)?,
        Command::Moments { nmax } => moments(&spec()?, *nmax, fmt)?,
        Command::Hankel { which, n } => hankel(&spec()?, *which, *n, fmt)?,
        Command::Expand { target } => expand(&spec()?, target, fmt)?,
        Command::Cf { depth, order } => cf(&spec()?, *depth, *order, fmt)?,
        Command::Heap { op } => heap_cmd(op, fmt)?,
        Command::Path { op } => path_cmd(&spec()?, op, fmt)?,
        Command::Verify { names, nmax, jobs } => return verify_cmd(names, *nmax, *jobs, fmt),
    };
    Ok((out, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, failure)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(io::stdout(), "{out}");
            match failure {
                Some(f) => {
                    eprintln!("verification failed: {f}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e @ Error::Parse(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
