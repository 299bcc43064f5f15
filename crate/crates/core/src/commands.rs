//! Command implementations behind the `ispw` binary. Each returns the text to
//! print and the process exit code.

use serde::Serialize;

use crate::classify::{classify, classify_integers, ClassificationReport};
use crate::error::{Error, Result};
use crate::expr::{
    elaborate, elaborate_finite, elaborate_ideal, elaborate_module, parse_ideal, parse_module, parse_ring, Elaborated,
    IdealExpr,
};
use crate::factor::{ClassMode, Factorization};
use crate::integers::{int_factor_isp, int_factor_primes, int_factor_sp, int_factor_zpui, is_prime};
use crate::lattice::all_ideals;
use crate::ring::Ring;
use crate::theorems::{check_theorem, run_suite, Instance, Outcome, TheoremId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

/// Upper end of the range the integer certificate factors.
pub const INTEGER_BOUND: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct Options {
    pub json: bool,
    pub max_size: usize,
    /// Worker threads for classification; 0 means rayon's default.
    pub threads: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            json: false,
            max_size: 4096,
            threads: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub code: i32,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        CommandOutput { text, code: EXIT_OK }
    }

    fn with_code(text: String, code: i32) -> Self {
        CommandOutput { text, code }
    }

    pub fn from_error(err: &Error) -> Self {
        let code = if err.is_syntax() { EXIT_PARSE } else { EXIT_SEMANTIC };
        CommandOutput {
            text: format!("error: {err}\n"),
            code,
        }
    }
}

fn run(f: impl FnOnce() -> Result<CommandOutput>) -> CommandOutput {
    f().unwrap_or_else(|e| CommandOutput::from_error(&e))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Reads a corpus file: one expression per line, `#` comments and blank
/// lines skipped.
pub fn read_corpus(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

fn classify_expr(expr: &str, opts: &Options) -> Result<ClassificationReport> {
    match elaborate(&parse_ring(expr)?, opts.max_size)? {
        Elaborated::Finite(r) => classify(&r, opts.threads),
        Elaborated::Integers => classify_integers(INTEGER_BOUND),
    }
}

pub fn cmd_classify(expr: &str, opts: &Options) -> CommandOutput {
    run(|| {
        let report = classify_expr(expr, opts)?;
        Ok(CommandOutput::ok(if opts.json {
            to_json(&report)
        } else {
            report.render_text()
        }))
    })
}

/// Classifies every corpus expression; reports stay in corpus order.
pub fn cmd_classify_corpus(exprs: &[String], opts: &Options) -> CommandOutput {
    run(|| {
        let reports = exprs
            .iter()
            .map(|e| classify_expr(e, opts))
            .collect::<Result<Vec<_>>>()?;
        Ok(CommandOutput::ok(if opts.json {
            to_json(&reports)
        } else {
            reports
                .iter()
                .map(ClassificationReport::render_text)
                .collect::<Vec<_>>()
                .join("\n")
        }))
    })
}

#[derive(Serialize)]
struct IdealRow {
    literal: String,
    size: usize,
    elements: Vec<usize>,
    prime: bool,
    maximal: bool,
    radical: bool,
    regular: bool,
    invertible: bool,
}

pub fn cmd_ideals(expr: &str, opts: &Options) -> CommandOutput {
    run(|| {
        let ring = finite_ring(expr, opts, "Zint has infinitely many ideals")?;
        let lat = all_ideals(&ring);
        let rows: Vec<IdealRow> = lat
            .ids()
            .map(|i| IdealRow {
                literal: lat.get(i).literal(),
                size: lat.get(i).len(),
                elements: lat.get(i).elements().collect(),
                prime: lat.is_prime(i),
                maximal: lat.is_maximal(i),
                radical: lat.is_radical(i),
                regular: lat.is_regular(i),
                invertible: lat.is_invertible(i),
            })
            .collect();
        if opts.json {
            #[derive(Serialize)]
            struct Listing {
                ring: String,
                ideals: Vec<IdealRow>,
            }
            return Ok(CommandOutput::ok(to_json(&Listing {
                ring: ring.provenance().to_string(),
                ideals: rows,
            })));
        }
        let mut out = format!("ring: {}\nideals: {}\n", ring.provenance(), rows.len());
        for r in &rows {
            let flags: Vec<&str> = [
                (r.prime, "prime"),
                (r.maximal, "maximal"),
                (r.radical, "radical"),
                (r.regular, "regular"),
                (r.invertible, "invertible"),
            ]
            .iter()
            .filter(|(b, _)| *b)
            .map(|(_, s)| *s)
            .collect();
            out += &format!("{}  size {}  {:?}  [{}]\n", r.literal, r.size, r.elements, flags.join(", "));
        }
        Ok(CommandOutput::ok(out))
    })
}

fn finite_ring(expr: &str, opts: &Options, zint_message: &str) -> Result<Ring> {
    match elaborate(&parse_ring(expr)?, opts.max_size)? {
        Elaborated::Finite(r) => Ok(r),
        Elaborated::Integers => Err(Error::Semantic(zint_message.into())),
    }
}

#[derive(Serialize)]
struct FactorJson {
    ring: String,
    ideal: String,
    mode: String,
    factorization: Option<FactorPartsJson>,
}

#[derive(Serialize)]
struct FactorPartsJson {
    invertible: String,
    parts: Vec<String>,
}

fn render_factor(
    opts: &Options,
    ring: &str,
    ideal: &str,
    mode: ClassMode,
    found: Option<(String, Vec<String>)>,
) -> CommandOutput {
    let code = if found.is_some() { EXIT_OK } else { EXIT_FALSE };
    let text = if opts.json {
        to_json(&FactorJson {
            ring: ring.into(),
            ideal: ideal.into(),
            mode: mode.name().into(),
            factorization: found.map(|(invertible, parts)| FactorPartsJson { invertible, parts }),
        })
    } else {
        match found {
            Some((j, parts)) => format!("J = {j}, H = [{}]\n", parts.join(", ")),
            None => "none\n".into(),
        }
    };
    CommandOutput::with_code(text, code)
}

fn integer_ideal(i: &IdealExpr) -> Result<u64> {
    use crate::expr::ElemLit;
    let gens = i
        .0
        .iter()
        .map(|l| match l {
            ElemLit::Int(k) => Ok(*k),
            ElemLit::Tuple(_) => Err(Error::BadElement {
                literal: l.to_string(),
                ring: "Zint".into(),
                reason: "expected an integer".into(),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(gens.into_iter().fold(0, crate::integers::gcd))
}

/// Factorization of one ideal in the given mode. ISP and SP modes only
/// accept regular ideals.
pub fn cmd_factor(expr: &str, ideal: &str, mode: &str, opts: &Options) -> CommandOutput {
    run(|| {
        let mode: ClassMode = mode.parse()?;
        let iexpr = parse_ideal(ideal)?;
        match elaborate(&parse_ring(expr)?, opts.max_size)? {
            Elaborated::Integers => {
                let n = integer_ideal(&iexpr)?;
                if mode.regular_only() && n == 0 {
                    return Err(Error::Semantic("ideal(0) is not a regular ideal".into()));
                }
                let lit = |k: u64| format!("ideal({k})");
                let (j, parts) = match mode {
                    ClassMode::Isp | ClassMode::Strong => int_factor_isp(n)?,
                    ClassMode::Sp | ClassMode::Ssp => (1, int_factor_sp(n)?),
                    ClassMode::Zpi => (1, int_factor_primes(n)?),
                    ClassMode::Zpui => int_factor_zpui(n)?,
                };
                let found = Some((lit(j), parts.into_iter().map(lit).collect()));
                Ok(render_factor(opts, "Zint", &lit(n), mode, found))
            }
            Elaborated::Finite(ring) => {
                let target = elaborate_ideal(&ring, &iexpr)?;
                if !target.is_proper() {
                    return Err(Error::NotProper(target.literal()));
                }
                if mode.regular_only() && !target.is_regular() {
                    return Err(Error::Semantic(format!(
                        "{} is not a regular ideal; mode {mode} only factors regular ideals",
                        target.literal()
                    )));
                }
                let lat = all_ideals(&ring);
                let id = lat.id_of(&target).expect("ideal is in its lattice");
                let found = lat.factor(id, mode.factor_mode()).map(|f| {
                    let f = Factorization::from_ids(&lat, &f);
                    (
                        f.invertible.literal(),
                        f.parts.iter().map(|p| p.literal()).collect(),
                    )
                });
                Ok(render_factor(opts, ring.provenance(), &target.literal(), mode, found))
            }
        }
    })
}

/// Builds an instance from a ring expression and an optional ideal or
/// module expression.
pub fn parse_instance(parts: &[String], opts: &Options) -> Result<Instance> {
    let Some((ring_text, rest)) = parts.split_first() else {
        return Err(Error::Semantic("a theorem check needs an instance".into()));
    };
    let ring = elaborate_finite(&parse_ring(ring_text)?, opts.max_size)?;
    match rest {
        [] => Ok(Instance::ring(&ring)),
        [extra] if extra.trim_start().starts_with("mod") => {
            let m = elaborate_module(&ring, &parse_module(extra)?)?;
            Ok(Instance::with_module(&m))
        }
        [extra] => {
            let i = elaborate_ideal(&ring, &parse_ideal(extra)?)?;
            Ok(Instance::with_ideal(&i))
        }
        _ => Err(Error::Semantic("expected a ring and at most one ideal or module".into())),
    }
}

pub fn cmd_check(theorem: &str, instance: &[String], opts: &Options) -> CommandOutput {
    run(|| {
        let id: TheoremId = theorem.parse()?;
        let inst = parse_instance(instance, opts)?;
        let check = check_theorem(id, &inst)?;
        let code = if check.outcome == Outcome::Fail { EXIT_FALSE } else { EXIT_OK };
        let text = if opts.json {
            to_json(&check)
        } else {
            let mut s = format!("{} [{}]: {}\n", check.id, check.instance, check.outcome);
            for line in &check.transcript {
                s += &format!("  {line}\n");
            }
            s
        };
        Ok(CommandOutput::with_code(text, code))
    })
}

/// Runs the theorem suite over corpus rings, optionally restricted to one
/// theorem.
pub fn cmd_check_corpus(theorem: Option<&str>, exprs: &[String], opts: &Options) -> CommandOutput {
    run(|| {
        let filter: Option<TheoremId> = theorem.map(str::parse).transpose()?;
        let rings = exprs
            .iter()
            .map(|e| elaborate_finite(&parse_ring(e)?, opts.max_size))
            .collect::<Result<Vec<_>>>()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Semantic(format!("cannot start worker pool: {e}")))?;
        let mut report = pool.install(|| run_suite(&rings))?;
        if let Some(id) = filter {
            report.checks.retain(|c| c.id == id.as_str());
            let count = |o: Outcome| report.checks.iter().filter(|c| c.outcome == o).count();
            report.passed = count(Outcome::Pass);
            report.failed = count(Outcome::Fail);
            report.inapplicable = count(Outcome::Inapplicable);
        }
        let code = if report.failed > 0 { EXIT_FALSE } else { EXIT_OK };
        let text = if opts.json {
            to_json(&report)
        } else {
            let mut s = String::new();
            for c in &report.checks {
                s += &format!("{} [{}]: {}\n", c.id, c.instance, c.outcome);
            }
            s += &format!(
                "checks: {}, pass: {}, fail: {}, inapplicable: {}\n",
                report.checks.len(),
                report.passed,
                report.failed,
                report.inapplicable
            );
            s
        };
        Ok(CommandOutput::with_code(text, code))
    })
}

#[derive(Serialize)]
struct SpecRow {
    literal: String,
    elements: Vec<usize>,
    maximal: bool,
}

/// Prime spectrum in canonical order.
pub fn cmd_spec(expr: &str, opts: &Options) -> CommandOutput {
    run(|| match elaborate(&parse_ring(expr)?, opts.max_size)? {
        Elaborated::Integers => {
            let small: Vec<u64> = (2..50).filter(|&p| is_prime(p)).collect();
            let text = if opts.json {
                #[derive(Serialize)]
                struct IntSpec {
                    ring: &'static str,
                    primes: &'static str,
                    sample: Vec<u64>,
                }
                to_json(&IntSpec {
                    ring: "Zint",
                    primes: "ideal(0) and ideal(p) for every prime p",
                    sample: small,
                })
            } else {
                let lits: Vec<String> = small.iter().map(|p| format!("ideal({p})")).collect();
                format!(
                    "ring: Zint\nideal(0)  (minimal, not maximal)\n{}, ...  (maximal)\n",
                    lits.join(", ")
                )
            };
            Ok(CommandOutput::ok(text))
        }
        Elaborated::Finite(ring) => {
            let lat = all_ideals(&ring);
            let rows: Vec<SpecRow> = lat
                .primes()
                .into_iter()
                .map(|p| SpecRow {
                    literal: lat.get(p).literal(),
                    elements: lat.get(p).elements().collect(),
                    maximal: lat.is_maximal(p),
                })
                .collect();
            let text = if opts.json {
                #[derive(Serialize)]
                struct Spec {
                    ring: String,
                    primes: Vec<SpecRow>,
                }
                to_json(&Spec {
                    ring: ring.provenance().to_string(),
                    primes: rows,
                })
            } else {
                let mut s = format!("ring: {}\nprimes: {}\n", ring.provenance(), rows.len());
                for r in &rows {
                    s += &format!(
                        "{}  {:?}{}\n",
                        r.literal,
                        r.elements,
                        if r.maximal { "  maximal" } else { "" }
                    );
                }
                s
            };
            Ok(CommandOutput::ok(text))
        }
    })
}
