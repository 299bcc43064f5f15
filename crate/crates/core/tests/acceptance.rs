//! Acceptance criteria. Runs without the libtest harness so the PASS/FAIL
//! lines always reach the output; exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{brute_ideals, corpus_exprs, corpus_rings, factor_oracle, int_oracle, ring, small_rings, Alphabet};
use isp_workbench::classify::{check_implications, classify, Verdict};
use isp_workbench::commands::{cmd_classify_corpus, Options};
use isp_workbench::construct::module_ideal;
use isp_workbench::factor::FactorMode;
use isp_workbench::integers::int_factor_isp;
use isp_workbench::iso::{find_isomorphism, invariant_vector};
use isp_workbench::ideal::Ideal;
use isp_workbench::ring::{localize_at_prime, FiniteRing};
use isp_workbench::theorems::{run_suite, Outcome, TheoremId};
use isp_workbench::all_ideals;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn c1() -> Check {
    let start = Instant::now();
    let r = ring("trivext(Zmod(4), mod(2))");
    let report = classify(&r, 0).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(1))?;
    let isp = report.verdict("isp");
    ensure(isp.holds(), || format!("isp = {isp}"))?;
    ensure(report.verdict("strongly_isp") == Verdict::False, || "strongly ISP not false".into())?;
    let ce = report
        .property("strongly_isp")
        .and_then(|p| p.counterexample.clone())
        .ok_or("no counterexample")?;
    let zero_e: Vec<usize> = module_ideal(&r).map_err(|e| e.to_string())?.elements().collect();
    ensure(ce.elements == zero_e, || format!("counterexample {} is not 0∝E", ce.literal))?;
    Ok(format!("isp {isp}, strongly_isp false at {} (0∝E), {t:.2?}", ce.literal))
}

fn c2() -> Check {
    let start = Instant::now();
    let a = classify(&ring("trivext(Zmod(2), mod(2))"), 0).map_err(|e| e.to_string())?;
    let d = classify(&ring("dup(trivext(Zmod(2), mod(2)), ideal((0, 1)))"), 0).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(5))?;
    ensure(a.verdict("strongly_isp") == Verdict::True, || "F∝F not strongly ISP".into())?;
    ensure(d.verdict("strongly_isp") == Verdict::False, || "duplication strongly ISP".into())?;
    Ok(format!("F∝F strongly_isp true, (F∝F)⋈(0∝F) strongly_isp false, {t:.2?}"))
}

fn c3() -> Check {
    let start = Instant::now();
    let r = ring("dup(Zmod(8), ideal(2))");
    let report = classify(&r, 0).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(5))?;
    ensure(r.size() == 32, || format!("size {}", r.size()))?;
    let v = report.verdict("isp");
    ensure(v.holds(), || format!("isp = {v}"))?;
    Ok(format!("size 32, isp {v}, {t:.2?}"))
}

fn c4() -> Check {
    let start = Instant::now();
    let rings = corpus_rings();
    let big: Vec<_> = rings.iter().filter(|r| r.size() > 64).map(|r| r.provenance().to_string()).collect();
    ensure(big.is_empty(), || format!("rings over 64 elements: {big:?}"))?;
    let zmods = (2..=32).all(|n| rings.iter().any(|r| r.provenance() == format!("Zmod({n})")));
    ensure(zmods, || "corpus is missing some Zmod(n), 2 <= n <= 32".into())?;
    let report = run_suite(&rings).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(60))?;
    let mut per_id: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for c in &report.checks {
        let e = per_id.entry(c.id).or_default();
        match c.outcome {
            Outcome::Pass => e.0 += 1,
            Outcome::Fail => e.1 += 1,
            Outcome::Inapplicable => e.2 += 1,
        }
    }
    let failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.outcome == Outcome::Fail)
        .map(|c| format!("{} [{}]", c.id, c.instance))
        .collect();
    ensure(failures.is_empty(), || format!("failures: {failures:?}"))?;
    let missing: Vec<&str> = TheoremId::ALL
        .iter()
        .map(|id| id.as_str())
        .filter(|id| !per_id.contains_key(id))
        .collect();
    ensure(missing.is_empty(), || format!("never exercised: {missing:?}"))?;
    let unpassed: Vec<&str> = per_id.iter().filter(|(_, c)| c.0 == 0).map(|(id, _)| *id).collect();
    Ok(format!(
        "{} checks over {} rings: {} pass, 0 fail, {} inapplicable; ids never passing (always inapplicable): {:?}; {t:.2?}",
        report.checks.len(),
        rings.len(),
        report.passed,
        report.inapplicable,
        unpassed
    ))
}

fn c5() -> Check {
    let mut counts = (0, 0);
    for r in corpus_rings() {
        let rep = classify(&r, 0).map_err(|e| e.to_string())?;
        let vs = ["strongly_isp", "ssp", "zpi", "zpui"].map(|p| rep.verdict(p));
        ensure(vs.iter().all(|v| *v == vs[0]), || format!("{}: {vs:?}", r.provenance()))?;
        if vs[0] == Verdict::True {
            counts.0 += 1;
        } else {
            counts.1 += 1;
        }
    }
    Ok(format!("agreement on all corpus rings ({} true, {} false)", counts.0, counts.1))
}

fn c6() -> Check {
    let rings = corpus_rings();
    for r in &rings {
        let rep = classify(r, 0).map_err(|e| e.to_string())?;
        check_implications(&rep).map_err(|e| format!("{}: {e}", r.provenance()))?;
    }
    Ok(format!("diagram respected on {} rings", rings.len()))
}

fn c7() -> Check {
    let rings = small_rings();
    let mut compared = 0;
    for r in &rings {
        let lat = all_ideals(r);
        let ideals = brute_ideals(r);
        let ours: Vec<Vec<usize>> = lat.ideals().iter().map(|i| i.elements().collect()).collect();
        let theirs: Vec<Vec<usize>> = ideals.iter().map(|s| s.iter().copied().collect()).collect();
        ensure(ours == theirs, || format!("{}: lattice differs from brute force", r.provenance()))?;
        for t in lat.proper_ideals() {
            let engine = lat.factor(t, FactorMode::InvRadical);
            let oracle = factor_oracle(r, &ideals, &ideals[t], Alphabet::Radical);
            let agree = match (&engine, &oracle) {
                (Some(f), Some(parts)) => f.invertible == lat.whole() && &f.parts == parts,
                (None, None) => true,
                _ => false,
            };
            ensure(agree, || {
                format!("{} {}: engine {engine:?}, oracle {oracle:?}", r.provenance(), lat.get(t).literal())
            })?;
            compared += 1;
        }
    }
    Ok(format!("{compared} proper ideals over {} rings of size <= 16", rings.len()))
}

fn c8() -> Check {
    let start = Instant::now();
    for n in std::iter::once(0).chain(2..=10_000u64) {
        let (m, parts) = int_factor_isp(n).map_err(|e| e.to_string())?;
        ensure(m * parts.iter().product::<u64>() == n, || format!("{n}: product mismatch"))?;
        let oracle = int_oracle(n, false);
        ensure(oracle == Some((m, parts.clone())), || format!("{n}: got ({m}, {parts:?}), oracle {oracle:?}"))?;
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("n = 0 and 2..=10000 match the divisor-tuple oracle, {t:.2?}"))
}

fn c9() -> Check {
    let z12 = FiniteRing::zmod(12).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for (p, expect) in [(2, 4u64), (3, 3)] {
        let loc = localize_at_prime(&Ideal::principal(&z12, p)).map_err(|e| e.to_string())?;
        let target = FiniteRing::zmod(expect).map_err(|e| e.to_string())?;
        let (a, b) = (invariant_vector(&loc.ring), invariant_vector(&target));
        ensure(a == b, || format!("at ({p}): {a:?} vs {b:?}"))?;
        ensure(find_isomorphism(&loc.ring, &target).is_some(), || format!("at ({p}): no isomorphism"))?;
        notes.push(format!("at ({p}) ≅ Z/{expect}"));
    }
    Ok(notes.join(", "))
}

fn c10() -> Check {
    let exprs = corpus_exprs();
    let run = |threads| {
        cmd_classify_corpus(
            &exprs,
            &Options {
                json: true,
                threads,
                ..Options::default()
            },
        )
    };
    let one = run(1);
    let four = run(4);
    ensure(one.code == 0, || one.text.clone())?;
    ensure(one.text == four.text, || "outputs differ between 1 and 4 threads".into())?;
    Ok(format!("{} bytes identical at 1 and 4 threads", one.text.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("trivext(Zmod(4), mod(2)) is ISP but not strongly ISP", c1),
        ("F∝F strongly ISP, its duplication is not", c2),
        ("dup(Zmod(8), ideal(2)) is ISP", c3),
        ("theorem suite over the corpus", c4),
        ("strongly ISP, SSP, ZPI, ZPUI agree", c5),
        ("implication diagram", c6),
        ("factorization engine against breadth-first oracle", c7),
        ("integer backend against divisor tuples", c8),
        ("localizations of Zmod(12)", c9),
        ("deterministic corpus reports", c10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} ({why})", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
