//! Ring classes decided by exhaustive search, with witnessed reports.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{FactorIds, FactorMode};
use crate::ideal::Ideal;
use crate::integers::{int_is_isp, IspCertificate};
use crate::lattice::{all_ideals, IdealId, IdealLattice};
use crate::ring::{localize_at_prime, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    True,
    False,
    /// True because the quantified set of ideals is empty.
    VacuousTrue,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self != Verdict::False
    }

    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::VacuousTrue => "vacuous-true",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Property keys, in report order.
pub const PROPERTIES: [&str; 15] = [
    "total_quotient",
    "isp",
    "strongly_isp",
    "sp",
    "ssp",
    "zpi",
    "zpui",
    "special_primary",
    "almost_multiplication",
    "von_neumann_regular",
    "marot",
    "dedekind",
    "local",
    "reduced",
    "field",
];

/// Arrows of the implication diagram, premise first.
pub const IMPLICATIONS: [(&str, &str); 6] = [
    ("total_quotient", "isp"),
    ("sp", "isp"),
    ("ssp", "strongly_isp"),
    ("zpui", "strongly_isp"),
    ("von_neumann_regular", "strongly_isp"),
    ("strongly_isp", "isp"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    pub literal: String,
    pub elements: Vec<usize>,
}

impl IdealWitness {
    pub fn of(ideal: &Ideal) -> Self {
        IdealWitness {
            literal: ideal.literal(),
            elements: ideal.elements().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationWitness {
    pub ideal: String,
    pub invertible: String,
    pub parts: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<IdealWitness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub factorizations: Vec<FactorizationWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyReport {
    fn plain(name: &'static str, verdict: Verdict) -> Self {
        PropertyReport {
            name,
            verdict,
            counterexample: None,
            factorizations: Vec::new(),
            note: None,
        }
    }

    fn with_counterexample(mut self, w: Option<IdealWitness>) -> Self {
        self.counterexample = w;
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals: Option<usize>,
    pub properties: Vec<PropertyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<IspCertificate>,
}

impl ClassificationReport {
    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }

    /// Panics on an unknown property name.
    pub fn verdict(&self, name: &str) -> Verdict {
        self.property(name)
            .unwrap_or_else(|| panic!("unknown property {name}"))
            .verdict
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("ring: {}\n", self.ring);
        if let Some(size) = self.size {
            out += &format!("size: {size}\n");
        }
        if let Some(k) = self.ideals {
            out += &format!("ideals: {k}\n");
        }
        for p in &self.properties {
            out += &format!("{}: {}", p.name, p.verdict);
            if let Some(c) = &p.counterexample {
                out += &format!("  counterexample {}", c.literal);
                // integer ideals have no element listing
                if !c.elements.is_empty() {
                    out += &format!(" = {:?}", c.elements);
                }
            }
            if let Some(n) = &p.note {
                out += &format!("  ({n})");
            }
            out.push('\n');
        }
        if let Some(c) = &self.certificate {
            out += &format!(
                "certificate: factored 0 and 2..={} ({} values), verified {}\n",
                c.bound, c.checked, c.verified
            );
        }
        out
    }
}

/// Lazily computed facts about one ring, shared by the classifier and the
/// theorem checks.
pub struct Analysis {
    ring: Ring,
    lattice: IdealLattice,
    /// Per mode: factorization of each ideal (None for the whole ring).
    factors: [OnceLock<Vec<Option<FactorIds>>>; 4],
}

fn mode_slot(mode: FactorMode) -> usize {
    match mode {
        FactorMode::InvRadical => 0,
        FactorMode::RadicalsOnly => 1,
        FactorMode::PrimesOnly => 2,
        FactorMode::InvPrimes => 3,
    }
}

/// Outcome of quantifying a factorization search over a family of ideals.
pub struct FactorOutcome {
    pub verdict: Verdict,
    pub counterexample: Option<IdealId>,
    pub factorizations: Vec<(IdealId, FactorIds)>,
}

impl Analysis {
    pub fn new(ring: &Ring) -> Self {
        Analysis {
            ring: ring.clone(),
            lattice: all_ideals(ring),
            factors: Default::default(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    /// Factorizations of every proper ideal, computed in parallel on the
    /// current rayon pool.
    pub fn factorizations(&self, mode: FactorMode) -> &[Option<FactorIds>] {
        self.factors[mode_slot(mode)].get_or_init(|| {
            let lat = &self.lattice;
            lat.ids()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|i| lat.is_proper(i).then(|| lat.factor(i, mode)).flatten())
                .collect()
        })
    }

    pub fn factor_outcome(&self, mode: FactorMode, regular_only: bool) -> FactorOutcome {
        let lat = &self.lattice;
        let targets: Vec<IdealId> = lat
            .proper_ideals()
            .filter(|&i| !regular_only || lat.is_regular(i))
            .collect();
        if targets.is_empty() {
            return FactorOutcome {
                verdict: Verdict::VacuousTrue,
                counterexample: None,
                factorizations: Vec::new(),
            };
        }
        let found = self.factorizations(mode);
        let mut factorizations = Vec::new();
        for &i in &targets {
            match &found[i] {
                Some(f) => factorizations.push((i, f.clone())),
                None => {
                    return FactorOutcome {
                        verdict: Verdict::False,
                        counterexample: Some(i),
                        factorizations: Vec::new(),
                    }
                }
            }
        }
        FactorOutcome {
            verdict: Verdict::True,
            counterexample: None,
            factorizations,
        }
    }

    pub fn isp(&self) -> Verdict {
        self.factor_outcome(FactorMode::InvRadical, true).verdict
    }

    pub fn strongly_isp(&self) -> Verdict {
        self.factor_outcome(FactorMode::InvRadical, false).verdict
    }

    pub fn sp(&self) -> Verdict {
        self.factor_outcome(FactorMode::RadicalsOnly, true).verdict
    }

    pub fn ssp(&self) -> Verdict {
        self.factor_outcome(FactorMode::RadicalsOnly, false).verdict
    }

    pub fn zpi(&self) -> Verdict {
        self.factor_outcome(FactorMode::PrimesOnly, false).verdict
    }

    pub fn zpui(&self) -> Verdict {
        self.factor_outcome(FactorMode::InvPrimes, false).verdict
    }

    /// Regular elements are all units; a witness is a regular non-unit.
    pub fn total_quotient(&self) -> std::result::Result<(), usize> {
        match self
            .ring
            .regular_elements()
            .iter()
            .find(|&a| !self.ring.is_unit(a))
        {
            Some(a) => Err(a),
            None => Ok(()),
        }
    }

    /// One prime `M` and every proper ideal a power of `M`. On failure
    /// returns a second prime or an ideal that is no power of `M`.
    pub fn special_primary(&self) -> std::result::Result<(), IdealId> {
        special_primary_in(&self.lattice)
    }

    /// Every localization at a prime is special primary; the witness is the
    /// first prime where this fails.
    pub fn almost_multiplication(&self) -> std::result::Result<(), IdealId> {
        for p in self.lattice.primes() {
            let loc = localize_at_prime(self.lattice.get(p)).expect("prime ideal");
            if special_primary_in(&all_ideals(&loc.ring)).is_err() {
                return Err(p);
            }
        }
        Ok(())
    }

    /// `a = a²x` solvable for every `a`; the witness is the first `a` without.
    pub fn von_neumann_regular(&self) -> std::result::Result<(), usize> {
        let r = &self.ring;
        match r
            .elements()
            .find(|&a| !r.elements().any(|x| r.mul(r.mul(a, a), x) == a))
        {
            Some(a) => Err(a),
            None => Ok(()),
        }
    }

    /// Proper regular ideals generated by their regular elements.
    pub fn marot(&self) -> (Verdict, Option<IdealId>) {
        let lat = &self.lattice;
        let targets: Vec<IdealId> = lat
            .proper_ideals()
            .filter(|&i| lat.is_regular(i))
            .collect();
        if targets.is_empty() {
            return (Verdict::VacuousTrue, None);
        }
        for i in targets {
            let ideal = lat.get(i);
            let regs: Vec<usize> = ideal.elements().filter(|&a| self.ring.is_regular(a)).collect();
            if Ideal::generated(&self.ring, &regs) != *ideal {
                return (Verdict::False, Some(i));
            }
        }
        (Verdict::True, None)
    }

    /// Proper regular ideals are products of primes.
    pub fn dedekind(&self) -> FactorOutcome {
        self.factor_outcome(FactorMode::PrimesOnly, true)
    }
}

fn special_primary_in(lat: &IdealLattice) -> std::result::Result<(), IdealId> {
    let primes = lat.primes();
    if primes.len() != 1 {
        return Err(primes[1]);
    }
    let m = primes[0];
    let k = lat.stabilization_index(m);
    let powers: Vec<IdealId> = (1..=k).map(|e| lat.power(m, e)).collect();
    match lat.proper_ideals().find(|i| !powers.contains(i)) {
        Some(i) => Err(i),
        None => Ok(()),
    }
}

fn factor_report(
    name: &'static str,
    lat: &IdealLattice,
    outcome: FactorOutcome,
    vacuous_note: &str,
) -> PropertyReport {
    let mut rep = PropertyReport::plain(name, outcome.verdict)
        .with_counterexample(outcome.counterexample.map(|i| IdealWitness::of(lat.get(i))));
    rep.factorizations = outcome
        .factorizations
        .iter()
        .map(|(i, f)| FactorizationWitness {
            ideal: lat.get(*i).literal(),
            invertible: lat.get(f.invertible).literal(),
            parts: f.parts.iter().map(|&p| lat.get(p).literal()).collect(),
        })
        .collect();
    if outcome.verdict == Verdict::VacuousTrue {
        rep = rep.with_note(vacuous_note);
    }
    rep
}

/// Runs every predicate on `ring` and validates the implication diagram.
/// `threads == 0` uses rayon's default pool size.
pub fn classify(ring: &Ring, threads: usize) -> Result<ClassificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Semantic(format!("cannot start worker pool: {e}")))?;
    let report = pool.install(|| classify_in_pool(ring));
    check_implications(&report)?;
    Ok(report)
}

fn classify_in_pool(ring: &Ring) -> ClassificationReport {
    let an = Analysis::new(ring);
    let lat = an.lattice();
    let w = |i: IdealId| Some(IdealWitness::of(lat.get(i)));
    let principal = |a: usize| Some(IdealWitness::of(&Ideal::principal(ring, a)));
    let no_proper_regular = "no proper regular ideals";
    let mut props = Vec::new();

    let tq = an.total_quotient();
    props.push(PropertyReport::plain("total_quotient", Verdict::from_bool(tq.is_ok()))
        .with_counterexample(tq.err().and_then(principal)));
    props.push(factor_report("isp", lat, an.factor_outcome(FactorMode::InvRadical, true), no_proper_regular));
    props.push(factor_report("strongly_isp", lat, an.factor_outcome(FactorMode::InvRadical, false), ""));
    props.push(factor_report("sp", lat, an.factor_outcome(FactorMode::RadicalsOnly, true), no_proper_regular));
    props.push(factor_report("ssp", lat, an.factor_outcome(FactorMode::RadicalsOnly, false), ""));
    props.push(factor_report("zpi", lat, an.factor_outcome(FactorMode::PrimesOnly, false), ""));
    props.push(factor_report("zpui", lat, an.factor_outcome(FactorMode::InvPrimes, false), ""));

    let spr = an.special_primary();
    let mut spr_rep = PropertyReport::plain("special_primary", Verdict::from_bool(spr.is_ok()))
        .with_counterexample(spr.err().and_then(w));
    if ring.is_field() {
        spr_rep = spr_rep.with_note("field: the only proper ideal is 0 = M");
    }
    props.push(spr_rep);

    let am = an.almost_multiplication();
    props.push(PropertyReport::plain("almost_multiplication", Verdict::from_bool(am.is_ok()))
        .with_counterexample(am.err().and_then(w)));

    let vnr = an.von_neumann_regular();
    props.push(PropertyReport::plain("von_neumann_regular", Verdict::from_bool(vnr.is_ok()))
        .with_counterexample(vnr.err().and_then(principal)));

    let (marot, bad) = an.marot();
    let mut marot_rep = PropertyReport::plain("marot", marot).with_counterexample(bad.and_then(w));
    if marot == Verdict::VacuousTrue {
        marot_rep = marot_rep.with_note(no_proper_regular);
    }
    props.push(marot_rep);
    props.push(factor_report("dedekind", lat, an.dedekind(), no_proper_regular));

    let maximals = lat.maximals();
    props.push(PropertyReport::plain("local", Verdict::from_bool(maximals.len() == 1))
        .with_counterexample(maximals.get(1).copied().and_then(w)));
    let nil = ring.nilradical();
    props.push(PropertyReport::plain("reduced", Verdict::from_bool(nil.is_zero()))
        .with_counterexample((!nil.is_zero()).then(|| IdealWitness::of(&nil))));
    let nonzero_proper = lat.proper_ideals().find(|&i| i != lat.zero());
    props.push(PropertyReport::plain("field", Verdict::from_bool(ring.is_field()))
        .with_counterexample(nonzero_proper.and_then(w)));

    ClassificationReport {
        ring: ring.provenance().to_string(),
        size: Some(ring.size()),
        ideals: Some(lat.len()),
        properties: props,
        certificate: None,
    }
}

/// Fails on the first arrow whose premise holds and conclusion does not.
pub fn check_implications(report: &ClassificationReport) -> Result<()> {
    for (premise, conclusion) in IMPLICATIONS {
        if report.verdict(premise).holds() && !report.verdict(conclusion).holds() {
            return Err(Error::DiagramViolation {
                premise,
                conclusion,
            });
        }
    }
    Ok(())
}

/// Report for the integers. Factorization properties are backed by the
/// divisor arithmetic of the integer backend, certified up to `bound`.
pub fn classify_integers(bound: u64) -> Result<ClassificationReport> {
    let cert = int_is_isp(bound);
    let holds = Verdict::from_bool(cert.verified);
    let int = |n: u64| {
        Some(IdealWitness {
            literal: format!("ideal({n})"),
            elements: Vec::new(),
        })
    };
    let dedekind_note = "every nonzero ideal is invertible and a product of primes";
    let props = vec![
        PropertyReport::plain("total_quotient", Verdict::False)
            .with_counterexample(int(2))
            .with_note("2 is regular and not a unit"),
        PropertyReport::plain("isp", holds).with_note("n = (n / rad n) * rad n"),
        PropertyReport::plain("strongly_isp", holds).with_note("0 = (1) * (0) covers the zero ideal"),
        PropertyReport::plain("sp", holds).with_note("squarefree layers of n"),
        PropertyReport::plain("ssp", holds).with_note("squarefree layers of n; (0) is prime"),
        PropertyReport::plain("zpi", holds).with_note("prime factorization"),
        PropertyReport::plain("zpui", holds).with_note("prime factorization"),
        PropertyReport::plain("special_primary", Verdict::False)
            .with_counterexample(int(2))
            .with_note("(0) and (2) are distinct primes"),
        PropertyReport::plain("almost_multiplication", Verdict::True)
            .with_note("localizations are discrete valuation rings or the field Q"),
        PropertyReport::plain("von_neumann_regular", Verdict::False)
            .with_counterexample(int(2))
            .with_note("2 = 4x has no solution"),
        PropertyReport::plain("marot", Verdict::True).with_note("domains are Marot"),
        PropertyReport::plain("dedekind", Verdict::True).with_note(dedekind_note),
        PropertyReport::plain("local", Verdict::False).with_counterexample(int(3)),
        PropertyReport::plain("reduced", Verdict::True),
        PropertyReport::plain("field", Verdict::False).with_counterexample(int(2)),
    ];
    let report = ClassificationReport {
        ring: "Zint".into(),
        size: None,
        ideals: None,
        properties: props,
        certificate: Some(cert),
    };
    check_implications(&report)?;
    Ok(report)
}

pub fn is_total_quotient(ring: &Ring) -> bool {
    Analysis::new(ring).total_quotient().is_ok()
}

pub fn is_isp(ring: &Ring) -> Verdict {
    Analysis::new(ring).isp()
}

pub fn is_strongly_isp(ring: &Ring) -> Verdict {
    Analysis::new(ring).strongly_isp()
}

pub fn is_sp(ring: &Ring) -> Verdict {
    Analysis::new(ring).sp()
}

pub fn is_ssp(ring: &Ring) -> Verdict {
    Analysis::new(ring).ssp()
}

pub fn is_zpi(ring: &Ring) -> Verdict {
    Analysis::new(ring).zpi()
}

pub fn is_zpui(ring: &Ring) -> Verdict {
    Analysis::new(ring).zpui()
}

pub fn is_special_primary(ring: &Ring) -> bool {
    Analysis::new(ring).special_primary().is_ok()
}

pub fn is_almost_multiplication(ring: &Ring) -> bool {
    Analysis::new(ring).almost_multiplication().is_ok()
}

pub fn is_von_neumann_regular(ring: &Ring) -> bool {
    Analysis::new(ring).von_neumann_regular().is_ok()
}

pub fn is_marot(ring: &Ring) -> Verdict {
    Analysis::new(ring).marot().0
}

pub fn is_dedekind(ring: &Ring) -> Verdict {
    Analysis::new(ring).dedekind().verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{elaborate_finite, parse_ring};
    use crate::ring::FiniteRing;

    fn ring(text: &str) -> Ring {
        elaborate_finite(&parse_ring(text).unwrap(), 4096).unwrap()
    }

    #[test]
    fn z8_report() {
        let r = classify(&FiniteRing::zmod(8).unwrap(), 1).unwrap();
        assert_eq!(r.verdict("special_primary"), Verdict::True);
        assert_eq!(r.verdict("strongly_isp"), Verdict::True);
        assert_eq!(r.verdict("zpi"), Verdict::True);
        assert_eq!(r.verdict("von_neumann_regular"), Verdict::False);
        assert_eq!(r.verdict("isp"), Verdict::VacuousTrue);
        assert_eq!(r.verdict("dedekind"), Verdict::VacuousTrue);
        let strong = r.property("strongly_isp").unwrap();
        assert_eq!(strong.factorizations.len(), 3);
    }

    #[test]
    fn trivext_z4_z2_is_isp_not_strongly() {
        let r = classify(&ring("trivext(Zmod(4), mod(2))"), 2).unwrap();
        assert!(r.verdict("isp").holds());
        assert_eq!(r.verdict("strongly_isp"), Verdict::False);
        assert_eq!(r.verdict("ssp"), Verdict::False);
        let c = r.property("strongly_isp").unwrap().counterexample.clone().unwrap();
        assert_eq!(c.literal, "ideal((0, 1))");
        assert_eq!(c.elements, vec![0, 1]);
    }

    #[test]
    fn vnr_and_simple_predicates() {
        let z6 = FiniteRing::zmod(6).unwrap();
        assert!(is_von_neumann_regular(&z6));
        assert!(!is_von_neumann_regular(&FiniteRing::zmod(4).unwrap()));
        assert!(!is_special_primary(&z6));
        assert!(is_special_primary(&FiniteRing::zmod(2).unwrap()));
        assert!(is_almost_multiplication(&FiniteRing::zmod(12).unwrap()));
        let plane = ring("trivext(Zmod(2), mod(2, 2))");
        assert!(!is_special_primary(&plane));
        assert!(!is_almost_multiplication(&plane));
        assert!(is_total_quotient(&plane));
        assert_eq!(is_marot(&z6), Verdict::VacuousTrue);
    }

    #[test]
    fn every_false_verdict_has_counterexample() {
        for text in ["Zmod(12)", "trivext(Zmod(2), mod(2, 2))", "dup(Zmod(8), ideal(2))"] {
            let r = classify(&ring(text), 0).unwrap();
            for p in &r.properties {
                if p.verdict == Verdict::False {
                    assert!(p.counterexample.is_some(), "{text}: {}", p.name);
                }
            }
        }
    }

    #[test]
    fn diagram_violation_is_reported() {
        let mut r = classify(&FiniteRing::zmod(6).unwrap(), 1).unwrap();
        assert!(check_implications(&r).is_ok());
        for p in &mut r.properties {
            if p.name == "strongly_isp" {
                p.verdict = Verdict::False;
            }
        }
        assert!(matches!(
            check_implications(&r),
            Err(Error::DiagramViolation { .. })
        ));
    }

    #[test]
    fn integers_report() {
        let r = classify_integers(1000).unwrap();
        assert_eq!(r.verdict("total_quotient"), Verdict::False);
        assert_eq!(r.verdict("isp"), Verdict::True);
        assert!(r.certificate.as_ref().unwrap().verified);
    }
}
