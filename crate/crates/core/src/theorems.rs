//! Executable checks of transfer results for products, trivial ring
//! extensions and amalgamated duplications. Each check evaluates its
//! hypotheses on a concrete instance and, when they hold, its conclusion.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::Analysis;
use crate::construct::{dup, dup_first_projection, dup_ideal, dup_parts, trivext, trivext_parts};
use crate::error::{Error, Result};
use crate::factor::FactorMode;
use crate::ideal::Ideal;
use crate::lattice::all_ideals;
use crate::module::{is_divisible, is_multiplication_module, is_simple, localize_module, support, FiniteModule};
use crate::ring::{localize_at_prime, quotient, Construction, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Prop22,
    ThmExten,
    ThmDup,
    LemmaRegu,
    LemmaInver,
    LemmaPjp,
    PropSisp,
    PropSpr,
    ThmSispamr,
    CorNsisp,
    PropStrong,
    PropSupp,
    PropCar,
    ThmDupli,
    RemarkTqDup,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::Prop22,
        TheoremId::ThmExten,
        TheoremId::ThmDup,
        TheoremId::LemmaRegu,
        TheoremId::LemmaInver,
        TheoremId::LemmaPjp,
        TheoremId::PropSisp,
        TheoremId::PropSpr,
        TheoremId::ThmSispamr,
        TheoremId::CorNsisp,
        TheoremId::PropStrong,
        TheoremId::PropSupp,
        TheoremId::PropCar,
        TheoremId::ThmDupli,
        TheoremId::RemarkTqDup,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Prop22 => "prop-2.2",
            TheoremId::ThmExten => "thm-exten",
            TheoremId::ThmDup => "thm-dup",
            TheoremId::LemmaRegu => "lemma-regu",
            TheoremId::LemmaInver => "lemma-inver",
            TheoremId::LemmaPjp => "lemma-p=jp",
            TheoremId::PropSisp => "prop-sisp",
            TheoremId::PropSpr => "prop-spr",
            TheoremId::ThmSispamr => "thm-sispamr",
            TheoremId::CorNsisp => "cor-nsisp",
            TheoremId::PropStrong => "prop-strong",
            TheoremId::PropSupp => "prop-supp",
            TheoremId::PropCar => "prop-car",
            TheoremId::ThmDupli => "thm-dupli",
            TheoremId::RemarkTqDup => "remark-tq-dup",
        }
    }

    /// What the instance must provide.
    pub fn shape(self) -> InstanceShape {
        match self {
            TheoremId::ThmExten | TheoremId::PropStrong | TheoremId::PropSupp | TheoremId::PropCar => {
                InstanceShape::RingModule
            }
            TheoremId::ThmDup
            | TheoremId::LemmaRegu
            | TheoremId::LemmaInver
            | TheoremId::ThmDupli
            | TheoremId::RemarkTqDup => InstanceShape::RingIdeal,
            _ => InstanceShape::Ring,
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Semantic(format!("unknown theorem id `{s}`")))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceShape {
    Ring,
    /// `A ∝ E`, or `A` together with `E`.
    RingModule,
    /// `A ⋈ I`, or `A` together with `I`.
    RingIdeal,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub ring: Ring,
    pub ideal: Option<Ideal>,
    pub module: Option<Arc<FiniteModule>>,
}

impl Instance {
    pub fn ring(ring: &Ring) -> Self {
        Instance {
            ring: ring.clone(),
            ideal: None,
            module: None,
        }
    }

    pub fn with_ideal(ideal: &Ideal) -> Self {
        Instance {
            ring: ideal.ring().clone(),
            ideal: Some(ideal.clone()),
            module: None,
        }
    }

    pub fn with_module(module: &Arc<FiniteModule>) -> Self {
        Instance {
            ring: module.ring().clone(),
            ideal: None,
            module: Some(module.clone()),
        }
    }

    pub fn describe(&self) -> String {
        let mut s = self.ring.provenance().to_string();
        if let Some(i) = &self.ideal {
            s += &format!(", {}", i.literal());
        }
        if let Some(m) = &self.module {
            s += &format!(", {}", m.provenance());
        }
        s
    }

    /// `(A, E, A ∝ E)`.
    fn trivext_triple(&self) -> Result<(Ring, Arc<FiniteModule>, Ring)> {
        match &self.module {
            Some(m) => Ok((self.ring.clone(), m.clone(), trivext(&self.ring, m)?)),
            None => {
                let (a, e) = trivext_parts(&self.ring)?;
                Ok((a, e, self.ring.clone()))
            }
        }
    }

    /// `(A, I, A ⋈ I)`.
    fn dup_triple(&self) -> Result<(Ring, Ideal, Ring)> {
        match &self.ideal {
            Some(i) => Ok((self.ring.clone(), i.clone(), dup(i)?)),
            None => {
                let (a, i) = dup_parts(&self.ring)?;
                Ok((a, i, self.ring.clone()))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub instance: String,
    pub outcome: Outcome,
    pub transcript: Vec<String>,
}

/// Collects transcript lines and the running outcome.
struct Log {
    lines: Vec<String>,
    applicable: bool,
    failed: bool,
}

impl Log {
    fn new() -> Self {
        Log {
            lines: Vec::new(),
            applicable: false,
            failed: false,
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn fact(&mut self, what: &str, on: &Ring, value: impl fmt::Display) {
        self.lines.push(format!("{what}({}) = {value}", on.provenance()));
    }

    /// Records one claim whose hypothesis held.
    fn claim(&mut self, label: &str, ok: bool) {
        self.applicable = true;
        self.failed |= !ok;
        self.lines.push(format!("{label}: {}", if ok { "holds" } else { "FAILS" }));
    }

    fn skip(&mut self, label: &str, why: &str) {
        self.lines.push(format!("{label}: hypothesis not met ({why})"));
    }

    fn finish(self, id: TheoremId, inst: &Instance) -> TheoremCheck {
        let outcome = match (self.applicable, self.failed) {
            (_, true) => Outcome::Fail,
            (true, false) => Outcome::Pass,
            (false, false) => Outcome::Inapplicable,
        };
        TheoremCheck {
            id: id.as_str(),
            instance: inst.describe(),
            outcome,
            transcript: self.lines,
        }
    }
}

fn product_parts(ring: &Ring) -> Option<Vec<Ring>> {
    match ring.construction() {
        Construction::Product(parts) => Some(parts.clone()),
        _ => None,
    }
}

/// `aI = I`.
fn absorbs(ring: &Ring, a: usize, ideal: &Ideal) -> bool {
    let image: std::collections::BTreeSet<usize> = ideal.elements().map(|i| ring.mul(a, i)).collect();
    image.len() == ideal.len()
}

/// `sE = E` for every `s ∈ S = A \ (Z(A) ∪ Z(E))`.
fn module_absorbs(module: &Arc<FiniteModule>) -> bool {
    let ring = module.ring();
    let ze = module.zero_divisors();
    ring.regular_elements()
        .iter()
        .filter(|&s| !ze.contains(s))
        .all(|s| {
            let image: std::collections::BTreeSet<usize> = module.elements().map(|e| module.act(s, e)).collect();
            image.len() == module.size()
        })
}

pub fn check_theorem(id: TheoremId, inst: &Instance) -> Result<TheoremCheck> {
    let mut log = Log::new();
    match id {
        TheoremId::Prop22 => prop_2_2(inst, &mut log),
        TheoremId::ThmExten => thm_exten(inst, &mut log)?,
        TheoremId::ThmDup => thm_dup(inst, &mut log)?,
        TheoremId::LemmaRegu => lemma_regu(inst, &mut log)?,
        TheoremId::LemmaInver => lemma_inver(inst, &mut log)?,
        TheoremId::LemmaPjp => lemma_pjp(inst, &mut log),
        TheoremId::PropSisp => prop_sisp(inst, &mut log)?,
        TheoremId::PropSpr => prop_spr(inst, &mut log),
        TheoremId::ThmSispamr => thm_sispamr(inst, &mut log),
        TheoremId::CorNsisp => cor_nsisp(inst, &mut log),
        TheoremId::PropStrong => prop_strong(inst, &mut log)?,
        TheoremId::PropSupp => prop_supp(inst, &mut log)?,
        TheoremId::PropCar => prop_car(inst, &mut log)?,
        TheoremId::ThmDupli => thm_dupli(inst, &mut log)?,
        TheoremId::RemarkTqDup => remark_tq_dup(inst, &mut log)?,
    }
    Ok(log.finish(id, inst))
}

/// A product is ISP exactly when every factor is.
fn prop_2_2(inst: &Instance, log: &mut Log) {
    let Some(parts) = product_parts(&inst.ring) else {
        log.skip("product is ISP iff each factor is", "not a direct product");
        return;
    };
    let whole = Analysis::new(&inst.ring).isp();
    log.fact("isp", &inst.ring, whole);
    let mut all = true;
    for p in &parts {
        let v = Analysis::new(p).isp();
        log.fact("isp", p, v);
        all &= v.holds();
    }
    log.claim("product is ISP iff each factor is", whole.holds() == all);
}

/// Under `E = sE` for `s ∈ S`: `A ∝ E` is ISP iff every proper ideal of `A`
/// meeting `S` factors as invertible times radicals.
fn thm_exten(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, e, r) = inst.trivext_triple()?;
    let hyp = module_absorbs(&e);
    log.fact("E = sE for all s in S", &a, hyp);
    if !hyp {
        log.skip("A∝E is ISP iff ideals meeting S factor", "E != sE for some s in S");
        return Ok(());
    }
    let lhs = Analysis::new(&r).isp();
    log.fact("isp", &r, lhs);
    let an = Analysis::new(&a);
    let lat = an.lattice();
    let ze = e.zero_divisors();
    let s: Vec<usize> = a
        .regular_elements()
        .iter()
        .filter(|&x| !ze.contains(x))
        .collect();
    let found = an.factorizations(FactorMode::InvRadical);
    let meeting: Vec<usize> = lat
        .proper_ideals()
        .filter(|&i| s.iter().any(|&x| lat.get(i).contains(x)))
        .collect();
    let rhs = meeting.iter().all(|&i| found[i].is_some());
    log.note(format!(
        "proper ideals of A meeting S: {}, all factor: {rhs}",
        meeting.len()
    ));
    log.claim("A∝E is ISP iff ideals meeting S factor", lhs.holds() == rhs);
    Ok(())
}

fn thm_dup(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, i, d) = inst.dup_triple()?;
    let vd = Analysis::new(&d).isp();
    let va = Analysis::new(&a).isp();
    log.fact("isp", &d, vd);
    log.fact("isp", &a, va);
    log.claim("A⋈I ISP implies A ISP", !vd.holds() || va.holds());
    let hyp = a.regular_elements().iter().all(|x| absorbs(&a, x, &i));
    if hyp {
        log.claim("I = aI for regular a: A⋈I ISP iff A ISP", vd.holds() == va.holds());
    } else {
        log.skip("I = aI for regular a: A⋈I ISP iff A ISP", "I != aI for some regular a");
    }
    Ok(())
}

/// Regular ideals of `A ⋈ I` all have the form `H ⋈ I` exactly when
/// `I = aI` for every regular `a`.
fn lemma_regu(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, i, d) = inst.dup_triple()?;
    let lat = all_ideals(&d);
    let mut s1 = true;
    for l in lat.ideals().iter().filter(|l| l.is_regular()) {
        let h = dup_first_projection(l)?;
        if !h.is_regular() || dup_ideal(&d, &h)? != *l {
            log.note(format!("regular ideal {} is not of the form H⋈I", l.literal()));
            s1 = false;
            break;
        }
    }
    let s2 = a.regular_elements().iter().all(|x| absorbs(&a, x, &i));
    log.fact("regular ideals are H⋈I", &d, s1);
    log.fact("I = aI for regular a", &a, s2);
    log.claim("(1) iff (2)", s1 == s2);
    Ok(())
}

/// `J ⋈ I` invertible implies `J` invertible, for every ideal `J` of `A`.
fn lemma_inver(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, _, d) = inst.dup_triple()?;
    let la = all_ideals(&a);
    let ld = all_ideals(&d);
    let mut ok = true;
    let mut invertible = 0;
    for j in la.ids() {
        let jd = dup_ideal(&d, la.get(j))?;
        let id = ld.id_of(&jd).expect("J⋈I is an ideal");
        if ld.is_invertible(id) {
            invertible += 1;
            if !la.is_invertible(j) {
                log.note(format!("{} is invertible but {} is not", jd.literal(), la.get(j).literal()));
                ok = false;
            }
        }
    }
    log.note(format!("invertible ideals of the form J⋈I: {invertible}"));
    log.claim("J⋈I invertible implies J invertible", ok);
    Ok(())
}

/// Primes strictly inside a multiplication ideal `I` satisfy `P = IP`.
fn lemma_pjp(inst: &Instance, log: &mut Log) {
    let lat = all_ideals(&inst.ring);
    let mut pairs = 0;
    let mut ok = true;
    for p in lat.primes() {
        for i in lat.ids() {
            if p == i || !lat.le(p, i) || !lat.is_multiplication_ideal(i) {
                continue;
            }
            pairs += 1;
            if lat.product(i, p) != p {
                ok = false;
                log.note(format!(
                    "P = {}, I = {}: IP = {}",
                    lat.get(p).literal(),
                    lat.get(i).literal(),
                    lat.get(lat.product(i, p)).literal()
                ));
            }
        }
    }
    log.note(format!("pairs P ⊊ I with I multiplication: {pairs}"));
    if pairs == 0 {
        log.skip("P = IP", "no prime lies strictly inside a multiplication ideal");
    } else {
        log.claim("P = IP", ok);
    }
}

/// Strongly ISP passes to quotients by primes (as ISP domains), to
/// localizations, and across finite products.
fn prop_sisp(inst: &Instance, log: &mut Log) -> Result<()> {
    let ring = &inst.ring;
    let an = Analysis::new(ring);
    let strong = an.strongly_isp();
    log.fact("strongly_isp", ring, strong);
    if strong.holds() {
        let lat = an.lattice();
        let mut q_ok = true;
        let mut l_ok = true;
        for p in lat.primes() {
            let q = quotient(lat.get(p))?.ring;
            let qv = Analysis::new(&q).isp();
            log.note(format!("A/P for P = {}: domain {}, isp {qv}", lat.get(p).literal(), q.is_domain()));
            q_ok &= q.is_domain() && qv.holds();
            let l = localize_at_prime(lat.get(p))?.ring;
            let lv = Analysis::new(&l).strongly_isp();
            log.note(format!("A_P for P = {}: strongly_isp {lv}", lat.get(p).literal()));
            l_ok &= lv.holds();
        }
        log.claim("(1) A/P is an ISP domain", q_ok);
        log.claim("(2) A_S is strongly ISP for S = A \\ P", l_ok);
    } else {
        log.skip("(1), (2)", "A is not strongly ISP");
    }
    if let Some(parts) = product_parts(ring) {
        let mut all = true;
        for p in &parts {
            let v = Analysis::new(p).strongly_isp();
            log.fact("strongly_isp", p, v);
            all &= v.holds();
        }
        log.claim("(3) product strongly ISP iff each factor is", strong.holds() == all);
    } else {
        log.skip("(3)", "not a direct product");
    }
    Ok(())
}

/// Local (zero-dimensional) strongly ISP rings are special primary.
fn prop_spr(inst: &Instance, log: &mut Log) {
    let ring = &inst.ring;
    let an = Analysis::new(ring);
    let local = ring.is_local();
    let strong = an.strongly_isp();
    let spr = an.special_primary().is_ok();
    log.fact("local", ring, local);
    log.fact("strongly_isp", ring, strong);
    log.fact("special_primary", ring, spr);
    if local && strong.holds() {
        log.claim("special primary", spr);
    } else {
        log.skip("special primary", "not local, or not strongly ISP");
        if local && !spr {
            log.note(format!(
                "contrapositive: local and not special primary, so not strongly ISP: {}",
                if strong.holds() { "violated" } else { "holds" }
            ));
        }
    }
}

/// Strongly ISP with every nonzero prime maximal implies almost
/// multiplication.
fn thm_sispamr(inst: &Instance, log: &mut Log) {
    let ring = &inst.ring;
    let an = Analysis::new(ring);
    let lat = an.lattice();
    let strong = an.strongly_isp();
    let dim_ok = lat
        .primes()
        .into_iter()
        .all(|p| p == lat.zero() || lat.is_maximal(p));
    log.fact("strongly_isp", ring, strong);
    log.fact("nonzero primes maximal", ring, dim_ok);
    if strong.holds() && dim_ok {
        let am = an.almost_multiplication();
        if let Err(p) = am {
            log.note(format!("A_P not special primary at P = {}", lat.get(p).literal()));
        }
        log.claim("almost multiplication", am.is_ok());
    } else {
        log.skip("almost multiplication", "not strongly ISP");
    }
}

/// For Noetherian rings: ZPI iff SSP iff strongly ISP.
fn cor_nsisp(inst: &Instance, log: &mut Log) {
    let ring = &inst.ring;
    let an = Analysis::new(ring);
    let (zpi, ssp, strong) = (an.zpi(), an.ssp(), an.strongly_isp());
    log.fact("zpi", ring, zpi);
    log.fact("ssp", ring, ssp);
    log.fact("strongly_isp", ring, strong);
    log.claim(
        "zpi iff ssp iff strongly_isp",
        zpi.holds() == ssp.holds() && ssp.holds() == strong.holds(),
    );
}

fn prop_strong(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, e, r) = inst.trivext_triple()?;
    let sr = Analysis::new(&r).strongly_isp();
    let sa = Analysis::new(&a).strongly_isp();
    let vnr = Analysis::new(&a).von_neumann_regular().is_ok();
    let mult = is_multiplication_module(&e);
    let absorb = module_absorbs(&e);
    log.fact("strongly_isp", &r, sr);
    log.fact("strongly_isp", &a, sa);
    log.fact("von_neumann_regular", &a, vnr);
    log.note(format!("multiplication module {}: {mult}", e.provenance()));
    log.note(format!("E = sE for all s in S: {absorb}"));
    if sr.holds() {
        log.claim("(1) A strongly ISP", sa.holds());
    } else {
        log.skip("(1)", "A∝E is not strongly ISP");
    }
    if vnr && mult {
        log.claim("(2) A∝E strongly ISP", sr.holds());
    } else {
        log.skip("(2)", "A not von Neumann regular, or E not a multiplication module");
    }
    if sr.holds() && absorb {
        log.claim("(3) E is a multiplication module", mult);
    } else {
        log.skip("(3)", "A∝E not strongly ISP, or E != sE for some s in S");
    }
    Ok(())
}

/// If `A ∝ E` is strongly ISP with all primes maximal, then `A_M` is a field
/// and `E_M ≅ A_M` for each maximal `M` in the support of `E`.
fn prop_supp(inst: &Instance, log: &mut Log) -> Result<()> {
    let (_, e, r) = inst.trivext_triple()?;
    let an = Analysis::new(&r);
    let sr = an.strongly_isp();
    let lr = an.lattice();
    let dim0 = lr.primes().into_iter().all(|p| lr.is_maximal(p));
    log.fact("strongly_isp", &r, sr);
    log.fact("primes maximal", &r, dim0);
    if !(sr.holds() && dim0) {
        log.skip("A_M field and E_M ≅ A_M", "A∝E not strongly ISP");
        return Ok(());
    }
    let mut ok = true;
    for m in support(&e).into_iter().filter(|m| m.is_maximal()) {
        let loc = localize_at_prime(&m)?;
        let em = localize_module(&e, &m)?;
        let field = loc.ring.is_field();
        let same = em.module.size() == loc.ring.size();
        log.note(format!(
            "M = {}: A_M field {field}, |E_M| = {}, |A_M| = {}",
            m.literal(),
            em.module.size(),
            loc.ring.size()
        ));
        // over a field, equal cardinality means one-dimensional
        ok &= field && same;
    }
    log.claim("A_M field and E_M ≅ A_M on Supp(E)", ok);
    Ok(())
}

/// For a domain `A` and nonzero divisible `E`: `A ∝ E` strongly ISP iff `A`
/// is an ISP domain and `E` is simple.
fn prop_car(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, e, r) = inst.trivext_triple()?;
    let domain = a.is_domain();
    let divisible = is_divisible(&e);
    log.fact("domain", &a, domain);
    log.note(format!("divisible {}: {divisible}", e.provenance()));
    if !(domain && divisible && !e.is_zero()) {
        log.skip("A∝E strongly ISP iff A ISP domain and E simple", "A not a domain or E not nonzero divisible");
        return Ok(());
    }
    let sr = Analysis::new(&r).strongly_isp();
    let isp = Analysis::new(&a).isp();
    let simple = is_simple(&e);
    log.fact("strongly_isp", &r, sr);
    log.fact("isp", &a, isp);
    log.note(format!("simple {}: {simple}", e.provenance()));
    log.claim(
        "A∝E strongly ISP iff A ISP domain and E simple",
        sr.holds() == (isp.holds() && simple),
    );
    Ok(())
}

fn thm_dupli(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, i, d) = inst.dup_triple()?;
    let sd = Analysis::new(&d).strongly_isp();
    let sa = Analysis::new(&a).strongly_isp();
    log.fact("strongly_isp", &d, sd);
    log.fact("strongly_isp", &a, sa);
    log.claim("(1) A⋈I strongly ISP implies A strongly ISP", !sd.holds() || sa.holds());
    let idem = i.product(&i)? == i;
    log.note(format!("{} idempotent: {idem}", i.literal()));
    if idem {
        log.claim("(2) A⋈I strongly ISP iff A strongly ISP", sd.holds() == sa.holds());
    } else {
        log.skip("(2)", "I is not idempotent");
    }
    Ok(())
}

fn remark_tq_dup(inst: &Instance, log: &mut Log) -> Result<()> {
    let (a, _, d) = inst.dup_triple()?;
    let ta = Analysis::new(&a).total_quotient().is_ok();
    let td = Analysis::new(&d).total_quotient().is_ok();
    log.fact("total_quotient", &a, ta);
    log.fact("total_quotient", &d, td);
    if ta {
        log.claim("A⋈I total quotient", td);
    } else {
        log.skip("A⋈I total quotient", "A is not a total quotient ring");
    }
    Ok(())
}

/// Rings no larger than this take part in generated suite instances.
pub const SUITE_SIZE_LIMIT: usize = 64;

/// Every (theorem, instance) pair the suite runs for a list of rings:
/// ring-level checks on each ring, module checks on trivial extensions,
/// ideal checks on duplications, plus duplications `A ⋈ I` for every ideal
/// with `|A||I| <= 64` and `Zmod(n) ∝ mod(d)` with `n·d <= 64`.
pub fn suite_instances(rings: &[Ring]) -> Vec<(TheoremId, Instance)> {
    let mut out = Vec::new();
    let ring_ids: Vec<TheoremId> = TheoremId::ALL
        .into_iter()
        .filter(|t| t.shape() == InstanceShape::Ring)
        .collect();
    let module_ids: Vec<TheoremId> = TheoremId::ALL
        .into_iter()
        .filter(|t| t.shape() == InstanceShape::RingModule)
        .collect();
    let ideal_ids: Vec<TheoremId> = TheoremId::ALL
        .into_iter()
        .filter(|t| t.shape() == InstanceShape::RingIdeal)
        .collect();
    for r in rings.iter().filter(|r| r.size() <= SUITE_SIZE_LIMIT) {
        for &t in &ring_ids {
            out.push((t, Instance::ring(r)));
        }
        match r.construction() {
            Construction::TrivExt { .. } => {
                for &t in &module_ids {
                    out.push((t, Instance::ring(r)));
                }
            }
            Construction::Dup { .. } => {
                for &t in &ideal_ids {
                    out.push((t, Instance::ring(r)));
                }
            }
            _ => {}
        }
        for ideal in all_ideals(r).ideals() {
            if r.size() * ideal.len() <= SUITE_SIZE_LIMIT {
                for &t in &ideal_ids {
                    out.push((t, Instance::with_ideal(ideal)));
                }
            }
        }
        if let Construction::Zmod(n) = r.construction() {
            for d in (2..=*n).filter(|d| n % d == 0 && n * d <= SUITE_SIZE_LIMIT) {
                let m = crate::module::make_module(r, &[d as u64]).expect("d divides n");
                for &t in &module_ids {
                    out.push((t, Instance::with_module(&m)));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<TheoremCheck>,
    pub passed: usize,
    pub failed: usize,
    pub inapplicable: usize,
}

pub fn run_suite(rings: &[Ring]) -> Result<SuiteReport> {
    let instances = suite_instances(rings);
    let checks = instances
        .par_iter()
        .map(|(t, inst)| check_theorem(*t, inst))
        .collect::<Result<Vec<_>>>()?;
    let count = |o: Outcome| checks.iter().filter(|c| c.outcome == o).count();
    Ok(SuiteReport {
        passed: count(Outcome::Pass),
        failed: count(Outcome::Fail),
        inapplicable: count(Outcome::Inapplicable),
        checks,
    })
}
