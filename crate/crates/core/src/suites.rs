//! Named verification suites and their reports.
//!
//! A suite is a list of independent checks. Each check draws from its own
//! sampler, seeded from the suite seed and the check name, so a report only
//! depends on the suite, its parameters and the seed. Checks run on a small
//! thread pool; results are collected back in declaration order.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::group_algebra::{absorbs_group, character_holds, idempotents, symmetrizer};
use crate::groups::{enumerate, generators, skew_invariant_j, stabilizer, ActionVariant, Family, GroupSpec};
use crate::invariants::{
    decompose, decompose_traced, dn_generators, dn_relation, orbit_sum, reynolds,
    torus_discriminant, Basis,
};
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::random::Sampler;
use crate::shift::{
    check_phi_relations, epsilon_r, phi, phi_inverse, phi_inverse_element, verify_intertwining,
    ShiftElement, ShiftGenerator,
};
use crate::sign::Sign;
use crate::weyl::{
    clear_discriminant, clear_invariant, epsilon, group_act_weyl, reynolds_weyl, WeylElement,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteName {
    WeylInvolutions,
    PhiIsomorphism,
    BnInvariants,
    DnInvariants,
    DiscriminantFreeness,
    SkewInvarianceJ,
    Idempotents,
    Clearing,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::WeylInvolutions,
        SuiteName::PhiIsomorphism,
        SuiteName::BnInvariants,
        SuiteName::DnInvariants,
        SuiteName::DiscriminantFreeness,
        SuiteName::SkewInvarianceJ,
        SuiteName::Idempotents,
        SuiteName::Clearing,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::WeylInvolutions => "weyl-involutions",
            SuiteName::PhiIsomorphism => "phi-isomorphism",
            SuiteName::BnInvariants => "bn-invariants",
            SuiteName::DnInvariants => "dn-invariants",
            SuiteName::DiscriminantFreeness => "discriminant-freeness",
            SuiteName::SkewInvarianceJ => "skew-invariance-J",
            SuiteName::Idempotents => "idempotents",
            SuiteName::Clearing => "clearing",
        }
    }

    /// Accepted values of `n` for the suite.
    pub fn n_range(self) -> (usize, usize) {
        match self {
            SuiteName::WeylInvolutions => (1, 3),
            SuiteName::PhiIsomorphism => (1, 3),
            SuiteName::BnInvariants => (1, 4),
            SuiteName::DnInvariants => (2, 4),
            SuiteName::DiscriminantFreeness => (1, 4),
            SuiteName::SkewInvarianceJ => (1, 3),
            SuiteName::Idempotents => (2, 24),
            SuiteName::Clearing => (1, 3),
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for SuiteName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Rational>,
    /// Record wall time per check. Off by default so reports stay
    /// byte-identical between runs.
    #[serde(skip)]
    pub timings: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: None,
            seed: 0,
            trials: 100,
            sign: None,
            c: None,
            timings: false,
        }
    }
}

impl SuiteParams {
    fn signs(&self) -> Vec<Sign> {
        match self.sign {
            Some(s) => vec![s],
            None => Sign::both().to_vec(),
        }
    }

    fn ns(&self, default: &[usize]) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => default.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub params: SuiteParams,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    /// One `CHECK <name> PASS|FAIL [witness]` line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("CHECK {} {status}", c.name));
            if let Some(w) = &c.witness {
                out.push(' ');
                out.push_str(&w.replace('\n', " "));
            }
            if let Some(ms) = c.millis {
                out.push_str(&format!(" ({ms} ms)"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

type Outcome = std::result::Result<(), String>;
type CheckFn = Box<dyn Fn(&mut Sampler) -> Result<Outcome> + Send + Sync>;

struct Check {
    name: String,
    run: CheckFn,
}

fn check(name: String, run: impl Fn(&mut Sampler) -> Result<Outcome> + Send + Sync + 'static) -> Check {
    Check {
        name,
        run: Box::new(run),
    }
}

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

/// Runs a suite. Parameter errors come back as `Err`; failed checks are
/// report entries.
pub fn run_suite(name: SuiteName, params: &SuiteParams) -> Result<SuiteReport> {
    if let Some(n) = params.n {
        let (lo, hi) = name.n_range();
        if !(lo..=hi).contains(&n) {
            return Err(Error::Range(format!("{name} takes n in {lo}..={hi}, got {n}")));
        }
    }
    let checks = match name {
        SuiteName::WeylInvolutions => weyl_checks(params),
        SuiteName::PhiIsomorphism => phi_checks(params),
        SuiteName::BnInvariants => bn_checks(params),
        SuiteName::DnInvariants => dn_checks(params),
        SuiteName::DiscriminantFreeness => freeness_checks(params),
        SuiteName::SkewInvarianceJ => skew_checks(params)?,
        SuiteName::Idempotents => idempotent_checks(params)?,
        SuiteName::Clearing => clearing_checks(params)?,
    };
    let results = execute(checks, params.seed, params.timings);
    Ok(SuiteReport {
        suite: name,
        params: params.clone(),
        passed: results.iter().all(|r| r.status == Status::Pass),
        checks: results,
    })
}

fn execute(checks: Vec<Check>, seed: u64, timings: bool) -> Vec<CheckResult> {
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(checks.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CheckResult>>> = Mutex::new(vec![None; checks.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some(c) = checks.get(idx) else { break };
                let mut sampler = Sampler::derived(seed, &c.name);
                let start = Instant::now();
                let outcome = (c.run)(&mut sampler);
                let millis = timings.then(|| start.elapsed().as_millis() as u64);
                let (status, witness) = match outcome {
                    Ok(Ok(())) => (Status::Pass, None),
                    Ok(Err(w)) => (Status::Fail, Some(w)),
                    Err(e) => (Status::Fail, Some(format!("error: {e}"))),
                };
                slots.lock().unwrap()[idx] = Some(CheckResult {
                    name: c.name.clone(),
                    status,
                    witness,
                    millis,
                });
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(|r| r.expect("every check ran")).collect()
}

fn weyl_checks(p: &SuiteParams) -> Vec<Check> {
    let trials = p.trials;
    let mut out = Vec::new();
    out.push(check("displayed values".into(), |_| {
        let d = WeylElement::d(1, 0);
        let x = WeylElement::x(1, 0);
        let x2d = WeylElement::x_pow(1, 0, 2).checked_mul(&d)?;
        let ed = epsilon(Sign::Minus, 0, &d)?;
        let ex = epsilon(Sign::Minus, 0, &x)?;
        let neg_inv = WeylElement::x_pow(1, 0, -1).neg();
        Ok(ensure(ed == x2d && ex == neg_inv, || format!("ε⁻(∂) = {ed}, ε⁻(x) = {ex}")))
    }));
    for n in p.ns(&[1, 2, 3]) {
        out.push(check(format!("faithfulness n={n}"), move |s| {
            for _ in 0..trials {
                let (u, v) = (s.weyl(n), s.weyl(n));
                let uv = u.checked_mul(&v)?;
                for _ in 0..10 {
                    let f = s.laurent(n);
                    let lhs = uv.apply_to_laurent(&f)?;
                    let rhs = u.apply_to_laurent(&v.apply_to_laurent(&f)?)?;
                    if lhs != rhs {
                        return Ok(Err(format!("u = {u}; v = {v}; f = {f}")));
                    }
                }
            }
            Ok(Ok(()))
        }));
        for sign in p.signs() {
            out.push(check(format!("involution {sign} n={n}"), move |s| {
                for _ in 0..trials {
                    let u = s.weyl(n);
                    for j in 0..n {
                        if epsilon(sign, j, &epsilon(sign, j, &u)?)? != u {
                            return Ok(Err(format!("j = {}; u = {u}", j + 1)));
                        }
                    }
                }
                Ok(Ok(()))
            }));
            out.push(check(format!("automorphism {sign} n={n}"), move |s| {
                for _ in 0..trials {
                    let (u, v) = (s.weyl(n), s.weyl(n));
                    let uv = u.checked_mul(&v)?;
                    for j in 0..n {
                        let lhs = epsilon(sign, j, &uv)?;
                        let rhs = epsilon(sign, j, &u)?.checked_mul(&epsilon(sign, j, &v)?)?;
                        if lhs != rhs {
                            return Ok(Err(format!("j = {}; u = {u}; v = {v}", j + 1)));
                        }
                    }
                }
                Ok(Ok(()))
            }));
            out.push(check(format!("image commutator {sign} n={n}"), move |_| {
                for j in 0..n {
                    let ed = epsilon(sign, j, &WeylElement::d(n, j))?;
                    let ex = epsilon(sign, j, &WeylElement::x(n, j))?;
                    let comm = ed.commutator(&ex)?;
                    if comm != WeylElement::one(n) {
                        return Ok(Err(format!("j = {}: [ε(∂), ε(x)] = {comm}", j + 1)));
                    }
                }
                Ok(Ok(()))
            }));
        }
        let mut groups = vec![GroupSpec::b(n)];
        if n >= 2 {
            groups.push(GroupSpec::d(n));
        }
        for spec in groups {
            for variant in [ActionVariant::TorusMinus, ActionVariant::TorusPlus] {
                let samples = (trials / 10).max(5);
                out.push(check(format!("group homomorphism {spec} {variant}"), move |s| {
                    let gens = generators(&spec, variant);
                    for _ in 0..samples {
                        let u = s.weyl(n);
                        for g in &gens {
                            let back = group_act_weyl(&g.inverse(), &group_act_weyl(g, &u)?)?;
                            if back != u {
                                return Ok(Err(format!("g = {g}; u = {u}: g⁻¹·(g·u) != u")));
                            }
                            for h in &gens {
                                let lhs = group_act_weyl(&g.compose(h)?, &u)?;
                                let rhs = group_act_weyl(g, &group_act_weyl(h, &u)?)?;
                                if lhs != rhs {
                                    return Ok(Err(format!("g = {g}; h = {h}; u = {u}")));
                                }
                            }
                        }
                    }
                    Ok(Ok(()))
                }));
                out.push(check(format!("operator consistency {spec} {variant}"), move |s| {
                    for _ in 0..trials {
                        let g = s.group_element(&spec, variant);
                        let f = s.laurent(n);
                        let as_op = group_act_weyl(&g, &WeylElement::from_laurent(&f))?;
                        if as_op != WeylElement::from_laurent(&g.act(&f)?) {
                            return Ok(Err(format!("g = {g}; f = {f}")));
                        }
                        let u = s.weyl(n);
                        let lhs = group_act_weyl(&g, &u)?.apply_to_laurent(&g.act(&f)?)?;
                        let rhs = g.act(&u.apply_to_laurent(&f)?)?;
                        if lhs != rhs {
                            return Ok(Err(format!("g = {g}; u = {u}; f = {f}")));
                        }
                    }
                    Ok(Ok(()))
                }));
            }
        }
    }
    out
}

fn c_grid(p: &SuiteParams) -> Vec<Rational> {
    match &p.c {
        Some(c) => vec![c.clone()],
        None => vec![
            Rational::zero(),
            Rational::new(1, 2),
            Rational::from(2),
            Rational::from(3),
        ],
    }
}

fn phi_checks(p: &SuiteParams) -> Vec<Check> {
    let trials = p.trials;
    let mut out = Vec::new();
    for n in p.ns(&[1]) {
        out.push(check(format!("shift relations N={n}"), move |s| {
            let one = ShiftElement::one(n);
            for i in 0..n {
                let (si, ti) = (ShiftElement::sigma(n, i), ShiftElement::t(n, i));
                let conj = si.checked_mul(&ti)?.checked_mul(&ShiftElement::sigma_pow(n, i, -1))?;
                if ti.checked_sub(&conj)? != one {
                    return Ok(Err(format!("t{0} - σ{0} t{0} σ{0}⁻¹ = {1}", i + 1, ti.checked_sub(&conj)?)));
                }
                for j in (0..n).filter(|&j| j != i) {
                    let (sj, tj) = (ShiftElement::sigma(n, j), ShiftElement::t(n, j));
                    if si.checked_mul(&sj)? != sj.checked_mul(&si)?
                        || si.checked_mul(&tj)? != tj.checked_mul(&si)?
                    {
                        return Ok(Err(format!("σ{} fails to commute with index {}", i + 1, j + 1)));
                    }
                }
            }
            for _ in 0..trials {
                let (a, b, c) = (s.shift(n), s.shift(n), s.shift(n));
                if a.checked_mul(&b)?.checked_mul(&c)? != a.checked_mul(&b.checked_mul(&c)?)? {
                    return Ok(Err(format!("a = {a}; b = {b}; c = {c}")));
                }
            }
            Ok(Ok(()))
        }));
        for sign in p.signs() {
            for c in c_grid(p) {
                let tag = format!("{sign} c={c} N={n}");
                let cc = c.clone();
                out.push(check(format!("relations {tag}"), move |_| {
                    Ok(check_phi_relations(sign, &cc, n).map_err(|e| e.to_string()))
                }));
                let cc = c.clone();
                out.push(check(format!("homomorphism {tag}"), move |s| {
                    for _ in 0..trials {
                        let (u, v) = (s.weyl(n), s.weyl(n));
                        let lhs = phi(sign, &cc, &u.checked_mul(&v)?)?;
                        let rhs = phi(sign, &cc, &u)?.checked_mul(&phi(sign, &cc, &v)?)?;
                        if lhs != rhs {
                            return Ok(Err(format!("u = {u}; v = {v}")));
                        }
                    }
                    Ok(Ok(()))
                }));
                let cc = c.clone();
                out.push(check(format!("injectivity {tag}"), move |s| {
                    for _ in 0..trials {
                        let u = s.nonzero_weyl(n);
                        let img = phi(sign, &cc, &u)?;
                        if img.is_zero() || phi_inverse_element(sign, &cc, &img)? != u {
                            return Ok(Err(format!("u = {u}")));
                        }
                    }
                    Ok(Ok(()))
                }));
                let cc = c.clone();
                out.push(check(format!("intertwining {tag}"), move |s| {
                    let samples: Vec<_> = (0..trials).map(|_| s.weyl(n)).collect();
                    let report = verify_intertwining(sign, &cc, n, &samples)?;
                    Ok(match report.checks.iter().find(|c| !c.passed) {
                        None => Ok(()),
                        Some(c) => Err(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())),
                    })
                }));
                let cc = c.clone();
                out.push(check(format!("round trip {tag}"), move |_| {
                    for i in 0..n {
                        for (g, img) in [
                            (ShiftGenerator::Sigma(i), ShiftElement::sigma(n, i)),
                            (ShiftGenerator::T(i), ShiftElement::t(n, i)),
                        ] {
                            let pre = phi_inverse(sign, &cc, n, g)?;
                            let back = phi(sign, &cc, &pre)?;
                            if back != img {
                                return Ok(Err(format!("φ(φ⁻¹({img})) = {back}")));
                            }
                        }
                        for u in [WeylElement::x(n, i), WeylElement::d(n, i)] {
                            let back = phi_inverse_element(sign, &cc, &phi(sign, &cc, &u)?)?;
                            if back != u {
                                return Ok(Err(format!("φ⁻¹(φ({u})) = {back}")));
                            }
                        }
                    }
                    Ok(Ok(()))
                }));
                let cc = c.clone();
                out.push(check(format!("shift involution {tag}"), move |s| {
                    for _ in 0..trials {
                        let (a, b) = (s.shift(n), s.shift(n));
                        let ab = a.checked_mul(&b)?;
                        for i in 0..n {
                            if epsilon_r(sign, &cc, i, &epsilon_r(sign, &cc, i, &a)?)? != a {
                                return Ok(Err(format!("i = {}; a = {a}", i + 1)));
                            }
                            let lhs = epsilon_r(sign, &cc, i, &ab)?;
                            let rhs = epsilon_r(sign, &cc, i, &a)?.checked_mul(&epsilon_r(sign, &cc, i, &b)?)?;
                            if lhs != rhs {
                                return Ok(Err(format!("i = {}; a = {a}; b = {b}", i + 1)));
                            }
                        }
                    }
                    Ok(Ok(()))
                }));
            }
        }
    }
    out
}

fn round_trip(f: &LaurentPoly, basis: Basis) -> Result<Outcome> {
    let run = match decompose_traced(f, basis) {
        Ok(run) => run,
        Err(e) => return Ok(Err(format!("{e}; f = {f}"))),
    };
    if !run.strictly_descending() {
        return Ok(Err(format!("leading terms not strictly descending for {f}")));
    }
    let back = run.decomposition.expand()?;
    Ok(ensure(back == *f, || format!("f = {f}; decomposition = {}", run.decomposition)))
}

fn invariant_checks(out: &mut Vec<Check>, basis: Basis, n: usize, trials: usize) {
    out.push(check(format!("orbit round trip {basis} n={n}"), move |s| {
        let (spec, variant) = basis.group(n)?;
        for _ in 0..trials {
            let pi = s.dominant(spec.family, n, 4);
            let f = orbit_sum(&pi, &spec, variant)?;
            if let Err(w) = round_trip(&f, basis)? {
                return Ok(Err(format!("π = {:?}: {w}", pi.entries())));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check(format!("reynolds round trip {basis} n={n}"), move |s| {
        let (spec, variant) = basis.group(n)?;
        for _ in 0..trials {
            let f = reynolds(&s.laurent(n), &spec, variant)?;
            if let Err(w) = round_trip(&f, basis)? {
                return Ok(Err(w));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check(format!("rejects non-invariant {basis} n={n}"), move |_| {
        let x1 = LaurentPoly::var(n, 0);
        Ok(match decompose(&x1, basis) {
            Err(Error::NotInvariant { .. }) => Ok(()),
            other => Err(format!("decompose(x1) gave {other:?}")),
        })
    }));
}

fn bn_checks(p: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for n in p.ns(&[2, 3]) {
        for sign in p.signs() {
            let basis = match sign {
                Sign::Minus => Basis::BMinus,
                Sign::Plus => Basis::BPlus,
            };
            invariant_checks(&mut out, basis, n, p.trials);
        }
    }
    out
}

fn dn_checks(p: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for n in p.ns(&[2, 3, 4]) {
        let trials = if n >= 4 { p.trials.min(10) } else { p.trials };
        invariant_checks(&mut out, Basis::D, n, trials);
        out.push(check(format!("relation n={n}"), move |_| {
            let rel = dn_relation(n)?;
            let gens = dn_generators(n)?;
            let product = gens.delta_plus.checked_mul(&gens.delta_minus)?;
            let dec = decompose(&product, Basis::BPlus)?;
            if dec.degree_in(n - 1) > 1 {
                return Ok(Err(format!("s{n} has degree {} in Δ⁺Δ⁻", dec.degree_in(n - 1))));
            }
            let (p0, p1) = (rel.p0.expand()?, rel.p1.expand()?);
            let lhs = gens.delta_minus.checked_mul(&gens.delta_plus.checked_sub(&p0)?)?;
            let rhs = gens.delta_plus.checked_mul(&p0)?.checked_add(&p1)?;
            if lhs != rhs {
                return Ok(Err("Δ⁻(Δ⁺ - p₀) != Δ⁺p₀ + p₁".into()));
            }
            if n == 2 && (rel.p0.to_string() != "-2" || rel.p1.to_string() != "s1^2 - 4") {
                return Ok(Err(format!("p₀ = {}, p₁ = {}", rel.p0, rel.p1)));
            }
            Ok(Ok(()))
        }));
    }
    out
}

fn torus_groups(n: usize) -> Vec<(GroupSpec, ActionVariant)> {
    let mut out = vec![
        (GroupSpec::b(n), ActionVariant::TorusMinus),
        (GroupSpec::b(n), ActionVariant::TorusPlus),
    ];
    if n >= 2 {
        out.push((GroupSpec::d(n), ActionVariant::TorusMinus));
        out.push((GroupSpec::d(n), ActionVariant::TorusPlus));
    }
    out
}

fn freeness_checks(p: &SuiteParams) -> Vec<Check> {
    let trials = p.trials;
    let mut out = Vec::new();
    for n in p.ns(&[2, 3]) {
        out.push(check(format!("discriminant invariance n={n}"), move |_| {
            let delta = torus_discriminant(n)?;
            for (spec, variant) in torus_groups(n) {
                for g in enumerate(&spec, variant)? {
                    if g.act(&delta)? != delta {
                        return Ok(Err(format!("{spec} {variant}: g = {g}")));
                    }
                }
            }
            Ok(Ok(()))
        }));
        out.push(check(format!("free off the discriminant n={n}"), move |s| {
            let delta = torus_discriminant(n)?;
            let mut accepted = 0;
            let mut attempts = 0;
            while accepted < trials {
                attempts += 1;
                if attempts > 100 * trials.max(1) {
                    return Ok(Err("could not draw enough points off the discriminant".into()));
                }
                let pt = s.point(n);
                if delta.evaluate(&pt)?.is_zero() {
                    continue;
                }
                accepted += 1;
                for (spec, variant) in torus_groups(n) {
                    let stab = stabilizer(&spec, variant, &pt)?;
                    if stab.len() != 1 {
                        return Ok(Err(format!("{spec} {variant}: point {pt:?} fixed by {}", stab[1])));
                    }
                }
            }
            Ok(Ok(()))
        }));
        if n >= 2 {
            out.push(check(format!("witness on the discriminant n={n}"), move |_| {
                let delta = torus_discriminant(n)?;
                let tail = (3..).take(n - 2).map(Rational::from);
                for (second, variant) in [
                    (Rational::new(-1, 2), ActionVariant::TorusMinus),
                    (Rational::new(1, 2), ActionVariant::TorusPlus),
                ] {
                    let pt: Vec<Rational> =
                        [Rational::from(2), second].into_iter().chain(tail.clone()).collect();
                    if !delta.evaluate(&pt)?.is_zero() {
                        return Ok(Err(format!("{pt:?} is off the discriminant")));
                    }
                    for spec in [GroupSpec::b(n), GroupSpec::d(n)] {
                        if variant == ActionVariant::TorusMinus && spec.family == Family::D {
                            continue;
                        }
                        if stabilizer(&spec, variant, &pt)?.len() < 2 {
                            return Ok(Err(format!("{spec} {variant}: {pt:?} has trivial stabilizer")));
                        }
                    }
                }
                Ok(Ok(()))
            }));
        }
    }
    out
}

fn specs_s_b(p: &SuiteParams, defaults: &[usize]) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    for family in [Family::S, Family::B] {
        for n in p.ns(defaults) {
            if family == Family::S && n == 1 && p.n.is_none() {
                continue;
            }
            out.push(GroupSpec::new(family, n)?);
        }
    }
    Ok(out)
}

fn skew_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let trials = p.trials;
    let mut out = Vec::new();
    for spec in specs_s_b(p, &[2, 3])? {
        out.push(check(format!("skew invariant {spec}"), move |_| {
            let sk = skew_invariant_j(&spec)?;
            if sk.j.is_zero() {
                return Ok(Err("J vanishes".into()));
            }
            for g in enumerate(&spec, ActionVariant::Linear)? {
                if g.act(&sk.j)? != sk.j.scale(&g.determinant()) {
                    return Ok(Err(format!("g = {g}: g·J != det(g)·J")));
                }
                if g.act(&sk.delta_lin)? != sk.delta_lin {
                    return Ok(Err(format!("g = {g}: g·Δ != Δ")));
                }
            }
            Ok(Ok(()))
        }));
        out.push(check(format!("free on regular points {spec}"), move |s| {
            let j = skew_invariant_j(&spec)?.j;
            let mut accepted = 0;
            let mut attempts = 0;
            while accepted < trials {
                attempts += 1;
                if attempts > 100 * trials.max(1) {
                    return Ok(Err("could not draw enough regular points".into()));
                }
                let pt = s.point(spec.n);
                if j.evaluate(&pt)?.is_zero() {
                    continue;
                }
                accepted += 1;
                let stab = stabilizer(&spec, ActionVariant::Linear, &pt)?;
                if stab.len() != 1 {
                    return Ok(Err(format!("{pt:?} fixed by {}", stab[1])));
                }
            }
            Ok(Ok(()))
        }));
    }
    Ok(out)
}

fn coordinate_discriminant(spec: &GroupSpec) -> LaurentPoly {
    let power = if spec.family == Family::S { 1 } else { 2 };
    LaurentPoly::monomial(ExponentVector::new(vec![power; spec.n]), Rational::one())
}

fn clearing_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let trials = p.trials;
    let mut out = Vec::new();
    for spec in specs_s_b(p, &[2, 3])? {
        out.push(check(format!("clears localized invariants {spec}"), move |s| {
            let n = spec.n;
            let delta = coordinate_discriminant(&spec);
            for _ in 0..trials {
                let k0 = s.int(0, 4);
                let core = loop {
                    let v = reynolds_weyl(&s.weyl_polynomial(n), &spec, ActionVariant::Linear)?;
                    if !v.is_zero() {
                        break v;
                    }
                };
                let u = WeylElement::from_laurent(&delta.pow(-k0)?).checked_mul(&core)?;
                let (k, v) = clear_invariant(&u, &delta, 4, &spec, ActionVariant::Linear)?;
                if k as i64 > k0 || !v.is_polynomial() {
                    return Ok(Err(format!("k = {k} for u = {u}")));
                }
                let expect = WeylElement::from_laurent(&delta.pow(k as i64)?).checked_mul(&u)?;
                if v != expect {
                    return Ok(Err(format!("cleared operator differs for u = {u}")));
                }
            }
            Ok(Ok(()))
        }));
        out.push(check(format!("reports clearing failure {spec}"), move |_| {
            let n = spec.n;
            let u = WeylElement::x_pow(n, 0, -9);
            Ok(match clear_discriminant(&u, &coordinate_discriminant(&spec), 1) {
                Err(Error::ClearingFailure { .. }) => Ok(()),
                other => Err(format!("expected a clearing failure, got {other:?}")),
            })
        }));
    }
    Ok(out)
}

fn idempotent_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let orders: Vec<u32> = match p.n {
        Some(m) => vec![m as u32],
        None => (2..=12).collect(),
    };
    for m in orders {
        out.push(check(format!("projectors m={m}"), move |_| {
            let es = idempotents(m)?;
            if es.len() != m as usize {
                return Ok(Err(format!("{} projectors", es.len())));
            }
            for (i, e) in es.iter().enumerate() {
                if !character_holds(e, i as i64)? {
                    return Ok(Err(format!("g·e_{i} != ζ^{i} e_{i}")));
                }
            }
            Ok(Ok(()))
        }));
    }
    if p.n.is_none() {
        for spec in [GroupSpec::s(3), GroupSpec::b(2)] {
            out.push(check(format!("symmetrizer {spec}"), move |_| {
                let e = symmetrizer(&spec)?;
                Ok(ensure(absorbs_group(&e, &spec)?, || format!("w·e != e in {spec}")))
            }));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in SuiteName::ALL {
            assert_eq!(name.as_str().parse::<SuiteName>().unwrap(), name);
        }
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn small_suites_pass_and_repeat() {
        let params = SuiteParams {
            trials: 5,
            seed: 3,
            ..Default::default()
        };
        for name in [SuiteName::Idempotents, SuiteName::WeylInvolutions] {
            let a = run_suite(name, &params).unwrap();
            assert!(a.passed, "{}", a.to_text());
            let b = run_suite(name, &params).unwrap();
            assert_eq!(a.to_json(), b.to_json());
        }
    }

    #[test]
    fn rank_is_validated() {
        let params = SuiteParams {
            n: Some(9),
            ..Default::default()
        };
        assert!(run_suite(SuiteName::DnInvariants, &params).is_err());
    }
}
