//! Invariants of B_n and D_n acting on the torus.
//!
//! B_n acts through signed inversions `x ↦ -x⁻¹` (or plain inversions for the
//! `plus` flavor) and permutations; D_n through permutations and an even
//! number of plain inversions. The invariant rings are generated by
//!
//! * `s_i = e_i(x_1 ∓ x_1⁻¹, …, x_n ∓ x_n⁻¹)` for B_n, and
//! * `s_1, …, s_{n-1}` (plus flavor) together with
//!   `Δ± = ½(∏(x_i + x_i⁻¹) ± ∏(x_i - x_i⁻¹))` for D_n.
//!
//! [`decompose`] rewrites an invariant in these generators by repeatedly
//! cancelling the lex-leading monomial against a product of generators with
//! the same leading monomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::groups::{self, certify_invariant, enumerate, ActionVariant, Family, GroupSpec};
use crate::laurent::{elementary_symmetric, ExponentVector, LaurentPoly};
use crate::sign::Sign;

/// Hard stop for [`decompose`].
pub const MAX_DECOMPOSE_STEPS: usize = 100_000;

type Poly = LaurentPoly<Rational>;

/// `|G|⁻¹ Σ_g g·f`, the projector onto invariants.
pub fn reynolds(f: &Poly, spec: &GroupSpec, variant: ActionVariant) -> Result<Poly> {
    groups::average(f, spec, variant)
}

fn shifted_vars(n: usize, sign: Sign) -> Vec<Poly> {
    (0..n)
        .map(|i| {
            let x = Poly::var(n, i);
            let inv = Poly::var_pow(n, i, -1);
            match sign {
                Sign::Minus => &x - &inv,
                Sign::Plus => &x + &inv,
            }
        })
        .collect()
}

fn torus_variant(sign: Sign) -> ActionVariant {
    match sign {
        Sign::Minus => ActionVariant::TorusMinus,
        Sign::Plus => ActionVariant::TorusPlus,
    }
}

/// `s_i = e_i(x_j ∓ x_j⁻¹)`, `i = 1..n`, each certified B_n-invariant under
/// the matching torus action.
pub fn bn_generators(n: usize, sign: Sign) -> Result<Vec<Poly>> {
    let spec = GroupSpec::new(Family::B, n)?;
    let args = shifted_vars(n, sign);
    let variant = torus_variant(sign);
    (1..=n)
        .map(|i| {
            let s = elementary_symmetric(i, &args)?;
            certify_invariant(&s, &spec, variant)
                .map_err(|e| Error::Internal(format!("s_{i} not invariant: {e}")))?;
            Ok(s)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct DnGenerators {
    /// `s_1, …, s_{n-1}` in the plus flavor.
    pub s: Vec<Poly>,
    pub delta_plus: Poly,
    pub delta_minus: Poly,
}

impl DnGenerators {
    /// In decomposition order: `s_1, …, s_{n-1}, Δ⁺, Δ⁻`.
    pub fn into_vec(self) -> Vec<Poly> {
        let mut v = self.s;
        v.push(self.delta_plus);
        v.push(self.delta_minus);
        v
    }
}

pub fn dn_generators(n: usize) -> Result<DnGenerators> {
    let spec = GroupSpec::new(Family::D, n)?;
    let plus = shifted_vars(n, Sign::Plus);
    let minus = shifted_vars(n, Sign::Minus);
    let s = (1..n)
        .map(|i| elementary_symmetric(i, &plus))
        .collect::<Result<Vec<_>>>()?;
    let prod_plus = elementary_symmetric(n, &plus)?;
    let prod_minus = elementary_symmetric(n, &minus)?;
    let half = Rational::new(1, 2);
    let delta_plus = (&prod_plus + &prod_minus).scale(&half);
    let delta_minus = (&prod_plus - &prod_minus).scale(&half);

    for (name, g) in s
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("s_{}", i + 1), g))
        .chain([("Δ+".to_string(), &delta_plus), ("Δ-".to_string(), &delta_minus)])
    {
        certify_invariant(g, &spec, ActionVariant::TorusPlus)
            .map_err(|e| Error::Internal(format!("{name} not D_{n}-invariant: {e}")))?;
    }
    let ones = ExponentVector::new(vec![1; n]);
    let mut last_neg = vec![1; n];
    last_neg[n - 1] = -1;
    let checks = [
        (&delta_plus, ones),
        (&delta_minus, ExponentVector::new(last_neg)),
    ];
    for (g, want) in checks {
        let (e, c) = g.lex_leading()?;
        if *e != want || !c.is_one() {
            return Err(Error::Internal(format!(
                "unexpected leading term {c} x^{e:?} of Δ±"
            )));
        }
    }
    Ok(DnGenerators {
        s,
        delta_plus,
        delta_minus,
    })
}

/// Which generating family a decomposition is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "B-minus")]
    BMinus,
    #[serde(rename = "B-plus")]
    BPlus,
    #[serde(rename = "D")]
    D,
}

impl Basis {
    pub fn group(self, n: usize) -> Result<(GroupSpec, ActionVariant)> {
        Ok(match self {
            Basis::BMinus => (GroupSpec::new(Family::B, n)?, ActionVariant::TorusMinus),
            Basis::BPlus => (GroupSpec::new(Family::B, n)?, ActionVariant::TorusPlus),
            Basis::D => (GroupSpec::new(Family::D, n)?, ActionVariant::TorusPlus),
        })
    }

    pub fn generators(self, n: usize) -> Result<Vec<Poly>> {
        match self {
            Basis::BMinus => bn_generators(n, Sign::Minus),
            Basis::BPlus => bn_generators(n, Sign::Plus),
            Basis::D => Ok(dn_generators(n)?.into_vec()),
        }
    }

    pub fn generator_count(self, n: usize) -> usize {
        match self {
            Basis::D => n + 1,
            _ => n,
        }
    }

    fn generator_names(self, n: usize) -> Vec<String> {
        match self {
            Basis::D => (1..n)
                .map(|i| format!("s{i}"))
                .chain(["Δ+".into(), "Δ-".into()])
                .collect(),
            _ => (1..=n).map(|i| format!("s{i}")).collect(),
        }
    }

    /// Generator exponents whose product has leading exponent `k`, or `None`
    /// when `k` is not dominant for this basis.
    fn exponents_for(self, k: &[i64]) -> Option<Vec<u32>> {
        let n = k.len();
        let mut out = Vec::with_capacity(self.generator_count(n));
        match self {
            Basis::BMinus | Basis::BPlus => {
                for i in 0..n {
                    let next = if i + 1 < n { k[i + 1] } else { 0 };
                    out.push(u32::try_from(k[i] - next).ok()?);
                }
            }
            Basis::D => {
                let last = k[n - 1];
                for i in 0..n - 1 {
                    let next = if i + 1 < n - 1 { k[i + 1] } else { last.abs() };
                    out.push(u32::try_from(k[i] - next).ok()?);
                }
                let mag = last.unsigned_abs() as u32;
                if last >= 0 {
                    out.extend([mag, 0]);
                } else {
                    out.extend([0, mag]);
                }
            }
        }
        Some(out)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::BMinus => "B-minus",
            Basis::BPlus => "B-plus",
            Basis::D => "D",
        })
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B-minus" => Ok(Basis::BMinus),
            "B-plus" => Ok(Basis::BPlus),
            "D" => Ok(Basis::D),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A polynomial in the generators of a [`Basis`]: generator exponent tuples
/// mapped to rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub basis: Basis,
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Rational>,
}

impl Decomposition {
    pub fn zero(basis: Basis, nvars: usize) -> Self {
        Decomposition {
            basis,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn coeff(&self, gen_exp: &[u32]) -> Rational {
        self.terms.get(gen_exp).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, gen_exp: Vec<u32>, c: Rational) {
        let slot = self.terms.entry(gen_exp.clone()).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&gen_exp);
        }
    }

    /// Substitutes the generator polynomials back in.
    pub fn expand(&self) -> Result<Poly> {
        let gens = self.basis.generators(self.nvars)?;
        let mut cache = PowerCache::new(&gens);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out = out.checked_add(&cache.product(e)?.scale(c))?;
        }
        Ok(out)
    }

    /// Highest power of generator `index` that appears.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|e| e[index]).max().unwrap_or(0)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.basis.generator_names(self.nvars);
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(&names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
                .collect();
            let mono = mono.join("*");
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}*{mono}"),
            };
            let sep = match (idx, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct DecompTermJson {
    gen_exp: Vec<u32>,
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct DecompJson {
    basis: Basis,
    nvars: usize,
    terms: Vec<DecompTermJson>,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompJson {
            basis: self.basis,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| DecompTermJson {
                    gen_exp: e.clone(),
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = DecompJson::deserialize(d)?;
        let want = raw.basis.generator_count(raw.nvars);
        let mut out = Decomposition::zero(raw.basis, raw.nvars);
        for t in raw.terms {
            if t.gen_exp.len() != want {
                return Err(D::Error::custom(format!(
                    "gen_exp {:?} should have {want} entries",
                    t.gen_exp
                )));
            }
            out.add_term(t.gen_exp, t.coef);
        }
        Ok(out)
    }
}

struct PowerCache<'a> {
    gens: &'a [Poly],
    powers: HashMap<(usize, u32), Poly>,
}

impl<'a> PowerCache<'a> {
    fn new(gens: &'a [Poly]) -> Self {
        PowerCache {
            gens,
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, i: usize, k: u32) -> Result<Poly> {
        if let Some(p) = self.powers.get(&(i, k)) {
            return Ok(p.clone());
        }
        let p = if k == 0 {
            Poly::one(self.gens[i].nvars())
        } else {
            self.power(i, k - 1)?.checked_mul(&self.gens[i])?
        };
        self.powers.insert((i, k), p.clone());
        Ok(p)
    }

    fn product(&mut self, exps: &[u32]) -> Result<Poly> {
        let n = self.gens.first().map_or(0, Poly::nvars);
        let mut acc = Poly::one(n);
        for (i, &k) in exps.iter().enumerate() {
            if k > 0 {
                acc = acc.checked_mul(&self.power(i, k)?)?;
            }
        }
        Ok(acc)
    }
}

/// A decomposition plus the lex-leading exponent seen at each step.
#[derive(Clone, Debug)]
pub struct DecompositionRun {
    pub decomposition: Decomposition,
    pub leading_trace: Vec<ExponentVector>,
}

impl DecompositionRun {
    pub fn strictly_descending(&self) -> bool {
        self.leading_trace.windows(2).all(|w| w[1] < w[0])
    }
}

/// Writes an invariant as a polynomial in the generators of `basis`.
pub fn decompose(f: &Poly, basis: Basis) -> Result<Decomposition> {
    decompose_traced(f, basis).map(|run| run.decomposition)
}

pub fn decompose_traced(f: &Poly, basis: Basis) -> Result<DecompositionRun> {
    let n = f.nvars();
    let gens = basis.generators(n)?;
    let mut cache = PowerCache::new(&gens);
    let mut rest = f.clone();
    let mut out = Decomposition::zero(basis, n);
    let mut trace: Vec<ExponentVector> = Vec::new();
    while !rest.is_zero() {
        if trace.len() >= MAX_DECOMPOSE_STEPS {
            return Err(Error::NonTermination(MAX_DECOMPOSE_STEPS));
        }
        let (lead, c) = rest.lex_leading()?;
        let (lead, c) = (lead.clone(), c.clone());
        if let Some(prev) = trace.last() {
            if lead >= *prev {
                return Err(Error::Internal(format!(
                    "leading exponent {lead:?} did not drop below {prev:?}"
                )));
            }
        }
        let gen_exp = basis
            .exponents_for(lead.entries())
            .ok_or_else(|| Error::NotInvariant {
                monomial: lead.entries().to_vec(),
            })?;
        let m = cache.product(&gen_exp)?;
        let (m_lead, m_coef) = m.lex_leading()?;
        if *m_lead != lead || !m_coef.is_one() {
            return Err(Error::Internal(format!(
                "generator product has leading term {m_coef} x^{m_lead:?}, wanted x^{lead:?}"
            )));
        }
        rest = rest.checked_sub(&m.scale(&c))?;
        out.add_term(gen_exp, c);
        trace.push(lead);
    }
    Ok(DecompositionRun {
        decomposition: out,
        leading_trace: trace,
    })
}

/// Orbit-representative exponent: `k_1 ≥ … ≥ k_n ≥ 0` (B) or
/// `k_1 ≥ … ≥ k_{n-1} ≥ |k_n|` (D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantExponent {
    flavor: Family,
    entries: Vec<i64>,
}

impl DominantExponent {
    pub fn new(flavor: Family, entries: Vec<i64>) -> Result<Self> {
        let n = entries.len();
        let ok = match flavor {
            Family::B => entries.windows(2).all(|w| w[0] >= w[1]) && entries.last().is_none_or(|&k| k >= 0),
            Family::D => {
                n >= 2
                    && entries[..n - 1].windows(2).all(|w| w[0] >= w[1])
                    && entries[n - 2] >= entries[n - 1].abs()
            }
            Family::S => {
                return Err(Error::Unsupported("dominant exponents are B- or D-flavored".into()))
            }
        };
        if !ok {
            return Err(Error::Range(format!(
                "{entries:?} is not {flavor}-dominant"
            )));
        }
        Ok(DominantExponent { flavor, entries })
    }

    pub fn flavor(&self) -> Family {
        self.flavor
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

/// `m_π = λ_π⁻¹ Σ_{g ∈ G} g·x^π`, where `λ_π` counts the elements fixing
/// `x^π`. The coefficient of `x^π` in the result is 1.
pub fn orbit_sum(pi: &DominantExponent, spec: &GroupSpec, variant: ActionVariant) -> Result<Poly> {
    if pi.flavor != spec.family || pi.entries.len() != spec.n {
        return Err(Error::InvalidAction(format!(
            "{:?} is not an exponent for {spec}",
            pi.entries
        )));
    }
    let mono = Poly::monomial(ExponentVector::new(pi.entries.clone()), Rational::one());
    let mut sum = Poly::zero(spec.n);
    let mut stabilizer = 0i64;
    for g in enumerate(spec, variant)? {
        let img = g.act(&mono)?;
        if img == mono {
            stabilizer += 1;
        }
        sum = sum.checked_add(&img)?;
    }
    Ok(sum.scale(&Rational::new(1, stabilizer)))
}

/// The B_n-invariant whose non-vanishing locus carries a free action:
/// `∏_{i,j}(x_i² - x_j⁻²) · ∏_{i<j}(x_i² - x_j²)(x_i⁻² - x_j⁻²) · ∏_i(x_i² - x_i⁻²)`.
pub fn torus_discriminant(n: usize) -> Result<Poly> {
    if !(1..=4).contains(&n) {
        return Err(Error::Range(format!("torus discriminant needs 1 <= n <= 4, got {n}")));
    }
    let sq = |i: usize, k: i64| Poly::var_pow(n, i, 2 * k);
    let mut out = Poly::one(n);
    for i in 0..n {
        for j in 0..n {
            out = out.checked_mul(&(&sq(i, 1) - &sq(j, -1)))?;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            out = out.checked_mul(&(&sq(i, 1) - &sq(j, 1)))?;
            out = out.checked_mul(&(&sq(i, -1) - &sq(j, -1)))?;
        }
    }
    for i in 0..n {
        out = out.checked_mul(&(&sq(i, 1) - &sq(i, -1)))?;
    }
    let b = GroupSpec::new(Family::B, n)?;
    for variant in [ActionVariant::TorusMinus, ActionVariant::TorusPlus] {
        certify_invariant(&out, &b, variant)
            .map_err(|e| Error::Internal(format!("Δ not B_{n} {variant} invariant: {e}")))?;
    }
    if n >= 2 {
        certify_invariant(&out, &GroupSpec::new(Family::D, n)?, ActionVariant::TorusPlus)
            .map_err(|e| Error::Internal(format!("Δ not D_{n} invariant: {e}")))?;
    }
    Ok(out)
}

/// `Δ⁺Δ⁻ = p₁(s_1..s_{n-1}) + s_n·p₀(s_1..s_{n-1})` in the B-plus generators,
/// and `P = Δ⁺ - p₀`.
#[derive(Clone, Debug)]
pub struct DnRelation {
    /// B-plus decomposition with no `s_n`.
    pub p0: Decomposition,
    /// B-plus decomposition with no `s_n`.
    pub p1: Decomposition,
    pub p: Poly,
}

pub fn dn_relation(n: usize) -> Result<DnRelation> {
    if !(2..=4).contains(&n) {
        return Err(Error::Range(format!("D_n relation computed for 2 <= n <= 4, got {n}")));
    }
    let gens = dn_generators(n)?;
    let product = gens.delta_plus.checked_mul(&gens.delta_minus)?;
    let dec = decompose(&product, Basis::BPlus)?;
    if dec.degree_in(n - 1) > 1 {
        return Err(Error::TheoryViolation(format!(
            "s_{n} enters Δ⁺Δ⁻ with degree {}",
            dec.degree_in(n - 1)
        )));
    }
    let mut p0 = Decomposition::zero(Basis::BPlus, n);
    let mut p1 = Decomposition::zero(Basis::BPlus, n);
    for (e, c) in &dec.terms {
        let mut e = e.clone();
        if e[n - 1] == 1 {
            e[n - 1] = 0;
            p0.add_term(e, c.clone());
        } else {
            p1.add_term(e, c.clone());
        }
    }
    let p0_poly = p0.expand()?;
    let p1_poly = p1.expand()?;
    let p = gens.delta_plus.checked_sub(&p0_poly)?;
    let lhs = gens.delta_minus.checked_mul(&p)?;
    let rhs = gens.delta_plus.checked_mul(&p0_poly)?.checked_add(&p1_poly)?;
    if lhs != rhs {
        return Err(Error::Internal("Δ⁻(Δ⁺ - p₀) != Δ⁺p₀ + p₁".into()));
    }
    Ok(DnRelation { p0, p1, p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> Poly {
        Poly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), q(*c, 1)))).unwrap()
    }

    #[test]
    fn bn_generators_rank_two() {
        let s = bn_generators(2, Sign::Minus).unwrap();
        assert_eq!(
            s[0],
            poly(2, &[(&[1, 0], 1), (&[-1, 0], -1), (&[0, 1], 1), (&[0, -1], -1)])
        );
        assert_eq!(
            s[1],
            poly(2, &[(&[1, 1], 1), (&[1, -1], -1), (&[-1, 1], -1), (&[-1, -1], 1)])
        );
        let one = bn_generators(1, Sign::Minus).unwrap();
        assert_eq!(one, vec![poly(1, &[(&[1], 1), (&[-1], -1)])]);
        let plus = bn_generators(2, Sign::Plus).unwrap();
        assert_eq!(
            plus[1],
            poly(2, &[(&[1, 1], 1), (&[1, -1], 1), (&[-1, 1], 1), (&[-1, -1], 1)])
        );
    }

    #[test]
    fn generator_leading_monomials() {
        for n in 1..=4 {
            for sign in Sign::both() {
                for (i, s) in bn_generators(n, sign).unwrap().iter().enumerate() {
                    let (e, c) = s.lex_leading().unwrap();
                    let want: Vec<i64> = (0..n).map(|j| i64::from(j <= i)).collect();
                    assert_eq!(e.entries(), &want[..]);
                    assert!(c.is_one());
                }
            }
        }
    }

    #[test]
    fn dn_generators_rank_two() {
        let g = dn_generators(2).unwrap();
        assert_eq!(g.delta_plus, poly(2, &[(&[1, 1], 1), (&[-1, -1], 1)]));
        assert_eq!(g.delta_minus, poly(2, &[(&[1, -1], 1), (&[-1, 1], 1)]));
        let s2 = &bn_generators(2, Sign::Plus).unwrap()[1];
        assert_eq!(&g.delta_plus + &g.delta_minus, *s2);
        let flip = crate::groups::GroupElement::flip(2, &[0], ActionVariant::TorusPlus);
        assert_eq!(flip.act(&g.delta_minus).unwrap(), g.delta_plus);
    }

    #[test]
    fn decompose_sum_of_squares() {
        let f = poly(2, &[(&[2, 0], 1), (&[-2, 0], 1), (&[0, 2], 1), (&[0, -2], 1)]);
        let dec = decompose(&f, Basis::BMinus).unwrap();
        assert_eq!(dec.coeff(&[2, 0]), q(1, 1));
        assert_eq!(dec.coeff(&[0, 1]), q(-2, 1));
        assert_eq!(dec.coeff(&[0, 0]), q(4, 1));
        assert_eq!(dec.terms.len(), 3);
        assert_eq!(dec.to_string(), "s1^2 - 2*s2 + 4");
        assert_eq!(dec.expand().unwrap(), f);
    }

    #[test]
    fn generators_decompose_to_themselves() {
        let s = bn_generators(2, Sign::Minus).unwrap();
        let dec = decompose(&s[1], Basis::BMinus).unwrap();
        assert_eq!(dec.terms.len(), 1);
        assert_eq!(dec.coeff(&[0, 1]), q(1, 1));

        let g = dn_generators(2).unwrap();
        let dec = decompose(&g.delta_minus, Basis::D).unwrap();
        assert_eq!(dec.terms.len(), 1);
        assert_eq!(dec.coeff(&[0, 0, 1]), q(1, 1));
    }

    #[test]
    fn non_invariant_rejected() {
        let f = Poly::var(2, 0);
        assert!(matches!(
            decompose(&f, Basis::BMinus),
            Err(Error::NotInvariant { .. })
        ));
        let g = Poly::var_pow(2, 1, 1);
        match decompose(&g, Basis::BMinus) {
            Err(Error::NotInvariant { monomial }) => assert_eq!(monomial, vec![0, 1]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn constant_decomposes_to_empty_product() {
        let dec = decompose(&Poly::constant(2, q(7, 1)), Basis::BMinus).unwrap();
        assert_eq!(dec.coeff(&[0, 0]), q(7, 1));
        assert_eq!(dec.to_string(), "7");
    }

    #[test]
    fn orbit_sums() {
        let b2 = GroupSpec::b(2);
        let pi = DominantExponent::new(Family::B, vec![1, 0]).unwrap();
        let s1 = &bn_generators(2, Sign::Minus).unwrap()[0];
        assert_eq!(orbit_sum(&pi, &b2, ActionVariant::TorusMinus).unwrap(), *s1);

        let zero = DominantExponent::new(Family::B, vec![0, 0]).unwrap();
        assert_eq!(
            orbit_sum(&zero, &b2, ActionVariant::TorusMinus).unwrap(),
            Poly::one(2)
        );

        let d2 = GroupSpec::d(2);
        let pi = DominantExponent::new(Family::D, vec![1, -1]).unwrap();
        let dm = dn_generators(2).unwrap().delta_minus;
        assert_eq!(orbit_sum(&pi, &d2, ActionVariant::TorusPlus).unwrap(), dm);

        assert!(DominantExponent::new(Family::B, vec![0, 1]).is_err());
        assert!(DominantExponent::new(Family::B, vec![1, -1]).is_err());
        assert!(DominantExponent::new(Family::D, vec![1, -2]).is_err());
    }

    #[test]
    fn reynolds_of_a_single_variable() {
        // Σ over B_2 of g·x_1 hits each of x_1, -x_1⁻¹, x_2, -x_2⁻¹ twice.
        let b2 = GroupSpec::b(2);
        let r = reynolds(&Poly::var(2, 0), &b2, ActionVariant::TorusMinus).unwrap();
        let s1 = &bn_generators(2, Sign::Minus).unwrap()[0];
        assert_eq!(r, s1.scale(&q(1, 4)));
    }

    #[test]
    fn discriminant_rank_one_and_values() {
        let d1 = torus_discriminant(1).unwrap();
        let base = poly(1, &[(&[2], 1), (&[-2], -1)]);
        assert_eq!(d1, base.pow(2).unwrap());

        let d2 = torus_discriminant(2).unwrap();
        assert!(!d2.evaluate(&[q(2, 1), q(3, 1)]).unwrap().is_zero());
        assert!(d2.evaluate(&[q(2, 1), q(-1, 2)]).unwrap().is_zero());
        assert!(torus_discriminant(5).is_err());
    }

    #[test]
    fn dn_relation_rank_two() {
        let rel = dn_relation(2).unwrap();
        assert_eq!(rel.p0.terms.len(), 1);
        assert_eq!(rel.p0.coeff(&[0, 0]), q(-2, 1));
        assert_eq!(rel.p1.coeff(&[2, 0]), q(1, 1));
        assert_eq!(rel.p1.coeff(&[0, 0]), q(-4, 1));
        assert_eq!(rel.p1.terms.len(), 2);
        let dp = dn_generators(2).unwrap().delta_plus;
        assert_eq!(rel.p, &dp + &Poly::constant(2, q(2, 1)));
    }

    #[test]
    fn decomposition_json() {
        let f = poly(2, &[(&[2, 0], 1), (&[-2, 0], 1), (&[0, 2], 1), (&[0, -2], 1)]);
        let dec = decompose(&f, Basis::BMinus).unwrap();
        let s = serde_json::to_string(&dec).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"B-minus","nvars":2,"terms":[{"gen_exp":[2,0],"coef":"1"},{"gen_exp":[0,1],"coef":"-2"},{"gen_exp":[0,0],"coef":"4"}]}"#
        );
        let back: Decomposition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, dec);
    }
}
