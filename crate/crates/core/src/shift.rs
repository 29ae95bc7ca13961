//! The skew group algebra `ℚ[t₁…t_N] ∗ ℤ^N` of shift operators and its
//! identification with the localized Weyl algebra.
//!
//! An element is `Σ p_k(t) σ^k` with polynomial coefficients on the left.
//! The only commutation rule is `σ_i t_j = (t_j - δ_ij) σ_i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::sign::Sign;
use crate::weyl::{epsilon, WeylElement};

#[derive(Clone, PartialEq)]
pub struct ShiftElement {
    nvars: usize,
    terms: BTreeMap<ExponentVector, LaurentPoly>,
}

impl ShiftElement {
    pub fn zero(nvars: usize) -> Self {
        ShiftElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::one(nvars)).unwrap()
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(nvars, c)).unwrap()
    }

    /// Embeds a polynomial in `t` (no negative exponents allowed).
    pub fn from_poly(p: LaurentPoly) -> Result<Self> {
        let n = p.nvars();
        Self::monomial(p, ExponentVector::zeros(n))
    }

    /// `p(t)·σ^k`.
    pub fn monomial(p: LaurentPoly, sigma: ExponentVector) -> Result<Self> {
        if !p.is_polynomial() {
            return Err(Error::Unsupported(
                "coefficients in t must be ordinary polynomials".into(),
            ));
        }
        if sigma.len() != p.nvars() {
            return Err(Error::shape(p.nvars(), sigma.len()));
        }
        let mut out = Self::zero(p.nvars());
        out.add_term(sigma, p);
        Ok(out)
    }

    pub fn t(nvars: usize, i: usize) -> Self {
        Self::from_poly(LaurentPoly::var(nvars, i)).unwrap()
    }

    pub fn sigma_pow(nvars: usize, i: usize, k: i64) -> Self {
        Self::monomial(LaurentPoly::one(nvars), ExponentVector::unit(nvars, i, k)).unwrap()
    }

    pub fn sigma(nvars: usize, i: usize) -> Self {
        Self::sigma_pow(nvars, i, 1)
    }

    fn add_term(&mut self, sigma: ExponentVector, p: LaurentPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.remove(&sigma) {
            Some(old) => {
                let sum = &old + &p;
                if !sum.is_zero() {
                    self.terms.insert(sigma, sum);
                }
            }
            None => {
                self.terms.insert(sigma, p);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &LaurentPoly)> {
        self.terms.iter()
    }

    /// The coefficient polynomial of `σ^k`.
    pub fn coeff(&self, sigma: &[i64]) -> LaurentPoly {
        self.terms
            .get(&ExponentVector::new(sigma.to_vec()))
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.nvars))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::shape(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.add_term(k.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.add_term(k.clone(), p.neg());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, p) in &self.terms {
            out.add_term(k.clone(), p.scale(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Skew product `(p σ^k)(q σ^l) = p·q(t-k)·σ^{k+l}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.nvars);
        for (l, q) in &other.terms {
            let mut shifted: HashMap<&ExponentVector, LaurentPoly> = HashMap::new();
            for (k, p) in &self.terms {
                let qs = match shifted.get(k) {
                    Some(qs) => qs.clone(),
                    None => {
                        let qs = shift_poly(q, k)?;
                        shifted.insert(k, qs.clone());
                        qs
                    }
                };
                out.add_term(k.add(l), p.checked_mul(&qs)?);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }
}

/// `q(t - k)`.
fn shift_poly(q: &LaurentPoly, k: &ExponentVector) -> Result<LaurentPoly> {
    let mut out = q.clone();
    for (i, &ki) in k.entries().iter().enumerate() {
        if ki != 0 {
            out = out.substitute_affine(i, &Rational::one(), &Rational::from(-ki))?;
        }
    }
    Ok(out)
}

/// `σ_i ↦ ±σ_i⁻¹`, `t_i ↦ c - t_i`, other generators fixed.
pub fn epsilon_r(sign: Sign, c: &Rational, i: usize, u: &ShiftElement) -> Result<ShiftElement> {
    let n = u.nvars();
    if i >= n {
        return Err(Error::Range(format!("index {i} out of range for {n} variables")));
    }
    let mut out = ShiftElement::zero(n);
    for (k, p) in u.terms() {
        let mut p = p.substitute_affine(i, &-Rational::one(), c)?;
        if sign == Sign::Minus && k[i] % 2 != 0 {
            p = p.neg();
        }
        let mut k = k.entries().to_vec();
        k[i] = -k[i];
        out.add_term(ExponentVector::new(k), p);
    }
    Ok(out)
}

/// `φ(∂_i) = (t_i + 1 - c/2)σ_i⁻¹ + 1 ∓ σ_i⁻²`.
pub fn phi_derivative(sign: Sign, c: &Rational, n: usize, i: usize) -> ShiftElement {
    let mut lin = LaurentPoly::var(n, i);
    lin = &lin + &LaurentPoly::constant(n, Rational::one() - c * &Rational::new(1, 2));
    let a = ShiftElement::monomial(lin, ExponentVector::unit(n, i, -1)).unwrap();
    let b = ShiftElement::one(n);
    let s = ShiftElement::sigma_pow(n, i, -2).scale(&sign.rational());
    a.checked_add(&b).and_then(|ab| ab.checked_sub(&s)).unwrap()
}

/// `∓(t_i - 1 - c/2)σ_i + 1 ∓ σ_i²`, the common value of `ε_R(φ(∂_i))` and
/// `φ(ε(∂_i))`.
pub fn intertwined_derivative(sign: Sign, c: &Rational, n: usize, i: usize) -> ShiftElement {
    let s = sign.rational();
    let lin = &LaurentPoly::var(n, i)
        - &LaurentPoly::constant(n, Rational::one() + c * &Rational::new(1, 2));
    let a = ShiftElement::monomial(lin.scale(&-&s), ExponentVector::unit(n, i, 1)).unwrap();
    let b = ShiftElement::one(n);
    let sq = ShiftElement::sigma_pow(n, i, 2).scale(&s);
    a.checked_add(&b).and_then(|ab| ab.checked_sub(&sq)).unwrap()
}

/// Checks `[φ(∂_i), φ(x_i)] = 1` for every coordinate.
pub fn check_phi_relations(sign: Sign, c: &Rational, n: usize) -> Result<()> {
    for i in 0..n {
        let d = phi_derivative(sign, c, n, i);
        let x = ShiftElement::sigma(n, i);
        let comm = d.checked_mul(&x)?.checked_sub(&x.checked_mul(&d)?)?;
        if comm != ShiftElement::one(n) {
            return Err(Error::Internal(format!(
                "commutator of the images of d{0} and x{0} is {comm}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// The isomorphism from the localized Weyl algebra onto the shift algebra:
/// `x_i ↦ σ_i`, `∂_i ↦ (t_i + 1 - c/2)σ_i⁻¹ + 1 ∓ σ_i⁻²`.
pub fn phi(sign: Sign, c: &Rational, u: &WeylElement) -> Result<ShiftElement> {
    let n = u.nvars();
    check_phi_relations(sign, c, n)?;
    let derivs: Vec<ShiftElement> = (0..n).map(|i| phi_derivative(sign, c, n, i)).collect();
    let mut dpow: HashMap<(usize, u32), ShiftElement> = HashMap::new();
    let mut out = ShiftElement::zero(n);
    for (m, coef) in u.terms() {
        let mut t = ShiftElement::monomial(LaurentPoly::constant(n, coef.clone()), m.x.clone())?;
        for (i, &b) in m.d.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let p = match dpow.get(&(i, b)) {
                Some(p) => p.clone(),
                None => {
                    let p = derivs[i].pow(b)?;
                    dpow.insert((i, b), p.clone());
                    p
                }
            };
            t = t.checked_mul(&p)?;
        }
        out = out.checked_add(&t)?;
    }
    Ok(out)
}

/// A generator of the shift algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftGenerator {
    Sigma(usize),
    T(usize),
}

/// Preimage of a generator under [`phi`]: `σ_i ↦ x_i` and
/// `t_i ↦ ∂_i x_i + c/2 - 1 - x_i ± x_i⁻¹`.
pub fn phi_inverse(sign: Sign, c: &Rational, n: usize, g: ShiftGenerator) -> Result<WeylElement> {
    let i = match g {
        ShiftGenerator::Sigma(i) | ShiftGenerator::T(i) => i,
    };
    if i >= n {
        return Err(Error::Range(format!("index {i} out of range for {n} variables")));
    }
    Ok(match g {
        ShiftGenerator::Sigma(_) => WeylElement::x(n, i),
        ShiftGenerator::T(_) => {
            let dx = WeylElement::d(n, i).checked_mul(&WeylElement::x(n, i))?;
            let konst = WeylElement::constant(n, c * &Rational::new(1, 2) - Rational::one());
            let inv = WeylElement::x_pow(n, i, -1).scale(&sign.rational());
            dx.checked_add(&konst)?
                .checked_sub(&WeylElement::x(n, i))?
                .checked_add(&inv)?
        }
    })
}

/// Preimage of an arbitrary element: each `p(t)σ^k` becomes `p(T)·x^k` with
/// `T_i` the preimage of `t_i`.
pub fn phi_inverse_element(sign: Sign, c: &Rational, u: &ShiftElement) -> Result<WeylElement> {
    let n = u.nvars();
    let ts = (0..n)
        .map(|i| phi_inverse(sign, c, n, ShiftGenerator::T(i)))
        .collect::<Result<Vec<_>>>()?;
    let mut tpow: HashMap<(usize, i64), WeylElement> = HashMap::new();
    let mut out = WeylElement::zero(n);
    for (k, p) in u.terms() {
        let mut poly = WeylElement::zero(n);
        for (e, coef) in p.terms() {
            let mut t = WeylElement::constant(n, coef.clone());
            for (i, &a) in e.entries().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let pw = match tpow.get(&(i, a)) {
                    Some(pw) => pw.clone(),
                    None => {
                        let pw = ts[i].pow(a as u32)?;
                        tpow.insert((i, a), pw.clone());
                        pw
                    }
                };
                t = t.checked_mul(&pw)?;
            }
            poly = poly.checked_add(&t)?;
        }
        let xk = WeylElement::monomial(k.entries().to_vec(), vec![0; n], Rational::one())?;
        out = out.checked_add(&poly.checked_mul(&xk)?)?;
    }
    Ok(out)
}

/// One line of an intertwining check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntertwiningCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct IntertwiningReport {
    pub checks: Vec<IntertwiningCheck>,
}

impl IntertwiningReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: String, passed: bool, witness: impl FnOnce() -> String) {
        let witness = if passed { None } else { Some(witness()) };
        self.checks.push(IntertwiningCheck {
            name,
            passed,
            witness,
        });
    }
}

/// Compares `ε_R(φ(u))` with `φ(ε(u))` in every coordinate: first on the
/// generators (including the closed form of the `∂` image), then on the
/// supplied samples.
pub fn verify_intertwining(
    sign: Sign,
    c: &Rational,
    n: usize,
    samples: &[WeylElement],
) -> Result<IntertwiningReport> {
    if n == 0 || n > 3 {
        return Err(Error::Range(format!("rank {n} outside 1..=3")));
    }
    let mut report = IntertwiningReport::default();
    for i in 0..n {
        let d = WeylElement::d(n, i);
        let left = epsilon_r(sign, c, i, &phi(sign, c, &d)?)?;
        let right = phi(sign, c, &epsilon(sign, i, &d)?)?;
        let shown = intertwined_derivative(sign, c, n, i);
        report.push(format!("generator d{} left", i + 1), left == shown, || {
            format!("{left} != {shown}")
        });
        report.push(format!("generator d{} right", i + 1), right == shown, || {
            format!("{right} != {shown}")
        });

        let x = WeylElement::x(n, i);
        let left = epsilon_r(sign, c, i, &phi(sign, c, &x)?)?;
        let right = phi(sign, c, &epsilon(sign, i, &x)?)?;
        let expect = ShiftElement::sigma_pow(n, i, -1).scale(&sign.rational());
        report.push(
            format!("generator x{}", i + 1),
            left == right && left == expect,
            || format!("{left} vs {right}"),
        );
    }
    for (idx, u) in samples.iter().enumerate() {
        if u.nvars() != n {
            return Err(Error::shape(n, u.nvars()));
        }
        let image = phi(sign, c, u)?;
        let mut failure = None;
        for i in 0..n {
            let left = epsilon_r(sign, c, i, &image)?;
            let right = phi(sign, c, &epsilon(sign, i, u)?)?;
            if left != right {
                failure = Some(format!("coordinate {}: {u}", i + 1));
                break;
            }
        }
        report.push(format!("sample {idx}"), failure.is_none(), || {
            failure.clone().unwrap_or_default()
        });
    }
    Ok(report)
}

impl fmt::Display for ShiftElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, p)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let sig: Vec<String> = k
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| match e {
                    1 => format!("σ{}", i + 1),
                    _ => format!("σ{}^{e}", i + 1),
                })
                .collect();
            let poly = p.format_with("t");
            match (sig.is_empty(), p.len() == 1) {
                (true, _) => write!(f, "{poly}")?,
                (false, _) if p.is_polynomial() && poly == "1" => write!(f, "{}", sig.join("*"))?,
                (false, true) => write!(f, "{poly}*{}", sig.join("*"))?,
                (false, false) => write!(f, "({poly})*{}", sig.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ShiftElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shift[{}]({self})", self.nvars)
    }
}

macro_rules! shift_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics on a variable-count mismatch.
        impl std::ops::$tr<&ShiftElement> for &ShiftElement {
            type Output = ShiftElement;
            fn $method(self, rhs: &ShiftElement) -> ShiftElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

shift_binop!(Add, add, checked_add);
shift_binop!(Sub, sub, checked_sub);
shift_binop!(Mul, mul, checked_mul);

#[derive(Serialize, Deserialize)]
struct ShiftTermJson {
    sigma: Vec<i64>,
    poly: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct ShiftJson {
    nvars: usize,
    terms: Vec<ShiftTermJson>,
}

impl Serialize for ShiftElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ShiftJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(k, p)| ShiftTermJson {
                    sigma: k.entries().to_vec(),
                    poly: p.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShiftElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ShiftJson::deserialize(d)?;
        let mut out = ShiftElement::zero(raw.nvars);
        for t in raw.terms {
            if t.sigma.len() != raw.nvars || t.poly.nvars() != raw.nvars {
                return Err(D::Error::custom("term length does not match nvars"));
            }
            if !t.poly.is_polynomial() {
                return Err(D::Error::custom("t-coefficients must have nonnegative exponents"));
            }
            let key = ExponentVector::new(t.sigma);
            if out.terms.contains_key(&key) {
                return Err(D::Error::custom(format!("duplicate sigma {:?}", key.entries())));
            }
            out.add_term(key, t.poly);
        }
        Ok(out)
    }
}
