//! The Weyl algebra and its localization at the coordinate functions.
//!
//! Elements are kept in normal form `Σ c_{a,b} x^a ∂^b` with every `x` to
//! the left of every `∂`; `a` ranges over all of `ℤⁿ`, `b` over `ℕⁿ`.
//! Products are renormalized with the single rewrite rule
//!
//! ```text
//! ∂^β x^γ = Σ_k C(β,k) γ(γ-1)…(γ-k+1) x^{γ-k} ∂^{β-k}
//! ```
//!
//! which holds for negative `γ` as well.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::groups::{enumerate, generators, ActionVariant, GroupElement, GroupSpec};
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::sign::Sign;

/// Largest power of the discriminant [`clear_discriminant`] will try.
pub const MAX_CLEARING_POWER: u32 = 16;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeylMonomial {
    pub x: ExponentVector,
    pub d: Vec<u32>,
}

#[derive(Clone, PartialEq)]
pub struct WeylElement {
    nvars: usize,
    terms: BTreeMap<WeylMonomial, Rational>,
}

fn falling(g: i64, k: u32) -> Rational {
    (0..k as i64).fold(Rational::one(), |acc, j| acc * Rational::from(g - j))
}

fn binom(n: u32, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| {
        acc * Rational::new((n - j) as i64, (j + 1) as i64)
    })
}

impl WeylElement {
    pub fn zero(nvars: usize) -> Self {
        WeylElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], vec![0; nvars], c).expect("matching lengths")
    }

    pub fn monomial(x: Vec<i64>, d: Vec<u32>, c: Rational) -> Result<Self> {
        if x.len() != d.len() {
            return Err(Error::shape(x.len(), d.len()));
        }
        let mut out = Self::zero(x.len());
        out.add_term(
            WeylMonomial {
                x: ExponentVector::new(x),
                d,
            },
            c,
        );
        Ok(out)
    }

    /// `x_{i+1}^k`.
    pub fn x_pow(nvars: usize, i: usize, k: i64) -> Self {
        let mut x = vec![0; nvars];
        x[i] = k;
        Self::monomial(x, vec![0; nvars], Rational::one()).unwrap()
    }

    pub fn x(nvars: usize, i: usize) -> Self {
        Self::x_pow(nvars, i, 1)
    }

    pub fn d_pow(nvars: usize, i: usize, k: u32) -> Self {
        let mut d = vec![0; nvars];
        d[i] = k;
        Self::monomial(vec![0; nvars], d, Rational::one()).unwrap()
    }

    pub fn d(nvars: usize, i: usize) -> Self {
        Self::d_pow(nvars, i, 1)
    }

    /// The multiplication operator by a Laurent polynomial.
    pub fn from_laurent(f: &LaurentPoly) -> Self {
        let n = f.nvars();
        let mut out = Self::zero(n);
        for (e, c) in f.terms() {
            out.add_term(
                WeylMonomial {
                    x: e.clone(),
                    d: vec![0; n],
                },
                c.clone(),
            );
        }
        out
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, Vec<u32>, Rational)>,
    {
        let mut out = Self::zero(nvars);
        for (x, d, c) in terms {
            if x.len() != nvars || d.len() != nvars {
                return Err(Error::shape(nvars, x.len().max(d.len())));
            }
            out.add_term(
                WeylMonomial {
                    x: ExponentVector::new(x),
                    d,
                },
                c,
            );
        }
        Ok(out)
    }

    fn add_term(&mut self, m: WeylMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &[i64], d: &[u32]) -> Rational {
        let key = WeylMonomial {
            x: ExponentVector::new(x.to_vec()),
            d: d.to_vec(),
        };
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when the element lies in the polynomial Weyl algebra (no negative
    /// powers of any `x_i`).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.x.is_nonnegative())
    }

    pub fn min_x_exponent(&self) -> i64 {
        self.terms
            .keys()
            .filter_map(|m| m.x.min_entry())
            .min()
            .unwrap_or(0)
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
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Normal-ordered product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let n = self.nvars;
        let mut acc: HashMap<WeylMonomial, Rational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let base = c1 * c2;
                // ∂^{b} x^{c}: one factor per variable, each a short sum over k_i
                let mut partial: Vec<(Vec<i64>, Vec<u32>, Rational)> =
                    vec![(Vec::with_capacity(n), Vec::with_capacity(n), base)];
                for i in 0..n {
                    let (b, g) = (m1.d[i], m2.x[i]);
                    let mut next = Vec::with_capacity(partial.len() * (b as usize + 1));
                    for k in 0..=b {
                        let w = binom(b, k) * falling(g, k);
                        if w.is_zero() {
                            continue;
                        }
                        for (xs, ds, c) in &partial {
                            let mut xs = xs.clone();
                            let mut ds = ds.clone();
                            xs.push(m1.x[i] + g - k as i64);
                            ds.push(b - k + m2.d[i]);
                            next.push((xs, ds, c * &w));
                        }
                    }
                    partial = next;
                }
                for (xs, ds, c) in partial {
                    let key = WeylMonomial {
                        x: ExponentVector::new(xs),
                        d: ds,
                    };
                    match acc.get_mut(&key) {
                        Some(slot) => *slot += &c,
                        None => {
                            acc.insert(key, c);
                        }
                    }
                }
            }
        }
        Ok(WeylElement {
            nvars: n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// `[u, v] = uv - vu`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// Acts on a Laurent polynomial: `x^a` multiplies, `∂_i` differentiates.
    pub fn apply_to_laurent(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        if f.nvars() != self.nvars {
            return Err(Error::shape(self.nvars, f.nvars()));
        }
        let mut out = LaurentPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            for (e, fc) in f.terms() {
                let mut coef = c * fc;
                let mut exp = e.entries().to_vec();
                for (ei, &di) in exp.iter_mut().zip(&m.d) {
                    coef = coef * falling(*ei, di);
                    *ei -= di as i64;
                    if coef.is_zero() {
                        break;
                    }
                }
                if coef.is_zero() {
                    continue;
                }
                let exp = ExponentVector::new(exp).add(&m.x);
                out = out.checked_add(&LaurentPoly::monomial(exp, coef))?;
            }
        }
        Ok(out)
    }

    /// Extends generator images to an algebra homomorphism on `self`:
    /// each term `x^a ∂^b` maps to `∏ X_i^{a_i} · ∏ D_i^{b_i}`.
    pub fn map_generators(&self, images: &GeneratorImages) -> Result<Self> {
        if images.x.len() != self.nvars {
            return Err(Error::shape(self.nvars, images.x.len()));
        }
        let target = images.target_nvars();
        let mut cache: HashMap<(u8, usize, u32), WeylElement> = HashMap::new();
        let mut power = |kind: u8, i: usize, k: u32| -> Result<WeylElement> {
            if let Some(p) = cache.get(&(kind, i, k)) {
                return Ok(p.clone());
            }
            let base = match kind {
                0 => &images.x[i],
                1 => &images.x_inv[i],
                _ => &images.d[i],
            };
            let p = base.pow(k)?;
            cache.insert((kind, i, k), p.clone());
            Ok(p)
        };
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &a) in m.x.entries().iter().enumerate() {
                if a != 0 {
                    let kind = if a > 0 { 0 } else { 1 };
                    t = t.checked_mul(&power(kind, i, a.unsigned_abs() as u32)?)?;
                }
            }
            for (i, &b) in m.d.iter().enumerate() {
                if b != 0 {
                    t = t.checked_mul(&power(2, i, b)?)?;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }
}

/// Images of `x_i`, `x_i⁻¹` and `∂_i` under an algebra map.
#[derive(Clone, Debug)]
pub struct GeneratorImages {
    pub x: Vec<WeylElement>,
    pub x_inv: Vec<WeylElement>,
    pub d: Vec<WeylElement>,
}

impl GeneratorImages {
    pub fn identity(n: usize) -> Self {
        GeneratorImages {
            x: (0..n).map(|i| WeylElement::x(n, i)).collect(),
            x_inv: (0..n).map(|i| WeylElement::x_pow(n, i, -1)).collect(),
            d: (0..n).map(|i| WeylElement::d(n, i)).collect(),
        }
    }

    fn target_nvars(&self) -> usize {
        self.x.first().map_or(0, WeylElement::nvars)
    }
}

/// `x_j ↦ ±x_j⁻¹`, `∂_j ↦ ∓x_j²∂_j`, everything else fixed.
pub fn epsilon(sign: Sign, j: usize, u: &WeylElement) -> Result<WeylElement> {
    let n = u.nvars();
    if j >= n {
        return Err(Error::Range(format!("index {j} out of range for {n} variables")));
    }
    let mut images = GeneratorImages::identity(n);
    let s = sign.rational();
    images.x[j] = WeylElement::x_pow(n, j, -1).scale(&s);
    images.x_inv[j] = WeylElement::x(n, j).scale(&s);
    images.d[j] = WeylElement::x_pow(n, j, 2)
        .checked_mul(&WeylElement::d(n, j))?
        .scale(&-s);
    u.map_generators(&images)
}

fn element_images(g: &GroupElement) -> Result<GeneratorImages> {
    let n = g.rank();
    let mut images = GeneratorImages::identity(n);
    for (i, (&j, &flip)) in g.perm().iter().zip(g.flips()).enumerate() {
        let (x, x_inv, d) = match (g.variant(), flip) {
            (_, false) => (
                WeylElement::x(n, j),
                WeylElement::x_pow(n, j, -1),
                WeylElement::d(n, j),
            ),
            (ActionVariant::Linear, true) => (
                WeylElement::x(n, j).neg(),
                WeylElement::x_pow(n, j, -1).neg(),
                WeylElement::d(n, j).neg(),
            ),
            (torus, true) => {
                let s = if torus == ActionVariant::TorusMinus {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                let d = WeylElement::x_pow(n, j, 2).checked_mul(&WeylElement::d(n, j))?;
                (
                    WeylElement::x_pow(n, j, -1).scale(&s),
                    WeylElement::x(n, j).scale(&s),
                    d.scale(&-s),
                )
            }
        };
        images.x[i] = x;
        images.x_inv[i] = x_inv;
        images.d[i] = d;
    }
    Ok(images)
}

/// The induced action `u ↦ g u g⁻¹` of a torus element on differential
/// operators. Linear elements are refused here; see [`group_act_weyl_linear`].
pub fn group_act_weyl(g: &GroupElement, u: &WeylElement) -> Result<WeylElement> {
    if !g.variant().is_torus() {
        return Err(Error::Unsupported(
            "linear elements act through group_act_weyl_linear".into(),
        ));
    }
    if g.rank() != u.nvars() {
        return Err(Error::shape(g.rank(), u.nvars()));
    }
    u.map_generators(&element_images(g)?)
}

/// Signed-permutation action `x_i ↦ ±x_j`, `∂_i ↦ ±∂_j`. It preserves the
/// localization at the coordinates, so it is defined on all elements.
pub fn group_act_weyl_linear(g: &GroupElement, u: &WeylElement) -> Result<WeylElement> {
    if g.variant() != ActionVariant::Linear {
        return Err(Error::Unsupported(format!(
            "expected a linear element, got {}",
            g.variant()
        )));
    }
    if g.rank() != u.nvars() {
        return Err(Error::shape(g.rank(), u.nvars()));
    }
    u.map_generators(&element_images(g)?)
}

fn act_any(g: &GroupElement, u: &WeylElement) -> Result<WeylElement> {
    if g.variant().is_torus() {
        group_act_weyl(g, u)
    } else {
        group_act_weyl_linear(g, u)
    }
}

/// Group average of `u`.
pub fn reynolds_weyl(
    u: &WeylElement,
    spec: &GroupSpec,
    variant: ActionVariant,
) -> Result<WeylElement> {
    let elems = enumerate(spec, variant)?;
    let mut acc = WeylElement::zero(u.nvars());
    for g in &elems {
        acc = acc.checked_add(&act_any(g, u)?)?;
    }
    Ok(acc.scale(&Rational::new(1, elems.len() as i64)))
}

pub fn is_invariant_weyl(u: &WeylElement, spec: &GroupSpec, variant: ActionVariant) -> Result<bool> {
    for g in generators(spec, variant) {
        if act_any(&g, u)? != *u {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `k <= kmax` with `Δ^k·u` free of negative `x` powers, and that
/// product.
pub fn clear_discriminant(
    u: &WeylElement,
    delta: &LaurentPoly,
    kmax: u32,
) -> Result<(u32, WeylElement)> {
    if kmax > MAX_CLEARING_POWER {
        return Err(Error::Range(format!(
            "kmax {kmax} exceeds {MAX_CLEARING_POWER}"
        )));
    }
    if !delta.is_polynomial() {
        return Err(Error::Unsupported("the discriminant must be a polynomial".into()));
    }
    if delta.nvars() != u.nvars() {
        return Err(Error::shape(u.nvars(), delta.nvars()));
    }
    let d = WeylElement::from_laurent(delta);
    let mut v = u.clone();
    for k in 0..=kmax {
        if v.is_polynomial() {
            return Ok((k, v));
        }
        if k < kmax {
            v = d.checked_mul(&v)?;
        }
    }
    Err(Error::ClearingFailure {
        kmax,
        residual: v.min_x_exponent(),
    })
}

/// [`clear_discriminant`] for an invariant `u` and invariant `Δ`, certifying
/// that the cleared operator is again invariant.
pub fn clear_invariant(
    u: &WeylElement,
    delta: &LaurentPoly,
    kmax: u32,
    spec: &GroupSpec,
    variant: ActionVariant,
) -> Result<(u32, WeylElement)> {
    if !is_invariant_weyl(u, spec, variant)? {
        return Err(Error::InvariantViolation {
            witness: "input operator".into(),
            detail: format!("not {spec}-invariant"),
        });
    }
    if !is_invariant_weyl(&WeylElement::from_laurent(delta), spec, variant)? {
        return Err(Error::InvariantViolation {
            witness: "discriminant".into(),
            detail: format!("not {spec}-invariant"),
        });
    }
    let (k, v) = clear_discriminant(u, delta, kmax)?;
    if !is_invariant_weyl(&v, spec, variant)? {
        return Err(Error::Internal("cleared operator lost invariance".into()));
    }
    Ok((k, v))
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut factors = Vec::new();
            for (i, &a) in m.x.entries().iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{a}", i + 1)),
                }
            }
            for (i, &b) in m.d.iter().enumerate() {
                match b {
                    0 => {}
                    1 => factors.push(format!("∂{}", i + 1)),
                    _ => factors.push(format!("∂{}^{b}", i + 1)),
                }
            }
            let mono = factors.join("*");
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

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weyl[{}]({self})", self.nvars)
    }
}

macro_rules! weyl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics on a variable-count mismatch.
        impl std::ops::$tr<&WeylElement> for &WeylElement {
            type Output = WeylElement;
            fn $method(self, rhs: &WeylElement) -> WeylElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

weyl_binop!(Add, add, checked_add);
weyl_binop!(Sub, sub, checked_sub);
weyl_binop!(Mul, mul, checked_mul);

#[derive(Serialize, Deserialize)]
struct WeylTermJson {
    x: Vec<i64>,
    d: Vec<u32>,
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct WeylJson {
    nvars: usize,
    terms: Vec<WeylTermJson>,
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeylJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| WeylTermJson {
                    x: m.x.entries().to_vec(),
                    d: m.d.clone(),
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = WeylJson::deserialize(d)?;
        let n = raw.nvars;
        let mut seen = std::collections::HashSet::new();
        let mut out = WeylElement::zero(n);
        for t in raw.terms {
            if t.x.len() != n || t.d.len() != n {
                return Err(D::Error::custom("term length does not match nvars"));
            }
            if !seen.insert((t.x.clone(), t.d.clone())) {
                return Err(D::Error::custom(format!("duplicate term x{:?} d{:?}", t.x, t.d)));
            }
            out.add_term(
                WeylMonomial {
                    x: ExponentVector::new(t.x),
                    d: t.d,
                },
                t.coef,
            );
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    fn w(n: usize, terms: &[(&[i64], &[u32], Rational)]) -> WeylElement {
        WeylElement::from_terms(n, terms.iter().map(|(x, d, c)| (x.to_vec(), d.to_vec(), c.clone())))
            .unwrap()
    }

    #[test]
    fn defining_relation() {
        let (x, d) = (WeylElement::x(1, 0), WeylElement::d(1, 0));
        assert_eq!(&d * &x, w(1, &[(&[1], &[1], q(1, 1)), (&[0], &[0], q(1, 1))]));
        assert_eq!(d.commutator(&x).unwrap(), WeylElement::one(1));
    }

    #[test]
    fn derivative_past_inverse() {
        let d = WeylElement::d(1, 0);
        let xi = WeylElement::x_pow(1, 0, -1);
        assert_eq!(&d * &xi, w(1, &[(&[-1], &[1], q(1, 1)), (&[-2], &[0], q(-1, 1))]));
    }

    #[test]
    fn second_derivative_past_x() {
        let d2 = WeylElement::d_pow(1, 0, 2);
        let x = WeylElement::x(1, 0);
        assert_eq!(&d2 * &x, w(1, &[(&[1], &[2], q(1, 1)), (&[0], &[1], q(2, 1))]));
    }

    #[test]
    fn action_on_laurent() {
        let cube = LaurentPoly::var_pow(1, 0, 3);
        let d = WeylElement::d(1, 0);
        assert_eq!(
            d.apply_to_laurent(&cube).unwrap(),
            LaurentPoly::var_pow(1, 0, 2).scale(&q(3, 1))
        );
        let x2d = &WeylElement::x_pow(1, 0, 2) * &d;
        let xd = &WeylElement::x(1, 0) * &d;
        let euler_sq = &xd * &xd;
        for r in -4..=4 {
            let xr = LaurentPoly::var_pow(1, 0, r);
            assert_eq!(
                x2d.apply_to_laurent(&xr).unwrap(),
                LaurentPoly::var_pow(1, 0, r + 1).scale(&q(r, 1))
            );
            assert_eq!(euler_sq.apply_to_laurent(&xr).unwrap(), xr.scale(&q(r * r, 1)));
        }
    }

    #[test]
    fn epsilon_on_generators() {
        let d = WeylElement::d(1, 0);
        let x = WeylElement::x(1, 0);
        let x2d = &WeylElement::x_pow(1, 0, 2) * &d;
        assert_eq!(epsilon(Sign::Minus, 0, &d).unwrap(), x2d);
        assert_eq!(
            epsilon(Sign::Minus, 0, &x).unwrap(),
            WeylElement::x_pow(1, 0, -1).neg()
        );
        assert_eq!(epsilon(Sign::Minus, 0, &x2d).unwrap(), d);
        assert_eq!(epsilon(Sign::Plus, 0, &x).unwrap(), WeylElement::x_pow(1, 0, -1));
        assert_eq!(epsilon(Sign::Plus, 0, &d).unwrap(), x2d.neg());
        assert!(epsilon(Sign::Plus, 1, &d).is_err());
    }

    #[test]
    fn group_action_examples() {
        let x1d2 = &WeylElement::x(2, 0) * &WeylElement::d(2, 1);
        let x2d1 = &WeylElement::x(2, 1) * &WeylElement::d(2, 0);
        let swap = GroupElement::transposition(2, 0, 1, ActionVariant::TorusMinus);
        assert_eq!(group_act_weyl(&swap, &x1d2).unwrap(), x2d1);

        let flip = GroupElement::flip(1, &[0], ActionVariant::TorusMinus);
        let d = WeylElement::d(1, 0);
        assert_eq!(
            group_act_weyl(&flip, &d).unwrap(),
            &WeylElement::x_pow(1, 0, 2) * &d
        );
        let lin = GroupElement::flip(1, &[0], ActionVariant::Linear);
        assert!(matches!(group_act_weyl(&lin, &d), Err(Error::Unsupported(_))));
        assert_eq!(group_act_weyl_linear(&lin, &d).unwrap(), d.neg());
    }

    #[test]
    fn reynolds_two_element_average() {
        let u = &WeylElement::x(2, 0) * &WeylElement::d(2, 0);
        let v = &WeylElement::x(2, 1) * &WeylElement::d(2, 1);
        let r = reynolds_weyl(&u, &GroupSpec::s(2), ActionVariant::TorusPlus).unwrap();
        assert_eq!(r, (&u + &v).scale(&q(1, 2)));
        let r2 = reynolds_weyl(&r, &GroupSpec::s(2), ActionVariant::TorusPlus).unwrap();
        assert_eq!(r2, r);
    }

    #[test]
    fn clearing_examples() {
        let x = LaurentPoly::var(1, 0);
        let poly_op = &WeylElement::x(1, 0) * &WeylElement::d(1, 0);
        assert_eq!(clear_discriminant(&poly_op, &x, 4).unwrap().0, 0);

        let (k, v) = clear_discriminant(&WeylElement::x_pow(1, 0, -1), &x, 4).unwrap();
        assert_eq!((k, v), (1, WeylElement::one(1)));

        let u = &WeylElement::x_pow(1, 0, -2) * &WeylElement::d(1, 0);
        let (k, v) = clear_discriminant(&u, &x.pow(2).unwrap(), 4).unwrap();
        assert_eq!(k, 1);
        assert_eq!(v, WeylElement::d(1, 0));

        let deep = WeylElement::x_pow(1, 0, -9);
        assert_eq!(
            clear_discriminant(&deep, &x.pow(2).unwrap(), 2),
            Err(Error::ClearingFailure { kmax: 2, residual: -5 })
        );
        assert!(clear_discriminant(&deep, &x, 17).is_err());
        assert!(clear_discriminant(&deep, &LaurentPoly::var_pow(1, 0, -1), 2).is_err());
    }

    #[test]
    fn json_layout() {
        let u = w(2, &[(&[1, -1], &[0, 2], q(1, 2)), (&[0, 0], &[1, 0], q(-3, 1))]);
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(
            s,
            r#"{"nvars":2,"terms":[{"x":[1,-1],"d":[0,2],"coef":"1/2"},{"x":[0,0],"d":[1,0],"coef":"-3"}]}"#
        );
        let back: WeylElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, u);
        assert!(serde_json::from_str::<WeylElement>(r#"{"nvars":1,"terms":[{"x":[0],"d":[-1],"coef":"1"}]}"#).is_err());
    }
}
