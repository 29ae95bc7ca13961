//! Sparse multivariate Laurent polynomials with exact coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector. The derived `Ord`
//! on exponent vectors is plain lexicographic order on signed integers, so
//! the last key is always the lex-leading monomial and negative exponents
//! sort below zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{Coeff, Rational};
use crate::error::{Error, Result};

/// Results with more terms than this are refused.
pub const MAX_TERMS: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `e_i` scaled by `k`.
    pub fn unit(n: usize, i: usize, k: i64) -> Self {
        let mut v = vec![0; n];
        v[i] = k;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.0.iter().copied().min()
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

/// Image of one variable under a signed monomial map:
/// `x_i ↦ sign · x_target^(±1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialImage {
    pub target: usize,
    pub negate: bool,
    pub invert: bool,
}

impl MonomialImage {
    pub fn identity(i: usize) -> Self {
        MonomialImage {
            target: i,
            negate: false,
            invert: false,
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C: Coeff = Rational> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), c)
    }

    pub fn monomial(exp: ExponentVector, c: C) -> Self {
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    pub fn var_pow(nvars: usize, i: usize, k: i64) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i, k), C::one())
    }

    /// Builds from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::shape(nvars, e.len()));
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
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

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// True when no exponent is negative, i.e. an ordinary polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_nonnegative)
    }

    /// Smallest exponent appearing anywhere, 0 for the zero polynomial.
    pub fn min_exponent(&self) -> i64 {
        self.terms
            .keys()
            .filter_map(ExponentVector::min_entry)
            .min()
            .unwrap_or(0)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&ExponentVector::zeros(self.nvars))
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
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg_ref());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut acc: HashMap<ExponentVector, C> =
            HashMap::with_capacity(self.len().max(other.len()));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let c = c1.mul_ref(c2);
                let e = e1.add(e2);
                match acc.get_mut(&e) {
                    Some(slot) => *slot = slot.add_ref(&c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        let terms: BTreeMap<_, _> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.len() > MAX_TERMS {
            return Err(Error::Range(format!(
                "product has {} terms (limit {MAX_TERMS})",
                terms.len()
            )));
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.mul_ref(k)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.add(shift), c.clone())).collect(),
        }
    }

    /// Integer power. Negative exponents are only defined for a single term.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            if self.len() != 1 {
                return Err(Error::Unsupported(
                    "negative power of a polynomial that is not a single term".into(),
                ));
            }
            let (e, c) = self.terms.iter().next().unwrap();
            let inv = c.inverse().ok_or(Error::DivisionByZero)?;
            let base = Self::monomial(e.scale(-1), inv);
            return base.pow(-exp);
        }
        let mut acc = Self::one(self.nvars);
        let mut sq = self.clone();
        let mut k = exp as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Lex-greatest exponent in the support, with its coefficient.
    pub fn lex_leading(&self) -> Result<(&ExponentVector, &C)> {
        self.terms.iter().next_back().ok_or(Error::EmptyPolynomial)
    }

    /// Applies the ring endomorphism determined by per-variable signed monomial
    /// images. The images must permute the variables.
    pub fn substitute_monomial(&self, images: &[MonomialImage]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::shape(self.nvars, images.len()));
        }
        let mut seen = vec![false; self.nvars];
        for im in images {
            if im.target >= self.nvars || std::mem::replace(&mut seen[im.target], true) {
                return Err(Error::InvalidAction(
                    "variable images do not form a bijection".into(),
                ));
            }
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; self.nvars];
            let mut odd = false;
            for (im, &k) in images.iter().zip(e.entries()) {
                ne[im.target] = if im.invert { -k } else { k };
                if im.negate && k.rem_euclid(2) == 1 {
                    odd = !odd;
                }
            }
            terms.insert(ExponentVector(ne), if odd { c.neg_ref() } else { c.clone() });
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Substitutes `x_var ↦ scale·x_var + offset`. Only valid when `x_var`
    /// carries no negative exponent.
    pub fn substitute_affine(&self, var: usize, scale: &C, offset: &C) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::Range(format!("variable index {var} out of range")));
        }
        if self.terms.keys().any(|e| e[var] < 0) {
            return Err(Error::Unsupported(
                "affine substitution into a negative power".into(),
            ));
        }
        let mut lin = Self::var(self.nvars, var).scale(scale);
        lin.add_term(ExponentVector::zeros(self.nvars), offset.clone());
        let mut powers: Vec<Self> = vec![Self::one(self.nvars)];
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap().checked_mul(&lin)?;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest.0[var] = 0;
            for (pe, pc) in &powers[k].terms {
                out.add_term(rest.add(pe), c.mul_ref(pc));
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::shape(self.nvars, point.len()));
        }
        let mut inverses: Vec<Option<C>> = vec![None; self.nvars];
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, &k) in e.entries().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let base = if k > 0 {
                    point[i].clone()
                } else {
                    if inverses[i].is_none() {
                        inverses[i] = Some(point[i].inverse().ok_or(Error::Pole { index: i })?);
                    }
                    inverses[i].clone().unwrap()
                };
                for _ in 0..k.unsigned_abs() {
                    v = v.mul_ref(&base);
                }
            }
            total = total.add_ref(&v);
        }
        Ok(total)
    }

    /// Human-readable form with variables `{prefix}1, {prefix}2, …`,
    /// highest lex term first.
    pub fn format_with(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| match k {
                    1 => format!("{prefix}{}", i + 1),
                    _ => format!("{prefix}{}^{k}", i + 1),
                })
                .collect();
            let mono = mono.join("*");
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            let body = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (idx, neg) {
                (0, false) => out += &body,
                (0, true) => out += &format!("-{body}"),
                (_, false) => out += &format!(" + {body}"),
                (_, true) => out += &format!(" - {body}"),
            }
        }
        out
    }
}

/// `e_i(args)`, the `i`-th elementary symmetric polynomial of the arguments.
pub fn elementary_symmetric<C: Coeff>(i: usize, args: &[LaurentPoly<C>]) -> Result<LaurentPoly<C>> {
    let n = args.len();
    if i == 0 || i > n {
        return Err(Error::Range(format!("elementary symmetric index {i} not in 1..={n}")));
    }
    let nvars = args[0].nvars();
    // running table: level[k] = e_k of the arguments seen so far
    let mut level = vec![LaurentPoly::<C>::one(nvars)];
    for a in args {
        if a.nvars() != nvars {
            return Err(Error::shape(nvars, a.nvars()));
        }
        let top = level.len().min(i);
        if level.len() <= i {
            level.push(LaurentPoly::zero(nvars));
        }
        for k in (1..=top).rev() {
            let add = level[k - 1].checked_mul(a)?;
            level[k] = level[k].checked_add(&add)?;
        }
    }
    Ok(level.swap_remove(i))
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.nvars, self)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics on a variable-count mismatch; the `checked_*` methods return
        /// the error instead.
        impl<C: Coeff> std::ops::$tr<&LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Coeff> std::ops::$tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl<C: Coeff> std::ops::Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson<C> {
    exp: Vec<i64>,
    coef: C,
}

#[derive(Serialize, Deserialize)]
struct PolyJson<C> {
    nvars: usize,
    terms: Vec<TermJson<C>>,
}

impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermJson {
                    exp: e.0.clone(),
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::<C>::deserialize(d)?;
        let mut p = LaurentPoly::zero(raw.nvars);
        for t in raw.terms {
            if t.exp.len() != raw.nvars {
                return Err(D::Error::custom(format!(
                    "exponent {:?} has length {}, expected {}",
                    t.exp,
                    t.exp.len(),
                    raw.nvars
                )));
            }
            let e = ExponentVector(t.exp);
            if p.terms.contains_key(&e) {
                return Err(D::Error::custom(format!("duplicate exponent {e:?}")));
            }
            if !t.coef.is_zero() {
                p.terms.insert(e, t.coef);
            }
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycloNum;

    type P = LaurentPoly<Rational>;

    fn x(n: usize, i: usize, k: i64) -> P {
        P::var_pow(n, i, k)
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    #[test]
    fn difference_of_squares() {
        let a = &x(1, 0, 1) - &x(1, 0, -1);
        let b = &x(1, 0, 1) + &x(1, 0, -1);
        assert_eq!(&a * &b, &x(1, 0, 2) - &x(1, 0, -2));
    }

    #[test]
    fn shape_and_power_errors() {
        assert_eq!(x(1, 0, 1).checked_add(&x(2, 0, 1)), Err(Error::shape(1, 2)));
        let two_terms = &x(1, 0, 1) + &P::one(1);
        assert!(matches!(two_terms.pow(-1), Err(Error::Unsupported(_))));
        let mono = P::monomial(ExponentVector::new(vec![2]), q(3, 1));
        assert_eq!(
            mono.pow(-2).unwrap(),
            P::monomial(ExponentVector::new(vec![-4]), q(1, 9))
        );
    }

    #[test]
    fn cube_against_repeated_multiplication() {
        let s = &x(2, 0, 1) + &x(2, 1, 1);
        let rep = &(&s * &s) * &s;
        assert_eq!(s.pow(3).unwrap(), rep);
        // binomial coefficients 1 3 3 1
        assert_eq!(rep.coeff(&ExponentVector::new(vec![2, 1])), q(3, 1));
        assert_eq!(rep.len(), 4);
    }

    #[test]
    fn lex_leading_examples() {
        let f = &(&x(2, 0, 1) * &x(2, 1, -1)) + &x(2, 1, 1);
        let (e, c) = f.lex_leading().unwrap();
        assert_eq!(e.entries(), &[1, -1]);
        assert_eq!(c, &q(1, 1));

        let s1 = &(&(&x(2, 0, 1) - &x(2, 0, -1)) + &x(2, 1, 1)) - &x(2, 1, -1);
        assert_eq!(s1.lex_leading().unwrap().0.entries(), &[1, 0]);

        assert_eq!(P::zero(2).lex_leading(), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn signed_inversion_substitution() {
        let tau = [MonomialImage {
            target: 0,
            negate: true,
            invert: true,
        }];
        assert_eq!(x(1, 0, 2).substitute_monomial(&tau).unwrap(), x(1, 0, -2));
        let g = &x(1, 0, 1) - &x(1, 0, -1);
        assert_eq!(g.substitute_monomial(&tau).unwrap(), g);
        let id = [MonomialImage::identity(0)];
        assert_eq!(g.substitute_monomial(&id).unwrap(), g);

        let bad = [MonomialImage::identity(0), MonomialImage::identity(0)];
        assert!(matches!(
            x(2, 0, 1).substitute_monomial(&bad),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn elementary_symmetric_examples() {
        let a = &x(2, 0, 1) - &x(2, 0, -1);
        let b = &x(2, 1, 1) - &x(2, 1, -1);
        assert_eq!(elementary_symmetric(1, &[a.clone(), b.clone()]).unwrap(), &a + &b);
        let e2 = elementary_symmetric(2, &[a.clone(), b.clone()]).unwrap();
        let expected = P::from_terms(
            2,
            vec![
                (vec![1, 1], q(1, 1)),
                (vec![1, -1], q(-1, 1)),
                (vec![-1, 1], q(-1, 1)),
                (vec![-1, -1], q(1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(e2, expected);
        assert!(matches!(
            elementary_symmetric(3, &[a.clone(), b.clone()]),
            Err(Error::Range(_))
        ));
        assert!(matches!(elementary_symmetric::<Rational>(0, &[a]), Err(Error::Range(_))));
    }

    #[test]
    fn evaluation_examples() {
        let f = &x(2, 0, 1) * &x(2, 1, -1);
        assert_eq!(f.evaluate(&[q(2, 1), q(3, 1)]).unwrap(), q(2, 3));
        let five = P::constant(2, q(5, 1));
        assert_eq!(five.evaluate(&[q(-7, 3), q(1, 9)]).unwrap(), q(5, 1));
        let xy = &x(2, 0, 1) * &x(2, 1, 1);
        let dplus = &xy + &xy.pow(-1).unwrap();
        assert_eq!(dplus.evaluate(&[q(2, 1), q(1, 1)]).unwrap(), q(5, 2));
        assert_eq!(
            f.evaluate(&[q(1, 1), q(0, 1)]),
            Err(Error::Pole { index: 1 })
        );
    }

    #[test]
    fn affine_substitution() {
        // (t + 1)^2 at t -> t - 3 equals (t - 2)^2
        let t = x(1, 0, 1);
        let f = (&t + &P::one(1)).pow(2).unwrap();
        let g = f.substitute_affine(0, &q(1, 1), &q(-3, 1)).unwrap();
        assert_eq!(g, (&t - &P::constant(1, q(2, 1))).pow(2).unwrap());
        assert!(x(1, 0, -1).substitute_affine(0, &q(1, 1), &q(0, 1)).is_err());
    }

    #[test]
    fn json_layout() {
        let f = P::from_terms(2, vec![(vec![0, 1], q(1, 2)), (vec![1, -1], q(-3, 1))]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"nvars":2,"terms":[{"exp":[1,-1],"coef":"-3"},{"exp":[0,1],"coef":"1/2"}]}"#
        );
        let back: P = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let dup = r#"{"nvars":1,"terms":[{"exp":[1],"coef":"1"},{"exp":[1],"coef":"2"}]}"#;
        assert!(serde_json::from_str::<P>(dup).is_err());
        let short = r#"{"nvars":2,"terms":[{"exp":[1],"coef":"1"}]}"#;
        assert!(serde_json::from_str::<P>(short).is_err());
    }

    #[test]
    fn cyclotomic_coefficients() {
        let i = CycloNum::zeta(4);
        let f = LaurentPoly::<CycloNum>::monomial(ExponentVector::new(vec![1]), i.clone());
        let sq = f.pow(2).unwrap();
        assert_eq!(
            sq,
            LaurentPoly::monomial(ExponentVector::new(vec![2]), CycloNum::from(q(-1, 1)))
        );
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"nvars":1,"terms":[{"exp":[1],"coef":{"m":4,"coeffs":["0","1"]}}]}"#);
    }

    #[test]
    fn display() {
        let f = P::from_terms(2, vec![(vec![2, 0], q(1, 1)), (vec![-1, 1], q(-3, 2)), (vec![0, 0], q(4, 1))])
            .unwrap();
        assert_eq!(f.to_string(), "x1^2 + 4 - 3/2*x1^-1*x2");
    }
}
