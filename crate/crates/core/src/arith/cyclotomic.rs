use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::upoly;
use super::Rational;
use crate::error::{Error, Result};

/// Largest order accepted by [`cyclotomic_polynomial`].
pub const MAX_PUBLIC_ORDER: u32 = 64;

/// Integer univariate polynomial, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial(pub Vec<i64>);

impl IntPolynomial {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("z")?,
                (1, _) => write!(f, "{a}z")?,
                (_, 1) => write!(f, "z^{k}")?,
                _ => write!(f, "{a}z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct Modulus {
    ints: Vec<i64>,
    rats: Vec<Rational>,
}

impl Modulus {
    fn degree(&self) -> usize {
        self.ints.len() - 1
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<Modulus>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Modulus>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn modulus(m: u32) -> Arc<Modulus> {
    debug_assert!(m >= 1);
    if let Some(hit) = cache().lock().unwrap().get(&m) {
        return hit.clone();
    }
    // z^m - 1 = prod_{d | m} Phi_d; divide out the proper divisors.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let div = modulus(d);
        num = exact_monic_div(&num, &div.ints);
    }
    let rats = num.iter().map(|&c| Rational::from(c)).collect();
    let entry = Arc::new(Modulus { ints: num, rats });
    cache().lock().unwrap().insert(m, entry.clone());
    entry
}

fn exact_monic_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![0i64; a.len() - db];
    for k in (db..a.len()).rev() {
        let c = rem[k];
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[k - db + j] -= c * bj;
            }
        }
        quot[k - db] = c;
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// The `m`-th cyclotomic polynomial, for `1 <= m <= 64`.
pub fn cyclotomic_polynomial(m: u32) -> Result<IntPolynomial> {
    if !(1..=MAX_PUBLIC_ORDER).contains(&m) {
        return Err(Error::Range(format!(
            "cyclotomic order {m} outside 1..={MAX_PUBLIC_ORDER}"
        )));
    }
    Ok(IntPolynomial(modulus(m).ints.clone()))
}

/// Euler's totient, the degree of the `m`-th cyclotomic polynomial.
pub fn totient(m: u32) -> usize {
    let mut n = m;
    let mut out = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out as usize
}

fn reduce(mut a: Vec<Rational>, md: &Modulus) -> Vec<Rational> {
    let d = md.degree();
    for k in (d..a.len()).rev() {
        if a[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut a[k], Rational::zero());
        for j in 0..d {
            if md.ints[j] != 0 {
                a[k - d + j] -= &(&c * &md.rats[j]);
            }
        }
    }
    a.truncate(d);
    a.resize(d, Rational::zero());
    a
}

/// Element of the cyclotomic field Q(ζ_m), stored as a polynomial in ζ_m of
/// degree below φ(m).
///
/// Values of different orders combine by lifting both operands into
/// Q(ζ_lcm), so the rationals (order 1) mix freely with every field.
#[derive(Clone)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    /// Reduces an arbitrary polynomial in ζ_m modulo Φ_m.
    pub fn new(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Range("cyclotomic order must be positive".into()));
        }
        let md = modulus(order);
        Ok(CycloNum {
            order,
            coeffs: reduce(coeffs, &md),
        })
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); totient(order.max(1))];
        coeffs[0] = r;
        CycloNum {
            order: order.max(1),
            coeffs,
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(1, Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(1, Rational::one())
    }

    /// The primitive root ζ_m, the class of `z` in Q[z]/Φ_m.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let order = order.max(1);
        let e = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::new(order, coeffs).expect("positive order")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(r)` when the value lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        // In Q(ζ_m) a value is rational iff only the constant coordinate is set;
        // the power basis 1, ζ, …, ζ^{φ(m)-1} is a Q-basis.
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express in Q(ζ_target); `target` must be a multiple of the order.
    pub fn lift(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(Error::Range(format!(
                "cannot lift order {} into order {target}",
                self.order
            )));
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let mut spread = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            spread[i * step] = c.clone();
        }
        Self::new(target, spread)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = self.order.lcm(&other.order);
        (self.lift(l).unwrap(), other.lift(l).unwrap())
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycloNum {
            order: a.order,
            coeffs,
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let prod = upoly::mul(&a.coeffs, &b.coeffs);
        Self::new(a.order, prod).expect("positive order")
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended gcd with Φ_m.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let md = modulus(self.order);
        let (g, s) = upoly::gcd_cofactor(&self.coeffs, &md.rats);
        // Φ_m is irreducible, so any nonzero residue is coprime to it.
        if g.len() != 1 {
            return Err(Error::Internal(format!(
                "non-unit gcd while inverting in Q(ζ_{})",
                self.order
            )));
        }
        Self::new(self.order, s)
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut acc = CycloNum::from_rational(self.order, Rational::one());
        let mut sq = base;
        let mut k = exp.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl From<Rational> for CycloNum {
    fn from(r: Rational) -> Self {
        CycloNum::from_rational(1, r)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let root = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.order),
                _ => format!("ζ{}^{k}", self.order),
            };
            parts.push(match (k, c) {
                (0, _) => c.to_string(),
                (_, c) if c.is_one() => root,
                (_, c) if (-c).is_one() => format!("-{root}"),
                _ => format!("{c}*{root}"),
            });
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        if parts.len() == 1 {
            return f.write_str(&parts[0]);
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => s += &format!(" - {rest}"),
                None => s += &format!(" + {p}"),
            }
        }
        write!(f, "({s})")
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    m: u32,
    coeffs: Vec<Rational>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloJson {
            m: self.order,
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CycloJson::deserialize(d)?;
        if raw.m == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let want = totient(raw.m);
        if raw.coeffs.len() != want {
            return Err(D::Error::custom(format!(
                "Q(ζ_{}) needs {want} coefficients, found {}",
                raw.m,
                raw.coeffs.len()
            )));
        }
        Ok(CycloNum {
            order: raw.m,
            coeffs: raw.coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle_phi(m: u32) -> Vec<i64> {
        // Independent route: Φ_m(z) = prod_{d | m} (z^d - 1)^{μ(m/d)}, evaluated
        // as numerator / denominator products and one exact division.
        fn mobius(mut n: u32) -> i32 {
            let mut sign = 1;
            let mut p = 2;
            while p * p <= n {
                if n.is_multiple_of(p) {
                    n /= p;
                    if n.is_multiple_of(p) {
                        return 0;
                    }
                    sign = -sign;
                }
                p += 1;
            }
            if n > 1 {
                sign = -sign;
            }
            sign
        }
        let mut num = vec![1i64];
        let mut den = vec![1i64];
        for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
            let mut f = vec![0i64; d as usize + 1];
            f[0] = -1;
            f[d as usize] = 1;
            let target = match mobius(m / d) {
                1 => &mut num,
                -1 => &mut den,
                _ => continue,
            };
            let mut out = vec![0i64; target.len() + f.len() - 1];
            for (i, a) in target.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            *target = out;
        }
        // den is ±monic; normalize sign then divide
        if *den.last().unwrap() < 0 {
            den.iter_mut().for_each(|c| *c = -*c);
            num.iter_mut().for_each(|c| *c = -*c);
        }
        exact_monic_div(&num, &den)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap().to_string(), "z - 1");
        assert_eq!(cyclotomic_polynomial(2).unwrap().to_string(), "z + 1");
        assert_eq!(
            cyclotomic_polynomial(12).unwrap().to_string(),
            "z^4 - z^2 + 1"
        );
    }

    #[test]
    fn matches_mobius_product_and_totient() {
        for m in 1..=MAX_PUBLIC_ORDER {
            let phi = cyclotomic_polynomial(m).unwrap();
            assert_eq!(phi.0, oracle_phi(m), "m = {m}");
            assert_eq!(phi.degree(), totient(m));
            assert_eq!(*phi.0.last().unwrap(), 1);
        }
    }

    #[test]
    fn order_out_of_range() {
        assert!(matches!(cyclotomic_polynomial(0), Err(Error::Range(_))));
        assert!(matches!(cyclotomic_polynomial(65), Err(Error::Range(_))));
    }

    #[test]
    fn inverse_examples() {
        let two = CycloNum::from_rational(1, Rational::from(2));
        assert_eq!(two.inverse().unwrap(), Rational::new(1, 2).into());

        let i = CycloNum::zeta(4);
        assert_eq!(i.inverse().unwrap(), i.neg_ref());

        let w = CycloNum::zeta(3);
        let a = CycloNum::one().add_ref(&w);
        let b = a.inverse().unwrap();
        assert_eq!(a.mul_ref(&b), CycloNum::one());
        // 1 + ζ_3 = -ζ_3^2, so its inverse is -ζ_3
        assert_eq!(b, w.neg_ref());

        assert_eq!(CycloNum::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_orders_lift() {
        let i = CycloNum::zeta(4);
        let w8 = CycloNum::zeta(8);
        assert_eq!(w8.mul_ref(&w8), i);
        assert_eq!(CycloNum::zeta(2), CycloNum::from(Rational::from(-1)));
        let sum = i.add_ref(&CycloNum::zeta(3));
        assert_eq!(sum.order(), 12);
    }

    #[test]
    fn json_shape() {
        let x = CycloNum::new(4, vec![Rational::new(1, 2), Rational::from(-1)]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"m":4,"coeffs":["1/2","-1"]}"#);
        let back: CycloNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<CycloNum>(r#"{"m":4,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn display() {
        let x = CycloNum::new(4, vec![Rational::new(1, 2), Rational::from(-1)]).unwrap();
        assert_eq!(x.to_string(), "(1/2 - ζ4)");
        assert_eq!(CycloNum::zeta_pow(12, 3).to_string(), "ζ12^3");
    }
}
