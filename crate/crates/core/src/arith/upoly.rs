//! Dense univariate polynomials over the rationals, lowest degree first.
//! Only what cyclotomic reduction and inversion need.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) type UPoly = Vec<Rational>;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> UPoly {
    let mut out: UPoly = (0..a.len().max(b.len()))
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x - y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => -y,
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (UPoly, UPoly) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().unwrap().inverse().expect("nonzero lead");
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &(&c * bj);
        }
        quot[shift] = c;
        // the leading entry is now exactly zero
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Extended Euclid: returns `(g, s)` with `s*a ≡ g (mod m)`, `g = gcd(a, m)`
/// normalized to be monic.
pub(crate) fn gcd_cofactor(a: &[Rational], m: &[Rational]) -> (UPoly, UPoly) {
    let (mut r0, mut r1) = (a.to_vec(), m.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (UPoly, UPoly) = (vec![Rational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.inverse().expect("nonzero lead");
        for c in r0.iter_mut().chain(s0.iter_mut()) {
            *c = &*c * &inv;
        }
    }
    (r0, s0)
}
