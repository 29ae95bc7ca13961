//! Seeded generators for property checks.
//!
//! Everything is drawn from a ChaCha8 stream, so a seed pins every sample on
//! every platform. Shapes are kept small on purpose:
//!
//! * coefficients `p/q` with `1 <= |p| <= 9`, `1 <= q <= 4`;
//! * Laurent polynomials with 1 to 6 terms, exponents in `[-3, 3]`;
//! * Weyl elements with 1 to 4 terms, `x` exponents in `[-2, 2]`, `∂`
//!   exponents in `[0, 2]`;
//! * shift elements with 1 to 4 terms, `σ` exponents in `[-2, 2]`, each
//!   coefficient a polynomial with 1 to 3 terms of degree at most 2 per `t_i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Rational;
use crate::groups::{enumerate, ActionVariant, Family, GroupElement, GroupSpec};
use crate::invariants::DominantExponent;
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::shift::ShiftElement;
use crate::weyl::WeylElement;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A fresh sampler whose stream depends on `seed` and a label, so that
    /// independent checks do not share draws.
    pub fn derived(seed: u64, label: &str) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        Self::new(seed ^ h)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Nonzero `p/q`, `|p| <= 9`, `q <= 4`.
    pub fn coefficient(&mut self) -> Rational {
        let p = self.rng.gen_range(1..=9) * if self.rng.gen_bool(0.5) { 1 } else { -1 };
        Rational::new(p, self.rng.gen_range(1..=4))
    }

    fn exponents(&mut self, n: usize, lo: i64, hi: i64) -> Vec<i64> {
        (0..n).map(|_| self.int(lo, hi)).collect()
    }

    pub fn laurent(&mut self, n: usize) -> LaurentPoly {
        let count = self.rng.gen_range(1..=6);
        let mut f = LaurentPoly::zero(n);
        for _ in 0..count {
            let e = ExponentVector::new(self.exponents(n, -3, 3));
            f = &f + &LaurentPoly::monomial(e, self.coefficient());
        }
        f
    }

    /// Like [`Sampler::laurent`] but never zero.
    pub fn nonzero_laurent(&mut self, n: usize) -> LaurentPoly {
        loop {
            let f = self.laurent(n);
            if !f.is_zero() {
                return f;
            }
        }
    }

    pub fn weyl(&mut self, n: usize) -> WeylElement {
        self.weyl_in(n, -2)
    }

    /// Weyl element without negative powers of `x`.
    pub fn weyl_polynomial(&mut self, n: usize) -> WeylElement {
        self.weyl_in(n, 0)
    }

    fn weyl_in(&mut self, n: usize, xlo: i64) -> WeylElement {
        let count = self.rng.gen_range(1..=4);
        let terms: Vec<_> = (0..count)
            .map(|_| {
                let x = self.exponents(n, xlo, 2);
                let d = (0..n).map(|_| self.rng.gen_range(0..=2u32)).collect();
                (x, d, self.coefficient())
            })
            .collect();
        WeylElement::from_terms(n, terms).expect("lengths match")
    }

    pub fn nonzero_weyl(&mut self, n: usize) -> WeylElement {
        loop {
            let u = self.weyl(n);
            if !u.is_zero() {
                return u;
            }
        }
    }

    pub fn shift(&mut self, n: usize) -> ShiftElement {
        let count = self.rng.gen_range(1..=4);
        let mut out = ShiftElement::zero(n);
        for _ in 0..count {
            let mut p = LaurentPoly::zero(n);
            for _ in 0..self.rng.gen_range(1..=3) {
                let e = ExponentVector::new(self.exponents(n, 0, 2));
                p = &p + &LaurentPoly::monomial(e, self.coefficient());
            }
            let sigma = ExponentVector::new(self.exponents(n, -2, 2));
            out = &out + &ShiftElement::monomial(p, sigma).expect("polynomial coefficient");
        }
        out
    }

    /// Rational point with nonzero coordinates `p/q`, `|p| <= 9`, `q <= 4`.
    pub fn point(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.coefficient()).collect()
    }

    /// Dominant exponent for the flavor with entries bounded by `max` in
    /// absolute value.
    pub fn dominant(&mut self, flavor: Family, n: usize, max: i64) -> DominantExponent {
        let mut v: Vec<i64> = (0..n).map(|_| self.int(0, max)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        if flavor == Family::D && self.rng.gen_bool(0.5) {
            v[n - 1] = -v[n - 1];
        }
        DominantExponent::new(flavor, v).expect("sorted entries are dominant")
    }

    pub fn group_element(&mut self, spec: &GroupSpec, variant: ActionVariant) -> GroupElement {
        let elems = enumerate(spec, variant).expect("enumerable group");
        elems[self.rng.gen_range(0..elems.len())].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.weyl(2), b.weyl(2));
            assert_eq!(a.laurent(3), b.laurent(3));
        }
        let mut c = Sampler::derived(7, "x");
        let mut d = Sampler::derived(7, "y");
        assert_ne!(
            (0..8).map(|_| c.int(0, 1000)).collect::<Vec<_>>(),
            (0..8).map(|_| d.int(0, 1000)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn shapes() {
        let mut s = Sampler::new(1);
        for _ in 0..100 {
            let f = s.laurent(2);
            assert!(f.len() <= 6);
            assert!(f.terms().all(|(e, _)| e.entries().iter().all(|k| k.abs() <= 3)));
            let u = s.weyl(3);
            assert!(u.len() <= 4);
            assert!(u.terms().all(|(m, _)| m.d.iter().all(|&b| b <= 2) && m.x.entries().iter().all(|a| a.abs() <= 2)));
            assert!(s.weyl_polynomial(2).is_polynomial());
            let pi = s.dominant(Family::D, 3, 4);
            assert!(pi.entries()[1] >= pi.entries()[2].abs());
        }
    }
}
