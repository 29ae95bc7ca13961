//! Exact coefficient domains: big rationals and cyclotomic fields.

mod cyclotomic;
mod rational;
mod upoly;

pub use cyclotomic::{cyclotomic_polynomial, totient, CycloNum, IntPolynomial, MAX_PUBLIC_ORDER};
pub use rational::Rational;

use std::fmt::{Debug, Display};

use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Field operations the polynomial kernels need from a coefficient domain.
pub trait Coeff:
    Clone + PartialEq + Debug + Display + Serialize + DeserializeOwned + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(r: Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        Rational::inverse(self).ok()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Coeff for CycloNum {
    fn zero() -> Self {
        CycloNum::zero()
    }
    fn one() -> Self {
        CycloNum::one()
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        CycloNum::add_ref(self, other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        CycloNum::sub_ref(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        CycloNum::mul_ref(self, other)
    }
    fn neg_ref(&self) -> Self {
        CycloNum::neg_ref(self)
    }
    fn inverse(&self) -> Option<Self> {
        CycloNum::inverse(self).ok()
    }
    fn from_rational(r: Rational) -> Self {
        CycloNum::from(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_cyclo(rng: &mut ChaCha8Rng, m: u32) -> CycloNum {
        let coeffs = (0..totient(m))
            .map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        CycloNum::new(m, coeffs).unwrap()
    }

    #[test]
    fn field_axioms_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(500);
        for &m in &[1u32, 2, 3, 4, 5, 8, 12] {
            for _ in 0..500 {
                let a = random_cyclo(&mut rng, m);
                let b = random_cyclo(&mut rng, m);
                let c = random_cyclo(&mut rng, m);
                assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
                assert_eq!(
                    a.mul_ref(&b.add_ref(&c)),
                    a.mul_ref(&b).add_ref(&a.mul_ref(&c))
                );
                if !a.is_zero() {
                    assert!(a.mul_ref(&a.inverse().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn roots_of_unity_identities() {
        for m in 1..=12u32 {
            let z = CycloNum::zeta(m);
            assert!(z.pow(m as i64).unwrap().is_one(), "ζ_{m}^{m}");
            for k in 1..m as i64 {
                let zk = z.pow(k).unwrap();
                let mut s = CycloNum::zero();
                for j in 0..m as i64 {
                    s = s.add_ref(&zk.pow(j).unwrap());
                }
                assert!(s.is_zero(), "m={m} k={k}");
            }
        }
    }
}
