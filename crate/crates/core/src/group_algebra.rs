//! Group algebras: cyclic groups over cyclotomic coefficients, where the
//! character projectors live, and rational group algebras of the signed
//! permutation groups, where the symmetrizer lives.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{CycloNum, Rational};
use crate::error::{Error, Result};
use crate::groups::{enumerate, ActionVariant, GroupElement, GroupSpec};

/// Largest cyclic order [`idempotents`] accepts.
pub const MAX_CYCLIC_ORDER: u32 = 24;

/// `Σ_j a_j g^j` in the group algebra of `⟨g | g^m = 1⟩`.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CyclicJson")]
pub struct CyclicGroupAlgebraElement {
    m: u32,
    coeffs: Vec<CycloNum>,
}

#[derive(Deserialize)]
struct CyclicJson {
    m: u32,
    coeffs: Vec<CycloNum>,
}

impl TryFrom<CyclicJson> for CyclicGroupAlgebraElement {
    type Error = Error;
    fn try_from(raw: CyclicJson) -> Result<Self> {
        Self::new(raw.m, raw.coeffs)
    }
}

impl CyclicGroupAlgebraElement {
    pub fn new(m: u32, coeffs: Vec<CycloNum>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Range("cyclic order must be positive".into()));
        }
        if coeffs.len() != m as usize {
            return Err(Error::shape(m as usize, coeffs.len()));
        }
        Ok(CyclicGroupAlgebraElement { m, coeffs })
    }

    pub fn zero(m: u32) -> Self {
        CyclicGroupAlgebraElement {
            m,
            coeffs: vec![CycloNum::zero(); m as usize],
        }
    }

    pub fn one(m: u32) -> Self {
        Self::generator_pow(m, 0)
    }

    /// `g^j`.
    pub fn generator_pow(m: u32, j: i64) -> Self {
        let mut out = Self::zero(m);
        out.coeffs[j.rem_euclid(m as i64) as usize] = CycloNum::one();
        out
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[CycloNum] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::shape(self.m as usize, other.m as usize));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(CyclicGroupAlgebraElement {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    /// Convolution modulo `g^m = 1`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let m = self.m as usize;
        let mut out = Self::zero(self.m);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let slot = &mut out.coeffs[(i + j) % m];
                *slot = slot.add_ref(&a.mul_ref(b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        CyclicGroupAlgebraElement {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloNum::is_zero)
    }
}

impl fmt::Display for CyclicGroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| match j {
                0 => a.to_string(),
                1 => format!("{a}*g"),
                _ => format!("{a}*g^{j}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for CyclicGroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[{self}]", self.m)
    }
}

/// The character projectors `e_i = (1/m) Σ_j ζ_m^{-ij} g^j`, `i = 0..m`,
/// with the generator's determinant fixed as `ζ_m`. Orthogonality and
/// completeness are certified before returning.
pub fn idempotents(m: u32) -> Result<Vec<CyclicGroupAlgebraElement>> {
    if !(2..=MAX_CYCLIC_ORDER).contains(&m) {
        return Err(Error::Range(format!(
            "cyclic order {m} outside 2..={MAX_CYCLIC_ORDER}"
        )));
    }
    let inv_m = Rational::new(1, m as i64);
    let es: Vec<_> = (0..m as i64)
        .map(|i| CyclicGroupAlgebraElement {
            m,
            coeffs: (0..m as i64)
                .map(|j| CycloNum::zeta_pow(m, -i * j).scale(&inv_m))
                .collect(),
        })
        .collect();
    certify_idempotents(&es)?;
    Ok(es)
}

/// `e_i e_j = δ_ij e_i` and `Σ e_i = 1`.
pub fn certify_idempotents(es: &[CyclicGroupAlgebraElement]) -> Result<()> {
    let m = es.first().map_or(1, |e| e.m);
    let zero = CyclicGroupAlgebraElement::zero(m);
    let mut sum = zero.clone();
    for (i, ei) in es.iter().enumerate() {
        for (j, ej) in es.iter().enumerate() {
            let prod = ei.checked_mul(ej)?;
            let expect = if i == j { ei } else { &zero };
            if prod != *expect {
                return Err(Error::Internal(format!(
                    "e_{i}·e_{j} = {prod}, expected {expect}"
                )));
            }
        }
        sum = sum.checked_add(ei)?;
    }
    if sum != CyclicGroupAlgebraElement::one(m) {
        return Err(Error::Internal(format!("projectors sum to {sum}")));
    }
    Ok(())
}

/// Whether `g·e_i = ζ_m^i e_i`.
pub fn character_holds(e: &CyclicGroupAlgebraElement, i: i64) -> Result<bool> {
    let g = CyclicGroupAlgebraElement::generator_pow(e.m, 1);
    Ok(g.checked_mul(e)? == e.scale(&CycloNum::zeta_pow(e.m, i)))
}

/// A rational combination of group elements, multiplied through composition.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<GroupElement, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: GroupElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, Rational::one());
        GroupAlgebraElement { terms }
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, g: GroupElement, c: Rational) {
        let slot = self.terms.entry(g.clone()).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.compose(h)?, a * b);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("{c}*{g}")).collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `|W|⁻¹ Σ_w w`, certified to satisfy `e·e = e`.
pub fn symmetrizer(spec: &GroupSpec) -> Result<GroupAlgebraElement> {
    let elems = enumerate(spec, ActionVariant::Linear)?;
    let weight = Rational::new(1, elems.len() as i64);
    let e = GroupAlgebraElement {
        terms: elems.into_iter().map(|g| (g, weight.clone())).collect(),
    };
    let sq = e.checked_mul(&e)?;
    if sq != e {
        return Err(Error::Internal(format!("symmetrizer of {spec} is not idempotent")));
    }
    Ok(e)
}

/// Whether `w·e = e` for every element `w` of the group.
pub fn absorbs_group(e: &GroupAlgebraElement, spec: &GroupSpec) -> Result<bool> {
    for w in enumerate(spec, ActionVariant::Linear)? {
        if GroupAlgebraElement::basis(w).checked_mul(e)? != *e {
            return Ok(false);
        }
    }
    Ok(true)
}
