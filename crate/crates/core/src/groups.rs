//! The classical reflection groups S_n, B_n and D_n as signed permutations.
//!
//! One element type serves three actions on (Laurent) polynomials, chosen by
//! [`ActionVariant`]:
//!
//! | variant       | unflipped `x_i`   | flipped `x_i`          |
//! |---------------|-------------------|------------------------|
//! | `Linear`      | `x_{p(i)}`        | `-x_{p(i)}`            |
//! | `TorusMinus`  | `x_{p(i)}`        | `-x_{p(i)}^{-1}`       |
//! | `TorusPlus`   | `x_{p(i)}`        | `x_{p(i)}^{-1}`        |
//!
//! Every action is a ring automorphism given by substitution, and the
//! product is defined so that `act(g * h, f) == act(g, act(h, f))`.

use std::fmt;

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{Coeff, Rational};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, MonomialImage};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    S,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::B => "B",
            Family::D => "D",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Family::S),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            _ => Err(Error::Parse(format!("unknown group family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionVariant {
    Linear,
    TorusMinus,
    TorusPlus,
}

impl ActionVariant {
    pub fn is_torus(self) -> bool {
        !matches!(self, ActionVariant::Linear)
    }
}

impl fmt::Display for ActionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionVariant::Linear => "linear",
            ActionVariant::TorusMinus => "torus-minus",
            ActionVariant::TorusPlus => "torus-plus",
        })
    }
}

impl std::str::FromStr for ActionVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(ActionVariant::Linear),
            "torus-minus" => Ok(ActionVariant::TorusMinus),
            "torus-plus" => Ok(ActionVariant::TorusPlus),
            _ => Err(Error::Parse(format!("unknown action variant {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = if family == Family::D { 2 } else { 1 };
        if n < min {
            return Err(Error::Range(format!("{family}_{n} needs rank at least {min}")));
        }
        Ok(GroupSpec { family, n })
    }

    pub fn s(n: usize) -> Self {
        Self::new(Family::S, n).expect("valid rank")
    }

    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n).expect("valid rank")
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("valid rank")
    }

    /// Largest rank [`enumerate`] accepts for this family.
    pub fn max_rank(family: Family) -> usize {
        match family {
            Family::S => 8,
            Family::B | Family::D => 6,
        }
    }

    pub fn order(&self) -> usize {
        let fact: usize = (1..=self.n).product();
        match self.family {
            Family::S => fact,
            Family::B => fact << self.n,
            Family::D => fact << (self.n - 1),
        }
    }

    /// D_n below rank 4 is accepted but is not the usual type-D root system;
    /// reports flag it.
    pub fn is_small_d(&self) -> bool {
        self.family == Family::D && self.n < 4
    }

    fn check_bounds(&self) -> Result<()> {
        let max = Self::max_rank(self.family);
        if self.n > max {
            return Err(Error::Range(format!(
                "{}_{} has {} elements; enumeration stops at rank {max}",
                self.family,
                self.n,
                self.order()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.n)
    }
}

/// Signed permutation with the action it is meant to carry.
///
/// `perm` is 0-based internally; the JSON form is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Vec<usize>,
    flips: Vec<bool>,
    variant: ActionVariant,
}

impl GroupElement {
    pub fn new(perm: Vec<usize>, flips: Vec<bool>, variant: ActionVariant) -> Result<Self> {
        if perm.len() != flips.len() {
            return Err(Error::shape(perm.len(), flips.len()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidAction(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(GroupElement {
            perm,
            flips,
            variant,
        })
    }

    pub fn identity(n: usize, variant: ActionVariant) -> Self {
        GroupElement {
            perm: (0..n).collect(),
            flips: vec![false; n],
            variant,
        }
    }

    /// Swaps coordinates `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize, variant: ActionVariant) -> Self {
        let mut g = Self::identity(n, variant);
        g.perm.swap(i, j);
        g
    }

    /// Flips the listed coordinates (0-based) and nothing else.
    pub fn flip(n: usize, coords: &[usize], variant: ActionVariant) -> Self {
        let mut g = Self::identity(n, variant);
        for &i in coords {
            g.flips[i] = !g.flips[i];
        }
        g
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn variant(&self) -> ActionVariant {
        self.variant
    }

    pub fn flip_count(&self) -> usize {
        self.flips.iter().filter(|&&f| f).count()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.flip_count() == 0
    }

    pub fn with_variant(&self, variant: ActionVariant) -> Self {
        GroupElement {
            variant,
            ..self.clone()
        }
    }

    pub fn belongs_to(&self, spec: &GroupSpec) -> bool {
        self.rank() == spec.n
            && match spec.family {
                Family::S => self.flip_count() == 0,
                Family::B => true,
                Family::D => self.flip_count().is_multiple_of(2),
            }
    }

    /// `self * other`, acting as "apply `other` first" on polynomials:
    /// `act(g.compose(h), f) == act(g, act(h, f))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::shape(self.rank(), other.rank()));
        }
        if self.variant != other.variant {
            return Err(Error::InvalidAction(format!(
                "cannot compose {} with {} elements",
                self.variant, other.variant
            )));
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let flips = other
            .flips
            .iter()
            .zip(&other.perm)
            .map(|(&f, &p)| f ^ self.flips[p])
            .collect();
        Ok(GroupElement {
            perm,
            flips,
            variant: self.variant,
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            flips[self.perm[i]] = self.flips[i];
        }
        GroupElement {
            perm,
            flips,
            variant: self.variant,
        }
    }

    /// The substitution `x_i ↦ image_i` this element performs.
    pub fn images(&self) -> Vec<MonomialImage> {
        self.perm
            .iter()
            .zip(&self.flips)
            .map(|(&target, &flip)| {
                let (negate, invert) = match (self.variant, flip) {
                    (_, false) => (false, false),
                    (ActionVariant::Linear, true) => (true, false),
                    (ActionVariant::TorusMinus, true) => (true, true),
                    (ActionVariant::TorusPlus, true) => (false, true),
                };
                MonomialImage {
                    target,
                    negate,
                    invert,
                }
            })
            .collect()
    }

    pub fn act<C: Coeff>(&self, f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        if f.nvars() != self.rank() {
            return Err(Error::shape(self.rank(), f.nvars()));
        }
        f.substitute_monomial(&self.images())
    }

    /// The point map `p ↦ (image_1(p), …, image_n(p))` dual to [`act`](Self::act).
    /// Its fixed points are exactly the points whose stabilizer contains `self`.
    pub fn act_point(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        if point.len() != self.rank() {
            return Err(Error::shape(self.rank(), point.len()));
        }
        self.images()
            .iter()
            .map(|im| {
                let v = &point[im.target];
                let v = if im.invert {
                    v.inverse().map_err(|_| Error::Pole { index: im.target })?
                } else {
                    v.clone()
                };
                Ok(if im.negate { -v } else { v })
            })
            .collect()
    }

    /// Determinant of the signed permutation matrix.
    pub fn determinant(&self) -> Rational {
        let inversions = self
            .perm
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        Rational::sign_power((inversions + self.flip_count()) as i64)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        let flips: String = self.flips.iter().map(|&b| if b { '1' } else { '0' }).collect();
        write!(f, "[{}|{}]", perm.join(","), flips)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}:{}", self.variant)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    perm: Vec<usize>,
    flips: Vec<bool>,
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            perm: self.perm.iter().map(|p| p + 1).collect(),
            flips: self.flips.clone(),
        }
        .serialize(s)
    }
}

impl GroupElement {
    /// Parses the `{"perm": [1-based], "flips": [...]}` form.
    pub fn from_json(value: &serde_json::Value, variant: ActionVariant) -> Result<Self> {
        let raw: ElementJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.perm.contains(&0) {
            return Err(Error::Parse("permutation entries are 1-based".into()));
        }
        Self::new(raw.perm.iter().map(|p| p - 1).collect(), raw.flips, variant)
    }
}

/// A group together with the action it carries; the JSON form is
/// `{"family": "B", "n": 2, "variant": "torus-minus"}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    pub family: Family,
    pub n: usize,
    pub variant: ActionVariant,
}

impl GroupAction {
    pub fn spec(&self) -> Result<GroupSpec> {
        GroupSpec::new(self.family, self.n)
    }
}

/// Every element exactly once, permutations in lex order, then flip masks
/// in binary counting order.
pub fn enumerate(spec: &GroupSpec, variant: ActionVariant) -> Result<Vec<GroupElement>> {
    spec.check_bounds()?;
    let n = spec.n;
    let masks: Vec<Vec<bool>> = match spec.family {
        Family::S => vec![vec![false; n]],
        Family::B | Family::D => (0u32..1 << n)
            .filter(|m| spec.family == Family::B || m.count_ones() % 2 == 0)
            .map(|m| (0..n).map(|i| m >> i & 1 == 1).collect())
            .collect(),
    };
    let mut out = Vec::with_capacity(spec.order());
    for perm in (0..n).permutations(n) {
        for flips in &masks {
            out.push(GroupElement {
                perm: perm.clone(),
                flips: flips.clone(),
                variant,
            });
        }
    }
    Ok(out)
}

/// A generating set: adjacent transpositions, plus one flip (B) or one
/// flip pair (D).
pub fn generators(spec: &GroupSpec, variant: ActionVariant) -> Vec<GroupElement> {
    let n = spec.n;
    let mut gens: Vec<GroupElement> = (0..n.saturating_sub(1))
        .map(|i| GroupElement::transposition(n, i, i + 1, variant))
        .collect();
    match spec.family {
        Family::S => {}
        Family::B => gens.push(GroupElement::flip(n, &[0], variant)),
        Family::D => gens.push(GroupElement::flip(n, &[0, 1], variant)),
    }
    gens
}

/// Reflecting hyperplanes of the linear action, with their orders.
#[derive(Clone, Debug, PartialEq)]
pub struct ReflectionData {
    pub forms: Vec<LaurentPoly>,
    pub orders: Vec<u32>,
    pub group_order: usize,
}

pub fn reflection_data(spec: &GroupSpec) -> Result<ReflectionData> {
    spec.check_bounds()?;
    let n = spec.n;
    let x = |i| LaurentPoly::<Rational>::var(n, i);
    let mut forms = Vec::new();
    for (i, j) in (0..n).tuple_combinations() {
        forms.push(&x(i) - &x(j));
        if spec.family != Family::S {
            forms.push(&x(i) + &x(j));
        }
    }
    if spec.family == Family::B {
        forms.extend((0..n).map(x));
    }
    Ok(ReflectionData {
        orders: vec![2; forms.len()],
        forms,
        group_order: spec.order(),
    })
}

/// The reflection whose mirror is the given form, as a linear element.
pub fn reflection_for_form(spec: &GroupSpec, index: usize) -> Result<GroupElement> {
    let n = spec.n;
    let lin = ActionVariant::Linear;
    let mut k = 0;
    for (i, j) in (0..n).tuple_combinations() {
        if k == index {
            return Ok(GroupElement::transposition(n, i, j, lin));
        }
        k += 1;
        if spec.family != Family::S {
            if k == index {
                let t = GroupElement::transposition(n, i, j, lin);
                return GroupElement::flip(n, &[i, j], lin).compose(&t);
            }
            k += 1;
        }
    }
    if spec.family == Family::B && index < k + n {
        return Ok(GroupElement::flip(n, &[index - k], lin));
    }
    Err(Error::Range(format!("no reflecting hyperplane with index {index}")))
}

/// `δ = ∏ α_H`, the skew invariant `J = ∏ α_H^{n_H - 1}` and `Δ = J^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewInvariants {
    pub delta: LaurentPoly,
    pub j: LaurentPoly,
    pub delta_lin: LaurentPoly,
}

fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Builds δ, J and Δ and certifies `w·J = det(w) J` and `w·Δ = Δ` for every
/// element of the group under the linear action.
pub fn skew_invariant_j(spec: &GroupSpec) -> Result<SkewInvariants> {
    let data = reflection_data(spec)?;
    let n = spec.n;
    let order = data.group_order as i64;
    let degree: u64 = data.orders.iter().map(|&o| (o as u64 - 1) * order as u64).sum();
    // Δ is homogeneous; bail out before expanding something with more
    // monomials than the polynomial kernel accepts.
    let room = binomial(degree + n as u64 - 1, n as u64 - 1);
    if room > crate::laurent::MAX_TERMS as f64 * 1000.0 {
        return Err(Error::Range(format!(
            "Δ for {spec} has degree {degree}; too large to expand"
        )));
    }
    let mut delta = LaurentPoly::one(n);
    let mut j = LaurentPoly::one(n);
    let mut delta_lin = LaurentPoly::one(n);
    for (form, &nh) in data.forms.iter().zip(&data.orders) {
        delta = delta.checked_mul(form)?;
        let e = nh as i64 - 1;
        j = j.checked_mul(&form.pow(e)?)?;
        delta_lin = delta_lin.checked_mul(&form.pow(e * order)?)?;
    }
    for w in enumerate(spec, ActionVariant::Linear)? {
        let det = w.determinant();
        if w.act(&j)? != j.scale(&det) {
            return Err(Error::InvariantViolation {
                witness: w.to_string(),
                detail: "w·J != det(w)·J".into(),
            });
        }
        if w.act(&delta_lin)? != delta_lin {
            return Err(Error::InvariantViolation {
                witness: w.to_string(),
                detail: "w·Δ != Δ".into(),
            });
        }
    }
    Ok(SkewInvariants {
        delta,
        j,
        delta_lin,
    })
}

/// All elements fixing `point` under the chosen action.
pub fn stabilizer(
    spec: &GroupSpec,
    variant: ActionVariant,
    point: &[Rational],
) -> Result<Vec<GroupElement>> {
    if point.len() != spec.n {
        return Err(Error::shape(spec.n, point.len()));
    }
    if variant.is_torus() {
        if let Some(i) = point.iter().position(Zero::is_zero) {
            return Err(Error::Pole { index: i });
        }
    }
    let mut out = Vec::new();
    for g in enumerate(spec, variant)? {
        if g.act_point(point)? == point {
            out.push(g);
        }
    }
    Ok(out)
}

/// `|G|⁻¹ Σ_g g·f`.
pub fn average<C: Coeff>(
    f: &LaurentPoly<C>,
    spec: &GroupSpec,
    variant: ActionVariant,
) -> Result<LaurentPoly<C>> {
    if f.nvars() != spec.n {
        return Err(Error::shape(spec.n, f.nvars()));
    }
    let elems = enumerate(spec, variant)?;
    let mut acc = LaurentPoly::zero(spec.n);
    for g in &elems {
        acc = acc.checked_add(&g.act(f)?)?;
    }
    let inv = Rational::new(1, elems.len() as i64);
    Ok(acc.scale(&C::from_rational(inv)))
}

/// Fails with the first generator that moves `f`.
pub fn certify_invariant<C: Coeff>(
    f: &LaurentPoly<C>,
    spec: &GroupSpec,
    variant: ActionVariant,
) -> Result<()> {
    for g in generators(spec, variant) {
        if g.act(f)? != *f {
            return Err(Error::InvariantViolation {
                witness: format!("{g:?}"),
                detail: "g·f != f".into(),
            });
        }
    }
    Ok(())
}
