//! Cross-checks against independent computations: evaluation and linear
//! solving instead of lex reduction, operators acting on functions instead
//! of normal ordering, Gaussian rationals instead of cyclotomic reduction.

use noncomm::arith::{CycloNum, Rational};
use noncomm::group_algebra::idempotents;
use noncomm::groups::{skew_invariant_j, ActionVariant, GroupSpec};
use noncomm::invariants::{bn_generators, decompose, dn_generators, dn_relation, reynolds, Basis};
use noncomm::laurent::LaurentPoly;
use noncomm::random::Sampler;
use noncomm::shift::{phi, phi_inverse, ShiftElement, ShiftGenerator};
use noncomm::sign::Sign;
use noncomm::weyl::WeylElement;

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn poly(n: usize, terms: &[(&[i64], Rational)]) -> LaurentPoly {
    LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), c.clone()))).unwrap()
}

/// Solves a square system by Gauss-Jordan elimination.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Vec<Rational> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != q(0, 1)).expect("nonsingular system");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inverse().unwrap();
        for r in 0..n {
            if r != col && a[r][col] != q(0, 1) {
                let factor = &a[r][col] * &inv;
                let pivot_row = a[col].clone();
                for (ark, ack) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *ark -= &(&factor * ack);
                }
                let sub = &factor * &b[col];
                b[r] -= &sub;
            }
        }
    }
    (0..n).map(|i| &b[i] * &a[i][i].inverse().unwrap()).collect()
}

/// Fits `f = Σ c_m · ∏ g_i^{m_i}` over the given exponent list by evaluating
/// at distinct rational points.
fn fit(f: &LaurentPoly, gens: &[LaurentPoly], monomials: &[Vec<u32>]) -> Vec<Rational> {
    let n = f.nvars();
    let points: Vec<Vec<Rational>> = (0..monomials.len())
        .map(|k| (0..n).map(|i| q((k * 7 + i * 3 + 2) as i64, (i + 2) as i64)).collect())
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for pt in &points {
        let vals: Vec<Rational> = gens.iter().map(|g| g.evaluate(pt).unwrap()).collect();
        rows.push(
            monomials
                .iter()
                .map(|m| {
                    m.iter()
                        .zip(&vals)
                        .fold(q(1, 1), |acc, (&k, v)| acc * v.pow(k as i64).unwrap())
                })
                .collect(),
        );
        rhs.push(f.evaluate(pt).unwrap());
    }
    solve(rows, rhs)
}

#[test]
fn b2_decomposition_matches_linear_solve() {
    let f = poly(
        2,
        &[(&[2, 0], q(1, 1)), (&[-2, 0], q(1, 1)), (&[0, 2], q(1, 1)), (&[0, -2], q(1, 1))],
    );
    let gens = bn_generators(2, Sign::Minus).unwrap();
    let monos = vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![1, 0], vec![0, 1], vec![0, 0]];
    let coeffs = fit(&f, &gens, &monos);
    assert_eq!(coeffs, vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(-2, 1), q(4, 1)]);

    let dec = decompose(&f, Basis::BMinus).unwrap();
    for (m, c) in monos.iter().zip(&coeffs) {
        assert_eq!(dec.coeff(m), *c);
    }
    assert_eq!(dec.to_string(), "s1^2 - 2*s2 + 4");
}

#[test]
fn d2_relation_matches_linear_solve() {
    let gens = dn_generators(2).unwrap();
    let product = &gens.delta_plus * &gens.delta_minus;
    let b = bn_generators(2, Sign::Plus).unwrap();
    let monos = vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![1, 0], vec![0, 1], vec![0, 0]];
    let coeffs = fit(&product, &b, &monos);
    // Δ⁺Δ⁻ = s1² - 2 s2 - 4, so p0 = -2 and p1 = s1² - 4
    assert_eq!(coeffs, vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(-2, 1), q(-4, 1)]);

    let rel = dn_relation(2).unwrap();
    assert_eq!(rel.p0.to_string(), "-2");
    assert_eq!(rel.p1.to_string(), "s1^2 - 4");
    assert_eq!(rel.p, &gens.delta_plus + &LaurentPoly::constant(2, q(2, 1)));
}

#[test]
fn reynolds_of_coordinate_is_quarter_of_first_generator() {
    // the eight images of x1 under B2 with x ↦ -x⁻¹ on flips are x1, x2,
    // -x1⁻¹, -x2⁻¹, each hit twice
    let x1 = LaurentPoly::var(2, 0);
    let r = reynolds(&x1, &GroupSpec::b(2), ActionVariant::TorusMinus).unwrap();
    let by_hand = poly(
        2,
        &[(&[1, 0], q(1, 4)), (&[0, 1], q(1, 4)), (&[-1, 0], q(-1, 4)), (&[0, -1], q(-1, 4))],
    );
    assert_eq!(r, by_hand);
    assert_eq!(r, bn_generators(2, Sign::Minus).unwrap()[0].scale(&q(1, 4)));
    assert!(!r.is_zero());
}

#[test]
fn b2_skew_invariant_is_product_of_forms() {
    let x = |i| LaurentPoly::var(2, i);
    let forms = [&x(0) - &x(1), &x(0) + &x(1), x(0), x(1)];
    let prod = forms.iter().fold(LaurentPoly::one(2), |acc, f| &acc * f);
    assert_eq!(skew_invariant_j(&GroupSpec::b(2)).unwrap().j, prod);
}

/// `∂^b x^a` acting on `x^r`, from the power rule alone.
fn leibniz(xa: i64, db: u32, r: i64) -> (Rational, i64) {
    let mut c = q(1, 1);
    let mut e = r;
    for _ in 0..db {
        c = c * Rational::from(e);
        e -= 1;
    }
    (c, e + xa)
}

#[test]
fn derivative_past_inverse_agrees_with_power_rule() {
    let lhs = &WeylElement::d(1, 0) * &WeylElement::x_pow(1, 0, -1);
    for r in -6..=6 {
        // ∂(x⁻¹ · x^r) = (r - 1) x^{r - 2}
        let want = LaurentPoly::var_pow(1, 0, r - 2).scale(&Rational::from(r - 1));
        let f = LaurentPoly::var_pow(1, 0, r);
        assert_eq!(lhs.apply_to_laurent(&f).unwrap(), want);
        let (c, e) = leibniz(-1, 1, r);
        let (c2, e2) = leibniz(-2, 0, r);
        assert_eq!(e, e2);
        assert_eq!(&c - &c2, Rational::from(r - 1));
    }
}

#[test]
fn weyl_products_act_like_composition() {
    let mut s = Sampler::new(11);
    for _ in 0..40 {
        let (u, v) = (s.weyl(1), s.weyl(1));
        let uv = &u * &v;
        for r in -4..=4 {
            // compose by hand through the power rule
            let mut direct = LaurentPoly::zero(1);
            for (mv, cv) in v.terms() {
                let (c1, e1) = leibniz(mv.x[0], mv.d[0], r);
                for (mu, cu) in u.terms() {
                    let (c2, e2) = leibniz(mu.x[0], mu.d[0], e1);
                    let coef = cu * &(cv * &(&c1 * &c2));
                    direct = &direct + &LaurentPoly::var_pow(1, 0, e2).scale(&coef);
                }
            }
            assert_eq!(uv.apply_to_laurent(&LaurentPoly::var_pow(1, 0, r)).unwrap(), direct);
        }
    }
}

/// `(p(t)σ^k · f)(t) = p(t) f(t - k)` on functions `ℤ^N → ℚ`.
fn act_on_function(u: &ShiftElement, f: &dyn Fn(&[i64]) -> Rational, t: &[i64]) -> Rational {
    let mut acc = q(0, 1);
    for (k, p) in u.terms() {
        let pt: Vec<Rational> = t.iter().map(|&v| Rational::from(v)).collect();
        let shifted: Vec<i64> = t.iter().zip(k.entries()).map(|(a, b)| a - b).collect();
        acc += &(p.evaluate(&pt).unwrap() * f(&shifted));
    }
    acc
}

#[test]
fn shift_products_act_like_composition() {
    let mut s = Sampler::new(5);
    let f = |t: &[i64]| {
        t.iter()
            .enumerate()
            .fold(q(1, 1), |acc, (i, &v)| acc * Rational::new(v * v * v + 7 + i as i64, v * v + 1))
    };
    for n in 1..=2 {
        for _ in 0..30 {
            let (a, b) = (s.shift(n), s.shift(n));
            let ab = &a * &b;
            for t0 in -3..=3 {
                for t1 in -2..=2 {
                    let t: Vec<i64> = [t0, t1][..n].to_vec();
                    let inner = |x: &[i64]| act_on_function(&b, &f, x);
                    let composed = act_on_function(&a, &inner, &t);
                    assert_eq!(act_on_function(&ab, &f, &t), composed);
                }
            }
        }
    }
}

#[test]
fn preimage_of_t_by_hand() {
    // φ(∂x) = (t + 1 - c/2) + σ ∓ σ⁻¹, so t = φ(∂x + c/2 - 1 - x ± x⁻¹)
    for sign in Sign::both() {
        for c in [q(0, 1), q(3, 1), q(-5, 7)] {
            let dx = &WeylElement::d(1, 0) * &WeylElement::x(1, 0);
            let img = phi(sign, &c, &dx).unwrap();
            let by_hand = &(&(&ShiftElement::t(1, 0)
                + &ShiftElement::constant(1, q(1, 1) - &c * &q(1, 2)))
                + &ShiftElement::sigma(1, 0))
                - &ShiftElement::sigma_pow(1, 0, -1).scale(&sign.rational());
            assert_eq!(img, by_hand);
            let pre = phi_inverse(sign, &c, 1, ShiftGenerator::T(0)).unwrap();
            assert_eq!(phi(sign, &c, &pre).unwrap(), ShiftElement::t(1, 0));
        }
    }
}

#[test]
fn other_closed_form_for_preimage_of_t_is_not_an_inverse() {
    // ∂x + 1/2 + x⁻¹ ∓ x maps back to t only for the plus sign at c = 3
    let candidate = |sign: Sign| {
        let dx = &WeylElement::d(1, 0) * &WeylElement::x(1, 0);
        &(&(&dx + &WeylElement::constant(1, q(1, 2))) + &WeylElement::x_pow(1, 0, -1))
            - &WeylElement::x(1, 0).scale(&sign.rational())
    };
    let t = ShiftElement::t(1, 0);
    for sign in Sign::both() {
        for c in [q(0, 1), q(1, 1), q(1, 2), q(-3, 1), q(3, 1)] {
            let works = phi(sign, &c, &candidate(sign)).unwrap() == t;
            assert_eq!(works, sign == Sign::Plus && c == q(3, 1), "{sign} c={c}");
        }
    }
}

/// Gaussian rationals `a + b i`.
#[derive(Clone, Debug, PartialEq)]
struct Gauss(Rational, Rational);

impl Gauss {
    fn mul(&self, o: &Gauss) -> Gauss {
        Gauss(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }
    fn add(&self, o: &Gauss) -> Gauss {
        Gauss(&self.0 + &o.0, &self.1 + &o.1)
    }
}

#[test]
fn order_four_projector_by_gaussian_convolution() {
    let quarter = q(1, 4);
    let z = q(0, 1);
    // ¼(1 - i g - g² + i g³)
    let e1 = [
        Gauss(quarter.clone(), z.clone()),
        Gauss(z.clone(), -&quarter),
        Gauss(-&quarter, z.clone()),
        Gauss(z.clone(), quarter.clone()),
    ];
    let mut sq = vec![Gauss(z.clone(), z.clone()); 4];
    for i in 0..4 {
        for j in 0..4 {
            sq[(i + j) % 4] = sq[(i + j) % 4].add(&e1[i].mul(&e1[j]));
        }
    }
    assert_eq!(sq, e1.to_vec());

    let lib = &idempotents(4).unwrap()[1];
    let i = CycloNum::zeta(4);
    for (k, g) in e1.iter().enumerate() {
        let as_cyclo = CycloNum::from_rational(4, g.0.clone()).add_ref(&i.scale(&g.1));
        assert_eq!(lib.coeffs()[k], as_cyclo);
    }
}
