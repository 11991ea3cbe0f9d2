//! Resultants by fraction-free elimination, the `(λ, u)` resultant profile
//! of the input polynomial, fiber profiles, and the four-case formula that
//! reads a growth exponent off a profile.

use crate::error::CoreError;
use crate::normalize::{is_normal_form, InputPolynomial};
use crate::poly::MultiPoly;
use crate::scalar::{ExtRational, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Sylvester matrix of `a` and `b` with respect to `var`, `a`'s rows first.
pub fn sylvester_matrix(a: &MultiPoly, b: &MultiPoly, var: &str) -> Result<Vec<Vec<MultiPoly>>, CoreError> {
    if a.is_zero() || b.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    let da = a.deg_in_usize(var).unwrap();
    let db = b.deg_in_usize(var).unwrap();
    if da == 0 && db == 0 {
        return Err(CoreError::ResultantDegenerate(var.to_string()));
    }
    let ca = a.coeffs_in(var); // low power first
    let cb = b.coeffs_in(var);
    let size = da + db;
    let mut m = vec![vec![MultiPoly::zero(); size]; size];
    for row in 0..db {
        for (k, c) in ca.iter().rev().enumerate() {
            m[row][row + k] = c.clone();
        }
    }
    for row in 0..da {
        for (k, c) in cb.iter().rev().enumerate() {
            m[db + row][row + k] = c.clone();
        }
    }
    Ok(m)
}

/// Fraction-free (Bareiss) determinant over the polynomial ring; every
/// division in the elimination is exact.
pub fn determinant_bareiss(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::int(1);
    }
    let mut sign = false;
    let mut prev = MultiPoly::int(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination step divides exactly");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Cofactor-expansion determinant. Exponential; kept as the independent
/// reference the elimination is checked against.
pub fn determinant_cofactor(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::int(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero();
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top.mul(&determinant_cofactor(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Resultant of `a` and `b` with respect to `var`: the raw Sylvester
/// determinant with `a`'s rows first.
pub fn resultant_in(a: &MultiPoly, b: &MultiPoly, var: &str) -> Result<MultiPoly, CoreError> {
    Ok(determinant_bareiss(sylvester_matrix(a, b, var)?))
}

/// Resultant with respect to `y`.
pub fn resultant_y(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, CoreError> {
    resultant_in(a, b, "y")
}

/// The coefficients `Q₀..Q_N` of `Res_y(f − λ, f′_y − u)` collected by
/// descending powers of `x`. Zero coefficients between `Q₀` and `Q_N` are
/// kept so the index arithmetic stays aligned.
#[derive(Clone, Debug)]
pub struct ResultantProfile {
    /// Degree of the input (the `n` of the normal form).
    pub n: usize,
    /// Coefficients `Q₀..Q_N` as polynomials in `(lambda, u)`.
    pub coeffs: Vec<MultiPoly>,
}

impl ResultantProfile {
    pub fn big_n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn q0(&self) -> &MultiPoly {
        &self.coeffs[0]
    }

    /// `Q₀(λ, 0)` as a dense polynomial in `λ`; its roots are exactly the
    /// critical values at infinity.
    pub fn lambda_polynomial(&self) -> Vec<Rational> {
        self.q0()
            .substitute("u", &MultiPoly::zero())
            .univariate_coeffs("lambda")
            .expect("profile coefficients live in (lambda, u)")
    }

    /// `deg_u Q₀(λ, u)` measured on the unspecialized coefficient.
    pub fn deg_u_q0(&self) -> usize {
        self.q0().deg_in_usize("u").unwrap_or(0)
    }

    /// `max_{i=1}^{N} deg_u Q_i(λ,u) / i`, vanishing coefficients skipped.
    /// This is the reciprocal of the positive generic exponent.
    pub fn max_degu_ratio(&self) -> Option<Rational> {
        let mut best: Option<Rational> = None;
        for (i, q) in self.coeffs.iter().enumerate().skip(1) {
            if q.is_zero() {
                continue;
            }
            let d = q.deg_in_usize("u").unwrap() as i64;
            let ratio = Rational::new(BigInt::from(d), BigInt::from(i as i64));
            if best.as_ref().map_or(true, |b| ratio > *b) {
                best = Some(ratio);
            }
        }
        best
    }
}

/// Build the resultant profile of a normal-form input and check the shape
/// identities it must satisfy (`Q(0,λ,0) = ±nⁿλ^{n−1} + …` and
/// `Q₀(λ,0) ≢ 0`).
pub fn resultant_profile(f: &InputPolynomial) -> Result<ResultantProfile, CoreError> {
    if !is_normal_form(f) {
        return Err(CoreError::NotNormalForm(f.poly.to_string()));
    }
    let fy = f.poly.derivative("y");
    let a = f.poly.sub(&MultiPoly::var("lambda"));
    let b = fy.sub(&MultiPoly::var("u"));
    let q = resultant_in(&a, &b, "y")?;
    let mut coeffs = q.coeffs_in("x");
    coeffs.reverse(); // Q₀ multiplies the top power of x
    while coeffs.len() > 1 && coeffs[0].is_zero() {
        coeffs.remove(0);
    }
    let profile = ResultantProfile { n: f.n, coeffs };

    // shape checks from the construction of Q
    let at_origin = q
        .substitute("x", &MultiPoly::zero())
        .substitute("u", &MultiPoly::zero());
    let lam = at_origin
        .univariate_coeffs("lambda")
        .expect("Q(0, λ, 0) is univariate in λ");
    let expect_deg = f.n - 1;
    let nn = Rational::from_integer(BigInt::from(f.n as i64)).pow(f.n as i32);
    let ok_deg = lam.len() == expect_deg + 1;
    let ok_lead = lam.last().map_or(false, |c| c.abs() == nn);
    if !(ok_deg && ok_lead) {
        return Err(CoreError::InternalCheck(format!(
            "Q(0,λ,0) must have degree n-1 with leading coefficient ±n^n, got {at_origin}"
        )));
    }
    if profile
        .lambda_polynomial()
        .iter()
        .all(|c| c.is_zero())
    {
        return Err(CoreError::InternalCheck("Q₀(λ,0) vanished identically".into()));
    }
    Ok(profile)
}

/// The coefficients `R₀..R_K` of `Res_y(g − τ, h)` collected by descending
/// powers of `x`.
#[derive(Clone, Debug)]
pub struct FiberProfile {
    /// Coefficients `R₀..R_K` as univariate polynomials in `tau`.
    pub coeffs: Vec<MultiPoly>,
}

impl FiberProfile {
    pub fn big_k(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Flip every coefficient's sign; the exponent formulas must not care.
    pub fn negated(&self) -> FiberProfile {
        FiberProfile {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

/// Profile of `g` on the zero set of `h`; requires `0 < deg h = deg_y h`.
pub fn fiber_profile(g: &MultiPoly, h: &MultiPoly) -> Result<FiberProfile, CoreError> {
    let degy = match h.deg_in_usize("y") {
        Some(d) if d >= 1 => d,
        _ => return Err(CoreError::FiberHypothesis),
    };
    if h.total_degree_usize() != Some(degy) {
        return Err(CoreError::FiberHypothesis);
    }
    assert!(
        !g.vars().iter().any(|v| v == "tau") && !h.vars().iter().any(|v| v == "tau"),
        "tau is reserved for the fiber parameter"
    );
    let a = g.sub(&MultiPoly::var("tau"));
    let r = resultant_in(&a, h, "y")?;
    assert!(!r.is_zero(), "fiber resultant cannot vanish identically");
    let mut coeffs = r.coeffs_in("x");
    coeffs.reverse();
    while coeffs.len() > 1 && coeffs[0].is_zero() {
        coeffs.remove(0);
    }
    for c in &coeffs {
        assert!(
            c.vars().iter().all(|v| v == "tau"),
            "fiber profile coefficients must be univariate in tau"
        );
    }
    Ok(FiberProfile { coeffs })
}

/// Which of the four mutually exclusive profile shapes fired.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiberCase {
    /// `R₀` constant: positive exponent.
    Positive,
    /// `R₀` non-constant with `R₀(0) ≠ 0`: exponent 0.
    Zero,
    /// `R₀(0) = ⋯ = R_r(0) = 0`, `R_{r+1}(0) ≠ 0`: finite negative exponent.
    NegativeFinite,
    /// every `R_i(0) = 0`: exponent `−∞`.
    MinusInfinity,
}

impl FiberCase {
    pub fn label(&self) -> &'static str {
        match self {
            FiberCase::Positive => "positive",
            FiberCase::Zero => "zero",
            FiberCase::NegativeFinite => "negative_finite",
            FiberCase::MinusInfinity => "minus_infinity",
        }
    }
}

fn tau_deg(p: &MultiPoly) -> Option<usize> {
    p.deg_in_usize("tau")
}

fn tau_ord(p: &MultiPoly) -> Option<usize> {
    let cs = p.univariate_coeffs("tau")?;
    cs.iter().position(|c| !c.is_zero())
}

fn at_zero(p: &MultiPoly) -> Rational {
    p.substitute("tau", &MultiPoly::zero())
        .constant_value()
        .expect("constant after substitution")
}

/// The growth exponent of `g` on the zero set of `h`, read off the profile.
///
/// In the negative-finite case the minimum runs over every index `0..=r`
/// whose coefficient is not identically zero; the escape branches of the
/// zero set correspond to the lower hull of `(i, ord₀ R_i)`, and the hull
/// may well begin at `i = 0`.
pub fn zero_set_exponent(profile: &FiberProfile) -> (ExtRational, FiberCase) {
    let r0 = &profile.coeffs[0];
    assert!(!r0.is_zero(), "profile invariant: R₀ ≠ 0");
    if r0.is_constant() {
        let mut best: Option<Rational> = None;
        for (i, ri) in profile.coeffs.iter().enumerate().skip(1) {
            if ri.is_zero() {
                continue;
            }
            let d = tau_deg(ri).unwrap() as i64;
            let ratio = Rational::new(BigInt::from(d), BigInt::from(i as i64));
            if best.as_ref().map_or(true, |b| ratio > *b) {
                best = Some(ratio);
            }
        }
        let m = best.expect("the resultant carries tau in some coefficient");
        assert!(m.is_positive(), "positive case must yield a positive ratio");
        return (ExtRational::Finite(m.recip()), FiberCase::Positive);
    }
    if !at_zero(r0).is_zero() {
        return (ExtRational::zero(), FiberCase::Zero);
    }
    let first_alive = profile.coeffs.iter().position(|c| !at_zero(c).is_zero());
    let Some(rp1) = first_alive else {
        return (ExtRational::NegInfinity, FiberCase::MinusInfinity);
    };
    let r = rp1 - 1;
    let mut best: Option<Rational> = None;
    for (i, ri) in profile.coeffs.iter().enumerate().take(r + 1) {
        if ri.is_zero() {
            continue;
        }
        let ord = tau_ord(ri).unwrap() as i64;
        let ratio = Rational::new(BigInt::from(ord), BigInt::from((r + 1 - i) as i64));
        if best.as_ref().map_or(true, |b| ratio < *b) {
            best = Some(ratio);
        }
    }
    let m = best.expect("R₀ is nonzero, so the minimum is attained");
    assert!(m.is_positive());
    (
        ExtRational::Finite(-m.recip()),
        FiberCase::NegativeFinite,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    #[test]
    fn resultant_of_linear_pair() {
        // Res_y(y − a, y − b) = a − b with this row convention
        let a = v("y").sub(&v("a"));
        let b = v("y").sub(&v("b"));
        let r = resultant_y(&a, &b).unwrap();
        assert_eq!(r, v("a").sub(&v("b")));
    }

    #[test]
    fn resultant_elimination_examples() {
        // Res_y(y² + x − λ, 2y − u) = u² + 4x − 4λ
        let a = v("y").pow(2).add(&v("x")).sub(&v("lambda"));
        let b = v("y").scale(&rat_int(2)).sub(&v("u"));
        let r = resultant_y(&a, &b).unwrap();
        let expect = v("u")
            .pow(2)
            .add(&v("x").scale(&rat_int(4)))
            .sub(&v("lambda").scale(&rat_int(4)));
        assert_eq!(r, expect);

        // Res_y(y² − λ, 2y − u) = u² − 4λ
        let a = v("y").pow(2).sub(&v("lambda"));
        let r = resultant_y(&a, &b).unwrap();
        assert_eq!(r, v("u").pow(2).sub(&v("lambda").scale(&rat_int(4))));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = v("y").pow(3).add(&v("x").mul(&v("y").pow(2))).add(&v("y"));
        let b = a.derivative("y").sub(&v("u"));
        let m = sylvester_matrix(&a.sub(&v("lambda")), &b, "y").unwrap();
        assert_eq!(determinant_bareiss(m.clone()), determinant_cofactor(&m));
    }

    fn input(p: MultiPoly) -> InputPolynomial {
        InputPolynomial::new(p).unwrap()
    }

    #[test]
    fn profile_examples() {
        // y² + x: N = 1, (Q₀, Q₁) = (4, u² − 4λ)
        let p = resultant_profile(&input(v("y").pow(2).add(&v("x")))).unwrap();
        assert_eq!(p.big_n(), 1);
        assert_eq!(p.coeffs[0], MultiPoly::int(4));
        assert_eq!(
            p.coeffs[1],
            v("u").pow(2).sub(&v("lambda").scale(&rat_int(4)))
        );

        // y²: N = 0, Q₀ = u² − 4λ
        let p = resultant_profile(&input(v("y").pow(2))).unwrap();
        assert_eq!(p.big_n(), 0);
        assert_eq!(
            p.coeffs[0],
            v("u").pow(2).sub(&v("lambda").scale(&rat_int(4)))
        );

        // y² + x·y: N = 2, (Q₀, Q₁, Q₂) = (−1, 0, u² − 4λ)
        let p = resultant_profile(&input(v("y").pow(2).add(&v("x").mul(&v("y"))))).unwrap();
        assert_eq!(p.big_n(), 2);
        assert_eq!(p.coeffs[0], MultiPoly::int(-1));
        assert!(p.coeffs[1].is_zero());
        assert_eq!(
            p.coeffs[2],
            v("u").pow(2).sub(&v("lambda").scale(&rat_int(4)))
        );
    }

    #[test]
    fn fiber_profile_examples() {
        // g = 2y, h = y² + x − λ₀ with λ₀ = 3: K = 1, (4, τ² − 12)
        let g = v("y").scale(&rat_int(2));
        let h = v("y").pow(2).add(&v("x")).sub(&MultiPoly::int(3));
        let p = fiber_profile(&g, &h).unwrap();
        assert_eq!(p.big_k(), 1);
        assert_eq!(p.coeffs[0], MultiPoly::int(4));
        assert_eq!(p.coeffs[1], v("tau").pow(2).sub(&MultiPoly::int(12)));

        // g = y², h = y: R = −τ, K = 0
        let p = fiber_profile(&v("y").pow(2), &v("y")).unwrap();
        assert_eq!(p.big_k(), 0);
        assert_eq!(p.coeffs[0], v("tau").neg());

        // g = 2y, h = y²: R = τ², K = 0
        let p = fiber_profile(&g, &v("y").pow(2)).unwrap();
        assert_eq!(p.big_k(), 0);
        assert_eq!(p.coeffs[0], v("tau").pow(2));
    }

    #[test]
    fn fiber_hypothesis_rejected() {
        // h = x·y has deg h = 2 > 1 = deg_y h
        let err = fiber_profile(&v("y"), &v("x").mul(&v("y")));
        assert!(err.is_err());
        // h constant in y
        assert!(fiber_profile(&v("y"), &MultiPoly::int(1).add(&v("x"))).is_err());
    }

    #[test]
    fn exponent_cases() {
        // case positive: (4, τ² − 4λ₀) → 1/2
        let g = v("y").scale(&rat_int(2));
        let h = v("y").pow(2).add(&v("x")).sub(&MultiPoly::int(5));
        let p = fiber_profile(&g, &h).unwrap();
        let (val, case) = zero_set_exponent(&p);
        assert_eq!(case, FiberCase::Positive);
        assert_eq!(val, ExtRational::from_ratio(1, 2));

        // case zero: R₀ = τ² − 4, K = 0 (g = 2y on h = y² − 1)
        let p = fiber_profile(&g, &v("y").pow(2).sub(&MultiPoly::int(1))).unwrap();
        let (val, case) = zero_set_exponent(&p);
        assert_eq!(case, FiberCase::Zero);
        assert_eq!(val, ExtRational::zero());

        // case minus-infinity: R₀ = τ² (g = 2y on h = y²)
        let p = fiber_profile(&g, &v("y").pow(2)).unwrap();
        let (val, case) = zero_set_exponent(&p);
        assert_eq!(case, FiberCase::MinusInfinity);
        assert_eq!(val, ExtRational::NegInfinity);
    }

    #[test]
    fn exponent_is_sign_insensitive() {
        let g = v("y").scale(&rat_int(2));
        for h in [
            v("y").pow(2).add(&v("x")).sub(&MultiPoly::int(5)),
            v("y").pow(2),
            v("y").pow(2).sub(&MultiPoly::int(1)),
        ] {
            let p = fiber_profile(&g, &h).unwrap();
            assert_eq!(zero_set_exponent(&p), zero_set_exponent(&p.negated()));
        }
    }

    #[test]
    fn negative_case_minimum_includes_index_zero() {
        // synthetic profile R = τ·x² + τ³·x + 1: the hull runs straight from
        // (0,1) to (2,0), so the i = 0 quotient 1/2 is the minimizer
        let profile = FiberProfile {
            coeffs: vec![v("tau"), v("tau").pow(3), MultiPoly::int(1)],
        };
        let (val, case) = zero_set_exponent(&profile);
        assert_eq!(case, FiberCase::NegativeFinite);
        assert_eq!(val, ExtRational::from_int(-2));
    }

    #[test]
    fn rational_coeff_matrix_determinant() {
        let m = vec![
            vec![MultiPoly::constant(rat(1, 2)), MultiPoly::int(3)],
            vec![MultiPoly::int(1), MultiPoly::constant(rat(4, 3))],
        ];
        assert_eq!(
            determinant_bareiss(m.clone()),
            MultiPoly::constant(rat(2, 3) - rat_int(3))
        );
        assert_eq!(determinant_bareiss(m.clone()), determinant_cofactor(&m));
    }
}
