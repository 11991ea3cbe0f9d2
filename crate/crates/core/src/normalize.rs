//! Normal form for the two-variable input: monic in `y` with total degree
//! equal to the `y`-degree, reached by a shear `x ↦ x + a·y` and a constant
//! rescaling. The certificate records how fiber values transport.

use crate::error::CoreError;
use crate::poly::MultiPoly;
use crate::scalar::{rat_int, rat_to_string, Rational};
use num_traits::{One, Zero};

/// A non-constant polynomial in `(x, y)` together with its total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputPolynomial {
    pub poly: MultiPoly,
    pub n: usize,
}

impl InputPolynomial {
    pub fn new(poly: MultiPoly) -> Result<Self, CoreError> {
        for v in poly.vars() {
            if v != "x" && v != "y" {
                return Err(CoreError::Unsupported(format!(
                    "expected a polynomial in (x, y); found variable {v}"
                )));
            }
        }
        let n = poly.total_degree_usize().ok_or(CoreError::ConstantInput)?;
        if n == 0 {
            return Err(CoreError::ConstantInput);
        }
        Ok(InputPolynomial { poly, n })
    }
}

/// Certificate for `g(x,y) = f(x + a·y, y) / c`: fiber `g = λ` corresponds to
/// fiber `f = c·λ`, and growth exponents transport unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationCert {
    pub shear: Rational,
    pub scale: Rational,
}

impl NormalizationCert {
    pub fn identity() -> Self {
        NormalizationCert {
            shear: Rational::zero(),
            scale: Rational::one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.shear.is_zero() && self.scale.is_one()
    }

    /// Fiber value of the normalized polynomial corresponding to the given
    /// fiber value of the original.
    pub fn lambda_forward(&self, lambda_original: &Rational) -> Rational {
        lambda_original / &self.scale
    }

    /// Fiber value of the original corresponding to a normalized fiber value.
    pub fn lambda_back(&self, lambda_normalized: &Rational) -> Rational {
        lambda_normalized * &self.scale
    }

    pub fn describe(&self) -> String {
        format!(
            "x -> x + ({})*y, divide by {}, lambda -> lambda/{}",
            rat_to_string(&self.shear),
            rat_to_string(&self.scale),
            rat_to_string(&self.scale)
        )
    }
}

/// True iff the coefficient of `yⁿ` is 1 and `deg_y f = deg f` (which forces
/// `deg a_i ≤ i` for the coefficients of the `y`-powers).
pub fn is_normal_form(f: &InputPolynomial) -> bool {
    let degy = f.poly.deg_in_usize("y").unwrap_or(0);
    if degy != f.n {
        return false;
    }
    let lead = f.poly.leading_coeff_in("y");
    lead.constant_value().map_or(false, |c| c.is_one())
}

/// The degree form of `f` evaluated at `(a, 1)`: the coefficient `yⁿ`
/// acquires after the shear `x ↦ x + a·y`.
fn degree_form_at(f: &InputPolynomial, a: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (exps, c) in f.poly.ordered_terms() {
        let total: usize = exps.iter().map(|&k| k as usize).sum();
        if total != f.n {
            continue;
        }
        let xi = f
            .poly
            .vars()
            .iter()
            .position(|v| v == "x")
            .map(|i| exps[i])
            .unwrap_or(0);
        let mut term = c;
        for _ in 0..xi {
            term *= a;
        }
        acc += term;
    }
    acc
}

/// Shear and rescale into normal form. The shear coefficient is the first of
/// `0, 1, −1, 2, −2, …` that keeps the top `y`-coefficient nonzero; the
/// degree form is a nonzero polynomial of degree ≤ n in the shear, so the
/// search ends within `n + 1` candidates.
pub fn normalize(f: &InputPolynomial) -> Result<(InputPolynomial, NormalizationCert), CoreError> {
    if is_normal_form(f) {
        return Ok((f.clone(), NormalizationCert::identity()));
    }
    let mut shear_candidates = vec![rat_int(0)];
    for k in 1..=(f.n as i64 + 1) {
        shear_candidates.push(rat_int(k));
        shear_candidates.push(rat_int(-k));
    }
    for a in shear_candidates {
        let c = degree_form_at(f, &a);
        if c.is_zero() {
            continue;
        }
        let sheared = f.poly.substitute(
            "x",
            &MultiPoly::var("x").add(&MultiPoly::var("y").scale(&a)),
        );
        let g = sheared.scale(&c.recip());
        let out = InputPolynomial::new(g)?;
        debug_assert_eq!(out.n, f.n);
        debug_assert!(is_normal_form(&out));
        let cert = NormalizationCert {
            shear: a,
            scale: c,
        };
        return Ok((out, cert));
    }
    unreachable!("degree form vanished at n+1 distinct points")
}

/// Coefficients `a_i(x)` of the normal form `yⁿ + a₁(x)y^{n−1} + ⋯ + a_n(x)`,
/// indexed so that `result[i]` multiplies `y^{n−i}` (with `result[0] = 1`).
pub fn normal_form_coeffs(f: &InputPolynomial) -> Vec<MultiPoly> {
    let by_y = f.poly.coeffs_in("y");
    let n = f.n;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        out.push(by_y.get(n - i).cloned().unwrap_or_else(MultiPoly::zero));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn y2x() -> InputPolynomial {
        InputPolynomial::new(MultiPoly::var("y").pow(2).add(&MultiPoly::var("x"))).unwrap()
    }

    #[test]
    fn recognizes_normal_form() {
        assert!(is_normal_form(&y2x()));
        let xy = InputPolynomial::new(MultiPoly::var("x").mul(&MultiPoly::var("y"))).unwrap();
        assert!(!is_normal_form(&xy));
        let b = InputPolynomial::new(
            MultiPoly::var("y")
                .pow(3)
                .add(&MultiPoly::var("x").mul(&MultiPoly::var("y").pow(2)))
                .add(&MultiPoly::var("y")),
        )
        .unwrap();
        assert!(is_normal_form(&b));
    }

    #[test]
    fn already_normal_is_identity() {
        let (g, cert) = normalize(&y2x()).unwrap();
        assert_eq!(g, y2x());
        assert!(cert.is_identity());
    }

    #[test]
    fn shears_xy() {
        let xy = InputPolynomial::new(MultiPoly::var("x").mul(&MultiPoly::var("y"))).unwrap();
        let (g, cert) = normalize(&xy).unwrap();
        let expect = MultiPoly::var("y")
            .pow(2)
            .add(&MultiPoly::var("x").mul(&MultiPoly::var("y")));
        assert_eq!(g.poly, expect);
        assert_eq!(cert.shear, rat(1, 1));
        assert_eq!(cert.scale, rat(1, 1));
    }

    #[test]
    fn rescales_leading_coefficient() {
        let two_y2 = InputPolynomial::new(MultiPoly::var("y").pow(2).scale(&rat(2, 1))).unwrap();
        let (g, cert) = normalize(&two_y2).unwrap();
        assert_eq!(g.poly, MultiPoly::var("y").pow(2));
        assert_eq!(cert.shear, rat(0, 1));
        assert_eq!(cert.scale, rat(2, 1));
        assert_eq!(cert.lambda_forward(&rat(6, 1)), rat(3, 1));
    }

    #[test]
    fn normalize_is_idempotent() {
        let xy = InputPolynomial::new(MultiPoly::var("x").mul(&MultiPoly::var("y"))).unwrap();
        let (g, _) = normalize(&xy).unwrap();
        let (h, cert) = normalize(&g).unwrap();
        assert_eq!(g, h);
        assert!(cert.is_identity());
    }
}
