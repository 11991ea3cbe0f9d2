//! Laurent polynomials in a single parameter, and composition of a
//! polynomial map with a Laurent curve.
//!
//! These are exact finite objects: meromorphic germs enter the crate only as
//! Laurent polynomials, and compositions of polynomials with Laurent
//! polynomials stay Laurent polynomials.

use crate::error::CoreError;
use crate::poly::MultiPoly;
use crate::scalar::{ExtRational, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Finite Laurent polynomial `Σ c_k t^k`, `k ∈ ℤ`, over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentPoly { terms }
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = BTreeMap::new();
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = out.entry(k).or_insert_with(Rational::zero);
            *entry += c;
        }
        out.retain(|_, c: &mut Rational| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    /// Highest exponent; `−∞` for the zero object.
    pub fn degree(&self) -> ExtRational {
        match self.terms.keys().next_back() {
            Some(&k) => ExtRational::from_int(k),
            None => ExtRational::NegInfinity,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let entry = terms.entry(*k).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let entry = terms.entry(ka + kb).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::constant(Rational::from_integer(1.into()));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `t ↦ t^k` (`k ≥ 1`); degrees scale by `k`.
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k >= 1);
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        use crate::scalar::rat_to_string;
        use num_traits::{One, Signed};
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            let body = match k {
                0 => rat_to_string(&mag),
                1 => {
                    if mag.is_one() {
                        "t".to_string()
                    } else {
                        format!("{}*t", rat_to_string(&mag))
                    }
                }
                _ => {
                    if mag.is_one() {
                        format!("t^{k}")
                    } else {
                        format!("{}*t^{k}", rat_to_string(&mag))
                    }
                }
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
                first = false;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
        }
        Ok(())
    }
}

/// Exact composition `p(φ₁(t), …, φ_n(t))` of a polynomial with a Laurent
/// curve; the component count must match the variable count of `p`.
pub fn eval_on_curve(p: &MultiPoly, curve: &[LaurentPoly]) -> Result<LaurentPoly, CoreError> {
    let want = p.vars().len();
    if curve.len() != want {
        return Err(CoreError::DimensionMismatch {
            want,
            got: curve.len(),
        });
    }
    let mut acc = LaurentPoly::zero();
    for (exps, c) in p.ordered_terms() {
        let mut term = LaurentPoly::constant(c);
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = term.mul(&curve[i].pow(e));
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn degree_examples() {
        let p = LaurentPoly::from_terms([(2, rat_int(1)), (-1, rat_int(1))]);
        assert_eq!(p.degree(), ExtRational::from_int(2));
        assert_eq!(LaurentPoly::constant(rat_int(3)).degree(), ExtRational::zero());
        assert_eq!(LaurentPoly::zero().degree(), ExtRational::NegInfinity);
    }

    #[test]
    fn composition_examples() {
        // (y² + x) ∘ (t, t) = t² + t
        let f = MultiPoly::var("y").pow(2).add(&MultiPoly::var("x"));
        let t = LaurentPoly::monomial(rat_int(1), 1);
        let got = eval_on_curve(&f, &[t.clone(), t.clone()]).unwrap();
        assert_eq!(
            got,
            LaurentPoly::from_terms([(2, rat_int(1)), (1, rat_int(1))])
        );

        // (y² + x) ∘ (−t², t) = 0 exactly
        let minus_t2 = LaurentPoly::monomial(rat_int(-1), 2);
        let got = eval_on_curve(&f, &[minus_t2, t]).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn rabier_composition_is_constant() {
        // ((x·y − 1)·y·z) ∘ (t, (1/2)t⁻¹, −4t) = 1
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let z = MultiPoly::var("z");
        let f = x.mul(&y).sub(&MultiPoly::int(1)).mul(&y).mul(&z);
        let curve = vec![
            LaurentPoly::monomial(rat_int(1), 1),
            LaurentPoly::monomial(rat(1, 2), -1),
            LaurentPoly::monomial(rat_int(-4), 1),
        ];
        let got = eval_on_curve(&f, &curve).unwrap();
        assert_eq!(got, LaurentPoly::constant(rat_int(1)));
    }

    #[test]
    fn stretch_scales_degree() {
        let p = LaurentPoly::from_terms([(3, rat_int(2)), (-2, rat_int(5))]);
        assert_eq!(p.stretch(3).degree(), ExtRational::from_int(9));
    }
}
