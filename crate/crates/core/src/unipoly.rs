//! Dense univariate polynomials over ℚ: Euclidean algorithms, squarefree
//! parts, and complete rational-root extraction.

use crate::error::CoreError;
use crate::poly::MultiPoly;
use crate::scalar::Rational;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Coefficients low power first; trailing zeros trimmed by the helpers.
pub type QPoly = Vec<Rational>;

pub fn qp_trim(mut v: QPoly) -> QPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn qp_is_zero(v: &QPoly) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn qp_deg(v: &QPoly) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

pub fn qp_eval(v: &QPoly, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in v.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn qp_derivative(v: &QPoly) -> QPoly {
    let mut out = Vec::new();
    for (i, c) in v.iter().enumerate().skip(1) {
        out.push(c * Rational::from_integer(i.into()));
    }
    qp_trim(out)
}

pub fn qp_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if qp_is_zero(a) || qp_is_zero(b) {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    qp_trim(out)
}

pub fn qp_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let bd = qp_deg(b).expect("division by zero polynomial");
    let mut rem = qp_trim(a.clone());
    let mut quo = vec![Rational::zero(); rem.len().saturating_sub(bd)];
    while let Some(d) = qp_deg(&rem) {
        if d < bd {
            break;
        }
        let c = &rem[d] / &b[bd];
        let shift = d - bd;
        for i in 0..=bd {
            let t = &c * &b[i];
            rem[shift + i] -= t;
        }
        quo[shift] += c;
        rem = qp_trim(rem);
    }
    (qp_trim(quo), rem)
}

/// Monic gcd.
pub fn qp_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r0 = qp_trim(a.clone());
    let mut r1 = qp_trim(b.clone());
    while !qp_is_zero(&r1) {
        let (_, r) = qp_divrem(&r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
    }
    if let Some(d) = qp_deg(&r0) {
        let lead = r0[d].clone();
        r0.iter().map(|c| c / &lead).collect()
    } else {
        vec![]
    }
}

/// `p / gcd(p, p′)`, made monic. The unit polynomial for constants.
pub fn qp_squarefree_part(p: &QPoly) -> Result<QPoly, CoreError> {
    let d = qp_deg(p).ok_or(CoreError::ZeroInput)?;
    if d == 0 {
        return Ok(vec![Rational::one()]);
    }
    let g = qp_gcd(p, &qp_derivative(p));
    let (q, r) = qp_divrem(p, &g);
    debug_assert!(qp_is_zero(&r));
    let qd = qp_deg(&q).unwrap();
    let lead = q[qd].clone();
    Ok(q.iter().map(|c| c / &lead).collect())
}

/// All rational roots (each listed once) and the residual polynomial with
/// every rational linear factor divided out to full multiplicity.
pub fn qp_rational_roots(p: &QPoly) -> Result<(Vec<Rational>, QPoly), CoreError> {
    qp_deg(p).ok_or(CoreError::ZeroInput)?;
    let mut roots: Vec<Rational> = Vec::new();
    let mut rem = qp_trim(p.clone());

    // zero roots come from the trailing gap
    let shift = rem.iter().position(|c| !c.is_zero()).unwrap();
    if shift > 0 {
        roots.push(Rational::zero());
        rem = rem[shift..].to_vec();
    }
    if qp_deg(&rem) == Some(0) {
        roots.sort();
        return Ok((roots, rem));
    }

    // primitive integer coefficients
    let denom_lcm = rem
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = rem
        .iter()
        .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let trailing = ints[0].magnitude().clone();
    let leading = ints.last().unwrap().magnitude().clone();
    let mut candidates: Vec<Rational> = Vec::new();
    for num in divisors(&trailing)? {
        for den in divisors(&leading)? {
            let r = Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
            if !candidates.contains(&r) {
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
    }
    for cand in candidates {
        while qp_deg(&rem).map_or(false, |d| d >= 1) && qp_eval(&rem, &cand).is_zero() {
            if !roots.contains(&cand) {
                roots.push(cand.clone());
            }
            let lin = vec![-cand.clone(), Rational::one()];
            let (q, r) = qp_divrem(&rem, &lin);
            debug_assert!(qp_is_zero(&r));
            rem = q;
        }
    }
    roots.sort();
    Ok((roots, rem))
}

/// All divisors of a positive integer (unsigned).
fn divisors(n: &BigUint) -> Result<Vec<BigUint>, CoreError> {
    if n.is_zero() {
        // only reachable with a zero trailing coefficient, which the caller
        // strips; zero divides everything, so there is nothing to enumerate
        return Ok(vec![BigUint::one()]);
    }
    let factors = factor(n.clone())?;
    let mut out = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        let mut pk = BigUint::one();
        for _ in 0..=e {
            for d in &out {
                next.push(d * &pk);
            }
            pk *= &p;
        }
        out = next;
        if out.len() > 200_000 {
            return Err(CoreError::Unsupported(
                "too many divisor candidates during rational-root search".into(),
            ));
        }
    }
    Ok(out)
}

fn factor(mut n: BigUint) -> Result<BTreeMap<BigUint, u32>, CoreError> {
    let mut out: BTreeMap<BigUint, u32> = BTreeMap::new();
    if n.is_one() {
        return Ok(out);
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let p = BigUint::from(small);
        while (&n % &p).is_zero() {
            *out.entry(p.clone()).or_insert(0) += 1;
            n /= &p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&m)?;
        stack.push(&m / &d);
        stack.push(d);
    }
    Ok(out)
}

/// Miller–Rabin with a fixed base set; deterministic far beyond the
/// coefficient sizes this crate produces.
fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(small);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for base in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(base).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> Result<BigUint, CoreError> {
    if (n % 2u32).is_zero() {
        return Ok(BigUint::from(2u32));
    }
    let mut c = BigUint::one();
    for _ in 0..64 {
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        let mut d = BigUint::one();
        let mut steps = 0u64;
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            steps += 1;
            if steps > 2_000_000 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return Ok(d);
        }
        c += BigUint::one();
    }
    Err(CoreError::Unsupported(
        "integer factorization gave up; rational-root candidates unavailable".into(),
    ))
}

// ---------------------------------------------------------------------------
// MultiPoly front ends for the univariate operations.
// ---------------------------------------------------------------------------

fn into_dense(p: &MultiPoly) -> Result<(String, QPoly), CoreError> {
    if p.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    let vars = p.vars();
    if vars.len() > 1 {
        return Err(CoreError::Unsupported(format!(
            "expected a univariate polynomial, got variables {vars:?}"
        )));
    }
    let var = vars.first().cloned().unwrap_or_else(|| "t".to_string());
    let coeffs = p
        .univariate_coeffs(&var)
        .expect("single-variable polynomial is univariate");
    Ok((var, coeffs))
}

fn from_dense(var: &str, coeffs: &QPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = out.add(&MultiPoly::var(var).pow(i as u32).scale(c));
    }
    out
}

/// Monic squarefree part of a univariate polynomial.
pub fn squarefree_part(p: &MultiPoly) -> Result<MultiPoly, CoreError> {
    let (var, dense) = into_dense(p)?;
    Ok(from_dense(&var, &qp_squarefree_part(&dense)?))
}

/// Rational roots (multiplicity stripped) and the rational-root-free
/// residual.
pub fn rational_roots(p: &MultiPoly) -> Result<(Vec<Rational>, MultiPoly), CoreError> {
    let (var, dense) = into_dense(p)?;
    let (roots, rem) = qp_rational_roots(&dense)?;
    Ok((roots, from_dense(&var, &rem)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn qp(ints: &[i64]) -> QPoly {
        ints.iter().map(|&k| rat_int(k)).collect()
    }

    #[test]
    fn squarefree_examples() {
        // λ²(λ−1) → λ(λ−1)
        let p = qp(&[0, 0, -1, 1]);
        assert_eq!(qp_squarefree_part(&p).unwrap(), qp(&[0, -1, 1]));
        // λ²+1 unchanged
        let q = qp(&[1, 0, 1]);
        assert_eq!(qp_squarefree_part(&q).unwrap(), q);
        // constants normalize to 1
        assert_eq!(qp_squarefree_part(&qp(&[5])).unwrap(), qp(&[1]));
    }

    #[test]
    fn rational_roots_examples() {
        let (roots, rem) = qp_rational_roots(&qp(&[-4, 0, 1])).unwrap();
        assert_eq!(roots, vec![rat_int(-2), rat_int(2)]);
        assert_eq!(qp_deg(&rem), Some(0));

        let (roots, rem) = qp_rational_roots(&qp(&[1, 0, 1])).unwrap();
        assert!(roots.is_empty());
        assert_eq!(rem, qp(&[1, 0, 1]));

        let (roots, rem) = qp_rational_roots(&qp(&[0, 0, 0, 1])).unwrap();
        assert_eq!(roots, vec![rat_int(0)]);
        assert_eq!(qp_deg(&rem), Some(0));
    }

    #[test]
    fn fractional_roots_found() {
        // (2λ−1)(3λ+4) = 6λ² + 5λ − 4
        let (roots, rem) = qp_rational_roots(&qp(&[-4, 5, 6])).unwrap();
        assert_eq!(roots, vec![rat(-4, 3), rat(1, 2)]);
        assert_eq!(qp_deg(&rem), Some(0));
    }

    #[test]
    fn big_coefficient_factorization() {
        // (λ − 1000003)(λ + 2) has a seven-digit prime in its coefficients
        let p = qp_mul(&qp(&[-1000003, 1]), &qp(&[2, 1]));
        let (roots, _) = qp_rational_roots(&p).unwrap();
        assert_eq!(roots, vec![rat_int(-2), rat_int(1000003)]);
    }
}
