//! Sparse multivariate polynomials over ℚ with a canonical term order.
//!
//! Variables are identified by name; binary operations unify variable sets
//! automatically. Terms print and iterate in graded-lexicographic order with
//! a fixed crate-wide variable precedence, so rendering and hashing are
//! reproducible.

use crate::scalar::{rat_to_string, ExtRational, Rational, VanishingOrder};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Crate-wide variable precedence; unknown names sort after the known ones,
/// alphabetically.
fn var_rank(name: &str) -> (u8, String) {
    let k = match name {
        "x" => 0,
        "y" => 1,
        "lambda" => 2,
        "u" => 3,
        "tau" => 4,
        "t" => 5,
        _ => 100,
    };
    (k, name.to_string())
}

fn sort_vars(mut vars: Vec<String>) -> Vec<String> {
    vars.sort_by_key(|v| var_rank(v));
    vars.dedup();
    vars
}

/// Sparse exact polynomial: a map from exponent vectors to nonzero rational
/// coefficients, plus the ordered variable list the exponents refer to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: vec![],
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![], c);
        }
        MultiPoly { vars: vec![], terms }
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Monomial `c · v₁^e₁ ⋯` over the given variables.
    pub fn monomial(vars: &[&str], exps: &[u32], c: Rational) -> Self {
        assert_eq!(vars.len(), exps.len());
        let mut p = MultiPoly::constant(c);
        for (v, e) in vars.iter().zip(exps) {
            for _ in 0..*e {
                p = p.mul(&MultiPoly::var(v));
            }
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&vec![0u32; self.vars.len()]))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    fn normalized(vars: Vec<String>, terms: BTreeMap<Vec<u32>, Rational>) -> Self {
        let mut p = MultiPoly { vars, terms };
        p.terms.retain(|_, c| !c.is_zero());
        p.prune_vars();
        p
    }

    /// Drop variables that no term uses; keeps the representation canonical.
    fn prune_vars(&mut self) {
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|&b| b) {
            return;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Vec<u32> = e
                    .iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(k, _)| *k)
                    .collect();
                (ne, c.clone())
            })
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    /// Re-express both polynomials over the union of their variables.
    fn unify(&self, other: &Self) -> (Vec<String>, BTreeMap<Vec<u32>, Rational>, BTreeMap<Vec<u32>, Rational>) {
        let mut all: Vec<String> = self.vars.clone();
        all.extend(other.vars.iter().cloned());
        let vars = sort_vars(all);
        let a = self.remap(&vars);
        let b = other.remap(&vars);
        (vars, a, b)
    }

    fn remap(&self, vars: &[String]) -> BTreeMap<Vec<u32>, Rational> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("unified vars"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0u32; vars.len()];
                for (k, &i) in idx.iter().enumerate() {
                    ne[i] = e[k];
                }
                (ne, c.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (vars, mut a, b) = self.unify(other);
        for (e, c) in b {
            let entry = a.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        MultiPoly::normalized(vars, a)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let (vars, a, b) = self.unify(other);
        let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(p, q)| p + q).collect();
                let entry = out.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        MultiPoly::normalized(vars, out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = MultiPoly::constant(Rational::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative; differentiation by an absent variable
    /// gives zero.
    pub fn derivative(&self, var: &str) -> Self {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return MultiPoly::zero();
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            let k = Rational::from_integer(e[i].into());
            terms.insert(ne, c * k);
        }
        MultiPoly::normalized(self.vars.clone(), terms)
    }

    /// Highest exponent of `var`; `−∞` for the zero polynomial, `0` when the
    /// variable is absent from a nonzero polynomial.
    pub fn deg_in(&self, var: &str) -> ExtRational {
        if self.is_zero() {
            return ExtRational::NegInfinity;
        }
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return ExtRational::zero();
        };
        let d = self.terms.keys().map(|e| e[i]).max().unwrap();
        ExtRational::from_int(d as i64)
    }

    pub fn deg_in_usize(&self, var: &str) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        match self.vars.iter().position(|v| v == var) {
            None => Some(0),
            Some(i) => Some(self.terms.keys().map(|e| e[i] as usize).max().unwrap()),
        }
    }

    /// Total degree; `−∞` for zero.
    pub fn total_degree(&self) -> ExtRational {
        if self.is_zero() {
            return ExtRational::NegInfinity;
        }
        let d = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&k| k as u64).sum::<u64>())
            .max()
            .unwrap();
        ExtRational::from_int(d as i64)
    }

    pub fn total_degree_usize(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        Some(
            self.terms
                .keys()
                .map(|e| e.iter().map(|&k| k as usize).sum::<usize>())
                .max()
                .unwrap(),
        )
    }

    /// Coefficients of the polynomial viewed as univariate in `var`,
    /// low power first; entry `k` is a polynomial in the other variables.
    pub fn coeffs_in(&self, var: &str) -> Vec<MultiPoly> {
        let Some(d) = self.deg_in_usize(var) else {
            return vec![];
        };
        let mut out = vec![MultiPoly::zero(); d + 1];
        match self.vars.iter().position(|v| v == var) {
            None => {
                out[0] = self.clone();
            }
            Some(i) => {
                for (e, c) in &self.terms {
                    let k = e[i] as usize;
                    let mut ne = e.clone();
                    ne[i] = 0;
                    let mono = MultiPoly::normalized(
                        self.vars.clone(),
                        BTreeMap::from([(ne, c.clone())]),
                    );
                    out[k] = out[k].add(&mono);
                }
            }
        }
        out
    }

    /// Leading coefficient with respect to `var`.
    pub fn leading_coeff_in(&self, var: &str) -> MultiPoly {
        let cs = self.coeffs_in(var);
        cs.last().cloned().unwrap_or_else(MultiPoly::zero)
    }

    /// Substitute a polynomial for a variable (Horner on the collected
    /// coefficients).
    pub fn substitute(&self, var: &str, replacement: &MultiPoly) -> Self {
        if !self.vars.iter().any(|v| v == var) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(var);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(replacement).add(c);
        }
        acc
    }

    /// Evaluate at a full rational assignment; unassigned variables are an
    /// error for the caller (panics).
    pub fn eval_rational(&self, assign: &[(&str, Rational)]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, v) in self.vars.iter().enumerate() {
                if e[i] == 0 {
                    continue;
                }
                let (_, val) = assign
                    .iter()
                    .find(|(n, _)| n == v)
                    .unwrap_or_else(|| panic!("no value for variable {v}"));
                for _ in 0..e[i] {
                    term *= val;
                }
            }
            acc += term;
        }
        acc
    }

    /// Dense coefficient vector if the polynomial is univariate in `var`
    /// (constants count); `None` when another variable occurs.
    pub fn univariate_coeffs(&self, var: &str) -> Option<Vec<Rational>> {
        for v in &self.vars {
            if v != var && self.terms.keys().any(|e| e[self.vars.iter().position(|w| w == v).unwrap()] != 0) {
                return None;
            }
        }
        let d = self.deg_in_usize(var).unwrap_or(0);
        let mut out = vec![Rational::zero(); d + 1];
        match self.vars.iter().position(|v| v == var) {
            None => {
                if let Some(c) = self.constant_value() {
                    out[0] = c;
                }
            }
            Some(i) => {
                for (e, c) in &self.terms {
                    out[e[i] as usize] = c.clone();
                }
            }
        }
        Some(out)
    }

    /// Order of vanishing at the point `(var₁ = a, var₂ = 0)` of a polynomial
    /// in at most those two variables: the minimal total degree after the
    /// shift `var₁ ↦ a + var₁`. `+∞` exactly for the zero polynomial.
    pub fn vanishing_order_at(&self, var1: &str, a: &Rational, var2: &str) -> VanishingOrder {
        for v in &self.vars {
            assert!(
                v == var1 || v == var2,
                "vanishing_order_at expects a polynomial in ({var1}, {var2})"
            );
        }
        if self.is_zero() {
            return VanishingOrder::PosInfinity;
        }
        let shifted = self.substitute(
            var1,
            &MultiPoly::var(var1).add(&MultiPoly::constant(a.clone())),
        );
        if shifted.is_zero() {
            return VanishingOrder::PosInfinity;
        }
        let d = shifted
            .terms
            .keys()
            .map(|e| e.iter().map(|&k| k as u64).sum::<u64>())
            .min()
            .unwrap();
        VanishingOrder::Finite(d)
    }

    /// Exact multivariate division; `None` when not exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (vars, a, b) = self.unify(divisor);
        let n = vars.len();
        let lead = |m: &BTreeMap<Vec<u32>, Rational>| -> Option<(Vec<u32>, Rational)> {
            m.iter()
                .max_by(|(e1, _), (e2, _)| {
                    let d1: u64 = e1.iter().map(|&k| k as u64).sum();
                    let d2: u64 = e2.iter().map(|&k| k as u64).sum();
                    d1.cmp(&d2).then_with(|| e1.cmp(e2))
                })
                .map(|(e, c)| (e.clone(), c.clone()))
        };
        let (eb, cb) = lead(&b)?;
        let mut rem = a;
        let mut quo: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        while let Some((ea, ca)) = lead(&rem) {
            let mut q = vec![0u32; n];
            for i in 0..n {
                if ea[i] < eb[i] {
                    return None;
                }
                q[i] = ea[i] - eb[i];
            }
            let qc = ca / &cb;
            // rem -= qc * t^q * divisor
            for (e, c) in &b {
                let ne: Vec<u32> = e.iter().zip(&q).map(|(p, r)| p + r).collect();
                let entry = rem.entry(ne).or_insert_with(Rational::zero);
                *entry -= &qc * c;
            }
            rem.retain(|_, c| !c.is_zero());
            let prev = quo.insert(q, qc);
            debug_assert!(prev.is_none());
        }
        Some(MultiPoly::normalized(vars, quo))
    }

    /// Terms in descending graded-lexicographic order.
    pub fn ordered_terms(&self) -> Vec<(Vec<u32>, Rational)> {
        let mut ts: Vec<(Vec<u32>, Rational)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        ts.sort_by(|(e1, _), (e2, _)| {
            let d1: u64 = e1.iter().map(|&k| k as u64).sum();
            let d2: u64 = e2.iter().map(|&k| k as u64).sum();
            d2.cmp(&d1).then_with(|| e2.cmp(e1))
        });
        ts
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical rendering; the output re-parses to an equal polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.ordered_terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&k| k == 0) {
                factors.push(rat_to_string(&mag));
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], k)),
                }
            }
            let body = factors.join("*");
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn p(src: &str) -> MultiPoly {
        // tiny test-only builder: sums of integer monomials like "y^2+x", "-4"
        // kept deliberately simple; the real parser lives in the CLI crate.
        let mut out = MultiPoly::zero();
        let cleaned = src.replace(' ', "").replace('-', "+-");
        for term in cleaned.split('+').filter(|s| !s.is_empty()) {
            let mut c = Rational::one();
            let mut mono = MultiPoly::constant(Rational::one());
            for factor in term.split('*') {
                let (name, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().unwrap()),
                    None => (factor, 1),
                };
                if let Ok(k) = name.parse::<i64>() {
                    c *= rat_int(k).pow(exp as i32);
                } else if let Some(rest) = name.strip_prefix('-') {
                    c = -c;
                    if let Ok(k) = rest.parse::<i64>() {
                        c *= rat_int(k).pow(exp as i32);
                    } else {
                        mono = mono.mul(&MultiPoly::var(rest).pow(exp));
                    }
                } else {
                    mono = mono.mul(&MultiPoly::var(name).pow(exp));
                }
            }
            out = out.add(&mono.scale(&c));
        }
        out
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p("y").add(&p("y")), p("2*y"));
        assert_eq!(p("y^2+x").mul(&MultiPoly::zero()), MultiPoly::zero());
        assert_eq!(p("y+x").mul(&p("y-x")), p("y^2-x^2"));
    }

    #[test]
    fn derivative_examples() {
        let f = p("y^3+x*y^2+y");
        assert_eq!(f.derivative("y"), p("3*y^2+2*x*y+1"));
        assert_eq!(f.derivative("x"), p("y^2"));
        assert_eq!(MultiPoly::int(7).derivative("x"), MultiPoly::zero());
    }

    #[test]
    fn deg_in_examples() {
        assert_eq!(p("u^2-4*lambda").deg_in("u"), ExtRational::from_int(2));
        assert_eq!(MultiPoly::zero().deg_in("u"), ExtRational::NegInfinity);
        assert_eq!(MultiPoly::int(4).deg_in("u"), ExtRational::zero());
    }

    #[test]
    fn vanishing_order_examples() {
        let q = p("u^2-4*lambda");
        assert_eq!(
            q.vanishing_order_at("lambda", &rat_int(0), "u"),
            VanishingOrder::Finite(1)
        );
        assert_eq!(
            q.vanishing_order_at("lambda", &rat_int(1), "u"),
            VanishingOrder::Finite(0)
        );
        assert_eq!(
            MultiPoly::zero().vanishing_order_at("lambda", &rat_int(0), "u"),
            VanishingOrder::PosInfinity
        );
    }

    #[test]
    fn substitution_shear() {
        // x*y under x -> x + y becomes y^2 + x*y
        let f = p("x*y");
        let g = f.substitute("x", &p("x+y"));
        assert_eq!(g, p("y^2+x*y"));
    }

    #[test]
    fn exact_division() {
        let a = p("y^2-x^2");
        let b = p("y-x");
        assert_eq!(a.div_exact(&b).unwrap(), p("y+x"));
        assert!(p("y^2+x").div_exact(&b).is_none());
    }

    #[test]
    fn display_round_shape() {
        assert_eq!(p("y^2+x").to_string(), "y^2 + x");
        assert_eq!(p("-x^2+u^2-4*lambda").to_string(), "-x^2 + u^2 - 4*lambda");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("x*y^2-1/1*x").scale(&rat(1, 2)).to_string(), "1/2*x*y^2 - 1/2*x");
    }

    #[test]
    fn univariate_extraction() {
        let q = p("u^2-4*lambda");
        assert!(q.univariate_coeffs("lambda").is_none());
        let l = q.substitute("u", &MultiPoly::zero());
        assert_eq!(
            l.univariate_coeffs("lambda").unwrap(),
            vec![rat_int(0), rat_int(-4)]
        );
    }
}
