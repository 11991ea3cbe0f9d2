//! Algebraic numbers by dynamic evaluation over towers of squarefree moduli.
//!
//! An [`AlgebraicScalar`] is an element of `ℚ[t₁,…,t_h]/(m₁(t₁), …, m_h(t₁..t_h))`
//! where every modulus is monic and squarefree over the ring below it. Moduli
//! are never factored into irreducibles: when a zero-divisor shows up during
//! an inversion, the operation reports a [`SplitRequest`] carrying a proper
//! factorization `m = a·b` of one modulus, and the caller forks the whole
//! computation over the two refined towers.
//!
//! Ring operations (`add`, `mul`, …) are total; only inversion and semantic
//! zero-testing can split.

use crate::scalar::{rat_to_string, Rational};
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// Element of the tower at some level.
///
/// Depth 0 is a rational; depth `k` is a dense polynomial in the `k`-th
/// generator with depth-`k−1` coefficients, reduced modulo the level's
/// modulus and with trailing zero coefficients trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Elem {
    Rat(Rational),
    Poly(Vec<Elem>),
}

/// Dense univariate polynomial with `Elem` coefficients (index = power).
pub type UP = Vec<Elem>;

/// A proper factorization of one tower modulus, discovered mid-computation.
///
/// `original = factor_a · factor_b` with both factors monic of positive
/// degree. The receiver restarts the computation once per factor.
#[derive(Clone, Debug)]
pub struct SplitRequest {
    pub level: usize,
    pub original: UP,
    pub factor_a: UP,
    pub factor_b: UP,
}

pub type AlgResult<T> = Result<T, SplitRequest>;

/// Outcome of a semantic zero test.
#[derive(Clone, Debug)]
pub enum ZeroTest {
    Zero,
    NonZero,
    Split(SplitRequest),
}

/// Extension tower: the list of moduli `m₁..m_h`. `moduli[k]` is monic in
/// generator `k+1` with coefficients of depth `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tower {
    moduli: Vec<UP>,
}

impl Tower {
    /// The trivial tower: plain rationals.
    pub fn rationals() -> Tower {
        Tower { moduli: Vec::new() }
    }

    pub fn height(&self) -> usize {
        self.moduli.len()
    }

    pub fn modulus(&self, level: usize) -> &UP {
        &self.moduli[level]
    }

    /// Total degree of the tower over ℚ (product of modulus degrees).
    pub fn total_degree(&self) -> usize {
        self.moduli.iter().map(|m| m.len().saturating_sub(1)).product()
    }

    /// Adjoin a new top-level generator with the given monic modulus.
    /// The modulus coefficients must have depth equal to the current height.
    pub fn adjoin(&self, modulus: UP) -> Tower {
        let m = up_trim(modulus);
        assert!(m.len() >= 2, "modulus must be non-constant");
        assert!(elem_is_one(m.last().unwrap()), "modulus must be monic");
        let mut moduli = self.moduli.clone();
        moduli.push(m);
        Tower { moduli }
    }

    /// Adjoin a root of a rational polynomial (coefficients given low-to-high,
    /// made monic here).
    pub fn adjoin_rational_modulus(&self, coeffs: &[Rational]) -> Tower {
        let mut c: Vec<Rational> = coeffs.to_vec();
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        assert!(c.len() >= 2, "modulus must be non-constant");
        let lead = c.last().unwrap().clone();
        let up: UP = c
            .iter()
            .map(|x| elem_lift(&Elem::Rat(x / &lead), 0, self.height()))
            .collect();
        self.adjoin(up)
    }

    /// Replace the modulus at `level` with a monic factor and re-reduce
    /// every higher modulus. Monicity and squarefreeness of the higher
    /// moduli survive the quotient map.
    pub fn refined(&self, level: usize, factor: &UP) -> Tower {
        assert!(level < self.moduli.len());
        let mut moduli = self.moduli[..level].to_vec();
        moduli.push(factor.clone());
        for j in level + 1..self.moduli.len() {
            let partial = Tower { moduli: moduli.clone() };
            let reduced: UP = self.moduli[j]
                .iter()
                .map(|c| partial.reduce_elem(c, j))
                .collect();
            moduli.push(up_trim(reduced));
        }
        Tower { moduli }
    }

    /// Re-reduce an element of the given depth modulo this tower's moduli.
    pub fn reduce_elem(&self, e: &Elem, depth: usize) -> Elem {
        match e {
            Elem::Rat(_) => e.clone(),
            Elem::Poly(cs) => {
                let below: Vec<Elem> =
                    cs.iter().map(|c| self.reduce_elem(c, depth - 1)).collect();
                let r = up_rem_monic(self, depth - 1, &below, &self.moduli[depth - 1]);
                poly_elem(r)
            }
        }
    }
}

fn poly_elem(v: UP) -> Elem {
    Elem::Poly(up_trim(v))
}

pub fn elem_zero(depth: usize) -> Elem {
    elem_lift(&Elem::Rat(Rational::zero()), 0, depth)
}

pub fn elem_one(depth: usize) -> Elem {
    elem_lift(&Elem::Rat(Rational::one()), 0, depth)
}

pub fn elem_from_rat(r: &Rational, depth: usize) -> Elem {
    elem_lift(&Elem::Rat(r.clone()), 0, depth)
}

/// Wrap an element of depth `from` into depth `to ≥ from`.
pub fn elem_lift(e: &Elem, from: usize, to: usize) -> Elem {
    let mut cur = e.clone();
    for _ in from..to {
        cur = Elem::Poly(if elem_is_zero(&cur) { vec![] } else { vec![cur] });
    }
    cur
}

pub fn elem_is_zero(e: &Elem) -> bool {
    match e {
        Elem::Rat(r) => r.is_zero(),
        Elem::Poly(v) => v.iter().all(elem_is_zero),
    }
}

pub fn elem_is_one(e: &Elem) -> bool {
    match e {
        Elem::Rat(r) => r.is_one(),
        Elem::Poly(v) => {
            !v.is_empty() && elem_is_one(&v[0]) && v[1..].iter().all(elem_is_zero)
        }
    }
}

/// Extract a rational if the element is a constant at every level.
pub fn elem_as_rational(e: &Elem) -> Option<Rational> {
    match e {
        Elem::Rat(r) => Some(r.clone()),
        Elem::Poly(v) => {
            if v.is_empty() {
                Some(Rational::zero())
            } else if v[1..].iter().all(elem_is_zero) {
                elem_as_rational(&v[0])
            } else {
                None
            }
        }
    }
}

pub fn elem_neg(e: &Elem) -> Elem {
    match e {
        Elem::Rat(r) => Elem::Rat(-r.clone()),
        Elem::Poly(v) => Elem::Poly(v.iter().map(elem_neg).collect()),
    }
}

pub fn elem_add(tower: &Tower, depth: usize, a: &Elem, b: &Elem) -> Elem {
    match (a, b) {
        (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
        (Elem::Poly(x), Elem::Poly(y)) => {
            let n = x.len().max(y.len());
            let mut out = Vec::with_capacity(n);
            let z = elem_zero(depth - 1);
            for i in 0..n {
                let xi = x.get(i).unwrap_or(&z);
                let yi = y.get(i).unwrap_or(&z);
                out.push(elem_add(tower, depth - 1, xi, yi));
            }
            poly_elem(out)
        }
        _ => panic!("depth mismatch in elem_add"),
    }
}

pub fn elem_sub(tower: &Tower, depth: usize, a: &Elem, b: &Elem) -> Elem {
    elem_add(tower, depth, a, &elem_neg(b))
}

pub fn elem_mul(tower: &Tower, depth: usize, a: &Elem, b: &Elem) -> Elem {
    match (a, b) {
        (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
        (Elem::Poly(x), Elem::Poly(y)) => {
            if x.is_empty() || y.is_empty() {
                return Elem::Poly(vec![]);
            }
            let mut out = vec![elem_zero(depth - 1); x.len() + y.len() - 1];
            for (i, xi) in x.iter().enumerate() {
                if elem_is_zero(xi) {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    let p = elem_mul(tower, depth - 1, xi, yj);
                    out[i + j] = elem_add(tower, depth - 1, &out[i + j], &p);
                }
            }
            let reduced = up_rem_monic(tower, depth - 1, &out, tower.modulus(depth - 1));
            poly_elem(reduced)
        }
        _ => panic!("depth mismatch in elem_mul"),
    }
}

/// Multiplicative inverse modulo the tower.
///
/// `Ok(None)` for the (syntactic) zero element; `Err` when the element is a
/// zero-divisor, carrying the factorization that separates the branches.
pub fn elem_try_invert(tower: &Tower, depth: usize, a: &Elem) -> AlgResult<Option<Elem>> {
    match a {
        Elem::Rat(r) => {
            if r.is_zero() {
                Ok(None)
            } else {
                Ok(Some(Elem::Rat(r.recip())))
            }
        }
        Elem::Poly(v) => {
            let av = up_trim(v.clone());
            if av.is_empty() {
                return Ok(None);
            }
            let level = depth - 1;
            let m = tower.modulus(level).clone();
            let (g, s) = up_ext_gcd(tower, level, &av, &m)?;
            if g.len() == 1 {
                // g = 1, so s·a ≡ 1 (mod m)
                let inv = up_rem_monic(tower, level, &s, &m);
                Ok(Some(poly_elem(inv)))
            } else {
                debug_assert!(g.len() < m.len());
                let cof = up_div_exact_monic(tower, level, &m, &g);
                Err(SplitRequest {
                    level,
                    original: m,
                    factor_a: g,
                    factor_b: cof,
                })
            }
        }
    }
}

/// Semantic zero test: `Zero` iff the reduced representative is 0,
/// `NonZero` iff invertible, `Split` for zero-divisors.
pub fn elem_classify_zero(tower: &Tower, depth: usize, a: &Elem) -> ZeroTest {
    if elem_is_zero(a) {
        return ZeroTest::Zero;
    }
    match elem_try_invert(tower, depth, a) {
        Ok(Some(_)) => ZeroTest::NonZero,
        Ok(None) => ZeroTest::Zero,
        Err(split) => ZeroTest::Split(split),
    }
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over tower elements of a fixed depth.
// ---------------------------------------------------------------------------

pub fn up_trim(mut v: UP) -> UP {
    while v.last().map_or(false, elem_is_zero) {
        v.pop();
    }
    v
}

pub fn up_is_zero(v: &UP) -> bool {
    v.iter().all(elem_is_zero)
}

/// Degree, or `None` for the zero polynomial.
pub fn up_deg(v: &UP) -> Option<usize> {
    v.iter().rposition(|c| !elem_is_zero(c))
}

pub fn up_add(tower: &Tower, depth: usize, a: &UP, b: &UP) -> UP {
    let n = a.len().max(b.len());
    let z = elem_zero(depth);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(elem_add(
            tower,
            depth,
            a.get(i).unwrap_or(&z),
            b.get(i).unwrap_or(&z),
        ));
    }
    up_trim(out)
}

pub fn up_neg(v: &UP) -> UP {
    v.iter().map(elem_neg).collect()
}

pub fn up_sub(tower: &Tower, depth: usize, a: &UP, b: &UP) -> UP {
    up_add(tower, depth, a, &up_neg(b))
}

pub fn up_mul(tower: &Tower, depth: usize, a: &UP, b: &UP) -> UP {
    if up_is_zero(a) || up_is_zero(b) {
        return vec![];
    }
    let mut out = vec![elem_zero(depth); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if elem_is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let p = elem_mul(tower, depth, ai, bj);
            out[i + j] = elem_add(tower, depth, &out[i + j], &p);
        }
    }
    up_trim(out)
}

pub fn up_scale(tower: &Tower, depth: usize, a: &UP, c: &Elem) -> UP {
    up_trim(a.iter().map(|x| elem_mul(tower, depth, x, c)).collect())
}

/// Remainder of `a` modulo a monic divisor. Never splits.
pub fn up_rem_monic(tower: &Tower, depth: usize, a: &UP, m: &UP) -> UP {
    up_divrem_monic(tower, depth, a, m).1
}

/// Quotient and remainder by a monic divisor. Never splits.
pub fn up_divrem_monic(tower: &Tower, depth: usize, a: &UP, m: &UP) -> (UP, UP) {
    let md = up_deg(m).expect("monic divisor is nonzero");
    debug_assert!(elem_is_one(&m[md]));
    let mut rem = up_trim(a.clone());
    let mut quo = vec![elem_zero(depth); rem.len().saturating_sub(md)];
    while let Some(d) = up_deg(&rem) {
        if d < md {
            break;
        }
        let c = rem[d].clone();
        let shift = d - md;
        for i in 0..=md {
            let t = elem_mul(tower, depth, &c, &m[i]);
            rem[shift + i] = elem_sub(tower, depth, &rem[shift + i], &t);
        }
        quo[shift] = elem_add(tower, depth, &quo[shift], &c);
        rem = up_trim(rem);
    }
    (up_trim(quo), rem)
}

/// Exact division by a monic divisor; panics if the remainder is nonzero.
pub fn up_div_exact_monic(tower: &Tower, depth: usize, a: &UP, m: &UP) -> UP {
    let (q, r) = up_divrem_monic(tower, depth, a, m);
    assert!(up_is_zero(&r), "division was not exact");
    q
}

/// Division with remainder by an arbitrary nonzero divisor. Splits when the
/// divisor's leading coefficient is a zero-divisor.
pub fn up_divrem(tower: &Tower, depth: usize, a: &UP, b: &UP) -> AlgResult<(UP, UP)> {
    let bd = up_deg(b).expect("division by zero polynomial");
    let inv = elem_try_invert(tower, depth, &b[bd])?
        .expect("leading coefficient is nonzero after trim");
    let bm: UP = up_scale(tower, depth, b, &inv);
    let (q, r) = up_divrem_monic(tower, depth, a, &bm);
    Ok((up_scale(tower, depth, &q, &inv), r))
}

/// Extended Euclid: returns the monic gcd `g` and `s` with `s·a ≡ g (mod b)`.
pub fn up_ext_gcd(tower: &Tower, depth: usize, a: &UP, b: &UP) -> AlgResult<(UP, UP)> {
    let mut r0 = up_trim(a.clone());
    let mut r1 = up_trim(b.clone());
    let mut s0: UP = vec![elem_one(depth)];
    let mut s1: UP = vec![];
    while !up_is_zero(&r1) {
        let (q, r) = up_divrem(tower, depth, &r0, &r1)?;
        let qs = up_mul(tower, depth, &q, &s1);
        let s = up_sub(tower, depth, &s0, &qs);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if up_is_zero(&r0) {
        return Ok((vec![], vec![]));
    }
    let d = up_deg(&r0).unwrap();
    let inv = elem_try_invert(tower, depth, &r0[d])?
        .expect("leading coefficient is nonzero after trim");
    Ok((
        up_scale(tower, depth, &r0, &inv),
        up_scale(tower, depth, &s0, &inv),
    ))
}

/// Monic gcd over the tower.
pub fn up_gcd(tower: &Tower, depth: usize, a: &UP, b: &UP) -> AlgResult<UP> {
    Ok(up_ext_gcd(tower, depth, a, b)?.0)
}

pub fn up_derivative(tower: &Tower, depth: usize, p: &UP) -> UP {
    let mut out = Vec::new();
    for (i, c) in p.iter().enumerate().skip(1) {
        let k = elem_from_rat(&Rational::from_integer(i.into()), depth);
        out.push(elem_mul(tower, depth, c, &k));
    }
    up_trim(out)
}

/// Squarefree part `p / gcd(p, p′)`, made monic.
pub fn up_squarefree_part(tower: &Tower, depth: usize, p: &UP) -> AlgResult<UP> {
    let dp = up_derivative(tower, depth, p);
    let g = up_gcd(tower, depth, p, &dp)?;
    if g.len() <= 1 {
        let d = up_deg(p).expect("squarefree part of zero polynomial");
        let inv = elem_try_invert(tower, depth, &p[d])?.expect("nonzero lead");
        return Ok(up_scale(tower, depth, p, &inv));
    }
    let (q, _) = up_divrem(tower, depth, p, &g)?;
    let d = up_deg(&q).unwrap();
    let inv = elem_try_invert(tower, depth, &q[d])?.expect("nonzero lead");
    Ok(up_scale(tower, depth, &q, &inv))
}

/// Horner evaluation of `p` at a tower element.
pub fn up_eval(tower: &Tower, depth: usize, p: &UP, x: &Elem) -> Elem {
    let mut acc = elem_zero(depth);
    for c in p.iter().rev() {
        acc = elem_mul(tower, depth, &acc, x);
        acc = elem_add(tower, depth, &acc, c);
    }
    acc
}

/// Lift every coefficient of a polynomial from `from` depth to `to` depth.
pub fn up_lift(p: &UP, from: usize, to: usize) -> UP {
    p.iter().map(|c| elem_lift(c, from, to)).collect()
}

// ---------------------------------------------------------------------------
// Root materialization (used by the series expansion engine).
// ---------------------------------------------------------------------------

/// All roots of a nonzero polynomial over the tower, with multiplicities,
/// materialized by growing the tower once per non-linear squarefree factor.
///
/// Returns the grown tower together with the roots, represented at the new
/// tower's height. The input polynomial's coefficients are at the height of
/// the tower passed in.
pub fn up_all_roots(tower: &Tower, p: &UP) -> AlgResult<(Tower, Vec<(Elem, usize)>)> {
    let depth0 = tower.height();
    let sf = up_squarefree_part(tower, depth0, p)?;
    let mut cur_tower = tower.clone();
    let mut rem = sf;
    let mut roots: Vec<Elem> = Vec::new();
    while up_deg(&rem).map_or(false, |d| d >= 1) {
        let depth = cur_tower.height();
        let d = up_deg(&rem).unwrap();
        let root = if d == 1 {
            let inv = elem_try_invert(&cur_tower, depth, &rem[1])?.expect("nonzero lead");
            elem_neg(&elem_mul(&cur_tower, depth, &rem[0], &inv))
        } else {
            let grown = cur_tower.adjoin(rem.clone());
            let gen_root = generator_elem(&grown);
            roots = roots
                .iter()
                .map(|r| elem_lift(r, depth, grown.height()))
                .collect();
            rem = up_lift(&rem, depth, grown.height());
            cur_tower = grown;
            gen_root
        };
        // peel the root off and continue with the deflated polynomial
        let lin: UP = vec![elem_neg(&root), elem_one(cur_tower.height())];
        let (q, r) = up_divrem_monic(&cur_tower, cur_tower.height(), &rem, &lin);
        debug_assert!(up_is_zero(&r), "adjoined generator must be a root");
        roots.push(root);
        rem = q;
    }
    // multiplicities in the original p via successive derivatives
    let depth = cur_tower.height();
    let p_lift = up_lift(p, depth0, depth);
    let mut derivs = vec![p_lift.clone()];
    while !up_is_zero(derivs.last().unwrap()) {
        let d = up_derivative(&cur_tower, depth, derivs.last().unwrap());
        derivs.push(d);
    }
    let mut out = Vec::new();
    for root in roots {
        let mut mult = 0usize;
        for dp in &derivs {
            let v = up_eval(&cur_tower, depth, dp, &root);
            match elem_classify_zero(&cur_tower, depth, &v) {
                ZeroTest::Zero => mult += 1,
                ZeroTest::NonZero => break,
                ZeroTest::Split(s) => return Err(s),
            }
        }
        assert!(mult >= 1, "materialized root must vanish");
        out.push((root, mult));
    }
    Ok((cur_tower, out))
}

/// The top generator of a non-trivial tower, as an element.
pub fn generator_elem(tower: &Tower) -> Elem {
    let h = tower.height();
    assert!(h >= 1);
    let one = elem_one(h - 1);
    let zero = elem_zero(h - 1);
    Elem::Poly(vec![zero, one])
}

/// Render an element for diagnostics, naming the generators `t1, t2, …`.
pub fn elem_render(e: &Elem, depth: usize) -> String {
    match e {
        Elem::Rat(r) => rat_to_string(r),
        Elem::Poly(v) => {
            if v.is_empty() {
                return "0".into();
            }
            let mut parts = Vec::new();
            for (i, c) in v.iter().enumerate() {
                if elem_is_zero(c) {
                    continue;
                }
                let cs = elem_render(c, depth - 1);
                let p = match i {
                    0 => cs,
                    1 => format!("({cs})*t{depth}"),
                    _ => format!("({cs})*t{depth}^{i}"),
                };
                parts.push(p);
            }
            parts.join(" + ")
        }
    }
}

// ---------------------------------------------------------------------------
// Public scalar wrapper.
// ---------------------------------------------------------------------------

/// An element of an extension tower, bundled with the tower it lives in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicScalar {
    tower: Arc<Tower>,
    rep: Elem,
}

impl AlgebraicScalar {
    pub fn new(tower: Arc<Tower>, rep: Elem) -> Self {
        AlgebraicScalar { tower, rep }
    }

    pub fn from_rational(tower: Arc<Tower>, r: &Rational) -> Self {
        let rep = elem_from_rat(r, tower.height());
        AlgebraicScalar { tower, rep }
    }

    /// The top generator of the tower (the adjoined root itself).
    pub fn generator(tower: Arc<Tower>) -> Self {
        let rep = generator_elem(&tower);
        AlgebraicScalar { tower, rep }
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn rep(&self) -> &Elem {
        &self.rep
    }

    pub fn is_syntactic_zero(&self) -> bool {
        elem_is_zero(&self.rep)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        elem_as_rational(&self.rep)
    }

    fn unified(&self, other: &Self) -> (Arc<Tower>, Elem, Elem) {
        if Arc::ptr_eq(&self.tower, &other.tower) || self.tower == other.tower {
            return (self.tower.clone(), self.rep.clone(), other.rep.clone());
        }
        let (ha, hb) = (self.tower.height(), other.tower.height());
        if ha < hb {
            (
                other.tower.clone(),
                elem_lift(&self.rep, ha, hb),
                other.rep.clone(),
            )
        } else if hb < ha {
            (
                self.tower.clone(),
                self.rep.clone(),
                elem_lift(&other.rep, hb, ha),
            )
        } else {
            panic!("incompatible towers in scalar arithmetic")
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (t, a, b) = self.unified(other);
        let rep = elem_add(&t, t.height(), &a, &b);
        AlgebraicScalar { tower: t, rep }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (t, a, b) = self.unified(other);
        let rep = elem_sub(&t, t.height(), &a, &b);
        AlgebraicScalar { tower: t, rep }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (t, a, b) = self.unified(other);
        let rep = elem_mul(&t, t.height(), &a, &b);
        AlgebraicScalar { tower: t, rep }
    }

    pub fn neg(&self) -> Self {
        AlgebraicScalar {
            tower: self.tower.clone(),
            rep: elem_neg(&self.rep),
        }
    }

    /// `Zero` / `NonZero` / `Split`: the dynamic-evaluation zero test.
    pub fn classify_zero(&self) -> ZeroTest {
        elem_classify_zero(&self.tower, self.tower.height(), &self.rep)
    }

    pub fn try_invert(&self) -> AlgResult<Option<Self>> {
        let inv = elem_try_invert(&self.tower, self.tower.height(), &self.rep)?;
        Ok(inv.map(|rep| AlgebraicScalar {
            tower: self.tower.clone(),
            rep,
        }))
    }

    pub fn render(&self) -> String {
        elem_render(&self.rep, self.tower.height())
    }
}

/// Evaluate a rational univariate polynomial (low-to-high coefficients) at a
/// tower element.
pub fn eval_rational_poly(coeffs: &[Rational], x: &AlgebraicScalar) -> AlgebraicScalar {
    let tower = x.tower().clone();
    let depth = tower.height();
    let up: UP = coeffs.iter().map(|c| elem_from_rat(c, depth)).collect();
    let rep = up_eval(&tower, depth, &up, x.rep());
    AlgebraicScalar::new(tower, rep)
}

/// Format a rational modulus (low-to-high coefficients) as a polynomial in `t`.
pub fn render_rational_modulus(coeffs: &[Rational]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match i {
            0 => rat_to_string(&mag),
            1 => {
                if mag.is_one() {
                    "t".into()
                } else {
                    format!("{}*t", rat_to_string(&mag))
                }
            }
            _ => {
                if mag.is_one() {
                    format!("t^{i}")
                } else {
                    format!("{}*t^{i}", rat_to_string(&mag))
                }
            }
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() {
                format!("-{body}")
            } else {
                body
            });
        } else {
            parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn qtower(coeffs: &[i64]) -> Arc<Tower> {
        let c: Vec<Rational> = coeffs.iter().map(|&k| rat_int(k)).collect();
        Arc::new(Tower::rationals().adjoin_rational_modulus(&c))
    }

    #[test]
    fn modulus_reduces_to_zero() {
        // t^2 - 2 over its own tower
        let t = qtower(&[-2, 0, 1]);
        let g = AlgebraicScalar::generator(t.clone());
        let sq = g.mul(&g).sub(&AlgebraicScalar::from_rational(t, &rat_int(2)));
        assert!(matches!(sq.classify_zero(), ZeroTest::Zero));
    }

    #[test]
    fn unit_is_nonzero_and_inverts() {
        let t = qtower(&[-2, 0, 1]);
        let g = AlgebraicScalar::generator(t.clone());
        assert!(matches!(
            AlgebraicScalar::from_rational(t, &rat_int(1)).classify_zero(),
            ZeroTest::NonZero
        ));
        // 1/t = t/2 modulo t^2 - 2
        let inv = g.try_invert().unwrap().unwrap();
        let prod = g.mul(&inv);
        assert!(elem_is_one(prod.rep()));
    }

    #[test]
    fn zero_divisor_splits() {
        // t - 1 modulo t^2 - 1 splits the modulus as (t - 1)(t + 1)
        let t = qtower(&[-1, 0, 1]);
        let g = AlgebraicScalar::generator(t.clone());
        let e = g.sub(&AlgebraicScalar::from_rational(t, &rat_int(1)));
        match e.classify_zero() {
            ZeroTest::Split(s) => {
                assert_eq!(s.level, 0);
                let fa = &s.factor_a;
                let fb = &s.factor_b;
                assert_eq!(fa.len(), 2);
                assert_eq!(fb.len(), 2);
                // the two factors are t - 1 and t + 1 in some order
                let consts: Vec<Rational> = vec![
                    elem_as_rational(&fa[0]).unwrap(),
                    elem_as_rational(&fb[0]).unwrap(),
                ];
                assert!(consts.contains(&rat_int(1)) && consts.contains(&rat_int(-1)));
            }
            other => panic!("expected split, got {other:?}"),
        }
    }

    #[test]
    fn two_level_tower_arithmetic() {
        // adjoin sqrt(2), then a root of u^2 - t (i.e. 2^(1/4))
        let t2 = qtower(&[-2, 0, 1]);
        let h = t2.height();
        let gen1 = generator_elem(&t2);
        let modulus: UP = vec![elem_neg(&gen1), elem_zero(h), elem_one(h)];
        let tower = Arc::new(t2.adjoin(modulus));
        let u = AlgebraicScalar::generator(tower.clone());
        let four = u.mul(&u).mul(&u).mul(&u);
        let two = AlgebraicScalar::from_rational(tower, &rat_int(2));
        assert!(matches!(four.sub(&two).classify_zero(), ZeroTest::Zero));
    }

    #[test]
    fn all_roots_materializes_conjugates() {
        // x^2 + 1 over Q: two roots in a degree-2 tower
        let t = Tower::rationals();
        let p: UP = vec![elem_one(0), elem_zero(0), elem_one(0)];
        let (grown, roots) = up_all_roots(&t, &p).unwrap();
        assert_eq!(grown.height(), 1);
        assert_eq!(roots.len(), 2);
        for (r, m) in &roots {
            assert_eq!(*m, 1);
            let v = up_eval(&grown, 1, &up_lift(&p, 0, 1), r);
            assert!(elem_is_zero(&v));
        }
        // the two roots are distinct and negatives of each other
        assert_ne!(roots[0].0, roots[1].0);
        assert_eq!(roots[0].0, elem_neg(&roots[1].0));
    }

    #[test]
    fn root_multiplicity_counted() {
        // (x - 1)^2 (x + 3)
        let t = Tower::rationals();
        // (x-1)^2 (x+3) = x^3 + x^2 - 5x + 3
        let p: UP = vec![
            elem_from_rat(&rat_int(3), 0),
            elem_from_rat(&rat_int(-5), 0),
            elem_from_rat(&rat_int(1), 0),
            elem_one(0),
        ];
        let (grown, roots) = up_all_roots(&t, &p).unwrap();
        assert_eq!(grown.height(), 0, "rational roots need no extension");
        let mut sorted: Vec<(Rational, usize)> = roots
            .iter()
            .map(|(r, m)| (elem_as_rational(r).unwrap(), *m))
            .collect();
        sorted.sort();
        assert_eq!(sorted, vec![(rat_int(-3), 1), (rat_int(1), 2)]);
    }
}
