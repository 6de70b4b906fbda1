//! Exact sparse arithmetic for commutative Laurent polynomials in `t`, `M`
//! and the non-negative variable `L`, over arbitrary-precision integers.
//!
//! Every value is kept in canonical form: a term map from exponent triples
//! to nonzero coefficients. Equality of the maps is equality of polynomials;
//! there are no tolerances anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("inexact division")]
    InexactDivision,
    #[error("zero argument not allowed")]
    ZeroArgument,
}

/// Exponent triple of one term. Ordered by `(l, m, t)` so that reverse
/// iteration over the term map yields the canonical print order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Exp {
    pub l: u32,
    pub m: i64,
    pub t: i64,
}

impl Exp {
    pub fn new(t: i64, m: i64, l: u32) -> Self {
        Exp { l, m, t }
    }
}

/// A unit `±t^j·M^k` of the Laurent ring, the ambiguity class of recurrence
/// polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Unit {
    pub sign: i8,
    pub e_t: i64,
    pub e_m: i64,
}

impl Unit {
    pub fn new(sign: i8, e_t: i64, e_m: i64) -> Self {
        assert!(sign == 1 || sign == -1, "unit sign must be ±1");
        Unit { sign, e_t, e_m }
    }

    pub fn one() -> Self {
        Unit { sign: 1, e_t: 0, e_m: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.e_t == 0 && self.e_m == 0
    }

    /// Just the sign part, dropping the monomial.
    pub fn is_sign_only(&self) -> bool {
        self.e_t == 0 && self.e_m == 0
    }

    pub fn to_poly(&self) -> Poly {
        Poly::mono(BigInt::from(self.sign), self.e_t, self.e_m, 0)
    }

    pub fn inverse(&self) -> Unit {
        Unit { sign: self.sign, e_t: -self.e_t, e_m: -self.e_m }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Sparse polynomial in `t^{±1}, M^{±1}, L` with `BigInt` coefficients.
///
/// Invariants: no stored coefficient is zero and `e_L >= 0` by construction.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Poly {
    terms: BTreeMap<Exp, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Poly::mono(BigInt::from(n), 0, 0, 0)
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Poly::mono(n, 0, 0, 0)
    }

    /// Single term `c · t^t · M^m · L^l`.
    pub fn mono(c: impl Into<BigInt>, t: i64, m: i64, l: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::new(t, m, l), c);
        }
        Poly { terms }
    }

    pub fn t() -> Self {
        Poly::mono(1, 1, 0, 0)
    }

    pub fn m() -> Self {
        Poly::mono(1, 0, 1, 0)
    }

    pub fn l() -> Self {
        Poly::mono(1, 0, 0, 1)
    }

    pub fn m_pow(e: i64) -> Self {
        Poly::mono(1, 0, e, 0)
    }

    pub fn t_pow(e: i64) -> Self {
        Poly::mono(1, e, 0, 0)
    }

    pub fn l_pow(e: u32) -> Self {
        Poly::mono(1, 0, 0, e)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp, BigInt)>) -> Self {
        let mut terms: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (e, c) in it {
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(Exp, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn trailing_term(&self) -> Option<(Exp, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn constant_value(&self) -> Option<&BigInt> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.l == 0 && e.m == 0 && e.t == 0 {
                return Some(c);
            }
        }
        if self.is_zero() {
            return None;
        }
        None
    }

    pub fn has_t(&self) -> bool {
        self.terms.keys().any(|e| e.t != 0)
    }

    pub fn has_m(&self) -> bool {
        self.terms.keys().any(|e| e.m != 0)
    }

    pub fn has_l(&self) -> bool {
        self.terms.keys().any(|e| e.l != 0)
    }

    /// Degree in `L`, `None` for the zero polynomial.
    pub fn l_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.l).max()
    }

    pub fn m_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().map(|e| e.m).min()?;
        let max = self.terms.keys().map(|e| e.m).max()?;
        Some((min, max))
    }

    pub fn t_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().map(|e| e.t).min()?;
        let max = self.terms.keys().map(|e| e.t).max()?;
        Some((min, max))
    }

    pub fn only_even_m_powers(&self) -> bool {
        self.terms.keys().all(|e| e.m % 2 == 0)
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of `L^i`, with the `L` exponent stripped.
    pub fn l_coefficient(&self, i: u32) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.l == i)
                .map(|(e, c)| (Exp::new(e.t, e.m, 0), c.clone())),
        )
    }

    /// All `L` coefficients `[P_0, .., P_d]`; empty for the zero polynomial.
    pub fn l_coefficients(&self) -> Vec<Poly> {
        match self.l_degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.l_coefficient(i)).collect(),
        }
    }

    /// Reassemble `Σ coeffs[i]·L^i`. Coefficients must be `L`-free.
    pub fn from_l_coefficients(coeffs: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            debug_assert!(!c.has_l(), "L coefficient must be L-free");
            acc = &acc + &(c * &Poly::l_pow(i as u32));
        }
        acc
    }

    /// The ε map: substitute `t = -1`. A ring homomorphism.
    pub fn eval_t_minus1(&self) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, c)| {
            let c = if e.t.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            (Exp::new(0, e.m, e.l), c)
        }))
    }

    /// Substitute `M -> image`, where `image` is the unit `±t^j·M^k`; with
    /// `square` set, the image's `M` part is squared first, so the effective
    /// substitution is `M -> ±t^j·M^{2k}`. `t` and `L` pass through.
    pub fn substitute_m(&self, image: &Unit, square: bool) -> Poly {
        let k = if square { 2 * image.e_m } else { image.e_m };
        let j = image.e_t;
        Poly::from_terms(self.terms.iter().map(|(e, c)| {
            let mut c = c.clone();
            if image.sign < 0 && e.m.rem_euclid(2) == 1 {
                c = -c;
            }
            (Exp::new(e.t + e.m * j, e.m * k, e.l), c)
        }))
    }

    /// Substitute `L -> -L`.
    pub fn substitute_l_neg(&self) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, c)| {
            let c = if e.l % 2 == 1 { -c.clone() } else { c.clone() };
            (*e, c)
        }))
    }

    /// Exact division in the polynomial ring. Fails with `InexactDivision`
    /// when the divisor does not divide exactly.
    pub fn exact_div(&self, b: &Poly) -> Result<Poly, RingError> {
        if b.is_zero() {
            return Err(RingError::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        // A quotient term's exponents are confined, per variable, to the
        // difference of the extreme exponents of dividend and divisor.
        let (a_lmin, a_lmax) = (
            self.terms.keys().map(|e| e.l).min().unwrap(),
            self.terms.keys().map(|e| e.l).max().unwrap(),
        );
        let (b_lmin, b_lmax) = (
            b.terms.keys().map(|e| e.l).min().unwrap(),
            b.terms.keys().map(|e| e.l).max().unwrap(),
        );
        let (a_mmin, a_mmax) = self.m_range().unwrap();
        let (b_mmin, b_mmax) = b.m_range().unwrap();
        let (a_tmin, a_tmax) = self.t_range().unwrap();
        let (b_tmin, b_tmax) = b.t_range().unwrap();
        if a_lmax < b_lmax || a_lmin < b_lmin {
            return Err(RingError::InexactDivision);
        }
        let l_lo = a_lmin - b_lmin;
        let l_hi = a_lmax - b_lmax;
        let m_lo = a_mmin - b_mmin;
        let m_hi = a_mmax - b_mmax;
        let t_lo = a_tmin - b_tmin;
        let t_hi = a_tmax - b_tmax;
        if l_hi < l_lo || m_hi < m_lo || t_hi < t_lo {
            return Err(RingError::InexactDivision);
        }
        let (bl_exp, bl_coeff) = b.leading_term().unwrap();
        let bl_coeff = bl_coeff.clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rl_exp, rl_coeff)) = rem.leading_term() {
            if rl_exp.l < bl_exp.l {
                return Err(RingError::InexactDivision);
            }
            let qe = Exp::new(rl_exp.t - bl_exp.t, rl_exp.m - bl_exp.m, rl_exp.l - bl_exp.l);
            if qe.l < l_lo
                || qe.l > l_hi
                || qe.m < m_lo
                || qe.m > m_hi
                || qe.t < t_lo
                || qe.t > t_hi
            {
                return Err(RingError::InexactDivision);
            }
            let (qc, r) = rl_coeff.div_rem(&bl_coeff);
            if !r.is_zero() {
                return Err(RingError::InexactDivision);
            }
            let qterm = Poly::from_terms([(qe, qc)]);
            rem = &rem - &(&qterm * b);
            quot = &quot + &qterm;
        }
        Ok(quot)
    }

    /// `Some(q)` with `self = q·b` when `b` divides exactly.
    pub fn divides_into(&self, b: &Poly) -> Option<Poly> {
        self.exact_div(b).ok()
    }

    /// gcd of the absolute values of all coefficients; zero for the zero poly.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Minimal exponents across the support: the common monomial factor.
    pub fn monomial_content(&self) -> Option<Exp> {
        if self.is_zero() {
            return None;
        }
        let t = self.terms.keys().map(|e| e.t).min().unwrap();
        let m = self.terms.keys().map(|e| e.m).min().unwrap();
        let l = self.terms.keys().map(|e| e.l).min().unwrap();
        Some(Exp::new(t, m, l))
    }

    /// Multiply by the monomial `t^t·M^m·L^l` (with `l` allowed negative only
    /// if every term's `L` exponent stays non-negative).
    pub fn mul_monomial(&self, t: i64, m: i64, l: i64) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, c)| {
            let nl = e.l as i64 + l;
            assert!(nl >= 0, "negative L exponent");
            (Exp::new(e.t + t, e.m + m, nl as u32), c.clone())
        }))
    }

    /// Divide out integer content and monomial content, then fix the sign so
    /// the leading coefficient is positive. Returns the normalized poly.
    pub fn primitive_normalized(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let content = self.integer_content();
        let mc = self.monomial_content().unwrap();
        let mut p = Poly::from_terms(self.terms.iter().map(|(e, c)| {
            (
                Exp::new(e.t - mc.t, e.m - mc.m, e.l - mc.l),
                c / &content,
            )
        }));
        if p.leading_term().unwrap().1.is_negative() {
            p = -&p;
        }
        p
    }
}

/// `true` iff nonzero `f`, `g` agree up to a factor depending only on `M`
/// (and `t`): all 2×2 cross-products of the `L`-coefficient vectors vanish.
pub fn m_essentially_equal(f: &Poly, g: &Poly) -> Result<bool, RingError> {
    if f.is_zero() || g.is_zero() {
        return Err(RingError::ZeroArgument);
    }
    let df = f.l_degree().unwrap();
    let dg = g.l_degree().unwrap();
    let d = df.max(dg);
    let fc: Vec<Poly> = (0..=d).map(|i| f.l_coefficient(i)).collect();
    let gc: Vec<Poly> = (0..=d).map(|i| g.l_coefficient(i)).collect();
    for i in 0..=d as usize {
        for j in (i + 1)..=d as usize {
            if &fc[i] * &gc[j] != &fc[j] * &gc[i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unit `u` with `f = u·g`, if one exists.
pub fn unit_equal(f: &Poly, g: &Poly) -> Option<Unit> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Some(Unit::one()),
        (true, false) | (false, true) => return None,
        _ => {}
    }
    if f.num_terms() != g.num_terms() {
        return None;
    }
    let (fe, fc) = f.leading_term().unwrap();
    let (ge, gc) = g.leading_term().unwrap();
    if fe.l != ge.l {
        return None;
    }
    if fc.magnitude() != gc.magnitude() {
        return None;
    }
    let sign = if (fc.is_negative()) == (gc.is_negative()) { 1 } else { -1 };
    let u = Unit::new(sign, fe.t - ge.t, fe.m - ge.m);
    if f == &(&u.to_poly() * g) {
        Some(u)
    } else {
        None
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Poly { terms }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Poly { terms }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        // iterate over the smaller operand outside
        let (small, big) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                let e = Exp::new(ea.t + eb.t, ea.m + eb.m, ea.l + eb.l);
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Poly { terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            let has_vars = e.l != 0 || e.m != 0 || e.t != 0;
            let mut wrote_factor = false;
            if !mag.is_one() || !has_vars {
                write!(f, "{}", mag)?;
                wrote_factor = true;
            }
            let mut put = |f: &mut fmt::Formatter<'_>, name: &str, exp: i64| -> fmt::Result {
                if exp == 0 {
                    return Ok(());
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                wrote_factor = true;
                if exp == 1 {
                    write!(f, "{}", name)
                } else {
                    write!(f, "{}^{}", name, exp)
                }
            };
            put(f, "L", e.l as i64)?;
            put(f, "M", e.m)?;
            put(f, "t", e.t)?;
        }
        Ok(())
    }
}

/// Which single variable a univariate helper operates in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    T,
    M,
}

fn to_dense(p: &Poly, var: Var) -> (i64, Vec<BigRational>) {
    let exp_of = |e: &Exp| match var {
        Var::T => e.t,
        Var::M => e.m,
    };
    if p.is_zero() {
        return (0, vec![]);
    }
    let min = p.terms().map(|(e, _)| exp_of(e)).min().unwrap();
    let max = p.terms().map(|(e, _)| exp_of(e)).max().unwrap();
    let mut v = vec![BigRational::zero(); (max - min + 1) as usize];
    for (e, c) in p.terms() {
        debug_assert!(e.l == 0, "univariate helper: unexpected L dependence");
        v[(exp_of(e) - min) as usize] = BigRational::from_integer(c.clone());
    }
    (min, v)
}

fn from_dense(v: &[BigRational], var: Var) -> Poly {
    // clear denominators, divide by integer content, force positive lead
    let mut den = BigInt::one();
    for c in v {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Poly::zero();
    }
    let lead_neg = ints.iter().rev().find(|c| !c.is_zero()).map(|c| c.is_negative()).unwrap_or(false);
    let sign = if lead_neg { -BigInt::one() } else { BigInt::one() };
    Poly::from_terms(ints.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
        let e = match var {
            Var::T => Exp::new(i as i64, 0, 0),
            Var::M => Exp::new(0, i as i64, 0),
        };
        (e, c / &g * &sign)
    }))
}

/// Univariate polynomial gcd in the given variable, for polys that depend on
/// that variable only. Laurent inputs are allowed; the result is normalized
/// to minimal exponent 0, primitive, with positive leading coefficient.
pub fn gcd_univar(a: &Poly, b: &Poly, var: Var) -> Poly {
    if a.is_zero() {
        return b.primitive_normalized();
    }
    if b.is_zero() {
        return a.primitive_normalized();
    }
    let (_, mut u) = to_dense(a, var);
    let (_, mut v) = to_dense(b, var);
    let deg = |w: &[BigRational]| w.iter().rposition(|c| !c.is_zero());
    let trim = |w: &mut Vec<BigRational>| {
        while w.last().map(|c| c.is_zero()).unwrap_or(false) {
            w.pop();
        }
    };
    trim(&mut u);
    trim(&mut v);
    while !v.is_empty() {
        // u mod v, monic euclid
        let dv = deg(&v).unwrap();
        let lead = v[dv].clone();
        while let Some(du) = deg(&u) {
            if du < dv {
                break;
            }
            let factor = &u[du] / &lead;
            for i in 0..=dv {
                let t = &v[i] * &factor;
                u[du - dv + i] = &u[du - dv + i] - &t;
            }
            trim(&mut u);
        }
        std::mem::swap(&mut u, &mut v);
        trim(&mut v);
    }
    from_dense(&u, var)
}
