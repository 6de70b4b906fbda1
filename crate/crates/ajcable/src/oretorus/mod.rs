//! The quantum torus restricted to non-negative `L` powers: normal-ordered
//! operators `Σ aᵢ(t,M)·Lⁱ` subject to `LM = t²ML`, their action on discrete
//! sequences, the ε map, skein-computed colored Jones fixtures and a
//! brute-force recurrence-fitting oracle.

pub mod fit;
pub mod skein;

use crate::ring::{Poly, Unit};
use std::collections::BTreeMap;
use thiserror::Error;

pub use fit::{fit_minimal_recurrence, fit_recurrence, FitConfig};
pub use skein::{
    colored_jones_fixture, jones_via_pd_bracket, ColoredJonesOracle, FixtureKnot, SkeinError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OreError {
    #[error("operator coefficient at L^{0} depends on L")]
    LDependentCoefficient(u32),
}

/// Normal-ordered operator with all `M` powers left of all `L` powers.
/// The map sends an `L` exponent to its `(t,M)`-polynomial coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OreOp {
    coeffs: BTreeMap<u32, Poly>,
}

impl OreOp {
    pub fn zero() -> Self {
        OreOp { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        OreOp::from_coeffs(vec![Poly::one()]).unwrap()
    }

    pub fn l() -> Self {
        OreOp::from_coeffs(vec![Poly::zero(), Poly::one()]).unwrap()
    }

    /// Build from the coefficient list `[a_0, .., a_d]`.
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Result<Self, OreError> {
        let mut map = BTreeMap::new();
        for (i, c) in coeffs.into_iter().enumerate() {
            if c.has_l() {
                return Err(OreError::LDependentCoefficient(i as u32));
            }
            if !c.is_zero() {
                map.insert(i as u32, c);
            }
        }
        Ok(OreOp { coeffs: map })
    }

    /// Reinterpret a commutative polynomial as a normal-ordered operator.
    pub fn from_l_poly(p: &Poly) -> Self {
        OreOp::from_coeffs(p.l_coefficients()).expect("l_coefficients are L-free")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn l_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, i: u32) -> Poly {
        self.coeffs.get(&i).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coefficients(&self) -> Vec<Poly> {
        match self.l_degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coefficient(i)).collect(),
        }
    }

    /// Normal-ordered product using `Lⁱ·M^k = t^{2ik}·M^k·Lⁱ`.
    pub fn ore_mul(&self, rhs: &OreOp) -> OreOp {
        let mut acc: BTreeMap<u32, Poly> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            // commute b_j across L^i: M^k picks up t^{2ik}
            let twist = Unit::new(1, 2 * i as i64, 1);
            for (&j, b) in &rhs.coeffs {
                let moved = b.substitute_m(&twist, false);
                let term = a * &moved;
                let e = acc.entry(i + j).or_insert_with(Poly::zero);
                *e = &*e + &term;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        OreOp { coeffs: acc }
    }

    /// The ε map `t = -1`, collapsing to a commutative polynomial in `(M, L)`.
    pub fn epsilon(&self) -> Poly {
        let mut acc = Poly::zero();
        for (&i, c) in &self.coeffs {
            acc = &acc + &(&c.eval_t_minus1() * &Poly::l_pow(i));
        }
        acc
    }

    /// Forget the ordering: the commutative polynomial `Σ aᵢ·Lⁱ`.
    pub fn to_commutative(&self) -> Poly {
        let mut acc = Poly::zero();
        for (&i, c) in &self.coeffs {
            acc = &acc + &(c * &Poly::l_pow(i));
        }
        acc
    }

    /// Divide all coefficients by their common integer content and common
    /// `(t,M)` monomial, with the leading coefficient made sign-positive.
    pub fn normalized(&self) -> OreOp {
        if self.is_zero() {
            return OreOp::zero();
        }
        let joint = self.to_commutative().primitive_normalized();
        OreOp::from_l_poly(&joint)
    }

    /// Apply to a sequence at index `n`: `Σ aᵢ(t, t^{2n})·f(n+i)`.
    pub fn apply(&self, f: &dyn SequenceOracle, n: u32) -> Poly {
        let scalar_m = Unit::new(1, 2 * n as i64, 0);
        let mut acc = Poly::zero();
        for (&i, c) in &self.coeffs {
            let coeff_at_n = c.substitute_m(&scalar_m, false);
            acc = &acc + &(&coeff_at_n * &f.eval(n + i));
        }
        acc
    }

    /// `true` iff `apply` gives the zero polynomial on every `n` in the range.
    /// A necessary-condition sampler, not a proof.
    pub fn annihilates(&self, f: &dyn SequenceOracle, range: std::ops::RangeInclusive<u32>) -> bool {
        range.into_iter().all(|n| self.apply(f, n).is_zero())
    }
}

impl std::fmt::Display for OreOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_commutative())
    }
}

/// A discrete function `n ↦ Laurent polynomial in t`, `n ≥ 1`.
pub trait SequenceOracle {
    fn eval(&self, n: u32) -> Poly;

    /// Value at `t = t0` in the prime field `F_p`, or `None` when that
    /// evaluation point degenerates. The default route goes through the
    /// symbolic value; oracles with a cheap closed form override.
    fn eval_mod(&self, n: u32, t0: u64, p: u64) -> Option<u64> {
        Some(poly_eval_mod(&self.eval(n), t0, p))
    }
}

/// Evaluate a `t`-only Laurent polynomial at `t0` over `F_p`.
pub fn poly_eval_mod(poly: &Poly, t0: u64, p: u64) -> u64 {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let inv_t0 = powmod(t0, p - 2);
    let mut acc = 0u64;
    for (e, c) in poly.terms() {
        assert!(e.m == 0 && e.l == 0, "eval_mod expects a t-only polynomial");
        let pw = if e.t >= 0 {
            powmod(t0, e.t as u64)
        } else {
            powmod(inv_t0, (-e.t) as u64)
        };
        let cm = c.mod_floor(&num_bigint::BigInt::from(p));
        let cm: u64 = num_traits::ToPrimitive::to_u64(&cm).unwrap();
        acc = (acc + mul(cm, pw)) % p;
    }
    acc
}

use num_integer::Integer as _;

/// The odd subsequence `n ↦ f(2n+1)` of another oracle.
pub struct OddSubsequence<'a>(pub &'a dyn SequenceOracle);

impl SequenceOracle for OddSubsequence<'_> {
    fn eval(&self, n: u32) -> Poly {
        self.0.eval(2 * n + 1)
    }

    fn eval_mod(&self, n: u32, t0: u64, p: u64) -> Option<u64> {
        self.0.eval_mod(2 * n + 1, t0, p)
    }
}

/// Constant sequence, mostly for tests.
pub struct ConstSequence(pub Poly);

impl SequenceOracle for ConstSequence {
    fn eval(&self, _n: u32) -> Poly {
        self.0.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::m_essentially_equal;

    struct PowT2;
    impl SequenceOracle for PowT2 {
        fn eval(&self, n: u32) -> Poly {
            Poly::t_pow(2 * n as i64)
        }
    }

    #[test]
    fn ore_relation() {
        // L·M = t²·M·L
        let lm = OreOp::l().ore_mul(&OreOp::from_l_poly(&Poly::m()));
        assert_eq!(lm.to_commutative(), Poly::mono(1, 2, 1, 1));
        // L²·M = t⁴·M·L²
        let l2 = OreOp::l().ore_mul(&OreOp::l());
        let l2m = l2.ore_mul(&OreOp::from_l_poly(&Poly::m()));
        assert_eq!(l2m.to_commutative(), Poly::mono(1, 4, 1, 2));
        // M·L already normal-ordered
        let ml = OreOp::from_l_poly(&Poly::m()).ore_mul(&OreOp::l());
        assert_eq!(ml.to_commutative(), Poly::mono(1, 0, 1, 1));
    }

    #[test]
    fn ore_mul_associative() {
        let a = OreOp::from_l_poly(&(&Poly::mono(2, 1, 1, 1) + &Poly::m_pow(-1)));
        let b = OreOp::from_l_poly(&(&Poly::l_pow(2) + &Poly::mono(1, -2, 3, 0)));
        let c = OreOp::from_l_poly(&(&Poly::mono(1, 0, 1, 1) + &Poly::one()));
        assert_eq!(a.ore_mul(&b).ore_mul(&c), a.ore_mul(&b.ore_mul(&c)));
    }

    #[test]
    fn epsilon_is_multiplicative() {
        let a = OreOp::from_l_poly(&(&Poly::mono(1, 3, 2, 1) + &Poly::mono(-2, 0, -1, 0)));
        let b = OreOp::from_l_poly(&(&Poly::mono(1, 1, 1, 2) + &Poly::one()));
        let lhs = a.ore_mul(&b).epsilon();
        let rhs = &a.epsilon() * &b.epsilon();
        assert_eq!(lhs, rhs);
        assert_eq!(OreOp::from_l_poly(&Poly::mono(1, 2, 1, 1)).epsilon(), Poly::mono(1, 0, 1, 1));
    }

    #[test]
    fn apply_operator_definitions() {
        // op = M on f ≡ 1 gives t^{2n}
        let m = OreOp::from_l_poly(&Poly::m());
        let ones = ConstSequence(Poly::one());
        for n in 1..=5 {
            assert_eq!(m.apply(&ones, n), Poly::t_pow(2 * n as i64));
        }
        // L - 1 kills constants
        let l_minus_1 = OreOp::from_l_poly(&(&Poly::l() - &Poly::one()));
        assert!(l_minus_1.annihilates(&ones, 1..=10));
        let l_minus_2 = OreOp::from_l_poly(&(&Poly::l() - &Poly::from_int(2)));
        assert!(!l_minus_2.annihilates(&ones, 1..=10));
        // L - t² kills t^{2n}
        let l_minus_t2 = OreOp::from_l_poly(&(&Poly::l() - &Poly::t_pow(2)));
        assert!(l_minus_t2.annihilates(&PowT2, 1..=8));
    }

    #[test]
    fn apply_is_compositional() {
        // apply(a·b, f, n) = apply(a, n ↦ apply(b, f, n), n)
        struct Image<'a>(&'a OreOp, &'a dyn SequenceOracle);
        impl SequenceOracle for Image<'_> {
            fn eval(&self, n: u32) -> Poly {
                self.0.apply(self.1, n)
            }
        }
        let a = OreOp::from_l_poly(&(&Poly::mono(1, 1, 2, 1) + &Poly::mono(3, 0, 0, 0)));
        let b = OreOp::from_l_poly(&(&Poly::mono(1, 0, 1, 2) + &Poly::mono(-1, 2, 0, 0)));
        let f = PowT2;
        let ab = a.ore_mul(&b);
        let g = Image(&b, &f);
        for n in 1..=6 {
            assert_eq!(ab.apply(&f, n), a.apply(&g, n));
        }
    }

    #[test]
    fn normalization_strips_units_and_content() {
        let raw = OreOp::from_coeffs(vec![Poly::mono(6, 3, 2, 0), Poly::mono(-4, 1, 4, 0)]).unwrap();
        let n = raw.normalized();
        // content 2 and the monomial t·M² stripped; sign fixed so the
        // highest term in canonical order (the L¹ one) is positive
        assert_eq!(
            n.coefficients(),
            vec![Poly::mono(-3, 2, 0, 0), Poly::mono(2, 0, 2, 0)]
        );
        // normalized operator is still M-essentially related through epsilon
        assert!(m_essentially_equal(&raw.epsilon(), &n.epsilon()).unwrap());
    }

    #[test]
    fn eval_mod_matches_symbolic() {
        let p = 2305843009213693951u64; // 2^61 - 1
        let poly = &Poly::t_pow(-3) + &(&Poly::mono(7, 2, 0, 0) - &Poly::from_int(5));
        let t0 = 10u64;
        // value = 10^-3 + 7·10^2 - 5 mod p
        let mul = |a: u128, b: u128| ((a * b) % p as u128) as u64;
        let mut inv = 1u64;
        let mut b = t0;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                inv = mul(inv as u128, b as u128);
            }
            b = mul(b as u128, b as u128);
            e >>= 1;
        }
        let inv3 = mul(mul(inv as u128, inv as u128) as u128, inv as u128);
        let expect = (inv3 as u128 + 700 - 5) % p as u128;
        assert_eq!(poly_eval_mod(&poly, t0, p), expect as u64);
    }
}
