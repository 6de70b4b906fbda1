//! Brute-force recurrence fitting: find `P_i(t, M)` of bounded `M`-degree
//! with `Σ P_i(t, t^{2n})·f(n+i) = 0` on sampled `n`, by exact linear algebra
//! over the rational function field in `t`.
//!
//! The solve works modulo large primes at many rational points `t = t0`,
//! reconstructs the coefficient functions by Cauchy interpolation and
//! rational number reconstruction, and then re-verifies the candidate
//! symbolically on a sample range disjoint from the fitted one. Only a
//! verified operator is ever returned, so the modular plumbing cannot leak
//! a wrong answer.

use super::{OreOp, SequenceOracle};
use crate::ring::Poly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Knobs for the fitting pipeline.
#[derive(Clone, Debug)]
pub struct FitConfig {
    /// First sample index used by the modular solves; everything below it
    /// stays fresh for verification.
    pub sample_start: u32,
    /// Extra rows beyond the unknown count.
    pub slack: usize,
    /// Cap on the rational-function degree tried during reconstruction.
    pub max_rational_degree: usize,
    /// Number of primes used for rational reconstruction.
    pub prime_count: usize,
    /// Symbolic verification range (disjoint from the sampled range).
    pub verify_end: u32,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            sample_start: 9,
            slack: 6,
            max_rational_degree: 64,
            prime_count: 3,
            verify_end: 8,
        }
    }
}

/// Single fit attempt at exactly `(d, m_degree_bound)` with `n_samples`
/// sample rows. Returns a verified annihilator or `None`.
pub fn fit_recurrence(
    f: &dyn SequenceOracle,
    d: usize,
    m_degree_bound: usize,
    n_samples: usize,
) -> Option<OreOp> {
    fit_recurrence_with(f, d, m_degree_bound, n_samples, &FitConfig::default())
}

/// Minimality search: `d = 1, 2, ..` upward and the `M`-degree bound by
/// doubling, returning the first verified success.
pub fn fit_minimal_recurrence(
    f: &dyn SequenceOracle,
    max_d: usize,
    max_m_bound: usize,
) -> Option<OreOp> {
    let cfg = FitConfig::default();
    for d in 1..=max_d {
        let mut mb = 1;
        loop {
            let n_samples = (d + 1) * (mb + 1) + cfg.slack;
            if let Some(op) = fit_recurrence_with(f, d, mb, n_samples, &cfg) {
                return Some(op);
            }
            if mb >= max_m_bound {
                break;
            }
            mb = (mb * 2).min(max_m_bound);
        }
    }
    None
}

pub fn fit_recurrence_with(
    f: &dyn SequenceOracle,
    d: usize,
    m_degree_bound: usize,
    n_samples: usize,
    cfg: &FitConfig,
) -> Option<OreOp> {
    let cols = (d + 1) * (m_degree_bound + 1);
    let primes = large_primes(cfg.prime_count.max(1));

    // probe the generic corank and fix the reference coordinate
    let probe = Solver {
        f,
        d,
        mb: m_degree_bound,
        rows: n_samples,
        n0: cfg.sample_start,
    };
    let mut expected_corank = usize::MAX;
    let mut reference = None;
    for t0 in GoodPoints::new() {
        if let Some((corank, free_cols)) = probe.corank_at(t0, primes[0]) {
            if corank == 0 {
                return None;
            }
            if corank < expected_corank {
                expected_corank = corank;
                reference = Some(*free_cols.last().unwrap());
            }
            if expected_corank != usize::MAX && t0 > 12 {
                break;
            }
        }
        if t0 > 40 {
            break;
        }
    }
    let reference = reference?;

    // reconstruction with doubling rational degree
    let mut deg = 8usize;
    loop {
        if let Some(op) = reconstruct(&probe, cols, reference, expected_corank, deg, &primes) {
            let candidate = op.normalized();
            if verify(&candidate, f, cfg) {
                return Some(candidate);
            }
        }
        if deg >= cfg.max_rational_degree {
            return None;
        }
        deg *= 2;
    }
}

fn verify(op: &OreOp, f: &dyn SequenceOracle, cfg: &FitConfig) -> bool {
    if op.is_zero() {
        return false;
    }
    op.annihilates(f, 1..=cfg.verify_end)
}

struct Solver<'a> {
    f: &'a dyn SequenceOracle,
    d: usize,
    mb: usize,
    rows: usize,
    n0: u32,
}

impl Solver<'_> {
    /// Row matrix at `t = t0` over `F_p`; entry of column `(i, k)` in the
    /// sample row `n` is `t0^{2nk}·f(n+i)`.
    fn matrix_at(&self, t0: u64, p: u64) -> Option<Vec<Vec<u64>>> {
        let mut values = Vec::new();
        for n in self.n0..self.n0 + (self.rows + self.d) as u32 {
            values.push(self.f.eval_mod(n, t0, p)?);
        }
        let mut rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let n = self.n0 as u64 + r as u64;
            let t2n = modpow(t0 % p, 2 * n, p);
            let mut row = Vec::with_capacity((self.d + 1) * (self.mb + 1));
            for i in 0..=self.d {
                let jv = values[r + i];
                let mut acc = jv;
                for _k in 0..=self.mb {
                    row.push(acc);
                    acc = mulmod(acc, t2n, p);
                }
            }
            rows.push(row);
        }
        Some(rows)
    }

    fn corank_at(&self, t0: u64, p: u64) -> Option<(usize, Vec<usize>)> {
        let mut rows = self.matrix_at(t0, p)?;
        let cols = (self.d + 1) * (self.mb + 1);
        let pivots = rref(&mut rows, cols, p);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        Some((cols - pivots.len(), free))
    }

    /// Kernel vector at `t0`, normalized so coordinate `reference` is 1.
    fn kernel_at(
        &self,
        t0: u64,
        p: u64,
        reference: usize,
        expected_corank: usize,
    ) -> Option<Vec<u64>> {
        let mut rows = self.matrix_at(t0, p)?;
        let cols = (self.d + 1) * (self.mb + 1);
        let pivots = rref(&mut rows, cols, p);
        if cols - pivots.len() != expected_corank {
            return None;
        }
        if pivots.contains(&reference) {
            return None;
        }
        let mut v = vec![0u64; cols];
        v[reference] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - rows[r][reference] % p) % p;
        }
        Some(v)
    }
}

/// Reduced row echelon form over `F_p`; returns the pivot columns.
fn rref(rows: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] % p != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = modpow(rows[r][c] % p, p - 2, p);
        for x in rows[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] % p != 0 {
                let factor = rows[i][c] % p;
                for cc in 0..cols {
                    let sub = mulmod(factor, rows[r][cc], p);
                    rows[i][cc] = (rows[i][cc] % p + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Reconstruct the coefficient vector as Laurent-rational functions of `t`
/// normalized at `reference`, independently per prime, then CRT + rational
/// reconstruction into integers.
fn reconstruct(
    solver: &Solver<'_>,
    cols: usize,
    reference: usize,
    expected_corank: usize,
    deg: usize,
    primes: &[u64],
) -> Option<OreOp> {
    let needed = 2 * deg + 4;
    let mut per_prime: Vec<Vec<Vec<u64>>> = Vec::new(); // [prime][col] -> poly coeffs (deg 0..)
    for &p in primes {
        let mut xs = Vec::new();
        let mut vecs: Vec<Vec<u64>> = Vec::new();
        for t0 in GoodPoints::new() {
            if xs.len() >= needed {
                break;
            }
            if t0 >= p {
                break;
            }
            if let Some(v) = solver.kernel_at(t0, p, reference, expected_corank) {
                xs.push(t0);
                vecs.push(v);
            }
            if t0 > 4 * needed as u64 + 60 {
                break;
            }
        }
        if xs.len() < needed {
            return None;
        }
        // per-coordinate Cauchy interpolation
        let mut numerators: Vec<Vec<u64>> = Vec::with_capacity(cols);
        let mut denominators: Vec<Vec<u64>> = Vec::with_capacity(cols);
        for c in 0..cols {
            let ys: Vec<u64> = vecs.iter().map(|v| v[c]).collect();
            let (num, den) = cauchy_interpolate(&xs, &ys, deg, p)?;
            numerators.push(num);
            denominators.push(den);
        }
        // clear to a common denominator
        let mut lcm = vec![1u64];
        for den in &denominators {
            let g = fp_gcd(&lcm, den, p);
            let quo = fp_div_exact(den, &g, p)?;
            lcm = fp_mul(&lcm, &quo, p);
        }
        let mut cleared: Vec<Vec<u64>> = Vec::with_capacity(cols);
        for c in 0..cols {
            let quo = fp_div_exact(&lcm, &denominators[c], p)?;
            cleared.push(fp_mul(&numerators[c], &quo, p));
        }
        // strip the common polynomial content
        let mut content = vec![0u64];
        for w in &cleared {
            content = fp_gcd(&content, w, p);
            if content.len() == 1 && content[0] != 0 {
                break;
            }
        }
        if content.len() > 1 {
            for w in cleared.iter_mut() {
                *w = fp_div_exact(w, &content, p)?;
            }
        }
        // canonical scaling: first nonzero coordinate's leading coefficient 1
        let lead = cleared
            .iter()
            .find(|w| !fp_is_zero(w))
            .map(|w| *w.last().unwrap())?;
        let inv = modpow(lead, p - 2, p);
        for w in cleared.iter_mut() {
            for x in w.iter_mut() {
                *x = mulmod(*x, inv, p);
            }
        }
        per_prime.push(cleared);
    }

    // CRT + rational reconstruction per (column, exponent) slot
    let modulus: BigUint = primes.iter().map(|&p| BigUint::from(p)).product();
    let max_len = per_prime
        .iter()
        .flat_map(|pp| pp.iter().map(|w| w.len()))
        .max()?;
    let mut coeff_polys: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); max_len]; cols];
    for c in 0..cols {
        for e in 0..max_len {
            let residues: Vec<(u64, u64)> = primes
                .iter()
                .enumerate()
                .map(|(pi, &p)| (per_prime[pi][c].get(e).copied().unwrap_or(0), p))
                .collect();
            let x = crt(&residues);
            let rat = rational_reconstruct(&x, &modulus)?;
            coeff_polys[c][e] = rat;
        }
    }
    // clear denominators over the whole vector
    let mut den = BigInt::one();
    for w in &coeff_polys {
        for r in w {
            den = den.lcm(r.denom());
        }
    }
    let mb = solver.mb;
    let mut coeffs: Vec<Poly> = vec![Poly::zero(); solver.d + 1];
    for (c, w) in coeff_polys.iter().enumerate() {
        let i = c / (mb + 1);
        let k = (c % (mb + 1)) as i64;
        for (e, r) in w.iter().enumerate() {
            let int = (r * BigRational::from_integer(den.clone())).to_integer();
            if !int.is_zero() {
                coeffs[i] = &coeffs[i] + &Poly::from_terms([(crate::ring::Exp::new(e as i64, k, 0), int)]);
            }
        }
    }
    OreOp::from_coeffs(coeffs).ok()
}

/// Find `(num, den)` of degree at most `deg` with `num(x) = y·den(x)` on all
/// points, validating against every supplied point.
fn cauchy_interpolate(xs: &[u64], ys: &[u64], deg: usize, p: u64) -> Option<(Vec<u64>, Vec<u64>)> {
    let unknowns = 2 * (deg + 1);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(xs.len());
    for (&x, &y) in xs.iter().zip(ys) {
        let mut row = Vec::with_capacity(unknowns);
        let mut pw = 1u64;
        for _ in 0..=deg {
            row.push(pw);
            pw = mulmod(pw, x, p);
        }
        let mut pw = 1u64;
        for _ in 0..=deg {
            row.push((p - mulmod(y, pw, p)) % p);
            pw = mulmod(pw, x, p);
        }
        rows.push(row);
    }
    let pivots = rref(&mut rows, unknowns, p);
    if pivots.len() == unknowns {
        return None;
    }
    // pick the last free column; ensure the denominator part is nonzero
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    for &fc in free.iter().rev() {
        let mut v = vec![0u64; unknowns];
        v[fc] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - rows[r][fc] % p) % p;
        }
        let num = trim(v[..=deg].to_vec());
        let den = trim(v[deg + 1..].to_vec());
        if fp_is_zero(&den) {
            continue;
        }
        // validate on all points (rejects spurious kernel vectors with
        // vanishing denominators at sample points)
        let ok = xs.iter().zip(ys).all(|(&x, &y)| {
            let nv = fp_eval(&num, x, p);
            let dv = fp_eval(&den, x, p);
            dv != 0 && nv == mulmod(y, dv, p)
        });
        if !ok {
            continue;
        }
        // reduce the fraction
        let g = fp_gcd(&num, &den, p);
        let num = fp_div_exact(&num, &g, p)?;
        let den = fp_div_exact(&den, &g, p)?;
        return Some((num, den));
    }
    None
}

// --- dense polynomial helpers over F_p ---

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

fn fp_eval(v: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in v.iter().rev() {
        acc = (mulmod(acc, x, p) + c) % p;
    }
    acc
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if fp_is_zero(a) || fp_is_zero(b) {
        return vec![0];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(ca, cb, p)) % p;
        }
    }
    trim(out)
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    if db == 0 {
        return vec![0];
    }
    let lead_inv = modpow(*b.last().unwrap(), p - 2, p);
    while !fp_is_zero(&r) && r.len() > db {
        let dr = r.len() - 1;
        let factor = mulmod(r[dr], lead_inv, p);
        for i in 0..=db {
            let sub = mulmod(factor, b[i], p);
            r[dr - db + i] = (r[dr - db + i] + p - sub) % p;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut u = trim(a.to_vec());
    let mut v = trim(b.to_vec());
    while !fp_is_zero(&v) {
        let r = fp_rem(&u, &v, p);
        u = v;
        v = r;
    }
    if fp_is_zero(&u) {
        return vec![0];
    }
    let inv = modpow(*u.last().unwrap(), p - 2, p);
    trim(u.into_iter().map(|c| mulmod(c, inv, p)).collect())
}

fn fp_div_exact(a: &[u64], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if fp_is_zero(&b) {
        return None;
    }
    if fp_is_zero(&a) {
        return Some(vec![0]);
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - b.len() + 1];
    let db = b.len() - 1;
    let lead_inv = modpow(*b.last().unwrap(), p - 2, p);
    while !fp_is_zero(&r) && r.len() > db {
        let dr = r.len() - 1;
        let factor = mulmod(r[dr], lead_inv, p);
        q[dr - db] = factor;
        for i in 0..=db {
            let sub = mulmod(factor, b[i], p);
            r[dr - db + i] = (r[dr - db + i] + p - sub) % p;
        }
        if r.len() > 1 {
            r.pop();
            r = trim(r);
        } else {
            r[0] = 0;
        }
        if db == 0 && fp_is_zero(&r) {
            break;
        }
    }
    if fp_is_zero(&r) {
        Some(trim(q))
    } else {
        None
    }
}

// --- modular arithmetic ---

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

struct GoodPoints {
    next: u64,
}

impl GoodPoints {
    fn new() -> Self {
        GoodPoints { next: 3 }
    }
}

impl Iterator for GoodPoints {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let v = self.next;
        self.next += 1;
        Some(v)
    }
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modpow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn modpow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// The largest `count` primes below `2^62`, scanned deterministically.
fn large_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

fn crt(residues: &[(u64, u64)]) -> BigUint {
    let mut x = BigUint::zero();
    let mut m = BigUint::one();
    for &(r, p) in residues {
        let p_big = BigUint::from(p);
        // solve x' ≡ x (mod m), x' ≡ r (mod p)
        let x_mod_p = (&x % &p_big).to_u64().unwrap();
        let m_mod_p = (&m % &p_big).to_u64().unwrap() % p;
        let diff = (r + p - x_mod_p % p) % p;
        let inv = modpow_u64(m_mod_p, p - 2, p);
        let k = ((diff as u128 * inv as u128) % p as u128) as u64;
        x += &m * BigUint::from(k);
        m *= p_big;
    }
    x
}

/// Wang rational reconstruction: find `a/b` with `x·b ≡ a (mod m)`,
/// `|a|, b ≤ sqrt(m/2)`.
fn rational_reconstruct(x: &BigUint, m: &BigUint) -> Option<BigRational> {
    let m_int = BigInt::from(m.clone());
    let bound = (m_int.clone() / BigInt::from(2u8)).sqrt().max(BigInt::one());
    let mut r0 = m_int.clone();
    let mut r1 = BigInt::from(x.clone());
    let mut s0 = BigInt::zero();
    let mut s1 = BigInt::one();
    while r1 >= bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if s1.is_zero() {
        return None;
    }
    let (num, den) = if s1.is_negative() {
        (-r1, -s1)
    } else {
        (r1, s1)
    };
    if den > bound {
        return None;
    }
    if den.gcd(&m_int) != BigInt::one() {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oretorus::ConstSequence;
    use crate::ring::unit_equal;

    struct PowT2;
    impl SequenceOracle for PowT2 {
        fn eval(&self, n: u32) -> Poly {
            Poly::t_pow(2 * n as i64)
        }
    }

    #[test]
    fn fits_constant_sequence() {
        let f = ConstSequence(Poly::one());
        let op = fit_recurrence(&f, 1, 0, 8).expect("L-1 should be found");
        let expected = &Poly::l() - &Poly::one();
        assert!(unit_equal(&op.to_commutative(), &expected).is_some());
    }

    #[test]
    fn fits_geometric_sequence() {
        let op = fit_recurrence(&PowT2, 1, 0, 8).expect("L-t² should be found");
        let expected = &Poly::l() - &Poly::t_pow(2);
        assert!(unit_equal(&op.to_commutative(), &expected).is_some());
    }

    #[test]
    fn minimal_search_rejects_too_small_degree() {
        // the geometric sequence has no degree-0 annihilator; the search
        // starts at d=1 and stops there
        let op = fit_minimal_recurrence(&PowT2, 2, 2).unwrap();
        assert_eq!(op.l_degree(), Some(1));
    }

    #[test]
    fn returned_operator_annihilates_disjoint_range() {
        let op = fit_recurrence(&PowT2, 1, 1, 10).unwrap();
        // the fit samples start at n=9; check n=1..6 plus a far range
        assert!(op.annihilates(&PowT2, 1..=6));
        assert!(op.annihilates(&PowT2, 40..=44));
    }

    #[test]
    fn absence_is_a_value() {
        // t^{2n} admits no recurrence with constant coefficients only when
        // the M window is forced to zero AND d = 0
        let got = fit_recurrence(&PowT2, 0, 0, 8);
        assert!(got.is_none());
    }

    #[test]
    fn fits_trefoil_with_a_polynomial_image() {
        // the bundled trefoil braid closes to the chirality with Jones
        // polynomial -q⁴+q³+q, whose A-polynomial factors as (L-1)(L+M⁶);
        // the fitted minimal annihilator must reproduce it under ε
        let oracle = crate::oretorus::ColoredJonesOracle::new(crate::oretorus::FixtureKnot::Trefoil);
        let alpha = fit_minimal_recurrence(&oracle, 3, 16).expect("trefoil annihilator");
        assert_eq!(alpha.l_degree(), Some(2));
        let aprime = &Poly::l() + &Poly::m_pow(6);
        let expected = &(&Poly::l() - &Poly::one()) * &aprime;
        assert!(crate::ring::m_essentially_equal(&alpha.epsilon(), &expected).unwrap());
        let mirror = &(&Poly::l() - &Poly::one()) * &(&(&Poly::l() * &Poly::m_pow(6)) + &Poly::one());
        assert!(!crate::ring::m_essentially_equal(&alpha.epsilon(), &mirror).unwrap());
    }

    #[test]
    fn prime_scan_is_sane() {
        let ps = large_primes(3);
        assert_eq!(ps.len(), 3);
        for &p in &ps {
            assert!(p > (1 << 61));
            assert!(is_prime_u64(p));
        }
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64((1 << 62) - 1));
    }

    #[test]
    fn rational_reconstruction_roundtrip() {
        let primes = large_primes(2);
        let m: BigUint = primes.iter().map(|&p| BigUint::from(p)).product();
        for (a, b) in [(3i64, 7u64), (-22, 5), (1000003, 999983)] {
            // residue of a/b mod m, assembled per prime
            let a_big = BigInt::from(a);
            let residues: Vec<(u64, u64)> = primes
                .iter()
                .map(|&p| {
                    let ap = a_big.mod_floor(&BigInt::from(p)).to_u64().unwrap();
                    let binv = modpow_u64(b % p, p - 2, p);
                    (((ap as u128 * binv as u128) % p as u128) as u64, p)
                })
                .collect();
            let x = crt(&residues);
            let rat = rational_reconstruct(&x, &m).unwrap();
            assert_eq!(rat, BigRational::new(BigInt::from(a), BigInt::from(b)));
        }
    }
}
