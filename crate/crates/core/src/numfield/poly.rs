//! Integer polynomials and polynomials over prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finring::is_prime_u64;

/// A polynomial over `Z`, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::from_i64(&[1])
    }

    pub fn x() -> IntPoly {
        IntPoly::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Division by a monic polynomial over `Z`.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd].clone();
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn rem_monic(&self, divisor: &IntPoly) -> IntPoly {
        self.divrem_monic(divisor).1
    }

    /// Sum of absolute values of the coefficients.
    pub fn norm1(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn reduce_mod(&self, p: u64) -> FpPoly {
        let pb = BigInt::from(p);
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&pb);
                    r.to_string().parse::<u64>().unwrap()
                })
                .collect(),
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    let g = (a as i128).extended_gcd(&(p as i128));
    assert!(g.gcd == 1, "{a} not invertible mod {p}");
    g.x.rem_euclid(p as i128) as u64
}

/// A polynomial over `F_p`, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lifted = IntPoly::from_i64(&self.coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>());
        write!(f, "{lifted}")
    }
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> FpPoly {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> FpPoly {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> FpPoly {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> FpPoly {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Lift to `Z` with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    pub fn scale(&self, k: u64) -> FpPoly {
        FpPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| mulmod(c, k, self.p)).collect(),
        )
    }

    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(invmod(lc, self.p)),
        }
    }

    pub fn divrem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = divisor.degree();
        let inv_lc = invmod(*divisor.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FpPoly::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = mulmod(rem[i + dd], inv_lc, p);
            if q == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mulmod(q, d, p)) % p;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.divrem(divisor).1
    }

    pub fn div_exact(&self, divisor: &FpPoly) -> FpPoly {
        let (q, r) = self.divrem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g` monic.
    pub fn ext_gcd(&self, other: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = invmod(*r0.coeffs.last().expect("gcd of two zero polynomials"), p);
        (r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv))
    }

    pub fn pow_mod(&self, mut e: u128, modulus: &FpPoly) -> FpPoly {
        let mut base = self.rem(modulus);
        let mut acc = FpPoly::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> FpPoly {
        FpPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `g` with `g^p = self`, assuming only powers of `x^p` occur.
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        FpPoly::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }
}

/// Square-free decomposition of a monic polynomial: `(part, multiplicity)`.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p;
    let mut out = Vec::new();
    let fp = f.derivative();
    let mut c = f.gcd(&fp);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() && !w.is_zero() && w.degree() > 0 {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.degree() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if c.degree() > 0 {
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree() >= 2 * d {
        h = h.pow_mod(p as u128, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree() > 0 {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree() > 0 {
        let deg = rest.degree();
        out.push((rest, deg));
    }
    out
}

/// Splits a product of distinct irreducibles all of degree `d` (Cantor-Zassenhaus).
fn equal_degree(g: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let p = g.p;
    if g.degree() == d {
        return vec![g.clone()];
    }
    loop {
        let a = FpPoly::new(p, (0..g.degree()).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut acc = FpPoly::zero(2);
            let mut term = a.rem(g);
            for _ in 0..d {
                acc = acc.add(&term);
                term = term.mul(&term).rem(g);
            }
            acc
        } else {
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            a.pow_mod(e, g).sub(&FpPoly::one(p))
        };
        let u = b.gcd(g);
        if u.degree() > 0 && u.degree() < g.degree() {
            let v = g.div_exact(&u);
            let mut out = equal_degree(&u, d, rng);
            out.extend(equal_degree(&v, d, rng));
            return out;
        }
    }
}

/// Factorization of a polynomial over `F_p` into monic irreducibles with multiplicities.
///
/// Output is sorted by degree, then by coefficient vector.
pub fn factor_fp(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ p);
    let monic = f.monic();
    let mut out = Vec::new();
    if monic.degree() == 0 {
        return out;
    }
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&part) {
            for irr in equal_degree(&block, d, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0.coeffs).cmp(&(b.0.degree(), &b.0.coeffs)));
    out
}

/// Factorization of `f mod p`.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(FpPoly, u32)>> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let fp = f.reduce_mod(p);
    if fp.is_zero() {
        return Err(Error::ZeroModP(p));
    }
    Ok(factor_fp(&fp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    fn product(factors: &[(FpPoly, u32)], p: u64) -> FpPoly {
        factors.iter().fold(FpPoly::one(p), |acc, (g, m)| {
            (0..*m).fold(acc, |a, _| a.mul(g))
        })
    }

    fn is_irreducible_brute(g: &FpPoly) -> bool {
        // no monic factor of degree 1..=deg/2
        let p = g.p;
        let n = g.degree();
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for code in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut x = code;
                for _ in 0..d {
                    c.push(x % p);
                    x /= p;
                }
                c.push(1);
                if g.rem(&FpPoly::new(p, c)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factor_examples() {
        let f = IntPoly::from_i64(&[-18, -1, 1]);
        let fs = factor_mod_p(&f, 2).unwrap();
        assert_eq!(fs, vec![(fp(2, &[0, 1]), 1), (fp(2, &[1, 1]), 1)]);

        let f = IntPoly::from_i64(&[1, -1, 1]);
        assert_eq!(factor_mod_p(&f, 3).unwrap(), vec![(fp(3, &[1, 1]), 2)]);

        let f = IntPoly::from_i64(&[-1, 1, 0, 1]);
        assert_eq!(
            factor_mod_p(&f, 3).unwrap(),
            vec![(fp(3, &[1, 1]), 1), (fp(3, &[2, 2, 1]), 1)]
        );
        assert_eq!(
            factor_mod_p(&IntPoly::from_i64(&[2, 4]), 2),
            Err(Error::ZeroModP(2))
        );
        assert_eq!(factor_mod_p(&f, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn factor_with_pth_powers() {
        // (x^2 + x + 1)^2 * x^3 over F2
        let base = fp(2, &[1, 1, 1]);
        let f = base.mul(&base).mul(&fp(2, &[0, 0, 0, 1]));
        let fs = factor_fp(&f);
        assert_eq!(fs, vec![(fp(2, &[0, 1]), 3), (base, 2)]);
        // x^9 - x over F3 splits into all monic irreducibles of degree 1 and 2
        let mut c = vec![0; 10];
        c[9] = 1;
        c[1] = 2;
        let fs = factor_fp(&fp(3, &c));
        assert_eq!(fs.iter().filter(|f| f.0.degree() == 1).count(), 3);
        assert_eq!(fs.iter().filter(|f| f.0.degree() == 2).count(), 3);
    }

    #[test]
    fn factorization_reassembles_and_is_irreducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2u64, 3, 5, 7] {
            for _ in 0..40 {
                let deg = rng.gen_range(1..9);
                let mut c: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                c.push(1);
                let f = FpPoly::new(p, c);
                let fs = factor_fp(&f);
                assert_eq!(product(&fs, p), f);
                for (g, _) in &fs {
                    assert_eq!(g.coeffs.last(), Some(&1));
                    assert!(is_irreducible_brute(g), "{g} mod {p}");
                }
            }
        }
    }

    #[test]
    fn ext_gcd_identity() {
        let a = fp(5, &[1, 2, 0, 1]);
        let b = fp(5, &[3, 1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn int_poly_display_and_division() {
        assert_eq!(IntPoly::from_i64(&[-18, -1, 1]).to_string(), "x^2 - x - 18");
        assert_eq!(IntPoly::from_i64(&[-1, 1, 0, 1]).to_string(), "x^3 + x - 1");
        assert_eq!(IntPoly::from_i64(&[0, -2]).to_string(), "-2x");
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let g = IntPoly::from_i64(&[1, 1]);
        let (q, r) = g.mul(&g).divrem_monic(&f);
        assert_eq!(q, IntPoly::one());
        assert_eq!(r, IntPoly::from_i64(&[3, 2]));
    }
}
