//! Irreducibility of monic integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::{factor_fp, FpPoly, IntPoly};
use crate::finring::is_prime_u64;

const SIEVE_PRIMES: usize = 24;
const PRIME_CEILING: u64 = 10_000;

/// Subset sums of factor degrees, as a bitmask over `0..=n`.
fn degree_pattern(degrees: &[usize]) -> u128 {
    let mut sums: u128 = 1;
    for &d in degrees {
        sums |= sums << d;
    }
    sums
}

fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_coeffs(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// One linear Hensel step: `f = g*h (mod p^k)` to `mod p^(k+1)`, where
/// `t*h = 1 (mod g, p)`.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    t: &FpPoly,
    p: u64,
    pk: &BigInt,
) -> (IntPoly, IntPoly) {
    let diff = f.sub(&g.mul(h));
    let e = IntPoly::new(diff.coeffs().iter().map(|c| c / pk).collect()).reduce_mod(p);
    let gbar = g.reduce_mod(p);
    let hbar = h.reduce_mod(p);
    let a = e.mul(t).rem(&gbar);
    let b = e.sub(&a.mul(&hbar)).div_exact(&gbar);
    let g2 = g.add(&a.lift().scale(pk));
    let h2 = h.add(&b.lift().scale(pk));
    (g2, h2)
}

/// Lifts a factorization of `f mod p` into distinct monic irreducibles to `mod p^k`.
fn hensel_lift(f: &IntPoly, factors: &[FpPoly], p: u64, k: u32) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let pb = BigInt::from(p);
    let g0 = &factors[0];
    let h0 = factors[1..]
        .iter()
        .fold(FpPoly::one(p), |acc, q| acc.mul(q));
    let (_, _, t) = g0.ext_gcd(&h0);
    let mut g = g0.lift();
    let mut h = h0.lift();
    let mut pk = pb.clone();
    for _ in 1..k {
        let (g2, h2) = hensel_step(f, &g, &h, &t, p, &pk);
        pk *= &pb;
        g = reduce_coeffs(&g2, &pk);
        h = reduce_coeffs(&h2, &pk);
    }
    let mut out = vec![g];
    out.extend(hensel_lift(&h, &factors[1..], p, k));
    out
}

/// Whether `f` (monic, degree >= 1) is irreducible over `Q`.
pub fn is_irreducible(f: &IntPoly) -> bool {
    let n = f.degree();
    if n <= 1 {
        return true;
    }
    if f.coeffs()[0].is_zero() {
        return false;
    }
    let df = f.derivative();
    let full = (1u128 << n) | 1;
    let mut allowed = !0u128;
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < SIEVE_PRIMES && p < PRIME_CEILING {
        p += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let fp = f.reduce_mod(p);
        // squarefree mod p
        if !fp.gcd(&df.reduce_mod(p)).is_one() {
            continue;
        }
        tried += 1;
        let factors: Vec<FpPoly> = factor_fp(&fp).into_iter().map(|(g, _)| g).collect();
        if factors.len() == 1 {
            return true;
        }
        let degs: Vec<usize> = factors.iter().map(FpPoly::degree).collect();
        allowed &= degree_pattern(&degs);
        if allowed & ((1u128 << (n + 1)) - 1) == full {
            return true;
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    match best {
        Some((p, factors)) => zassenhaus_irreducible(f, p, &factors, allowed),
        // squarefree modulo no small prime: f has a repeated factor
        None => false,
    }
}

fn zassenhaus_irreducible(f: &IntPoly, p: u64, factors: &[FpPoly], allowed: u128) -> bool {
    let n = f.degree();
    let bound = BigInt::from(2u32).pow(n as u32) * f.norm1();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= &bound * 2 {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, factors, p, k);
    let r = lifted.len();
    for mask in 1u64..(1u64 << r) {
        let size = mask.count_ones() as usize;
        if size * 2 > r {
            continue;
        }
        let deg: usize = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| lifted[i].degree())
            .sum();
        if allowed >> deg & 1 == 0 {
            continue;
        }
        let prod = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .fold(IntPoly::one(), |acc, i| {
                reduce_coeffs(&acc.mul(&lifted[i]), &pk)
            });
        let cand = IntPoly::new(prod.coeffs().iter().map(|c| symmetric(c, &pk)).collect());
        if cand.coeff(0).is_zero() || !(f.coeff(0) % cand.coeff(0)).is_zero() {
            continue;
        }
        let (_, rem) = f.divrem_monic(&cand);
        if rem.is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn small_cases() {
        assert!(is_irreducible(&p(&[-2, 0, 1])));
        assert!(!is_irreducible(&p(&[-4, 0, 1])));
        assert!(is_irreducible(&p(&[-1, 1, 0, 1])));
        assert!(!is_irreducible(&p(&[0, 1, 1])));
        assert!(!is_irreducible(&p(&[1, 2, 1])));
    }

    #[test]
    fn swinnerton_dyer_needs_recombination() {
        // x^4 - 10x^2 + 1 splits modulo every prime
        assert!(is_irreducible(&p(&[1, 0, -10, 0, 1])));
        // (x^2 + 1)(x^2 - 3x + 5): no rational roots but reducible
        assert!(!is_irreducible(&p(&[1, 0, 1]).mul(&p(&[5, -3, 1]))));
        // product of two irreducible cubics
        let f = p(&[-1, 1, 0, 1]).mul(&p(&[-2, 0, 0, 1]));
        assert!(!is_irreducible(&f));
    }
}
