//! Number fields `K = Q[x]/(f)`: splitting of small primes and the congruence
//! character group of `SL2(O_K)`.
//!
//! Splitting data is read off `f mod p` when Dedekind's criterion says
//! `Z[x]/(f)` is p-maximal, and otherwise computed in a Round 2 p-maximal
//! order.

mod irreducible;
mod linalg;
mod order;
mod poly;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::finring::is_prime_u64;

pub use num_bigint::BigInt;

pub use irreducible::is_irreducible;
pub use linalg::{det_bareiss, hnf};
pub use order::OrderBasis;
pub use poly::{factor_fp, factor_mod_p, FpPoly, IntPoly};

use order::{mul_k, round2_from, split_in_order, OrderData};

/// A prime ideal over `p`, by ramification index and residue degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePart {
    pub e: u32,
    pub f: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSplit {
    pub p: u64,
    /// Sorted by `(e, f)`.
    pub parts: Vec<PrimePart>,
}

impl PrimeSplit {
    pub fn from_pairs(p: u64, pairs: impl IntoIterator<Item = (u32, u32)>) -> PrimeSplit {
        let mut parts: Vec<PrimePart> =
            pairs.into_iter().map(|(e, f)| PrimePart { e, f }).collect();
        parts.sort();
        PrimeSplit { p, parts }
    }

    /// `sum e_i f_i`, which equals the field degree.
    pub fn degree(&self) -> u32 {
        self.parts.iter().map(|q| q.e * q.f).sum()
    }
}

impl fmt::Display for PrimeSplit {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|q| format!("({},{})", q.e, q.f))
            .collect();
        write!(out, "{}", parts.join(","))
    }
}

/// The congruence character group of `SL2(O_K)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharGroupDescriptor {
    /// Primes with residue field `F_3`.
    pub a: u32,
    /// Unramified primes with residue field `F_2`.
    pub q4: u32,
    /// Ramified primes with residue field `F_2`.
    pub r4: u32,
    /// Cyclic factors, sorted ascending.
    pub structure: Vec<u64>,
    pub order: u128,
    pub generators: Vec<String>,
    pub split2: PrimeSplit,
    pub split3: PrimeSplit,
}

impl CharGroupDescriptor {
    fn assemble(split2: PrimeSplit, split3: PrimeSplit) -> CharGroupDescriptor {
        let mut generators = Vec::new();
        let mut a = 0;
        for q in split3.parts.iter().filter(|q| q.f == 1) {
            a += 1;
            generators.push(format!("eps3[P{a}] (e={})", q.e));
        }
        let (mut q4, mut r4) = (0, 0);
        for q in split2.parts.iter().filter(|q| q.f == 1) {
            if q.e == 1 {
                q4 += 1;
                generators.push(format!("eps4[Q{q4}^2]"));
            } else {
                r4 += 1;
                generators.push(format!("eps2[R{r4}] (e={})", q.e));
                generators.push(format!("eps4p[R{r4}^2]"));
            }
        }
        let mut structure = vec![3; a as usize];
        structure.extend(std::iter::repeat_n(4, q4 as usize));
        structure.extend(std::iter::repeat_n(2, 2 * r4 as usize));
        structure.sort_unstable();
        let order = 3u128.pow(a) * 4u128.pow(q4 + r4);
        CharGroupDescriptor {
            a,
            q4,
            r4,
            structure,
            order,
            generators,
            split2,
            split3,
        }
    }
}

/// Discriminant of a monic polynomial, `(-1)^(n(n-1)/2) Res(f, f')`.
pub fn poly_discriminant(f: &IntPoly) -> Result<BigInt> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let n = f.degree();
    let res = resultant(f, &f.derivative());
    Ok(if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
        -res
    } else {
        res
    })
}

/// Sylvester resultant.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (m, n) = (f.degree(), g.degree());
    if m + n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![BigInt::zero(); size];
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            r[i + j] = c.clone();
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![BigInt::zero(); size];
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            r[i + j] = c.clone();
        }
        rows.push(r);
    }
    det_bareiss(rows)
}

fn validate_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn validate_field_poly(f: &IntPoly) -> Result<()> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    if f.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            min: 2,
            got: f.degree(),
        });
    }
    Ok(())
}

/// Dedekind's criterion: whether `p` does not divide `[O_K : Z[x]/(f)]`.
pub fn dedekind_is_pmaximal(f: &IntPoly, p: u64) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let factors = factor_mod_p(f, p)?;
    let g = factors
        .iter()
        .fold(FpPoly::one(p), |acc, (q, _)| acc.mul(q));
    let h = factors.iter().fold(FpPoly::one(p), |acc, (q, m)| {
        (1..*m).fold(acc, |acc, _| acc.mul(q))
    });
    let diff = f.sub(&g.lift().mul(&h.lift()));
    let pb = BigInt::from(p);
    let big_f = IntPoly::new(diff.coeffs().iter().map(|c| c / &pb).collect()).reduce_mod(p);
    Ok(big_f.gcd(&g).gcd(&h).is_one())
}

/// `(multiplicity, degree)` of each factor of `f mod p`.
pub fn kummer_dedekind(f: &IntPoly, p: u64) -> Result<PrimeSplit> {
    let factors = factor_mod_p(f, p)?;
    Ok(PrimeSplit::from_pairs(
        p,
        factors.iter().map(|(q, m)| (*m, q.degree() as u32)),
    ))
}

/// A p-maximal order containing `Z[x]/(f)`.
pub fn round2_pmaximal_order(f: &IntPoly, p: u64) -> Result<OrderBasis> {
    validate_field_poly(f)?;
    validate_prime(p)?;
    let disc = poly_discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::Reducible);
    }
    Ok(round2_from(f, p, OrderBasis::power_basis(f.degree()), &disc).basis)
}

/// Runs Round 2 again starting from `start`, which must be an order.
pub fn round2_rerun(f: &IntPoly, p: u64, start: &OrderBasis) -> Result<OrderBasis> {
    validate_field_poly(f)?;
    validate_prime(p)?;
    let disc = poly_discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::Reducible);
    }
    if OrderData::new(start.clone(), f).is_none() {
        return Err(Error::NotClosed);
    }
    Ok(round2_from(f, p, start.clone(), &disc).basis)
}

/// Splitting of `p`, always computed in a Round 2 p-maximal order.
pub fn prime_splitting_via_order(f: &IntPoly, p: u64) -> Result<PrimeSplit> {
    validate_field_poly(f)?;
    validate_prime(p)?;
    let disc = poly_discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::Reducible);
    }
    let data = round2_from(f, p, OrderBasis::power_basis(f.degree()), &disc);
    Ok(PrimeSplit::from_pairs(p, split_in_order(&data, p)))
}

/// Splitting of `p` in `Q[x]/(f)`; `f` must be irreducible.
pub fn prime_splitting(f: &IntPoly, p: u64) -> Result<PrimeSplit> {
    NumberField::new(f.clone())?.split(p)
}

pub fn character_group(f: &IntPoly) -> Result<CharGroupDescriptor> {
    NumberField::new(f.clone())?.character_group()
}

/// A number field given by a monic irreducible integer polynomial.
#[derive(Debug, Clone)]
pub struct NumberField {
    poly: IntPoly,
    disc: BigInt,
}

impl NumberField {
    pub fn new(poly: IntPoly) -> Result<NumberField> {
        let field = NumberField::new_trusted(poly)?;
        if !is_irreducible(&field.poly) {
            return Err(Error::Reducible);
        }
        Ok(field)
    }

    /// Skips the irreducibility proof; still rejects polynomials with repeated roots.
    pub fn new_trusted(poly: IntPoly) -> Result<NumberField> {
        validate_field_poly(&poly)?;
        let disc = poly_discriminant(&poly)?;
        if disc.is_zero() {
            return Err(Error::Reducible);
        }
        Ok(NumberField { poly, disc })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn poly_discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn split(&self, p: u64) -> Result<PrimeSplit> {
        validate_prime(p)?;
        if dedekind_is_pmaximal(&self.poly, p)? {
            kummer_dedekind(&self.poly, p)
        } else {
            let data = round2_from(
                &self.poly,
                p,
                OrderBasis::power_basis(self.degree()),
                &self.disc,
            );
            Ok(PrimeSplit::from_pairs(p, split_in_order(&data, p)))
        }
    }

    pub fn character_group(&self) -> Result<CharGroupDescriptor> {
        Ok(CharGroupDescriptor::assemble(
            self.split(2)?,
            self.split(3)?,
        ))
    }

    /// Norm of `u(x)` from `K` to `Q`.
    pub fn norm(&self, u: &IntPoly) -> BigInt {
        let r = u.rem_monic(&self.poly);
        if r.is_zero() {
            return BigInt::zero();
        }
        resultant(&self.poly, &r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitVerdict {
    /// The ideal is the unit ideal, so the abelianization is trivial.
    Trivial,
    /// The supplied units do not decide the question.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSquareIdeal {
    /// Index of the ideal in `Z[x]/(f)`; zero when the ideal has lower rank.
    pub norm: BigInt,
    /// HNF basis in power-basis coordinates.
    pub basis: Vec<Vec<BigInt>>,
    pub verdict: UnitVerdict,
}

/// The ideal of `Z[x]/(f)` generated by `u^2 - 1` for the supplied units.
///
/// Every element of `units` must have norm `+1` or `-1`.
pub fn unit_square_ideal(field: &NumberField, units: &[IntPoly]) -> Result<UnitSquareIdeal> {
    let n = field.degree();
    let f = field.poly();
    let mut gens = Vec::new();
    for u in units {
        let norm = field.norm(u);
        if norm.abs() != BigInt::one() {
            return Err(Error::NotAUnitOfOrder(u.to_string(), f.to_string()));
        }
        let w = u.mul(u).sub(&IntPoly::one()).rem_monic(f);
        if w.is_zero() {
            continue;
        }
        let wq: Vec<BigRational> = (0..n).map(|i| BigRational::from(w.coeff(i))).collect();
        let mut power: Vec<BigRational> = (0..n)
            .map(|i| BigRational::from_integer(BigInt::from(u8::from(i == 0))))
            .collect();
        let mut x = vec![BigRational::zero(); n];
        x[1] = BigRational::one();
        for _ in 0..n {
            let elt = mul_k(&wq, &power, f);
            gens.push(elt.iter().map(|c| c.to_integer()).collect::<Vec<BigInt>>());
            power = mul_k(&power, &x, f);
        }
    }
    let basis = hnf(gens);
    let norm = if basis.len() == n {
        det_bareiss(basis.clone()).abs()
    } else {
        BigInt::zero()
    };
    let verdict = if norm.is_one() {
        UnitVerdict::Trivial
    } else {
        UnitVerdict::Inconclusive
    };
    Ok(UnitSquareIdeal {
        norm,
        basis,
        verdict,
    })
}
