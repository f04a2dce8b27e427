//! Finite commutative rings used as matrix-entry domains.
//!
//! Two kinds are first-class: the residue rings `Z/NZ` and the dual numbers
//! `F2[t]/(t^2)`. Products of rings are handled through CRT component lists
//! rather than a dedicated product type.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite commutative ring with identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    IntegersMod(u64),
    /// `F2[t]/(t^2)`; elements are encoded as `c0 + 2*c1` for `c0 + c1*alpha`.
    DualF2,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::IntegersMod(n) => write!(f, "Z/{n}"),
            Ring::DualF2 => write!(f, "F2[t]/(t^2)"),
        }
    }
}

impl Ring {
    /// `Z/NZ`, rejecting `N < 2`.
    pub fn integers_mod(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Ring::IntegersMod(n))
    }

    pub fn dual_f2() -> Ring {
        Ring::DualF2
    }

    pub fn size(&self) -> u64 {
        match *self {
            Ring::IntegersMod(n) => n,
            Ring::DualF2 => 4,
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            ring: *self,
            value: 0,
        }
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            ring: *self,
            value: 1,
        }
    }

    /// The nilpotent generator of the dual numbers.
    pub fn alpha(&self) -> Option<RingElement> {
        match self {
            Ring::DualF2 => Some(RingElement {
                ring: *self,
                value: 2,
            }),
            Ring::IntegersMod(_) => None,
        }
    }

    /// Element with the given canonical code, reduced for `Z/N`.
    ///
    /// For the dual numbers the code is `c0 + 2*c1` and must be below 4.
    pub fn element(&self, code: u64) -> RingElement {
        match *self {
            Ring::IntegersMod(n) => RingElement {
                ring: *self,
                value: code % n,
            },
            Ring::DualF2 => {
                assert!(code < 4, "dual number code out of range: {code}");
                RingElement {
                    ring: *self,
                    value: code,
                }
            }
        }
    }

    /// Image of an integer under the unique ring map from `Z`.
    pub fn from_int(&self, x: i64) -> RingElement {
        match *self {
            Ring::IntegersMod(n) => RingElement {
                ring: *self,
                value: x.rem_euclid(n as i64) as u64,
            },
            Ring::DualF2 => RingElement {
                ring: *self,
                value: x.rem_euclid(2) as u64,
            },
        }
    }

    /// All elements in ascending canonical order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size()).map(move |v| RingElement {
            ring: *self,
            value: v,
        })
    }

    pub fn units(&self) -> impl Iterator<Item = RingElement> + '_ {
        self.elements().filter(|x| x.is_unit())
    }

    /// `Some((p, k))` when the ring is `Z/p^k`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match *self {
            Ring::IntegersMod(n) => {
                let factors = factor_u64(n);
                (factors.len() == 1).then(|| factors[0])
            }
            Ring::DualF2 => None,
        }
    }

    pub fn is_local(&self) -> bool {
        matches!(self, Ring::DualF2) || self.prime_power().is_some()
    }
}

/// An element of a [`Ring`] in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    ring: Ring,
    value: u64,
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring {
            Ring::IntegersMod(_) => write!(f, "{}", self.value),
            Ring::DualF2 => f.write_str(match self.value {
                0 => "0",
                1 => "1",
                2 => "a",
                _ => "1+a",
            }),
        }
    }
}

impl RingElement {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Canonical code: the residue in `[0, N)` or `c0 + 2*c1`.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    pub fn is_unit(&self) -> bool {
        match self.ring {
            Ring::IntegersMod(n) => self.value.gcd(&n) == 1,
            Ring::DualF2 => self.value & 1 == 1,
        }
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let value = match self.ring {
            Ring::IntegersMod(n) => (self.value + other.value) % n,
            Ring::DualF2 => self.value ^ other.value,
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let value = match self.ring {
            Ring::IntegersMod(n) => ((self.value as u128 * other.value as u128) % n as u128) as u64,
            Ring::DualF2 => {
                let (a0, a1) = (self.value & 1, self.value >> 1);
                let (b0, b1) = (other.value & 1, other.value >> 1);
                (a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1)
            }
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.checked_add(&-*other)
    }

    pub fn inv(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(format!("{self} in {}", self.ring)));
        }
        let value = match self.ring {
            Ring::IntegersMod(n) => {
                let egcd = (self.value as i128).extended_gcd(&(n as i128));
                egcd.x.rem_euclid(n as i128) as u64
            }
            // (1 + c*alpha)^-1 = 1 + c*alpha
            Ring::DualF2 => self.value,
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn pow(&self, mut exp: u64) -> RingElement {
        let mut base = *self;
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        self.checked_add(&rhs).expect("ring mismatch in addition")
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        self.checked_sub(&rhs)
            .expect("ring mismatch in subtraction")
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        self.checked_mul(&rhs)
            .expect("ring mismatch in multiplication")
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        let value = match self.ring {
            Ring::IntegersMod(n) => (n - self.value) % n,
            Ring::DualF2 => self.value,
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }
}

/// A canonical surjective ring homomorphism between supported rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingHom {
    source: Ring,
    target: Ring,
}

impl RingHom {
    pub fn source(&self) -> Ring {
        self.source
    }

    pub fn target(&self) -> Ring {
        self.target
    }

    pub fn identity(ring: Ring) -> RingHom {
        RingHom {
            source: ring,
            target: ring,
        }
    }

    /// Panics if `x` is not in the source ring.
    pub fn apply(&self, x: RingElement) -> RingElement {
        assert_eq!(
            x.ring, self.source,
            "element outside the homomorphism's source"
        );
        let value = match (self.source, self.target) {
            _ if self.source == self.target => x.value,
            (Ring::IntegersMod(_), Ring::IntegersMod(m)) => x.value % m,
            (Ring::DualF2, _) => x.value & 1,
            _ => unreachable!("RingHom built outside hom_reduce"),
        };
        RingElement {
            ring: self.target,
            value,
        }
    }
}

/// The canonical reduction `source -> target`, when one exists.
pub fn hom_reduce(source: Ring, target: Ring) -> Result<RingHom> {
    let ok = match (source, target) {
        _ if source == target => true,
        (Ring::IntegersMod(n), Ring::IntegersMod(m)) => n % m == 0,
        (Ring::DualF2, Ring::IntegersMod(2)) => true,
        _ => false,
    };
    if ok {
        Ok(RingHom { source, target })
    } else {
        Err(Error::NoCanonicalHom {
            source_ring: source,
            target,
        })
    }
}

/// Prime-power components of `Z/N` with their projections, by ascending prime.
pub fn crt_decompose(n: u64) -> Result<Vec<(u64, RingHom)>> {
    let source = Ring::integers_mod(n)?;
    factor_u64(n)
        .into_iter()
        .map(|(p, k)| {
            let q = p.pow(k);
            Ok((q, hom_reduce(source, Ring::IntegersMod(q))?))
        })
        .collect()
}

/// Which case of the unit-square classification a finite local ring falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitSquareCase {
    /// Residue field `F2`.
    FieldF2,
    /// Residue field `F3`.
    FieldF3,
    /// `Z/2^n` with `n` in {2, 3}.
    TwoPower {
        n: u32,
    },
    DualF2,
    /// Some unit squares to something other than 1.
    NotExponent2,
}

pub fn classify_unit_square(ring: Ring) -> Result<UnitSquareCase> {
    if !ring.is_local() {
        return Err(Error::NotLocal(ring));
    }
    if ring.units().any(|u| !(u * u).is_one()) {
        return Ok(UnitSquareCase::NotExponent2);
    }
    Ok(match ring {
        Ring::DualF2 => UnitSquareCase::DualF2,
        Ring::IntegersMod(_) => match ring.prime_power() {
            Some((2, 1)) => UnitSquareCase::FieldF2,
            Some((3, 1)) => UnitSquareCase::FieldF3,
            Some((2, n)) => UnitSquareCase::TwoPower { n },
            other => unreachable!("exponent-2 unit group for Z/p^k with (p,k) = {other:?}"),
        },
    })
}

/// Trial-division factorization into (prime, exponent), ascending.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    n >= 2 && factor_u64(n) == [(n, 1)]
}
