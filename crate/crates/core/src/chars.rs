//! Explicit linear characters of SL2 over `Z/2`, `Z/3`, `Z/4` and the dual numbers.

use std::fmt;
use std::ops::{Mul, Neg};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::finring::{hom_reduce, Ring, RingElement, RingHom};
use crate::sl2core::{Mat2, QuadForm};

/// A root of unity `exp(2 pi i * num/den)` kept as a reduced fraction in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnityRoot {
    num: u64,
    den: u64,
}

impl UnityRoot {
    pub const ONE: UnityRoot = UnityRoot { num: 0, den: 1 };

    /// `exp(2 pi i * num/den)`.
    pub fn new(num: i64, den: u64) -> UnityRoot {
        assert!(den > 0, "zero denominator");
        let n = num.rem_euclid(den as i64) as u64;
        let g = n.gcd(&den);
        UnityRoot {
            num: n / g,
            den: den / g,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Multiplicative order of the root.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn pow(&self, k: i64) -> UnityRoot {
        let num = (self.num as i128 * k as i128).rem_euclid(self.den as i128) as i64;
        UnityRoot::new(num, self.den)
    }

    /// `1`, `-1`, `i` or `-i` when the order divides 4.
    pub fn symbol(&self) -> Option<&'static str> {
        match (self.num, self.den) {
            (0, 1) => Some("1"),
            (1, 2) => Some("-1"),
            (1, 4) => Some("i"),
            (3, 4) => Some("-i"),
            _ => None,
        }
    }
}

impl fmt::Display for UnityRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Multiplication of roots, i.e. addition of exponents.
impl Mul for UnityRoot {
    type Output = UnityRoot;
    fn mul(self, rhs: UnityRoot) -> UnityRoot {
        let den = self.den.lcm(&rhs.den);
        let num = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        UnityRoot::new(num as i64, den)
    }
}

/// Complex conjugate (inverse).
impl Neg for UnityRoot {
    type Output = UnityRoot;
    fn neg(self) -> UnityRoot {
        self.pow(-1)
    }
}

impl std::iter::Product for UnityRoot {
    fn product<I: Iterator<Item = UnityRoot>>(iter: I) -> UnityRoot {
        iter.fold(UnityRoot::ONE, |a, b| a * b)
    }
}

fn level_of(a: &Mat2) -> Result<u64> {
    match a.ring() {
        Ring::IntegersMod(n @ 2..=4) => Ok(n),
        Ring::IntegersMod(n) => Err(Error::UnsupportedModulus(n)),
        r @ Ring::DualF2 => Err(Error::KindMismatch {
            kind: "eps_N",
            ring: r,
        }),
    }
}

fn is_plus_minus_one(a: &Mat2) -> bool {
    let r = a.ring();
    *a == Mat2::identity(r) || *a == Mat2::scalar(-r.one())
}

/// The class function `sigma_N` on SL2(Z/N), N in {2, 3, 4}.
pub fn sigma(a: &Mat2) -> Result<RingElement> {
    let n = level_of(a)?;
    let r = a.ring();
    let congruent_one_mod_2 = a.codes().iter().zip([1, 0, 0, 1]).all(|(x, e)| x % 2 == e);
    if is_plus_minus_one(a) || (n == 4 && congruent_one_mod_2) {
        return Ok(r.zero());
    }
    let t = a.trace();
    if t * t != r.from_int(4) {
        return Ok(r.one());
    }
    Ok(if a.c().is_unit() { a.c() } else { -a.b() })
}

/// The sign `s` on SL2(Z/4): `-1` exactly when `A = 1 + 2[[a, b], [c, *]]` with `a + b + c` odd.
pub fn s4(a: &Mat2) -> Result<i8> {
    if a.ring() != Ring::IntegersMod(4) {
        return Err(Error::KindMismatch {
            kind: "s4",
            ring: a.ring(),
        });
    }
    let [x, b, c, d] = a.codes();
    if x % 2 != 1 || b % 2 != 0 || c % 2 != 0 || d % 2 != 1 {
        return Ok(1);
    }
    let parity = (x - 1) / 2 + b / 2 + c / 2;
    Ok(if parity % 2 == 1 { -1 } else { 1 })
}

/// `eps_N` on SL2(Z/N) for N in {2, 3, 4}.
pub fn eps_n(a: &Mat2) -> Result<UnityRoot> {
    let n = level_of(a)?;
    let sig = sigma(a)?.value() as i64;
    let tr = a.trace().value() as i64;
    Ok(match n {
        2 => UnityRoot::new((tr + 1) * sig, 2),
        3 => UnityRoot::new(tr * sig, 3),
        _ => {
            let sign = if s4(a)? == -1 {
                UnityRoot::new(1, 2)
            } else {
                UnityRoot::ONE
            };
            sign * UnityRoot::new((tr + 1) * sig, 4)
        }
    })
}

/// Splits `A` over the dual numbers as `A0 (1 + alpha B)`.
///
/// `A0` has entries in `{0, 1}` (so lies in SL2(F2)) and `B` is a
/// trace-zero matrix over `Z/2`.
pub fn eps4prime_decompose(a: &Mat2) -> Result<(Mat2, Mat2)> {
    if a.ring() != Ring::DualF2 {
        return Err(Error::KindMismatch {
            kind: "eps4'",
            ring: a.ring(),
        });
    }
    if !a.is_sl2() {
        return Err(Error::NotInSl2(a.det().to_string()));
    }
    let f2 = Ring::IntegersMod(2);
    let codes = a.codes();
    let low = Mat2::from_codes(f2, codes.map(|c| c & 1));
    let high = Mat2::from_codes(f2, codes.map(|c| c >> 1));
    let b = low.inv()? * high;
    let a0 = Mat2::from_codes(Ring::DualF2, low.codes());
    Ok((a0, b))
}

/// The exceptional character `eps4'` on SL2(F2[t]/(t^2)).
pub fn eps4prime(a: &Mat2) -> Result<UnityRoot> {
    let (_, b) = eps4prime_decompose(a)?;
    let [x, y, z, _] = b.codes();
    Ok(UnityRoot::new((x + y + z) as i64, 2))
}

/// The invariant `I` on binary quadratic forms over Z/N with `sigma_N(A) = I(f_A)`.
///
/// The final branch returns `Q(1,0)` when it is a unit and `Q(0,1)` otherwise.
pub fn invariant_i(q: &QuadForm) -> Result<RingElement> {
    let r = q.ring();
    let n = match r {
        Ring::IntegersMod(n @ 2..=4) => n,
        Ring::IntegersMod(n) => return Err(Error::UnsupportedModulus(n)),
        Ring::DualF2 => return Err(Error::KindMismatch { kind: "I", ring: r }),
    };
    let all_even = [q.q20, q.q11, q.q02].iter().all(|x| x.value() % 2 == 0);
    if q.is_zero() || (n == 4 && all_even) {
        return Ok(r.zero());
    }
    if !q.disc().is_zero() {
        return Ok(r.one());
    }
    let at_x = q.eval(r.one(), r.zero());
    Ok(if at_x.is_unit() {
        at_x
    } else {
        q.eval(r.zero(), r.one())
    })
}

/// The formula a [`CharacterSpec`] evaluates after reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharKind {
    Eps2,
    Eps3,
    Eps4,
    Eps4Prime,
    Trivial,
}

impl CharKind {
    pub fn order(&self) -> u64 {
        match self {
            CharKind::Eps2 | CharKind::Eps4Prime => 2,
            CharKind::Eps3 => 3,
            CharKind::Eps4 => 4,
            CharKind::Trivial => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CharKind::Eps2 => "eps2",
            CharKind::Eps3 => "eps3",
            CharKind::Eps4 => "eps4",
            CharKind::Eps4Prime => "eps4p",
            CharKind::Trivial => "trivial",
        }
    }

    fn target(&self) -> Option<Ring> {
        match self {
            CharKind::Eps2 => Some(Ring::IntegersMod(2)),
            CharKind::Eps3 => Some(Ring::IntegersMod(3)),
            CharKind::Eps4 => Some(Ring::IntegersMod(4)),
            CharKind::Eps4Prime => Some(Ring::DualF2),
            CharKind::Trivial => None,
        }
    }
}

impl std::str::FromStr for CharKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "eps2" => CharKind::Eps2,
            "eps3" => CharKind::Eps3,
            "eps4" => CharKind::Eps4,
            "eps4p" | "eps4prime" => CharKind::Eps4Prime,
            "trivial" => CharKind::Trivial,
            other => return Err(format!("unknown character kind '{other}'")),
        })
    }
}

/// A character `kind ∘ red` of SL2 over `source`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharacterSpec {
    kind: CharKind,
    reduction: RingHom,
}

impl CharacterSpec {
    /// Builds `kind ∘ red` with the canonical reduction from `source`.
    pub fn new(source: Ring, kind: CharKind) -> Result<CharacterSpec> {
        let target = kind.target().unwrap_or(source);
        let reduction = hom_reduce(source, target).map_err(|_| Error::KindMismatch {
            kind: kind.name(),
            ring: source,
        })?;
        Ok(CharacterSpec { kind, reduction })
    }

    pub fn trivial(source: Ring) -> CharacterSpec {
        CharacterSpec {
            kind: CharKind::Trivial,
            reduction: RingHom::identity(source),
        }
    }

    pub fn kind(&self) -> CharKind {
        self.kind
    }

    pub fn source(&self) -> Ring {
        self.reduction.source()
    }

    pub fn reduction(&self) -> RingHom {
        self.reduction
    }

    pub fn order(&self) -> u64 {
        self.kind.order()
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} o ({} -> {})",
            self.kind.name(),
            self.source(),
            self.reduction.target()
        )
    }
}

pub fn char_eval(spec: &CharacterSpec, a: &Mat2) -> Result<UnityRoot> {
    if a.ring() != spec.source() {
        return Err(Error::MixedRings(spec.source(), a.ring()));
    }
    let reduced = a.map_entries(&spec.reduction);
    match spec.kind {
        CharKind::Trivial => Ok(UnityRoot::ONE),
        CharKind::Eps4Prime => eps4prime(&reduced),
        _ => eps_n(&reduced),
    }
}

/// Generators of the congruence character group of SL2(Z/N).
pub fn zmod_character_group(n: u64) -> Result<Vec<CharacterSpec>> {
    let ring = Ring::integers_mod(n)?;
    let mut gens = Vec::new();
    if n.is_multiple_of(3) {
        gens.push(CharacterSpec::new(ring, CharKind::Eps3)?);
    }
    if n.is_multiple_of(4) {
        gens.push(CharacterSpec::new(ring, CharKind::Eps4)?);
    } else if n.is_multiple_of(2) {
        gens.push(CharacterSpec::new(ring, CharKind::Eps2)?);
    }
    Ok(gens)
}

/// Every product of powers of the generators, as value tables over `elements`.
///
/// The result has one entry per exponent tuple; duplicates are kept so callers
/// can check independence by comparing against the set size.
pub fn character_products(
    gens: &[CharacterSpec],
    elements: &[Mat2],
) -> Result<Vec<Vec<UnityRoot>>> {
    let tables: Vec<Vec<UnityRoot>> = gens
        .iter()
        .map(|g| elements.iter().map(|a| char_eval(g, a)).collect())
        .collect::<Result<_>>()?;
    let mut out = vec![vec![UnityRoot::ONE; elements.len()]];
    for (g, table) in gens.iter().zip(&tables) {
        let mut next = Vec::with_capacity(out.len() * g.order() as usize);
        for base in &out {
            for k in 0..g.order() as i64 {
                next.push(base.iter().zip(table).map(|(b, v)| *b * v.pow(k)).collect());
            }
        }
        out = next;
    }
    Ok(out)
}
