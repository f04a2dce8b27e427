//! Exhaustive checks of the character formulas against brute-force group theory.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::chars::{
    character_products, eps4prime, eps_n, invariant_i, sigma, zmod_character_group, CharKind,
    CharacterSpec, UnityRoot,
};
use crate::error::{Error, Result};
use crate::finring::{classify_unit_square, crt_decompose, hom_reduce, Ring, UnitSquareCase};
use crate::oracle::{
    all_linear_characters, closure, commutator_subgroup, elements_of_order,
    elements_of_order_dividing, kernel_of_reduction, sl2_group, verify_semidirect, FiniteGroup,
};
use crate::sl2core::{
    elementary_decomposition, enumerate_sl2, evaluate_word, expand_diagonal, gen_e, gen_s, gen_t,
    quadratic_form, Mat2, DEFAULT_RING_BOUND,
};

/// Moduli checked by the oracle-equivalence suite when none are given.
pub const ORACLE_MODULI: [u64; 7] = [2, 3, 4, 5, 6, 8, 12];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Formulas,
    Decompositions,
    Lemmas,
    OracleEquivalence,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = [
        "formulas",
        "decompositions",
        "lemmas",
        "oracle-equivalence",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        match s {
            "formulas" => Ok(Suite::Formulas),
            "decompositions" => Ok(Suite::Decompositions),
            "lemmas" => Ok(Suite::Lemmas),
            "oracle-equivalence" => Ok(Suite::OracleEquivalence),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite `{other}` (expected one of {})",
                Suite::NAMES.join(", ")
            )),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Formulas,
            Suite::Decompositions,
            Suite::Lemmas,
            Suite::OracleEquivalence,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

/// Options for [`run_suite`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Moduli for the oracle-equivalence suite; the dual numbers are added
    /// when this is left at the default.
    pub oracle_moduli: Vec<u64>,
    pub include_dual: bool,
    /// Largest `|SL2(Z/N)|` the oracle may build.
    pub max_group_size: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            oracle_moduli: ORACLE_MODULI.to_vec(),
            include_dual: true,
            max_group_size: 20_000,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    match suite {
        Suite::Formulas => formulas(),
        Suite::Decompositions => decompositions(),
        Suite::Lemmas => lemmas(),
        Suite::OracleEquivalence => oracle_equivalence(opts),
        Suite::All => {
            let mut out = formulas()?;
            out.extend(decompositions()?);
            out.extend(lemmas()?);
            out.extend(oracle_equivalence(opts)?);
            Ok(out)
        }
    }
}

/// `|SL2(Z/N)| = N^3 prod (1 - p^-2)`.
pub fn sl2_order(n: u64) -> u64 {
    let mut order = n * n * n;
    for (p, _) in crate::finring::factor_u64(n) {
        order = order / (p * p) * (p * p - 1);
    }
    order
}

fn zmod(n: u64) -> Ring {
    Ring::integers_mod(n).expect("modulus at least 2")
}

fn eval_fn(ring: Ring) -> fn(&Mat2) -> Result<UnityRoot> {
    if ring == Ring::DualF2 {
        eps4prime
    } else {
        eps_n
    }
}

fn formula_name(ring: Ring) -> String {
    match ring {
        Ring::DualF2 => "eps4p".to_string(),
        Ring::IntegersMod(n) => format!("eps{n}"),
    }
}

/// `chi(AB) = chi(A) chi(B)` over every pair.
pub fn homomorphism_check(ring: Ring) -> Result<Check> {
    let f = eval_fn(ring);
    let g = enumerate_sl2(ring)?;
    let vals: Vec<UnityRoot> = g.iter().map(f).collect::<Result<_>>()?;
    let mut bad = 0usize;
    for (a, va) in g.iter().zip(&vals) {
        for (b, vb) in g.iter().zip(&vals) {
            if f(&a.checked_mul(b)?)? != *va * *vb {
                bad += 1;
            }
        }
    }
    let pairs = g.len() * g.len();
    Ok(Check::new(
        format!("{} is a homomorphism on SL2({ring})", formula_name(ring)),
        bad == 0,
        format!("{pairs} pairs, {bad} failures"),
    ))
}

/// `chi(B A B^-1) = chi(A)`, and the same for `sigma` on `Z/N`.
pub fn class_function_check(ring: Ring) -> Result<Check> {
    let f = eval_fn(ring);
    let g = enumerate_sl2(ring)?;
    let mut bad = 0usize;
    for a in &g {
        let va = f(a)?;
        let sa = if ring == Ring::DualF2 {
            None
        } else {
            Some(sigma(a)?)
        };
        for b in &g {
            let conj = b.checked_mul(a)?.checked_mul(&b.inv()?)?;
            if f(&conj)? != va {
                bad += 1;
            }
            if let Some(s) = sa {
                if sigma(&conj)? != s {
                    bad += 1;
                }
            }
        }
    }
    Ok(Check::new(
        format!("{} is a class function on SL2({ring})", formula_name(ring)),
        bad == 0,
        format!("{} conjugations, {bad} failures", g.len() * g.len()),
    ))
}

/// `sigma(A) = I(f_A)`.
pub fn sigma_invariant_check(n: u64) -> Result<Check> {
    let g = enumerate_sl2(zmod(n))?;
    let mut bad = 0;
    for a in &g {
        if sigma(a)? != invariant_i(&quadratic_form(a))? {
            bad += 1;
        }
    }
    Ok(Check::new(
        format!("sigma = I(f_A) on SL2(Z/{n})"),
        bad == 0,
        format!("{} matrices, {bad} failures", g.len()),
    ))
}

fn formulas() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let rings = [zmod(2), zmod(3), zmod(4), Ring::DualF2];
    for ring in rings {
        out.push(homomorphism_check(ring)?);
    }
    for ring in rings {
        out.push(class_function_check(ring)?);
    }
    for n in [2, 3, 4] {
        out.push(sigma_invariant_check(n)?);
    }
    for n in [2u64, 3, 4] {
        let orders: BTreeSet<u64> = enumerate_sl2(zmod(n))?
            .iter()
            .map(|a| eps_n(a).map(|v| v.order()))
            .collect::<Result<_>>()?;
        let divisors: BTreeSet<u64> = (1..=n).filter(|d| n % d == 0).collect();
        out.push(Check::new(
            format!("eps{n} realizes orders exactly the divisors of {n}"),
            orders == divisors,
            format!("{orders:?}"),
        ));
    }
    let values: BTreeSet<UnityRoot> = enumerate_sl2(Ring::DualF2)?
        .iter()
        .map(eps4prime)
        .collect::<Result<_>>()?;
    out.push(Check::new(
        "eps4p takes exactly the values +1, -1",
        values == BTreeSet::from([UnityRoot::ONE, UnityRoot::new(1, 2)]),
        format!("{} values", values.len()),
    ));
    out.extend(generator_value_checks()?);
    Ok(out)
}

/// Values on `T` and `S`, and `chi(S) = chi(T)^-3`, `chi(S)^4 = 1`.
pub fn generator_value_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, expected) in [
        (2u64, UnityRoot::new(1, 2)),
        (3, UnityRoot::new(1, 3)),
        (4, UnityRoot::new(1, 4)),
    ] {
        let ring = zmod(n);
        let t = eps_n(&gen_t(ring.one()))?;
        let s = eps_n(&gen_s(ring))?;
        out.push(Check::new(
            format!("eps{n}(T) = {expected}"),
            t == expected,
            format!("got {t}"),
        ));
        out.push(Check::new(
            format!("eps{n}(S) = eps{n}(T)^-3 and eps{n}(S)^4 = 1"),
            s == t.pow(-3) && s.pow(4).is_one(),
            format!("eps{n}(S) = {s}"),
        ));
    }
    Ok(out)
}

fn group(ring: Ring) -> Result<FiniteGroup<Mat2>> {
    sl2_group(ring, DEFAULT_RING_BOUND.max(ring.size()))
}

fn decompositions() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, expected) in [(2u64, 3usize), (3, 8), (4, 12)] {
        let ring = zmod(n);
        let g = group(ring)?;
        let k = commutator_subgroup(&g)?;
        out.push(Check::new(
            format!("[G{n}, G{n}] has order {expected}"),
            k.order() == expected,
            format!("order {}", k.order()),
        ));
        let t = closure(&[gen_t(ring.one())], g.order())?;
        out.push(Check::new(
            format!("G{n} = <T> x| K{n}"),
            verify_semidirect(&g, &t, &k),
            "",
        ));
    }
    let dual = group(Ring::DualF2)?;
    let base: Vec<Mat2> = enumerate_sl2(zmod(2))?
        .iter()
        .map(|a| Mat2::from_codes(Ring::DualF2, a.codes()))
        .collect();
    let h = closure(&base, dual.order())?;
    let gamma = kernel_of_reduction(&dual, &hom_reduce(Ring::DualF2, zmod(2))?)?;
    out.push(Check::new(
        "SL2(F2[a]) = SL2(F2) x| Gamma(a)",
        verify_semidirect(&dual, &h, &gamma) && gamma.order() == 8,
        format!("|Gamma(a)| = {}", gamma.order()),
    ));
    let s = closure(&[gen_s(zmod(3))], 24)?;
    let g3 = group(zmod(3))?;
    let k3 = commutator_subgroup(&g3)?;
    out.push(Check::new(
        "G3 is not <S> x| K3",
        !verify_semidirect(&g3, &s, &k3),
        format!("|<S>| = {}", s.order()),
    ));

    let div8: BTreeSet<Mat2> = elements_of_order_dividing(&g3, 8).into_iter().collect();
    let k3_set: BTreeSet<Mat2> = k3.elements().iter().copied().collect();
    out.push(Check::new(
        "K3 = elements of order dividing 8",
        div8 == k3_set && div8.len() == 8,
        format!("{} elements", div8.len()),
    ));
    let g4 = group(zmod(4))?;
    let order3 = elements_of_order(&g4, 3);
    let minus_one = zmod(4).from_int(-1);
    out.push(Check::new(
        "G4 has 8 elements of order 3, all of trace -1",
        order3.len() == 8 && order3.iter().all(|a| a.trace() == minus_one),
        format!("{} elements", order3.len()),
    ));
    let gamma2 = kernel_of_reduction(&g4, &hom_reduce(zmod(4), zmod(2))?)?;
    out.push(Check::new(
        "Gamma(2) in SL2(Z/4) has order 8",
        gamma2.order() == 8,
        format!("order {}", gamma2.order()),
    ));
    Ok(out)
}

/// Rings used for the identity and decomposition round-trip checks.
fn lemma_rings() -> Vec<Ring> {
    let mut rings: Vec<Ring> = (2..=12).map(zmod).collect();
    rings.push(Ring::DualF2);
    rings
}

/// `T(b u^2) = E(u) T(b) E(u^-1)` for every `b` and unit `u`.
pub fn annihilator_identity_check(ring: Ring) -> Result<Check> {
    let mut bad = 0;
    let mut count = 0;
    for b in ring.elements() {
        for u in ring.units() {
            count += 1;
            let lhs = gen_t(b * u * u);
            let rhs = gen_e(u)?
                .checked_mul(&gen_t(b))?
                .checked_mul(&gen_e(u.inv()?)?)?;
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    Ok(Check::new(
        format!("T(bu^2) = E(u)T(b)E(1/u) over {ring}"),
        bad == 0,
        format!("{count} pairs, {bad} failures"),
    ))
}

/// Every element of `SL2(ring)` equals the product of its elementary word,
/// before and after expanding the diagonal factors.
pub fn decomposition_roundtrip_check(ring: Ring) -> Result<Check> {
    let g = enumerate_sl2(ring)?;
    let mut bad = 0;
    for a in &g {
        let word = elementary_decomposition(a)?;
        if evaluate_word(ring, &word) != *a || evaluate_word(ring, &expand_diagonal(&word)) != *a {
            bad += 1;
        }
    }
    Ok(Check::new(
        format!("elementary decomposition round-trips on SL2({ring})"),
        bad == 0,
        format!("{} matrices, {bad} failures", g.len()),
    ))
}

fn lemmas() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for ring in lemma_rings() {
        out.push(annihilator_identity_check(ring)?);
    }
    for ring in [zmod(4), zmod(9), Ring::DualF2] {
        out.push(decomposition_roundtrip_check(ring)?);
    }

    let mut bad = Vec::new();
    for n in 2..=60u64 {
        let parts = crt_decompose(n)?;
        let image = |x: u64| -> Vec<u64> {
            parts
                .iter()
                .map(|(_, h)| h.apply(zmod(n).element(x)).value())
                .collect()
        };
        let distinct: BTreeSet<Vec<u64>> = (0..n).map(image).collect();
        let ring_ok = (0..n).all(|x| {
            (0..n).all(|y| {
                let (a, b) = (zmod(n).element(x), zmod(n).element(y));
                parts.iter().all(|(_, h)| {
                    h.apply(a + b) == h.apply(a) + h.apply(b)
                        && h.apply(a * b) == h.apply(a) * h.apply(b)
                })
            })
        });
        if distinct.len() != n as usize || !ring_ok {
            bad.push(n);
        }
    }
    out.push(Check::new(
        "CRT decomposition is a ring isomorphism for N <= 60",
        bad.is_empty(),
        format!("failures {bad:?}"),
    ));

    let mut mismatched = Vec::new();
    let local: Vec<Ring> = (2..=64)
        .filter(|&n| zmod(n).is_local())
        .map(zmod)
        .chain([Ring::DualF2])
        .collect();
    for ring in local {
        let exponent2 = ring.units().all(|u| (u * u).is_one());
        let case = classify_unit_square(ring)?;
        if exponent2 == (case == UnitSquareCase::NotExponent2) {
            mismatched.push(ring.to_string());
        }
    }
    out.push(Check::new(
        "unit-square classification agrees with exhaustion",
        mismatched.is_empty(),
        format!("mismatches {mismatched:?}"),
    ));

    for (src, dst) in [(zmod(4), zmod(2)), (Ring::DualF2, zmod(2))] {
        let h = hom_reduce(src, dst)?;
        let g = enumerate_sl2(src)?;
        let ok = g.iter().all(|a| {
            g.iter().all(|b| {
                a.checked_mul(b).map(|ab| ab.map_entries(&h)).ok()
                    == a.map_entries(&h).checked_mul(&b.map_entries(&h)).ok()
            })
        });
        out.push(Check::new(
            format!("reduction {src} -> {dst} is a homomorphism"),
            ok,
            "",
        ));
    }
    Ok(out)
}

/// Brute-force characters of `SL2(ring)` compared with the predicted generators.
pub fn oracle_equivalence_check(ring: Ring) -> Result<(Check, usize)> {
    let g = group(ring)?;
    let brute: BTreeSet<Vec<UnityRoot>> = all_linear_characters(&g)?.into_iter().collect();
    let gens = match ring {
        Ring::IntegersMod(n) => zmod_character_group(n)?,
        Ring::DualF2 => vec![
            CharacterSpec::new(ring, CharKind::Eps2)?,
            CharacterSpec::new(ring, CharKind::Eps4Prime)?,
        ],
    };
    let products = character_products(&gens, g.elements())?;
    let predicted_count = products.len();
    let predicted: BTreeSet<Vec<UnityRoot>> = products.into_iter().collect();
    let names: Vec<&str> = gens.iter().map(|s| s.kind().name()).collect();
    let ok = predicted == brute && predicted.len() == predicted_count;
    Ok((
        Check::new(
            format!("characters of SL2({ring}) = <{}>", names.join(", ")),
            ok,
            format!(
                "{} characters found, {} predicted",
                brute.len(),
                predicted.len()
            ),
        ),
        brute.len(),
    ))
}

fn oracle_equivalence(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &n in &opts.oracle_moduli {
        let ring = Ring::integers_mod(n)?;
        let size = sl2_order(n) as usize;
        if size > opts.max_group_size {
            return Err(Error::GroupTooLarge {
                size,
                cap: opts.max_group_size,
            });
        }
        out.push(oracle_equivalence_check(ring)?.0);
    }
    if opts.include_dual {
        out.push(oracle_equivalence_check(Ring::DualF2)?.0);
    }
    Ok(out)
}
