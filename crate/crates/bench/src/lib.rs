//! Shared inputs for the benchmarks.

use sl2chars::{IntPoly, Ring};

/// Rings whose SL2 groups are small enough to enumerate repeatedly.
pub fn small_rings() -> Vec<Ring> {
    let mut rings: Vec<Ring> = [2, 3, 4, 6, 8, 12]
        .iter()
        .map(|&n| Ring::integers_mod(n).unwrap())
        .collect();
    rings.push(Ring::dual_f2());
    rings
}

/// Irreducible polynomials of increasing degree, ascending coefficients.
pub const FIELDS: &[(&str, &[i64])] = &[
    ("x^2-x-18", &[-18, -1, 1]),
    ("x^3-19", &[-19, 0, 0, 1]),
    ("x^3+11x-36", &[-36, 11, 0, 1]),
    ("x^4-x^3+44x^2+4x+384", &[384, 4, 44, -1, 1]),
    ("x^6-6x^4+9x^2-3", &[-3, 0, 9, 0, -6, 0, 1]),
];

pub fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64(coeffs)
}
