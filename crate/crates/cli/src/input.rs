//! Parsing of matrices, polynomials and polynomial files.

use sl2chars::numfield::BigInt;
use sl2chars::{IntPoly, Mat2, Ring};

use crate::Failure;

/// One entry of a dual-number matrix: `0`, `1`, `a` or `1+a`.
fn dual_entry(tok: &str) -> Option<u64> {
    match tok.replace(' ', "").as_str() {
        "0" => Some(0),
        "1" => Some(1),
        "a" => Some(2),
        "1+a" | "a+1" => Some(3),
        _ => None,
    }
}

pub fn parse_matrix(ring: Ring, text: &str) -> Result<Mat2, Failure> {
    let toks: Vec<&str> = text.split(',').map(str::trim).collect();
    if toks.len() != 4 {
        return Err(Failure::usage(format!(
            "--matrix needs 4 comma-separated entries, got {}",
            toks.len()
        )));
    }
    match ring {
        Ring::DualF2 => {
            let mut codes = [0u64; 4];
            for (c, t) in codes.iter_mut().zip(&toks) {
                *c = dual_entry(t).ok_or_else(|| {
                    Failure::usage(format!("bad dual-number entry `{t}` (use 0, 1, a, 1+a)"))
                })?;
            }
            Ok(Mat2::from_codes(ring, codes))
        }
        Ring::IntegersMod(_) => {
            let mut ints = [0i64; 4];
            for (x, t) in ints.iter_mut().zip(&toks) {
                *x = t
                    .parse()
                    .map_err(|_| Failure::usage(format!("bad integer entry `{t}`")))?;
            }
            Ok(Mat2::from_ints(ring, ints))
        }
    }
}

pub fn parse_coeffs(text: &str) -> Result<IntPoly, Failure> {
    let coeffs = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| Failure::usage(format!("bad coefficient `{t}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        return Err(Failure::usage("empty coefficient list"));
    }
    Ok(IntPoly::new(coeffs))
}

/// One line of a polynomial file.
#[derive(Debug, Clone)]
pub struct PolyLine {
    pub poly: IntPoly,
    pub expected: Option<u128>,
}

/// Reads `c0,c1,...,cn[: expected]` lines; `#` starts a comment.
pub fn parse_poly_file(text: &str) -> Result<Vec<PolyLine>, Failure> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (coeffs, expected) = match line.split_once(':') {
            Some((c, e)) => {
                let e = e.trim();
                let v = e.parse().map_err(|_| {
                    Failure::usage(format!("line {}: bad expected order `{e}`", i + 1))
                })?;
                (c, Some(v))
            }
            None => (line, None),
        };
        let poly = parse_coeffs(coeffs)
            .map_err(|f| Failure::usage(format!("line {}: {}", i + 1, f.message)))?;
        out.push(PolyLine { poly, expected });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices() {
        let m = parse_matrix(Ring::dual_f2(), "1+a, 0, 0, a+1").unwrap();
        assert_eq!(m.codes(), [3, 0, 0, 3]);
        let m = parse_matrix(Ring::integers_mod(4).unwrap(), "1,-1,0,1").unwrap();
        assert_eq!(m.codes(), [1, 3, 0, 1]);
        assert!(parse_matrix(Ring::dual_f2(), "2,0,0,1").is_err());
        assert!(parse_matrix(Ring::dual_f2(), "1,0,0").is_err());
    }

    #[test]
    fn poly_file() {
        let rows = parse_poly_file("# header\n1,-1,1 : 3\n\n-18,-1,1  # comment\n").unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].expected, Some(3));
        assert_eq!(rows[1].poly.to_string(), "x^2 - x - 18");
        assert!(parse_poly_file("1,x,1").is_err());
    }
}
