//! Exact linear algebra over `Z`, `Q` and `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{invmod, mulmod};

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Row Hermite normal form: upper triangular, positive pivots, entries above
/// each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hnf(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut cur = 0;
    for col in 0..ncols {
        if cur == rows.len() {
            break;
        }
        loop {
            let pivot = (cur..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].abs());
            let Some(pi) = pivot else { break };
            rows.swap(cur, pi);
            let mut done = true;
            for i in cur + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[cur][col]);
                let (top, rest) = rows.split_at_mut(cur + 1);
                for (x, y) in rest[i - cur - 1].iter_mut().zip(&top[cur]) {
                    *x -= &q * y;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if cur < rows.len() && !rows[cur][col].is_zero() {
            if rows[cur][col].is_negative() {
                for x in rows[cur].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..cur {
                let q = rows[i][col].div_floor(&rows[cur][col]);
                if q.is_zero() {
                    continue;
                }
                let (top, rest) = rows.split_at_mut(cur);
                for (x, y) in top[i].iter_mut().zip(&rest[0]) {
                    *x -= &q * y;
                }
            }
            cur += 1;
        }
    }
    rows.truncate(cur);
    rows
}

/// Inverse of a square rational matrix; `None` if singular.
pub fn inverse_q(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pi = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pi);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            let (pivot_row, other) = if i < col {
                let (lo, hi) = a.split_at_mut(col);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = a.split_at_mut(i);
                (&lo[col], &mut hi[0])
            };
            for (x, y) in other.iter_mut().zip(pivot_row) {
                *x -= &f * y;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `v * M` for a row vector over `Q`.
pub fn vec_mat_q(v: &[BigRational], m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| v.iter().zip(m).map(|(x, row)| x * &row[j]).sum())
        .collect()
}

/// Reduced row echelon form over `F_p`; returns pivot columns.
fn rref_fp(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pi) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pi);
        let inv = invmod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mulmod(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank_fp(m: &[Vec<u64>], p: u64) -> usize {
    let mut a = m.to_vec();
    rref_fp(&mut a, p).len()
}

/// Basis of the left kernel `{v : v M = 0}` over `F_p`, where `M` has `rows` rows.
pub fn left_kernel_fp(m: &[Vec<u64>], rows: usize, p: u64) -> Vec<Vec<u64>> {
    let cols = m.first().map_or(0, |r| r.len());
    // transpose, then right kernel
    let mut t: Vec<Vec<u64>> = (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j] % p).collect())
        .collect();
    if t.is_empty() {
        return (0..rows)
            .map(|i| (0..rows).map(|j| u64::from(i == j)).collect())
            .collect();
    }
    let pivots = rref_fp(&mut t, p);
    let free: Vec<usize> = (0..rows).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; rows];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - t[ri][fc] % p) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_cofactor() {
        assert_eq!(
            det_bareiss(bi(&[&[1, 0, -2], &[2, 0, 0], &[0, 2, 0]])),
            BigInt::from(-8)
        );
        assert_eq!(det_bareiss(bi(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bareiss(bi(&[&[2, 4], &[1, 2]])), BigInt::zero());
        assert_eq!(
            det_bareiss(bi(&[
                &[2, -1, 0, 3],
                &[1, 5, 2, 0],
                &[0, 3, -4, 1],
                &[7, 0, 1, 1]
            ])),
            BigInt::from(484)
        );
    }

    #[test]
    fn hnf_of_small_lattice() {
        let h = hnf(bi(&[&[2, 4], &[6, 8], &[4, 4]]));
        assert_eq!(h, bi(&[&[2, 0], &[0, 4]]));
        let h = hnf(bi(&[&[3, 1], &[0, 0]]));
        assert_eq!(h, bi(&[&[3, 1]]));
    }

    #[test]
    fn left_kernel_over_f3() {
        let m = vec![vec![1, 2], vec![2, 1], vec![1, 1]];
        let k = left_kernel_fp(&m, 3, 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        for j in 0..2 {
            let s: u64 = v.iter().zip(&m).map(|(a, row)| a * row[j]).sum();
            assert_eq!(s % 3, 0);
        }
        assert_eq!(rank_fp(&m, 3), 2);
    }
}
