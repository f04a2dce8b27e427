//! Orders of `Q[x]/(f)`, Round 2 p-maximalization and prime splitting in a
//! p-maximal order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::{det_bareiss, hnf, inverse_q, left_kernel_fp, rank_fp, vec_mat_q};
use super::poly::{mulmod, IntPoly};

/// A full-rank order given by a row basis over the power basis `1, x, ..., x^(n-1)`.
///
/// Basis element `i` is `rows[i] / den`; the rows are kept in Hermite normal
/// form and `den` is as small as possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderBasis {
    rows: Vec<Vec<BigInt>>,
    den: BigInt,
}

impl OrderBasis {
    /// `Z[x]/(f)` itself.
    pub fn power_basis(n: usize) -> OrderBasis {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        OrderBasis {
            rows,
            den: BigInt::one(),
        }
    }

    fn from_lattice(rows: Vec<Vec<BigInt>>, den: BigInt) -> OrderBasis {
        let rows = hnf(rows);
        let g = rows.iter().flatten().fold(den.clone(), |g, x| g.gcd(x));
        OrderBasis {
            rows: rows
                .iter()
                .map(|r| r.iter().map(|x| x / &g).collect())
                .collect(),
            den: den / g,
        }
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    pub fn numerators(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::new(x.clone(), self.den.clone()))
                    .collect()
            })
            .collect()
    }

    /// `[O : Z[x]/(f)]`.
    pub fn index(&self) -> BigInt {
        let n = self.degree() as u32;
        let det = det_bareiss(self.rows.clone()).abs();
        self.den.pow(n) / det
    }

    /// `disc(O) = disc(f) / [O : Z[x]]^2`.
    pub fn discriminant(&self, poly_disc: &BigInt) -> BigInt {
        let idx = self.index();
        poly_disc / (&idx * &idx)
    }

    /// Whether `v` (power-basis coordinates) lies in the order.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        let inv = inverse_q(&self.rational_rows()).expect("order basis is nonsingular");
        vec_mat_q(v, &inv).iter().all(|c| c.is_integer())
    }
}

/// Product in `Q[x]/(f)`.
pub(crate) fn mul_k(a: &[BigRational], b: &[BigRational], f: &IntPoly) -> Vec<BigRational> {
    let n = f.degree();
    let mut prod = vec![BigRational::zero(); 2 * n - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    let fc: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    for k in (n..2 * n - 1).rev() {
        let c = std::mem::take(&mut prod[k]);
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            prod[k - n + j] -= &c * &fc[j];
        }
    }
    prod.truncate(n);
    prod
}

/// An order together with its multiplication table in its own basis.
pub(crate) struct OrderData {
    pub basis: OrderBasis,
    inv: Vec<Vec<BigRational>>,
    /// `structure[i][j]` = coordinates of `w_i * w_j`.
    structure: Vec<Vec<Vec<BigInt>>>,
}

impl OrderData {
    /// `None` if the lattice is not closed under multiplication.
    pub fn new(basis: OrderBasis, f: &IntPoly) -> Option<OrderData> {
        let rows_q = basis.rational_rows();
        let inv = inverse_q(&rows_q)?;
        let n = basis.degree();
        let mut structure = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let c = vec_mat_q(&mul_k(&rows_q[i], &rows_q[j], f), &inv);
                if !c.iter().all(|x| x.is_integer()) {
                    return None;
                }
                let c: Vec<BigInt> = c.into_iter().map(|x| x.to_integer()).collect();
                structure[i][j] = c.clone();
                structure[j][i] = c;
            }
        }
        Some(OrderData {
            basis,
            inv,
            structure,
        })
    }

    fn n(&self) -> usize {
        self.basis.degree()
    }

    pub fn coords(&self, v: &[BigRational]) -> Vec<BigRational> {
        vec_mat_q(v, &self.inv)
    }

    fn structure_mod(&self, p: u64) -> Vec<Vec<Vec<u64>>> {
        let pb = BigInt::from(p);
        self.structure
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|x| to_u64(&x.mod_floor(&pb))).collect())
                    .collect()
            })
            .collect()
    }

    fn one_mod(&self, p: u64) -> Vec<u64> {
        let mut e = vec![BigRational::zero(); self.n()];
        e[0] = BigRational::one();
        let pb = BigInt::from(p);
        self.coords(&e)
            .iter()
            .map(|c| to_u64(&c.to_integer().mod_floor(&pb)))
            .collect()
    }
}

fn to_u64(x: &BigInt) -> u64 {
    u64::try_from(x).expect("residue fits in u64")
}

/// The finite algebra `O / pO` in the basis of `O`.
struct ResidueAlgebra {
    p: u64,
    structure: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
}

impl ResidueAlgebra {
    fn new(data: &OrderData, p: u64) -> ResidueAlgebra {
        ResidueAlgebra {
            p,
            structure: data.structure_mod(p),
            one: data.one_mod(p),
        }
    }

    fn n(&self) -> usize {
        self.one.len()
    }

    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let (n, p) = (self.n(), self.p);
        let mut out = vec![0u64; n];
        for (&xi, row) in x.iter().zip(&self.structure) {
            if xi == 0 {
                continue;
            }
            for (&yj, s_ij) in y.iter().zip(row) {
                if yj == 0 {
                    continue;
                }
                let c = mulmod(xi, yj, p);
                for (o, s) in out.iter_mut().zip(s_ij) {
                    *o = (*o + mulmod(c, *s, p)) % p;
                }
            }
        }
        out
    }

    fn pow(&self, x: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = x.to_vec();
        let mut acc = self.one.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn unit_vector(&self, i: usize) -> Vec<u64> {
        (0..self.n()).map(|j| u64::from(i == j)).collect()
    }

    /// Basis of the nilradical: kernel of `x -> x^(p^j)` with `p^j >= n`.
    fn radical(&self) -> Vec<Vec<u64>> {
        let mut q = self.p;
        while (q as usize) < self.n() {
            q *= self.p;
        }
        let m: Vec<Vec<u64>> = (0..self.n())
            .map(|i| self.pow(&self.unit_vector(i), q))
            .collect();
        left_kernel_fp(&m, self.n(), self.p)
    }

    /// Primitive idempotents, by refining along the Frobenius-fixed subalgebra.
    fn primitive_idempotents(&self) -> Vec<Vec<u64>> {
        let (n, p) = (self.n(), self.p);
        let m: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut v = self.pow(&self.unit_vector(i), p);
                v[i] = (v[i] + p - 1) % p;
                v
            })
            .collect();
        let fixed = left_kernel_fp(&m, n, p);
        let mut idems = vec![self.one.clone()];
        for b in &fixed {
            let mut next = Vec::new();
            for e in &idems {
                for c in 0..p {
                    let shifted: Vec<u64> = b
                        .iter()
                        .zip(&self.one)
                        .map(|(x, o)| (x + p - mulmod(c, *o, p)) % p)
                        .collect();
                    let pw = self.pow(&shifted, p - 1);
                    let indicator: Vec<u64> = self
                        .one
                        .iter()
                        .zip(&pw)
                        .map(|(o, x)| (o + p - x) % p)
                        .collect();
                    let piece = self.mul(e, &indicator);
                    if piece.iter().any(|&x| x != 0) {
                        next.push(piece);
                    }
                }
            }
            idems = next;
        }
        idems
    }
}

/// One step of Round 2: the multiplier ring of the p-radical, or `None` if
/// the order is already p-maximal.
fn enlarge(data: &OrderData, p: u64) -> Option<OrderBasis> {
    let n = data.n();
    let alg = ResidueAlgebra::new(data, p);
    let pb = BigInt::from(p);
    let mut gens: Vec<Vec<BigInt>> = alg
        .radical()
        .into_iter()
        .map(|v| v.into_iter().map(BigInt::from).collect())
        .collect();
    gens.extend((0..n).map(|i| {
        (0..n)
            .map(|j| if i == j { pb.clone() } else { BigInt::zero() })
            .collect()
    }));
    let ideal = hnf(gens);
    let ideal_q: Vec<Vec<BigRational>> = ideal
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let ideal_inv = inverse_q(&ideal_q).expect("p-radical has full rank");

    // x in O with x * I in p * I, read off modulo p
    let mut m: Vec<Vec<u64>> = vec![Vec::with_capacity(n * n); n];
    for (i, row) in m.iter_mut().enumerate() {
        for gamma in &ideal {
            let mut prod = vec![BigInt::zero(); n];
            for (l, g) in gamma.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                for (acc, s) in prod.iter_mut().zip(&data.structure[i][l]) {
                    *acc += g * s;
                }
            }
            let prod_q: Vec<BigRational> = prod.into_iter().map(BigRational::from).collect();
            for c in vec_mat_q(&prod_q, &ideal_inv) {
                debug_assert!(c.is_integer());
                row.push(to_u64(&c.to_integer().mod_floor(&pb)));
            }
        }
    }
    let kernel = left_kernel_fp(&m, n, p);
    if kernel.is_empty() {
        return None;
    }
    let mut u: Vec<Vec<BigInt>> = kernel
        .into_iter()
        .map(|v| v.into_iter().map(BigInt::from).collect())
        .collect();
    u.extend((0..n).map(|i| {
        (0..n)
            .map(|j| if i == j { pb.clone() } else { BigInt::zero() })
            .collect()
    }));
    let u = hnf(u);
    // new basis = (U * B) / p in power-basis coordinates
    let old = &data.basis;
    let rows: Vec<Vec<BigInt>> = u
        .iter()
        .map(|urow| {
            (0..n)
                .map(|k| urow.iter().zip(&old.rows).map(|(a, r)| a * &r[k]).sum())
                .collect()
        })
        .collect();
    Some(OrderBasis::from_lattice(rows, &old.den * &pb))
}

/// Runs Round 2 from `start` until the order is p-maximal.
pub(crate) fn round2_from(f: &IntPoly, p: u64, start: OrderBasis, poly_disc: &BigInt) -> OrderData {
    let mut data = OrderData::new(start, f).expect("starting lattice is an order");
    let pb = BigInt::from(p);
    let mut budget = 2;
    let mut d = poly_disc.abs();
    while !d.is_zero() && (&d % &pb).is_zero() {
        d /= &pb;
        budget += 1;
    }
    while let Some(next) = enlarge(&data, p) {
        budget -= 1;
        assert!(budget > 0, "Round 2 failed to terminate; is f squarefree?");
        data = OrderData::new(next, f).expect("multiplier ring is an order");
    }
    data
}

/// `(e, f)` for each prime over `p`, computed in a p-maximal order.
pub(crate) fn split_in_order(data: &OrderData, p: u64) -> Vec<(u32, u32)> {
    let alg = ResidueAlgebra::new(data, p);
    let radical = alg.radical();
    let mut parts: Vec<(u32, u32)> = alg
        .primitive_idempotents()
        .iter()
        .map(|eps| {
            let whole: Vec<Vec<u64>> = (0..alg.n())
                .map(|i| alg.mul(eps, &alg.unit_vector(i)))
                .collect();
            let nil: Vec<Vec<u64>> = radical.iter().map(|r| alg.mul(eps, r)).collect();
            let dim = rank_fp(&whole, p) as u32;
            let residue = dim - rank_fp(&nil, p) as u32;
            (dim / residue, residue)
        })
        .collect();
    parts.sort();
    parts
}
