//! 2x2 matrices and the group SL2 over a finite ring.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::finring::{Ring, RingElement, RingHom};

/// Default cap on the ring size accepted by [`enumerate_sl2`].
pub const DEFAULT_RING_BOUND: u64 = 16;

/// A 2x2 matrix `[[a, b], [c, d]]` over a finite ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    ring: Ring,
    entries: [u64; 4],
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries();
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl Mat2 {
    pub fn new(a: RingElement, b: RingElement, c: RingElement, d: RingElement) -> Result<Mat2> {
        let ring = a.ring();
        for x in [b, c, d] {
            if x.ring() != ring {
                return Err(Error::MixedRings(ring, x.ring()));
            }
        }
        Ok(Mat2 {
            ring,
            entries: [a.value(), b.value(), c.value(), d.value()],
        })
    }

    /// Matrix from canonical codes (see [`Ring::element`]).
    pub fn from_codes(ring: Ring, codes: [u64; 4]) -> Mat2 {
        Mat2 {
            ring,
            entries: codes.map(|c| ring.element(c).value()),
        }
    }

    /// Matrix from integers, reduced into the ring.
    pub fn from_ints(ring: Ring, ints: [i64; 4]) -> Mat2 {
        Mat2 {
            ring,
            entries: ints.map(|x| ring.from_int(x).value()),
        }
    }

    pub fn identity(ring: Ring) -> Mat2 {
        Mat2 {
            ring,
            entries: [1, 0, 0, 1],
        }
    }

    pub fn scalar(x: RingElement) -> Mat2 {
        let z = x.ring().zero();
        Mat2::new(x, z, z, x).unwrap()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn codes(&self) -> [u64; 4] {
        self.entries
    }

    pub fn entries(&self) -> [RingElement; 4] {
        self.entries.map(|v| self.ring.element(v))
    }

    pub fn a(&self) -> RingElement {
        self.ring.element(self.entries[0])
    }
    pub fn b(&self) -> RingElement {
        self.ring.element(self.entries[1])
    }
    pub fn c(&self) -> RingElement {
        self.ring.element(self.entries[2])
    }
    pub fn d(&self) -> RingElement {
        self.ring.element(self.entries[3])
    }

    pub fn det(&self) -> RingElement {
        let [a, b, c, d] = self.entries();
        a * d - b * c
    }

    pub fn trace(&self) -> RingElement {
        self.a() + self.d()
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn is_identity(&self) -> bool {
        self.entries == [1, 0, 0, 1]
    }

    pub fn checked_mul(&self, other: &Mat2) -> Result<Mat2> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring, other.ring));
        }
        let [a, b, c, d] = self.entries();
        let [e, f, g, h] = other.entries();
        Mat2::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }

    pub fn checked_add(&self, other: &Mat2) -> Result<Mat2> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring, other.ring));
        }
        let [a, b, c, d] = self.entries();
        let [e, f, g, h] = other.entries();
        Mat2::new(a + e, b + f, c + g, d + h)
    }

    pub fn scale(&self, x: RingElement) -> Mat2 {
        let [a, b, c, d] = self.entries();
        Mat2::new(x * a, x * b, x * c, x * d).expect("scalar from a different ring")
    }

    /// Inverse of an SL2 element: `[[d, -b], [-c, a]]`.
    pub fn inv(&self) -> Result<Mat2> {
        if !self.is_sl2() {
            return Err(Error::NotInSl2(self.det().to_string()));
        }
        let [a, b, c, d] = self.entries();
        Mat2::new(d, -b, -c, a)
    }

    /// Integer power; negative exponents need an SL2 element.
    pub fn pow(&self, exp: i64) -> Result<Mat2> {
        let mut base = if exp < 0 { self.inv()? } else { *self };
        let mut e = exp.unsigned_abs();
        let mut acc = Mat2::identity(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order, if the matrix is invertible.
    pub fn order(&self) -> Option<u64> {
        let mut x = *self;
        for k in 1..=self.ring.size().pow(4) {
            if x.is_identity() {
                return Some(k);
            }
            x = x * *self;
        }
        None
    }

    pub fn transpose(&self) -> Mat2 {
        let [a, b, c, d] = self.entries;
        Mat2 {
            ring: self.ring,
            entries: [a, c, b, d],
        }
    }

    pub fn map_entries(&self, h: &RingHom) -> Mat2 {
        let [a, b, c, d] = self.entries().map(|x| h.apply(x));
        Mat2::new(a, b, c, d).unwrap()
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        self.checked_mul(&rhs)
            .expect("ring mismatch in matrix product")
    }
}

/// `T(a) = [[1, a], [0, 1]]`.
pub fn gen_t(a: RingElement) -> Mat2 {
    let r = a.ring();
    Mat2::new(r.one(), a, r.zero(), r.one()).unwrap()
}

/// `E(u) = [[u, 0], [0, u^-1]]`.
pub fn gen_e(u: RingElement) -> Result<Mat2> {
    let r = u.ring();
    Mat2::new(u, r.zero(), r.zero(), u.inv()?)
}

/// `S = [[0, -1], [1, 0]]`.
pub fn gen_s(ring: Ring) -> Mat2 {
    Mat2::new(ring.zero(), -ring.one(), ring.one(), ring.zero()).unwrap()
}

/// Entrywise reduction along a ring homomorphism.
pub fn map_entries(h: &RingHom, a: &Mat2) -> Mat2 {
    a.map_entries(h)
}

/// All of SL2 over `ring`, ascending by entry codes.
pub fn enumerate_sl2(ring: Ring) -> Result<Vec<Mat2>> {
    enumerate_sl2_bounded(ring, DEFAULT_RING_BOUND)
}

pub fn enumerate_sl2_bounded(ring: Ring, bound: u64) -> Result<Vec<Mat2>> {
    let n = ring.size();
    if n > bound {
        return Err(Error::GroupTooLarge {
            size: n as usize,
            cap: bound as usize,
        });
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let m = Mat2 {
                        ring,
                        entries: [a, b, c, d],
                    };
                    if m.is_sl2() {
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A binary quadratic form `q20 x^2 + q11 xy + q02 y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadForm {
    pub q20: RingElement,
    pub q11: RingElement,
    pub q02: RingElement,
}

impl QuadForm {
    pub fn zero(ring: Ring) -> QuadForm {
        let z = ring.zero();
        QuadForm {
            q20: z,
            q11: z,
            q02: z,
        }
    }

    pub fn ring(&self) -> Ring {
        self.q20.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.q20.is_zero() && self.q11.is_zero() && self.q02.is_zero()
    }

    pub fn disc(&self) -> RingElement {
        let four = self.ring().from_int(4);
        self.q11 * self.q11 - four * self.q20 * self.q02
    }

    pub fn eval(&self, x: RingElement, y: RingElement) -> RingElement {
        self.q20 * x * x + self.q11 * x * y + self.q02 * y * y
    }

    /// The form `(x, y) -> Q((x, y) B)`.
    pub fn act(&self, b: &Mat2) -> QuadForm {
        let [p, q, r, s] = b.entries();
        let two = self.ring().from_int(2);
        let (q20, q11, q02) = (self.q20, self.q11, self.q02);
        QuadForm {
            q20: q20 * p * p + q11 * p * q + q02 * q * q,
            q11: two * q20 * p * r + q11 * (p * s + r * q) + two * q02 * q * s,
            q02: q20 * r * r + q11 * r * s + q02 * s * s,
        }
    }
}

/// `f_A = c x^2 + (d - a) xy - b y^2`.
pub fn quadratic_form(a: &Mat2) -> QuadForm {
    QuadForm {
        q20: a.c(),
        q11: a.d() - a.a(),
        q02: -a.b(),
    }
}

/// A generator token in a word over `{T(x), S, E(u)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    T(RingElement),
    S,
    E(RingElement),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T(x) => write!(f, "T({x})"),
            Gen::S => f.write_str("S"),
            Gen::E(u) => write!(f, "E({u})"),
        }
    }
}

impl Gen {
    pub fn to_matrix(&self, ring: Ring) -> Mat2 {
        match *self {
            Gen::T(x) => gen_t(x),
            Gen::S => gen_s(ring),
            Gen::E(u) => gen_e(u).expect("E token holds a unit"),
        }
    }
}

/// Product of a word, left to right.
pub fn evaluate_word(ring: Ring, word: &[Gen]) -> Mat2 {
    word.iter()
        .fold(Mat2::identity(ring), |acc, g| acc * g.to_matrix(ring))
}

/// Writes an SL2 element over a local ring as a word in `T`, `S` and `E`.
///
/// Uses `A = T(a/c) S T(dc) E(c)` when `c` is a unit and
/// `A = S T(-c/a) S T(ba) E(-a)` otherwise, where `a` must then be a unit.
pub fn elementary_decomposition(m: &Mat2) -> Result<Vec<Gen>> {
    let ring = m.ring();
    if !ring.is_local() {
        return Err(Error::NotLocal(ring));
    }
    if !m.is_sl2() {
        return Err(Error::NotInSl2(m.det().to_string()));
    }
    let [a, b, c, d] = m.entries();
    if c.is_unit() {
        let ci = c.inv()?;
        Ok(vec![Gen::T(a * ci), Gen::S, Gen::T(d * c), Gen::E(c)])
    } else {
        // In a local ring ad - bc = 1 with c non-unit forces a to be a unit.
        let ai = a.inv()?;
        Ok(vec![
            Gen::S,
            Gen::T(-c * ai),
            Gen::S,
            Gen::T(b * a),
            Gen::E(-a),
        ])
    }
}

/// Replaces every `E(u)` by `S T(-1/u) S T(-u) S T(-1/u)`, leaving a word in `T` and `S`.
pub fn expand_diagonal(word: &[Gen]) -> Vec<Gen> {
    let mut out = Vec::with_capacity(word.len() * 6);
    for g in word {
        match *g {
            Gen::E(u) => {
                let w = -u.inv().expect("E token holds a unit");
                out.extend([Gen::S, Gen::T(w), Gen::S, Gen::T(-u), Gen::S, Gen::T(w)]);
            }
            other => out.push(other),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::hom_reduce;

    fn z(n: u64) -> Ring {
        Ring::IntegersMod(n)
    }

    #[test]
    fn generator_examples() {
        assert_eq!(gen_s(z(4)).codes(), [0, 3, 1, 0]);
        assert_eq!(gen_e(z(4).element(3)).unwrap().codes(), [3, 0, 0, 3]);
        assert!(gen_e(z(4).element(2)).is_err());
        let t = gen_t(Ring::DualF2.alpha().unwrap());
        assert_eq!(t.codes(), [1, 2, 0, 1]);
        for m in [
            gen_s(z(5)),
            gen_t(z(5).element(3)),
            gen_e(z(5).element(2)).unwrap(),
            t,
        ] {
            assert!(m.is_sl2());
        }
    }

    #[test]
    fn group_op_examples() {
        let (s, t) = (gen_s(z(4)), gen_t(z(4).one()));
        assert_eq!((s * t).pow(3).unwrap(), s * s);
        assert!(gen_s(z(3)).pow(4).unwrap().is_identity());
        assert!(gen_s(z(2)).trace().is_zero());
        let m = Mat2::from_ints(z(7), [2, 3, 1, 2]);
        assert!((m * m.inv().unwrap()).is_identity());
        assert!(Mat2::from_ints(z(4), [2, 0, 0, 1]).inv().is_err());
        assert!(m.checked_mul(&gen_s(z(5))).is_err());
        assert_eq!(t.pow(-1).unwrap(), gen_t(z(4).element(3)));
        assert_eq!(t.order(), Some(4));
    }

    fn sl2_order_formula(n: u64) -> usize {
        let mut order = n.pow(3) as f64;
        for (p, _) in crate::finring::factor_u64(n) {
            order *= 1.0 - 1.0 / (p * p) as f64;
        }
        order.round() as usize
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_sl2(z(2)).unwrap().len(), 6);
        assert_eq!(enumerate_sl2(z(4)).unwrap().len(), 48);
        assert_eq!(enumerate_sl2(Ring::DualF2).unwrap().len(), 48);
        for n in 2..=12 {
            assert_eq!(
                enumerate_sl2(z(n)).unwrap().len(),
                sl2_order_formula(n),
                "N = {n}"
            );
        }
        assert!(matches!(
            enumerate_sl2(z(17)),
            Err(Error::GroupTooLarge { .. })
        ));
        assert_eq!(
            enumerate_sl2_bounded(z(17), 17).unwrap().len(),
            sl2_order_formula(17)
        );
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let g = enumerate_sl2(z(6)).unwrap();
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn map_entries_examples() {
        let h = hom_reduce(z(4), z(2)).unwrap();
        let m = Mat2::from_ints(z(4), [3, 2, 1, 3]);
        assert_eq!(map_entries(&h, &m).codes(), [1, 0, 1, 1]);

        let h = hom_reduce(Ring::DualF2, z(2)).unwrap();
        let m = Mat2::scalar(Ring::DualF2.element(3));
        assert!(map_entries(&h, &m).is_identity());

        let h = hom_reduce(z(12), z(3)).unwrap();
        assert_eq!(map_entries(&h, &gen_t(z(12).element(7))), gen_t(z(3).one()));
    }

    #[test]
    fn map_entries_is_homomorphism() {
        for (s, t) in [(z(4), z(2)), (Ring::DualF2, z(2))] {
            let h = hom_reduce(s, t).unwrap();
            let g = enumerate_sl2(s).unwrap();
            for a in &g {
                assert!(a.map_entries(&h).is_sl2());
                for b in &g {
                    assert_eq!(
                        (*a * *b).map_entries(&h),
                        a.map_entries(&h) * b.map_entries(&h)
                    );
                }
            }
        }
    }

    #[test]
    fn quadratic_form_examples() {
        let q = quadratic_form(&gen_t(z(4).one()));
        assert_eq!([q.q20, q.q11, q.q02].map(|x| x.value()), [0, 0, 3]);
        let q = quadratic_form(&gen_s(z(3)));
        assert_eq!([q.q20, q.q11, q.q02].map(|x| x.value()), [1, 0, 1]);
        assert!(quadratic_form(&Mat2::identity(z(5))).is_zero());
    }

    #[test]
    fn disc_of_form_is_trace_squared_minus_four() {
        for m in enumerate_sl2(z(5)).unwrap() {
            let t = m.trace();
            assert_eq!(quadratic_form(&m).disc(), t * t - z(5).from_int(4));
        }
    }

    // f_{BAB^-1}(v) = f_A(v B^-T); conjugate matrices give equivalent forms.
    #[test]
    fn conjugation_acts_on_forms() {
        for n in [2, 3, 4] {
            let g = enumerate_sl2(z(n)).unwrap();
            for a in &g {
                let fa = quadratic_form(a);
                for b in &g {
                    let conj = *b * *a * b.inv().unwrap();
                    let twist = b.inv().unwrap().transpose();
                    assert_eq!(
                        quadratic_form(&conj),
                        fa.act(&twist),
                        "N = {n}, A = {a}, B = {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let w = elementary_decomposition(&gen_s(z(4))).unwrap();
        let r = z(4);
        assert_eq!(
            w,
            vec![Gen::T(r.zero()), Gen::S, Gen::T(r.zero()), Gen::E(r.one())]
        );

        let r = z(3);
        let w = elementary_decomposition(&Mat2::from_ints(r, [1, 0, 1, 1])).unwrap();
        assert_eq!(
            w,
            vec![Gen::T(r.one()), Gen::S, Gen::T(r.one()), Gen::E(r.one())]
        );
        assert_eq!(evaluate_word(r, &w), Mat2::from_ints(r, [1, 0, 1, 1]));

        let r = z(4);
        let w = elementary_decomposition(&gen_t(r.one())).unwrap();
        assert_eq!(
            w,
            vec![
                Gen::S,
                Gen::T(r.zero()),
                Gen::S,
                Gen::T(r.one()),
                Gen::E(-r.one())
            ]
        );
        assert_eq!(evaluate_word(r, &w), gen_t(r.one()));

        assert!(matches!(
            elementary_decomposition(&Mat2::identity(z(6))),
            Err(Error::NotLocal(_))
        ));
    }

    #[test]
    fn decomposition_round_trips() {
        for ring in [z(4), z(9), Ring::DualF2, z(8), z(5)] {
            for m in enumerate_sl2(ring).unwrap() {
                let w = elementary_decomposition(&m).unwrap();
                assert_eq!(evaluate_word(ring, &w), m);
                let st = expand_diagonal(&w);
                assert!(st.iter().all(|g| !matches!(g, Gen::E(_))));
                assert_eq!(evaluate_word(ring, &st), m);
            }
        }
    }

    #[test]
    fn conjugating_t_by_diagonal_scales_by_square() {
        let mut rings: Vec<Ring> = (2..=12).map(z).collect();
        rings.push(Ring::DualF2);
        for ring in rings {
            for b in ring.elements() {
                for u in ring.units() {
                    let lhs = gen_t(b * u * u);
                    let rhs = gen_e(u).unwrap() * gen_t(b) * gen_e(u.inv().unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
