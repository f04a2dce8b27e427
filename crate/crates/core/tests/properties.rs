use num_bigint::BigInt;
use proptest::prelude::*;
use sl2chars::chars::eps_n;
use sl2chars::numfield::{
    character_group, dedekind_is_pmaximal, factor_fp, is_irreducible, kummer_dedekind,
    poly_discriminant, prime_splitting_via_order, round2_pmaximal_order, round2_rerun, FpPoly,
    NumberField,
};
use sl2chars::sl2core::enumerate_sl2;
use sl2chars::{IntPoly, PrimeSplit, Ring, UnityRoot};

fn ring() -> impl Strategy<Value = Ring> {
    prop_oneof![
        (2u64..=60).prop_map(|n| Ring::integers_mod(n).unwrap()),
        Just(Ring::dual_f2())
    ]
}

fn ring_with_elements(k: usize) -> impl Strategy<Value = (Ring, Vec<u64>)> {
    ring().prop_flat_map(move |r| (Just(r), prop::collection::vec(0..r.size(), k)))
}

fn monic(degrees: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = IntPoly> {
    degrees
        .prop_flat_map(|n| prop::collection::vec(-20i64..=20, n))
        .prop_map(|mut c| {
            c.push(1);
            IntPoly::from_i64(&c)
        })
}

fn irreducible(degrees: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = IntPoly> {
    monic(degrees).prop_filter("irreducible", is_irreducible)
}

fn legendre(d: i64, p: u64) -> i64 {
    let a = d.rem_euclid(p as i64) as u128;
    let (mut base, mut e, mut acc) = (a, (p as u128 - 1) / 2, 1u128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    match acc {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

fn squarefree(d: i64) -> bool {
    (2..=d.unsigned_abs() as i64)
        .take_while(|k| k * k <= d.abs())
        .all(|k| d % (k * k) != 0)
}

proptest! {
    #[test]
    fn ring_axioms((r, v) in ring_with_elements(3)) {
        let [x, y, z] = [r.element(v[0]), r.element(v[1]), r.element(v[2])];
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x * y, y * x);
        prop_assert!((x + -x).is_zero());
        prop_assert_eq!(x - y, x + -y);
        prop_assert_eq!(x.pow(3), x * x * x);
        if x.is_unit() {
            prop_assert!((x * x.inv().unwrap()).is_one());
        } else {
            prop_assert!(x.inv().is_err());
        }
    }

    #[test]
    fn eps_is_multiplicative(n in 2u64..=4, i in 0usize..48, j in 0usize..48) {
        let g = enumerate_sl2(Ring::integers_mod(n).unwrap()).unwrap();
        let (a, b) = (&g[i % g.len()], &g[j % g.len()]);
        let ab = a.checked_mul(b).unwrap();
        prop_assert_eq!(eps_n(&ab).unwrap(), eps_n(a).unwrap() * eps_n(b).unwrap());
        prop_assert!(eps_n(a).unwrap().pow(n as i64).is_one());
    }

    #[test]
    fn unity_roots_form_a_group(a in -50i64..50, b in 1u64..30, c in -50i64..50, d in 1u64..30, k in -10i64..10) {
        let (x, y) = (UnityRoot::new(a, b), UnityRoot::new(c, d));
        prop_assert_eq!(x * y, y * x);
        prop_assert!((x * x.pow(-1)).is_one());
        prop_assert_eq!((x * y).pow(k), x.pow(k) * y.pow(k));
        prop_assert!(x.pow(x.order() as i64).is_one());
        prop_assert_eq!(b % x.order(), 0);
    }

    #[test]
    fn fp_factorisation_reassembles(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), c in prop::collection::vec(0u64..13, 1..9)) {
        let mut coeffs: Vec<u64> = c.iter().map(|x| x % p).collect();
        coeffs.push(1);
        let f = FpPoly::new(p, coeffs);
        let factors = factor_fp(&f);
        let mut product = FpPoly::one(p);
        for (g, m) in &factors {
            prop_assert!(g.degree() >= 1);
            prop_assert_eq!(g.clone(), g.monic());
            for _ in 0..*m {
                product = product.mul(g);
            }
        }
        prop_assert_eq!(product, f);
        for (i, (g, _)) in factors.iter().enumerate() {
            for (h, _) in &factors[i + 1..] {
                prop_assert!(g.gcd(h).is_one());
            }
        }
    }

    #[test]
    fn monic_division(a in monic(0..=7), b in monic(1..=4)) {
        let (q, r) = a.divrem_monic(&b);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn quadratic_discriminant(b in -50i64..50, c in -50i64..50) {
        let f = IntPoly::from_i64(&[c, b, 1]);
        prop_assert_eq!(poly_discriminant(&f).unwrap(), BigInt::from(b * b - 4 * c));
    }

    #[test]
    fn quadratic_splitting_follows_legendre(
        d in (-200i64..200).prop_filter("squarefree, not 0 or 1", |&d| d != 0 && d != 1 && squarefree(d)),
        p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23]),
    ) {
        let field = NumberField::new(IntPoly::from_i64(&[-d, 0, 1])).unwrap();
        let want = match legendre(d, p) {
            0 => PrimeSplit::from_pairs(p, [(2, 1)]),
            1 => PrimeSplit::from_pairs(p, [(1, 1), (1, 1)]),
            _ => PrimeSplit::from_pairs(p, [(1, 2)]),
        };
        prop_assert_eq!(field.split(p).unwrap(), want);
    }

    #[test]
    fn splitting_is_consistent(f in irreducible(2..=5), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let field = NumberField::new(f.clone()).unwrap();
        let split = field.split(p).unwrap();
        prop_assert_eq!(split.degree() as usize, f.degree());
        prop_assert_eq!(&prime_splitting_via_order(&f, p).unwrap(), &split);
        if dedekind_is_pmaximal(&f, p).unwrap() {
            prop_assert_eq!(&kummer_dedekind(&f, p).unwrap(), &split);
        }
    }

    #[test]
    fn round2_is_idempotent_and_divides_discriminant(f in irreducible(2..=4), p in prop::sample::select(vec![2u64, 3, 5])) {
        let order = round2_pmaximal_order(&f, p).unwrap();
        prop_assert_eq!(&round2_rerun(&f, p, &order).unwrap(), &order);
        let index = order.index();
        let disc = poly_discriminant(&f).unwrap();
        prop_assert_eq!(&disc % (&index * &index), BigInt::from(0));
        let mut rest = index.clone();
        while &rest % p == BigInt::from(0) {
            rest /= p;
        }
        prop_assert_eq!(rest, BigInt::from(1));
        if dedekind_is_pmaximal(&f, p).unwrap() {
            prop_assert_eq!(index, BigInt::from(1));
        }
    }

    #[test]
    fn character_group_order_is_product_of_structure(f in irreducible(2..=4)) {
        let d = character_group(&f).unwrap();
        prop_assert_eq!(d.order, d.structure.iter().map(|&k| k as u128).product::<u128>());
        prop_assert_eq!(d.order, 3u128.pow(d.a) * 4u128.pow(d.q4 + d.r4));
        prop_assert!(d.a as usize <= f.degree());
        prop_assert!(((d.q4 + 2 * d.r4) as usize) <= f.degree());
        prop_assert_eq!(d.generators.len() as u32, d.a + d.q4 + 2 * d.r4);
    }
}
