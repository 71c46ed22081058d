use indroots::poly::{rat, sturm_chain, Poly, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(
        any::<i64>().prop_map(|c| BigInt::from(c) * BigInt::from(u64::MAX)),
        0..=max_deg + 1,
    )
    .prop_map(Poly::new)
}

fn arb_small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-20i64..=20, 1..=max_deg + 1).prop_map(|c| Poly::from_i64s(&c))
}

fn arb_rat() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=200).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in arb_poly(6), b in arb_poly(6), c in arb_poly(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert_eq!(&a + &Poly::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_small_poly(6), b in arb_small_poly(6), q in arb_rat()) {
        prop_assert_eq!((&a * &b).eval(&q), a.eval(&q) * b.eval(&q));
        prop_assert_eq!((&a + &b).eval(&q), a.eval(&q) + b.eval(&q));
        let v = a.eval(&q);
        let s = if v.is_zero() { 0 } else if v > Rational::zero() { 1 } else { -1 };
        prop_assert_eq!(a.sign_at(&q), s);
    }

    #[test]
    fn corona_transform_identity(p in arb_small_poly(5), q in arb_rat()) {
        prop_assume!(q != rat(-1, 1));
        let n = p.degree().unwrap_or(0) as u32 + 2;
        let t = p.corona_transform(n as usize).unwrap();
        let one_q = Rational::one() + &q;
        let mut scale = Rational::one();
        for _ in 0..n {
            scale *= &one_q;
        }
        prop_assert_eq!(t.eval(&q), scale * p.eval(&(&q / &one_q)));
    }

    #[test]
    fn text_round_trip(p in arb_poly(8)) {
        let back: Poly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn gcd_and_squarefree(a in arb_small_poly(4), b in arb_small_poly(4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &(&a * &a) * &b;
        let g = prod.gcd(&a);
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(prod.div_exact(&g).is_some());
        let sqf = prod.squarefree_part();
        prop_assert!(sqf.gcd(&sqf.derivative()).degree().unwrap_or(0) == 0);
        let mut rebuilt = Poly::one();
        for (f, m) in prod.squarefree_decomposition() {
            rebuilt = &rebuilt * &f.pow(m);
        }
        prop_assert_eq!(rebuilt.primitive_part(), prod.primitive_part());
    }
}

/// Polynomials built from known rational roots times a factor with no real
/// roots.
#[test]
fn sturm_counts_match_known_roots() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let k = rng.gen_range(1..=5);
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < k {
            let r = rng.gen_range(-8..=8);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        // scaled roots r/3 plus an irreducible quadratic factor
        let mut p = Poly::from_i64s(&[1, 0, 1]);
        for &r in &roots {
            p = &p * &Poly::from_i64s(&[-r, 3]);
        }
        let chain = sturm_chain(&p);
        let a: i64 = rng.gen_range(-9..=0);
        let b: i64 = rng.gen_range(a + 1..=9);
        let expected = roots.iter().filter(|&&r| 3 * a < r && r <= 3 * b).count();
        assert_eq!(
            chain.count_roots(&rat(a, 1), &rat(b, 1)),
            expected,
            "{p} on ({a},{b}]"
        );
        let isolated = indroots::roots::isolate_roots(&p, &rat(a, 1), &rat(b, 1)).unwrap();
        assert_eq!(isolated.len(), expected);
        assert_eq!(chain.count_real_roots(), roots.len());
    }
}
