use std::cmp::Ordering;

use indroots::enumerate::{connected_graphs, connected_unicyclic, trees};
use indroots::families::{complete, path, star, t1, t2};
use indroots::poly::{rat, Poly, Rational};
use indroots::roots::{isolate_roots, sign_at_root, xi_of_poly};
use indroots::{indpoly, xi, Graph};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

fn in_range(g: &Graph) {
    let iv = xi(g).unwrap();
    assert!(iv.cmp_rational(&rat(-1, 1)) != Ordering::Less);
    assert_eq!(iv.cmp_rational(&Rational::zero()), Ordering::Less);
    let fine = iv.refine(&rat(1, 1_000_000_000));
    let p = indpoly(g);
    let (a, b) = (p.sign_at(fine.lo()), p.sign_at(fine.hi()));
    assert!(
        a * b <= 0,
        "no sign change around ξ of {}",
        indroots::render_graph6(g)
    );
}

#[test]
fn xi_lies_in_the_unit_interval() {
    for n in 1..=8 {
        connected_graphs(n).unwrap().iter().for_each(in_range);
    }
    for n in 9..=10 {
        trees(n).unwrap().iter().for_each(in_range);
        connected_unicyclic(n).unwrap().iter().for_each(in_range);
    }
}

#[test]
fn tree_xi_between_path_and_star() {
    for n in 2..=9 {
        let lo = xi(&path(n).unwrap()).unwrap();
        let hi = xi(&star(n).unwrap()).unwrap();
        for t in trees(n).unwrap() {
            let x = xi(&t).unwrap();
            assert_ne!(lo.cmp_root(&x), Ordering::Greater);
            assert_ne!(x.cmp_root(&hi), Ordering::Greater);
        }
    }
}

#[test]
fn known_values() {
    let k4 = xi(&complete(4).unwrap()).unwrap();
    assert_eq!(k4.exact(), Some(&rat(-1, 4)));
    let a = xi(&t1().unwrap()).unwrap().refine(&rat(1, 10_000_000_000));
    let b = xi(&t2().unwrap()).unwrap().refine(&rat(1, 10_000_000_000));
    for (iv, d) in [(&a, -2451223338i64), (&b, -2410859067)] {
        // the whole interval rounds to the ten-digit decimal
        let q = rat(2 * d, 20_000_000_000);
        let half_ulp = rat(1, 20_000_000_000);
        assert!(iv.lo() >= &(&q - &half_ulp) && iv.hi() <= &(&q + &half_ulp));
    }
    assert_eq!(a.cmp_root(&b), Ordering::Less);
    assert_eq!(sign_at_root(&indpoly(&t2().unwrap()), &a), -1);
    assert_eq!(sign_at_root(&indpoly(&t1().unwrap()), &b), 1);
    assert!(xi_of_poly(&Poly::one()).is_err());
}

/// Sign of `q` at the root, read off exact evaluations at the endpoints of
/// an interval refined far below the root separation of `q`.
fn sign_by_refinement(q: &Poly, lo: &Rational, hi: &Rational) -> Option<i8> {
    let (a, b) = (q.sign_at(lo), q.sign_at(hi));
    (a == b && a != 0).then_some(a)
}

#[test]
fn sign_at_root_matches_fine_evaluation() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 1000 {
        let p: Vec<i64> = (0..rng.gen_range(2..=6))
            .map(|_| rng.gen_range(-9..=9))
            .collect();
        let q: Vec<i64> = (0..rng.gen_range(1..=6))
            .map(|_| rng.gen_range(-9..=9))
            .collect();
        let (p, mut q) = (Poly::from_i64s(&p), Poly::from_i64s(&q));
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        // sometimes force a shared root
        if rng.gen_bool(0.2) {
            q = &q * &p;
        }
        let roots = isolate_roots(&p, &rat(-20, 1), &rat(20, 1)).unwrap();
        for iv in roots {
            let s = sign_at_root(&q, &iv);
            let width = Rational::new(BigInt::one(), BigInt::one() << 200u32);
            let fine = iv.refine(&width);
            match (fine.exact(), sign_by_refinement(&q, fine.lo(), fine.hi())) {
                (Some(r), _) => assert_eq!(s, q.sign_at(r)),
                (None, Some(num)) => assert_eq!(s, num, "q={q} p={p}"),
                // small integer polynomials cannot have distinct roots this close
                (None, None) => assert_eq!(s, 0, "q={q} p={p}"),
            }
            checked += 1;
        }
    }
}
