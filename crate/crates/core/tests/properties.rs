use num_rational::BigRational;
use proptest::prelude::*;

use octsolve_core::automorphism::Generator;
use octsolve_core::canonical::{canonicalize, OrbitLabel};
use octsolve_core::fibpoly::eval_f_direct;
use octsolve_core::field::{Field, PrimeField, Rationals, Reals};
use octsolve_core::linalg3::{cross, dot, sl3_fix_c1_reduce, sl3_send_to_c1, Vec3};
use octsolve_core::octonion::{sort_dedup, Octonion};
use octsolve_core::poly::ScalarPoly;
use octsolve_core::radicals::{cbrt_octonion_real, sqrt_octonion};
use octsolve_core::solver::{satisfies, solve, solve_with, OrbitSet, SystemChoice};

fn rat() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn vec_q() -> impl Strategy<Value = Vec3<BigRational>> {
    [rat(), rat(), rat()].prop_map(Vec3)
}

fn oct_q() -> impl Strategy<Value = Octonion<BigRational>> {
    proptest::array::uniform8(rat()).prop_map(Octonion::from_coords)
}

fn oct_p(p: u64) -> impl Strategy<Value = Octonion<u64>> {
    proptest::array::uniform8(0..p).prop_map(Octonion::from_coords)
}

fn oct_r() -> impl Strategy<Value = Octonion<f64>> {
    proptest::array::uniform8(-3.0f64..3.0).prop_map(Octonion::from_coords)
}

/// `f` with zero constant term and small integer coefficients, degree 1..=max.
fn poly_i64(max: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 1..=max).prop_filter("nonzero", |cs| cs.iter().any(|&c| c != 0))
}

fn to_poly<F: Field>(f: &F, cs: &[i64]) -> ScalarPoly<F::Elem> {
    let mut coeffs = vec![f.zero()];
    coeffs.extend(cs.iter().map(|&c| f.from_i64(c)));
    ScalarPoly::from_coeffs(f, coeffs)
}

fn generator_q() -> impl Strategy<Value = Generator<BigRational>> {
    prop_oneof![
        vec_q().prop_filter("nonzero", |v| !v.is_zero(&Rationals)).prop_map(|v| {
            let g = sl3_send_to_c1(&Rationals, &v).unwrap();
            Generator::sl3(&Rationals, g).unwrap()
        }),
        vec_q().prop_map(Generator::Delta1),
        vec_q().prop_map(Generator::Delta2),
        Just(Generator::Hbar),
    ]
}

fn sorted<F: Field>(f: &F, mut xs: Vec<Octonion<F::Elem>>) -> Vec<Octonion<F::Elem>> {
    sort_dedup(f, &mut xs);
    xs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
        let f = Rationals;
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        if let Some(i) = f.inv(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &i)));
        }
        if let Some(r) = f.sqrt(&f.mul(&a, &a)) {
            prop_assert_eq!(f.mul(&r, &r), f.mul(&a, &a));
        }
    }

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 101, 65_537]), a in 0u64..1 << 20, b in 0u64..1 << 20, c in 0u64..1 << 20) {
        let f = PrimeField::new(p).unwrap();
        let (a, b, c) = (a % p, b % p, c % p);
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        if a != 0 {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        if let Some(r) = f.sqrt(&a) {
            prop_assert_eq!(f.mul(&r, &r), a);
        }
    }

    #[test]
    fn real_sqrt_within_tolerance(a in 0.0f64..1e6) {
        let f = Reals::default();
        let r = f.sqrt(&a).unwrap();
        prop_assert!((r * r - a).abs() <= f.epsilon() * a.max(1.0));
    }

    #[test]
    fn prime_roots_match_enumeration(p in prop::sample::select(vec![2u64, 3, 5, 7]), cs in proptest::collection::vec(0u64..7, 1..=7)) {
        let f = PrimeField::new(p).unwrap();
        let poly = ScalarPoly::from_coeffs(&f, cs.iter().map(|c| c % p).collect());
        prop_assume!(!poly.is_zero());
        let brute: Vec<u64> = (0..p).filter(|x| poly.eval(&f, x) == 0).collect();
        prop_assert_eq!(f.univariate_roots(&poly).unwrap(), brute);
    }

    #[test]
    fn cross_and_dot(u in vec_q(), v in vec_q(), w in vec_q(), s in rat()) {
        let f = Rationals;
        let x = cross(&f, &u, &v);
        prop_assert!(f.is_zero(&dot(&f, &x, &u)));
        prop_assert!(f.is_zero(&dot(&f, &x, &v)));
        prop_assert_eq!(x.clone(), cross(&f, &v, &u).neg(&f));
        prop_assert_eq!(dot(&f, &u, &v), dot(&f, &v, &u));
        let su_w = u.scale(&f, &s).add(&f, &w);
        prop_assert_eq!(dot(&f, &su_w, &v), f.add(&f.mul(&s, &dot(&f, &u, &v)), &dot(&f, &w, &v)));
        prop_assert_eq!(cross(&f, &su_w, &v), x.scale(&f, &s).add(&f, &cross(&f, &w, &v)));
    }

    #[test]
    fn sl3_constructors(v in vec_q(), u in vec_q()) {
        let f = Rationals;
        let c1 = Vec3::basis(&f, 0);
        if !v.is_zero(&f) {
            let g = sl3_send_to_c1(&f, &v).unwrap();
            prop_assert!(f.is_one(&g.det(&f)));
            prop_assert_eq!(v.mul_mat(&f, &g.inverse_transpose(&f).unwrap()), c1.clone());
        }
        let g = sl3_fix_c1_reduce(&f, &u).unwrap();
        prop_assert!(f.is_one(&g.det(&f)));
        prop_assert_eq!(c1.mul_mat(&f, &g.inverse_transpose(&f).unwrap()), c1);
        let image = u.mul_mat(&f, &g);
        let reduced = if f.is_zero(&u.0[0]) { Vec3::basis(&f, 1) } else { Vec3::new(u.0[0].clone(), f.zero(), f.zero()) };
        if u.is_zero(&f) {
            prop_assert!(image.is_zero(&f));
        } else {
            prop_assert_eq!(image, reduced);
        }
    }

    #[test]
    fn sl3_constructors_mod_p(p in prop::sample::select(vec![2u64, 3, 5, 7]), v in proptest::array::uniform3(0u64..7)) {
        let f = PrimeField::new(p).unwrap();
        let v = Vec3(v.map(|x| x % p));
        prop_assume!(!v.is_zero(&f));
        let g = sl3_send_to_c1(&f, &v).unwrap();
        prop_assert_eq!(g.det(&f), 1);
        prop_assert_eq!(v.mul_mat(&f, &g.inverse_transpose(&f).unwrap()), Vec3::basis(&f, 0));
    }

    #[test]
    fn generators_are_automorphisms(g in generator_q(), a in oct_q(), b in oct_q()) {
        let f = Rationals;
        prop_assert_eq!(g.apply(&f, &a.mul(&f, &b)), g.apply(&f, &a).mul(&f, &g.apply(&f, &b)));
        let ga = g.apply(&f, &a);
        prop_assert_eq!(ga.trace(&f), a.trace(&f));
        prop_assert_eq!(ga.norm(&f), a.norm(&f));
        prop_assert_eq!(ga.bilin(&f, &g.apply(&f, &b)), a.bilin(&f, &b));
        prop_assert_eq!(ga.conj(&f), g.apply(&f, &a.conj(&f)));
    }

    #[test]
    fn sl3_is_a_group_action(v in vec_q(), w in vec_q(), a in oct_q()) {
        let f = Rationals;
        prop_assume!(!v.is_zero(&f) && !w.is_zero(&f));
        let g = sl3_send_to_c1(&f, &v).unwrap();
        let h = sl3_send_to_c1(&f, &w).unwrap();
        let seq = Generator::sl3(&f, g.clone()).unwrap().apply(&f, &Generator::sl3(&f, h.clone()).unwrap().apply(&f, &a));
        let once = Generator::sl3(&f, h.mul(&f, &g)).unwrap().apply(&f, &a);
        prop_assert_eq!(seq, once);
    }

    #[test]
    fn canonical_labels_and_idempotence(a in oct_q()) {
        let f = Rationals;
        let c = canonicalize(&f, &a);
        prop_assert_eq!(c.witness.apply(&f, &a), c.representative.clone());
        if let OrbitLabel::Orbit { lambda, mu } = &c.kind {
            prop_assert_eq!(lambda.clone(), a.trace(&f));
            prop_assert_eq!(mu.clone(), f.neg(&a.norm(&f)));
        }
        let again = canonicalize(&f, &c.representative);
        prop_assert_eq!(again.kind, c.kind);
        prop_assert_eq!(again.witness.apply(&f, &c.representative), c.representative);
    }

    #[test]
    fn canonical_over_reals(a in oct_r()) {
        let f = Reals::default();
        let c = canonicalize(&f, &a);
        prop_assert!(c.witness.apply(&f, &a).approx_eq(&f, &c.representative));
    }

    #[test]
    fn square_roots_agree_with_solver_mod_p(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), c in oct_p(11)) {
        let f = PrimeField::new(p).unwrap();
        let c = Octonion::from_coords(c.coords().map(|x| x % p));
        let closed = sqrt_octonion(&f, &c);
        let s = solve(&f, &ScalarPoly::monomial(&f, 1, 2), &c).unwrap();
        prop_assert_eq!(sorted(&f, closed.points.clone()), sorted(&f, s.points));
        prop_assert_eq!(OrbitSet::Labels(closed.orbits.clone()), s.orbits);
        for x in &closed.points {
            prop_assert_eq!(x.mul(&f, x), c.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rational_solutions_are_sound(cs in poly_i64(3), c in oct_q()) {
        let f = Rationals;
        let poly = to_poly(&f, &cs);
        let s = solve(&f, &poly, &c).unwrap();
        for x in &s.points {
            prop_assert_eq!(eval_f_direct(&f, &poly, x), c.clone());
            if !x.is_scalar(&f) {
                let label = (x.trace(&f), f.neg(&x.norm(&f)));
                prop_assert!(s.pairs.contains(&label));
            }
        }
        if let (Some(g), OrbitSet::Labels(labels)) = (c.as_scalar(&f), &s.orbits) {
            for (l, m) in labels {
                let rep = Octonion::canonical(&f, l.clone(), m.clone());
                prop_assert_eq!(eval_f_direct(&f, &poly, &rep), Octonion::scalar(&f, g.clone()));
            }
        }
    }

    #[test]
    fn square_roots_agree_with_solver_over_q(c in oct_q()) {
        let f = Rationals;
        let closed = sqrt_octonion(&f, &c);
        let s = solve(&f, &ScalarPoly::monomial(&f, BigRational::from_integer(1.into()), 2), &c).unwrap();
        prop_assert_eq!(sorted(&f, closed.points), sorted(&f, s.points));
    }

    #[test]
    fn raw_and_specialized_systems_agree(p in prop::sample::select(vec![3u64, 5, 7]), cs in poly_i64(4), c in oct_p(7)) {
        let f = PrimeField::new(p).unwrap();
        let poly = to_poly(&f, &cs);
        prop_assume!(!poly.is_zero());
        let c = Octonion::from_coords(c.coords().map(|x| x % p));
        let a = solve_with(&f, &poly, &c, SystemChoice::Specialized).unwrap();
        let b = solve_with(&f, &poly, &c, SystemChoice::Raw).unwrap();
        prop_assert_eq!(sorted(&f, a.points), sorted(&f, b.points));
        prop_assert_eq!(a.orbits, b.orbits);
    }

    #[test]
    fn real_solutions_are_sound(cs in poly_i64(3), c in oct_r()) {
        let f = Reals::default();
        let poly = to_poly(&f, &cs);
        let s = solve(&f, &poly, &c).unwrap();
        for x in &s.points {
            prop_assert!(satisfies(&f, &poly, x, &c));
        }
    }

    #[test]
    fn cube_roots_agree_with_solver(c in oct_r()) {
        let f = Reals::default();
        let closed = cbrt_octonion_real(&f, &c);
        let s = solve(&f, &ScalarPoly::monomial(&f, 1.0, 3), &c).unwrap();
        prop_assert_eq!(closed.points.len(), s.points.len());
        for x in &closed.points {
            prop_assert!(s.points.iter().any(|y| y.approx_eq(&f, x)));
            prop_assert!(satisfies(&f, &ScalarPoly::monomial(&f, 1.0, 3), x, &c));
        }
    }
}
