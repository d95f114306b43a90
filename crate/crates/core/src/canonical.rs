//! Canonical representatives of automorphism orbits.
//!
//! Every octonion is either a scalar `nu * 1_O` or lies in the orbit of
//! exactly one element `(lambda, (mu, 0, 0); (1, 0, 0), 0)`, whose trace is
//! `lambda` and whose norm is `-mu`. [`canonicalize`] finds the representative
//! and returns, as a witness, the word of generator moves that carries the
//! input onto it. Each normalization step is recorded as a generator; no
//! coordinate is rewritten without one.

use crate::automorphism::{AutomorphismWord, Generator};
use crate::field::Field;
use crate::linalg3::{sl3_fix_c1_reduce, sl3_rescale_c1, sl3_send_to_c1, Vec3};
use crate::octonion::Octonion;

#[derive(Debug, Clone, PartialEq)]
pub enum OrbitLabel<E> {
    Scalar(E),
    /// The orbit `O(lambda, mu)`.
    Orbit { lambda: E, mu: E },
}

impl<E: Clone> OrbitLabel<E> {
    pub fn representative<F: Field<Elem = E>>(&self, f: &F) -> Octonion<E> {
        match self {
            OrbitLabel::Scalar(nu) => Octonion::scalar(f, nu.clone()),
            OrbitLabel::Orbit { lambda, mu } => Octonion::canonical(f, lambda.clone(), mu.clone()),
        }
    }

    pub fn approx_eq<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        match (self, other) {
            (OrbitLabel::Scalar(a), OrbitLabel::Scalar(b)) => f.eq(a, b),
            (OrbitLabel::Orbit { lambda: l1, mu: m1 }, OrbitLabel::Orbit { lambda: l2, mu: m2 }) => {
                f.eq(l1, l2) && f.eq(m1, m2)
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalForm<E> {
    pub kind: OrbitLabel<E>,
    pub witness: AutomorphismWord<E>,
    pub representative: Octonion<E>,
}

impl<E: Clone> CanonicalForm<E> {
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> serde_json::Value {
        let kind = match &self.kind {
            OrbitLabel::Scalar(nu) => serde_json::json!({ "scalar": f.to_json(nu) }),
            OrbitLabel::Orbit { lambda, mu } => {
                serde_json::json!({ "orbit": { "lambda": f.to_json(lambda), "mu": f.to_json(mu) } })
            }
        };
        serde_json::json!({
            "kind": kind,
            "representative": self.representative.to_json(f),
            "witness": self.witness.to_json(f),
        })
    }
}

/// Applies `g` to `a` and records it in `word`.
fn step<F: Field>(f: &F, word: &mut AutomorphismWord<F::Elem>, a: &mut Octonion<F::Elem>, g: Generator<F::Elem>) {
    *a = g.apply(f, a);
    word.push(g);
}

fn sl3<F: Field>(f: &F, m: crate::linalg3::Matrix3<F::Elem>) -> Generator<F::Elem> {
    Generator::sl3(f, m).expect("normalizing matrices have determinant 1")
}

pub fn canonicalize<F: Field>(f: &F, a: &Octonion<F::Elem>) -> CanonicalForm<F::Elem> {
    let mut word = AutomorphismWord::identity();
    let mut x = a.clone();
    let zero = f.zero();

    if x.u.is_zero(f) && x.v.is_zero(f) {
        if f.eq(&x.alpha, &x.beta) {
            let nu = x.alpha.clone();
            return CanonicalForm {
                representative: Octonion::scalar(f, nu.clone()),
                kind: OrbitLabel::Scalar(nu),
                witness: word,
            };
        }
        // (a1, 0; 0, a8) -> (a1, 0; (a8 - a1, 0, 0), a8)
        step(f, &mut word, &mut x, Generator::Delta2(Vec3::basis(f, 0)));
        // -> (a1, 0; (1, 0, 0), a8)
        let scale = x.v.0[0].clone();
        if !f.is_one(&scale) {
            let g = sl3_rescale_c1(f, &scale).expect("a1 != a8");
            step(f, &mut word, &mut x, sl3(f, g));
        }
    } else {
        if x.v.is_zero(f) {
            step(f, &mut word, &mut x, Generator::Hbar);
        }
        if !x.v.approx_eq(f, &Vec3::basis(f, 0)) {
            let g = sl3_send_to_c1(f, &x.v).expect("v is nonzero");
            step(f, &mut word, &mut x, sl3(f, g));
        }
    }

    // now v = (1, 0, 0); clear beta
    if !f.is_zero(&x.beta) {
        let w = Vec3::new(f.neg(&x.beta), zero.clone(), zero.clone());
        step(f, &mut word, &mut x, Generator::Delta1(w));
    }
    // v = (1, *, *), beta = 0; bring v back to (1, 0, 0)
    if !x.v.approx_eq(f, &Vec3::basis(f, 0)) {
        let g = sl3_send_to_c1(f, &x.v).expect("v is nonzero");
        step(f, &mut word, &mut x, sl3(f, g));
    }
    // reduce u with the stabilizer of v
    let g = sl3_fix_c1_reduce(f, &x.u).expect("reduction exists");
    if !g.approx_eq(f, &crate::linalg3::Matrix3::identity(f)) {
        step(f, &mut word, &mut x, sl3(f, g));
    }

    let lambda = x.alpha.clone();
    // u is (*, 0, 0) or (0, 1, 0)
    if !f.is_zero(&x.u.0[1]) {
        if let Some(inv) = f.inv(&lambda) {
            let w = Vec3::new(zero.clone(), f.neg(&inv), zero.clone());
            step(f, &mut word, &mut x, Generator::Delta1(w));
        } else {
            step(f, &mut word, &mut x, Generator::Delta2(Vec3::basis(f, 2)));
        }
    }

    let mu = x.u.0[0].clone();
    let representative = Octonion::canonical(f, lambda.clone(), mu.clone());
    debug_assert!(x.approx_eq(f, &representative), "{x:?}");
    CanonicalForm {
        kind: OrbitLabel::Orbit { lambda, mu },
        witness: word,
        representative,
    }
}

/// Whether `a` and `b` lie in the same automorphism orbit.
pub fn same_orbit<F: Field>(f: &F, a: &Octonion<F::Elem>, b: &Octonion<F::Elem>) -> bool {
    canonicalize(f, a).kind.approx_eq(f, &canonicalize(f, b).kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, Reals};
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn scalar_has_empty_witness() {
        let f = Rationals;
        let c = canonicalize(&f, &Octonion::scalar(&f, q(5)));
        assert_eq!(c.kind, OrbitLabel::Scalar(q(5)));
        assert!(c.witness.is_empty());
    }

    #[test]
    fn canonical_input_is_fixed() {
        let f = Rationals;
        let a = Octonion::canonical(&f, q(3), q(-7));
        let c = canonicalize(&f, &a);
        assert_eq!(c.kind, OrbitLabel::Orbit { lambda: q(3), mu: q(-7) });
        assert!(c.witness.is_empty());
        assert_eq!(c.representative, a);
    }

    #[test]
    fn diagonal_non_scalar_case() {
        let f = Rationals;
        // (2, 0; 0, 5): trace 7, norm 10
        let a = Octonion::new(q(2), Vec3::zero(&f), Vec3::zero(&f), q(5));
        let c = canonicalize(&f, &a);
        assert_eq!(c.kind, OrbitLabel::Orbit { lambda: q(7), mu: q(-10) });
        assert_eq!(c.witness.apply(&f, &a), c.representative);
        // a8 = 0 takes no delta1 step
        let b = Octonion::new(q(2), Vec3::zero(&f), Vec3::zero(&f), q(0));
        let cb = canonicalize(&f, &b);
        assert_eq!(cb.kind, OrbitLabel::Orbit { lambda: q(2), mu: q(0) });
        assert_eq!(cb.witness.len(), 2);
    }

    #[test]
    fn u_prime_prime_sub_cases() {
        let f = Rationals;
        // (l, (0,1,0); (1,0,0), 0) with l != 0 and l = 0
        for l in [4, 0] {
            let a = Octonion::new(q(l), Vec3::basis(&f, 1), Vec3::basis(&f, 0), q(0));
            let c = canonicalize(&f, &a);
            assert_eq!(c.kind, OrbitLabel::Orbit { lambda: q(l), mu: q(0) });
            assert_eq!(c.witness.apply(&f, &a), c.representative);
            let last = c.witness.generators().last().unwrap().clone();
            match l {
                0 => assert_eq!(last, Generator::Delta2(Vec3::basis(&f, 2))),
                _ => assert!(matches!(last, Generator::Delta1(_))),
            }
        }
    }

    #[test]
    fn random_gf5_witnesses_replay() {
        let f = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..2000 {
            let a = Octonion::random(&f, &mut rng);
            let c = canonicalize(&f, &a);
            assert_eq!(c.witness.apply(&f, &a), c.representative);
            match c.kind {
                OrbitLabel::Scalar(nu) => assert_eq!(a, Octonion::scalar(&f, nu)),
                OrbitLabel::Orbit { lambda, mu } => {
                    assert_eq!(lambda, a.trace(&f));
                    assert_eq!(mu, f.neg(&a.norm(&f)));
                }
            }
        }
    }

    #[test]
    fn idempotent_on_representatives() {
        let f = Reals::default();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..500 {
            let a = Octonion::random(&f, &mut rng);
            let c = canonicalize(&f, &a);
            let again = canonicalize(&f, &c.representative);
            assert!(again.kind.approx_eq(&f, &c.kind));
            assert!(again.witness.apply(&f, &c.representative).approx_eq(&f, &c.representative));
        }
    }

    #[test]
    fn same_orbit_examples() {
        let f = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = Octonion::random(&f, &mut rng);
            let u = Vec3(std::array::from_fn(|_| f.random_element(&mut rng)));
            let b = Generator::Delta1(u).apply(&f, &a);
            assert!(same_orbit(&f, &a, &b));
        }
        assert!(same_orbit(&f, &Octonion::u_basis(&f, 0), &Octonion::v_basis(&f, 0)));
        assert!(!same_orbit(&f, &Octonion::one(&f), &Octonion::u_basis(&f, 0)));
    }
}
