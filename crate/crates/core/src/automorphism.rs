//! Generators of the automorphism group of the split octonions and words in
//! them.
//!
//! A word is applied left to right: `[g1, g2]` maps `a` to `g2(g1(a))`.

use crate::field::Field;
use crate::linalg3::{cross, dot, LinalgError, Matrix3, Vec3};
use crate::octonion::Octonion;

/// An SL(3) element together with its cached inverse transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl3Move<E> {
    g: Matrix3<E>,
    g_inv_t: Matrix3<E>,
}

impl<E: Clone> Sl3Move<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, g: Matrix3<E>) -> Result<Self, LinalgError> {
        if !f.is_one(&g.det(f)) {
            return Err(LinalgError::NotSpecial);
        }
        let g_inv_t = g.inverse_transpose(f)?;
        Ok(Sl3Move { g, g_inv_t })
    }

    pub fn matrix(&self) -> &Matrix3<E> {
        &self.g
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Generator<E> {
    /// `(a, u; v, b) -> (a, u g; v g^{-T}, b)`
    Sl3(Sl3Move<E>),
    Delta1(Vec3<E>),
    Delta2(Vec3<E>),
    /// `(a, u; v, b) -> (b, -v; -u, a)`
    Hbar,
}

impl<E: Clone> Generator<E> {
    pub fn sl3<F: Field<Elem = E>>(f: &F, g: Matrix3<E>) -> Result<Self, LinalgError> {
        Sl3Move::new(f, g).map(Generator::Sl3)
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, a: &Octonion<E>) -> Octonion<E> {
        match self {
            Generator::Sl3(m) => Octonion::new(
                a.alpha.clone(),
                a.u.mul_mat(f, &m.g),
                a.v.mul_mat(f, &m.g_inv_t),
                a.beta.clone(),
            ),
            Generator::Delta1(w) => {
                // d1(w)(a', u'; v', b') =
                //   (a' - w.v',  (a' - b' - w.v') w + u',  v' - u' x w,  b' + w.v')
                let wv = dot(f, w, &a.v);
                let k = f.sub(&f.sub(&a.alpha, &a.beta), &wv);
                Octonion::new(
                    f.sub(&a.alpha, &wv),
                    w.scale(f, &k).add(f, &a.u),
                    a.v.sub(f, &cross(f, &a.u, w)),
                    f.add(&a.beta, &wv),
                )
            }
            Generator::Delta2(w) => {
                // d2(w)(a', u'; v', b') =
                //   (a' + u'.w,  u' + v' x w,  (-a' + b' - u'.w) w + v',  b' - u'.w)
                let uw = dot(f, &a.u, w);
                let k = f.sub(&f.sub(&a.beta, &a.alpha), &uw);
                Octonion::new(
                    f.add(&a.alpha, &uw),
                    a.u.add(f, &cross(f, &a.v, w)),
                    w.scale(f, &k).add(f, &a.v),
                    f.sub(&a.beta, &uw),
                )
            }
            Generator::Hbar => Octonion::new(a.beta.clone(), a.v.neg(f), a.u.neg(f), a.alpha.clone()),
        }
    }

    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> serde_json::Value {
        let vec = |v: &Vec3<E>| serde_json::Value::Array(v.0.iter().map(|x| f.to_json(x)).collect());
        match self {
            Generator::Sl3(m) => serde_json::json!({
                "sl3": m.g.0.iter().map(|r| r.iter().map(|x| f.to_json(x)).collect::<Vec<_>>()).collect::<Vec<_>>()
            }),
            Generator::Delta1(w) => serde_json::json!({ "delta1": vec(w) }),
            Generator::Delta2(w) => serde_json::json!({ "delta2": vec(w) }),
            Generator::Hbar => serde_json::json!("hbar"),
        }
    }
}

/// A composition of generators, applied left to right.
#[derive(Debug, Clone, PartialEq)]
pub struct AutomorphismWord<E> {
    gens: Vec<Generator<E>>,
}

impl<E: Clone> Default for AutomorphismWord<E> {
    fn default() -> Self {
        AutomorphismWord { gens: Vec::new() }
    }
}

impl<E: Clone> AutomorphismWord<E> {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_generators(gens: Vec<Generator<E>>) -> Self {
        AutomorphismWord { gens }
    }

    pub fn push(&mut self, g: Generator<E>) {
        self.gens.push(g);
    }

    pub fn then(mut self, g: Generator<E>) -> Self {
        self.gens.push(g);
        self
    }

    pub fn generators(&self) -> &[Generator<E>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, a: &Octonion<E>) -> Octonion<E> {
        self.gens.iter().fold(a.clone(), |acc, g| g.apply(f, &acc))
    }

    /// JSON list of tagged generators.
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> serde_json::Value {
        serde_json::Value::Array(self.gens.iter().map(|g| g.to_json(f)).collect())
    }
}

/// Checks `w(ab) = w(a) w(b)` on every supplied pair.
pub fn is_automorphism_on_pairs<F: Field>(
    f: &F,
    w: &AutomorphismWord<F::Elem>,
    pairs: impl IntoIterator<Item = (Octonion<F::Elem>, Octonion<F::Elem>)>,
) -> bool {
    pairs.into_iter().all(|(a, b)| {
        let lhs = w.apply(f, &a.mul(f, &b));
        let rhs = w.apply(f, &a).mul(f, &w.apply(f, &b));
        lhs.approx_eq(f, &rhs)
    })
}

/// [`is_automorphism_on_pairs`] on `sample_size` random pairs.
pub fn is_automorphism_on_sample<F: Field>(
    f: &F,
    w: &AutomorphismWord<F::Elem>,
    sample_size: usize,
    rng: &mut dyn rand::RngCore,
) -> bool {
    assert!(sample_size >= 1, "sample size must be positive");
    let pairs: Vec<_> = (0..sample_size)
        .map(|_| (Octonion::random(f, rng), Octonion::random(f, rng)))
        .collect();
    is_automorphism_on_pairs(f, w, pairs)
}
