//! The split-octonion algebra as Zorn vector matrices.
//!
//! An octonion is a 2x2 array `(alpha, u; v, beta)` with scalar diagonal and
//! vector off-diagonal entries, multiplied by
//!
//! ```text
//! (a, u; v, b)(a', u'; v', b') =
//!     (aa' + u.v',  a u' + b' u - v x v';  a' v + b v' + u x u',  bb' + v.u')
//! ```

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::linalg3::{cross, dot, Vec3};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Octonion<E> {
    pub alpha: E,
    pub u: Vec3<E>,
    pub v: Vec3<E>,
    pub beta: E,
}

#[derive(Debug, Error)]
pub enum ParseOctonionError {
    #[error("octonion literal must look like `[a; u1,u2,u3; v1,v2,v3; b]`: {0}")]
    Shape(String),
    #[error(transparent)]
    Element(#[from] FieldError),
    #[error("octonion JSON must be an object with keys a, u, v, b: {0}")]
    Json(String),
}

impl<E: Clone> Octonion<E> {
    pub fn new(alpha: E, u: Vec3<E>, v: Vec3<E>, beta: E) -> Self {
        Octonion { alpha, u, v, beta }
    }

    pub fn zero<F: Field<Elem = E>>(f: &F) -> Self {
        Self::scalar(f, f.zero())
    }

    pub fn one<F: Field<Elem = E>>(f: &F) -> Self {
        Self::scalar(f, f.one())
    }

    /// `g * 1_O`
    pub fn scalar<F: Field<Elem = E>>(f: &F, g: E) -> Self {
        Octonion::new(g.clone(), Vec3::zero(f), Vec3::zero(f), g)
    }

    pub fn e1<F: Field<Elem = E>>(f: &F) -> Self {
        Octonion::new(f.one(), Vec3::zero(f), Vec3::zero(f), f.zero())
    }

    pub fn e2<F: Field<Elem = E>>(f: &F) -> Self {
        Octonion::new(f.zero(), Vec3::zero(f), Vec3::zero(f), f.one())
    }

    /// Basis element `u_i`, `i` in `0..3`.
    pub fn u_basis<F: Field<Elem = E>>(f: &F, i: usize) -> Self {
        Octonion::new(f.zero(), Vec3::basis(f, i), Vec3::zero(f), f.zero())
    }

    /// Basis element `v_i`, `i` in `0..3`.
    pub fn v_basis<F: Field<Elem = E>>(f: &F, i: usize) -> Self {
        Octonion::new(f.zero(), Vec3::zero(f), Vec3::basis(f, i), f.zero())
    }

    /// The canonical non-scalar element `(lambda, (mu, 0, 0); (1, 0, 0), 0)`
    /// of trace `lambda` and norm `-mu`.
    pub fn canonical<F: Field<Elem = E>>(f: &F, lambda: E, mu: E) -> Self {
        Octonion::new(
            lambda,
            Vec3::new(mu, f.zero(), f.zero()),
            Vec3::basis(f, 0),
            f.zero(),
        )
    }

    /// Coordinates in the basis `e1, u1, u2, u3, v1, v2, v3, e2`.
    pub fn coords(&self) -> [E; 8] {
        let [u1, u2, u3] = self.u.0.clone();
        let [v1, v2, v3] = self.v.0.clone();
        [self.alpha.clone(), u1, u2, u3, v1, v2, v3, self.beta.clone()]
    }

    pub fn from_coords(c: [E; 8]) -> Self {
        let [a, u1, u2, u3, v1, v2, v3, b] = c;
        Octonion::new(a, Vec3([u1, u2, u3]), Vec3([v1, v2, v3]), b)
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        Octonion::new(
            f.add(&self.alpha, &o.alpha),
            self.u.add(f, &o.u),
            self.v.add(f, &o.v),
            f.add(&self.beta, &o.beta),
        )
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        Octonion::new(
            f.sub(&self.alpha, &o.alpha),
            self.u.sub(f, &o.u),
            self.v.sub(f, &o.v),
            f.sub(&self.beta, &o.beta),
        )
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Octonion::new(f.neg(&self.alpha), self.u.neg(f), self.v.neg(f), f.neg(&self.beta))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        Octonion::new(
            f.mul(&self.alpha, s),
            self.u.scale(f, s),
            self.v.scale(f, s),
            f.mul(&self.beta, s),
        )
    }

    /// `self + s * 1_O`
    pub fn add_scalar<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        Octonion::new(f.add(&self.alpha, s), self.u.clone(), self.v.clone(), f.add(&self.beta, s))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let alpha = f.add(&f.mul(&self.alpha, &o.alpha), &dot(f, &self.u, &o.v));
        let u = o
            .u
            .scale(f, &self.alpha)
            .add(f, &self.u.scale(f, &o.beta))
            .sub(f, &cross(f, &self.v, &o.v));
        let v = self
            .v
            .scale(f, &o.alpha)
            .add(f, &o.v.scale(f, &self.beta))
            .add(f, &cross(f, &self.u, &o.u));
        let beta = f.add(&f.mul(&self.beta, &o.beta), &dot(f, &self.v, &o.u));
        Octonion::new(alpha, u, v, beta)
    }

    pub fn conj<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Octonion::new(self.beta.clone(), self.u.neg(f), self.v.neg(f), self.alpha.clone())
    }

    pub fn trace<F: Field<Elem = E>>(&self, f: &F) -> E {
        f.add(&self.alpha, &self.beta)
    }

    pub fn norm<F: Field<Elem = E>>(&self, f: &F) -> E {
        f.sub(&f.mul(&self.alpha, &self.beta), &dot(f, &self.u, &self.v))
    }

    /// The polar form `q(a, b) = n(a + b) - n(a) - n(b)`.
    pub fn bilin<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> E {
        let s = self.add(f, o);
        f.sub(&f.sub(&s.norm(f), &self.norm(f)), &o.norm(f))
    }

    /// Two-sided inverse `conj(a) / n(a)`; `None` when the norm vanishes.
    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Option<Self> {
        let ninv = f.inv(&self.norm(f))?;
        Some(self.conj(f).scale(f, &ninv))
    }

    /// `a^n` by square-and-multiply (well defined by power-associativity).
    pub fn power<F: Field<Elem = E>>(&self, f: &F, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(f);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            n >>= 1;
        }
        acc
    }

    /// `((a a) a) ... a`, the left-nested product of `n` copies.
    pub fn power_left_nested<F: Field<Elem = E>>(&self, f: &F, n: u32) -> Self {
        (0..n).fold(Self::one(f), |acc, _| acc.mul(f, self))
    }

    /// `a (a (... (a a)))`, the right-nested product of `n` copies.
    pub fn power_right_nested<F: Field<Elem = E>>(&self, f: &F, n: u32) -> Self {
        (0..n).fold(Self::one(f), |acc, _| self.mul(f, &acc))
    }

    /// `Some(g)` when `self = g * 1_O`.
    pub fn as_scalar<F: Field<Elem = E>>(&self, f: &F) -> Option<E> {
        (self.u.is_zero(f) && self.v.is_zero(f) && f.eq(&self.alpha, &self.beta)).then(|| self.alpha.clone())
    }

    pub fn is_scalar<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.as_scalar(f).is_some()
    }

    /// Componentwise equality through the field (tolerant on R).
    pub fn approx_eq<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> bool {
        f.eq(&self.alpha, &o.alpha) && self.u.approx_eq(f, &o.u) && self.v.approx_eq(f, &o.v) && f.eq(&self.beta, &o.beta)
    }

    /// Largest componentwise distance as reported by [`Field::magnitude`].
    pub fn distance<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> f64 {
        let d = self.sub(f, o);
        d.coords().iter().fold(0.0, |m, c| m.max(f.magnitude(c)))
    }

    /// Lexicographic order of coordinates under [`Field::cmp`].
    pub fn cmp_in<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> std::cmp::Ordering {
        let (a, b) = (self.coords(), o.coords());
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| f.cmp(x, y))
            .find(|c| c.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }

    pub fn random<F: Field<Elem = E>>(f: &F, rng: &mut dyn rand::RngCore) -> Self {
        Self::from_coords(std::array::from_fn(|_| f.random_element(rng)))
    }

    /// Text form `[a; u1,u2,u3; v1,v2,v3; b]`.
    pub fn format<F: Field<Elem = E>>(&self, f: &F) -> String {
        let vec = |v: &Vec3<E>| v.0.iter().map(|x| f.format(x)).collect::<Vec<_>>().join(",");
        format!(
            "[{}; {}; {}; {}]",
            f.format(&self.alpha),
            vec(&self.u),
            vec(&self.v),
            f.format(&self.beta)
        )
    }

    pub fn parse<F: Field<Elem = E>>(f: &F, s: &str) -> Result<Self, ParseOctonionError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| ParseOctonionError::Shape(s.to_string()))?;
        let blocks: Vec<&str> = inner.split(';').collect();
        if blocks.len() != 4 {
            return Err(ParseOctonionError::Shape(s.to_string()));
        }
        let vec = |b: &str| -> Result<Vec3<E>, ParseOctonionError> {
            let xs: Vec<&str> = b.split(',').collect();
            if xs.len() != 3 {
                return Err(ParseOctonionError::Shape(s.to_string()));
            }
            Ok(Vec3([f.parse(xs[0])?, f.parse(xs[1])?, f.parse(xs[2])?]))
        };
        Ok(Octonion::new(f.parse(blocks[0])?, vec(blocks[1])?, vec(blocks[2])?, f.parse(blocks[3])?))
    }

    /// JSON form `{"a": .., "u": [..], "v": [..], "b": ..}`.
    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> serde_json::Value {
        let vec = |v: &Vec3<E>| serde_json::Value::Array(v.0.iter().map(|x| f.to_json(x)).collect());
        serde_json::json!({
            "a": f.to_json(&self.alpha),
            "u": vec(&self.u),
            "v": vec(&self.v),
            "b": f.to_json(&self.beta),
        })
    }

    pub fn from_json<F: Field<Elem = E>>(f: &F, value: &serde_json::Value) -> Result<Self, ParseOctonionError> {
        let bad = || ParseOctonionError::Json(value.to_string());
        let elem = |v: &serde_json::Value| -> Result<E, ParseOctonionError> {
            let s = match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                _ => return Err(bad()),
            };
            Ok(f.parse(&s)?)
        };
        let vec = |v: &serde_json::Value| -> Result<Vec3<E>, ParseOctonionError> {
            let arr = v.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
            Ok(Vec3([elem(&arr[0])?, elem(&arr[1])?, elem(&arr[2])?]))
        };
        let obj = value.as_object().ok_or_else(bad)?;
        let get = |k: &str| obj.get(k).ok_or_else(bad);
        Ok(Octonion::new(elem(get("a")?)?, vec(get("u")?)?, vec(get("v")?)?, elem(get("b")?)?))
    }
}

impl<E: fmt::Display> fmt::Display for Octonion<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u1, u2, u3] = &self.u.0;
        let [v1, v2, v3] = &self.v.0;
        write!(f, "[{}; {},{},{}; {},{},{}; {}]", self.alpha, u1, u2, u3, v1, v2, v3, self.beta)
    }
}

/// Sorts by [`Octonion::cmp_in`] and removes entries equal under
/// [`Octonion::approx_eq`].
pub fn sort_dedup<F: Field>(f: &F, xs: &mut Vec<Octonion<F::Elem>>) {
    xs.sort_by(|a, b| a.cmp_in(f, b));
    let mut out: Vec<Octonion<F::Elem>> = Vec::with_capacity(xs.len());
    for x in xs.drain(..) {
        if !out.iter().any(|y| y.approx_eq(f, &x)) {
            out.push(x);
        }
    }
    *xs = out;
}
