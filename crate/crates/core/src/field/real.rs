use std::cmp::Ordering;

use rand::{Rng, RngCore};

use num_rational::BigRational;
use num_traits::Zero;

use super::rational::real_root_approximations;
use super::{Field, FieldCapabilities, FieldError, Rationals};
use crate::poly::ScalarPoly;

/// Relative tolerance shared by equality tests, root acceptance and solution
/// verification over the reals.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// The real numbers as `f64` with a single relative tolerance `eps`.
///
/// Two reals are equal when `|a - b| <= eps * max(1, |a|, |b|)`.
#[derive(Debug, Clone, Copy)]
pub struct Reals {
    eps: f64,
}

impl Default for Reals {
    fn default() -> Self {
        Reals { eps: DEFAULT_EPSILON }
    }
}

impl Reals {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_epsilon(eps: f64) -> Self {
        Reals { eps }
    }

    pub fn epsilon(&self) -> f64 {
        self.eps
    }

    /// Real cube root, defined on all of R.
    pub fn real_cbrt(&self, a: f64) -> f64 {
        a.cbrt()
    }
}

impl Field for Reals {
    type Elem = f64;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn from_i64(&self, n: i64) -> f64 {
        n as f64
    }
    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }
    fn sub(&self, a: &f64, b: &f64) -> f64 {
        a - b
    }
    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }
    fn neg(&self, a: &f64) -> f64 {
        -a
    }
    fn inv(&self, a: &f64) -> Option<f64> {
        (!self.is_zero(a)).then(|| 1.0 / a)
    }
    fn pow(&self, a: &f64, e: u32) -> f64 {
        a.powi(e as i32)
    }
    fn is_zero(&self, a: &f64) -> bool {
        a.abs() <= self.eps
    }
    fn eq(&self, a: &f64, b: &f64) -> bool {
        (a - b).abs() <= self.eps * 1f64.max(a.abs()).max(b.abs())
    }
    fn near(&self, a: &f64, b: &f64) -> bool {
        (a - b).abs() <= self.eps.sqrt() * 1f64.max(a.abs()).max(b.abs())
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn tolerance(&self) -> f64 {
        self.eps
    }
    fn magnitude(&self, a: &f64) -> f64 {
        a.abs()
    }

    fn sqrt(&self, a: &f64) -> Option<f64> {
        if self.is_zero(a) {
            Some(0.0)
        } else if *a < 0.0 {
            None
        } else {
            Some(a.sqrt())
        }
    }

    fn cbrt(&self, a: &f64) -> Option<f64> {
        Some(self.real_cbrt(*a))
    }

    fn univariate_roots(&self, p: &ScalarPoly<f64>) -> Result<Vec<f64>, FieldError> {
        if p.is_zero() {
            return Err(FieldError::IndeterminateRootSet);
        }
        Ok(real_roots(p.coeffs()))
    }

    fn cmp(&self, a: &f64, b: &f64) -> Ordering {
        a.total_cmp(b)
    }

    fn parse(&self, s: &str) -> Result<f64, FieldError> {
        let t = s.trim();
        let err = || FieldError::InvalidLiteral {
            literal: s.to_string(),
            field: "R".to_string(),
        };
        // accept `a/b` as a convenience
        let v = match t.split_once('/') {
            Some((n, d)) => {
                let n: f64 = n.trim().parse().map_err(|_| err())?;
                let d: f64 = d.trim().parse().map_err(|_| err())?;
                n / d
            }
            None => t.parse().map_err(|_| err())?,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(err())
        }
    }

    fn format(&self, a: &f64) -> String {
        // adding 0.0 turns -0 into 0
        format!("{}", a + 0.0)
    }

    fn to_json(&self, a: &f64) -> serde_json::Value {
        serde_json::Value::from(a + 0.0)
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> f64 {
        rng.gen_range(-4.0..4.0)
    }

    fn to_rational(&self, a: &f64) -> Option<BigRational> {
        BigRational::from_float(*a)
    }

    fn from_f64(&self, x: f64) -> Option<f64> {
        Some(x)
    }

    fn capabilities(&self) -> FieldCapabilities {
        FieldCapabilities {
            has_sqrt: true,
            has_cbrt: true,
            enumerable: false,
            has_univariate_roots: true,
            characteristic: 0,
        }
    }

    fn name(&self) -> String {
        "R".to_string()
    }
}

/// Real roots of a polynomial with `f64` coefficients.
///
/// Every finite double is a dyadic rational, so the roots of the given
/// polynomial are isolated exactly over Q and only the final approximations
/// are rounded. Repeated roots come back once.
pub(crate) fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let q = Rationals;
    let exact: Vec<BigRational> = coeffs
        .iter()
        .map(|c| BigRational::from_float(*c).unwrap_or_else(BigRational::zero))
        .collect();
    real_root_approximations(&ScalarPoly::from_coeffs(&q, exact))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(cs: &[f64]) -> Vec<f64> {
        let f = Reals::default();
        f.univariate_roots(&ScalarPoly::from_coeffs(&f, cs.to_vec())).unwrap()
    }

    fn assert_roots(got: Vec<f64>, want: &[f64]) {
        assert_eq!(got.len(), want.len(), "got {got:?}, want {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= 1e-9 * w.abs().max(1.0), "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn sqrt_conventions() {
        let f = Reals::default();
        assert_eq!(f.sqrt(&9.0), Some(3.0));
        assert_eq!(f.sqrt(&-1.0), None);
        assert_eq!(f.sqrt(&-1e-12), Some(0.0));
    }

    #[test]
    fn unique_real_cube_root_of_eight() {
        assert_roots(roots(&[-8.0, 0.0, 0.0, 1.0]), &[2.0]);
    }

    #[test]
    fn simple_and_repeated_roots() {
        // (y-1)(y-2)(y-3)
        assert_roots(roots(&[-6.0, 11.0, -6.0, 1.0]), &[1.0, 2.0, 3.0]);
        // (y-1)^2 (y+2)
        assert_roots(roots(&[2.0, -3.0, 0.0, 1.0]), &[-2.0, 1.0]);
        // y^2 (y^2 - 4)
        assert_roots(roots(&[0.0, 0.0, -4.0, 0.0, 1.0]), &[-2.0, 0.0, 2.0]);
        // no real roots
        assert_roots(roots(&[1.0, 0.0, 1.0]), &[]);
    }

    #[test]
    fn degree_nine_with_clustered_roots() {
        // product of (y - r) for r in {-3, -1, -0.5, 0.25, 1, 1.5, 2, 4, 7}
        let rs = [-3.0, -1.0, -0.5, 0.25, 1.0, 1.5, 2.0, 4.0, 7.0];
        let mut p = vec![1.0];
        for r in rs {
            let mut next = vec![0.0; p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= r * c;
            }
            p = next;
        }
        assert_roots(roots(&p), &rs);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        let f = Reals::default();
        assert!(f.univariate_roots(&ScalarPoly::zero()).is_err());
    }
}
