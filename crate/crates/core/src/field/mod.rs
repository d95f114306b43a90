//! Coefficient fields.
//!
//! Every algebraic routine in this crate is generic over a [`Field`] context
//! object. The context carries whatever the instance needs at runtime (the
//! modulus of GF(p), the tolerance of the floating-point reals) and exposes the
//! capabilities the solver relies on: square roots, cube roots, enumeration of
//! finite fields and root finding for univariate polynomials.
//!
//! Three instances are provided: [`Rationals`] (exact, arbitrary precision),
//! [`PrimeField`] (exact, prime modulus up to 2^31) and [`Reals`] (`f64` with a
//! single relative tolerance).

mod prime;
pub(crate) mod rational;
mod real;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::RngCore;
use thiserror::Error;

use crate::poly::ScalarPoly;

pub use prime::PrimeField;
pub use rational::Rationals;
pub use real::{Reals, DEFAULT_EPSILON};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("indeterminate root set: the zero polynomial vanishes everywhere")]
    IndeterminateRootSet,
    #[error("invalid element literal `{literal}` for {field}")]
    InvalidLiteral { literal: String, field: String },
    #[error("invalid field spec `{0}` (expected `q`, `r` or `gf:<p>`)")]
    InvalidSpec(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^31")]
    ModulusTooLarge(u64),
}

/// Static description of what a field instance can do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldCapabilities {
    pub has_sqrt: bool,
    pub has_cbrt: bool,
    pub enumerable: bool,
    pub has_univariate_roots: bool,
    pub characteristic: u64,
}

/// A field instance together with its element type.
///
/// Elements are plain values; all arithmetic goes through the context so that
/// runtime parameters (a modulus, a tolerance) never have to be stored in each
/// element.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of an integer under the unique ring map Z -> F.
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Zero test; tolerant on approximate instances.
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Equality; tolerant on approximate instances.
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// A looser equality used to pre-filter numeric candidates before they are
    /// polished. Identical to [`Field::eq`] on exact instances.
    fn near(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.eq(a, b)
    }

    /// Relative tolerance for approximate fields, zero for exact ones.
    fn tolerance(&self) -> f64 {
        0.0
    }

    fn is_exact(&self) -> bool {
        true
    }

    /// Rough absolute size of an element, used only to compare residuals.
    fn magnitude(&self, a: &Self::Elem) -> f64;

    /// Some `v` with `v * v == a`, or `None` when `a` is not a square.
    ///
    /// The returned root is the nonnegative one on R and the least
    /// nonnegative representative on GF(p).
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn cbrt(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Number of elements for finite instances.
    fn order(&self) -> Option<u64> {
        None
    }

    /// Every element exactly once, for finite instances.
    fn elements(&self) -> Option<Box<dyn Iterator<Item = Self::Elem> + '_>> {
        None
    }

    /// The roots of `p` that lie in the field, without multiplicity, sorted by
    /// [`Field::cmp`].
    fn univariate_roots(&self, p: &ScalarPoly<Self::Elem>) -> Result<Vec<Self::Elem>, FieldError>;

    /// A total order used for deterministic output.
    fn cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    fn parse(&self, s: &str) -> Result<Self::Elem, FieldError>;
    fn format(&self, a: &Self::Elem) -> String;
    fn to_json(&self, a: &Self::Elem) -> serde_json::Value;

    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// Exact rational value, for fields that embed in R.
    fn to_rational(&self, _a: &Self::Elem) -> Option<num_rational::BigRational> {
        None
    }
    /// The element closest to a double, for fields that approximate R.
    fn from_f64(&self, _x: f64) -> Option<Self::Elem> {
        None
    }

    fn capabilities(&self) -> FieldCapabilities;
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.one())
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }
}

/// Parsed form of the `--field` command-line argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Reals,
    Prime(u64),
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            "r" | "R" => Ok(FieldSpec::Reals),
            _ => {
                let p = t
                    .strip_prefix("gf:")
                    .or_else(|| t.strip_prefix("GF:"))
                    .ok_or_else(|| FieldError::InvalidSpec(s.to_string()))?;
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| FieldError::InvalidSpec(s.to_string()))?;
                // validates primality and range
                PrimeField::new(p)?;
                Ok(FieldSpec::Prime(p))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Reals => write!(f, "r"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_specs() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("r".parse::<FieldSpec>().unwrap(), FieldSpec::Reals);
        assert_eq!("gf:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("gf:8".parse::<FieldSpec>().is_err());
        assert!("gf:".parse::<FieldSpec>().is_err());
        assert!("c".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(5).to_string(), "gf:5");
    }
}
