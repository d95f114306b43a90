//! Dense univariate polynomials over a [`Field`].

use crate::field::Field;

/// Coefficients in ascending order; the leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient list).
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> ScalarPoly<E> {
    pub fn zero() -> Self {
        ScalarPoly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from ascending coefficients, dropping (field-)zero
    /// leading terms.
    pub fn from_coeffs<F: Field<Elem = E>>(field: &F, coeffs: Vec<E>) -> Self {
        let mut p = ScalarPoly { coeffs };
        p.trim(field);
        p
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c * y^k`
    pub fn monomial<F: Field<Elem = E>>(field: &F, c: E, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Coefficient of `y^k`; zero beyond the degree.
    pub fn coeff<F: Field<Elem = E>>(&self, field: &F, k: usize) -> E {
        self.coeffs.get(k).cloned().unwrap_or_else(|| field.zero())
    }

    fn trim<F: Field<Elem = E>>(&mut self, field: &F) {
        while let Some(c) = self.coeffs.last() {
            if field.is_zero(c) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| field.add(&self.coeff(field, k), &other.coeff(field, k)))
            .collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| field.sub(&self.coeff(field, k), &other.coeff(field, k)))
            .collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        ScalarPoly {
            coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        Self::from_coeffs(field, self.coeffs.iter().map(|c| field.mul(c, s)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(&coeffs[i + j], &field.mul(a, b));
            }
        }
        Self::from_coeffs(field, coeffs)
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, e: u32) -> Self {
        let mut acc = Self::constant(field, field.one());
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn derivative<F: Field<Elem = E>>(&self, field: &F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| field.mul(&field.from_i64(k as i64), c))
            .collect();
        Self::from_coeffs(field, coeffs)
    }

    /// Euclidean division. Returns `None` when `divisor` is zero.
    pub fn div_rem<F: Field<Elem = E>>(&self, field: &F, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = field.inv(divisor.leading()?)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = field.mul(&rem[k + dd], &lead_inv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = field.sub(&rem[k + j], &field.mul(&q, d));
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(field, quot), Self::from_coeffs(field, rem)))
    }

    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.leading().and_then(|l| field.inv(l)) {
            Some(inv) => self.scale(field, &inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(field, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Composition `self(g(y))`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(field, g).add(field, &Self::constant(field, c.clone()))
        })
    }

    pub fn display<F: Field<Elem = E>>(&self, field: &F, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let c = field.format(c);
            parts.push(match k {
                0 => c,
                1 => format!("({c})*{var}"),
                _ => format!("({c})*{var}^{k}"),
            });
        }
        parts.join(" + ")
    }
}
