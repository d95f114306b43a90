//! Generalized Fibonacci polynomials and the companion polynomials of `f`.
//!
//! `p_{-1} = 0`, `p_0 = 1`, `p_{k+1} = y p_k + z p_{k-1}`. For
//! `f(y) = a_n y^n + ... + a_1 y` the companions are
//! `fhat = sum a_k p_{k-1}` and `fcheck = sum a_k p_{k-2}`, and for every
//! octonion `a` with `t = tr(a)`, `m = -n(a)`:
//!
//! ```text
//! f(a) = fhat(t, m) a + m fcheck(t, m) 1
//! ```

use std::collections::BTreeMap;

use thiserror::Error;

use crate::field::Field;
use crate::octonion::Octonion;
use crate::poly::ScalarPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibError {
    #[error("Fibonacci index {0} is below -1")]
    NegativeIndex(i64),
    #[error("constant term must be zero")]
    NonzeroConstantTerm,
    #[error("the polynomial f must be nonzero")]
    ZeroPolynomial,
    #[error("invalid coefficient list: {0}")]
    InvalidCoefficients(String),
}

/// A polynomial in `y` and `z`, stored as a map from `(deg_y, deg_z)` to a
/// nonzero coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly<E> {
    terms: BTreeMap<(u32, u32), E>,
}

impl<E: Clone> BiPoly<E> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn constant<F: Field<Elem = E>>(f: &F, c: E) -> Self {
        Self::monomial(f, c, 0, 0)
    }

    pub fn one<F: Field<Elem = E>>(f: &F) -> Self {
        Self::constant(f, f.one())
    }

    pub fn monomial<F: Field<Elem = E>>(f: &F, c: E, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero(&c) {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn y<F: Field<Elem = E>>(f: &F) -> Self {
        Self::monomial(f, f.one(), 1, 0)
    }

    pub fn z<F: Field<Elem = E>>(f: &F) -> Self {
        Self::monomial(f, f.one(), 0, 1)
    }

    /// Builds a polynomial from integer terms `(coefficient, deg_y, deg_z)`;
    /// integers are mapped into the field, so they collapse in characteristic p.
    pub fn from_int_terms<F: Field<Elem = E>>(f: &F, terms: &[(i64, u32, u32)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, i, j)| {
            acc.add(f, &Self::monomial(f, f.from_i64(c), i, j))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &E)> {
        self.terms.iter()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, f: &F, i: u32, j: u32) -> E {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| f.zero())
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_z(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    fn insert_add<F: Field<Elem = E>>(terms: &mut BTreeMap<(u32, u32), E>, f: &F, key: (u32, u32), c: E) {
        let sum = match terms.get(&key) {
            Some(old) => f.add(old, &c),
            None => c,
        };
        if f.is_zero(&sum) {
            terms.remove(&key);
        } else {
            terms.insert(key, sum);
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            Self::insert_add(&mut terms, f, *k, c.clone());
        }
        BiPoly { terms }
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, f.neg(c))).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        self.add(f, &o.neg(f))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = f.mul(c, s);
            if !f.is_zero(&v) {
                terms.insert(*k, v);
            }
        }
        BiPoly { terms }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &o.terms {
                Self::insert_add(&mut terms, f, (i1 + i2, j1 + j2), f.mul(a, b));
            }
        }
        BiPoly { terms }
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, e: u32) -> Self {
        (0..e).fold(Self::one(f), |acc, _| acc.mul(f, self))
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, y: &E, z: &E) -> E {
        self.terms.iter().fold(f.zero(), |acc, ((i, j), c)| {
            f.add(&acc, &f.mul(c, &f.mul(&f.pow(y, *i), &f.pow(z, *j))))
        })
    }

    pub fn deriv_y<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let mut terms = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            if *i > 0 {
                Self::insert_add(&mut terms, f, (i - 1, *j), f.mul(c, &f.from_i64(*i as i64)));
            }
        }
        BiPoly { terms }
    }

    pub fn deriv_z<F: Field<Elem = E>>(&self, f: &F) -> Self {
        self.swap().deriv_y(f).swap()
    }

    /// Exchanges the roles of `y` and `z`.
    pub fn swap(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect(),
        }
    }

    /// Coefficients as a polynomial in `z` over `F[y]`: entry `j` is the
    /// coefficient of `z^j`.
    pub fn coeffs_in_z<F: Field<Elem = E>>(&self, f: &F) -> Vec<ScalarPoly<E>> {
        let dz = match self.degree_z() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut dense: Vec<Vec<E>> = vec![Vec::new(); dz + 1];
        for ((i, j), c) in &self.terms {
            let row = &mut dense[*j as usize];
            if row.len() <= *i as usize {
                row.resize(*i as usize + 1, f.zero());
            }
            row[*i as usize] = c.clone();
        }
        dense.into_iter().map(|r| ScalarPoly::from_coeffs(f, r)).collect()
    }

    /// `p(y0, z)` as a polynomial in `z`.
    pub fn subst_y<F: Field<Elem = E>>(&self, f: &F, y0: &E) -> ScalarPoly<E> {
        self.swap().subst_z(f, y0)
    }

    /// `p(y, z0)` as a polynomial in `y`.
    pub fn subst_z<F: Field<Elem = E>>(&self, f: &F, z0: &E) -> ScalarPoly<E> {
        let mut dense = vec![f.zero(); self.degree_y().map_or(0, |d| d as usize + 1)];
        for ((i, j), c) in &self.terms {
            let v = f.mul(c, &f.pow(z0, *j));
            dense[*i as usize] = f.add(&dense[*i as usize], &v);
        }
        ScalarPoly::from_coeffs(f, dense)
    }

    /// Moves every coefficient into another field.
    pub fn map_into<G: Field>(&self, g: &G, mut conv: impl FnMut(&E) -> G::Elem) -> BiPoly<G::Elem> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = conv(c);
            if !g.is_zero(&v) {
                terms.insert(*k, v);
            }
        }
        BiPoly { terms }
    }

    /// Human-readable form with the given variable names, highest total
    /// degree first.
    pub fn display<F: Field<Elem = E>>(&self, f: &F, y: &str, z: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        let mut out = String::new();
        for (n, k) in keys.into_iter().enumerate() {
            let c = &self.terms[k];
            let mut mono = Vec::new();
            for (var, e) in [(y, k.0), (z, k.1)] {
                match e {
                    0 => {}
                    1 => mono.push(var.to_string()),
                    _ => mono.push(format!("{var}^{e}")),
                }
            }
            let cs = f.format(c);
            let term = if mono.is_empty() {
                cs
            } else if f.is_one(c) {
                mono.join("*")
            } else {
                format!("{}*{}", paren(&cs), mono.join("*"))
            };
            if n > 0 {
                out.push_str(" + ");
            }
            out.push_str(&term);
        }
        out
    }
}

fn paren(s: &str) -> String {
    if s.contains(['+', '/']) || s[1..].contains('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// `p_{-1}, p_0, ..., p_n` as bivariate polynomials.
pub fn fib_sequence<F: Field>(f: &F, n: usize) -> Vec<BiPoly<F::Elem>> {
    let mut seq = vec![BiPoly::zero(), BiPoly::one(f)];
    let (y, z) = (BiPoly::y(f), BiPoly::z(f));
    while seq.len() < n + 2 {
        let k = seq.len();
        let next = y.mul(f, &seq[k - 1]).add(f, &z.mul(f, &seq[k - 2]));
        seq.push(next);
    }
    seq
}

/// The Fibonacci polynomial `p_n`, `n >= -1`.
pub fn fib<F: Field>(f: &F, n: i64) -> Result<BiPoly<F::Elem>, FibError> {
    if n < -1 {
        return Err(FibError::NegativeIndex(n));
    }
    let mut seq = fib_sequence(f, n.max(0) as usize);
    Ok(seq.swap_remove((n + 1) as usize))
}

fn check_f<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>) -> Result<usize, FibError> {
    let n = poly.degree().ok_or(FibError::ZeroPolynomial)?;
    if !f.is_zero(&poly.coeff(f, 0)) {
        return Err(FibError::NonzeroConstantTerm);
    }
    Ok(n)
}

/// `fhat = sum_k a_k p_{k-1}`.
pub fn fhat<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>) -> Result<BiPoly<F::Elem>, FibError> {
    companion(f, poly, 1)
}

/// `fcheck = sum_k a_k p_{k-2}`.
pub fn fcheck<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>) -> Result<BiPoly<F::Elem>, FibError> {
    companion(f, poly, 2)
}

fn companion<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>, shift: usize) -> Result<BiPoly<F::Elem>, FibError> {
    let n = check_f(f, poly)?;
    // seq[k] = p_{k-1}
    let seq = fib_sequence(f, n);
    let mut out = BiPoly::zero();
    for k in 1..=n {
        out = out.add(f, &seq[k + 1 - shift].scale(f, &poly.coeff(f, k)));
    }
    Ok(out)
}

/// `(fhat(y, z), fcheck(y, z))` evaluated directly by running the recurrence
/// on field elements.
pub fn companions_at<F: Field>(
    f: &F,
    poly: &ScalarPoly<F::Elem>,
    y: &F::Elem,
    z: &F::Elem,
) -> Result<(F::Elem, F::Elem), FibError> {
    let n = check_f(f, poly)?;
    let (mut prev, mut cur) = (f.zero(), f.one()); // p_{k-2}, p_{k-1} for k = 1
    let (mut hat, mut check) = (f.zero(), f.zero());
    for k in 1..=n {
        let a = poly.coeff(f, k);
        hat = f.add(&hat, &f.mul(&a, &cur));
        check = f.add(&check, &f.mul(&a, &prev));
        let next = f.add(&f.mul(y, &cur), &f.mul(z, &prev));
        prev = cur;
        cur = next;
    }
    Ok((hat, check))
}

/// `f(a)` through the companion polynomials.
pub fn eval_f_at_octonion<F: Field>(
    f: &F,
    poly: &ScalarPoly<F::Elem>,
    a: &Octonion<F::Elem>,
) -> Result<Octonion<F::Elem>, FibError> {
    let t = a.trace(f);
    let m = f.neg(&a.norm(f));
    let (hat, check) = companions_at(f, poly, &t, &m)?;
    Ok(a.scale(f, &hat).add_scalar(f, &f.mul(&m, &check)))
}

/// `f(a) = sum a_k a^k` by plain repeated multiplication.
pub fn eval_f_direct<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>, a: &Octonion<F::Elem>) -> Octonion<F::Elem> {
    let mut acc = Octonion::scalar(f, poly.coeff(f, 0));
    let mut power = Octonion::one(f);
    for k in 1..=poly.degree().unwrap_or(0) {
        power = power.mul(f, a);
        acc = acc.add(f, &power.scale(f, &poly.coeff(f, k)));
    }
    acc
}

/// Parses `a_n,...,a_1` (highest degree first, constant term implied zero).
pub fn parse_coefficients<F: Field>(f: &F, s: &str) -> Result<ScalarPoly<F::Elem>, FibError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(FibError::InvalidCoefficients(s.to_string()));
    }
    let mut coeffs = vec![f.zero()];
    for p in parts.iter().rev() {
        coeffs.push(f.parse(p).map_err(|e| FibError::InvalidCoefficients(e.to_string()))?);
    }
    let poly = ScalarPoly::from_coeffs(f, coeffs);
    if poly.is_zero() {
        return Err(FibError::ZeroPolynomial);
    }
    Ok(poly)
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
    fn low_index_values() {
        let f = Rationals;
        assert!(fib(&f, -1).unwrap().is_zero());
        assert_eq!(fib(&f, 0).unwrap(), BiPoly::one(&f));
        assert_eq!(fib(&f, 1).unwrap(), BiPoly::y(&f));
        assert_eq!(fib(&f, 2).unwrap(), BiPoly::from_int_terms(&f, &[(1, 2, 0), (1, 0, 1)]));
        assert_eq!(fib(&f, -2), Err(FibError::NegativeIndex(-2)));
    }

    #[test]
    fn recurrence_holds_to_twelve() {
        let f = Rationals;
        let (y, z) = (BiPoly::y(&f), BiPoly::z(&f));
        for k in 0..12 {
            let lhs = fib(&f, k + 1).unwrap();
            let rhs = y.mul(&f, &fib(&f, k).unwrap()).add(&f, &z.mul(&f, &fib(&f, k - 1).unwrap()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn characteristic_two_collapse() {
        let f = PrimeField::new(2).unwrap();
        // p_3 = y^3 + 2yz = y^3 over GF(2)
        assert_eq!(fib(&f, 3).unwrap(), BiPoly::from_int_terms(&f, &[(1, 3, 0)]));
    }

    #[test]
    fn companions_of_small_powers() {
        let f = Rationals;
        let y2 = ScalarPoly::monomial(&f, q(1), 2);
        assert_eq!(fhat(&f, &y2).unwrap(), BiPoly::y(&f));
        assert_eq!(fcheck(&f, &y2).unwrap(), BiPoly::one(&f));
        let y3 = ScalarPoly::monomial(&f, q(1), 3);
        assert_eq!(fhat(&f, &y3).unwrap(), BiPoly::from_int_terms(&f, &[(1, 2, 0), (1, 0, 1)]));
        assert_eq!(fcheck(&f, &y3).unwrap(), BiPoly::y(&f));
        let y1 = ScalarPoly::monomial(&f, q(1), 1);
        assert_eq!(fhat(&f, &y1).unwrap(), BiPoly::one(&f));
        assert!(fcheck(&f, &y1).unwrap().is_zero());
    }

    #[test]
    fn invalid_f_is_rejected() {
        let f = Rationals;
        let with_const = ScalarPoly::from_coeffs(&f, vec![q(1), q(1)]);
        assert_eq!(fhat(&f, &with_const), Err(FibError::NonzeroConstantTerm));
        assert_eq!(fhat(&f, &ScalarPoly::zero()), Err(FibError::ZeroPolynomial));
    }

    #[test]
    fn numeric_companions_match_polynomials() {
        let f = PrimeField::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let deg = 1 + (f.random_element(&mut rng) as usize % 6);
            let mut cs = vec![0u64];
            cs.extend((0..deg).map(|_| f.random_element(&mut rng)));
            let poly = ScalarPoly::from_coeffs(&f, cs);
            if poly.is_zero() {
                continue;
            }
            let (y, z) = (f.random_element(&mut rng), f.random_element(&mut rng));
            let (h, c) = companions_at(&f, &poly, &y, &z).unwrap();
            assert_eq!(h, fhat(&f, &poly).unwrap().eval(&f, &y, &z));
            assert_eq!(c, fcheck(&f, &poly).unwrap().eval(&f, &y, &z));
        }
    }

    #[test]
    fn square_reduces_to_quadratic_identity() {
        let f = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let y2 = ScalarPoly::monomial(&f, q(1), 2);
        for _ in 0..50 {
            let a = Octonion::random(&f, &mut rng);
            let (t, m) = (a.trace(&f), f.neg(&a.norm(&f)));
            let want = a.scale(&f, &t).add_scalar(&f, &m);
            assert_eq!(eval_f_at_octonion(&f, &y2, &a).unwrap(), want);
        }
    }

    #[test]
    fn companion_evaluation_matches_direct() {
        let fr = Reals::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut cs = vec![0.0];
            cs.extend((0..6).map(|_| fr.random_element(&mut rng)));
            let poly = ScalarPoly::from_coeffs(&fr, cs);
            let a = Octonion::random(&fr, &mut rng).scale(&fr, &0.3);
            let x = eval_f_at_octonion(&fr, &poly, &a).unwrap();
            let y = eval_f_direct(&fr, &poly, &a);
            assert!(x.distance(&fr, &y) < 1e-9, "{x:?} vs {y:?}");
        }
    }

    #[test]
    fn parses_coefficient_lists() {
        let f = Rationals;
        let p = parse_coefficients(&f, "1, 0, -1/2").unwrap();
        assert_eq!(p.coeffs(), &[q(0), BigRational::new((-1).into(), 2.into()), q(0), q(1)]);
        assert!(parse_coefficients(&f, "0,0").is_err());
        assert!(parse_coefficients(&f, "1,,2").is_err());
    }

    #[test]
    fn display_of_p6() {
        let f = Rationals;
        assert_eq!(fib(&f, 6).unwrap().display(&f, "y", "z"), "y^6 + 5*y^4*z + 6*y^2*z^2 + z^3");
    }
}
