use std::cmp::Ordering;

use rand::{Rng, RngCore};

use super::{Field, FieldCapabilities, FieldError};
use crate::poly::ScalarPoly;

/// Above this modulus root finding switches from enumeration to gcd with
/// `y^p - y` followed by equal-degree splitting.
const ENUMERATION_LIMIT: u64 = 1 << 16;

/// The prime field GF(p), `p <= 2^31`, with elements stored as their least
/// nonnegative residue.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p > 1 << 31 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn pow_u64(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    fn is_square(&self, a: u64) -> bool {
        a == 0 || self.p == 2 || self.pow_u64(a, (self.p - 1) / 2) == 1
    }

    /// Tonelli-Shanks.
    fn sqrt_raw(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 || p == 2 {
            return Some(a);
        }
        if !self.is_square(a) {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow_u64(a, (p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| !self.is_square(z)).expect("nonresidue exists");
        let mut m = s;
        let mut c = self.pow_u64(z, q);
        let mut t = self.pow_u64(a, q);
        let mut r = self.pow_u64(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = tt * tt % p;
                i += 1;
            }
            let b = self.pow_u64(c, 1 << (m - i - 1));
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
        Some(r)
    }

    fn roots_by_enumeration(&self, p: &ScalarPoly<u64>) -> Vec<u64> {
        (0..self.p).filter(|x| p.eval(self, x) == 0).collect()
    }

    /// `base^e mod m` in GF(p)[y].
    fn poly_powmod(&self, base: &ScalarPoly<u64>, mut e: u64, m: &ScalarPoly<u64>) -> ScalarPoly<u64> {
        let mut acc = ScalarPoly::constant(self, 1);
        let mut b = base.div_rem(self, m).expect("nonzero modulus").1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(self, &b).div_rem(self, m).expect("nonzero modulus").1;
            }
            b = b.mul(self, &b).div_rem(self, m).expect("nonzero modulus").1;
            e >>= 1;
        }
        acc
    }

    /// Roots via `gcd(f, y^p - y)` and deterministic equal-degree splitting.
    fn roots_by_splitting(&self, f: &ScalarPoly<u64>) -> Vec<u64> {
        let y = ScalarPoly::monomial(self, 1, 1);
        let f = f.monic(self);
        let yp = self.poly_powmod(&y, self.p, &f);
        let linear = f.gcd(self, &yp.sub(self, &y));
        let mut roots = Vec::new();
        let mut pending = vec![linear];
        let mut shift = 0u64;
        while let Some(g) = pending.pop() {
            match g.degree() {
                None | Some(0) => {}
                Some(1) => {
                    let c = g.monic(self).coeffs()[0];
                    roots.push(self.neg(&c));
                }
                Some(_) => {
                    // a nonresidue test on (y + shift) splits the roots of g in
                    // two unless all of them land on the same side; retry with
                    // the next shift until it does.
                    loop {
                        shift += 1;
                        let lin = ScalarPoly::from_coeffs(self, vec![shift % self.p, 1]);
                        let h = self.poly_powmod(&lin, (self.p - 1) / 2, &g);
                        let d = g.gcd(self, &h.sub(self, &ScalarPoly::constant(self, 1)));
                        let dd = d.degree().unwrap_or(0);
                        if dd > 0 && Some(dd) < g.degree() {
                            let (other, _) = g.div_rem(self, &d).expect("nonzero divisor");
                            pending.push(d);
                            pending.push(other);
                            break;
                        }
                    }
                }
            }
        }
        roots.sort_unstable();
        roots.dedup();
        roots
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow_u64(*a, self.p - 2))
    }
    fn pow(&self, a: &u64, e: u32) -> u64 {
        self.pow_u64(*a, e as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn eq(&self, a: &u64, b: &u64) -> bool {
        a == b
    }
    fn magnitude(&self, a: &u64) -> f64 {
        if *a == 0 {
            0.0
        } else {
            1.0
        }
    }

    fn sqrt(&self, a: &u64) -> Option<u64> {
        self.sqrt_raw(*a).map(|r| r.min(self.neg(&r)))
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn elements(&self) -> Option<Box<dyn Iterator<Item = u64> + '_>> {
        Some(Box::new(0..self.p))
    }

    fn univariate_roots(&self, p: &ScalarPoly<u64>) -> Result<Vec<u64>, FieldError> {
        if p.is_zero() {
            return Err(FieldError::IndeterminateRootSet);
        }
        if p.degree() == Some(0) {
            return Ok(Vec::new());
        }
        if self.p <= ENUMERATION_LIMIT {
            Ok(self.roots_by_enumeration(p))
        } else {
            Ok(self.roots_by_splitting(p))
        }
    }

    fn cmp(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn parse(&self, s: &str) -> Result<u64, FieldError> {
        s.trim()
            .parse::<i64>()
            .map(|n| self.reduce(n))
            .map_err(|_| FieldError::InvalidLiteral {
                literal: s.to_string(),
                field: self.name(),
            })
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn to_json(&self, a: &u64) -> serde_json::Value {
        serde_json::Value::from(*a)
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn capabilities(&self) -> FieldCapabilities {
        FieldCapabilities {
            has_sqrt: true,
            has_cbrt: false,
            enumerable: true,
            has_univariate_roots: true,
            characteristic: self.p,
        }
    }

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
}
