use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use super::{Field, FieldCapabilities, FieldError};
use crate::poly::ScalarPoly;

/// The rational numbers, exact, with arbitrary-precision numerator and
/// denominator kept in lowest terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        int(n)
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn eq(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }
    fn magnitude(&self, a: &BigRational) -> f64 {
        a.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        let n = isqrt_exact(a.numer())?;
        let d = isqrt_exact(a.denom())?;
        Some(BigRational::new(n, d))
    }

    fn univariate_roots(&self, p: &ScalarPoly<BigRational>) -> Result<Vec<BigRational>, FieldError> {
        if p.is_zero() {
            return Err(FieldError::IndeterminateRootSet);
        }
        Ok(rational_roots(p))
    }

    fn cmp(&self, a: &BigRational, b: &BigRational) -> Ordering {
        a.cmp(b)
    }

    fn parse(&self, s: &str) -> Result<BigRational, FieldError> {
        s.trim().parse::<BigRational>().map_err(|_| FieldError::InvalidLiteral {
            literal: s.to_string(),
            field: "Q".to_string(),
        })
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn to_json(&self, a: &BigRational) -> serde_json::Value {
        serde_json::Value::String(a.to_string())
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> BigRational {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=6);
        BigRational::new(n.into(), d.into())
    }

    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn capabilities(&self) -> FieldCapabilities {
        FieldCapabilities {
            has_sqrt: true,
            has_cbrt: false,
            enumerable: false,
            has_univariate_roots: true,
            characteristic: 0,
        }
    }

    fn name(&self) -> String {
        "Q".to_string()
    }
}

/// Rational roots of a nonzero polynomial.
///
/// The squarefree part is isolated with an exact Sturm chain. Any rational root
/// `a/b` of the primitive integer form has `b | lc`, so two such candidates are
/// at least `1/lc^2` apart; once an isolating interval is narrower than that,
/// the rational of least denominator inside it is the only possible rational
/// root there and a single exact evaluation decides it.
fn rational_roots(p: &ScalarPoly<BigRational>) -> Vec<BigRational> {
    let f = Rationals;
    let mut roots = Vec::new();
    if p.degree() == Some(0) {
        return roots;
    }
    let g = p.gcd(&f, &p.derivative(&f));
    let (mut sf, _) = p.div_rem(&f, &g).expect("gcd of nonzero poly is nonzero");
    sf = sf.monic(&f);

    if sf.coeffs()[0].is_zero() {
        roots.push(BigRational::zero());
        sf = ScalarPoly::from_coeffs(&f, sf.coeffs()[1..].to_vec());
    }
    if sf.degree().unwrap_or(0) == 0 {
        return roots;
    }

    let lc = primitive_leading(&sf);
    let width_goal = BigRational::new(BigInt::one(), BigInt::from(2) * &lc * &lc);

    let bound = cauchy_bound(&sf);
    let chain = sturm_chain(&sf);
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations(&chain, &lo) - variations(&chain, &hi);
        match count.cmp(&1) {
            Ordering::Less => continue,
            Ordering::Equal => {
                if let Some(r) = refine_single(&sf, lo, hi, &width_goal, &lc) {
                    roots.push(r);
                }
            }
            Ordering::Greater => {
                let two = int(2);
                let mut split = (&lo + &hi) / &two;
                while sf.eval(&f, &split).is_zero() {
                    roots.push(split.clone());
                    split = (&split + &hi) / &two;
                }
                stack.push((lo, split.clone()));
                stack.push((split, hi));
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Leading coefficient of the primitive integer multiple of `p`.
fn primitive_leading(p: &ScalarPoly<BigRational>) -> BigInt {
    let denom_lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    (ints.last().expect("nonzero poly") / content).abs()
}

fn cauchy_bound(p: &ScalarPoly<BigRational>) -> BigRational {
    let lead = p.leading().expect("nonzero poly").abs();
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    (m + int(1)).ceil() + int(1)
}

fn sturm_chain(p: &ScalarPoly<BigRational>) -> Vec<ScalarPoly<BigRational>> {
    let f = Rationals;
    let mut chain = vec![p.clone(), p.derivative(&f)];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&f, &chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(r.neg(&f));
    }
    chain
}

fn variations(chain: &[ScalarPoly<BigRational>], x: &BigRational) -> i64 {
    let f = Rationals;
    let mut count = 0;
    let mut last: Option<bool> = None;
    for q in chain {
        let v = q.eval(&f, x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(l) = last {
            if l != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Narrows an interval holding exactly one simple root and returns that root
/// if it is rational.
fn refine_single(
    sf: &ScalarPoly<BigRational>,
    mut lo: BigRational,
    mut hi: BigRational,
    width_goal: &BigRational,
    lc: &BigInt,
) -> Option<BigRational> {
    let f = Rationals;
    let two = int(2);
    let mut sign_lo = sf.eval(&f, &lo).is_positive();
    loop {
        let s = simplest_between(&lo, &hi);
        if s.denom() <= lc && sf.eval(&f, &s).is_zero() {
            return Some(s);
        }
        if &hi - &lo < *width_goal {
            return None;
        }
        let mid = (&lo + &hi) / &two;
        let v = sf.eval(&f, &mid);
        if v.is_zero() {
            return Some(mid);
        }
        if v.is_positive() == sign_lo {
            lo = mid;
            sign_lo = v.is_positive();
        } else {
            hi = mid;
        }
    }
}

/// Floating-point approximations of all real roots of `p`, each accurate to
/// about one ulp. Isolation is exact, so repeated and clustered roots are
/// reported exactly once each.
pub(crate) fn real_root_approximations(p: &ScalarPoly<BigRational>) -> Vec<f64> {
    let f = Rationals;
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let g = p.gcd(&f, &p.derivative(&f));
    let (sf, _) = p.div_rem(&f, &g).expect("gcd of nonzero poly is nonzero");
    let sf = sf.monic(&f);
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }

    // all sign evaluations happen at dyadic points a / 2^k on integer polynomials
    let chain: Vec<Vec<BigInt>> = sturm_chain(&sf).iter().map(cleared).collect();
    let top = &chain[0];
    let e = cauchy_bound(&sf).to_integer().bits() as usize;
    let bound = BigInt::one() << e;
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound, 0usize)];
    while let Some((lo, hi, k)) = stack.pop() {
        let count = dyadic_variations(&chain, &lo, k) - dyadic_variations(&chain, &hi, k);
        match count.cmp(&1) {
            Ordering::Less => continue,
            Ordering::Equal => roots.push(bisect_to_f64(top, lo, hi, k)),
            Ordering::Greater => {
                let (mut lo, mut hi, mut k) = (lo << 1usize, hi << 1usize, k + 1);
                let mut split = (&lo + &hi) >> 1usize;
                // keep roots off the split point; counting finds them inside
                while sign_at(top, &split, k).is_eq() {
                    lo <<= 1usize;
                    hi <<= 1usize;
                    k += 1;
                    split = (&(split << 1usize) + &hi) >> 1usize;
                }
                stack.push((lo, split.clone(), k));
                stack.push((split, hi, k));
            }
        }
    }
    roots.sort_by(|a, b| a.total_cmp(b));
    roots
}

/// Integer coefficients with the same sign pattern: `p` times the positive
/// lcm of its denominators.
fn cleared(p: &ScalarPoly<BigRational>) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect()
}

/// Sign of `p(a / 2^k)`, from `2^(k d) p(a / 2^k)` evaluated in integers.
fn sign_at(p: &[BigInt], a: &BigInt, k: usize) -> Ordering {
    let d = p.len() - 1;
    let mut acc = p[d].clone();
    for j in 1..=d {
        acc = acc * a + (&p[d - j] << (k * j));
    }
    acc.sign().cmp(&num_bigint::Sign::NoSign)
}

fn dyadic_variations(chain: &[Vec<BigInt>], a: &BigInt, k: usize) -> i64 {
    let mut count = 0;
    let mut last = None;
    for q in chain {
        let s = sign_at(q, a, k);
        if s.is_eq() {
            continue;
        }
        if last.is_some_and(|l| l != s) {
            count += 1;
        }
        last = Some(s);
    }
    count
}

/// Bisects `[lo, hi] / 2^k`, which holds one simple root of `p`, until its
/// width is below the spacing of doubles near the root.
fn bisect_to_f64(p: &[BigInt], mut lo: BigInt, mut hi: BigInt, mut k: usize) -> f64 {
    let to_f64 = |a: BigInt, k: usize| BigRational::new(a, BigInt::one() << k).to_f64().unwrap_or(f64::NAN);
    let sign_lo = sign_at(p, &lo, k);
    loop {
        let width = &hi - &lo;
        let scale = lo.abs().max(hi.abs());
        if (&width << 60usize) <= scale || k >= 1075 + width.bits() as usize {
            return to_f64(lo + hi, k + 1);
        }
        lo <<= 1usize;
        hi <<= 1usize;
        k += 1;
        let mid = (&lo + &hi) >> 1usize;
        match sign_at(p, &mid, k) {
            Ordering::Equal => return to_f64(mid, k),
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
}

/// The rational with the smallest denominator in the closed interval `[a, b]`.
pub(crate) fn simplest_between(a: &BigRational, b: &BigRational) -> BigRational {
    debug_assert!(a <= b);
    if !a.is_positive() && !b.is_negative() {
        return BigRational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if &fl == a {
        return fl;
    }
    let next = &fl + int(1);
    if &next <= b {
        return next;
    }
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}
