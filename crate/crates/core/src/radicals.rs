//! Closed-form square roots over any field and cube roots over R.

use thiserror::Error;

use crate::field::{Field, Reals};
use crate::octonion::{sort_dedup, Octonion};
use crate::poly::ScalarPoly;
use crate::solver::{OrbitSet, SolutionSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadicalError {
    #[error("the supplied value does not square to n(c)")]
    NotASquareRoot,
}

/// Which case of the square-root classification applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqrtCase {
    Scalar,
    /// `alpha` and `beta` are both nonzero squares.
    BothSquares,
    AlphaOnly,
    BetaOnly,
    Neither,
    /// `n(c)` is not a square.
    NormNotSquare,
    /// Characteristic 2, `tr(c) != 0`, with `tr(c)` and `n(c)` squares.
    Char2Traced,
    /// Characteristic 2, `tr(c) != 0`, but `tr(c)` or `n(c)` is not a square.
    Char2NotSquares,
    Char2Traceless,
}

/// Which case of the real cube-root classification applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbrtCase {
    Scalar,
    Traced,
    TracelessPositive,
    TracelessZero,
    TracelessNegative,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadicalResult<E, C> {
    pub case: C,
    pub points: Vec<Octonion<E>>,
    pub orbits: Vec<(E, E)>,
}

impl<E: Clone, C> RadicalResult<E, C> {
    pub fn into_solution_set(self) -> SolutionSet<E> {
        SolutionSet {
            points: self.points,
            orbits: OrbitSet::Labels(self.orbits),
            system: None,
            pairs: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.orbits.is_empty()
    }
}

fn nonzero_square_root<F: Field>(f: &F, a: &F::Elem) -> Option<F::Elem> {
    if f.is_zero(a) {
        None
    } else {
        f.sqrt(a)
    }
}

/// All `x` with `x^2 = c`, using the field's preferred square root of `n(c)`.
pub fn sqrt_octonion<F: Field>(f: &F, c: &Octonion<F::Elem>) -> RadicalResult<F::Elem, SqrtCase> {
    let nu = f.sqrt(&c.norm(f));
    sqrt_octonion_with_root(f, c, nu.as_ref()).expect("the field's own square root is valid")
}

/// All `x` with `x^2 = c`, with `nu` playing the role of the square root of
/// `n(c)` (`None` when `n(c)` is not a square). The solution set does not
/// depend on the choice; only the reported case does.
pub fn sqrt_octonion_with_root<F: Field>(
    f: &F,
    c: &Octonion<F::Elem>,
    nu: Option<&F::Elem>,
) -> Result<RadicalResult<F::Elem, SqrtCase>, RadicalError> {
    let n = c.norm(f);
    if let Some(nu) = nu {
        if !f.eq(&f.square(nu), &n) {
            return Err(RadicalError::NotASquareRoot);
        }
    }
    if let Some(g) = c.as_scalar(f) {
        let mut points: Vec<_> = f
            .sqrt(&g)
            .map(|r| vec![Octonion::scalar(f, r.clone()), Octonion::scalar(f, f.neg(&r))])
            .unwrap_or_default();
        sort_dedup(f, &mut points);
        return Ok(RadicalResult {
            case: SqrtCase::Scalar,
            points,
            orbits: vec![(f.zero(), g)],
        });
    }

    let t = c.trace(f);
    let empty = |case| Ok(RadicalResult { case, points: Vec::new(), orbits: Vec::new() });

    if f.characteristic() == 2 {
        if f.is_zero(&t) {
            return empty(SqrtCase::Char2Traceless);
        }
        return match (f.sqrt(&t), nu) {
            (Some(rt), Some(nu)) => {
                let x = c.add_scalar(f, nu).scale(f, &f.inv(&rt).expect("tr(c) != 0"));
                Ok(RadicalResult { case: SqrtCase::Char2Traced, points: vec![x], orbits: Vec::new() })
            }
            _ => empty(SqrtCase::Char2NotSquares),
        };
    }

    let Some(nu) = nu else {
        return empty(SqrtCase::NormNotSquare);
    };
    let two_nu = f.add(nu, nu);
    let alpha = f.add(&t, &two_nu);
    let beta = f.sub(&t, &two_nu);
    let mut points = Vec::new();
    let ra = nonzero_square_root(f, &alpha);
    let rb = nonzero_square_root(f, &beta);
    if let Some(r) = &ra {
        let x = c.add_scalar(f, nu).scale(f, &f.inv(r).expect("nonzero"));
        points.push(x.neg(f));
        points.push(x);
    }
    if let Some(r) = &rb {
        let x = c.add_scalar(f, &f.neg(nu)).scale(f, &f.inv(r).expect("nonzero"));
        points.push(x.neg(f));
        points.push(x);
    }
    let case = match (ra.is_some(), rb.is_some()) {
        (true, true) => SqrtCase::BothSquares,
        (true, false) => SqrtCase::AlphaOnly,
        (false, true) => SqrtCase::BetaOnly,
        (false, false) => SqrtCase::Neither,
    };
    sort_dedup(f, &mut points);
    Ok(RadicalResult { case, points, orbits: Vec::new() })
}

/// Whether `x^2 = c` has a solution over R: it fails exactly for non-scalar
/// `c` with `0 <= 4 n(c) <= tr(c)^2` and `tr(c) <= 0`, or with `n(c) < 0`.
pub fn real_sqrt_feasible(f: &Reals, c: &Octonion<f64>) -> bool {
    if c.is_scalar(f) {
        return true;
    }
    let t = c.trace(f);
    let n = c.norm(f);
    let blocked = (0.0 <= 4.0 * n && 4.0 * n <= t * t && t <= 0.0) || n < 0.0;
    !blocked
}

/// All `x` with `x^3 = c` over R.
///
/// For traceless `c` with `n(c) > 0` there are three solutions:
/// `x1 = -c / n^(1/3)` and `(c / n^(1/3) +- sqrt(3) n^(1/6)) / 2`.
pub fn cbrt_octonion_real(f: &Reals, c: &Octonion<f64>) -> RadicalResult<f64, CbrtCase> {
    if let Some(g) = c.as_scalar(f) {
        let r = f.real_cbrt(g);
        return RadicalResult {
            case: CbrtCase::Scalar,
            points: vec![Octonion::scalar(f, r)],
            orbits: vec![(-r, -(r * r))],
        };
    }
    let t = c.trace(f);
    let n = c.norm(f);
    if f.is_zero(&t) {
        if f.is_zero(&n) {
            return RadicalResult { case: CbrtCase::TracelessZero, points: Vec::new(), orbits: Vec::new() };
        }
        let cr = f.real_cbrt(n);
        let x1 = c.scale(f, &(-1.0 / cr));
        if n < 0.0 {
            return RadicalResult { case: CbrtCase::TracelessNegative, points: vec![x1], orbits: Vec::new() };
        }
        let shift = 3f64.sqrt() * n.powf(1.0 / 6.0);
        let base = c.scale(f, &(1.0 / cr));
        let x2 = base.add_scalar(f, &shift).scale(f, &0.5);
        let x2b = base.add_scalar(f, &-shift).scale(f, &0.5);
        let mut points = vec![x1, x2, x2b];
        sort_dedup(f, &mut points);
        return RadicalResult { case: CbrtCase::TracelessPositive, points, orbits: Vec::new() };
    }

    let mut points = Vec::new();
    for l in traced_cbrt_lambdas(f, t, n) {
        let d = 2.0 * l * l * l + t;
        if f.is_zero(&d) {
            continue;
        }
        let x = c.add_scalar(f, &(-t / 2.0)).scale(f, &(3.0 * l / d)).add_scalar(f, &(l / 2.0));
        points.push(x);
    }
    sort_dedup(f, &mut points);
    RadicalResult { case: CbrtCase::Traced, points, orbits: Vec::new() }
}

/// The polynomial in `l` whose real roots parametrize the cube roots of a
/// non-scalar `c` with trace `t != 0` and norm `n`:
/// `(2 l^3 + t)^2 (l^3 - 4 t) - 27 l^3 (4 n - t^2)`.
pub fn traced_cbrt_polynomial(f: &Reals, t: f64, n: f64) -> ScalarPoly<f64> {
    // in s = l^3: 4 s^3 - 12 t s^2 + (12 t^2 - 108 n) s - 4 t^3
    let mut coeffs = vec![0.0; 10];
    coeffs[9] = 4.0;
    coeffs[6] = -12.0 * t;
    coeffs[3] = 12.0 * t * t - 108.0 * n;
    coeffs[0] = -4.0 * t * t * t;
    ScalarPoly::from_coeffs(f, coeffs)
}

/// Real roots of [`traced_cbrt_polynomial`].
pub fn traced_cbrt_lambdas(f: &Reals, t: f64, n: f64) -> Vec<f64> {
    f.univariate_roots(&traced_cbrt_polynomial(f, t, n)).unwrap_or_default()
}
