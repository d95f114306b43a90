//! Solving `f(x) = c` for a scalar polynomial `f` without constant term and
//! an octonion `c`.
//!
//! Writing `t = tr(x)` and `m = -n(x)`, every solution satisfies
//! `fhat(t, m) x + m fcheck(t, m) 1 = c`. For scalar `c = g 1` the solutions are
//! the scalars `nu 1` with `f(nu) = g` together with whole orbits `O(l, m)`
//! where `fhat(l, m) = 0` and `m fcheck(l, m) = g`. For non-scalar `c` each
//! solution is determined by a pair `(l, m)` solving a system of two
//! polynomial equations, and is recovered linearly from `c`.

pub mod resultant;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::fibpoly::{companions_at, eval_f_direct, fcheck, fhat, BiPoly, FibError};
use crate::field::rational::real_root_approximations;
use crate::field::{Field, FieldError, Rationals, Reals};
use crate::octonion::{sort_dedup, Octonion};
use crate::poly::ScalarPoly;

use resultant::{resultant_y, resultant_z};

/// Largest `|F|^2` for which pairs are found by enumerating `F x F`.
pub const PAIR_ENUMERATION_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Poly(#[from] FibError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("underdetermined system: the equations share a common component")]
    Underdetermined,
}

/// Which polynomial system describes the pairs `(l, m)` for non-scalar `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    /// Trace and norm equations taken directly, any characteristic.
    Raw,
    /// Characteristic other than 2: discriminant form.
    Discriminant,
    /// Characteristic 2 with `tr(c) != 0`.
    Char2Traced,
    /// Characteristic 2 with `tr(c) = 0`; forces `l = 0`.
    Char2Traceless,
    /// Scalar `c`: the orbit conditions `fhat = 0`, `m fcheck = g`.
    ScalarOrbits,
}

impl SystemKind {
    pub fn name(&self) -> &'static str {
        match self {
            SystemKind::Raw => "raw",
            SystemKind::Discriminant => "discriminant",
            SystemKind::Char2Traced => "char2-traced",
            SystemKind::Char2Traceless => "char2-traceless",
            SystemKind::ScalarOrbits => "scalar-orbits",
        }
    }
}

/// How to pick the system for non-scalar `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SystemChoice {
    /// The characteristic-specific system.
    #[default]
    Specialized,
    /// The direct trace/norm system.
    Raw,
}

/// `lhs = 0` for every equation, with `side != 0` (when present), in the
/// unknowns `l` (first variable) and `m` (second variable).
#[derive(Debug, Clone, PartialEq)]
pub struct SystemInstance<E> {
    pub kind: SystemKind,
    pub equations: [BiPoly<E>; 2],
    pub side: Option<BiPoly<E>>,
}

impl<E: Clone> SystemInstance<E> {
    pub fn holds_at<F: Field<Elem = E>>(&self, f: &F, l: &E, m: &E) -> bool {
        self.equations.iter().all(|e| f.is_zero(&e.eval(f, l, m)))
            && self.side.as_ref().is_none_or(|s| !f.is_zero(&s.eval(f, l, m)))
    }

    pub fn describe<F: Field<Elem = E>>(&self, f: &F) -> Vec<String> {
        let mut out: Vec<String> = self
            .equations
            .iter()
            .map(|e| format!("{} = 0", e.display(f, "l", "m")))
            .collect();
        if let Some(s) = &self.side {
            out.push(format!("{} != 0", s.display(f, "l", "m")));
        }
        out
    }
}

/// The orbit part of a solution set.
#[derive(Debug, Clone, PartialEq)]
pub enum OrbitSet<E> {
    /// Finitely many orbits `O(l, m)`, listed as `(l, m)`.
    Labels(Vec<(E, E)>),
    /// Elimination could not separate the conditions; the orbits are all
    /// `O(l, m)` with `fhat(l, m) = 0` and `m fcheck(l, m) = g`.
    Variety { fhat: BiPoly<E>, mucheck: BiPoly<E> },
}

impl<E> OrbitSet<E> {
    pub fn is_empty(&self) -> bool {
        matches!(self, OrbitSet::Labels(v) if v.is_empty())
    }

    pub fn labels(&self) -> Option<&[(E, E)]> {
        match self {
            OrbitSet::Labels(v) => Some(v),
            OrbitSet::Variety { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet<E> {
    pub points: Vec<Octonion<E>>,
    pub orbits: OrbitSet<E>,
    /// The system used and the pairs `(l, m)` it produced.
    pub system: Option<SystemKind>,
    pub pairs: Vec<(E, E)>,
    /// Candidates dropped by the final checks, with reasons.
    pub diagnostics: Vec<String>,
}

impl<E: Clone> SolutionSet<E> {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.orbits.is_empty()
    }

    pub fn to_json<F: Field<Elem = E>>(&self, f: &F) -> serde_json::Value {
        let points: Vec<_> = self.points.iter().map(|p| p.to_json(f)).collect();
        let orbits = match &self.orbits {
            OrbitSet::Labels(v) => serde_json::Value::Array(
                v.iter()
                    .map(|(l, m)| serde_json::json!({ "lambda": f.to_json(l), "mu": f.to_json(m) }))
                    .collect(),
            ),
            OrbitSet::Variety { fhat, mucheck } => serde_json::json!({
                "variety": {
                    "fhat": fhat.display(f, "l", "m"),
                    "mucheck": mucheck.display(f, "l", "m"),
                }
            }),
        };
        serde_json::json!({ "points": points, "orbits": orbits })
    }
}

fn validate<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>) -> Result<(BiPoly<F::Elem>, BiPoly<F::Elem>), SolverError> {
    Ok((fhat(f, poly)?, fcheck(f, poly)?))
}

/// The system for non-scalar `c` with `tr(c) = t`, `n(c) = n`.
pub fn build_system<F: Field>(
    f: &F,
    poly: &ScalarPoly<F::Elem>,
    t: &F::Elem,
    n: &F::Elem,
    kind: SystemKind,
) -> Result<SystemInstance<F::Elem>, SolverError> {
    let (hat, check) = validate(f, poly)?;
    let l = BiPoly::y(f);
    let m = BiPoly::z(f);
    let tc = BiPoly::constant(f, t.clone());
    let nc = BiPoly::constant(f, n.clone());
    let lin = |k: i64| BiPoly::constant(f, f.from_i64(k));
    // l fhat + 2 m fcheck
    let trace_eq = l.mul(f, &hat).add(f, &lin(2).mul(f, &m).mul(f, &check));
    let system = match kind {
        SystemKind::Raw => {
            // -m fhat^2 + l m fhat fcheck + m^2 fcheck^2 = n
            let lm = l.mul(f, &m);
            let norm_eq = m
                .neg(f)
                .mul(f, &hat.pow(f, 2))
                .add(f, &lm.mul(f, &hat).mul(f, &check))
                .add(f, &m.pow(f, 2).mul(f, &check.pow(f, 2)))
                .sub(f, &nc);
            SystemInstance {
                kind,
                equations: [trace_eq.sub(f, &tc), norm_eq],
                side: Some(hat),
            }
        }
        SystemKind::Discriminant => {
            // (l^2 + 4 m) fhat^2 = t^2 - 4 n
            let disc = f.sub(&f.square(t), &f.mul(&f.from_i64(4), n));
            let first = l
                .pow(f, 2)
                .add(f, &lin(4).mul(f, &m))
                .mul(f, &hat.pow(f, 2))
                .sub(f, &BiPoly::constant(f, disc));
            SystemInstance {
                kind,
                equations: [first, trace_eq.sub(f, &tc)],
                side: Some(hat),
            }
        }
        SystemKind::Char2Traced => {
            // l^2 m^2 fcheck^2 + l^2 m t fcheck = l^2 n + m t^2, cleared of 1/l^2
            let l2 = l.pow(f, 2);
            let first = l2
                .mul(f, &m.pow(f, 2))
                .mul(f, &check.pow(f, 2))
                .add(f, &l2.mul(f, &m).mul(f, &tc).mul(f, &check))
                .sub(f, &l2.mul(f, &nc))
                .sub(f, &m.mul(f, &BiPoly::constant(f, f.square(t))));
            SystemInstance {
                kind,
                equations: [first, l.mul(f, &hat).sub(f, &tc)],
                side: Some(l),
            }
        }
        SystemKind::Char2Traceless => {
            // l = 0 and m fhat(0,m)^2 + m^2 fcheck(0,m)^2 = n
            let zero = f.zero();
            let h0 = restrict_to_l_zero(f, &hat, &zero);
            let c0 = restrict_to_l_zero(f, &check, &zero);
            let first = m
                .mul(f, &h0.pow(f, 2))
                .add(f, &m.pow(f, 2).mul(f, &c0.pow(f, 2)))
                .sub(f, &nc);
            SystemInstance {
                kind,
                equations: [l, first],
                side: Some(h0),
            }
        }
        SystemKind::ScalarOrbits => {
            // here `t` carries g
            SystemInstance {
                kind,
                equations: [hat, m.mul(f, &check).sub(f, &tc)],
                side: None,
            }
        }
    };
    Ok(system)
}

/// `p(l0, m)` as a bivariate polynomial free of `l`.
fn restrict_to_l_zero<F: Field>(f: &F, p: &BiPoly<F::Elem>, l0: &F::Elem) -> BiPoly<F::Elem> {
    let q = p.subst_y(f, l0);
    q.coeffs()
        .iter()
        .enumerate()
        .fold(BiPoly::zero(), |acc, (j, c)| acc.add(f, &BiPoly::monomial(f, c.clone(), 0, j as u32)))
}

/// The system that applies to `c` when `c` is not scalar.
pub fn system_kind_for<F: Field>(f: &F, t: &F::Elem, choice: SystemChoice) -> SystemKind {
    match (choice, f.characteristic()) {
        (SystemChoice::Raw, _) => SystemKind::Raw,
        (SystemChoice::Specialized, 2) if f.is_zero(t) => SystemKind::Char2Traceless,
        (SystemChoice::Specialized, 2) => SystemKind::Char2Traced,
        (SystemChoice::Specialized, _) => SystemKind::Discriminant,
    }
}

/// All pairs `(l, m)` in `F x F` satisfying the system.
pub fn solve_bivariate<F: Field>(f: &F, sys: &SystemInstance<F::Elem>) -> Result<Vec<(F::Elem, F::Elem)>, SolverError> {
    let mut pairs = match f.order() {
        Some(q) if q.saturating_mul(q) <= PAIR_ENUMERATION_LIMIT => enumerate_pairs(f, sys),
        _ if f.is_exact() => eliminate_exact(f, sys)?,
        _ => eliminate_real(f, sys)?,
    };
    pairs.sort_by(|a, b| f.cmp(&a.0, &b.0).then(f.cmp(&a.1, &b.1)));
    let mut out: Vec<(F::Elem, F::Elem)> = Vec::with_capacity(pairs.len());
    for p in pairs {
        if !out.iter().any(|q| f.eq(&q.0, &p.0) && f.eq(&q.1, &p.1)) {
            out.push(p);
        }
    }
    Ok(out)
}

fn enumerate_pairs<F: Field>(f: &F, sys: &SystemInstance<F::Elem>) -> Vec<(F::Elem, F::Elem)> {
    let elems: Vec<F::Elem> = f.elements().expect("finite field").collect();
    let mut out = Vec::new();
    for l in &elems {
        for m in &elems {
            if sys.holds_at(f, l, m) {
                out.push((l.clone(), m.clone()));
            }
        }
    }
    out
}

/// Roots of a univariate polynomial; a nonzero constant has none and the zero
/// polynomial means the fiber is not finite.
fn roots_of<F: Field>(f: &F, p: &ScalarPoly<F::Elem>) -> Result<Vec<F::Elem>, SolverError> {
    match p.degree() {
        None => Err(SolverError::Underdetermined),
        Some(0) => Ok(Vec::new()),
        Some(_) => Ok(f.univariate_roots(p)?),
    }
}

fn eliminate_exact<F: Field>(f: &F, sys: &SystemInstance<F::Elem>) -> Result<Vec<(F::Elem, F::Elem)>, SolverError> {
    let [p, q] = &sys.equations;
    let mut out = Vec::new();
    let by_l = resultant_z(f, p, q).filter(|r| !r.is_zero());
    if let Some(r) = by_l {
        for l in roots_of(f, &r)? {
            let g = p.subst_y(f, &l).gcd(f, &q.subst_y(f, &l));
            for m in roots_of(f, &g)? {
                out.push((l.clone(), m));
            }
        }
    } else {
        let r = resultant_y(f, p, q)
            .filter(|r| !r.is_zero())
            .ok_or(SolverError::Underdetermined)?;
        for m in roots_of(f, &r)? {
            let g = p.subst_z(f, &m).gcd(f, &q.subst_z(f, &m));
            for l in roots_of(f, &g)? {
                out.push((l, m.clone()));
            }
        }
    }
    out.retain(|(l, m)| sys.holds_at(f, l, m));
    Ok(out)
}

/// Elimination for fields that approximate R. The system's coefficients are
/// converted exactly to rationals, both resultants are computed and isolated
/// exactly, and candidate pairs are polished by Newton's method in `f64`.
fn eliminate_real<F: Field>(f: &F, sys: &SystemInstance<F::Elem>) -> Result<Vec<(F::Elem, F::Elem)>, SolverError> {
    let q = Rationals;
    let r = Reals::default();
    let to_q = |c: &F::Elem| f.to_rational(c).expect("field embeds in R");
    let [p1, p2] = &sys.equations;
    let (e1, e2) = (p1.map_into(&q, to_q), p2.map_into(&q, to_q));
    let to_r = |c: &BigRational| c.to_f64().unwrap_or(f64::NAN);
    let (g1, g2) = (e1.map_into(&r, to_r), e2.map_into(&r, to_r));

    let res_l = resultant_z(&q, &e1, &e2).filter(|x| !x.is_zero());
    let res_m = resultant_y(&q, &e1, &e2).filter(|x| !x.is_zero());
    let ls = res_l.as_ref().map(real_root_approximations);
    let ms = res_m.as_ref().map(real_root_approximations);

    let mut candidates = Vec::new();
    match (ls, ms) {
        (Some(ls), Some(ms)) => {
            for l in &ls {
                for m in &ms {
                    candidates.push((*l, *m));
                }
            }
        }
        (Some(ls), None) => {
            for l in ls {
                for m in fiber_roots(&r, &g1.subst_y(&r, &l), &g2.subst_y(&r, &l))? {
                    candidates.push((l, m));
                }
            }
        }
        (None, Some(ms)) => {
            for m in ms {
                for l in fiber_roots(&r, &g1.subst_z(&r, &m), &g2.subst_z(&r, &m))? {
                    candidates.push((l, m));
                }
            }
        }
        (None, None) => return Err(SolverError::Underdetermined),
    }

    let side = sys.side.as_ref().map(|s| s.map_into(&r, |c| to_r(&to_q(c))));
    let mut out = Vec::new();
    for (l0, m0) in candidates {
        let (l, m) = newton_polish(&r, &g1, &g2, l0, m0);
        if relative_residual(&g1, l, m) > r.epsilon().sqrt() || relative_residual(&g2, l, m) > r.epsilon().sqrt() {
            continue;
        }
        if side.as_ref().is_some_and(|s| r.is_zero(&s.eval(&r, &l, &m))) {
            continue;
        }
        let conv = |x: f64| f.from_f64(x).expect("field approximates R");
        out.push((conv(l), conv(m)));
    }
    Ok(out)
}

fn fiber_roots(r: &Reals, a: &ScalarPoly<f64>, b: &ScalarPoly<f64>) -> Result<Vec<f64>, SolverError> {
    let p = if a.is_zero() { b } else { a };
    roots_of(r, p)
}

/// `|p(l, m)|` relative to the size of its largest term.
fn relative_residual(p: &BiPoly<f64>, l: f64, m: f64) -> f64 {
    let mut scale = 0.0f64;
    let mut value = 0.0f64;
    for ((i, j), c) in p.terms() {
        let term = c * l.powi(*i as i32) * m.powi(*j as i32);
        scale = scale.max(term.abs());
        value += term;
    }
    value.abs() / scale.max(1.0)
}

/// Damped Newton iteration on the two equations, keeping only steps that
/// reduce the residual.
fn newton_polish(r: &Reals, p: &BiPoly<f64>, q: &BiPoly<f64>, mut l: f64, mut m: f64) -> (f64, f64) {
    let (pl, pm, ql, qm) = (p.deriv_y(r), p.deriv_z(r), q.deriv_y(r), q.deriv_z(r));
    let resid = |l: f64, m: f64| relative_residual(p, l, m) + relative_residual(q, l, m);
    let mut best = resid(l, m);
    for _ in 0..8 {
        if best == 0.0 {
            break;
        }
        let (a, b) = (pl.eval(r, &l, &m), pm.eval(r, &l, &m));
        let (c, d) = (ql.eval(r, &l, &m), qm.eval(r, &l, &m));
        let det = a * d - b * c;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let (fp, fq) = (p.eval(r, &l, &m), q.eval(r, &l, &m));
        let dl = (d * fp - b * fq) / det;
        let dm = (a * fq - c * fp) / det;
        let mut step = 1.0;
        let mut improved = false;
        while step > 1e-3 {
            let (nl, nm) = (l - step * dl, m - step * dm);
            let nr = resid(nl, nm);
            if nr.is_finite() && nr < best {
                l = nl;
                m = nm;
                best = nr;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (l, m)
}

/// Recovers `x` from a pair, using the formula that belongs to the system.
fn recover<F: Field>(
    f: &F,
    kind: SystemKind,
    c: &Octonion<F::Elem>,
    t: &F::Elem,
    l: &F::Elem,
    m: &F::Elem,
    hat: &F::Elem,
    check: &F::Elem,
) -> Option<Octonion<F::Elem>> {
    let mc = f.mul(m, check);
    match kind {
        SystemKind::Raw => Some(c.add_scalar(f, &f.neg(&mc)).scale(f, &f.inv(hat)?)),
        SystemKind::Discriminant => {
            let two = f.from_i64(2);
            let half_t = f.div(t, &two)?;
            let half_l = f.div(l, &two)?;
            Some(c.add_scalar(f, &f.neg(&half_t)).scale(f, &f.inv(hat)?).add_scalar(f, &half_l))
        }
        SystemKind::Char2Traced => Some(c.add_scalar(f, &mc).scale(f, &f.div(l, t)?)),
        SystemKind::Char2Traceless => Some(c.add_scalar(f, &mc).scale(f, &f.inv(hat)?)),
        SystemKind::ScalarOrbits => None,
    }
}

/// Size of the terms of `f(x)`, for relative residuals over R.
fn evaluation_scale<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>, x: &Octonion<F::Elem>, c: &Octonion<F::Elem>) -> f64 {
    let xs = x.coords().iter().fold(0.0f64, |a, v| a.max(f.magnitude(v)));
    let cs = c.coords().iter().fold(0.0f64, |a, v| a.max(f.magnitude(v)));
    let terms = poly
        .coeffs()
        .iter()
        .enumerate()
        .fold(0.0f64, |a, (k, v)| a.max(f.magnitude(v) * xs.powi(k as i32)));
    terms.max(cs).max(1.0)
}

/// Whether `f(x) = c`: exact on exact fields, relative residual at most the
/// field tolerance otherwise.
pub fn satisfies<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>, x: &Octonion<F::Elem>, c: &Octonion<F::Elem>) -> bool {
    let fx = eval_f_direct(f, poly, x);
    if f.is_exact() {
        return fx == *c || fx.approx_eq(f, c);
    }
    let tol = f.tolerance();
    fx.distance(f, c) <= tol * evaluation_scale(f, poly, x, c)
}

/// Solves `f(x) = c` with the characteristic-specific system.
pub fn solve<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>, c: &Octonion<F::Elem>) -> Result<SolutionSet<F::Elem>, SolverError> {
    solve_with(f, poly, c, SystemChoice::Specialized)
}

pub fn solve_with<F: Field>(
    f: &F,
    poly: &ScalarPoly<F::Elem>,
    c: &Octonion<F::Elem>,
    choice: SystemChoice,
) -> Result<SolutionSet<F::Elem>, SolverError> {
    validate(f, poly)?;
    match c.as_scalar(f) {
        Some(g) => solve_scalar(f, poly, &g),
        None => solve_nonscalar(f, poly, c, choice),
    }
}

fn solve_scalar<F: Field>(f: &F, poly: &ScalarPoly<F::Elem>, g: &F::Elem) -> Result<SolutionSet<F::Elem>, SolverError> {
    let mut diagnostics = Vec::new();
    let target = Octonion::scalar(f, g.clone());
    let shifted = poly.sub(f, &ScalarPoly::constant(f, g.clone()));
    let mut points: Vec<Octonion<F::Elem>> = roots_of(f, &shifted)?
        .into_iter()
        .map(|nu| Octonion::scalar(f, nu))
        .filter(|x| {
            let ok = satisfies(f, poly, x, &target);
            if !ok {
                diagnostics.push(format!("dropped scalar candidate {}", x.format(f)));
            }
            ok
        })
        .collect();
    sort_dedup(f, &mut points);

    let sys = build_system(f, poly, g, &f.zero(), SystemKind::ScalarOrbits)?;
    let (orbits, pairs) = match solve_bivariate(f, &sys) {
        Ok(pairs) => {
            let mut labels = Vec::new();
            for (l, m) in &pairs {
                let rep = Octonion::canonical(f, l.clone(), m.clone());
                if satisfies(f, poly, &rep, &target) {
                    labels.push((l.clone(), m.clone()));
                } else {
                    diagnostics.push(format!("dropped orbit candidate ({}, {})", f.format(l), f.format(m)));
                }
            }
            (OrbitSet::Labels(labels), pairs)
        }
        Err(SolverError::Underdetermined) => {
            let [hat, mucheck] = sys.equations;
            diagnostics.push("orbit conditions are not zero-dimensional; reporting them symbolically".into());
            (OrbitSet::Variety { fhat: hat, mucheck }, Vec::new())
        }
        Err(e) => return Err(e),
    };
    Ok(SolutionSet {
        points,
        orbits,
        system: Some(SystemKind::ScalarOrbits),
        pairs,
        diagnostics,
    })
}

fn solve_nonscalar<F: Field>(
    f: &F,
    poly: &ScalarPoly<F::Elem>,
    c: &Octonion<F::Elem>,
    choice: SystemChoice,
) -> Result<SolutionSet<F::Elem>, SolverError> {
    let t = c.trace(f);
    let n = c.norm(f);
    let kind = system_kind_for(f, &t, choice);
    let sys = build_system(f, poly, &t, &n, kind)?;
    let pairs = solve_bivariate(f, &sys)?;
    let mut diagnostics = Vec::new();
    let mut points = Vec::new();
    for (l, m) in &pairs {
        let (hat, check) = companions_at(f, poly, l, m)?;
        let Some(x) = recover(f, kind, c, &t, l, m, &hat, &check) else {
            diagnostics.push(format!("pair ({}, {}) has fhat = 0", f.format(l), f.format(m)));
            continue;
        };
        let labels_ok = f.near(&x.trace(f), l) && f.near(&f.neg(&x.norm(f)), m);
        if !labels_ok {
            diagnostics.push(format!(
                "pair ({}, {}) gave {} with mismatched trace or norm",
                f.format(l),
                f.format(m),
                x.format(f)
            ));
            continue;
        }
        if !satisfies(f, poly, &x, c) {
            diagnostics.push(format!("candidate {} failed the residual check", x.format(f)));
            continue;
        }
        points.push(x);
    }
    sort_dedup(f, &mut points);
    Ok(SolutionSet {
        points,
        orbits: OrbitSet::Labels(Vec::new()),
        system: Some(kind),
        pairs,
        diagnostics,
    })
}

/// `|X| <= deg(f)^2` for non-scalar `c`.
pub fn count_bound_check<E: Clone>(poly: &ScalarPoly<E>, solutions: &SolutionSet<E>) -> bool {
    let n = poly.degree().unwrap_or(0);
    solutions.orbits.is_empty() && solutions.points.len() <= n * n
}
