//! Brute-force ground truth over small prime fields.
//!
//! Everything here works by enumerating all `p^8` octonions and evaluating
//! polynomials with plain left-nested multiplication. Nothing in this module
//! uses the companion polynomials, the canonical forms or the solver, so it
//! can be used to check them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Range;

use rayon::prelude::*;
use thiserror::Error;

use crate::automorphism::Generator;
use crate::field::{Field, PrimeField};
use crate::linalg3::{Matrix3, Vec3};
use crate::octonion::Octonion;
use crate::poly::ScalarPoly;
use crate::solver::{count_bound_check, solve, OrbitSet, SolutionSet, SolverError, SystemKind};

/// Largest prime accepted by [`brute_solve`].
pub const MAX_ORACLE_PRIME: u64 = 5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("enumeration too large: GF({0}) has more than {max}^8 octonions", max = MAX_ORACLE_PRIME)]
    EnumerationTooLarge(u64),
    #[error("GF({0}) requires --slow")]
    NeedsSlow(u64),
    #[error("orbit closure is only computed over GF(2), not GF({0})")]
    OrbitNeedsGf2(u64),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// The octonion with index `idx` in base-`p` coordinate order
/// `(e1, u1, u2, u3, v1, v2, v3, e2)`, most significant first.
pub fn octonion_from_index(p: u64, mut idx: u64) -> Octonion<u64> {
    let mut c = [0u64; 8];
    for k in (0..8).rev() {
        c[k] = idx % p;
        idx /= p;
    }
    Octonion::from_coords(c)
}

pub fn octonion_index(p: u64, x: &Octonion<u64>) -> u64 {
    x.coords().iter().fold(0, |acc, c| acc * p + c)
}

/// Every octonion over GF(p), in index order.
pub fn all_octonions(f: &PrimeField) -> impl Iterator<Item = Octonion<u64>> {
    let p = f.modulus();
    (0..p.pow(8)).map(move |i| octonion_from_index(p, i))
}

/// A split of the `p^8` indices into disjoint contiguous blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationPlan {
    pub p: u64,
    pub total: u64,
    blocks: Vec<Range<u64>>,
}

impl EnumerationPlan {
    pub fn new(p: u64, block_count: u64) -> Self {
        let total = p.pow(8);
        let block_count = block_count.clamp(1, total);
        let size = total.div_ceil(block_count);
        let blocks = (0..block_count)
            .map(|b| (b * size).min(total)..((b + 1) * size).min(total))
            .filter(|r| !r.is_empty())
            .collect();
        EnumerationPlan { p, total, blocks }
    }

    pub fn blocks(&self) -> &[Range<u64>] {
        &self.blocks
    }
}

fn check_prime(f: &PrimeField) -> Result<(), OracleError> {
    match f.modulus() {
        p if p <= MAX_ORACLE_PRIME => Ok(()),
        p => Err(OracleError::EnumerationTooLarge(p)),
    }
}

/// `f(x) = sum a_k x^k` with `x^k = x^(k-1) x`.
pub fn eval_left_nested(f: &PrimeField, poly: &ScalarPoly<u64>, x: &Octonion<u64>) -> Octonion<u64> {
    let mut acc = Octonion::scalar(f, poly.coeff(f, 0));
    let mut power = Octonion::one(f);
    for k in 1..=poly.degree().unwrap_or(0) {
        power = power.mul(f, x);
        let a = poly.coeff(f, k);
        if a != 0 {
            acc = acc.add(f, &power.scale(f, &a));
        }
    }
    acc
}

/// The value `f(x)` for every octonion `x`, indexed like [`all_octonions`].
#[derive(Debug, Clone)]
pub struct ImageTable {
    p: u64,
    images: Vec<u32>,
}

impl ImageTable {
    pub fn build(f: &PrimeField, poly: &ScalarPoly<u64>) -> Result<Self, OracleError> {
        check_prime(f)?;
        let p = f.modulus();
        let plan = EnumerationPlan::new(p, 64);
        let parts: Vec<Vec<u32>> = plan
            .blocks()
            .par_iter()
            .map(|r| {
                r.clone()
                    .map(|i| octonion_index(p, &eval_left_nested(f, poly, &octonion_from_index(p, i))) as u32)
                    .collect()
            })
            .collect();
        Ok(ImageTable { p, images: parts.concat() })
    }

    /// All `x` with `f(x) = c`, in index order.
    pub fn preimage(&self, c: &Octonion<u64>) -> Vec<Octonion<u64>> {
        let target = octonion_index(self.p, c) as u32;
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == target)
            .map(|(i, _)| octonion_from_index(self.p, i as u64))
            .collect()
    }

    /// Preimage indices of every target at once.
    pub fn fibers(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            out[v as usize].push(i as u32);
        }
        out
    }
}

/// `{x in O(GF(p)) : f(x) = c}` by exhaustive evaluation, `p <= 5`.
pub fn brute_solve(f: &PrimeField, poly: &ScalarPoly<u64>, c: &Octonion<u64>) -> Result<Vec<Octonion<u64>>, OracleError> {
    check_prime(f)?;
    let p = f.modulus();
    let plan = EnumerationPlan::new(p, 64);
    let parts: Vec<Vec<Octonion<u64>>> = plan
        .blocks()
        .par_iter()
        .map(|r| {
            r.clone()
                .map(|i| octonion_from_index(p, i))
                .filter(|x| eval_left_nested(f, poly, x) == *c)
                .collect()
        })
        .collect();
    Ok(parts.concat())
}

/// All 168 matrices of SL3(GF(2)).
pub fn sl3_gf2() -> Vec<Matrix3<u64>> {
    let f = PrimeField::new(2).expect("2 is prime");
    (0u32..512)
        .map(|bits| {
            let e = |k: u32| ((bits >> k) & 1) as u64;
            Matrix3([[e(0), e(1), e(2)], [e(3), e(4), e(5)], [e(6), e(7), e(8)]])
        })
        .filter(|m| m.det(&f) == 1)
        .collect()
}

/// Every generator with every parameter value over GF(2).
pub fn gf2_generators() -> Vec<Generator<u64>> {
    let f = PrimeField::new(2).expect("2 is prime");
    let vectors: Vec<Vec3<u64>> = (0u64..8).map(|b| Vec3::new(b & 1, (b >> 1) & 1, (b >> 2) & 1)).collect();
    let mut gens: Vec<Generator<u64>> = sl3_gf2()
        .into_iter()
        .map(|m| Generator::sl3(&f, m).expect("det 1"))
        .collect();
    gens.extend(vectors.iter().cloned().map(Generator::Delta1));
    gens.extend(vectors.into_iter().map(Generator::Delta2));
    gens.push(Generator::Hbar);
    gens
}

/// The orbit of `a` under the generated automorphism group, over GF(2).
pub fn brute_orbit(f: &PrimeField, a: &Octonion<u64>) -> Result<Vec<Octonion<u64>>, OracleError> {
    if f.modulus() != 2 {
        return Err(OracleError::OrbitNeedsGf2(f.modulus()));
    }
    Ok(closure(f, &gf2_generators(), a))
}

fn closure(f: &PrimeField, gens: &[Generator<u64>], a: &Octonion<u64>) -> Vec<Octonion<u64>> {
    let p = f.modulus();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(octonion_index(p, a));
    queue.push_back(a.clone());
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(f, &x);
            if seen.insert(octonion_index(p, &y)) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().map(|i| octonion_from_index(p, i)).collect()
}

/// The orbits of all 256 octonions over GF(2), each sorted by index.
pub fn gf2_orbit_partition() -> Vec<Vec<Octonion<u64>>> {
    let f = PrimeField::new(2).expect("2 is prime");
    let gens = gf2_generators();
    let mut assigned = BTreeSet::new();
    let mut classes = Vec::new();
    for x in all_octonions(&f) {
        if assigned.contains(&octonion_index(2, &x)) {
            continue;
        }
        let orbit = closure(&f, &gens, &x);
        for y in &orbit {
            assigned.insert(octonion_index(2, y));
        }
        classes.push(orbit);
    }
    classes
}

/// All elements described by a solution set over GF(p): the points plus
/// every non-scalar `x` with `tr(x) = l`, `n(x) = -m` for each orbit `(l, m)`.
pub fn expand_solutions(f: &PrimeField, s: &SolutionSet<u64>) -> Vec<Octonion<u64>> {
    let p = f.modulus();
    let mut idx: BTreeSet<u64> = s.points.iter().map(|x| octonion_index(p, x)).collect();
    let labels: BTreeSet<(u64, u64)> = match &s.orbits {
        OrbitSet::Labels(v) => v.iter().cloned().collect(),
        OrbitSet::Variety { fhat, mucheck } => {
            // finite field: enumerate the conditions directly
            let mut out = BTreeSet::new();
            for l in 0..p {
                for m in 0..p {
                    if fhat.eval(f, &l, &m) == 0 && mucheck.eval(f, &l, &m) == 0 {
                        out.insert((l, m));
                    }
                }
            }
            out
        }
    };
    if !labels.is_empty() {
        for x in all_octonions(f) {
            if x.is_scalar(f) {
                continue;
            }
            if labels.contains(&(x.trace(f), f.neg(&x.norm(f)))) {
                idx.insert(octonion_index(p, &x));
            }
        }
    }
    idx.into_iter().map(|i| octonion_from_index(p, i)).collect()
}

/// A disagreement between the solver and enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub poly: ScalarPoly<u64>,
    pub c: Octonion<u64>,
    pub solver: Vec<Octonion<u64>>,
    pub oracle: Vec<Octonion<u64>>,
}

impl Counterexample {
    pub fn to_json(&self, f: &PrimeField) -> serde_json::Value {
        serde_json::json!({
            "f": self.poly.display(f, "y"),
            "c": self.c.format(f),
            "solver": self.solver.iter().map(|x| x.format(f)).collect::<Vec<_>>(),
            "oracle": self.oracle.iter().map(|x| x.format(f)).collect::<Vec<_>>(),
        })
    }
}

/// Outcome of comparing the solver with enumeration.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub p: u64,
    pub max_degree: usize,
    pub polynomials: usize,
    pub targets: usize,
    pub mismatches: Vec<Counterexample>,
    pub bound_violations: Vec<Counterexample>,
    pub errors: Vec<String>,
    /// Targets handled per system kind (non-scalar targets only).
    pub by_system: BTreeMap<&'static str, usize>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.bound_violations.is_empty() && self.errors.is_empty()
    }

    pub fn to_json(&self, f: &PrimeField) -> serde_json::Value {
        serde_json::json!({
            "field": format!("gf:{}", self.p),
            "max_degree": self.max_degree,
            "polynomials": self.polynomials,
            "targets": self.targets,
            "passed": self.passed(),
            "by_system": self.by_system,
            "mismatches": self.mismatches.iter().map(|c| c.to_json(f)).collect::<Vec<_>>(),
            "bound_violations": self.bound_violations.iter().map(|c| c.to_json(f)).collect::<Vec<_>>(),
            "errors": self.errors,
        })
    }
}

/// Every `f` over GF(p) with zero constant term and degree between 1 and
/// `max_degree`, ordered by coefficient vector.
pub fn all_polynomials(f: &PrimeField, max_degree: usize) -> Vec<ScalarPoly<u64>> {
    let p = f.modulus();
    let count = p.pow(max_degree as u32);
    (1..count)
        .map(|mut code| {
            let mut cs = vec![0u64];
            for _ in 0..max_degree {
                cs.push(code % p);
                code /= p;
            }
            ScalarPoly::from_coeffs(f, cs)
        })
        .collect()
}

/// Compares `solve` with enumeration for the given polynomials and every
/// target `c`.
pub fn verify_polynomials(f: &PrimeField, polys: &[ScalarPoly<u64>]) -> Result<VerifyReport, OracleError> {
    check_prime(f)?;
    let p = f.modulus();
    let total = p.pow(8);
    let partial: Vec<VerifyReport> = polys
        .par_iter()
        .map(|poly| {
            let mut rep = VerifyReport { p, ..Default::default() };
            let table = match ImageTable::build(f, poly) {
                Ok(t) => t,
                Err(e) => {
                    rep.errors.push(e.to_string());
                    return rep;
                }
            };
            let fibers = table.fibers();
            for ci in 0..total {
                let c = octonion_from_index(p, ci);
                rep.targets += 1;
                let oracle: Vec<Octonion<u64>> =
                    fibers[ci as usize].iter().map(|&i| octonion_from_index(p, i as u64)).collect();
                let s = match solve(f, poly, &c) {
                    Ok(s) => s,
                    Err(e) => {
                        rep.errors.push(format!("f = {}, c = {}: {e}", poly.display(f, "y"), c.format(f)));
                        continue;
                    }
                };
                let got = expand_solutions(f, &s);
                let cx = || Counterexample {
                    poly: poly.clone(),
                    c: c.clone(),
                    solver: got.clone(),
                    oracle: oracle.clone(),
                };
                if got != oracle {
                    rep.mismatches.push(cx());
                }
                if !c.is_scalar(f) {
                    if let Some(kind) = s.system {
                        *rep.by_system.entry(kind.name()).or_default() += 1;
                    }
                    if !count_bound_check(poly, &s) || oracle.len() > poly.degree().unwrap_or(0).pow(2) {
                        rep.bound_violations.push(cx());
                    }
                }
            }
            rep.polynomials = 1;
            rep
        })
        .collect();

    let mut out = VerifyReport { p, ..Default::default() };
    for r in partial {
        out.polynomials += r.polynomials;
        out.targets += r.targets;
        out.mismatches.extend(r.mismatches);
        out.bound_violations.extend(r.bound_violations);
        out.errors.extend(r.errors);
        for (k, v) in r.by_system {
            *out.by_system.entry(k).or_default() += v;
        }
    }
    out.max_degree = polys.iter().filter_map(|q| q.degree()).max().unwrap_or(0);
    Ok(out)
}

/// The sweep behind `octsolve verify`: every polynomial of degree at most
/// `max_degree` against every target. GF(5) is only swept when `slow` is set.
pub fn verify_sweep(p: u64, max_degree: usize, slow: bool) -> Result<VerifyReport, OracleError> {
    if p > MAX_ORACLE_PRIME {
        return Err(OracleError::EnumerationTooLarge(p));
    }
    if p > 3 && !slow {
        return Err(OracleError::NeedsSlow(p));
    }
    let f = PrimeField::new(p).map_err(|_| OracleError::EnumerationTooLarge(p))?;
    let polys = all_polynomials(&f, max_degree);
    let mut rep = verify_polynomials(&f, &polys)?;
    rep.max_degree = max_degree;
    Ok(rep)
}

/// Number of targets each kind of system handled in a report.
pub fn system_count(rep: &VerifyReport, kind: SystemKind) -> usize {
    rep.by_system.get(kind.name()).copied().unwrap_or(0)
}
