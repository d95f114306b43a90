//! Sylvester resultants of bivariate polynomials over exact fields.

use crate::field::Field;
use crate::fibpoly::BiPoly;
use crate::poly::ScalarPoly;

/// Determinant of a square matrix over `F[y]` by fraction-free Bareiss
/// elimination. Every division is exact.
pub fn bareiss_det<F: Field>(f: &F, mut m: Vec<Vec<ScalarPoly<F::Elem>>>) -> ScalarPoly<F::Elem> {
    let n = m.len();
    if n == 0 {
        return ScalarPoly::constant(f, f.one());
    }
    let mut negate = false;
    let mut prev = ScalarPoly::constant(f, f.one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return ScalarPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(f, &m[i][j]).sub(f, &m[i][k].mul(f, &m[k][j]));
                let (q, _) = num.div_rem(f, &prev).expect("Bareiss pivot is nonzero");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg(f)
    } else {
        det
    }
}

/// Sylvester matrix of `a` and `b` (coefficient lists in ascending order).
pub fn sylvester<E: Clone>(a: &[ScalarPoly<E>], b: &[ScalarPoly<E>]) -> Vec<Vec<ScalarPoly<E>>> {
    let (da, db) = (a.len() - 1, b.len() - 1);
    let size = da + db;
    let mut m = vec![vec![ScalarPoly::zero(); size]; size];
    for r in 0..db {
        for (k, c) in a.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..da {
        for (k, c) in b.iter().rev().enumerate() {
            m[db + r][r + k] = c.clone();
        }
    }
    m
}

/// The resultant of `p` and `q` with respect to `z`, a polynomial in `y`.
///
/// Returns `None` when both polynomials are free of `z`; the resultant then
/// carries no information about common zeros.
pub fn resultant_z<F: Field>(f: &F, p: &BiPoly<F::Elem>, q: &BiPoly<F::Elem>) -> Option<ScalarPoly<F::Elem>> {
    if p.is_zero() || q.is_zero() {
        return Some(ScalarPoly::zero());
    }
    let a = p.coeffs_in_z(f);
    let b = q.coeffs_in_z(f);
    match (a.len() - 1, b.len() - 1) {
        (0, 0) => None,
        (0, db) => Some(a[0].pow(f, db as u32)),
        (da, 0) => Some(b[0].pow(f, da as u32)),
        _ => Some(bareiss_det(f, sylvester(&a, &b))),
    }
}

/// The resultant with respect to `y`, a polynomial in `z`.
pub fn resultant_y<F: Field>(f: &F, p: &BiPoly<F::Elem>, q: &BiPoly<F::Elem>) -> Option<ScalarPoly<F::Elem>> {
    resultant_z(f, &p.swap(), &q.swap())
}
