//! Row 3-vectors and 3x3 matrices over a field, with the SL(3) moves used to
//! normalize octonions.
//!
//! Vectors are rows: a matrix acts on the right, `v -> v * g`.

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("zero vector has no normalizer")]
    ZeroVector,
    #[error("cannot rescale by zero")]
    ZeroScale,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not have determinant 1")]
    NotSpecial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3<E>(pub [E; 3]);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix3<E>(pub [[E; 3]; 3]);

impl<E: Clone> Vec3<E> {
    pub fn new(x1: E, x2: E, x3: E) -> Self {
        Vec3([x1, x2, x3])
    }

    pub fn zero<F: Field<Elem = E>>(f: &F) -> Self {
        Vec3([f.zero(), f.zero(), f.zero()])
    }

    /// Standard basis vector `c_i`, `i` in `0..3`.
    pub fn basis<F: Field<Elem = E>>(f: &F, i: usize) -> Self {
        let mut v = Self::zero(f);
        v.0[i] = f.one();
        v
    }

    pub fn from_i64<F: Field<Elem = E>>(f: &F, xs: [i64; 3]) -> Self {
        Vec3(xs.map(|x| f.from_i64(x)))
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.0.iter().all(|x| f.is_zero(x))
    }

    pub fn approx_eq<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| f.eq(a, b))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        Vec3(std::array::from_fn(|i| f.add(&self.0[i], &other.0[i])))
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        Vec3(std::array::from_fn(|i| f.sub(&self.0[i], &other.0[i])))
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Vec3(std::array::from_fn(|i| f.neg(&self.0[i])))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        Vec3(std::array::from_fn(|i| f.mul(&self.0[i], s)))
    }

    /// `v * m` for a row vector `v`.
    pub fn mul_mat<F: Field<Elem = E>>(&self, f: &F, m: &Matrix3<E>) -> Self {
        Vec3(std::array::from_fn(|j| {
            (0..3).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&self.0[i], &m.0[i][j])))
        }))
    }
}

pub fn dot<F: Field>(f: &F, u: &Vec3<F::Elem>, v: &Vec3<F::Elem>) -> F::Elem {
    (0..3).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&u.0[i], &v.0[i])))
}

pub fn cross<F: Field>(f: &F, u: &Vec3<F::Elem>, v: &Vec3<F::Elem>) -> Vec3<F::Elem> {
    let [u1, u2, u3] = &u.0;
    let [v1, v2, v3] = &v.0;
    Vec3([
        f.sub(&f.mul(u2, v3), &f.mul(u3, v2)),
        f.sub(&f.mul(u3, v1), &f.mul(u1, v3)),
        f.sub(&f.mul(u1, v2), &f.mul(u2, v1)),
    ])
}

impl<E: Clone> Matrix3<E> {
    pub fn identity<F: Field<Elem = E>>(f: &F) -> Self {
        Matrix3(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { f.one() } else { f.zero() })
        }))
    }

    pub fn from_rows(rows: [Vec3<E>; 3]) -> Self {
        let [a, b, c] = rows;
        Matrix3([a.0, b.0, c.0])
    }

    pub fn from_i64<F: Field<Elem = E>>(f: &F, rows: [[i64; 3]; 3]) -> Self {
        Matrix3(rows.map(|r| r.map(|x| f.from_i64(x))))
    }

    pub fn diag(d: [E; 3], zero: E) -> Self {
        let [a, b, c] = d;
        Matrix3([
            [a, zero.clone(), zero.clone()],
            [zero.clone(), b, zero.clone()],
            [zero.clone(), zero, c],
        ])
    }

    pub fn row(&self, i: usize) -> Vec3<E> {
        Vec3(self.0[i].clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        Matrix3(std::array::from_fn(|i| self.row(i).mul_mat(f, other).0))
    }

    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> E {
        let r0 = self.row(0);
        let c = cross(f, &self.row(1), &self.row(2));
        dot(f, &r0, &c)
    }

    /// Inverse via the adjugate.
    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Result<Self, LinalgError> {
        let d = self.det(f);
        let dinv = f.inv(&d).ok_or(LinalgError::Singular)?;
        // columns of the inverse are cross products of rows
        let c0 = cross(f, &self.row(1), &self.row(2)).scale(f, &dinv);
        let c1 = cross(f, &self.row(2), &self.row(0)).scale(f, &dinv);
        let c2 = cross(f, &self.row(0), &self.row(1)).scale(f, &dinv);
        Ok(Matrix3::from_rows([c0, c1, c2]).transpose())
    }

    /// `(g^{-1})^T`
    pub fn inverse_transpose<F: Field<Elem = E>>(&self, f: &F) -> Result<Self, LinalgError> {
        Ok(self.inverse(f)?.transpose())
    }

    pub fn approx_eq<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        (0..3).all(|i| self.row(i).approx_eq(f, &other.row(i)))
    }
}

/// Index of the first nonzero coordinate.
fn pivot<F: Field>(f: &F, v: &Vec3<F::Elem>) -> Option<usize> {
    v.0.iter().position(|x| !f.is_zero(x))
}

/// A determinant-1 matrix whose first row is `v`.
///
/// The other two rows are standard basis vectors, one of them rescaled so the
/// determinant comes out as 1.
fn complete_to_special<F: Field>(f: &F, v: &Vec3<F::Elem>) -> Result<Matrix3<F::Elem>, LinalgError> {
    let k = pivot(f, v).ok_or(LinalgError::ZeroVector)?;
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut m = Matrix3::from_rows([v.clone(), Vec3::basis(f, i), Vec3::basis(f, j)]);
    let d = m.det(f);
    let dinv = f.inv(&d).ok_or(LinalgError::Singular)?;
    m.0[1][i] = dinv;
    Ok(m)
}

/// Some `g` with `det g = 1` and `v * g^{-T} = (1, 0, 0)`.
///
/// With `N` a determinant-1 matrix whose first row is `v`, `g = N^T` works:
/// `g^{-T} = N^{-1}` and `c1 * N = v`.
pub fn sl3_send_to_c1<F: Field>(f: &F, v: &Vec3<F::Elem>) -> Result<Matrix3<F::Elem>, LinalgError> {
    if v.approx_eq(f, &Vec3::basis(f, 0)) {
        return Ok(Matrix3::identity(f));
    }
    Ok(complete_to_special(f, v)?.transpose())
}

/// `g = diag(a, 1/a, 1)`, so that `(a, 0, 0) * g^{-T} = (1, 0, 0)`.
pub fn sl3_rescale_c1<F: Field>(f: &F, a: &F::Elem) -> Result<Matrix3<F::Elem>, LinalgError> {
    let ainv = f.inv(a).ok_or(LinalgError::ZeroScale)?;
    Ok(Matrix3::diag([a.clone(), ainv, f.one()], f.zero()))
}

/// A determinant-1 `g` fixing `(1, 0, 0)` under `v -> v * g^{-T}` that moves
/// `u` (under `u -> u * g`) to `(u1, 0, 0)` when `u1 != 0` and to `(0, 1, 0)`
/// otherwise. Returns the identity when `u` already has the form `(*, 0, 0)`.
///
/// Such `g` have first column `(1, 0, 0)^T`, which leaves `u1` unchanged.
pub fn sl3_fix_c1_reduce<F: Field>(f: &F, u: &Vec3<F::Elem>) -> Result<Matrix3<F::Elem>, LinalgError> {
    let [u1, u2, u3] = &u.0;
    if f.is_zero(u2) && f.is_zero(u3) {
        return Ok(Matrix3::identity(f));
    }
    if !f.is_zero(u1) {
        // row 0 of g absorbs (u2, u3): u * g = (u1, u1*r + (u2, u3)) with r = -(u2, u3)/u1
        let inv = f.inv(u1).ok_or(LinalgError::Singular)?;
        let mut g = Matrix3::identity(f);
        g.0[0][1] = f.neg(&f.mul(u2, &inv));
        g.0[0][2] = f.neg(&f.mul(u3, &inv));
        return Ok(g);
    }
    // u = (0, u2, u3): pick B in SL(2) with (u2, u3) * B = (1, 0), i.e.
    // B = N^{-1} for N = [[u2, u3], [w1, w2]] of determinant 1.
    let n = if !f.is_zero(u2) {
        let inv = f.inv(u2).ok_or(LinalgError::Singular)?;
        [[u2.clone(), u3.clone()], [f.zero(), inv]]
    } else {
        let inv = f.inv(u3).ok_or(LinalgError::Singular)?;
        [[u2.clone(), u3.clone()], [f.neg(&inv), f.zero()]]
    };
    // inverse of a determinant-1 2x2 matrix
    let b = [[n[1][1].clone(), f.neg(&n[0][1])], [f.neg(&n[1][0]), n[0][0].clone()]];
    let mut g = Matrix3::identity(f);
    for i in 0..2 {
        for j in 0..2 {
            g.0[i + 1][j + 1] = b[i][j].clone();
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, Reals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn dot_examples() {
        let f = Rationals;
        let c1 = Vec3::basis(&f, 0);
        assert_eq!(dot(&f, &c1, &c1), q(1));
        assert_eq!(dot(&f, &Vec3::from_i64(&f, [1, 2, 3]), &Vec3::from_i64(&f, [4, 5, 6])), q(32));
        let g3 = PrimeField::new(3).unwrap();
        assert_eq!(dot(&g3, &Vec3::new(1, 2, 0), &Vec3::new(2, 2, 0)), 0);
    }

    #[test]
    fn cross_examples() {
        let f = Rationals;
        let c = |i| Vec3::basis(&f, i);
        assert_eq!(cross(&f, &c(0), &c(1)), c(2));
        let u = Vec3::from_i64(&f, [1, 2, 3]);
        assert!(cross(&f, &u, &u).is_zero(&f));
        assert_eq!(cross(&f, &u, &Vec3::from_i64(&f, [4, 5, 6])), Vec3::from_i64(&f, [-3, 6, -3]));
    }

    #[test]
    fn send_to_c1_examples() {
        let f = Rationals;
        assert_eq!(sl3_send_to_c1(&f, &Vec3::basis(&f, 0)).unwrap(), Matrix3::identity(&f));
        let v = Vec3::from_i64(&f, [0, 0, 5]);
        let g = sl3_send_to_c1(&f, &v).unwrap();
        assert_eq!(g.det(&f), q(1));
        assert_eq!(v.mul_mat(&f, &g.inverse_transpose(&f).unwrap()), Vec3::basis(&f, 0));

        let g2 = PrimeField::new(2).unwrap();
        let v = Vec3::new(1, 1, 0);
        let g = sl3_send_to_c1(&g2, &v).unwrap();
        assert_eq!(g.det(&g2), 1);
        assert_eq!(v.mul_mat(&g2, &g.inverse_transpose(&g2).unwrap()), Vec3::basis(&g2, 0));

        assert_eq!(sl3_send_to_c1(&f, &Vec3::zero(&f)), Err(LinalgError::ZeroVector));
    }

    #[test]
    fn rescale_examples() {
        let f = Rationals;
        assert_eq!(sl3_rescale_c1(&f, &q(1)).unwrap(), Matrix3::identity(&f));
        let g = sl3_rescale_c1(&f, &q(2)).unwrap();
        assert_eq!(g.det(&f), q(1));
        let git = g.inverse_transpose(&f).unwrap();
        assert_eq!(git, Matrix3::diag([BigRational::new(1.into(), 2.into()), q(2), q(1)], q(0)));
        assert_eq!(Vec3::new(q(2), q(0), q(0)).mul_mat(&f, &git), Vec3::basis(&f, 0));

        let g5 = PrimeField::new(5).unwrap();
        let g = sl3_rescale_c1(&g5, &2).unwrap();
        assert_eq!(g.det(&g5), 1);
        assert_eq!(Vec3::new(2, 0, 0).mul_mat(&g5, &g.inverse_transpose(&g5).unwrap()), Vec3::basis(&g5, 0));
        assert_eq!(sl3_rescale_c1(&g5, &0), Err(LinalgError::ZeroScale));
    }

    #[test]
    fn reduce_keeps_c1_fixed() {
        let f = PrimeField::new(5).unwrap();
        let c1 = Vec3::basis(&f, 0);
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    let u = Vec3::new(a, b, c);
                    let g = sl3_fix_c1_reduce(&f, &u).unwrap();
                    assert_eq!(g.det(&f), 1);
                    assert_eq!(c1.mul_mat(&f, &g.inverse_transpose(&f).unwrap()), c1);
                    let w = u.mul_mat(&f, &g);
                    let want = if b == 0 && c == 0 || a != 0 {
                        Vec3::new(a, 0, 0)
                    } else {
                        Vec3::new(0, 1, 0)
                    };
                    assert_eq!(w, want, "u = {u:?}");
                }
            }
        }
    }

    fn gf(p: u64) -> impl Strategy<Value = (u64, [u64; 3], [u64; 3])> {
        (Just(p), prop::array::uniform3(0..p), prop::array::uniform3(0..p))
    }

    proptest! {
        #[test]
        fn cross_is_orthogonal_over_gf7((p, a, b) in gf(7)) {
            let f = PrimeField::new(p).unwrap();
            let (u, v) = (Vec3(a), Vec3(b));
            let w = cross(&f, &u, &v);
            prop_assert_eq!(dot(&f, &w, &u), 0);
            prop_assert_eq!(dot(&f, &w, &v), 0);
            prop_assert_eq!(cross(&f, &v, &u), w.neg(&f));
            prop_assert_eq!(dot(&f, &u, &v), dot(&f, &v, &u));
        }

        #[test]
        fn bilinearity_over_q(a in prop::array::uniform3(-20i64..20), b in prop::array::uniform3(-20i64..20),
                              c in prop::array::uniform3(-20i64..20), s in -9i64..9) {
            let f = Rationals;
            let (u, v, w) = (Vec3::from_i64(&f, a), Vec3::from_i64(&f, b), Vec3::from_i64(&f, c));
            let s = q(s);
            let lhs = cross(&f, &u.scale(&f, &s).add(&f, &v), &w);
            let rhs = cross(&f, &u, &w).scale(&f, &s).add(&f, &cross(&f, &v, &w));
            prop_assert_eq!(lhs, rhs);
            let lhs = dot(&f, &u.scale(&f, &s).add(&f, &v), &w);
            let rhs = f.add(&f.mul(&s, &dot(&f, &u, &w)), &dot(&f, &v, &w));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sl3_constructors_over_reals(a in prop::array::uniform3(-5.0f64..5.0), s in 0.1f64..5.0) {
            let f = Reals::default();
            let v = Vec3(a);
            prop_assume!(!v.is_zero(&f));
            let g = sl3_send_to_c1(&f, &v).unwrap();
            prop_assert!(f.eq(&g.det(&f), &1.0));
            prop_assert!(v.mul_mat(&f, &g.inverse_transpose(&f).unwrap()).approx_eq(&f, &Vec3::basis(&f, 0)));
            let g = sl3_rescale_c1(&f, &s).unwrap();
            prop_assert!(f.eq(&g.det(&f), &1.0));
        }
    }

    #[test]
    fn sl3_constructors_on_random_inputs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        fn check<F: Field>(f: &F, rng: &mut rand_chacha::ChaCha8Rng) {
            let c1 = Vec3::basis(f, 0);
            let mut done = 0;
            while done < 1000 {
                let v = Vec3(std::array::from_fn(|_| f.random_element(rng)));
                if v.is_zero(f) {
                    continue;
                }
                let g = sl3_send_to_c1(f, &v).unwrap();
                assert!(f.is_one(&g.det(f)));
                assert!(v.mul_mat(f, &g.inverse_transpose(f).unwrap()).approx_eq(f, &c1));
                let a = v.0[pivot(f, &v).unwrap()].clone();
                let h = sl3_rescale_c1(f, &a).unwrap();
                assert!(f.is_one(&h.det(f)));
                let a_c1 = c1.scale(f, &a);
                assert!(a_c1.mul_mat(f, &h.inverse_transpose(f).unwrap()).approx_eq(f, &c1));
                done += 1;
            }
        }
        check(&Rationals, &mut rng);
        check(&PrimeField::new(2).unwrap(), &mut rng);
        check(&PrimeField::new(3).unwrap(), &mut rng);
        check(&PrimeField::new(5).unwrap(), &mut rng);
        check(&Reals::default(), &mut rng);
    }
}
