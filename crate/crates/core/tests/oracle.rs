use octsolve_core::field::PrimeField;
use octsolve_core::octonion::{sort_dedup, Octonion};
use octsolve_core::oracle::{all_octonions, brute_orbit, brute_solve, expand_solutions, ImageTable, OracleError};
use octsolve_core::poly::ScalarPoly;
use octsolve_core::radicals::sqrt_octonion;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn square_roots_match_enumeration_everywhere() {
    for p in [2u64, 3] {
        let f = gf(p);
        let table = ImageTable::build(&f, &ScalarPoly::monomial(&f, 1, 2)).unwrap();
        for c in all_octonions(&f) {
            let closed = sqrt_octonion(&f, &c).into_solution_set();
            assert_eq!(expand_solutions(&f, &closed), table.preimage(&c), "p = {p}, c = {}", c.format(&f));
        }
    }
}

#[test]
fn identity_polynomial_returns_the_target() {
    let f = gf(3);
    let c = Octonion::from_coords([1, 2, 0, 1, 2, 2, 0, 1]);
    assert_eq!(brute_solve(&f, &ScalarPoly::monomial(&f, 1, 1), &c).unwrap(), vec![c]);
}

#[test]
fn square_roots_of_one_in_characteristic_two() {
    let f = gf(2);
    let got = brute_solve(&f, &ScalarPoly::monomial(&f, 1, 2), &Octonion::one(&f)).unwrap();
    let mut want: Vec<_> = all_octonions(&f)
        .filter(|x| x.is_scalar(&f) || (x.trace(&f) == 0 && x.norm(&f) == 1))
        .filter(|x| !x.is_scalar(&f) || *x == Octonion::one(&f))
        .collect();
    sort_dedup(&f, &mut want);
    let mut got = got;
    sort_dedup(&f, &mut got);
    assert_eq!(got, want);
}

#[test]
fn cubic_minus_linear_respects_count_bound() {
    let f = gf(3);
    // y^3 - y
    let poly = ScalarPoly::from_coeffs(&f, vec![0, 2, 0, 1]);
    let table = ImageTable::build(&f, &poly).unwrap();
    for c in all_octonions(&f).filter(|c| !c.is_scalar(&f)) {
        assert!(table.preimage(&c).len() <= 9, "c = {}", c.format(&f));
    }
}

#[test]
fn orbit_of_u1_is_the_traceless_isotropic_class() {
    let f = gf(2);
    let mut orbit = brute_orbit(&f, &Octonion::u_basis(&f, 0)).unwrap();
    sort_dedup(&f, &mut orbit);
    let mut want: Vec<_> = all_octonions(&f)
        .filter(|x| !x.is_scalar(&f) && x.trace(&f) == 0 && x.norm(&f) == 0)
        .collect();
    sort_dedup(&f, &mut want);
    assert_eq!(orbit, want);
    assert_eq!(brute_orbit(&f, &Octonion::one(&f)).unwrap(), vec![Octonion::one(&f)]);
}

#[test]
fn oracle_limits() {
    let f7 = gf(7);
    let c = Octonion::zero(&f7);
    assert!(matches!(
        brute_solve(&f7, &ScalarPoly::monomial(&f7, 1, 1), &c),
        Err(OracleError::EnumerationTooLarge(7))
    ));
    assert!(brute_orbit(&gf(3), &Octonion::zero(&gf(3))).is_err());
}
