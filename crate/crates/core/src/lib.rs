//! Split octonions over a generic field and polynomial equations in them.
//!
//! The crate covers the algebra itself ([`octonion`]), a set of generators
//! of its automorphism group ([`automorphism`]), canonical orbit
//! representatives with replayable witnesses ([`canonical`]), the solver for
//! `a_n x^n + ... + a_1 x = c` ([`solver`]), closed-form square and cube roots
//! ([`radicals`]) and a brute-force oracle over small prime fields
//! ([`oracle`]).
//!
//! ```
//! use octsolve_core::field::Rationals;
//! use octsolve_core::octonion::Octonion;
//! use octsolve_core::fibpoly::parse_coefficients;
//! use octsolve_core::solver::solve;
//!
//! let q = Rationals;
//! let f = parse_coefficients(&q, "1,0").unwrap(); // y^2
//! let c = Octonion::parse(&q, "[1; 2,0,1; -1,3,2; 4]").unwrap();
//! let roots = solve(&q, &f, &c).unwrap();
//! assert_eq!(roots.points.len(), 4);
//! ```

pub mod automorphism;
pub mod canonical;
pub mod fibpoly;
pub mod field;
pub mod linalg3;
pub mod octonion;
pub mod oracle;
pub mod poly;
pub mod radicals;
pub mod solver;

pub use canonical::{canonicalize, same_orbit, CanonicalForm, OrbitLabel};
pub use field::{Field, FieldSpec, PrimeField, Rationals, Reals};
pub use octonion::Octonion;
pub use poly::ScalarPoly;
pub use solver::{solve, SolutionSet};
