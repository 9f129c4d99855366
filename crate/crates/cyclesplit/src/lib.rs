//! Exact cycle-splitness of étale algebras.
//!
//! An étale algebra over a number field — a finite product of field
//! extensions — may fail to have a rational point everywhere and still
//! carry a *zero-cycle of degree 1*: a formal combination of closed
//! points whose degrees sum to 1. This crate decides that property
//! combinatorially from a Galois-group model, verifies it empirically by
//! factoring defining polynomials modulo primes, and certifies failures
//! of the local-global principle for connected algebras.
//!
//! There are two complementary routes:
//!
//! * **Group side** ([`perm`], [`etale`]): present the algebra as coset
//!   actions of a finite group, compute the combinatorial index of each
//!   conjugacy class, and read off splitness verdicts and exact
//!   Chebotarev densities.
//! * **Arithmetic side** ([`poly`], [`scan`]): factor the defining
//!   polynomials modulo every prime up to a bound, compute the local
//!   index from the factor degrees, construct witness zero-cycles, and
//!   cross-validate the observed Frobenius statistics against the group
//!   model.
//!
//! The two routes are tied together by the bridge identity: the local
//! index at an unramified prime equals the combinatorial index at its
//! Frobenius class. [`hasse`] adds Fein–Kantor–Schacher certificates
//! showing no *connected* example can fool the local-global principle.
//!
//! # Quick start
//!
//! The sextic `t^6 − 3t^2 − 1` is irreducible with Galois group A₄
//! acting on six cosets of a subgroup of order 2. It is reducible modulo
//! every prime, and together with `t^2 + 1` it admits a local zero-cycle
//! of degree 1 everywhere:
//!
//! ```
//! use cyclesplit::perm::{Permutation, PermutationGroup, DEFAULT_ORDER_CAP};
//! use cyclesplit::etale::{EtaleAlgebraModel, FibreModel};
//! use cyclesplit::etale::{cycle_split_density, is_combinatorially_cycle_split};
//! use std::sync::Arc;
//!
//! let a4 = Arc::new(PermutationGroup::generate(
//!     4,
//!     &[
//!         Permutation::parse_cycles(4, "(0 1 2)")?,
//!         Permutation::parse_cycles(4, "(0 1)(2 3)")?,
//!     ],
//!     DEFAULT_ORDER_CAP,
//! )?);
//! let c2 = a4.subgroup(&[Permutation::parse_cycles(4, "(0 1)(2 3)")?])?;
//! let on_six = a4.coset_action(&c2)?;
//! let fibre = FibreModel::from_algebra(EtaleAlgebraModel::new(a4, vec![on_six])?);
//!
//! // Alone, the sextic is not cycle-split: a third of all primes see
//! // only degree-3 factors.
//! assert!(!is_combinatorially_cycle_split(&fibre, 1).verdict);
//! assert_eq!(cycle_split_density(&fibre, 1).to_string(), "1/3");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! The arithmetic counterpart, scanning primes:
//!
//! ```
//! use cyclesplit::poly::IntPolynomial;
//! use cyclesplit::scan::{scan, ScanComponent, ScanSpec};
//! use cyclesplit::rational::Rational;
//!
//! let spec = ScanSpec {
//!     components: vec![ScanComponent {
//!         multiplicity: 1,
//!         polynomials: vec![
//!             IntPolynomial::parse("t^2+1")?,
//!             IntPolynomial::parse("t^6-3t^2-1")?,
//!         ],
//!     }],
//!     r: 1,
//!     prime_bound: 1000,
//!     tolerance: Rational::new(1, 50),
//!     model: None,
//! };
//! let (records, summary) = scan(&spec)?;
//! assert_eq!(summary.ramified_primes, vec![2, 3]);
//! assert_eq!(summary.split_density.as_deref(), Some("1"));
//! assert!(records.iter().all(|r| r.ramified || r.split == Some(true)));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod corpus;
pub mod etale;
pub mod hasse;
pub mod input;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod scan;
