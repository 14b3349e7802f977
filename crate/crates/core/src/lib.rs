//! Exact combinatorics engine for signed permutations.
//!
//! This crate implements, with exact integer arithmetic throughout:
//!
//! * signed-permutation arithmetic for the Coxeter groups of types A, C and D:
//!   words, length, reflections, Bruhat covers, Demazure (0-Hecke) products,
//!   and reduced-word enumeration ([`perm`]);
//! * the 0-Hecke conjugation action on (twisted) involutions, involution
//!   words, atoms, and the type-D underline projection ([`involution`]);
//! * noncrossing symmetric matchings, nested descent shapes, the orders on
//!   atom words, and the quasi-atom classification ([`matchings`]);
//! * partitions, (shifted, marked) tableaux, Schur / Schur-S / Schur-Q
//!   polynomials as exact monomial vectors, basis conversion, superfication,
//!   and definitional Stanley-function oracles ([`symfunc`]);
//! * transition sets, the transition recursion for Q-expansions of Stanley
//!   symmetric functions, layered transition graphs, and telescoping-sum
//!   verification ([`transition`]);
//! * a verification harness reproducing all the engine's headline counts and
//!   identities ([`verify`]).

pub mod error;
pub mod involution;
pub mod matchings;
pub mod perm;
pub mod symfunc;
pub mod transition;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Family, Generator, Reflection, ReflectionKind, SignedPermutation, Word};
