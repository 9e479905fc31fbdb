//! Elliptic curves over Q with a rational point of order N (4 <= N <= 12,
//! N != 11) whose conductor is divisible by exactly two primes.
//!
//! The crate reconstructs the full classification pipeline for these curves:
//!
//! - [`arith`]: big-integer number theory (factorization, primality,
//!   prime/perfect powers, valuations, Legendre symbol).
//! - [`model`]: the Tate normal form `y^2 + (1-c)xy - by = x^3 - bx^2`, the
//!   per-N integral models over Z, their invariants, closed-form
//!   discriminants, and the chord-tangent group law used to verify torsion.
//! - [`localdata`]: global minimal models (Laska-Kraus-Connell), Tate's
//!   algorithm at every bad prime (including p = 2, 3), Kodaira types,
//!   component counts, and conductor assembly.
//! - [`dioph`]: bounded exhaustive solvers for the exponential Diophantine
//!   equations that drive the classification (Catalan-type searches, the
//!   Pell equation x^2 - 125y^2 = +-4, a Mordell equation, and friends).
//! - [`classify`]: the (s,t) enumeration grid, conductor-shape filtering,
//!   comparison against the expected discriminant tables per torsion order,
//!   and Szpiro-ratio checks.
//! - [`cli`]: structured command-line front end (`curve`, `enumerate`,
//!   `verify`, `dioph`, `szpiro`) with table/CSV/JSON-lines output.
//!
//! Everything is exact: models and discriminants are `BigInt`, points are
//! `BigRational`, and every bound comparison such as `|disc| < N^K` is done
//! in integer arithmetic. All operations are pure and thread-safe.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod dioph;
pub mod error;
pub mod localdata;
pub mod model;

pub use error::{Error, Result};
