//! Exact analysis of binary expansions in non-integer bases q in (1,2).
//!
//! A point x in [0, 1/(q-1)] may have many expansions x = sum e_i q^-i with
//! digits e_i in {0,1}. This crate generates expansions, classifies how many
//! a point has (one, finitely many, countably many, or a continuum), detects
//! null infinite points, and re-derives the algebraic identities behind the
//! distinguished bases where those counts change.
//!
//! Everything is computed in exact arithmetic: bases are real algebraic
//! numbers given by an integer polynomial and an isolating rational
//! interval, orbit points live in Q(q), and every comparison is decided by
//! interval refinement with a polynomial-gcd equality test. Decimal output
//! is presentation-only.
//!
//! ```
//! use beta_branch::branching::{classify_expansions, Cardinality};
//! use beta_branch::constants;
//! use beta_branch::expansions::Base;
//!
//! // x = 1 in the golden base has countably many expansions
//! let base = Base::from_named(&constants::lookup("golden").unwrap())?;
//! let card = classify_expansions(&base, &base.one(), 100)?;
//! assert_eq!(card, Cardinality::CountablyInfinite);
//! # Ok::<(), beta_branch::Error>(())
//! ```

pub mod algebraic;
pub mod branching;
pub mod constants;
pub mod error;
pub mod expansions;

pub use error::{Error, Result};
