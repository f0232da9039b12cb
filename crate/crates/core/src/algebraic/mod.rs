//! Exact arithmetic over real algebraic numbers and the number field Q(q):
//! Sturm-sequence root isolation, interval refinement, and guaranteed-sign
//! comparison. No floating point anywhere in a decision path; decimal
//! strings are presentation-only.

pub mod field;
pub mod poly;
pub mod real;

pub use field::{FieldElement, NumberField};
pub use poly::{parse_polynomial, parse_relation, IntPolynomial, Rational, Sign, SturmChain};
pub use real::{isolate_real_roots, RealAlgebraic};
