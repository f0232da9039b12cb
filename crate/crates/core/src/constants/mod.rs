//! Registry of the distinguished algebraic bases, stored with their printed
//! defining relations, plus the verification suite that re-derives the
//! identities and inequality windows tied to them.

pub mod verify;

use std::sync::LazyLock;

use num_bigint::BigInt;

use crate::algebraic::poly::{parse_relation, IntPolynomial, Rational};
use crate::algebraic::real::{isolate_real_roots, RealAlgebraic};

pub use verify::{
    verify_alpha_properties, verify_lemma_sequence_bounds, verify_prop_branching_points,
    verify_prop_first_half, verify_prop_second_half, Outcome, VerificationReport,
};

/// A named base: the defining relation as printed, the polynomial form, the
/// printed decimal approximation, and the isolated root in (1,2).
#[derive(Debug, Clone)]
pub struct NamedBase {
    pub name: String,
    pub defining_relation: String,
    pub minpoly: IntPolynomial,
    pub approx: String,
    pub value: RealAlgebraic,
}

impl NamedBase {
    fn build(name: &str, relation: &str, approx: Option<&str>) -> NamedBase {
        let minpoly = parse_relation(relation)
            .unwrap_or_else(|e| panic!("registry relation `{relation}`: {e}"));
        let one = Rational::from(BigInt::from(1));
        let two = Rational::from(BigInt::from(2));
        let roots = isolate_real_roots(&minpoly, (&one, &two))
            .unwrap_or_else(|e| panic!("isolating `{relation}` in (1,2): {e}"));
        let digits = approx.map(|a| a.len() - 2).unwrap_or(5);
        let value = match approx {
            Some(a) => roots
                .iter()
                .find(|r| r.to_decimal(digits) == a)
                .unwrap_or_else(|| {
                    panic!("no root of `{relation}` in (1,2) matches printed value {a}")
                })
                .clone(),
            None => {
                assert_eq!(
                    roots.len(),
                    1,
                    "`{relation}` must have a unique root in (1,2)"
                );
                roots.into_iter().next().unwrap()
            }
        };
        let approx = match approx {
            Some(a) => a.to_string(),
            None => value.to_decimal(5),
        };
        NamedBase {
            name: name.to_string(),
            defining_relation: relation.to_string(),
            minpoly,
            approx,
            value,
        }
    }
}

static REGISTRY: LazyLock<Vec<NamedBase>> = LazyLock::new(|| {
    vec![
        NamedBase::build("golden", "x^2=x+1", Some("1.61803")),
        NamedBase::build("q_2", "x^4=2x^2+x+1", Some("1.71064")),
        NamedBase::build("q_f", "x^3=2x^2-x+1", Some("1.75488")),
        NamedBase::build("q_aleph0", "x^6=x^4+x^3+2x^2+x+1", Some("1.64541")),
        NamedBase::build("r1", "x^6=x^5+2x^4-x^3-x^2+1", Some("1.69765")),
        NamedBase::build("r2", "x^5=x^4+x^3+x-1", Some("1.68042")),
        NamedBase::build("r3", "x^5=2x^3+x^2+1", Some("1.67602")),
        NamedBase::build("r4", "x^6=2x^4+x^3+1", Some("1.65462")),
        NamedBase::build("r5", "x^5=x^3+x^2+2x+2", Some("1.66184")),
    ]
});

/// All named bases.
pub fn registry() -> &'static [NamedBase] {
    &REGISTRY
}

/// Looks up a base by name. Accepts the registry names (case-insensitive,
/// underscores optional) and `alpha_k` for k >= 3.
pub fn lookup(name: &str) -> Option<NamedBase> {
    let norm: String = name
        .chars()
        .filter(|c| *c != '_')
        .collect::<String>()
        .to_ascii_lowercase();
    if let Some(rest) = norm.strip_prefix("alpha") {
        if let Ok(k) = rest.parse::<usize>() {
            if k >= 3 {
                return Some(alpha(k));
            }
        }
        return None;
    }
    REGISTRY
        .iter()
        .find(|b| {
            b.name
                .chars()
                .filter(|c| *c != '_')
                .collect::<String>()
                .to_ascii_lowercase()
                == norm
        })
        .cloned()
}

/// The base alpha_k for k >= 3, defined by x^(k+4) = x^(k+3) + x^(k+2) + x^k
/// - x^2 - 1. In particular alpha_3 equals q_aleph0 as an algebraic number.
pub fn alpha(k: usize) -> NamedBase {
    assert!(k >= 3, "alpha_k is defined for k >= 3");
    let relation = format!("x^{}=x^{}+x^{}+x^{}-x^2-1", k + 4, k + 3, k + 2, k);
    let mut b = NamedBase::build(&format!("alpha_{k}"), &relation, None);
    b.name = format!("alpha_{k}");
    b
}

pub fn golden() -> RealAlgebraic {
    lookup("golden").unwrap().value
}

pub fn q_2() -> RealAlgebraic {
    lookup("q_2").unwrap().value
}

pub fn q_f() -> RealAlgebraic {
    lookup("q_f").unwrap().value
}

pub fn q_aleph0() -> RealAlgebraic {
    lookup("q_aleph0").unwrap().value
}
