//! Digit-map dynamics for a base q in (1,2): the maps T_0(x) = qx and
//! T_1(x) = qx - 1, the switch region where both keep the orbit in
//! I_q = [0, 1/(q-1)], word evaluation, greedy/lazy expansions, uniqueness
//! testing, and the inner interval J_q with the funnelling procedure.

pub mod word;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::algebraic::field::{ElementSet, FieldElement, NumberField};
use crate::algebraic::poly::Rational;
use crate::algebraic::real::RealAlgebraic;
use crate::constants;
use crate::error::{Error, Result};

pub use word::{Digit, EventuallyPeriodicWord, Word};

/// A base q in (1,2) together with its ambient field Q(q) and the cached
/// boundary points of I_q and S_q.
#[derive(Debug, Clone)]
pub struct Base {
    field: Arc<NumberField>,
    q: FieldElement,
    inv_q: FieldElement,
    switch_right: FieldElement,
    i_right: FieldElement,
}

impl Base {
    /// Builds a base from an isolated algebraic number; rejects values not
    /// strictly inside (1,2).
    pub fn new(generator: RealAlgebraic) -> Result<Base> {
        let one = Rational::from(num_bigint::BigInt::from(1));
        let two = Rational::from(num_bigint::BigInt::from(2));
        if generator.compare_rational(&one) != Ordering::Greater
            || generator.compare_rational(&two) != Ordering::Less
        {
            return Err(Error::BaseOutOfRange(
                "base must lie strictly inside (1,2)".into(),
            ));
        }
        let field = NumberField::new(generator);
        let q = FieldElement::generator(&field);
        let one = FieldElement::one(&field);
        let q_minus_1 = q.sub(&one);
        let inv_q = q.inv().expect("q > 1");
        let i_right = q_minus_1.inv().expect("q > 1");
        let switch_right = q.mul(&q_minus_1).inv().expect("q > 1");
        Ok(Base {
            field,
            q,
            inv_q,
            switch_right,
            i_right,
        })
    }

    pub fn from_named(named: &constants::NamedBase) -> Result<Base> {
        Base::new(named.value.clone())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn generator(&self) -> &RealAlgebraic {
        self.field.generator()
    }

    /// q as a field element.
    pub fn q(&self) -> &FieldElement {
        &self.q
    }

    /// Left endpoint of the switch region, 1/q.
    pub fn switch_left(&self) -> &FieldElement {
        &self.inv_q
    }

    /// Right endpoint of the switch region, 1/(q(q-1)).
    pub fn switch_right(&self) -> &FieldElement {
        &self.switch_right
    }

    /// Right endpoint of I_q, 1/(q-1).
    pub fn i_right(&self) -> &FieldElement {
        &self.i_right
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(&self.field)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::one(&self.field)
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        FieldElement::from_rational(&self.field, r)
    }

    /// Whether q lies in the Lemma window (golden, q_f]; several operations
    /// are only valid there.
    pub fn in_unique_window(&self) -> bool {
        let g = self.generator();
        g.compare(&constants::golden()) == Ordering::Greater
            && g.compare(&constants::q_f()) != Ordering::Greater
    }
}

/// Position of a point relative to the switch region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    BelowSwitch,
    Switch,
    AboveSwitch,
    OutOfRange,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::BelowSwitch => "BelowSwitch",
            Region::Switch => "Switch",
            Region::AboveSwitch => "AboveSwitch",
            Region::OutOfRange => "OutOfRange",
        };
        write!(f, "{s}")
    }
}

/// T_{q,d}(x) = qx - d.
pub fn t_map(base: &Base, d: Digit, x: &FieldElement) -> FieldElement {
    let qx = base.q.mul(x);
    match d {
        Digit::Zero => qx,
        Digit::One => qx.sub(&base.one()),
    }
}

/// Exact classification of x against [0, 1/q), S_q, and (1/(q(q-1)), 1/(q-1)].
/// The boundary points of S_q count as Switch.
pub fn region(base: &Base, x: &FieldElement) -> Region {
    if x.sign() == crate::algebraic::poly::Sign::Negative {
        return Region::OutOfRange;
    }
    match x.compare(base.switch_left()) {
        Ordering::Less => Region::BelowSwitch,
        _ => match x.compare(base.switch_right()) {
            Ordering::Less | Ordering::Equal => Region::Switch,
            Ordering::Greater => match x.compare(base.i_right()) {
                Ordering::Less | Ordering::Equal => Region::AboveSwitch,
                Ordering::Greater => Region::OutOfRange,
            },
        },
    }
}

pub fn in_range(base: &Base, x: &FieldElement) -> bool {
    region(base, x) != Region::OutOfRange
}

/// Exact value of the infinite sum sum_i e_i q^-i for an eventually
/// periodic digit sequence: preperiod partial sum plus a geometric series.
///
/// ```
/// use beta_branch::constants;
/// use beta_branch::expansions::{eval_word, Base, EventuallyPeriodicWord};
/// use std::cmp::Ordering;
///
/// // (10)^inf evaluates to q/(q^2-1), which is exactly 1 in the golden base
/// let base = Base::from_named(&constants::lookup("golden").unwrap())?;
/// let word: EventuallyPeriodicWord = "|10".parse()?;
/// assert_eq!(eval_word(&base, &word).compare(&base.one()), Ordering::Equal);
/// # Ok::<(), beta_branch::Error>(())
/// ```
pub fn eval_word(base: &Base, w: &EventuallyPeriodicWord) -> FieldElement {
    let horner = |digits: &[Digit]| {
        let mut acc = base.zero();
        for d in digits {
            acc = acc.mul(&base.q);
            if *d == Digit::One {
                acc = acc.add(&base.one());
            }
        }
        acc
    };
    let n_pre = horner(w.preperiod().digits());
    let n_per = horner(w.period().digits());
    let m = w.preperiod().len() as u32;
    let k = w.period().len() as u32;
    let qk_minus_1 = base.q.pow(k).sub(&base.one());
    let numer = n_pre.mul(&qk_minus_1).add(&n_per);
    let denom = base.q.pow(m).mul(&qk_minus_1);
    numer.div(&denom).expect("q > 1 makes q^k - 1 nonzero")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Greedy,
    Lazy,
}

/// First n digits of the lexicographically largest (greedy) or smallest
/// (lazy) expansion of x. Greedy emits 1 whenever x >= 1/q; lazy emits 0
/// whenever x <= 1/(q(q-1)).
pub fn greedy_lazy(base: &Base, x: &FieldElement, n: usize, mode: Mode) -> Result<Word> {
    if !in_range(base, x) {
        return Err(Error::OutOfRange);
    }
    let mut cur = x.clone();
    let mut out = Word::empty();
    for _ in 0..n {
        let d = match mode {
            Mode::Greedy => {
                if cur.compare(base.switch_left()) != Ordering::Less {
                    Digit::One
                } else {
                    Digit::Zero
                }
            }
            Mode::Lazy => {
                if cur.compare(base.switch_right()) != Ordering::Greater {
                    Digit::Zero
                } else {
                    Digit::One
                }
            }
        };
        out.push(d);
        cur = t_map(base, d, &cur);
        debug_assert!(in_range(base, &cur));
    }
    Ok(out)
}

/// Result of following the forced orbit of a point outside the switch
/// region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcedOutcome {
    /// The orbit entered S_q; `prefix` is the minimal word leading there.
    HitSwitch { prefix: Word, point: FieldElement },
    /// The orbit revisited an exact state without meeting S_q: the
    /// continuation is unique forever. `prefix` holds the transient digits.
    Cycle { prefix: Word, cycle_length: usize },
    /// Step budget exhausted; inconclusive.
    Truncated { prefix: Word },
}

/// Follows the unique admissible digit while the orbit stays outside S_q.
/// Stops on entering S_q, on exact state repetition, or after `max_steps`.
pub fn follow_forced(base: &Base, x: &FieldElement, max_steps: usize) -> Result<ForcedOutcome> {
    if !in_range(base, x) {
        return Err(Error::OutOfRange);
    }
    let mut seen = ElementSet::new();
    let mut digits = Word::empty();
    let mut cur = x.clone();
    loop {
        match region(base, &cur) {
            Region::Switch => {
                return Ok(ForcedOutcome::HitSwitch {
                    prefix: digits,
                    point: cur,
                });
            }
            Region::OutOfRange => {
                return Err(Error::Internal(
                    "forced orbit left I_q".into(),
                ));
            }
            r => {
                if let Some(first) = seen.index_of(&cur) {
                    let cycle_length = seen.len() - first;
                    let prefix = Word(digits.digits()[..first].to_vec());
                    return Ok(ForcedOutcome::Cycle {
                        prefix,
                        cycle_length,
                    });
                }
                if seen.len() >= max_steps {
                    return Ok(ForcedOutcome::Truncated { prefix: digits });
                }
                seen.insert(cur.clone());
                let d = if r == Region::BelowSwitch {
                    Digit::Zero
                } else {
                    Digit::One
                };
                digits.push(d);
                cur = t_map(base, d, &cur);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Uniqueness {
    Unique,
    NotUnique(Word),
    Unknown,
}

/// Whether x has a unique expansion: the forced orbit never meets S_q.
pub fn is_unique(base: &Base, x: &FieldElement, max_steps: usize) -> Result<Uniqueness> {
    Ok(match follow_forced(base, x, max_steps)? {
        ForcedOutcome::Cycle { .. } => Uniqueness::Unique,
        ForcedOutcome::HitSwitch { prefix, .. } => Uniqueness::NotUnique(prefix),
        ForcedOutcome::Truncated { .. } => Uniqueness::Unknown,
    })
}

/// The unique-expansion set U_q for q in (golden, q_f]: the endpoints of
/// I_q together with the families 0^k(10)^inf and 1^k(10)^inf, 0 <= k <=
/// k_max, sorted by value. The k = 0 members of the two families coincide,
/// so the list carries 2*k_max + 3 entries.
pub fn u_family(
    base: &Base,
    k_max: usize,
) -> Result<Vec<(EventuallyPeriodicWord, FieldElement)>> {
    if !base.in_unique_window() {
        return Err(Error::BaseOutOfRange(
            "the unique-expansion characterization needs q in (golden, q_f]".into(),
        ));
    }
    let mut words = vec![
        EventuallyPeriodicWord::parse("|0").unwrap(),
        EventuallyPeriodicWord::parse("|1").unwrap(),
    ];
    let ten = Word::parse("10").unwrap();
    for k in 0..=k_max {
        for d in [Digit::Zero, Digit::One] {
            let pre = Word(vec![d; k]);
            let w = EventuallyPeriodicWord::new(pre, ten.clone()).unwrap();
            if !words.contains(&w) {
                words.push(w);
            }
        }
    }
    let mut out: Vec<(EventuallyPeriodicWord, FieldElement)> = words
        .into_iter()
        .map(|w| {
            let v = eval_word(base, &w);
            (w, v)
        })
        .collect();
    out.sort_by(|a, b| a.1.compare(&b.1));
    Ok(out)
}

/// The interval J_q = [(q+q^2)/(q^4-1), (1+q^3)/(q^4-1)], whose endpoints
/// lie on the period-4 cycle (0110)^inf / (1001)^inf.
pub fn j_interval(base: &Base) -> (FieldElement, FieldElement) {
    let q = &base.q;
    let q2 = q.mul(q);
    let q3 = q2.mul(q);
    let q4 = q2.mul(&q2);
    let denom = q4.sub(&base.one());
    let left = q.add(&q2).div(&denom).expect("q^4 > 1");
    let right = base.one().add(&q3).div(&denom).expect("q^4 > 1");
    if base.in_unique_window() {
        // J_q is a subset of S_q on the Lemma window, with equality only at q_f
        assert!(
            left.compare(base.switch_left()) != Ordering::Less
                && right.compare(base.switch_right()) != Ordering::Greater,
            "J_q must sit inside S_q for q in (golden, q_f]"
        );
    }
    (left, right)
}

/// Drives a switch-region point into J_q by iterating the digit blocks 01
/// (below J_q) or 10 (above J_q). Each block scales the distance to the
/// relevant period-2 fixed point by q^2, so the walk terminates; the
/// landing point is exact.
pub fn map_into_j(base: &Base, x: &FieldElement) -> Result<(Word, FieldElement)> {
    if !base.in_unique_window() {
        return Err(Error::BaseOutOfRange(
            "the funnelling procedure needs q in (golden, q_f]".into(),
        ));
    }
    if region(base, x) != Region::Switch {
        return Err(Error::NotInSwitch);
    }
    let (jl, jr) = j_interval(base);
    let mut cur = x.clone();
    let mut out = Word::empty();
    loop {
        if cur.compare(&jl) != Ordering::Less {
            if cur.compare(&jr) != Ordering::Greater {
                return Ok((out, cur));
            }
            // above J_q: apply T_1 then T_0
            out.push(Digit::One);
            out.push(Digit::Zero);
            cur = t_map(base, Digit::Zero, &t_map(base, Digit::One, &cur));
        } else {
            // below J_q: apply T_0 then T_1
            out.push(Digit::Zero);
            out.push(Digit::One);
            cur = t_map(base, Digit::One, &t_map(base, Digit::Zero, &cur));
        }
        if out.len() > 100_000 {
            return Err(Error::Internal("funnelling failed to land in J_q".into()));
        }
    }
}

#[cfg(test)]
mod tests;
