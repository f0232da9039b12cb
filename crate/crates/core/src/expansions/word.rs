//! Digit strings over {0,1} and eventually periodic words with a canonical
//! form, so word equality is decidable by representation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A binary digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    Zero = 0,
    One = 1,
}

impl Digit {
    pub fn value(self) -> u8 {
        self as u8
    }

    pub fn from_char(c: char) -> Result<Digit> {
        match c {
            '0' => Ok(Digit::Zero),
            '1' => Ok(Digit::One),
            _ => Err(Error::Parse(format!("invalid digit `{c}`"))),
        }
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A finite digit string. Ordering is lexicographic.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Digit>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, d: Digit) {
        self.0.push(d);
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, times: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * times);
        for _ in 0..times {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Parses a digit string such as "0110". The empty string is the empty word.
    pub fn parse(s: &str) -> Result<Word> {
        let mut v = Vec::with_capacity(s.len());
        for c in s.chars() {
            v.push(Digit::from_char(c)?);
        }
        Ok(Word(v))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// An infinite digit sequence of the form preperiod followed by period
/// repeated forever.
///
/// Canonical form: the period is primitive (not a power of a shorter word)
/// and the preperiod is minimal (its last digit differs from the period's
/// last digit). Two representations denote the same sequence iff their
/// canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicWord {
    preperiod: Word,
    period: Word,
}

impl EventuallyPeriodicWord {
    pub fn new(preperiod: Word, period: Word) -> Result<EventuallyPeriodicWord> {
        if period.is_empty() {
            return Err(Error::Parse("period must be nonempty".into()));
        }
        let mut w = EventuallyPeriodicWord { preperiod, period };
        w.canonicalize();
        Ok(w)
    }

    pub fn periodic(period: Word) -> Result<EventuallyPeriodicWord> {
        EventuallyPeriodicWord::new(Word::empty(), period)
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// The first n digits of the sequence.
    pub fn prefix(&self, n: usize) -> Word {
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.digit_at(i));
        }
        Word(v)
    }

    /// Digit at 0-based position i.
    pub fn digit_at(&self, i: usize) -> Digit {
        let m = self.preperiod.len();
        if i < m {
            self.preperiod.0[i]
        } else {
            self.period.0[(i - m) % self.period.len()]
        }
    }

    fn canonicalize(&mut self) {
        // primitive period
        let k = self.period.len();
        for d in 1..k {
            if !k.is_multiple_of(d) {
                continue;
            }
            let head = &self.period.0[..d];
            if self.period.0.chunks(d).all(|c| c == head) {
                self.period = Word(head.to_vec());
                break;
            }
        }
        // minimal preperiod: absorb trailing digits equal to the aligned
        // period digit, rotating the period right each time
        while let (Some(&last_pre), Some(&last_per)) =
            (self.preperiod.0.last(), self.period.0.last())
        {
            if last_pre != last_per {
                break;
            }
            self.preperiod.0.pop();
            let tail = self.period.0.pop().unwrap();
            self.period.0.insert(0, tail);
        }
    }

    /// Parses the "PRE|PER" text form; "|PER" is purely periodic.
    /// A missing or empty period ("PRE|") is rejected: the form denotes an
    /// infinite word.
    pub fn parse(s: &str) -> Result<EventuallyPeriodicWord> {
        let (pre, per) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected PRE|PER word form, got `{s}`")))?;
        if per.is_empty() {
            return Err(Error::Parse(format!(
                "`{s}` is a finite word; an infinite word PRE|PER needs a nonempty period"
            )));
        }
        EventuallyPeriodicWord::new(Word::parse(pre)?, Word::parse(per)?)
    }
}

impl FromStr for EventuallyPeriodicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<EventuallyPeriodicWord> {
        EventuallyPeriodicWord::parse(s)
    }
}

impl fmt::Display for EventuallyPeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.preperiod, self.period)
    }
}
