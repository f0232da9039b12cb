//! Parsers for the CLI's base and point grammars.
//!
//! Base specs: a registry name (`q_aleph0`, `alpha_5`), a rational (`3/2`),
//! or a polynomial in either text form, optionally with an isolating
//! interval: `x^4-2x^2-x-1@(1,2)`.
//!
//! Point specs: `word:PRE|PER` evaluates an eventually periodic word;
//! `fe:EXPR` parses a rational expression in q with exact field division,
//! e.g. `fe:(q+q^2)/(q^4-1)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use beta_branch::algebraic::{isolate_real_roots, parse_polynomial, FieldElement, RealAlgebraic};
use beta_branch::constants;
use beta_branch::expansions::{eval_word, Base, EventuallyPeriodicWord};
use beta_branch::{Error, Result};

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

fn is_rational_literal(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_digit() || c == '/' || c == '-' || c == '+')
}

/// Parses a base spec into a Base (always strictly inside (1,2)).
pub fn parse_base(spec: &str) -> Result<Base> {
    let spec = spec.trim();
    if let Some(named) = constants::lookup(spec) {
        return Base::from_named(&named);
    }
    if is_rational_literal(spec) {
        let r = parse_rational(spec)?;
        return Base::new(RealAlgebraic::from_rational(r));
    }
    let (poly_text, range) = match spec.split_once('@') {
        None => (spec, None),
        Some((p, r)) => (p, Some(r.trim())),
    };
    let poly = parse_polynomial(poly_text)?;
    let (lo, hi) = match range {
        None => (
            BigRational::from(BigInt::from(1)),
            BigRational::from(BigInt::from(2)),
        ),
        Some(r) => {
            let inner = r
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| {
                    Error::Parse(format!("interval must look like (lo,hi), got `{r}`"))
                })?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("interval needs two endpoints: `{r}`")))?;
            (parse_rational(a)?, parse_rational(b)?)
        }
    };
    let roots = isolate_real_roots(&poly, (&lo, &hi))?;
    match roots.len() {
        0 => Err(Error::Parse(format!(
            "`{poly_text}` has no root in ({lo}, {hi})"
        ))),
        1 => Base::new(roots.into_iter().next().unwrap()),
        n => Err(Error::Parse(format!(
            "`{poly_text}` has {n} roots in ({lo}, {hi}); pick one with POLY@(lo,hi)"
        ))),
    }
}

/// Parses a point spec relative to a base.
pub fn parse_point(base: &Base, spec: &str) -> Result<FieldElement> {
    let spec = spec.trim();
    if let Some(word) = spec.strip_prefix("word:") {
        let w = EventuallyPeriodicWord::parse(word)?;
        return Ok(eval_word(base, &w));
    }
    if let Some(expr) = spec.strip_prefix("fe:") {
        return eval_expr(base, expr);
    }
    Err(Error::Parse(format!(
        "point spec must start with `word:` or `fe:`, got `{spec}`"
    )))
}

/// Recursive-descent evaluator for rational expressions in q.
/// Grammar: expr = term (('+'|'-') term)*; term = unary (('*'|'/') unary)*;
/// unary = '-'* power; power = atom ('^' uint)?; atom = 'q' | rational |
/// '(' expr ')'.
pub fn eval_expr(base: &Base, text: &str) -> Result<FieldElement> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        base,
        chars,
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected `{}` at offset {} in expression `{text}`",
            p.chars[p.pos], p.pos
        )));
    }
    Ok(v)
}

struct Parser<'a> {
    base: &'a Base,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.unary()?;
        while let Some(op) = self.peek() {
            match op {
                '*' => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                '/' => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FieldElement> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElement> {
        let b = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(Error::Parse("missing exponent".into()));
            }
            let e: u32 = self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            return Ok(b.pow(e));
        }
        Ok(b)
    }

    fn atom(&mut self) -> Result<FieldElement> {
        match self.peek() {
            Some('q') | Some('x') => {
                self.bump();
                Ok(self.base.q().clone())
            }
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                // a '/' between digit runs binds as exact rational division
                // through the term rule, which is equivalent in a field
                let n: BigInt = self.chars[start..self.pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse("bad integer".into()))?;
                Ok(self.base.from_rational(BigRational::from(n)))
            }
            other => Err(Error::Parse(format!(
                "unexpected {:?} in expression",
                other
            ))),
        }
    }
}
