//! Integer and rational polynomials: the substrate for root isolation and
//! number-field arithmetic.
//!
//! Polynomials are stored dense, coefficients in ascending degree order,
//! trailing zeros trimmed (the zero polynomial is the empty vector).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_int(x: &BigInt) -> Sign {
        match x.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }

    pub fn of_rational(x: &Rational) -> Sign {
        Sign::of_int(x.numer())
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

/// A polynomial with arbitrary-precision integer coefficients, ascending
/// degree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x^n
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::new(out)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// gcd of the absolute values of the coefficients (zero for the zero poly).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact sign of p(n/d) for d > 0, via the homogenized integer Horner
    /// scheme sum a_i n^i d^(deg-i).
    pub fn sign_at(&self, x: &Rational) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        let n = x.numer();
        let d = x.denom();
        let deg = self.coeffs.len() - 1;
        let mut acc = self.coeffs[deg].clone();
        let mut dpow = BigInt::one();
        for i in (0..deg).rev() {
            dpow *= d;
            acc = acc * n + &self.coeffs[i] * &dpow;
        }
        Sign::of_int(&acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    /// Range of p over the interval [lo, hi], by exact interval Horner.
    pub fn eval_interval(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        debug_assert!(lo <= hi);
        let mut a = Rational::zero();
        let mut b = Rational::zero();
        for c in self.coeffs.iter().rev() {
            let c = Rational::from(c.clone());
            let p1 = &a * lo;
            let p2 = &a * hi;
            let p3 = &b * lo;
            let p4 = &b * hi;
            let mut min = p1.clone();
            let mut max = p1;
            for p in [p2, p3, p4] {
                if p < min {
                    min = p.clone();
                }
                if p > max {
                    max = p;
                }
            }
            a = min + &c;
            b = max + c;
        }
        (a, b)
    }

    /// Square-free part: p / gcd(p, p'), primitive.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) <= 1 {
            return self.primitive();
        }
        let g = int_gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        let q = RatPoly::from_int(self)
            .exact_div(&RatPoly::from_int(&g))
            .expect("gcd divides");
        q.to_int_primitive()
    }

    /// All rational roots, via the rational root theorem. The divisor
    /// enumeration is skipped (empty result) when the leading or constant
    /// coefficient exceeds the factoring budget.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        let mut p = self.clone();
        // strip factors of x
        let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            p = IntPolynomial::new(p.coeffs[zeros..].to_vec());
            out.push(Rational::zero());
        }
        if p.degree().unwrap_or(0) == 0 {
            return out;
        }
        let limit = BigInt::from(1_000_000u32);
        let a0 = p.coeffs[0].abs();
        let an = p.leading().unwrap().abs();
        if a0 > limit || an > limit {
            return out;
        }
        let num_divs = small_divisors(&a0);
        let den_divs = small_divisors(&an);
        for n in &num_divs {
            for d in &den_divs {
                let cand = Rational::new(n.clone(), d.clone());
                for c in [cand.clone(), -cand] {
                    if p.sign_at(&c).is_zero() && !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }

    /// Remove the linear factor (d*x - n) for the rational root n/d.
    /// Panics if n/d is not a root.
    pub fn deflate_rational_root(&self, root: &Rational) -> IntPolynomial {
        assert!(self.sign_at(root).is_zero(), "not a root");
        let factor = IntPolynomial::new(vec![-root.numer().clone(), root.denom().clone()]);
        RatPoly::from_int(self)
            .exact_div(&RatPoly::from_int(&factor))
            .expect("root divides")
            .to_int_primitive()
    }
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Primitive gcd of two integer polynomials (computed over Q, rescaled).
pub fn int_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    RatPoly::from_int(a).gcd(&RatPoly::from_int(b)).to_int_primitive()
}

// ---------------------------------------------------------------------------
// Rational-coefficient polynomials (internal helper representation)
// ---------------------------------------------------------------------------

/// Dense polynomial over Q, ascending order, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    pub coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        RatPoly::new(p.coeffs().iter().map(|c| Rational::from(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, k: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => {
                let inv = Rational::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn div_rem(&self, div: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let dl = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &dl;
            if !c.is_zero() {
                for (i, dc) in div.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + i] -= t;
                }
                quot[k] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, div: &RatPoly) -> RatPoly {
        self.div_rem(div).1
    }

    /// Exact division; None if the remainder is nonzero.
    pub fn exact_div(&self, div: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(div);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*other = g, g monic.
    pub fn ext_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = RatPoly::one();
        let mut s1 = RatPoly::zero();
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (RatPoly::zero(), RatPoly::zero(), RatPoly::zero()),
            Some(l) => {
                let inv = Rational::one() / l;
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Clear denominators and normalize to a primitive integer polynomial
    /// with positive leading coefficient (sign may flip).
    pub fn to_int_primitive(&self) -> IntPolynomial {
        self.to_int_scaled().0
    }

    /// Clear denominators by the lcm; returns (primitive integer polynomial,
    /// positive rational scalar s) with self = s * poly.
    pub fn to_int_scaled(&self) -> (IntPolynomial, Rational) {
        if self.is_zero() {
            return (IntPolynomial::zero(), Rational::one());
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let p = IntPolynomial::new(ints);
        let prim = p.primitive();
        // self = (content(p)/l) * prim, with sign folded into content
        let mut cont = p.content();
        if p.leading().unwrap().is_negative() {
            cont = -cont;
        }
        (prim, Rational::new(cont, l))
    }
}

// ---------------------------------------------------------------------------
// Sturm chains
// ---------------------------------------------------------------------------

/// Sturm chain of a square-free integer polynomial. Chain members are stored
/// as primitive integer polynomials (positive rescaling preserves signs).
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Builds the chain. The input should be square-free; root counts are
    /// then exact.
    pub fn new(p: &IntPolynomial) -> SturmChain {
        let mut chain = Vec::new();
        let p0 = p.primitive();
        if p0.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p0.clone());
        let p1 = p0.derivative().primitive();
        if p1.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p1);
        loop {
            let n = chain.len();
            let r = RatPoly::from_int(&chain[n - 2]).rem(&RatPoly::from_int(&chain[n - 1]));
            if r.is_zero() {
                break;
            }
            // negate, then rescale by a positive factor only
            let (prim, scale) = r.neg().to_int_scaled();
            let next = if Sign::of_rational(&scale) == Sign::Negative {
                prim.neg()
            } else {
                prim
            };
            chain.push(next);
            if chain.last().unwrap().degree() == Some(0) {
                break;
            }
        }
        SturmChain { chain }
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = Sign::Zero;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s.is_zero() {
                continue;
            }
            if !last.is_zero() && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    /// Requires p(lo) != 0 and p(hi) != 0.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if self.chain.is_empty() {
            return Ok(0);
        }
        if lo > hi {
            return Ok(0);
        }
        let p = &self.chain[0];
        if p.sign_at(lo).is_zero() || p.sign_at(hi).is_zero() {
            return Err(Error::Internal(
                "Sturm count requires nonzero endpoint values".into(),
            ));
        }
        if lo == hi {
            return Ok(0);
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i >= 1 {
                write!(f, "x")?;
                if i >= 2 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses either the human form `x^6-x^4-x^3-2x^2-x-1` or the ascending
/// coefficient list `[-1,-1,-2,-1,-1,0,1]`.
pub fn parse_polynomial(input: &str) -> Result<IntPolynomial> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if s.starts_with('[') {
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("unterminated coefficient list: {input}")))?;
        let mut coeffs = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(format!("empty coefficient in list: {input}")));
            }
            let v: BigInt = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{part}` in {input}")))?;
            coeffs.push(v);
        }
        return Ok(IntPolynomial::new(coeffs));
    }
    parse_human_polynomial(s)
}

fn parse_human_polynomial(s: &str) -> Result<IntPolynomial> {
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let n = bytes.len();
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let mut sign = BigInt::one();
    // optional leading sign
    if i < n && (bytes[i] == '+' || bytes[i] == '-') {
        if bytes[i] == '-' {
            sign = -sign;
        }
        i += 1;
    }
    loop {
        if i >= n {
            return Err(Error::Parse(format!("trailing sign in polynomial: {s}")));
        }
        // coefficient digits
        let start = i;
        while i < n && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: BigInt = if start == i {
            BigInt::one()
        } else {
            bytes[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in {s}")))?
        };
        // optional '*'
        if i < n && bytes[i] == '*' {
            i += 1;
        }
        // variable part
        let mut exp = 0usize;
        if i < n && (bytes[i] == 'x' || bytes[i] == 'X' || bytes[i] == 'q') {
            i += 1;
            exp = 1;
            if i < n && bytes[i] == '^' {
                i += 1;
                let estart = i;
                while i < n && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if estart == i {
                    return Err(Error::Parse(format!("missing exponent in {s}")));
                }
                exp = bytes[estart..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s}")))?;
            }
        } else if start == i {
            return Err(Error::Parse(format!(
                "expected coefficient or variable at position {i} in {s}"
            )));
        }
        terms.push((exp, sign * coeff));
        // next sign
        if i >= n {
            break;
        }
        match bytes[i] {
            '+' => sign = BigInt::one(),
            '-' => sign = -BigInt::one(),
            c => {
                return Err(Error::Parse(format!(
                    "unexpected character `{c}` in polynomial {s}"
                )));
            }
        }
        i += 1;
    }
    let deg = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Parses a defining relation `LHS=RHS` (both sides polynomials in x) into
/// the polynomial LHS - RHS.
pub fn parse_relation(input: &str) -> Result<IntPolynomial> {
    let (lhs, rhs) = input
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("relation must contain `=`: {input}")))?;
    let l = parse_polynomial(lhs)?;
    let r = parse_polynomial(rhs)?;
    Ok(l.sub(&r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parse_both_formats_agree() {
        let human = parse_polynomial("x^6-x^4-x^3-2x^2-x-1").unwrap();
        let list = parse_polynomial("[-1,-1,-2,-1,-1,0,1]").unwrap();
        assert_eq!(human, list);
        assert_eq!(human.degree(), Some(6));
    }

    #[test]
    fn parse_relation_moves_rhs() {
        let r = parse_relation("x^2=x+1").unwrap();
        assert_eq!(r, p(&[-1, -1, 1]));
        let r = parse_relation("x^3=2x^2-x+1").unwrap();
        assert_eq!(r, p(&[-1, 1, -2, 1]));
    }

    #[test]
    fn display_round_trips() {
        let q = p(&[-1, -1, -2, -1, -1, 0, 1]);
        let s = q.to_string();
        assert_eq!(s, "x^6 - x^4 - x^3 - 2x^2 - x - 1");
        assert_eq!(parse_polynomial(&s).unwrap(), q);
    }

    #[test]
    fn sign_at_rational_points() {
        let q = p(&[-1, -1, 1]); // x^2 - x - 1
        assert_eq!(q.sign_at(&rat(0, 1)), Sign::Negative);
        assert_eq!(q.sign_at(&rat(2, 1)), Sign::Positive);
        assert_eq!(q.sign_at(&rat(13, 8)), Sign::Positive);
        assert_eq!(q.sign_at(&rat(8, 5)), Sign::Negative);
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        let q = p(&[-1, -1, 1]);
        let sq = q.mul(&q).mul(&p(&[1, 1])); // (x^2-x-1)^2 (x+1)
        let sf = sq.squarefree_part();
        assert_eq!(sf, q.mul(&p(&[1, 1])).primitive());
    }

    #[test]
    fn sturm_counts_roots() {
        // (x^2-2)(x^2-3): four real roots
        let q = p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1]));
        let chain = SturmChain::new(&q.squarefree_part());
        assert_eq!(chain.count_roots(&rat(-10, 1), &rat(10, 1)).unwrap(), 4);
        assert_eq!(chain.count_roots(&rat(0, 1), &rat(10, 1)).unwrap(), 2);
        assert_eq!(chain.count_roots(&rat(14, 10), &rat(15, 10)).unwrap(), 1);
        assert_eq!(chain.count_roots(&rat(2, 1), &rat(3, 1)).unwrap(), 0);
    }

    #[test]
    fn interval_eval_brackets_true_value() {
        let q = p(&[-1, -1, 1]);
        let (lo, hi) = q.eval_interval(&rat(3, 2), &rat(13, 8));
        let v = q.eval(&rat(8, 5));
        assert!(lo <= v && v <= hi);
        assert!(lo < hi);
    }

    #[test]
    fn ext_gcd_bezout_identity() {
        let a = RatPoly::from_int(&p(&[-1, -1, 1]));
        let b = RatPoly::from_int(&p(&[2, 1]));
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g.degree(), Some(0));
        let lhs = u.mul(&a).add(&v.mul(&b));
        assert_eq!(lhs, g);
    }

    #[test]
    fn rational_roots_found_and_deflated() {
        // (x-1)(2x-3)(x^2-x-1)
        let q = p(&[1, -1]).neg().mul(&p(&[-3, 2])).mul(&p(&[-1, -1, 1]));
        let mut roots = q.rational_roots();
        roots.sort();
        assert_eq!(roots, vec![rat(1, 1), rat(3, 2)]);
        let d = q.deflate_rational_root(&rat(1, 1));
        let d = d.deflate_rational_root(&rat(3, 2));
        assert_eq!(d, p(&[-1, -1, 1]));
    }
}
