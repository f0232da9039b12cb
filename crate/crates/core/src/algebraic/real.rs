//! Real algebraic numbers as (square-free integer polynomial, isolating
//! rational interval) pairs, with Sturm-based isolation and exact comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::poly::{IntPolynomial, Rational, Sign, SturmChain};
use crate::error::{Error, Result};

/// An exact real algebraic number.
///
/// Invariants: `minpoly` is square-free and primitive with exactly one real
/// root in `[lo, hi]`, and `minpoly(lo) != 0 != minpoly(hi)` unless
/// `lo == hi`, in which case the number is rational and `minpoly` is linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealAlgebraic {
    minpoly: IntPolynomial,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraic {
    /// Constructs from parts, verifying the single-root invariant.
    pub fn new(minpoly: IntPolynomial, lo: Rational, hi: Rational) -> Result<RealAlgebraic> {
        if lo > hi {
            return Err(Error::Parse("isolating interval has lo > hi".into()));
        }
        let p = minpoly.squarefree_part();
        if lo == hi {
            if !p.sign_at(&lo).is_zero() {
                return Err(Error::Parse("point interval is not a root".into()));
            }
            return Ok(RealAlgebraic::from_rational(lo));
        }
        if p.sign_at(&lo).is_zero() || p.sign_at(&hi).is_zero() {
            return Err(Error::Parse(
                "isolating interval endpoints must not be roots".into(),
            ));
        }
        let chain = SturmChain::new(&p);
        if chain.count_roots(&lo, &hi)? != 1 {
            return Err(Error::Parse(
                "interval does not isolate exactly one root".into(),
            ));
        }
        Ok(RealAlgebraic { minpoly: p, lo, hi })
    }

    pub fn from_rational(r: Rational) -> RealAlgebraic {
        let minpoly = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        RealAlgebraic {
            minpoly,
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn from_integer(n: i64) -> RealAlgebraic {
        RealAlgebraic::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    /// The exact rational value, when the number is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.lo.clone())
        } else {
            None
        }
    }

    fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from(BigInt::from(2))
    }

    /// One bisection step (no-op for point intervals).
    pub fn refine_step(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let m = self.midpoint();
        match self.minpoly.sign_at(&m) {
            Sign::Zero => {
                // exact hit: the root is m; shrink to a small interval around it
                let w = self.width() / Rational::from(BigInt::from(8));
                self.lo = &m - &w;
                self.hi = &m + &w;
            }
            s => {
                if s == self.minpoly.sign_at(&self.lo) {
                    self.lo = m;
                } else {
                    self.hi = m;
                }
            }
        }
    }

    /// The same number with interval width at most `eps`.
    pub fn refine(&self, eps: &Rational) -> RealAlgebraic {
        assert!(eps.is_positive(), "eps must be positive");
        let mut out = self.clone();
        while out.width() > *eps {
            out.refine_step();
        }
        out
    }

    /// Sign of the number itself.
    pub fn sign(&self) -> Sign {
        match self.compare_rational(&Rational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    /// Exact comparison against a rational point.
    pub fn compare_rational(&self, r: &Rational) -> Ordering {
        if let Some(v) = self.as_rational() {
            return v.cmp(r);
        }
        if r <= &self.lo {
            // value > lo unless lo is the value itself (excluded: lo not a root)
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        if self.minpoly.sign_at(r).is_zero() {
            return Ordering::Equal;
        }
        let mut me = self.clone();
        loop {
            if r <= &me.lo {
                return Ordering::Greater;
            }
            if r >= &me.hi {
                return Ordering::Less;
            }
            me.refine_step();
        }
    }

    /// Exact comparison, valid across different minimal polynomials.
    /// Equality is decided by the gcd of the two polynomials; order by
    /// interval refinement.
    pub fn compare(&self, other: &RealAlgebraic) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.compare_rational(&r);
        }
        if let Some(r) = self.as_rational() {
            return other.compare_rational(&r).reverse();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        // a few cheap refinement rounds often separate the intervals
        for _ in 0..4 {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.refine_step();
            b.refine_step();
        }
        if equal_algebraic(&a, &b) {
            return Ordering::Equal;
        }
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.refine_step();
            b.refine_step();
        }
    }

    /// Correctly rounded decimal string with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        assert!(digits >= 1, "digits must be >= 1");
        if let Some(v) = self.as_rational() {
            return decimal_of_rational(&v, digits);
        }
        let mut me = self.clone();
        loop {
            let a = rounded_scaled(&me.lo, digits);
            let b = rounded_scaled(&me.hi, digits);
            if a == b {
                return format_scaled(&a, digits);
            }
            me.refine_step();
        }
    }
}

/// Equality of two irrational algebraic numbers in (possibly) different
/// polynomials: both must be the unique root of gcd(p_a, p_b) in their
/// respective isolating intervals, and those roots must coincide inside the
/// interval intersection.
fn equal_algebraic(a: &RealAlgebraic, b: &RealAlgebraic) -> bool {
    let g = super::poly::int_gcd(a.minpoly(), b.minpoly());
    match g.degree() {
        None | Some(0) => return false,
        _ => {}
    }
    let chain = SturmChain::new(&g);
    // g divides both minpolys, so g is nonzero at all four interval endpoints
    let in_a = chain.count_roots(&a.lo, &a.hi).unwrap_or(0) == 1;
    let in_b = chain.count_roots(&b.lo, &b.hi).unwrap_or(0) == 1;
    if !(in_a && in_b) {
        return false;
    }
    let lo = (&a.lo).max(&b.lo).clone();
    let hi = (&a.hi).min(&b.hi).clone();
    if lo >= hi {
        return false;
    }
    chain.count_roots(&lo, &hi).unwrap_or(0) == 1
}

/// floor(x * 10^digits + 1/2) as an integer (round half toward +inf; ties
/// are impossible for irrational inputs).
pub(crate) fn rounded_scaled(x: &Rational, digits: usize) -> BigInt {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let y = x * Rational::from(scale) + Rational::new(BigInt::one(), BigInt::from(2));
    y.floor().to_integer()
}

pub(crate) fn format_scaled(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let mag = n.abs().to_string();
    let mag = if mag.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - mag.len()), mag)
    } else {
        mag
    };
    let (int_part, frac_part) = mag.split_at(mag.len() - digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
}

pub(crate) fn decimal_of_rational(v: &Rational, digits: usize) -> String {
    format_scaled(&rounded_scaled(v, digits), digits)
}

/// Isolates all real roots of `p` in the open interval `range`, in
/// increasing order. The square-free part of `p` is used as the minimal
/// polynomial; rational roots sitting exactly on the range endpoints are
/// excluded (they are outside the open range).
///
/// ```
/// use beta_branch::algebraic::{isolate_real_roots, parse_polynomial};
/// use num_rational::BigRational;
/// use num_bigint::BigInt;
///
/// let p = parse_polynomial("x^2-x-1")?;
/// let zero = BigRational::from(BigInt::from(0));
/// let three = BigRational::from(BigInt::from(3));
/// let roots = isolate_real_roots(&p, (&zero, &three))?;
/// assert_eq!(roots.len(), 1);
/// assert_eq!(roots[0].to_decimal(10), "1.6180339887");
/// # Ok::<(), beta_branch::Error>(())
/// ```
pub fn isolate_real_roots(
    p: &IntPolynomial,
    range: (&Rational, &Rational),
) -> Result<Vec<RealAlgebraic>> {
    if p.is_zero() {
        return Err(Error::Parse("cannot isolate roots of the zero polynomial".into()));
    }
    let (lo, hi) = range;
    if lo >= hi {
        return Ok(Vec::new());
    }
    let mut s = p.squarefree_part();
    if s.degree() == Some(0) {
        return Ok(Vec::new());
    }
    // Endpoint roots are excluded by openness; deflate them so Sturm counting
    // sees nonzero endpoint values.
    for endpoint in [lo, hi] {
        if s.sign_at(endpoint).is_zero() {
            s = s.deflate_rational_root(endpoint);
        }
    }
    if s.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&s);
    let mut out: Vec<RealAlgebraic> = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count_roots(&a, &b)?;
        match n {
            0 => {}
            1 => {
                // shrink until strictly inside the requested open range
                let mut root = RealAlgebraic {
                    minpoly: s.clone(),
                    lo: a,
                    hi: b,
                };
                while &root.lo <= lo || &root.hi >= hi {
                    root.refine_step();
                }
                out.push(root);
            }
            _ => {
                let m = split_point(&s, &a, &b);
                // process left before right so results come out ascending;
                // stack pops in reverse push order
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    // adjacent intervals may share a split endpoint; refine until disjoint
    for i in 1..out.len() {
        while out[i - 1].hi >= out[i].lo {
            out[i - 1].refine_step();
            out[i].refine_step();
        }
    }
    Ok(out)
}

/// A split point strictly inside (a, b) where the polynomial is nonzero.
fn split_point(p: &IntPolynomial, a: &Rational, b: &Rational) -> Rational {
    let two = Rational::from(BigInt::from(2));
    let mut m = (a + b) / &two;
    let mut step = (b - a) / Rational::from(BigInt::from(16));
    while p.sign_at(&m).is_zero() {
        // nudge away from the rational root; finitely many roots, so this ends
        m += &step;
        step /= &two;
    }
    m
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{r}")
        } else {
            write!(f, "root of {} in [{}, {}]", self.minpoly, self.lo, self.hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::poly::parse_polynomial;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn one_root(poly: &str, lo: i64, hi: i64) -> RealAlgebraic {
        let p = parse_polynomial(poly).unwrap();
        let roots = isolate_real_roots(&p, (&rat(lo, 1), &rat(hi, 1))).unwrap();
        assert_eq!(roots.len(), 1, "{poly} should have one root in ({lo},{hi})");
        roots.into_iter().next().unwrap()
    }

    #[test]
    fn golden_ratio_isolated_and_refined() {
        let g = one_root("x^2-x-1", 0, 3);
        assert_eq!(g.to_decimal(10), "1.6180339887");
        let eps = Rational::new(BigInt::one(), BigInt::from(100_000_000u64));
        let r = g.refine(&eps);
        assert!(r.width() <= eps);
        assert_eq!(r.to_decimal(7), "1.6180340");
    }

    #[test]
    fn paper_roots_match_printed_digits() {
        assert_eq!(one_root("x^6-x^4-x^3-2x^2-x-1", 1, 2).to_decimal(5), "1.64541");
        assert_eq!(one_root("x^3-2x^2+x-1", 1, 2).to_decimal(5), "1.75488");
        assert_eq!(one_root("x^4-2x^2-x-1", 1, 2).to_decimal(5), "1.71064");
        assert_eq!(one_root("x^5-2x^3-x^2-1", 1, 2).to_decimal(5), "1.67602");
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (x^2-2)(x^2-3)(x-1)(2x-3): roots 1, 3/2, ±sqrt2, ±sqrt3
        let p = parse_polynomial("x^2-2").unwrap();
        let q = parse_polynomial("x^2-3").unwrap();
        let l = parse_polynomial("[-1,1]").unwrap();
        let m = parse_polynomial("[-3,2]").unwrap();
        let prod = p.mul(&q).mul(&l).mul(&m);
        let roots = isolate_real_roots(&prod, (&rat(-10, 1), &rat(10, 1))).unwrap();
        assert_eq!(roots.len(), 6);
        for w in roots.windows(2) {
            assert_eq!(w[0].compare(&w[1]), Ordering::Less);
            assert!(w[0].interval().1 < w[1].interval().0);
        }
    }

    #[test]
    fn endpoint_roots_are_excluded() {
        // (x-1)(x^2-x-1) on (1,2): root x=1 excluded, golden kept
        let p = parse_polynomial("x^2-x-1").unwrap().mul(&parse_polynomial("[-1,1]").unwrap());
        let roots = isolate_real_roots(&p, (&rat(1, 1), &rat(2, 1))).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].to_decimal(5), "1.61803");
    }

    #[test]
    fn cross_polynomial_compare() {
        let q_aleph0 = one_root("x^6-x^4-x^3-2x^2-x-1", 1, 2);
        let r4 = one_root("x^6-2x^4-x^3-1", 1, 2);
        assert_eq!(q_aleph0.compare(&r4), Ordering::Less);
        assert_eq!(r4.compare(&q_aleph0), Ordering::Greater);
    }

    #[test]
    fn equality_via_gcd_across_polynomials() {
        // golden as root of x^2-x-1 and of (x^2-x-1)(x^2-2)
        let a = one_root("x^2-x-1", 1, 2);
        let p = parse_polynomial("x^2-x-1").unwrap().mul(&parse_polynomial("x^2-2").unwrap());
        let roots = isolate_real_roots(&p, (&rat(3, 2), &rat(2, 1))).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(a.compare(&roots[0]), Ordering::Equal);
        // sqrt2 is a different root of the same product
        let roots = isolate_real_roots(&p, (&rat(1, 1), &rat(3, 2))).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(a.compare(&roots[0]), Ordering::Greater);
    }

    #[test]
    fn rational_numbers_are_exact() {
        let x = RealAlgebraic::from_rational(rat(3, 2));
        assert!(x.is_rational());
        assert_eq!(x.minpoly().degree(), Some(1));
        assert_eq!(x.to_decimal(4), "1.5000");
        assert_eq!(x.compare_rational(&rat(3, 2)), Ordering::Equal);
        assert_eq!(x.compare(&RealAlgebraic::from_integer(2)), Ordering::Less);
    }

    #[test]
    fn decimal_rounds_to_nearest() {
        // q_f = 1.7548776662... rounds UP at 5 digits
        let qf = one_root("x^3-2x^2+x-1", 1, 2);
        assert_eq!(qf.to_decimal(5), "1.75488");
        assert_eq!(qf.to_decimal(6), "1.754878");
        // negative rational formatting
        let neg = RealAlgebraic::from_rational(rat(-1, 8));
        assert_eq!(neg.to_decimal(3), "-0.125");
    }

    #[test]
    fn compare_consistent_with_decimals() {
        let a = one_root("x^2-x-1", 1, 2);
        let b = one_root("x^6-x^4-x^3-2x^2-x-1", 1, 2);
        assert_eq!(a.compare(&b), Ordering::Less);
        let da: f64 = a.to_decimal(12).parse().unwrap();
        let db: f64 = b.to_decimal(12).parse().unwrap();
        assert!(da < db);
    }
}
