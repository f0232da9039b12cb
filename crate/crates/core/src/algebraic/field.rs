//! Arithmetic in Q(q) for an algebraic base q: canonical reduced
//! representatives, exact sign determination, and guaranteed-order
//! comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::poly::{IntPolynomial, RatPoly, Rational, Sign, SturmChain};
use super::real::{decimal_of_rational, format_scaled, rounded_scaled, RealAlgebraic};
use crate::error::{Error, Result};

/// The ambient field Q(q), generated by a real algebraic number.
///
/// The generator's defining polynomial is square-free; rational linear
/// factors not containing the generator are deflated away at construction so
/// that the canonical-representative equality used for state deduplication
/// stays honest for every base the registry produces.
#[derive(Debug)]
pub struct NumberField {
    generator: RealAlgebraic,
    minpoly: IntPolynomial,
    monic: RatPoly,
    degree: usize,
    /// Best refinement of the generator's isolating interval seen so far.
    /// Purely a performance cache; semantically transparent.
    refined: Mutex<RealAlgebraic>,
}

impl NumberField {
    pub fn new(generator: RealAlgebraic) -> Arc<NumberField> {
        let generator = if generator.minpoly().degree() == Some(1) && !generator.is_rational() {
            // a linear minpoly pins a rational value; normalize the interval
            let c = generator.minpoly().coeffs();
            RealAlgebraic::from_rational(Rational::new(-c[0].clone(), c[1].clone()))
        } else {
            generator
        };
        let mut minpoly = generator.minpoly().clone();
        if generator.as_rational().is_none() {
            for r in minpoly.rational_roots() {
                if minpoly.degree() > Some(1) {
                    minpoly = minpoly.deflate_rational_root(&r);
                }
            }
        }
        let generator = if minpoly != *generator.minpoly() {
            let (lo, hi) = generator.interval();
            RealAlgebraic::new(minpoly.clone(), lo.clone(), hi.clone())
                .expect("deflation preserves the isolated root")
        } else {
            generator
        };
        let monic = RatPoly::from_int(&minpoly).monic();
        let degree = minpoly.degree().expect("nonzero minpoly");
        Arc::new(NumberField {
            refined: Mutex::new(generator.clone()),
            generator,
            minpoly,
            monic,
            degree,
        })
    }

    pub fn generator(&self) -> &RealAlgebraic {
        &self.generator
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn cached_interval(&self) -> RealAlgebraic {
        self.refined.lock().unwrap().clone()
    }

    /// Caches refinement progress, but only down to a floor width: one
    /// comparison of two nearly equal deep-orbit points must not force every
    /// later sign evaluation onto huge-denominator endpoints.
    fn store_interval(&self, candidate: &RealAlgebraic) {
        let floor = Rational::new(BigInt::one(), BigInt::one() << 256);
        let mut guard = self.refined.lock().unwrap();
        if candidate.width() < guard.width() && guard.width() > floor {
            *guard = candidate.clone();
        }
    }

    /// Whether q is a root of g, for g a divisor of the defining polynomial.
    fn generator_is_root(&self, g: &IntPolynomial) -> bool {
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        let iv = self.cached_interval();
        let (lo, hi) = iv.interval();
        let chain = SturmChain::new(g);
        chain.count_roots(lo, hi).map(|n| n == 1).unwrap_or(false)
    }
}

/// An element of Q(q): a rational-coefficient polynomial in q of degree
/// less than the field degree, reduced and trailing-zero trimmed.
#[derive(Debug, Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    rep: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) && self.rep == other.rep
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    fn make(field: Arc<NumberField>, mut rep: Vec<Rational>) -> FieldElement {
        while rep.last().is_some_and(|c| c.is_zero()) {
            rep.pop();
        }
        debug_assert!(rep.len() <= field.degree);
        FieldElement { field, rep }
    }

    fn reduce(field: &Arc<NumberField>, coeffs: Vec<Rational>) -> FieldElement {
        let r = RatPoly::new(coeffs);
        let r = if r.degree().unwrap_or(0) >= field.degree {
            r.rem(&field.monic)
        } else {
            r
        };
        FieldElement::make(field.clone(), r.coeffs)
    }

    pub fn zero(field: &Arc<NumberField>) -> FieldElement {
        FieldElement::make(field.clone(), Vec::new())
    }

    pub fn one(field: &Arc<NumberField>) -> FieldElement {
        FieldElement::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> FieldElement {
        FieldElement::make(field.clone(), vec![r])
    }

    pub fn from_integer(field: &Arc<NumberField>, n: i64) -> FieldElement {
        FieldElement::from_rational(field, Rational::from(BigInt::from(n)))
    }

    /// The generator q as an element.
    pub fn generator(field: &Arc<NumberField>) -> FieldElement {
        if field.degree == 1 {
            let v = field
                .generator
                .as_rational()
                .expect("degree-1 field has a rational generator");
            FieldElement::from_rational(field, v)
        } else {
            FieldElement::make(field.clone(), vec![Rational::zero(), Rational::one()])
        }
    }

    /// q^k as an element.
    pub fn generator_power(field: &Arc<NumberField>, k: usize) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        FieldElement::reduce(field, coeffs)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rep(&self) -> &[Rational] {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_empty()
    }

    /// Exact rational value, when the canonical representative is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.rep.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.rep[0].clone()),
            _ => None,
        }
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field),
            "field elements belong to different NumberField instances"
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let r = RatPoly::new(self.rep.clone()).add(&RatPoly::new(other.rep.clone()));
        FieldElement::make(self.field.clone(), r.coeffs)
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let r = RatPoly::new(self.rep.clone()).sub(&RatPoly::new(other.rep.clone()));
        FieldElement::make(self.field.clone(), r.coeffs)
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement::make(self.field.clone(), self.rep.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let r = RatPoly::new(self.rep.clone()).mul(&RatPoly::new(other.rep.clone()));
        FieldElement::reduce(&self.field, r.coeffs)
    }

    pub fn mul_rational(&self, k: &Rational) -> FieldElement {
        FieldElement::make(self.field.clone(), self.rep.iter().map(|c| c * k).collect())
    }

    pub fn add_rational(&self, k: &Rational) -> FieldElement {
        let mut rep = self.rep.clone();
        if rep.is_empty() {
            rep.push(k.clone());
        } else {
            rep[0] += k;
        }
        FieldElement::make(self.field.clone(), rep)
    }

    /// Multiplicative inverse. Handles a reducible defining polynomial by
    /// restricting to the factor actually vanishing at q.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::InverseOfZero);
        }
        if let Some(v) = self.as_rational() {
            if v.is_zero() {
                return Err(Error::InverseOfZero);
            }
            return Ok(FieldElement::from_rational(
                &self.field,
                Rational::one() / v,
            ));
        }
        let mut modulus = self.field.monic.clone();
        let mut r = RatPoly::new(self.rep.clone());
        loop {
            let (g, u, _) = r.ext_gcd(&modulus);
            if g.degree() == Some(0) {
                let inv = u.rem(&self.field.monic);
                return Ok(FieldElement::make(self.field.clone(), inv.coeffs));
            }
            let g_int = g.to_int_primitive();
            if self.field.generator_is_root(&g_int) {
                return Err(Error::InverseOfZero);
            }
            modulus = modulus
                .exact_div(&g)
                .expect("gcd divides the modulus")
                .monic();
            r = r.rem(&modulus);
            if r.is_zero() {
                return Err(Error::InverseOfZero);
            }
        }
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Clears denominators: integer polynomial p and positive denominator D
    /// with self = p(q)/D.
    fn int_cleared(&self) -> (IntPolynomial, BigInt) {
        let (p, s) = RatPoly::new(self.rep.clone()).to_int_scaled();
        // s = num/den with den > 0; value = (num/den) * p(q). Fold num's sign
        // and magnitude into p.
        let scaled = IntPolynomial::new(
            p.coeffs().iter().map(|c| c * s.numer()).collect(),
        );
        (scaled, s.denom().clone())
    }

    /// Whether the exact value is zero; decides the reducible-minpoly case
    /// through a polynomial gcd.
    fn value_is_zero(&self, cleared: &IntPolynomial) -> bool {
        if self.rep.is_empty() {
            return true;
        }
        let g = super::poly::int_gcd(cleared, &self.field.minpoly);
        self.field.generator_is_root(&g)
    }

    /// Exact sign of the element.
    pub fn sign(&self) -> Sign {
        if self.rep.is_empty() {
            return Sign::Zero;
        }
        if let Some(v) = self.as_rational() {
            return Sign::of_rational(&v);
        }
        let (poly, _denom) = self.int_cleared();
        let mut iv = self.field.cached_interval();
        let mut round = 0usize;
        loop {
            let (lo, hi) = iv.interval();
            let (a, b) = poly.eval_interval(lo, hi);
            if a.is_positive() {
                self.field.store_interval(&iv);
                return Sign::Positive;
            }
            if b.is_negative() {
                self.field.store_interval(&iv);
                return Sign::Negative;
            }
            if round == 3 && self.value_is_zero(&poly) {
                self.field.store_interval(&iv);
                return Sign::Zero;
            }
            iv.refine_step();
            round += 1;
        }
    }

    /// Exact three-way comparison within the same field.
    pub fn compare(&self, other: &FieldElement) -> Ordering {
        self.assert_same_field(other);
        if self.rep == other.rep {
            return Ordering::Equal;
        }
        match self.sub(other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    /// Bracketing rational interval of width at most `eps`.
    pub fn bracket(&self, eps: &Rational) -> (Rational, Rational) {
        if let Some(v) = self.as_rational() {
            return (v.clone(), v);
        }
        let (poly, denom) = self.int_cleared();
        let d = Rational::from(denom);
        let mut iv = self.field.cached_interval();
        loop {
            let (lo, hi) = iv.interval();
            let (a, b) = poly.eval_interval(lo, hi);
            let (a, b) = (a / &d, b / &d);
            if &b - &a <= *eps {
                self.field.store_interval(&iv);
                return (a, b);
            }
            iv.refine_step();
        }
    }

    /// Correctly rounded decimal string with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        assert!(digits >= 1, "digits must be >= 1");
        if let Some(v) = self.as_rational() {
            return decimal_of_rational(&v, digits);
        }
        let (poly, denom) = self.int_cleared();
        let d = Rational::from(denom);
        let mut iv = self.field.cached_interval();
        let mut round = 0usize;
        loop {
            let (lo, hi) = iv.interval();
            let (a, b) = poly.eval_interval(lo, hi);
            let (a, b) = (a / &d, b / &d);
            let ra = rounded_scaled(&a, digits);
            let rb = rounded_scaled(&b, digits);
            if ra == rb {
                self.field.store_interval(&iv);
                return format_scaled(&ra, digits);
            }
            // A reducible defining polynomial can make a rational value wear a
            // non-constant representative; such a value can sit exactly on a
            // rounding tie. Detect the candidate tie point and decide exactly.
            if round >= 6 && &rb - &ra == BigInt::one() {
                let scale = BigInt::from(10u32).pow(digits as u32);
                let tie = Rational::new(2 * &ra + BigInt::one(), 2 * scale);
                let diff = self.add_rational(&(-tie));
                let (cleared, _) = diff.int_cleared();
                if diff.value_is_zero(&cleared) {
                    return format_scaled(&rb, digits);
                }
            }
            iv.refine_step();
            round += 1;
        }
    }
}

/// An insertion-ordered set of field elements keyed by their canonical
/// representatives. Orbit points reached by exact arithmetic reduce to the
/// same representative whenever they are the same number (the defining
/// polynomial of every practical base is irreducible after deflation), so
/// representative equality is the deduplication the state graph needs; a
/// reducible corner case can only split a state, never merge two distinct
/// ones, which at worst delays closure.
#[derive(Debug, Default)]
pub struct ElementSet {
    elems: Vec<FieldElement>,
    index: std::collections::HashMap<Vec<Rational>, usize>,
}

impl ElementSet {
    pub fn new() -> ElementSet {
        ElementSet::default()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn get(&self, i: usize) -> &FieldElement {
        &self.elems[i]
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elems
    }

    /// Insertion index of x, if present.
    pub fn index_of(&self, x: &FieldElement) -> Option<usize> {
        self.index.get(x.rep()).copied()
    }

    /// Inserts x; returns its insertion index and whether it was new.
    pub fn insert(&mut self, x: FieldElement) -> (usize, bool) {
        match self.index.get(x.rep()) {
            Some(&i) => (i, false),
            None => {
                let idx = self.elems.len();
                self.index.insert(x.rep().to_vec(), idx);
                self.elems.push(x);
                (idx, true)
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.rep.iter().enumerate().rev() {
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
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
                if i >= 1 {
                    write!(f, "*")?;
                }
            }
            if i >= 1 {
                write!(f, "q")?;
                if i >= 2 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}
