//! Exact scalars: rationals and elements of quadratic fields `Q(sqrt d)`.
//!
//! Nothing in this crate uses floating point. Every scalar is kept in a
//! canonical reduced form so that equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed discriminants: sqrt({0}) and sqrt({1})")]
    MixedDiscriminant(i64, i64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("invalid discriminant {0}: must be squarefree and not 0 or 1")]
    InvalidDiscriminant(i64),
}

/// Exact rational number `numerator / denominator` in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ArithError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn recip(&self) -> Result<Rational, ArithError> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), e as usize))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}
rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

/// `true` when `d` is a squarefree integer other than 0 and 1.
pub fn is_valid_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Element `a + b*sqrt(d)` of `Q(sqrt d)`.
///
/// `d == 0` marks an element of `Q` itself (then `b` is always zero); such
/// an element combines freely with elements of any quadratic field.
#[derive(Clone)]
pub struct QuadElement {
    a: Rational,
    b: Rational,
    d: i64,
}

// A rational is the same value whichever field it was computed in.
impl PartialEq for QuadElement {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadElement {}

impl std::hash::Hash for QuadElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

/// Scalars of the ambient field `K`, whichever it is.
pub type FieldElem = QuadElement;

impl QuadElement {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self, ArithError> {
        if d == 0 {
            if !b.is_zero() {
                return Err(ArithError::InvalidDiscriminant(d));
            }
        } else if !is_valid_discriminant(d) {
            return Err(ArithError::InvalidDiscriminant(d));
        }
        Ok(QuadElement { a, b, d })
    }

    pub fn rational(a: Rational) -> Self {
        QuadElement { a, b: Rational::zero(), d: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        QuadElement::rational(Rational::from(n))
    }

    pub fn zero() -> Self {
        QuadElement::rational(Rational::zero())
    }

    pub fn one() -> Self {
        QuadElement::rational(Rational::one())
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: i64) -> Result<Self, ArithError> {
        QuadElement::new(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Discriminant parameter; 0 for plain rationals.
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        QuadElement { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&Rational::from(self.d) * &(&self.b * &self.b))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QuadElement { a: &self.a * q, b: &self.b * q, d: self.d }
    }

    fn joint_d(&self, other: &Self) -> Result<i64, ArithError> {
        match (self.d, other.d) {
            (x, y) if x == y => Ok(x),
            (0, y) => Ok(y),
            (x, 0) => Ok(x),
            (x, y) => Err(ArithError::MixedDiscriminant(x, y)),
        }
    }

    fn tidy(a: Rational, b: Rational, d: i64) -> Self {
        QuadElement { a, b, d }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.joint_d(other)?;
        Ok(Self::tidy(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.joint_d(other)?;
        Ok(Self::tidy(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.joint_d(other)?;
        let dd = Rational::from(d);
        let a = &(&self.a * &other.a) + &(&dd * &(&self.b * &other.b));
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(Self::tidy(a, b, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.joint_d(other)?;
        let inv = other.inverse()?;
        self.try_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let ninv = n.recip()?;
        Ok(self.conj().scale(&ninv))
    }

    /// Re-tag with discriminant `d` (used when a rational meets a field).
    pub fn in_field(mut self, d: i64) -> Self {
        if self.d == 0 {
            self.d = d;
        }
        self
    }
}

impl Add for &QuadElement {
    type Output = QuadElement;
    /// Panics on mixed discriminants; use [`QuadElement::try_add`] to recover.
    fn add(self, rhs: &QuadElement) -> QuadElement {
        self.try_add(rhs).expect("quadratic arithmetic")
    }
}

impl Sub for &QuadElement {
    type Output = QuadElement;
    fn sub(self, rhs: &QuadElement) -> QuadElement {
        self.try_sub(rhs).expect("quadratic arithmetic")
    }
}

impl Mul for &QuadElement {
    type Output = QuadElement;
    fn mul(self, rhs: &QuadElement) -> QuadElement {
        self.try_mul(rhs).expect("quadratic arithmetic")
    }
}

impl Neg for &QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Add for QuadElement {
    type Output = QuadElement;
    fn add(self, rhs: QuadElement) -> QuadElement {
        &self + &rhs
    }
}

impl Sub for QuadElement {
    type Output = QuadElement;
    fn sub(self, rhs: QuadElement) -> QuadElement {
        &self - &rhs
    }
}

impl Mul for QuadElement {
    type Output = QuadElement;
    fn mul(self, rhs: QuadElement) -> QuadElement {
        &self * &rhs
    }
}

impl Neg for QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        -&self
    }
}

impl From<Rational> for QuadElement {
    fn from(q: Rational) -> Self {
        QuadElement::rational(q)
    }
}

/// Canonical text: `a`, `b*sqrt(d)`, `a+b*sqrt(d)` or `a-b*sqrt(d)`, with
/// `a`, `b` printed as reduced fractions.
impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.d);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt({})", self.a, self.b.abs(), self.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QuadElement {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(open) = t.find("sqrt(") else {
            return Ok(QuadElement::rational(t.parse().map_err(|_| bad())?));
        };
        let close = t[open..].find(')').map(|i| i + open).ok_or_else(bad)?;
        if close + 1 != t.len() {
            return Err(bad());
        }
        let d: i64 = t[open + 5..close].parse().map_err(|_| bad())?;
        let head = &t[..open];
        // head is "", "-", "<coef>*", "<a>+<coef>*", "<a>-<coef>*", "<a>+", "<a>-"
        let head = head.strip_suffix('*').unwrap_or(head);
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a_part, b_part) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let a = if a_part.is_empty() { Rational::zero() } else { a_part.parse().map_err(|_| bad())? };
        let b = match b_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            p => p.strip_prefix('+').unwrap_or(p).parse().map_err(|_| bad())?,
        };
        QuadElement::new(a, b, d)
    }
}

/// Least common multiple of the denominators of a set of rationals.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Integer square root floor(sqrt(n)) for n >= 0.
pub fn isqrt(n: &BigInt) -> BigInt {
    if n.is_negative() {
        return BigInt::zero();
    }
    n.sqrt()
}

/// Small helper for tests and generators.
pub fn to_i64(n: &BigInt) -> Option<i64> {
    n.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn k(s: &str) -> QuadElement {
        s.parse().unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(&q("1/2") + &q("1/3"), q("5/6"));
        assert_eq!(q("2/4").to_string(), "1/2");
        assert_eq!(q("3/7").checked_div(&Rational::zero()), Err(ArithError::DivisionByZero));
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert_eq!(q("6/-4"), q("-3/2"));
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn quad_examples() {
        assert_eq!(&k("1+sqrt(-5)") * &k("1-sqrt(-5)"), k("6").in_field(-5));
        assert_eq!(&k("sqrt(2)") * &k("sqrt(2)"), QuadElement::new(q("2"), q("0"), 2).unwrap());
        let inv = QuadElement::one().checked_div(&k("1+sqrt(-5)")).unwrap();
        assert_eq!(inv, k("1/6-1/6*sqrt(-5)"));
        assert!((&inv * &k("1+sqrt(-5)")).is_one());
        assert_eq!(k("1+sqrt(-5)").checked_div(&QuadElement::zero()), Err(ArithError::DivisionByZero));
        assert_eq!(k("sqrt(2)").try_add(&k("sqrt(3)")), Err(ArithError::MixedDiscriminant(2, 3)));
    }

    #[test]
    fn quad_norm_examples() {
        assert_eq!(k("1+sqrt(-5)").norm(), q("6"));
        assert_eq!(k("3").norm(), q("9"));
        let p = &k("1+sqrt(-5)") * &k("2-sqrt(-5)");
        assert_eq!(p.norm(), q("54"));
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-3/2", "sqrt(2)", "-1/2*sqrt(2)", "1/6-1/6*sqrt(-5)", "3+2*sqrt(-1)"] {
            let e = k(s);
            assert_eq!(k(&e.to_string()), e, "{s}");
        }
        assert_eq!(k("1/6-1/6*sqrt(-5)").to_string(), "1/6-1/6*sqrt(-5)");
        assert_eq!(k("-sqrt(3)").to_string(), "-1*sqrt(3)");
        assert_eq!(k("0*sqrt(3)").to_string(), "0");
        assert!("2+sqrt(4)".parse::<QuadElement>().is_err());
        assert!("abc".parse::<QuadElement>().is_err());
    }

    #[test]
    fn discriminants() {
        assert!(is_valid_discriminant(-5));
        assert!(is_valid_discriminant(2));
        assert!(!is_valid_discriminant(1));
        assert!(!is_valid_discriminant(-4));
        assert!(!is_valid_discriminant(12));
    }
}
