//! Nonzero fractional ideals in canonical form.
//!
//! Over `Z`, `Z[1/S]` and `Z` inside `Q(sqrt d)` an ideal is `qA` for a
//! positive rational `q` (with the inverted primes stripped). Over the
//! maximal order of `Q(sqrt d)` it is `(1/den) * (Z a + Z (b + c omega))`
//! with `0 <= b < a`, `c | a`, `c | b` and no common factor left between
//! `den` and `(a, b, c)`. Equal ideals therefore compare equal field by
//! field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{common_denominator, FieldElem, Rational};
use crate::error::{Error, Result};
use crate::hnf::{hnf, solve_combination};
use crate::ring::RingConfig;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(Rational),
    Hnf { den: BigInt, a: BigInt, b: BigInt, c: BigInt },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FractionalIdeal {
    ring: RingConfig,
    repr: Repr,
}

/// Removes every factor of an inverted prime from `n`.
fn strip_primes(n: &BigInt, primes: &[u64]) -> BigInt {
    let mut n = n.clone();
    for &p in primes {
        let p = BigInt::from(p);
        while !n.is_zero() && n.is_multiple_of(&p) {
            n /= &p;
        }
    }
    n
}

/// Canonical positive generator of `qA` over a ring with rational ideals.
pub(crate) fn normalize_rational(q: &Rational, primes: &[u64]) -> Rational {
    let n = strip_primes(&q.numer().abs(), primes);
    let d = strip_primes(q.denom(), primes);
    Rational::new(n, d).expect("nonzero denominator")
}

/// `true` when `q` lies in `Z[1/S]`.
pub(crate) fn rational_in_ring(q: &Rational, primes: &[u64]) -> bool {
    strip_primes(q.denom(), primes).is_one()
}

impl FractionalIdeal {
    /// The unit ideal `A`.
    pub fn unit(ring: &RingConfig) -> Self {
        match ring {
            RingConfig::Od { .. } => FractionalIdeal {
                ring: ring.clone(),
                repr: Repr::Hnf { den: BigInt::one(), a: BigInt::one(), b: BigInt::zero(), c: BigInt::one() },
            },
            _ => FractionalIdeal { ring: ring.clone(), repr: Repr::Rational(Rational::one()) },
        }
    }

    /// `qA` for a nonzero rational `q`.
    pub fn from_rational(ring: &RingConfig, q: &Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        match ring {
            RingConfig::Od { .. } => Self::principal(ring, &FieldElem::rational(q.clone())),
            _ => Ok(FractionalIdeal {
                ring: ring.clone(),
                repr: Repr::Rational(normalize_rational(q, ring.inverted_primes())),
            }),
        }
    }

    /// The principal ideal `gA`; `g` must be a nonzero element of `Frac(A)`.
    pub fn principal(ring: &RingConfig, g: &FieldElem) -> Result<Self> {
        Self::from_generators(ring, std::slice::from_ref(g))
    }

    /// The `A`-module spanned by `gens`, which must not all be zero.
    pub fn from_generators(ring: &RingConfig, gens: &[FieldElem]) -> Result<Self> {
        if gens.iter().any(|g| !ring.in_frac_field(g)) {
            return Err(Error::NotInBaseField);
        }
        let nonzero: Vec<&FieldElem> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        match ring {
            RingConfig::Od { .. } => {
                let omega = ring.omega();
                let zgens: Vec<FieldElem> = nonzero.iter().flat_map(|&g| [g.clone(), g * &omega]).collect();
                Self::from_z_generators(ring, &zgens)
            }
            _ => {
                let qs: Vec<Rational> = nonzero.iter().map(|g| g.a().clone()).collect();
                let g = rational_gcd(&qs);
                Ok(FractionalIdeal {
                    ring: ring.clone(),
                    repr: Repr::Rational(normalize_rational(&g, ring.inverted_primes())),
                })
            }
        }
    }

    /// Canonical form of the Z-module spanned by `zgens` (maximal orders only).
    /// The caller guarantees the span is stable under `omega` and of rank 2.
    fn from_z_generators(ring: &RingConfig, zgens: &[FieldElem]) -> Result<Self> {
        let coords: Vec<(Rational, Rational)> = zgens.iter().map(|g| ring.omega_coords(g)).collect();
        let l = common_denominator(coords.iter().flat_map(|(u, v)| [u, v]));
        // columns ordered (omega, 1) so the echelon rows are (c, b) and (0, a)
        let rows: Vec<Vec<BigInt>> = coords
            .iter()
            .map(|(u, v)| vec![(v * &Rational::from(l.clone())).numer().clone(), (u * &Rational::from(l.clone())).numer().clone()])
            .collect();
        let h = hnf(&rows, 2, false);
        if h.rows.len() != 2 {
            return Err(Error::NotAnIdeal("generators do not span a rank-2 Z-module".into()));
        }
        let (c, b, a) = (h.rows[0][0].clone(), h.rows[0][1].clone(), h.rows[1][1].clone());
        let g = l.gcd(&a).gcd(&b).gcd(&c);
        Ok(FractionalIdeal {
            ring: ring.clone(),
            repr: Repr::Hnf { den: &l / &g, a: &a / &g, b: &b / &g, c: &c / &g },
        })
    }

    /// Ideal with Z-basis `{a, b + c omega} / den`; rejects modules that are
    /// not stable under multiplication by `omega`.
    pub fn from_hnf(ring: &RingConfig, den: BigInt, a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if !matches!(ring, RingConfig::Od { .. }) {
            return Err(Error::UnsupportedConfig);
        }
        if !den.is_positive() || a.is_zero() || c.is_zero() {
            return Err(Error::NotAnIdeal("den must be positive and a, c nonzero".into()));
        }
        let inv_den = Rational::new(1, den).expect("positive");
        let e0 = ring.from_omega_coords(&Rational::from(a), &Rational::zero()).scale(&inv_den);
        let e1 = ring.from_omega_coords(&Rational::from(b), &Rational::from(c)).scale(&inv_den);
        let module = Self::from_z_generators(ring, &[e0.clone(), e1.clone()])?;
        let omega = ring.omega();
        if !module.contains(&(&e0 * &omega))? || !module.contains(&(&e1 * &omega))? {
            return Err(Error::NotAnIdeal("Z-module is not stable under omega".into()));
        }
        Ok(module)
    }

    pub fn ring(&self) -> &RingConfig {
        &self.ring
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ConfigMismatch)
        }
    }

    /// A Z-basis when `A` has rank 2 over Z, or the single generator `q`.
    pub fn z_basis(&self) -> Vec<FieldElem> {
        match &self.repr {
            Repr::Rational(q) => vec![FieldElem::rational(q.clone())],
            Repr::Hnf { den, a, b, c } => {
                let inv = Rational::new(1, den.clone()).expect("positive");
                vec![
                    self.ring.from_omega_coords(&Rational::from(a.clone()), &Rational::zero()).scale(&inv),
                    self.ring.from_omega_coords(&Rational::from(b.clone()), &Rational::from(c.clone())).scale(&inv),
                ]
            }
        }
    }

    /// Positive rational generator for rings with rational ideals.
    pub fn rational_generator(&self) -> Option<&Rational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            Repr::Hnf { .. } => None,
        }
    }

    /// `(den, [[a, b], [0, c]])` for ideals of a maximal order.
    pub fn hnf_data(&self) -> Option<(BigInt, [[BigInt; 2]; 2])> {
        match &self.repr {
            Repr::Hnf { den, a, b, c } => {
                Some((den.clone(), [[a.clone(), b.clone()], [BigInt::zero(), c.clone()]]))
            }
            Repr::Rational(_) => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::unit(&self.ring)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Rational(x), Repr::Rational(y)) => FractionalIdeal::from_rational(&self.ring, &(x * y)),
            _ => {
                let xs = self.z_basis();
                let ys = other.z_basis();
                let prods: Vec<FieldElem> = xs.iter().flat_map(|x| ys.iter().map(move |y| x * y)).collect();
                Self::from_z_generators(&self.ring, &prods)
            }
        }
    }

    pub fn inv(&self) -> Self {
        match &self.repr {
            Repr::Rational(q) => FractionalIdeal::from_rational(&self.ring, &q.recip().expect("nonzero"))
                .expect("nonzero"),
            Repr::Hnf { .. } => {
                let n = self.norm().recip().expect("nonzero norm");
                let conj: Vec<FieldElem> = self.z_basis().iter().map(|e| e.conj().scale(&n)).collect();
                Self::from_z_generators(&self.ring, &conj).expect("conjugate ideal has rank 2")
            }
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Rational(x), Repr::Rational(y)) => {
                FractionalIdeal::from_rational(&self.ring, &rational_gcd(&[x.clone(), y.clone()]))
            }
            _ => {
                let mut gens = self.z_basis();
                gens.extend(other.z_basis());
                Self::from_z_generators(&self.ring, &gens)
            }
        }
    }

    /// `x * self` for a nonzero `x` in `Frac(A)`.
    pub fn scale(&self, x: &FieldElem) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !self.ring.in_frac_field(x) {
            return Err(Error::NotInBaseField);
        }
        match &self.repr {
            Repr::Rational(q) => FractionalIdeal::from_rational(&self.ring, &(q * x.a())),
            Repr::Hnf { .. } => {
                let gens: Vec<FieldElem> = self.z_basis().iter().map(|e| e * x).collect();
                Self::from_z_generators(&self.ring, &gens)
            }
        }
    }

    /// Multiplicative norm; `[A : self]` for integral ideals.
    pub fn norm(&self) -> Rational {
        match &self.repr {
            Repr::Rational(q) => q.clone(),
            Repr::Hnf { den, a, b: _, c } => Rational::new(a * c, den * den).expect("positive"),
        }
    }

    pub fn is_integral(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => rational_in_ring(q, self.ring.inverted_primes()),
            Repr::Hnf { den, .. } => den.is_one(),
        }
    }

    /// Smallest positive integer `k` with `k * self` integral.
    pub fn denominator(&self) -> BigInt {
        match &self.repr {
            Repr::Rational(q) => q.denom().clone(),
            Repr::Hnf { den, .. } => den.clone(),
        }
    }

    /// Membership of a field element; elements outside `Frac(A)` are never members.
    pub fn contains(&self, e: &FieldElem) -> Result<bool> {
        if !self.ring.in_field(e) {
            return Err(Error::ConfigMismatch);
        }
        if !self.ring.in_frac_field(e) {
            return Ok(false);
        }
        if e.is_zero() {
            return Ok(true);
        }
        Ok(match &self.repr {
            Repr::Rational(q) => {
                let t = e.a().checked_div(q).expect("nonzero");
                rational_in_ring(&t, self.ring.inverted_primes())
            }
            Repr::Hnf { den, a, b, c } => {
                let (u, v) = self.ring.omega_coords(e);
                let dd = Rational::from(den.clone());
                let (x, y) = (&u * &dd, &v * &dd);
                if !x.is_integer() || !y.is_integer() {
                    return Ok(false);
                }
                let (x, y) = (x.numer().clone(), y.numer().clone());
                if !y.is_multiple_of(c) {
                    return Ok(false);
                }
                let k = &y / c;
                (x - k * b).is_multiple_of(a)
            }
        })
    }

    /// `self` contains every element of `other`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        for e in other.z_basis() {
            if !self.contains(&e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A generator `g` with `self = gA`, or `None` when the ideal is not
    /// principal. Over an imaginary quadratic order the search enumerates
    /// elements of norm `N(self)` through the positive definite norm form.
    pub fn is_principal(&self) -> Result<Option<FieldElem>> {
        match &self.repr {
            Repr::Rational(q) => Ok(Some(FieldElem::rational(q.clone()))),
            Repr::Hnf { den, a, b, c } => {
                let d = self.ring.field_d();
                if d > 0 {
                    return Err(Error::UnsupportedConfig);
                }
                let Some(g) = find_norm_element(&self.ring, a, b, c) else {
                    return Ok(None);
                };
                let g = g.scale(&Rational::new(1, den.clone()).expect("positive"));
                debug_assert_eq!(FractionalIdeal::principal(&self.ring, &g).as_ref(), Ok(self));
                Ok(Some(g))
            }
        }
    }

    /// Representative of `x` modulo the ideal: `x - q` for some `q` in it,
    /// with coordinates in the half-open box spanned by the Z-basis.
    pub(crate) fn reduce_mod(&self, x: &FieldElem) -> FieldElem {
        let floor = |q: &Rational| Rational::from(q.numer().div_floor(q.denom()));
        match &self.repr {
            Repr::Rational(q) => {
                let k = floor(&x.a().checked_div(q).expect("nonzero ideal"));
                x - &FieldElem::rational(&k * q)
            }
            Repr::Hnf { den, a, b, c } => {
                let den = Rational::from(den.clone());
                let (a, b, c) = (Rational::from(a.clone()), Rational::from(b.clone()), Rational::from(c.clone()));
                let (u, v) = self.ring.omega_coords(x);
                let div = |p: Rational, q: &Rational| p.checked_div(q).expect("positive divisor");
                // x = (u, v); basis (a, 0) / den and (b, c) / den
                let t = floor(&div(&v * &den, &c));
                let u = &u - &div(&t * &b, &den);
                let v = &v - &div(&t * &c, &den);
                let s = floor(&div(&u * &den, &a));
                let u = &u - &div(&s * &a, &den);
                self.ring.from_omega_coords(&u, &v)
            }
        }
    }

    /// `(m, t)` with `self = t m` and `m` integral; over imaginary quadratic
    /// orders `m` is reduced in its class, so its norm stays small.
    pub(crate) fn integral_representative(&self) -> Result<(Self, FieldElem)> {
        if self.ring.field_d() < 0 {
            if let Repr::Hnf { .. } = &self.repr {
                // n = k self^{-1} is integral; for a shortest y in n,
                // y n^{-1} = (y / k) self is integral of bounded norm
                let inv = self.inv();
                let k = FieldElem::rational(Rational::from(inv.denominator()));
                let n = inv.scale(&k)?;
                let Repr::Hnf { den, a, b, c } = &n.repr else { unreachable!("quadratic ideal") };
                let (x, y) = shortest_vector(&self.ring, a, b, c);
                let short = self.ring.from_omega_coords(&Rational::from(x), &Rational::from(y));
                let short = short.scale(&Rational::new(1, den.clone())?);
                let f = short.checked_div(&k)?;
                return Ok((self.scale(&f)?, f.inverse()?));
            }
        }
        let k = FieldElem::rational(Rational::from(self.denominator()));
        Ok((self.scale(&k)?, k.inverse()?))
    }

    /// The ideal generated by `self` in the ring `target` containing `A`.
    pub fn extend_to(&self, target: &RingConfig) -> Result<Self> {
        match (&self.ring, target, &self.repr) {
            (RingConfig::Z, RingConfig::ZS { .. }, Repr::Rational(q)) => FractionalIdeal::from_rational(target, q),
            (RingConfig::ZQd { d }, RingConfig::Od { d: e }, Repr::Rational(q)) if d == e => {
                FractionalIdeal::from_rational(target, q)
            }
            (s, t, _) if s == t => Ok(self.clone()),
            _ => Err(Error::UnsupportedExtension),
        }
    }

    /// Elements `x` in `self` and `y` in `other` with `x + y = 1`; requires
    /// `self + other = A`.
    pub(crate) fn split_one(&self, other: &Self) -> Result<(FieldElem, FieldElem)> {
        self.check_ring(other)?;
        if !self.sum(other)?.is_unit() || !self.is_integral() || !other.is_integral() {
            return Err(Error::PreconditionViolated("ideals are not coprime integral ideals".into()));
        }
        let xs = self.z_basis();
        let ys = other.z_basis();
        let to_row = |e: &FieldElem| -> Vec<BigInt> {
            let (u, v) = self.ring.omega_coords(e);
            // integral in Z or Z[1/S] after stripping, so the coordinates are integers
            vec![u.numer().clone(), v.numer().clone()]
        };
        let rows: Vec<Vec<BigInt>> = xs.iter().chain(&ys).map(to_row).collect();
        let coeffs = solve_combination(&rows, &[BigInt::one(), BigInt::zero()])
            .ok_or_else(|| Error::PreconditionViolated("no decomposition of 1".into()))?;
        let pick = |basis: &[FieldElem], cs: &[BigInt]| {
            basis
                .iter()
                .zip(cs)
                .fold(FieldElem::zero(), |acc, (e, c)| &acc + &e.scale(&Rational::from(c.clone())))
        };
        Ok((pick(&xs, &coeffs[..xs.len()]), pick(&ys, &coeffs[xs.len()..])))
    }

    pub fn to_json(&self) -> Value {
        match &self.repr {
            Repr::Rational(q) => Value::String(q.to_string()),
            Repr::Hnf { den, a, b, c } => json!({
                "den": den.to_string().parse::<Value>().unwrap_or(Value::Null),
                "hnf": [[big_json(a), big_json(b)], [big_json(&BigInt::zero()), big_json(c)]],
            }),
        }
    }

    pub fn from_json(ring: &RingConfig, v: &Value) -> Result<Self> {
        let schema = |m: &str| Error::Schema(format!("ideal: {m}"));
        if let Some(gens) = v.get("generators") {
            let gens = gens.as_array().ok_or_else(|| schema("\"generators\" must be an array"))?;
            let gens: Vec<FieldElem> = gens
                .iter()
                .map(|g| g.as_str().ok_or_else(|| schema("generators must be strings"))?.parse().map_err(Error::from))
                .collect::<Result<_>>()?;
            return FractionalIdeal::from_generators(ring, &gens);
        }
        match ring {
            RingConfig::Od { .. } => {
                let den = v.get("den").map(json_big).transpose()?.unwrap_or_else(BigInt::one);
                let hnf = v.get("hnf").and_then(Value::as_array).ok_or_else(|| schema("missing \"hnf\""))?;
                let row = |i: usize| -> Result<Vec<BigInt>> {
                    hnf.get(i)
                        .and_then(Value::as_array)
                        .ok_or_else(|| schema("hnf must be a 2x2 array"))?
                        .iter()
                        .map(json_big)
                        .collect()
                };
                let (r0, r1) = (row(0)?, row(1)?);
                if hnf.len() != 2 || r0.len() != 2 || r1.len() != 2 || !r1[0].is_zero() {
                    return Err(schema("hnf must be upper triangular 2x2"));
                }
                FractionalIdeal::from_hnf(ring, den, r0[0].clone(), r0[1].clone(), r1[1].clone())
            }
            _ => {
                let s = match v {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    _ => return Err(schema("expected a rational string")),
                };
                let q: Rational = s.parse()?;
                FractionalIdeal::from_rational(ring, &q)
            }
        }
    }
}

fn big_json(n: &BigInt) -> Value {
    n.to_string().parse::<Value>().unwrap_or(Value::Null)
}

fn json_big(v: &Value) -> Result<BigInt> {
    let s = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::Schema("expected an integer".into())),
    };
    s.parse().map_err(|_| Error::Schema(format!("bad integer {s:?}")))
}

/// gcd of nonzero rationals: `gcd(numerators) / lcm(denominators)`.
fn rational_gcd(qs: &[Rational]) -> Rational {
    let n = qs.iter().fold(BigInt::zero(), |acc, q| acc.gcd(q.numer()));
    let d = common_denominator(qs);
    Rational::new(n, d).expect("nonzero")
}

/// Omega-coordinates of a shortest nonzero vector of `<a, b + c omega>`
/// for the (positive definite) norm form, by Lagrange reduction.
fn shortest_vector(ring: &RingConfig, a: &BigInt, b: &BigInt, c: &BigInt) -> (BigInt, BigInt) {
    let d = BigInt::from(ring.field_d());
    let half = ring.omega_is_half();
    let norm_of = |(x, y): &(BigInt, BigInt)| -> BigInt {
        if half {
            x * x + x * y + (BigInt::one() - &d) / 4 * y * y
        } else {
            x * x - &d * y * y
        }
    };
    let twice_dot = |u: &(BigInt, BigInt), v: &(BigInt, BigInt)| -> BigInt {
        let sum = (&u.0 + &v.0, &u.1 + &v.1);
        norm_of(&sum) - norm_of(u) - norm_of(v)
    };
    let mut u = (a.clone(), BigInt::zero());
    let mut v = (b.clone(), c.clone());
    loop {
        if norm_of(&u) > norm_of(&v) {
            std::mem::swap(&mut u, &mut v);
        }
        let nu = norm_of(&u);
        // nearest integer to <u, v> / <u, u>
        let mu = (twice_dot(&u, &v) + &nu).div_floor(&(&nu * 2));
        if mu.is_zero() {
            return u;
        }
        v = (&v.0 - &mu * &u.0, &v.1 - &mu * &u.1);
    }
}

/// An element of norm `a c` in the integral ideal `<a, b + c omega>`, if any.
///
/// Every nonzero element of the ideal has norm at least `a c`, with
/// equality exactly for generators, so a shortest vector decides it.
fn find_norm_element(ring: &RingConfig, a: &BigInt, b: &BigInt, c: &BigInt) -> Option<FieldElem> {
    let (x, y) = shortest_vector(ring, a, b, c);
    let e = ring.from_omega_coords(&Rational::from(x), &Rational::from(y));
    (e.norm() == Rational::from(a * c)).then_some(e)
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(q) => write!(f, "({q})"),
            Repr::Hnf { den, a, b, c } => write!(f, "(1/{den})<{a}, {b}+{c}w>"),
        }
    }
}

impl fmt::Debug for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{self}", self.ring.kind_name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn od5() -> RingConfig {
        RingConfig::od(-5).unwrap()
    }

    fn k(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    fn p2() -> FractionalIdeal {
        FractionalIdeal::from_generators(&od5(), &[k("2"), k("1+sqrt(-5)")]).unwrap()
    }

    fn zq(s: &str) -> FractionalIdeal {
        FractionalIdeal::from_rational(&RingConfig::Z, &s.parse().unwrap()).unwrap()
    }

    #[test]
    fn p2_has_expected_hnf() {
        let (den, m) = p2().hnf_data().unwrap();
        assert_eq!(den, BigInt::one());
        assert_eq!(m, [[2.into(), 1.into()], [0.into(), 1.into()]]);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(zq("2").mul(&zq("3/2")).unwrap(), zq("3"));
        let two = FractionalIdeal::principal(&od5(), &k("2")).unwrap();
        assert_eq!(p2().mul(&p2()).unwrap(), two);
        let unit = FractionalIdeal::unit(&od5());
        assert_eq!(p2().mul(&unit).unwrap(), p2());
        assert_eq!(zq("2").mul(&p2()), Err(Error::ConfigMismatch));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(zq("6").inv(), zq("1/6"));
        let half_p2 = p2().scale(&k("1/2")).unwrap();
        assert_eq!(p2().inv(), half_p2);
        assert!(FractionalIdeal::unit(&od5()).inv().is_unit());
    }

    #[test]
    fn sum_examples() {
        assert_eq!(zq("4").sum(&zq("6")).unwrap(), zq("2"));
        let two = FractionalIdeal::principal(&od5(), &k("2")).unwrap();
        let g = FractionalIdeal::principal(&od5(), &k("1+sqrt(-5)")).unwrap();
        assert_eq!(two.sum(&g).unwrap(), p2());
        assert_eq!(p2().sum(&p2()).unwrap(), p2());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(p2().norm(), Rational::from(2));
        assert_eq!(FractionalIdeal::unit(&od5()).norm(), Rational::one());
        assert_eq!(p2().inv().norm(), Rational::new(1, 2).unwrap());
    }

    #[test]
    fn principality_examples() {
        assert_eq!(zq("3/2").is_principal().unwrap(), Some(k("3/2")));
        assert_eq!(p2().is_principal().unwrap(), None);
        let g = p2().mul(&p2()).unwrap().is_principal().unwrap().unwrap();
        assert!(g == k("2") || g == k("-2"));
        let real = RingConfig::od(2).unwrap();
        assert_eq!(FractionalIdeal::unit(&real).is_principal(), Err(Error::UnsupportedConfig));
    }

    #[test]
    fn membership_examples() {
        assert!(zq("3/2").contains(&k("3")).unwrap());
        assert!(!zq("3/2").contains(&k("3/4")).unwrap());
        assert!(p2().contains(&k("1+sqrt(-5)")).unwrap());
        assert!(!p2().contains(&k("1")).unwrap());
        assert_eq!(zq("1").contains(&k("sqrt(-5)")), Err(Error::ConfigMismatch));
    }

    #[test]
    fn half_omega_ring() {
        // d = -3: O = Z[(1 + sqrt -3)/2] is a PID with six units
        let r = RingConfig::od(-3).unwrap();
        // 1 + sqrt(-3) = 2 omega, so this is just 2O
        let i = FractionalIdeal::from_generators(&r, &[k("2"), k("1+sqrt(-3)")]).unwrap();
        assert_eq!(i, FractionalIdeal::principal(&r, &k("2")).unwrap());
        assert!(FractionalIdeal::principal(&r, &k("1/2+1/2*sqrt(-3)")).unwrap().is_unit());
        let p7 = FractionalIdeal::from_generators(&r, &[k("7"), k("2+sqrt(-3)")]).unwrap();
        assert_eq!(p7.norm(), Rational::from(7));
        let g = p7.is_principal().unwrap().unwrap();
        assert_eq!(g.norm().abs(), Rational::from(7));
        assert!(p7.mul(&p7.inv()).unwrap().is_unit());
    }

    #[test]
    fn zs_strips_inverted_primes() {
        let r = RingConfig::zs(&[2]).unwrap();
        let i = FractionalIdeal::from_rational(&r, &Rational::from(6)).unwrap();
        assert_eq!(i.rational_generator().unwrap(), &Rational::from(3));
        assert!(i.contains(&k("3/8")).unwrap());
        assert!(!i.contains(&k("1")).unwrap());
        assert_eq!(zq("6").extend_to(&r).unwrap(), i);
    }

    #[test]
    fn split_one_decomposes_unity() {
        let p3 = FractionalIdeal::from_generators(&od5(), &[k("3"), k("1+sqrt(-5)")]).unwrap();
        let (x, y) = p2().split_one(&p3).unwrap();
        assert!(p2().contains(&x).unwrap() && p3.contains(&y).unwrap());
        assert!((&x + &y).is_one());
        assert!(p2().split_one(&p2()).is_err());
        let (x, y) = zq("4").split_one(&zq("9")).unwrap();
        assert!((&x + &y).is_one());
    }

    #[test]
    fn json_round_trip() {
        let v = p2().to_json();
        assert_eq!(v.to_string(), r#"{"den":1,"hnf":[[2,1],[0,1]]}"#);
        assert_eq!(FractionalIdeal::from_json(&od5(), &v).unwrap(), p2());
        assert_eq!(zq("3/2").to_json().to_string(), r#""3/2""#);
        let bad = serde_json::json!({"den": 1, "hnf": [[2, 0], [0, 1]]});
        assert!(matches!(FractionalIdeal::from_json(&od5(), &bad), Err(Error::NotAnIdeal(_))));
        // entries beyond f64 precision survive
        let huge = FractionalIdeal::principal(&od5(), &k("1000000000000000000000000000001")).unwrap();
        let text = huge.to_json().to_string();
        assert!(text.contains("1000000000000000000000000000001"));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(FractionalIdeal::from_json(&od5(), &back).unwrap(), huge);
    }

    #[test]
    fn reduction_modulo_ideal() {
        let x = k("7+5*sqrt(-5)");
        let r = p2().reduce_mod(&x);
        assert!(p2().contains(&(&x - &r)).unwrap());
        assert!(r == k("0") || r == k("1"));
        let z = FractionalIdeal::from_rational(&RingConfig::Z, &Rational::from(6)).unwrap();
        assert_eq!(z.reduce_mod(&k("-1")), k("5"));
    }

    #[test]
    fn integral_representatives_are_small() {
        let big = p2().scale(&k("123/7+45*sqrt(-5)")).unwrap();
        let (m, t) = big.integral_representative().unwrap();
        assert!(m.is_integral());
        assert!(m.norm() <= Rational::from(2));
        assert_eq!(m.scale(&t).unwrap(), big);
    }
}
