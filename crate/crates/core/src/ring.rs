//! Supported pairs (A, K) of a Dedekind ring and its ambient field.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{is_valid_discriminant, FieldElem, QuadElement, Rational};
use crate::error::{Error, Result};

/// Which Dedekind ring `A` a computation lives over, and in which field `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingConfig {
    /// `A = Z`, `K = Q`.
    Z,
    /// `A = Z[1/p : p in primes]`, `K = Q`.
    ZS { primes: Arc<[u64]> },
    /// `A` the maximal order of `K = Q(sqrt d)`.
    Od { d: i64 },
    /// `A = Z` inside `K = Q(sqrt d)`.
    ZQd { d: i64 },
}

impl RingConfig {
    pub fn z() -> Self {
        RingConfig::Z
    }

    pub fn zs(primes: &[u64]) -> Result<Self> {
        let mut ps = primes.to_vec();
        ps.sort_unstable();
        ps.dedup();
        if ps.iter().any(|&p| !is_prime(p)) {
            return Err(Error::InvalidConfig(format!("{ps:?} are not all primes")));
        }
        Ok(RingConfig::ZS { primes: ps.into() })
    }

    pub fn od(d: i64) -> Result<Self> {
        if !is_valid_discriminant(d) {
            return Err(Error::InvalidConfig(format!("d = {d} is not a squarefree integer other than 0, 1")));
        }
        Ok(RingConfig::Od { d })
    }

    pub fn zqd(d: i64) -> Result<Self> {
        if !is_valid_discriminant(d) {
            return Err(Error::InvalidConfig(format!("d = {d} is not a squarefree integer other than 0, 1")));
        }
        Ok(RingConfig::ZQd { d })
    }

    /// Re-runs the constructor checks; deserialized values bypass them.
    pub fn validated(self) -> Result<Self> {
        match self {
            RingConfig::Z => Ok(RingConfig::Z),
            RingConfig::ZS { primes } => RingConfig::zs(&primes),
            RingConfig::Od { d } => RingConfig::od(d),
            RingConfig::ZQd { d } => RingConfig::zqd(d),
        }
    }

    /// Discriminant of `K`, or 0 when `K = Q`.
    pub fn field_d(&self) -> i64 {
        match self {
            RingConfig::Z | RingConfig::ZS { .. } => 0,
            RingConfig::Od { d } | RingConfig::ZQd { d } => *d,
        }
    }

    /// `true` when `K` is the fraction field of `A`.
    pub fn k_is_frac_field(&self) -> bool {
        !matches!(self, RingConfig::ZQd { .. })
    }

    /// `true` when the fractional ideals are `qA` for rational `q`.
    pub fn has_rational_ideals(&self) -> bool {
        !matches!(self, RingConfig::Od { .. })
    }

    pub fn inverted_primes(&self) -> &[u64] {
        match self {
            RingConfig::ZS { primes } => primes,
            _ => &[],
        }
    }

    /// `true` when `x` lies in the fraction field of `A`.
    pub fn in_frac_field(&self, x: &FieldElem) -> bool {
        match self {
            RingConfig::Od { .. } => x.is_rational() || x.d() == self.field_d(),
            _ => x.is_rational(),
        }
    }

    /// `true` when `x` lies in `K`.
    pub fn in_field(&self, x: &FieldElem) -> bool {
        x.is_rational() || x.d() == self.field_d()
    }

    /// Generator `omega` of the maximal order over `Z` (only meaningful for `Od`).
    pub fn omega_is_half(&self) -> bool {
        self.field_d().rem_euclid(4) == 1
    }

    /// Coordinates of `x` in the Q-basis `(1, omega)` of `K`.
    pub(crate) fn omega_coords(&self, x: &FieldElem) -> (Rational, Rational) {
        if self.omega_is_half() {
            (x.a() - x.b(), x.b() + x.b())
        } else {
            (x.a().clone(), x.b().clone())
        }
    }

    /// Inverse of [`RingConfig::omega_coords`].
    pub(crate) fn from_omega_coords(&self, u: &Rational, v: &Rational) -> FieldElem {
        let d = self.field_d();
        if d == 0 {
            return QuadElement::rational(u.clone());
        }
        let (a, b) = if self.omega_is_half() {
            let half = Rational::new(1, 2).expect("nonzero");
            (u + &(v * &half), v * &half)
        } else {
            (u.clone(), v.clone())
        };
        QuadElement::new(a, b, d).expect("valid discriminant").in_field(d)
    }

    pub fn omega(&self) -> FieldElem {
        self.from_omega_coords(&Rational::zero(), &Rational::one())
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            RingConfig::Z => "Z",
            RingConfig::ZS { .. } => "ZS",
            RingConfig::Od { .. } => "Od",
            RingConfig::ZQd { .. } => "ZQd",
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {
        let r: RingConfig = serde_json::from_str(r#"{"kind":"Od","d":-5}"#).unwrap();
        assert_eq!(r, RingConfig::od(-5).unwrap());
        let r: RingConfig = serde_json::from_str(r#"{"kind":"Z"}"#).unwrap();
        assert_eq!(r, RingConfig::Z);
        let r: RingConfig = serde_json::from_str(r#"{"kind":"ZS","primes":[3,2,3]}"#).unwrap();
        assert_eq!(r.validated().unwrap(), RingConfig::zs(&[2, 3]).unwrap());
        assert_eq!(serde_json::to_string(&RingConfig::zqd(2).unwrap()).unwrap(), r#"{"kind":"ZQd","d":2}"#);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(RingConfig::zs(&[4]).is_err());
        assert!(RingConfig::od(-4).is_err());
        assert!(RingConfig::zqd(1).is_err());
    }

    #[test]
    fn omega_coordinates_round_trip() {
        for d in [-5, -3, -1, 2, 5] {
            let ring = RingConfig::od(d).unwrap();
            let x: FieldElem = format!("3/2+5/7*sqrt({d})").parse().unwrap();
            let (u, v) = ring.omega_coords(&x);
            assert_eq!(ring.from_omega_coords(&u, &v), x);
        }
        let ring = RingConfig::od(-3).unwrap();
        assert_eq!(ring.omega(), "1/2+1/2*sqrt(-3)".parse().unwrap());
    }
}
