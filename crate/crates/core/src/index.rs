//! Index-modules `[R : S]'` and the quantities tied to them.
//!
//! `[R : S]'` is the `A`-submodule of `K` of determinants of `K`-linear maps
//! of `<R, S>_K` sending `R` into `S`. With pseudo-bases
//! `R = m_R b_{R,0} + sum A b_{R,i}` and `S = m_S b_{S,0} + sum A b_{S,i}`:
//!
//! * it is `0` when `rank R > rank S`;
//! * it is all of `K` when `rank R <= rank S` and the spans differ;
//! * otherwise it is `m_S m_R^{-1} D`, with `D` the determinant of the
//!   coordinates of `B_S` in `B_R`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{common_denominator, FieldElem, QuadElement, Rational};
use crate::error::{Error, Result};
use crate::ideal::FractionalIdeal;
use crate::lattice::PseudoLattice;
use crate::linalg::{self, Vector};
use crate::oracle::oracle_group_index;
use crate::ring::RingConfig;

/// Value of an index-module.
///
/// `Span` is kept canonical: when `K = Frac(A)` the scalar is folded into
/// the ideal and equals 1; over `Z` inside `Q(sqrt d)` the scalar is the
/// primitive `p + q sqrt(d)` (integers, `gcd(p, q) = 1`, `p > 0` or
/// `p = 0, q > 0`) and the rational remainder sits in the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexModule {
    Zero,
    Full,
    Span { ideal: FractionalIdeal, scalar: FieldElem },
}

impl IndexModule {
    /// Canonical `Span(ideal * scalar)`.
    pub fn span(ideal: FractionalIdeal, scalar: &FieldElem) -> Result<Self> {
        if scalar.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let ring = ideal.ring().clone();
        if ring.k_is_frac_field() {
            let ideal = ideal.scale(scalar)?;
            return Ok(IndexModule::Span { ideal, scalar: FieldElem::one() });
        }
        let (r, primitive) = primitive_part(scalar, ring.field_d());
        let ideal = ideal.scale(&FieldElem::rational(r))?;
        Ok(IndexModule::Span { ideal, scalar: primitive })
    }

    pub fn unit(ring: &RingConfig) -> Self {
        IndexModule::Span { ideal: FractionalIdeal::unit(ring), scalar: FieldElem::one() }
    }

    pub fn is_span(&self) -> bool {
        matches!(self, IndexModule::Span { .. })
    }

    pub fn ideal(&self) -> Option<&FractionalIdeal> {
        match self {
            IndexModule::Span { ideal, .. } => Some(ideal),
            _ => None,
        }
    }

    pub fn scalar(&self) -> Option<&FieldElem> {
        match self {
            IndexModule::Span { scalar, .. } => Some(scalar),
            _ => None,
        }
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            IndexModule::Zero => "zero",
            IndexModule::Full => "full",
            IndexModule::Span { .. } => "span",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            IndexModule::Zero => json!({"variant": "zero"}),
            IndexModule::Full => json!({"variant": "full"}),
            IndexModule::Span { ideal, scalar } => {
                json!({"variant": "span", "ideal": ideal.to_json(), "scalar": scalar.to_string()})
            }
        }
    }

    pub fn from_json(ring: &RingConfig, v: &Value) -> Result<Self> {
        match v.get("variant").and_then(Value::as_str) {
            Some("zero") => Ok(IndexModule::Zero),
            Some("full") => Ok(IndexModule::Full),
            Some("span") => {
                let ideal = FractionalIdeal::from_json(ring, v.get("ideal").ok_or_else(|| Error::Schema("span needs \"ideal\"".into()))?)?;
                let scalar: FieldElem = match v.get("scalar") {
                    None => FieldElem::one(),
                    Some(Value::String(s)) => s.parse()?,
                    Some(_) => return Err(Error::Schema("scalar must be a string".into())),
                };
                IndexModule::span(ideal, &scalar)
            }
            _ => Err(Error::Schema("unknown index-module variant".into())),
        }
    }

    /// Sinnott's generalized index `(R : S)` over `Z`: the positive rational
    /// generator of the span.
    pub fn generalized_index(&self) -> Option<Rational> {
        match self {
            IndexModule::Span { ideal, scalar } if *ideal.ring() == RingConfig::Z && scalar.is_one() => {
                ideal.rational_generator().cloned()
            }
            _ => None,
        }
    }
}

/// Splits `x` as `r * (p + q sqrt d)` with `(p, q)` primitive and sign-normalized.
fn primitive_part(x: &FieldElem, d: i64) -> (Rational, FieldElem) {
    let l = common_denominator([x.a(), x.b()]);
    let lq = Rational::from(l.clone());
    let p = (x.a() * &lq).numer().clone();
    let q = (x.b() * &lq).numer().clone();
    let g = p.gcd(&q);
    let (mut p, mut q) = (&p / &g, &q / &g);
    let mut r = Rational::new(g, l).expect("positive");
    if p.is_negative() || (p.is_zero() && q.is_negative()) {
        p = -p;
        q = -q;
        r = -r;
    }
    let prim = if q.is_zero() {
        FieldElem::one()
    } else {
        QuadElement::new(Rational::from(p), Rational::from(q), d).expect("valid discriminant")
    };
    (r, prim)
}

/// `[R : S]'`.
pub fn index_module(r: &PseudoLattice, s: &PseudoLattice) -> Result<IndexModule> {
    r.check_compatible(s)?;
    let sf_r = r.steinitz_form()?;
    if s.is_zero() {
        return Ok(IndexModule::Zero);
    }
    let sf_s = s.steinitz_form()?;
    if sf_r.rank() > sf_s.rank() {
        return Ok(IndexModule::Zero);
    }
    if sf_r.rank() < sf_s.rank() {
        return Ok(IndexModule::Full);
    }
    let coords: Option<Vec<Vector>> = sf_s.basis.iter().map(|b| sf_r.coords(b)).collect();
    let Some(coords) = coords else {
        return Ok(IndexModule::Full);
    };
    let det = linalg::det(&coords);
    let ideal = sf_s.m.mul(&sf_r.m.inv())?;
    IndexModule::span(ideal, &det)
}

/// `[S : R]'` from `[R : S]'` when both are spans.
pub fn index_invert(x: &IndexModule) -> Result<IndexModule> {
    match x {
        IndexModule::Span { ideal, scalar } => IndexModule::span(ideal.inv(), &scalar.inverse()?),
        _ => Err(Error::NotInvertible),
    }
}

/// `[R : S]' [S : T]'`, valid when `KR = KS` or `KS = KT != 0`.
///
/// A zero factor next to a full one never arises under those hypotheses,
/// and no value for `[R : T]'` follows from it, so that pair is rejected.
pub fn index_product(x: &IndexModule, y: &IndexModule) -> Result<IndexModule> {
    use IndexModule::*;
    match (x, y) {
        (Span { ideal: a, scalar: s }, Span { ideal: b, scalar: t }) => IndexModule::span(a.mul(b)?, &(s * t)),
        (Zero, Full) | (Full, Zero) => Err(Error::HypothesisViolated),
        (Zero, _) | (_, Zero) => Ok(Zero),
        (Full, _) | (_, Full) => Ok(Full),
    }
}

/// A generator `g` with `[R : S]' = A g`, or `None` when it is not cyclic.
pub fn cyclicity_witness(x: &IndexModule) -> Result<Option<FieldElem>> {
    match x {
        IndexModule::Span { ideal, scalar } => Ok(ideal.is_principal()?.map(|g| &g * scalar)),
        _ => Err(Error::PreconditionViolated("cyclicity is only defined for spans".into())),
    }
}

/// `B [R : S]'_A` for a ring `B` containing `A`.
pub fn extend_index(x: &IndexModule, target: &RingConfig) -> Result<IndexModule> {
    match x {
        IndexModule::Span { ideal, scalar } => IndexModule::span(ideal.extend_to(target)?, scalar),
        other => Ok(other.clone()),
    }
}

/// Ideal spanned by `(prod_{j in J} a_j) det(v_J)` over all `d`-subsets `J`.
fn minor_ideal(ring: &RingConfig, gens: &[(FractionalIdeal, Vector)], d: usize) -> Result<Option<FractionalIdeal>> {
    let mut acc: Option<FractionalIdeal> = None;
    for subset in combinations(gens.len(), d) {
        let cols: Vec<Vector> = subset.iter().map(|&j| gens[j].1.clone()).collect();
        let det = linalg::det(&cols);
        if det.is_zero() {
            continue;
        }
        let mut ideal = FractionalIdeal::unit(ring);
        for &j in &subset {
            ideal = ideal.mul(&gens[j].0)?;
        }
        let term = ideal.scale(&det)?;
        acc = Some(match acc {
            None => term,
            Some(a) => a.sum(&term)?,
        });
    }
    Ok(acc)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn full_span_gens(l: &PseudoLattice) -> Vec<(FractionalIdeal, Vector)> {
    l.gens().iter().map(|g| (g.ideal.clone(), g.vector.clone())).collect()
}

/// Relative invariant `chi(S, R) = b a^{-1}`, where `a` and `b` are the
/// images of the top exterior powers of `R` and `S` in `K`.
pub fn relative_invariant(s: &PseudoLattice, r: &PseudoLattice) -> Result<IndexModule> {
    r.check_compatible(s)?;
    let ring = r.ring();
    if !ring.k_is_frac_field() {
        return Err(Error::PreconditionViolated("K must be the fraction field of A".into()));
    }
    let n = r.dim();
    if r.rank() != n || s.rank() != n {
        return Err(Error::PreconditionViolated("both lattices must span the whole space".into()));
    }
    let a = minor_ideal(ring, &full_span_gens(r), n)?.ok_or(Error::ZeroLattice)?;
    let b = minor_ideal(ring, &full_span_gens(s), n)?.ok_or(Error::ZeroLattice)?;
    IndexModule::span(b.mul(&a.inv())?, &FieldElem::one())
}

fn check_nested(r: &PseudoLattice, s: &PseudoLattice) -> Result<()> {
    r.check_compatible(s)?;
    if r.is_zero() {
        return Err(Error::ZeroLattice);
    }
    if s.is_zero() || r.rank() != s.rank() {
        return Err(Error::RankMismatch);
    }
    if !r.contains_lattice(s)? {
        return Err(Error::NotASublattice);
    }
    Ok(())
}

/// Fitting ideal of `R / S` for `S <= R`, computed from minors.
///
/// With `L` the free lattice on the Steinitz basis of `R`,
/// `Fitt(R/S) = Fitt(L/S) Fitt(L/R)^{-1}`, and each Fitting ideal over the
/// free module `L` is spanned by the maximal minors of the generators
/// written in the basis of `L`.
pub fn fitting_ideal_quotient(r: &PseudoLattice, s: &PseudoLattice) -> Result<FractionalIdeal> {
    if !r.ring().k_is_frac_field() {
        return Err(Error::PreconditionViolated("K must be the fraction field of A".into()));
    }
    check_nested(r, s)?;
    let ring = r.ring();
    let sf = r.steinitz_form()?;
    let d = sf.rank();
    let in_basis = |l: &PseudoLattice| -> Vec<(FractionalIdeal, Vector)> {
        l.gens()
            .iter()
            .map(|g| (g.ideal.clone(), sf.coords(&g.vector).expect("inside the span of R")))
            .collect()
    };
    let fitt_s = minor_ideal(ring, &in_basis(s), d)?.ok_or(Error::RankMismatch)?;
    let fitt_r = minor_ideal(ring, &in_basis(r), d)?.ok_or(Error::ZeroLattice)?;
    fitt_s.mul(&fitt_r.inv())
}

/// `|R / S|` for `S <= R` of equal rank, via the integer oracle.
pub fn group_index(r: &PseudoLattice, s: &PseudoLattice) -> Result<BigInt> {
    if !r.ring().k_is_frac_field() {
        return Err(Error::UnsupportedConfig);
    }
    check_nested(r, s)?;
    oracle_group_index(r, s)
}
