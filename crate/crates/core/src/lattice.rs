//! Lattices over a Dedekind ring, as pseudo-matrices.
//!
//! A [`PseudoLattice`] is the module `sum_i a_i v_i` spanned by pairs of a
//! fractional ideal and a vector of `K^n`. Its [`SteinitzForm`] is a
//! pseudo-basis `m b_0 + A b_1 + ... + A b_{d-1}` with `m` integral and the
//! `b_i` linearly independent over `K`. Steinitz forms are not canonical:
//! only the module they describe is.
//!
//! Over rings whose ideals are all principal the pseudo-basis comes from a
//! Hermite normal form over `Z` of the restricted-scalar generators. Over a
//! quadratic maximal order it comes from a pseudo-Hermite reduction of the
//! coordinate matrix, followed by merging the ideals two at a time.

use num_bigint::BigInt;

use crate::arith::{common_denominator, FieldElem, Rational};
use crate::error::{Error, Result};
use crate::hnf::hnf;
use crate::ideal::FractionalIdeal;
use crate::linalg::{self, echelon, Echelon, Vector};
use crate::ring::RingConfig;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoGen {
    pub ideal: FractionalIdeal,
    pub vector: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoLattice {
    ring: RingConfig,
    dim: usize,
    gens: Vec<PseudoGen>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinitzForm {
    pub ring: RingConfig,
    /// Integral ideal attached to `basis[0]`.
    pub m: FractionalIdeal,
    pub basis: Vec<Vector>,
}

impl PseudoLattice {
    /// Builds a lattice; zero vectors are dropped.
    pub fn new(ring: &RingConfig, dim: usize, gens: Vec<(FractionalIdeal, Vector)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("ambient dimension must be at least 1".into()));
        }
        let mut kept = Vec::with_capacity(gens.len());
        for (ideal, vector) in gens {
            if ideal.ring() != ring {
                return Err(Error::ConfigMismatch);
            }
            if vector.len() != dim {
                return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {dim}", vector.len())));
            }
            if vector.iter().any(|x| !ring.in_field(x)) {
                return Err(Error::ConfigMismatch);
            }
            if vector.iter().all(FieldElem::is_zero) {
                continue;
            }
            let vector = vector.into_iter().map(|x| x.in_field(ring.field_d())).collect();
            kept.push(PseudoGen { ideal, vector });
        }
        Ok(PseudoLattice { ring: ring.clone(), dim, gens: kept })
    }

    /// `sum_i A v_i`.
    pub fn free(ring: &RingConfig, dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        let unit = FractionalIdeal::unit(ring);
        Self::new(ring, dim, vectors.into_iter().map(|v| (unit.clone(), v)).collect())
    }

    pub fn zero(ring: &RingConfig, dim: usize) -> Self {
        PseudoLattice { ring: ring.clone(), dim, gens: Vec::new() }
    }

    pub fn ring(&self) -> &RingConfig {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[PseudoGen] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn vectors(&self) -> impl Iterator<Item = &Vector> {
        self.gens.iter().map(|g| &g.vector)
    }

    pub(crate) fn echelon(&self) -> Echelon {
        echelon(self.vectors(), self.dim)
    }

    /// Dimension of the `K`-span.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// A `K`-basis of the `K`-span.
    pub fn span_basis(&self) -> Result<Vec<Vector>> {
        if self.is_zero() {
            return Err(Error::ZeroLattice);
        }
        Ok(self.echelon().rows)
    }

    /// `true` when the two lattices span the same `K`-subspace.
    pub fn same_span(&self, other: &Self) -> bool {
        let e = self.echelon();
        e.rank() == other.rank() && other.vectors().all(|v| e.contains(v))
    }

    pub fn steinitz_form(&self) -> Result<SteinitzForm> {
        if self.is_zero() {
            return Err(Error::ZeroLattice);
        }
        if self.ring.has_rational_ideals() {
            self.steinitz_over_pid()
        } else {
            self.steinitz_over_order()
        }
    }

    /// Z-generators of the lattice: each pseudo-generator contributes the
    /// Z-basis of its ideal times its vector.
    pub(crate) fn z_generators(&self) -> Vec<Vector> {
        self.gens
            .iter()
            .flat_map(|g| g.ideal.z_basis().into_iter().map(move |e| linalg::scale(&e, &g.vector)))
            .collect()
    }

    fn steinitz_over_pid(&self) -> Result<SteinitzForm> {
        let zgens = self.z_generators();
        let (rows, den) = restrict_rows(&self.ring, &zgens);
        let width = rows.first().map_or(0, Vec::len);
        let h = hnf(&rows, width, false);
        let basis: Vec<Vector> = h.rows.iter().map(|r| unrestrict_row(&self.ring, r, &den, self.dim)).collect();
        let k_rank = self.rank();
        if basis.len() != k_rank {
            return Err(Error::NotALattice(format!(
                "Z-rank {} differs from K-dimension {k_rank}",
                basis.len()
            )));
        }
        Ok(SteinitzForm { ring: self.ring.clone(), m: FractionalIdeal::unit(&self.ring), basis })
    }

    fn steinitz_over_order(&self) -> Result<SteinitzForm> {
        let ech = self.echelon();
        let d = ech.rank();
        let mut cols: Vec<(FractionalIdeal, Vector)> = self
            .gens
            .iter()
            .map(|g| (g.ideal.clone(), ech.coords(&g.vector).expect("generator lies in its span")))
            .collect();
        let pseudo = pseudo_hnf(&mut cols, d)?;
        let mut pairs: Vec<(FractionalIdeal, Vector)> = pseudo
            .into_iter()
            .map(|(ideal, c)| (ideal, linalg::combine(&c, &ech.rows, self.dim)))
            .collect();
        // push every nontrivial ideal into one slot
        let unit = FractionalIdeal::unit(&self.ring);
        let mut acc: Option<(FractionalIdeal, Vector)> = None;
        let mut basis_rest = Vec::new();
        for (ideal, v) in pairs.drain(..) {
            if ideal.is_unit() {
                basis_rest.push(v);
                continue;
            }
            acc = Some(match acc {
                None => (ideal, v),
                Some((a, w)) => {
                    let (u1, (ab, u2)) = merge_ideals(&a, &w, &ideal, &v)?;
                    basis_rest.push(u1);
                    (ab, u2)
                }
            });
        }
        let (m, b0) = match acc {
            Some((ideal, v)) => {
                let (m, t) = ideal.integral_representative()?;
                (m, linalg::scale(&t, &v))
            }
            None => (unit, basis_rest.remove(0)),
        };
        let mut basis = vec![b0];
        basis.extend(basis_rest);
        Ok(SteinitzForm { ring: self.ring.clone(), m, basis })
    }

    /// `v` lies in the lattice.
    pub fn contains(&self, v: &[FieldElem]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {}", v.len(), self.dim)));
        }
        if v.iter().all(FieldElem::is_zero) {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        self.steinitz_form()?.contains(v)
    }

    /// Every element of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        let sf = self.steinitz_form()?;
        for v in other.z_generators() {
            if !sf.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn lattice_equal(&self, other: &Self) -> Result<bool> {
        Ok(self.contains_lattice(other)? && other.contains_lattice(self)?)
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::ConfigMismatch);
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("ambient dimensions {} and {}", self.dim, other.dim)));
        }
        Ok(())
    }

    /// Image `u(L)` under an `n x n` matrix given as rows.
    pub fn map(&self, u: &[Vector]) -> Result<Self> {
        if u.len() != self.dim || u.iter().any(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch("map must be square of the ambient dimension".into()));
        }
        let gens = self.gens.iter().map(|g| (g.ideal.clone(), linalg::mat_vec(u, &g.vector))).collect();
        PseudoLattice::new(&self.ring, self.dim, gens)
    }

    /// The lattice with every ideal multiplied by `c`.
    pub fn ideal_multiple(&self, c: &FractionalIdeal) -> Result<Self> {
        let gens = self.gens.iter().map(|g| Ok((g.ideal.mul(c)?, g.vector.clone()))).collect::<Result<_>>()?;
        PseudoLattice::new(&self.ring, self.dim, gens)
    }

    /// `L_1 + L_2` inside the same ambient space.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let gens = self.gens.iter().chain(&other.gens).map(|g| (g.ideal.clone(), g.vector.clone())).collect();
        PseudoLattice::new(&self.ring, self.dim, gens)
    }

    /// Block direct sum in the concatenated ambient space.
    pub fn direct_sum(parts: &[PseudoLattice]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::DimensionMismatch("empty direct sum".into()))?;
        if parts.iter().any(|p| p.ring != first.ring) {
            return Err(Error::ConfigMismatch);
        }
        let total: usize = parts.iter().map(|p| p.dim).sum();
        let mut gens = Vec::new();
        let mut offset = 0;
        for p in parts {
            for g in &p.gens {
                let mut v = vec![FieldElem::zero(); total];
                v[offset..offset + p.dim].clone_from_slice(&g.vector);
                gens.push((g.ideal.clone(), v));
            }
            offset += p.dim;
        }
        PseudoLattice::new(&first.ring, total, gens)
    }

    /// `B L` for a Dedekind ring `B` containing `A`.
    pub fn extend_scalars(&self, target: &RingConfig) -> Result<Self> {
        let supported = match (&self.ring, target) {
            (RingConfig::Z, RingConfig::ZS { .. }) => true,
            (RingConfig::ZQd { d }, RingConfig::Od { d: e }) => d == e && *d < 0,
            (s, t) => s == t,
        };
        if !supported {
            return Err(Error::UnsupportedExtension);
        }
        let gens = self.gens.iter().map(|g| Ok((g.ideal.extend_to(target)?, g.vector.clone()))).collect::<Result<_>>()?;
        PseudoLattice::new(target, self.dim, gens)
    }
}

impl SteinitzForm {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the basis, if `v` lies in the `K`-span.
    pub fn coords(&self, v: &[FieldElem]) -> Option<Vector> {
        linalg::solve_in_basis(&self.basis, v)
    }

    pub fn contains(&self, v: &[FieldElem]) -> Result<bool> {
        let Some(c) = self.coords(v) else { return Ok(false) };
        let unit = FractionalIdeal::unit(&self.ring);
        if !self.m.contains(&c[0])? {
            return Ok(false);
        }
        for x in &c[1..] {
            if !unit.contains(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_lattice(&self) -> PseudoLattice {
        let dim = self.basis[0].len();
        let unit = FractionalIdeal::unit(&self.ring);
        let gens = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| (if i == 0 { self.m.clone() } else { unit.clone() }, b.clone()))
            .collect();
        PseudoLattice::new(&self.ring, dim, gens).expect("well-formed pseudo-basis")
    }
}

/// Coordinates of vectors in `K^n` over `Q` (`n` or `2n` columns), scaled to
/// integers by a common denominator.
pub(crate) fn restrict_rows(ring: &RingConfig, vectors: &[Vector]) -> (Vec<Vec<BigInt>>, BigInt) {
    let quad = ring.field_d() != 0;
    let rat_rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .flat_map(|x| {
                    if quad {
                        let (u, w) = ring.omega_coords(x);
                        vec![u, w]
                    } else {
                        vec![x.a().clone()]
                    }
                })
                .collect()
        })
        .collect();
    let den = common_denominator(rat_rows.iter().flatten());
    let dq = Rational::from(den.clone());
    let rows = rat_rows
        .iter()
        .map(|r| r.iter().map(|x| (x * &dq).numer().clone()).collect())
        .collect();
    (rows, den)
}

fn unrestrict_row(ring: &RingConfig, row: &[BigInt], den: &BigInt, n: usize) -> Vector {
    let inv = Rational::new(1, den.clone()).expect("positive");
    if ring.field_d() == 0 {
        return row.iter().map(|x| FieldElem::rational(&Rational::from(x.clone()) * &inv)).collect();
    }
    (0..n)
        .map(|i| {
            let u = &Rational::from(row[2 * i].clone()) * &inv;
            let w = &Rational::from(row[2 * i + 1].clone()) * &inv;
            ring.from_omega_coords(&u, &w)
        })
        .collect()
}

/// Pseudo-Hermite reduction of a `d x k` pseudo-matrix of full row rank `d`,
/// given as columns. Returns `d` pseudo-basis columns, the one in position
/// `i` having a 1 in row `i` and zeros below.
fn pseudo_hnf(cols: &mut Vec<(FractionalIdeal, Vector)>, d: usize) -> Result<Vec<(FractionalIdeal, Vector)>> {
    let mut active = cols.len();
    let mut done: Vec<(FractionalIdeal, Vector)> = Vec::with_capacity(d);
    for row in (0..d).rev() {
        let j = (0..active)
            .filter(|&j| !cols[j].1[row].is_zero())
            .min_by_key(|&j| cols[j].0.norm())
            .ok_or_else(|| Error::NotALattice("rank drop during pseudo-Hermite reduction".into()))?;
        let last = active - 1;
        cols.swap(j, last);
        let pivot = cols[last].1[row].clone();
        let inv = pivot.inverse()?;
        cols[last].1 = linalg::scale(&inv, &cols[last].1);
        cols[last].0 = cols[last].0.scale(&pivot)?;
        for j in 0..last {
            let a = cols[j].1[row].clone();
            if a.is_zero() {
                continue;
            }
            let (aj, vj) = cols[j].clone();
            let (ak, vk) = cols[last].clone();
            let delta = aj.scale(&a)?.sum(&ak)?;
            let delta_inv = delta.inv();
            // x in a * aj / delta, y in ak / delta with x + y = 1
            let (x, y) = aj.scale(&a)?.mul(&delta_inv)?.split_one(&ak.mul(&delta_inv)?)?;
            let v = x.checked_div(&a)?;
            let new_j: Vector = vj.iter().zip(&vk).map(|(p, q)| p - &(&a * q)).collect();
            let new_k: Vector = vk.iter().zip(&vj).map(|(q, p)| &(&y * q) + &(&v * p)).collect();
            cols[j] = (aj.mul(&ak)?.mul(&delta_inv)?, new_j);
            cols[last] = (delta, new_k);
        }
        done.push(cols[last].clone());
        active -= 1;
    }
    done.reverse();
    // size-reduce entry (i, j) modulo a_i a_j^{-1}, right to left
    for j in 1..d {
        let aj_inv = done[j].0.inv();
        for i in (0..j).rev() {
            let x = done[j].1[i].clone();
            if x.is_zero() {
                continue;
            }
            let q = &x - &done[i].0.mul(&aj_inv)?.reduce_mod(&x);
            if q.is_zero() {
                continue;
            }
            let vi = done[i].1.clone();
            for (e, f) in done[j].1.iter_mut().zip(&vi) {
                *e = &*e - &(&q * f);
            }
        }
    }
    Ok(done)
}

/// For `a w_1 + b w_2`, returns `(u_1, (ab, u_2))` with
/// `a w_1 + b w_2 = A u_1 + ab u_2`.
fn merge_ideals(
    a: &FractionalIdeal,
    w1: &Vector,
    b: &FractionalIdeal,
    w2: &Vector,
) -> Result<(Vector, (FractionalIdeal, Vector))> {
    // need alpha in a, beta in b, gamma in b^-1, delta in a^-1 with alpha delta - beta gamma = 1
    let beta = b.z_basis().into_iter().next().expect("nonempty basis");
    let j = b.inv().scale(&beta)?;
    let a_inv = a.inv();
    let basis = a.z_basis();
    let alpha = small_combinations(&basis)
        .find(|alpha| {
            !alpha.is_zero()
                && a_inv
                    .scale(alpha)
                    .and_then(|i| i.sum(&j))
                    .map(|s| s.is_unit())
                    .unwrap_or(false)
        })
        .ok_or_else(|| Error::PreconditionViolated("no element coprime to the second ideal found".into()))?;
    let (x, y) = a_inv.scale(&alpha)?.split_one(&j)?;
    let delta = x.checked_div(&alpha)?;
    let gamma = (-&y).checked_div(&beta)?;
    let u1: Vector = w1.iter().zip(w2).map(|(p, q)| &(&alpha * p) + &(&beta * q)).collect();
    let u2: Vector = w1.iter().zip(w2).map(|(p, q)| &(&gamma * p) + &(&delta * q)).collect();
    Ok((u1, (a.mul(b)?, u2)))
}

/// `s e_0 + t e_1` over growing boxes `|s|, |t| <= r`.
fn small_combinations(basis: &[FieldElem]) -> impl Iterator<Item = FieldElem> + '_ {
    (1i64..=64).flat_map(move |r| {
        let coeffs: Vec<Vec<i64>> = if basis.len() == 1 {
            vec![vec![r], vec![-r]]
        } else {
            let mut out = Vec::new();
            for s in -r..=r {
                for t in -r..=r {
                    if s.abs().max(t.abs()) == r {
                        out.push(vec![s, t]);
                    }
                }
            }
            out
        };
        coeffs.into_iter().map(move |cs| {
            basis
                .iter()
                .zip(&cs)
                .fold(FieldElem::zero(), |acc, (e, &c)| &acc + &e.scale(&Rational::from(c)))
        })
    })
}

/// Identity-like helper for tests: the standard basis of `K^n`.
pub fn standard_basis(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { FieldElem::one() } else { FieldElem::zero() }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    fn v(xs: &[&str]) -> Vector {
        xs.iter().map(|s| k(s)).collect()
    }

    fn od5() -> RingConfig {
        RingConfig::od(-5).unwrap()
    }

    fn p2() -> FractionalIdeal {
        FractionalIdeal::from_generators(&od5(), &[k("2"), k("1+sqrt(-5)")]).unwrap()
    }

    fn z(vs: &[&[&str]]) -> PseudoLattice {
        PseudoLattice::free(&RingConfig::Z, vs[0].len(), vs.iter().map(|x| v(x)).collect()).unwrap()
    }

    #[test]
    fn span_basis_examples() {
        assert_eq!(z(&[&["1", "0"], &["0", "1"], &["1", "1"]]).span_basis().unwrap().len(), 2);
        let b = z(&[&["2", "4"]]).span_basis().unwrap();
        assert_eq!(b, vec![v(&["1", "2"])]);
        let l = PseudoLattice::new(&od5(), 2, vec![(p2(), v(&["1", "sqrt(-5)"]))]).unwrap();
        assert_eq!(l.span_basis().unwrap().len(), 1);
        assert_eq!(PseudoLattice::zero(&RingConfig::Z, 2).span_basis(), Err(Error::ZeroLattice));
    }

    #[test]
    fn steinitz_examples() {
        let l = z(&[&["2", "0"], &["0", "3"]]);
        let sf = l.steinitz_form().unwrap();
        assert!(sf.m.is_unit());
        assert!(sf.to_lattice().lattice_equal(&l).unwrap());

        let unit = FractionalIdeal::unit(&od5());
        let l = PseudoLattice::new(
            &od5(),
            2,
            vec![(unit.clone(), v(&["2", "0"])), (unit.clone(), v(&["1+sqrt(-5)", "0"])), (unit, v(&["0", "1"]))],
        )
        .unwrap();
        let sf = l.steinitz_form().unwrap();
        assert_eq!(sf.rank(), 2);
        // the Steinitz class is that of p2: m is p2 up to a principal factor
        assert_eq!(sf.m.norm(), Rational::from(2));
        assert!(sf.m.mul(&p2().inv()).unwrap().is_principal().unwrap().is_some());
        assert!(sf.to_lattice().lattice_equal(&l).unwrap());

        let l = PseudoLattice::new(&od5(), 2, vec![(p2(), v(&["1", "1"]))]).unwrap();
        let sf = l.steinitz_form().unwrap();
        assert!(sf.to_lattice().lattice_equal(&l).unwrap());
    }

    #[test]
    fn membership_examples() {
        let l = z(&[&["2", "0"], &["0", "3"]]);
        assert!(l.contains(&v(&["2", "3"])).unwrap());
        assert!(!l.contains(&v(&["1", "0"])).unwrap());
        let l = PseudoLattice::new(&od5(), 2, vec![(p2(), v(&["1", "1"]))]).unwrap();
        assert!(l.contains(&v(&["1+sqrt(-5)", "1+sqrt(-5)"])).unwrap());
        assert!(!l.contains(&v(&["1", "1"])).unwrap());
        assert!(!l.contains(&v(&["2", "0"])).unwrap());
    }

    #[test]
    fn equality_examples() {
        let a = z(&[&["2", "0"], &["0", "3"]]);
        let two = FractionalIdeal::from_rational(&RingConfig::Z, &Rational::from(2)).unwrap();
        let three = FractionalIdeal::from_rational(&RingConfig::Z, &Rational::from(3)).unwrap();
        let b = PseudoLattice::new(&RingConfig::Z, 2, vec![(two, v(&["1", "0"])), (three, v(&["0", "1"]))]).unwrap();
        assert!(a.lattice_equal(&b).unwrap());
        assert!(a.lattice_equal(&a).unwrap());
        let two_o = FractionalIdeal::principal(&od5(), &k("2")).unwrap();
        let l1 = PseudoLattice::new(&od5(), 2, vec![(p2(), v(&["1", "0"]))]).unwrap();
        let l2 = PseudoLattice::new(&od5(), 2, vec![(two_o, v(&["1", "0"]))]).unwrap();
        assert!(!l1.lattice_equal(&l2).unwrap());
        assert!(l1.contains_lattice(&l2).unwrap());
    }

    #[test]
    fn map_examples() {
        let l = z(&[&["1", "0"], &["0", "1"]]);
        assert!(l.map(&standard_basis(2)).unwrap().lattice_equal(&l).unwrap());
        let u = vec![v(&["2", "0"]), v(&["0", "3"])];
        assert!(l.map(&u).unwrap().lattice_equal(&z(&[&["2", "0"], &["0", "3"]])).unwrap());
        let u = vec![v(&["1", "0"]), v(&["0", "0"])];
        let img = l.map(&u).unwrap();
        assert_eq!(img.rank(), 1);
        assert!(img.lattice_equal(&z(&[&["1", "0"]])).unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let a = z(&[&["2"]]);
        let b = z(&[&["3"]]);
        let s = PseudoLattice::direct_sum(&[a.clone(), b]).unwrap();
        assert!(s.lattice_equal(&z(&[&["2", "0"], &["0", "3"]])).unwrap());
        assert!(PseudoLattice::direct_sum(std::slice::from_ref(&a)).unwrap().lattice_equal(&a).unwrap());
        let c = PseudoLattice::new(&od5(), 1, vec![(p2(), v(&["1"]))]).unwrap();
        let d = PseudoLattice::free(&od5(), 1, vec![v(&["1"])]).unwrap();
        assert_eq!(PseudoLattice::direct_sum(&[c, d]).unwrap().rank(), 2);
        assert_eq!(PseudoLattice::direct_sum(&[a, PseudoLattice::zero(&od5(), 1)]), Err(Error::ConfigMismatch));
    }

    #[test]
    fn extend_scalars_examples() {
        let zs = RingConfig::zs(&[2]).unwrap();
        let six = FractionalIdeal::from_rational(&RingConfig::Z, &Rational::from(6)).unwrap();
        let l = PseudoLattice::new(&RingConfig::Z, 1, vec![(six, v(&["1"]))]).unwrap();
        let e = l.extend_scalars(&zs).unwrap();
        assert_eq!(e.gens()[0].ideal.rational_generator().unwrap(), &Rational::from(3));

        let zq = RingConfig::zqd(-5).unwrap();
        let l = PseudoLattice::free(&zq, 1, vec![v(&["1"]), v(&["sqrt(-5)"])]).unwrap();
        let e = l.extend_scalars(&od5()).unwrap();
        assert!(e.lattice_equal(&PseudoLattice::free(&od5(), 1, vec![v(&["1"])]).unwrap()).unwrap());
        assert_eq!(l.extend_scalars(&RingConfig::Z), Err(Error::UnsupportedExtension));
    }

    #[test]
    fn zqd_rejects_non_lattices() {
        let zq = RingConfig::zqd(2).unwrap();
        let l = PseudoLattice::free(&zq, 1, vec![v(&["1"]), v(&["sqrt(2)"])]).unwrap();
        assert!(matches!(l.steinitz_form(), Err(Error::NotALattice(_))));
        let l = PseudoLattice::free(&zq, 1, vec![v(&["1"]), v(&["1/2"])]).unwrap();
        assert_eq!(l.steinitz_form().unwrap().rank(), 1);
    }
}
