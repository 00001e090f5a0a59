//! Ground truth over `Z`: Smith normal form, restriction of scalars and
//! group indices.
//!
//! This module deliberately avoids the Hermite and pseudo-Hermite code used
//! by [`crate::lattice`]. Group indices are obtained from elementary
//! divisors only: for lattices `S <= R` of equal rank, `[R : S]` is the
//! ratio of the products of the nonzero elementary divisors of their
//! generator matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::ideal::normalize_rational;
use crate::lattice::{restrict_rows, PseudoLattice};

/// Rectangular matrix of arbitrary-precision integers, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged integer matrix".into()));
        }
        Ok(IntMatrix { rows: entries.len(), cols, entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        IntMatrix::new(entries, cols).expect("rectangular")
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        IntMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("matrix product shapes".into()));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| (0..self.cols).fold(BigInt::zero(), |acc, k| acc + &self.entries[i][k] * &other.entries[k][j]))
                    .collect()
            })
            .collect();
        Ok(IntMatrix { rows: self.rows, cols: other.cols, entries })
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("stacked matrices need equal widths".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(IntMatrix { rows: entries.len(), cols: self.cols, entries })
    }

    fn scaled(&self, k: &BigInt) -> IntMatrix {
        let entries = self.entries.iter().map(|r| r.iter().map(|x| x * k).collect()).collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }
}

/// Elementary divisors `d_1 | d_2 | ...` (`min(rows, cols)` of them, zeros last).
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.entries.clone();
    let (rows, cols) = (m.rows, m.cols);
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // pivot: smallest nonzero |entry| in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj): (usize, usize)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // remaining block is zero
                let mut out: Vec<BigInt> = (0..t).map(|i| a[i][i].abs()).collect();
                out.resize(n, BigInt::zero());
                return normalize_chain(out);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    normalize_chain((0..n).map(|i| a[i][i].abs()).collect())
}

/// Re-derives a divisibility chain from diagonal entries (gcd/lcm sweep).
fn normalize_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[i].is_zero() && !d[j].is_zero() {
                d.swap(i, j);
                continue;
            }
            if d[j].is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// A lattice written as `(1 / denominator) * rowspace(matrix)` inside `Q^n`
/// (`K = Q`) or `Q^{2n}` (coordinates in the basis `(1, omega)` of `K`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLattice {
    pub denominator: BigInt,
    pub matrix: IntMatrix,
}

/// Z-generators of the lattice: each pseudo-generator `(a, v)` contributes
/// the Z-basis of `a` times `v`. Over `Z[1/S]` this is a Z-lattice whose
/// `Z[1/S]`-span is the input.
pub fn restrict_scalars(l: &PseudoLattice) -> RestrictedLattice {
    let width = if l.ring().field_d() == 0 { l.dim() } else { 2 * l.dim() };
    let zgens: Vec<Vec<_>> = l
        .gens()
        .iter()
        .flat_map(|g| g.ideal.z_basis().into_iter().map(move |e| g.vector.iter().map(|x| &e * x).collect()))
        .collect();
    let (rows, den) = restrict_rows(l.ring(), &zgens);
    RestrictedLattice { denominator: den, matrix: IntMatrix::new(rows, width).expect("rectangular") }
}

/// Rank and product of the nonzero elementary divisors.
fn rank_and_content(m: &IntMatrix) -> (usize, BigInt) {
    let divisors = smith_normal_form(m);
    let nonzero: Vec<&BigInt> = divisors.iter().filter(|d| !d.is_zero()).collect();
    (nonzero.len(), nonzero.into_iter().product())
}

/// `[R : S]` for `S <= R` of equal rank, from elementary divisors alone.
///
/// Over `Z[1/S]` the index is taken as `Z[1/S]`-modules, i.e. with the
/// inverted primes stripped.
pub fn oracle_group_index(r: &PseudoLattice, s: &PseudoLattice) -> Result<BigInt> {
    if r.ring() != s.ring() {
        return Err(Error::ConfigMismatch);
    }
    if r.dim() != s.dim() {
        return Err(Error::DimensionMismatch("ambient dimensions differ".into()));
    }
    let primes = r.ring().inverted_primes();
    let rr = restrict_scalars(r);
    let rs = restrict_scalars(s);
    let den = rr.denominator.lcm(&rs.denominator);
    let mr = rr.matrix.scaled(&(&den / &rr.denominator));
    let ms = rs.matrix.scaled(&(&den / &rs.denominator));
    let (rank_r, content_r) = rank_and_content(&mr);
    let (rank_s, content_s) = if ms.rows() == 0 { (0, BigInt::one()) } else { rank_and_content(&ms) };
    if rank_r != rank_s || rank_r == 0 {
        return Err(Error::RankMismatch);
    }
    let (rank_sum, content_sum) = rank_and_content(&mr.stack(&ms)?);
    if rank_sum != rank_r {
        return Err(Error::NotASublattice);
    }
    // R + S = R exactly when the contents agree (up to inverted primes)
    let growth = normalize_rational(&Rational::new(content_r.clone(), content_sum)?, primes);
    if !growth.is_one() {
        return Err(Error::NotASublattice);
    }
    let index = normalize_rational(&Rational::new(content_s, content_r)?, primes);
    if !index.is_integer() {
        return Err(Error::NotASublattice);
    }
    Ok(index.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldElem;
    use crate::ideal::FractionalIdeal;
    use crate::ring::RingConfig;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn k(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]])), big(&[1, 6]));
        assert_eq!(smith_normal_form(&IntMatrix::identity(4)), big(&[1, 1, 1, 1]));
        assert_eq!(smith_normal_form(&IntMatrix::from_i64(&[&[2, 1], &[0, 3]])), big(&[1, 6]));
        assert_eq!(smith_normal_form(&IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), big(&[2, 6, 12]));
        assert_eq!(smith_normal_form(&IntMatrix::from_i64(&[&[2, 4], &[1, 2]])), big(&[1, 0]));
        assert_eq!(smith_normal_form(&IntMatrix::from_i64(&[&[4], &[6]])), big(&[2]));
    }

    #[test]
    fn restrict_examples() {
        let od = RingConfig::od(-5).unwrap();
        let o = PseudoLattice::free(&od, 1, vec![vec![k("1")]]).unwrap();
        let r = restrict_scalars(&o);
        assert_eq!(smith_normal_form(&r.matrix), big(&[1, 1]));
        let p2 = FractionalIdeal::from_generators(&od, &[k("2"), k("1+sqrt(-5)")]).unwrap();
        let l = PseudoLattice::new(&od, 1, vec![(p2, vec![k("1")])]).unwrap();
        let r = restrict_scalars(&l);
        assert_eq!(r.matrix.entries(), &[big(&[2, 0]), big(&[1, 1])]);
        assert_eq!(oracle_group_index(&o, &l).unwrap(), BigInt::from(2));
    }

    #[test]
    fn group_index_examples() {
        let z2 = PseudoLattice::free(&RingConfig::Z, 2, vec![vec![k("1"), k("0")], vec![k("0"), k("1")]]).unwrap();
        let s = PseudoLattice::free(&RingConfig::Z, 2, vec![vec![k("2"), k("0")], vec![k("0"), k("3")]]).unwrap();
        assert_eq!(oracle_group_index(&z2, &s).unwrap(), BigInt::from(6));
        assert_eq!(oracle_group_index(&z2, &z2).unwrap(), BigInt::one());
        assert_eq!(oracle_group_index(&s, &z2), Err(Error::NotASublattice));

        let od = RingConfig::od(-5).unwrap();
        let o = PseudoLattice::free(&od, 1, vec![vec![k("1")]]).unwrap();
        let two_o = PseudoLattice::free(&od, 1, vec![vec![k("2")]]).unwrap();
        assert_eq!(oracle_group_index(&o, &two_o).unwrap(), BigInt::from(4));

        let line = PseudoLattice::free(&RingConfig::Z, 2, vec![vec![k("1"), k("0")]]).unwrap();
        assert_eq!(oracle_group_index(&z2, &line), Err(Error::RankMismatch));
    }

    #[test]
    fn zs_strips_inverted_primes() {
        let zs = RingConfig::zs(&[2, 3]).unwrap();
        let r = PseudoLattice::free(&zs, 1, vec![vec![k("1")]]).unwrap();
        let s = PseudoLattice::free(&zs, 1, vec![vec![k("60")]]).unwrap();
        assert_eq!(oracle_group_index(&r, &s).unwrap(), BigInt::from(5));
        // 1/4 lies in Z[1/2, 1/3], so this is the whole ring again
        let s = PseudoLattice::free(&zs, 1, vec![vec![k("1/4")]]).unwrap();
        assert_eq!(oracle_group_index(&r, &s).unwrap(), BigInt::one());
        let s = PseudoLattice::free(&zs, 1, vec![vec![k("1/5")]]).unwrap();
        assert_eq!(oracle_group_index(&r, &s), Err(Error::NotASublattice));
    }
}
