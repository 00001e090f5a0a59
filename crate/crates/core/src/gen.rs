//! Seeded random lattices, ideals and maps for the property suites.
//!
//! Scalars have numerator and denominator below 50 in absolute value,
//! ambient dimensions run from 1 to 4 and lattices carry at most six
//! pseudo-generators. Ideals are drawn from a small fixed pool per ring so
//! that both principal and non-principal classes show up without letting
//! the Hermite forms blow up.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{FieldElem, QuadElement, Rational};
use crate::error::Result;
use crate::ideal::FractionalIdeal;
use crate::lattice::PseudoLattice;
use crate::linalg::{self, Vector};
use crate::ring::RingConfig;

pub const MAX_DIM: usize = 4;
pub const MAX_GENS: usize = 6;
const BOUND: i64 = 50;

pub struct Sampler {
    rng: ChaCha8Rng,
}

fn gens(ring: &RingConfig, xs: &[&str]) -> FractionalIdeal {
    let xs: Vec<FieldElem> = xs.iter().map(|s| s.parse().expect("pool literal")).collect();
    FractionalIdeal::from_generators(ring, &xs).expect("pool ideal")
}

/// Nonzero integral ideals of the pool, including the non-principal primes
/// above 2 and 3 for `d = -5`.
fn integral_pool(ring: &RingConfig) -> Vec<FractionalIdeal> {
    match ring {
        RingConfig::Od { d } => {
            let s = format!("sqrt({d})");
            let mut pool = vec![
                FractionalIdeal::unit(ring),
                gens(ring, &["2", &format!("1+{s}")]),
                gens(ring, &["3", &format!("1+{s}")]),
                gens(ring, &["3", &format!("1-{s}")]),
                gens(ring, &["2"]),
                gens(ring, &[&format!("1+{s}")]),
            ];
            pool.dedup();
            pool
        }
        _ => [1, 2, 3, 5, 6].iter().map(|&q| FractionalIdeal::from_rational(ring, &Rational::from(q)).expect("pool")).collect(),
    }
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Small numerators are favoured; large ones still occur.
    pub fn rational(&mut self) -> Rational {
        let num_bound = if self.coin(0.75) { 6 } else { BOUND };
        let n = self.rng.gen_range(1 - num_bound..num_bound);
        let den = if self.coin(0.6) {
            1
        } else {
            let den_bound = if self.coin(0.8) { 5 } else { BOUND };
            self.rng.gen_range(1..den_bound)
        };
        Rational::new(n, den).expect("nonzero denominator")
    }

    pub fn small_int(&mut self, bound: i64) -> BigInt {
        BigInt::from(self.rng.gen_range(-bound..=bound))
    }

    pub fn scalar(&mut self, ring: &RingConfig) -> FieldElem {
        let d = ring.field_d();
        let a = self.rational();
        if d == 0 || self.coin(0.4) {
            return FieldElem::rational(a);
        }
        QuadElement::new(a, self.rational(), d).expect("ring discriminant is valid")
    }

    pub fn nonzero_scalar(&mut self, ring: &RingConfig) -> FieldElem {
        loop {
            let x = self.scalar(ring);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn vector(&mut self, ring: &RingConfig, n: usize) -> Vector {
        (0..n).map(|_| self.scalar(ring)).collect()
    }

    pub fn integral_ideal(&mut self, ring: &RingConfig) -> FractionalIdeal {
        integral_pool(ring).choose(&mut self.rng).expect("nonempty pool").clone()
    }

    /// A product of at most two pool ideals or their inverses, sometimes
    /// rescaled by a small rational.
    pub fn ideal(&mut self, ring: &RingConfig) -> FractionalIdeal {
        let mut a = FractionalIdeal::unit(ring);
        for _ in 0..self.below(3) {
            let p = self.integral_ideal(ring);
            let p = if self.coin(0.4) { p.inv() } else { p };
            a = a.mul(&p).expect("same ring");
        }
        if self.coin(0.25) {
            let q = Rational::new(self.rng.gen_range(1..5), self.rng.gen_range(1..4)).expect("nonzero");
            a = a.scale(&FieldElem::rational(q)).expect("nonzero");
        }
        a
    }

    /// `k` linearly independent vectors of `K^n`.
    pub fn independent(&mut self, ring: &RingConfig, n: usize, k: usize) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::with_capacity(k);
        while out.len() < k {
            let v = self.vector(ring, n);
            let mut trial = out.clone();
            trial.push(v);
            if linalg::rank(&trial, n) == trial.len() {
                out = trial;
            }
        }
        out
    }

    pub fn invertible(&mut self, ring: &RingConfig, n: usize) -> Vec<Vector> {
        self.independent(ring, n, n)
    }

    /// Square integer matrix with nonzero determinant, entries in `[-3, 3]`.
    pub fn int_matrix(&mut self, k: usize) -> Vec<Vec<BigInt>> {
        loop {
            let m: Vec<Vec<BigInt>> = (0..k).map(|_| (0..k).map(|_| self.small_int(3)).collect()).collect();
            let as_field: Vec<Vector> =
                m.iter().map(|r| r.iter().map(|x| FieldElem::rational(Rational::from(x.clone()))).collect()).collect();
            if !linalg::det(&as_field).is_zero() {
                return m;
            }
        }
    }

    /// Random combination of `basis`; over `Z` in a quadratic field the
    /// coefficients stay rational so the result is still a lattice.
    fn combination(&mut self, ring: &RingConfig, basis: &[Vector], n: usize) -> Vector {
        let coeffs: Vec<FieldElem> = basis
            .iter()
            .map(|_| if ring.k_is_frac_field() { self.scalar(ring) } else { FieldElem::rational(self.rational()) })
            .collect();
        linalg::combine(&coeffs, basis, n)
    }

    /// Lattice whose `K`-span is exactly the span of `basis`.
    pub fn lattice_in_span(&mut self, ring: &RingConfig, n: usize, basis: &[Vector]) -> Result<PseudoLattice> {
        if basis.is_empty() {
            return Ok(PseudoLattice::zero(ring, n));
        }
        let k = basis.len();
        let mix = self.invertible(ring, k);
        let mut vectors: Vec<Vector> = mix.iter().map(|row| linalg::combine(row, basis, n)).collect();
        for _ in 0..self.below(MAX_GENS - k + 1) {
            let v = self.combination(ring, &vectors[..k], n);
            vectors.push(v);
        }
        let gens = vectors.into_iter().map(|v| (self.ideal(ring), v)).collect();
        PseudoLattice::new(ring, n, gens)
    }

    pub fn lattice(&mut self, ring: &RingConfig, n: usize, rank: usize) -> Result<PseudoLattice> {
        let basis = self.independent(ring, n, rank);
        self.lattice_in_span(ring, n, &basis)
    }

    /// `S <= R` of the same rank: `c T(R)` with `T` an integer matrix acting
    /// on a pseudo-basis of `R` and `c` an integral ideal.
    pub fn sublattice(&mut self, r: &PseudoLattice) -> Result<PseudoLattice> {
        let ring = r.ring().clone();
        let sf = r.steinitz_form()?;
        let k = sf.rank();
        let c = self.integral_ideal(&ring);
        let unit = FractionalIdeal::unit(&ring);
        // the b_0-coordinates of the later columns must lie in m, which
        // contains its own norm
        let m_norm = sf.m.norm().numer().clone();
        loop {
            let mut t = self.int_matrix(k);
            for x in t[0].iter_mut().skip(1) {
                *x = &*x * &m_norm;
            }
            let mut gens = Vec::with_capacity(k);
            for j in 0..k {
                let coeffs: Vec<FieldElem> =
                    (0..k).map(|i| FieldElem::rational(Rational::from(t[i][j].clone()))).collect();
                let v = linalg::combine(&coeffs, &sf.basis, r.dim());
                let ideal = if j == 0 { sf.m.clone() } else { unit.clone() };
                gens.push((ideal.mul(&c)?, v));
            }
            let s = PseudoLattice::new(&ring, r.dim(), gens)?;
            if s.rank() == k {
                return Ok(s);
            }
        }
    }

    /// Integer unimodular matrix built from elementary operations.
    pub fn unimodular(&mut self, n: usize) -> Vec<Vec<BigInt>> {
        let mut m: Vec<Vec<BigInt>> =
            (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
        if n < 2 {
            if self.coin(0.5) {
                m[0][0] = BigInt::from(-1);
            }
            return m;
        }
        for _ in 0..2 * n {
            let i = self.below(n);
            let j = (i + 1 + self.below(n - 1)) % n;
            match self.below(3) {
                0 => m.swap(i, j),
                1 => m[i] = m[i].iter().map(|x| -x).collect(),
                _ => {
                    let f = self.small_int(2);
                    let rj = m[j].clone();
                    for (x, y) in m[i].iter_mut().zip(&rj) {
                        *x += &f * y;
                    }
                }
            }
        }
        m
    }
}
