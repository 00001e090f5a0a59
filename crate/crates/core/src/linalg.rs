//! Exact Gaussian elimination over the ambient field.

use crate::arith::FieldElem;

pub type Vector = Vec<FieldElem>;

/// Reduced row echelon form of the span of a set of vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[FieldElem]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, row) in c.iter().zip(&self.rows) {
            if ci.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r = &*r - &(ci * x);
                }
            }
        }
        rest.iter().all(FieldElem::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.coords(v).is_some()
    }
}

pub fn echelon<'a>(vectors: impl IntoIterator<Item = &'a Vector>, n: usize) -> Echelon {
    let mut rows: Vec<Vector> = vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a Vector>, n: usize) -> usize {
    echelon(vectors, n).rank()
}

/// Coordinates of `v` in a linearly independent family `basis`.
pub fn solve_in_basis(basis: &[Vector], v: &[FieldElem]) -> Option<Vector> {
    let n = v.len();
    let d = basis.len();
    // augmented rows: [b_0[i], ..., b_{d-1}[i] | v[i]]
    let mut m: Vec<Vector> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).chain(std::iter::once(v[i].clone())).collect())
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..d {
        let p = (r..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(r, p);
        let inv = m[r][col].inverse().expect("nonzero pivot");
        m[r] = m[r].iter().map(|x| x * &inv).collect();
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * y);
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[d].is_zero()) {
        return None;
    }
    Some((0..d).map(|j| m[j][d].clone()).collect())
}

/// Determinant of a square matrix given as a list of columns (or rows).
pub fn det(cols: &[Vector]) -> FieldElem {
    let n = cols.len();
    let mut m: Vec<Vector> = cols.to_vec();
    let mut acc = FieldElem::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return FieldElem::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        let inv = m[col][col].inverse().expect("nonzero pivot");
        acc = &acc * &m[col][col];
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &inv;
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &(&f * y);
            }
        }
    }
    acc
}

/// `M v` for a matrix given as rows.
pub fn mat_vec(m: &[Vector], v: &[FieldElem]) -> Vector {
    m.iter()
        .map(|row| row.iter().zip(v).fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b)))
        .collect()
}

/// Inverse of a square matrix given as rows, if it is invertible.
pub fn inverse(m: &[Vector]) -> Option<Vec<Vector>> {
    let n = m.len();
    let unit = |j: usize| -> Vector {
        (0..n).map(|i| if i == j { FieldElem::one() } else { FieldElem::zero() }).collect()
    };
    let cols: Vec<Vector> = (0..n).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect();
    let inv_cols: Vec<Vector> = (0..n).map(|j| solve_in_basis(&cols, &unit(j))).collect::<Option<_>>()?;
    Some((0..n).map(|i| inv_cols.iter().map(|c| c[i].clone()).collect()).collect())
}

/// `sum_i c_i v_i`.
pub fn combine(coeffs: &[FieldElem], vectors: &[Vector], n: usize) -> Vector {
    let mut out = vec![FieldElem::zero(); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = &*o + &(c * x);
        }
    }
    out
}

pub fn scale(c: &FieldElem, v: &[FieldElem]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(rows: &[&[&str]]) -> Vec<Vector> {
        rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect()
    }

    #[test]
    fn echelon_rank_and_coords() {
        let vs = vecs(&[&["1", "0"], &["0", "1"], &["1", "1"]]);
        let e = echelon(&vs, 2);
        assert_eq!(e.rank(), 2);
        let vs = vecs(&[&["2", "4"]]);
        let e = echelon(&vs, 2);
        assert_eq!(e.rank(), 1);
        assert!(e.contains(&vecs(&[&["3", "6"]])[0]));
        assert!(!e.contains(&vecs(&[&["1", "1"]])[0]));
    }

    #[test]
    fn determinants() {
        let m = vecs(&[&["2", "0"], &["0", "3"]]);
        assert_eq!(det(&m), "6".parse().unwrap());
        let m = vecs(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(det(&m), "-1".parse().unwrap());
        let m = vecs(&[&["1+sqrt(-5)", "2"], &["3", "1-sqrt(-5)"]]);
        assert_eq!(det(&m), "0".parse().unwrap());
        let m = vecs(&[&["sqrt(2)", "1"], &["1", "sqrt(2)"]]);
        assert_eq!(det(&m), "1".parse().unwrap());
    }

    #[test]
    fn solve_and_inverse() {
        let basis = vecs(&[&["1", "1", "0"], &["0", "1", "sqrt(2)"]]);
        let v = vecs(&[&["2", "3", "sqrt(2)"]])[0].clone();
        let c = solve_in_basis(&basis, &v).unwrap();
        assert_eq!(c, vecs(&[&["2", "1"]])[0]);
        assert!(solve_in_basis(&basis, &vecs(&[&["0", "0", "1"]])[0]).is_none());
        let m = vecs(&[&["1", "2"], &["3", "4"]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vecs(&[&["-2", "1"], &["3/2", "-1/2"]]));
        assert!(inverse(&vecs(&[&["1", "2"], &["2", "4"]])).is_none());
    }
}
