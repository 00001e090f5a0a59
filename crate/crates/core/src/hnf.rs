//! Row-style Hermite normal form over Z, with optional transform tracking.
//!
//! Rows are generators; the output rows form a Z-basis of their span,
//! upper triangular with positive pivots and entries above each pivot
//! reduced into `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) struct Hnf {
    /// Nonzero basis rows, in echelon order.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each basis row.
    pub pivots: Vec<usize>,
    /// `transform[i]` expresses basis row `i` as a combination of the inputs.
    pub transform: Option<Vec<Vec<BigInt>>>,
}

fn axpy(dst: &mut [BigInt], k: &BigInt, src: &[BigInt]) {
    for (x, y) in dst.iter_mut().zip(src) {
        *x -= k * y;
    }
}

pub(crate) fn hnf(gens: &[Vec<BigInt>], ncols: usize, track: bool) -> Hnf {
    let m = gens.len();
    let mut a: Vec<Vec<BigInt>> = gens.to_vec();
    let mut u: Vec<Vec<BigInt>> = if track {
        (0..m)
            .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect()
    } else {
        Vec::new()
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        loop {
            // smallest nonzero |entry| among rows r.. becomes the pivot candidate
            let best = (r..m)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(p) = best else { break };
            a.swap(r, p);
            if track {
                u.swap(r, p);
            }
            let mut done = true;
            for i in r + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[r][col]);
                let (head, tail) = a.split_at_mut(i);
                axpy(&mut tail[0], &q, &head[r]);
                if track {
                    let (uh, ut) = u.split_at_mut(i);
                    axpy(&mut ut[0], &q, &uh[r]);
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[col].is_zero()) {
            continue;
        }
        if a[r][col].is_negative() {
            a[r].iter_mut().for_each(|x| *x = -&*x);
            if track {
                u[r].iter_mut().for_each(|x| *x = -&*x);
            }
        }
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = a.split_at_mut(r);
            axpy(&mut head[i], &q, &tail[0]);
            if track {
                let (uh, ut) = u.split_at_mut(r);
                axpy(&mut uh[i], &q, &ut[0]);
            }
        }
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    if track {
        u.truncate(r);
    }
    Hnf { rows: a, pivots, transform: track.then_some(u) }
}

/// Integer coefficients `x` with `sum x_i * gens_i = target`, if any exist.
pub(crate) fn solve_combination(gens: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let ncols = target.len();
    let h = hnf(gens, ncols, true);
    let mut rest = target.to_vec();
    let mut coeffs = vec![BigInt::zero(); h.rows.len()];
    for (i, (&col, row)) in h.pivots.iter().zip(&h.rows).enumerate() {
        let (q, rem) = rest[col].div_rem(&row[col]);
        if !rem.is_zero() {
            return None;
        }
        axpy(&mut rest, &q, row);
        coeffs[i] = q;
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return None;
    }
    let u = h.transform.expect("tracked");
    let mut out = vec![BigInt::zero(); gens.len()];
    for (c, urow) in coeffs.iter().zip(&u) {
        for (o, x) in out.iter_mut().zip(urow) {
            *o += c * x;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_hnf() {
        let h = hnf(&[v(&[4, 6]), v(&[6, 9]), v(&[2, 1])], 2, false);
        assert_eq!(h.rows, vec![v(&[2, 1]), v(&[0, 2])]);
        assert_eq!(h.pivots, vec![0, 1]);
    }

    #[test]
    fn rank_deficient() {
        let h = hnf(&[v(&[2, 4]), v(&[3, 6])], 2, false);
        assert_eq!(h.rows, vec![v(&[1, 2])]);
    }

    #[test]
    fn transform_reproduces_rows() {
        let gens = vec![v(&[6, 4, 2]), v(&[3, 9, 1]), v(&[5, 5, 5]), v(&[0, 7, 3])];
        let h = hnf(&gens, 3, true);
        let u = h.transform.unwrap();
        for (row, urow) in h.rows.iter().zip(&u) {
            let mut acc = v(&[0, 0, 0]);
            for (g, c) in gens.iter().zip(urow) {
                for (a, x) in acc.iter_mut().zip(g) {
                    *a += c * x;
                }
            }
            assert_eq!(&acc, row);
        }
    }

    #[test]
    fn bezout_combination() {
        let x = solve_combination(&[v(&[6]), v(&[10]), v(&[15])], &v(&[1])).unwrap();
        let s = &x[0] * 6 + &x[1] * 10 + &x[2] * 15;
        assert_eq!(s, BigInt::one());
        assert!(solve_combination(&[v(&[2, 0]), v(&[0, 2])], &v(&[1, 0])).is_none());
    }
}
