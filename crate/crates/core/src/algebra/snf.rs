//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...`, length `min(rows, cols)`, nonnegative.
    pub diagonal: Vec<BigInt>,
    /// Left transform, `rows x rows`.
    pub u: IntMatrix,
    /// Right transform, `cols x cols`.
    pub w: IntMatrix,
}

impl SmithForm {
    /// Invariant factors other than 1, with 0 standing for a free summand.
    /// Zero rows beyond `cols` (for wide/tall matrices) are not included.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Computes `D = U·M·W` in Smith normal form.
///
/// Pivots on the entry of smallest absolute value to keep coefficients small.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut w = IntMatrix::identity(c);
    let n = r.min(c);
    for t in 0..n {
        // find smallest nonzero entry in the trailing block
        let Some((pi, pj)) = smallest_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            // clear column t below the pivot
            for i in t + 1..r {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-&q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..c {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &-&q);
                w.add_col_multiple(j, t, &-&q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = smallest_in_cross(&d, t);
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                w.swap_cols(t, pj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            let piv = d.get(t, t).clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let diagonal = (0..n).map(|i| d.get(i, i).clone()).collect();
    SmithForm { diagonal, u, w }
}

fn smallest_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|b| a < b.2) {
                let one = a.is_one();
                best = Some((i, j, a));
                if one {
                    let b = best.unwrap();
                    return Some((b.0, b.1));
                }
            }
        }
    }
    best.map(|b| (b.0, b.1))
}

/// Smallest nonzero entry among column `t` and row `t` of the trailing block.
fn smallest_in_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t, d.get(t, t).abs());
    for i in t + 1..d.rows() {
        let v = d.get(i, t);
        if !v.is_zero() && v.abs() < best.2 {
            best = (i, t, v.abs());
        }
    }
    for j in t + 1..d.cols() {
        let v = d.get(t, j);
        if !v.is_zero() && v.abs() < best.2 {
            best = (t, j, v.abs());
        }
    }
    (best.0, best.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        let prod = s.u.mul(m).mul(&s.w);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let expect = if i == j {
                    s.diagonal[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(prod.get(i, j), &expect, "D = U M W fails for {m}");
            }
        }
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.w.determinant().unwrap().abs().is_one());
        for k in 1..s.diagonal.len() {
            let (a, b) = (&s.diagonal[k - 1], &s.diagonal[k]);
            assert!(b.is_zero() || (!a.is_zero() && b.is_multiple_of(a)));
        }
        s
    }

    #[test]
    fn small_examples() {
        assert_eq!(check(&IntMatrix::identity(2)).diagonal, vec![BigInt::from(1); 2]);
        let s = check(&IntMatrix::from_rows(&[[3, 0], [0, 3]]));
        assert_eq!(s.diagonal, vec![BigInt::from(3), BigInt::from(3)]);
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        let s = check(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        assert_eq!(
            s.diagonal,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        let s = check(&IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(0)]);
        assert_eq!(s.rank(), 1);
    }
}
