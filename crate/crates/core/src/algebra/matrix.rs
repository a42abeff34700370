//! Dense integer and rational matrices, Bareiss determinants and the
//! division-free Berkowitz characteristic polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Build from rows of machine integers. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.as_ref().len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged matrix rows");
            data.extend(row.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(AlgebraError::Dimension("ragged matrix rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, o: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, o: &IntMatrix) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kronecker(&self, o: &IntMatrix) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.set(i * o.rows + k, j * o.cols + l, a * o.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&IntMatrix]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copy `b` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, b: &IntMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * c;
            *self.entry_mut(dst, j) += v;
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * c;
            *self.entry_mut(i, dst) += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
    pub fn determinant(&self) -> Result<BigInt, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss(self.to_rows()))
    }

    /// Reduce every entry modulo `p`, into `0..p`.
    pub fn mod_p(&self, p: u64) -> Vec<Vec<u64>> {
        let bp = BigInt::from(p);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| {
                        let r = x.mod_floor(&bp);
                        u64::try_from(r).expect("residue fits")
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Bareiss elimination on an owned square array.
pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(AlgebraError::Dimension("ragged matrix rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = a * o.get(k, j);
                    out.data[i * o.cols + j] += v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Entries as integers, when all denominators are 1.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().any(|x| !x.is_integer()) {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.to_integer()).collect(),
        })
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<RatMatrix, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for k in 0..n {
            let piv = (k..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(AlgebraError::Singular)?;
            a.swap(k, piv);
            inv.swap(k, piv);
            let p = a[k][k].clone();
            for j in 0..n {
                a[k][j] /= &p;
                inv[k][j] /= &p;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                    let t = &f * &inv[k][j];
                    inv[i][j] -= t;
                }
            }
        }
        RatMatrix::from_rows(inv)
    }

    /// Solve `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[BigRational]) -> Result<Vec<BigRational>, AlgebraError> {
        if b.len() != self.rows {
            return Err(AlgebraError::Dimension(format!(
                "right-hand side has {} entries, expected {}",
                b.len(),
                self.rows
            )));
        }
        Ok(self.inverse()?.mul_vec(b))
    }
}

/// Minimal commutative ring interface used by the Berkowitz algorithm.
pub trait Ring {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// The ring of integers.
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
}

/// Coefficients of `det(λI − A)`, highest degree first (so the first entry is 1).
///
/// Division-free, so it works over any commutative ring.
pub fn berkowitz<R: Ring>(ring: &R, a: &[Vec<R::Elem>]) -> Vec<R::Elem> {
    let n = a.len();
    if n == 0 {
        return vec![ring.one()];
    }
    let mut vec = vec![ring.one(), ring.neg(&a[n - 1][n - 1])];
    for k in (0..n - 1).rev() {
        let m = n - k - 1;
        // Toeplitz column: 1, -a_kk, -R C, -R A1 C, ..., -R A1^{m-1} C
        let mut t = Vec::with_capacity(m + 2);
        t.push(ring.one());
        t.push(ring.neg(&a[k][k]));
        let mut w: Vec<R::Elem> = (0..m).map(|i| a[k + 1 + i][k].clone()).collect();
        for step in 0..m {
            let mut rw = ring.zero();
            for (j, wj) in w.iter().enumerate() {
                rw = ring.add(&rw, &ring.mul(&a[k][k + 1 + j], wj));
            }
            t.push(ring.neg(&rw));
            if step + 1 < m {
                w = (0..m)
                    .map(|i| {
                        let mut s = ring.zero();
                        for (j, wj) in w.iter().enumerate() {
                            s = ring.add(&s, &ring.mul(&a[k + 1 + i][k + 1 + j], wj));
                        }
                        s
                    })
                    .collect();
            }
        }
        let mut next = Vec::with_capacity(m + 2);
        for i in 0..m + 2 {
            let mut s = ring.zero();
            for (j, vj) in vec.iter().enumerate() {
                if j <= i {
                    s = ring.add(&s, &ring.mul(&t[i - j], vj));
                }
            }
            next.push(s);
        }
        vec = next;
    }
    vec
}

/// Number of sign changes in a sequence, ignoring zeros.
pub fn sign_variations(signs: impl IntoIterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[allow(dead_code)]
pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_examples() {
        assert_eq!(IntMatrix::identity(2).determinant().unwrap(), BigInt::from(1));
        let m = IntMatrix::from_rows(&[[2, 1], [1, 2]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(3));
        let m = IntMatrix::from_rows(&[[-3, -1], [-1, 3]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-10));
        let m = IntMatrix::from_rows(&[[0, 1, 2], [3, 0, 1], [1, 1, 0]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(7));
        assert!(IntMatrix::zeros(2, 3).determinant().is_err());
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::from(1));
    }

    #[test]
    fn berkowitz_matches_known_charpoly() {
        // [[2,1],[1,2]] has char poly λ^2 - 4λ + 3
        let a = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(2)],
        ];
        let c = berkowitz(&Integers, &a);
        assert_eq!(c, vec![BigInt::from(1), BigInt::from(-4), BigInt::from(3)]);
        let m = IntMatrix::from_rows(&[[1, 2, 0], [3, -1, 4], [0, 5, 2]]);
        let c = berkowitz(&Integers, &m.to_rows());
        // constant term is (-1)^n det
        assert_eq!(c[3], -m.determinant().unwrap());
        assert_eq!(c[1], BigInt::from(-2));
    }

    #[test]
    fn rational_inverse() {
        let m = IntMatrix::from_rows(&[[2, 1], [1, 1]]).to_rat();
        let inv = m.inverse().unwrap();
        assert_eq!(inv.to_integer().unwrap(), IntMatrix::from_rows(&[[1, -1], [-1, 2]]));
        assert!(IntMatrix::from_rows(&[[1, 2], [2, 4]]).to_rat().inverse().is_err());
    }

    #[test]
    fn kronecker_shape() {
        let a = IntMatrix::from_rows(&[[1, 2]]);
        let b = IntMatrix::identity(2);
        let k = a.kronecker(&b);
        assert_eq!(k, IntMatrix::from_rows(&[[1, 0, 2, 0], [0, 1, 0, 2]]));
    }

    #[test]
    fn variations() {
        assert_eq!(sign_variations([1, -1, 0, 1]), 2);
        assert_eq!(sign_variations([0, 0]), 0);
    }
}
