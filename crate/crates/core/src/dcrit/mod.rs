//! The determinant `𝔻(d) = det[F_i(j/d)]` for odd `d`, `1 ≤ i, j ≤ (d−1)/2`,
//! with `F_i(a) = 2⟨ia⟩ − 1` (or `0` when `ia ∈ Z`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::arith::is_prime_u64;
use crate::algebra::{AlgebraError, IntMatrix, RatMatrix};
use crate::stepfn::f_p;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DcritError {
    #[error("d = {0} must be odd and greater than 1")]
    InvalidDegree(u64),
    #[error("s = {0} must be an odd prime")]
    NotOddPrime(u64),
    #[error("expected {expected} sums, got {got}")]
    WrongSumCount { expected: usize, got: usize },
    #[error("the linear system is singular")]
    Singular,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn check_degree(d: u64) -> Result<usize, DcritError> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(DcritError::InvalidDegree(d));
    }
    Ok(((d - 1) / 2) as usize)
}

/// `d·F_i(j/d) = 2(ij mod d) − d`, or `0` when `d | ij`.
pub fn scaled_matrix(d: u64) -> Result<IntMatrix, DcritError> {
    let n = check_degree(d)?;
    let mut m = IntMatrix::zeros(n, n);
    for i in 1..=n as u64 {
        for j in 1..=n as u64 {
            let r = (i * j) % d;
            let v = if r == 0 { 0 } else { 2 * r as i64 - d as i64 };
            m.set(i as usize - 1, j as usize - 1, BigInt::from(v));
        }
    }
    Ok(m)
}

/// The matrix `[F_i(j/d)]` with exact rational entries.
pub fn d_matrix(d: u64) -> Result<RatMatrix, DcritError> {
    let m = scaled_matrix(d)?;
    let den = BigInt::from(d);
    let rows = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::new(x, den.clone())).collect())
        .collect();
    Ok(RatMatrix::from_rows(rows)?)
}

/// `𝔻(d)`, as the Bareiss determinant of the scaled matrix over `d^n`.
pub fn d_determinant(d: u64) -> Result<BigRational, DcritError> {
    let n = check_degree(d)?;
    let det = scaled_matrix(d)?.determinant()?;
    Ok(BigRational::new(det, Pow::pow(BigInt::from(d), n as u32)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub d: u64,
    pub nonzero: bool,
    /// Decimal digits in the numerator of `𝔻(d)` (0 when it vanishes).
    pub numerator_digits: usize,
}

/// `𝔻(d)` for every odd `3 ≤ d ≤ d_max`, computed in parallel and returned
/// in increasing `d`.
pub fn scan(d_max: u64) -> Result<Vec<ScanRow>, DcritError> {
    let ds: Vec<u64> = (3..=d_max).step_by(2).collect();
    ds.par_iter()
        .map(|&d| {
            let v = d_determinant(d)?;
            Ok(ScanRow {
                d,
                nonzero: !v.is_zero(),
                numerator_digits: if v.is_zero() { 0 } else { v.numer().abs().to_string().len() },
            })
        })
        .collect()
}

/// Odd `d ≤ d_max` with `𝔻(d) = 0`; expected to be empty.
pub fn conjecture_scan(d_max: u64) -> Result<Vec<u64>, DcritError> {
    Ok(scan(d_max)?.into_iter().filter(|r| !r.nonzero).map(|r| r.d).collect())
}

/// `|𝔻(s)|·s / 2^{(s−3)/2}` for an odd prime `s`; equals the relative class
/// number of `Q(ζ_s)`.
pub fn class_number_ratio(s: u64) -> Result<BigRational, DcritError> {
    if s < 3 || !is_prime_u64(s) {
        return Err(DcritError::NotOddPrime(s));
    }
    let det = d_determinant(s)?.abs();
    let pow2 = Pow::pow(BigInt::from(2), ((s - 3) / 2) as u32);
    Ok(det * BigRational::from_integer(BigInt::from(s)) / BigRational::from_integer(pow2))
}

/// Solve `Σ_j a_j F_p(j/d) = Σ_p − p·∫σ` for the coefficients `a_j` of
/// `σ = Σ_j a_j S_{j/d}`, given one sum per row. With the residues of the
/// `p` equal to `1, …, (d−1)/2` the matrix is the one defining `𝔻(d)`.
pub fn recover_coefficients(
    d: u64,
    sums: &[(i64, BigRational)],
    integral: &BigRational,
) -> Result<Vec<BigRational>, DcritError> {
    let n = check_degree(d)?;
    if sums.len() != n {
        return Err(DcritError::WrongSumCount {
            expected: n,
            got: sums.len(),
        });
    }
    let rows: Vec<Vec<BigRational>> = sums
        .iter()
        .map(|(p, _)| {
            (1..=n as i64)
                .map(|j| f_p(*p, &BigRational::new(j.into(), BigInt::from(d))))
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = sums
        .iter()
        .map(|(p, s)| s - integral * BigRational::from_integer(BigInt::from(*p)))
        .collect();
    RatMatrix::from_rows(rows)?.solve(&rhs).map_err(|e| match e {
        AlgebraError::Singular => DcritError::Singular,
        other => DcritError::Algebra(other),
    })
}
