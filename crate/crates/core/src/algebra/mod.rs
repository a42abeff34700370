//! Exact arithmetic substrate.

pub mod arith;
pub mod cyclotomic;
pub mod interval;
pub mod matrix;
pub mod poly;
pub mod snf;
pub mod sturm;

pub use cyclotomic::{cyclotomic_polynomial, CosineTable, CycloRing};
pub use interval::{refine_sign, IntervalReal};
pub use matrix::{berkowitz, IntMatrix, RatMatrix, Ring};
pub use poly::{IntPoly, LaurentPoly, RatPoly};
pub use snf::{smith_normal_form, SmithForm};
pub use sturm::{isolate_roots, RootInterval, SturmChain};

use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("sign undecided after {bits} bits of precision")]
    Undecided { bits: u32 },
    #[error("matrix is singular")]
    Singular,
}

/// Shorthand for an integer rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Format a rational as `a` or `a/b`.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((a, b)) => {
            let a = a.trim().parse::<BigInt>().ok()?;
            let b = b.trim().parse::<BigInt>().ok()?;
            if b == BigInt::from(0) {
                None
            } else {
                Some(BigRational::new(a, b))
            }
        }
    }
}
