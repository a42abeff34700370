//! Knot expressions built from Seifert matrices, torus knots, mirrors,
//! connected sums, cables, Whitehead doubles and satellites.

mod composite;
mod parse;
mod tau;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;

use crate::algebra::{IntMatrix, LaurentPoly};
use crate::seifert::{SeifertError, SeifertMatrix, SignatureFunction, SignatureValue};

pub use composite::{CompositeKnot, Term};
pub use tau::TauResult;

/// Largest Seifert matrix synthesized for a torus knot.
pub const MAX_TORUS_DIM: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotExprError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("torus({p},{q}): parameters must be nonzero and coprime")]
    InvalidTorus { p: i64, q: i64 },
    #[error("torus({p},{q}) needs a {dim}x{dim} Seifert matrix (limit {MAX_TORUS_DIM})")]
    TorusTooLarge { p: i64, q: i64, dim: usize },
    #[error("cable({r},{s}): parameters must be coprime with r nonzero")]
    InvalidCable { r: i64, s: i64 },
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

/// A knot described by a composition tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotExpr {
    Unknot,
    Seifert(SeifertMatrix),
    /// `T(p, q)`; a negative product `pq` means the mirror of `T(|p|, |q|)`.
    Torus(i64, i64),
    Mirror(Box<KnotExpr>),
    Sum(Box<KnotExpr>, Box<KnotExpr>),
    /// `e_(r,s)`: `r` longitudes and `s` meridians.
    Cable(i64, i64, Box<KnotExpr>),
    /// `n`-twisted Whitehead double.
    Whitehead(Box<KnotExpr>, i64),
    /// Pattern, companion and winding number.
    Satellite(Box<KnotExpr>, Box<KnotExpr>, i64),
}

impl KnotExpr {
    pub fn parse(s: &str) -> Result<Self, KnotExprError> {
        parse::parse(s)
    }

    pub fn seifert(rows: &[&[i64]]) -> Result<Self, KnotExprError> {
        Ok(KnotExpr::Seifert(SeifertMatrix::from_rows(rows)?))
    }

    pub fn torus(p: i64, q: i64) -> Self {
        KnotExpr::Torus(p, q)
    }

    pub fn mirror(e: KnotExpr) -> Self {
        KnotExpr::Mirror(Box::new(e))
    }

    pub fn sum(a: KnotExpr, b: KnotExpr) -> Self {
        KnotExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn cable(r: i64, s: i64, e: KnotExpr) -> Self {
        KnotExpr::Cable(r, s, Box::new(e))
    }

    pub fn whitehead(e: KnotExpr, twists: i64) -> Self {
        KnotExpr::Whitehead(Box::new(e), twists)
    }

    pub fn satellite(pattern: KnotExpr, companion: KnotExpr, winding: i64) -> Self {
        KnotExpr::Satellite(Box::new(pattern), Box::new(companion), winding)
    }

    /// Check torus and cable parameters throughout the tree.
    pub fn validate(&self) -> Result<(), KnotExprError> {
        match self {
            KnotExpr::Unknot | KnotExpr::Seifert(_) => Ok(()),
            KnotExpr::Torus(p, q) => {
                if *p == 0 || *q == 0 || p.gcd(q) != 1 {
                    return Err(KnotExprError::InvalidTorus { p: *p, q: *q });
                }
                let dim = torus_dim(*p, *q);
                if dim > MAX_TORUS_DIM {
                    return Err(KnotExprError::TorusTooLarge { p: *p, q: *q, dim });
                }
                Ok(())
            }
            KnotExpr::Mirror(e) | KnotExpr::Whitehead(e, _) => e.validate(),
            KnotExpr::Sum(a, b) | KnotExpr::Satellite(a, b, _) => {
                a.validate()?;
                b.validate()
            }
            KnotExpr::Cable(r, s, e) => {
                if *r == 0 || r.gcd(s) != 1 {
                    return Err(KnotExprError::InvalidCable { r: *r, s: *s });
                }
                KnotExpr::Torus(*r, *s).validate()?;
                e.validate()
            }
        }
    }

    /// A Seifert matrix when the expression has one built in: leaves, torus
    /// knots, mirrors, sums, Whitehead doubles and cables with one strand.
    pub fn seifert_of(&self) -> Option<SeifertMatrix> {
        match self {
            KnotExpr::Unknot => Some(SeifertMatrix::unknot()),
            KnotExpr::Seifert(v) => Some(v.clone()),
            KnotExpr::Torus(p, q) => torus_seifert(*p, *q).ok(),
            KnotExpr::Mirror(e) => e.seifert_of().map(|v| v.mirror()),
            KnotExpr::Sum(a, b) => Some(a.seifert_of()?.block_sum(&b.seifert_of()?)),
            KnotExpr::Whitehead(_, n) => Some(twist_seifert(*n)),
            // T(1, s) is trivial, so a one-strand cable is the companion
            KnotExpr::Cable(r, _, e) if r.abs() == 1 => e.seifert_of(),
            KnotExpr::Cable(..) | KnotExpr::Satellite(..) => None,
        }
    }

    /// Flatten into scaled leaf terms.
    pub fn composite(&self) -> Result<CompositeKnot, KnotExprError> {
        self.validate()?;
        CompositeKnot::new(self)
    }

    pub fn signature_at(&self, x: &BigRational) -> Result<SignatureValue, KnotExprError> {
        self.composite()?.signature_at(x)
    }

    pub fn signature_function(&self) -> Result<SignatureFunction, KnotExprError> {
        self.composite()?.signature_function()
    }

    pub fn alexander(&self) -> Result<LaurentPoly, KnotExprError> {
        Ok(self.composite()?.alexander())
    }

    pub fn tau(&self) -> TauResult {
        tau::tau(self)
    }
}

impl FromStr for KnotExpr {
    type Err = KnotExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => write!(f, "unknot"),
            KnotExpr::Seifert(v) => write!(f, "seifert({v})"),
            KnotExpr::Torus(p, q) => write!(f, "torus({p},{q})"),
            KnotExpr::Mirror(e) => write!(f, "mirror({e})"),
            KnotExpr::Sum(a, b) => write!(f, "sum({a},{b})"),
            KnotExpr::Cable(r, s, e) => write!(f, "cable({r},{s},{e})"),
            KnotExpr::Whitehead(e, n) => write!(f, "wh({e},{n})"),
            KnotExpr::Satellite(p, c, n) => write!(f, "satellite({p},{c},{n})"),
        }
    }
}

fn torus_dim(p: i64, q: i64) -> usize {
    (p.unsigned_abs() as usize).saturating_sub(1) * (q.unsigned_abs() as usize).saturating_sub(1)
}

/// Genus-one Seifert matrix `[[-1, 1], [0, n]]` of the `n`-twisted double.
pub fn twist_seifert(n: i64) -> SeifertMatrix {
    SeifertMatrix::from_rows(&[[-1, 1], [0, n]]).expect("det(V - V^t) = 1")
}

/// Seifert matrix `−(A_{p−1} ⊗ A_{q−1})` of the fiber surface of `T(p, q)`,
/// where `A_k` is the `k×k` upper bidiagonal matrix with `1` on the diagonal
/// and `−1` above it. Negative `pq` gives the mirror.
pub fn torus_seifert(p: i64, q: i64) -> Result<SeifertMatrix, KnotExprError> {
    KnotExpr::Torus(p, q).validate()?;
    let (a, b) = (p.unsigned_abs() as usize, q.unsigned_abs() as usize);
    if a == 1 || b == 1 {
        return Ok(SeifertMatrix::unknot());
    }
    let v = bidiagonal(a - 1).kronecker(&bidiagonal(b - 1)).neg();
    let v = SeifertMatrix::new(v)?;
    Ok(if (p < 0) != (q < 0) { v.mirror() } else { v })
}

fn bidiagonal(k: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(k);
    for i in 0..k.saturating_sub(1) {
        m.set(i, i + 1, (-1).into());
    }
    m
}
