//! Exact knot-concordance invariants: Levine–Tristram signatures, Alexander
//! polynomials, signature conditions over cosets, branched-cover homology and
//! the step-function calculus behind the `𝔻(d)` determinants.

pub mod algebra;
pub mod seifert;
pub mod knotexpr;
pub mod conditions;
pub mod stepfn;
pub mod dcrit;
pub mod covers;
mod error;

pub use algebra::{IntMatrix, IntPoly, LaurentPoly, RatMatrix};
pub use conditions::{check_averaging, check_signature_conditions, coset_decompose, Verdict};
pub use covers::{homology, metabolizers, CoverError, Homology};
pub use dcrit::{d_determinant, DcritError};
pub use error::Error;
pub use knotexpr::{CompositeKnot, KnotExpr, KnotExprError, TauResult};
pub use seifert::{SeifertError, SeifertMatrix, SignatureFunction, SignatureValue};
pub use stepfn::{StepFnError, StepFunction};

pub type Result<T, E = Error> = std::result::Result<T, E>;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

pub(crate) fn serde_rational<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&algebra::fmt_rational(q))
}

/// Serializes a doubled value as the rational it stands for.
pub(crate) fn serde_halved<S: Serializer>(d: &i64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&algebra::fmt_rational(&BigRational::new((*d).into(), 2.into())))
}

pub(crate) fn serde_halved_vec<S: Serializer>(v: &[i64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| algebra::fmt_rational(&BigRational::new((*d).into(), 2.into()))))
}

pub(crate) fn serde_bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

pub(crate) fn serde_opt_display<S: Serializer, T: std::fmt::Display>(
    v: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}
