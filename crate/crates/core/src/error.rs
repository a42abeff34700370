use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::conditions::ConditionsError;
use crate::covers::CoverError;
use crate::dcrit::DcritError;
use crate::knotexpr::KnotExprError;
use crate::seifert::SeifertError;
use crate::stepfn::StepFnError;

/// Any error from this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Knot(#[from] KnotExprError),
    #[error(transparent)]
    Conditions(#[from] ConditionsError),
    #[error(transparent)]
    StepFn(#[from] StepFnError),
    #[error(transparent)]
    Dcrit(#[from] DcritError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

impl Error {
    /// Whether the input failed to parse, as opposed to a mathematical
    /// precondition failing.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Knot(KnotExprError::Parse { .. }))
    }
}
