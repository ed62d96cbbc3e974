//! The free Reynolds algebra: linear combinations of Reynolds words with
//! concatenation product and the operator `P`.

mod identities;
mod lincomb;
mod operator;

pub use identities::{
    multivariant_residual, reynolds_residual, splitting_left_residual, splitting_right_residual,
    star_product_free, truncated_series_residual,
};
pub use lincomb::{JsonTerm, LinComb, LinCombJson};
pub use operator::{apply_p, ReynoldsOperator};

use thiserror::Error;

use crate::words::{ParseError, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a Reynolds word")]
    NotReynolds(String),
    #[error("the multi-variant identity needs at least 2 arguments, got {0}")]
    TooFewArguments(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("{0}")]
    Format(String),
}
