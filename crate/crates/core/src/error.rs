use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("gram matrix is degenerate (determinant 0)")]
    Degenerate,

    #[error("declared signature ({0}, {1}) does not match gram signature ({2}, {3})")]
    SignatureMismatch(usize, usize, usize, usize),

    #[error("linear part of {0} is not an isometry of the form")]
    NotIsometry(String),

    #[error("affine maps belong to different forms")]
    FormMismatch,

    #[error("subspace is not totally isotropic")]
    NotTotallyIsotropic,

    #[error("word enumeration exceeded the budget of {0} elements")]
    WordBudgetExceeded(usize),

    #[error("abelianness criteria disagree: {first} = {first_value}, {second} = {second_value}")]
    CriteriaDisagree {
        first: &'static str,
        first_value: bool,
        second: &'static str,
        second_value: bool,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("isotropic witness construction failed at step `{0}`")]
    Witness(String),

    #[error("infeasible sampling parameters: {0}")]
    Infeasible(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
