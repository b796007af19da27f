use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed input `{text}`")]
    MalformedLine { line: usize, text: String },
    #[error("poset is not graded: cover {lower} < {upper} does not raise rank by one")]
    NotGraded { lower: String, upper: String },
    #[error("poset is not bounded: {0}")]
    NotBounded(String),
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("operation requires a poset of rank at least one")]
    RankZeroInput,
    #[error("product operands must have rank at least one")]
    RankZeroOperand,
    #[error("elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("polynomial is not expressible in c and d")]
    NotCdExpressible,
    #[error("the constant quasisymmetric function has no ab-preimage")]
    NonPositiveDegree,
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}
