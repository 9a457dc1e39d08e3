use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry ({row},{col}) = {value} is out of range for order {order}")]
    Range {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("malformed table: {0}")]
    Shape(String),

    #[error("associativity fails at ({i},{j},{k}): ({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}")]
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        left: usize,
        right: usize,
    },

    #[error("{what}: order {order} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        order: usize,
        bound: usize,
    },

    #[error("subset {0:?} is not closed under the action")]
    Subact(Vec<usize>),

    #[error("the action is not compatible: a(st) != (as)t at a={a}, s={s}, t={t}")]
    ActCompatibility { a: usize, s: usize, t: usize },

    #[error("the one-element semigroup is excluded from uniformity questions")]
    DegenerateOrder,

    #[error("regular uniform semigroup matches no known structure: {0}")]
    ClassificationGap(String),

    #[error("criterion inapplicable: {0}")]
    CriterionInapplicable(String),

    #[error("sandwich matrix is not regular: {0}")]
    Regularity(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
