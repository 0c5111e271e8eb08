use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(√5)")]
    DivisionByZero,

    #[error("cannot parse `{input}` as an element of Q(√5)")]
    ScalarParse { input: String },

    #[error("matrix {0} is not in SL2(F5)")]
    NotInSl2(String),

    #[error("internal error: {0}")]
    Internal(String),

    /// A class function whose inner products with the irreducible rows are
    /// not all non-negative integers.
    #[error("not a character; inner products with the irreducible rows: {products}")]
    NotACharacter { products: String },

    #[error("expected a 2-dimensional character, got dimension {dimension}")]
    NotTwoDimensional { dimension: String },

    #[error("exponent {exponent} has the wrong parity for base {base} (center of order 2m, m = {m})")]
    Parity { base: String, exponent: u32, m: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown form `{0}`")]
    UnknownForm(String),

    #[error("inconsistent fact ledger: {0}")]
    InconsistentLedger(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
