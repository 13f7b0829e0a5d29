use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while validating or converting invariants.
///
/// Positions in letter-code errors are 1-based, counting from the left end of
/// the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A small growth vector breaks one of its structural rules.
    MalformedSgv(String),
    /// A derived vector breaks one of its structural rules.
    MalformedDerived(String),
    /// A branch support breaks one of its structural rules.
    MalformedBranch(String),
    /// A code word contains a letter outside {R, V, T}.
    BadAlphabet { position: usize, found: char },
    /// The letter T follows R, which the code grammar forbids.
    TAfterR { position: usize },
    /// A code with critical letters must start with at least two R letters.
    MissingLeadingRr { position: usize },
    /// No code exists for this derived vector: a coding relation failed.
    NotRealizable(String),
    /// Decoding a word gave a vector that encodes back to a different word.
    RoundTripFailure { code: String },
    /// The germ is immersed (normal form (t, 0)); no Puiseux data exists.
    NotCritical(String),
    /// Truncation needs at least two characteristic stages.
    SingleStage,
    /// The word contains no V, so it has no critical-string decomposition.
    NoCriticalLetters,
    /// A critical string must start with V and use only the letters V and T.
    MalformedCriticalString(String),
    /// A candidate Puiseux characteristic fails the gcd-chain rules.
    InvalidPuiseux(String),
    /// The branch admits a reparametrization: gcd of all exponents exceeds 1.
    BadlyParametrized { gcd: u64 },
    /// Exact integer arithmetic left the u64 range.
    Overflow(String),
    /// Free-form failure while reading one of the text formats.
    Parse(String),
    /// An operation was called outside its stated domain.
    Precondition(String),
    /// An underlying I/O or serialization failure.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedSgv(msg) => write!(f, "malformed small growth vector: {msg}"),
            Error::MalformedDerived(msg) => write!(f, "malformed derived vector: {msg}"),
            Error::MalformedBranch(msg) => write!(f, "malformed branch support: {msg}"),
            Error::BadAlphabet { position, found } => {
                write!(f, "invalid letter '{found}' at position {position}: codes use only R, V, T")
            }
            Error::TAfterR { position } => {
                write!(f, "letter T at position {position} follows R, which no code allows")
            }
            Error::MissingLeadingRr { position } => {
                write!(f, "position {position}: a code with critical letters must start with RR")
            }
            Error::NotRealizable(msg) => write!(f, "no code realizes this derived vector: {msg}"),
            Error::RoundTripFailure { code } => {
                write!(f, "decoding '{code}' gave a vector that does not encode back to it")
            }
            Error::NotCritical(msg) => write!(f, "not critical: {msg}"),
            Error::SingleStage => {
                write!(f, "the Puiseux characteristic has a single stage; nothing to truncate")
            }
            Error::NoCriticalLetters => {
                write!(f, "the word contains no V, so it has no critical-string decomposition")
            }
            Error::MalformedCriticalString(msg) => write!(f, "malformed critical string: {msg}"),
            Error::InvalidPuiseux(msg) => write!(f, "invalid Puiseux characteristic: {msg}"),
            Error::BadlyParametrized { gcd } => {
                write!(f, "badly parametrized branch: all exponents share the factor {gcd}")
            }
            Error::Overflow(what) => write!(f, "u64 overflow while computing {what}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
