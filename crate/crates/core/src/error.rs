use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A polynomial expected to lie in `Q[x]` kept a nonzero `√d` part.
    #[error("coefficient of x^{degree} has a nonzero irrational part: {coefficient}")]
    NonRealResidue { degree: usize, coefficient: String },

    #[error("discriminant {0} does not reduce to a square times -1 or -3")]
    UnsupportedDiscriminant(String),

    #[error("discriminant b^2 - 4c is zero")]
    ZeroDiscriminant,

    #[error("{what}: n = {n} is outside the allowed parity/range")]
    BadParity { what: &'static str, n: usize },

    #[error("{what}: m = {m} is not supported")]
    BadM { what: &'static str, m: usize },

    #[error("{what}: n = {n} is not supported")]
    BadN { what: &'static str, n: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("malformed rational `{0}`")]
    ParseRational(String),
}
