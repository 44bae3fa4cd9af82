use thiserror::Error;

/// Errors from parsing or constructing domain values.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid rank character `{0}`")]
    InvalidRank(char),
    #[error("invalid suit `{0}`")]
    InvalidSuit(String),
    #[error("invalid strain `{0}`")]
    InvalidStrain(String),
    #[error("invalid seat `{0}`")]
    InvalidSeat(String),
    #[error("invalid vulnerability code `{0}`")]
    InvalidVulnerability(String),
    #[error("hand needs 4 dot-separated suit groups, got {0}")]
    SuitGroupCount(usize),
    #[error("hand has {0} cards, expected 13")]
    CardCount(usize),
    #[error("duplicate card {0} in hand")]
    DuplicateCard(String),
    #[error("hands do not partition the 52-card deck")]
    NotAPartition,
    #[error("malformed deal line `{0}`")]
    MalformedDealLine(String),
    #[error("contract level {0} outside 1..=7")]
    BadLevel(u8),
    #[error("invalid distribution pattern `{0}`")]
    BadPattern(String),
    #[error("invalid label `{0}`")]
    BadLabel(String),
}
