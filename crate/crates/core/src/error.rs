use thiserror::Error;

/// Everything that can go wrong across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty d-sequence")]
    EmptySequence,
    #[error("d-sequence must start with 1 (index 0 holds {0})")]
    FirstNotOne(u32),
    #[error("d-sequence is not strictly increasing at index {index}")]
    NotIncreasing { index: usize },
    #[error("d-sequence divisibility fails at index {index}: {prev} does not divide {value}")]
    NotDivisible { index: usize, prev: u32, value: u32 },
    #[error("value {0} exceeds the supported range 0..=2^31-1")]
    OutOfRange(u64),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("digit {index} = {digit} violates the bound of the d-sequence")]
    DigitBound { index: usize, digit: u32 },
    #[error("precondition {a} <=_d {b} fails")]
    NotBelow { a: u32, b: u32 },
    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("variable index {index} outside 1..={n}")]
    VariableRange { index: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("the zero ideal is not allowed in {0}")]
    ZeroIdeal(&'static str),
    #[error("the unit ideal is not allowed in {0}")]
    UnitIdeal(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("ideal is not of Borel type")]
    NotBorelType,
    #[error("no stable truncation found in degrees {from}..={to}")]
    NoStableTruncation { from: u32, to: u32 },
    #[error("Betti table up to degree {max_degree} is not certified; at least {needed} is required")]
    Uncertified { max_degree: u32, needed: u32 },
    #[error("characteristic must be 0 or a prime below 2^32, got {0}")]
    BadCharacteristic(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
