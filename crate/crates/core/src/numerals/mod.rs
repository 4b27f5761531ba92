//! Number words, mixed radices and finger counting.
//!
//! Number-word systems are loaded from JSON documents; ten are bundled.

mod phalanx;
mod radix;
mod system;

use thiserror::Error;

pub use phalanx::{phalanx_gesture, PhalanxGesture, FINGERS, MAX_GESTURE};
pub use radix::{capacity, from_mixed_radix, to_mixed_radix, MixedRadixDigits};
pub use system::{
    bundled, bundled_names, from_words, from_words_in, load_system, to_words, to_words_in,
    Construction, Gloss, NumeralSystem, Words,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumeralError {
    #[error("{n} is outside 1..={max_supported}")]
    OutOfRange { n: u64, max_supported: u64 },
    #[error("{n} is not covered by this system (supported: {domain})")]
    NotInDomain { n: u64, domain: String },
    #[error("system {system} has no rule for {n}")]
    Unsupported { system: String, n: u64 },
    #[error("unparseable number words: first unmatched token {token:?} at position {position}")]
    Unparseable { token: String, position: usize },
    #[error("malformed numeral system document at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid numeral system: {0}")]
    Invalid(String),
    #[error("unknown numeral system {0:?}")]
    UnknownSystem(String),
    #[error("unknown register {0:?}")]
    UnknownRegister(String),
    #[error("{n} does not fit bases {bases:?} (capacity {capacity})")]
    Overflow {
        n: u64,
        bases: Vec<u64>,
        capacity: u128,
    },
    #[error("invalid digits: {0}")]
    InvalidDigits(String),
    #[error("{0} is outside the gesture range 1..=60")]
    GestureOutOfRange(u64),
}
