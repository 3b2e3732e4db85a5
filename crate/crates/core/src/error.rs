use std::fmt;

use thiserror::Error;

use crate::asm::Position;

/// Which kind of line of a matrix an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size must be at least 1")]
    EmptySize,

    #[error("expected a {expected}x{expected} matrix, got {rows} row(s) with {found} entries in row {row}")]
    NotSquare {
        expected: usize,
        rows: usize,
        row: usize,
        found: usize,
    },

    #[error("entry {value} at {at} is not one of -1, 0, 1")]
    BadEntry { at: Position, value: i64 },

    #[error("{line} {index} sums to {sum}, expected 1")]
    BadLineSum { line: Line, index: usize, sum: i64 },

    #[error("{line} {index} does not alternate in sign starting and ending with +1 (at {at})")]
    BadAlternation { line: Line, index: usize, at: Position },

    #[error("not a permutation of 1..{n}: {images:?}")]
    InvalidPermutation { n: usize, images: Vec<usize> },

    #[error("no removable -1 at {0}")]
    NotRemovable(Position),

    #[error("removing the -1 at {0} did not produce an alternating sign matrix")]
    BrokenRewrite(Position),

    #[error("size {n} exceeds the limit of {max}")]
    SizeTooLarge { n: usize, max: usize },

    #[error("invalid monotone triangle: {0}")]
    InvalidTriangle(String),

    #[error("triangle is not gapless with at most two values per column")]
    NotInBijectionDomain,

    #[error("invalid inversion sequence: {0:?}")]
    InvalidInversionSequence(Vec<usize>),

    #[error("inversion sequence {0:?} is not weakly increasing")]
    Contains10(Vec<usize>),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("{0} contains 312 or 321")]
    NotIn312And321Class(String),

    #[error("pattern set is empty")]
    EmptyPatternSet,

    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),

    #[error("Catalan number C_{0} does not fit in 64 bits")]
    Overflow(usize),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
