//! Braid words and closure invariants.

mod closure;
mod io;
mod word;

use thiserror::Error;

pub use closure::{ClosurePermutation, LinkingMatrix};
pub use io::{parse_letters, read_braid, write_braid};
pub(crate) use io::{parse_strands, strip_comment};
pub use word::{BraidWord, MAX_STRANDS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("{strands} strands exceeds the supported maximum of {max}")]
    TooManyStrands { strands: usize, max: usize },
    #[error("letter {letter} is not a generator of B_{strands}")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("strand {strand} out of range for B_{strands}")]
    StrandOutOfRange { strand: usize, strands: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
