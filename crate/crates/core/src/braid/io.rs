//! Braid text format:
//!
//! ```text
//! n=4
//! -1 2 -3
//! ```
//!
//! `#` starts a comment. The letter line may be empty or absent.

use super::{BraidError, BraidWord};

fn parse_error(line: usize, message: impl Into<String>) -> BraidError {
    BraidError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a whitespace-separated list of signed integers.
pub fn parse_letters(text: &str, line: usize) -> Result<Vec<i32>, BraidError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<i32>()
                .map_err(|_| parse_error(line, format!("bad letter `{tok}`")))
        })
        .collect()
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

pub(crate) fn parse_strands(text: &str, line: usize) -> Result<usize, BraidError> {
    let value = text
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| parse_error(line, "expected `n=<int>`"))?;
    value
        .trim()
        .parse::<usize>()
        .map_err(|_| parse_error(line, format!("bad strand count `{value}`")))
}

pub fn read_braid(text: &str) -> Result<BraidWord, BraidError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n=<int>` header"))?;
    let strands = parse_strands(header, header_line)?;
    let mut letters = Vec::new();
    let mut letter_line = header_line;
    if let Some((k, l)) = lines.next() {
        letter_line = k;
        letters = parse_letters(l, k)?;
    }
    if let Some((k, _)) = lines.next() {
        return Err(parse_error(k, "unexpected content after the letter line"));
    }
    BraidWord::new(strands, letters).map_err(|e| match e {
        BraidError::Parse { .. } => e,
        other => parse_error(letter_line, other.to_string()),
    })
}

pub fn write_braid(word: &BraidWord) -> String {
    format!("n={}\n{}\n", word.strands(), word)
}
