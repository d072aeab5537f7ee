//! Certificate text format:
//!
//! ```text
//! mode transversal
//! start n=4 : -1 2 -3
//! conj 3
//! destab+ : 2 -1 -2 -2
//! rewrite : -1 -2
//! end n=3 : -1 -2
//! ```
//!
//! Steps are `conj <±k>`, `stab+`, `destab+ : <w>`, `stab- k=<k>`,
//! `destab- : <w>` and `rewrite : <w>`. Witness strand counts follow from
//! the start and the steps before them. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use super::{apply_move_in, Mode, Move, MoveError};
use crate::braid::{parse_letters, parse_strands, strip_comment, BraidError, BraidWord};
use crate::garside::equal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveCertificate {
    pub mode: Mode,
    pub start: BraidWord,
    pub steps: Vec<Move>,
    pub end: BraidWord,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("step {step} ({text}): {source}")]
    Step {
        step: usize,
        text: String,
        source: MoveError,
    },
    #[error("final word {reached} (n={strands}) is not the stated end")]
    EndMismatch { reached: String, strands: usize },
}

impl CertificateError {
    /// Index of the first failing step, if a step failed.
    pub fn step(&self) -> Option<usize> {
        match self {
            CertificateError::Step { step, .. } => Some(*step),
            _ => None,
        }
    }
}

impl MoveCertificate {
    /// Replays every step. On success returns the final word.
    pub fn verify(&self) -> Result<BraidWord, CertificateError> {
        let mut cur = self.start.clone();
        for (step, m) in self.steps.iter().enumerate() {
            cur = apply_move_in(&cur, m, self.mode).map_err(|source| CertificateError::Step {
                step,
                text: m.to_string(),
                source,
            })?;
        }
        let same = cur.strands() == self.end.strands()
            && equal(&cur, &self.end).unwrap_or(false);
        if !same {
            return Err(CertificateError::EndMismatch {
                reached: cur.to_string(),
                strands: cur.strands(),
            });
        }
        Ok(cur)
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }

    pub fn markov_moves(&self) -> usize {
        super::markov_length(&self.steps)
    }
}

fn word_line(tag: &str, w: &BraidWord) -> String {
    if w.is_empty() {
        format!("{tag} n={} :", w.strands())
    } else {
        format!("{tag} n={} : {w}", w.strands())
    }
}

pub fn write_certificate(c: &MoveCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mode {}", c.mode.name());
    let _ = writeln!(out, "{}", word_line("start", &c.start));
    for m in &c.steps {
        let _ = writeln!(out, "{m}");
    }
    let _ = writeln!(out, "{}", word_line("end", &c.end));
    out
}

fn perr(line: usize, message: impl Into<String>) -> CertificateError {
    CertificateError::Parse { line, message: message.into() }
}

fn braid_err(line: usize) -> impl Fn(BraidError) -> CertificateError {
    move |e| match e {
        BraidError::Parse { line, message } => CertificateError::Parse { line, message },
        other => perr(line, other.to_string()),
    }
}

/// `<head> : <letters>` with the letter list possibly empty.
fn split_witness<'a>(rest: &'a str, line: usize, head: &str) -> Result<&'a str, CertificateError> {
    rest.trim()
        .strip_prefix(':')
        .ok_or_else(|| perr(line, format!("expected `{head} : <letters>`")))
}

/// `n=<n> : <letters>`.
fn parse_word_line(rest: &str, line: usize) -> Result<BraidWord, CertificateError> {
    let (n, letters) = rest
        .split_once(':')
        .ok_or_else(|| perr(line, "expected `n=<n> : <letters>`"))?;
    let n = parse_strands(n, line).map_err(braid_err(line))?;
    let letters = parse_letters(letters, line).map_err(braid_err(line))?;
    BraidWord::new(n, letters).map_err(braid_err(line))
}

pub fn parse_certificate(text: &str) -> Result<MoveCertificate, CertificateError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty());

    let (k, l) = lines.next().ok_or_else(|| perr(1, "empty certificate"))?;
    let mode = l
        .strip_prefix("mode")
        .ok_or_else(|| perr(k, "expected `mode <transversal|topological>`"))?
        .trim()
        .parse::<Mode>()
        .map_err(|e| perr(k, e))?;

    let (k, l) = lines.next().ok_or_else(|| perr(k, "missing start line"))?;
    let rest = l.strip_prefix("start").ok_or_else(|| perr(k, "expected `start n=<n> : <letters>`"))?;
    let start = parse_word_line(rest, k)?;

    let mut strands = start.strands();
    let mut steps = Vec::new();
    let mut end = None;
    for (k, l) in lines {
        if end.is_some() {
            return Err(perr(k, "content after the end line"));
        }
        let (head, rest) = match l.find(|c: char| c.is_whitespace() || c == ':') {
            Some(p) => (&l[..p], &l[p..]),
            None => (l, ""),
        };
        let witness = |n: usize| -> Result<BraidWord, CertificateError> {
            let letters = split_witness(rest, k, head)?;
            let letters = parse_letters(letters, k).map_err(braid_err(k))?;
            BraidWord::new(n, letters).map_err(braid_err(k))
        };
        let step = match head {
            "conj" => {
                let g = rest
                    .trim()
                    .parse::<i32>()
                    .map_err(|_| perr(k, format!("bad generator `{}`", rest.trim())))?;
                Move::Conj(g)
            }
            "stab+" => {
                strands += 1;
                Move::StabPos
            }
            "stab-" => {
                let value = rest
                    .trim()
                    .strip_prefix("k=")
                    .ok_or_else(|| perr(k, "expected `stab- k=<k>`"))?;
                let kk = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| perr(k, format!("bad index `{value}`")))?;
                strands += 1;
                Move::StabNeg(kk)
            }
            "destab+" | "destab-" => {
                if strands < 2 {
                    return Err(perr(k, "cannot destabilize B_1"));
                }
                strands -= 1;
                let w = witness(strands)?;
                if head == "destab+" {
                    Move::DestabPos(w)
                } else {
                    Move::DestabNeg(w)
                }
            }
            "rewrite" => Move::Rewrite(witness(strands)?),
            "end" => {
                end = Some(parse_word_line(rest, k)?);
                continue;
            }
            other => return Err(perr(k, format!("unknown step `{other}`"))),
        };
        steps.push(step);
    }
    let end = end.ok_or_else(|| perr(text.lines().count().max(1), "missing end line"))?;
    Ok(MoveCertificate { mode, start, steps, end })
}
