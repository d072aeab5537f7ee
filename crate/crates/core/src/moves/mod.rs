//! Markov moves on braid words and replayable move certificates.
//!
//! Every move that forgets information (destabilizations, rewrites) carries
//! the resulting word as a witness, and its legality is an equality check in
//! the braid group.

mod certificate;
pub(crate) mod destab;

use std::fmt;

use thiserror::Error;

use crate::braid::{BraidError, BraidWord};
use crate::garside::equal;

pub use certificate::{parse_certificate, write_certificate, CertificateError, MoveCertificate};
pub use destab::{destab_candidates, DestabCandidate, DESTAB_CONJUGATION_DEPTH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Conjugation, positive stabilization and their inverses.
    Transversal,
    /// Negative stabilizations allowed as well.
    Topological,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Transversal => "transversal",
            Mode::Topological => "topological",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "transversal" => Ok(Mode::Transversal),
            "topological" => Ok(Mode::Topological),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `b ↦ a·b·a⁻¹` with `a = σ_{|g|}^{sign g}`.
    Conj(i32),
    /// `b ↦ b·σ_n`, from `B_n` to `B_{n+1}`.
    StabPos,
    /// Inverse of `StabPos`; legal iff the word equals `w·σ_n`.
    DestabPos(BraidWord),
    /// `b ↦ σ_{n−1}⋯σ_k · b · σ_k⁻¹⋯σ_{n−1}⁻¹ · σ_n⁻¹` for `1 ≤ k ≤ n`.
    StabNeg(usize),
    /// Inverse of `StabNeg(n)`; legal iff the word equals `w·σ_n⁻¹`.
    DestabNeg(BraidWord),
    /// Replaces the word by an equal word.
    Rewrite(BraidWord),
}

impl Move {
    pub fn is_negative(&self) -> bool {
        matches!(self, Move::StabNeg(_) | Move::DestabNeg(_))
    }

    /// True for moves that change the strand count.
    pub fn is_markov(&self) -> bool {
        !matches!(self, Move::Conj(_) | Move::Rewrite(_))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn tail(f: &mut fmt::Formatter<'_>, head: &str, w: &BraidWord) -> fmt::Result {
            if w.is_empty() {
                write!(f, "{head} :")
            } else {
                write!(f, "{head} : {w}")
            }
        }
        match self {
            Move::Conj(g) => write!(f, "conj {g}"),
            Move::StabPos => write!(f, "stab+"),
            Move::DestabPos(w) => tail(f, "destab+", w),
            Move::StabNeg(k) => write!(f, "stab- k={k}"),
            Move::DestabNeg(w) => tail(f, "destab-", w),
            Move::Rewrite(w) => tail(f, "rewrite", w),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("generator {index} out of range for B_{strands}")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("witness has {witness} strands, expected {expected}")]
    WitnessStrands { witness: usize, expected: usize },
    #[error("word is not equal to the witness {expected}")]
    IllegalWitness { expected: String },
    #[error("cannot destabilize B_1")]
    NothingToDestabilize,
    #[error("{0} is not allowed in transversal mode")]
    ModeViolation(String),
}

fn destabilize(b: &BraidWord, w: &BraidWord, sign: i32) -> Result<BraidWord, MoveError> {
    let n = b.strands();
    if n < 2 {
        return Err(MoveError::NothingToDestabilize);
    }
    if w.strands() != n - 1 {
        return Err(MoveError::WitnessStrands { witness: w.strands(), expected: n - 1 });
    }
    let mut expected = w.with_strands(n)?;
    expected.push(sign * (n as i32 - 1))?;
    if !equal(b, &expected)? {
        return Err(MoveError::IllegalWitness { expected: expected.to_string() });
    }
    Ok(w.clone())
}

/// Applies a move with every move permitted.
pub fn apply_move(b: &BraidWord, m: &Move) -> Result<BraidWord, MoveError> {
    let n = b.strands();
    match m {
        Move::Conj(g) => {
            if *g == 0 || g.unsigned_abs() as usize >= n {
                return Err(MoveError::IndexOutOfRange { index: i64::from(*g), strands: n });
            }
            let mut letters = Vec::with_capacity(b.len() + 2);
            letters.push(*g);
            letters.extend_from_slice(b.letters());
            letters.push(-g);
            Ok(BraidWord::new(n, letters)?)
        }
        Move::StabPos => {
            let mut out = b.with_strands(n + 1)?;
            out.push(n as i32)?;
            Ok(out)
        }
        Move::StabNeg(k) => {
            if *k < 1 || *k > n {
                return Err(MoveError::IndexOutOfRange { index: *k as i64, strands: n });
            }
            let top = n as i32 - 1;
            let k = *k as i32;
            let mut letters: Vec<i32> = (k..=top).rev().collect();
            letters.extend_from_slice(b.letters());
            letters.extend((k..=top).map(|g| -g));
            letters.push(-(n as i32));
            Ok(BraidWord::new(n + 1, letters)?)
        }
        Move::DestabPos(w) => destabilize(b, w, 1),
        Move::DestabNeg(w) => destabilize(b, w, -1),
        Move::Rewrite(w) => {
            if w.strands() != n {
                return Err(MoveError::WitnessStrands { witness: w.strands(), expected: n });
            }
            if !equal(b, w)? {
                return Err(MoveError::IllegalWitness { expected: w.to_string() });
            }
            Ok(w.clone())
        }
    }
}

/// Applies a move, rejecting negative moves in transversal mode.
pub fn apply_move_in(b: &BraidWord, m: &Move, mode: Mode) -> Result<BraidWord, MoveError> {
    if mode == Mode::Transversal && m.is_negative() {
        return Err(MoveError::ModeViolation(m.to_string()));
    }
    apply_move(b, m)
}

/// Applies a sequence of moves, returning every intermediate word
/// (`start` first).
pub fn replay(start: &BraidWord, moves: &[Move]) -> Result<Vec<BraidWord>, (usize, MoveError)> {
    let mut words = Vec::with_capacity(moves.len() + 1);
    words.push(start.clone());
    for (k, m) in moves.iter().enumerate() {
        let next = apply_move(words.last().unwrap(), m).map_err(|e| (k, e))?;
        words.push(next);
    }
    Ok(words)
}

/// Moves leading from the end of `moves` (applied to `start`) back to
/// `start`, ending on `start` letter for letter.
pub fn invert_moves(start: &BraidWord, moves: &[Move]) -> Result<Vec<Move>, (usize, MoveError)> {
    let words = replay(start, moves)?;
    let mut out = Vec::new();
    for (k, m) in moves.iter().enumerate().rev() {
        let before = &words[k];
        let after = &words[k + 1];
        match m {
            Move::Conj(g) => {
                out.push(Move::Conj(-g));
                out.push(Move::Rewrite(before.clone()));
            }
            Move::StabPos => out.push(Move::DestabPos(before.clone())),
            Move::DestabPos(_) => {
                out.push(Move::StabPos);
                let mut lifted = after.with_strands(before.strands()).expect("fits");
                lifted.push(after.strands() as i32).expect("fits");
                if &lifted != before {
                    out.push(Move::Rewrite(before.clone()));
                }
            }
            Move::StabNeg(kk) => {
                let n = before.strands();
                let conj: Vec<i32> = (*kk as i32..n as i32).collect();
                let mut inner = before.clone();
                for &g in &conj {
                    inner = apply_move(&inner, &Move::Conj(g)).expect("in range");
                }
                out.push(Move::DestabNeg(inner));
                out.extend(conj.iter().rev().map(|&g| Move::Conj(-g)));
                out.push(Move::Rewrite(before.clone()));
            }
            Move::DestabNeg(_) => {
                out.push(Move::StabNeg(after.strands()));
                let mut lifted = after.with_strands(before.strands()).expect("fits");
                lifted.push(-(after.strands() as i32)).expect("fits");
                if &lifted != before {
                    out.push(Move::Rewrite(before.clone()));
                }
            }
            Move::Rewrite(_) => out.push(Move::Rewrite(before.clone())),
        }
    }
    Ok(out)
}

/// Number of moves that change the strand count.
pub fn markov_length(moves: &[Move]) -> usize {
    moves.iter().filter(|m| m.is_markov()).count()
}

/// Conjugation steps taking `b` to `c⁻¹·b·c`.
pub fn conjugation_moves(c: &BraidWord) -> impl Iterator<Item = Move> + '_ {
    c.letters().iter().map(|&g| Move::Conj(-g))
}
