//! Garside machinery for `B_n`: left normal forms, word equality, the
//! half twist `Δ`, positive decompositions and conjugacy keys. Handle
//! reduction is kept alongside as an independent solution of the word
//! problem.

mod conjugacy;
mod handle;
mod normal_form;
mod perm;

use thiserror::Error;

use crate::braid::{BraidError, BraidWord};

pub use conjugacy::{
    conj_key, minimal_summit_conjugator, summit_representative, to_super_summit, ConjKey,
    Conjugate, SuperSummitSet,
};
pub use handle::{handle_reduce, is_trivial_by_handles};
pub use normal_form::NormalForm;
pub use perm::PermutationBraid;

/// Default cap on super summit set sizes.
pub const DEFAULT_SWEEP_LIMIT: usize = 5000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GarsideError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("super summit sweep exceeded {limit} elements")]
    SweepBudgetExceeded { limit: usize },
}

pub fn normal_form(word: &BraidWord) -> NormalForm {
    NormalForm::of_word(word)
}

/// Equality in `B_n`.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(NormalForm::of_word(a) == NormalForm::of_word(b))
}

/// The positive half twist `Δ = (σ₁)(σ₂σ₁)⋯(σ_{n−1}⋯σ₁)`.
pub fn half_twist(n: usize) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for top in 1..n as i32 {
        letters.extend((1..=top).rev());
    }
    BraidWord::new(n, letters)
}

/// `b = Δ^{−k} · b₊` with `b₊` positive and `k ≥ 0` minimal.
pub fn positive_decomposition(word: &BraidWord) -> (u64, BraidWord) {
    let nf = NormalForm::of_word(word);
    if nf.inf() >= 0 {
        (0, nf.to_word())
    } else {
        ((-nf.inf()) as u64, nf.positive_part_word())
    }
}
