use std::fmt;

use super::BraidError;

/// Largest strand count the library accepts. Permutation braids are stored
/// inline, so this bounds their size.
pub const MAX_STRANDS: usize = 32;

/// A word in the braid group `B_n`.
///
/// Letters are signed generator indices: `g > 0` is `σ_g`, `g < 0` is
/// `σ_{|g|}⁻¹`, with `1 ≤ |g| ≤ n − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if strands > MAX_STRANDS {
            return Err(BraidError::TooManyStrands {
                strands,
                max: MAX_STRANDS,
            });
        }
        if let Some(&g) = letters
            .iter()
            .find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands)
        {
            return Err(BraidError::LetterOutOfRange { letter: g, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word in `B_n`.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Builds a word whose letters are already known to be in range.
    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!((1..=MAX_STRANDS).contains(&strands));
        debug_assert!(letters
            .iter()
            .all(|&g| g != 0 && (g.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&g| g > 0)
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// Cancels adjacent `g, −g` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Exponent sum.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|&g| i64::from(g.signum())).sum()
    }

    /// Appends one letter. The letter must be in range.
    pub fn push(&mut self, g: i32) -> Result<(), BraidError> {
        if g == 0 || g.unsigned_abs() as usize >= self.strands {
            return Err(BraidError::LetterOutOfRange {
                letter: g,
                strands: self.strands,
            });
        }
        self.letters.push(g);
        Ok(())
    }

    /// The same letters viewed in `B_m` for `m ≥ n`.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Block-diagonal juxtaposition `self ⊕ other` on `n₁ + n₂` strands;
    /// the generators of `other` are shifted by `n₁`.
    pub fn juxtapose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        let shift = self.strands as i32;
        let letters = self
            .letters
            .iter()
            .copied()
            .chain(other.letters.iter().map(|&g| g + g.signum() * shift))
            .collect();
        BraidWord::new(self.strands + other.strands, letters)
    }

    /// All cyclic rotations of the letter sequence (each is a conjugate).
    pub fn rotations(&self) -> impl Iterator<Item = BraidWord> + '_ {
        let len = self.letters.len().max(1);
        (0..len).map(move |k| {
            let mut letters = Vec::with_capacity(self.letters.len());
            if !self.letters.is_empty() {
                letters.extend_from_slice(&self.letters[k..]);
                letters.extend_from_slice(&self.letters[..k]);
            }
            BraidWord {
                strands: self.strands,
                letters,
            }
        })
    }

    /// Removes the strand that starts at (0-based) position `start` and
    /// renumbers the rest. Crossings involving that strand disappear.
    pub fn delete_strand(&self, start: usize) -> Result<BraidWord, BraidError> {
        if self.strands < 2 || start >= self.strands {
            return Err(BraidError::StrandOutOfRange {
                strand: start,
                strands: self.strands,
            });
        }
        // position of the deleted strand as the word is read
        let mut pos = start;
        let mut letters = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            if i == pos {
                pos += 1;
            } else if i + 1 == pos {
                pos -= 1;
            } else if i + 1 < pos {
                letters.push(g);
            } else {
                letters.push(g - g.signum());
            }
        }
        Ok(BraidWord {
            strands: self.strands - 1,
            letters,
        })
    }
}

impl fmt::Display for BraidWord {
    /// Space-separated letters, empty for the trivial word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
