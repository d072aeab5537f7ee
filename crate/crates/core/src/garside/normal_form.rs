use std::cmp::Ordering;
use std::fmt;

use super::PermutationBraid;
use crate::braid::BraidWord;

/// Left-weighted normal form `Δ^inf · A₁ ⋯ A_k`.
///
/// No factor is the identity or `Δ`, and every adjacent pair is
/// left-weighted. Two words are equal in `B_n` iff their normal forms are
/// identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<PermutationBraid>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(n: usize, k: i64) -> Self {
        NormalForm {
            n,
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn of_word(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut nf = NormalForm::identity(n);
        for &g in word.letters() {
            let i = g.unsigned_abs() as usize - 1;
            let s = PermutationBraid::generator(n, i);
            if g > 0 {
                nf.push_simple(s);
            } else {
                nf.push_inverse_simple(s);
            }
        }
        nf
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Canonical length: the number of non-`Δ` factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn degree(&self) -> i64 {
        let half = (self.n * (self.n - 1) / 2) as i64;
        self.inf * half + self.factors.iter().map(|f| f.length() as i64).sum::<i64>()
    }

    fn delta_len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Right multiplication by `Δ^k`.
    pub fn push_delta_power(&mut self, k: i64) {
        if k.rem_euclid(2) == 1 {
            for f in &mut self.factors {
                *f = f.tau();
            }
        }
        self.inf += k;
    }

    /// Right multiplication by a simple element.
    pub fn push_simple(&mut self, s: PermutationBraid) {
        debug_assert_eq!(s.strands(), self.n);
        if s.is_identity() {
            return;
        }
        if s.is_delta() {
            self.push_delta_power(1);
            return;
        }
        self.factors.push(s);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (head, tail) = self.factors.split_at_mut(i);
            let moved = PermutationBraid::left_weight(&mut head[i - 1], &mut tail[0]);
            if !moved {
                break;
            }
            i -= 1;
        }
        self.tidy();
    }

    /// Right multiplication by the inverse of a simple element:
    /// `x·s⁻¹ = x·Δ⁻¹·(Δs⁻¹)`.
    pub fn push_inverse_simple(&mut self, s: PermutationBraid) {
        if s.is_identity() {
            return;
        }
        self.push_delta_power(-1);
        self.push_simple(s.left_complement());
    }

    fn tidy(&mut self) {
        let lead = self.factors.iter().take_while(|f| f.is_delta()).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        out.push_delta_power(other.inf);
        for &f in &other.factors {
            out.push_simple(f);
        }
        out
    }

    pub fn inverse(&self) -> NormalForm {
        let mut out = NormalForm::identity(self.n);
        for &f in self.factors.iter().rev() {
            out.push_inverse_simple(f);
        }
        out.push_delta_power(-self.inf);
        out
    }

    /// `s⁻¹ · self · s` for a simple `s`.
    pub fn conjugate_by_simple(&self, s: PermutationBraid) -> NormalForm {
        // s⁻¹ = Δ⁻¹·(Δs⁻¹)
        let mut out = NormalForm::delta_power(self.n, -1);
        out.push_simple(s.left_complement());
        let mut out = out.mul(self);
        out.push_simple(s);
        out
    }

    /// `s · self · s⁻¹` for a simple `s`.
    pub fn conjugate_by_simple_inverse(&self, s: PermutationBraid) -> NormalForm {
        let mut out = NormalForm::identity(self.n);
        out.push_simple(s);
        let mut out = out.mul(self);
        out.push_inverse_simple(s);
        out
    }

    /// A word for this element: `Δ^inf` followed by positive words of the
    /// factors. Negative powers of `Δ` are absorbed into the leading factors
    /// as `Δ⁻¹A = ∂(A)⁻¹`, giving a mixed word without wasted letters.
    pub fn to_word(&self) -> BraidWord {
        let n = self.n;
        let mut letters: Vec<i32> = Vec::new();
        let delta = PermutationBraid::delta(n).to_letters();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend_from_slice(&delta);
            }
            for f in &self.factors {
                letters.extend(f.to_letters());
            }
        } else {
            let m = (-self.inf) as usize;
            let absorbed = m.min(self.factors.len());
            // Δ^{-m} A₁⋯A_j = X₁⁻¹ ⋯ X_j⁻¹ Δ^{-(m-j)}, X_i = τ^{m-i}(∂(A_i))
            for (i, f) in self.factors[..absorbed].iter().enumerate() {
                let x = f.right_complement().tau_pow((m - 1 - i) as i64);
                letters.extend(x.to_letters().iter().rev().map(|g| -g));
            }
            for _ in absorbed..m {
                letters.extend(delta.iter().rev().map(|g| -g));
            }
            for f in &self.factors[absorbed..] {
                letters.extend(f.to_letters());
            }
        }
        BraidWord::from_parts_unchecked(n, letters)
    }

    /// Positive word for `Δ^{inf} A₁⋯A_k` with `inf ≥ 0` dropped, i.e. the
    /// positive part `A₁ ⋯ A_k`.
    pub fn positive_part_word(&self) -> BraidWord {
        let letters = self.factors.iter().flat_map(|f| f.to_letters()).collect();
        BraidWord::from_parts_unchecked(self.n, letters)
    }

    /// Checks the structural invariants; used by tests.
    pub fn is_well_formed(&self) -> bool {
        self.factors
            .iter()
            .all(|f| !f.is_identity() && !f.is_delta() && f.strands() == self.n)
            && self
                .factors
                .windows(2)
                .all(|w| PermutationBraid::is_left_weighted(&w[0], &w[1]))
    }

    /// Cycling `Δ^p A₂⋯A_k τ^p(A₁)`, with the conjugating simple element `c`
    /// such that the result is `c⁻¹·self·c`.
    pub fn cycling(&self) -> Option<(NormalForm, PermutationBraid)> {
        let first = *self.factors.first()?;
        let c = first.tau_pow(self.inf);
        let mut out = NormalForm::delta_power(self.n, self.inf);
        out.factors.extend_from_slice(&self.factors[1..]);
        out.push_simple(c);
        Some((out, c))
    }

    /// Decycling `A_k·self·A_k⁻¹`, with the simple element `A_k`.
    pub fn decycling(&self) -> Option<(NormalForm, PermutationBraid)> {
        let last = *self.factors.last()?;
        let mut out = NormalForm::identity(self.n);
        out.push_simple(last);
        let mut rest = NormalForm::delta_power(self.n, self.inf);
        rest.factors
            .extend_from_slice(&self.factors[..self.factors.len() - 1]);
        Some((out.mul(&rest), last))
    }

    pub(crate) fn delta_length(&self) -> usize {
        self.delta_len()
    }
}

impl Ord for NormalForm {
    /// `(n, inf, factor count, factors)` lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.inf.cmp(&other.inf))
            .then(self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalForm {
    /// `D^k | f1 | f2 | ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " | {p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm(n={}, {self})", self.n)
    }
}
