//! Super summit sets and canonical conjugacy keys.
//!
//! An element is moved into its super summit set by iterated cycling (which
//! raises `inf`) and decycling (which lowers `sup`). The whole set is then
//! swept by conjugating with minimal simple elements: for `x` in the set and
//! an atom `σ_i`, the least simple `s ≽ σ_i` keeping `s⁻¹xs` in the set is
//! the fixed point of
//!
//! ```text
//! s ← s ∨ (a \ τ^p(s)) ∨ (b \ τ^q(s))
//! ```
//!
//! where `x = Δ^p a` and `x⁻¹ = Δ^q b` with `a`, `b` positive. These
//! conjugators connect the whole super summit set.

use std::collections::HashMap;

use super::{GarsideError, NormalForm, PermutationBraid};
use crate::braid::BraidWord;

/// A conjugate of the input together with a conjugator `c`, so that
/// `element = c⁻¹ · input · c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugate {
    pub element: NormalForm,
    pub conjugator: BraidWord,
}

/// The canonical representative of a conjugacy class: the least normal form
/// in its super summit set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjKey {
    key: NormalForm,
    conjugator: BraidWord,
}

impl ConjKey {
    pub fn normal_form(&self) -> &NormalForm {
        &self.key
    }

    /// `c` with `key = c⁻¹ · input · c`.
    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn into_parts(self) -> (NormalForm, BraidWord) {
        (self.key, self.conjugator)
    }
}

/// Tracks a conjugator as a letter sequence.
fn append_simple(letters: &mut Vec<i32>, s: &PermutationBraid) {
    letters.extend(s.to_letters());
}

fn append_simple_inverse(letters: &mut Vec<i32>, s: &PermutationBraid) {
    letters.extend(s.to_letters().iter().rev().map(|g| -g));
}

fn reduced(n: usize, letters: Vec<i32>) -> BraidWord {
    BraidWord::from_parts_unchecked(n, letters).free_reduce()
}

/// Moves `x` into its super summit set. Returns the summit element and the
/// conjugator letters `c` with `summit = c⁻¹ x c`.
pub fn to_super_summit(x: &NormalForm) -> (NormalForm, Vec<i32>) {
    let patience = x.delta_length() + 1;
    let mut cur = x.clone();
    let mut conj = Vec::new();

    let mut idle = 0;
    while idle < patience {
        let Some((next, c)) = cur.cycling() else { break };
        append_simple(&mut conj, &c);
        idle = if next.inf() > cur.inf() { 0 } else { idle + 1 };
        cur = next;
    }

    let mut idle = 0;
    while idle < patience {
        let Some((next, s)) = cur.decycling() else { break };
        append_simple_inverse(&mut conj, &s);
        debug_assert!(next.inf() >= cur.inf());
        idle = if next.sup() < cur.sup() { 0 } else { idle + 1 };
        cur = next;
    }
    (cur, conj)
}

/// Least simple `s ≽ σ_{atom+1}` with `s⁻¹ x s` in the super summit set,
/// given `x` in that set and its inverse.
pub fn minimal_summit_conjugator(
    x: &NormalForm,
    x_inv: &NormalForm,
    atom: usize,
) -> PermutationBraid {
    fn complement_through(factors: &[PermutationBraid], mut c: PermutationBraid) -> PermutationBraid {
        for f in factors {
            if c.is_identity() {
                break;
            }
            c = f.under(&c);
        }
        c
    }
    let mut s = PermutationBraid::generator(x.strands(), atom);
    loop {
        let a = complement_through(x.factors(), s.tau_pow(x.inf()));
        let b = complement_through(x_inv.factors(), s.tau_pow(x_inv.inf()));
        let next = s.join(&a).join(&b);
        if next == s {
            return s;
        }
        s = next;
    }
}

/// The super summit set of a braid, each element with a conjugator from the
/// input.
#[derive(Clone, Debug)]
pub struct SuperSummitSet {
    elements: Vec<Conjugate>,
}

impl SuperSummitSet {
    /// Computes the whole set, failing once more than `limit` elements have
    /// been found.
    pub fn compute(word: &BraidWord, limit: usize) -> Result<Self, GarsideError> {
        let n = word.strands();
        let (root, root_conj) = to_super_summit(&NormalForm::of_word(word));
        let mut index: HashMap<NormalForm, usize> = HashMap::new();
        let mut elements: Vec<(NormalForm, Vec<i32>)> = Vec::new();
        index.insert(root.clone(), 0);
        elements.push((root, root_conj));
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].0.clone();
            let x_inv = x.inverse();
            for atom in 0..n.saturating_sub(1) {
                let s = minimal_summit_conjugator(&x, &x_inv, atom);
                let y = x.conjugate_by_simple(s);
                debug_assert_eq!((y.inf(), y.sup()), (x.inf(), x.sup()));
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() >= limit {
                    return Err(GarsideError::SweepBudgetExceeded { limit });
                }
                let mut conj = elements[next].1.clone();
                append_simple(&mut conj, &s);
                index.insert(y.clone(), elements.len());
                elements.push((y, conj));
            }
            next += 1;
        }
        Ok(SuperSummitSet {
            elements: elements
                .into_iter()
                .map(|(element, c)| Conjugate {
                    element,
                    conjugator: reduced(n, c),
                })
                .collect(),
        })
    }

    pub fn elements(&self) -> &[Conjugate] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.elements.iter().any(|c| &c.element == x)
    }

    /// The least element, which is the canonical conjugacy key.
    pub fn key(&self) -> ConjKey {
        let best = self
            .elements
            .iter()
            .min_by(|a, b| a.element.cmp(&b.element))
            .expect("a super summit set is never empty");
        ConjKey {
            key: best.element.clone(),
            conjugator: best.conjugator.clone(),
        }
    }
}

/// Canonical conjugacy key, or `SweepBudgetExceeded` if the super summit set
/// has more than `limit` elements.
pub fn conj_key(word: &BraidWord, limit: usize) -> Result<ConjKey, GarsideError> {
    Ok(SuperSummitSet::compute(word, limit)?.key())
}

/// The summit element reached by cycling and decycling alone. Deterministic
/// but not canonical; used when the full sweep is over budget.
pub fn summit_representative(word: &BraidWord) -> Conjugate {
    let (element, c) = to_super_summit(&NormalForm::of_word(word));
    Conjugate {
        element,
        conjugator: reduced(word.strands(), c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::equal;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn check_conjugators(word: &BraidWord, set: &SuperSummitSet) {
        for c in set.elements() {
            let lhs = c.conjugator.invert().compose(word).unwrap().compose(&c.conjugator).unwrap();
            assert_eq!(NormalForm::of_word(&lhs), c.element);
        }
    }

    #[test]
    fn conjugate_generators_share_a_key() {
        let a = conj_key(&w(3, &[1]), 100).unwrap();
        let b = conj_key(&w(3, &[2]), 100).unwrap();
        assert_eq!(a.normal_form(), b.normal_form());
        // σ₂ = (σ₁σ₂) σ₁ (σ₁σ₂)⁻¹
        assert!(equal(&w(3, &[2]), &w(3, &[1, 2, 1, -2, -1])).unwrap());
    }

    #[test]
    fn conjugation_by_generator_keeps_key() {
        let b = w(4, &[1, -2, 3, 3, -1]);
        let key = conj_key(&b, 1000).unwrap();
        for g in [w(4, &[2]), w(4, &[-3, 1]), w(4, &[2, -1, -3, 2, 2])] {
            let conj = g.compose(&b).unwrap().compose(&g.invert()).unwrap();
            assert_eq!(conj_key(&conj, 1000).unwrap().normal_form(), key.normal_form());
        }
    }

    #[test]
    fn different_degrees_differ() {
        let a = conj_key(&w(3, &[1, 2]), 100).unwrap();
        let b = conj_key(&w(3, &[-1, 2]), 100).unwrap();
        assert_ne!(a.normal_form(), b.normal_form());
    }

    #[test]
    fn recorded_conjugators_are_correct() {
        let b = w(4, &[-1, 2, -3]);
        let set = SuperSummitSet::compute(&b, 1000).unwrap();
        check_conjugators(&b, &set);
        let b = w(4, &[1, 1, -2, 3, -2, -1, 3]);
        let set = SuperSummitSet::compute(&b, 1000).unwrap();
        check_conjugators(&b, &set);
    }

    #[test]
    fn budget_is_reported() {
        let b = w(5, &[1, -2, 3, -4, 1, -3, 2, 4]);
        assert!(matches!(
            SuperSummitSet::compute(&b, 1),
            Err(GarsideError::SweepBudgetExceeded { limit: 1 })
        ) || SuperSummitSet::compute(&b, 1).unwrap().len() == 1);
    }
}
