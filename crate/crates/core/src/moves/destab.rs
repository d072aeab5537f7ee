//! Discovery of positive destabilizations.
//!
//! A conjugate `y` of `b ∈ B_n` destabilizes iff `z = y·σ_{n−1}⁻¹` lies in
//! `B_{n−1}`: its last strand is fixed and never crosses the others, which is
//! checked exactly by deleting that strand and comparing normal forms. The
//! conjugates tried are `b` itself and its super summit set, each closed
//! under conjugation by up to [`DESTAB_CONJUGATION_DEPTH`] generators.

use std::collections::{HashSet, VecDeque};

use super::{conjugation_moves, Move};
use crate::braid::BraidWord;
use crate::garside::{to_super_summit, NormalForm, PermutationBraid, SuperSummitSet};

/// Generator conjugations applied around each root.
pub const DESTAB_CONJUGATION_DEPTH: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabCandidate {
    /// `c` with `c⁻¹·b·c = witness·σ_{n−1}^{±1}`.
    pub conjugator: BraidWord,
    pub witness: BraidWord,
    pub positive: bool,
}

impl DestabCandidate {
    /// Conjugation steps followed by the destabilization.
    pub fn moves(&self) -> Vec<Move> {
        let mut out: Vec<Move> = conjugation_moves(&self.conjugator).collect();
        out.push(if self.positive {
            Move::DestabPos(self.witness.clone())
        } else {
            Move::DestabNeg(self.witness.clone())
        });
        out
    }
}

/// The `B_{n−1}` word `w` with `y = w·σ_{n−1}^{sign}`, if there is one.
pub(crate) fn lower_witness(y: &NormalForm, sign: i32) -> Option<BraidWord> {
    let n = y.strands();
    let top = PermutationBraid::generator(n, n - 2);
    // cheap necessary condition: y·σ_{n−1}^{∓1} fixes the last strand
    let mut perm = if y.inf().rem_euclid(2) == 1 {
        PermutationBraid::delta(n)
    } else {
        PermutationBraid::identity(n)
    };
    for f in y.factors() {
        perm = perm.then(f);
    }
    if perm.then(&top).image(n - 1) != n - 1 {
        return None;
    }
    let mut z = y.clone();
    if sign > 0 {
        z.push_inverse_simple(top);
    } else {
        z.push_simple(top);
    }
    let zw = z.to_word();
    if zw.closure_permutation().perm()[n - 1] != n - 1 {
        return None;
    }
    let d = zw.delete_strand(n - 1).ok()?.free_reduce();
    let lifted = d.with_strands(n).ok()?;
    if NormalForm::of_word(&lifted) != z {
        return None;
    }
    let nf = NormalForm::of_word(&d).to_word();
    Some(if nf.len() < d.len() { nf } else { d })
}

/// Legal positive destabilizations of conjugates of `b`, at most one per
/// summit element. Visits at most `sweep_limit` conjugates. May miss
/// destabilizations; every returned candidate is legal.
pub fn destab_candidates(b: &BraidWord, sweep_limit: usize) -> Vec<DestabCandidate> {
    signed_candidates(b, 1, sweep_limit)
}

pub(crate) fn signed_candidates(b: &BraidWord, sign: i32, sweep_limit: usize) -> Vec<DestabCandidate> {
    if b.strands() < 2 {
        return Vec::new();
    }
    let start = NormalForm::of_word(b);
    let mut roots: Vec<(NormalForm, Vec<i32>)> = Vec::new();
    match SuperSummitSet::compute(b, sweep_limit) {
        Ok(set) => roots.extend(
            set.elements()
                .iter()
                .map(|c| (c.element.clone(), c.conjugator.letters().to_vec())),
        ),
        Err(_) => roots.push(to_super_summit(&start)),
    }
    candidates_from_roots(start, roots, sign, sweep_limit)
}

/// As [`destab_candidates`], with the conjugates `(y, c)`, `y = c⁻¹·b·c`,
/// to start from supplied by the caller. `b` itself is always a root.
pub(crate) fn candidates_from_roots(
    b: NormalForm,
    roots: Vec<(NormalForm, Vec<i32>)>,
    sign: i32,
    sweep_limit: usize,
) -> Vec<DestabCandidate> {
    let n = b.strands();
    if n < 2 {
        return Vec::new();
    }
    let roots = std::iter::once((b, Vec::new())).chain(roots);
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut queue = VecDeque::new();
    for (y, c) in roots {
        if seen.len() >= sweep_limit {
            break;
        }
        if seen.insert(y.clone()) {
            queue.push_back((y, c, 0));
        }
    }

    let mut out = Vec::new();
    let mut summits: HashSet<NormalForm> = HashSet::new();
    while let Some((y, c, depth)) = queue.pop_front() {
        if let Some(witness) = lower_witness(&y, sign) {
            let (summit, _) = to_super_summit(&NormalForm::of_word(&witness));
            if summits.insert(summit) {
                out.push(DestabCandidate {
                    conjugator: BraidWord::new(n, c.clone()).expect("generators of B_n").free_reduce(),
                    witness,
                    positive: sign > 0,
                });
            }
        }
        if depth == DESTAB_CONJUGATION_DEPTH {
            continue;
        }
        for i in 0..n - 1 {
            let s = PermutationBraid::generator(n, i);
            let g = i as i32 + 1;
            for (z, letter) in [(y.conjugate_by_simple(s), g), (y.conjugate_by_simple_inverse(s), -g)] {
                if seen.len() >= sweep_limit {
                    break;
                }
                if seen.insert(z.clone()) {
                    let mut c2 = c.clone();
                    c2.push(letter);
                    queue.push_back((z, c2, depth + 1));
                }
            }
        }
    }
    out
}
