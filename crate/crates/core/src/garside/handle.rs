//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a factor `σ_i^e v σ_i^{-e}` where `v` contains no
//! `σ_i^{±1}` and no `σ_{i-1}^{±1}`. Reducing it deletes the two ends and
//! replaces every `σ_{i+1}^d` inside by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.
//! Reducing the handle that closes first (it has no nested handle) until
//! none remain terminates, and the result is empty iff the braid is trivial.
//! This shares no code with the normal form.

use crate::braid::BraidWord;

/// Finds the handle with the leftmost closing letter.
fn first_handle(letters: &[i32], strands: usize) -> Option<(usize, usize)> {
    // last[i] = last position holding σ_i^{±1} (1-based i)
    let mut last: Vec<Option<usize>> = vec![None; strands + 1];
    for (q, &g) in letters.iter().enumerate() {
        let i = g.unsigned_abs() as usize;
        if let Some(p) = last[i] {
            let blocked = last[i - 1].is_some_and(|b| b > p);
            if !blocked && letters[p] == -g {
                return Some((p, q));
            }
        }
        last[i] = Some(q);
    }
    None
}

fn reduce_handle(letters: &[i32], p: usize, q: usize) -> Vec<i32> {
    let e = letters[p].signum();
    let i = letters[p].abs();
    let mut out = Vec::with_capacity(letters.len() + 2 * (q - p));
    out.extend_from_slice(&letters[..p]);
    for &g in &letters[p + 1..q] {
        if g.abs() == i + 1 {
            out.push(-e * (i + 1));
            out.push(g.signum() * i);
            out.push(e * (i + 1));
        } else {
            out.push(g);
        }
    }
    out.extend_from_slice(&letters[q + 1..]);
    out
}

fn free_reduce(letters: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for g in letters {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// Reduces all handles. The output is equal to the input in `B_n` and is
/// empty iff the input is trivial.
pub fn handle_reduce(word: &BraidWord) -> BraidWord {
    let n = word.strands();
    let mut letters = free_reduce(word.letters().to_vec());
    while let Some((p, q)) = first_handle(&letters, n) {
        letters = free_reduce(reduce_handle(&letters, p, q));
    }
    BraidWord::from_parts_unchecked(n, letters)
}

/// True iff the word represents the identity braid.
pub fn is_trivial_by_handles(word: &BraidWord) -> bool {
    handle_reduce(word).is_empty()
}
