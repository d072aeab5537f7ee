//! Random words and random move walks shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use tmarkov::braid::BraidWord;
use tmarkov::moves::{apply_move, Move};

pub mod oracles;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(n: usize, l: &[i32]) -> BraidWord {
    BraidWord::new(n, l.to_vec()).unwrap()
}

pub fn random_letter(rng: &mut impl Rng, n: usize) -> i32 {
    let g = rng.gen_range(1..n as i32);
    if rng.gen_bool(0.5) { g } else { -g }
}

pub fn random_word(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n).unwrap();
    }
    let letters = (0..len).map(|_| random_letter(rng, n)).collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_positive_word(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n).unwrap();
    }
    let letters = (0..len).map(|_| rng.gen_range(1..n as i32)).collect();
    BraidWord::new(n, letters).unwrap()
}

/// A word equal to `b`: a relator inserted, a far commutation, a braid
/// relation, or a free reduction.
pub fn random_rewrite(rng: &mut impl Rng, b: &BraidWord) -> BraidWord {
    let n = b.strands();
    let mut l = b.letters().to_vec();
    if n < 2 {
        return b.clone();
    }
    match rng.gen_range(0..4) {
        0 => {
            let g = random_letter(rng, n);
            let p = rng.gen_range(0..=l.len());
            l.splice(p..p, [g, -g]);
        }
        1 => {
            let spots: Vec<usize> = (0..l.len().saturating_sub(1))
                .filter(|&p| (l[p].abs() - l[p + 1].abs()).abs() >= 2)
                .collect();
            if let Some(&p) = spots.choose(rng) {
                l.swap(p, p + 1);
            }
        }
        2 => {
            let spots: Vec<usize> = (0..l.len().saturating_sub(2))
                .filter(|&p| {
                    l[p] == l[p + 2]
                        && l[p].signum() == l[p + 1].signum()
                        && (l[p].abs() - l[p + 1].abs()).abs() == 1
                })
                .collect();
            if let Some(&p) = spots.choose(rng) {
                let (x, y) = (l[p], l[p + 1]);
                l[p] = y;
                l[p + 1] = x;
                l[p + 2] = y;
            }
        }
        _ => return b.free_reduce(),
    }
    BraidWord::new(n, l).unwrap()
}

/// Destabilization available by rotating the word: exactly one letter uses
/// `σ_{n−1}`, positively. Returns the conjugation steps and the destab.
pub fn literal_destab(b: &BraidWord) -> Option<Vec<Move>> {
    let n = b.strands();
    if n < 2 {
        return None;
    }
    let top = n as i32 - 1;
    let l = b.letters();
    let hits: Vec<usize> = (0..l.len()).filter(|&p| l[p].abs() == top).collect();
    if hits.len() != 1 || l[hits[0]] != top {
        return None;
    }
    let p = hits[0];
    let mut moves: Vec<Move> = l[..=p].iter().map(|&g| Move::Conj(-g)).collect();
    let mut witness = l[p + 1..].to_vec();
    witness.extend_from_slice(&l[..p]);
    moves.push(Move::DestabPos(BraidWord::new(n - 1, witness).unwrap()));
    Some(moves)
}

/// Applies up to `steps` random transversal moves; returns the end word.
pub fn random_walk(rng: &mut impl Rng, start: &BraidWord, steps: usize, max_strands: usize) -> BraidWord {
    let mut cur = start.clone();
    for _ in 0..steps {
        let n = cur.strands();
        let roll = rng.gen_range(0..100);
        let moves = if roll < 20 {
            match literal_destab(&cur) {
                Some(m) => m,
                None => continue,
            }
        } else if roll < 45 && n < max_strands {
            vec![Move::StabPos]
        } else if roll < 75 && n >= 2 {
            vec![Move::Conj(random_letter(rng, n))]
        } else {
            vec![Move::Rewrite(random_rewrite(rng, &cur))]
        };
        for m in &moves {
            cur = apply_move(&cur, m).expect("generated moves are legal");
        }
    }
    cur
}

/// A random word of length `0..=max_len`.
pub fn random_word_upto(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    random_word(rng, n, len)
}
