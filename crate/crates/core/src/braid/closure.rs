//! Combinatorics of the braid closure: components, linking numbers and the
//! transversal self-linking number `deg(b) − n`.

use super::BraidWord;

/// Permutation of strand positions induced by a braid word.
///
/// `perm[i]` is the final position of the strand starting at position `i`
/// (0-based). Letters act as transpositions `(i, i+1)` in word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosurePermutation {
    perm: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl ClosurePermutation {
    pub fn of(word: &BraidWord) -> Self {
        let n = word.strands();
        // occupant[p] = strand currently at position p
        let mut occupant: Vec<usize> = (0..n).collect();
        for &g in word.letters() {
            let i = g.unsigned_abs() as usize - 1;
            occupant.swap(i, i + 1);
        }
        let mut perm = vec![0; n];
        for (p, &s) in occupant.iter().enumerate() {
            perm[s] = p;
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                cycle.push(s);
                s = perm[s];
            }
            cycles.push(cycle);
        }
        ClosurePermutation { perm, cycles }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Cycles ordered by their smallest element; each cycle starts with it.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn components(&self) -> usize {
        self.cycles.len()
    }

    /// `labels[s]` is the index (into `cycles`) of the component containing
    /// the strand starting at position `s`.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.perm.len()];
        for (c, cycle) in self.cycles.iter().enumerate() {
            for &s in cycle {
                labels[s] = c;
            }
        }
        labels
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

/// Symmetric matrix of pairwise linking numbers between closure components.
/// The diagonal is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    /// `Σ_{i<j} lk(i, j)`.
    pub fn off_diagonal_sum(&self) -> i64 {
        let mut total = 0;
        for i in 0..self.size {
            for j in i + 1..self.size {
                total += self.get(i, j);
            }
        }
        total
    }
}

/// Walks the word and reports, for every letter, the two strands (by
/// starting position) that cross there, lower position first.
fn crossing_strands(word: &BraidWord) -> impl Iterator<Item = (usize, usize, i32)> + '_ {
    let mut occupant: Vec<usize> = (0..word.strands()).collect();
    word.letters().iter().map(move |&g| {
        let i = g.unsigned_abs() as usize - 1;
        let pair = (occupant[i], occupant[i + 1], g.signum());
        occupant.swap(i, i + 1);
        pair
    })
}

impl BraidWord {
    pub fn closure_permutation(&self) -> ClosurePermutation {
        ClosurePermutation::of(self)
    }

    pub fn components(&self) -> usize {
        ClosurePermutation::of(self).components()
    }

    /// Self-linking number of the transversal closure: `deg(b) − n`.
    pub fn self_linking(&self) -> i64 {
        self.degree() - self.strands() as i64
    }

    /// Euler characteristic of the Bennequin surface of the closure:
    /// one disk per strand, one band per crossing.
    pub fn bennequin_surface_euler(&self) -> i64 {
        self.strands() as i64 - self.len() as i64
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let closure = ClosurePermutation::of(self);
        let labels = closure.component_labels();
        let m = closure.components();
        let mut twice = vec![0i64; m * m];
        for (a, b, sign) in crossing_strands(self) {
            let (ca, cb) = (labels[a], labels[b]);
            if ca != cb {
                twice[ca * m + cb] += i64::from(sign);
                twice[cb * m + ca] += i64::from(sign);
            }
        }
        let entries = twice
            .into_iter()
            .map(|t| {
                debug_assert!(t % 2 == 0, "odd inter-component crossing count");
                t / 2
            })
            .collect();
        LinkingMatrix { size: m, entries }
    }

    /// The sub-braid formed by the strands of one closure component, in the
    /// order of `ClosurePermutation::cycles`.
    pub fn component_braid(&self, component: usize) -> Option<BraidWord> {
        let closure = ClosurePermutation::of(self);
        let labels = closure.component_labels();
        let size = closure.cycles().get(component)?.len();
        let mut occupant: Vec<usize> = (0..self.strands()).collect();
        let mut letters = Vec::new();
        for &g in self.letters() {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (occupant[i], occupant[i + 1]);
            if labels[a] == component && labels[b] == component {
                let below = occupant[..i]
                    .iter()
                    .filter(|&&s| labels[s] == component)
                    .count() as i32;
                letters.push(g.signum() * (below + 1));
            }
            occupant.swap(i, i + 1);
        }
        Some(BraidWord::from_parts_unchecked(size, letters))
    }

    /// Per-component self-linking numbers. Together with the linking matrix
    /// they reassemble `self_linking` as `Σ tb_i + 2 Σ_{i<j} lk(i, j)`.
    pub fn component_tb_decomposition(&self) -> Vec<i64> {
        (0..self.components())
            .map(|c| {
                self.component_braid(c)
                    .expect("component index in range")
                    .self_linking()
            })
            .collect()
    }
}
