//! Permutation braids: the simple elements `1 ≼ s ≼ Δ` of the positive
//! braid monoid, stored as permutations of strand positions.

use std::cmp::Ordering;
use std::fmt;

use crate::braid::MAX_STRANDS;

/// A positive braid in which every pair of strands crosses at most once.
///
/// `image[i]` is the final position of the strand starting at position `i`.
/// Products are read left to right, so `(a·b).image[i] = b.image[a.image[i]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PermutationBraid {
    n: u8,
    image: [u8; MAX_STRANDS],
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        debug_assert!((1..=MAX_STRANDS).contains(&n));
        let mut image = [0u8; MAX_STRANDS];
        for (i, slot) in image.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        PermutationBraid { n: n as u8, image }
    }

    /// The half twist `Δ`, reversing all positions.
    pub fn delta(n: usize) -> Self {
        let mut d = Self::identity(n);
        for i in 0..n {
            d.image[i] = (n - 1 - i) as u8;
        }
        d
    }

    /// The generator `σ_{i+1}` (0-based index `i`).
    pub fn generator(n: usize, i: usize) -> Self {
        debug_assert!(i + 1 < n);
        let mut s = Self::identity(n);
        s.image.swap(i, i + 1);
        s
    }

    /// Builds from a 0-based one-line image. Returns `None` if it is not a
    /// permutation of `0..n`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n == 0 || n > MAX_STRANDS {
            return None;
        }
        let mut seen = [false; MAX_STRANDS];
        let mut p = Self::identity(n);
        for (i, &v) in images.iter().enumerate() {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
            p.image[i] = v as u8;
        }
        Some(p)
    }

    pub fn strands(&self) -> usize {
        self.n as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.image[..self.n as usize]
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n as usize;
        self.images()
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == n - 1 - i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = *self;
        for i in 0..self.n as usize {
            inv.image[self.image[i] as usize] = i as u8;
        }
        inv
    }

    /// Permutation of the product `self · other`; only a simple braid when
    /// the crossing counts add up.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..self.n as usize {
            out.image[i] = other.image[self.image[i] as usize];
        }
        out
    }

    /// Number of crossings, i.e. the length of any positive word for it.
    pub fn length(&self) -> usize {
        let im = self.images();
        let mut count = 0;
        for i in 0..im.len() {
            for j in i + 1..im.len() {
                if im[i] > im[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `τ(s) = Δ⁻¹ s Δ`, which maps `σ_i` to `σ_{n−i}`.
    pub fn tau(&self) -> Self {
        let n = self.n as usize;
        let mut out = *self;
        for i in 0..n {
            out.image[i] = (n - 1 - self.image[n - 1 - i] as usize) as u8;
        }
        out
    }

    pub fn tau_pow(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 1 {
            self.tau()
        } else {
            *self
        }
    }

    /// True if `σ_{i+1}` is a prefix: the strands starting at `i`, `i+1` cross.
    #[inline]
    pub fn starts_with(&self, i: usize) -> bool {
        self.image[i] > self.image[i + 1]
    }

    /// True if `σ_{i+1}` is a suffix: the strands ending at `i`, `i+1` cross.
    pub fn ends_with(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.image[i] > inv.image[i + 1]
    }

    /// `s·σ_{i+1}` (swap the final positions `i`, `i+1`).
    #[inline]
    fn times_generator(&mut self, i: usize) {
        for v in self.image.iter_mut().take(self.n as usize) {
            if *v as usize == i {
                *v = (i + 1) as u8;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
    }

    /// `σ_{i+1}⁻¹·s` (swap the starting positions `i`, `i+1`).
    #[inline]
    fn strip_generator(&mut self, i: usize) {
        self.image.swap(i, i + 1);
    }

    /// `∂(s) = s⁻¹Δ`, the simple element completing `s` to `Δ` on the right.
    pub fn right_complement(&self) -> Self {
        self.inverse().then(&Self::delta(self.n as usize))
    }

    /// `Δs⁻¹`, the simple element completing `s` to `Δ` on the left.
    pub fn left_complement(&self) -> Self {
        Self::delta(self.n as usize).then(&self.inverse())
    }

    /// Prefix order: `self ≼ other` iff every pair crossing in `self`
    /// also crosses in `other`.
    pub fn is_prefix_of(&self, other: &Self) -> bool {
        let (a, b) = (self.images(), other.images());
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] > a[j] && b[i] < b[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Greatest common prefix `self ∧ other`.
    pub fn meet(&self, other: &Self) -> Self {
        let n = self.n as usize;
        let mut m = Self::identity(n);
        // remaining suffixes a = m⁻¹·self, b = m⁻¹·other
        let mut a = *self;
        let mut b = *other;
        'grow: loop {
            for i in 0..n - 1 {
                if a.starts_with(i) && b.starts_with(i) {
                    m.times_generator(i);
                    a.strip_generator(i);
                    b.strip_generator(i);
                    continue 'grow;
                }
            }
            return m;
        }
    }

    /// Least common multiple `self ∨ other` in the prefix order. Its set of
    /// crossing pairs is the transitive closure of the union.
    #[allow(clippy::needless_range_loop)]
    pub fn join(&self, other: &Self) -> Self {
        let n = self.n as usize;
        let (a, b) = (self.images(), other.images());
        let mut cross = [[false; MAX_STRANDS]; MAX_STRANDS];
        for i in 0..n {
            for j in i + 1..n {
                cross[i][j] = a[i] > a[j] || b[i] > b[j];
            }
        }
        // close under (i,j),(j,k) ⇒ (i,k) for i<j<k
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in i + 1..n {
                    if !cross[i][j] {
                        continue;
                    }
                    for k in j + 1..n {
                        if cross[j][k] && !cross[i][k] {
                            cross[i][k] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut out = Self::identity(n);
        for i in 0..n {
            let before = (0..i).filter(|&j| !cross[j][i]).count();
            let after = (i + 1..n).filter(|&j| cross[i][j]).count();
            out.image[i] = (before + after) as u8;
        }
        debug_assert!(self.is_prefix_of(&out) && other.is_prefix_of(&out));
        out
    }

    /// Right complement `self \ other = self⁻¹(self ∨ other)`: the least
    /// `x` with `other ≼ self·x`.
    pub fn under(&self, other: &Self) -> Self {
        self.inverse().then(&self.join(other))
    }

    /// Moves the largest possible prefix of `right` onto `left` so that the
    /// pair becomes left-weighted. Returns true if anything moved.
    pub fn left_weight(left: &mut Self, right: &mut Self) -> bool {
        let n = left.n as usize;
        let mut moved = false;
        let mut left_inv = left.inverse();
        'outer: loop {
            for i in 0..n - 1 {
                if right.starts_with(i) && left_inv.image[i] < left_inv.image[i + 1] {
                    left.times_generator(i);
                    left_inv.image.swap(i, i + 1);
                    right.strip_generator(i);
                    moved = true;
                    continue 'outer;
                }
            }
            return moved;
        }
    }

    /// True if no generator can move from `right` to `left`.
    pub fn is_left_weighted(left: &Self, right: &Self) -> bool {
        let n = left.n as usize;
        (0..n - 1).all(|i| !right.starts_with(i) || left.ends_with(i))
    }

    /// A positive word for this simple braid, 1-based letters, choosing the
    /// smallest available first letter at each step.
    pub fn to_letters(&self) -> Vec<i32> {
        let n = self.n as usize;
        let mut rest = *self;
        let mut out = Vec::with_capacity(rest.length());
        'outer: loop {
            for i in 0..n.saturating_sub(1) {
                if rest.starts_with(i) {
                    out.push(i as i32 + 1);
                    rest.strip_generator(i);
                    continue 'outer;
                }
            }
            return out;
        }
    }

    /// Multiplies by a positive word, if the result stays simple.
    pub fn from_positive_letters(n: usize, letters: &[i32]) -> Option<Self> {
        let mut p = Self::identity(n);
        for &g in letters {
            if g <= 0 || g as usize >= n {
                return None;
            }
            let i = g as usize - 1;
            if p.ends_with(i) {
                return None;
            }
            p.times_generator(i);
        }
        Some(p)
    }
}

impl Ord for PermutationBraid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.images().cmp(other.images()))
    }
}

impl PartialOrd for PermutationBraid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PermutationBraid {
    /// One-line notation, 1-based, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.images().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
