//! Independent reference computations. None of these call into the
//! algorithms they check.

use std::collections::{BTreeMap, HashSet, VecDeque};

use tmarkov::braid::BraidWord;
use tmarkov::garside::{NormalForm, PermutationBraid};
use tmarkov::AlexanderPolynomial;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Arcs of the closed braid diagram: arc `(level, position)` runs from
/// level `level` to `level + 1`; the top level is glued to level 0.
/// `smooth` replaces every crossing by its oriented smoothing.
fn diagram_classes(b: &BraidWord, smooth: bool) -> usize {
    let n = b.strands();
    let levels = b.len();
    let id = |level: usize, pos: usize| (level % (levels + 1)) * n + pos;
    let mut uf = UnionFind::new((levels + 1) * n);
    for (k, &g) in b.letters().iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        for pos in 0..n {
            let out = if smooth || (pos != i && pos != i + 1) {
                pos
            } else if pos == i {
                i + 1
            } else {
                i
            };
            uf.union(id(k, pos), id(k + 1, out));
        }
    }
    for pos in 0..n {
        uf.union(id(levels, pos), id(0, pos));
    }
    uf.classes()
}

pub fn diagram_components(b: &BraidWord) -> usize {
    diagram_classes(b, false)
}

pub fn seifert_circles(b: &BraidWord) -> usize {
    diagram_classes(b, true)
}

/// Every crossing of a closed braid is oriented downward on both strands,
/// so its sign is the sign of the letter.
pub fn writhe(b: &BraidWord) -> i64 {
    b.letters().iter().map(|&g| i64::from(g.signum())).sum()
}

/// Self-linking as writhe minus Seifert circles.
pub fn diagram_self_linking(b: &BraidWord) -> i64 {
    writhe(b) - seifert_circles(b) as i64
}

/// Laurent polynomial as exponent → coefficient, no zero entries.
pub type Poly = BTreeMap<i32, i64>;

fn add_term(p: &mut Poly, e: i32, c: i64) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            add_term(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

fn det(m: &[Vec<Poly>]) -> Poly {
    let k = m.len();
    if k == 0 {
        return Poly::from([(0, 1)]);
    }
    let mut out = Poly::new();
    for col in 0..k {
        if m[0][col].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        for (e, c) in mul(&m[0][col], &det(&minor)) {
            add_term(&mut out, e, sign * c);
        }
    }
    out
}

/// Lowest degree 0, positive leading coefficient.
pub fn normalize(p: &Poly) -> Poly {
    let Some((&low, _)) = p.iter().next() else {
        return Poly::new();
    };
    let sign = if *p.values().next_back().unwrap() < 0 { -1 } else { 1 };
    p.iter().map(|(&e, &c)| (e - low, sign * c)).collect()
}

fn free_mul(a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut out = a.to_vec();
    for &x in b {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn free_inv(a: &[i32]) -> Vec<i32> {
    a.iter().rev().map(|x| -x).collect()
}

/// The Artin action of the braid on the free group `F_n`: images of the
/// generators `x_1 … x_n` (letters `±(j+1)`).
fn artin_images(b: &BraidWord) -> Vec<Vec<i32>> {
    let n = b.strands();
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|j| vec![j]).collect();
    // Act letter by letter: images ← images ∘ σ, substituting into the
    // current images of x_i and x_{i+1}.
    for &g in b.letters() {
        let i = g.unsigned_abs() as usize - 1;
        let (xi, xj) = (images[i].clone(), images[i + 1].clone());
        if g > 0 {
            images[i] = free_mul(&free_mul(&xi, &xj), &free_inv(&xi));
            images[i + 1] = xi;
        } else {
            images[i] = xj.clone();
            images[i + 1] = free_mul(&free_mul(&free_inv(&xj), &xi), &xj);
        }
    }
    images
}

/// Alexander polynomial of the closure from Fox derivatives of the braid
/// relations `β(x_i) = x_i`, with every generator sent to `t`, as the
/// minor deleting the last relation and the last generator.
pub fn fox_alexander(b: &BraidWord) -> Poly {
    let n = b.strands();
    let images = artin_images(b);
    let mut m = vec![vec![Poly::new(); n]; n];
    for (i, word) in images.iter().enumerate() {
        let mut exp = 0;
        for &x in word {
            let j = x.unsigned_abs() as usize - 1;
            if x > 0 {
                add_term(&mut m[i][j], exp, 1);
                exp += 1;
            } else {
                exp -= 1;
                add_term(&mut m[i][j], exp, -1);
            }
        }
        add_term(&mut m[i][i], 0, -1);
    }
    let minor: Vec<Vec<Poly>> = m[..n - 1].iter().map(|row| row[..n - 1].to_vec()).collect();
    normalize(&det(&minor))
}

pub fn to_poly(p: &AlexanderPolynomial) -> Poly {
    let Some(low) = p.low_degree() else {
        return Poly::new();
    };
    p.coeffs()
        .iter()
        .enumerate()
        .filter_map(|(k, c)| {
            let c = i64::try_from(c).expect("small coefficients");
            (c != 0).then_some((low + k as i32, c))
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// The super summit set by closing the summit element under conjugation
/// by all `n!` simple braids, keeping conjugates with the same `inf` and
/// `sup`.
pub fn brute_force_super_summit(summit: &NormalForm) -> HashSet<NormalForm> {
    let n = summit.strands();
    let simples: Vec<PermutationBraid> = permutations(n)
        .iter()
        .map(|p| PermutationBraid::from_images(p).unwrap())
        .collect();
    let mut seen = HashSet::from([summit.clone()]);
    let mut queue = VecDeque::from([summit.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in &simples {
            let y = x.conjugate_by_simple(*s);
            if y.inf() == x.inf() && y.sup() == x.sup() && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}
