//! Alexander polynomials of braid closures from the reduced Burau
//! representation: `Δ(t) ≐ det(I − ψ(b)) / (1 + t + ⋯ + t^{n−1})`.

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::laurent::{determinant, Laurent};
use crate::scalar::Coefficient;

type Matrix<C> = Vec<Vec<Laurent<C>>>;

fn identity<C: Coefficient>(m: usize) -> Matrix<C> {
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { Laurent::one() } else { Laurent::zero() }).collect())
        .collect()
}

fn mul<C: Coefficient>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let m = a.len();
    let mut out = vec![vec![Laurent::zero(); m]; m];
    for i in 0..m {
        for k in 0..m {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Reduced Burau matrix of one letter in `B_n`, size `n − 1`.
fn generator<C: Coefficient>(n: usize, g: i32) -> Matrix<C> {
    let m = n - 1;
    let mut out = identity(m);
    let t = |e: i32, c: i64| Laurent::monomial(C::from_i64(c).expect("small constant"), e);
    let z = Laurent::zero;
    // 3×3 block centred on row/column |g| − 1
    let block: [[Laurent<C>; 3]; 3] = if g > 0 {
        [[t(0, 1), t(1, 1), z()], [z(), t(1, -1), z()], [z(), t(0, 1), t(0, 1)]]
    } else {
        [[t(0, 1), t(0, 1), z()], [z(), t(-1, -1), z()], [z(), t(-1, 1), t(0, 1)]]
    };
    let centre = g.unsigned_abs() as i64 - 1;
    for (r, row) in block.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            let (i, j) = (centre + r as i64 - 1, centre + c as i64 - 1);
            if (0..m as i64).contains(&i) && (0..m as i64).contains(&j) {
                out[i as usize][j as usize] = v.clone();
            }
        }
    }
    out
}

/// The reduced Burau matrix `ψ(b)`.
pub fn reduced_burau<C: Coefficient>(word: &BraidWord) -> Matrix<C> {
    let n = word.strands();
    let mut acc = identity(n - 1);
    for &g in word.letters() {
        acc = mul(&acc, &generator(n, g));
    }
    acc
}

/// Alexander polynomial over any coefficient ring, normalized to lowest
/// degree 0 with a positive leading coefficient.
pub fn alexander_poly_in<C: Coefficient>(word: &BraidWord) -> Laurent<C> {
    let n = word.strands();
    let psi = reduced_burau::<C>(word);
    let m = n - 1;
    let shifted: Matrix<C> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let d = if i == j { Laurent::one() } else { Laurent::zero() };
                    &d - &psi[i][j]
                })
                .collect()
        })
        .collect();
    let det = determinant(shifted);
    let cyclotomic = Laurent::from_coeffs(0, vec![C::one(); n]);
    det.exact_div(&cyclotomic)
        .expect("the closure polynomial divides det(I − ψ)")
        .normalize_unit()
}

/// Alexander polynomial with exact big-integer coefficients.
pub fn alexander_poly(word: &BraidWord) -> Laurent<BigInt> {
    alexander_poly_in::<BigInt>(word)
}
