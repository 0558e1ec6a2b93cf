//! Smith normal form over the integers.
//!
//! Pivoting always takes a nonzero entry of minimal absolute value in the
//! remaining block and clears its row and column by Euclidean steps. Only the
//! diagonal is kept; transformation matrices are never formed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Positive diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone().into_rows();
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&a, t) else {
                let rank = diagonal.len();
                return SmithForm { diagonal, rank };
            };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
            }

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(i);
                    let pivot_row = &head[t];
                    for (x, p) in tail[0][t..].iter_mut().zip(&pivot_row[t..]) {
                        *x -= &q * p;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a[t..].iter_mut() {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }

            let pivot = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t][t + 1..].iter_mut().zip(&tail[0][t + 1..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    let rank = diagonal.len();
    SmithForm { diagonal, rank }
}

fn min_pivot(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => x.magnitude() < a[bi][bj].magnitude(),
            };
            if better {
                best = Some((i, j));
                if x.magnitude() == &num_bigint::BigUint::from(1u8) {
                    return best;
                }
            }
        }
    }
    best
}
