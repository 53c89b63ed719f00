//! Integer Hermite and Smith normal forms and a few rational matrix helpers.
//!
//! Matrices here are at most a few dozen rows by seventeen columns, so the
//! algorithms are the plain Euclidean row/column reductions over `BigInt`.

use alloc::vec::Vec;
use core::mem;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lattice::Rational;

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Row-style Hermite normal form of an integer matrix.
///
/// `rows` spans the same ℤ-module as the input rows. Row `k` has its first
/// nonzero entry (positive) at column `pivots[k]`, pivot columns strictly
/// increase, and entries above each pivot are reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hermite {
    pub rows: IntMatrix,
    pub pivots: Vec<usize>,
}

fn sub_multiple(target: &mut [BigInt], source: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

fn negate(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        *x = -mem::take(x);
    }
}

pub fn hermite(input: &[Vec<BigInt>], ncols: usize) -> Hermite {
    let mut a: IntMatrix = input.to_vec();
    let nrows = a.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            let best = (r..nrows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(best) = best else { break };
            a.swap(r, best);
            let (head, tail) = a.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let mut clean = true;
            for row in tail.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                sub_multiple(row, pivot_row, &q);
                if !row[c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            negate(&mut a[r]);
        }
        let (head, tail) = a.split_at_mut(r);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let q = row[c].div_floor(&pivot_row[c]);
            sub_multiple(row, pivot_row, &q);
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Hermite { rows: a, pivots }
}

/// Smith normal form `U·M·V = D` of a square integer matrix. Only the
/// diagonal and the left transform `U` are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn row_sub(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    let src = m[source].clone();
    sub_multiple(&mut m[target], &src, q);
}

fn col_sub(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for row in m.iter_mut() {
        if !row[source].is_zero() {
            let delta = q * &row[source];
            row[target] -= delta;
        }
    }
}

pub fn smith(input: &[Vec<BigInt>]) -> Smith {
    let n = input.len();
    let mut a: IntMatrix = input.to_vec();
    let mut u = identity(n);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                // remaining block is zero
                return finish_smith(a, u);
            };
            a.swap(t, bi);
            u.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }

            let mut clean = true;
            for i in t + 1..n {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_sub(&mut a, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_sub(&mut a, j, t, &q);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match offender {
                Some((i, _)) => {
                    let minus_one = -BigInt::one();
                    row_sub(&mut a, t, i, &minus_one);
                    row_sub(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            negate(&mut a[t]);
            negate(&mut u[t]);
        }
    }
    finish_smith(a, u)
}

fn finish_smith(a: IntMatrix, left: IntMatrix) -> Smith {
    let diagonal = a
        .iter()
        .enumerate()
        .map(|(i, row)| row[i].clone())
        .collect();
    Smith { diagonal, left }
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &pivot;
            for j in c..n {
                let delta = &factor * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    det
}

/// Rank over ℚ of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r][c].clone();
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &pivot;
            for j in c..ncols {
                let delta = &factor * &a[r][j];
                a[i][j] -= delta;
            }
        }
        r += 1;
    }
    r
}
