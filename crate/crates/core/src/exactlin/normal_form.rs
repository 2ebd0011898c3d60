use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Diagonal of the Smith normal form.
///
/// `divisors` has `min(rows, cols)` entries, non-negative, each dividing the
/// next; trailing entries are zero when the matrix is rank deficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub divisors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// True when every nonzero invariant factor is 1, i.e. the row span is a
    /// direct summand of the ambient lattice (for full row rank input).
    pub fn is_unimodular_span(&self) -> bool {
        self.divisors[..self.rank].iter().all(One::is_one)
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.row_vecs();
    let k = r.min(c);
    for t in 0..k {
        loop {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                return finish(a, k);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                for j in t..c {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let p = a[t][t].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..c {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    finish(a, k)
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn finish(a: Vec<Vec<BigInt>>, k: usize) -> SmithForm {
    let divisors: Vec<BigInt> = (0..k).map(|t| a[t][t].abs()).collect();
    let rank = divisors.iter().filter(|d| !d.is_zero()).count();
    SmithForm { divisors, rank }
}

/// Row-style Hermite normal form.
///
/// Rows are combined by unimodular operations until the matrix is in echelon
/// form with positive pivots and every entry above a pivot reduced into
/// `[0, pivot)`. Zero rows are kept at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.row_vecs();
    echelonize(&mut a, m.cols());
    IntMatrix::from_rows(a).expect("row lengths preserved")
}

/// Puts `a` into Hermite form, pivoting only in columns `< pivot_cols` but
/// applying every operation to whole rows. Returns the number of pivots.
fn echelonize(a: &mut [Vec<BigInt>], pivot_cols: usize) -> usize {
    let nrows = a.len();
    let mut row = 0;
    for col in 0..pivot_cols {
        if row == nrows {
            break;
        }
        loop {
            let piv = (row..nrows)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
            let Some(p) = piv else { break };
            a.swap(row, p);
            let mut done = true;
            for i in row + 1..nrows {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = &a[i][col] / &a[row][col];
                sub_row(a, i, row, &q);
                done &= a[i][col].is_zero();
            }
            if done {
                break;
            }
        }
        if a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            for x in a[row].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..row {
            let q = a[i][col].div_floor(&a[row][col]);
            if !q.is_zero() {
                sub_row(a, i, row, &q);
            }
        }
        row += 1;
    }
    row
}

/// `a[target] -= q * a[src]`
fn sub_row(a: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    let (t, s) = if target < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s) {
        *x -= q * y;
    }
}

/// Saturated basis of the integer kernel `{x in Z^c : m x = 0}`.
///
/// Columns of the result form the basis; the basis is canonical (the
/// transpose is in Hermite normal form), so equal kernels give equal output.
pub fn kernel_lattice_basis(m: &IntMatrix) -> IntMatrix {
    let (r, c) = (m.rows(), m.cols());
    // [m^T | I] row-reduced on the first r columns: rows whose left part
    // vanishes carry a unimodular-complete kernel basis on the right.
    let mut aug: Vec<Vec<BigInt>> = (0..c)
        .map(|i| {
            let mut row = m.column(i);
            row.extend((0..c).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rank = echelonize(&mut aug, r);
    let mut basis: Vec<Vec<BigInt>> = aug[rank..].iter().map(|row| row[r..].to_vec()).collect();
    if basis.is_empty() {
        return IntMatrix::zeros(c, 0);
    }
    echelonize(&mut basis, c);
    IntMatrix::from_rows(basis)
        .expect("row lengths preserved")
        .transpose()
}
