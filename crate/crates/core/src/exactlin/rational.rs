use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, LinAlgError};

/// Determinant of a square rational matrix given by rows.
pub fn rational_det(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

/// Unique solution of the square system `a x = b`, or `None` if singular.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let piv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

/// Signature (positive minus negative eigenvalues) of a symmetric matrix.
///
/// Uses symmetric Gaussian elimination (congruence), which preserves inertia
/// and stays exact over the rationals.
pub fn signature(m: &IntMatrix) -> Result<i64, LinAlgError> {
    if !m.is_symmetric() {
        return Err(LinAlgError::NotSymmetric);
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = m
        .row_vecs()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut sig = 0i64;
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // zero diagonal: find an off-diagonal entry and replace
                // x_i by x_i + x_j, which makes a[i][i] = 2 a[i][j] != 0
                let pair = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a[i][j].is_zero())
                        .map(|&j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                add_congruent(&mut a, i, j, &BigRational::one());
                i
            }
        };
        let d = a[p][p].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = -(&a[i][p] / &d);
            add_congruent(&mut a, i, p, &f);
        }
    }
    Ok(sig)
}

/// Row i += f * row j, then column i += f * column j.
fn add_congruent(a: &mut [Vec<BigRational>], i: usize, j: usize, f: &BigRational) {
    let n = a.len();
    for c in 0..n {
        let v = f * &a[j][c];
        a[i][c] += v;
    }
    for row in a.iter_mut() {
        let v = f * &row[j];
        row[i] += v;
    }
}

/// Rational rank of an integer matrix.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[rank][col];
            for c in col..ncols {
                let v = &f * &a[rank][c];
                a[r][c] -= v;
            }
        }
        rank += 1;
    }
    rank
}
