//! Exact integer and rational linear algebra.
//!
//! Everything here works on [`BigInt`] / [`BigRational`] so that pivots in
//! Hermite and Smith reductions can grow without overflow. Matrices are small
//! (a few hundred entries at most); the algorithms favour clarity over speed.

mod normal_form;
mod feasibility;
mod rational;

use std::fmt;
use std::ops::{Index, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use normal_form::{hermite_normal_form, kernel_lattice_basis, smith_normal_form, SmithForm};
pub use rational::{rational_det, rational_rank, signature, solve_rational};
pub use feasibility::{is_feasible, Constraint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: String, found: String },
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::Dimension {
                expected: format!("{} entries", rows * cols),
                found: format!("{} entries", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers.
    ///
    /// Panics if the rows are ragged; intended for literals and tests.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend(r.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinAlgError::Dimension {
                    expected: format!("rows of length {cols}"),
                    found: format!("row of length {}", r.len()),
                });
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinAlgError::Dimension {
                    expected: format!("columns of length {rows}"),
                    found: format!("column of length {}", col.len()),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Concatenates columns: `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.rows != other.rows {
            return Err(LinAlgError::Dimension {
                expected: format!("{} rows", self.rows),
                found: format!("{} rows", other.rows),
            });
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Self::from_columns(self.rows, &cols)
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::Dimension {
                expected: format!("vector of length {}", self.cols),
                found: format!("vector of length {}", v.len()),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::Dimension {
                expected: format!("{} rows on the right", self.cols),
                found: format!("{} rows", rhs.rows),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Entries as `i64`, or `None` if any entry overflows.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        self.get(r, c)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on a shape mismatch; use [`IntMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix shapes do not match")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.row_vecs())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::Dimension {
            expected: "square matrix".into(),
            found: format!("{}x{}", m.rows, m.cols),
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.row_vecs();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Exact inverse of a matrix with determinant ±1.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix, LinAlgError> {
    let d = det_exact(m)?;
    if d.abs() != BigInt::one() {
        return Err(LinAlgError::NotUnimodular(d));
    }
    let n = m.rows;
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = m
                .row(r)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.extend((0..n).map(|c| {
                if c == r {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("unimodular matrix has full rank");
        aug.swap(col, piv);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let v = &f * &aug[col][c];
                    aug[r][c] -= v;
                }
            }
        }
    }
    let mut inv = IntMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let x = &aug[r][n + c];
            debug_assert!(x.is_integer());
            inv.set(r, c, x.to_integer());
        }
    }
    Ok(inv)
}

/// A point or direction with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![BigRational::zero(); n])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self(
            coords
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    /// Parses `"p/q"` or `"p"` per coordinate.
    pub fn from_strs(coords: &[&str]) -> Option<Self> {
        coords
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigRational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self(self.0.iter().map(|a| a * s).collect())
    }

    /// Pairing with an integer covector.
    pub fn dot_int(&self, w: &[BigInt]) -> BigRational {
        self.0
            .iter()
            .zip(w)
            .map(|(a, b)| a * BigRational::from_integer(b.clone()))
            .sum()
    }

    pub fn dot(&self, other: &Self) -> BigRational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl Index<usize> for RatVector {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", cells.join(", "))
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn gcd_all(v: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// 2×2 determinant `det[a b]` of two column vectors.
pub fn det2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}
