//! Small dense exact linear algebra over [`Q`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::check_dim;
use crate::rational::{format_q, serde_q_vec, Q};
use crate::{Error, Result};

/// A vector in the ambient space; roots, weights and differentials of
/// characters all live here.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "serde_q_vec")] pub Vec<Q>);

/// Roots are weights that happen to lie in the root set.
pub type Root = Weight;

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut w = Self::zeros(dim);
        w.0[i] = Q::one();
        w
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// Euclidean dot product of coordinates (not the root-system form).
    pub fn dot(&self, other: &Weight) -> Q {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        check_dim(self.dim(), other.dim())?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        check_dim(self.dim(), other.dim())?;
        Ok(self - other)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_q(x))?;
        }
        write!(f, ")")
    }
}

/// Square rational matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QMatrix {
    n: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![Q::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Q::one();
        }
        QMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "matrix must be square: row of length {} in a {n}-row matrix",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(QMatrix { n, data })
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Weight]) -> Result<Self> {
        let n = cols.len();
        let mut m = QMatrix {
            n,
            data: vec![Q::zero(); n * n],
        };
        for (j, c) in cols.iter().enumerate() {
            check_dim(n, c.dim())?;
            for i in 0..n {
                m.data[i * n + j] = c.0[i].clone();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.n + j]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut Q {
        &mut self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.data.chunks(self.n.max(1)).map(<[Q]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Weight {
        Weight((0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }

    pub fn transpose(&self) -> QMatrix {
        let n = self.n;
        let mut t = self.clone();
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = vec![Q::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        QMatrix { n, data: out }
    }

    pub fn apply(&self, v: &Weight) -> Result<Weight> {
        check_dim(self.n, v.dim())?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Weight) -> Weight {
        let n = self.n;
        Weight(
            (0..n)
                .map(|i| {
                    let mut acc = Q::zero();
                    for (j, x) in v.0.iter().enumerate() {
                        let a = &self.data[i * n + j];
                        if !a.is_zero() && !x.is_zero() {
                            acc += a * x;
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    /// Applies the matrix to an integer vector; fails if the image is not integral.
    pub fn apply_int(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        let w = self.apply(&Weight(v.iter().map(|x| Q::from_integer(x.clone())).collect()))?;
        w.0.into_iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(Error::NonIntegral(format!(
                        "matrix sends an integer vector to one with entry {}",
                        format_q(&x)
                    )))
                }
            })
            .collect()
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = QMatrix::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
        QMatrix::from_rows(inv).ok()
    }
}

/// Rank of a family of vectors (all of the same dimension).
pub fn rank(vectors: &[Weight]) -> usize {
    let mut rows: Vec<Vec<Q>> = vectors.iter().map(|v| v.0.clone()).collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &rows[r][col];
            for j in col..width {
                let t = &rows[r][j] * &f;
                rows[i][j] -= t;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Sylvester's criterion on a symmetric matrix.
pub fn is_positive_definite(m: &QMatrix) -> bool {
    // Symmetric Gaussian elimination: every pivot must be positive.
    let n = m.dim();
    let mut a = m.rows();
    for k in 0..n {
        if a[k][k] <= Q::zero() {
            return false;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &a[k][j] * &f;
                a[i][j] -= t;
            }
        }
    }
    true
}
