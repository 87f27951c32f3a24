//! Integer matrices and their Smith normal form.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[i64]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, &d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal_entries(&self) -> Vec<i64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    /// Exact product, failing on overflow.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)] as i128;
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)] as i128 + a * rhs[(k, j)] as i128;
                    out[(i, j)] = i64::try_from(v).map_err(|_| Error::Overflow)?;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free elimination (Bareiss); square matrices only.
    pub fn determinant(&self) -> Result<i64> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                        .ok_or(Error::Overflow)?;
                    a[i][j] = v / prev;
                }
            }
            prev = a[k][k];
        }
        i64::try_from(sign * a[n - 1][n - 1]).map_err(|_| Error::Overflow)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal with
/// `d[0][0] | d[1][1] | ...`, all nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries of `d`, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<i64> {
        self.d.diagonal_entries().into_iter().filter(|&x| x != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Working copy in i128 with checked arithmetic.
struct Work {
    rows: usize,
    cols: usize,
    a: Vec<i128>,
    u: Vec<i128>,
    v: Vec<i128>,
    track: bool,
}

impl Work {
    fn at(&self, i: usize, j: usize) -> i128 {
        self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            self.a.swap(i * self.cols + j, k * self.cols + j);
        }
        if self.track {
            for j in 0..self.rows {
                self.u.swap(i * self.rows + j, k * self.rows + j);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.rows {
            self.a.swap(i * self.cols + j, i * self.cols + k);
        }
        if self.track {
            for i in 0..self.cols {
                self.v.swap(i * self.cols + j, i * self.cols + k);
            }
        }
    }

    /// row_i += q * row_k
    fn add_row(&mut self, i: usize, k: usize, q: i128) -> Result<()> {
        let c = self.cols;
        for j in 0..c {
            let x = self.a[k * c + j];
            if x != 0 {
                let y = &mut self.a[i * c + j];
                *y = x.checked_mul(q).and_then(|t| y.checked_add(t)).ok_or(Error::Overflow)?;
            }
        }
        if self.track {
            let r = self.rows;
            for j in 0..r {
                let x = self.u[k * r + j];
                if x != 0 {
                    let y = &mut self.u[i * r + j];
                    *y = x.checked_mul(q).and_then(|t| y.checked_add(t)).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(())
    }

    /// col_j += q * col_k
    fn add_col(&mut self, j: usize, k: usize, q: i128) -> Result<()> {
        let c = self.cols;
        for i in 0..self.rows {
            let x = self.a[i * c + k];
            if x != 0 {
                let y = &mut self.a[i * c + j];
                *y = x.checked_mul(q).and_then(|t| y.checked_add(t)).ok_or(Error::Overflow)?;
            }
        }
        if self.track {
            for i in 0..c {
                let x = self.v[i * c + k];
                if x != 0 {
                    let y = &mut self.v[i * c + j];
                    *y = x.checked_mul(q).and_then(|t| y.checked_add(t)).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        let c = self.cols;
        for x in &mut self.a[i * c..(i + 1) * c] {
            *x = -*x;
        }
        if self.track {
            let r = self.rows;
            for x in &mut self.u[i * r..(i + 1) * r] {
                *x = -*x;
            }
        }
    }

    /// Smallest nonzero |entry| in the trailing block starting at (t, t).
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.at(i, j).abs();
                if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, i, j));
                    if x == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn reduce(&mut self) -> Result<()> {
        let n = self.rows.min(self.cols);
        for t in 0..n {
            let Some((pi, pj)) = self.min_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.at(t, t);
                let mut dirty = false;
                for i in t + 1..self.rows {
                    let x = self.at(i, t);
                    if x != 0 {
                        self.add_row(i, t, -nearest_quotient(x, p))?;
                        dirty |= self.at(i, t) != 0;
                    }
                }
                for j in t + 1..self.cols {
                    let x = self.at(t, j);
                    if x != 0 {
                        self.add_col(j, t, -nearest_quotient(x, p))?;
                        dirty |= self.at(t, j) != 0;
                    }
                }
                if dirty {
                    // a remainder smaller than the pivot survived; promote it
                    let in_col = (t + 1..self.rows)
                        .filter(|&i| self.at(i, t) != 0)
                        .min_by_key(|&i| self.at(i, t).abs());
                    let in_row = (t + 1..self.cols)
                        .filter(|&j| self.at(t, j) != 0)
                        .min_by_key(|&j| self.at(t, j).abs());
                    match (in_col, in_row) {
                        (Some(i), Some(j)) if self.at(t, j).abs() < self.at(i, t).abs() => {
                            self.swap_cols(t, j)
                        }
                        (Some(i), _) => self.swap_rows(t, i),
                        (None, Some(j)) => self.swap_cols(t, j),
                        (None, None) => unreachable!(),
                    }
                    continue;
                }
                if p.abs() != 1 {
                    let bad = (t + 1..self.rows)
                        .find(|&i| (t + 1..self.cols).any(|j| self.at(i, j) % p != 0));
                    if let Some(i) = bad {
                        self.add_row(t, i, 1)?;
                        continue;
                    }
                }
                break;
            }
            if self.at(t, t) < 0 {
                self.negate_row(t);
            }
        }
        Ok(())
    }
}

/// `q` minimizing `|x - q p|`; keeps the transforms from growing as fast as
/// floor division does.
fn nearest_quotient(x: i128, p: i128) -> i128 {
    let q = x.div_euclid(p);
    if 2 * x.rem_euclid(p) > p.abs() {
        q + p.signum()
    } else {
        q
    }
}

fn to_matrix(rows: usize, cols: usize, v: Vec<i128>) -> Result<IntMatrix> {
    let entries = v
        .into_iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
        .collect::<Result<_>>()?;
    Ok(IntMatrix {
        rows,
        cols,
        entries,
    })
}

fn run(m: &IntMatrix, track: bool) -> Result<Work> {
    let ident = |n: usize| {
        let mut v = vec![0i128; if track { n * n } else { 0 }];
        if track {
            for i in 0..n {
                v[i * n + i] = 1;
            }
        }
        v
    };
    let mut w = Work {
        rows: m.rows,
        cols: m.cols,
        a: m.entries.iter().map(|&x| x as i128).collect(),
        u: ident(m.rows),
        v: ident(m.cols),
        track,
    };
    w.reduce()?;
    Ok(w)
}

/// Smith normal form with transformation matrices.
///
/// Entries are machine integers; intermediate values are carried in 128 bits
/// and [`Error::Overflow`] is returned if anything leaves that range.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithDecomposition> {
    let w = run(m, true)?;
    Ok(SmithDecomposition {
        u: to_matrix(w.rows, w.rows, w.u)?,
        d: to_matrix(w.rows, w.cols, w.a)?,
        v: to_matrix(w.cols, w.cols, w.v)?,
    })
}

/// Invariant factors only (nonzero diagonal of the Smith form), skipping `u` and `v`.
pub fn invariant_factors(m: &IntMatrix) -> Result<Vec<i64>> {
    let w = run(m, false)?;
    (0..w.rows.min(w.cols))
        .map(|i| w.at(i, i))
        .filter(|&x| x != 0)
        .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
        .collect()
}
