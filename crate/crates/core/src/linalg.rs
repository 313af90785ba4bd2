//! Exact dense linear algebra over a pluggable field.
//!
//! Everything here is desk-scale (matrix sides are Catalan numbers of small
//! arguments), so plain Gaussian elimination is used throughout: rank and
//! inversion for hom-space dimensions and fiber data, symmetric elimination
//! with pivot-sign tracking for positivity, and a Smith normal form over
//! `K[x]` whose diagonal gives the invariant factors deciding matrix
//! similarity.

use crate::scalars::{Field, Poly, Ring};
use crate::Error;
use std::fmt;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

impl<K: Ring> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Domain("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn diagonal(values: &[K]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                K::zero()
            }
        })
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

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<L: Ring>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Domain("matrix dimension mismatch".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Domain("matrix dimension mismatch".into()));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = K::zero();
            for t in 0..self.cols {
                acc = acc + self[(i, t)].clone() * rhs[(t, j)].clone();
            }
            acc
        }))
    }

    pub fn trace(&self) -> Result<K, Error> {
        if !self.is_square() {
            return Err(Error::Domain("trace of a non-square matrix".into()));
        }
        let mut acc = K::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        Ok(acc)
    }

    pub fn is_upper_triangular(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..i.min(self.cols) {
                if !self[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &K) {
        for j in 0..self.cols {
            self[(r, j)] = self[(r, j)].clone() * c.clone();
        }
    }

    /// `row_r -= factor * row_src`
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &K) {
        for j in 0..self.cols {
            let delta = factor.clone() * self[(src, j)].clone();
            self[(r, j)] = self[(r, j)].clone() - delta;
        }
    }
}

impl<K: Field> Matrix<K> {
    /// Gauss-Jordan inverse; `SingularMatrix` when rank deficient.
    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::Domain("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !work[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            work.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let pivot_inv = work[(col, col)].inv()?;
            work.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for r in 0..n {
                if r == col || work[(r, col)].is_zero() {
                    continue;
                }
                let factor = work[(r, col)].clone();
                work.sub_scaled_row(r, col, &factor);
                inv.sub_scaled_row(r, col, &factor);
            }
        }
        Ok(inv)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        let mut rank = 0;
        for col in 0..work.cols {
            if rank == work.rows {
                break;
            }
            let Some(pivot_row) = (rank..work.rows).find(|&r| !work[(r, col)].is_zero())
            else {
                continue;
            };
            work.swap_rows(rank, pivot_row);
            let pivot_inv = work[(rank, col)].inv().expect("nonzero pivot");
            work.scale_row(rank, &pivot_inv);
            for r in 0..work.rows {
                if r == rank || work[(r, col)].is_zero() {
                    continue;
                }
                let factor = work[(r, col)].clone();
                work.sub_scaled_row(r, rank, &factor);
            }
            rank += 1;
        }
        rank
    }

    /// Doolittle LU factorization without pivoting: `self = L * U` with `L`
    /// lower unitriangular. Errors when a leading principal minor vanishes.
    pub fn lu_no_pivot(&self) -> Result<(Self, Self), Error> {
        if !self.is_square() {
            return Err(Error::Domain("LU of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut lower = Self::identity(n);
        let mut upper = self.clone();
        for col in 0..n {
            let pivot = upper[(col, col)].clone();
            if pivot.is_zero() {
                return Err(Error::SingularMatrix);
            }
            let pivot_inv = pivot.inv()?;
            for r in col + 1..n {
                let factor = upper[(r, col)].clone() * pivot_inv.clone();
                if factor.is_zero() {
                    continue;
                }
                upper.sub_scaled_row(r, col, &factor);
                lower[(r, col)] = factor;
            }
        }
        Ok((lower, upper))
    }

}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.entries[i * self.cols + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.entries[i * self.cols + j]
    }
}

impl<K: Ring> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Outcome of the exact positive-semidefiniteness test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PsdVerdict {
    Psd,
    /// Symmetric elimination met a negative pivot at this index.
    NegativePivot { index: usize },
    /// A zero pivot with a nonzero residual row (indefinite direction).
    ZeroPivotDefect { index: usize },
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd)
    }
}

/// Exact PSD test by symmetric (LDL-style) elimination with pivot-sign
/// tracking. The matrix must be symmetric with recognizably-real entries.
pub fn psd_verdict<K: Field>(g: &Matrix<K>) -> Result<PsdVerdict, Error> {
    if !g.is_square() {
        return Err(Error::Domain("PSD test on a non-square matrix".into()));
    }
    let n = g.rows();
    let mut work = g.clone();
    for k in 0..n {
        let pivot = work[(k, k)].clone();
        let sign = pivot
            .real_sign()
            .ok_or_else(|| Error::NonRealParameter(pivot.to_string()))?;
        match sign {
            -1 => return Ok(PsdVerdict::NegativePivot { index: k }),
            0 => {
                // PSD forces the whole residual row to vanish
                for j in k + 1..n {
                    if !work[(k, j)].is_zero() {
                        return Ok(PsdVerdict::ZeroPivotDefect { index: k });
                    }
                }
            }
            _ => {
                let pivot_inv = pivot.inv()?;
                for i in k + 1..n {
                    if work[(i, k)].is_zero() {
                        continue;
                    }
                    let factor = work[(i, k)].clone() * pivot_inv.clone();
                    for j in k..n {
                        let delta = factor.clone() * work[(k, j)].clone();
                        work[(i, j)] = work[(i, j)].clone() - delta;
                    }
                }
            }
        }
    }
    Ok(PsdVerdict::Psd)
}

/// Characteristic matrix `xI - m` over `K[x]`.
pub fn char_matrix<K: Field>(m: &Matrix<K>) -> Matrix<Poly<K>> {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        let entry = Poly::constant(-m[(i, j)].clone());
        if i == j {
            entry + Poly::var()
        } else {
            entry
        }
    })
}

/// Diagonal of the Smith normal form of a square polynomial matrix, monic
/// where nonzero, in divisibility order. Applied to `xI - B` this yields the
/// invariant factors of `B`, a complete similarity invariant.
pub fn smith_diagonal<K: Field>(m: &Matrix<Poly<K>>) -> Result<Vec<Poly<K>>, Error> {
    if m.rows() != m.cols() {
        return Err(Error::Domain("Smith form of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut w = m.clone();
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        'pivot: loop {
            // entry of minimal degree in the remaining block
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if let Some(deg) = w[(i, j)].degree() {
                        if best.map_or(true, |(_, _, d)| deg < d) {
                            best = Some((i, j, deg));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                // remaining block is zero
                break 'pivot;
            };
            w.swap_rows(t, bi);
            if bj != t {
                for r in 0..n {
                    let tmp = w[(r, t)].clone();
                    w[(r, t)] = w[(r, bj)].clone();
                    w[(r, bj)] = tmp;
                }
            }

            // clear the pivot column and row by Euclidean division
            let mut dirty = false;
            for i in t + 1..n {
                if w[(i, t)].is_zero() {
                    continue;
                }
                let (q, r) = w[(i, t)].divmod(&w[(t, t)])?;
                for j in t..n {
                    let delta = q.clone() * w[(t, j)].clone();
                    w[(i, j)] = w[(i, j)].clone() - delta;
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if w[(t, j)].is_zero() {
                    continue;
                }
                let (q, r) = w[(t, j)].divmod(&w[(t, t)])?;
                for i in t..n {
                    let delta = q.clone() * w[(i, t)].clone();
                    w[(i, j)] = w[(i, j)].clone() - delta;
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // pivot must divide the whole remaining block
            for i in t + 1..n {
                for j in t + 1..n {
                    if !w[(t, t)].divides(&w[(i, j)]) {
                        for jj in t..n {
                            let add = w[(i, jj)].clone();
                            w[(t, jj)] = w[(t, jj)].clone() + add;
                        }
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        let entry = w[(t, t)].clone();
        diag.push(if entry.is_zero() {
            entry
        } else {
            entry.monic()?
        });
    }
    Ok(diag)
}

/// Invariant factors of a square matrix: the nonconstant Smith diagonal
/// entries of `xI - m`.
pub fn invariant_factors<K: Field>(m: &Matrix<K>) -> Result<Vec<Poly<K>>, Error> {
    let diag = smith_diagonal(&char_matrix(m))?;
    Ok(diag.into_iter().filter(|p| !p.is_constant()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rat;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_and_rank() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(a.rank(), 2);

        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_err());
        assert_eq!(singular.rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn trace_and_transpose() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.trace().unwrap(), Rat::from_int(5));
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn psd_detection() {
        assert!(psd_verdict(&m(&[&[2, 1], &[1, 2]])).unwrap().is_psd());
        assert!(psd_verdict(&m(&[&[1, 1], &[1, 1]])).unwrap().is_psd());
        assert_eq!(
            psd_verdict(&m(&[&[1, 2], &[2, 1]])).unwrap(),
            PsdVerdict::NegativePivot { index: 1 }
        );
        assert_eq!(
            psd_verdict(&m(&[&[0, 1], &[1, 0]])).unwrap(),
            PsdVerdict::ZeroPivotDefect { index: 0 }
        );
        assert_eq!(
            psd_verdict(&m(&[&[-1, 0], &[0, 1]])).unwrap(),
            PsdVerdict::NegativePivot { index: 0 }
        );
    }

    #[test]
    fn lu_factorization() {
        let a = m(&[&[2, 1, 0], &[4, 5, 1], &[-2, 3, 7]]);
        let (l, u) = a.lu_no_pivot().unwrap();
        assert_eq!(l.mul(&u).unwrap(), a);
        assert!(u.is_upper_triangular());
        // zero leading minor
        assert!(m(&[&[0, 1], &[1, 0]]).lu_no_pivot().is_err());
    }

    #[test]
    fn invariant_factors_detect_similarity() {
        // companion matrix of (x-1)(x-2) = x^2 - 3x + 2 vs diag(1, 2)
        let companion = m(&[&[0, -2], &[1, 3]]);
        let diag = m(&[&[1, 0], &[0, 2]]);
        assert_eq!(
            invariant_factors(&companion).unwrap(),
            invariant_factors(&diag).unwrap()
        );

        // Jordan block at 1 vs identity: same char poly, different factors
        let jordan = m(&[&[1, 1], &[0, 1]]);
        let id = Matrix::<Rat>::identity(2);
        assert_ne!(
            invariant_factors(&jordan).unwrap(),
            invariant_factors(&id).unwrap()
        );
        // identity has two linear invariant factors
        assert_eq!(invariant_factors(&id).unwrap().len(), 2);
        assert_eq!(invariant_factors(&jordan).unwrap().len(), 1);
    }
}
