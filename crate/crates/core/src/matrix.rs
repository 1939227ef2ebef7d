//! Dense integer matrices with exact, fraction-free determinants.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> IntMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_int(v)).collect()).collect())
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The matrix with one row and one column removed.
    pub fn without(&self, drop_row: usize, drop_col: usize) -> Result<Self> {
        if drop_row >= self.rows || drop_col >= self.cols {
            return Err(Error::IndexOutOfRange {
                row: drop_row,
                col: drop_col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.select(
            &(0..self.rows).filter(|&i| i != drop_row).collect::<Vec<_>>(),
            &(0..self.cols).filter(|&j| j != drop_col).collect::<Vec<_>>(),
        ))
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self[(i, j)].clone()))
            .collect();
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Exact determinant by Bareiss elimination; every division is exact.
    /// The empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = scalar::mul(&a[i][j], &a[k][k])?;
                    let rhs = scalar::mul(&a[i][k], &a[k][j])?;
                    a[i][j] = scalar::div(&scalar::sub(&lhs, &rhs)?, &prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Determinant of the matrix with `drop_row` and `drop_col` deleted.
    pub fn first_minor(&self, drop_row: usize, drop_col: usize) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.without(drop_row, drop_col)?.determinant()
    }

    /// Greatest common divisor of all `k x k` minors (the `k`-th determinantal
    /// divisor); 1 for `k = 0`, 0 if no `k x k` minor exists or all vanish.
    ///
    /// Enumerates every minor, so only suitable for small matrices.
    pub fn minor_gcd(&self, k: usize) -> Result<T> {
        if k == 0 {
            return Ok(T::one());
        }
        let mut g = T::zero();
        for rows in combinations(self.rows, k) {
            for cols in combinations(self.cols, k) {
                let d = self.select(&rows, &cols).determinant()?;
                g = g.gcd(&d);
                if g.is_one() {
                    return Ok(g);
                }
            }
        }
        Ok(g)
    }

    pub fn row_sums(&self) -> Result<Vec<T>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().try_fold(T::zero(), |acc, v| scalar::add(&acc, v)))
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for IntMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for IntMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for IntMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// All increasing `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix<i64> {
        IntMatrix::from_i64_rows(rows)
    }

    // Leibniz expansion over all permutations; the independent oracle for Bareiss.
    fn leibniz(a: &IntMatrix<i64>) -> i64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.rows();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                sign * (0..n).map(|i| a[(i, p[i])]).product::<i64>()
            })
            .sum()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(IntMatrix::<i64>::identity(3).determinant().unwrap(), 1);
        assert_eq!(IntMatrix::<i64>::zeros(0, 0).determinant().unwrap(), 1);
        assert_eq!(m(&[vec![3]]).determinant().unwrap(), 3);
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).determinant().unwrap(), -1);
        assert_eq!(
            m(&[vec![0, 2, 1], vec![0, 1, 4], vec![3, 1, 1]]).determinant().unwrap(),
            3 * (2 * 4 - 1)
        );
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).determinant().unwrap(), 0);
    }

    #[test]
    fn errors() {
        let a = m(&[vec![1, 2, 3]]);
        assert_eq!(a.determinant(), Err(Error::NotSquare { rows: 1, cols: 3 }));
        let sq = m(&[vec![2, -1], vec![-1, 2]]);
        assert!(matches!(sq.first_minor(2, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn trefoil_minors() {
        let cm = m(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(cm.first_minor(r, c).unwrap().abs(), 3);
            }
        }
        assert_eq!(m(&[vec![0]]).first_minor(0, 0).unwrap(), 1);
    }

    #[test]
    fn overflow_in_machine_ints() {
        let big = i64::MAX / 2;
        let a = m(&[vec![big, 1], vec![1, big]]);
        assert_eq!(a.determinant(), Err(Error::Overflow));
        let b: IntMatrix<BigInt> = IntMatrix::from_i64_rows(&[vec![big, 1], vec![1, big]]);
        assert_eq!(b.determinant().unwrap(), BigInt::from(big) * big - 1);
    }

    #[test]
    fn minor_gcds() {
        let cm = m(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(cm.minor_gcd(0).unwrap(), 1);
        assert_eq!(cm.minor_gcd(1).unwrap(), 1);
        assert_eq!(cm.minor_gcd(2).unwrap(), 3);
        assert_eq!(cm.minor_gcd(3).unwrap(), 0);
        assert_eq!(cm.minor_gcd(4).unwrap(), 0);
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(n in 1usize..=5, seed in proptest::collection::vec(-4i64..=4, 25)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
            let a = m(&rows);
            prop_assert_eq!(a.determinant().unwrap(), leibniz(&a));
            let big: IntMatrix<BigInt> = IntMatrix::from_i64_rows(&rows);
            prop_assert_eq!(big.determinant().unwrap(), BigInt::from(leibniz(&a)));
        }
    }
}
