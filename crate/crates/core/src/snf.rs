//! Smith normal form over the integers.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scalar::{self, Scalar};

/// Invariant factors `d1 | d2 | ...`, non-negative, zero-padded to `min(rows, cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub diagonal: Vec<T>,
    rows: usize,
    cols: usize,
}

impl<T: Scalar> SnfResult<T> {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Product of the nonzero invariant factors.
    pub fn torsion_product(&self) -> Result<T> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .try_fold(T::one(), |acc, d| scalar::mul(&acc, d))
    }

    /// Number of solutions mod `r` of `M x = 0` where `x` ranges over all
    /// columns: `gcd(d_i, r)` per invariant factor (a zero factor gives `r`),
    /// times `r` for each column beyond the diagonal.
    pub fn solution_count_mod(&self, r: u64) -> Result<T> {
        if r < 2 {
            return Err(Error::BadModulus(r));
        }
        let modulus = T::from_count(r)?;
        let mut count = T::one();
        for d in &self.diagonal {
            count = scalar::mul(&count, &d.gcd(&modulus))?;
        }
        for _ in self.diagonal.len()..self.cols {
            count = scalar::mul(&count, &modulus)?;
        }
        Ok(count)
    }
}

/// Reduces `m` to Smith normal form with integer row and column operations.
pub fn smith_normal_form<T: Scalar>(m: &IntMatrix<T>) -> Result<SnfResult<T>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let size = rows.min(cols);

    for t in 0..size {
        let Some((pi, pj)) = smallest_nonzero(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = scalar::sub(&a[i][j], &scalar::mul(&q, &a[t][j])?)?;
                        a[i][j] = v;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = scalar::sub(&row[j], &scalar::mul(&q, &row[t])?)?;
                        row[j] = v;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot survived; promote it
                let in_col = smallest_nonzero(&a, t..rows, t..t + 1);
                let in_row = smallest_nonzero(&a, t..t + 1, t..cols);
                let (ci, _) = in_col.expect("pivot is nonzero");
                let (_, rj) = in_row.expect("pivot is nonzero");
                if a[ci][t].abs() <= a[t][rj].abs() {
                    a.swap(t, ci);
                } else {
                    swap_cols(&mut a, t, rj);
                }
                continue;
            }
            let pivot = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = scalar::add(&a[t][j], &a[i][j])?;
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        a[t][t] = a[t][t].abs();
    }

    let diagonal = (0..size).map(|i| a[i][i].clone()).collect();
    Ok(SnfResult {
        diagonal,
        rows,
        cols,
    })
}

fn smallest_nonzero<T: Scalar>(
    a: &[Vec<T>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols<T>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix<i64> {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn trefoil() {
        let cm = m(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let snf = smith_normal_form(&cm).unwrap();
        assert_eq!(snf.diagonal, vec![1, 3, 0]);
        assert_eq!(snf.rank(), 2);
        assert_eq!(snf.torsion_product().unwrap(), 3);
        assert_eq!(snf.solution_count_mod(3).unwrap(), 9);
        assert_eq!(snf.solution_count_mod(2).unwrap(), 2);
        assert_eq!(snf.solution_count_mod(1), Err(Error::BadModulus(1)));
    }

    #[test]
    fn identity_and_zero() {
        let snf = smith_normal_form(&IntMatrix::<i64>::identity(4)).unwrap();
        assert_eq!(snf.diagonal, vec![1; 4]);
        let z = smith_normal_form(&IntMatrix::<i64>::zeros(2, 3)).unwrap();
        assert_eq!(z.diagonal, vec![0, 0]);
        assert_eq!(z.solution_count_mod(5).unwrap(), 125);
        let empty = smith_normal_form(&IntMatrix::<i64>::zeros(0, 0)).unwrap();
        assert!(empty.diagonal.is_empty());
    }

    #[test]
    fn needs_divisibility_fixup() {
        // diag(2, 3) is not in Smith form; the chain is (1, 6)
        let snf = smith_normal_form(&m(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(snf.diagonal, vec![1, 6]);
        let snf = smith_normal_form(&m(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]])).unwrap();
        assert_eq!(snf.diagonal, vec![2, 2, 60]);
    }

    // d1 * ... * dk equals the gcd of all k x k minors.
    fn check_against_minors(rows: &[Vec<i64>]) {
        let a = m(rows);
        let snf = smith_normal_form(&a).unwrap();
        let mut prefix = 1i64;
        for (k, d) in snf.diagonal.iter().enumerate() {
            assert!(*d >= 0);
            if k + 1 < snf.diagonal.len() && *d != 0 {
                assert_eq!(snf.diagonal[k + 1] % d, 0, "chain broken: {:?}", snf.diagonal);
            }
            if *d == 0 {
                assert!(snf.diagonal[k..].iter().all(|x| *x == 0));
            }
            prefix *= d;
            assert_eq!(prefix, a.minor_gcd(k + 1).unwrap(), "k = {k}, {:?}", snf.diagonal);
        }
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(
            r in 1usize..=4,
            c in 1usize..=4,
            seed in proptest::collection::vec(-6i64..=6, 16),
        ) {
            let rows: Vec<Vec<i64>> = (0..r).map(|i| seed[i * c..(i + 1) * c].to_vec()).collect();
            check_against_minors(&rows);
        }

        #[test]
        fn bigint_agrees_with_i64(seed in proptest::collection::vec(-9i64..=9, 9)) {
            let rows: Vec<Vec<i64>> = (0..3).map(|i| seed[i * 3..(i + 1) * 3].to_vec()).collect();
            let small = smith_normal_form(&m(&rows)).unwrap();
            let big = smith_normal_form(&IntMatrix::<BigInt>::from_i64_rows(&rows)).unwrap();
            let expect: Vec<BigInt> = small.diagonal.iter().map(|&d| BigInt::from(d)).collect();
            prop_assert_eq!(big.diagonal, expect);
        }
    }
}
