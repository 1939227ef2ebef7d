//! Spanning-tree counts of checkerboard graphs.

use crate::checkerboard::{CheckerboardGraph, HUB};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scalar::{self, Scalar};

/// `T(N)` from `T(0) = 1`, `T(1) = n1`, `T(N+1) = n_{N+1} T(N) + T(N-1)`.
///
/// Accepts the empty slice (`T(0) = 1`); every entry must be positive.
pub fn tree_count_recursion<T: Scalar>(twists: &[i64]) -> Result<T> {
    if let Some(pos) = twists.iter().position(|&n| n <= 0) {
        return Err(Error::NonPositiveTwist {
            index: pos + 1,
            value: twists[pos],
        });
    }
    continuant(twists)
}

/// The continuant recurrence without the positivity requirement; agrees with
/// the signed determinant for any nonzero twists.
pub fn continuant<T: Scalar>(twists: &[i64]) -> Result<T> {
    let (mut prev, mut cur) = (T::zero(), T::one());
    for &n in twists {
        let next = scalar::add(&scalar::mul(&T::from_int(n), &cur)?, &prev)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Graph Laplacian, counting parallel edges with multiplicity.
pub fn laplacian<T: Scalar>(g: &CheckerboardGraph) -> IntMatrix<T> {
    let n = g.vertex_count();
    let mut l = IntMatrix::<T>::zeros(n, n);
    for &(u, v) in g.edges() {
        l[(u, u)] = l[(u, u)].clone() + T::one();
        l[(v, v)] = l[(v, v)].clone() + T::one();
        l[(u, v)] = l[(u, v)].clone() - T::one();
        l[(v, u)] = l[(v, u)].clone() - T::one();
    }
    l
}

/// Matrix-Tree count: determinant of the Laplacian with the hub row and column removed.
pub fn tree_count_matrix<T: Scalar>(g: &CheckerboardGraph) -> Result<T> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() <= 1 {
        return Ok(T::one());
    }
    laplacian::<T>(g).without(HUB, HUB)?.determinant()
}
