//! Color propagation down the twists of a rational knot, and the determinant
//! and reduced coloring equation that fall out of it.
//!
//! A [`ColorState`] holds three polynomials `(P_l, P_m, P_r)` such that, with
//! top colors `a` and `b`, the three tracked strands carry `a + (b - a) * P`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::poly::MultilinearPoly;
use crate::scalar::{self, Scalar};
use crate::twist::TwistVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorState {
    left: MultilinearPoly,
    middle: MultilinearPoly,
    right: MultilinearPoly,
    twists: Vec<i64>,
}

impl Default for ColorState {
    fn default() -> Self {
        Self::initial()
    }
}

impl ColorState {
    /// State before any twist: `(1, 1, 0)`, i.e. colors `(b, b, a)`.
    pub fn initial() -> Self {
        Self {
            left: MultilinearPoly::one(0),
            middle: MultilinearPoly::one(0),
            right: MultilinearPoly::zero(0),
            twists: Vec::new(),
        }
    }

    pub fn left(&self) -> &MultilinearPoly {
        &self.left
    }

    pub fn middle(&self) -> &MultilinearPoly {
        &self.middle
    }

    pub fn right(&self) -> &MultilinearPoly {
        &self.right
    }

    /// Number of twists absorbed so far.
    pub fn step(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Absorbs the next twist, whose count is `n`.
    ///
    /// The polynomial update is symbolic in the fresh variable `n_{i+1}`; `n`
    /// is only recorded for later numeric evaluation. Even-indexed twists act
    /// on the left pair of strands, odd-indexed twists on the right pair.
    pub fn advance(&self, n: i64) -> Self {
        let index = self.twists.len() as u32 + 1;
        let mut twists = self.twists.clone();
        twists.push(n);
        if index.is_multiple_of(2) {
            Self {
                left: self.left.add_times_fresh(&self.right, index),
                middle: self.middle.add_times_fresh(&self.right, index),
                right: self.right.widened(index),
                twists,
            }
        } else {
            Self {
                left: self.left.widened(index),
                middle: self.middle.add_times_fresh(&self.left, index),
                right: self.right.add_times_fresh(&self.left, index),
                twists,
            }
        }
    }

    /// Colors `(l, m, r)` of the three tracked strands for top colors `a`, `b`.
    pub fn colors<T: Scalar>(&self, a: &T, b: &T) -> Result<(T, T, T)> {
        let values: Vec<T> = self.twists.iter().map(|&n| T::from_int(n)).collect();
        let diff = scalar::sub(b, a)?;
        let color = |p: &MultilinearPoly| -> Result<T> {
            let v = p.evaluate(&values)?;
            scalar::add(a, &scalar::mul(&diff, &v)?)
        };
        Ok((color(&self.left)?, color(&self.middle)?, color(&self.right)?))
    }
}

/// Folds [`ColorState::advance`] over every twist of `tw`.
pub fn propagate(tw: &TwistVector) -> ColorState {
    tw.iter().fold(ColorState::initial(), |state, &n| state.advance(n))
}

/// Bottom colors `(l, m, r)` of `R(tw)` for top colors `a`, `b`.
pub fn propagate_numeric<T: Scalar>(tw: &TwistVector, a: &T, b: &T) -> Result<(T, T, T)> {
    propagate(tw).colors(a, b)
}

/// The polynomial whose value is the determinant: `p_N^e` for even `N`,
/// `p_N^o` for odd `N`.
pub fn determinant_polynomial(tw: &TwistVector) -> MultilinearPoly {
    let state = propagate(tw);
    if tw.twist_count().is_multiple_of(2) {
        state.left
    } else {
        state.right
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Determinant<T> {
    pub signed: T,
    pub absolute: T,
}

pub fn determinant_as<T: Scalar>(tw: &TwistVector) -> Result<Determinant<T>> {
    let signed: T = determinant_polynomial(tw).evaluate_i64(tw)?;
    let absolute = signed.abs();
    Ok(Determinant { signed, absolute })
}

/// Exact determinant of `R(tw)`, signed and absolute.
pub fn determinant(tw: &TwistVector) -> Determinant<BigInt> {
    determinant_as(tw).expect("arbitrary precision arithmetic cannot overflow")
}

/// `D * (b - a) = 0 (mod r)`, the single coloring equation left after closure;
/// `a` stays free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedEquation {
    pub polynomial: MultilinearPoly,
    pub coefficient: BigInt,
}

impl ReducedEquation {
    pub fn free_unknown(&self) -> &'static str {
        "a"
    }

    pub fn bound_unknown(&self) -> &'static str {
        "b"
    }

    /// The equation with the polynomial left unevaluated, e.g. `(1 + n1*n2)*(b-a)=0`.
    pub fn symbolic(&self) -> String {
        let poly = self.polynomial.to_string();
        if self.polynomial.len() == 1 {
            format!("{poly}*(b-a)=0")
        } else {
            format!("({poly})*(b-a)=0")
        }
    }
}

impl fmt::Display for ReducedEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*(b-a)=0", self.coefficient)
    }
}

pub fn reduced_cse(tw: &TwistVector) -> ReducedEquation {
    let polynomial = determinant_polynomial(tw);
    let coefficient = polynomial
        .evaluate_i64(tw)
        .expect("arbitrary precision arithmetic cannot overflow");
    ReducedEquation {
        polynomial,
        coefficient,
    }
}
