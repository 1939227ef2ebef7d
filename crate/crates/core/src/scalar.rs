//! Exact integer scalars.
//!
//! Every computation in the crate is generic over [`Scalar`], which is
//! implemented for the machine integers `i64`/`i128` and for [`num_bigint::BigInt`].
//! Arithmetic goes through the checked helpers below, so a machine integer that
//! runs out of range yields [`Error::Overflow`] instead of a wrapped value.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + Send
    + Sync
{
    fn from_int(value: i64) -> Self {
        <Self as FromPrimitive>::from_i64(value).expect("every scalar type holds an i64")
    }

    fn from_count(value: u64) -> Result<Self> {
        <Self as FromPrimitive>::from_u64(value).ok_or(Error::Overflow)
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + Send
        + Sync
{
}

#[inline]
pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn div<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_div(b).ok_or(Error::Overflow)
}
