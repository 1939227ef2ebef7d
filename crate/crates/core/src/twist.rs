use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The twist counts `(n1, ..., nN)` of a rational knot `R(n1, ..., nN)`.
///
/// Entries are signed (the sign follows the checkerboard convention) and never
/// zero; the vector is never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistVector(Vec<i64>);

impl TwistVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyTwistVector);
        }
        if let Some(pos) = entries.iter().position(|&n| n == 0) {
            return Err(Error::ZeroTwist { index: pos + 1 });
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Number of twists `N`.
    pub fn twist_count(&self) -> usize {
        self.0.len()
    }

    /// `n_i`, 1-based.
    pub fn get(&self, index: usize) -> Option<i64> {
        index.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    pub fn crossing_count(&self) -> u64 {
        self.0.iter().map(|n| n.unsigned_abs()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&n| n > 0)
    }

    /// Fails with [`Error::NonPositiveTwist`] on the first entry that is not positive.
    pub fn require_positive(&self) -> Result<()> {
        match self.0.iter().position(|&n| n <= 0) {
            Some(pos) => Err(Error::NonPositiveTwist {
                index: pos + 1,
                value: self.0[pos],
            }),
            None => Ok(()),
        }
    }
}

impl Deref for TwistVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl TryFrom<Vec<i64>> for TwistVector {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

/// Comma separated signed integers, e.g. `4,-3`; whitespace is ignored.
impl FromStr for TwistVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("invalid twist entry {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, n) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Every twist vector of length `1..=max_len` with entries drawn from `values`,
/// shortest first, then in odometer order.
pub fn all_vectors(values: &[i64], max_len: usize) -> Vec<TwistVector> {
    let base = values.len();
    let mut out = Vec::new();
    if base == 0 {
        return out;
    }
    for len in 1..=max_len {
        for code in 0..base.pow(len as u32) {
            let mut rest = code;
            let mut entries = vec![0i64; len];
            for slot in entries.iter_mut().rev() {
                *slot = values[rest % base];
                rest /= base;
            }
            out.push(TwistVector(entries));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_whitespace() {
        let tw: TwistVector = " 4 , -3 ".parse().unwrap();
        assert_eq!(tw.entries(), &[4, -3]);
        assert_eq!(tw.to_string(), "4,-3");
        assert_eq!(tw.crossing_count(), 7);
        assert_eq!(tw.get(2), Some(-3));
        assert_eq!(tw.get(0), None);
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert_eq!("1,0,2".parse::<TwistVector>(), Err(Error::ZeroTwist { index: 2 }));
        assert_eq!(TwistVector::new(vec![]), Err(Error::EmptyTwistVector));
        assert!(matches!("1,x".parse::<TwistVector>(), Err(Error::Parse(_))));
        assert!(matches!("".parse::<TwistVector>(), Err(Error::Parse(_))));
    }

    #[test]
    fn positivity() {
        let tw = TwistVector::new(vec![2, -1, 3]).unwrap();
        assert!(!tw.is_positive());
        assert_eq!(tw.require_positive(), Err(Error::NonPositiveTwist { index: 2, value: -1 }));
    }

    #[test]
    fn enumerates_all_vectors() {
        let v = all_vectors(&[1, 2, 3], 3);
        assert_eq!(v.len(), 3 + 9 + 27);
        assert_eq!(v[0].entries(), &[1]);
        assert_eq!(v[3].entries(), &[1, 1]);
        assert_eq!(v.last().unwrap().entries(), &[3, 3, 3]);
        let signed = all_vectors(&[-2, -1, 1, 2], 2);
        assert_eq!(signed.len(), 4 + 16);
    }
}
