//! Increasing even-odd sequences.
//!
//! `IEO[N]` is the set of strictly increasing sequences drawn from `{1, ..., N}`
//! whose `j`-th term has the parity of `j`, together with the empty sequence.
//! Each sequence names one monomial of the determinant polynomials.

use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IeoSequence(Vec<u32>);

impl IeoSequence {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Returns `None` unless `terms` is an IEO sequence over `{1, ..., n}`.
    pub fn new(terms: Vec<u32>, n: u32) -> Option<Self> {
        let wide: Vec<i64> = terms.iter().map(|&t| i64::from(t)).collect();
        is_ieo(&wide, n).then_some(Self(terms))
    }

    pub fn terms(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_terms(self) -> Vec<u32> {
        self.0
    }
}

/// Length first, then lexicographic.
impl Ord for IeoSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for IeoSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IeoSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// True iff `terms` is strictly increasing within `{1, ..., n}` and the `j`-th
/// term (1-based) has the parity of `j`.
pub fn is_ieo(terms: &[i64], n: u32) -> bool {
    let mut prev = 0i64;
    for (pos, &t) in terms.iter().enumerate() {
        let position = pos as i64 + 1;
        if t <= prev || t > i64::from(n) || (t - position).rem_euclid(2) != 0 {
            return false;
        }
        prev = t;
    }
    true
}

/// All of `IEO[n]` in canonical order (length, then lexicographic).
pub fn enumerate_ieo(n: u32) -> Vec<IeoSequence> {
    let mut out = vec![IeoSequence::empty()];
    let mut current = Vec::new();
    extend(&mut current, 1, n, &mut out);
    out.sort();
    out
}

fn extend(current: &mut Vec<u32>, from: u32, n: u32, out: &mut Vec<IeoSequence>) {
    // the next term sits at position len+1 and must share its parity
    let parity = (current.len() as u32 + 1) % 2;
    let mut next = if from % 2 == parity { from } else { from + 1 };
    while next <= n {
        current.push(next);
        out.push(IeoSequence(current.clone()));
        extend(current, next + 1, n, out);
        current.pop();
        next += 2;
    }
}
