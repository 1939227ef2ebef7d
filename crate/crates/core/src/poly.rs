//! Coefficient-one multilinear polynomials `p_N`, `p_N^e`, `p_N^o`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ieo::{enumerate_ieo, IeoSequence};
use crate::scalar::{self, Scalar};

/// A product of distinct variables `n_{u1} n_{u2} ... n_{uk}`; the empty
/// product is the constant `1`. The sorted index list is always an IEO sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(IeoSequence);

impl Monomial {
    pub fn one() -> Self {
        Self(IeoSequence::empty())
    }

    pub fn indices(&self) -> &[u32] {
        self.0.terms()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies by the variable `n_index`, which must exceed every index already present.
    fn times_fresh(&self, index: u32) -> Self {
        debug_assert!(self.indices().last().is_none_or(|&last| last < index));
        let mut terms = self.indices().to_vec();
        terms.push(index);
        Self(IeoSequence::new(terms, index).expect("fresh variable keeps the parity pattern"))
    }

    pub fn evaluate<T: Scalar>(&self, values: &[T]) -> Result<T> {
        self.indices().iter().try_fold(T::one(), |acc, &i| {
            let v = values
                .get(i as usize - 1)
                .ok_or(Error::MissingValue { index: i as usize })?;
            scalar::mul(&acc, v)
        })
    }
}

impl From<IeoSequence> for Monomial {
    fn from(seq: IeoSequence) -> Self {
        Self(seq)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return f.write_str("1");
        }
        for (k, i) in self.indices().iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "n{i}")?;
        }
        Ok(())
    }
}

/// Which part of `p_N` to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    Full,
    /// Monomials with an even number of variables (including the constant).
    Even,
    /// Monomials with an odd number of variables.
    Odd,
}

impl Part {
    fn admits(self, m: &Monomial) -> bool {
        match self {
            Part::Full => true,
            Part::Even => m.degree().is_multiple_of(2),
            Part::Odd => m.degree() % 2 == 1,
        }
    }
}

impl FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Part::Full),
            "even" => Ok(Part::Even),
            "odd" => Ok(Part::Odd),
            other => Err(Error::Parse(format!("unknown polynomial part {other:?}"))),
        }
    }
}

/// A set of coefficient-one monomials over `n_1, ..., n_arity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPoly {
    arity: u32,
    monomials: BTreeSet<Monomial>,
}

impl MultilinearPoly {
    pub fn zero(arity: u32) -> Self {
        Self {
            arity,
            monomials: BTreeSet::new(),
        }
    }

    pub fn one(arity: u32) -> Self {
        Self {
            arity,
            monomials: BTreeSet::from([Monomial::one()]),
        }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Monomials in canonical order: by degree, then lexicographically.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    /// Keeps only the monomials admitted by `part`.
    pub fn part(&self, part: Part) -> Self {
        Self {
            arity: self.arity,
            monomials: self.monomials.iter().filter(|m| part.admits(m)).cloned().collect(),
        }
    }

    pub(crate) fn widened(&self, arity: u32) -> Self {
        Self {
            arity: self.arity.max(arity),
            monomials: self.monomials.clone(),
        }
    }

    /// `self + n_index * other`, where `n_index` is a variable absent from both.
    /// The two monomial sets of the sum are disjoint, so coefficients stay 1.
    pub(crate) fn add_times_fresh(&self, other: &Self, index: u32) -> Self {
        let mut monomials = self.monomials.clone();
        for m in &other.monomials {
            let inserted = monomials.insert(m.times_fresh(index));
            debug_assert!(inserted);
        }
        Self {
            arity: self.arity.max(other.arity).max(index),
            monomials,
        }
    }

    /// Exact value with `n_i = values[i - 1]`.
    pub fn evaluate<T: Scalar>(&self, values: &[T]) -> Result<T> {
        self.monomials.iter().try_fold(T::zero(), |acc, m| {
            let term = m.evaluate(values)?;
            scalar::add(&acc, &term)
        })
    }

    /// Convenience wrapper evaluating at machine integers.
    pub fn evaluate_i64<T: Scalar>(&self, values: &[i64]) -> Result<T> {
        let converted: Vec<T> = values.iter().map(|&v| T::from_int(v)).collect();
        self.evaluate(&converted)
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.monomials.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// `p_N` (or its even/odd part): one monomial per sequence in `IEO[N]`.
pub fn build_p(n: u32, part: Part) -> MultilinearPoly {
    let monomials = enumerate_ieo(n)
        .into_iter()
        .map(Monomial::from)
        .filter(|m| part.admits(m))
        .collect();
    MultilinearPoly { arity: n, monomials }
}
