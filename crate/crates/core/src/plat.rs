//! Explicit 4-plat diagrams of rational knots and their Fox coloring matrices.
//!
//! Strands are numbered 1 to 4 from the left. The top caps join strands (1, 2)
//! and (3, 4); strand 4 never crosses anything. Odd-indexed twists act on
//! strands (2, 3), even-indexed twists on strands (1, 2). Each crossing
//! retires the incoming under-arc and starts a fresh arc. The bottom closure
//! joins (1, 2) and (3, 4) for an odd number of twists (numerator closure) and
//! (1, 4) and (2, 3) for an even number (denominator closure).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scalar::Scalar;
use crate::twist::TwistVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closure {
    Numerator,
    Denominator,
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Closure::Numerator => "numerator",
            Closure::Denominator => "denominator",
        })
    }
}

impl FromStr for Closure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "numerator" => Ok(Closure::Numerator),
            "denominator" => Ok(Closure::Denominator),
            other => Err(Error::Parse(format!("unknown closure {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    /// 1-based index of the twist this crossing belongs to.
    pub twist: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatDiagram {
    arc_count: usize,
    crossings: Vec<Crossing>,
    closure: Closure,
}

impl PlatDiagram {
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    /// True when the coloring matrix is square. This fails only for split
    /// diagrams, where some component passes over everything it meets.
    pub fn is_square(&self) -> bool {
        self.arc_count == self.crossings.len()
    }

    /// One row per crossing: `+2` on the over-arc and `-1` on each under-arc.
    pub fn coloring_matrix<T: Scalar>(&self) -> IntMatrix<T> {
        let mut m = IntMatrix::<T>::zeros(self.crossings.len(), self.arc_count);
        let two = T::from_int(2);
        for (row, c) in self.crossings.iter().enumerate() {
            m[(row, c.over)] = m[(row, c.over)].clone() + two.clone();
            m[(row, c.under_in)] = m[(row, c.under_in)].clone() - T::one();
            m[(row, c.under_out)] = m[(row, c.under_out)].clone() - T::one();
        }
        m
    }

    /// Absolute determinant read off the coloring matrix.
    ///
    /// For a square matrix this is `|first minor|` with the last row and column
    /// removed (the empty minor of a 1x1 matrix is 1). A non-square matrix has
    /// more arcs than crossings; then the gcd of the `(arcs - 1)`-minors is used,
    /// which is the same invariant and is 0 for split diagrams.
    pub fn determinant<T: Scalar>(&self) -> Result<T> {
        let cm = self.coloring_matrix::<T>();
        if self.is_square() {
            let last = self.arc_count - 1;
            Ok(cm.first_minor(last, last)?.abs())
        } else {
            cm.minor_gcd(self.arc_count - 1)
        }
    }
}

/// Builds the 4-plat diagram of `R(tw)` with arcs identified across the closure.
pub fn build_plat(tw: &TwistVector) -> PlatDiagram {
    // arc ids 0 and 1 are the two top caps
    let mut next_arc = 2;
    let mut strand = [0usize, 0, 1, 1];
    let mut raw = Vec::with_capacity(tw.crossing_count() as usize);

    for (k, &n) in tw.iter().enumerate() {
        let twist = k + 1;
        // `back` holds c_k and `front` holds c_{k+1} in the arc color sequence
        // c_0, c_1, ... of the twist, with c_{k+1} = 2 c_k - c_{k-1}
        let (back, front) = if twist % 2 == 1 { (2, 1) } else { (0, 1) };
        for _ in 0..n.unsigned_abs() {
            let fresh = next_arc;
            next_arc += 1;
            let crossing = if n > 0 {
                let c = Crossing {
                    over: strand[front],
                    under_in: strand[back],
                    under_out: fresh,
                    twist,
                };
                strand[back] = strand[front];
                strand[front] = fresh;
                c
            } else {
                let c = Crossing {
                    over: strand[back],
                    under_in: strand[front],
                    under_out: fresh,
                    twist,
                };
                strand[front] = strand[back];
                strand[back] = fresh;
                c
            };
            raw.push(crossing);
        }
    }

    let mut classes = UnionFind::new(next_arc);
    let closure = if tw.twist_count() % 2 == 1 {
        classes.union(strand[0], strand[1]);
        classes.union(strand[2], strand[3]);
        Closure::Numerator
    } else {
        classes.union(strand[0], strand[3]);
        classes.union(strand[1], strand[2]);
        Closure::Denominator
    };

    // compact class representatives in order of first appearance
    let mut label = vec![usize::MAX; next_arc];
    let mut arc_count = 0;
    let mut relabel = |arc: usize| {
        let root = classes.find(arc);
        if label[root] == usize::MAX {
            label[root] = arc_count;
            arc_count += 1;
        }
        label[root]
    };
    let crossings = raw
        .into_iter()
        .map(|c| Crossing {
            over: relabel(c.over),
            under_in: relabel(c.under_in),
            under_out: relabel(c.under_out),
            twist: c.twist,
        })
        .collect();

    PlatDiagram {
        arc_count,
        crossings,
        closure,
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Line-oriented text: `X <over> <under_in> <under_out> twist=<i>` per crossing,
/// then `closure=<numerator|denominator>`.
impl fmt::Display for PlatDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            writeln!(f, "X {} {} {} twist={}", c.over, c.under_in, c.under_out, c.twist)?;
        }
        writeln!(f, "closure={}", self.closure)
    }
}

impl FromStr for PlatDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |line: &str| Error::Parse(format!("malformed diagram line {line:?}"));
        let mut crossings = Vec::new();
        let mut closure = None;
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("closure=") {
                closure = Some(rest.parse()?);
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [tag, over, under_in, under_out, twist] = fields[..] else {
                return Err(bad(line));
            };
            if tag != "X" {
                return Err(bad(line));
            }
            let arc = |v: &str| v.parse::<usize>().map_err(|_| bad(line));
            let twist = twist
                .strip_prefix("twist=")
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| bad(line))?;
            crossings.push(Crossing {
                over: arc(over)?,
                under_in: arc(under_in)?,
                under_out: arc(under_out)?,
                twist,
            });
        }
        let closure = closure.ok_or_else(|| Error::Parse("missing closure line".into()))?;
        let arc_count = crossings
            .iter()
            .map(|c| c.over.max(c.under_in).max(c.under_out) + 1)
            .max()
            .unwrap_or(0);
        Ok(Self {
            arc_count,
            crossings,
            closure,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::determinant;
    use crate::twist::all_vectors;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn tw(v: &[i64]) -> TwistVector {
        TwistVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_plat() {
        let d = build_plat(&tw(&[3]));
        assert_eq!(d.crossings().len(), 3);
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d.closure(), Closure::Numerator);
        let cm = d.coloring_matrix::<i64>();
        assert_eq!(cm.to_rows(), vec![vec![2, -1, -1], vec![-1, -1, 2], vec![-1, 2, -1]]);
        assert_eq!(
            d.to_string(),
            "X 0 1 2 twist=1\nX 2 0 1 twist=1\nX 1 2 0 twist=1\nclosure=numerator\n"
        );
        assert_eq!(d.determinant::<i64>().unwrap(), 3);
    }

    #[test]
    fn single_crossing() {
        let d = build_plat(&tw(&[1]));
        assert_eq!((d.crossings().len(), d.arc_count()), (1, 1));
        assert_eq!(d.coloring_matrix::<i64>().to_rows(), vec![vec![0]]);
        assert_eq!(d.determinant::<i64>().unwrap(), 1);
    }

    #[test]
    fn figure_eight() {
        let d = build_plat(&tw(&[2, 2]));
        assert_eq!((d.crossings().len(), d.arc_count()), (4, 4));
        assert_eq!(d.closure(), Closure::Denominator);
        let cm = d.coloring_matrix::<i64>();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(cm.first_minor(r, c).unwrap().abs(), 5);
            }
        }
    }

    #[test]
    fn rows_sum_to_zero() {
        for v in all_vectors(&[-2, -1, 1, 2], 4) {
            let cm = build_plat(&v).coloring_matrix::<i64>();
            assert!(cm.row_sums().unwrap().iter().all(|&s| s == 0), "{v}");
            for i in 0..cm.rows() {
                let row = cm.row(i);
                let negatives: i64 = row.iter().filter(|&&x| x < 0).sum();
                assert!(row.iter().all(|&x| (-2..=2).contains(&x)));
                assert!(negatives == -2 || row.iter().all(|&x| x == 0) || negatives == -1);
            }
        }
    }

    #[test]
    fn arc_count_matches_crossings_unless_split() {
        for v in all_vectors(&[-3, -2, -1, 1, 2, 3], 4) {
            let d = build_plat(&v);
            assert_eq!(d.crossings().len() as u64, v.crossing_count());
            assert!(d.crossings().iter().all(|c| c.over.max(c.under_in).max(c.under_out) < d.arc_count()));
            if !d.is_square() {
                assert_eq!(determinant(&v).absolute, BigInt::from(0), "{v}");
            }
        }
    }

    #[test]
    fn split_diagram_has_zero_determinant() {
        let d = build_plat(&tw(&[1, -1]));
        assert!(!d.is_square());
        assert_eq!(d.determinant::<i64>().unwrap(), 0);
    }

    #[test]
    fn small_minors_match_formula() {
        for v in all_vectors(&[-3, -2, -1, 1, 2, 3], 3) {
            let d = build_plat(&v);
            let want = determinant(&v).absolute;
            assert_eq!(d.determinant::<BigInt>().unwrap(), want, "{v}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!("X 0 1 2 twist=1\n".parse::<PlatDiagram>().is_err());
        assert!("X 0 1 twist=1\nclosure=numerator".parse::<PlatDiagram>().is_err());
        assert!("Y 0 1 2 twist=1\nclosure=numerator".parse::<PlatDiagram>().is_err());
        assert!("closure=sideways".parse::<PlatDiagram>().is_err());
    }

    proptest! {
        #[test]
        fn text_form_round_trips(entries in proptest::collection::vec(
            prop_oneof![-4i64..=-1, 1i64..=4], 1..=6)) {
            let d = build_plat(&TwistVector::new(entries).unwrap());
            let parsed: PlatDiagram = d.to_string().parse().unwrap();
            prop_assert_eq!(parsed, d);
        }
    }
}
