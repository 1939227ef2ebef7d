//! Fox `r`-coloring counts by three independent routes.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::plat::PlatDiagram;
use crate::propagation::determinant;
use crate::scalar::Scalar;
use crate::snf::smith_normal_form;
use crate::twist::TwistVector;

pub const DEFAULT_WORK_BOUND: u64 = 10_000_000;

fn check_modulus(r: u64) -> Result<()> {
    if r < 2 {
        Err(Error::BadModulus(r))
    } else {
        Ok(())
    }
}

/// `r * gcd(|det|, r)`; a zero determinant gives `r^2`.
pub fn count_colorings_formula(tw: &TwistVector, r: u64) -> Result<BigInt> {
    check_modulus(r)?;
    let modulus = BigInt::from(r);
    Ok(&modulus * determinant(tw).absolute.gcd(&modulus))
}

/// Product of `gcd(d_i, r)` over the Smith invariant factors of the coloring
/// matrix, with a factor `r` for every zero factor or surplus column.
pub fn count_colorings_snf<T: Scalar>(cm: &IntMatrix<T>, r: u64) -> Result<T> {
    check_modulus(r)?;
    smith_normal_form(cm)?.solution_count_mod(r)
}

/// Counts arc assignments in `{0, ..., r-1}` that satisfy every crossing
/// relation `2 * over = under_in + under_out (mod r)`.
///
/// Arcs are assigned in order of first appearance and a partial assignment is
/// abandoned as soon as a fully-assigned crossing fails. `cap` bounds the number
/// of assignments tried.
pub fn count_colorings_bruteforce(d: &PlatDiagram, r: u64, cap: u64) -> Result<u64> {
    check_modulus(r)?;
    let arcs = d.arc_count();
    if arcs == 0 {
        return Ok(1);
    }

    let mut order = Vec::with_capacity(arcs);
    let mut position = vec![usize::MAX; arcs];
    for c in d.crossings() {
        for arc in [c.over, c.under_in, c.under_out] {
            if position[arc] == usize::MAX {
                position[arc] = order.len();
                order.push(arc);
            }
        }
    }
    // arcs untouched by any crossing are free
    for (arc, pos) in position.iter_mut().enumerate() {
        if *pos == usize::MAX {
            *pos = order.len();
            order.push(arc);
        }
    }

    // crossings to check once the arc at each depth is assigned
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); arcs];
    for (k, c) in d.crossings().iter().enumerate() {
        let depth = position[c.over].max(position[c.under_in]).max(position[c.under_out]);
        checks[depth].push(k);
    }

    let mut search = Search {
        diagram: d,
        r,
        cap,
        order: &order,
        checks: &checks,
        colors: vec![0; arcs],
        work: 0,
        found: 0,
    };
    search.descend(0)?;
    Ok(search.found)
}

struct Search<'a> {
    diagram: &'a PlatDiagram,
    r: u64,
    cap: u64,
    order: &'a [usize],
    checks: &'a [Vec<usize>],
    colors: Vec<u64>,
    work: u64,
    found: u64,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) -> Result<()> {
        if depth == self.order.len() {
            self.found += 1;
            return Ok(());
        }
        let arc = self.order[depth];
        for value in 0..self.r {
            self.work += 1;
            if self.work > self.cap {
                return Err(Error::WorkBoundExceeded { cap: self.cap });
            }
            self.colors[arc] = value;
            if self.checks[depth].iter().all(|&k| self.satisfied(k)) {
                self.descend(depth + 1)?;
            }
        }
        Ok(())
    }

    fn satisfied(&self, k: usize) -> bool {
        let c = self.diagram.crossings()[k];
        let r = self.r;
        (2 * self.colors[c.over]) % r == (self.colors[c.under_in] + self.colors[c.under_out]) % r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plat::build_plat;

    fn tw(v: &[i64]) -> TwistVector {
        TwistVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn formula() {
        assert_eq!(count_colorings_formula(&tw(&[3]), 3).unwrap(), 9.into());
        assert_eq!(count_colorings_formula(&tw(&[3]), 5).unwrap(), 5.into());
        assert_eq!(count_colorings_formula(&tw(&[2, 2]), 5).unwrap(), 25.into());
        assert_eq!(count_colorings_formula(&tw(&[1, -1]), 4).unwrap(), 16.into());
        assert_eq!(count_colorings_formula(&tw(&[3]), 1), Err(Error::BadModulus(1)));
    }

    #[test]
    fn snf_route() {
        let cm = build_plat(&tw(&[3])).coloring_matrix::<i64>();
        assert_eq!(count_colorings_snf(&cm, 3).unwrap(), 9);
        assert_eq!(count_colorings_snf(&cm, 2).unwrap(), 2);
        assert_eq!(count_colorings_snf(&cm, 0), Err(Error::BadModulus(0)));
    }

    #[test]
    fn brute_force_route() {
        let trefoil = build_plat(&tw(&[3]));
        assert_eq!(count_colorings_bruteforce(&trefoil, 3, DEFAULT_WORK_BOUND).unwrap(), 9);
        assert_eq!(count_colorings_bruteforce(&trefoil, 5, DEFAULT_WORK_BOUND).unwrap(), 5);
        assert_eq!(count_colorings_bruteforce(&trefoil, 2, DEFAULT_WORK_BOUND).unwrap(), 2);
        let fig8 = build_plat(&tw(&[2, 2]));
        assert_eq!(count_colorings_bruteforce(&fig8, 5, DEFAULT_WORK_BOUND).unwrap(), 25);
        assert_eq!(
            count_colorings_bruteforce(&fig8, 5, 10),
            Err(Error::WorkBoundExceeded { cap: 10 })
        );
    }

    // Plain enumeration of all r^arcs assignments, used to validate the pruned search.
    fn exhaustive(d: &PlatDiagram, r: u64) -> u64 {
        let arcs = d.arc_count() as u32;
        (0..r.pow(arcs))
            .filter(|&code| {
                let color = |arc: usize| (code / r.pow(arc as u32)) % r;
                d.crossings()
                    .iter()
                    .all(|c| (2 * color(c.over)) % r == (color(c.under_in) + color(c.under_out)) % r)
            })
            .count() as u64
    }

    #[test]
    fn pruned_search_matches_plain_enumeration() {
        for v in crate::twist::all_vectors(&[-2, -1, 1, 2], 3) {
            let d = build_plat(&v);
            for r in 2..=5u64 {
                if r.pow(d.arc_count() as u32) > 200_000 {
                    continue;
                }
                assert_eq!(count_colorings_bruteforce(&d, r, DEFAULT_WORK_BOUND).unwrap(), exhaustive(&d, r), "{v} mod {r}");
            }
        }
    }

    #[test]
    fn monochrome_always_counted() {
        for v in crate::twist::all_vectors(&[1, 2, 3], 3) {
            let cm = build_plat(&v).coloring_matrix::<i64>();
            for r in 2..=7u64 {
                let count = count_colorings_snf(&cm, r).unwrap() as u64;
                assert!(count >= r && count % r == 0);
            }
        }
    }
}
