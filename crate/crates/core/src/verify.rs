//! Cross-method consistency sweep over every twist vector within bounds.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::checkerboard::checkerboard_graph;
use crate::coloring::{count_colorings_bruteforce, count_colorings_formula};
use crate::error::{Error, Result};
use crate::plat::build_plat;
use crate::propagation::determinant;
use crate::snf::smith_normal_form;
use crate::trees::{continuant, tree_count_matrix, tree_count_recursion};
use crate::twist::{all_vectors, TwistVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    /// Largest `|n_i|`.
    pub max_twist: i64,
    /// Longest twist vector.
    pub max_len: usize,
    /// Coloring counts are compared for every modulus in `2..=max_modulus`.
    pub max_modulus: u64,
    /// Work bound handed to the brute-force counter; cases beyond it are skipped.
    pub brute_cap: u64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        Self {
            max_twist: 3,
            max_len: 5,
            max_modulus: 7,
            brute_cap: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub twists: TwistVector,
    pub check: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub cases: usize,
    pub checks: u64,
    pub brute_skipped: u64,
    /// First failing check, in sweep order.
    pub discrepancy: Option<Discrepancy>,
}

#[derive(Default)]
struct CaseOutcome {
    checks: u64,
    brute_skipped: u64,
    discrepancy: Option<Discrepancy>,
}

impl CaseOutcome {
    fn compare(&mut self, tw: &TwistVector, check: &str, expected: &BigInt, got: &BigInt) {
        self.checks += 1;
        if expected != got && self.discrepancy.is_none() {
            self.discrepancy = Some(Discrepancy {
                twists: tw.clone(),
                check: check.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }
}

fn check_case(tw: &TwistVector, bounds: &SweepBounds) -> Result<CaseOutcome> {
    let mut out = CaseOutcome::default();
    let det = determinant(tw);

    let recursion: BigInt = continuant(tw)?;
    out.compare(tw, "continuant recursion", &det.signed, &recursion);

    let diagram = build_plat(tw);
    let minor: BigInt = diagram.determinant()?;
    out.compare(tw, "coloring matrix minor", &det.absolute, &minor);

    if tw.is_positive() {
        let trees: BigInt = tree_count_recursion(tw)?;
        out.compare(tw, "tree recursion", &det.absolute, &trees);
        let graph = checkerboard_graph(tw)?;
        let trees: BigInt = tree_count_matrix(&graph)?;
        out.compare(tw, "matrix-tree count", &det.absolute, &trees);
    }

    let cm = diagram.coloring_matrix::<BigInt>();
    let snf = smith_normal_form(&cm)?;
    for r in 2..=bounds.max_modulus {
        let formula = count_colorings_formula(tw, r)?;
        out.compare(tw, &format!("snf colorings mod {r}"), &formula, &snf.solution_count_mod(r)?);
        match count_colorings_bruteforce(&diagram, r, bounds.brute_cap) {
            Ok(n) => out.compare(tw, &format!("brute-force colorings mod {r}"), &formula, &BigInt::from(n)),
            Err(Error::WorkBoundExceeded { .. }) => out.brute_skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

pub fn run_sweep(bounds: &SweepBounds) -> Result<SweepReport> {
    let values: Vec<i64> = (1..=bounds.max_twist).flat_map(|n| [-n, n]).collect();
    let vectors = all_vectors(&values, bounds.max_len);
    let outcomes = vectors
        .par_iter()
        .map(|tw| check_case(tw, bounds))
        .collect::<Result<Vec<_>>>()?;

    let mut report = SweepReport {
        cases: vectors.len(),
        ..SweepReport::default()
    };
    for o in outcomes {
        report.checks += o.checks;
        report.brute_skipped += o.brute_skipped;
        if report.discrepancy.is_none() {
            report.discrepancy = o.discrepancy;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let bounds = SweepBounds {
            max_twist: 2,
            max_len: 3,
            max_modulus: 5,
            brute_cap: 100_000,
        };
        let report = run_sweep(&bounds).unwrap();
        assert_eq!(report.cases, 4 + 16 + 64);
        assert_eq!(report.discrepancy, None);
        assert!(report.checks > report.cases as u64 * 2);
    }
}
