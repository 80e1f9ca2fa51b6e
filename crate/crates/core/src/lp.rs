//! Exact covering linear programs.
//!
//! `min Σ x_j  s.t.  Σ_{j ∈ row_i} x_j ≥ 1,  x ≥ 0` is solved through its
//! packing dual `max Σ y_i  s.t.  Σ_{i : j ∈ row_i} y_i ≤ 1,  y ≥ 0`, whose
//! origin is feasible. The primal optimum is read off the reduced costs of
//! the dual slacks. Pivoting follows Bland's rule, so the method terminates.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CoverSolution {
    pub value: Rational,
    pub weights: Vec<Rational>,
}

/// Every row must list at least one variable.
pub(crate) fn min_cover(rows: &[Vec<usize>], nvars: usize) -> CoverSolution {
    let ny = rows.len();
    let width = ny + nvars + 1;
    let rhs = width - 1;
    let mut tab: Vec<Vec<Rational>> = (0..nvars)
        .map(|j| {
            let mut row = vec![Rational::zero(); width];
            for (i, r) in rows.iter().enumerate() {
                if r.contains(&j) {
                    row[i] = Rational::one();
                }
            }
            row[ny + j] = Rational::one();
            row[rhs] = Rational::one();
            row
        })
        .collect();
    let mut obj = vec![Rational::zero(); width];
    for o in obj.iter_mut().take(ny) {
        *o = -Rational::one();
    }
    let mut basis: Vec<usize> = (ny..ny + nvars).collect();

    while let Some(col) = (0..rhs).find(|&c| obj[c].is_negative()) {
        let mut pivot: Option<(usize, Rational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[col];
            let better = match &pivot {
                None => true,
                Some((pr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*pr]),
            };
            if better {
                pivot = Some((r, ratio));
            }
        }
        let (prow, _) = pivot.expect("packing program is bounded when every row is nonempty");
        let p = tab[prow][col].clone();
        for v in tab[prow].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = tab[prow].clone();
        for (r, row) in tab.iter_mut().enumerate() {
            if r == prow || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
        let factor = obj[col].clone();
        for (v, pv) in obj.iter_mut().zip(&pivot_row) {
            *v -= &factor * pv;
        }
        basis[prow] = col;
    }

    CoverSolution {
        value: obj[rhs].clone(),
        weights: (0..nvars).map(|j| obj[ny + j].clone()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn triangle_cover_is_three_halves() {
        // Vertices 1,2,3; edges 0={1,2}, 1={2,3}, 2={1,3}.
        let rows = vec![vec![0, 2], vec![0, 1], vec![1, 2]];
        let sol = min_cover(&rows, 3);
        assert_eq!(sol.value, ratio(3, 2));
        assert!(sol.weights.iter().all(|w| *w == ratio(1, 2)));
    }

    #[test]
    fn unused_variable_gets_zero() {
        let rows = vec![vec![0]];
        let sol = min_cover(&rows, 2);
        assert_eq!(sol.value, ratio(1, 1));
        assert_eq!(sol.weights, vec![ratio(1, 1), ratio(0, 1)]);
    }

    #[test]
    fn no_rows_costs_nothing() {
        let sol = min_cover(&[], 3);
        assert!(sol.value.is_zero());
    }
}
