//! A small dense linear-programming solver.
//!
//! Problems are taken in standard form: minimise `c·x` subject to
//! `A x = b` and `x ≥ 0`. The solver is a two-phase tableau simplex using
//! Bland's rule, so it always terminates. It is meant for the tiny programs
//! that arise when measuring L1 distances to convex hulls of a handful of
//! points.

use alloc::vec;
use alloc::vec::Vec;

/// Tolerance for pivots, reduced costs and feasibility.
pub const EPSILON: f64 = 1e-10;

const MAX_PIVOTS: usize = 10_000;

/// Reasons a program has no optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    /// No `x ≥ 0` satisfies the constraints.
    #[error("the program is infeasible")]
    Infeasible,
    /// The objective decreases without bound.
    #[error("the program is unbounded")]
    Unbounded,
    /// Constraint rows, right-hand side and costs disagree in size.
    #[error("inconsistent problem dimensions")]
    Shape,
    /// The pivot limit was hit (only possible through rounding trouble).
    #[error("pivot limit reached")]
    PivotLimit,
}

/// An optimal solution.
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    /// Optimal values of the variables.
    pub x: Vec<f64>,
    /// Optimal objective value.
    pub value: f64,
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<f64>>,
    /// Basic variable of each row.
    basis: Vec<usize>,
    /// Number of structural plus artificial columns.
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> f64 {
        self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[col];
            if f != 0.0 {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
            }
        }
        self.basis[r] = col;
    }

    /// Runs simplex iterations for `cost` over the columns `allowed`.
    fn optimise(&mut self, cost: &[f64], allowed: usize) -> Result<(), LpError> {
        for _ in 0..MAX_PIVOTS {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced = cost[j]
                    - self
                        .rows
                        .iter()
                        .zip(&self.basis)
                        .map(|(row, &b)| cost[b] * row[j])
                        .sum::<f64>();
                reduced < -EPSILON
            });
            let Some(col) = entering else {
                return Ok(());
            };
            let mut leaving: Option<(usize, f64)> = None;
            for r in 0..self.rows.len() {
                let a = self.rows[r][col];
                if a > EPSILON {
                    let ratio = self.rhs(r) / a;
                    let better = match leaving {
                        None => true,
                        Some((best, best_ratio)) => {
                            ratio < best_ratio - EPSILON
                                || (ratio <= best_ratio + EPSILON && self.basis[r] < self.basis[best])
                        }
                    };
                    if better {
                        leaving = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leaving else {
                return Err(LpError::Unbounded);
            };
            self.pivot(r, col);
        }
        Err(LpError::PivotLimit)
    }
}

/// Minimises `cost·x` subject to `rows · x = rhs`, `x ≥ 0`.
pub fn minimize(cost: &[f64], rows: &[Vec<f64>], rhs: &[f64]) -> Result<LpSolution, LpError> {
    let n = cost.len();
    let m = rows.len();
    if rhs.len() != m || rows.iter().any(|r| r.len() != n) {
        return Err(LpError::Shape);
    }
    let width = n + m;
    let mut tableau = Tableau {
        rows: Vec::with_capacity(m),
        basis: (n..n + m).collect(),
        width,
    };
    for (i, (row, &b)) in rows.iter().zip(rhs).enumerate() {
        let sign = if b < 0.0 { -1.0 } else { 1.0 };
        let mut full = vec![0.0; width + 1];
        for (j, &a) in row.iter().enumerate() {
            full[j] = sign * a;
        }
        full[n + i] = 1.0;
        full[width] = sign * b;
        tableau.rows.push(full);
    }

    // Phase one: minimise the sum of artificial variables.
    let mut phase_one = vec![0.0; width];
    for c in phase_one.iter_mut().skip(n) {
        *c = 1.0;
    }
    tableau.optimise(&phase_one, width)?;
    let infeasibility: f64 = (0..m).filter(|&r| tableau.basis[r] >= n).map(|r| tableau.rhs(r)).sum();
    if infeasibility > EPSILON * (1.0 + rhs.iter().map(|b| b.abs()).sum::<f64>()) {
        return Err(LpError::Infeasible);
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < tableau.rows.len() {
        if tableau.basis[r] >= n {
            match (0..n).find(|&j| tableau.rows[r][j].abs() > EPSILON) {
                Some(col) => {
                    tableau.pivot(r, col);
                    r += 1;
                }
                None => {
                    tableau.rows.remove(r);
                    tableau.basis.remove(r);
                }
            }
        } else {
            r += 1;
        }
    }

    // Phase two over the structural columns only.
    let mut phase_two = vec![0.0; width];
    phase_two[..n].copy_from_slice(cost);
    tableau.optimise(&phase_two, n)?;

    let mut x = vec![0.0; n];
    for (r, &b) in tableau.basis.iter().enumerate() {
        if b < n {
            x[b] = tableau.rhs(r).max(0.0);
        }
    }
    let value = cost.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(LpSolution { x, value })
}

/// L1 distance from `point` to the convex hull of `generators`.
///
/// Returns `None` when there are no generators or the dimensions differ.
/// The program has one weight per generator and a positive and negative
/// slack per coordinate: minimise the total slack subject to
/// `Σ λ_j g_j + s⁺ - s⁻ = point` and `Σ λ_j = 1`.
pub fn l1_distance_to_hull(point: &[f64], generators: &[Vec<f64>]) -> Option<f64> {
    let d = point.len();
    if generators.is_empty() || generators.iter().any(|g| g.len() != d) {
        return None;
    }
    if generators.iter().any(|g| g.as_slice() == point) {
        return Some(0.0);
    }
    if d == 1 {
        let (lo, hi) = generators
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), g| {
                (lo.min(g[0]), hi.max(g[0]))
            });
        let p = point[0];
        return Some(if p < lo {
            lo - p
        } else if p > hi {
            p - hi
        } else {
            0.0
        });
    }
    let m = generators.len();
    let n = m + 2 * d;
    let mut rows = Vec::with_capacity(d + 1);
    for i in 0..d {
        let mut row = vec![0.0; n];
        for (j, g) in generators.iter().enumerate() {
            row[j] = g[i];
        }
        row[m + i] = 1.0;
        row[m + d + i] = -1.0;
        rows.push(row);
    }
    let mut weights = vec![0.0; n];
    for w in weights.iter_mut().take(m) {
        *w = 1.0;
    }
    rows.push(weights);
    let mut rhs = point.to_vec();
    rhs.push(1.0);
    let mut cost = vec![0.0; n];
    for c in cost.iter_mut().skip(m) {
        *c = 1.0;
    }
    // Always feasible and bounded below by zero.
    minimize(&cost, &rows, &rhs).ok().map(|s| s.value.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_a_textbook_program() {
        // min -x - y  s.t. x + s1 = 2, y + s2 = 3, x + y + s3 = 4
        let cost = [-1.0, -1.0, 0.0, 0.0, 0.0];
        let rows = vec![
            vec![1.0, 0.0, 1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0, 1.0, 0.0],
            vec![1.0, 1.0, 0.0, 0.0, 1.0],
        ];
        let s = minimize(&cost, &rows, &[2.0, 3.0, 4.0]).unwrap();
        assert!((s.value + 4.0).abs() < 1e-12);
    }

    #[test]
    fn detects_infeasibility_and_unboundedness() {
        let rows = vec![vec![1.0, 1.0]];
        assert_eq!(minimize(&[0.0, 0.0], &rows, &[-1.0]), Err(LpError::Infeasible));
        let rows = vec![vec![1.0, -1.0]];
        assert_eq!(minimize(&[0.0, -1.0], &rows, &[1.0]), Err(LpError::Unbounded));
    }

    #[test]
    fn distance_to_a_square() {
        let square = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]];
        let d = l1_distance_to_hull(&[2.0, 3.0], &square).unwrap();
        assert!((d - 3.0).abs() < 1e-12);
        let inside = l1_distance_to_hull(&[0.5, 0.25], &square).unwrap();
        assert!(inside.abs() < 1e-12);
    }

    #[test]
    fn distance_to_a_segment_in_three_dimensions() {
        let seg = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        let d = l1_distance_to_hull(&[0.0, 0.0, 0.0], &seg).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
        let d = l1_distance_to_hull(&[1.0, 1.0, 1.0], &seg).unwrap();
        assert!((d - 2.0).abs() < 1e-12);
    }

    #[test]
    fn interval_fast_path() {
        let gens = vec![vec![0.2], vec![0.6]];
        assert_eq!(l1_distance_to_hull(&[0.4], &gens), Some(0.0));
        assert!((l1_distance_to_hull(&[1.0], &gens).unwrap() - 0.4).abs() < 1e-15);
        assert_eq!(l1_distance_to_hull(&[1.0], &[]), None);
    }
}
