//! A small dense two-phase simplex solver with Bland's anti-cycling rule.
//! Sized for the tiny linear programs this crate needs (separating
//! hyperplanes, convex-hull intersection certificates): a handful of
//! variables and constraints, feasibility tolerance 1e-9.

/// Feasibility tolerance used throughout the solver.
pub const LP_TOL: f64 = 1e-9;

/// Constraint sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// Solver outcome. `x` holds the values of the problem's original
/// variables.
#[derive(Debug, Clone)]
pub enum LpResult {
    Optimal { x: Vec<f64>, objective: f64 },
    Infeasible,
    Unbounded,
}

/// A general-form linear program: free variables by default, optional
/// non-negativity, Le/Eq/Ge constraints, minimize or maximize.
#[derive(Debug, Clone)]
pub struct LpProblem {
    num_vars: usize,
    objective: Vec<f64>,
    maximize: bool,
    nonneg: Vec<bool>,
    constraints: Vec<(Vec<f64>, Relation, f64)>,
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            objective: vec![0.0; num_vars],
            maximize: false,
            nonneg: vec![false; num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn set_objective(&mut self, coeffs: Vec<f64>, maximize: bool) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.objective = coeffs;
        self.maximize = maximize;
    }

    pub fn var_nonneg(&mut self, i: usize) {
        self.nonneg[i] = true;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<f64>, rel: Relation, rhs: f64) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push((coeffs, rel, rhs));
    }

    /// Solves via conversion to standard form (split free variables, add
    /// slack/surplus columns) and the two-phase tableau simplex.
    pub fn solve(&self) -> LpResult {
        // Column layout: for each variable either one column (non-negative)
        // or a (+, −) pair (free); then one slack/surplus column per
        // inequality.
        let mut col_of_var: Vec<(usize, Option<usize>)> = Vec::with_capacity(self.num_vars);
        let mut ncols = 0usize;
        for i in 0..self.num_vars {
            if self.nonneg[i] {
                col_of_var.push((ncols, None));
                ncols += 1;
            } else {
                col_of_var.push((ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
        let slack_start = ncols;
        let num_slacks = self
            .constraints
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Eq)
            .count();
        ncols += num_slacks;

        let m = self.constraints.len();
        let mut a = vec![vec![0.0f64; ncols]; m];
        let mut b = vec![0.0f64; m];
        let mut slack = slack_start;
        for (r, (coeffs, rel, rhs)) in self.constraints.iter().enumerate() {
            for (i, &c) in coeffs.iter().enumerate() {
                let (pos, neg) = col_of_var[i];
                a[r][pos] += c;
                if let Some(neg) = neg {
                    a[r][neg] -= c;
                }
            }
            match rel {
                Relation::Le => {
                    a[r][slack] = 1.0;
                    slack += 1;
                }
                Relation::Ge => {
                    a[r][slack] = -1.0;
                    slack += 1;
                }
                Relation::Eq => {}
            }
            b[r] = *rhs;
            if b[r] < 0.0 {
                b[r] = -b[r];
                for v in a[r].iter_mut() {
                    *v = -*v;
                }
            }
        }

        let mut c = vec![0.0f64; ncols];
        for (i, &obj) in self.objective.iter().enumerate() {
            let sign = if self.maximize { -1.0 } else { 1.0 };
            let (pos, neg) = col_of_var[i];
            c[pos] += sign * obj;
            if let Some(neg) = neg {
                c[neg] -= sign * obj;
            }
        }

        match solve_standard(a, b, c) {
            StandardResult::Infeasible => LpResult::Infeasible,
            StandardResult::Unbounded => LpResult::Unbounded,
            StandardResult::Optimal { x, objective } => {
                let mut orig = vec![0.0; self.num_vars];
                for (i, &(pos, neg)) in col_of_var.iter().enumerate() {
                    orig[i] = x[pos] - neg.map_or(0.0, |n| x[n]);
                }
                let obj = if self.maximize { -objective } else { objective };
                LpResult::Optimal {
                    x: orig,
                    objective: obj,
                }
            }
        }
    }
}

enum StandardResult {
    Optimal { x: Vec<f64>, objective: f64 },
    Infeasible,
    Unbounded,
}

/// Minimizes `c·x` subject to `A x = b`, `x ≥ 0`, `b ≥ 0`, by the
/// two-phase tableau method with Bland's rule.
fn solve_standard(mut a: Vec<Vec<f64>>, mut b: Vec<f64>, c: Vec<f64>) -> StandardResult {
    let m = a.len();
    let n = if m > 0 { a[0].len() } else { c.len() };
    debug_assert!(b.iter().all(|&v| v >= 0.0));

    // Phase 1: artificial columns n..n+m form the initial identity basis.
    for (r, row) in a.iter_mut().enumerate() {
        row.extend((0..m).map(|i| if i == r { 1.0 } else { 0.0 }));
    }
    let total = n + m;
    let mut basis: Vec<usize> = (n..total).collect();
    let phase1_cost: Vec<f64> = (0..total).map(|j| if j >= n { 1.0 } else { 0.0 }).collect();
    if !run_simplex(&mut a, &mut b, &mut basis, &phase1_cost, total) {
        unreachable!("phase 1 is bounded below by zero");
    }
    let phase1_obj: f64 = basis
        .iter()
        .zip(&b)
        .map(|(&j, &v)| if j >= n { v } else { 0.0 })
        .sum();
    if phase1_obj > 1e-7 {
        return StandardResult::Infeasible;
    }
    // Drive any residual artificial variables (basic at zero) out of the
    // basis, or drop their (redundant) rows.
    let mut keep = vec![true; m];
    for r in 0..m {
        if basis[r] < n {
            continue;
        }
        if let Some(j) = (0..n).find(|&j| a[r][j].abs() > LP_TOL) {
            pivot(&mut a, &mut b, &mut basis, r, j);
        } else {
            keep[r] = false;
        }
    }
    let mut a2 = Vec::new();
    let mut b2 = Vec::new();
    let mut basis2 = Vec::new();
    for r in 0..m {
        if keep[r] {
            let mut row = a[r].clone();
            row.truncate(n);
            a2.push(row);
            b2.push(b[r]);
            basis2.push(basis[r]);
        }
    }
    let (mut a, mut b, mut basis) = (a2, b2, basis2);

    // Phase 2.
    if !run_simplex(&mut a, &mut b, &mut basis, &c, n) {
        return StandardResult::Unbounded;
    }
    let mut x = vec![0.0; n];
    for (r, &j) in basis.iter().enumerate() {
        x[j] = b[r];
    }
    let objective = x.iter().zip(&c).map(|(xi, ci)| xi * ci).sum();
    StandardResult::Optimal { x, objective }
}

/// Runs simplex iterations in place; returns false on unboundedness.
/// `ncols` limits the columns eligible to enter (phase 1 allows
/// artificials, phase 2 does not).
fn run_simplex(
    a: &mut [Vec<f64>],
    b: &mut [f64],
    basis: &mut [usize],
    cost: &[f64],
    ncols: usize,
) -> bool {
    let m = a.len();
    loop {
        // Reduced costs via the basic cost vector (tableau is kept in
        // canonical form, so z_j = Σ_i c_B[i]·a[i][j]).
        let mut entering = None;
        for j in 0..ncols {
            if basis.contains(&j) {
                continue;
            }
            let zj: f64 = (0..m).map(|i| cost[basis[i]] * a[i][j]).sum();
            if cost[j] - zj < -LP_TOL {
                entering = Some(j);
                break; // Bland: smallest eligible index.
            }
        }
        let Some(j) = entering else {
            return true;
        };
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if a[i][j] > LP_TOL {
                let ratio = b[i] / a[i][j];
                let better = match leave {
                    None => true,
                    // Bland: break ratio ties toward the smallest basic index.
                    Some(l) => {
                        ratio < best_ratio - LP_TOL
                            || (ratio < best_ratio + LP_TOL && basis[i] < basis[l])
                    }
                };
                if better {
                    best_ratio = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else {
            return false;
        };
        pivot(a, b, basis, r, j);
    }
}

fn pivot(a: &mut [Vec<f64>], b: &mut [f64], basis: &mut [usize], r: usize, j: usize) {
    let m = a.len();
    let piv = a[r][j];
    for v in a[r].iter_mut() {
        *v /= piv;
    }
    b[r] /= piv;
    for i in 0..m {
        if i == r {
            continue;
        }
        let factor = a[i][j];
        if factor == 0.0 {
            continue;
        }
        let (row_r, row_i) = if i < r {
            let (lo, hi) = a.split_at_mut(r);
            (&hi[0], &mut lo[i])
        } else {
            let (lo, hi) = a.split_at_mut(i);
            (&lo[r], &mut hi[0])
        };
        for (vi, vr) in row_i.iter_mut().zip(row_r.iter()) {
            *vi -= factor * vr;
        }
        b[i] -= factor * b[r];
        if b[i].abs() < 1e-12 {
            b[i] = 0.0;
        }
    }
    basis[r] = j;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn optimal(r: LpResult) -> (Vec<f64>, f64) {
        match r {
            LpResult::Optimal { x, objective } => (x, objective),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn maximizes_a_simple_bounded_program() {
        // max x + y, x,y ≥ 0, x + 2y ≤ 4, 3x + y ≤ 6 → (8/5, 6/5), obj 14/5.
        let mut lp = LpProblem::new(2);
        lp.var_nonneg(0);
        lp.var_nonneg(1);
        lp.set_objective(vec![1.0, 1.0], true);
        lp.add_constraint(vec![1.0, 2.0], Relation::Le, 4.0);
        lp.add_constraint(vec![3.0, 1.0], Relation::Le, 6.0);
        let (x, obj) = optimal(lp.solve());
        assert!((obj - 14.0 / 5.0).abs() < 1e-7);
        assert!((x[0] - 1.6).abs() < 1e-7 && (x[1] - 1.2).abs() < 1e-7);
    }

    #[test]
    fn detects_infeasibility() {
        let mut lp = LpProblem::new(1);
        lp.var_nonneg(0);
        lp.add_constraint(vec![1.0], Relation::Ge, 2.0);
        lp.add_constraint(vec![1.0], Relation::Le, 1.0);
        assert!(matches!(lp.solve(), LpResult::Infeasible));
    }

    #[test]
    fn detects_unboundedness() {
        let mut lp = LpProblem::new(1);
        lp.var_nonneg(0);
        lp.set_objective(vec![1.0], true);
        lp.add_constraint(vec![1.0], Relation::Ge, 0.0);
        assert!(matches!(lp.solve(), LpResult::Unbounded));
    }

    #[test]
    fn handles_free_variables_and_equalities() {
        // min x subject to x + y = 3, y ≤ 1, x free, y free → x = 2.
        let mut lp = LpProblem::new(2);
        lp.set_objective(vec![1.0, 0.0], false);
        lp.add_constraint(vec![1.0, 1.0], Relation::Eq, 3.0);
        lp.add_constraint(vec![0.0, 1.0], Relation::Le, 1.0);
        let (x, obj) = optimal(lp.solve());
        assert!((obj - 2.0).abs() < 1e-7);
        assert!((x[0] - 2.0).abs() < 1e-7);
    }

    #[test]
    fn feasibility_of_a_degenerate_system() {
        // x = 1, x + y = 1, y = 0: feasible with a redundant-looking mix.
        let mut lp = LpProblem::new(2);
        lp.var_nonneg(0);
        lp.var_nonneg(1);
        lp.add_constraint(vec![1.0, 0.0], Relation::Eq, 1.0);
        lp.add_constraint(vec![1.0, 1.0], Relation::Eq, 1.0);
        lp.add_constraint(vec![0.0, 1.0], Relation::Eq, 0.0);
        let (x, _) = optimal(lp.solve());
        assert!((x[0] - 1.0).abs() < 1e-9 && x[1].abs() < 1e-9);
    }

    #[test]
    fn negative_rhs_rows_are_normalized() {
        // min y s.t. −x − y ≤ −2, x ≤ 1, x,y ≥ 0 → y = 1.
        let mut lp = LpProblem::new(2);
        lp.var_nonneg(0);
        lp.var_nonneg(1);
        lp.set_objective(vec![0.0, 1.0], false);
        lp.add_constraint(vec![-1.0, -1.0], Relation::Le, -2.0);
        lp.add_constraint(vec![1.0, 0.0], Relation::Le, 1.0);
        let (_, obj) = optimal(lp.solve());
        assert!((obj - 1.0).abs() < 1e-7);
    }
}
