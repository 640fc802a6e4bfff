//! Convex-hull intersection with small witnesses: if the hulls of two
//! point sets in R^d meet, a basic feasible solution of the intersection
//! program uses at most `d + 2` points overall; otherwise a maximum-margin
//! separating hyperplane certifies disjointness.

use crate::lp::{LpProblem, LpResult, Relation};

/// Outcome of [`caratheodory_pair`].
#[derive(Debug, Clone)]
pub enum HullRelation {
    /// Hulls intersect: `p_indices`/`q_indices` pick subsets with
    /// `|P′| + |Q′| ≤ d + 2` whose hulls still meet, and `point` is a
    /// common point (`Σ λ_i p_i = Σ μ_j q_j`).
    Intersecting {
        p_indices: Vec<usize>,
        q_indices: Vec<usize>,
        point: Vec<f64>,
    },
    /// Hulls are disjoint: `normal·x + offset ≤ −margin` on P and
    /// `≥ margin` on Q.
    Disjoint {
        normal: Vec<f64>,
        offset: f64,
        margin: f64,
    },
}

/// Decides whether `conv(P)` and `conv(Q)` intersect. On intersection,
/// extracts index subsets of combined size at most `d + 2` from a basic
/// feasible solution of
/// `Σ λ_i p_i − Σ μ_j q_j = 0, Σ λ = 1, Σ μ = 1, λ, μ ≥ 0`
/// (the system has `d + 2` rows, so a basic solution has at most `d + 2`
/// strictly positive variables). On disjointness, returns a
/// maximum-margin separating hyperplane.
pub fn caratheodory_pair(p: &[Vec<f64>], q: &[Vec<f64>], d: usize) -> HullRelation {
    debug_assert!(p.iter().chain(q).all(|x| x.len() == d));
    if p.is_empty() || q.is_empty() {
        // An empty hull is disjoint from everything; the constant
        // certificate `0·x + 1` vacuously separates.
        let sign = if p.is_empty() { 1.0 } else { -1.0 };
        return HullRelation::Disjoint {
            normal: vec![0.0; d],
            offset: sign,
            margin: 1.0,
        };
    }

    let np = p.len();
    let nq = q.len();
    let mut lp = LpProblem::new(np + nq);
    for i in 0..np + nq {
        lp.var_nonneg(i);
    }
    for c in 0..d {
        let mut coeffs = vec![0.0; np + nq];
        for (i, pi) in p.iter().enumerate() {
            coeffs[i] = pi[c];
        }
        for (j, qj) in q.iter().enumerate() {
            coeffs[np + j] = -qj[c];
        }
        lp.add_constraint(coeffs, Relation::Eq, 0.0);
    }
    let mut lam_sum = vec![0.0; np + nq];
    lam_sum[..np].fill(1.0);
    lp.add_constraint(lam_sum, Relation::Eq, 1.0);
    let mut mu_sum = vec![0.0; np + nq];
    mu_sum[np..].fill(1.0);
    lp.add_constraint(mu_sum, Relation::Eq, 1.0);

    match lp.solve() {
        LpResult::Optimal { x, .. } => {
            let tol = 1e-9;
            let p_indices: Vec<usize> = (0..np).filter(|&i| x[i] > tol).collect();
            let q_indices: Vec<usize> = (0..nq).filter(|&j| x[np + j] > tol).collect();
            let mut point = vec![0.0; d];
            for &i in &p_indices {
                for c in 0..d {
                    point[c] += x[i] * p[i][c];
                }
            }
            HullRelation::Intersecting {
                p_indices,
                q_indices,
                point,
            }
        }
        LpResult::Infeasible => {
            let (normal, offset, margin) =
                max_margin_separator(p, q, d).expect("disjoint hulls must be separable");
            HullRelation::Disjoint {
                normal,
                offset,
                margin,
            }
        }
        LpResult::Unbounded => unreachable!("intersection program is a bounded polytope"),
    }
}

/// Maximum-margin separator for two non-empty point sets with disjoint
/// hulls: maximizes `m` subject to `a·x + b ≤ −m` on `p`, `a·x + b ≥ m` on
/// `q`, `‖a‖_∞ ≤ 1` and a box bound on `b` for LP boundedness. Returns
/// `None` when no positive-margin separator exists (hulls touch or
/// overlap).
pub fn max_margin_separator(
    p: &[Vec<f64>],
    q: &[Vec<f64>],
    d: usize,
) -> Option<(Vec<f64>, f64, f64)> {
    assert!(!p.is_empty() && !q.is_empty());
    let coord_bound = p
        .iter()
        .chain(q)
        .flat_map(|x| x.iter())
        .fold(0.0f64, |m, &v| m.max(v.abs()));
    let b_bound = 1.0 + d as f64 * coord_bound;

    // Variables: a_0..a_{d−1} (free), b (free), m (non-negative); maximize m.
    let nv = d + 2;
    let mut lp = LpProblem::new(nv);
    lp.var_nonneg(d + 1);
    let mut obj = vec![0.0; nv];
    obj[d + 1] = 1.0;
    lp.set_objective(obj, true);
    for x in p {
        let mut coeffs: Vec<f64> = x.clone();
        coeffs.push(1.0); // b
        coeffs.push(1.0); // + m
        lp.add_constraint(coeffs, Relation::Le, 0.0);
    }
    for x in q {
        let mut coeffs: Vec<f64> = x.clone();
        coeffs.push(1.0); // b
        coeffs.push(-1.0); // − m
        lp.add_constraint(coeffs, Relation::Ge, 0.0);
    }
    for i in 0..d {
        let mut up = vec![0.0; nv];
        up[i] = 1.0;
        lp.add_constraint(up.clone(), Relation::Le, 1.0);
        lp.add_constraint(up, Relation::Ge, -1.0);
    }
    let mut bc = vec![0.0; nv];
    bc[d] = 1.0;
    lp.add_constraint(bc.clone(), Relation::Le, b_bound);
    lp.add_constraint(bc, Relation::Ge, -b_bound);

    match lp.solve() {
        LpResult::Optimal { x, objective } if objective > 1e-9 => {
            Some((x[..d].to_vec(), x[d], objective))
        }
        LpResult::Optimal { .. } => None,
        LpResult::Infeasible => unreachable!("margin program admits a = 0, b = 0, m = 0"),
        LpResult::Unbounded => unreachable!("margin program is box-bounded"),
    }
}
