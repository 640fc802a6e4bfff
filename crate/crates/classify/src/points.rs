//! Finite sample-point sets in R^d with a general-position check.

use eqgraph_core::Error;

/// `n` points in `R^d`, indexed `0..n−1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    d: usize,
    points: Vec<Vec<f64>>,
}

impl PointSet {
    pub fn new(d: usize, points: Vec<Vec<f64>>) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidParameter("point set must be non-empty".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != d {
                return Err(Error::InvalidParameter(format!(
                    "point {i} has {} coordinates, expected {d}",
                    p.len()
                )));
            }
            if p.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "point {i} has a non-finite coordinate"
                )));
            }
        }
        Ok(PointSet { d, points })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    /// True iff no `d+1` points are affinely dependent, i.e. every set of
    /// `d+1` points spans a full-dimensional simplex. Sets with at most
    /// `d` points are vacuously in general position.
    pub fn in_general_position(&self) -> bool {
        let k = self.d + 1;
        if self.points.len() < k {
            return true;
        }
        let mut subset = Vec::with_capacity(k);
        self.general_position_rec(0, &mut subset)
    }

    fn general_position_rec(&self, from: usize, subset: &mut Vec<usize>) -> bool {
        if subset.len() == self.d + 1 {
            // Affine independence of d+1 points: the d difference vectors
            // from the first point form a non-singular d×d matrix.
            let base = &self.points[subset[0]];
            let rows: Vec<Vec<f64>> = subset[1..]
                .iter()
                .map(|&i| {
                    self.points[i]
                        .iter()
                        .zip(base)
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            return determinant(rows).abs() > 1e-9;
        }
        for i in from..self.points.len() {
            subset.push(i);
            if !self.general_position_rec(i + 1, subset) {
                subset.pop();
                return false;
            }
            subset.pop();
        }
        true
    }
}

/// Determinant of a small square matrix by Gaussian elimination with
/// partial pivoting.
fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot][col].abs() < 1e-12 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for c in col..n {
                m[row][c] -= f * m[col][c];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mismatched_dimension() {
        assert!(PointSet::new(2, vec![vec![0.0, 1.0], vec![1.0]]).is_err());
    }

    #[test]
    fn triangle_is_in_general_position() {
        let ps = PointSet::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(ps.in_general_position());
    }

    #[test]
    fn collinear_triple_is_not_in_general_position() {
        let ps = PointSet::new(
            2,
            vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0], vec![0.0, 1.0]],
        )
        .unwrap();
        assert!(!ps.in_general_position());
    }

    #[test]
    fn few_points_are_vacuously_general() {
        let ps = PointSet::new(3, vec![vec![0.0; 3], vec![0.0; 3]]).unwrap();
        assert!(ps.in_general_position());
    }

    #[test]
    fn one_dimensional_duplicates_are_degenerate() {
        let ps = PointSet::new(1, vec![vec![2.0], vec![2.0]]).unwrap();
        assert!(!ps.in_general_position());
    }
}
