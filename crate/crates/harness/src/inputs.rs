//! Plain-text input files: weight vectors, cluster families, point sets.

use std::path::Path;

use eqgraph_classify::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::HarnessError;

/// Weight-vector file: one `model_index weight` pair per line, weights
/// non-negative decimals.
pub fn load_weights(path: &Path) -> Result<Vec<(usize, f64)>, HarnessError> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let bad = || {
            HarnessError::Config(format!(
                "{}:{}: expected `model_index weight`",
                path.display(),
                lineno + 1
            ))
        };
        let idx: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let w: f64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if parts.next().is_some() || w < 0.0 {
            return Err(bad());
        }
        out.push((idx, w));
    }
    if out.is_empty() {
        return Err(HarnessError::Config(format!(
            "{}: no weight entries",
            path.display()
        )));
    }
    Ok(out)
}

/// Cluster-family file: one cluster per line as space-separated item
/// indices in `0..n`.
pub fn load_family(path: &Path, n: usize) -> Result<Vec<Vec<usize>>, HarnessError> {
    let text = std::fs::read_to_string(path)?;
    let mut clusters = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut cluster = Vec::new();
        for tok in line.split_whitespace() {
            let item: usize = tok.parse().map_err(|_| {
                HarnessError::Config(format!(
                    "{}:{}: `{tok}` is not an item index",
                    path.display(),
                    lineno + 1
                ))
            })?;
            if item >= n {
                return Err(HarnessError::Config(format!(
                    "{}:{}: item {item} out of range 0..{n}",
                    path.display(),
                    lineno + 1
                )));
            }
            cluster.push(item);
        }
        clusters.push(cluster);
    }
    if clusters.is_empty() {
        return Err(HarnessError::Config(format!(
            "{}: no clusters",
            path.display()
        )));
    }
    Ok(clusters)
}

/// Point-set file: one point per line, `d` whitespace-separated decimals.
pub fn load_points(path: &Path, d: usize) -> Result<PointSet, HarnessError> {
    let text = std::fs::read_to_string(path)?;
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let coords: Result<Vec<f64>, _> = line.split_whitespace().map(str::parse).collect();
        let coords = coords.map_err(|_| {
            HarnessError::Config(format!(
                "{}:{}: expected {d} decimals",
                path.display(),
                lineno + 1
            ))
        })?;
        if coords.len() != d {
            return Err(HarnessError::Config(format!(
                "{}:{}: expected {d} coordinates, got {}",
                path.display(),
                lineno + 1,
                coords.len()
            )));
        }
        points.push(coords);
    }
    PointSet::new(d, points).map_err(|e| HarnessError::Config(e.to_string()))
}

/// Deterministic random points in general position, for hyperplane runs
/// without a points file.
pub fn generate_points(d: usize, n: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC1A5_51F1_ED90_17E5);
    loop {
        let pts: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..d).map(|_| rng.random_range(-5.0..5.0)).collect())
            .collect();
        let ps = PointSet::new(d, pts).expect("generated coordinates are valid");
        if ps.in_general_position() {
            return ps;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_file_round_trip() {
        let dir = std::env::temp_dir().join("eqgraph-inputs-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("weights.txt");
        std::fs::write(&path, "0 1.5\n3 0.25\n\n7 2\n").unwrap();
        let w = load_weights(&path).unwrap();
        assert_eq!(w, vec![(0, 1.5), (3, 0.25), (7, 2.0)]);
    }

    #[test]
    fn family_file_checks_ranges() {
        let dir = std::env::temp_dir().join("eqgraph-inputs-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("family.txt");
        std::fs::write(&path, "0 1\n2 3 9\n").unwrap();
        assert!(load_family(&path, 4).is_err());
        std::fs::write(&path, "0 1\n2 3\n").unwrap();
        assert_eq!(load_family(&path, 4).unwrap(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn generated_points_are_general_position_and_deterministic() {
        let a = generate_points(2, 6, 42);
        let b = generate_points(2, 6, 42);
        assert_eq!(a, b);
        assert!(a.in_general_position());
    }
}
