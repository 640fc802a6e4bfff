//! Restricted cluster families: when every admissible cluster comes from a
//! known list of M candidates and the target has (at most) k clusters, the
//! consistent set shrinks from `Bell(n)` to at most `M^k`, which is what
//! makes interactive clustering query-efficient.

use eqgraph_core::{Error, ModelId};

use crate::space::ClusteringSpace;

/// A list of candidate clusters plus the target cluster count.
#[derive(Debug, Clone)]
pub struct ClusterFamily {
    n: usize,
    /// Sorted, deduplicated candidate clusters (each a sorted item list).
    clusters: Vec<Vec<usize>>,
    /// Cluster-count bound `k`.
    pub k: usize,
    /// When true, admissible clusterings must have exactly `k` clusters;
    /// otherwise at most `k`.
    pub exactly_k: bool,
}

impl ClusterFamily {
    pub fn new(n: usize, clusters: Vec<Vec<usize>>, k: usize, exactly_k: bool) -> Option<Self> {
        if k == 0 {
            return None;
        }
        let mut canon: Vec<Vec<usize>> = Vec::new();
        for mut c in clusters {
            if c.is_empty() {
                return None;
            }
            c.sort_unstable();
            c.dedup();
            if *c.last().unwrap() >= n {
                return None;
            }
            canon.push(c);
        }
        canon.sort();
        canon.dedup();
        Some(ClusterFamily {
            n,
            clusters: canon,
            k,
            exactly_k,
        })
    }

    /// Every subset of `0..n−1` (the unrestricted family).
    pub fn all(n: usize, k: usize, exactly_k: bool) -> Self {
        assert!(n <= 16);
        let clusters = (1u64..(1 << n))
            .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
            .collect();
        ClusterFamily::new(n, clusters, k, exactly_k).unwrap()
    }

    /// All contiguous intervals of items on a line (a VC-dimension-2 style
    /// family).
    pub fn intervals(n: usize, k: usize, exactly_k: bool) -> Self {
        let mut clusters = Vec::new();
        for lo in 0..n {
            for hi in lo..n {
                clusters.push((lo..=hi).collect());
            }
        }
        ClusterFamily::new(n, clusters, k, exactly_k).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    pub fn contains(&self, cluster: &[usize]) -> bool {
        self.clusters.binary_search_by(|c| c.as_slice().cmp(cluster)).is_ok()
    }

    /// Whether a clustering is admissible under this family.
    pub fn admits(&self, c: &crate::partition::Clustering) -> bool {
        let count_ok = if self.exactly_k {
            c.cluster_count() == self.k
        } else {
            c.cluster_count() <= self.k
        };
        count_ok && c.blocks().iter().all(|b| self.contains(b))
    }
}

/// The admissible models of `space` under `family` — the initial
/// consistent set for a learner. Errors when nothing is admissible.
pub fn restricted_support(
    space: &ClusteringSpace,
    family: &ClusterFamily,
) -> Result<Vec<ModelId>, Error> {
    assert_eq!(space.n(), family.n());
    let support: Vec<ModelId> = space
        .all_models()
        .into_iter()
        .filter(|&id| family.admits(space.clustering(id)))
        .collect();
    if support.is_empty() {
        return Err(Error::InvalidParameter(
            "cluster family admits no clustering".into(),
        ));
    }
    Ok(support)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Clustering;
    use crate::space::FeedbackMode;

    #[test]
    fn two_items_with_one_pair_cluster() {
        let space = ClusteringSpace::new(2, FeedbackMode::Unspecified);
        let family = ClusterFamily::new(2, vec![vec![0], vec![1], vec![0, 1]], 2, false).unwrap();
        let support = restricted_support(&space, &family).unwrap();
        assert_eq!(support.len(), 2);
    }

    #[test]
    fn interval_family_matches_brute_force() {
        let n = 4;
        let k = 2;
        let space = ClusteringSpace::new(n, FeedbackMode::Unspecified);
        let family = ClusterFamily::intervals(n, k, false);
        let support = restricted_support(&space, &family).unwrap();
        let brute: Vec<ModelId> = space
            .all_models()
            .into_iter()
            .filter(|&id| {
                let c = space.clustering(id);
                c.cluster_count() <= k
                    && c.blocks().iter().all(|b| {
                        b.windows(2).all(|w| w[1] == w[0] + 1)
                    })
            })
            .collect();
        assert_eq!(support, brute);
        // Count bound: N0 ≤ M^k.
        let m = family.clusters().len();
        assert!(support.len() <= m.pow(k as u32));
    }

    #[test]
    fn k_equals_one_needs_the_full_cluster() {
        let space = ClusteringSpace::new(3, FeedbackMode::Unspecified);
        let without = ClusterFamily::new(3, vec![vec![0], vec![1], vec![2]], 1, false).unwrap();
        assert!(restricted_support(&space, &without).is_err());
        let with = ClusterFamily::new(3, vec![vec![0, 1, 2]], 1, false).unwrap();
        let support = restricted_support(&space, &with).unwrap();
        assert_eq!(support.len(), 1);
        assert_eq!(space.clustering(support[0]), &Clustering::one_cluster(3));
    }

    #[test]
    fn exactly_k_is_stricter() {
        let space = ClusteringSpace::new(3, FeedbackMode::Unspecified);
        let at_most = ClusterFamily::all(3, 2, false);
        let exact = ClusterFamily::all(3, 2, true);
        let a = restricted_support(&space, &at_most).unwrap();
        let b = restricted_support(&space, &exact).unwrap();
        assert!(b.len() < a.len());
        assert!(b.iter().all(|id| space.clustering(*id).cluster_count() == 2));
    }
}
