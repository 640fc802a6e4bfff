//! Clustering domains for interactive learning from merge/split feedback:
//! partition spaces under the two response repertoires (merges with
//! unspecified or fully specified splits), closed-form distances, the
//! greedy bottom-up median, restricted cluster families, and the trivial
//! split-accepting baseline.

pub mod distance;
pub mod family;
pub mod greedy;
pub mod partition;
pub mod space;
pub mod trivial;

pub use distance::{gc_distance, gc_feedback_edges, uc_distance, uc_feedback_edges};
pub use family::{restricted_support, ClusterFamily};
pub use greedy::{greedy_uc_median, GreedyClusteringMedian};
pub use partition::{enumerate_partitions, partition_index, Clustering};
pub use space::{clustering_oracle, ClusteringSpace, FeedbackMode};
pub use trivial::{trivial_split_learner, BaselineOutcome};
