//! Binary classification domains for interactive learning from "this
//! point's label is wrong" feedback: the hypercube of labelings, linearly
//! realizable concept families with LP witnesses, convex-hull intersection
//! with small certificates, and the proper hyperplane-median selector.

pub mod caratheodory;
pub mod family;
pub mod hypercube;
pub mod learner;
pub mod lp;
pub mod median;
pub mod points;

pub use caratheodory::{caratheodory_pair, max_margin_separator, HullRelation};
pub use family::{
    dichotomy_count_bound, enumerate_hyperplane_family, family_support, realizing_hyperplane,
    HyperplaneConcept,
};
pub use hypercube::HypercubeDomain;
pub use learner::{
    learn_hypercube_restricted, proper_hyperplane_learner, proper_hyperplane_learner_noisy,
    proper_query_bound,
};
pub use lp::{LpProblem, LpResult, Relation, LP_TOL};
pub use median::{average_labels, hyperplane_median, HyperplaneLpSelector};
pub use points::PointSet;
