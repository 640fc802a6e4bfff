//! Experiment configuration: plain-text `key=value` files plus CLI flag
//! overrides, validated into a typed [`ExperimentConfig`].

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::HarnessError;

/// Which model space and feedback repertoire to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    RankingBubble,
    RankingInsertion,
    ClusteringUnspecified,
    ClusteringSpecified,
    ClassifyHypercube,
    ClassifyHyperplane,
}

impl DomainKind {
    pub fn name(self) -> &'static str {
        match self {
            DomainKind::RankingBubble => "ranking-bubble",
            DomainKind::RankingInsertion => "ranking-insertion",
            DomainKind::ClusteringUnspecified => "clustering-unspecified",
            DomainKind::ClusteringSpecified => "clustering-specified",
            DomainKind::ClassifyHypercube => "classify-hypercube",
            DomainKind::ClassifyHyperplane => "classify-hyperplane",
        }
    }
}

/// How the simulated user picks among its legal responses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    UniformValid,
    AdversarialValid,
    /// The query-lower-bound adversary (ranking only): no fixed target,
    /// answers adaptively to maximize the query count.
    Adversary,
}

/// Query-selection strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MedianKind {
    GammaExact,
    PhiExact,
    Sampled,
    GreedyClustering,
    HyperplaneLp,
}

impl MedianKind {
    pub fn name(self) -> &'static str {
        match self {
            MedianKind::GammaExact => "gamma-exact",
            MedianKind::PhiExact => "phi-exact",
            MedianKind::Sampled => "sampled",
            MedianKind::GreedyClustering => "greedy-clustering",
            MedianKind::HyperplaneLp => "hyperplane-lp",
        }
    }
}

/// Wrong-response behavior of the noisy simulated user.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseKind {
    Uniform,
    Adversarial,
    ConfirmSpam,
}

impl NoiseKind {
    pub fn name(self) -> &'static str {
        match self {
            NoiseKind::Uniform => "uniform",
            NoiseKind::Adversarial => "adversarial",
            NoiseKind::ConfirmSpam => "confirm-spam",
        }
    }
}

/// Restriction of the clustering model space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    All,
    Intervals,
    File(String),
}

/// A fully validated experiment description.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub domain: DomainKind,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub p: f64,
    pub delta: f64,
    pub noise: NoiseKind,
    pub oracle: OracleKind,
    pub median: MedianKind,
    pub trials: usize,
    pub base_seed: u64,
    pub family: FamilySpec,
    pub points: Option<String>,
}

/// Accumulates raw key/value settings (file first, flags second) before
/// validation.
#[derive(Debug, Default, Clone)]
pub struct ConfigDraft {
    values: BTreeMap<String, String>,
}

const KNOWN_KEYS: &[&str] = &[
    "domain", "feedback", "mode", "n", "k", "d", "p", "delta", "noise", "oracle", "median",
    "trials", "seed", "family", "points",
];

impl ConfigDraft {
    pub fn new() -> Self {
        ConfigDraft::default()
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<(), HarnessError> {
        if !KNOWN_KEYS.contains(&key) {
            return Err(HarnessError::Config(format!(
                "unknown config key `{key}` (known: {})",
                KNOWN_KEYS.join(", ")
            )));
        }
        self.values.insert(key.to_string(), value.into());
        Ok(())
    }

    pub fn set_opt(&mut self, key: &str, value: Option<impl Into<String>>) -> Result<(), HarnessError> {
        if let Some(v) = value {
            self.set(key, v)?;
        }
        Ok(())
    }

    /// Loads `key=value` lines; `#` starts a comment, blank lines ignored.
    pub fn load_file(&mut self, path: &Path) -> Result<(), HarnessError> {
        let text = std::fs::read_to_string(path)?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                HarnessError::Config(format!(
                    "{}:{}: expected key=value, got `{line}`",
                    path.display(),
                    lineno + 1
                ))
            })?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, HarnessError> {
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|_| {
                HarnessError::Config(format!("field `{key}`: cannot parse `{raw}`"))
            }),
        }
    }

    /// Validates the accumulated settings into a runnable config.
    pub fn build(&self) -> Result<ExperimentConfig, HarnessError> {
        let err = |msg: String| Err(HarnessError::Config(msg));

        let domain_name = self
            .get("domain")
            .ok_or_else(|| HarnessError::Config("field `domain` is required".into()))?;
        let domain = match domain_name {
            "ranking" => match self.get("feedback").unwrap_or("bubble") {
                "bubble" => DomainKind::RankingBubble,
                "insertion" => DomainKind::RankingInsertion,
                other => return err(format!("field `feedback`: `{other}` is not bubble|insertion")),
            },
            "clustering" => match self.get("feedback").unwrap_or("unspecified") {
                "unspecified" => DomainKind::ClusteringUnspecified,
                "specified" => DomainKind::ClusteringSpecified,
                other => {
                    return err(format!(
                        "field `feedback`: `{other}` is not unspecified|specified"
                    ))
                }
            },
            "classify" => match self.get("mode").unwrap_or("hyperplane") {
                "hypercube" => DomainKind::ClassifyHypercube,
                "hyperplane" => DomainKind::ClassifyHyperplane,
                other => return err(format!("field `mode`: `{other}` is not hypercube|hyperplane")),
            },
            other => {
                return err(format!(
                    "field `domain`: `{other}` is not ranking|clustering|classify"
                ))
            }
        };

        let n: usize = self
            .parse("n")?
            .ok_or_else(|| HarnessError::Config("field `n` is required".into()))?;
        let d: usize = self.parse("d")?.unwrap_or(2);
        let k: usize = self.parse("k")?.unwrap_or(n);
        let p: f64 = self.parse("p")?.unwrap_or(1.0);
        let delta: f64 = self.parse("delta")?.unwrap_or(0.2);
        let trials: usize = self.parse("trials")?.unwrap_or(1);
        let base_seed: u64 = self.parse("seed")?.unwrap_or(0);

        let noise = match self.get("noise").unwrap_or("uniform") {
            "uniform" => NoiseKind::Uniform,
            "adversarial" => NoiseKind::Adversarial,
            "confirm-spam" => NoiseKind::ConfirmSpam,
            other => {
                return err(format!(
                    "field `noise`: `{other}` is not uniform|adversarial|confirm-spam"
                ))
            }
        };
        let oracle = match self.get("oracle").unwrap_or("uniform-valid") {
            "uniform-valid" => OracleKind::UniformValid,
            "adversarial-valid" => OracleKind::AdversarialValid,
            "adversary" => OracleKind::Adversary,
            other => {
                return err(format!(
                    "field `oracle`: `{other}` is not uniform-valid|adversarial-valid|adversary"
                ))
            }
        };
        let median = match self.get("median") {
            None => match domain {
                DomainKind::ClusteringUnspecified => MedianKind::GreedyClustering,
                DomainKind::ClassifyHyperplane => MedianKind::HyperplaneLp,
                _ => MedianKind::GammaExact,
            },
            Some("gamma-exact") => MedianKind::GammaExact,
            Some("phi-exact") => MedianKind::PhiExact,
            Some("sampled") => MedianKind::Sampled,
            Some("greedy-clustering") => MedianKind::GreedyClustering,
            Some("hyperplane-lp") => MedianKind::HyperplaneLp,
            Some(other) => {
                return err(format!(
                    "field `median`: `{other}` is not gamma-exact|phi-exact|sampled|greedy-clustering|hyperplane-lp"
                ))
            }
        };
        let family = match self.get("family").unwrap_or("all") {
            "all" => FamilySpec::All,
            "intervals" => FamilySpec::Intervals,
            other => match other.strip_prefix("file:") {
                Some(path) => FamilySpec::File(path.to_string()),
                None => {
                    return err(format!(
                        "field `family`: `{other}` is not all|intervals|file:<path>"
                    ))
                }
            },
        };
        let points = self
            .get("points")
            .map(|raw| raw.strip_prefix("file:").unwrap_or(raw).to_string());

        // Cross-field validation.
        if !(p > 0.5 && p <= 1.0) {
            return err(format!("field `p`: {p} outside (1/2, 1]"));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return err(format!("field `delta`: {delta} outside (0, 1)"));
        }
        if trials < 1 {
            return err("field `trials`: must be at least 1".into());
        }
        let n_range = match domain {
            DomainKind::RankingBubble => 2..=8,
            DomainKind::RankingInsertion => 2..=6,
            DomainKind::ClusteringUnspecified | DomainKind::ClusteringSpecified => 2..=5,
            DomainKind::ClassifyHypercube => 1..=10,
            DomainKind::ClassifyHyperplane => 1..=10,
        };
        if !n_range.contains(&n) {
            return err(format!(
                "field `n`: {n} outside the desk-scale range {n_range:?} for {}",
                domain.name()
            ));
        }
        if matches!(domain, DomainKind::ClassifyHyperplane) && !(1..=3).contains(&d) {
            return err(format!("field `d`: {d} outside 1..=3"));
        }
        let compatible = match median {
            MedianKind::GammaExact | MedianKind::PhiExact => true,
            MedianKind::Sampled => domain == DomainKind::RankingBubble,
            MedianKind::GreedyClustering => domain == DomainKind::ClusteringUnspecified,
            MedianKind::HyperplaneLp => domain == DomainKind::ClassifyHyperplane,
        };
        if !compatible {
            return err(format!(
                "field `median`: {} is incompatible with domain {}",
                median.name(),
                domain.name()
            ));
        }
        if oracle == OracleKind::Adversary {
            if domain != DomainKind::RankingBubble {
                return err("field `oracle`: adversary mode requires ranking with bubble feedback".into());
            }
            if p < 1.0 {
                return err("field `oracle`: adversary mode requires p = 1".into());
            }
        }
        if median == MedianKind::Sampled && p < 1.0 {
            return err("field `median`: the sampled ranker accumulates hard constraints and requires p = 1".into());
        }
        if matches!(family, FamilySpec::File(_) | FamilySpec::Intervals)
            && !matches!(
                domain,
                DomainKind::ClusteringUnspecified | DomainKind::ClusteringSpecified
            )
        {
            return err("field `family`: restrictions apply to clustering domains only".into());
        }

        Ok(ExperimentConfig {
            domain,
            n,
            k,
            d,
            p,
            delta,
            noise,
            oracle,
            median,
            trials,
            base_seed,
            family,
            points,
        })
    }
}
