//! Round-count schedule for the noise-tolerant learner.
//!
//! All logarithms are base 2 except where `ln` appears explicitly. The
//! schedule is valid only when `log(1/τ) > H(p)` — i.e. the total likelihood
//! provably decays faster than the target's own likelihood — where
//! `τ = βp + (1−β)(1−p)` and `β` bounds the per-round potential.

use crate::error::Error;

/// Binary entropy `H(p) = −p·log₂p − (1−p)·log₂(1−p)`.
pub fn entropy(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
}

/// Precomputed constants for the two multiplicative-weights stages and the
/// final confirmation stage.
#[derive(Debug, Clone)]
pub struct NoisySchedule {
    pub p: f64,
    pub delta: f64,
    /// `δ′ = δ/5`: each of the five failure modes gets an equal share.
    pub delta_prime: f64,
    pub beta: f64,
    pub tau: f64,
    pub entropy_p: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub k1: u32,
    /// True when the `√(1/log log N0)` branch of λ1 made the stage-1
    /// drift denominator nonpositive, forcing the λ2 fallback there.
    pub lambda_fallback: bool,
    n0: usize,
}

impl NoisySchedule {
    /// Builds the schedule for an initial candidate set of size `n0`.
    /// Requires `p ∈ (½, 1)`, `δ ∈ (0, 1)`, `β ∈ [½, 1)` and the threshold
    /// hypothesis `log(1/τ) > H(p)`.
    pub fn new(n0: usize, p: f64, delta: f64, beta: f64) -> Result<Self, Error> {
        if !(p > 0.5 && p < 1.0) {
            return Err(Error::InvalidSchedule(format!(
                "p = {p} outside (1/2, 1)"
            )));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::InvalidSchedule(format!("delta = {delta}")));
        }
        if !((0.5..1.0).contains(&beta)) {
            return Err(Error::InvalidSchedule(format!("beta = {beta}")));
        }
        let tau = beta * p + (1.0 - beta) * (1.0 - p);
        let h = entropy(p);
        let log_inv_tau = (1.0 / tau).log2();
        if log_inv_tau <= h {
            return Err(Error::InvalidSchedule(format!(
                "log2(1/tau) = {log_inv_tau:.4} must exceed H(p) = {h:.4}"
            )));
        }
        let delta_prime = delta / 5.0;
        let slope = (p / (1.0 - p)).log2();
        let lambda2 = (log_inv_tau - h) / (2.0 * slope);
        // √(1/log₂log₂N0) is only meaningful once log₂log₂N0 > 0.
        let loglog = (n0.max(2) as f64).log2().log2();
        let lambda1 = if loglog > 0.0 {
            (1.0 / loglog).sqrt().max(lambda2)
        } else {
            lambda2
        };

        let mut sched = NoisySchedule {
            p,
            delta,
            delta_prime,
            beta,
            tau,
            entropy_p: h,
            lambda1,
            lambda2,
            k1: 0,
            lambda_fallback: false,
            n0,
        };
        let (k1, fallback) = sched.stage_rounds(n0, lambda1);
        sched.k1 = k1;
        sched.lambda_fallback = fallback;
        Ok(sched)
    }

    /// Rounds for a multiplicative-weights stage over `size` candidates with
    /// drift margin `lambda`:
    /// `⌈max{ log₂size / (log(1/τ) − H(p) − λ·log(p/(1−p))) + log(1/τ)/log(1/δ′),
    ///        ln(1/δ′)/λ1² } + 1⌉`.
    ///
    /// Two desk-scale guards, both recorded via the returned flag:
    /// the drift denominator can go nonpositive when the `√(1/log log N0)`
    /// branch of λ1 dominates at small `N0`, in which case the denominator
    /// falls back to its λ2 form `(log(1/τ) − H(p))/2`; and the
    /// concentration term always uses λ1 (the larger margin), since a
    /// concentration bound only weakens as the margin shrinks and the λ2
    /// form is vacuously large at small `N0`.
    fn stage_rounds(&self, size: usize, lambda: f64) -> (u32, bool) {
        let log_inv_tau = (1.0 / self.tau).log2();
        let slope = (self.p / (1.0 - self.p)).log2();
        let mut denom = log_inv_tau - self.entropy_p - lambda * slope;
        let mut fallback = false;
        if denom <= 0.0 {
            denom = (log_inv_tau - self.entropy_p) / 2.0;
            fallback = true;
        }
        let drift = (size.max(1) as f64).log2() / denom
            + log_inv_tau / (1.0 / self.delta_prime).log2();
        let concentration = (1.0 / self.delta_prime).ln() / (self.lambda1 * self.lambda1);
        let k = drift.max(concentration) + 1.0;
        (k.ceil() as u32, fallback)
    }

    /// Rounds for the first multiplicative-weights stage.
    pub fn k1(&self) -> u32 {
        self.k1
    }

    /// Rounds for the second stage, over the `s1_len` models marked first.
    pub fn k2(&self, s1_len: usize) -> u32 {
        self.stage_rounds(s1_len, self.lambda2).0
    }

    /// Repeat count for the final confirmation of each of `s2_len`
    /// candidates: `⌈2·ln(|S2|/δ′)/(2p−1)²⌉`.
    pub fn repeat_count(&self, s2_len: usize) -> u32 {
        let m = 2.0 * (s2_len.max(1) as f64 / self.delta_prime).ln()
            / ((2.0 * self.p - 1.0) * (2.0 * self.p - 1.0));
        m.ceil() as u32
    }

    pub fn n0(&self) -> usize {
        self.n0
    }
}
