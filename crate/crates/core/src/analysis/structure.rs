//! Randomized check that removing fewer than `f(k)` (or `g(k)`) vertices from
//! Q_n, FQ_n or AQ_n leaves one large component plus a bounded remainder.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::components::remove_and_components;
use crate::cuts::{f_int, g_int};
use crate::par::{self, Exec};
use crate::topology::{Topology, Vertex};

pub const DEFAULT_SEED: u64 = 0x5EED;
const MAX_WITNESSES: usize = 10;

/// Which threshold and slack apply to a given `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `1 <= k <= n-2`: `|S| < f(k)`, remainder at most `k-1`.
    LowK,
    /// `n-1 <= k <= n+1`: `|S| < f(k)`, remainder at most `n+1`.
    MidK,
    /// `n+2 <= k <= 2n-4`: `|S| < g(k)`, remainder at most `k-1`.
    HighK,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SamplerConfig {
    pub regime: Regime,
    pub k: u32,
    /// Largest integer strictly below the threshold.
    pub set_size: usize,
    /// Allowed total order of the non-large components.
    pub slack: usize,
}

/// All `(regime, k)` configurations for dimension `n`; empty for `n < 4`.
pub fn sampler_configs(n: u32) -> Vec<SamplerConfig> {
    if n < 4 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut push = |regime, k: u32, bound: i64, slack: u32| {
        out.push(SamplerConfig {
            regime,
            k,
            set_size: (bound - 1).max(0) as usize,
            slack: slack as usize,
        })
    };
    for k in 1..=n - 2 {
        push(Regime::LowK, k, f_int(n, k as i64), k - 1);
    }
    for k in n - 1..=n + 1 {
        push(Regime::MidK, k, f_int(n, k as i64), n + 1);
    }
    for k in n + 2..=(2 * n).saturating_sub(4) {
        push(Regime::HighK, k, g_int(n, k as i64), k - 1);
    }
    out
}

/// Outcome of one removal under the large-component shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCheck {
    pub holds: bool,
    /// Descending.
    pub component_sizes: Vec<usize>,
    pub small_total: usize,
}

/// True iff `t - removed` has a component holding all but at most `slack`
/// of the remaining vertices. Such a component is then the unique large one.
pub fn check_removal_shape(t: &Topology, removed: &[Vertex], slack: usize) -> ShapeCheck {
    let v = remove_and_components(t, removed);
    let total: usize = v.component_sizes.iter().sum();
    let largest = v.component_sizes.first().copied().unwrap_or(0);
    let small_total = total - largest;
    ShapeCheck {
        holds: largest > 0 && small_total <= slack,
        component_sizes: v.component_sizes,
        small_total,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigSummary {
    #[serde(flatten)]
    pub config: SamplerConfig,
    pub trials: usize,
    pub violations: usize,
    /// Largest remainder seen over all trials.
    pub max_small_total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SamplerWitness {
    pub regime: Regime,
    pub k: u32,
    pub trial: u64,
    pub removed: Vec<String>,
    pub component_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub topology: String,
    pub seed: u64,
    pub trials: usize,
    /// False when no configuration exists for this `n`.
    pub applicable: bool,
    pub configs: Vec<ConfigSummary>,
    pub witnesses: Vec<SamplerWitness>,
    pub pass: bool,
}

/// RNG for one trial; independent of evaluation order.
pub fn trial_rng(seed: u64, config_index: usize, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((config_index as u64) << 32) | trial);
    rng
}

/// Samples `trials` uniform vertex sets per configuration and checks the shape of each removal.
pub fn check_component_structure(t: &Topology, trials: usize, seed: u64, exec: Exec) -> StructureReport {
    let configs = sampler_configs(t.n());
    let order = t.order();
    let mut summaries = Vec::with_capacity(configs.len());
    let mut witnesses = Vec::new();
    for (ci, cfg) in configs.iter().enumerate() {
        let size = cfg.set_size.min(order);
        let results = par::map_range(exec, 0..trials, |trial| {
            let mut rng = trial_rng(seed, ci, trial as u64);
            let removed: Vec<Vertex> = sample(&mut rng, order, size)
                .into_iter()
                .map(|i| Vertex(i as u32))
                .collect();
            let check = check_removal_shape(t, &removed, cfg.slack);
            (removed, check)
        });
        let mut violations = 0;
        let mut max_small_total = 0;
        for (trial, (mut removed, check)) in results.into_iter().enumerate() {
            max_small_total = max_small_total.max(check.small_total);
            if !check.holds {
                violations += 1;
                if witnesses.len() < MAX_WITNESSES {
                    removed.sort_unstable();
                    witnesses.push(SamplerWitness {
                        regime: cfg.regime,
                        k: cfg.k,
                        trial: trial as u64,
                        removed: removed.iter().map(|&v| t.format_vertex(v)).collect(),
                        component_sizes: check.component_sizes,
                    });
                }
            }
        }
        summaries.push(ConfigSummary { config: *cfg, trials, violations, max_small_total });
    }
    StructureReport {
        topology: t.name(),
        seed,
        trials,
        applicable: !configs.is_empty(),
        pass: summaries.iter().all(|s| s.violations == 0),
        configs: summaries,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn configs_follow_thresholds() {
        let c = sampler_configs(5);
        // k = 1..3 low, 4..6 mid, none high
        assert_eq!(c.len(), 6);
        assert_eq!(c[1], SamplerConfig { regime: Regime::LowK, k: 2, set_size: 7, slack: 1 });
        assert_eq!(c[3].slack, 6);
        let c6 = sampler_configs(6);
        let high: Vec<_> = c6.iter().filter(|c| c.regime == Regime::HighK).collect();
        assert_eq!(high.len(), 1);
        assert_eq!(high[0].k, 8);
        assert_eq!(high[0].set_size, 17);
        assert!(sampler_configs(3).is_empty());
    }

    #[test]
    fn neighborhood_removal_isolates_one_vertex() {
        let q5 = Topology::hypercube(5).unwrap();
        let s = q5.neighbors_of(Vertex(0));
        let c = check_removal_shape(&q5, &s, 1);
        assert!(c.holds);
        assert_eq!(c.small_total, 1);
        assert_eq!(c.component_sizes, [26, 1]);
        let c = check_removal_shape(&q5, &[], 0);
        assert!(c.holds);
        assert_eq!(c.component_sizes, [32]);
    }

    #[test]
    fn sampler_is_reproducible_and_clean() {
        let fq5 = Topology::folded(5).unwrap();
        let a = check_component_structure(&fq5, 200, DEFAULT_SEED, Exec::Sequential);
        let b = check_component_structure(&fq5, 200, DEFAULT_SEED, Exec::Parallel);
        assert_eq!(a, b);
        assert!(a.pass);
        assert!(a.applicable);
    }

    #[test]
    fn inapplicable_dimension() {
        let r = check_component_structure(&Topology::augmented(3).unwrap(), 10, 1, Exec::Sequential);
        assert!(!r.applicable);
        assert!(r.configs.is_empty());
    }
}
