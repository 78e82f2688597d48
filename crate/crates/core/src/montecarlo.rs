// Copyright 2026 The chiral-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Monte-Carlo estimation of the quantiles of the chiral index.
//!
//! One replicate draws `N` samples of size `n`, computes their chiral
//! indices and estimates each quantile `K_p` from the sorted indices. The
//! replicate is repeated `R` times; a table row reports, per level, the
//! mean of the `R` estimates and their standard deviation (divisor
//! `R - 1`).
//!
//! Every `(n, replicate)` pair owns its own random stream (see
//! [`stream_index`]), so replicates run on a worker pool in any order and
//! the reduction is performed in replicate order afterwards. Results are
//! bit-identical for a given configuration whatever the thread count.

use rayon::prelude::*;

use crate::chirality::chi_of_sorted;
use crate::error::{Error, Result};
use crate::sample::sort_finite;
use crate::sampling::{make_generator, Distribution, Generator, SeedSpec, DEFAULT_SEED};

pub use crate::format::{emit_table, parse_csv, parse_paper_text, write_table, TableFormat};

pub const DEFAULT_LEVELS: [f64; 4] = [0.90, 0.95, 0.98, 0.99];
pub const DEFAULT_OBSERVATIONS: usize = 10_000;
pub const DEFAULT_REPLICATES: usize = 100;
pub const MIN_OBSERVATIONS: usize = 100;
pub const MIN_REPLICATES: usize = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub dist: Distribution,
    pub sample_sizes: Vec<usize>,
    /// Chiral-index observations per replicate (`N`).
    pub observations: usize,
    /// Number of replicates (`R`).
    pub replicates: usize,
    /// Strictly increasing probabilities in `(0, 1)`.
    pub levels: Vec<f64>,
    pub master_seed: u64,
}

impl SimulationConfig {
    /// `N = 10000`, `R = 100`, levels 0.90/0.95/0.98/0.99, default seed.
    pub fn new(dist: Distribution, sample_sizes: Vec<usize>) -> Self {
        Self {
            dist,
            sample_sizes,
            observations: DEFAULT_OBSERVATIONS,
            replicates: DEFAULT_REPLICATES,
            levels: DEFAULT_LEVELS.to_vec(),
            master_seed: DEFAULT_SEED,
        }
    }

    pub fn with_observations(mut self, observations: usize) -> Self {
        self.observations = observations;
        self
    }

    pub fn with_replicates(mut self, replicates: usize) -> Self {
        self.replicates = replicates;
        self
    }

    pub fn with_levels(mut self, levels: Vec<f64>) -> Self {
        self.levels = levels;
        self
    }

    pub fn with_seed(mut self, master_seed: u64) -> Self {
        self.master_seed = master_seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.dist.validate()?;
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        if self.sample_sizes.is_empty() {
            return invalid("no sample sizes given".into());
        }
        if let Some(&n) = self
            .sample_sizes
            .iter()
            .find(|&&n| n < 2 || n as u64 > u32::MAX as u64)
        {
            return invalid(format!("sample size {n} outside [2, 2^32)"));
        }
        if self.replicates < MIN_REPLICATES || self.replicates as u64 > u32::MAX as u64 {
            return invalid(format!(
                "replicates = {} (need at least {MIN_REPLICATES})",
                self.replicates
            ));
        }
        validate_levels(&self.levels, self.observations)
    }
}

fn validate_levels(levels: &[f64], observations: usize) -> Result<()> {
    let invalid = |msg: String| Err(Error::InvalidConfig(msg));
    if observations < MIN_OBSERVATIONS {
        return invalid(format!(
            "observations per replicate = {observations} (need at least {MIN_OBSERVATIONS})"
        ));
    }
    if levels.is_empty() {
        return invalid("no quantile levels given".into());
    }
    for &p in levels {
        if !(p > 0.0 && p < 1.0) {
            return invalid(format!("level {p} outside (0, 1)"));
        }
        if p * observations as f64 > (observations - 1) as f64 + 1e-9 {
            return invalid(format!(
                "level {p} leaves no observation above it with N = {observations}"
            ));
        }
    }
    if levels.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("levels must be strictly increasing".into());
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantileEstimate {
    pub level: f64,
    /// Mean of the replicate estimates of `K_p`.
    pub mean_k: f64,
    /// Standard deviation of the replicate estimates, divisor `R - 1`.
    pub sd_k: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantileTableRow {
    pub n: usize,
    pub estimates: Vec<QuantileEstimate>,
}

impl QuantileTableRow {
    pub fn estimate(&self, level: f64) -> Option<&QuantileEstimate> {
        self.estimates
            .iter()
            .find(|e| (e.level - level).abs() < 1e-9)
    }
}

/// Stream index of replicate `replicate` for sample size `n`.
///
/// The replicate number sits in the low 32 bits and the sample size in the
/// high 32 bits, so rows of one simulation never share draws.
pub fn stream_index(n: usize, replicate: usize) -> u64 {
    ((n as u64) << 32) | replicate as u64
}

/// Quantile estimate from ascending order statistics `chis`.
///
/// When `p * N` is an integer `k`, returns the midpoint of the `k`-th and
/// `(k+1)`-th order statistics (1-based); at `N = 10000` this is e.g.
/// `(chi(9000) + chi(9001)) / 2` for `p = 0.90`. Otherwise returns the
/// `ceil(p * N)`-th order statistic.
pub fn quantile_from_sorted(chis: &[f64], level: f64) -> f64 {
    let len = chis.len();
    let pn = level * len as f64;
    let k = pn.round();
    if (pn - k).abs() <= 1e-9 * pn.max(1.0) && k >= 1.0 && (k as usize) < len {
        let k = k as usize;
        (chis[k - 1] + chis[k]) / 2.0
    } else {
        let k = (pn.ceil() as usize).clamp(1, len);
        chis[k - 1]
    }
}

/// Chiral indices of `observations` samples of size `n`, sorted ascending.
pub fn simulate_chis(
    dist: &Distribution,
    n: usize,
    observations: usize,
    gen: &mut Generator,
) -> Result<Vec<f64>> {
    dist.validate()?;
    let mut buf = vec![0.0; n];
    let mut chis = Vec::with_capacity(observations);
    for _ in 0..observations {
        gen.fill(dist, &mut buf);
        sort_finite(&mut buf);
        chis.push(chi_of_sorted(&buf)?);
    }
    sort_finite(&mut chis);
    Ok(chis)
}

/// One replicate: `K_p` for each of `levels`.
pub fn replicate_quantiles(
    dist: &Distribution,
    n: usize,
    observations: usize,
    levels: &[f64],
    gen: &mut Generator,
) -> Result<Vec<f64>> {
    validate_levels(levels, observations)?;
    if n < 2 {
        return Err(Error::InvalidConfig(format!("sample size {n} below 2")));
    }
    let chis = simulate_chis(dist, n, observations, gen)?;
    Ok(levels
        .iter()
        .map(|&p| quantile_from_sorted(&chis, p))
        .collect())
}

/// Runs the full simulation on the current rayon pool.
pub fn run_simulation(config: &SimulationConfig) -> Result<Vec<QuantileTableRow>> {
    config.validate()?;
    let mut sizes = config.sample_sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();

    let units: Vec<(usize, usize)> = sizes
        .iter()
        .flat_map(|&n| (0..config.replicates).map(move |r| (n, r)))
        .collect();
    let results: Vec<Result<Vec<f64>>> = units
        .par_iter()
        .map(|&(n, r)| {
            let mut gen = make_generator(SeedSpec::new(config.master_seed, stream_index(n, r)));
            replicate_quantiles(
                &config.dist,
                n,
                config.observations,
                &config.levels,
                &mut gen,
            )
        })
        .collect();
    let results: Vec<Vec<f64>> = results.into_iter().collect::<Result<_>>()?;

    Ok(sizes
        .iter()
        .zip(results.chunks(config.replicates))
        .map(|(&n, replicates)| QuantileTableRow {
            n,
            estimates: config
                .levels
                .iter()
                .enumerate()
                .map(|(j, &level)| {
                    let ks: Vec<f64> = replicates.iter().map(|k| k[j]).collect();
                    let (mean_k, sd_k) = mean_and_sd(&ks);
                    QuantileEstimate {
                        level,
                        mean_k,
                        sd_k,
                    }
                })
                .collect(),
        })
        .collect())
}

/// Runs the simulation on a dedicated pool of `threads` workers.
pub fn run_simulation_with_threads(
    config: &SimulationConfig,
    threads: usize,
) -> Result<Vec<QuantileTableRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))?;
    pool.install(|| run_simulation(config))
}

/// Mean and sample standard deviation (divisor `len - 1`).
fn mean_and_sd(values: &[f64]) -> (f64, f64) {
    let len = values.len() as f64;
    let mean = values.iter().sum::<f64>() / len;
    let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
    (mean, (ss / (len - 1.0)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Law;

    #[test]
    fn midpoint_rule_on_ten_observations() {
        let chis: Vec<f64> = (1..=10).map(|i| i as f64 / 100.0).collect();
        assert!((quantile_from_sorted(&chis, 0.90) - 0.095).abs() < 1e-15);
    }

    #[test]
    fn midpoint_rule_at_ten_thousand() {
        let chis: Vec<f64> = (1..=10_000).map(f64::from).collect();
        assert_eq!(quantile_from_sorted(&chis, 0.90), 9000.5);
        assert_eq!(quantile_from_sorted(&chis, 0.95), 9500.5);
        assert_eq!(quantile_from_sorted(&chis, 0.98), 9800.5);
        assert_eq!(quantile_from_sorted(&chis, 0.99), 9900.5);
    }

    #[test]
    fn non_integral_rank_uses_ceiling() {
        let chis: Vec<f64> = (1..=101).map(f64::from).collect();
        // 0.9 * 101 = 90.9 -> 91st order statistic.
        assert_eq!(quantile_from_sorted(&chis, 0.90), 91.0);
    }

    #[test]
    fn mean_and_sd_uses_unbiased_divisor() {
        let (m, s) = mean_and_sd(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        assert!((s - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn config_validation() {
        let base = SimulationConfig::new(Law::Uniform.standard(), vec![3]);
        assert!(base.validate().is_ok());
        assert!(base.clone().with_observations(50).validate().is_err());
        assert!(base.clone().with_replicates(1).validate().is_err());
        assert!(base
            .clone()
            .with_levels(vec![0.95, 0.90])
            .validate()
            .is_err());
        assert!(base.clone().with_levels(vec![1.0]).validate().is_err());
        assert!(base
            .clone()
            .with_observations(100)
            .with_levels(vec![0.995])
            .validate()
            .is_err());
        assert!(base
            .clone()
            .with_observations(100)
            .with_levels(vec![0.99])
            .validate()
            .is_ok());
        let mut empty = base.clone();
        empty.sample_sizes.clear();
        assert!(empty.validate().is_err());
        let mut tiny = base;
        tiny.sample_sizes = vec![1];
        assert!(tiny.validate().is_err());
    }

    #[test]
    fn small_simulation_is_deterministic() {
        let config = SimulationConfig::new(Law::Uniform.standard(), vec![3])
            .with_observations(100)
            .with_replicates(2)
            .with_seed(11);
        let a = run_simulation(&config).unwrap();
        let b = run_simulation_with_threads(&config, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].n, 3);
        let means: Vec<f64> = a[0].estimates.iter().map(|e| e.mean_k).collect();
        assert!(means.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn rows_are_sorted_and_deduplicated() {
        let config = SimulationConfig::new(Law::Normal.standard(), vec![7, 3, 7])
            .with_observations(100)
            .with_replicates(2);
        let rows = run_simulation(&config).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![3, 7]);
    }

    #[test]
    fn distinct_rows_use_distinct_streams() {
        assert_ne!(stream_index(3, 0), stream_index(4, 0));
        assert_ne!(stream_index(3, 1), stream_index(3, 0));
    }
}
