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

//! The univariate chiral index.
//!
//! For a sample of size `n` the chiral index is `chi = (1 + r_m) / 2`,
//! where `r_m` is the smallest Pearson correlation reachable by pairing
//! the observations with a permutation of themselves. That minimum is
//! attained by pairing the ascending order with the descending order,
//! which gives the `O(n log n)` sort-and-correlate route. Two further
//! routes express `chi` as the studentized variance of the midranges, or
//! one minus the studentized variance of the half range lengths. A
//! permutation enumeration serves as the oracle for small samples.
//!
//! `chi` lies in `[0, 1/2]`, is zero exactly for mirror-symmetric samples
//! and is unchanged by any affine map `a * x + b` with `a != 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::sample::{sorted_checked, Centered, Sample};

/// Permutation enumeration is refused above this size unless asked for.
pub const DEFAULT_BRUTE_FORCE_MAX_N: usize = 8;

/// How a [`ChiralIndexReport`] was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Correlation of the ascending with the descending order.
    SortCorrelate,
    /// Studentized variance of the midranges.
    MidrangeVariance,
    /// One minus the studentized variance of the half range lengths.
    HalfrangeVariance,
    /// Minimum correlation over all permutations.
    BruteForce,
}

impl Method {
    pub const FORMULAS: [Method; 3] = [
        Method::SortCorrelate,
        Method::MidrangeVariance,
        Method::HalfrangeVariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::SortCorrelate => "sort-correlate",
            Method::MidrangeVariance => "midrange-variance",
            Method::HalfrangeVariance => "halfrange-variance",
            Method::BruteForce => "brute-force",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiralIndexReport {
    /// Chiral index in `[0, 1/2]`.
    pub chi: f64,
    /// Minimal correlation in `[-1, 0]`; `chi == (1 + r_m) / 2`.
    pub r_m: f64,
    pub n: usize,
    pub mean: f64,
    /// Standard deviation with divisor `n`.
    pub sigma: f64,
    pub method: Method,
}

impl ChiralIndexReport {
    fn from_r_m(r_m: f64, centered: &Centered, method: Method) -> Self {
        Self {
            chi: (1.0 + r_m) / 2.0,
            r_m,
            n: centered.n,
            mean: centered.mean,
            sigma: centered.sigma(),
            method,
        }
    }

    fn from_chi(chi: f64, centered: &Centered, method: Method) -> Self {
        Self {
            chi,
            r_m: 2.0 * chi - 1.0,
            n: centered.n,
            mean: centered.mean,
            sigma: centered.sigma(),
            method,
        }
    }
}

/// Chiral index by sorting and correlating the ascending order with the
/// descending order.
pub fn chiral_index(sample: &Sample) -> Result<ChiralIndexReport> {
    let sorted = sorted_checked(sample)?;
    let centered = centered_nonzero(&sorted)?;
    let r_m = mirror_correlation(&sorted, &centered);
    Ok(ChiralIndexReport::from_r_m(
        r_m,
        &centered,
        Method::SortCorrelate,
    ))
}

/// Chiral index as `[sum M_i^2 - n * mean^2] / (n * sigma^2)`.
///
/// Evaluated on centered deviations, where the numerator is
/// `sum (M_i - mean)^2`.
pub fn chiral_index_midrange(sample: &Sample) -> Result<ChiralIndexReport> {
    let sorted = sorted_checked(sample)?;
    let centered = centered_nonzero(&sorted)?;
    let n = sorted.len();
    let sum_sq: f64 = (0..n)
        .map(|i| {
            let m = 0.5 * (centered.unit(sorted[i]) + centered.unit(sorted[n - 1 - i]));
            m * m
        })
        .sum();
    let chi = sum_sq / centered.unit_sum_sq;
    Ok(ChiralIndexReport::from_chi(
        chi,
        &centered,
        Method::MidrangeVariance,
    ))
}

/// Chiral index as `1 - [sum L_i^2] / (n * sigma^2)`.
pub fn chiral_index_halfrange(sample: &Sample) -> Result<ChiralIndexReport> {
    let sorted = sorted_checked(sample)?;
    let centered = centered_nonzero(&sorted)?;
    let n = sorted.len();
    let sum_sq: f64 = (0..n)
        .map(|i| {
            let l = 0.5 * (centered.unit(sorted[n - 1 - i]) - centered.unit(sorted[i]));
            l * l
        })
        .sum();
    let chi = 1.0 - sum_sq / centered.unit_sum_sq;
    Ok(ChiralIndexReport::from_chi(
        chi,
        &centered,
        Method::HalfrangeVariance,
    ))
}

/// Dispatches on `method`. [`Method::BruteForce`] honours
/// [`DEFAULT_BRUTE_FORCE_MAX_N`].
pub fn chiral_index_with(sample: &Sample, method: Method) -> Result<ChiralIndexReport> {
    match method {
        Method::SortCorrelate => chiral_index(sample),
        Method::MidrangeVariance => chiral_index_midrange(sample),
        Method::HalfrangeVariance => chiral_index_halfrange(sample),
        Method::BruteForce => {
            let r_m = min_correlation_bruteforce(sample, DEFAULT_BRUTE_FORCE_MAX_N)?;
            let sorted = sorted_checked(sample)?;
            let centered = Centered::of_sorted(&sorted);
            Ok(ChiralIndexReport::from_r_m(
                r_m,
                &centered,
                Method::BruteForce,
            ))
        }
    }
}

/// Minimum Pearson correlation between the observations and any
/// permutation of them, by enumerating all `n!` permutations.
pub fn min_correlation_bruteforce(sample: &Sample, max_n: usize) -> Result<f64> {
    let values = sample.values();
    let n = values.len();
    if n < 2 {
        return Err(Error::DegenerateSample { n, min: 2 });
    }
    if n > max_n {
        return Err(Error::TooLargeForBruteForce { n, max_n });
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let dev: Vec<f64> = values.iter().map(|x| x - mean).collect();
    let inertia: f64 = dev.iter().map(|d| d * d).sum();
    if values.iter().all(|&x| x == values[0]) || inertia == 0.0 {
        return Err(Error::ZeroInertia);
    }

    let cross = |perm: &[f64]| dev.iter().zip(perm).map(|(a, b)| a * b).sum::<f64>();
    let mut perm = dev.clone();
    let mut best = cross(&perm);
    // Heap's algorithm, iterative form.
    let mut counters = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            best = best.min(cross(&perm));
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(best / inertia)
}

/// Chiral index of an already sorted, finite sequence; the allocation-free
/// path used by the Monte-Carlo engine. Same arithmetic as [`chiral_index`].
pub(crate) fn chi_of_sorted(sorted: &[f64]) -> Result<f64> {
    if sorted.len() < 2 {
        return Err(Error::DegenerateSample {
            n: sorted.len(),
            min: 2,
        });
    }
    let centered = centered_nonzero(sorted)?;
    Ok((1.0 + mirror_correlation(sorted, &centered)) / 2.0)
}

fn centered_nonzero(sorted: &[f64]) -> Result<Centered> {
    let centered = Centered::of_sorted(sorted);
    if centered.is_zero_inertia(sorted) {
        return Err(Error::ZeroInertia);
    }
    Ok(centered)
}

/// Pearson correlation of `sorted` with its reversal.
fn mirror_correlation(sorted: &[f64], centered: &Centered) -> f64 {
    let n = sorted.len();
    let cross: f64 = (0..n)
        .map(|i| centered.unit(sorted[i]) * centered.unit(sorted[n - 1 - i]))
        .sum();
    cross / centered.unit_sum_sq
}
