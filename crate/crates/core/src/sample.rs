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

//! Samples and their order statistics.

use crate::error::{Error, Result};

/// A univariate sample of finite observations.
///
/// The order of the observations is kept as given; sorting happens on
/// demand through [`order_statistics`] or the chiral-index routines.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Wraps `values`, rejecting NaN and infinities.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteInput { index, value });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Returns `scale * x + shift` for every observation.
    pub fn affine(&self, scale: f64, shift: f64) -> Result<Self> {
        Self::new(self.values.iter().map(|x| scale * x + shift).collect())
    }

    pub(crate) fn from_finite_unchecked(values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| v.is_finite()));
        Self { values }
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl TryFrom<&[f64]> for Sample {
    type Error = Error;

    fn try_from(values: &[f64]) -> Result<Self> {
        Self::new(values.to_vec())
    }
}

/// Order statistics of a sample together with the quantities the chiral
/// index is built from.
///
/// `sigma` uses the population convention (divisor `n`), not the
/// unbiased `n - 1` form: the chiral index is a ratio against the inertia
/// `n * sigma^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedSample {
    /// Observations in nondecreasing order, `X(1:n) <= ... <= X(n:n)`.
    pub sorted_values: Vec<f64>,
    pub mean: f64,
    /// Standard deviation with divisor `n`.
    pub sigma: f64,
    /// `M_i = (X(n+1-i:n) + X(i:n)) / 2` for `i = 1..=n`.
    pub midranges: Vec<f64>,
    /// `L_i = (X(n+1-i:n) - X(i:n)) / 2` for `i = 1..=n`; negative past the middle.
    pub half_lengths: Vec<f64>,
}

impl OrderedSample {
    pub fn n(&self) -> usize {
        self.sorted_values.len()
    }
}

/// Sorts the sample and computes mean, sigma, midranges and half lengths.
pub fn order_statistics(sample: &Sample) -> Result<OrderedSample> {
    let sorted = sorted_checked(sample)?;
    let n = sorted.len();
    let centered = Centered::of_sorted(&sorted);

    let mut midranges = Vec::with_capacity(n);
    let mut half_lengths = Vec::with_capacity(n);
    for i in 0..n {
        let (lo, hi) = (sorted[i], sorted[n - 1 - i]);
        midranges.push(0.5 * hi + 0.5 * lo);
        half_lengths.push(0.5 * hi - 0.5 * lo);
    }

    Ok(OrderedSample {
        mean: centered.mean,
        sigma: centered.sigma(),
        sorted_values: sorted,
        midranges,
        half_lengths,
    })
}

/// Validated, sorted copy of the observations (`n >= 2`).
pub(crate) fn sorted_checked(sample: &Sample) -> Result<Vec<f64>> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::DegenerateSample { n, min: 2 });
    }
    let mut sorted = sample.values().to_vec();
    sort_finite(&mut sorted);
    Ok(sorted)
}

pub(crate) fn sort_finite(values: &mut [f64]) {
    values.sort_unstable_by(f64::total_cmp);
}

/// Centering of a sorted sequence.
///
/// The mean gets one correction pass, and deviations are expressed in
/// units of the largest absolute deviation so that squares can neither
/// overflow nor underflow.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Centered {
    pub mean: f64,
    /// Largest absolute deviation from the mean; zero iff all values are equal.
    pub scale: f64,
    /// Sum of squared unit deviations, in `[1, n]` when `scale > 0`.
    pub unit_sum_sq: f64,
    pub n: usize,
}

impl Centered {
    pub fn of_sorted(sorted: &[f64]) -> Self {
        let n = sorted.len();
        let nf = n as f64;
        // Halving keeps the sum representable for inputs near f64::MAX.
        let rough = sorted.iter().map(|x| 0.5 * x).sum::<f64>() / nf * 2.0;
        let correction = sorted.iter().map(|x| x - rough).sum::<f64>() / nf;
        let mean = rough + correction;
        let scale = (sorted[0] - mean).abs().max((sorted[n - 1] - mean).abs());
        let unit_sum_sq = if scale > 0.0 {
            sorted.iter().map(|x| ((x - mean) / scale).powi(2)).sum()
        } else {
            0.0
        };
        Self {
            mean,
            scale,
            unit_sum_sq,
            n,
        }
    }

    pub fn is_zero_inertia(&self, sorted: &[f64]) -> bool {
        sorted[0] == sorted[sorted.len() - 1] || self.scale == 0.0 || self.unit_sum_sq == 0.0
    }

    #[inline]
    pub fn unit(&self, x: f64) -> f64 {
        (x - self.mean) / self.scale
    }

    pub fn sigma(&self) -> f64 {
        self.scale * (self.unit_sum_sq / self.n as f64).sqrt()
    }
}
