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

//! Test-only oracles, independent of the library's arithmetic.

#![allow(dead_code)]

/// Exact chiral index of an integer sample as a reduced-free fraction
/// `(numerator, denominator)`, from integer arithmetic only.
///
/// With `D_i = n * x_(i) - sum(x)` (scaled deviations of the sorted
/// values), `r_m = sum D_i D_(n+1-i) / sum D_i^2` and
/// `chi = (sum D_i^2 + sum D_i D_(n+1-i)) / (2 sum D_i^2)`.
pub fn exact_chi(values: &[i64]) -> (i128, i128) {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let n = sorted.len() as i128;
    let total: i128 = sorted.iter().map(|&x| x as i128).sum();
    let dev: Vec<i128> = sorted.iter().map(|&x| n * x as i128 - total).collect();
    let ss: i128 = dev.iter().map(|d| d * d).sum();
    let cross: i128 = dev.iter().zip(dev.iter().rev()).map(|(a, b)| a * b).sum();
    (ss + cross, 2 * ss)
}

pub fn exact_chi_f64(values: &[i64]) -> f64 {
    let (num, den) = exact_chi(values);
    num as f64 / den as f64
}

/// Minimum correlation over all permutations, via recursive enumeration
/// and a textbook Pearson formula.
pub fn naive_min_correlation(values: &[f64]) -> f64 {
    fn pearson(x: &[f64], y: &[f64]) -> f64 {
        let n = x.len() as f64;
        let mx = x.iter().sum::<f64>() / n;
        let my = y.iter().sum::<f64>() / n;
        let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
        let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
        let syy: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
        sxy / (sxx * syy).sqrt()
    }
    fn recurse(values: &[f64], used: &mut Vec<bool>, perm: &mut Vec<f64>, best: &mut f64) {
        if perm.len() == values.len() {
            *best = best.min(pearson(values, perm));
            return;
        }
        for i in 0..values.len() {
            if !used[i] {
                used[i] = true;
                perm.push(values[i]);
                recurse(values, used, perm, best);
                perm.pop();
                used[i] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    recurse(
        values,
        &mut vec![false; values.len()],
        &mut Vec::new(),
        &mut best,
    );
    best
}
