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

// Chiral index of a small sample by every available route.
//
// ```text
// cargo run --example compute_index
// ```

use std::error::Error;

use chiral_index::{
    chiral_index_with, min_correlation_bruteforce, order_statistics, Method, Sample,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sample = Sample::new(vec![2.1, 0.4, 3.3, 0.9, 0.5, 7.8, 1.2])?;

    let ordered = order_statistics(&sample)?;
    println!("sorted     {:?}", ordered.sorted_values);
    println!("midranges  {:?}", ordered.midranges);
    println!("half lens  {:?}", ordered.half_lengths);
    println!("mean {} sigma {} (divisor n)", ordered.mean, ordered.sigma);

    let mut chis = Vec::new();
    for method in Method::FORMULAS {
        let report = chiral_index_with(&sample, method)?;
        println!(
            "{:<20} chi = {:.15}  r_m = {:.15}",
            method.name(),
            report.chi,
            report.r_m
        );
        chis.push(report.chi);
    }

    let brute = min_correlation_bruteforce(&sample, 8)?;
    println!(
        "{:<20} chi = {:.15}  (7! permutations)",
        "brute-force",
        (1.0 + brute) / 2.0
    );

    let spread = chis.iter().cloned().fold(f64::MIN, f64::max)
        - chis.iter().cloned().fold(f64::MAX, f64::min);
    assert!(spread < 1e-12);
    assert!(((1.0 + brute) / 2.0 - chis[0]).abs() < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
