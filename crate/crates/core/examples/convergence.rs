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

// The index of a symmetric parent shrinks towards zero as the sample
// grows, roughly like `1/n`.
//
// ```text
// cargo run --release --example convergence
// ```

use std::error::Error;

use chiral_index::{chiral_index, draw_sample, make_generator, Law, SeedSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for law in Law::ALL {
        let mut gen = make_generator(SeedSpec::new(3, law as u64));
        let mut previous = f64::INFINITY;
        for n in [10, 100, 1000, 10_000] {
            let reps = 50;
            let mut mean = 0.0;
            for _ in 0..reps {
                mean += chiral_index(&draw_sample(&mut gen, &law.standard(), n)?)?.chi;
            }
            mean /= reps as f64;
            println!(
                "{law:<8} n = {n:>6}  mean chi = {mean:.3e}  n * mean = {:.3}",
                n as f64 * mean
            );
            assert!(mean < previous);
            previous = mean;
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
