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

// Regenerates a few rows of the uniform quantile table and compares them
// with the bundled reference values.
//
// ```text
// cargo run --release --example regenerate_table
// ```

use chiral_index::{
    emit_table, reference_table, run_simulation, Law, SimulationConfig, TableFormat,
};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let config = SimulationConfig::new(Law::Uniform.standard(), vec![3, 5, 20])
        .with_observations(2000)
        .with_replicates(10)
        .with_seed(17);
    let rows = run_simulation(&config)?;
    print!(
        "{}",
        String::from_utf8(emit_table(Law::Uniform, &rows, TableFormat::PaperText)?)?
    );

    let table = reference_table(Law::Uniform);
    for row in &rows {
        let reference = table.row(row.n).expect("tabulated size");
        for (ours, theirs) in row.estimates.iter().zip(&reference.estimates) {
            println!(
                "n = {:>2}  p = {:.2}  simulated {:.6}  tabulated {:.6}  ({:+.2} tabulated S)",
                row.n,
                ours.level,
                ours.mean_k,
                theirs.mean_k,
                (ours.mean_k - theirs.mean_k) / theirs.sd_k
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
