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

// Audits the bundled tables and shows exact and interpolated lookups.
//
// ```text
// cargo run --example audit_tables
// ```

use std::error::Error;

use chiral_index::tables::{pinned_sha256, tabulated_sizes};
use chiral_index::{lookup_critical, reference_table, verify_embedded_tables, Law, LookupPolicy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let violations = verify_embedded_tables();
    for v in &violations {
        println!("violation: {v}");
    }
    assert!(violations.is_empty());

    for law in Law::ALL {
        let table = reference_table(law);
        println!(
            "{law}: {} rows (grid has {}), sha256 {}",
            table.rows.len(),
            tabulated_sizes().len(),
            pinned_sha256(law)
        );
    }

    for n in [10, 100, 104, 105, 106, 110, 5000] {
        let exact = lookup_critical(Law::Uniform, n, 0.95, LookupPolicy::Exact);
        let interp = lookup_critical(Law::Uniform, n, 0.95, LookupPolicy::Interpolate)?;
        match exact {
            Ok(k) => println!("uniform n = {n:>5}  K0.95 = {k:.6}"),
            Err(e) => println!("uniform n = {n:>5}  K0.95 ~ {interp:.6}  ({e})"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
