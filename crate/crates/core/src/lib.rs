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

//! Empirical chiral index of univariate samples.
//!
//! The chiral index `chi = (1 + r_m) / 2` measures the asymmetry of a
//! sample: `r_m` is the correlation of the ascending-sorted observations
//! with the descending-sorted ones, so `chi` lies in `[0, 1/2]` and is zero
//! exactly for mirror-symmetric samples. Its sampling distribution does not
//! depend on the location or scale of the parent law, which gives
//! location-free and scale-free symmetry tests once its quantiles are
//! known.
//!
//! The crate provides
//!
//! * three equivalent ways to compute `chi`, plus a permutation oracle
//!   ([`chirality`]);
//! * reproducible uniform and normal streams ([`sampling`]);
//! * a parallel, deterministic Monte-Carlo estimator of the quantiles
//!   `K_0.90 .. K_0.99` ([`montecarlo`]);
//! * bundled reference tables for `U(0,1)` and `N(0,1)` ([`tables`]);
//! * the symmetry test itself ([`symmetry`]) and the `chiral` CLI
//!   ([`cli`]).
//!
//! ```
//! use chiral_index::{chiral_index, Sample};
//!
//! let sample = Sample::new(vec![0.0, 0.0, 1.0]).unwrap();
//! let report = chiral_index(&sample).unwrap();
//! assert!((report.chi - 0.25).abs() < 1e-12);
//! ```
//!
//! Standard deviations follow the population convention (divisor `n`).

pub mod chirality;
pub mod cli;
pub mod error;
pub mod format;
pub mod input;
pub mod montecarlo;
pub mod sample;
pub mod sampling;
pub mod symmetry;
pub mod tables;

pub use chirality::{
    chiral_index, chiral_index_halfrange, chiral_index_midrange, chiral_index_with,
    min_correlation_bruteforce, ChiralIndexReport, Method, DEFAULT_BRUTE_FORCE_MAX_N,
};
pub use error::{Error, Result};
pub use format::TableFormat;
pub use montecarlo::{
    emit_table, replicate_quantiles, run_simulation, run_simulation_with_threads, QuantileEstimate,
    QuantileTableRow, SimulationConfig,
};
pub use sample::{order_statistics, OrderedSample, Sample};
pub use sampling::{draw_sample, make_generator, Distribution, Generator, Law, SeedSpec};
pub use symmetry::{test_symmetry, TestResult};
pub use tables::{lookup_critical, reference_table, verify_embedded_tables, LookupPolicy};
