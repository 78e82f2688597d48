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

//! One-sided symmetry test against the tabulated quantiles.
//!
//! Under the hypothesis that the sample comes from `U(a,b)` (or `N(m,s)`),
//! its chiral index is distributed as in the uniform (normal) table,
//! whatever `a, b` (`m, s`). The hypothesis is rejected at level `p` when
//! the index strictly exceeds the tabulated `K_p`.

use crate::chirality::chiral_index;
use crate::error::Result;
use crate::sample::Sample;
use crate::sampling::Law;
use crate::tables::{lookup_critical, tabulated_level, LookupPolicy, TABULATED_LEVELS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestResult {
    pub chi: f64,
    pub n: usize,
    pub law: Law,
    pub level: f64,
    pub critical: f64,
    /// `chi > critical`.
    pub reject: bool,
    pub policy: LookupPolicy,
    /// Largest tabulated level whose critical value `chi` exceeds.
    pub strongest_rejecting_level: Option<f64>,
}

pub fn test_symmetry(
    sample: &Sample,
    law: Law,
    level: f64,
    policy: LookupPolicy,
) -> Result<TestResult> {
    let level = tabulated_level(level)?;
    let report = chiral_index(sample)?;
    let (chi, n) = (report.chi, report.n);
    let critical = lookup_critical(law, n, level, policy)?;

    let mut strongest_rejecting_level = None;
    for &p in &TABULATED_LEVELS {
        if chi > lookup_critical(law, n, p, policy)? {
            strongest_rejecting_level = Some(p);
        }
    }

    Ok(TestResult {
        chi,
        n,
        law,
        level,
        critical,
        reject: chi > critical,
        policy,
        strongest_rejecting_level,
    })
}
