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

use thiserror::Error;

/// Errors produced by the chiral-index library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate sample: need at least {min} observations, got {n}")]
    DegenerateSample { n: usize, min: usize },

    #[error("non-finite observation at index {index}: {value}")]
    NonFiniteInput { index: usize, value: f64 },

    #[error("zero inertia: all observations are equal, the chiral index is undefined")]
    ZeroInertia,

    #[error("sample of size {n} is too large for permutation enumeration (max {max_n})")]
    TooLargeForBruteForce { n: usize, max_n: usize },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    #[error("unsupported level {0}; tabulated levels are 0.90, 0.95, 0.98, 0.99")]
    UnsupportedLevel(f64),

    #[error("sample size {n} is not tabulated (use interpolation for off-grid sizes)")]
    SampleSizeNotTabulated { n: usize },

    #[error("sample size {n} is outside the tabulated range [3, 10000]")]
    SampleSizeOutOfRange { n: usize },

    #[error("nothing to emit: table has no rows")]
    EmptyTable,

    #[error("malformed table data at line {line}: {message}")]
    TableFormat { line: usize, message: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
