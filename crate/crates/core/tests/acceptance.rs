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

//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line
//! each, and exits non-zero if any fails.

use std::process::Command;
use std::time::Instant;

use chiral_index::tables::{table_text, TABULATED_LEVELS};
use chiral_index::{
    chiral_index, chiral_index_halfrange, chiral_index_midrange, draw_sample, make_generator,
    min_correlation_bruteforce, reference_table, run_simulation, test_symmetry, Generator, Law,
    LookupPolicy, Sample, SeedSpec, SimulationConfig,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Compares simulated rows with the bundled table: |mean - tabulated| <= 5 S.
fn reproduce_table(law: Law) -> Outcome {
    let sizes = vec![3, 10, 25, 100, 500, 1000];
    let config = SimulationConfig::new(law.standard(), sizes)
        .with_observations(10_000)
        .with_replicates(20)
        .with_seed(1);
    let rows = run_simulation(&config).map_err(|e| e.to_string())?;
    let table = reference_table(law);
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for row in &rows {
        let reference = table
            .row(row.n)
            .ok_or(format!("n={} missing from table", row.n))?;
        for (ours, theirs) in row.estimates.iter().zip(&reference.estimates) {
            let z = (ours.mean_k - theirs.mean_k).abs() / theirs.sd_k;
            worst = worst.max(z);
            if z > 5.0 {
                failures.push(format!(
                    "n={} p={}: {:.6} vs {:.6}",
                    row.n, ours.level, ours.mean_k, theirs.mean_k
                ));
            }
        }
    }
    check(
        failures.is_empty(),
        format!(
            "worst deviation {worst:.2} S (limit 5 S) {}",
            failures.join("; ")
        ),
    )
}

fn large_n_spot_check() -> Outcome {
    let bands = [
        (Law::Uniform, 0.000094, 0.000114),
        (Law::Normal, 0.000170, 0.000198),
    ];
    let mut details = Vec::new();
    let mut ok = true;
    for (law, lo, hi) in bands {
        let config = SimulationConfig::new(law.standard(), vec![10_000])
            .with_observations(2000)
            .with_replicates(5)
            .with_seed(3);
        let rows = run_simulation(&config).map_err(|e| e.to_string())?;
        let k90 = rows[0].estimate(0.90).unwrap().mean_k;
        ok &= (lo..=hi).contains(&k90);
        details.push(format!("{law} K90 = {k90:.7} in [{lo}, {hi}]"));
    }
    check(ok, details.join(", "))
}

fn random_sample(g: &mut Generator, n: usize, kind: usize) -> Vec<f64> {
    let uniform = Law::Uniform.standard();
    loop {
        let values: Vec<f64> = match kind % 4 {
            0 => draw_sample(g, &uniform, n).unwrap().into_values(),
            1 => draw_sample(g, &Law::Normal.standard(), n)
                .unwrap()
                .into_values(),
            // Ties: a pool of four integers.
            2 => (0..n).map(|_| (g.next_unit() * 4.0).floor()).collect(),
            // Nearly constant: tiny spread on a large offset.
            _ => {
                let offset = 1e6 * (1.0 + g.next_unit());
                (0..n).map(|_| offset + 1e-4 * g.next_unit()).collect()
            }
        };
        if values.iter().any(|&v| v != values[0]) {
            return values;
        }
    }
}

fn formula_equivalence() -> Outcome {
    let mut g = make_generator(SeedSpec::new(4, 0));
    let mut worst: f64 = 0.0;
    for i in 0..1000 {
        let n = 2 + (g.next_u64() % 499) as usize;
        let sample = Sample::new(random_sample(&mut g, n, i)).unwrap();
        let chis = [
            chiral_index(&sample).unwrap().chi,
            chiral_index_midrange(&sample).unwrap().chi,
            chiral_index_halfrange(&sample).unwrap().chi,
        ];
        for a in 0..3 {
            for b in a + 1..3 {
                let scale = chis[a].abs().max(chis[b].abs()).max(1e-6);
                worst = worst.max((chis[a] - chis[b]).abs() / scale);
            }
        }
    }
    check(
        worst <= 1e-10,
        format!("max relative discrepancy {worst:.3e} (limit 1e-10)"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut g = make_generator(SeedSpec::new(5, 0));
    let mut worst: f64 = 0.0;
    let mut with_ties = 0;
    for n in 2..=7 {
        for i in 0..200 {
            let values = random_sample(&mut g, n, i % 3);
            let mut sorted = values.clone();
            sorted.sort_by(f64::total_cmp);
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                with_ties += 1;
            }
            let sample = Sample::new(values).unwrap();
            let brute = min_correlation_bruteforce(&sample, 8).map_err(|e| e.to_string())?;
            let r_m = chiral_index(&sample).unwrap().r_m;
            worst = worst.max((brute - r_m).abs());
        }
    }
    check(
        worst <= 1e-12 && with_ties > 0,
        format!("max |r_brute - r_m| = {worst:.3e} over 1200 samples ({with_ties} with ties)"),
    )
}

fn invariance() -> Outcome {
    let mut g = make_generator(SeedSpec::new(6, 0));
    let mut worst_affine: f64 = 0.0;
    let mut reversal_exact = true;
    for i in 0..500 {
        let n = 2 + (g.next_u64() % 199) as usize;
        let values = random_sample(&mut g, n, i % 3);
        let magnitude = 10f64.powf(6.0 * g.next_unit() - 3.0);
        let a = if g.next_unit() < 0.5 {
            -magnitude
        } else {
            magnitude
        };
        let b = 2000.0 * g.next_unit() - 1000.0;
        let sample = Sample::new(values.clone()).unwrap();
        let chi = chiral_index(&sample).unwrap().chi;
        let mapped = chiral_index(&sample.affine(a, b).unwrap()).unwrap().chi;
        worst_affine = worst_affine.max((chi - mapped).abs());
        let mut reversed = values;
        reversed.reverse();
        reversal_exact &= chiral_index(&Sample::new(reversed).unwrap()).unwrap().chi == chi;
    }
    let mut worst_mirror: f64 = 0.0;
    for i in 0..500 {
        let half = 1 + (g.next_u64() % 100) as usize;
        let center = 200.0 * g.next_unit() - 100.0;
        let mut values: Vec<f64> = (0..half)
            .flat_map(|_| {
                let d = 10.0 * g.next_unit();
                [center - d, center + d]
            })
            .collect();
        if i % 2 == 0 {
            values.push(center);
        }
        let chi = chiral_index(&Sample::new(values).unwrap()).unwrap().chi;
        worst_mirror = worst_mirror.max(chi.abs());
    }
    check(
        worst_affine <= 1e-10 && reversal_exact && worst_mirror <= 1e-12,
        format!(
            "affine {worst_affine:.3e} (limit 1e-10), reversal exact: {reversal_exact}, mirror {worst_mirror:.3e} (limit 1e-12)"
        ),
    )
}

fn one_outlier() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=50usize {
        let mut values = vec![0.0; n - 1];
        values.push(1.0);
        let closed = (n as f64 - 2.0) / (2.0 * (n as f64 - 1.0));
        let sample = Sample::new(values).unwrap();
        worst = worst.max((chiral_index(&sample).unwrap().chi - closed).abs());
        if n <= 7 {
            let brute = min_correlation_bruteforce(&sample, 8).unwrap();
            worst = worst.max(((1.0 + brute) / 2.0 - closed).abs());
        }
    }
    check(
        worst <= 1e-12,
        format!("max deviation {worst:.3e} for n = 3..=50"),
    )
}

fn table_integrity() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_chiral"))
        .args(["tables", "--verify"])
        .output()
        .map_err(|e| e.to_string())?;
    let verified = out.status.success();
    let spots = [
        (
            Law::Uniform,
            "3 0.212764 0.231432 0.242661 0.246342 0.001020 0.000774 0.000583 0.000320",
        ),
        (
            Law::Uniform,
            "100 0.010268 0.013574 0.018043 0.021550 0.000143 0.000230 0.000368 0.000502",
        ),
        (
            Law::Uniform,
            "10000 0.000104 0.000138 0.000186 0.000223 0.000001 0.000002 0.000004 0.000006",
        ),
        (
            Law::Normal,
            "3 0.206148 0.227731 0.240969 0.245439 0.001423 0.001022 0.000689 0.000456",
        ),
        (
            Law::Normal,
            "1000 0.001664 0.002051 0.002572 0.002977 0.000015 0.000024 0.000050 0.000068",
        ),
        (
            Law::Normal,
            "10000 0.000184 0.000224 0.000276 0.000317 0.000002 0.000003 0.000005 0.000006",
        ),
    ];
    let missing: Vec<&str> = spots
        .iter()
        .filter(|(law, line)| !table_text(*law).lines().any(|l| l == *line))
        .map(|(_, line)| *line)
        .collect();
    check(
        verified && missing.is_empty(),
        format!(
            "tables --verify exit {:?}, {} of 6 spot rows match",
            out.status.code(),
            6 - missing.len()
        ),
    )
}

fn empirical_level() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for law in Law::ALL {
        let mut rejections = 0;
        for i in 0..2000u64 {
            let mut g = make_generator(SeedSpec::new(9, i + 1000 * law as u64));
            let sample = draw_sample(&mut g, &law.standard(), 50).unwrap();
            let r = test_symmetry(&sample, law, 0.95, LookupPolicy::Exact)
                .map_err(|e| e.to_string())?;
            rejections += r.reject as usize;
        }
        let fraction = rejections as f64 / 2000.0;
        ok &= (0.035..=0.065).contains(&fraction);
        details.push(format!("{law} {fraction:.4}"));
    }
    check(
        ok,
        format!(
            "rejection fractions {} (band [0.035, 0.065])",
            details.join(", ")
        ),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |name: &str, threads: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_chiral"))
            .args([
                "simulate",
                "--law",
                "uniform",
                "--n-list",
                "3,10,50",
                "--obs",
                "2000",
                "--replicates",
                "8",
                "--seed",
                "10",
                "--threads",
                threads,
                "--out",
            ])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        if !status.success() {
            return Err(format!("simulate exited with {status}"));
        }
        std::fs::read(&path).map_err(|e| e.to_string())
    };
    let a = run("a.txt", "1")?;
    let b = run("b.txt", "1")?;
    let c = run("c.txt", "4")?;
    check(
        a == b && a == c,
        format!(
            "{} bytes, identical across runs and --threads 1/4: {}",
            a.len(),
            a == b && a == c
        ),
    )
}

fn main() {
    assert_eq!(TABULATED_LEVELS, [0.90, 0.95, 0.98, 0.99]);

    let criteria: [Criterion; 10] = [
        ("1 uniform table reproduction, N=10000, R=20", || {
            reproduce_table(Law::Uniform)
        }),
        ("2 normal table reproduction, N=10000, R=20", || {
            reproduce_table(Law::Normal)
        }),
        (
            "3 large-n spot check, n=10000, N=2000, R=5",
            large_n_spot_check,
        ),
        ("4 formula equivalence, 1000 samples", formula_equivalence),
        (
            "5 permutation oracle equivalence, n=2..7",
            oracle_equivalence,
        ),
        ("6 affine, reversal and mirror invariance", invariance),
        ("7 one-outlier closed form, n=3..50", one_outlier),
        ("8 embedded-table integrity", table_integrity),
        ("9 empirical test level at 0.95, n=50", empirical_level),
        (
            "10 simulate determinism across runs and threads",
            determinism,
        ),
    ];

    let mut failed = 0;
    for (name, criterion) in criteria {
        let started = Instant::now();
        let (tag, detail) = match criterion() {
            Ok(detail) => ("PASS", detail),
            Err(detail) => {
                failed += 1;
                ("FAIL", detail)
            }
        };
        println!("[{tag}] {name}: {detail} ({:.1?})", started.elapsed());
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
