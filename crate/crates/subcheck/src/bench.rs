//! Scaling benchmarks for the substitutability search.
//!
//! Wall-clock scaling is only meaningful when the search runs to completion,
//! so the harness measures on *substitutable* instances: weighted
//! partition-matroid lists. Alternatives are split into groups; acceptable
//! sets pick at most one alternative per group; sets are ranked by total
//! weight. Choosing from any market means taking a heaviest available
//! alternative per group, which restricts consistently to sub-markets, so
//! both defining conditions hold — the small-universe tests cross-check this
//! against the exhaustive oracle.
//!
//! The construction also gives exact size control: a grouping with sizes
//! `n_1, …, n_k` yields `∏ (n_i + 1)` acceptable sets (the empty set
//! included), so a requested set count factors directly into group sizes.
//! Repeating one weight inside a group creates indifference classes of
//! exactly that multiplicity without changing the set count.

use serde::Serialize;
use std::time::Instant;

use subcheck_core::oracle::default_universe;
use subcheck_core::subtest::SearchMode;
use subcheck_core::{test_substitutability, AltSet, PreferenceList};

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p) {
            factors.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// Group sizes realizing exactly `target` sets within `universe`
/// alternatives, with some group of at least `tie` members when `tie > 1`.
fn compose(target: u64, universe: usize, tie: usize) -> Option<Vec<usize>> {
    let budget = |fs: &[u64]| fs.iter().map(|&f| f as usize - 1).sum::<usize>();
    let mut factors = prime_factors(target);
    if factors.is_empty() || factors.iter().any(|&f| f as usize > universe + 1) {
        return None;
    }
    if budget(&factors) > universe {
        return None;
    }
    // Merge the smallest factors until one group can hold the tied weights.
    while tie > 1 && !factors.iter().any(|&f| f as usize > tie) {
        if factors.len() < 2 {
            return None;
        }
        factors.sort_unstable();
        let a = factors.remove(0);
        let b = factors.remove(0);
        let merged = a.checked_mul(b)?;
        if merged as usize > universe + 1 {
            return None;
        }
        factors.push(merged);
        if budget(&factors) > universe {
            return None;
        }
    }
    factors.sort_unstable();
    Some(factors.iter().map(|&f| f as usize - 1).collect())
}

/// Builds a substitutable instance with as close to `target_sets` acceptable
/// sets as the factorization permits (never more), `universe_size`
/// alternatives, and largest indifference class exactly `tie` (1 = strict).
pub fn substitutable_fixture(
    universe_size: usize,
    target_sets: u64,
    tie: usize,
) -> Result<PreferenceList, String> {
    if universe_size == 0 || universe_size > 62 {
        return Err("fixture universes must have 1 to 62 alternatives".into());
    }
    if tie > universe_size {
        return Err(format!(
            "cannot build classes of {tie} within {universe_size} alternatives"
        ));
    }
    let floor = 2u64.max(tie as u64 + 1);
    let mut t = target_sets.max(floor);
    while t >= floor {
        if let Some(groups) = compose(t, universe_size, tie) {
            return Ok(build_partition_list(universe_size, &groups, tie));
        }
        t -= 1;
    }
    Err(format!(
        "no fixture with about {target_sets} sets fits in {universe_size} alternatives"
    ))
}

fn build_partition_list(universe_size: usize, groups: &[usize], tie: usize) -> PreferenceList {
    let universe = default_universe(universe_size);
    let member_count: usize = groups.iter().sum();
    debug_assert!(member_count <= universe_size);

    // Distinct power-of-two weights keep all selection totals distinct;
    // sharing one weight `tie` times inside a single group creates exactly
    // the requested class multiplicity.
    let mut weights: Vec<u64> = (0..member_count).map(|j| 1u64 << (j + 1)).collect();
    if tie > 1 {
        let mut start = 0usize;
        for &size in groups {
            if size >= tie {
                for k in 1..tie {
                    weights[start + k] = weights[start];
                }
                break;
            }
            start += size;
        }
    }

    // Enumerate every selection (at most one member per group) with a
    // mixed-radix counter; digit 0 skips the group.
    let mut digits = vec![0usize; groups.len()];
    let mut scored: Vec<(u64, AltSet)> = Vec::new();
    'selections: loop {
        let mut set = universe.empty_set();
        let mut total = 0u64;
        let mut start = 0usize;
        for (gi, &size) in groups.iter().enumerate() {
            if digits[gi] > 0 {
                let member = start + digits[gi] - 1;
                set.insert(member);
                total += weights[member];
            }
            start += size;
        }
        scored.push((total, set));

        let mut gi = 0;
        loop {
            if gi == groups.len() {
                break 'selections;
            }
            digits[gi] += 1;
            if digits[gi] <= groups[gi] {
                break;
            }
            digits[gi] = 0;
            gi += 1;
        }
    }

    scored.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let mut classes: Vec<Vec<AltSet>> = Vec::new();
    let mut previous_total: Option<u64> = None;
    for (total, set) in scored {
        if previous_total == Some(total) {
            classes.last_mut().unwrap().push(set);
        } else {
            classes.push(vec![set]);
            previous_total = Some(total);
        }
    }
    // The all-skip selection is the empty set with total 0, strictly last.
    PreferenceList::from_classes(universe, classes).expect("partition selections are distinct")
}

/// Median wall-clock milliseconds of a full first-witness check. Sub-2ms
/// runs are amplified with an inner loop so the clock resolution does not
/// dominate.
pub fn measure_median_ms(pref: &PreferenceList, reps: usize) -> f64 {
    let reps = reps.max(1);
    let t0 = Instant::now();
    std::hint::black_box(test_substitutability(pref, SearchMode::FirstWitness));
    let first_ms = t0.elapsed().as_secs_f64() * 1000.0;
    let inner = if first_ms < 2.0 {
        (((4.0 / first_ms.max(1e-4)).ceil()) as usize).clamp(1, 10_000)
    } else {
        1
    };

    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let t0 = Instant::now();
        for _ in 0..inner {
            std::hint::black_box(test_substitutability(pref, SearchMode::FirstWitness));
        }
        samples.push(t0.elapsed().as_secs_f64() * 1000.0 / inner as f64);
    }
    samples.sort_by(f64::total_cmp);
    samples[samples.len() / 2]
}

/// Least-squares slope of `ln y` against `ln x`. `None` without at least two
/// positive, distinct-x points.
pub fn fit_loglog(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = logs.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub u_values: Vec<usize>,
    pub ell_values: Vec<u64>,
    pub s_values: Vec<usize>,
    pub reps: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub sweeps: Vec<Sweep>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sweep {
    /// Which parameter this sweep varies: "ell", "u", or "s".
    pub varied: String,
    pub points: Vec<SweepPoint>,
    /// Log-log slope of median time against the varied parameter.
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    pub u: usize,
    /// Achieved set count (the fixture hits the closest factorable size).
    pub ell: usize,
    pub requested_ell: u64,
    pub s: usize,
    pub median_ms: f64,
}

fn run_point(u: usize, ell: u64, s: usize, reps: usize) -> Result<SweepPoint, String> {
    let pref = substitutable_fixture(u, ell, s)?;
    let median_ms = measure_median_ms(&pref, reps);
    Ok(SweepPoint {
        u,
        ell: pref.set_count(),
        requested_ell: ell,
        s: pref.max_class_size(),
        median_ms,
    })
}

/// Runs one sweep per parameter that has more than one value (others pinned
/// to their first value); with all ranges singleton, measures the single
/// configuration.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, String> {
    if config.u_values.is_empty() || config.ell_values.is_empty() || config.s_values.is_empty() {
        return Err("benchmark ranges must be non-empty".into());
    }
    let (u0, ell0, s0) = (config.u_values[0], config.ell_values[0], config.s_values[0]);
    let mut sweeps = Vec::new();

    if config.ell_values.len() > 1 {
        let mut points = Vec::new();
        for &ell in &config.ell_values {
            points.push(run_point(u0, ell, s0, config.reps)?);
        }
        let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.ell as f64, p.median_ms)).collect();
        sweeps.push(Sweep {
            varied: "ell".into(),
            slope: fit_loglog(&xy),
            points,
        });
    }
    if config.u_values.len() > 1 {
        let mut points = Vec::new();
        for &u in &config.u_values {
            points.push(run_point(u, ell0, s0, config.reps)?);
        }
        let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.u as f64, p.median_ms)).collect();
        sweeps.push(Sweep {
            varied: "u".into(),
            slope: fit_loglog(&xy),
            points,
        });
    }
    if config.s_values.len() > 1 {
        let mut points = Vec::new();
        for &s in &config.s_values {
            points.push(run_point(u0, ell0, s, config.reps)?);
        }
        let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.s as f64, p.median_ms)).collect();
        sweeps.push(Sweep {
            varied: "s".into(),
            slope: fit_loglog(&xy),
            points,
        });
    }
    if sweeps.is_empty() {
        let points = vec![run_point(u0, ell0, s0, config.reps)?];
        sweeps.push(Sweep {
            varied: "ell".into(),
            slope: None,
            points,
        });
    }
    Ok(BenchReport { sweeps })
}

pub fn render_bench_text(report: &BenchReport) -> String {
    let mut out = String::new();
    for sweep in &report.sweeps {
        out.push_str(&format!("sweep varying {}:\n", sweep.varied));
        for p in &sweep.points {
            out.push_str(&format!(
                "  u={:<3} ell={:<6} s={:<2} {:>12.4} ms\n",
                p.u, p.ell, p.s, p.median_ms
            ));
        }
        match sweep.slope {
            Some(slope) => out.push_str(&format!("  log-log slope: {slope:.2}\n")),
            None => out.push_str("  log-log slope: n/a\n"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use subcheck_core::{brute_force_test, ORACLE_DEFAULT_MAX_U};

    #[test]
    fn fixture_hits_exact_sizes() {
        for (target, u) in [(50u64, 16), (100, 16), (200, 16), (400, 16), (200, 20)] {
            let pref = substitutable_fixture(u, target, 1).unwrap();
            assert_eq!(pref.set_count() as u64, target, "target {target}");
            assert_eq!(pref.max_class_size(), 1);
            assert_eq!(pref.universe_size(), u);
        }
    }

    #[test]
    fn fixture_controls_class_size() {
        for tie in 2..=5 {
            let pref = substitutable_fixture(20, 200, tie).unwrap();
            assert_eq!(pref.set_count(), 200, "tie {tie}");
            assert_eq!(pref.max_class_size(), tie, "tie {tie}");
        }
    }

    #[test]
    fn small_fixtures_are_substitutable_per_the_oracle() {
        for (u, target, tie) in [(5, 6, 1), (6, 12, 2), (6, 18, 3), (6, 24, 2), (4, 8, 1)] {
            let pref = substitutable_fixture(u, target, tie).unwrap();
            let verdict = brute_force_test(&pref, ORACLE_DEFAULT_MAX_U).unwrap();
            assert!(
                verdict.substitutable,
                "fixture u={u} target={target} tie={tie} is not substitutable"
            );
        }
    }

    #[test]
    fn loglog_fit_recovers_a_cubic() {
        let points: Vec<(f64, f64)> = [50.0f64, 100.0, 200.0, 400.0]
            .iter()
            .map(|&x| (x, 0.001 * x.powi(3)))
            .collect();
        let slope = fit_loglog(&points).unwrap();
        assert!((slope - 3.0).abs() < 1e-9);
        assert_eq!(fit_loglog(&[(1.0, 1.0)]), None);
    }

    #[test]
    fn bench_smoke() {
        let report = run_bench(&BenchConfig {
            u_values: vec![8],
            ell_values: vec![8, 16],
            s_values: vec![1],
            reps: 1,
        })
        .unwrap();
        assert_eq!(report.sweeps.len(), 1);
        assert_eq!(report.sweeps[0].points.len(), 2);
        assert!(report.sweeps[0].slope.is_some());
        assert!(!render_bench_text(&report).is_empty());
    }

    #[test]
    fn u_and_s_sweeps_cover_their_axes() {
        let report = run_bench(&BenchConfig {
            u_values: vec![12, 24],
            ell_values: vec![40],
            s_values: vec![1, 2, 4],
            reps: 2,
        })
        .unwrap();
        assert_eq!(report.sweeps.len(), 2);
        let u_sweep = &report.sweeps[0];
        assert_eq!(u_sweep.varied, "u");
        assert_eq!(u_sweep.points.len(), 2);
        // Doubling the universe at fixed set count only widens the bit
        // vectors (one word either way here), so time stays within a small
        // factor. The bound is deliberately loose against timer noise.
        let ratio = u_sweep.points[1].median_ms / u_sweep.points[0].median_ms;
        assert!(ratio < 6.0, "u-doubling ratio {ratio:.2}");
        for point in &u_sweep.points {
            assert_eq!(point.ell, 40);
            assert_eq!(point.s, 1);
        }

        let s_sweep = &report.sweeps[1];
        assert_eq!(s_sweep.varied, "s");
        let sizes: Vec<usize> = s_sweep.points.iter().map(|p| p.s).collect();
        assert_eq!(sizes, vec![1, 2, 4]);
        // Class size must not disturb the set count.
        assert!(s_sweep.points.iter().all(|p| p.ell == 40));
    }

    #[test]
    fn repetition_counts_agree_on_ordering() {
        let small = substitutable_fixture(10, 12, 1).unwrap();
        let large = substitutable_fixture(16, 192, 1).unwrap();
        for reps in [1, 5] {
            let t_small = measure_median_ms(&small, reps);
            let t_large = measure_median_ms(&large, reps);
            assert!(t_small > 0.0 && t_large > 0.0);
            assert!(
                t_small < t_large,
                "reps={reps}: {t_small:.4} ms vs {t_large:.4} ms"
            );
        }
    }
}
