//! Multi-threaded driver for the violation search.
//!
//! The ordered-pair space is split into one contiguous range per worker.
//! Each worker scans its range independently (sharing only best-so-far
//! cutoff indices, which prune work but never change results) and the
//! outcomes merge by minimum candidate index. The merged verdict is
//! bit-identical to the single-threaded one for every thread count.

use std::thread;

use subcheck_core::subtest::{
    merge_outcomes, pair_space, scan_range, KindFilter, RangeOutcome, SearchCutoffs, SearchOptions,
    Verdict,
};
use subcheck_core::PreferenceList;

/// Runs the full substitutability test on `threads` workers (clamped to at
/// least one). Timing is recorded into the verdict stats.
pub fn test_substitutability_threaded(
    pref: &PreferenceList,
    options: &SearchOptions,
    threads: usize,
) -> Verdict {
    let start = std::time::Instant::now();
    let total = pair_space(pref);
    let workers = threads.max(1).min(total.max(1) as usize);

    let mut verdict = if workers <= 1 {
        let outcome = scan_range(pref, KindFilter::Both, options, 0..total, None);
        merge_outcomes(vec![outcome], options.mode)
    } else {
        let cutoffs = SearchCutoffs::new();
        let base = total / workers as u64;
        let remainder = total % workers as u64;
        let mut outcomes: Vec<RangeOutcome> = Vec::with_capacity(workers);
        thread::scope(|scope| {
            let mut handles = Vec::with_capacity(workers);
            let mut next = 0u64;
            for worker in 0..workers as u64 {
                let len = base + u64::from(worker < remainder);
                let range = next..next + len;
                next += len;
                let cutoffs = &cutoffs;
                let options = *options;
                handles.push(scope.spawn(move || {
                    scan_range(pref, KindFilter::Both, &options, range, Some(cutoffs))
                }));
            }
            for handle in handles {
                outcomes.push(handle.join().expect("search worker panicked"));
            }
        });
        merge_outcomes(outcomes, options.mode)
    };
    verdict.stats.elapsed = Some(start.elapsed());
    verdict
}
