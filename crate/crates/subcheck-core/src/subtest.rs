//! The substitutability test: a deterministic search for (S1)- and
//! (S2)-violations over a restricted candidate space.
//!
//! A relation is substitutable when, for every pair of non-empty sets
//! `B ⊆ A`:
//!
//! * **(S1)** every chosen set of the larger market survives restriction:
//!   for each `X ∈ C(A)` some `Y ∈ C(B)` has `X ∩ B ⊆ Y`; and
//! * **(S2)** every chosen set of the smaller market is supported from
//!   above: for each `Y ∈ C(B)` some `X ∈ C(A)` has `X ∩ B ⊆ Y`.
//!
//! Checking all `B ⊆ A` directly is exponential. Whenever any violation
//! exists, though, one of the special form `(A, B) = (X ∪ Y, Y ∪ {x})` with
//! `X, Y` acceptable and `x ∈ X` exists as well — see the reduction argument
//! exercised by [`crate::oracle::differential_run`] — so the search needs
//! only the `ℓ²·u` candidates built from ordered pairs of listed sets plus a
//! single alternative. Candidates are visited in a fixed canonical order
//! (list position of `X`, then of `Y`, then ascending `x`), which makes the
//! first reported witness deterministic and independent of how the candidate
//! space is partitioned across workers.
//!
//! Every emitted [`Witness`] carries the violating pair, the failing chosen
//! set, and its origin triple, and is checked against the raw definition by
//! [`verify_witness`] before being returned.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::Range;
use core::sync::atomic::{AtomicU64, Ordering};
use core::time::Duration;

use crate::choice::{choice, choose_flat, ChoiceCache};
use crate::prefmodel::{AltSet, PreferenceList};

/// Which of the two defining conditions a witness falsifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    S1,
    S2,
}

/// The restricted-form candidate a witness was found at: `A = x_set ∪ y_set`
/// and `B = y_set ∪ {alt}`, with `alt ∈ x_set` and both sets acceptable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessOrigin {
    pub x_set: AltSet,
    pub y_set: AltSet,
    /// Universe index of the adjoined alternative.
    pub alt: usize,
}

/// A certified violation of (S1) or (S2).
///
/// For an S1 witness, `failing ∈ C(A)` and `failing ∩ B` is contained in no
/// member of `C(B)`. For an S2 witness, `failing ∈ C(B)` and no member `Z`
/// of `C(A)` has `Z ∩ B ⊆ failing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: ViolationKind,
    pub a: AltSet,
    pub b: AltSet,
    pub failing: AltSet,
    pub origin: WitnessOrigin,
}

/// Work counters for one search run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Candidate `(A, B)` pairs visited, duplicate-suppressed ones included.
    /// Bounded by `ℓ·(ℓ−1)·u`.
    pub pairs_examined: u64,
    /// Choice-function evaluations actually performed.
    pub choice_calls: u64,
    /// Wall-clock time, when the caller measured it.
    pub elapsed: Option<Duration>,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.pairs_examined += other.pairs_examined;
        self.choice_calls += other.choice_calls;
    }
}

/// Outcome of a full substitutability test.
#[derive(Clone, Debug)]
pub struct Verdict {
    /// True exactly when no violation of either kind exists.
    pub substitutable: bool,
    /// First (S1) witness in candidate order, if any.
    pub s1: Option<Witness>,
    /// First (S2) witness in candidate order, if any.
    pub s2: Option<Witness>,
    /// In [`SearchMode::EnumerateAll`]: every restricted-form witness of both
    /// kinds, one per distinct `(kind, A, B)`, in candidate order.
    pub all_witnesses: Option<Vec<Witness>>,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Stop each condition's search at its first witness.
    FirstWitness,
    /// Collect every restricted-form witness of both kinds.
    EnumerateAll,
}

/// Tuning knobs for the search.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Capacity of an optional memo for choice evaluations, off by default.
    /// Purely a speed knob; results are identical either way.
    pub cache_capacity: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::FirstWitness,
            cache_capacity: None,
        }
    }
}

/// Which conditions a scan should look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindFilter {
    S1Only,
    S2Only,
    Both,
}

impl KindFilter {
    fn wants_s1(self) -> bool {
        matches!(self, KindFilter::S1Only | KindFilter::Both)
    }

    fn wants_s2(self) -> bool {
        matches!(self, KindFilter::S2Only | KindFilter::Both)
    }
}

/// Best-so-far candidate indices shared between concurrent workers, used to
/// skip candidates that can no longer be the first witness. Purely an
/// optimization: results are identical with or without sharing.
#[derive(Debug)]
pub struct SearchCutoffs {
    s1: AtomicU64,
    s2: AtomicU64,
}

impl SearchCutoffs {
    pub fn new() -> Self {
        SearchCutoffs {
            s1: AtomicU64::new(u64::MAX),
            s2: AtomicU64::new(u64::MAX),
        }
    }
}

impl Default for SearchCutoffs {
    fn default() -> Self {
        Self::new()
    }
}

/// A witness tagged with its candidate index, the total order used for
/// "first witness" reductions across workers.
#[derive(Clone, Debug)]
pub struct IndexedWitness {
    pub order: u64,
    pub witness: Witness,
}

/// Result of scanning one slice of the candidate space.
#[derive(Clone, Debug, Default)]
pub struct RangeOutcome {
    pub first_s1: Option<IndexedWitness>,
    pub first_s2: Option<IndexedWitness>,
    /// Witnesses collected in enumerate-all mode, candidate order.
    pub collected: Vec<IndexedWitness>,
    pub stats: SearchStats,
}

/// Size of the ordered-pair space `(X, Y)` over the list; scan ranges are
/// sub-ranges of `0..pair_space(pref)`.
pub fn pair_space(pref: &PreferenceList) -> u64 {
    let ell = pref.set_count() as u64;
    ell * ell
}

/// Duplicate `(A, B)` suppression stops growing beyond this many entries;
/// later duplicates are simply re-checked, which cannot change any result.
const SEEN_CAP: usize = 1 << 18;

/// Scans candidates built from ordered pairs `pairs` of list positions.
///
/// Pair `p` encodes `(X, Y) = (list[p / ℓ], list[p % ℓ])`; for each
/// `x ∈ X ∖ Y` ascending, the candidate is `(A, B) = (X ∪ Y, Y ∪ {x})` with
/// candidate index `p·u + x`. Workers running disjoint ranges can merge
/// their outcomes with [`merge_outcomes`] and obtain exactly the
/// single-threaded result.
pub fn scan_range(
    pref: &PreferenceList,
    filter: KindFilter,
    options: &SearchOptions,
    pairs: Range<u64>,
    cutoffs: Option<&SearchCutoffs>,
) -> RangeOutcome {
    let flat = pref.list();
    let ell = flat.len() as u64;
    let width = pref.universe_size() as u64;
    let enumerate = options.mode == SearchMode::EnumerateAll;
    let want_s1 = filter.wants_s1();
    let want_s2 = filter.wants_s2();

    let mut out = RangeOutcome::default();
    let mut cache = options.cache_capacity.map(ChoiceCache::new);
    // (A -> set of B) pairs already checked in this range.
    let mut seen: BTreeMap<AltSet, BTreeSet<AltSet>> = BTreeMap::new();
    let mut seen_len = 0usize;
    let mut ca_ids: Vec<u32> = Vec::new();
    let mut cb_ids: Vec<u32> = Vec::new();
    let mut restriction = AltSet::empty(width as usize);

    'pairs: for p in pairs {
        if !enumerate {
            let base = p * width;
            let s1_live = want_s1
                && out.first_s1.is_none()
                && cutoffs.is_none_or(|c| base < c.s1.load(Ordering::Relaxed));
            let s2_live = want_s2
                && out.first_s2.is_none()
                && cutoffs.is_none_or(|c| base < c.s2.load(Ordering::Relaxed));
            if !s1_live && !s2_live {
                // Candidate indices only grow from here.
                break 'pairs;
            }
        }

        let xi = (p / ell) as usize;
        let yi = (p % ell) as usize;
        if xi == yi {
            continue;
        }
        let x_set = &flat[xi];
        let y_set = &flat[yi];
        if x_set.is_subset_of(y_set) {
            continue; // no x ∈ X ∖ Y
        }

        let a = x_set | y_set;
        let mut ca_rank: Option<usize> = None;
        let mut b = y_set.clone();

        for x in x_set.iter() {
            if y_set.contains(x) {
                continue;
            }
            let cand = p * width + x as u64;
            let s1_here = want_s1
                && (enumerate
                    || (out.first_s1.is_none()
                        && cutoffs.is_none_or(|c| cand < c.s1.load(Ordering::Relaxed))));
            let s2_here = want_s2
                && (enumerate
                    || (out.first_s2.is_none()
                        && cutoffs.is_none_or(|c| cand < c.s2.load(Ordering::Relaxed))));
            if !s1_here && !s2_here {
                if enumerate {
                    continue;
                }
                break; // indices ascend within the pair too
            }

            b.insert(x);
            out.stats.pairs_examined += 1;

            let duplicate = seen.get(&a).is_some_and(|bs| bs.contains(&b));
            if !duplicate {
                if seen_len < SEEN_CAP {
                    seen.entry(a.clone()).or_default().insert(b.clone());
                    seen_len += 1;
                }

                if ca_rank.is_none() {
                    ca_rank = Some(choose_flat(pref, &a, &mut ca_ids));
                    out.stats.choice_calls += 1;
                }
                let computed = match &mut cache {
                    Some(cache) => cache.lookup(pref, &b, &mut cb_ids).1,
                    None => {
                        choose_flat(pref, &b, &mut cb_ids);
                        true
                    }
                };
                if computed {
                    out.stats.choice_calls += 1;
                }

                if s1_here {
                    // Some chosen set of A whose B-part fits inside no chosen
                    // set of B.
                    for &cai in &ca_ids {
                        let chosen_a = &flat[cai as usize];
                        restriction.clone_from(chosen_a);
                        restriction &= &b;
                        if cb_ids
                            .iter()
                            .all(|&cbi| !restriction.is_subset_of(&flat[cbi as usize]))
                        {
                            let witness = Witness {
                                kind: ViolationKind::S1,
                                a: a.clone(),
                                b: b.clone(),
                                failing: chosen_a.clone(),
                                origin: WitnessOrigin {
                                    x_set: x_set.clone(),
                                    y_set: y_set.clone(),
                                    alt: x,
                                },
                            };
                            debug_assert!(verify_witness(pref, &witness));
                            record(&mut out, cand, witness, enumerate, cutoffs);
                            break;
                        }
                    }
                }

                if s2_here {
                    // Some chosen set of B that no chosen set of A supports.
                    for &cbi in &cb_ids {
                        let chosen_b = &flat[cbi as usize];
                        let unsupported = ca_ids.iter().all(|&cai| {
                            restriction.clone_from(&flat[cai as usize]);
                            restriction &= &b;
                            !restriction.is_subset_of(chosen_b)
                        });
                        if unsupported {
                            let witness = Witness {
                                kind: ViolationKind::S2,
                                a: a.clone(),
                                b: b.clone(),
                                failing: chosen_b.clone(),
                                origin: WitnessOrigin {
                                    x_set: x_set.clone(),
                                    y_set: y_set.clone(),
                                    alt: x,
                                },
                            };
                            debug_assert!(verify_witness(pref, &witness));
                            record(&mut out, cand, witness, enumerate, cutoffs);
                            break;
                        }
                    }
                }
            }
            b.remove(x);
        }
    }
    out
}

fn record(
    out: &mut RangeOutcome,
    order: u64,
    witness: Witness,
    enumerate: bool,
    cutoffs: Option<&SearchCutoffs>,
) {
    let slot = match witness.kind {
        ViolationKind::S1 => &mut out.first_s1,
        ViolationKind::S2 => &mut out.first_s2,
    };
    let indexed = IndexedWitness { order, witness };
    if slot.is_none() {
        *slot = Some(indexed.clone());
        if !enumerate {
            if let Some(c) = cutoffs {
                let cell = match indexed.witness.kind {
                    ViolationKind::S1 => &c.s1,
                    ViolationKind::S2 => &c.s2,
                };
                cell.fetch_min(order, Ordering::Relaxed);
            }
        }
    }
    if enumerate {
        out.collected.push(indexed);
    }
}

/// Combines per-range outcomes into a verdict: minimum candidate index wins
/// for each kind, enumerate-all lists are sorted into candidate order and
/// deduplicated by `(kind, A, B)`. Merging the outcome of one full-range scan
/// is the single-threaded special case.
pub fn merge_outcomes(outcomes: Vec<RangeOutcome>, mode: SearchMode) -> Verdict {
    let mut stats = SearchStats::default();
    let mut best_s1: Option<IndexedWitness> = None;
    let mut best_s2: Option<IndexedWitness> = None;
    let mut collected: Vec<IndexedWitness> = Vec::new();
    for outcome in outcomes {
        stats.absorb(&outcome.stats);
        best_s1 = min_witness(best_s1, outcome.first_s1);
        best_s2 = min_witness(best_s2, outcome.first_s2);
        collected.extend(outcome.collected);
    }

    let all_witnesses = match mode {
        SearchMode::FirstWitness => None,
        SearchMode::EnumerateAll => {
            collected.sort_by(|x, y| {
                x.order
                    .cmp(&y.order)
                    .then_with(|| x.witness.kind.cmp(&y.witness.kind))
            });
            let mut seen: BTreeSet<(ViolationKind, AltSet, AltSet)> = BTreeSet::new();
            let mut kept = Vec::with_capacity(collected.len());
            for iw in collected {
                let key = (iw.witness.kind, iw.witness.a.clone(), iw.witness.b.clone());
                if seen.insert(key) {
                    kept.push(iw.witness);
                }
            }
            Some(kept)
        }
    };

    Verdict {
        substitutable: best_s1.is_none() && best_s2.is_none(),
        s1: best_s1.map(|iw| iw.witness),
        s2: best_s2.map(|iw| iw.witness),
        all_witnesses,
        stats,
    }
}

fn min_witness(a: Option<IndexedWitness>, b: Option<IndexedWitness>) -> Option<IndexedWitness> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.order < x.order { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Runs the full test with explicit options, single-threaded.
pub fn test_substitutability_with(pref: &PreferenceList, options: &SearchOptions) -> Verdict {
    #[cfg(feature = "std")]
    let start = std::time::Instant::now();
    let outcome = scan_range(pref, KindFilter::Both, options, 0..pair_space(pref), None);
    #[allow(unused_mut)]
    let mut verdict = merge_outcomes(alloc::vec![outcome], options.mode);
    #[cfg(feature = "std")]
    {
        verdict.stats.elapsed = Some(start.elapsed());
    }
    verdict
}

/// Decides substitutability, reporting the first witness of each kind (or
/// all witnesses in [`SearchMode::EnumerateAll`]).
pub fn test_substitutability(pref: &PreferenceList, mode: SearchMode) -> Verdict {
    test_substitutability_with(
        pref,
        &SearchOptions {
            mode,
            ..SearchOptions::default()
        },
    )
}

/// First (S1)-violation in candidate order, or `None`. `None` means (S1)
/// holds for every pair `B ⊆ A`, not merely the restricted candidates.
pub fn find_s1_violation(pref: &PreferenceList) -> Option<Witness> {
    scan_range(
        pref,
        KindFilter::S1Only,
        &SearchOptions::default(),
        0..pair_space(pref),
        None,
    )
    .first_s1
    .map(|iw| iw.witness)
}

/// First (S2)-violation in candidate order, or `None`; symmetric to
/// [`find_s1_violation`].
pub fn find_s2_violation(pref: &PreferenceList) -> Option<Witness> {
    scan_range(
        pref,
        KindFilter::S2Only,
        &SearchOptions::default(),
        0..pair_space(pref),
        None,
    )
    .first_s2
    .map(|iw| iw.witness)
}

/// Re-derives a witness from scratch: origin consistency, the subset
/// preconditions, and the definitional violation condition, all recomputed
/// independently of the search path. Returns `false` on any mismatch.
pub fn verify_witness(pref: &PreferenceList, witness: &Witness) -> bool {
    let width = pref.universe_size();
    let Witness {
        kind,
        a,
        b,
        failing,
        origin,
    } = witness;
    if a.width() != width || b.width() != width || failing.width() != width {
        return false;
    }
    if origin.x_set.width() != width || origin.y_set.width() != width || origin.alt >= width {
        return false;
    }
    // Restricted form: A = X ∪ Y, B = Y ∪ {x}, x ∈ X, both listed.
    if !origin.x_set.contains(origin.alt) {
        return false;
    }
    if (&origin.x_set | &origin.y_set) != *a {
        return false;
    }
    let mut expected_b = origin.y_set.clone();
    expected_b.insert(origin.alt);
    if expected_b != *b {
        return false;
    }
    if !pref.is_acceptable(&origin.x_set) || !pref.is_acceptable(&origin.y_set) {
        return false;
    }
    // Definitional preconditions.
    if b.is_empty() || !b.is_subset_of(a) {
        return false;
    }
    let ca = choice(pref, a);
    let cb = choice(pref, b);
    match kind {
        ViolationKind::S1 => {
            ca.contains(failing) && cb.chosen().iter().all(|z| !(failing & b).is_subset_of(z))
        }
        ViolationKind::S2 => {
            cb.contains(failing) && ca.chosen().iter().all(|z| !(z & b).is_subset_of(failing))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prefmodel::parse_preference_list;

    const EXAMPLE: &str = "{a,b,d} ~ {b,c,d} / {a,b} ~ {b,c} ~ {a,c} / {}";

    fn named(pref: &PreferenceList, names: &[&str]) -> AltSet {
        pref.universe().set_of(names).unwrap()
    }

    #[test]
    fn example_violates_s1_despite_its_reputation() {
        // From the full market, {a,b,d} is chosen; restricted to {a,c,d},
        // the best available set is {a,c}, which does not cover the
        // remaining {a,d}. The exhaustive oracle confirms (see the oracle
        // module tests), so the relation fails (S1) as well as (S2).
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let w = find_s1_violation(&pref).expect("an S1 violation exists");
        assert_eq!(w.a, named(&pref, &["a", "b", "c", "d"]));
        assert_eq!(w.b, named(&pref, &["a", "c", "d"]));
        assert_eq!(w.failing, named(&pref, &["a", "b", "d"]));
        assert_eq!(w.origin.x_set, named(&pref, &["a", "b", "d"]));
        assert_eq!(w.origin.y_set, named(&pref, &["a", "c"]));
        assert_eq!(pref.universe().name(w.origin.alt), "d");
        assert!(verify_witness(&pref, &w));
    }

    #[test]
    fn example_violates_s2_with_the_known_witness() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let w = find_s2_violation(&pref).expect("an S2 violation exists");
        assert_eq!(w.a, named(&pref, &["a", "b", "c", "d"]));
        assert_eq!(w.b, named(&pref, &["a", "b", "c"]));
        assert_eq!(w.failing, named(&pref, &["a", "c"]));
        assert_eq!(w.origin.x_set, named(&pref, &["a", "b", "d"]));
        assert_eq!(w.origin.y_set, named(&pref, &["a", "c"]));
        assert_eq!(pref.universe().name(w.origin.alt), "b");
        assert!(verify_witness(&pref, &w));
    }

    #[test]
    fn two_class_relation_violates_both_conditions() {
        // C({a}) = {{}} although {a,b} is chosen from {a,b}.
        let pref = parse_preference_list("{a,b} / {b} / {}").unwrap();
        let s1 = find_s1_violation(&pref).expect("S1 violation");
        assert_eq!(s1.a, named(&pref, &["a", "b"]));
        assert_eq!(s1.b, named(&pref, &["a"]));
        assert_eq!(s1.failing, named(&pref, &["a", "b"]));
        let s2 = find_s2_violation(&pref).expect("S2 violation");
        assert_eq!(s2.a, named(&pref, &["a", "b"]));
        assert_eq!(s2.b, named(&pref, &["a"]));
        assert_eq!(s2.failing, pref.universe().empty_set());
        assert!(verify_witness(&pref, &s1));
        assert!(verify_witness(&pref, &s2));
    }

    #[test]
    fn trivial_and_chain_relations_are_substitutable() {
        for text in ["{}", "{a,b} / {a} / {b} / {}"] {
            let pref = parse_preference_list(text).unwrap();
            assert_eq!(find_s1_violation(&pref), None, "{text}");
            assert_eq!(find_s2_violation(&pref), None, "{text}");
            let verdict = test_substitutability(&pref, SearchMode::FirstWitness);
            assert!(verdict.substitutable);
        }
    }

    #[test]
    fn verdict_flags_match_the_witness_slots() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let verdict = test_substitutability(&pref, SearchMode::FirstWitness);
        assert!(!verdict.substitutable);
        assert!(verdict.s1.is_some());
        assert!(verdict.s2.is_some());
        assert!(verdict.all_witnesses.is_none());
        // substitutable ⇔ both slots empty, on a substitutable instance too.
        let chain = parse_preference_list("{a,b} / {a} / {b} / {}").unwrap();
        let verdict = test_substitutability(&chain, SearchMode::FirstWitness);
        assert!(verdict.substitutable);
        assert!(verdict.s1.is_none() && verdict.s2.is_none());
    }

    #[test]
    fn enumerate_all_contains_the_named_witness() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let verdict = test_substitutability(&pref, SearchMode::EnumerateAll);
        let all = verdict.all_witnesses.as_deref().unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|w| verify_witness(&pref, w)));
        let full = named(&pref, &["a", "b", "c", "d"]);
        let abc = named(&pref, &["a", "b", "c"]);
        let target = all
            .iter()
            .find(|w| w.kind == ViolationKind::S2 && w.a == full && w.b == abc);
        let target = target.expect("the full-market restriction witness is enumerated");
        assert_eq!(target.failing, named(&pref, &["a", "c"]));
        // No duplicated (kind, A, B) entries.
        let mut keys: Vec<_> = all
            .iter()
            .map(|w| (w.kind, w.a.clone(), w.b.clone()))
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn search_is_deterministic_across_runs() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let first = test_substitutability(&pref, SearchMode::EnumerateAll);
        let second = test_substitutability(&pref, SearchMode::EnumerateAll);
        assert_eq!(first.s2, second.s2);
        assert_eq!(first.all_witnesses, second.all_witnesses);
    }

    #[test]
    fn candidate_accounting_respects_the_bound() {
        for text in [EXAMPLE, "{a,b} / {b} / {}", "{a,b} / {a} / {b} / {}", "{}"] {
            let pref = parse_preference_list(text).unwrap();
            let verdict = test_substitutability(&pref, SearchMode::EnumerateAll);
            let ell = pref.set_count() as u64;
            let u = pref.universe_size() as u64;
            assert!(
                verdict.stats.pairs_examined <= ell * (ell.saturating_sub(1)) * u,
                "{text}: {} candidates",
                verdict.stats.pairs_examined
            );
        }
    }

    #[test]
    fn cache_does_not_change_the_verdict() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let plain = test_substitutability(&pref, SearchMode::EnumerateAll);
        let cached = test_substitutability_with(
            &pref,
            &SearchOptions {
                mode: SearchMode::EnumerateAll,
                cache_capacity: Some(1024),
            },
        );
        assert_eq!(plain.s1, cached.s1);
        assert_eq!(plain.s2, cached.s2);
        assert_eq!(plain.all_witnesses, cached.all_witnesses);
    }

    #[test]
    fn verify_rejects_tampered_witnesses() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let w = find_s2_violation(&pref).unwrap();
        assert!(verify_witness(&pref, &w));

        // Kind flipped: the example satisfies (S1).
        let mut flipped = w.clone();
        flipped.kind = ViolationKind::S1;
        assert!(!verify_witness(&pref, &flipped));

        // B ⊄ A.
        let mut bad = w.clone();
        bad.a = pref.universe().set_of(&["a"]).unwrap();
        assert!(!verify_witness(&pref, &bad));

        // Failing set not among the chosen sets of B.
        let mut wrong_failing = w.clone();
        wrong_failing.failing = pref.universe().set_of(&["a", "b", "d"]).unwrap();
        assert!(!verify_witness(&pref, &wrong_failing));

        // Origin tampered: alt not in x_set.
        let mut bad_origin = w;
        bad_origin.origin.alt = 2; // "c" is not in {a,b,d}
        assert!(!verify_witness(&pref, &bad_origin));
    }

    #[test]
    fn range_splits_merge_to_the_single_threaded_result() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let options = SearchOptions {
            mode: SearchMode::EnumerateAll,
            cache_capacity: None,
        };
        let total = pair_space(&pref);
        let whole = merge_outcomes(
            alloc::vec![scan_range(
                &pref,
                KindFilter::Both,
                &options,
                0..total,
                None
            )],
            SearchMode::EnumerateAll,
        );
        for split in 1..total {
            let parts = alloc::vec![
                scan_range(&pref, KindFilter::Both, &options, 0..split, None),
                scan_range(&pref, KindFilter::Both, &options, split..total, None),
            ];
            let merged = merge_outcomes(parts, SearchMode::EnumerateAll);
            assert_eq!(merged.s1, whole.s1);
            assert_eq!(merged.s2, whole.s2);
            assert_eq!(merged.all_witnesses, whole.all_witnesses);
        }
    }
}
