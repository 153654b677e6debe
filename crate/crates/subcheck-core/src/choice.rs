//! The choice function induced by a preference list.
//!
//! `choice(pref, X)` returns the best acceptable subsets of `X`: the classes
//! are scanned best first and the first class containing at least one subset
//! of `X` supplies every chosen set. Because the empty set is always listed
//! (in the last class), the scan always terminates with a non-empty answer.
//! One query costs one subset test per listed set in the worst case.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::prefmodel::{AltSet, PreferenceList};

/// The value of the choice function at some queried set.
///
/// All chosen sets are subsets of the query, share one class rank, and are
/// held in canonical order. Their number is at least 1 and at most the
/// largest class size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceResult {
    chosen: Vec<AltSet>,
    rank: usize,
}

impl ChoiceResult {
    pub fn chosen(&self) -> &[AltSet] {
        &self.chosen
    }

    /// The class rank (0 = best) shared by every chosen set.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, set: &AltSet) -> bool {
        self.chosen.binary_search(set).is_ok()
    }
}

/// Computes the choice function at `x`: every member of the best class that
/// has at least one member contained in `x`.
pub fn choice(pref: &PreferenceList, x: &AltSet) -> ChoiceResult {
    assert_eq!(
        x.width(),
        pref.universe_size(),
        "query set is not over the list's universe"
    );
    for (rank, class) in pref.classes().iter().enumerate() {
        let chosen: Vec<AltSet> = class
            .members()
            .iter()
            .filter(|m| m.is_subset_of(x))
            .cloned()
            .collect();
        if !chosen.is_empty() {
            return ChoiceResult { chosen, rank };
        }
    }
    unreachable!("the empty set is listed, so some class always matches")
}

/// Allocation-light variant for hot loops: fills `out` with indices into
/// `pref.list()` and returns the shared class rank.
pub(crate) fn choose_flat(pref: &PreferenceList, x: &AltSet, out: &mut Vec<u32>) -> usize {
    out.clear();
    let flat = pref.list();
    let offsets = pref.class_offsets();
    for rank in 0..offsets.len() - 1 {
        let (start, end) = (offsets[rank], offsets[rank + 1]);
        for (i, member) in flat[start..end].iter().enumerate() {
            if member.is_subset_of(x) {
                out.push((start + i) as u32);
            }
        }
        if !out.is_empty() {
            return rank;
        }
    }
    unreachable!("the empty set is listed, so some class always matches")
}

/// A bounded memo for [`choose_flat`], keyed by the queried set.
///
/// Off by default in the search; whether it pays depends on how much the
/// candidate stream reuses query sets. Once full it stops inserting, so the
/// memory bound is hard. Results are identical with or without it.
pub(crate) struct ChoiceCache {
    capacity: usize,
    map: BTreeMap<AltSet, (usize, Vec<u32>)>,
}

impl ChoiceCache {
    pub(crate) fn new(capacity: usize) -> Self {
        ChoiceCache {
            capacity,
            map: BTreeMap::new(),
        }
    }

    /// Looks up or computes the choice at `x`. Returns the rank and whether
    /// the value was computed (as opposed to served from the cache).
    pub(crate) fn lookup(
        &mut self,
        pref: &PreferenceList,
        x: &AltSet,
        out: &mut Vec<u32>,
    ) -> (usize, bool) {
        if let Some((rank, ids)) = self.map.get(x) {
            out.clear();
            out.extend_from_slice(ids);
            return (*rank, false);
        }
        let rank = choose_flat(pref, x, out);
        if self.map.len() < self.capacity {
            self.map.insert(x.clone(), (rank, out.clone()));
        }
        (rank, true)
    }
}

/// The query `B` is required to be a subset of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreconditionError;

impl fmt::Display for PreconditionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B is not a subset of A")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PreconditionError {}

/// Restriction-consistency probe for nested markets `B ⊆ A`.
///
/// Returns `true` iff the chosen sets of `A` that happen to lie inside `B`
/// are either absent or exactly the chosen sets of `B`. For every valid
/// preference list this holds for all `B ⊆ A`; the function exists so that
/// property tests can hammer the claim directly against two independent
/// `choice` evaluations.
pub fn lemma1_holds(
    pref: &PreferenceList,
    a: &AltSet,
    b: &AltSet,
) -> Result<bool, PreconditionError> {
    if !b.is_subset_of(a) {
        return Err(PreconditionError);
    }
    let ca = choice(pref, a);
    let cb = choice(pref, b);
    let restricted: Vec<&AltSet> = ca.chosen().iter().filter(|s| s.is_subset_of(b)).collect();
    if restricted.is_empty() {
        return Ok(true);
    }
    // Both sides are in canonical order, so compare element-wise.
    Ok(restricted.len() == cb.len() && restricted.iter().zip(cb.chosen()).all(|(x, y)| **x == *y))
}
