//! Ground truth and test fuel: an exponential brute-force substitutability
//! checker, seeded instance generators, and a differential runner that
//! compares the restricted search against the brute force.
//!
//! The oracle enumerates *every* pair `B ⊆ A ⊆ U` and tests the raw (S1) and
//! (S2) conditions with no shortcuts, which is what makes it trustworthy and
//! exponentially slow. It exists to certify the search, not to be fast.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::choice::choose_flat;
use crate::prefmodel::{AltSet, PreferenceList, Universe};
use crate::subtest::{test_substitutability, SearchMode, Verdict};

/// Default cap on universe size for brute-force runs: `3^12 ≈ 5.3·10^5`
/// pairs keeps differential suites in seconds.
pub const ORACLE_DEFAULT_MAX_U: usize = 12;

/// Absolute ceiling, regardless of the caller's `max_u`.
const ORACLE_HARD_CAP: usize = 30;

/// A definitional violation found by exhaustive enumeration. Unlike
/// [`crate::subtest::Witness`] there is no origin triple: the pair was not
/// reached through the restricted candidate space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefViolation {
    pub a: AltSet,
    pub b: AltSet,
    pub failing: AltSet,
}

/// Outcome of a brute-force run over all pairs `B ⊆ A`.
#[derive(Clone, Debug)]
pub struct OracleVerdict {
    pub substitutable: bool,
    /// Every (S1) failure: for each violating pair, each chosen set of `A`
    /// whose `B`-part no chosen set of `B` contains.
    pub s1_violations: Vec<DefViolation>,
    /// Every (S2) failure, symmetrically.
    pub s2_violations: Vec<DefViolation>,
    /// Pairs enumerated; `3^u` on a completed run (each alternative is
    /// outside `A`, in `A ∖ B`, or in `B`).
    pub pairs_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The universe is too large for exhaustive enumeration.
    UniverseTooLarge { size: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::UniverseTooLarge { size, limit } => write!(
                f,
                "universe of {size} alternatives exceeds the brute-force limit of {limit}"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OracleError {}

/// Checks the raw definitions over every pair `∅ ≠ B ⊆ A ⊆ U` and records
/// all failures. Refuses universes larger than `min(max_u, 30)`.
pub fn brute_force_test(pref: &PreferenceList, max_u: usize) -> Result<OracleVerdict, OracleError> {
    let u = pref.universe_size();
    let limit = max_u.min(ORACLE_HARD_CAP);
    if u > limit {
        return Err(OracleError::UniverseTooLarge { size: u, limit });
    }

    let flat = pref.list();
    let mut s1_violations = Vec::new();
    let mut s2_violations = Vec::new();
    let mut pairs_checked = 0u64;

    let mut a_set = AltSet::empty(u);
    let mut b_set = AltSet::empty(u);
    let mut ca: Vec<u32> = Vec::new();
    let mut cb: Vec<u32> = Vec::new();
    let mut restriction = AltSet::empty(u);

    for a_bits in 0..(1u64 << u) {
        a_set.assign_bits(a_bits);
        let mut have_ca = false;
        // Submask walk: every B ⊆ A, descending, ending at the empty set.
        let mut b_bits = a_bits;
        loop {
            pairs_checked += 1;
            if b_bits != 0 {
                if !have_ca {
                    choose_flat(pref, &a_set, &mut ca);
                    have_ca = true;
                }
                b_set.assign_bits(b_bits);
                choose_flat(pref, &b_set, &mut cb);

                // (S1): every X ∈ C(A) needs some Z ∈ C(B) with X ∩ B ⊆ Z.
                for &cai in &ca {
                    restriction.clone_from(&flat[cai as usize]);
                    restriction &= &b_set;
                    if cb
                        .iter()
                        .all(|&cbi| !restriction.is_subset_of(&flat[cbi as usize]))
                    {
                        s1_violations.push(DefViolation {
                            a: a_set.clone(),
                            b: b_set.clone(),
                            failing: flat[cai as usize].clone(),
                        });
                    }
                }
                // (S2): every Y ∈ C(B) needs some Z ∈ C(A) with Z ∩ B ⊆ Y.
                for &cbi in &cb {
                    let chosen_b = &flat[cbi as usize];
                    let unsupported = ca.iter().all(|&cai| {
                        restriction.clone_from(&flat[cai as usize]);
                        restriction &= &b_set;
                        !restriction.is_subset_of(chosen_b)
                    });
                    if unsupported {
                        s2_violations.push(DefViolation {
                            a: a_set.clone(),
                            b: b_set.clone(),
                            failing: chosen_b.clone(),
                        });
                    }
                }
            }
            if b_bits == 0 {
                break;
            }
            b_bits = (b_bits - 1) & a_bits;
        }
    }

    Ok(OracleVerdict {
        substitutable: s1_violations.is_empty() && s2_violations.is_empty(),
        s1_violations,
        s2_violations,
        pairs_checked,
    })
}

/// Instance families the generator can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `target_len` distinct non-empty sets sampled uniformly, partitioned
    /// into classes of size at most `max_class`.
    UniformWeak,
    /// [`Family::UniformWeak`] with singleton classes: a strict relation.
    Strict,
    /// Sets ranked by additive utility under a capacity cap; acceptable sets
    /// are those of size at most the (sampled) capacity with positive total
    /// utility. Such instances lean substitutable, but nothing here assumes
    /// they are: the differential suites measure it. `target_len` and
    /// `max_class` are ignored; the utilities determine both.
    AdditiveCapacity,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::UniformWeak => "uniform-weak",
            Family::Strict => "strict",
            Family::AdditiveCapacity => "additive-capacity",
        };
        f.write_str(name)
    }
}

/// A seeded generator request. Identical specs produce structurally
/// identical lists, on every platform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub seed: u64,
    pub universe_size: usize,
    /// Desired number of non-empty acceptable sets; the empty set is always
    /// appended on top of these.
    pub target_len: u64,
    /// Upper bound on indifference-class size.
    pub max_class: usize,
    pub family: Family,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    InvalidSpec {
        reason: String,
    },
    /// More distinct non-empty sets requested than the universe has.
    Infeasible {
        target: u64,
        available: u64,
    },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::InvalidSpec { reason } => write!(f, "invalid generator spec: {reason}"),
            GenError::Infeasible { target, available } => write!(
                f,
                "cannot sample {target} distinct non-empty sets, only {available} exist"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GenError {}

fn invalid(reason: &str) -> GenError {
    GenError::InvalidSpec {
        reason: String::from(reason),
    }
}

/// Names a universe `a, b, c, …` (single letters up to 26 alternatives,
/// `x0, x1, …` beyond).
pub fn default_universe(size: usize) -> Universe {
    let names: Vec<String> = if size <= 26 {
        (0..size)
            .map(|i| String::from_utf8(alloc::vec![b'a' + i as u8]).unwrap())
            .collect()
    } else {
        (0..size).map(|i| format!("x{i}")).collect()
    };
    Universe::new(names).expect("generated names are valid and distinct")
}

/// Probability of closing the current indifference class after each set;
/// class sizes are geometric, clamped to `max_class`.
const CLASS_BREAK_P: f64 = 1.0 / 3.0;

/// Produces a valid [`PreferenceList`], deterministically in the seed.
pub fn generate(spec: &GenSpec) -> Result<PreferenceList, GenError> {
    if spec.universe_size == 0 {
        return Err(invalid("universe_size must be at least 1"));
    }
    if spec.max_class == 0 {
        return Err(invalid("max_class must be at least 1"));
    }
    if spec.target_len == 0 {
        return Err(invalid("target_len must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let universe = default_universe(spec.universe_size);
    match spec.family {
        Family::UniformWeak => uniform_weak(&mut rng, universe, spec.target_len, spec.max_class),
        Family::Strict => uniform_weak(&mut rng, universe, spec.target_len, 1),
        Family::AdditiveCapacity => {
            let size = universe.size();
            if size > 20 {
                return Err(invalid("additive-capacity supports universe_size up to 20"));
            }
            let capacity = rng.gen_range(1..=size);
            let utilities: Vec<i32> = (0..size).map(|_| rng.gen_range(-2..=6)).collect();
            additive_list(universe, &utilities, capacity)
        }
    }
}

fn uniform_weak(
    rng: &mut ChaCha8Rng,
    universe: Universe,
    target: u64,
    max_class: usize,
) -> Result<PreferenceList, GenError> {
    let size = universe.size();
    let available: u64 = if size >= 63 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    };
    if target > available {
        return Err(GenError::Infeasible { target, available });
    }

    let picks: Vec<AltSet> = if size <= 20 && target >= available / 2 {
        // Dense request: partial Fisher-Yates over the full enumeration.
        let mut all: Vec<u64> = (1..=available).collect();
        let n = target as usize;
        for i in 0..n {
            let j = rng.gen_range(i..all.len());
            all.swap(i, j);
        }
        all[..n]
            .iter()
            .map(|&m| AltSet::from_bits(size, m))
            .collect()
    } else {
        // Sparse request: rejection-sample distinct non-empty sets.
        let mut seen: BTreeSet<AltSet> = BTreeSet::new();
        let mut picks = Vec::with_capacity(target as usize);
        while (picks.len() as u64) < target {
            let set = random_set(rng, size);
            if set.is_empty() {
                continue;
            }
            if seen.insert(set.clone()) {
                picks.push(set);
            }
        }
        picks
    };

    let mut classes: Vec<Vec<AltSet>> = Vec::new();
    let mut current: Vec<AltSet> = Vec::new();
    for set in picks {
        current.push(set);
        if current.len() >= max_class || rng.gen_bool(CLASS_BREAK_P) {
            classes.push(core::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        classes.push(current);
    }

    Ok(PreferenceList::from_classes(universe, classes)
        .expect("sampled sets are distinct and non-empty"))
}

fn random_set(rng: &mut ChaCha8Rng, size: usize) -> AltSet {
    if size <= 63 {
        let mask = rng.gen::<u64>() & ((1u64 << size) - 1);
        AltSet::from_bits(size, mask)
    } else {
        let mut set = AltSet::empty(size);
        for i in 0..size {
            if rng.gen::<bool>() {
                set.insert(i);
            }
        }
        set
    }
}

/// Builds the list induced by per-alternative integer utilities and a size
/// cap: acceptable sets are those of size ≤ `capacity` with positive total
/// utility, classed by equal totals, best total first.
pub fn additive_list(
    universe: Universe,
    utilities: &[i32],
    capacity: usize,
) -> Result<PreferenceList, GenError> {
    let size = universe.size();
    if utilities.len() != size {
        return Err(invalid("one utility per alternative required"));
    }
    if size > 20 {
        return Err(invalid("additive-capacity supports universe_size up to 20"));
    }

    let mut scored: Vec<(i64, u64)> = Vec::new();
    for mask in 1..(1u64 << size) {
        if mask.count_ones() as usize > capacity {
            continue;
        }
        let total: i64 = (0..size)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i64::from(utilities[i]))
            .sum();
        if total > 0 {
            scored.push((total, mask));
        }
    }
    scored.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

    // Runs of equal totals become indifference classes.
    let mut classes: Vec<Vec<AltSet>> = Vec::new();
    let mut previous_total: Option<i64> = None;
    for (total, mask) in scored {
        let set = AltSet::from_bits(size, mask);
        if previous_total == Some(total) {
            classes.last_mut().unwrap().push(set);
        } else {
            classes.push(alloc::vec![set]);
            previous_total = Some(total);
        }
    }

    Ok(PreferenceList::from_classes(universe, classes)
        .expect("scored sets are distinct and non-empty"))
}

/// Why one generated instance failed the differential comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// The search and the oracle disagree on the overall verdict.
    VerdictMismatch { tester: bool, oracle: bool },
    /// The oracle found an (S1)-violation the restricted search missed.
    MissedS1,
    /// The oracle found an (S2)-violation the restricted search missed.
    MissedS2,
    /// The search reported an (S1) witness on an instance where the oracle
    /// found none — a soundness bug if it ever fires.
    SpuriousS1,
    /// Likewise for (S2).
    SpuriousS2,
}

#[derive(Clone, Debug)]
pub struct DifferentialFailure {
    pub spec: GenSpec,
    pub kind: FailureKind,
}

/// Batch comparison of the restricted search against the brute force.
#[derive(Clone, Debug, Default)]
pub struct DifferentialReport {
    pub total: usize,
    pub failures: Vec<DifferentialFailure>,
}

impl DifferentialReport {
    pub fn all_agree(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failing_seeds(&self) -> Vec<u64> {
        let mut seeds: Vec<u64> = self.failures.iter().map(|f| f.spec.seed).collect();
        seeds.dedup();
        seeds
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DifferentialError {
    Gen(GenError),
    Oracle(OracleError),
}

impl fmt::Display for DifferentialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DifferentialError::Gen(e) => e.fmt(f),
            DifferentialError::Oracle(e) => e.fmt(f),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DifferentialError {}

impl From<GenError> for DifferentialError {
    fn from(e: GenError) -> Self {
        DifferentialError::Gen(e)
    }
}

impl From<OracleError> for DifferentialError {
    fn from(e: OracleError) -> Self {
        DifferentialError::Oracle(e)
    }
}

/// Generates every spec in the batch, runs both the restricted search and
/// the brute force, and reports every disagreement: verdict mismatches, and
/// per-kind completeness (the oracle found a violation the search missed)
/// and soundness (the search claimed one the oracle refutes) failures.
pub fn differential_run(
    specs: &[GenSpec],
    max_u: usize,
) -> Result<DifferentialReport, DifferentialError> {
    let mut report = DifferentialReport::default();
    for spec in specs {
        let pref = generate(spec)?;
        let verdict: Verdict = test_substitutability(&pref, SearchMode::FirstWitness);
        let oracle = brute_force_test(&pref, max_u)?;
        report.total += 1;

        if verdict.substitutable != oracle.substitutable {
            report.failures.push(DifferentialFailure {
                spec: *spec,
                kind: FailureKind::VerdictMismatch {
                    tester: verdict.substitutable,
                    oracle: oracle.substitutable,
                },
            });
        }
        let checks = [
            (
                !oracle.s1_violations.is_empty() && verdict.s1.is_none(),
                FailureKind::MissedS1,
            ),
            (
                !oracle.s2_violations.is_empty() && verdict.s2.is_none(),
                FailureKind::MissedS2,
            ),
            (
                verdict.s1.is_some() && oracle.s1_violations.is_empty(),
                FailureKind::SpuriousS1,
            ),
            (
                verdict.s2.is_some() && oracle.s2_violations.is_empty(),
                FailureKind::SpuriousS2,
            ),
        ];
        for (failed, kind) in checks {
            if failed {
                report
                    .failures
                    .push(DifferentialFailure { spec: *spec, kind });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prefmodel::parse_preference_list;

    const EXAMPLE: &str = "{a,b,d} ~ {b,c,d} / {a,b} ~ {b,c} ~ {a,c} / {}";

    #[test]
    fn oracle_finds_the_example_violations() {
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let verdict = brute_force_test(&pref, ORACLE_DEFAULT_MAX_U).unwrap();
        assert!(!verdict.substitutable);
        assert_eq!(verdict.pairs_checked, 81); // 3^4

        let u = pref.universe();
        let full = u.set_of(&["a", "b", "c", "d"]).unwrap();
        let abc = u.set_of(&["a", "b", "c"]).unwrap();
        let ac = u.set_of(&["a", "c"]).unwrap();
        assert!(verdict
            .s2_violations
            .iter()
            .any(|v| v.a == full && v.b == abc && v.failing == ac));

        // The relation fails (S1) too: restricting the full market to
        // {a,c,d} strands the a,d-part of the chosen {a,b,d}.
        let acd = u.set_of(&["a", "c", "d"]).unwrap();
        let abd = u.set_of(&["a", "b", "d"]).unwrap();
        assert!(verdict
            .s1_violations
            .iter()
            .any(|v| v.a == full && v.b == acd && v.failing == abd));
    }

    #[test]
    fn oracle_on_the_trivial_relation() {
        let pref = parse_preference_list("{}").unwrap();
        let verdict = brute_force_test(&pref, ORACLE_DEFAULT_MAX_U).unwrap();
        assert!(verdict.substitutable);
        assert!(verdict.s1_violations.is_empty() && verdict.s2_violations.is_empty());
        assert_eq!(verdict.pairs_checked, 1); // 3^0
    }

    #[test]
    fn oracle_finds_both_kinds_on_the_two_class_relation() {
        let pref = parse_preference_list("{a,b} / {b} / {}").unwrap();
        let verdict = brute_force_test(&pref, ORACLE_DEFAULT_MAX_U).unwrap();
        assert_eq!(verdict.pairs_checked, 9); // 3^2
        let u = pref.universe();
        let ab = u.set_of(&["a", "b"]).unwrap();
        let a = u.set_of(&["a"]).unwrap();
        assert!(verdict.s1_violations.iter().any(|v| v.a == ab && v.b == a));
        assert!(verdict.s2_violations.iter().any(|v| v.a == ab && v.b == a));
    }

    #[test]
    fn oracle_refuses_large_universes() {
        let names: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
        let header = format!("universe: {}\n{{}}", names.join(", "));
        let pref = parse_preference_list(&header).unwrap();
        let err = brute_force_test(&pref, 12).unwrap_err();
        assert_eq!(
            err,
            OracleError::UniverseTooLarge {
                size: 13,
                limit: 12
            }
        );
        assert!(brute_force_test(&pref, 13).is_ok());
    }

    #[test]
    fn uniform_weak_respects_the_spec() {
        let spec = GenSpec {
            seed: 7,
            universe_size: 4,
            target_len: 6,
            max_class: 3,
            family: Family::UniformWeak,
        };
        let pref = generate(&spec).unwrap();
        assert_eq!(pref.universe_size(), 4);
        assert_eq!(pref.set_count(), 7); // six sampled sets plus {}
        assert!(pref.max_class_size() <= 3);
        // Stored stats match a recount.
        let recount: usize = pref.classes().iter().map(|c| c.len()).sum();
        assert_eq!(recount, pref.set_count());
        let max = pref.classes().iter().map(|c| c.len()).max().unwrap();
        assert_eq!(max, pref.max_class_size());
    }

    #[test]
    fn strict_family_has_singleton_classes() {
        for seed in 0..10 {
            let spec = GenSpec {
                seed,
                universe_size: 5,
                target_len: 9,
                max_class: 4, // ignored by the strict family
                family: Family::Strict,
            };
            let pref = generate(&spec).unwrap();
            assert_eq!(pref.max_class_size(), 1, "seed {seed}");
            assert_eq!(pref.set_count(), 10, "seed {seed}");
        }
    }

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        for family in [
            Family::UniformWeak,
            Family::Strict,
            Family::AdditiveCapacity,
        ] {
            let spec = GenSpec {
                seed: 42,
                universe_size: 5,
                target_len: 7,
                max_class: 3,
                family,
            };
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
        let a = generate(&GenSpec {
            seed: 1,
            universe_size: 5,
            target_len: 7,
            max_class: 3,
            family: Family::UniformWeak,
        })
        .unwrap();
        let b = generate(&GenSpec {
            seed: 2,
            universe_size: 5,
            target_len: 7,
            max_class: 3,
            family: Family::UniformWeak,
        })
        .unwrap();
        assert_ne!(a, b, "different seeds should give different instances");
    }

    #[test]
    fn infeasible_and_invalid_specs_are_rejected() {
        let spec = GenSpec {
            seed: 0,
            universe_size: 2,
            target_len: 4, // only 3 non-empty subsets exist
            max_class: 2,
            family: Family::UniformWeak,
        };
        assert_eq!(
            generate(&spec),
            Err(GenError::Infeasible {
                target: 4,
                available: 3
            })
        );
        let zero = GenSpec {
            universe_size: 0,
            ..spec
        };
        assert!(matches!(generate(&zero), Err(GenError::InvalidSpec { .. })));
        let no_class = GenSpec {
            max_class: 0,
            ..spec
        };
        assert!(matches!(
            generate(&no_class),
            Err(GenError::InvalidSpec { .. })
        ));
    }

    #[test]
    fn dense_sampling_can_exhaust_the_universe() {
        let spec = GenSpec {
            seed: 3,
            universe_size: 3,
            target_len: 7, // all non-empty subsets
            max_class: 2,
            family: Family::UniformWeak,
        };
        let pref = generate(&spec).unwrap();
        assert_eq!(pref.set_count(), 8);
    }

    #[test]
    fn additive_equal_utilities_class_by_size() {
        let universe = default_universe(4);
        let pref = additive_list(universe, &[1, 1, 1, 1], 2).unwrap();
        // All 2-subsets (total 2) in one class, all singletons (total 1)
        // next, then {}.
        assert_eq!(pref.class_count(), 3);
        assert_eq!(pref.classes()[0].len(), 6);
        assert_eq!(pref.classes()[1].len(), 4);
        assert_eq!(pref.classes()[2].len(), 1);
        assert!(pref.classes()[0].members().iter().all(|s| s.len() == 2));
        assert!(pref.classes()[1].members().iter().all(|s| s.len() == 1));
    }

    #[test]
    fn additive_with_negative_utilities_filters_sets() {
        let universe = default_universe(3);
        // c pulls totals down; {c} and {b,c} fall below the empty set.
        let pref = additive_list(universe, &[3, 1, -2], 3).unwrap();
        let u = pref.universe();
        assert!(pref.is_acceptable(&u.set_of(&["a", "c"]).unwrap())); // 1 > 0
        assert!(!pref.is_acceptable(&u.set_of(&["c"]).unwrap()));
        assert!(!pref.is_acceptable(&u.set_of(&["b", "c"]).unwrap()));
        // {a,b} at total 4 outranks {a} at 3.
        assert!(
            pref.class_rank(&u.set_of(&["a", "b"]).unwrap())
                < pref.class_rank(&u.set_of(&["a"]).unwrap())
        );
    }

    #[test]
    fn differential_smoke_run_agrees() {
        let specs: Vec<GenSpec> = (0..60)
            .map(|seed| GenSpec {
                seed,
                universe_size: 3 + (seed as usize % 3),
                target_len: 1 + seed % 7,
                max_class: 1 + (seed as usize % 3),
                family: if seed % 3 == 0 {
                    Family::Strict
                } else {
                    Family::UniformWeak
                },
            })
            .collect();
        let report = differential_run(&specs, ORACLE_DEFAULT_MAX_U).unwrap();
        assert_eq!(report.total, 60);
        assert!(
            report.all_agree(),
            "failing seeds: {:?}",
            report.failing_seeds()
        );
    }

    #[test]
    fn differential_includes_the_example_instance() {
        // The running example as a direct comparison, not via the generator.
        let pref = parse_preference_list(EXAMPLE).unwrap();
        let verdict = test_substitutability(&pref, SearchMode::FirstWitness);
        let oracle = brute_force_test(&pref, ORACLE_DEFAULT_MAX_U).unwrap();
        assert_eq!(verdict.substitutable, oracle.substitutable);
        assert!(!verdict.substitutable);
        assert_eq!(verdict.s1.is_some(), !oracle.s1_violations.is_empty());
        assert_eq!(verdict.s2.is_some(), !oracle.s2_violations.is_empty());
    }
}
