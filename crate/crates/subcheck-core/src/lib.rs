//! Decide whether a preference relation over subsets of a finite universe,
//! given in ranked-list form with ties, is *substitutable*, and when it is
//! not, produce a machine-checkable violation witness.
//!
//! A relation is described by listing every acceptable set, best first, with
//! `~` joining sets the owner is indifferent between:
//!
//! ```text
//! {a,b,d} ~ {b,c,d} / {a,b} ~ {b,c} ~ {a,c} / {}
//! ```
//!
//! The crate is organized around that list:
//!
//! * [`prefmodel`] — universes, bit-vector sets, parsing and validation of
//!   preference lists;
//! * [`mod@choice`] — the induced choice function `C(X)` (the best acceptable
//!   subsets of `X`) and a restriction-consistency probe used by tests;
//! * [`subtest`] — the polynomial-time substitutability test: a deterministic
//!   search over restricted candidate pairs `(X ∪ Y, Y ∪ {x})` for failures of
//!   the two defining conditions (S1) and (S2), with every reported witness
//!   re-verified against the raw definitions;
//! * [`oracle`] — an exponential brute-force checker over *all* pairs
//!   `B ⊆ A`, plus seeded instance generators and a differential runner that
//!   cross-checks the search against the oracle.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion
//! `subcheck` crate layers file IO, JSON reports, a CLI, and a multi-threaded
//! search driver on top.
//!
//! ```
//! use subcheck_core::{parse_preference_list, test_substitutability, SearchMode};
//!
//! // {a,b} is acceptable but {a} alone is not: a complementarity, so the
//! // relation cannot be substitutable.
//! let pref = parse_preference_list("{a,b} / {b} / {}").unwrap();
//! let verdict = test_substitutability(&pref, SearchMode::FirstWitness);
//! assert!(!verdict.substitutable);
//!
//! let witness = verdict.s1.unwrap();
//! assert_eq!(pref.universe().render_set(&witness.a), "{a,b}");
//! assert_eq!(pref.universe().render_set(&witness.b), "{a}");
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod choice;
pub mod oracle;
pub mod prefmodel;
pub mod subtest;

pub use choice::{choice, lemma1_holds, ChoiceResult, PreconditionError};
pub use oracle::{
    additive_list, brute_force_test, default_universe, differential_run, generate, DefViolation,
    DifferentialError, DifferentialFailure, DifferentialReport, FailureKind, Family, GenError,
    GenSpec, OracleError, OracleVerdict, ORACLE_DEFAULT_MAX_U,
};
pub use prefmodel::{
    parse_preference_list, AltSet, IndifferenceClass, ParseError, PrefError, PreferenceList,
    Universe, ValidationError,
};
pub use subtest::{
    find_s1_violation, find_s2_violation, merge_outcomes, pair_space, scan_range,
    test_substitutability, test_substitutability_with, verify_witness, IndexedWitness, KindFilter,
    RangeOutcome, SearchCutoffs, SearchMode, SearchOptions, SearchStats, Verdict, ViolationKind,
    Witness, WitnessOrigin,
};
