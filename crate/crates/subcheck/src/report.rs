//! Machine- and human-readable check reports.
//!
//! The JSON schema is stable: top-level keys `substitutable`, `s1_witness`,
//! `s2_witness` (null or a witness object with `A`, `B`, `failing`, and
//! `origin: {X, Y, x}`, sets as sorted name arrays), `stats: {u, ell, s}`,
//! `timing_ms`, `input_digest`, and `mode`; `all_witnesses` appears when
//! enumeration was requested and `oracle` when a brute-force cross-check
//! ran. With timing suppressed the report is byte-for-byte reproducible,
//! independent of thread count.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use subcheck_core::{AltSet, OracleVerdict, PreferenceList, Verdict, ViolationKind, Witness};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub substitutable: bool,
    pub s1_witness: Option<WitnessReport>,
    pub s2_witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub all_witnesses: Option<Vec<WitnessReport>>,
    pub stats: InstanceStats,
    /// Wall-clock milliseconds, or null when suppressed for reproducible
    /// output.
    pub timing_ms: Option<f64>,
    /// Hex SHA-256 of the canonical form of the input.
    pub input_digest: String,
    pub mode: ModeFlags,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleComparison>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceStats {
    pub u: usize,
    pub ell: usize,
    pub s: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeFlags {
    pub all: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub kind: String,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
    pub failing: Vec<String>,
    pub origin: OriginReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OriginReport {
    #[serde(rename = "X")]
    pub x_set: Vec<String>,
    #[serde(rename = "Y")]
    pub y_set: Vec<String>,
    pub x: String,
}

/// Result of running the exhaustive oracle next to the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleComparison {
    /// The oracle's own verdict.
    pub substitutable: bool,
    /// Overall verdicts match and, per kind, the search found a violation
    /// exactly when the oracle did.
    pub agrees: bool,
    pub pairs_checked: u64,
}

pub fn compare_with_oracle(verdict: &Verdict, oracle: &OracleVerdict) -> OracleComparison {
    let agrees = verdict.substitutable == oracle.substitutable
        && verdict.s1.is_some() == !oracle.s1_violations.is_empty()
        && verdict.s2.is_some() == !oracle.s2_violations.is_empty();
    OracleComparison {
        substitutable: oracle.substitutable,
        agrees,
        pairs_checked: oracle.pairs_checked,
    }
}

/// Hex SHA-256 of the canonical form: a content identity for the input that
/// is independent of formatting, comments, and member ordering.
pub fn input_digest(pref: &PreferenceList) -> String {
    let digest = Sha256::digest(pref.canonical_form().as_bytes());
    let mut out = String::with_capacity(64);
    for byte in digest {
        use std::fmt::Write;
        let _ = write!(out, "{byte:02x}");
    }
    out
}

/// Set members as a lexicographically sorted name array.
fn set_names(pref: &PreferenceList, set: &AltSet) -> Vec<String> {
    let mut names: Vec<String> = set
        .iter()
        .map(|i| pref.universe().name(i).to_owned())
        .collect();
    names.sort();
    names
}

fn witness_report(pref: &PreferenceList, witness: &Witness) -> WitnessReport {
    WitnessReport {
        kind: match witness.kind {
            ViolationKind::S1 => "S1".to_owned(),
            ViolationKind::S2 => "S2".to_owned(),
        },
        a: set_names(pref, &witness.a),
        b: set_names(pref, &witness.b),
        failing: set_names(pref, &witness.failing),
        origin: OriginReport {
            x_set: set_names(pref, &witness.origin.x_set),
            y_set: set_names(pref, &witness.origin.y_set),
            x: pref.universe().name(witness.origin.alt).to_owned(),
        },
    }
}

/// Assembles the full report. `oracle_requested` is echoed even when the
/// oracle was skipped (universe over the cap); `include_timing: false`
/// yields byte-reproducible output.
pub fn build_check_report(
    pref: &PreferenceList,
    verdict: &Verdict,
    oracle: Option<&OracleVerdict>,
    oracle_requested: bool,
    include_timing: bool,
) -> CheckReport {
    CheckReport {
        substitutable: verdict.substitutable,
        s1_witness: verdict.s1.as_ref().map(|w| witness_report(pref, w)),
        s2_witness: verdict.s2.as_ref().map(|w| witness_report(pref, w)),
        all_witnesses: verdict
            .all_witnesses
            .as_ref()
            .map(|ws| ws.iter().map(|w| witness_report(pref, w)).collect()),
        stats: InstanceStats {
            u: pref.universe_size(),
            ell: pref.set_count(),
            s: pref.max_class_size(),
        },
        timing_ms: if include_timing {
            verdict.stats.elapsed.map(|d| d.as_secs_f64() * 1000.0)
        } else {
            None
        },
        input_digest: input_digest(pref),
        mode: ModeFlags {
            all: verdict.all_witnesses.is_some(),
            oracle: oracle_requested,
        },
        oracle: oracle.map(|o| compare_with_oracle(verdict, o)),
    }
}

pub fn to_json(report: &CheckReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

fn braced(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn push_witness_lines(out: &mut String, label: &str, witness: Option<&WitnessReport>) {
    match witness {
        None => out.push_str(&format!("{label}: ok\n")),
        Some(w) => {
            out.push_str(&format!("{label}: violated\n"));
            out.push_str(&format!("  A = {}\n", braced(&w.a)));
            out.push_str(&format!("  B = {}\n", braced(&w.b)));
            out.push_str(&format!("  failing = {}\n", braced(&w.failing)));
            out.push_str(&format!(
                "  origin: X = {}, Y = {}, x = {}\n",
                braced(&w.origin.x_set),
                braced(&w.origin.y_set),
                w.origin.x
            ));
        }
    }
}

/// Plain-text rendering of the same report.
pub fn render_text(report: &CheckReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "substitutable: {}\n",
        if report.substitutable { "yes" } else { "no" }
    ));
    out.push_str(&format!(
        "stats: u={} ell={} s={}\n",
        report.stats.u, report.stats.ell, report.stats.s
    ));
    out.push_str(&format!("input: sha256:{}\n", report.input_digest));
    push_witness_lines(&mut out, "S1", report.s1_witness.as_ref());
    push_witness_lines(&mut out, "S2", report.s2_witness.as_ref());
    if let Some(all) = &report.all_witnesses {
        out.push_str(&format!("witnesses enumerated: {}\n", all.len()));
    }
    if let Some(oracle) = &report.oracle {
        out.push_str(&format!(
            "oracle: {} ({}, {} pairs)\n",
            if oracle.agrees { "agrees" } else { "DISAGREES" },
            if oracle.substitutable {
                "substitutable"
            } else {
                "not substitutable"
            },
            oracle.pairs_checked
        ));
    }
    if let Some(ms) = report.timing_ms {
        out.push_str(&format!("time: {ms:.3} ms\n"));
    }
    out
}
