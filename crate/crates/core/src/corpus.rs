//! Corpus ingestion: JSON-lines curve fixtures and the conformance runner.

use crate::cmclass::{self, CmSpec, ConformanceReport, Verdict};
use crate::error::Error;
use crate::field::{FieldElement, QuadraticField};
use crate::kodaira::KodairaType;
use crate::place::LocalPlace;
use crate::residue::ResidueBound;
use crate::tate::tate_algorithm;
use crate::weierstrass::WeierstrassModel;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One fixture curve. Unknown keys are rejected with a diagnostic naming
/// the key.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub label: String,
    pub field: FieldDescriptor,
    pub place: PlaceDescriptor,
    /// Exactly five coefficients a1, a2, a3, a4, a6.
    pub ainvs: Vec<CoeffDescriptor>,
    pub cm: CmDescriptor,
    #[serde(default)]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum FieldDescriptor {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "quadratic")]
    Quadratic {
        #[serde(rename = "D")]
        d: i64,
    },
}

impl FieldDescriptor {
    pub fn build(&self) -> Result<QuadraticField, Error> {
        match self {
            FieldDescriptor::Rational => Ok(QuadraticField::RATIONAL),
            FieldDescriptor::Quadratic { d } => QuadraticField::quadratic(*d),
        }
    }
}

/// A place is addressed by its prime and its index among the places
/// returned by prime factorization in the documented deterministic order.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceDescriptor {
    pub p: u64,
    pub index: usize,
}

/// A field element (a + b sqrt(D))/c; b defaults to 0 (and must be 0 over Q).
#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffDescriptor {
    pub a: i64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub b: i64,
    pub c: i64,
}

fn is_zero(n: &i64) -> bool {
    *n == 0
}

impl CoeffDescriptor {
    pub fn build(&self, field: QuadraticField) -> FieldElement {
        FieldElement::new(
            field,
            BigInt::from(self.a),
            BigInt::from(self.b),
            BigInt::from(self.c),
        )
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CmDescriptor {
    #[serde(rename = "D")]
    pub d: i64,
    pub defined_over_base: bool,
    pub order_is_maximal: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub kodaira: KodairaType,
    #[serde(default)]
    pub j: Option<CoeffDescriptor>,
    #[serde(default)]
    pub v_delta_min: Option<u32>,
}

/// Per-entry outcome after all applicable checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail,
    NotCovered,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryResult {
    pub label: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ConformanceReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_covered: usize,
}

#[derive(Debug, Clone)]
pub struct CorpusRun {
    pub entries: Vec<EntryResult>,
    pub summary: Summary,
}

impl CorpusRun {
    pub fn any_fail(&self) -> bool {
        self.summary.fail > 0
    }
}

/// A parse failure is reported with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// Parse a JSON-lines corpus; blank lines and `#` comment lines are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entry: CorpusEntry = serde_json::from_str(line).map_err(|e| ParseError {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(entry);
    }
    Ok(out)
}

/// Evaluate one entry: reproduce the expected data, then check table
/// membership and the structural side conditions. Math-level errors are
/// attached to the entry rather than aborting the run.
pub fn run_entry(entry: &CorpusEntry, bound: ResidueBound) -> EntryResult {
    let mut problems = Vec::new();
    let fail = |problems: Vec<String>| EntryResult {
        label: entry.label.clone(),
        outcome: Outcome::Fail,
        report: None,
        problems,
    };

    let field = match entry.field.build() {
        Ok(f) => f,
        Err(e) => return fail(vec![e.to_string()]),
    };
    let places = match LocalPlace::factor_prime_bounded(field, entry.place.p, bound) {
        Ok(p) => p,
        Err(e) => return fail(vec![e.to_string()]),
    };
    let Some(&place) = places.get(entry.place.index) else {
        return fail(vec![format!(
            "place index {} out of range ({} places above {})",
            entry.place.index,
            places.len(),
            entry.place.p
        )]);
    };
    if entry.ainvs.len() != 5 {
        return fail(vec![format!(
            "expected 5 a-invariants, got {}",
            entry.ainvs.len()
        )]);
    }
    let a: Vec<FieldElement> = entry.ainvs.iter().map(|c| c.build(field)).collect();
    let model = match WeierstrassModel::new(
        a[0].clone(),
        a[1].clone(),
        a[2].clone(),
        a[3].clone(),
        a[4].clone(),
    ) {
        Ok(m) => m,
        Err(e) => return fail(vec![e.to_string()]),
    };
    let cm_field = match QuadraticField::quadratic(entry.cm.d) {
        Ok(f) => f,
        Err(e) => return fail(vec![e.to_string()]),
    };
    let spec = match CmSpec::new(cm_field, entry.cm.order_is_maximal, entry.cm.defined_over_base) {
        Ok(s) => s,
        Err(e) => return fail(vec![e.to_string()]),
    };

    let local = match tate_algorithm(&model, &place) {
        Ok(l) => l,
        Err(e) => return fail(vec![e.to_string()]),
    };
    let derived = model.derived().expect("model was validated");

    if let Some(exp) = &entry.expected {
        if local.kodaira != exp.kodaira {
            problems.push(format!(
                "expected Kodaira type {}, computed {}",
                exp.kodaira, local.kodaira
            ));
        }
        if let Some(j) = &exp.j {
            let want = j.build(field);
            if derived.j != want {
                problems.push(format!("expected j = {}, computed {}", want, derived.j));
            }
        }
        if let Some(v) = exp.v_delta_min {
            if local.v_delta_min != v {
                problems.push(format!(
                    "expected v(Delta_min) = {v}, computed {}",
                    local.v_delta_min
                ));
            }
        }
    }

    match cmclass::check_curve(&model, &place, &spec, Some(entry.label.clone())) {
        Ok(report) => {
            if report.verdict == Verdict::Fail {
                problems.push(format!(
                    "computed type {} fails the table checks",
                    report.computed
                ));
            }
            let outcome = if problems.is_empty() {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
            EntryResult {
                label: entry.label.clone(),
                outcome,
                report: Some(report),
                problems,
            }
        }
        Err(Error::HypothesisNotMet { .. }) => {
            let outcome = if problems.is_empty() {
                Outcome::NotCovered
            } else {
                Outcome::Fail
            };
            EntryResult {
                label: entry.label.clone(),
                outcome,
                report: None,
                problems,
            }
        }
        Err(e) => {
            problems.push(e.to_string());
            fail(problems)
        }
    }
}

/// Run every entry with a bounded worker pool, merging results in input
/// order. Parallelism 1 and N produce identical results.
pub fn run_corpus(entries: &[CorpusEntry], parallelism: usize, bound: ResidueBound) -> CorpusRun {
    let workers = parallelism.max(1).min(entries.len().max(1));
    let results: Vec<EntryResult> = if workers <= 1 {
        entries.iter().map(|e| run_entry(e, bound)).collect()
    } else {
        let mut slots: Vec<Option<EntryResult>> = vec![None; entries.len()];
        let chunk = entries.len().div_ceil(workers);
        std::thread::scope(|scope| {
            for (ei, si) in entries.chunks(chunk).zip(slots.chunks_mut(chunk)) {
                scope.spawn(move || {
                    for (e, s) in ei.iter().zip(si.iter_mut()) {
                        *s = Some(run_entry(e, bound));
                    }
                });
            }
        });
        slots.into_iter().map(|s| s.expect("worker filled slot")).collect()
    };
    let mut summary = Summary::default();
    for r in &results {
        match r.outcome {
            Outcome::Pass => summary.pass += 1,
            Outcome::Fail => summary.fail += 1,
            Outcome::NotCovered => summary.not_covered += 1,
        }
    }
    CorpusRun {
        entries: results,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_are_named() {
        let line = r#"{"label":"x","field":{"type":"Q"},"place":{"p":7,"index":0},"ainvs":[],"cm":{"D":-7,"defined_over_base":false,"order_is_maximal":true},"bogus_key":1}"#;
        let err = parse_corpus(line).unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("bogus_key"), "{}", err.message);
    }

    #[test]
    fn empty_corpus_is_empty_summary() {
        let entries = parse_corpus("\n# just a comment\n").unwrap();
        let run = run_corpus(&entries, 4, ResidueBound::default());
        assert_eq!(run.summary, Summary::default());
        assert!(!run.any_fail());
    }

    #[test]
    fn pass_fail_and_parallel_consistency() {
        let good = r#"{"label":"49.a4","field":{"type":"Q"},"place":{"p":7,"index":0},"ainvs":[{"a":1,"c":1},{"a":-1,"c":1},{"a":0,"c":1},{"a":-2,"c":1},{"a":-1,"c":1}],"cm":{"D":-7,"defined_over_base":false,"order_is_maximal":true},"expected":{"kodaira":"III","j":{"a":-3375,"c":1},"v_delta_min":3}}"#;
        let bad = good.replace(r#""kodaira":"III""#, r#""kodaira":"II""#);
        let text = format!("{good}\n{bad}\n");
        let entries = parse_corpus(&text).unwrap();
        let run1 = run_corpus(&entries, 1, ResidueBound::default());
        assert_eq!(run1.summary.pass, 1);
        assert_eq!(run1.summary.fail, 1);
        assert!(run1.any_fail());
        assert!(run1.entries[1].problems[0].contains("expected Kodaira type II"));

        let run4 = run_corpus(&entries, 4, ResidueBound::default());
        assert_eq!(run1.summary, run4.summary);
        for (a, b) in run1.entries.iter().zip(run4.entries.iter()) {
            assert_eq!(a.outcome, b.outcome);
        }
    }
}
