//! Problem specifications: a recurrence (explicit or preset), a shift and a
//! weight polynomial.
//!
//! JSON form:
//!
//! ```json
//! {"recurrence": {"order": 2, "coefficients": ["1", "1"], "initial": ["1", "1"]},
//!  "shift": {"h": 1, "r": 0},
//!  "weight": ["0", "1"]}
//! ```
//!
//! `"recurrence"` may instead be `{"preset": "fibonacci"}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closedform::ShiftParams;
use crate::exactmath::{parse_rational, Polynomial};
use crate::presets;
use crate::recurrence::{RecordError, Recurrence, RecurrenceError, RecurrenceRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RecurrenceSource {
    Preset { preset: String },
    Explicit(RecurrenceRecord),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub recurrence: RecurrenceSource,
    pub shift: ShiftParams,
    pub weight: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("unknown preset {name:?} (available: {list})", list = presets::names().collect::<Vec<_>>().join(", "), name = .0)]
    UnknownPreset(String),
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
    #[error("invalid recurrence: {0}")]
    Recurrence(#[from] RecurrenceError),
}

impl From<RecordError> for ProblemError {
    fn from(e: RecordError) -> Self {
        match e {
            RecordError::Field { field, message } => ProblemError::Field {
                field: format!("recurrence.{field}"),
                message,
            },
            RecordError::Invalid(inner) => ProblemError::Recurrence(inner),
        }
    }
}

/// A validated problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub recurrence: Recurrence,
    pub shift: ShiftParams,
    pub weight: Polynomial,
}

impl RecurrenceSource {
    pub fn resolve(&self) -> Result<Recurrence, ProblemError> {
        match self {
            RecurrenceSource::Preset { preset } => {
                presets::get(preset).ok_or_else(|| ProblemError::UnknownPreset(preset.clone()))
            }
            RecurrenceSource::Explicit(rec) => Ok(Recurrence::try_from(rec)?),
        }
    }
}

pub fn parse_weight(coeffs: &[String]) -> Result<Polynomial, ProblemError> {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            parse_rational(s).map_err(|e| ProblemError::Field {
                field: format!("weight[{i}]"),
                message: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Polynomial::from_coeffs)
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self, ProblemError> {
        serde_json::from_str(text).map_err(|e| ProblemError::Field {
            field: "<document>".into(),
            message: e.to_string(),
        })
    }

    pub fn resolve(&self) -> Result<Problem, ProblemError> {
        Ok(Problem {
            recurrence: self.recurrence.resolve()?,
            shift: self.shift,
            weight: parse_weight(&self.weight)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_and_preset_forms() {
        let a = ProblemSpec::from_json(
            r#"{"recurrence": {"order": 2, "coefficients": ["1","1"], "initial": ["1","1"]},
                "shift": {"h": 2, "r": -1}, "weight": ["0","1/2"]}"#,
        )
        .unwrap()
        .resolve()
        .unwrap();
        let b = ProblemSpec::from_json(r#"{"recurrence": {"preset": "fibonacci"}, "shift": {"h": 2, "r": -1}, "weight": ["0","1/2"]}"#)
            .unwrap()
            .resolve()
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.shift, ShiftParams::new(2, -1));
        assert_eq!(a.weight.degree(), Some(1));
    }

    #[test]
    fn errors_name_the_field() {
        let bad_weight = ProblemSpec::from_json(r#"{"recurrence": {"preset": "pell"}, "shift": {"h": 1, "r": 0}, "weight": ["1","q"]}"#)
            .unwrap()
            .resolve()
            .unwrap_err();
        assert!(bad_weight.to_string().contains("weight[1]"), "{bad_weight}");

        let bad_initial = ProblemSpec::from_json(
            r#"{"recurrence": {"order": 2, "coefficients": ["1","1"], "initial": ["1","zz"]}, "shift": {"h": 1, "r": 0}, "weight": []}"#,
        )
        .unwrap()
        .resolve()
        .unwrap_err();
        assert!(bad_initial.to_string().contains("recurrence.initial"), "{bad_initial}");

        let unknown = ProblemSpec::from_json(r#"{"recurrence": {"preset": "nope"}, "shift": {"h": 1, "r": 0}, "weight": []}"#)
            .unwrap()
            .resolve()
            .unwrap_err();
        assert!(matches!(unknown, ProblemError::UnknownPreset(_)));

        let invalid = ProblemSpec::from_json(
            r#"{"recurrence": {"order": 2, "coefficients": ["-1","2"], "initial": ["1","3"]}, "shift": {"h": 1, "r": 0}, "weight": []}"#,
        )
        .unwrap()
        .resolve()
        .unwrap_err();
        assert_eq!(invalid, ProblemError::Recurrence(RecurrenceError::RepeatedRoots));

        assert!(ProblemSpec::from_json("{}").is_err());
    }
}
