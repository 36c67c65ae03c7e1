//! Verdict records: hypothesis checks, conclusion checks, witnesses, flags.
//!
//! Witnesses carry point coordinates rather than indices, so a serialized
//! report stands on its own without the instance file next to it.

use crate::image::Point;
use serde::Serialize;
use std::fmt;

/// A witness backing a check: the points involved plus a short note.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub points: Vec<Point>,
    pub note: String,
}

impl Witness {
    pub fn new(points: Vec<Point>, note: impl Into<String>) -> Self {
        Witness {
            points,
            note: note.into(),
        }
    }

    pub fn note(note: impl Into<String>) -> Self {
        Witness {
            points: Vec::new(),
            note: note.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.points.is_empty() {
            for (i, p) in self.points.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            if !self.note.is_empty() {
                write!(f, " — ")?;
            }
        }
        write!(f, "{}", self.note)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisCheck {
    pub label: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl HypothesisCheck {
    pub fn new(label: impl Into<String>, holds: bool, witness: Option<Witness>) -> Self {
        HypothesisCheck {
            label: label.into(),
            holds,
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConclusionCheck {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Markers a checker attaches to explain how a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReportFlag {
    /// A sequence-quantified definition was decided through the
    /// eventual-constancy reduction valid on finite, uniformly discrete
    /// spaces.
    #[serde(rename = "finite reduction applied")]
    FiniteReduction,
    /// At least one comparison left the exact path and used the fixed
    /// tolerance.
    #[serde(rename = "approximate comparison")]
    ApproximateComparison,
    /// The `p = infinity` shrinkage bound is the continuous-extension
    /// convention `1/u^(1/p) := 1`.
    #[serde(rename = "linf bound convention")]
    LinfBoundConvention,
    /// A one-point image: the expansive condition has no distinct pair to
    /// bite on, so the verdict is recorded rather than decided.
    #[serde(rename = "degenerate singleton")]
    DegenerateSingleton,
    /// The hypotheses force the contracting map to be constant whenever the
    /// coefficient is below the shrinkage bound, trivializing the statement.
    #[serde(rename = "limited: shrinkage can force a constant map")]
    LimitedByShrinkage,
}

/// Per-theorem record: each hypothesis checked, the conclusion checked, and
/// whether the theorem was applicable (all hypotheses held).
///
/// The conclusion is evaluated even when a hypothesis fails — the diagnostic
/// value is the point of a verdict — but it is only *asserted* when
/// `applicable` is true.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictReport {
    pub theorem_id: String,
    pub hypotheses: Vec<HypothesisCheck>,
    pub conclusion: ConclusionCheck,
    pub applicable: bool,
    pub flags: Vec<ReportFlag>,
}

impl VerdictReport {
    pub fn new(
        theorem_id: impl Into<String>,
        hypotheses: Vec<HypothesisCheck>,
        conclusion: ConclusionCheck,
        flags: Vec<ReportFlag>,
    ) -> Self {
        let applicable = hypotheses.iter().all(|h| h.holds);
        VerdictReport {
            theorem_id: theorem_id.into(),
            hypotheses,
            conclusion,
            applicable,
            flags,
        }
    }

    /// True when the instance satisfies every hypothesis yet falsifies the
    /// conclusion — the record a verification sweep must never produce.
    pub fn contradicted(&self) -> bool {
        self.applicable && !self.conclusion.holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn applicability_follows_hypotheses() {
        let report = VerdictReport::new(
            "t",
            vec![
                HypothesisCheck::new("a", true, None),
                HypothesisCheck::new("b", false, Some(Witness::note("why"))),
            ],
            ConclusionCheck {
                holds: true,
                witness: None,
            },
            vec![],
        );
        assert!(!report.applicable);
        assert!(!report.contradicted());
    }

    #[test]
    fn flags_serialize_to_their_report_strings() {
        let s = serde_json::to_string(&ReportFlag::FiniteReduction).unwrap();
        assert_eq!(s, "\"finite reduction applied\"");
        let s = serde_json::to_string(&ReportFlag::ApproximateComparison).unwrap();
        assert_eq!(s, "\"approximate comparison\"");
    }

    #[test]
    fn witness_displays_points_as_coordinates() {
        let w = Witness::new(
            vec![Point::new(vec![2, 0]), Point::new(vec![1, 1])],
            "images not adjacent",
        );
        assert_eq!(w.to_string(), "(2,0), (1,1) — images not adjacent");
    }
}
