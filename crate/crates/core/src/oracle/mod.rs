//! Exhaustive and sampled verification over small prime fields.
//!
//! Each [`CheckId`] names one statement about pencils, asymptotic pencils or
//! bisector fields. Checkers recompute the claim by brute force (point
//! enumeration, table lookup of all line-pair products) and compare with the
//! library, producing a [`Report`] with witnesses and counterexamples.

pub mod arrangements;
pub mod brute;
mod checks;
pub mod sample;

use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

pub use arrangements::{maximal_arrangements, Universe};
pub use brute::{enumerate_lines, Plane};

use crate::conic::LinePair;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Fp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Prop2_2,
    Prop3_4,
    Cor3_5,
    Example3_6,
    Prop3_7Delta,
    Prop4_3Construction,
    Lemma3_2,
    Lemma3_3,
    Lemma4_5,
    Prop4_6,
    Lemma5_2,
    Thm5_4,
    Cor5_5,
    Cor5_6,
    Cor5_7,
    Lemma6_2,
    Thm6_3,
}

impl CheckId {
    pub const ALL: [CheckId; 17] = [
        CheckId::Prop2_2,
        CheckId::Prop3_4,
        CheckId::Cor3_5,
        CheckId::Example3_6,
        CheckId::Prop3_7Delta,
        CheckId::Prop4_3Construction,
        CheckId::Lemma3_2,
        CheckId::Lemma3_3,
        CheckId::Lemma4_5,
        CheckId::Prop4_6,
        CheckId::Lemma5_2,
        CheckId::Thm5_4,
        CheckId::Cor5_5,
        CheckId::Cor5_6,
        CheckId::Cor5_7,
        CheckId::Lemma6_2,
        CheckId::Thm6_3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::Prop2_2 => "prop-2.2",
            CheckId::Prop3_4 => "prop-3.4",
            CheckId::Cor3_5 => "cor-3.5",
            CheckId::Example3_6 => "example-3.6",
            CheckId::Prop3_7Delta => "prop-3.7-delta",
            CheckId::Prop4_3Construction => "prop-4.3-construction",
            CheckId::Lemma3_2 => "lemma-3.2",
            CheckId::Lemma3_3 => "lemma-3.3",
            CheckId::Lemma4_5 => "lemma-4.5",
            CheckId::Prop4_6 => "prop-4.6",
            CheckId::Lemma5_2 => "lemma-5.2",
            CheckId::Thm5_4 => "thm-5.4",
            CheckId::Cor5_5 => "cor-5.5",
            CheckId::Cor5_6 => "cor-5.6",
            CheckId::Cor5_7 => "cor-5.7",
            CheckId::Lemma6_2 => "lemma-6.2",
            CheckId::Thm6_3 => "thm-6.3",
        }
    }

    /// One-line description of what the checker establishes.
    pub fn summary(&self) -> &'static str {
        match self {
            CheckId::Prop2_2 => "degenerations of every quadratic class follow the hyperbola / parallel-family / none taxonomy",
            CheckId::Prop3_4 => "every pencil contains enough independent hyperbolas",
            CheckId::Cor3_5 => "every asymptotic pencil contains enough degenerate hyperbolas",
            CheckId::Example3_6 => "the pencil of x^2+y and xy+y^2 over GF(3)",
            CheckId::Prop3_7Delta => "the cubic Δ vanishes exactly on singular net members",
            CheckId::Prop4_3Construction => "double-line witnesses certify nontriviality of concentric pencils",
            CheckId::Lemma3_2 => "any two independent net members generate the same asymptotic pencil",
            CheckId::Lemma3_3 => "dependent reducible members are parallel pairs with one midline",
            CheckId::Lemma4_5 => "the three shared-line conditions agree",
            CheckId::Prop4_6 => "nontrivial asymptotic pencils come from quadrilaterals",
            CheckId::Lemma5_2 => "bisecting the generators is membership of the line in a reducible member",
            CheckId::Thm5_4 => "a bisector of the generators bisects the whole net",
            CheckId::Cor5_5 => "bisecting a quadrilateral is bisecting its net",
            CheckId::Cor5_6 => "a bisector of a quadrilateral bisects the conics through its vertices",
            CheckId::Cor5_7 => "crossings of pencil members on a line are conjugate under one involution",
            CheckId::Lemma6_2 => "extending pairs of a two-pair arrangement are determined by one line",
            CheckId::Thm6_3 => "bisector fields are exactly the nontrivial asymptotic pencils",
        }
    }

    fn exhaustive_only(&self) -> bool {
        matches!(self, CheckId::Prop2_2 | CheckId::Example3_6)
    }

    fn default_count(&self) -> usize {
        match self {
            CheckId::Prop3_4 | CheckId::Cor3_5 => 500,
            CheckId::Prop3_7Delta
            | CheckId::Prop4_3Construction
            | CheckId::Lemma3_3
            | CheckId::Lemma4_5
            | CheckId::Prop4_6
            | CheckId::Lemma6_2 => 200,
            CheckId::Cor5_6 | CheckId::Cor5_7 => 50,
            _ => 100,
        }
    }

    /// Exhaustive where the whole space is enumerated, otherwise seed 0.
    pub fn default_policy(&self, spec: &FieldSpec) -> Policy {
        if self.exhaustive_only() || (*self == CheckId::Thm6_3 && spec.order() == Some(3)) {
            Policy::Exhaustive
        } else {
            Policy::Randomized {
                seed: 0,
                count: self.default_count(),
            }
        }
    }
}

impl Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Policy {
    Exhaustive,
    Randomized { seed: u64, count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub check: CheckId,
    pub field: String,
    pub policy: Policy,
    pub verdict: Verdict,
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<Value>,
    pub counterexamples: Vec<Value>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn run_check(id: CheckId, spec: &FieldSpec, policy: Policy) -> Result<Report> {
    let start = Instant::now();
    let plane = Plane::new(spec)?;
    let policy = if id.exhaustive_only() {
        Policy::Exhaustive
    } else {
        policy
    };
    let sampled = |policy: Policy| match policy {
        Policy::Randomized { seed, count } => Ok((seed, count)),
        Policy::Exhaustive => Err(Error::Domain(format!(
            "{id} samples pencils; give it a randomized policy"
        ))),
    };
    let tally = match id {
        CheckId::Prop2_2 => checks::prop_2_2(&plane),
        CheckId::Example3_6 => {
            if plane.p != 3 {
                return Err(Error::Domain("example-3.6 is stated over F3".to_string()));
            }
            checks::example_3_6(&plane)
        }
        CheckId::Thm6_3 => {
            let (seed, count) = match policy {
                Policy::Exhaustive if plane.p == 3 => (0, id.default_count()),
                p => sampled(p)?,
            };
            checks::thm_6_3(&plane, seed, count)
        }
        _ => {
            let (seed, count) = sampled(policy)?;
            let run = match id {
                CheckId::Prop3_4 => checks::prop_3_4,
                CheckId::Cor3_5 => checks::cor_3_5,
                CheckId::Prop3_7Delta => checks::prop_3_7,
                CheckId::Prop4_3Construction => checks::prop_4_3,
                CheckId::Lemma3_2 => checks::lemma_3_2,
                CheckId::Lemma3_3 => checks::lemma_3_3,
                CheckId::Lemma4_5 => checks::lemma_4_5,
                CheckId::Prop4_6 => checks::prop_4_6,
                CheckId::Lemma5_2 => checks::lemma_5_2,
                CheckId::Thm5_4 => checks::thm_5_4,
                CheckId::Cor5_5 => checks::cor_5_5,
                CheckId::Cor5_6 => checks::cor_5_6,
                CheckId::Cor5_7 => checks::cor_5_7,
                CheckId::Lemma6_2 => checks::lemma_6_2,
                _ => unreachable!("handled above"),
            };
            run(&plane, seed, count)
        }
    };
    Ok(Report {
        check: id,
        field: spec.to_string(),
        policy,
        verdict: if tally.failures == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        instances: tally.instances,
        failures: tally.failures,
        witnesses: tally.witnesses,
        counterexamples: tally.counterexamples,
        wall_time: start.elapsed(),
    })
}

/// Maximal nontrivial arrangements over GF(3).
pub fn exhaustive_maximal_arrangements(spec: &FieldSpec) -> Result<Vec<Vec<LinePair<Fp>>>> {
    let plane = Plane::new(spec)?;
    if plane.p > 3 {
        return Err(Error::FieldTooLarge(format!(
            "maximal-arrangement search is limited to F3; {spec} has {} line pairs",
            plane.lines.len() * (plane.lines.len() + 1) / 2
        )));
    }
    let u = Universe::new(plane);
    Ok(maximal_arrangements(&u)?
        .into_iter()
        .map(|set| u.to_pairs(&set))
        .filter(|pairs| {
            crate::bisector::classify_trivial_arrangement(pairs)
                == crate::bisector::ArrangementTriviality::NonTrivial
        })
        .collect())
}
