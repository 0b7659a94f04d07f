//! Checks of the one-third edge-fixity classification on concrete graphs:
//! compute the automorphism group, the largest edge fixed-point ratio, and
//! match graphs above the threshold against the known exceptions.

mod catalogue;

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::families::complete;
use crate::fixity::max_edge_fpr;
use crate::graph::Graph;
use crate::scalar::{fraction_string, one_third};
use crate::symmetry::{
    are_isomorphic_with, automorphism_group_with, identify_px, identify_split_px, transitivity_profile, Limits,
    PxIdentification, TransitivityProfile,
};
use crate::BigFraction;

pub use catalogue::{
    catalogue, cubic_catalogue, px_catalogue_params, quartic_catalogue, split_px_catalogue_params, CatalogueEntry,
    CATALOGUE_MAX_ORDER,
};

/// Classification of a graph satisfying the hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    BelowThreshold,
    K5,
    Px { r: usize, s: usize },
    SplitPx { r: usize, s: usize },
    Counterexample,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BelowThreshold => write!(f, "BELOW_THRESHOLD"),
            Self::K5 => write!(f, "K5"),
            Self::Px { r, s } => write!(f, "PX({r},{s})"),
            Self::SplitPx { r, s } => write!(f, "SPLIT_PX({r},{s})"),
            Self::Counterexample => write!(f, "COUNTEREXAMPLE"),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One line of a verification report. Exactly one of `outcome`, `skipped`
/// and `error` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub id: String,
    pub source: String,
    pub vertices: Option<usize>,
    pub edges: Option<usize>,
    pub valency: Option<usize>,
    pub aut_order: Option<usize>,
    pub profile: Option<TransitivityProfile>,
    pub max_edge_fpr: Option<String>,
    pub witness_cycle_type: Option<String>,
    pub outcome: Option<Outcome>,
    /// `3s < 2r - 3` for the identified parameters.
    pub px_constraint: Option<bool>,
    pub skipped: Option<String>,
    pub error: Option<String>,
}

impl VerificationRecord {
    fn blank(id: &str, source: &str) -> Self {
        Self {
            id: id.to_string(),
            source: source.to_string(),
            vertices: None,
            edges: None,
            valency: None,
            aut_order: None,
            profile: None,
            max_edge_fpr: None,
            witness_cycle_type: None,
            outcome: None,
            px_constraint: None,
            skipped: None,
            error: None,
        }
    }

    /// A record for input that never became a graph.
    pub fn input_error(id: &str, source: &str, message: impl Into<String>) -> Self {
        Self { error: Some(message.into()), ..Self::blank(id, source) }
    }

    pub fn is_above_threshold(&self) -> bool {
        matches!(
            self.outcome,
            Some(Outcome::K5 | Outcome::Px { .. } | Outcome::SplitPx { .. } | Outcome::Counterexample)
        )
    }
}

/// Checks one graph against the classification for the given valency.
/// Failures are recorded in the returned record, never raised.
pub fn verify_graph(id: &str, source: &str, g: &Graph, valency: usize, limits: &Limits) -> VerificationRecord {
    let mut rec = VerificationRecord::blank(id, source);
    rec.vertices = Some(g.order());
    rec.edges = Some(g.size());
    rec.valency = g.regular_valency();
    if let Err(e) = classify(&mut rec, g, valency, limits) {
        rec.error = Some(e.to_string());
    }
    rec
}

fn classify(rec: &mut VerificationRecord, g: &Graph, valency: usize, limits: &Limits) -> Result<()> {
    if g.order() == 0 || rec.valency != Some(valency) {
        rec.skipped = Some(format!("graph is not {valency}-valent"));
        return Ok(());
    }
    if !g.is_connected() {
        rec.skipped = Some("graph is not connected".into());
        return Ok(());
    }
    let aut = automorphism_group_with(g, limits)?;
    rec.aut_order = Some(aut.order()?);
    let profile = transitivity_profile(g, &aut)?;
    let hypotheses = if valency == 4 {
        (!(profile.vertex_transitive && profile.edge_transitive)).then_some("not vertex- and edge-transitive")
    } else {
        (!profile.vertex_transitive).then_some("not vertex-transitive")
    };
    rec.profile = Some(profile);
    if let Some(reason) = hypotheses {
        rec.skipped = Some(reason.into());
        return Ok(());
    }
    if aut.order()? == 1 {
        rec.max_edge_fpr = Some("0/1".into());
        rec.outcome = Some(Outcome::BelowThreshold);
        return Ok(());
    }
    let best = max_edge_fpr::<num_bigint::BigInt>(g, &aut)?;
    let ratio: BigFraction = best.ratio;
    rec.max_edge_fpr = Some(fraction_string(&ratio));
    rec.witness_cycle_type = Some(best.witness.cycle_type_string());
    if ratio <= one_third() {
        rec.outcome = Some(Outcome::BelowThreshold);
        return Ok(());
    }
    if valency == 4 && are_isomorphic_with(g, &complete(5), limits)?.is_some() {
        rec.outcome = Some(Outcome::K5);
        return Ok(());
    }
    let found = if valency == 4 { identify_px(g, limits)? } else { identify_split_px(g, limits)? };
    match found {
        PxIdentification::Found { r, s, .. } => {
            rec.outcome = Some(if valency == 4 { Outcome::Px { r, s } } else { Outcome::SplitPx { r, s } });
            rec.px_constraint = Some(3 * s + 3 < 2 * r);
        }
        PxIdentification::NotPx => rec.outcome = Some(Outcome::Counterexample),
        PxIdentification::Unknown => {
            rec.error = Some("above threshold but family parameters lie outside the search bounds".into());
        }
    }
    Ok(())
}

/// Verifies every entry of a catalogue in parallel, in catalogue order.
pub fn verify_entries(
    entries: &[CatalogueEntry],
    valency: usize,
    source: &str,
    limits: &Limits,
) -> Vec<VerificationRecord> {
    entries.par_iter().map(|e| verify_graph(&e.id, source, &e.graph, valency, limits)).collect()
}

/// Counts per outcome over a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub below_threshold: usize,
    pub k5: usize,
    pub px: usize,
    pub split_px: usize,
    pub counterexamples: usize,
    /// Family members above the threshold whose parameters violate `3s < 2r - 3`.
    pub constraint_violations: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary { total: records.len(), ..Self::default() };
        for r in records {
            match r.outcome {
                Some(Outcome::BelowThreshold) => s.below_threshold += 1,
                Some(Outcome::K5) => s.k5 += 1,
                Some(Outcome::Px { .. }) => s.px += 1,
                Some(Outcome::SplitPx { .. }) => s.split_px += 1,
                Some(Outcome::Counterexample) => s.counterexamples += 1,
                None => {}
            }
            if r.px_constraint == Some(false) {
                s.constraint_violations += 1;
            }
            if r.skipped.is_some() {
                s.skipped += 1;
            }
            if r.error.is_some() {
                s.errors += 1;
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{moebius, px, split_px};

    fn run(g: &Graph, k: usize) -> VerificationRecord {
        verify_graph("g", "test", g, k, &Limits::default())
    }

    #[test]
    fn exceptions_are_identified() {
        assert_eq!(run(&complete(5), 4).outcome, Some(Outcome::K5));
        let r = run(&px(6, 1).unwrap(), 4);
        assert_eq!(r.outcome, Some(Outcome::Px { r: 6, s: 1 }));
        assert_eq!(r.px_constraint, Some(true));
        assert_eq!(run(&split_px(4, 1).unwrap(), 3).outcome, Some(Outcome::SplitPx { r: 4, s: 1 }));
    }

    #[test]
    fn moebius_is_at_the_threshold() {
        let r = run(&moebius(5).unwrap(), 3);
        assert_eq!(r.outcome, Some(Outcome::BelowThreshold));
        assert_eq!(r.max_edge_fpr.as_deref(), Some("1/3"));
    }

    #[test]
    fn wrong_valency_is_skipped() {
        let r = run(&complete(5), 3);
        assert!(r.skipped.is_some() && r.outcome.is_none());
        let disconnected = Graph::new(
            8,
            (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .chain((4..8).flat_map(|i| (i + 1..8).map(move |j| (i, j)))),
        )
        .unwrap();
        assert_eq!(run(&disconnected, 3).skipped.as_deref(), Some("graph is not connected"));
    }

    #[test]
    fn outcome_strings() {
        assert_eq!(Outcome::Px { r: 5, s: 1 }.to_string(), "PX(5,1)");
        assert_eq!(Outcome::SplitPx { r: 4, s: 1 }.to_string(), "SPLIT_PX(4,1)");
        assert_eq!(Outcome::BelowThreshold.to_string(), "BELOW_THRESHOLD");
    }
}
