//! Exhaustive verification of the identities the whole construction rests
//! on. Each law quantifies over every tuple in scope (no sampling) and
//! reports the first counterexample it finds, which makes the suite usable
//! as a detector for corrupted tables, not just a regression net.
//!
//! Laws and their quantifier counts (n = |G|, k = |T|, m = |H|,
//! and d = k·m is the pair count):
//!
//! | law id                    | claim                                            | checks |
//! |---------------------------|--------------------------------------------------|--------|
//! | action-equivariance       | nabla(g·x) = alpha(g)(nabla(x))                  | n²     |
//! | bequeath-group            | pair table is a group; first coordinate is bar   | table axioms + n + k²·m + 1 |
//! | cayley-embedding          | left translation embeds G into permutations      | 2n²+n  |
//! | diffraction-faithful      | alpha is an injective homomorphism               | n²+n+1 |
//! | diffraction-isomorphism   | nabla turns G's table into the pair table        | n²+n+m |
//! | fiber-action              | fiber maps permute pairs, fixing t               | n·d+n  |
//! | fiber-representation      | beta respects products; kernel is the constant e | 2n²+s  |
//! | fibration-cocycle         | delta(g1·g2,t) = delta(g1,gamma(g2)t)·delta(g2,t)| n²·k   |
//! | fibration-containment     | tabulated delta matches bar(gt)⁻¹·gt ∈ H         | n·k    |
//! | frobenius-homomorphism    | gamma respects products, gamma(e) = id           | n²+1   |
//! | internal-rewriting        | rep · fiber · tail reassembles every product     | n²     |
//! | representative-calculus   | bar stays in the coset and absorbs itself        | n²+n   |
//! | spectral-decomposition    | nabla and nabla_inv are mutually inverse         | 2n     |
//!
//! (s is the order of the subgroup of H^T generated by the dual fiber
//! maps.) Laws that need the identity among the representatives report
//! `skipped` with reason `requires-transversal` on other representative
//! systems instead of failing.

use std::sync::Arc;

use serde::Serialize;

use crate::coset::Subgroup;
use crate::diffracted::DiffractedGroup;
use crate::error::{Error, Result};
use crate::fibration::Fibration;
use crate::group::FiniteGroup;
use crate::transversal::Transversal;

mod checks;

/// Every law id, sorted; reports keep this order.
pub const LAW_IDS: [&str; 13] = [
    "action-equivariance",
    "bequeath-group",
    "cayley-embedding",
    "diffraction-faithful",
    "diffraction-isomorphism",
    "fiber-action",
    "fiber-representation",
    "fibration-cocycle",
    "fibration-containment",
    "frobenius-homomorphism",
    "internal-rewriting",
    "representative-calculus",
    "spectral-decomposition",
];

/// The suite quantifies exhaustively and refuses larger groups outright.
pub const LAW_ORDER_CAP: usize = 200;

pub const REASON_REQUIRES_TRANSVERSAL: &str = "requires-transversal";

/// A concrete witness to a failed law: what went wrong and which elements
/// were involved, with labels when the group carries them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub description: String,
    pub elements: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Counterexample {
    pub fn new(description: String, elements: Vec<usize>, group: &FiniteGroup) -> Self {
        let labels = group
            .labels()
            .map(|_| elements.iter().map(|&e| group.label(e)).collect());
        Counterexample {
            description,
            elements,
            labels,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one law over one instance. Serialized as a single JSON
/// object with a stable field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law_id: String,
    pub status: LawStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub checks_run: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawResult {
    pub fn pass(law_id: &str, checks_run: u64) -> Self {
        LawResult {
            law_id: law_id.to_string(),
            status: LawStatus::Pass,
            reason: None,
            checks_run,
            counterexample: None,
            note: None,
        }
    }

    pub fn fail(law_id: &str, checks_run: u64, counterexample: Counterexample) -> Self {
        LawResult {
            law_id: law_id.to_string(),
            status: LawStatus::Fail,
            reason: None,
            checks_run,
            counterexample: Some(counterexample),
            note: None,
        }
    }

    pub fn skipped(law_id: &str, reason: &str) -> Self {
        LawResult {
            law_id: law_id.to_string(),
            status: LawStatus::Skipped,
            reason: Some(reason.to_string()),
            checks_run: 0,
            counterexample: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == LawStatus::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == LawStatus::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("law results serialize")
    }
}

/// What the report was computed over.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceDescriptor {
    pub group: String,
    pub order: usize,
    pub subgroup: Vec<usize>,
    pub strategy: String,
    pub is_transversal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub instance: InstanceDescriptor,
    pub results: Vec<LawResult>,
}

impl LawReport {
    /// True when nothing failed; skipped laws do not count against it.
    pub fn overall(&self) -> bool {
        self.results.iter().all(|r| !r.is_fail())
    }

    /// One LawResult per line, in law-id order.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&r.to_json_line());
            out.push('\n');
        }
        out
    }
}

/// The assembled pipeline a law run works over. `diffracted` is `None` for
/// non-transversal systems and `Some(Err(..))` when construction of the
/// pair group itself failed (which the relevant laws report as their
/// counterexample).
pub struct LawInstance {
    group: Arc<FiniteGroup>,
    subgroup: Arc<Subgroup>,
    transversal: Arc<Transversal>,
    fibration: Arc<Fibration>,
    diffracted: Option<Result<DiffractedGroup>>,
}

impl LawInstance {
    /// Tabulates the fibration and, over a transversal, builds the pair
    /// group.
    pub fn assemble(transversal: Arc<Transversal>) -> Result<Self> {
        let fibration = Arc::new(Fibration::tabulate(transversal)?);
        Ok(Self::from_fibration(fibration))
    }

    /// Builds an instance over an existing (possibly deliberately
    /// corrupted) fibration.
    pub fn from_fibration(fibration: Arc<Fibration>) -> Self {
        let transversal = fibration.transversal().clone();
        let diffracted = transversal
            .is_transversal()
            .then(|| DiffractedGroup::build(fibration.clone()));
        LawInstance {
            group: transversal.group().clone(),
            subgroup: transversal.subgroup().clone(),
            transversal,
            fibration,
            diffracted,
        }
    }

    /// Swaps in a (possibly deliberately corrupted) pair group.
    pub fn with_diffracted(mut self, d: DiffractedGroup) -> Self {
        self.diffracted = Some(Ok(d));
        self
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.subgroup
    }

    pub fn transversal(&self) -> &Arc<Transversal> {
        &self.transversal
    }

    pub fn fibration(&self) -> &Arc<Fibration> {
        &self.fibration
    }

    pub fn diffracted(&self) -> Option<&Result<DiffractedGroup>> {
        self.diffracted.as_ref()
    }

    pub fn descriptor(&self) -> InstanceDescriptor {
        InstanceDescriptor {
            group: self.group.name().to_string(),
            order: self.group.order(),
            subgroup: self.subgroup.members().to_vec(),
            strategy: self.transversal.strategy().to_string(),
            is_transversal: self.transversal.is_transversal(),
        }
    }
}

/// Which laws to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawSelection {
    All,
    Ids(Vec<String>),
}

impl LawSelection {
    /// Parses `all` or a comma-separated list of law ids.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim() == "all" {
            return Ok(LawSelection::All);
        }
        let mut ids: Vec<String> = Vec::new();
        for part in s.split(',') {
            let id = part.trim();
            if !LAW_IDS.contains(&id) {
                return Err(Error::UnknownLawId(id.to_string()));
            }
            if !ids.iter().any(|x| x == id) {
                ids.push(id.to_string());
            }
        }
        ids.sort();
        Ok(LawSelection::Ids(ids))
    }

    fn ids(&self) -> Vec<&str> {
        match self {
            LawSelection::All => LAW_IDS.to_vec(),
            LawSelection::Ids(v) => v.iter().map(|s| s.as_str()).collect(),
        }
    }
}

fn dispatch(id: &str, instance: &LawInstance) -> LawResult {
    match id {
        "action-equivariance" => checks::action_equivariance(instance),
        "bequeath-group" => checks::bequeath_group(instance),
        "cayley-embedding" => checks::cayley_embedding(instance),
        "diffraction-faithful" => checks::diffraction_faithful(instance),
        "diffraction-isomorphism" => checks::diffraction_isomorphism(instance),
        "fiber-action" => checks::fiber_action(instance),
        "fiber-representation" => checks::fiber_representation(instance),
        "fibration-cocycle" => checks::fibration_cocycle(instance),
        "fibration-containment" => checks::fibration_containment(instance),
        "frobenius-homomorphism" => checks::frobenius_homomorphism(instance),
        "internal-rewriting" => checks::internal_rewriting(instance),
        "representative-calculus" => checks::representative_calculus(instance),
        "spectral-decomposition" => checks::spectral_decomposition(instance),
        other => unreachable!("unknown law id {other} slipped past selection"),
    }
}

/// Runs the selected laws over the instance, in law-id order. Refuses
/// groups larger than [`LAW_ORDER_CAP`] rather than sampling.
pub fn run_laws(instance: &LawInstance, selection: &LawSelection) -> Result<LawReport> {
    let order = instance.group.order();
    if order > LAW_ORDER_CAP {
        return Err(Error::OrderExceedsLawCap {
            order,
            cap: LAW_ORDER_CAP,
        });
    }
    let results = selection
        .ids()
        .into_iter()
        .map(|id| dispatch(id, instance))
        .collect();
    Ok(LawReport {
        instance: instance.descriptor(),
        results,
    })
}
