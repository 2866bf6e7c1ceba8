//! Cross-validation of the closed-form prism invariants.
//!
//! For a base graph this module computes all three invariants twice — by the
//! case formulas and by the brute-force oracle — and re-verifies every
//! formula witness against the interval machinery. The oracle leg is skipped
//! (not failed) when the prism exceeds the requested size cap; the witness
//! checks always run. This is the single code path behind both the `sweep`
//! command and the exhaustive test sweeps, so a mismatch means the same
//! thing everywhere.

use crate::convexity::{is_convex, is_hull_set, is_monophonic_set, IntervalTable};
use crate::graph::Graph;
use crate::oracle::{self, OracleError};
use crate::prism::{
    prism_convexity_number, prism_hull_number, prism_monophonic_number, FormulaResult,
};

/// Which invariant a [`Verification`] talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Convexity,
    Monophonic,
    Hull,
}

impl Invariant {
    pub fn name(&self) -> &'static str {
        match self {
            Invariant::Convexity => "convexity-number",
            Invariant::Monophonic => "monophonic-number",
            Invariant::Hull => "hull-number",
        }
    }
}

/// One invariant of one prism: the formula's answer, the oracle's answer
/// when it ran, and whether the formula's witness checks out.
#[derive(Debug, Clone)]
pub struct Verification {
    pub invariant: Invariant,
    pub formula: FormulaResult,
    /// `None` when the prism was over the oracle cap.
    pub oracle_value: Option<usize>,
    pub witness_verified: bool,
}

impl Verification {
    /// True unless the oracle ran and disagreed with the formula.
    pub fn values_agree(&self) -> bool {
        self.oracle_value.is_none_or(|v| v == self.formula.value)
    }
}

/// The full cross-check of one base graph's prism.
#[derive(Debug, Clone)]
pub struct PrismComparison {
    pub base_order: usize,
    pub convexity: Verification,
    pub monophonic: Verification,
    pub hull: Verification,
}

impl PrismComparison {
    pub fn all(&self) -> [&Verification; 3] {
        [&self.convexity, &self.monophonic, &self.hull]
    }

    /// No oracle disagreement on any invariant.
    pub fn values_agree(&self) -> bool {
        self.all().iter().all(|v| v.values_agree())
    }

    pub fn witnesses_verified(&self) -> bool {
        self.all().iter().all(|v| v.witness_verified)
    }

    pub fn is_clean(&self) -> bool {
        self.values_agree() && self.witnesses_verified()
    }
}

fn run_oracle(
    result: Result<oracle::OracleResult, OracleError>,
) -> Option<usize> {
    match result {
        Ok(r) => Some(r.value),
        Err(OracleError::AboveCap { .. }) => None,
        Err(e) => panic!("oracle failed on a nonempty prism: {e}"),
    }
}

/// Computes and cross-checks all three invariants of the prism of `g`.
/// `oracle_cap` bounds the prism order the exhaustive searches will accept;
/// pass [`crate::oracle::DEFAULT_ORACLE_CAP`] unless you know better.
pub fn compare(g: &Graph, oracle_cap: usize) -> PrismComparison {
    let prism = g.complementary_prism();
    let table = IntervalTable::build(&prism);

    let cm = prism_convexity_number(g);
    let cm_witness_ok = cm.witness.len() == cm.value
        && !cm.witness.is_full()
        && is_convex(&table, &cm.witness);
    let convexity = Verification {
        invariant: Invariant::Convexity,
        oracle_value: run_oracle(oracle::convexity_number(&table, oracle_cap)),
        witness_verified: cm_witness_ok,
        formula: cm,
    };

    let m = prism_monophonic_number(g);
    let m_witness_ok =
        m.witness.len() == m.value && is_monophonic_set(&table, &m.witness);
    let monophonic = Verification {
        invariant: Invariant::Monophonic,
        oracle_value: run_oracle(oracle::monophonic_number(&prism, &table, oracle_cap)),
        witness_verified: m_witness_ok,
        formula: m,
    };

    let hm = prism_hull_number(g);
    let hm_witness_ok =
        hm.witness.len() == hm.value && is_hull_set(&table, &hm.witness);
    let hull = Verification {
        invariant: Invariant::Hull,
        oracle_value: run_oracle(oracle::hull_number(&prism, &table, oracle_cap)),
        witness_verified: hm_witness_ok,
        formula: hm,
    };

    PrismComparison {
        base_order: g.order(),
        convexity,
        monophonic,
        hull,
    }
}
