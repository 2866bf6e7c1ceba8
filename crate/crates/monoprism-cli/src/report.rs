//! The JSON-lines record the CLI emits for each base graph.
//!
//! Field order is fixed by the struct definitions (serde keeps it), so the
//! output is stable and diff-friendly. Witness vertices carry a side marker:
//! `g:i` for vertex `i` of the base copy, `gbar:i` for the partner copy.

use monoprism::codec::to_graph6;
use monoprism::graph::{Distance, Graph};
use monoprism::oracle::{clique_number, independence_number};
use monoprism::prism::CaseTag;
use monoprism::verify::{compare, PrismComparison, Verification};
use serde::Serialize;

/// One invariant's slice of the record.
#[derive(Debug, Serialize)]
pub struct ParamReport {
    pub formula_value: usize,
    /// `null` when the prism was over the oracle cap (or the oracle was off).
    pub oracle_value: Option<usize>,
    pub case_used: String,
    pub witness: Vec<String>,
    pub witness_verified: bool,
}

/// The full per-graph record, one JSON object per line.
#[derive(Debug, Serialize)]
pub struct InvariantReport {
    /// graph6 of the base graph.
    pub graph_id: String,
    pub n: usize,
    /// Component count of the dispatch side (the disconnected side when one
    /// exists, otherwise the base graph itself).
    pub r: usize,
    /// Trivial (one-vertex) components of the dispatch side.
    pub t: usize,
    /// Minimum component order of the dispatch side.
    pub k: usize,
    /// `null` encodes an infinite diameter (disconnected side).
    pub diam_g: Option<u32>,
    pub diam_gbar: Option<u32>,
    pub omega: usize,
    pub alpha: usize,
    pub cm: ParamReport,
    pub m: ParamReport,
    pub hm: ParamReport,
    /// `ok`, `mismatch`, or `oracle-skipped`.
    pub status: String,
}

fn case_string(tag: &CaseTag) -> String {
    use monoprism::prism::PrismCase::*;
    let mut s = tag.case.name().to_string();
    if tag.is_c5 {
        s.push_str("+c5");
    }
    match tag.case {
        BaseDisconnected if tag.edgeless => s.push_str("+edgeless"),
        ComplementDisconnected if tag.complete => s.push_str("+edgeless-complement"),
        _ => {}
    }
    s
}

fn side_marked(witness: &monoprism::VertexSet, base_n: usize) -> Vec<String> {
    witness
        .iter()
        .map(|v| {
            if v < base_n {
                format!("g:{v}")
            } else {
                format!("gbar:{}", v - base_n)
            }
        })
        .collect()
}

fn param_report(v: &Verification, base_n: usize) -> ParamReport {
    ParamReport {
        formula_value: v.formula.value,
        oracle_value: v.oracle_value,
        case_used: case_string(&v.formula.tag),
        witness: side_marked(&v.formula.witness, base_n),
        witness_verified: v.witness_verified,
    }
}

/// `ok` when every oracle leg ran and agreed, `mismatch` when any present
/// oracle value disagrees with its formula, `oracle-skipped` otherwise.
fn status_of(values: &[(usize, Option<usize>)]) -> &'static str {
    if values
        .iter()
        .any(|(f, o)| o.is_some_and(|o| o != *f))
    {
        "mismatch"
    } else if values.iter().any(|(_, o)| o.is_none()) {
        "oracle-skipped"
    } else {
        "ok"
    }
}

/// Builds the record for one base graph. `oracle_cap` bounds the prism order
/// the exhaustive searches accept; pass 0 to skip the oracle entirely.
pub fn build_report(g: &Graph, oracle_cap: usize) -> InvariantReport {
    let cmp: PrismComparison = compare(g, oracle_cap);
    let n = g.order();
    let complement = g.complement();
    // Component parameters of the side the case analysis dispatches on.
    let side = if !g.is_connected() {
        g.clone()
    } else if !complement.is_connected() {
        complement.clone()
    } else {
        g.clone()
    };
    let comps = side.components();
    let values: Vec<(usize, Option<usize>)> = cmp
        .all()
        .iter()
        .map(|v| (v.formula.value, v.oracle_value))
        .collect();
    InvariantReport {
        graph_id: to_graph6(g),
        n,
        r: comps.count(),
        t: comps.trivial_count(),
        k: comps.min_order(),
        diam_g: diam_field(g.diameter()),
        diam_gbar: diam_field(complement.diameter()),
        omega: clique_number(g).expect("nonempty graph").value,
        alpha: independence_number(g).expect("nonempty graph").value,
        cm: param_report(&cmp.convexity, n),
        m: param_report(&cmp.monophonic, n),
        hm: param_report(&cmp.hull, n),
        status: status_of(&values).to_string(),
    }
}

fn diam_field(d: Distance) -> Option<u32> {
    d.finite()
}

impl InvariantReport {
    pub fn is_mismatch(&self) -> bool {
        self.status == "mismatch"
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoprism::families::{generate, Family};

    #[test]
    fn status_rules() {
        assert_eq!(status_of(&[(2, Some(2)), (3, Some(3))]), "ok");
        assert_eq!(status_of(&[(2, Some(3)), (3, Some(3))]), "mismatch");
        assert_eq!(status_of(&[(2, None), (3, Some(3))]), "oracle-skipped");
        // A disagreement wins over a skip.
        assert_eq!(status_of(&[(2, None), (3, Some(4))]), "mismatch");
        assert_eq!(status_of(&[]), "ok");
    }

    #[test]
    fn c5_record_fields_and_key_order() {
        let c5 = generate(Family::Cycle(5)).unwrap();
        let report = build_report(&c5, 16);
        assert_eq!(report.graph_id, "Dhc");
        assert_eq!((report.n, report.r, report.t, report.k), (5, 1, 0, 5));
        assert_eq!(report.diam_g, Some(2));
        assert_eq!(report.diam_gbar, Some(2));
        assert_eq!((report.omega, report.alpha), (2, 2));
        assert_eq!(report.cm.formula_value, 2);
        assert_eq!(report.cm.oracle_value, Some(2));
        assert_eq!(report.m.formula_value, 3);
        assert_eq!(report.m.witness, vec!["g:0", "g:3", "gbar:4"]);
        assert_eq!(report.hm.formula_value, 2);
        assert_eq!(report.status, "ok");
        assert_eq!(report.m.case_used, "both-connected+c5");

        let line = report.to_json_line();
        // Fixed key order, starting with the identity fields.
        let head = "{\"graph_id\":\"Dhc\",\"n\":5,\"r\":1,\"t\":0,\"k\":5,\
                    \"diam_g\":2,\"diam_gbar\":2,\"omega\":2,\"alpha\":2,\"cm\":";
        assert!(line.starts_with(head), "line was: {line}");
        assert!(line.ends_with("\"status\":\"ok\"}"));
    }

    #[test]
    fn disconnected_record_reads_side_parameters() {
        let g = generate(Family::Complete(3))
            .unwrap()
            .disjoint_union(&Graph::empty(1));
        let report = build_report(&g, 16);
        assert_eq!((report.r, report.t, report.k), (2, 1, 1));
        assert_eq!(report.diam_g, None);
        assert_eq!(report.cm.formula_value, 7);
        assert_eq!(report.cm.case_used, "base-disconnected");
        assert_eq!(report.status, "ok");

        // Complete base: parameters come from the complement side.
        let k4 = generate(Family::Complete(4)).unwrap();
        let report = build_report(&k4, 16);
        assert_eq!((report.r, report.t, report.k), (4, 4, 1));
        assert_eq!(report.diam_g, Some(1));
        assert_eq!(report.diam_gbar, None);
        assert_eq!(report.hm.case_used, "complement-disconnected+edgeless-complement");
        assert_eq!(report.hm.witness, vec!["gbar:0", "gbar:1", "gbar:2", "gbar:3"]);
    }

    #[test]
    fn zero_cap_skips_the_oracle() {
        let c5 = generate(Family::Cycle(5)).unwrap();
        let report = build_report(&c5, 0);
        assert_eq!(report.cm.oracle_value, None);
        assert_eq!(report.status, "oracle-skipped");
        assert!(report.cm.witness_verified);
    }
}
