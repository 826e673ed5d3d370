use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use super::generators::{
    finite_index_report, legal_transvections, partial_conjugations, Transvection, WitnessTable,
};
use super::support::all_support_graphs_are_forests;
use super::theta::{theta_graph, ThetaGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::automorphism_group;

/// Arbitrary-size non-negative count, serialized as a bare JSON number.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn pow2(exp: usize) -> Self {
        Self(BigUint::from(1u32) << exp)
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl From<u64> for BigCount {
    fn from(n: u64) -> Self {
        Self(BigUint::from(n))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_u64() {
            Some(n) => s.serialize_u64(n),
            None => RawValue::from_string(self.0.to_string())
                .map_err(serde::ser::Error::custom)?
                .serialize(s),
        }
    }
}

/// Everything the analysis computes about one defining graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub vertices: Vec<String>,
    pub edges: usize,
    pub forests_ok: bool,
    /// First vertex whose support graph has a cycle.
    pub non_forest_vertex: Option<String>,
    pub finite_index: bool,
    pub transvections: Vec<Transvection>,
    pub witness_table: WitnessTable,
    pub theta: Option<ThetaGraph>,
    pub partial_conjugation_count: usize,
    pub inversion_count: usize,
    pub aut_order: BigCount,
    /// `|Inv ⋊ Per| = 2^|V| · |Aut(Γ)|`, present only under the finite-index
    /// condition.
    pub quotient_order: Option<BigCount>,
}

/// Order of `Out(A_Γ)/PSO(A_Γ)` when `PSO(A_Γ)` has finite index.
pub fn quotient_order(g: &Graph) -> Option<BigCount> {
    if !legal_transvections(g).is_empty() {
        return None;
    }
    Some(quotient(g.order(), &automorphism_group(g).order))
}

fn quotient(n: usize, aut: &BigUint) -> BigCount {
    BigCount((BigUint::from(1u32) << n) * aut)
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let forests = all_support_graphs_are_forests(g);
    let theta = if forests.ok {
        Some(theta_graph(g)?)
    } else {
        None
    };
    let fi = finite_index_report(g);
    let transvections = legal_transvections(g);
    let aut = automorphism_group(g);
    let quotient_order = fi.finite_index.then(|| quotient(g.order(), &aut.order));
    Ok(AnalysisReport {
        vertices: g.labels().to_vec(),
        edges: g.size(),
        forests_ok: forests.ok,
        non_forest_vertex: forests.witness,
        finite_index: fi.finite_index,
        transvections,
        witness_table: fi.witness_table,
        theta,
        partial_conjugation_count: partial_conjugations(g).len(),
        inversion_count: g.order(),
        aut_order: BigCount(aut.order),
        quotient_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_report() {
        let g = Graph::from_index_edges(1, &[]).unwrap();
        let r = analyze(&g).unwrap();
        assert_eq!(r.inversion_count, 1);
        assert!(r.transvections.is_empty());
        assert!(r.theta.as_ref().unwrap().is_empty());
        assert_eq!(r.quotient_order, Some(BigCount::from(2)));
    }

    #[test]
    fn complete_graph_report() {
        let r = analyze(&Graph::complete(4)).unwrap();
        assert!(r.forests_ok);
        assert!(r.theta.unwrap().is_empty());
        assert!(!r.finite_index);
        assert_eq!(r.transvections.len(), 12);
        assert_eq!(r.quotient_order, None);
        assert_eq!(r.aut_order, BigCount::from(24));
    }

    #[test]
    fn empty_graph_is_rejected() {
        assert_eq!(analyze(&Graph::empty()), Err(Error::EmptyGraph));
    }

    #[test]
    fn k2_has_no_quotient_order() {
        assert_eq!(quotient_order(&Graph::complete(2)), None);
    }

    #[test]
    fn big_counts_serialize_as_numbers() {
        let small = serde_json::to_string(&BigCount::from(32768)).unwrap();
        assert_eq!(small, "32768");
        let big = serde_json::to_string(&BigCount::pow2(100)).unwrap();
        assert_eq!(big, "1267650600228229401496703205376");
    }
}
