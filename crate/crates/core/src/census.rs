//! Exhaustive classification of small graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{analyze, BigCount};
use crate::construct::{build_for, ConstructionKind, Target};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_bits};
use crate::search::{canonical, Dense};
use crate::symmetry::canonical_form;
use crate::verify::verify_construction;

pub const MAX_CENSUS_SIZE: usize = 7;
pub const MAX_COVERAGE_SIZE: usize = 4;

/// One representative per isomorphism class on `k` vertices, labeled
/// `"0".."k-1"` in canonical order and sorted by canonical form.
pub fn enumerate_graphs(k: usize) -> Result<Vec<Graph>> {
    Ok(canonical_forms(k)?
        .iter()
        .map(|form| parse_graph6(form).expect("canonical forms are valid graph6"))
        .collect())
}

/// Canonical forms of all graphs on `k` vertices, by brute force over every
/// upper-triangle mask.
pub fn canonical_forms(k: usize) -> Result<BTreeSet<String>> {
    if !(1..=MAX_CENSUS_SIZE).contains(&k) {
        return Err(Error::CensusRange(k));
    }
    let pairs = k * (k - 1) / 2;
    let mut forms = BTreeSet::new();
    for mask in 0..1u64 << pairs {
        let c = canonical(&Dense::from_mask(k, mask));
        forms.insert(write_bits(k, c.bits()));
    }
    Ok(forms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub canonical_form: String,
    pub n: usize,
    pub edges: usize,
    pub pso_is_raag: bool,
    pub finite_index: bool,
    pub theta_canonical: Option<String>,
    pub aut_order: BigCount,
    pub quotient_order: Option<BigCount>,
}

pub fn classify(k: usize) -> Result<Vec<CensusEntry>> {
    enumerate_graphs(k)?
        .iter()
        .map(|g| {
            let r = analyze(g)?;
            Ok(CensusEntry {
                canonical_form: canonical_form(g),
                n: g.order(),
                edges: g.size(),
                pso_is_raag: r.forests_ok,
                finite_index: r.finite_index,
                theta_canonical: r.theta.as_ref().map(|t| canonical_form(&t.graph)),
                aut_order: r.aut_order,
                quotient_order: r.quotient_order,
            })
        })
        .collect()
}

/// One JSON object per line.
pub fn to_json_lines(entries: &[CensusEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&serde_json::to_string(e).expect("census entries serialize"));
        out.push('\n');
    }
    out
}

/// Entry counts per `(n, pso_is_raag, finite_index)` combination.
pub fn summary_table(entries: &[CensusEntry]) -> String {
    let mut counts: BTreeMap<(usize, bool, bool), usize> = BTreeMap::new();
    for e in entries {
        *counts
            .entry((e.n, e.pso_is_raag, e.finite_index))
            .or_default() += 1;
    }
    let mut out = String::from("n  pso_is_raag  finite_index  count\n");
    for ((n, raag, fi), c) in counts {
        let _ = writeln!(out, "{n:<2} {raag:<12} {fi:<13} {c}");
    }
    let _ = writeln!(out, "total {}", entries.len());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageEntry {
    pub lambda: String,
    pub n: usize,
    pub kind: ConstructionKind,
    pub gamma_vertices: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub max_n: usize,
    /// Number of isomorphism classes checked per vertex count.
    pub classes_per_size: BTreeMap<usize, usize>,
    pub entries: Vec<CoverageEntry>,
    pub all_covered: bool,
}

/// Builds and verifies a realizing graph for every Λ on at most `k`
/// vertices (Γ′ from three vertices on, the appendix graphs below).
pub fn coverage_check(k: usize) -> Result<CoverageReport> {
    if !(1..=MAX_COVERAGE_SIZE).contains(&k) {
        return Err(Error::CoverageRange(k));
    }
    let mut entries = Vec::new();
    let mut classes_per_size = BTreeMap::new();
    for n in 1..=k {
        let lambdas = enumerate_graphs(n)?;
        classes_per_size.insert(n, lambdas.len());
        for lambda in &lambdas {
            let (gamma, kind) = build_for(lambda, Target::GammaPrime)?;
            let r = verify_construction(lambda, &gamma, kind.claims_rigid());
            entries.push(CoverageEntry {
                lambda: canonical_form(lambda),
                n,
                kind,
                gamma_vertices: gamma.order(),
                verified: r.passed(),
            });
        }
    }
    Ok(CoverageReport {
        max_n: k,
        classes_per_size,
        all_covered: entries.iter().all(|e| e.verified),
        entries,
    })
}
