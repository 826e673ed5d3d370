//! Support graphs, SIL-pairs, the Theta graph, Out(A_Γ) generator counts and
//! the finite-index condition, all read off the defining graph.

mod generators;
mod report;
mod support;
mod theta;

pub use generators::{
    finite_index_report, legal_transvections, partial_conjugations, FiniteIndexReport,
    PartialConjugation, Transvection, WitnessCell, WitnessTable,
};
pub use report::{analyze, quotient_order, AnalysisReport, BigCount};
pub use support::{
    all_support_graphs_are_forests, is_sil_pair, support_graph, support_graphs, ForestCheck,
    SilPair, SupportGraph,
};
pub use theta::{theta_graph, ThetaGraph, ThetaVertex};

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// Per-vertex data shared by the support-graph and Theta computations.
pub(crate) struct Stars<'g> {
    pub g: &'g Graph,
    pub star: Vec<FixedBitSet>,
    /// Components of `g - st(v)`, ordered by smallest label.
    pub comps: Vec<Vec<FixedBitSet>>,
    /// `comp_of[v][x]` is the index of `[x]_v` in `comps[v]`.
    pub comp_of: Vec<Vec<Option<usize>>>,
    /// Vertices outside a component adjacent to it, parallel to `comps`.
    pub boundary: Vec<Vec<FixedBitSet>>,
}

impl<'g> Stars<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let mut star = Vec::with_capacity(n);
        let mut comps = Vec::with_capacity(n);
        let mut comp_of = Vec::with_capacity(n);
        let mut boundary = Vec::with_capacity(n);
        for v in 0..n {
            let st = g.star_bits(v);
            let mut rest = st.clone();
            rest.toggle_range(..);
            let cs = g.components_within(&rest);
            let mut of = vec![None; n];
            let mut bd = Vec::with_capacity(cs.len());
            for (i, c) in cs.iter().enumerate() {
                let mut b = FixedBitSet::with_capacity(n);
                for x in c.ones() {
                    of[x] = Some(i);
                    b.union_with(g.neighbors(x));
                }
                b.difference_with(c);
                bd.push(b);
            }
            star.push(st);
            comps.push(cs);
            comp_of.push(of);
            boundary.push(bd);
        }
        Self {
            g,
            star,
            comps,
            comp_of,
            boundary,
        }
    }

    /// Whether component `i` of `g - st(v)` is also a component of
    /// `g - st(b)`: it avoids `st(b)` and everything adjacent to it lies in
    /// `st(b)`.
    pub fn is_component_of_minus_star(&self, v: usize, i: usize, b: usize) -> bool {
        self.comps[v][i].is_disjoint(&self.star[b]) && self.boundary[v][i].is_subset(&self.star[b])
    }
}
