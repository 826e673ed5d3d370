use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::Stars;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The support graph of a base vertex `v`: one node per component of
/// `Γ - st(v)`; nodes `A`, `B` are joined when `A` is also a component of
/// `Γ - st(b)` for some `b ∈ B`, or the same with the roles swapped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportGraph {
    pub base: String,
    pub nodes: Vec<VertexSet>,
    /// Node index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl SupportGraph {
    /// Number of connected components, `N(v)`.
    pub fn component_count(&self) -> usize {
        self.node_components().len()
    }

    /// Node indices grouped by connected component, ordered by first node.
    pub fn node_components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(i);
        }
        groups
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_count() == self.nodes.len()
    }

    /// Index of the node containing `label`, i.e. `[label]_v`.
    pub fn node_of(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|c| c.contains(label))
    }
}

pub(crate) fn support_edges(stars: &Stars<'_>, v: usize) -> Vec<(usize, usize)> {
    let comps = &stars.comps[v];
    let mut edges = Vec::new();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let a_in_b = comps[j]
                .ones()
                .any(|b| stars.is_component_of_minus_star(v, i, b));
            let b_in_a = || {
                comps[i]
                    .ones()
                    .any(|a| stars.is_component_of_minus_star(v, j, a))
            };
            if a_in_b || b_in_a() {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn build(stars: &Stars<'_>, v: usize) -> SupportGraph {
    SupportGraph {
        base: stars.g.label(v).to_owned(),
        nodes: stars.comps[v]
            .iter()
            .map(|c| stars.g.to_vertex_set(c))
            .collect(),
        edges: support_edges(stars, v),
    }
}

pub fn support_graph(g: &Graph, v: &str) -> Result<SupportGraph> {
    let i = g.index_of(v)?;
    Ok(build(&Stars::new(g), i))
}

/// Support graphs of every vertex, in vertex order.
pub fn support_graphs(g: &Graph) -> Vec<SupportGraph> {
    let stars = Stars::new(g);
    (0..g.order()).map(|v| build(&stars, v)).collect()
}

/// Outcome of the forest condition; `witness` is the first vertex (in vertex
/// order) whose support graph has a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestCheck {
    pub ok: bool,
    pub witness: Option<String>,
}

pub fn all_support_graphs_are_forests(g: &Graph) -> ForestCheck {
    let witness = support_graphs(g)
        .into_iter()
        .find(|sg| !sg.is_forest())
        .map(|sg| sg.base);
    ForestCheck {
        ok: witness.is_none(),
        witness,
    }
}

/// A separating intersection of links: `v ≁ w` and `witness` is a component
/// of `Γ - (lk(v) ∩ lk(w))` containing neither.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SilPair {
    pub v: String,
    pub w: String,
    pub witness: VertexSet,
}

pub fn is_sil_pair(g: &Graph, v: &str, w: &str) -> Result<Option<SilPair>> {
    let (a, b) = (g.index_of(v)?, g.index_of(w)?);
    if a == b {
        return Err(Error::SameVertex(v.to_owned()));
    }
    Ok(sil_witness(g, a, b).map(|c| SilPair {
        v: v.to_owned(),
        w: w.to_owned(),
        witness: g.to_vertex_set(&c),
    }))
}

/// Smallest-labeled component of `Γ - (lk(v) ∩ lk(w))` avoiding `v` and `w`.
pub(crate) fn sil_witness(g: &Graph, v: usize, w: usize) -> Option<FixedBitSet> {
    if v == w || g.is_adjacent(v, w) {
        return None;
    }
    let mut keep = g.neighbors(v).clone();
    keep.intersect_with(g.neighbors(w));
    keep.toggle_range(..);
    g.components_within(&keep)
        .into_iter()
        .find(|c| !c.contains(v) && !c.contains(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn star_k13() -> Graph {
        Graph::from_edges(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")]).unwrap()
    }

    #[test]
    fn complete_graph_has_empty_support_graphs() {
        let g = Graph::complete(4);
        for sg in support_graphs(&g) {
            assert!(sg.nodes.is_empty());
            assert_eq!(sg.component_count(), 0);
        }
        assert!(all_support_graphs_are_forests(&g).ok);
    }

    #[test]
    fn sil_requires_non_adjacency() {
        let g = star_k13();
        assert_eq!(is_sil_pair(&g, "c", "x").unwrap(), None);
    }

    #[test]
    fn star_leaves_form_sil_pair() {
        let g = star_k13();
        let sil = is_sil_pair(&g, "x", "y").unwrap().unwrap();
        assert_eq!(sil.witness, ["z"].into_iter().collect());
        assert!(is_sil_pair(&g, "y", "x").unwrap().is_some());
    }

    #[test]
    fn sil_rejects_same_or_unknown_vertex() {
        let g = star_k13();
        assert_eq!(
            is_sil_pair(&g, "x", "x"),
            Err(Error::SameVertex("x".into()))
        );
        assert!(is_sil_pair(&g, "x", "nope").is_err());
    }

    #[test]
    fn star_graph_support_graphs() {
        // Leaf x: Γ - st(x) = {y}, {z}; y's star leaves {x}, {z} so {z} is a
        // component of Γ - st(y): edge.
        let g = star_k13();
        let sg = support_graph(&g, "x").unwrap();
        assert_eq!(sg.nodes.len(), 2);
        assert_eq!(sg.edges, vec![(0, 1)]);
        assert!(support_graph(&g, "c").unwrap().nodes.is_empty());
    }

    #[test]
    fn four_cycle_support_graph() {
        // C4 = 0-1-2-3-0: Γ - st(0) = {2}, a single node.
        let g = parse_graph6("Cl").unwrap();
        assert_eq!(g.size(), 4);
        for sg in support_graphs(&g) {
            assert_eq!(sg.nodes.len(), 1);
            assert!(sg.edges.is_empty());
        }
    }
}
