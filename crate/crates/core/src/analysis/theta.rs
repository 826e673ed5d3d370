use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::support::{sil_witness, support_edges};
use super::Stars;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};

/// A vertex of the Theta graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaVertex {
    /// `α_e^v`, one per edge `e = {A, B}` of the support graph of `v`;
    /// `edge` is ordered by smallest label.
    TypeI {
        base: String,
        edge: (VertexSet, VertexSet),
    },
    /// `β_i^v` for `i = 1..N(v)-1`.
    TypeII { base: String, index: usize },
}

impl ThetaVertex {
    pub fn base(&self) -> &str {
        match self {
            Self::TypeI { base, .. } | Self::TypeII { base, .. } => base,
        }
    }

    pub fn is_type_two(&self) -> bool {
        matches!(self, Self::TypeII { .. })
    }

    /// `a:<v>:<min A>:<min B>` or `b:<v>:<i>`.
    pub fn label(&self) -> String {
        match self {
            Self::TypeI { base, edge } => format!(
                "a:{base}:{}:{}",
                edge.0.first().unwrap_or_default(),
                edge.1.first().unwrap_or_default()
            ),
            Self::TypeII { base, index } => format!("b:{base}:{index}"),
        }
    }
}

/// The Theta graph; `vertices[i]` describes vertex `i` of `graph`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaGraph {
    pub graph: Graph,
    pub vertices: Vec<ThetaVertex>,
}

impl ThetaGraph {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Index of the vertex with the given serialized label.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.graph.index_of(label).ok()
    }
}

impl Serialize for ThetaGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ThetaGraph", 2)?;
        st.serialize_field("vertices", self.graph.labels())?;
        st.serialize_field("edges", &self.graph.edge_labels())?;
        st.end()
    }
}

struct TypeOne {
    base: usize,
    a: usize,
    b: usize,
}

/// Theta graph of `g`. Requires every support graph to be a forest.
///
/// Type II vertices are adjacent to everything. Two type I vertices `α_e^v`,
/// `α_f^w` are adjacent unless `(v, w)` is a SIL-pair and `e = {[w]_v, L}`,
/// `f = {[v]_w, L}` for a common component `L` of `Γ - st(v)` and
/// `Γ - st(w)`.
pub fn theta_graph(g: &Graph) -> Result<ThetaGraph> {
    let stars = Stars::new(g);
    let mut ones: Vec<TypeOne> = Vec::new();
    let mut vertices = Vec::new();
    for v in 0..g.order() {
        let edges = support_edges(&stars, v);
        let nodes = stars.comps[v].len();
        let components = count_components(nodes, &edges);
        if edges.len() + components != nodes {
            return Err(Error::NotForest {
                vertex: g.label(v).to_owned(),
            });
        }
        for &(a, b) in &edges {
            let set = |i: usize| g.to_vertex_set(&stars.comps[v][i]);
            vertices.push(ThetaVertex::TypeI {
                base: g.label(v).to_owned(),
                edge: (set(a), set(b)),
            });
            ones.push(TypeOne { base: v, a, b });
        }
        for index in 1..components.max(1) {
            vertices.push(ThetaVertex::TypeII {
                base: g.label(v).to_owned(),
                index,
            });
        }
    }

    let mut builder = GraphBuilder::new();
    for t in &vertices {
        builder.vertex(t.label())?;
    }
    let type_one_slot: Vec<usize> = vertices
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_type_two())
        .map(|(i, _)| i)
        .collect();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i].is_type_two() || vertices[j].is_type_two() {
                builder.edge_by_index(i, j)?;
            }
        }
    }
    for x in 0..ones.len() {
        for y in x + 1..ones.len() {
            if !type_one_gap(&stars, &ones[x], &ones[y]) {
                builder.edge_by_index(type_one_slot[x], type_one_slot[y])?;
            }
        }
    }
    Ok(ThetaGraph {
        graph: builder.build(),
        vertices,
    })
}

fn count_components(nodes: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut count = nodes;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// True when `α_e^v` and `α_f^w` are non-adjacent.
fn type_one_gap(stars: &Stars<'_>, e: &TypeOne, f: &TypeOne) -> bool {
    let (v, w) = (e.base, f.base);
    if v == w || stars.g.is_adjacent(v, w) {
        return false;
    }
    let (Some(w_in_v), Some(v_in_w)) = (stars.comp_of[v][w], stars.comp_of[w][v]) else {
        return false;
    };
    let other = |t: &TypeOne, end: usize| {
        if t.a == end {
            Some(t.b)
        } else if t.b == end {
            Some(t.a)
        } else {
            None
        }
    };
    let (Some(l_e), Some(l_f)) = (other(e, w_in_v), other(f, v_in_w)) else {
        return false;
    };
    stars.comps[v][l_e] == stars.comps[w][l_f] && sil_witness(stars.g, v, w).is_some()
}
