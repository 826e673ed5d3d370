//! Finite simple undirected graphs with string vertex labels.
//!
//! Vertices keep the order in which they were declared; that order is what
//! the graph6 writer and the constructions use as `v1, v2, ...`. Every set
//! returned to callers is sorted lexicographically by label so results do not
//! depend on declaration order.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sorted, duplicate-free list of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<String>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.0
            .binary_search_by(|probe| probe.as_str().cmp(label))
            .is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn as_slice(&self) -> &[String] {
        &self.0
    }

    /// Smallest label, used to name components.
    pub fn first(&self) -> Option<&str> {
        self.0.first().map(String::as_str)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl<S: Into<String>> FromIterator<S> for VertexSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut labels: Vec<String> = iter.into_iter().map(Into::into).collect();
        labels.sort();
        labels.dedup();
        Self(labels)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

/// A finite simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `rank[i]` is the position of `labels[i]` in lexicographic order.
    rank: Vec<usize>,
    adj: Vec<FixedBitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, w)| format!("{}-{}", self.labels[u], self.labels[w]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Incremental construction of a [`Graph`].
#[derive(Default, Debug, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateVertex(label));
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        Ok(id)
    }

    pub fn edge(&mut self, u: &str, w: &str) -> Result<()> {
        let a = *self
            .index
            .get(u)
            .ok_or_else(|| Error::UnknownVertex(u.to_owned()))?;
        let b = *self
            .index
            .get(w)
            .ok_or_else(|| Error::UnknownVertex(w.to_owned()))?;
        self.edge_by_index(a, b)
    }

    pub fn edge_by_index(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.labels.len() || b >= self.labels.len() {
            return Err(Error::UnknownVertex(format!("#{}", a.max(b))));
        }
        if a == b {
            return Err(Error::SelfLoop(self.labels[a].clone()));
        }
        self.edges.push((a, b));
        Ok(())
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Graph::from_parts(self.labels, self.index, adj)
    }
}

impl Graph {
    fn from_parts(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        adj: Vec<FixedBitSet>,
    ) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut rank = vec![0; labels.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        Self {
            labels,
            index,
            rank,
            adj,
        }
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        GraphBuilder::new().build()
    }

    /// Builds a graph from labels and labeled edges.
    pub fn from_edges<L, I, E, A, B>(labels: I, edges: E) -> Result<Self>
    where
        L: Into<String>,
        I: IntoIterator<Item = L>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut b = GraphBuilder::new();
        for l in labels {
            b.vertex(l)?;
        }
        for (u, w) in edges {
            b.edge(u.as_ref(), w.as_ref())?;
        }
        Ok(b.build())
    }

    /// Builds a graph on labels `"0".."n-1"` from index pairs.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.vertex(i.to_string())?;
        }
        for &(u, w) in edges {
            b.edge_by_index(u, w)?;
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::from_index_edges(n, &edges).expect("valid complete graph")
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn is_adjacent(&self, u: usize, w: usize) -> bool {
        self.adj[u].contains(w)
    }

    pub fn has_edge(&self, u: &str, w: &str) -> Result<bool> {
        Ok(self.is_adjacent(self.index_of(u)?, self.index_of(w)?))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub(crate) fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges as index pairs `(u, w)` with `u < w`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, row) in self.adj.iter().enumerate() {
            out.extend(row.ones().filter(|&w| w > u).map(|w| (u, w)));
        }
        out
    }

    /// Edges as label pairs, each pair sorted and the list sorted.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .map(|(u, w)| {
                let (a, b) = (&self.labels[u], &self.labels[w]);
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect();
        out.sort();
        out
    }

    pub fn link(&self, v: &str) -> Result<VertexSet> {
        let i = self.index_of(v)?;
        Ok(self.to_vertex_set(&self.adj[i]))
    }

    pub fn star(&self, v: &str) -> Result<VertexSet> {
        let i = self.index_of(v)?;
        Ok(self.to_vertex_set(&self.star_bits(i)))
    }

    /// Induced subgraph on `V(g) \ s`, keeping vertex order.
    pub fn remove_set(&self, s: &VertexSet) -> Result<Graph> {
        let mut removed = FixedBitSet::with_capacity(self.order());
        for v in s.iter() {
            removed.insert(self.index_of(v)?);
        }
        removed.toggle_range(..);
        Ok(self.induced(&removed))
    }

    /// Connected components, each sorted, listed by smallest label.
    pub fn components(&self) -> Vec<VertexSet> {
        let all = self.full_set();
        self.components_within(&all)
            .iter()
            .map(|c| self.to_vertex_set(c))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on the vertices in `keep`.
    pub(crate) fn induced(&self, keep: &FixedBitSet) -> Graph {
        let mut b = GraphBuilder::new();
        let mut new_id = vec![usize::MAX; self.order()];
        for i in keep.ones() {
            new_id[i] = b.vertex(self.labels[i].clone()).expect("labels are unique");
        }
        for (u, w) in self.edges() {
            if keep.contains(u) && keep.contains(w) {
                b.edge_by_index(new_id[u], new_id[w]).expect("valid edge");
            }
        }
        b.build()
    }

    /// Relabels the vertices; vertex `i` gets `labels[i]`.
    pub fn with_labels<S: Into<String>>(
        &self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Graph> {
        let mut b = GraphBuilder::new();
        for l in labels {
            b.vertex(l)?;
        }
        if b.labels.len() != self.order() {
            return Err(Error::EdgeList {
                line: 0,
                reason: format!("expected {} labels, got {}", self.order(), b.labels.len()),
            });
        }
        for (u, w) in self.edges() {
            b.edge_by_index(u, w)?;
        }
        Ok(b.build())
    }

    /// The same labeled graph with vertices declared in a new order:
    /// position `p` of the result holds vertex `order[p]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.order(), "order must list every vertex");
        let mut inverse = vec![usize::MAX; self.order()];
        for (p, &v) in order.iter().enumerate() {
            inverse[v] = p;
        }
        let mut b = GraphBuilder::new();
        for &v in order {
            b.vertex(self.labels[v].clone()).expect("labels are unique");
        }
        for (u, w) in self.edges() {
            b.edge_by_index(inverse[u], inverse[w]).expect("valid edge");
        }
        b.build()
    }

    pub(crate) fn full_set(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.order());
        all.insert_range(..);
        all
    }

    pub(crate) fn star_bits(&self, v: usize) -> FixedBitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Index of the lexicographically smallest label in a non-empty set.
    pub(crate) fn min_vertex(&self, set: &FixedBitSet) -> Option<usize> {
        set.ones().min_by_key(|&v| self.rank[v])
    }

    /// Components of the subgraph induced on `within`, ordered by smallest
    /// label.
    pub(crate) fn components_within(&self, within: &FixedBitSet) -> Vec<FixedBitSet> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for start in within.ones() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = FixedBitSet::with_capacity(n);
            seen.insert(start);
            stack.push(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.adj[v].ones() {
                    if within.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps.sort_by_key(|c| self.min_vertex(c).map(|v| self.rank[v]));
        comps
    }

    pub(crate) fn to_vertex_set(&self, set: &FixedBitSet) -> VertexSet {
        set.ones().map(|i| self.labels[i].clone()).collect()
    }
}
