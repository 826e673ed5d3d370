//! Isomorphism, automorphism groups and canonical forms.

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::Graph;
use crate::graph6;
use crate::perm::Permutation;
use crate::search::{self, Dense};

/// Automorphism group of a graph, as generators plus the exact order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
}

impl AutGroup {
    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}

pub fn automorphism_group(g: &Graph) -> AutGroup {
    let found = search::automorphisms(&Dense::new(g));
    AutGroup {
        generators: found
            .generators
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect(),
        order: found.order,
    }
}

/// Vertex order of `g` whose relabeled matrix is the canonical one: position
/// `p` holds vertex `labeling[p]`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    search::canonical(&Dense::new(g)).labeling
}

/// graph6 string of the canonical relabeling. Equal for two graphs exactly
/// when they are isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    let c = search::canonical(&Dense::new(g));
    graph6::write_bits(c.n, c.bits())
}

/// The canonically relabeled graph, with vertices renamed `"0".."n-1"`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_labeling(g);
    let relabeled = g.reordered(&order);
    relabeled
        .with_labels((0..g.order()).map(|i| i.to_string()))
        .expect("index labels are unique")
}

/// A vertex bijection from `g` onto `h` preserving adjacency and
/// non-adjacency, if one exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let cg = search::canonical(&Dense::new(g));
    let ch = search::canonical(&Dense::new(h));
    if cg.code != ch.code {
        return None;
    }
    let mut map = vec![0; g.order()];
    for (&a, &b) in cg.labeling.iter().zip(&ch.labeling) {
        map[a] = b;
    }
    let p = Permutation::from_images_unchecked(map);
    debug_assert!(p.is_isomorphism(g, h));
    Some(p)
}
