//! Instance-by-instance check that a graph Γ realizes A_Λ as a finite-index
//! PSO(A_Γ).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{
    all_support_graphs_are_forests, finite_index_report, theta_graph, BigCount, ThetaGraph,
};
use crate::construct::ConstructionKind;
use crate::graph::{Graph, GraphBuilder};
use crate::perm::Permutation;
use crate::symmetry::{are_isomorphic, automorphism_group};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationResult {
    pub kind: Option<ConstructionKind>,
    pub n: usize,
    pub gamma_vertices: usize,
    pub gamma_edges: usize,
    pub forests_ok: bool,
    pub theta_iso_ok: bool,
    /// `(vertex of Λ, vertex of Θ)` pairs of the isomorphism found.
    pub theta_bijection: Option<Vec<(String, String)>>,
    pub finite_index_ok: bool,
    pub aut_order: BigCount,
    /// Populated when automorphism triviality was requested.
    pub aut_trivial_ok: Option<bool>,
    pub quotient_order: Option<BigCount>,
}

impl VerificationResult {
    /// All applicable verdicts hold.
    pub fn passed(&self) -> bool {
        self.forests_ok
            && self.theta_iso_ok
            && self.finite_index_ok
            && self.aut_trivial_ok.unwrap_or(true)
    }
}

/// Runs every check; failures are recorded as verdicts.
pub fn verify_construction(
    lambda: &Graph,
    gamma: &Graph,
    expect_aut_trivial: bool,
) -> VerificationResult {
    let forests = all_support_graphs_are_forests(gamma);
    let theta = forests
        .ok
        .then(|| theta_graph(gamma).expect("forest condition checked"));
    let bijection = theta
        .as_ref()
        .and_then(|t| are_isomorphic(lambda, &t.graph).map(|p| p.label_pairs(lambda, &t.graph)));
    let fi = finite_index_report(gamma);
    let aut = automorphism_group(gamma);
    let quotient_order = fi
        .finite_index
        .then(|| BigCount((num_bigint::BigUint::from(1u32) << gamma.order()) * &aut.order));
    VerificationResult {
        kind: None,
        n: lambda.order(),
        gamma_vertices: gamma.order(),
        gamma_edges: gamma.size(),
        forests_ok: forests.ok,
        theta_iso_ok: bijection.is_some(),
        theta_bijection: bijection,
        finite_index_ok: fi.finite_index,
        aut_trivial_ok: expect_aut_trivial.then(|| aut.is_trivial()),
        aut_order: BigCount(aut.order),
        quotient_order,
    }
}

/// The map `v_i ↦ u_i` sending each vertex of Λ to the unique Θ-vertex based
/// at it, when every vertex of Λ has exactly one and nothing else does.
pub fn explicit_theta_map(lambda: &Graph, theta: &ThetaGraph) -> Option<Permutation> {
    if theta.vertices.len() != lambda.order() {
        return None;
    }
    let mut images = vec![usize::MAX; lambda.order()];
    for (slot, t) in theta.vertices.iter().enumerate() {
        let i = lambda.index_of(t.base()).ok()?;
        if images[i] != usize::MAX {
            return None;
        }
        images[i] = slot;
    }
    Permutation::from_images(images)
}

/// Random Λ on labels `v1..vn`: `n` uniform in `min_n..=max_n`, edge
/// probability uniform in `[0, 1)` per graph.
pub fn random_lambda(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.random_range(min_n..=max_n);
    let p: f64 = rng.random();
    let mut b = GraphBuilder::new();
    for i in 1..=n {
        b.vertex(format!("v{i}")).expect("distinct labels");
    }
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                b.edge_by_index(i, j).expect("distinct endpoints");
            }
        }
    }
    b.build()
}

/// `count` graphs from [`random_lambda`], reproducible from `seed`.
pub fn sample_lambdas(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_lambda(&mut rng, min_n, max_n))
        .collect()
}
