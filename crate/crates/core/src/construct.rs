//! Graphs Γ(Λ) and Γ′(Λ) whose pure symmetric outer automorphism group is
//! A_Λ, and the fixed graphs used when Λ has fewer than three vertices.
//!
//! With `V(Λ) = {v1..vn}` in Λ's vertex order (`v_{n+1} = v1`):
//!
//! Γ(Λ) adds `a1 a2 b1 b2 c1..cn d1 d2` with edges `vj-b1`, `vj-b2`,
//! `ci-vi`, `ci-v(i+1)`, `ci-d1`, `ci-d2`, `d1-v1`, `d1-b1`, `d2-b2`,
//! `d2-vj (j >= 2)`, `b1-a1`, `b2-a2`, `a1-a2`.
//!
//! Γ′(Λ) adds `a1 a2 a3 b1 b2 b3 c1..cn d1 d2 d3` with edges `vk-b1`, `vk-b2`,
//! `vk-b3`, `cj-vj`, `cj-v(j+1)`, `cj-d1`, `cj-d2`, `cj-d3`, `d1-v1`,
//! `d1-b1`, `d2-v2`, `d3-vk (k > 2)`, `d3-b3`, `d2-d3` and the triangle
//! `a1 a2 a3` hung below `b1 b2 b3`. `d2` is not joined to `b2`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Gamma,
    GammaPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    Gamma,
    GammaPrime,
    /// One of the three fixed graphs for Λ with one or two vertices.
    Appendix(u8),
}

impl ConstructionKind {
    /// Whether the construction is claimed to have no non-trivial graph
    /// automorphisms.
    pub fn claims_rigid(self) -> bool {
        !matches!(self, Self::Gamma)
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Gamma => f.write_str("gamma"),
            Self::GammaPrime => f.write_str("gamma-prime"),
            Self::Appendix(i) => write!(f, "appendix-{i}"),
        }
    }
}

struct Extender {
    b: GraphBuilder,
    lambda: Vec<String>,
}

impl Extender {
    fn new(lambda: &Graph, added: &[String]) -> Result<Self> {
        let n = lambda.order();
        if n < 3 {
            return Err(Error::TooFewVertices { needed: 3, got: n });
        }
        if let Some(clash) = added.iter().find(|l| lambda.contains(l)) {
            return Err(Error::ReservedLabel(clash.clone()));
        }
        let mut b = GraphBuilder::new();
        for l in lambda.labels().iter().chain(added) {
            b.vertex(l.clone())?;
        }
        for (u, w) in lambda.edges() {
            b.edge_by_index(u, w)?;
        }
        Ok(Self {
            b,
            lambda: lambda.labels().to_vec(),
        })
    }

    /// `i` is zero-based and wraps.
    fn v(&self, i: usize) -> String {
        self.lambda[i % self.lambda.len()].clone()
    }

    fn join(&mut self, u: &str, w: &str) {
        self.b.edge(u, w).expect("construction labels are declared");
    }
}

fn numbered(prefix: char, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// Γ(Λ), requiring `|V(Λ)| >= 3`.
pub fn build_gamma(lambda: &Graph) -> Result<Graph> {
    let n = lambda.order();
    let mut added = numbered('a', 2);
    added.extend(numbered('b', 2));
    added.extend(numbered('c', n));
    added.extend(numbered('d', 2));
    let mut x = Extender::new(lambda, &added)?;
    for j in 0..n {
        let v = x.v(j);
        x.join(&v, "b1");
        x.join(&v, "b2");
    }
    for i in 0..n {
        let c = format!("c{}", i + 1);
        let (vi, vnext) = (x.v(i), x.v(i + 1));
        x.join(&c, &vi);
        x.join(&c, &vnext);
        x.join(&c, "d1");
        x.join(&c, "d2");
    }
    let v1 = x.v(0);
    x.join("d1", &v1);
    x.join("d1", "b1");
    x.join("d2", "b2");
    for j in 1..n {
        let v = x.v(j);
        x.join("d2", &v);
    }
    x.join("b1", "a1");
    x.join("b2", "a2");
    x.join("a1", "a2");
    Ok(x.b.build())
}

/// Γ′(Λ), requiring `|V(Λ)| >= 3`.
pub fn build_gamma_prime(lambda: &Graph) -> Result<Graph> {
    let n = lambda.order();
    let mut added = numbered('a', 3);
    added.extend(numbered('b', 3));
    added.extend(numbered('c', n));
    added.extend(numbered('d', 3));
    let mut x = Extender::new(lambda, &added)?;
    for k in 0..n {
        let v = x.v(k);
        for b in ["b1", "b2", "b3"] {
            x.join(&v, b);
        }
    }
    for j in 0..n {
        let c = format!("c{}", j + 1);
        let (vj, vnext) = (x.v(j), x.v(j + 1));
        x.join(&c, &vj);
        x.join(&c, &vnext);
        for d in ["d1", "d2", "d3"] {
            x.join(&c, d);
        }
    }
    let (v1, v2) = (x.v(0), x.v(1));
    x.join("d1", &v1);
    x.join("d1", "b1");
    x.join("d2", &v2);
    for k in 2..n {
        let v = x.v(k);
        x.join("d3", &v);
    }
    x.join("d3", "b3");
    x.join("d2", "d3");
    for (b, a) in [("b1", "a1"), ("b2", "a2"), ("b3", "a3")] {
        x.join(b, a);
    }
    x.join("a1", "a2");
    x.join("a1", "a3");
    x.join("a2", "a3");
    Ok(x.b.build())
}

const APPENDIX_1: (usize, &[(usize, usize)]) = (
    11,
    &[
        (1, 2),
        (1, 4),
        (1, 5),
        (2, 3),
        (2, 6),
        (2, 8),
        (3, 4),
        (3, 6),
        (3, 8),
        (4, 9),
        (4, 10),
        (4, 11),
        (5, 6),
        (5, 9),
        (5, 10),
        (6, 7),
        (6, 9),
        (7, 8),
        (7, 9),
        (7, 11),
        (8, 9),
        (8, 10),
        (10, 11),
    ],
);

const APPENDIX_2: (usize, &[(usize, usize)]) = (
    9,
    &[
        (1, 2),
        (1, 3),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 4),
        (2, 7),
        (3, 6),
        (3, 7),
        (3, 8),
        (4, 6),
        (4, 7),
        (4, 8),
        (4, 9),
        (5, 6),
        (5, 7),
        (5, 9),
        (8, 9),
    ],
);

const APPENDIX_3: (usize, &[(usize, usize)]) = (
    11,
    &[
        (1, 2),
        (1, 3),
        (1, 5),
        (1, 6),
        (2, 4),
        (2, 5),
        (2, 7),
        (3, 4),
        (3, 8),
        (4, 5),
        (4, 8),
        (4, 9),
        (4, 10),
        (5, 6),
        (5, 9),
        (6, 8),
        (6, 9),
        (6, 11),
        (7, 8),
        (7, 9),
        (7, 11),
        (8, 9),
        (10, 11),
    ],
);

/// The fixed graph Γ1 (for one vertex), Γ2 (two vertices, no edge) or Γ3
/// (two adjacent vertices), with vertices `v1..vk`.
pub fn appendix_graph(which: u8) -> Result<Graph> {
    let (n, edges) = match which {
        1 => APPENDIX_1,
        2 => APPENDIX_2,
        3 => APPENDIX_3,
        _ => return Err(Error::InvalidAppendix(which)),
    };
    let labels = (1..=n).map(|i| format!("v{i}"));
    let edges = edges
        .iter()
        .map(|&(u, w)| (format!("v{u}"), format!("v{w}")));
    Graph::from_edges(labels, edges)
}

/// The graph realizing `A_Λ`: the requested construction for three or more
/// vertices, otherwise the appendix graph matching Λ.
pub fn build_for(lambda: &Graph, prefer: Target) -> Result<(Graph, ConstructionKind)> {
    match lambda.order() {
        0 => Err(Error::EmptyGraph),
        1 => Ok((appendix_graph(1)?, ConstructionKind::Appendix(1))),
        2 if lambda.size() == 0 => Ok((appendix_graph(2)?, ConstructionKind::Appendix(2))),
        2 => Ok((appendix_graph(3)?, ConstructionKind::Appendix(3))),
        _ => match prefer {
            Target::Gamma => Ok((build_gamma(lambda)?, ConstructionKind::Gamma)),
            Target::GammaPrime => Ok((build_gamma_prime(lambda)?, ConstructionKind::GammaPrime)),
        },
    }
}

/// Rank groups for drawing a constructed graph: `a`, `b`, Λ, `c`, `d`.
pub fn layout_levels(g: &Graph, lambda: &Graph) -> Vec<Vec<String>> {
    let mut levels = vec![Vec::new(); 5];
    for l in g.labels() {
        let slot = if lambda.contains(l) {
            2
        } else {
            match l.chars().next() {
                Some('a') => 0,
                Some('b') => 1,
                Some('c') => 3,
                Some('d') => 4,
                _ => 2,
            }
        };
        levels[slot].push(l.clone());
    }
    levels.reverse();
    levels
}
