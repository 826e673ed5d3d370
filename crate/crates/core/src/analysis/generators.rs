use serde::Serialize;

use super::Stars;
use crate::graph::{Graph, VertexSet};

/// A Γ-legal transvection `source ↦ target·source` (or `source·target`);
/// legal when `lk(source) ⊆ st(target)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transvection {
    pub source: String,
    pub target: String,
}

/// Partial conjugation of `component` (a component of `Γ - st(acting)`) by
/// `acting`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialConjugation {
    pub acting: String,
    pub component: VertexSet,
}

/// All ordered pairs of distinct vertices with `lk(source) ⊆ st(target)`, in
/// vertex order.
pub fn legal_transvections(g: &Graph) -> Vec<Transvection> {
    let n = g.order();
    let stars: Vec<_> = (0..n).map(|v| g.star_bits(v)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for (j, st) in stars.iter().enumerate() {
            if i != j && g.neighbors(i).is_subset(st) {
                out.push(Transvection {
                    source: g.label(i).to_owned(),
                    target: g.label(j).to_owned(),
                });
            }
        }
    }
    out
}

pub fn partial_conjugations(g: &Graph) -> Vec<PartialConjugation> {
    let stars = Stars::new(g);
    (0..g.order())
        .flat_map(|v| {
            stars.comps[v].iter().map(move |c| PartialConjugation {
                acting: g.label(v).to_owned(),
                component: g.to_vertex_set(c),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCell {
    /// `lk(u) ⊆ st(w)`.
    Contained,
    /// The smallest label in `lk(u) \ st(w)`.
    Witness(String),
}

/// Containment table with rows `lk(u)` and columns `st(w)`, both in vertex
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessTable {
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub cells: Vec<Vec<WitnessCell>>,
}

impl WitnessTable {
    pub fn cell(&self, u: &str, w: &str) -> Option<&WitnessCell> {
        let i = self.rows.iter().position(|r| r == u)?;
        let j = self.columns.iter().position(|c| c == w)?;
        Some(&self.cells[i][j])
    }

    /// Off-diagonal containments `(u, w)`.
    pub fn containments(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if i != j && *cell == WitnessCell::Contained {
                    out.push((self.rows[i].clone(), self.columns[j].clone()));
                }
            }
        }
        out
    }

    /// Plain-text rendering in the same orientation.
    pub fn render(&self) -> String {
        let text = |c: &WitnessCell| match c {
            WitnessCell::Contained => "✓".to_owned(),
            WitnessCell::Witness(w) => w.clone(),
        };
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(self.rows.len() + 1);
        let mut head = vec![String::new()];
        head.extend(self.columns.iter().map(|c| format!("st({c})")));
        grid.push(head);
        for (r, row) in self.rows.iter().zip(&self.cells) {
            let mut line = vec![format!("lk({r})")];
            line.extend(row.iter().map(text));
            grid.push(line);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|j| grid.iter().map(|l| l[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in grid {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteIndexReport {
    pub finite_index: bool,
    pub witness_table: WitnessTable,
}

/// Checks `lk(u) ⊆ st(w) ⇒ u = w` pair by pair, recording a witness for every
/// failed containment.
pub fn finite_index_report(g: &Graph) -> FiniteIndexReport {
    let labels = g.labels().to_vec();
    let links: Vec<VertexSet> = labels
        .iter()
        .map(|v| g.link(v).expect("own vertex"))
        .collect();
    let stars: Vec<VertexSet> = labels
        .iter()
        .map(|v| g.star(v).expect("own vertex"))
        .collect();
    let cells: Vec<Vec<WitnessCell>> = links
        .iter()
        .map(|lk| {
            stars
                .iter()
                .map(|st| match lk.iter().find(|x| !st.contains(x)) {
                    Some(x) => WitnessCell::Witness(x.to_owned()),
                    None => WitnessCell::Contained,
                })
                .collect()
        })
        .collect();
    let witness_table = WitnessTable {
        rows: labels.clone(),
        columns: labels,
        cells,
    };
    FiniteIndexReport {
        finite_index: witness_table.containments().is_empty(),
        witness_table,
    }
}
