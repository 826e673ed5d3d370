//! Brute-force oracles. These work on plain adjacency matrices and never call
//! into the library's analysis or search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use raag_out::Graph;
use rand::Rng;

pub type Matrix = Vec<Vec<bool>>;
pub type Set = BTreeSet<usize>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|w| g.is_adjacent(u, w)).collect())
        .collect()
}

/// Graph on `0..n` whose `k`-th pair in graph6 order is an edge iff bit `k`
/// of `mask` is set.
pub fn mask_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_index_edges(n, &edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.random();
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, &edges).unwrap()
}

/// Number of adjacency-preserving bijections, by backtracking over partial
/// maps.
pub fn brute_aut_count(a: &Matrix) -> u64 {
    let degree: Vec<usize> = a.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    fn extend(a: &Matrix, degree: &[usize], image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let v = image.len();
        if v == a.len() {
            return 1;
        }
        let mut total = 0;
        for x in 0..a.len() {
            if used[x] || degree[x] != degree[v] || (0..v).any(|u| a[u][v] != a[image[u]][x]) {
                continue;
            }
            used[x] = true;
            image.push(x);
            total += extend(a, degree, image, used);
            image.pop();
            used[x] = false;
        }
        total
    }
    extend(a, &degree, &mut Vec::new(), &mut vec![false; a.len()])
}

pub fn star(a: &Matrix, v: usize) -> Set {
    (0..a.len()).filter(|&w| w == v || a[v][w]).collect()
}

pub fn link(a: &Matrix, v: usize) -> Set {
    (0..a.len()).filter(|&w| a[v][w]).collect()
}

/// Components of the graph minus `removed`.
pub fn components_without(a: &Matrix, removed: &Set) -> Vec<Set> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || removed.contains(&s) {
            continue;
        }
        let mut comp = Set::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            comp.insert(x);
            for y in 0..n {
                if a[x][y] && !seen[y] && !removed.contains(&y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Support graph of `v` straight from the definition: nodes are the
/// components of `Γ - st(v)`, and `{A, B}` is an edge when `A` appears
/// literally in the component list of `Γ - st(b)` for some `b ∈ B`, or the
/// other way round.
pub fn brute_support_graph(a: &Matrix, v: usize) -> (Vec<Set>, BTreeSet<(Set, Set)>) {
    let nodes = components_without(a, &star(a, v));
    let minus_star: Vec<Vec<Set>> = (0..a.len())
        .map(|b| components_without(a, &star(a, b)))
        .collect();
    let appears = |x: &Set, y: &Set| y.iter().any(|&b| minus_star[b].contains(x));
    let mut edges = BTreeSet::new();
    for (i, x) in nodes.iter().enumerate() {
        for y in &nodes[i + 1..] {
            if appears(x, y) || appears(y, x) {
                let (p, q) = if x < y { (x, y) } else { (y, x) };
                edges.insert((p.clone(), q.clone()));
            }
        }
    }
    (nodes, edges)
}

/// Whether a simple graph on `nodes` vertices with these edges is acyclic,
/// by repeatedly deleting vertices of degree at most one.
pub fn is_acyclic(nodes: usize, edges: &[(usize, usize)]) -> bool {
    let mut alive: Vec<bool> = vec![true; nodes];
    let mut live_edges: Vec<(usize, usize)> = edges.to_vec();
    loop {
        let deg =
            |v: usize, es: &[(usize, usize)]| es.iter().filter(|&&(p, q)| p == v || q == v).count();
        let Some(leaf) = (0..nodes).find(|&v| alive[v] && deg(v, &live_edges) <= 1) else {
            break;
        };
        alive[leaf] = false;
        live_edges.retain(|&(p, q)| p != leaf && q != leaf);
    }
    live_edges.is_empty()
}

/// Ordered pairs `(u, w)`, `u ≠ w`, with `lk(u) ⊆ st(w)`.
pub fn brute_transvections(a: &Matrix) -> Vec<(usize, usize)> {
    let n = a.len();
    let mut out = Vec::new();
    for u in 0..n {
        for w in 0..n {
            if u != w && link(a, u).is_subset(&star(a, w)) {
                out.push((u, w));
            }
        }
    }
    out
}

/// Whether `(v, w)` is a SIL-pair, from the definition.
pub fn brute_sil(a: &Matrix, v: usize, w: usize) -> bool {
    if v == w || a[v][w] {
        return false;
    }
    let common: Set = link(a, v).intersection(&link(a, w)).copied().collect();
    components_without(a, &common)
        .iter()
        .any(|c| !c.contains(&v) && !c.contains(&w))
}

/// Number of isomorphism classes of graphs on `k` vertices, by marking the
/// orbit of every unmarked adjacency mask under all `k!` relabelings.
pub fn orbit_class_count(k: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (1..k).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let index = |i: usize, j: usize| {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        j * (j - 1) / 2 + i
    };
    let perms = permutations(k);
    // For each permutation, where each pair bit goes.
    let moves: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect();
    let total = 1usize << pairs.len();
    let mut marked = vec![false; total];
    let mut classes = 0;
    for mask in 0..total {
        if marked[mask] {
            continue;
        }
        classes += 1;
        for mv in &moves {
            let mut image = 0usize;
            for (bit, &to) in mv.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    image |= 1 << to;
                }
            }
            marked[image] = true;
        }
    }
    classes
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for x in 0..k {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

/// graph6 encoder written from the format description: `N(n)` then the
/// upper triangle column by column, six bits per byte, offset 63.
pub fn oracle_graph6(n: usize, edges: &BTreeSet<(usize, usize)>) -> String {
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(edges.contains(&(i, j)));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (p, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - p);
            }
        }
        out.push(63 + byte);
    }
    String::from_utf8(out).unwrap()
}

/// Edges as `(min, max)` index pairs.
pub fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().into_iter().collect()
}
