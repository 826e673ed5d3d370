//! Individualization-refinement search.
//!
//! An ordered partition of the vertices is refined to the coarsest equitable
//! partition below it; a non-discrete partition is extended by
//! individualizing each vertex of its first non-singleton cell in turn. Every
//! discrete leaf orders the vertices and so yields a relabeled adjacency
//! matrix. Refinement only looks at cell structure and neighbour counts, so
//! an isomorphism of graphs maps search trees onto search trees. Two
//! consequences are used here:
//!
//! * the minimum leaf matrix is an isomorphism invariant (canonical form);
//! * leaves with equal matrices differ by an automorphism, and children of a
//!   node that an already known automorphism (fixing the node's path) swaps
//!   have identical subtrees, so only one child per orbit is explored.

use num_bigint::BigUint;

use crate::graph::Graph;

/// Adjacency rows as packed bit words.
pub(crate) struct Dense {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Dense {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.order();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for (u, w) in g.edges() {
            rows[u * words + w / 64] |= 1 << (w % 64);
            rows[w * words + u / 64] |= 1 << (u % 64);
        }
        Self { n, words, rows }
    }

    /// Graph on `n` vertices whose `k`-th upper-triangle pair in graph6
    /// order (`(0,1), (0,2), (1,2), (0,3), ...`) is an edge when bit `k` of
    /// `mask` is set.
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                    rows[j * words + i / 64] |= 1 << (i % 64);
                }
                k += 1;
            }
        }
        Self { n, words, rows }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn count(&self, v: usize, mask: &[u64]) -> u32 {
        self.row(v)
            .iter()
            .zip(mask)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn mask(&self, cell: &[usize], out: &mut [u64]) {
        out.fill(0);
        for &v in cell {
            out[v / 64] |= 1 << (v % 64);
        }
    }

    /// Upper triangle of the matrix relabeled by `lab` (position `p` holds
    /// vertex `lab[p]`), in graph6 bit order, packed MSB first so that
    /// comparing the word vectors compares the bit strings.
    fn code(&self, lab: &[usize]) -> Vec<u64> {
        let bits = self.n * self.n.saturating_sub(1) / 2;
        let mut out = vec![0u64; bits.div_ceil(64)];
        let mut k = 0;
        for j in 1..self.n {
            let row = self.row(lab[j]);
            for &vi in &lab[..j] {
                if row[vi / 64] >> (vi % 64) & 1 == 1 {
                    out[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        out
    }
}

pub(crate) type Cells = Vec<Vec<usize>>;

/// Refines `cells` to the coarsest equitable partition finer than it.
pub(crate) fn refine(d: &Dense, cells: &mut Cells) {
    let mut mask = vec![0u64; d.words];
    let mut keyed: Vec<(u32, usize)> = Vec::with_capacity(d.n);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            d.mask(&cells[s], &mut mask);
            let mut i = 0;
            while i < cells.len() {
                if cells[i].len() == 1 {
                    i += 1;
                    continue;
                }
                keyed.clear();
                keyed.extend(cells[i].iter().map(|&v| (d.count(v, &mask), v)));
                let first = keyed[0].0;
                if keyed.iter().all(|&(c, _)| c == first) {
                    i += 1;
                    continue;
                }
                keyed.sort_by_key(|&(c, _)| c);
                let mut fragments: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for &(c, v) in &keyed {
                    if last != Some(c) {
                        fragments.push(Vec::new());
                        last = Some(c);
                    }
                    fragments.last_mut().expect("pushed above").push(v);
                }
                let k = fragments.len();
                cells.splice(i..=i, fragments);
                changed = true;
                i += k;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

/// Cell sizes followed by the quotient matrix of an equitable partition.
fn invariant(d: &Dense, cells: &Cells) -> Vec<u32> {
    let mut out: Vec<u32> = cells.iter().map(|c| c.len() as u32).collect();
    let mut mask = vec![0u64; d.words];
    for target in cells {
        d.mask(target, &mut mask);
        out.extend(cells.iter().map(|c| d.count(c[0], &mask)));
    }
    out
}

fn target_cell(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

fn individualize(cells: &Cells, t: usize, v: usize) -> Cells {
    let mut next = Vec::with_capacity(cells.len() + 1);
    next.extend(cells[..t].iter().cloned());
    next.push(vec![v]);
    next.push(cells[t].iter().copied().filter(|&u| u != v).collect());
    next.extend(cells[t + 1..].iter().cloned());
    next
}

fn leaf_labeling(cells: &Cells) -> Vec<usize> {
    cells.iter().map(|c| c[0]).collect()
}

fn root(d: &Dense) -> Cells {
    let mut cells = if d.n == 0 {
        Vec::new()
    } else {
        vec![(0..d.n).collect()]
    };
    refine(d, &mut cells);
    cells
}

/// Union-find over vertex indices, for orbits of a set of permutations.
struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn absorb(&mut self, gen: &[usize]) {
        for (i, &j) in gen.iter().enumerate() {
            self.union(i, j);
        }
    }
}

/// Maps leaf `from` onto leaf `to` position by position.
fn leaf_map(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

pub(crate) struct Canonical {
    /// Position `p` of the canonical order holds vertex `labeling[p]`.
    pub labeling: Vec<usize>,
    pub code: Vec<u64>,
    pub n: usize,
}

impl Canonical {
    pub(crate) fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        let total = self.n * self.n.saturating_sub(1) / 2;
        (0..total).map(move |k| self.code[k / 64] >> (63 - k % 64) & 1 == 1)
    }
}

/// Canonical labeling: the leaf with the smallest matrix over the whole
/// search tree. Automorphisms found along the way (leaves with equal
/// matrices) prune siblings.
pub(crate) fn canonical(d: &Dense) -> Canonical {
    struct State<'a> {
        d: &'a Dense,
        best: Option<(Vec<u64>, Vec<usize>)>,
        gens: Vec<Vec<usize>>,
        path: Vec<usize>,
    }

    fn dfs(st: &mut State<'_>, cells: Cells) {
        let Some(t) = target_cell(&cells) else {
            let lab = leaf_labeling(&cells);
            let code = st.d.code(&lab);
            match &st.best {
                Some((best, best_lab)) if *best == code => {
                    let gamma = leaf_map(best_lab, &lab);
                    if gamma.iter().enumerate().any(|(i, &j)| i != j) {
                        st.gens.push(gamma);
                    }
                }
                Some((best, _)) if *best < code => {}
                _ => st.best = Some((code, lab)),
            }
            return;
        };
        let cell = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &cell {
            // Orbits under the known automorphisms that fix the current path.
            let mut orbits = Orbits::new(st.d.n);
            for g in &st.gens {
                if st.path.iter().all(|&p| g[p] == p) {
                    orbits.absorb(g);
                }
            }
            let rw = orbits.find(w);
            if tried.iter().any(|&u| orbits.find(u) == rw) {
                continue;
            }
            tried.push(w);
            let mut next = individualize(&cells, t, w);
            refine(st.d, &mut next);
            st.path.push(w);
            dfs(st, next);
            st.path.pop();
        }
    }

    let mut st = State {
        d,
        best: None,
        gens: Vec::new(),
        path: Vec::new(),
    };
    dfs(&mut st, root(d));
    let (code, labeling) = st.best.unwrap_or_default();
    Canonical {
        labeling,
        code,
        n: d.n,
    }
}

pub(crate) struct Automorphisms {
    pub generators: Vec<Vec<usize>>,
    pub order: BigUint,
}

/// Generators and order of the automorphism group, via the stabilizer chain
/// along the first path of the search tree: the order is the product over
/// levels of the orbit length of the individualized vertex under the
/// pointwise stabilizer of the earlier ones.
pub(crate) fn automorphisms(d: &Dense) -> Automorphisms {
    let mut nodes: Vec<(Cells, usize)> = Vec::new();
    let mut invariants = Vec::new();
    let mut cells = root(d);
    invariants.push(invariant(d, &cells));
    while let Some(t) = target_cell(&cells) {
        let v = cells[t][0];
        let mut next = individualize(&cells, t, v);
        refine(d, &mut next);
        invariants.push(invariant(d, &next));
        nodes.push((cells, t));
        cells = next;
    }
    let first_lab = leaf_labeling(&cells);
    let first_code = d.code(&first_lab);

    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut order = BigUint::from(1u32);
    for (level, (cells, t)) in nodes.iter().enumerate().rev() {
        let cell = &cells[*t];
        let v = cell[0];
        let mut orbits = Orbits::new(d.n);
        for g in &generators {
            orbits.absorb(g);
        }
        for &w in &cell[1..] {
            if orbits.find(w) == orbits.find(v) {
                continue;
            }
            let probe = Probe {
                d,
                invariants: &invariants,
                target: &first_code,
            };
            if let Some(lab) = probe.search(individualize(cells, *t, w), level + 1) {
                let gamma = leaf_map(&first_lab, &lab);
                orbits.absorb(&gamma);
                generators.push(gamma);
            }
        }
        let root_v = orbits.find(v);
        let orbit = cell.iter().filter(|&&w| orbits.find(w) == root_v).count();
        order *= BigUint::from(orbit);
    }
    Automorphisms { generators, order }
}

/// Looks below a node for a leaf whose matrix equals the first leaf's,
/// pruning nodes whose partition invariant differs from the first path's.
struct Probe<'a> {
    d: &'a Dense,
    invariants: &'a [Vec<u32>],
    target: &'a [u64],
}

impl Probe<'_> {
    fn search(&self, mut cells: Cells, depth: usize) -> Option<Vec<usize>> {
        refine(self.d, &mut cells);
        if invariant(self.d, &cells) != self.invariants[depth] {
            return None;
        }
        let Some(t) = target_cell(&cells) else {
            let lab = leaf_labeling(&cells);
            return (self.d.code(&lab) == self.target).then_some(lab);
        };
        cells[t]
            .iter()
            .find_map(|&u| self.search(individualize(&cells, t, u), depth + 1))
    }
}
