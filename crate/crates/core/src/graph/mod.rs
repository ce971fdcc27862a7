//! Finite simple undirected graphs on dense vertex ids `0..n`.
//!
//! All relabelings between graphs are explicit index arrays. Nothing in this
//! crate renames vertices implicitly.

mod bitset;
pub mod io;
mod solve;

use std::collections::HashMap;

pub use bitset::BitSet;
pub use solve::{
    chromatic_number_exact, chromatic_number_with_limit, clique_number_exact,
    clique_number_with_limit, maximal_cliques, DEFAULT_SOLVER_LIMIT,
};

use crate::error::{input, Result};

/// Simple undirected graph. Adjacency rows are symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u},{v}) out of range for n={n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    /// Graph whose edge `uv` (u < v) is present iff `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                (u + 1..self.n)
                    .filter(move |&v| !self.adj[u].contains(v))
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    pub fn is_complete(&self) -> bool {
        self.non_edge_count() == 0
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(BitSet::is_empty)
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Graph on the same vertex count where old vertex `v` becomes
    /// `new_label[v]`. `new_label` must be a permutation of `0..n`.
    pub fn relabeled(&self, new_label: &[usize]) -> Result<Graph> {
        check_permutation(new_label, self.n)?;
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(new_label[u], new_label[v]);
        }
        Ok(g)
    }

    fn check_vertices(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&v| v >= self.n) {
            Some(v) => input(format!("vertex {v} out of range for n={}", self.n)),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `s`. New vertex `i` is old vertex `map[i]`;
    /// vertices keep the order they have in `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        self.check_vertices(s)?;
        let mut seen = BitSet::new(self.n);
        let mut map = Vec::with_capacity(s.len());
        for &v in s {
            if !seen.contains(v) {
                seen.insert(v);
                map.push(v);
            }
        }
        let sub = Graph::from_fn(map.len(), |i, j| self.has_edge(map[i], map[j]));
        Ok((sub, map))
    }

    pub fn is_clique(&self, s: &[usize]) -> Result<bool> {
        self.check_vertices(s)?;
        Ok(pairs(s).all(|(u, v)| u == v || self.has_edge(u, v)))
    }

    pub fn is_independent(&self, s: &[usize]) -> Result<bool> {
        self.check_vertices(s)?;
        Ok(pairs(s).all(|(u, v)| !self.has_edge(u, v)))
    }

    /// True iff `self` has every edge of `g` (same vertex count required).
    pub fn is_spanning_supergraph_of(&self, g: &Graph) -> Result<bool> {
        if self.n != g.n {
            return input(format!("vertex counts differ: {} vs {}", self.n, g.n));
        }
        Ok(g.adj.iter().zip(&self.adj).all(|(a, b)| a.is_subset(b)))
    }
}

fn pairs(s: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    s.iter()
        .enumerate()
        .flat_map(move |(i, &u)| s[i + 1..].iter().map(move |&v| (u, v)))
}

pub(crate) fn check_permutation(p: &[usize], n: usize) -> Result<()> {
    if p.len() != n {
        return input(format!("relabeling has length {}, expected {n}", p.len()));
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return input("relabeling is not a permutation");
        }
        seen[x] = true;
    }
    Ok(())
}

/// `E(H)` ⊇ `E(G)` check in free-function form.
pub fn is_spanning_supergraph(h: &Graph, g: &Graph) -> Result<bool> {
    h.is_spanning_supergraph_of(g)
}

/// Graph whose edges are present in every input graph.
pub fn edge_intersection(graphs: &[Graph]) -> Result<Graph> {
    let Some(first) = graphs.first() else {
        return input("edge intersection of an empty list");
    };
    let mut out = first.clone();
    for g in &graphs[1..] {
        if g.n != out.n {
            return input(format!("vertex counts differ: {} vs {}", out.n, g.n));
        }
        for (a, b) in out.adj.iter_mut().zip(&g.adj) {
            a.intersect_with(b);
        }
    }
    Ok(out)
}

/// Disjoint vertex blocks covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<VertexPartition> {
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return input(format!("block {i} is empty"));
            }
            for &v in b {
                if v >= n {
                    return input(format!("vertex {v} out of range for n={n}"));
                }
                if block_of[v] != usize::MAX {
                    return input(format!("vertex {v} appears in two blocks"));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return input(format!("vertex {v} is not covered"));
        }
        Ok(VertexPartition { blocks, block_of })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Vertex → color id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Vertex layout of a generalized join: block `i` holds the vertices of
/// part `i` at `offsets[i]..offsets[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinLayout {
    pub offsets: Vec<usize>,
    pub block_of: Vec<usize>,
}

impl JoinLayout {
    pub fn block(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }
}

/// `G[H_1, …, H_n]`: vertex `u_i` of `outer` is replaced by `parts[i]`, and
/// blocks `i`, `j` are completely joined iff `u_i u_j` is an edge of `outer`.
pub fn generalized_join(outer: &Graph, parts: &[Graph]) -> Result<(Graph, JoinLayout)> {
    if parts.len() != outer.n() {
        return input(format!(
            "generalized join needs {} parts, got {}",
            outer.n(),
            parts.len()
        ));
    }
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    let mut block_of = Vec::new();
    offsets.push(0);
    for (i, h) in parts.iter().enumerate() {
        block_of.extend(std::iter::repeat(i).take(h.n()));
        offsets.push(block_of.len());
    }
    let total = block_of.len();
    let mut g = Graph::empty(total);
    for (i, h) in parts.iter().enumerate() {
        for (u, v) in h.edges() {
            g.add_edge(offsets[i] + u, offsets[i] + v);
        }
    }
    for (i, j) in outer.edges() {
        for x in offsets[i]..offsets[i + 1] {
            for y in offsets[j]..offsets[j + 1] {
                g.add_edge(x, y);
            }
        }
    }
    Ok((g, JoinLayout { offsets, block_of }))
}

/// Quotient by equal open neighborhoods. Blocks are listed by smallest
/// member; reduced vertex `i` stands for block `i`.
pub fn reduced_graph(g: &Graph) -> (Graph, VertexPartition) {
    let mut class_of: HashMap<&BitSet, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        let id = *class_of.entry(g.neighbor_set(v)).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[id].push(v);
    }
    let reduced = Graph::from_fn(blocks.len(), |i, j| g.has_edge(blocks[i][0], blocks[j][0]));
    let partition = VertexPartition::new(g.n(), blocks).expect("classes partition the vertex set");
    (reduced, partition)
}
