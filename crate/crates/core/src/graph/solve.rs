//! Exact clique and chromatic numbers for small graphs.
//!
//! Both solvers are branch and bound. The clique search bounds each branch
//! with a greedy coloring of the candidate set; the coloring search is
//! DSATUR seeded with a maximum clique, so it stops as soon as it meets
//! the ω lower bound.

use super::{BitSet, Coloring, Graph};
use crate::error::{Error, Result};

/// Largest vertex count the exact solvers accept unless told otherwise.
pub const DEFAULT_SOLVER_LIMIT: usize = 64;

fn check_limit(g: &Graph, limit: usize, what: &str) -> Result<()> {
    if g.n() > limit {
        Err(Error::Resource(format!(
            "{what} solver limited to {limit} vertices, graph has {}",
            g.n()
        )))
    } else {
        Ok(())
    }
}

/// ω(G) with a witness clique (sorted).
pub fn clique_number_exact(g: &Graph) -> Result<(usize, Vec<usize>)> {
    clique_number_with_limit(g, DEFAULT_SOLVER_LIMIT)
}

pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<(usize, Vec<usize>)> {
    check_limit(g, limit, "clique")?;
    let mut best = greedy_clique(g);
    let mut current = Vec::new();
    expand_clique(g, &mut current, BitSet::full(g.n()), &mut best);
    best.sort_unstable();
    assert!(g.is_clique(&best)?, "clique solver returned a non-clique");
    Ok((best.len(), best))
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best = Vec::new();
    for &start in &order {
        let mut clique = vec![start];
        let mut cand = g.neighbor_set(start).clone();
        while let Some(v) = cand
            .iter()
            .max_by_key(|&v| g.neighbor_set(v).intersection(&cand).count())
        {
            clique.push(v);
            cand.intersect_with(g.neighbor_set(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Greedy sequential coloring of `cand`; returns vertices grouped by color
/// and, for each, the number of colors used up to and including it.
fn color_sort(g: &Graph, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.clone();
    let mut order = Vec::with_capacity(cand.count());
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(g.neighbor_set(v));
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn expand_clique(g: &Graph, current: &mut Vec<usize>, mut cand: BitSet, best: &mut Vec<usize>) {
    let (order, bounds) = color_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next = cand.intersection(g.neighbor_set(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(g, current, next, best);
        }
        current.pop();
        cand.remove(v);
    }
}

/// χ(G) with a minimum proper coloring.
pub fn chromatic_number_exact(g: &Graph) -> Result<(usize, Coloring)> {
    chromatic_number_with_limit(g, DEFAULT_SOLVER_LIMIT)
}

pub fn chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<(usize, Coloring)> {
    check_limit(g, limit, "coloring")?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring { colors: vec![] }));
    }
    let (omega, clique) = clique_number_with_limit(g, limit)?;

    let mut search = Dsatur::new(g);
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c);
    }
    let mut best = greedy_dsatur(g, &clique);
    let mut best_k = count_colors(&best);
    if best_k > omega {
        search.branch(omega, &mut best, &mut best_k);
    }
    let coloring = Coloring { colors: best };
    assert!(
        coloring.is_proper(g),
        "coloring solver returned an improper coloring"
    );
    assert_eq!(coloring.color_count(), best_k);
    Ok((best_k, coloring))
}

fn count_colors(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&m| m + 1)
}

const UNCOLORED: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    // neighbor_colors[v][c] = number of neighbors of v with color c
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    used: usize,
    colored: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Dsatur {
            g,
            colors: vec![UNCOLORED; n],
            neighbor_colors: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            used: 0,
            colored: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.colored += 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.neighbor_colors[u][c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        self.colored -= 1;
        for u in self.g.neighbors(v) {
            let slot = &mut self.neighbor_colors[u][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn branch(&mut self, lower: usize, best: &mut Vec<usize>, best_k: &mut usize) {
        self.used = count_colors(
            &self
                .colors
                .iter()
                .copied()
                .filter(|&c| c != UNCOLORED)
                .collect::<Vec<_>>(),
        );
        self.recurse(lower, best, best_k);
    }

    fn recurse(&mut self, lower: usize, best: &mut Vec<usize>, best_k: &mut usize) {
        if *best_k == lower {
            return;
        }
        let Some(v) = self.pick() else {
            if self.used < *best_k {
                *best_k = self.used;
                *best = self.colors.clone();
            }
            return;
        };
        // colors 0..used are existing; `used` opens a new one
        let max_color = (self.used + 1).min(*best_k - 1);
        for c in 0..max_color {
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            let prev_used = self.used;
            self.used = self.used.max(c + 1);
            self.assign(v, c);
            self.recurse(lower, best, best_k);
            self.unassign(v);
            self.used = prev_used;
            if *best_k == lower {
                return;
            }
        }
    }
}

fn greedy_dsatur(g: &Graph, seed: &[usize]) -> Vec<usize> {
    let mut s = Dsatur::new(g);
    for (c, &v) in seed.iter().enumerate() {
        s.assign(v, c);
    }
    while let Some(v) = s.pick() {
        let c = (0..).find(|&c| s.neighbor_colors[v][c] == 0).unwrap();
        s.assign(v, c);
    }
    s.colors
}

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting), each sorted,
/// listed in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, BitSet::full(g.n()), BitSet::new(g.n()), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| g.neighbor_set(u).intersection(&p).count())
        .expect("p is non-empty");
    let mut branch = p.clone();
    branch.difference_with(g.neighbor_set(pivot));
    for v in branch.iter().collect::<Vec<_>>() {
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.intersection(g.neighbor_set(v)),
            x.intersection(g.neighbor_set(v)),
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}
