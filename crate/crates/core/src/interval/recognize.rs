//! Interval graph recognition with certificates.
//!
//! A graph is interval iff it is chordal and has no asteroidal triple.
//! Chordality is tested on a Lex-BFS order; a failure is turned into an
//! explicit chordless cycle. For chordal AT-free graphs the maximal cliques
//! are put in consecutive order and each vertex gets the span of the
//! cliques containing it.

use std::collections::VecDeque;

use super::{int, Interval, IntervalRep};
use crate::graph::{BitSet, Graph};

/// Cliques up to this count are ordered by exhaustive search.
const BRUTE_FORCE_CLIQUES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// Induced cycle of length at least 4, listed in cycle order.
    ChordlessCycle(Vec<usize>),
    /// Three pairwise non-adjacent vertices, each pair joined by a path
    /// avoiding the closed neighborhood of the third.
    AsteroidalTriple([usize; 3]),
}

impl Obstruction {
    pub fn kind(&self) -> &'static str {
        match self {
            Obstruction::ChordlessCycle(_) => "chordless-cycle",
            Obstruction::AsteroidalTriple(_) => "asteroidal-triple",
        }
    }

    pub fn witness(&self) -> Vec<usize> {
        match self {
            Obstruction::ChordlessCycle(c) => c.clone(),
            Obstruction::AsteroidalTriple(t) => t.to_vec(),
        }
    }

    /// Re-checks the witness against `g` from the definitions.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Obstruction::ChordlessCycle(c) => is_chordless_cycle(g, c),
            Obstruction::AsteroidalTriple([a, b, c]) => {
                let (a, b, c) = (*a, *b, *c);
                let distinct = a != b && b != c && a != c && a.max(b).max(c) < g.n();
                distinct
                    && !g.has_edge(a, b)
                    && !g.has_edge(b, c)
                    && !g.has_edge(a, c)
                    && connected_avoiding(g, a, b, c)
                    && connected_avoiding(g, a, c, b)
                    && connected_avoiding(g, b, c, a)
            }
        }
    }
}

fn is_chordless_cycle(g: &Graph, c: &[usize]) -> bool {
    let k = c.len();
    if k < 4 || c.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = BitSet::new(g.n());
    for &v in c {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(c[i], c[j]) == consecutive
        })
    })
}

/// Is there an `x`–`y` path in `G - N[z]`?
fn connected_avoiding(g: &Graph, x: usize, y: usize, z: usize) -> bool {
    let mut blocked = g.neighbor_set(z).clone();
    blocked.insert(z);
    if blocked.contains(x) || blocked.contains(y) {
        return false;
    }
    bfs_path(g, x, y, &blocked).is_some()
}

/// Shortest `from`–`to` path avoiding `blocked`, endpoints included.
fn bfs_path(g: &Graph, from: usize, to: usize, blocked: &BitSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            if parent[w] == usize::MAX && !blocked.contains(w) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Interval(IntervalRep),
    NotInterval(Obstruction),
}

impl Recognition {
    pub fn is_interval(&self) -> bool {
        matches!(self, Recognition::Interval(_))
    }

    pub fn rep(&self) -> Option<&IntervalRep> {
        match self {
            Recognition::Interval(r) => Some(r),
            Recognition::NotInterval(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            Recognition::Interval(_) => None,
            Recognition::NotInterval(o) => Some(o),
        }
    }
}

/// Lex-BFS visit order (ties broken by smallest vertex id).
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let mut classes: Vec<Vec<usize>> = if g.n() == 0 {
        vec![]
    } else {
        vec![(0..g.n()).collect()]
    };
    let mut order = Vec::with_capacity(g.n());
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(v);
        let nv = g.neighbor_set(v);
        let mut next = Vec::with_capacity(classes.len() * 2);
        for class in classes {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                class.into_iter().partition(|&u| nv.contains(u));
            if !inside.is_empty() {
                next.push(inside);
            }
            if !outside.is_empty() {
                next.push(outside);
            }
        }
        classes = next;
    }
    order
}

pub fn is_interval_graph(g: &Graph) -> Recognition {
    let order = lex_bfs(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    // Vertices visited before v are eliminated after it; the reverse
    // Lex-BFS order is a perfect elimination order iff g is chordal.
    let mut cliques: Vec<BitSet> = Vec::with_capacity(g.n());
    for &v in &order {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .filter(|&u| position[u] < position[v])
            .collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| position[u]) {
            if let Some(&w) = earlier
                .iter()
                .find(|&&w| w != parent && !g.has_edge(w, parent))
            {
                let cycle = chordless_cycle(g, v, parent, w);
                debug_assert!(is_chordless_cycle(g, &cycle));
                return Recognition::NotInterval(Obstruction::ChordlessCycle(cycle));
            }
        }
        let mut c = BitSet::from_iter(g.n(), earlier);
        c.insert(v);
        cliques.push(c);
    }

    if let Some(t) = find_asteroidal_triple(g) {
        return Recognition::NotInterval(Obstruction::AsteroidalTriple(t));
    }

    let maximal = maximal_cliques_of_peo(cliques);
    let ordered = if maximal.len() <= BRUTE_FORCE_CLIQUES {
        order_cliques_by_search(g.n(), &maximal)
    } else {
        order_cliques_by_orientation(g, &maximal)
    }
    .expect("chordal AT-free graph has a consecutive clique ordering");
    let rep = rep_from_clique_order(g.n(), &ordered);
    assert!(
        rep.graph() == *g,
        "clique-path representation does not realize the input graph"
    );
    Recognition::Interval(rep)
}

/// Chordless cycle through `v` whose neighbors on the cycle are the
/// non-adjacent pair `a`, `b` ⊆ N(v). Falls back to scanning every vertex
/// and neighbor pair if no such cycle exists through this particular `v`.
fn chordless_cycle(g: &Graph, v: usize, a: usize, b: usize) -> Vec<usize> {
    if let Some(c) = cycle_through(g, v, a, b) {
        return c;
    }
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = cycle_through(g, v, a, b) {
                        return c;
                    }
                }
            }
        }
    }
    unreachable!("non-chordal graph without a chordless cycle")
}

fn cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let mut blocked = g.neighbor_set(v).clone();
    blocked.insert(v);
    blocked.remove(a);
    blocked.remove(b);
    let path = bfs_path(g, a, b, &blocked)?;
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(normalize_cycle(cycle))
}

/// Rotates the smallest vertex to the front and walks toward its smaller
/// cycle neighbor.
fn normalize_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let start = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(start);
    if c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// First asteroidal triple `a < b < c` in lexicographic order.
fn find_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    const BLOCKED: u32 = u32::MAX;
    let n = g.n();
    // comp[z][x]: component of x in G - N[z]
    let comp: Vec<Vec<u32>> = (0..n)
        .map(|z| {
            let mut label = vec![BLOCKED; n];
            let mut free = BitSet::full(n);
            free.difference_with(g.neighbor_set(z));
            free.remove(z);
            let mut next = 0;
            for s in 0..n {
                if !free.contains(s) || label[s] != BLOCKED {
                    continue;
                }
                label[s] = next;
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for w in g.neighbors(u) {
                        if free.contains(w) && label[w] == BLOCKED {
                            label[w] = next;
                            stack.push(w);
                        }
                    }
                }
                next += 1;
            }
            label
        })
        .collect();

    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if comp[a][b] == comp[a][c] && comp[b][a] == comp[b][c] && comp[c][a] == comp[c][b]
                {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Keeps the candidate cliques `{v} ∪ earlier(v)` that no other candidate
/// contains. Result is sorted by smallest member for determinism.
fn maximal_cliques_of_peo(mut cands: Vec<BitSet>) -> Vec<BitSet> {
    cands.sort_by_key(|c| std::cmp::Reverse(c.count()));
    let mut kept: Vec<BitSet> = Vec::new();
    for c in cands {
        if !kept.iter().any(|k| c.is_subset(k)) {
            kept.push(c);
        }
    }
    kept.sort_by_key(|c| c.iter().collect::<Vec<_>>());
    kept
}

/// Depth-first search for an order in which every vertex's cliques are
/// consecutive. A vertex is open once one of its cliques is placed and
/// closed once a placed clique misses it; reopening is a dead end.
fn order_cliques_by_search(n: usize, cliques: &[BitSet]) -> Option<Vec<BitSet>> {
    fn go(
        cliques: &[BitSet],
        used: &mut Vec<bool>,
        open: &BitSet,
        closed: &BitSet,
        order: &mut Vec<usize>,
    ) -> bool {
        if order.len() == cliques.len() {
            return true;
        }
        for i in 0..cliques.len() {
            if used[i] || cliques[i].intersects(closed) {
                continue;
            }
            let mut newly_closed = open.clone();
            newly_closed.difference_with(&cliques[i]);
            let mut closed2 = closed.clone();
            closed2.union_with(&newly_closed);
            used[i] = true;
            order.push(i);
            if go(cliques, used, &cliques[i], &closed2, order) {
                return true;
            }
            order.pop();
            used[i] = false;
        }
        false
    }
    let mut used = vec![false; cliques.len()];
    let mut order = Vec::with_capacity(cliques.len());
    if go(
        cliques,
        &mut used,
        &BitSet::new(n),
        &BitSet::new(n),
        &mut order,
    ) {
        Some(order.into_iter().map(|i| cliques[i].clone()).collect())
    } else {
        None
    }
}

/// Orders the maximal cliques through an interval order on the vertices.
///
/// The complement of an interval graph is a comparability graph; any
/// transitive orientation of it is an interval order because the graph
/// has no induced C4. Down-sets of an interval order form a chain, which
/// yields integer intervals, and each maximal clique sits at the largest
/// left endpoint among its members.
fn order_cliques_by_orientation(g: &Graph, cliques: &[BitSet]) -> Option<Vec<BitSet>> {
    let n = g.n();
    let succ = transitive_orientation(&g.complement())?;
    let mut down: Vec<BitSet> = vec![BitSet::new(n); n];
    for u in 0..n {
        for v in succ[u].iter() {
            down[v].insert(u);
        }
    }
    let mut chain: Vec<BitSet> = down.clone();
    chain.sort_by_key(BitSet::count);
    chain.dedup();
    if chain.windows(2).any(|w| !w[0].is_subset(&w[1])) {
        return None;
    }
    let left: Vec<usize> = (0..n)
        .map(|v| chain.iter().position(|d| *d == down[v]).unwrap())
        .collect();
    let mut keyed: Vec<(usize, BitSet)> = cliques
        .iter()
        .map(|c| (c.iter().map(|v| left[v]).max().unwrap_or(0), c.clone()))
        .collect();
    keyed.sort_by_key(|(k, _)| *k);
    Some(keyed.into_iter().map(|(_, c)| c).collect())
}

/// Golumbic's implication-class decomposition. Returns out-neighbor sets
/// of a transitive orientation, or `None` if `h` is not a comparability
/// graph.
fn transitive_orientation(h: &Graph) -> Option<Vec<BitSet>> {
    let n = h.n();
    let mut remaining: Vec<BitSet> = (0..n).map(|v| h.neighbor_set(v).clone()).collect();
    let mut succ = vec![BitSet::new(n); n];
    loop {
        let Some((a0, b0)) = (0..n).find_map(|u| remaining[u].first().map(|v| (u, v))) else {
            break;
        };
        // implication class of (a0, b0) in the remaining graph
        let mut class = vec![BitSet::new(n); n];
        class[a0].insert(b0);
        let mut stack = vec![(a0, b0)];
        let mut members = vec![(a0, b0)];
        while let Some((a, b)) = stack.pop() {
            for b2 in remaining[a].iter() {
                if b2 != b && !remaining[b].contains(b2) && !class[a].contains(b2) {
                    class[a].insert(b2);
                    stack.push((a, b2));
                    members.push((a, b2));
                }
            }
            for a2 in remaining[b].iter() {
                if a2 != a && !remaining[a].contains(a2) && !class[a2].contains(b) {
                    class[a2].insert(b);
                    stack.push((a2, b));
                    members.push((a2, b));
                }
            }
        }
        for &(a, b) in &members {
            if class[b].contains(a) {
                return None;
            }
        }
        for (a, b) in members {
            succ[a].insert(b);
            remaining[a].remove(b);
            remaining[b].remove(a);
        }
    }
    Some(succ)
}

/// Vertex ↦ [first, last] index of the cliques containing it.
fn rep_from_clique_order(n: usize, ordered: &[BitSet]) -> IntervalRep {
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    for (i, c) in ordered.iter().enumerate() {
        for v in c.iter() {
            first[v] = first[v].min(i);
            last[v] = i;
        }
    }
    IntervalRep::new(
        (0..n)
            .map(|v| Interval {
                lo: int(first[v] as i64),
                hi: int(last[v] as i64),
            })
            .collect(),
    )
}
