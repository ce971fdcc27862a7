//! Exhaustive boxicity oracle for small graphs.
//!
//! For a fixed ℓ, every non-edge is assigned a non-empty set of cover
//! indices in which it stays absent; cover `i` is then `G` plus every
//! non-edge not assigned to `i`. Non-edges are processed in order of their
//! larger endpoint, so after the last non-edge touching vertex `v` the
//! subgraph of every cover induced on `0..=v` is final. Interval graphs are
//! hereditary, so a non-interval prefix prunes the whole subtree.

use std::collections::HashMap;

use super::{is_interval_graph, IntervalCover};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits on the graphs the oracle accepts. A graph is admitted when it is
/// within either limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_non_edges: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 10,
            max_non_edges: 20,
        }
    }
}

impl Budget {
    /// Reads `BOXLAB_BUDGET` as `<max_vertices>` or
    /// `<max_vertices>,<max_non_edges>`; missing parts keep their defaults.
    pub fn from_env() -> Result<Budget> {
        match std::env::var("BOXLAB_BUDGET") {
            Ok(s) => Budget::parse(&s),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn parse(s: &str) -> Result<Budget> {
        let mut b = Budget::default();
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::Input(format!("bad budget {s:?}, expected V or V,E"));
        match parts.as_slice() {
            [v] => b.max_vertices = v.parse().map_err(|_| bad())?,
            [v, e] => {
                b.max_vertices = v.parse().map_err(|_| bad())?;
                b.max_non_edges = e.parse().map_err(|_| bad())?;
            }
            _ => return Err(bad()),
        }
        Ok(b)
    }

    pub fn admits(&self, g: &Graph) -> bool {
        g.n() <= self.max_vertices || g.non_edge_count() <= self.max_non_edges
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoxResult {
    /// `box(G)` with a verified cover of that size.
    Exact {
        boxicity: usize,
        cover: IntervalCover,
    },
    /// No cover with at most `max_l` representations exists.
    Exceeded { max_l: usize },
}

impl BoxResult {
    pub fn boxicity(&self) -> Option<usize> {
        match self {
            BoxResult::Exact { boxicity, .. } => Some(*boxicity),
            BoxResult::Exceeded { .. } => None,
        }
    }
}

/// Smallest ℓ ≤ `max_l` admitting an interval cover of `g`.
pub fn boxicity_exact(g: &Graph, max_l: usize, budget: &Budget) -> Result<BoxResult> {
    if !budget.admits(g) {
        return Err(Error::Resource(format!(
            "boxicity oracle budget is n <= {} or non-edges <= {}; graph has n = {}, {} non-edges",
            budget.max_vertices,
            budget.max_non_edges,
            g.n(),
            g.non_edge_count()
        )));
    }
    if g.n() == 0 {
        let cover = IntervalCover::verified(g.clone(), vec![])?;
        return Ok(BoxResult::Exact { boxicity: 0, cover });
    }
    let mut search = Search::new(g);
    for l in 1..=max_l {
        if let Some(graphs) = search.run(l) {
            let reps = graphs
                .iter()
                .map(|h| {
                    is_interval_graph(h).rep().cloned().ok_or_else(|| {
                        Error::ConstructionDefect("oracle cover is not interval".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let cover = IntervalCover::verified(g.clone(), reps)?;
            return Ok(BoxResult::Exact { boxicity: l, cover });
        }
    }
    Ok(BoxResult::Exceeded { max_l })
}

struct Search<'a> {
    g: &'a Graph,
    non_edges: Vec<(usize, usize)>,
    // checkpoint[k] = Some(v) if after assigning non_edges[..=k] the prefix
    // 0..=v is final
    checkpoint: Vec<Option<usize>>,
    memo: HashMap<Graph, bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let mut non_edges = g.non_edges();
        non_edges.sort_by_key(|&(u, v)| (v, u));
        let checkpoint = (0..non_edges.len())
            .map(|k| {
                let v = non_edges[k].1;
                match non_edges.get(k + 1) {
                    Some(&(_, w)) if w == v => None,
                    _ => Some(v),
                }
            })
            .collect();
        Search {
            g,
            non_edges,
            checkpoint,
            memo: HashMap::new(),
        }
    }

    fn interval(&mut self, h: &Graph) -> bool {
        if let Some(&b) = self.memo.get(h) {
            return b;
        }
        let b = is_interval_graph(h).is_interval();
        self.memo.insert(h.clone(), b);
        b
    }

    fn prefix_ok(&mut self, h: &Graph, v: usize) -> bool {
        let prefix: Vec<usize> = (0..=v).collect();
        let (sub, _) = h.induced_subgraph(&prefix).expect("prefix in range");
        self.interval(&sub)
    }

    fn run(&mut self, l: usize) -> Option<Vec<Graph>> {
        let full = Graph::complete(self.g.n());
        if self.non_edges.is_empty() {
            return Some(vec![full; l]);
        }
        let mut covers = vec![full; l];
        if self.assign(0, 0, &mut covers) {
            Some(covers)
        } else {
            None
        }
    }

    /// Assigns `non_edges[k..]`; cover indices `used..` are still untouched
    /// and interchangeable, so a new index is only ever the next unused one.
    fn assign(&mut self, k: usize, used: usize, covers: &mut Vec<Graph>) -> bool {
        if k == self.non_edges.len() {
            let hs = covers.clone();
            return hs.iter().all(|h| self.interval(h));
        }
        let (u, v) = self.non_edges[k];
        let l = covers.len();
        for mask in 1u32..(1 << l) {
            let highest = 31 - mask.leading_zeros() as usize;
            // fresh indices must be exactly used, used+1, … in order
            let fresh = mask >> used;
            if highest >= used && fresh & (fresh + 1) != 0 {
                continue;
            }
            let new_used = if highest >= used { highest + 1 } else { used };
            for i in (0..l).filter(|i| mask >> i & 1 == 1) {
                covers[i].remove_edge(u, v);
            }
            let mut ok = true;
            if let Some(p) = self.checkpoint[k] {
                for i in 0..l {
                    let h = covers[i].clone();
                    if !self.prefix_ok(&h, p) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && self.assign(k + 1, new_used, covers) {
                return true;
            }
            for i in (0..l).filter(|i| mask >> i & 1 == 1) {
                covers[i].add_edge(u, v);
            }
        }
        false
    }
}
