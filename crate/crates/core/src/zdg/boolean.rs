//! `Γ(ℤ_2^k)`: nonzero non-unit 0/1 vectors, adjacent iff their supports
//! are disjoint.

use crate::error::{defect, input, Result};
use crate::graph::{chromatic_number_exact, reduced_graph, Graph};
use crate::interval::IntervalCover;
use crate::join_cover::{cover_all_parts, JoinCoverPlan, PartCover};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanRingGraph {
    pub k: u32,
    /// Support bitmask of each vertex, ascending (`1 ..= 2^k − 2`).
    pub masks: Vec<u64>,
    pub graph: Graph,
}

impl BooleanRingGraph {
    /// Vertex of the unit vector `e_i`.
    pub fn unit(&self, i: u32) -> usize {
        (1usize << i) - 1
    }
}

fn build(k: u32) -> Result<BooleanRingGraph> {
    if k < 2 {
        return input(format!("k must be at least 2, got {k}"));
    }
    if k > 20 {
        return input(format!("k = {k} is too large"));
    }
    let masks: Vec<u64> = (1..(1u64 << k) - 1).collect();
    let graph = Graph::from_fn(masks.len(), |i, j| masks[i] & masks[j] == 0);
    Ok(BooleanRingGraph { k, masks, graph })
}

/// Builds `Γ(ℤ_2^k)` and checks that the unit vectors form a clique, that
/// `χ = k` (exact solver, so `k` is limited by the solver's vertex budget)
/// and that no two vertices share a neighborhood.
pub fn boolean_zdg(k: u32) -> Result<BooleanRingGraph> {
    let b = build(k)?;
    let units: Vec<usize> = (0..k).map(|i| b.unit(i)).collect();
    if !b.graph.is_clique(&units)? {
        return defect("unit vectors do not form a clique");
    }
    let (chi, _) = chromatic_number_exact(&b.graph)?;
    if chi != k as usize {
        return defect(format!("χ(Γ(ℤ_2^{k})) = {chi}"));
    }
    let (reduced, _) = reduced_graph(&b.graph);
    if reduced.n() != b.graph.n() {
        return defect("two vectors share a neighborhood");
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedRingBounds {
    /// `χ = k`; the lower bound `k ≤ box` is claimed, not certified.
    pub lower: usize,
    pub upper: usize,
    /// Verified cover with `upper` representations.
    pub cover: IntervalCover,
}

pub fn reduced_ring_bounds(k: u32) -> Result<ReducedRingBounds> {
    let b = build(k)?;
    let n = b.graph.n();
    let plan = JoinCoverPlan::new(b.graph, vec![PartCover::Complete(1); n], vec![])?;
    let cover = cover_all_parts(&plan)?;
    Ok(ReducedRingBounds {
        lower: k as usize,
        upper: n,
        cover,
    })
}
