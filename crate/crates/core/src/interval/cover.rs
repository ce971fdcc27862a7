//! Interval covers: `E(G) = E(I_1) ∩ … ∩ E(I_ℓ)` certificates for `box(G) <= ℓ`.

use serde::{Deserialize, Serialize};

use super::{IntervalRep, RepJson};
use crate::error::{defect, input, Result};
use crate::graph::io::GraphJson;
use crate::graph::{BitSet, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCover {
    pub graph: Graph,
    pub reps: Vec<IntervalRep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The cover has no representations but the graph has vertices.
    EmptyCover,
    /// Representation `rep` is defined on the wrong number of vertices.
    VertexCount { rep: usize, n: usize },
    /// Representation `rep` separates an edge of the claimed graph.
    MissingEdge { rep: usize, edge: (usize, usize) },
    /// A non-edge of the claimed graph is an edge in every representation.
    UncoveredNonEdge { pair: (usize, usize) },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::EmptyCover => write!(f, "cover has no representations"),
            Violation::VertexCount { rep, n } => write!(f, "rep {rep} has {n} vertices"),
            Violation::MissingEdge { rep, edge: (u, v) } => {
                write!(f, "rep {rep} misses edge ({u},{v})")
            }
            Violation::UncoveredNonEdge { pair: (u, v) } => {
                write!(f, "non-edge ({u},{v}) is present in every rep")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub violations: Vec<Violation>,
}

impl CoverReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Roberts check: every realized graph contains `E(G)` and their edge
/// intersection is exactly `E(G)`.
pub fn verify_cover(cover: &IntervalCover) -> CoverReport {
    let g = &cover.graph;
    let n = g.n();
    let mut violations = Vec::new();
    if cover.reps.is_empty() && n > 0 {
        violations.push(Violation::EmptyCover);
    }
    for (i, rep) in cover.reps.iter().enumerate() {
        if rep.n() != n {
            violations.push(Violation::VertexCount { rep: i, n: rep.n() });
        }
    }
    if !violations.is_empty() {
        return CoverReport { violations };
    }

    // common[u] = vertices adjacent to u in every realized graph
    let mut common: Vec<BitSet> = (0..n).map(|_| BitSet::full(n)).collect();
    for (i, rep) in cover.reps.iter().enumerate() {
        let h = rep.graph();
        for (u, v) in g.edges() {
            if !h.has_edge(u, v) {
                violations.push(Violation::MissingEdge {
                    rep: i,
                    edge: (u, v),
                });
            }
        }
        for (u, c) in common.iter_mut().enumerate() {
            c.intersect_with(h.neighbor_set(u));
        }
    }
    for (u, v) in g.non_edges() {
        if common[u].contains(v) {
            violations.push(Violation::UncoveredNonEdge { pair: (u, v) });
        }
    }
    CoverReport { violations }
}

impl IntervalCover {
    /// Builds a cover and refuses to return it unless it verifies.
    pub fn verified(graph: Graph, reps: Vec<IntervalRep>) -> Result<IntervalCover> {
        let cover = IntervalCover { graph, reps };
        let report = verify_cover(&cover);
        match report.violations.first() {
            None => Ok(cover),
            Some(v) => defect(format!("cover failed verification: {v}")),
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Same cover with old vertex `v` renamed `new_label[v]` everywhere.
    pub fn relabeled(&self, new_label: &[usize]) -> Result<IntervalCover> {
        Ok(IntervalCover {
            graph: self.graph.relabeled(new_label)?,
            reps: self
                .reps
                .iter()
                .map(|r| r.relabeled(new_label))
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CoverJson::from(self)).expect("cover serializes")
    }

    pub fn from_json(s: &str) -> Result<IntervalCover> {
        match serde_json::from_str::<CoverJson>(s) {
            Ok(j) => IntervalCover::try_from(&j),
            Err(e) => input(format!("bad cover JSON: {e}")),
        }
    }
}

/// Wire form: `{"graph": <graph>, "reps": [<rep>, …]}`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CoverJson {
    pub graph: GraphJson,
    pub reps: Vec<RepJson>,
}

impl From<&IntervalCover> for CoverJson {
    fn from(c: &IntervalCover) -> Self {
        CoverJson {
            graph: GraphJson::from(&c.graph),
            reps: c.reps.iter().map(RepJson::from).collect(),
        }
    }
}

impl TryFrom<&CoverJson> for IntervalCover {
    type Error = crate::Error;

    fn try_from(j: &CoverJson) -> Result<IntervalCover> {
        Ok(IntervalCover {
            graph: Graph::try_from(&j.graph)?,
            reps: j
                .reps
                .iter()
                .map(IntervalRep::try_from)
                .collect::<Result<_>>()?,
        })
    }
}
