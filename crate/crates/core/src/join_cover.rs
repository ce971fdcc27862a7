//! Interval covers of generalized joins `G[H_1, …, H_n]`.
//!
//! For part `i` and each representation `c` of a cover of `H_i`, one
//! interval supergraph of the join is built: part `i` keeps `c` squeezed
//! into `[0, 1/2]`, parts adjacent to `u_i` in `G` sit on `[0, 1]` and all
//! other parts on `[1, 2]`. Every part other than `i` becomes a clique and
//! all of them are pairwise joined; the only non-edges left are inside
//! part `i` (those of `c`) and between part `i` and the non-neighbors of
//! `u_i`. Summed over all parts this separates every non-edge of the join.

use crate::error::{defect, input, Error, Result};
use crate::graph::{generalized_join, maximal_cliques, reduced_graph, Graph, JoinLayout};
use crate::interval::{
    boxicity_exact, int, is_interval_graph, rat, verify_cover, BoxResult, Budget, Interval,
    IntervalCover, IntervalRep, Rational,
};

/// Cover of one part of a join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartCover {
    /// `K_size`; needs no certificate when skipped, one point otherwise.
    Complete(usize),
    Cover(IntervalCover),
}

impl PartCover {
    pub fn graph(&self) -> Graph {
        match self {
            PartCover::Complete(s) => Graph::complete(*s),
            PartCover::Cover(c) => c.graph.clone(),
        }
    }

    pub fn is_complete(&self) -> bool {
        match self {
            PartCover::Complete(_) => true,
            PartCover::Cover(c) => c.graph.is_complete(),
        }
    }

    /// Representations used when this part is not skipped.
    fn reps(&self) -> Vec<IntervalRep> {
        match self {
            PartCover::Complete(s) => vec![IntervalRep::new(vec![Interval::closed(0, 0); *s])],
            PartCover::Cover(c) => c.reps.clone(),
        }
    }

    /// Canonical 1-rep cover of an edgeless part: distinct points.
    pub fn edgeless(size: usize) -> PartCover {
        let rep = IntervalRep::new(
            (0..size)
                .map(|v| Interval::closed(v as i64, v as i64))
                .collect(),
        );
        PartCover::Cover(IntervalCover {
            graph: Graph::empty(size),
            reps: vec![rep],
        })
    }

    /// Cover of `h`: complete and edgeless parts short-circuit, interval
    /// parts take their recognized representation, and anything else goes
    /// to the exact oracle (so `h` must be within `budget`).
    pub fn for_graph(h: &Graph, budget: &Budget) -> Result<PartCover> {
        if h.is_complete() {
            return Ok(PartCover::Complete(h.n()));
        }
        if h.is_edgeless() {
            return Ok(PartCover::edgeless(h.n()));
        }
        if let Some(rep) = is_interval_graph(h).rep() {
            return Ok(PartCover::Cover(IntervalCover::verified(
                h.clone(),
                vec![rep.clone()],
            )?));
        }
        match boxicity_exact(h, h.n().max(1), budget)? {
            BoxResult::Exact { cover, .. } => Ok(PartCover::Cover(cover)),
            BoxResult::Exceeded { .. } => unreachable!("box(H) <= |V(H)|"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinCoverPlan {
    pub outer: Graph,
    pub part_covers: Vec<PartCover>,
    /// Complete parts on a clique of `outer` that get no representation.
    pub skip_set: Vec<usize>,
}

impl JoinCoverPlan {
    pub fn new(
        outer: Graph,
        part_covers: Vec<PartCover>,
        skip_set: Vec<usize>,
    ) -> Result<JoinCoverPlan> {
        if part_covers.len() != outer.n() {
            return input(format!(
                "outer graph has {} vertices but {} part covers were given",
                outer.n(),
                part_covers.len()
            ));
        }
        for (i, pc) in part_covers.iter().enumerate() {
            if let PartCover::Cover(c) = pc {
                if let Some(v) = verify_cover(c).violations.first() {
                    return input(format!("cover of part {i} does not verify: {v}"));
                }
            }
        }
        let mut skip = skip_set;
        skip.sort_unstable();
        skip.dedup();
        if let Some(&i) = skip.iter().find(|&&i| i >= outer.n()) {
            return input(format!("skipped part {i} out of range"));
        }
        if let Some(&i) = skip.iter().find(|&&i| !part_covers[i].is_complete()) {
            return input(format!("skipped part {i} is not complete"));
        }
        if !outer.is_clique(&skip)? {
            return input("skipped parts do not form a clique of the outer graph");
        }
        Ok(JoinCoverPlan {
            outer,
            part_covers,
            skip_set: skip,
        })
    }

    /// Plan for `outer[parts]` with covers from [`PartCover::for_graph`].
    pub fn for_parts(
        outer: Graph,
        parts: &[Graph],
        skip_set: Vec<usize>,
        budget: &Budget,
    ) -> Result<JoinCoverPlan> {
        let covers = parts
            .iter()
            .map(|h| PartCover::for_graph(h, budget))
            .collect::<Result<Vec<_>>>()?;
        JoinCoverPlan::new(outer, covers, skip_set)
    }

    pub fn join(&self) -> Result<(Graph, JoinLayout)> {
        let parts: Vec<Graph> = self.part_covers.iter().map(PartCover::graph).collect();
        generalized_join(&self.outer, &parts)
    }

    /// Number of representations the synthesized cover will have.
    pub fn cover_size(&self) -> usize {
        (0..self.outer.n())
            .filter(|i| !self.skip_set.contains(i))
            .map(|i| self.part_covers[i].reps().len())
            .sum()
    }
}

/// Affine map of `rep` into `[0, 1/2]` (a constant rep goes to 0).
fn squeeze(rep: &IntervalRep) -> Vec<Interval> {
    let Some((lo, hi)) = rep.span() else {
        return vec![];
    };
    let span = hi - lo;
    let scale = if span == int(0) {
        int(0)
    } else {
        rat(1, 2) / span
    };
    let f = |x: Rational| (x - lo) * scale;
    rep.intervals()
        .iter()
        .map(|iv| Interval {
            lo: f(iv.lo),
            hi: f(iv.hi),
        })
        .collect()
}

fn join_rep(outer: &Graph, layout: &JoinLayout, i: usize, part_rep: &IntervalRep) -> IntervalRep {
    let total = *layout.offsets.last().unwrap();
    let inner = squeeze(part_rep);
    let mut iv = vec![Interval::closed(1, 2); total];
    for j in 0..outer.n() {
        let range = layout.block(j);
        if j == i {
            for (slot, x) in iv[range].iter_mut().zip(&inner) {
                *slot = *x;
            }
        } else if outer.has_edge(i, j) {
            iv[range].fill(Interval::closed(0, 1));
        }
    }
    IntervalRep::new(iv)
}

/// Cover of the join with `Σ_i |cover_i|` representations. The plan must
/// not skip any part.
pub fn cover_all_parts(plan: &JoinCoverPlan) -> Result<IntervalCover> {
    if !plan.skip_set.is_empty() {
        return input("cover_all_parts takes a plan without skipped parts");
    }
    synthesize(plan)
}

/// Cover of the join with representations only for non-skipped parts.
pub fn cover_skipping_parts(plan: &JoinCoverPlan) -> Result<IntervalCover> {
    if plan.skip_set.len() == plan.outer.n() {
        return input("every part is skipped; at least one part must carry a cover");
    }
    synthesize(plan)
}

fn synthesize(plan: &JoinCoverPlan) -> Result<IntervalCover> {
    let (g, layout) = plan.join()?;
    let mut reps = Vec::with_capacity(plan.cover_size());
    for (i, pc) in plan.part_covers.iter().enumerate() {
        if plan.skip_set.contains(&i) {
            continue;
        }
        for r in pc.reps() {
            reps.push(join_rep(&plan.outer, &layout, i, &r));
        }
    }
    let cover = IntervalCover { graph: g, reps };
    match verify_cover(&cover).violations.first() {
        None => Ok(cover),
        Some(v) => defect(format!("join cover failed verification: {v}")),
    }
}

/// `max Σ box(H_i)` over cliques of `outer`, counting only non-complete
/// parts. `part_box[i] = (box(H_i), H_i is complete)`.
pub fn lower_bound_m(outer: &Graph, part_box: &[(usize, bool)]) -> Result<usize> {
    if part_box.len() != outer.n() {
        return input(format!(
            "outer graph has {} vertices but {} box values were given",
            outer.n(),
            part_box.len()
        ));
    }
    let weight = |v: usize| if part_box[v].1 { 0 } else { part_box[v].0 };
    // weights are non-negative, so some maximal clique attains the maximum
    Ok(maximal_cliques(outer)
        .iter()
        .map(|c| c.iter().map(|&v| weight(v)).sum())
        .max()
        .unwrap_or(0))
}

/// Cover of `g` with `|V(G_r)|` representations, in `g`'s own labeling.
pub fn reduced_cover(g: &Graph) -> Result<IntervalCover> {
    if g.n() == 0 {
        return input("reduced cover of the empty graph");
    }
    let (gr, partition) = reduced_graph(g);
    let parts: Vec<PartCover> = partition
        .blocks()
        .iter()
        .map(|b| PartCover::edgeless(b.len()))
        .collect();
    let plan = JoinCoverPlan::new(gr, parts, vec![])?;
    let joined = cover_all_parts(&plan)?;
    // join vertex (block i, slot s) is partition.blocks()[i][s]
    let to_original: Vec<usize> = partition.blocks().iter().flatten().copied().collect();
    let cover = joined.relabeled(&to_original)?;
    if cover.graph != *g {
        return Err(Error::ConstructionDefect(
            "reduced-graph join does not reproduce the input graph".into(),
        ));
    }
    IntervalCover::verified(cover.graph, cover.reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn plan(outer: Graph, parts: &[Graph], skip: Vec<usize>) -> JoinCoverPlan {
        JoinCoverPlan::for_parts(outer, parts, skip, &Budget::default()).unwrap()
    }

    #[test]
    fn all_parts_examples() {
        let p = plan(
            Graph::complete(2),
            &[Graph::empty(2), Graph::empty(2)],
            vec![],
        );
        let c = cover_all_parts(&p).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.graph, Graph::from_fn(4, |u, v| u / 2 != v / 2));

        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = cover_all_parts(&plan(Graph::complete(1), &[p4.clone()], vec![])).unwrap();
        assert_eq!((c.len(), c.graph), (1, p4));

        let parts = vec![Graph::empty(2); 3];
        let c = cover_all_parts(&plan(Graph::complete(3), &parts, vec![])).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.graph, Graph::from_fn(6, |u, v| u / 2 != v / 2));
    }

    #[test]
    fn skips_complete_clique_parts() {
        let p = plan(
            Graph::complete(2),
            &[Graph::complete(3), Graph::empty(2)],
            vec![0],
        );
        let c = cover_skipping_parts(&p).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.graph.n(), 5);
        assert!(verify_cover(&c).ok());

        let p = plan(
            Graph::complete(2),
            &[Graph::empty(2), Graph::empty(2)],
            vec![],
        );
        assert_eq!(
            cover_skipping_parts(&p).unwrap(),
            cover_all_parts(&p).unwrap()
        );
    }

    #[test]
    fn plan_validation() {
        let b = Budget::default();
        let bad = JoinCoverPlan::for_parts(
            Graph::complete(2),
            &[Graph::empty(2), Graph::empty(2)],
            vec![0],
            &b,
        );
        assert!(matches!(bad, Err(Error::Input(_))));
        let not_clique = JoinCoverPlan::for_parts(
            Graph::empty(3),
            &[Graph::complete(2), Graph::complete(2), Graph::empty(2)],
            vec![0, 1],
            &b,
        );
        assert!(matches!(not_clique, Err(Error::Input(_))));
        let all = plan(
            Graph::complete(2),
            &[Graph::complete(2), Graph::complete(1)],
            vec![0, 1],
        );
        assert!(cover_skipping_parts(&all).is_err());
        let skipped = plan(
            Graph::complete(2),
            &[Graph::complete(2), Graph::empty(2)],
            vec![0],
        );
        assert!(cover_all_parts(&skipped).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(lower_bound_m(&k2, &[(1, false), (1, false)]).unwrap(), 2);
        assert_eq!(lower_bound_m(&k2, &[(1, true), (1, false)]).unwrap(), 1);
        let k3 = Graph::complete(3);
        assert_eq!(
            lower_bound_m(&k3, &[(2, false), (2, false), (1, true)]).unwrap(),
            4
        );
        assert_eq!(
            lower_bound_m(&Graph::empty(2), &[(1, true), (1, true)]).unwrap(),
            0
        );
    }

    #[test]
    fn c4_join_c4_needs_four() {
        // box(C4 ∨ C4) = 4 matches the clique lower bound
        let (g, _) = generalized_join(&Graph::complete(2), &[c4(), c4()]).unwrap();
        let r = boxicity_exact(&g, 4, &Budget::default()).unwrap();
        assert_eq!(r.boxicity(), Some(4));
    }

    #[test]
    fn reduced_cover_examples() {
        assert_eq!(reduced_cover(&c4()).unwrap().len(), 2);
        let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3));
        assert_eq!(reduced_cover(&k33).unwrap().len(), 2);
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(reduced_cover(&p4).unwrap().len(), 4);
        assert!(reduced_cover(&Graph::empty(0)).is_err());
    }

    #[test]
    fn squeeze_stays_below_one() {
        let r = IntervalRep::new(vec![Interval::closed(-3, 5), Interval::closed(5, 9)]);
        let s = squeeze(&r);
        assert_eq!(s[0].lo, int(0));
        assert_eq!(s[1].hi, rat(1, 2));
        let constant = IntervalRep::new(vec![Interval::closed(4, 4); 3]);
        assert!(squeeze(&constant)
            .iter()
            .all(|iv| iv.lo == int(0) && iv.hi == int(0)));
    }
}
