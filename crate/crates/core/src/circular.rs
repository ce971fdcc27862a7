//! Circular cliques `G^d_k` and interval covers of size `χ(G^d_k) = ⌈k/d⌉`.
//!
//! Vertex `i` stands for `a_i`; `a_i ~ a_j` iff `d <= |i - j| <= k - d`.
//! The cover has one interval supergraph per color class `W_i` of `d`
//! consecutive vertices (the last class may be short). Each supergraph
//! keeps every edge of `G^d_k` and leaves its class independent. A single
//! construction is written for the class starting at `a_0`; the others are
//! rotations, since `i ↦ i + s (mod k)` is an automorphism.

use crate::error::{defect, input, Result};
use crate::graph::{Graph, VertexPartition};
use crate::interval::{int, rat, verify_cover, Interval, IntervalCover, IntervalRep};

/// `k = m·d + b` with `0 <= b < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircularParams {
    pub k: usize,
    pub d: usize,
    pub m: usize,
    pub b: usize,
}

impl CircularParams {
    pub fn new(k: usize, d: usize) -> Result<CircularParams> {
        if d == 0 || k < 2 * d {
            return input(format!(
                "circular clique needs k >= 2d >= 2, got k={k}, d={d}"
            ));
        }
        Ok(CircularParams {
            k,
            d,
            m: k / d,
            b: k % d,
        })
    }

    pub fn chi(&self) -> usize {
        self.k.div_ceil(self.d)
    }
}

pub fn build_circular_clique(k: usize, d: usize) -> Result<Graph> {
    CircularParams::new(k, d)?;
    Ok(Graph::from_fn(k, |i, j| {
        let diff = j - i;
        d <= diff && diff <= k - d
    }))
}

pub fn circular_chi(k: usize, d: usize) -> Result<usize> {
    Ok(CircularParams::new(k, d)?.chi())
}

/// `W_i = {a_{id}, …, a_{id+d-1}}`, plus a short last class of size `b`.
pub fn color_classes(k: usize, d: usize) -> Result<VertexPartition> {
    let p = CircularParams::new(k, d)?;
    let blocks: Vec<Vec<usize>> = (0..p.chi())
        .map(|i| (i * d..((i + 1) * d).min(k)).collect())
        .collect();
    let g = build_circular_clique(k, d)?;
    for (i, w) in blocks.iter().enumerate() {
        if !g.is_independent(w)? {
            return defect(format!("color class {i} of G^{d}_{k} is not independent"));
        }
    }
    VertexPartition::new(k, blocks)
}

/// Interval supergraph of `G^d_k` in which `W = {a_0, …, a_{r-1}}` is
/// independent: `a_i ↦ {d-i}` and `a_{d+i} ↦ [d-i, d+1]` for `i < r`,
/// the rest of the first block at the point `d+1`, and everything from
/// `a_{d+r}` on ↦ `[1, d+1]`. Requires `m >= 3`.
pub fn point_class_rep(k: usize, d: usize, r: usize) -> Result<IntervalRep> {
    let p = CircularParams::new(k, d)?;
    if p.m < 3 {
        return input(format!("point-layout construction needs m >= 3, got m={}", p.m));
    }
    if r == 0 || (r != d && r != p.b) {
        return input(format!(
            "class size r={r} must be d={d} or b={} and positive",
            p.b
        ));
    }
    class_rep_points(p, r)
}

/// The point-layout formulas for any `1 <= r <= d`. Also used for the short
/// class when `m = 2`; the result is always re-verified.
fn class_rep_points(p: CircularParams, r: usize) -> Result<IntervalRep> {
    let CircularParams { k, d, .. } = p;
    let (d_i, top) = (d as i64, d as i64 + 1);
    let mut iv = vec![Interval::closed(1, top); k];
    for i in 0..r {
        iv[i] = Interval::point(int(d_i - i as i64));
        iv[d + i] = Interval::closed(d_i - i as i64, top);
    }
    for slot in iv.iter_mut().take(d).skip(r) {
        *slot = Interval::point(int(top));
    }
    let rep = IntervalRep::new(iv);
    check_class_rep(p, &rep, 0, r, "point layout")?;
    Ok(rep)
}

/// Interval supergraph of `G^d_k` (`m = 2`, `b >= 1`) with
/// `W = {a_0, …, a_{d-1}}` independent. With `d = c(b+1) + e`,
/// `0 <= e <= b`: `a_i ↦ {i - 1/2}` on `W`; the block `S = {a_d, …,
/// a_{2d-1}}` is cut into runs of `b+1`, the first run at `[-1, j]` and
/// run `i` at `[(i-1)(b+1)+j, i(b+1)+j]`; `a_{2d}, …` ↦ `[-1, d]`.
pub fn run_class_rep(k: usize, d: usize) -> Result<IntervalRep> {
    let p = CircularParams::new(k, d)?;
    if p.m != 2 || p.b == 0 {
        return input(format!(
            "run-layout construction needs m = 2 and b >= 1, got m={}, b={}",
            p.m, p.b
        ));
    }
    let b = p.b as i64;
    let (c, e) = (d / (p.b + 1), d % (p.b + 1));
    let mut iv = vec![Interval::closed(-1, d as i64); k];
    for (i, slot) in iv.iter_mut().enumerate().take(d) {
        *slot = Interval::point(rat(2 * i as i64 - 1, 2));
    }
    for j in 0..=p.b {
        iv[d + j] = Interval::closed(-1, j as i64);
    }
    // runs 1..c are full (b+1 vertices); run c has e vertices
    for run in 1..=c {
        let len = if run < c { p.b + 1 } else { e };
        for j in 0..len {
            let (run_i, j_i) = (run as i64, j as i64);
            iv[d + run * (p.b + 1) + j] =
                Interval::closed((run_i - 1) * (b + 1) + j_i, run_i * (b + 1) + j_i);
        }
    }
    let rep = IntervalRep::new(iv);
    check_class_rep(p, &rep, 0, d, "run layout")?;
    Ok(rep)
}

fn check_class_rep(
    p: CircularParams,
    rep: &IntervalRep,
    start: usize,
    r: usize,
    what: &str,
) -> Result<()> {
    let g = build_circular_clique(p.k, p.d)?;
    let h = rep.graph();
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| !h.has_edge(u, v)) {
        return defect(format!(
            "{what} rep for (k={}, d={}, class at {start}) drops edge ({u},{v})",
            p.k, p.d
        ));
    }
    let w: Vec<usize> = (start..start + r).map(|i| i % p.k).collect();
    for (x, &u) in w.iter().enumerate() {
        for &v in &w[x + 1..] {
            if h.has_edge(u, v) {
                return defect(format!(
                    "{what} rep for (k={}, d={}, class at {start}) joins class pair ({u},{v})",
                    p.k, p.d
                ));
            }
        }
    }
    Ok(())
}

/// `rep'(a_{(i + shift) mod k}) = rep(a_i)`.
pub fn rotate_rep(rep: &IntervalRep, k: usize, shift: usize) -> Result<IntervalRep> {
    if rep.n() != k {
        return input(format!("rep has {} vertices, expected {k}", rep.n()));
    }
    let perm: Vec<usize> = (0..k).map(|i| (i + shift) % k).collect();
    rep.relabeled(&perm)
}

/// Verified cover of `G^d_k` with exactly `⌈k/d⌉` representations.
pub fn chi_cover(k: usize, d: usize) -> Result<IntervalCover> {
    let p = CircularParams::new(k, d)?;
    let g = build_circular_clique(k, d)?;
    let mut reps = Vec::with_capacity(p.chi());
    let full_class = if p.m == 2 && p.b >= 1 {
        run_class_rep(k, d)?
    } else {
        class_rep_points(p, d)?
    };
    for i in 0..p.m {
        let rep = rotate_rep(&full_class, k, i * d)?;
        check_class_rep(p, &rep, i * d, d, "rotated")?;
        reps.push(rep);
    }
    if p.b >= 1 {
        let short = rotate_rep(&class_rep_points(p, p.b)?, k, p.m * d)?;
        check_class_rep(p, &short, p.m * d, p.b, "rotated short-class")?;
        reps.push(short);
    }
    let cover = IntervalCover { graph: g, reps };
    let report = verify_cover(&cover);
    if let Some(v) = report.violations.first() {
        return defect(format!("chi cover of G^{d}_{k} failed verification: {v}"));
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Rational;

    fn pt(q: Rational) -> Interval {
        Interval::point(q)
    }

    #[test]
    fn build_examples() {
        let c5 = build_circular_clique(5, 2).unwrap();
        assert_eq!(c5.edges(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        assert_eq!(
            build_circular_clique(6, 3).unwrap().edges(),
            vec![(0, 3), (1, 4), (2, 5)]
        );
        assert_eq!(
            build_circular_clique(4, 2).unwrap().edges(),
            vec![(0, 2), (1, 3)]
        );
        assert!(build_circular_clique(5, 3).is_err());
        assert!(build_circular_clique(3, 0).is_err());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(circular_chi(5, 2).unwrap(), 3);
        assert_eq!(circular_chi(8, 3).unwrap(), 3);
        assert_eq!(circular_chi(6, 3).unwrap(), 2);
        assert!(circular_chi(3, 2).is_err());
    }

    #[test]
    fn color_class_examples() {
        assert_eq!(
            color_classes(7, 2).unwrap().blocks(),
            &[vec![0, 1], vec![2, 3], vec![4, 5], vec![6]]
        );
        assert_eq!(
            color_classes(6, 3).unwrap().blocks(),
            &[vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert_eq!(
            color_classes(5, 2).unwrap().blocks(),
            &[vec![0, 1], vec![2, 3], vec![4]]
        );
    }

    #[test]
    fn point_layout_instances() {
        let r = point_class_rep(7, 2, 2).unwrap();
        let expect = [
            Interval::closed(2, 2),
            Interval::closed(1, 1),
            Interval::closed(2, 3),
            Interval::closed(1, 3),
            Interval::closed(1, 3),
            Interval::closed(1, 3),
            Interval::closed(1, 3),
        ];
        assert_eq!(r.intervals(), &expect);

        let r = point_class_rep(7, 2, 1).unwrap();
        assert_eq!(r.interval(0), Interval::closed(2, 2));
        assert_eq!(r.interval(1), Interval::closed(3, 3));
        assert_eq!(r.interval(2), Interval::closed(2, 3));
        assert!((3..7).all(|i| r.interval(i) == Interval::closed(1, 3)));

        let r = point_class_rep(6, 2, 2).unwrap();
        let h = r.graph();
        assert!(h
            .is_spanning_supergraph_of(&build_circular_clique(6, 2).unwrap())
            .unwrap());
        assert!(h.is_independent(&[0, 1]).unwrap());
    }

    #[test]
    fn point_layout_preconditions() {
        assert!(matches!(
            point_class_rep(5, 2, 2),
            Err(crate::Error::Input(_))
        ));
        assert!(matches!(
            point_class_rep(7, 2, 0),
            Err(crate::Error::Input(_))
        ));
        // r must be d or b
        assert!(matches!(
            point_class_rep(11, 3, 1),
            Err(crate::Error::Input(_))
        ));
    }

    #[test]
    fn run_layout_instances() {
        let r = run_class_rep(8, 3).unwrap();
        let expect = [
            pt(rat(-1, 2)),
            pt(rat(1, 2)),
            pt(rat(3, 2)),
            Interval::closed(-1, 0),
            Interval::closed(-1, 1),
            Interval::closed(-1, 2),
            Interval::closed(-1, 3),
            Interval::closed(-1, 3),
        ];
        assert_eq!(r.intervals(), &expect);

        let r = run_class_rep(7, 3).unwrap();
        assert_eq!(r.interval(3), Interval::closed(-1, 0));
        assert_eq!(r.interval(4), Interval::closed(-1, 1));
        assert_eq!(r.interval(5), Interval::closed(0, 2));
        assert_eq!(r.interval(6), Interval::closed(-1, 3));

        let h = run_class_rep(5, 2).unwrap().graph();
        assert!(h
            .is_spanning_supergraph_of(&build_circular_clique(5, 2).unwrap())
            .unwrap());
        assert!(h.is_independent(&[0, 1]).unwrap());

        assert!(run_class_rep(6, 3).is_err());
        assert!(run_class_rep(9, 3).is_err());
    }

    #[test]
    fn claim_non_adjacencies_from_the_constructions() {
        // point layout: a_i is separated from a_{d+j} for j < i
        for (k, d) in [(9, 3), (13, 4), (16, 5)] {
            let h = point_class_rep(k, d, d).unwrap().graph();
            for i in 0..d {
                for j in 0..i {
                    assert!(!h.has_edge(i, d + j), "k={k} d={d} i={i} j={j}");
                }
            }
        }
        // run layout: a_i is separated from a_{d+j} for j < i and j > b + i
        for (k, d) in [(7, 3), (9, 4), (11, 5), (13, 6), (14, 6)] {
            let b = k - 2 * d;
            let h = run_class_rep(k, d).unwrap().graph();
            for i in 0..d {
                for j in (0..i).chain(b + i + 1..d) {
                    assert!(!h.has_edge(i, d + j), "k={k} d={d} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn rotation() {
        let r = point_class_rep(7, 2, 2).unwrap();
        assert_eq!(rotate_rep(&r, 7, 0).unwrap(), r);
        assert_eq!(rotate_rep(&r, 7, 7).unwrap(), r);
        let h = rotate_rep(&r, 7, 2).unwrap().graph();
        assert!(h
            .is_spanning_supergraph_of(&build_circular_clique(7, 2).unwrap())
            .unwrap());
        assert!(h.is_independent(&[2, 3]).unwrap());
        assert!(rotate_rep(&r, 6, 1).is_err());
    }

    #[test]
    fn chi_cover_examples() {
        let c = chi_cover(6, 3).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c
            .reps
            .iter()
            .all(|r| crate::interval::is_interval_graph(&r.graph()).is_interval()));
        assert_eq!(chi_cover(7, 2).unwrap().len(), 4);
        assert_eq!(chi_cover(8, 3).unwrap().len(), 3);
        assert_eq!(chi_cover(2, 1).unwrap().len(), 2);
    }
}
