//! Interval representations over exact rationals.
//!
//! Intervals are closed; two intervals that only touch at an endpoint still
//! intersect. A single point `p` is the degenerate interval `[p, p]`.

mod boxicity;
mod cover;
mod recognize;

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

pub use boxicity::{boxicity_exact, BoxResult, Budget};
pub use cover::{verify_cover, CoverJson, CoverReport, IntervalCover, Violation};
pub use recognize::{is_interval_graph, lex_bfs, Obstruction, Recognition};

use crate::error::{input, Result};
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Interval> {
        if lo > hi {
            return input(format!("interval [{lo}, {hi}] has lo > hi"));
        }
        Ok(Interval { lo, hi })
    }

    pub fn closed(lo: i64, hi: i64) -> Interval {
        Interval::new(int(lo), int(hi)).expect("lo <= hi")
    }

    pub fn point(p: Rational) -> Interval {
        Interval { lo: p, hi: p }
    }

    #[inline]
    pub fn meets(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains(&self, p: Rational) -> bool {
        self.lo <= p && p <= self.hi
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.lo == self.hi {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Vertex `v` ↦ `intervals[v]`, defined on every vertex `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalRep {
    intervals: Vec<Interval>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<Interval>) -> IntervalRep {
        IntervalRep { intervals }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// The interval graph this representation realizes.
    pub fn graph(&self) -> Graph {
        graph_of_intervals(self)
    }

    /// Representation where old vertex `v` becomes `new_label[v]`.
    pub fn relabeled(&self, new_label: &[usize]) -> Result<IntervalRep> {
        crate::graph::check_permutation(new_label, self.n())?;
        let mut out = self.intervals.clone();
        for (v, &w) in new_label.iter().enumerate() {
            out[w] = self.intervals[v];
        }
        Ok(IntervalRep { intervals: out })
    }

    /// Smallest left and largest right endpoint, if any vertex exists.
    pub fn span(&self) -> Option<(Rational, Rational)> {
        let lo = self.intervals.iter().map(|i| i.lo).min()?;
        let hi = self.intervals.iter().map(|i| i.hi).max()?;
        Some((lo, hi))
    }
}

/// `uv` is an edge iff the closed intervals of `u` and `v` intersect.
pub fn graph_of_intervals(rep: &IntervalRep) -> Graph {
    let n = rep.n();
    // sweep by left endpoint; each vertex meets the later-starting
    // vertices whose left endpoint is at most its right endpoint
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| rep.intervals[v].lo);
    let mut g = Graph::empty(n);
    for (i, &u) in order.iter().enumerate() {
        let hi = rep.intervals[u].hi;
        for &v in &order[i + 1..] {
            if rep.intervals[v].lo > hi {
                break;
            }
            g.add_edge(u, v);
        }
    }
    g
}

type RationalPair = [i64; 2];

/// Wire form: `{"n":2,"intervals":{"0":[[0,1],[1,1]],"1":[[1,2],[1,2]]}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepJson {
    pub n: usize,
    pub intervals: Vec<[RationalPair; 2]>,
}

impl Serialize for RepJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a [[RationalPair; 2]]);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (v, iv) in self.0.iter().enumerate() {
                    m.serialize_entry(&v.to_string(), iv)?;
                }
                m.end()
            }
        }
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            intervals: Entries<'a>,
        }
        Wire {
            n: self.n,
            intervals: Entries(&self.intervals),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RepJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            n: usize,
            intervals: BTreeMap<String, [RationalPair; 2]>,
        }
        let w = Wire::deserialize(d)?;
        let mut slots: Vec<Option<[RationalPair; 2]>> = vec![None; w.n];
        for (k, iv) in w.intervals {
            let v: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("vertex key {k:?} is not an integer")))?;
            if v >= w.n {
                return Err(D::Error::custom(format!(
                    "vertex {v} out of range for n={}",
                    w.n
                )));
            }
            slots[v] = Some(iv);
        }
        let intervals = slots
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| D::Error::custom(format!("vertex {v} has no interval"))))
            .collect::<std::result::Result<_, _>>()?;
        Ok(RepJson { n: w.n, intervals })
    }
}

fn to_pair(q: Rational) -> RationalPair {
    [*q.numer(), *q.denom()]
}

fn from_pair([num, den]: RationalPair) -> Result<Rational> {
    if den <= 0 {
        return input(format!("denominator {den} must be positive"));
    }
    Ok(Rational::new(num, den))
}

impl From<&IntervalRep> for RepJson {
    fn from(rep: &IntervalRep) -> Self {
        RepJson {
            n: rep.n(),
            intervals: rep
                .intervals
                .iter()
                .map(|i| [to_pair(i.lo), to_pair(i.hi)])
                .collect(),
        }
    }
}

impl TryFrom<&RepJson> for IntervalRep {
    type Error = crate::Error;

    fn try_from(j: &RepJson) -> Result<IntervalRep> {
        let intervals = j
            .intervals
            .iter()
            .map(|&[lo, hi]| Interval::new(from_pair(lo)?, from_pair(hi)?))
            .collect::<Result<_>>()?;
        Ok(IntervalRep { intervals })
    }
}

pub fn rep_to_json(rep: &IntervalRep) -> String {
    serde_json::to_string(&RepJson::from(rep)).expect("rep serializes")
}

pub fn rep_from_json(s: &str) -> Result<IntervalRep> {
    match serde_json::from_str::<RepJson>(s) {
        Ok(j) => IntervalRep::try_from(&j),
        Err(e) => input(format!("bad interval JSON: {e}")),
    }
}
