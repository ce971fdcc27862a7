//! Zero-divisor graphs of ℤ_N and ℤ_2^k.
//!
//! `Γ(ℤ_N)` has the nonzero zero-divisors as vertices, `x ~ y` iff
//! `xy ≡ 0 (mod N)`. Grouping elements by `gcd(N, x) = d` gives classes `A_d`
//! of size `φ(N/d)`; the class graph on proper divisors (`d ~ d'` iff
//! `N | dd'`) is the compressed graph, and `Γ(ℤ_N)` is its generalized join
//! with `A_d` complete when `N | d²` and edgeless otherwise.

mod boolean;
mod clique_cover;
mod pn;

pub use boolean::{boolean_zdg, reduced_ring_bounds, BooleanRingGraph, ReducedRingBounds};
pub use clique_cover::{
    divisor_box_bound, divisor_clique_s, omega_chi_compressed, xi_eta, zn_class_cover, OmegaChi,
};
pub use pn::{is_box_one, rep_gamma_pn};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{defect, input, Result};
use crate::graph::{generalized_join, Graph};

/// Largest modulus accepted anywhere in this module.
pub const MAX_MODULUS: u64 = 1 << 31;

/// `N = Π p_i^{2n_i} · Π q_j^{2m_j+1}`, primes ascending within each list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredN {
    #[serde(rename = "N")]
    pub n: u64,
    /// `(p, e)` for primes with exponent `2e`.
    pub even: Vec<(u64, u32)>,
    /// `(q, e)` for primes with exponent `2e + 1`.
    pub odd: Vec<(u64, u32)>,
}

impl FactoredN {
    /// Number of even-exponent primes.
    pub fn a(&self) -> usize {
        self.even.len()
    }

    /// Number of odd-exponent primes.
    pub fn b(&self) -> usize {
        self.odd.len()
    }

    /// All `(prime, exponent)` pairs, primes ascending.
    pub fn prime_powers(&self) -> Vec<(u64, u32)> {
        let mut v: Vec<(u64, u32)> = self
            .even
            .iter()
            .map(|&(p, e)| (p, 2 * e))
            .chain(self.odd.iter().map(|&(q, e)| (q, 2 * e + 1)))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn is_prime(&self) -> bool {
        self.even.is_empty() && self.odd.len() == 1 && self.odd[0].1 == 0
    }

    /// Divisors of `N` in increasing order, including 1 and `N`.
    pub fn divisors(&self) -> Vec<u64> {
        let mut ds = vec![1u64];
        for (p, e) in self.prime_powers() {
            let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
            for &d in &ds {
                let mut x = d;
                for _ in 0..=e {
                    next.push(x);
                    x *= p;
                }
            }
            ds = next;
        }
        ds.sort_unstable();
        ds
    }
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return input(format!("modulus must be at least 2, got {n}"));
    }
    if n > MAX_MODULUS {
        return input(format!("modulus {n} exceeds {MAX_MODULUS}"));
    }
    Ok(())
}

pub fn factor(n: u64) -> Result<FactoredN> {
    check_modulus(n)?;
    let mut rest = n;
    let mut f = FactoredN {
        n,
        even: vec![],
        odd: vec![],
    };
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e % 2 == 0 {
                f.even.push((p, e / 2));
            } else {
                f.odd.push((p, e / 2));
            }
        }
        p += 1;
    }
    if rest > 1 {
        f.odd.push((rest, 0));
    }
    Ok(f)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// Euler's totient from a factorization.
fn phi(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    factor(n)
        .expect("n >= 2")
        .prime_powers()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// `Γ(ℤ_N)` with its vertex labels (the zero-divisors, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisorGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

pub fn zdg_zn(n: u64) -> Result<ZeroDivisorGraph> {
    check_modulus(n)?;
    let labels: Vec<u64> = (1..n).filter(|&x| x.gcd(&n) > 1).collect();
    let graph = Graph::from_fn(labels.len(), |i, j| {
        (labels[i] as u128 * labels[j] as u128) % n as u128 == 0
    });
    Ok(ZeroDivisorGraph { graph, labels })
}

/// `Γ_E(ℤ_N)` on the proper divisors of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedZN {
    pub n: u64,
    pub factored: FactoredN,
    /// Proper divisors `1 < d < N`, ascending; vertex `i` is `divisors[i]`.
    pub divisors: Vec<u64>,
    pub graph: Graph,
    /// `|A_d| = φ(N/d)`.
    pub class_size: Vec<u64>,
    /// `A_d` induces a clique iff `N | d²`.
    pub class_complete: Vec<bool>,
}

impl CompressedZN {
    pub fn index_of(&self, d: u64) -> Option<usize> {
        self.divisors.binary_search(&d).ok()
    }
}

pub fn compressed_zn(n: u64) -> Result<CompressedZN> {
    let factored = factor(n)?;
    if factored.is_prime() {
        return input(format!("{n} is prime; Γ(ℤ_{n}) has no vertices"));
    }
    let divisors: Vec<u64> = factored
        .divisors()
        .into_iter()
        .filter(|&d| d != 1 && d != n)
        .collect();
    let nn = n as u128;
    let graph = Graph::from_fn(divisors.len(), |i, j| {
        (divisors[i] as u128 * divisors[j] as u128) % nn == 0
    });
    let class_size = divisors.iter().map(|&d| phi(n / d)).collect();
    let class_complete = divisors
        .iter()
        .map(|&d| (d as u128 * d as u128) % nn == 0)
        .collect();
    Ok(CompressedZN {
        n,
        factored,
        divisors,
        graph,
        class_size,
        class_complete,
    })
}

/// The class graphs `⟨A_d⟩`, one per compressed vertex.
pub fn class_graphs(c: &CompressedZN) -> Vec<Graph> {
    c.class_size
        .iter()
        .zip(&c.class_complete)
        .map(|(&s, &complete)| {
            if complete {
                Graph::complete(s as usize)
            } else {
                Graph::empty(s as usize)
            }
        })
        .collect()
}

/// Position in `zdg_zn(N)` of each vertex of the join `Γ_E[⟨A_d⟩]`, whose
/// block for `d` lists the elements of `A_d` ascending.
pub fn join_to_zdg_labels(c: &CompressedZN) -> Vec<usize> {
    let n = c.n;
    let zero_divisors: Vec<u64> = (1..n).filter(|&x| x.gcd(&n) > 1).collect();
    let mut out = Vec::with_capacity(zero_divisors.len());
    for &d in &c.divisors {
        for (pos, _) in zero_divisors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x.gcd(&n) == d)
        {
            out.push(pos);
        }
    }
    out
}

/// `Γ_E[⟨A_d⟩]` relabeled onto `zdg_zn(N)`; fails if the two differ.
pub fn expand_compressed(c: &CompressedZN) -> Result<Graph> {
    let (joined, _) = generalized_join(&c.graph, &class_graphs(c))?;
    let relabel = join_to_zdg_labels(c);
    if relabel.len() != joined.n() {
        return defect(format!(
            "class sizes sum to {} but ℤ_{} has {} nonzero zero-divisors",
            joined.n(),
            c.n,
            relabel.len()
        ));
    }
    let g = joined.relabeled(&relabel)?;
    let direct = zdg_zn(c.n)?;
    if g != direct.graph {
        return defect(format!(
            "expanded compressed graph differs from Γ(ℤ_{})",
            c.n
        ));
    }
    Ok(g)
}

/// Per-N summary emitted by `zdg report`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZnReport {
    #[serde(rename = "N")]
    pub n: u64,
    pub factorization: Factorization,
    #[serde(rename = "S")]
    pub s: Vec<u64>,
    #[serde(rename = "T")]
    pub t: Vec<u64>,
    pub omega_chi: u64,
    pub box_upper: u64,
    /// The bound formula gave 0 on a non-empty graph and was raised to 1.
    pub box_upper_clamped: bool,
    pub box_one: bool,
    /// Lower bound `ω ≤ box` is reported but not certified.
    pub lower_bound_status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// `[p, e]` with exponent `2e`.
    pub even: Vec<(u64, u32)>,
    /// `[q, e]` with exponent `2e + 1`.
    pub odd: Vec<(u64, u32)>,
}

pub fn zn_report(n: u64) -> Result<ZnReport> {
    let f = factor(n)?;
    let factorization = Factorization {
        even: f.even.clone(),
        odd: f.odd.clone(),
    };
    if f.is_prime() {
        return Ok(ZnReport {
            n,
            factorization,
            s: vec![],
            t: vec![],
            omega_chi: 0,
            box_upper: 0,
            box_upper_clamped: false,
            box_one: false,
            lower_bound_status: "not applicable",
            note: Some("empty graph, boxicity 0 by convention".into()),
        });
    }
    let oc = omega_chi_compressed(&f)?;
    let bound = divisor_box_bound(&f)?;
    Ok(ZnReport {
        n,
        factorization,
        s: divisor_clique_s(&f)?,
        t: oc.t.clone(),
        omega_chi: oc.value,
        box_upper: bound.max(1),
        box_upper_clamped: bound == 0,
        box_one: is_box_one(n)?,
        lower_bound_status: "claimed",
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_examples() {
        let f = factor(72).unwrap();
        assert_eq!(
            (f.even.clone(), f.odd.clone()),
            (vec![(3, 1)], vec![(2, 1)])
        );
        assert_eq!((f.a(), f.b()), (1, 1));
        let f = factor(12).unwrap();
        assert_eq!((f.even, f.odd), (vec![(2, 1)], vec![(3, 0)]));
        let f = factor(7).unwrap();
        assert!(f.even.is_empty() && f.odd == vec![(7, 0)] && f.is_prime());
        assert!(factor(1).is_err());
        assert_eq!(
            factor(36).unwrap().divisors(),
            vec![1, 2, 3, 4, 6, 9, 12, 18, 36]
        );
    }

    #[test]
    fn zdg_examples() {
        let z = zdg_zn(12).unwrap();
        assert_eq!(z.labels, vec![2, 3, 4, 6, 8, 9, 10]);
        let lab = |i: usize| z.labels[i];
        let mut edges: Vec<(u64, u64)> = z
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| (lab(u), lab(v)))
            .collect();
        edges.sort_unstable();
        assert_eq!(
            edges,
            vec![
                (2, 6),
                (3, 4),
                (3, 8),
                (4, 6),
                (4, 9),
                (6, 8),
                (6, 10),
                (8, 9)
            ]
        );
        let z = zdg_zn(9).unwrap();
        assert_eq!((z.labels, z.graph), (vec![3, 6], Graph::complete(2)));
        assert_eq!(zdg_zn(13).unwrap().graph.n(), 0);
    }

    #[test]
    fn compressed_examples() {
        let c = compressed_zn(12).unwrap();
        assert_eq!(c.divisors, vec![2, 3, 4, 6]);
        let e: Vec<(u64, u64)> = c
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| (c.divisors[u], c.divisors[v]))
            .collect();
        assert_eq!(e, vec![(2, 6), (3, 4), (4, 6)]);
        assert_eq!(c.class_size, vec![2, 2, 2, 1]);
        assert_eq!(c.class_complete, vec![false, false, false, true]);
        let c = compressed_zn(25).unwrap();
        assert_eq!(
            (c.divisors, c.class_size, c.class_complete),
            (vec![5], vec![4], vec![true])
        );
        let c = compressed_zn(8).unwrap();
        assert_eq!(c.divisors, vec![2, 4]);
        assert_eq!(c.graph, Graph::complete(2));
        assert_eq!(c.class_complete, vec![false, true]);
        assert!(compressed_zn(7).is_err());
    }

    #[test]
    fn expansion_matches_direct_scan() {
        for n in [12, 9, 16, 72, 30] {
            let c = compressed_zn(n).unwrap();
            assert_eq!(expand_compressed(&c).unwrap(), zdg_zn(n).unwrap().graph);
        }
    }

    #[test]
    fn report_72() {
        let r = zn_report(72).unwrap();
        assert_eq!((r.omega_chi, r.box_upper, r.box_one), (4, 7, false));
        assert_eq!(r.s, vec![12, 24, 36]);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(
            r#"{"N":72,"factorization":{"even":[[3,1]],"odd":[[2,1]]},"S":[12,24,36]"#
        ));
        let p = zn_report(7).unwrap();
        assert_eq!(
            p.note.as_deref(),
            Some("empty graph, boxicity 0 by convention")
        );
        let sq = zn_report(49).unwrap();
        assert!(sq.box_upper_clamped && sq.box_upper == 1);
    }
}
