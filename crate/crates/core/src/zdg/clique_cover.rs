//! The clique `T`, the matching coloring and the cover of `Γ(ℤ_N)` that
//! skips the complete classes `N | d²`.

use super::{class_graphs, compressed_zn, join_to_zdg_labels, CompressedZN, FactoredN};
use crate::error::{defect, input, Result};
use crate::graph::{Coloring, Graph};
use crate::interval::IntervalCover;
use crate::join_cover::{cover_skipping_parts, JoinCoverPlan, PartCover};

fn require_composite(f: &FactoredN) -> Result<()> {
    if f.is_prime() {
        return input(format!("{} is prime", f.n));
    }
    Ok(())
}

fn pow(p: u64, e: u32) -> u64 {
    p.pow(e)
}

/// `Π(n_i+1) Π(m_j+1)`.
fn half_divisor_count(f: &FactoredN) -> u64 {
    f.even
        .iter()
        .chain(&f.odd)
        .map(|&(_, e)| e as u64 + 1)
        .product()
}

/// Proper divisors `d` with `N | d²`, ascending. They form a clique of
/// complete classes of size `Π(n_i+1)Π(m_j+1) − 1`.
pub fn divisor_clique_s(f: &FactoredN) -> Result<Vec<u64>> {
    require_composite(f)?;
    let n = f.n as u128;
    let s: Vec<u64> = f
        .divisors()
        .into_iter()
        .filter(|&d| d != 1 && d != f.n && (d as u128 * d as u128) % n == 0)
        .collect();
    let expected = half_divisor_count(f) - 1;
    if s.len() as u64 != expected {
        return defect(format!(
            "|S| = {} for N = {}, formula gives {expected}",
            s.len(),
            f.n
        ));
    }
    for (i, &x) in s.iter().enumerate() {
        for &y in &s[i + 1..] {
            if (x as u128 * y as u128) % n != 0 {
                return defect(format!("{x} and {y} in S are not adjacent for N = {}", f.n));
            }
        }
    }
    Ok(s)
}

/// `ξ_η = Π p_i^{2n_i} · Π_{j≠η} q_j^{2m_j+1} · q_η^{m_η}`, `η` 1-based.
pub fn xi_eta(f: &FactoredN, eta: usize) -> Result<u64> {
    require_composite(f)?;
    if f.b() == 0 {
        return input(format!("N = {} has no odd-exponent prime", f.n));
    }
    if eta == 0 || eta > f.b() {
        return input(format!("index {eta} outside 1..={}", f.b()));
    }
    let xi = xi_raw(f, eta - 1);
    let n = f.n as u128;
    if (xi as u128 * xi as u128) % n == 0 {
        return defect(format!("ξ_{eta} = {xi} lies in S for N = {}", f.n));
    }
    let s = divisor_clique_s(f)?;
    let others = (0..f.b()).filter(|&j| j != eta - 1).map(|j| xi_raw(f, j));
    for y in s.into_iter().chain(others) {
        if (xi as u128 * y as u128) % n != 0 {
            return defect(format!(
                "ξ_{eta} = {xi} is not adjacent to {y} for N = {}",
                f.n
            ));
        }
    }
    Ok(xi)
}

fn xi_raw(f: &FactoredN, eta0: usize) -> u64 {
    let even: u64 = f.even.iter().map(|&(p, e)| pow(p, 2 * e)).product();
    let odd: u64 = f
        .odd
        .iter()
        .enumerate()
        .map(|(j, &(q, m))| {
            if j == eta0 {
                pow(q, m)
            } else {
                pow(q, 2 * m + 1)
            }
        })
        .product();
    even * odd
}

fn exponent(mut d: u64, p: u64) -> u32 {
    let mut e = 0;
    while d % p == 0 {
        d /= p;
        e += 1;
    }
    e
}

/// `ω = χ` of the compressed graph with both certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaChi {
    /// `Π(n_i+1) Π(m_j+1) + b − 1`.
    pub value: u64,
    /// `S` ascending, then `ξ_1, …, ξ_b`.
    pub t: Vec<u64>,
    pub graph: CompressedZN,
    /// Colors indexed by compressed vertex.
    pub coloring: Coloring,
}

/// Clique `T` and a coloring with `|T|` colors. Colors are ranks of `T`
/// sorted ascending. Divisors outside `T` take the color of the divisor of
/// `T` they are forced to miss: `d̄` when some even exponent is short,
/// otherwise `ξ_ℓ` for the last short odd exponent.
pub fn omega_chi_compressed(f: &FactoredN) -> Result<OmegaChi> {
    require_composite(f)?;
    let c = compressed_zn(f.n)?;
    let value = half_divisor_count(f) + f.b() as u64 - 1;

    let mut t = divisor_clique_s(f)?;
    for eta in 1..=f.b() {
        t.push(xi_eta(f, eta)?);
    }
    let mut sorted_t = t.clone();
    sorted_t.sort_unstable();
    let psi = |d: u64| sorted_t.binary_search(&d).ok();

    let even_full: u64 = f.even.iter().map(|&(p, e)| pow(p, 2 * e)).product();
    let odd_full: u64 = f.odd.iter().map(|&(q, m)| pow(q, 2 * m + 1)).product();
    let mut colors = Vec::with_capacity(c.divisors.len());
    for &d in &c.divisors {
        let color = if let Some(k) = psi(d) {
            k
        } else if let Some(sigma) = (0..f.a()).rev().find(|&i| {
            let (p, n_i) = f.even[i];
            exponent(d, p) < n_i
        }) {
            let (p, n_s) = f.even[sigma];
            let d_bar = even_full / pow(p, 2 * n_s) * pow(p, n_s) * odd_full;
            psi(d_bar).ok_or_else(|| {
                crate::Error::ConstructionDefect(format!("d̄ = {d_bar} for d = {d} is not in T"))
            })?
        } else if let Some(l) = (0..f.b()).rev().find(|&j| {
            let (q, m_j) = f.odd[j];
            exponent(d, q) <= m_j
        }) {
            let xi = xi_raw(f, l);
            psi(xi).ok_or_else(|| {
                crate::Error::ConstructionDefect(format!("ξ = {xi} for d = {d} is not in T"))
            })?
        } else {
            return defect(format!(
                "divisor {d} of {} is outside T and fits neither case",
                f.n
            ));
        };
        colors.push(color);
    }
    let coloring = Coloring { colors };

    let t_idx: Vec<usize> = t
        .iter()
        .map(|&d| c.index_of(d).expect("T holds proper divisors"))
        .collect();
    if t.len() as u64 != value || !c.graph.is_clique(&t_idx)? {
        return defect(format!(
            "T = {t:?} is not a clique of size {value} for N = {}",
            f.n
        ));
    }
    if !coloring.is_proper(&c.graph) {
        let (u, v) = c
            .graph
            .edges()
            .into_iter()
            .find(|&(u, v)| coloring.colors[u] == coloring.colors[v])
            .expect("improper coloring has a monochromatic edge");
        return defect(format!(
            "divisors {} and {} of {} share a color",
            c.divisors[u], c.divisors[v], f.n
        ));
    }
    if coloring.color_count() as u64 != value {
        return defect(format!(
            "coloring of N = {} uses {} colors, expected {value}",
            f.n,
            coloring.color_count()
        ));
    }
    Ok(OmegaChi {
        value,
        t,
        graph: c,
        coloring,
    })
}

/// `Π(2n_i+1) Π(2m_j+2) − Π(n_i+1) Π(m_j+1) − 1`, the number of proper
/// divisors outside `S`.
pub fn divisor_box_bound(f: &FactoredN) -> Result<u64> {
    require_composite(f)?;
    let tau: u64 = f
        .even
        .iter()
        .map(|&(_, n)| 2 * n as u64 + 1)
        .chain(f.odd.iter().map(|&(_, m)| 2 * m as u64 + 2))
        .product();
    let value = tau - half_divisor_count(f) - 1;
    let s = divisor_clique_s(f)?;
    let vertices = tau - 2;
    if vertices - s.len() as u64 != value {
        return defect(format!(
            "bound {value} differs from |V| − |S| for N = {}",
            f.n
        ));
    }
    Ok(value)
}

/// Cover of `Γ(ℤ_N)` with one representation per divisor outside `S`, in
/// the labeling of [`super::zdg_zn`].
pub fn zn_class_cover(c: &CompressedZN) -> Result<IntervalCover> {
    let s = divisor_clique_s(&c.factored)?;
    if s.len() == c.divisors.len() {
        return input(format!(
            "every proper divisor of {} lies in S; nothing to cover",
            c.n
        ));
    }
    let skip: Vec<usize> = s
        .iter()
        .map(|&d| c.index_of(d).expect("S ⊆ divisors"))
        .collect();
    let parts: Vec<PartCover> = class_graphs(c)
        .into_iter()
        .zip(&c.class_complete)
        .map(|(h, &complete)| {
            if complete {
                PartCover::Complete(h.n())
            } else {
                PartCover::edgeless(h.n())
            }
        })
        .collect();
    let plan = JoinCoverPlan::new(c.graph.clone(), parts, skip)?;
    let joined = cover_skipping_parts(&plan)?;
    let cover = joined.relabeled(&join_to_zdg_labels(c))?;
    let direct: Graph = super::zdg_zn(c.n)?.graph;
    if cover.graph != direct {
        return defect(format!("join of classes does not reproduce Γ(ℤ_{})", c.n));
    }
    IntervalCover::verified(cover.graph, cover.reps)
}
