//! Interval representations of `Γ(ℤ_{p^n})` and the `box = 1` test.

use super::{factor, zdg_zn};
use crate::error::{defect, input, Result};
use crate::interval::{graph_of_intervals, int, rat, Interval, IntervalRep};

/// `box(Γ(ℤ_N)) = 1` iff `N = p^n` with `n ≥ 2` or `N = 2p` with `p` odd.
pub fn is_box_one(n: u64) -> Result<bool> {
    let f = factor(n)?;
    if f.is_prime() {
        return input(format!("{n} is prime; Γ(ℤ_{n}) is empty"));
    }
    let pp = f.prime_powers();
    Ok(match pp.as_slice() {
        [_] => true,
        [(2, 1), (_, 1)] => true,
        _ => false,
    })
}

/// Explicit representation of `Γ(ℤ_{p^n})`. A vertex `x` lies in layer
/// `L` when `p^L ∥ x`; layers `L + L' ≥ n` are completely joined.
pub fn rep_gamma_pn(p: u64, n: u32) -> Result<IntervalRep> {
    if !super::is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    if n < 2 {
        return input(format!("exponent must be at least 2, got {n}"));
    }
    let modulus = p
        .checked_pow(n)
        .filter(|&m| m <= super::MAX_MODULUS)
        .ok_or_else(|| crate::Error::Input(format!("{p}^{n} is too large")))?;
    let z = zdg_zn(modulus)?;
    let layer = |x: u64| {
        let mut l = 0u32;
        let mut y = x;
        while y % p == 0 {
            y /= p;
            l += 1;
        }
        l
    };
    let layers: Vec<u32> = z.labels.iter().map(|&x| layer(x)).collect();
    // rank within the layer, 1-based, in increasing label order
    let mut seen = vec![0i64; n as usize];
    let rank: Vec<i64> = layers
        .iter()
        .map(|&l| {
            seen[l as usize] += 1;
            seen[l as usize]
        })
        .collect();
    let size = |l: u32| seen[l as usize];

    let lo_half = (n / 2) as i64;
    let hi_half = n.div_ceil(2) as i64;
    let point = |x| Interval::point(x);
    let intervals: Vec<Interval> = layers
        .iter()
        .zip(&rank)
        .map(|(&l, &j)| {
            let l64 = l as i64;
            match n {
                2 => Interval::closed(0, 1),
                3 if l == 2 => Interval::closed(0, 1),
                3 => point(rat(1, j)),
                _ if l64 > hi_half => Interval::closed(0, l64 - hi_half + 1),
                _ if l64 < lo_half => point(int(lo_half - l64) + rat(j, size(l) + 1)),
                _ if n % 2 == 0 => Interval::closed(0, 1),
                _ if l64 == lo_half => point(rat(j, size(l) + 1)),
                _ => Interval::closed(0, 1),
            }
        })
        .collect();
    let rep = IntervalRep::new(intervals);
    if graph_of_intervals(&rep) != z.graph {
        return defect(format!(
            "layer representation does not realize Γ(ℤ_{modulus})"
        ));
    }
    Ok(rep)
}
