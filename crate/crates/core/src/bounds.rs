//! Potential of degree sequences and the closed-form average-connectivity
//! bounds, all as exact integers or rationals.

use alloc::format;
use alloc::vec::Vec;

use crate::connectivity::{all_pairs_report, ConnectivityMode};
use crate::graph::Graph;
use crate::{Error, Rational, Result};

/// `P(d) = Σ_{i<j} min(d_i, d_j)`, computed after sorting ascending as
/// `Σ_i d_i · (n - 1 - i)`.
pub fn potential(seq: &[u64]) -> Result<u64> {
    if seq.contains(&0) {
        return Err(Error::InvalidParameters("potential needs positive entries".into()));
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    let n = sorted.len() as u64;
    Ok(sorted.iter().enumerate().map(|(i, &d)| d * (n - 1 - i as u64)).sum())
}

/// The balanced sequence for total `D` and length `n`: with `D = dn + r`,
/// `n - r` copies of `d` followed by `r` copies of `d + 1`.
pub fn balance_sequence(total: u64, n: u64) -> Result<Vec<u64>> {
    if n == 0 || total < n {
        return Err(Error::InvalidParameters(format!("balancing needs D >= n >= 1, got D={total}, n={n}")));
    }
    let (d, r) = (total / n, total % n);
    Ok(core::iter::repeat(d).take((n - r) as usize).chain(core::iter::repeat(d + 1).take(r as usize)).collect())
}

pub fn potential_of_graph(g: &Graph) -> Result<u64> {
    if g.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    // isolated vertices contribute min = 0 to every pair
    let degrees: Vec<u64> = g.degrees().into_iter().map(|d| d as u64).filter(|&d| d > 0).collect();
    potential(&degrees)
}

/// Total connectivity `K(G)` (or its edge analogue) against the potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PotentialComparison {
    pub total: u64,
    pub potential: u64,
}

impl PotentialComparison {
    pub fn holds(&self) -> bool {
        self.total <= self.potential
    }
}

pub fn check_total_le_potential(g: &Graph, mode: ConnectivityMode) -> Result<PotentialComparison> {
    let report = all_pairs_report(g, mode)?;
    Ok(PotentialComparison { total: report.total, potential: potential_of_graph(g)? })
}

/// `k + k(n-2)² / (8n(n-1))`, the bound on κ̄ (and λ̄) of degree-partitioned
/// minimally k-(edge-)connected graphs of order `n ≥ 2k + 1`.
pub fn kappa_bar_upper(k: u64, n: u64) -> Result<Rational> {
    if k < 2 || n < 2 * k + 1 {
        return Err(Error::InvalidParameters(format!("bound needs k >= 2 and n >= 2k+1, got k={k}, n={n}")));
    }
    let (k, n) = (k as i128, n as i128);
    Ok(Rational::from_integer(k) + Rational::new(k * (n - 2) * (n - 2), 8 * n * (n - 1)))
}

/// `9k/8`, the supremum of [`kappa_bar_upper`] over `n`.
pub fn limit_bound(k: u64) -> Rational {
    Rational::new(9 * k as i128, 8)
}

/// `(9p - 3)k / (8p - 2)`, the average of `3k` on W-pairs and `k`
/// elsewhere over the `4p` vertices of `Γ_{k,p}` / `Ψ_{k,p}`.
pub fn asymptotic_average(k: u64, p: u64) -> Result<Rational> {
    if !(3 <= k && k <= p) {
        return Err(Error::InvalidParameters(format!("needs 3 <= k <= p, got k={k}, p={p}")));
    }
    let (k, p) = (k as i128, p as i128);
    Ok(Rational::new((9 * p - 3) * k, 8 * p - 2))
}
