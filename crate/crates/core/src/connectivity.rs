//! Local, global and average vertex/edge connectivity.
//!
//! All values are exact: local values come from integral max-flow, averages
//! are exact rationals. For adjacent `u, v` the vertex connectivity is
//! `1 + κ_{G-uv}(u, v)`, i.e. the edge itself plus the internally disjoint
//! paths avoiding it.

use alloc::vec::Vec;

use crate::flow::{edge_network, SplitNetwork, INF};
use crate::graph::Graph;
use crate::{pairs_count, par, Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectivityMode {
    Vertex,
    Edge,
}

impl ConnectivityMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ConnectivityMode::Vertex => "vertex",
            ConnectivityMode::Edge => "edge",
        }
    }
}

/// Flow-based κ(u, v) for a nonadjacent pair (or with `skip` removing the
/// edge between them), capped at `limit`.
fn vertex_flow(g: &Graph, u: usize, v: usize, skip: Option<(usize, usize)>, limit: u32) -> u32 {
    let mut sn = SplitNetwork::build(g, &[u, v], skip);
    sn.net.max_flow(SplitNetwork::out_node(u), SplitNetwork::in_node(v), limit)
}

fn local_vertex_capped(g: &Graph, u: usize, v: usize, limit: u32) -> u32 {
    if g.has_edge(u, v) {
        if limit == 0 {
            return 0;
        }
        1 + vertex_flow(g, u, v, Some((u, v)), limit - 1)
    } else {
        vertex_flow(g, u, v, None, limit)
    }
}

fn local_edge_capped(g: &Graph, u: usize, v: usize, limit: u32) -> u32 {
    edge_network(g).max_flow(u, v, limit)
}

/// Maximum number of internally disjoint u–v paths.
pub fn local_vertex_connectivity(g: &Graph, u: usize, v: usize) -> Result<u32> {
    g.check_pair(u, v)?;
    Ok(local_vertex_capped(g, u, v, INF))
}

/// Maximum number of edge-disjoint u–v paths.
pub fn local_edge_connectivity(g: &Graph, u: usize, v: usize) -> Result<u32> {
    g.check_pair(u, v)?;
    Ok(local_edge_capped(g, u, v, INF))
}

pub fn local_connectivity(g: &Graph, u: usize, v: usize, mode: ConnectivityMode) -> Result<u32> {
    match mode {
        ConnectivityMode::Vertex => local_vertex_connectivity(g, u, v),
        ConnectivityMode::Edge => local_edge_connectivity(g, u, v),
    }
}

/// κ(G) or λ(G).
///
/// Vertex mode scans vertices `v_0, v_1, …` and, while the index does not
/// exceed the current bound, computes capped κ(v_i, v_j) for all later
/// nonadjacent `v_j`; the bound starts at `min(δ, n - 1)`. Some vertex among
/// the first κ + 1 lies outside a minimum separator, which makes the scan
/// exact. Edge mode takes the minimum of λ(v_0, v) over all `v`.
pub fn global_connectivity(g: &Graph, mode: ConnectivityMode) -> Result<u32> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TrivialGraph);
    }
    let mut best = g.min_degree() as u32;
    match mode {
        ConnectivityMode::Vertex => {
            best = best.min(n as u32 - 1);
            let mut i = 0;
            while i < n && i as u32 <= best {
                let partners: Vec<usize> = (i + 1..n).filter(|&j| !g.has_edge(i, j)).collect();
                let bound = best;
                let m = par::map(&partners, |&j| vertex_flow(g, i, j, None, bound));
                best = m.into_iter().fold(best, u32::min);
                i += 1;
            }
        }
        ConnectivityMode::Edge => {
            let others: Vec<usize> = (1..n).collect();
            let bound = best;
            let m = par::map(&others, |&v| local_edge_capped(g, 0, v, bound));
            best = m.into_iter().fold(best, u32::min);
        }
    }
    Ok(best)
}

/// How pair values are obtained for an all-pairs report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairStrategy {
    /// One flow computation per pair.
    Full,
    /// Once the global connectivity `c` is known to equal δ(G), every pair
    /// containing a vertex of degree `c` has value exactly `c`; only the
    /// remaining pairs are computed by flow.
    DegreeShortcut,
}

/// Per-pair values with exact total and average.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairConnectivityReport {
    pub mode: ConnectivityMode,
    pub order: usize,
    /// Values for pairs `(u, v)`, `u < v`, in lexicographic order.
    values: Vec<u32>,
    pub total: u64,
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

impl PairConnectivityReport {
    pub fn value(&self, u: usize, v: usize) -> u32 {
        assert!(u != v && u < self.order && v < self.order);
        self.values[pair_index(self.order, u, v)]
    }

    /// `(u, v, value)` in lexicographic pair order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.order;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.values.iter())
            .map(|((u, v), &x)| (u, v, x))
    }

    /// Exact average `total / C(n, 2)`.
    pub fn average(&self) -> Rational {
        Rational::new(self.total as i128, pairs_count(self.order) as i128)
    }

    /// Minimum pair value; equals the global connectivity by Whitney's theorem.
    pub fn global(&self) -> u32 {
        self.values.iter().copied().min().unwrap_or(0)
    }
}

pub fn all_pairs_report(g: &Graph, mode: ConnectivityMode) -> Result<PairConnectivityReport> {
    all_pairs_report_with(g, mode, PairStrategy::Full)
}

pub fn all_pairs_report_with(
    g: &Graph,
    mode: ConnectivityMode,
    strategy: PairStrategy,
) -> Result<PairConnectivityReport> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TrivialGraph);
    }
    let pairs = all_pairs(n);
    let shortcut = match strategy {
        PairStrategy::Full => None,
        PairStrategy::DegreeShortcut => {
            let c = global_connectivity(g, mode)?;
            (c as usize == g.min_degree()).then_some(c)
        }
    };
    let values = par::map(&pairs, |&(u, v)| match shortcut {
        Some(c) if g.degree(u) == c as usize || g.degree(v) == c as usize => c,
        _ => match mode {
            ConnectivityMode::Vertex => local_vertex_capped(g, u, v, INF),
            ConnectivityMode::Edge => local_edge_capped(g, u, v, INF),
        },
    });
    let total = values.iter().map(|&x| u64::from(x)).sum();
    Ok(PairConnectivityReport { mode, order: n, values, total })
}

/// Local values for a chosen list of pairs, computed by flow.
pub fn pair_values(g: &Graph, pairs: &[(usize, usize)], mode: ConnectivityMode) -> Result<Vec<u32>> {
    for &(u, v) in pairs {
        g.check_pair(u, v)?;
    }
    Ok(par::map(pairs, |&(u, v)| match mode {
        ConnectivityMode::Vertex => local_vertex_capped(g, u, v, INF),
        ConnectivityMode::Edge => local_edge_capped(g, u, v, INF),
    }))
}

/// Why a graph failed the minimality predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityWitness {
    /// The global connectivity differs from `k`.
    GlobalConnectivity(u32),
    /// Deleting this edge keeps the connectivity at least `k`.
    RemovableEdge(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalityOutcome {
    pub minimal: bool,
    pub witness: Option<MinimalityWitness>,
}

/// How edge deletions are checked by [`is_minimally_k_connected_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityStrategy {
    /// Recompute the global connectivity of `G - e` for every edge.
    Exhaustive,
    /// Skip edges with an endpoint of degree `k`: deleting such an edge
    /// leaves a vertex of degree `k - 1`, so connectivity drops below `k`.
    /// Remaining edges are checked exhaustively.
    DegreeCertificate,
}

pub fn is_minimally_k_connected(g: &Graph, k: u32, mode: ConnectivityMode) -> Result<MinimalityOutcome> {
    is_minimally_k_connected_with(g, k, mode, MinimalityStrategy::Exhaustive)
}

pub fn is_minimally_k_connected_with(
    g: &Graph,
    k: u32,
    mode: ConnectivityMode,
    strategy: MinimalityStrategy,
) -> Result<MinimalityOutcome> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let c = global_connectivity(g, mode)?;
    if c != k {
        return Ok(MinimalityOutcome { minimal: false, witness: Some(MinimalityWitness::GlobalConnectivity(c)) });
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| {
            strategy == MinimalityStrategy::Exhaustive
                || (g.degree(u) != k as usize && g.degree(v) != k as usize)
        })
        .collect();
    let keeps = par::map(&edges, |&(u, v)| {
        let h = g.delete_edge(u, v).expect("edge listed by the graph");
        global_connectivity(&h, mode).expect("order unchanged") >= k
    });
    let witness = edges.iter().zip(keeps).find(|(_, keep)| *keep).map(|(&(u, v), _)| MinimalityWitness::RemovableEdge(u, v));
    Ok(MinimalityOutcome { minimal: witness.is_none(), witness })
}

/// Bipartite with parts exactly `{deg = k}` and `{deg > k}`, both nonempty.
pub fn is_degree_partitioned(g: &Graph, k: usize) -> Result<bool> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) < k) {
        return Err(Error::DegreeBelowK { vertex: v, degree: g.degree(v), k });
    }
    let low = (0..g.order()).filter(|&v| g.degree(v) == k).count();
    if low == 0 || low == g.order() {
        return Ok(false);
    }
    Ok(g.edges().all(|(u, v)| (g.degree(u) == k) != (g.degree(v) == k)))
}
