//! Exhaustive search for optimal minimally k-(edge-)connected graphs at
//! small orders.
//!
//! Connected graphs are enumerated up to isomorphism by extending every
//! connected graph of order `n - 1` with a new vertex joined to a nonempty
//! subset (every connected graph has a non-cut vertex, so nothing is
//! missed), deduplicating by canonical code.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::kappa_bar_upper;
use crate::connectivity::{all_pairs_report, is_degree_partitioned, is_minimally_k_connected, ConnectivityMode};
use crate::graph::Graph;
use crate::{graph6, par, Error, Rational, Result};

/// Largest order handled by the native enumerator.
pub const NATIVE_LIMIT: usize = 7;

/// Largest order for which canonical codes fit in a `u64`.
pub const CANONICAL_LIMIT: usize = 11;

/// Upper-triangle bits of `g` with vertex `order[i]` placed at position
/// `i`, in graph6 bit order, first bit most significant.
fn code_for(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    code
}

fn check_canonical_order(g: &Graph) -> Result<()> {
    if g.order() > CANONICAL_LIMIT {
        return Err(Error::BruteForceLimit { n: g.order(), limit: CANONICAL_LIMIT });
    }
    Ok(())
}

/// Reference canonical code: minimum over all `n!` vertex orderings.
pub fn canonical_code_bruteforce(g: &Graph) -> Result<u64> {
    check_canonical_order(g)?;
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = code_for(g, &order);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            best = best.min(code_for(g, &order));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Canonical code restricted to orderings that list vertices by
/// nondecreasing degree. The set of such orderings is isomorphism
/// invariant, so the minimum is still a canonical form.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    check_canonical_order(g)?;
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| g.degree(v));
    let mut classes = Vec::new();
    let mut start = 0;
    for i in 1..=order.len() {
        if i == order.len() || g.degree(order[i]) != g.degree(order[start]) {
            classes.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_classes(g, &mut order, &classes, 0, &mut best);
    Ok(best)
}

fn permute_classes(g: &Graph, order: &mut [usize], classes: &[(usize, usize)], idx: usize, best: &mut u64) {
    let Some(&(lo, hi)) = classes.get(idx) else {
        *best = (*best).min(code_for(g, order));
        return;
    };
    permute_range(g, order, classes, idx, lo, hi, best);
}

fn permute_range(
    g: &Graph,
    order: &mut [usize],
    classes: &[(usize, usize)],
    idx: usize,
    pos: usize,
    hi: usize,
    best: &mut u64,
) {
    if pos + 1 >= hi {
        permute_classes(g, order, classes, idx + 1, best);
        return;
    }
    for i in pos..hi {
        order.swap(pos, i);
        permute_range(g, order, classes, idx, pos + 1, hi, best);
        order.swap(pos, i);
    }
}

/// The graph whose code at the identity ordering is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut pos = bits;
    for j in 1..n {
        for i in 0..j {
            pos -= 1;
            if code >> pos & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("code describes a simple graph")
}

/// Canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.order(), canonical_code(g)?))
}

/// One representative (in canonical form) of every isomorphism class of
/// connected graphs of order `n`, sorted by canonical code.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > NATIVE_LIMIT {
        return Err(Error::BruteForceLimit { n, limit: NATIVE_LIMIT });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let candidates: Vec<Graph> = level
            .iter()
            .flat_map(|g| {
                (1u32..(1 << (m - 1))).map(move |mask| {
                    let mut edges: Vec<(usize, usize)> = g.edges().collect();
                    edges.extend((0..m - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, m - 1)));
                    Graph::from_edge_list(m, &edges).expect("extension is simple")
                })
            })
            .collect();
        let codes = par::map(&candidates, |g| canonical_code(g).expect("order within limit"));
        let classes: BTreeMap<u64, ()> = codes.into_iter().map(|c| (c, ())).collect();
        level = classes.into_keys().map(|c| graph_from_code(m, c)).collect();
    }
    Ok(level)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub mode: ConnectivityMode,
    pub count_candidates: usize,
    pub count_minimal: usize,
    /// Maximum average over survivors; `None` when there are none.
    pub best_value: Option<Rational>,
    /// Canonical forms of all graphs attaining `best_value`, one per
    /// isomorphism class, sorted by canonical code.
    pub optima: Vec<Graph>,
    pub all_optima_degree_partitioned: bool,
    /// `best_value ≤ k + k(n-2)²/(8n(n-1))`, when that bound applies
    /// (`k ≥ 2`, `n ≥ 2k + 1`).
    pub bound_satisfied: Option<bool>,
}

impl SearchReport {
    pub fn optima_graph6(&self) -> Vec<String> {
        self.optima.iter().map(graph6::encode).collect()
    }
}

/// Scans `candidates` (all of order `n`) for minimally k-(edge-)connected
/// graphs and collects every graph of maximum average connectivity.
pub fn find_optimal<I>(n: usize, k: usize, mode: ConnectivityMode, candidates: I) -> Result<SearchReport>
where
    I: IntoIterator<Item = Graph>,
{
    if k == 0 || n < k + 1 {
        return Err(Error::InvalidParameters(format!("search needs k >= 1 and n >= k+1, got n={n}, k={k}")));
    }
    let candidates: Vec<Graph> = candidates.into_iter().collect();
    if let Some(g) = candidates.iter().find(|g| g.order() != n) {
        return Err(Error::OrderMismatch { expected: n, found: g.order() });
    }
    let scored = par::map(&candidates, |g| -> Result<Option<Rational>> {
        if g.min_degree() < k {
            return Ok(None);
        }
        if !is_minimally_k_connected(g, k as u32, mode)?.minimal {
            return Ok(None);
        }
        Ok(Some(all_pairs_report(g, mode)?.average()))
    });
    let mut count_minimal = 0;
    let mut best: Option<Rational> = None;
    let mut optima: BTreeMap<u64, Graph> = BTreeMap::new();
    for (g, score) in candidates.iter().zip(scored) {
        let Some(value) = score? else { continue };
        count_minimal += 1;
        if best.is_some_and(|b| value < b) {
            continue;
        }
        if best.is_some_and(|b| value > b) || best.is_none() {
            best = Some(value);
            optima.clear();
        }
        let code = canonical_code(g)?;
        optima.entry(code).or_insert_with(|| graph_from_code(n, code));
    }
    let optima: Vec<Graph> = optima.into_values().collect();
    let mut all_dp = !optima.is_empty();
    for g in &optima {
        all_dp &= is_degree_partitioned(g, k)?;
    }
    let bound_satisfied = match (best, k >= 2 && n > 2 * k) {
        (Some(b), true) => Some(b <= kappa_bar_upper(k as u64, n as u64)?),
        _ => None,
    };
    Ok(SearchReport {
        n,
        k,
        mode,
        count_candidates: candidates.len(),
        count_minimal,
        best_value: best,
        optima,
        all_optima_degree_partitioned: all_dp,
        bound_satisfied,
    })
}

/// [`find_optimal`] over the native enumeration.
pub fn find_optimal_native(n: usize, k: usize, mode: ConnectivityMode) -> Result<SearchReport> {
    find_optimal(n, k, mode, enumerate_connected_graphs(n)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Every optimum at every order `n ≥ 2k + 1` is degree-partitioned.
    Consistent,
    /// An optimum that is not degree-partitioned.
    Counterexample { n: usize, graph6: String },
    /// No order in range had both `n ≥ 2k + 1` and a survivor.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub k: usize,
    pub mode: ConnectivityMode,
    pub reports: Vec<SearchReport>,
    pub verdict: Verdict,
}

/// Verdict over a set of reports. Orders below `2k + 1` are reported but
/// not judged.
pub fn judge(k: usize, reports: &[SearchReport]) -> Result<Verdict> {
    let mut judged = false;
    for r in reports.iter().filter(|r| r.n > 2 * k && !r.optima.is_empty()) {
        judged = true;
        for g in &r.optima {
            if !is_degree_partitioned(g, k)? {
                return Ok(Verdict::Counterexample { n: r.n, graph6: graph6::encode(g) });
            }
        }
    }
    Ok(if judged { Verdict::Consistent } else { Verdict::Vacuous })
}

pub fn conjecture_evidence_native(k: usize, orders: &[usize], mode: ConnectivityMode) -> Result<Evidence> {
    let reports = orders.iter().map(|&n| find_optimal_native(n, k, mode)).collect::<Result<Vec<_>>>()?;
    let verdict = judge(k, &reports)?;
    Ok(Evidence { k, mode, reports, verdict })
}
