//! Vertex separators: minimum separators from flow cuts, brute-force
//! enumeration of inclusion-minimal separators, and the structural
//! classification of minimal separators of `G_{k,p}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::constructions::{ConstructionSpec, Family};
use crate::flow::{SplitNetwork, INF};
use crate::graph::{Graph, VertexClass, VertexSet};
use crate::{par, Error, Result};

/// Default order limit for subset enumeration.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 16;

/// Indices `start, start+1, …, start+len-1` taken mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicRun {
    pub start: usize,
    pub len: usize,
}

impl CyclicRun {
    pub fn indices(&self, p: usize) -> impl Iterator<Item = usize> {
        let start = self.start;
        (0..self.len).map(move |i| (start + i) % p)
    }
}

/// Two-run decomposition `S ∩ W = L_W ∪ R_W`, `S ∩ X = L_X ∪ R_X`, where
/// the runs flank the W- and X-parts of the u-side component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoRunShape {
    pub left_w: CyclicRun,
    pub right_w: CyclicRun,
    pub left_x: CyclicRun,
    pub right_x: CyclicRun,
    /// The u-side component's W-part (`C_W`) and X-part (`C_X`).
    pub component_w: CyclicRun,
    pub component_x: CyclicRun,
    /// Left and right runs meet around the cycle (no white vertex left in
    /// W or in X). Reported for inspection; it does not occur for genuine
    /// minimal separators.
    pub runs_touch: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparatorClass {
    /// `S = N(endpoint)`.
    NeighbourhoodOfEndpoint { endpoint: usize },
    TwoRun(TwoRunShape),
    Other,
}

impl SeparatorClass {
    pub fn name(&self) -> &'static str {
        match self {
            SeparatorClass::NeighbourhoodOfEndpoint { .. } => "neighbourhood-of-endpoint",
            SeparatorClass::TwoRun(_) => "two-run",
            SeparatorClass::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorCertificate {
    pub u: usize,
    pub v: usize,
    pub set: VertexSet,
    /// Component of `G - S` containing `u` (resp. `v`).
    pub u_side: VertexSet,
    pub v_side: VertexSet,
    pub minimal: bool,
    pub classification: Option<SeparatorClass>,
}

impl SeparatorCertificate {
    /// Checks that `set` separates `u` from `v` and records both sides.
    /// Minimality uses the criterion that every separator vertex has a
    /// neighbour in both sides.
    pub fn new(g: &Graph, u: usize, v: usize, set: VertexSet) -> Result<Self> {
        g.check_pair(u, v)?;
        set.check_within(g.order())?;
        if set.contains(u) || set.contains(v) {
            return Err(Error::NotSeparating(u, v));
        }
        let mut blocked = vec![false; g.order()];
        for s in set.iter() {
            blocked[s] = true;
        }
        let from_u = g.reachable_avoiding(u, &blocked);
        if from_u[v] {
            return Err(Error::NotSeparating(u, v));
        }
        let from_v = g.reachable_avoiding(v, &blocked);
        let u_side: VertexSet = (0..g.order()).filter(|&x| from_u[x]).collect();
        let v_side: VertexSet = (0..g.order()).filter(|&x| from_v[x]).collect();
        let minimal = set.iter().all(|s| {
            let nb = g.neighbors(s);
            nb.iter().any(|&w| from_u[w]) && nb.iter().any(|&w| from_v[w])
        });
        Ok(SeparatorCertificate { u, v, set, u_side, v_side, minimal, classification: None })
    }

    /// Re-derives the certificate from scratch and compares.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fresh = SeparatorCertificate::new(g, self.u, self.v, self.set.clone())?;
        if fresh.u_side != self.u_side || fresh.v_side != self.v_side || fresh.minimal != self.minimal {
            return Err(Error::InvalidParameters("certificate does not match the graph".into()));
        }
        Ok(())
    }
}

/// Does removing `set` disconnect `u` from `v`?
pub fn separates(g: &Graph, set: &VertexSet, u: usize, v: usize) -> bool {
    let mut blocked = vec![false; g.order()];
    for s in set.iter() {
        blocked[s] = true;
    }
    !blocked[u] && !blocked[v] && !g.reachable_avoiding(u, &blocked)[v]
}

/// Minimality by definition: no proper subset of `set` separates.
pub fn is_minimal_by_subsets(g: &Graph, set: &VertexSet, u: usize, v: usize) -> bool {
    let ids = set.as_slice();
    assert!(ids.len() < 32, "subset check limited to small sets");
    let full = (1u32 << ids.len()) - 1;
    separates(g, set, u, v)
        && (0..full).all(|mask| {
            let sub = ids.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
            !separates(g, &sub, u, v)
        })
}

/// A minimum u–v vertex separator read off the residual network of a
/// maximum flow.
pub fn minimum_separator(g: &Graph, u: usize, v: usize) -> Result<SeparatorCertificate> {
    g.check_pair(u, v)?;
    if g.has_edge(u, v) {
        return Err(Error::AdjacentPair(u.min(v), u.max(v)));
    }
    let mut sn = SplitNetwork::build_with_edge_capacity(g, &[u, v], None, INF);
    let source = SplitNetwork::out_node(u);
    let value = sn.net.max_flow(source, SplitNetwork::in_node(v), INF);
    let reach = sn.net.residual_reachable(source);
    let set: VertexSet = (0..g.order())
        .filter(|&x| x != u && x != v)
        .filter(|&x| reach[SplitNetwork::in_node(x)] && !reach[SplitNetwork::out_node(x)])
        .collect();
    debug_assert_eq!(set.len() as u32, value);
    let cert = SeparatorCertificate::new(g, u, v, set)?;
    debug_assert!(cert.minimal);
    Ok(cert)
}

fn bitmask_adjacency(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|x| g.neighbors(x).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

fn flood(adj: &[u64], start: usize, blocked: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[x];
        }
        next &= !seen & !blocked;
        seen |= next;
        frontier = next;
    }
    seen
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Every inclusion-minimal u–v separator, by scanning all subsets of
/// `V - {u, v}`. Sorted by size, then lexicographically.
pub fn enumerate_minimal_separators(
    g: &Graph,
    u: usize,
    v: usize,
    max_n: usize,
) -> Result<Vec<SeparatorCertificate>> {
    g.check_pair(u, v)?;
    let n = g.order();
    if n > max_n.min(64) {
        return Err(Error::BruteForceLimit { n, limit: max_n.min(64) });
    }
    if g.has_edge(u, v) {
        return Err(Error::AdjacentPair(u.min(v), u.max(v)));
    }
    let adj = bitmask_adjacency(g);
    let rest: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let mut found = Vec::new();
    for bits in 0u64..(1u64 << rest.len()) {
        let mut set = 0u64;
        let mut b = bits;
        while b != 0 {
            set |= 1 << rest[b.trailing_zeros() as usize];
            b &= b - 1;
        }
        let side_u = flood(&adj, u, set);
        if side_u >> v & 1 == 1 {
            continue;
        }
        let side_v = flood(&adj, v, set);
        let mut s = set;
        let mut ok = true;
        while s != 0 {
            let x = s.trailing_zeros() as usize;
            s &= s - 1;
            if adj[x] & side_u == 0 || adj[x] & side_v == 0 {
                ok = false;
                break;
            }
        }
        if ok {
            found.push(SeparatorCertificate {
                u,
                v,
                set: mask_to_set(set),
                u_side: mask_to_set(side_u),
                v_side: mask_to_set(side_v),
                minimal: true,
                classification: None,
            });
        }
    }
    found.sort_by(|a, b| (a.set.len(), &a.set).cmp(&(b.set.len(), &b.set)));
    Ok(found)
}

/// Finds the unique cyclic run of `true` entries; `None` if the marked
/// indices are empty, everything, or not a single run.
fn single_run(marks: &[bool]) -> Option<CyclicRun> {
    let p = marks.len();
    let len = marks.iter().filter(|&&m| m).count();
    if len == 0 || len == p {
        return None;
    }
    let mut starts = (0..p).filter(|&i| marks[i] && !marks[(i + p - 1) % p]);
    let start = starts.next()?;
    starts.next().is_none().then_some(CyclicRun { start, len })
}

/// Classifies a minimal separator of labelled `G_{k,p}` as `S = N(u)`,
/// `S = N(v)`, the two-run shape, or `Other` (which a minimal separator of
/// `G_{k,p}` never is).
pub fn classify(g: &Graph, cert: &SeparatorCertificate, spec: &ConstructionSpec) -> Result<SeparatorClass> {
    let labels = g.labels().ok_or(Error::MissingLabels)?;
    if spec.family != Family::Gkp || g.order() != spec.order() {
        return Err(Error::InvalidParameters("classification applies to G_{k,p} instances".into()));
    }
    for endpoint in [cert.u, cert.v] {
        if cert.set == g.neighbourhood(endpoint) {
            return Ok(SeparatorClass::NeighbourhoodOfEndpoint { endpoint });
        }
    }
    let (k, p) = (spec.k, spec.p);
    if cert.set.len() != 2 * k - 2 {
        return Ok(SeparatorClass::Other);
    }
    let mut cw = vec![false; p];
    let mut cx = vec![false; p];
    for x in cert.u_side.iter() {
        let l = labels[x];
        match l.class {
            VertexClass::W => cw[l.index] = true,
            _ => cx[l.index] = true,
        }
    }
    let (Some(run_w), Some(run_x)) = (single_run(&cw), single_run(&cx)) else {
        return Ok(SeparatorClass::Other);
    };
    let a = run_w.start;
    let t = run_w.len - 1;
    let left_off = (run_x.start + p - a) % p;
    let right_off = left_off + run_x.len - 1;
    if left_off > k - 1 || right_off < t || right_off > t + k - 1 {
        return Ok(SeparatorClass::Other);
    }
    let shape = TwoRunShape {
        left_w: CyclicRun { start: (a + p - (k - 1 - left_off)) % p, len: k - 1 - left_off },
        right_w: CyclicRun { start: (a + t + 1) % p, len: right_off - t },
        left_x: CyclicRun { start: a, len: left_off },
        right_x: CyclicRun { start: (a + right_off + 1) % p, len: t + k - 1 - right_off },
        component_w: run_w,
        component_x: run_x,
        runs_touch: false,
    };
    let w_used = shape.left_w.len + run_w.len + shape.right_w.len;
    let x_used = shape.left_x.len + run_x.len + shape.right_x.len;
    if w_used > p || x_used > p {
        return Ok(SeparatorClass::Other);
    }
    let expected: VertexSet = shape
        .left_w
        .indices(p)
        .chain(shape.right_w.indices(p))
        .map(|i| spec.vertex(VertexClass::W, i as i64))
        .chain(shape.left_x.indices(p).chain(shape.right_x.indices(p)).map(|i| spec.vertex(VertexClass::X, i as i64)))
        .collect();
    if expected.len() != 2 * k - 2 || expected != cert.set {
        return Ok(SeparatorClass::Other);
    }
    Ok(SeparatorClass::TwoRun(TwoRunShape { runs_touch: w_used == p || x_used == p, ..shape }))
}

/// Per-pair tally of the minimal separators of one `G_{k,p}` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSeparatorSummary {
    pub u: usize,
    pub v: usize,
    pub separators: usize,
    pub size_k: usize,
    pub size_2k_minus_2: usize,
    pub other_size: usize,
    pub neighbourhood: usize,
    pub two_run: usize,
    pub other_class: usize,
    pub touching: usize,
    pub certificates: Vec<SeparatorCertificate>,
}

impl PairSeparatorSummary {
    pub fn passed(&self) -> bool {
        self.separators > 0 && self.other_size == 0 && self.other_class == 0
    }
}

/// Exhaustive separator-structure check on `G_{k,p}`: every minimal
/// separator of every nonadjacent pair must have size `k` or `2k - 2` and
/// classify as a neighbourhood or two-run shape.
pub fn verify_gkp_separators(k: usize, p: usize, max_n: usize) -> Result<Vec<PairSeparatorSummary>> {
    let spec = ConstructionSpec::gkp(k, p)?;
    let g = spec.build()?;
    if g.order() > max_n {
        return Err(Error::BruteForceLimit { n: g.order(), limit: max_n });
    }
    let pairs: Vec<(usize, usize)> = g.edges_complement();
    let results = par::map(&pairs, |&(u, v)| -> Result<PairSeparatorSummary> {
        let mut certs = enumerate_minimal_separators(&g, u, v, max_n)?;
        let mut summary = PairSeparatorSummary {
            u,
            v,
            separators: certs.len(),
            size_k: 0,
            size_2k_minus_2: 0,
            other_size: 0,
            neighbourhood: 0,
            two_run: 0,
            other_class: 0,
            touching: 0,
            certificates: Vec::new(),
        };
        for cert in &mut certs {
            match cert.set.len() {
                s if s == k => summary.size_k += 1,
                s if s == 2 * k - 2 => summary.size_2k_minus_2 += 1,
                _ => summary.other_size += 1,
            }
            let class = classify(&g, cert, &spec)?;
            match class {
                SeparatorClass::NeighbourhoodOfEndpoint { .. } => summary.neighbourhood += 1,
                SeparatorClass::TwoRun(shape) => {
                    summary.two_run += 1;
                    summary.touching += usize::from(shape.runs_touch);
                }
                SeparatorClass::Other => summary.other_class += 1,
            }
            cert.classification = Some(class);
        }
        summary.certificates = certs;
        Ok(summary)
    });
    results.into_iter().collect()
}

/// The set `{w_1..w_{k-1}} ∪ {w_{p-k+1}..w_{p-1}}`, which separates `w_0`
/// from `w_j` in `Γ_{k,p}` for `k ≤ j ≤ p - k`.
pub fn gamma_window_separator(spec: &ConstructionSpec, g: &Graph, j: usize) -> Result<SeparatorCertificate> {
    if spec.family != Family::Gamma {
        return Err(Error::InvalidParameters("expected a Gamma spec".into()));
    }
    let (k, p) = (spec.k as i64, spec.p as i64);
    let set = (1..k).chain(p - k + 1..p).map(|i| spec.vertex(VertexClass::W, i)).collect();
    SeparatorCertificate::new(g, 0, spec.vertex(VertexClass::W, j as i64), set)
}

impl Graph {
    /// Nonadjacent pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn edges_complement(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !self.has_edge(u, v)).collect()
    }
}
