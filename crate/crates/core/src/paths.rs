//! Flow-certified systems of internally disjoint paths, and the three-segment
//! witness that any two W-vertices of `Ψ_{k,p}` are joined by `3k`
//! internally disjoint paths.
//!
//! For `w_0` and `w_t` with `t ≥ 2s` (`s = k³ - k²`, `r = t mod s`) the
//! witness is the concatenation of
//! - P: paths from `w_0` to `w_{r+1}, …, w_{r+3k}` inside `Ψ[-k², r+s]`,
//!   found by flow;
//! - Q: the explicit ladders `w_{r+j} z_{r+s+j} w_{r+s+j} … w_{t-2s+j} z_{t-s+j}`;
//! - R: paths from `z_{t-s+1}, …, z_{t-s+3k}` to `w_t` inside
//!   `Ψ[t-s+1, t+s]`, found by flow.
//!
//! For `t < 2s` a direct flow inside `Ψ[-k², t+s]` is used instead. Every
//! system is re-checked by [`PathSystem::validate`], which shares no code
//! with the flow.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::constructions::{ConstructionSpec, Family};
use crate::flow::SplitNetwork;
use crate::graph::{Graph, VertexClass, VertexSet};
use crate::{par, Error, Result};

/// Index interval `[lo, hi]` (read mod p) across all vertex classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
    pub p: usize,
}

impl Window {
    pub fn new(lo: i64, hi: i64, p: usize) -> Result<Self> {
        if lo > hi || hi - lo + 1 > p as i64 {
            return Err(Error::InvalidWindow { lo, hi, p });
        }
        Ok(Window { lo, hi, p })
    }

    /// Whether the residue `index` has a representative in `[lo, hi]`.
    pub fn contains_index(&self, index: usize) -> bool {
        (index as i64 - self.lo).rem_euclid(self.p as i64) <= self.hi - self.lo
    }

    /// Vertices of a labelled graph whose index lies in the window.
    pub fn vertex_set(&self, g: &Graph) -> Result<VertexSet> {
        let labels = g.labels().ok_or(Error::MissingLabels)?;
        Ok((0..g.order()).filter(|&v| self.contains_index(labels[v].index)).collect())
    }
}

/// Which endpoints paths of a system may share.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointPolicy {
    /// All paths start at the same vertex; ends are distinct.
    SharedSource,
    /// All paths end at the same vertex; starts are distinct.
    SharedTarget,
    /// u–v paths: common start and common end.
    SharedBoth,
    /// No vertex is shared at all.
    Distinct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
    pub policy: EndpointPolicy,
    pub window: Option<Window>,
}

fn violation(msg: String) -> Error {
    Error::InvalidPathSystem(msg)
}

impl PathSystem {
    /// Checks that every sequence is a path of `g`, that paths meet only in
    /// the endpoints the policy allows, and that every vertex lies in the
    /// window.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let shared_start = matches!(self.policy, EndpointPolicy::SharedSource | EndpointPolicy::SharedBoth);
        let shared_end = matches!(self.policy, EndpointPolicy::SharedTarget | EndpointPolicy::SharedBoth);
        let first = self.paths.first().and_then(|p| p.first()).copied();
        let last = self.paths.first().and_then(|p| p.last()).copied();
        let mut used = BTreeSet::new();
        let mut direct = 0;
        for (i, path) in self.paths.iter().enumerate() {
            if path.len() < 2 {
                return Err(violation(format!("path {i} has fewer than two vertices")));
            }
            for &x in path {
                g.check_vertex(x)?;
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(violation(format!("path {i}: {} and {} are not adjacent", w[0], w[1])));
                }
            }
            if shared_start && path.first().copied() != first {
                return Err(violation(format!("path {i} does not start at the shared source")));
            }
            if shared_end && path.last().copied() != last {
                return Err(violation(format!("path {i} does not end at the shared target")));
            }
            if path.len() == 2 && shared_start && shared_end {
                direct += 1;
            }
            let lo = usize::from(shared_start);
            let hi = path.len() - usize::from(shared_end);
            for &x in &path[lo..hi] {
                if (shared_start && Some(x) == first) || (shared_end && Some(x) == last) || !used.insert(x) {
                    return Err(violation(format!("path {i}: vertex {x} is shared")));
                }
            }
        }
        if direct > 1 {
            return Err(violation("the direct edge is used more than once".into()));
        }
        if let Some(window) = &self.window {
            let labels = g.labels().ok_or(Error::MissingLabels)?;
            for (i, path) in self.paths.iter().enumerate() {
                if let Some(&x) = path.iter().find(|&&x| !window.contains_index(labels[x].index)) {
                    return Err(violation(format!(
                        "path {i}: vertex {} outside window [{}, {}]",
                        labels[x], window.lo, window.hi
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `demand` internally disjoint paths from `source` into `targets`, found
/// by max-flow in the vertex-split network restricted to `window`.
///
/// With a single target all paths end there; with several targets each
/// target ends exactly one path. Returns `None` when the flow value falls
/// short of `demand`.
pub fn max_disjoint_paths(
    g: &Graph,
    source: usize,
    targets: &VertexSet,
    demand: usize,
    window: Option<&Window>,
) -> Result<Option<PathSystem>> {
    if demand == 0 {
        return Err(Error::ZeroDemand);
    }
    g.check_vertex(source)?;
    targets.check_within(g.order())?;
    if targets.is_empty() || targets.contains(source) {
        return Err(Error::InvalidParameters("targets must be nonempty and exclude the source".into()));
    }
    if targets.len() > 1 && demand > targets.len() {
        return Err(Error::InvalidParameters(format!("demand {demand} exceeds {} distinct targets", targets.len())));
    }
    let (sub, to_parent) = match window {
        None => (g.clone(), (0..g.order()).collect::<Vec<_>>()),
        Some(w) => {
            let keep = w.vertex_set(g)?;
            if !keep.contains(source) || !targets.is_subset(&keep) {
                return Err(Error::InvalidParameters("source and targets must lie inside the window".into()));
            }
            let induced = g.induced_subgraph(&keep)?;
            (induced.graph, induced.to_parent)
        }
    };
    let local = |x: usize| to_parent.binary_search(&x).expect("vertex inside window");
    let src = local(source);
    let tgt: Vec<usize> = targets.iter().map(local).collect();
    let mut terminals = tgt.clone();
    terminals.push(src);
    let mut sn = SplitNetwork::build(&sub, &terminals, None);
    let mut is_target = vec![false; sub.order()];
    for &t in &tgt {
        is_target[t] = true;
    }
    let sink = if tgt.len() == 1 {
        SplitNetwork::in_node(tgt[0])
    } else {
        let sink = sn.net.add_node();
        for &t in &tgt {
            sn.net.add_arc(SplitNetwork::in_node(t), sink, 1);
        }
        sink
    };
    let start = SplitNetwork::out_node(src);
    let value = sn.net.max_flow(start, sink, demand as u32);
    if (value as usize) < demand {
        return Ok(None);
    }
    let mut paths = Vec::with_capacity(demand);
    for _ in 0..demand {
        let mut path = vec![to_parent[src]];
        let mut node = start;
        loop {
            let arc = sn.net.flow_arcs(node).next().expect("flow conservation");
            sn.net.cancel_unit(arc);
            node = sn.net.head(arc);
            let x = SplitNetwork::vertex_of(node);
            path.push(to_parent[x]);
            if is_target[x] {
                break;
            }
            let inner = sn.net.flow_arcs(node).next().expect("flow through split vertex");
            sn.net.cancel_unit(inner);
            node = sn.net.head(inner);
        }
        paths.push(path);
    }
    paths.sort_by_key(|p| *p.last().expect("nonempty path"));
    let system = PathSystem {
        paths,
        policy: if tgt.len() == 1 { EndpointPolicy::SharedBoth } else { EndpointPolicy::SharedSource },
        window: window.copied(),
    };
    system.validate(g)?;
    Ok(Some(system))
}

/// Which part of the witness a check concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    SmallT,
    P,
    Q,
    R,
    Full,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::SmallT => "small-t",
            WitnessKind::P => "P",
            WitnessKind::Q => "Q",
            WitnessKind::R => "R",
            WitnessKind::Full => "full",
        }
    }
}

/// Outcome of one finite check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub kind: WitnessKind,
    /// `t` for small-t, Q, R and full checks; `r` for P.
    pub parameter: usize,
    pub system: Option<PathSystem>,
    pub error: Option<String>,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.system.is_some() && self.error.is_none()
    }

    fn from_result(kind: WitnessKind, parameter: usize, result: Result<Option<PathSystem>>) -> Self {
        match result {
            Ok(Some(system)) => WitnessCheck { kind, parameter, system: Some(system), error: None },
            Ok(None) => WitnessCheck { kind, parameter, system: None, error: Some("no system of the required size".into()) },
            Err(e) => WitnessCheck { kind, parameter, system: None, error: Some(format!("{e}")) },
        }
    }
}

/// A built `Ψ_{k,p}` with the witness constructions.
#[derive(Debug, Clone)]
pub struct PsiWitness {
    spec: ConstructionSpec,
    graph: Graph,
}

impl PsiWitness {
    pub fn new(spec: ConstructionSpec) -> Result<Self> {
        if spec.family != Family::Psi {
            return Err(Error::InvalidParameters("witnesses are defined on Psi".into()));
        }
        Ok(PsiWitness { graph: spec.build()?, spec })
    }

    pub fn spec(&self) -> &ConstructionSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn k(&self) -> i64 {
        self.spec.k as i64
    }

    fn s(&self) -> i64 {
        self.spec.s() as i64
    }

    fn w(&self, i: i64) -> usize {
        self.spec.vertex(VertexClass::W, i)
    }

    fn z(&self, i: i64) -> usize {
        self.spec.vertex(VertexClass::Z, i)
    }

    fn window(&self, lo: i64, hi: i64) -> Result<Window> {
        Window::new(lo, hi, self.spec.p)
    }

    /// Window `Ψ[-k², t+s]` containing the whole w_0–w_t witness.
    pub fn full_window(&self, t: usize) -> Result<Window> {
        self.window(-self.k() * self.k(), t as i64 + self.s())
    }

    /// Direct flow check for `1 ≤ t < 2s`.
    pub fn small_t_witness(&self, t: usize) -> Result<Option<PathSystem>> {
        if t == 0 || t as i64 >= 2 * self.s() {
            return Err(Error::InvalidParameters(format!("small-t check needs 1 <= t < 2s, got t={t}")));
        }
        let window = self.full_window(t)?;
        let target: VertexSet = [self.w(t as i64)].into_iter().collect();
        max_disjoint_paths(&self.graph, self.w(0), &target, 3 * self.spec.k, Some(&window))
    }

    /// P: `3k` paths from `w_0` to `w_{r+1}, …, w_{r+3k}` in `Ψ[-k², r+s]`.
    pub fn find_p_collection(&self, r: usize) -> Result<Option<PathSystem>> {
        if r as i64 >= self.s() {
            return Err(Error::InvalidParameters(format!("P needs 0 <= r < s, got r={r}")));
        }
        let r = r as i64;
        let window = self.window(-self.k() * self.k(), r + self.s())?;
        let targets: VertexSet = (1..=3 * self.k()).map(|j| self.w(r + j)).collect();
        max_disjoint_paths(&self.graph, self.w(0), &targets, 3 * self.spec.k, Some(&window))
    }

    /// R: `3k` paths from `z_{t-s+1}, …, z_{t-s+3k}` to `w_t` in
    /// `Ψ[t-s+1, t+s]`, found as flow out of `w_t` and reversed.
    pub fn find_r_collection(&self, t: usize) -> Result<Option<PathSystem>> {
        if (t as i64) < 2 * self.s() {
            return Err(Error::InvalidParameters(format!("R needs t >= 2s, got t={t}")));
        }
        let (t, s) = (t as i64, self.s());
        let window = self.window(t - s + 1, t + s)?;
        let targets: VertexSet = (1..=3 * self.k()).map(|j| self.z(t - s + j)).collect();
        let found = max_disjoint_paths(&self.graph, self.w(t), &targets, 3 * self.spec.k, Some(&window))?;
        Ok(found.map(|sys| {
            let mut paths: Vec<Vec<usize>> = sys
                .paths
                .into_iter()
                .map(|mut p| {
                    p.reverse();
                    p
                })
                .collect();
            paths.sort_by_key(|p| p[0]);
            PathSystem { paths, policy: EndpointPolicy::SharedTarget, window: Some(window) }
        }))
    }

    /// Q: the explicit ladders, `Q_j` running from `w_{r+j}` to
    /// `z_{t-s+j}` through alternating stride-s steps.
    pub fn build_q_segment(&self, t: usize) -> Result<PathSystem> {
        let (t, s, k) = (t as i64, self.s(), self.k());
        if t < 2 * s {
            return Err(Error::InvalidParameters(format!("Q needs t >= 2s, got t={t}")));
        }
        let r = t % s;
        let paths: Vec<Vec<usize>> = (1..=3 * k)
            .map(|j| {
                let mut path = Vec::new();
                let mut idx = r + j;
                while idx <= t - 2 * s + j {
                    path.push(self.w(idx));
                    path.push(self.z(idx + s));
                    idx += s;
                }
                path
            })
            .collect();
        for (j, path) in (1..=3 * k).zip(&paths) {
            if path.first() != Some(&self.w(r + j)) || path.last() != Some(&self.z(t - s + j)) {
                return Err(Error::SegmentFailed { segment: "Q", detail: format!("ladder {j} has wrong endpoints") });
            }
        }
        let system = PathSystem { paths, policy: EndpointPolicy::Distinct, window: Some(self.window(r + 1, t - s + 3 * k)?) };
        system.validate(&self.graph)?;
        let inner = self.window(r + s + 1, t - s + 3 * k)?;
        let labels = self.graph.labels().expect("Psi is labelled");
        for path in &system.paths {
            if let Some(&x) = path[1..path.len() - 1].iter().find(|&&x| !inner.contains_index(labels[x].index)) {
                return Err(Error::SegmentFailed { segment: "Q", detail: format!("internal vertex {} outside [{}, {}]", labels[x], inner.lo, inner.hi) });
            }
        }
        Ok(system)
    }

    /// `3k` internally disjoint `w_0`–`w_t` paths inside `Ψ[-k², t+s]`, for
    /// `1 ≤ t ≤ p/2`.
    pub fn assemble_full_witness(&self, t: usize) -> Result<PathSystem> {
        if t == 0 || 2 * t > self.spec.p {
            return Err(Error::InvalidParameters(format!("full witness needs 1 <= t <= p/2, got t={t}")));
        }
        if (t as i64) < 2 * self.s() {
            return self
                .small_t_witness(t)?
                .ok_or_else(|| Error::SegmentFailed { segment: "small-t", detail: format!("no 3k paths for t={t}") });
        }
        let r = (t as i64 % self.s()) as usize;
        let p_sys = self
            .find_p_collection(r)?
            .ok_or_else(|| Error::SegmentFailed { segment: "P", detail: format!("no system for r={r}") })?;
        let q_sys = self.build_q_segment(t)?;
        let r_sys = self
            .find_r_collection(t)?
            .ok_or_else(|| Error::SegmentFailed { segment: "R", detail: format!("no system for t={t}") })?;
        let mut paths = Vec::with_capacity(q_sys.paths.len());
        for q in &q_sys.paths {
            let head = p_sys.paths.iter().find(|p| p.last() == q.first());
            let tail = r_sys.paths.iter().find(|rp| rp.first() == q.last());
            let (Some(head), Some(tail)) = (head, tail) else {
                return Err(Error::SegmentFailed { segment: "full", detail: "segments do not line up".into() });
            };
            let mut path = head.clone();
            path.extend_from_slice(&q[1..]);
            path.extend_from_slice(&tail[1..]);
            paths.push(path);
        }
        let system = PathSystem { paths, policy: EndpointPolicy::SharedBoth, window: Some(self.full_window(t)?) };
        system
            .validate(&self.graph)
            .map_err(|e| Error::SegmentFailed { segment: "full", detail: format!("{e}") })?;
        Ok(system)
    }

    pub fn check_small_t(&self, ts: &[usize]) -> Vec<WitnessCheck> {
        par::map(ts, |&t| WitnessCheck::from_result(WitnessKind::SmallT, t, self.small_t_witness(t)))
    }

    pub fn check_p(&self, rs: &[usize]) -> Vec<WitnessCheck> {
        par::map(rs, |&r| WitnessCheck::from_result(WitnessKind::P, r, self.find_p_collection(r)))
    }

    pub fn check_r(&self, ts: &[usize]) -> Vec<WitnessCheck> {
        par::map(ts, |&t| WitnessCheck::from_result(WitnessKind::R, t, self.find_r_collection(t)))
    }

    pub fn check_q(&self, ts: &[usize]) -> Vec<WitnessCheck> {
        par::map(ts, |&t| WitnessCheck::from_result(WitnessKind::Q, t, self.build_q_segment(t).map(Some)))
    }

    pub fn check_full(&self, ts: &[usize]) -> Vec<WitnessCheck> {
        par::map(ts, |&t| WitnessCheck::from_result(WitnessKind::Full, t, self.assemble_full_witness(t).map(Some)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, Label};

    fn psi3() -> PsiWitness {
        PsiWitness::new(ConstructionSpec::psi(3, 72).unwrap()).unwrap()
    }

    #[test]
    fn windows() {
        let w = Window::new(-9, 19, 72).unwrap();
        assert!(w.contains_index(63) && w.contains_index(0) && w.contains_index(19));
        assert!(!w.contains_index(20) && !w.contains_index(62));
        assert!(Window::new(0, 72, 72).is_err());
        assert!(Window::new(3, 2, 72).is_err());
    }

    #[test]
    fn generic_systems() {
        let k4 = named::complete(4);
        let sys = max_disjoint_paths(&k4, 0, &[3].into_iter().collect(), 3, None).unwrap().unwrap();
        assert_eq!(sys.paths, vec![vec![0, 1, 3], vec![0, 2, 3], vec![0, 3]]);
        let star = named::star(3);
        assert_eq!(max_disjoint_paths(&star, 0, &[1].into_iter().collect(), 2, None).unwrap(), None);
        assert_eq!(max_disjoint_paths(&star, 0, &[1].into_iter().collect(), 0, None), Err(Error::ZeroDemand));
    }

    #[test]
    fn validator_rejects() {
        let k4 = named::complete(4);
        let bad = |paths: Vec<Vec<usize>>, policy| PathSystem { paths, policy, window: None }.validate(&k4).is_err();
        assert!(bad(vec![vec![0, 3], vec![0, 3]], EndpointPolicy::SharedBoth));
        assert!(bad(vec![vec![0, 1, 3], vec![0, 1, 2, 3]], EndpointPolicy::SharedBoth));
        assert!(bad(vec![vec![0, 1], vec![0, 2, 1]], EndpointPolicy::SharedSource));
        assert!(bad(vec![vec![0, 1, 0]], EndpointPolicy::Distinct));
        let p4 = named::path(4);
        assert!(PathSystem { paths: vec![vec![0, 2]], policy: EndpointPolicy::Distinct, window: None }.validate(&p4).is_err());
    }

    #[test]
    fn small_t_and_p() {
        let psi = psi3();
        let sys = psi.small_t_witness(1).unwrap().unwrap();
        assert_eq!(sys.paths.len(), 9);
        let sys = psi.find_p_collection(0).unwrap().unwrap();
        let ends: Vec<usize> = sys.paths.iter().map(|p| *p.last().unwrap()).collect();
        assert_eq!(ends, (1..=9).collect::<Vec<_>>());
        assert!(psi.find_p_collection(18).is_err());
    }

    #[test]
    fn q_segment_expansion() {
        let psi = psi3();
        let q = psi.build_q_segment(36).unwrap();
        let g = psi.graph();
        let names = |p: &Vec<usize>| p.iter().map(|&x| g.label(x).unwrap()).collect::<Vec<Label>>();
        // t = 2s: each ladder is the single edge w_j z_{18+j}
        assert_eq!(names(&q.paths[0]), vec![Label::new(VertexClass::W, 1), Label::new(VertexClass::Z, 19)]);
        let q = psi.build_q_segment(56).unwrap();
        // r = 2: w_3 z_21 w_21 z_39
        assert_eq!(
            names(&q.paths[0]),
            vec![
                Label::new(VertexClass::W, 3),
                Label::new(VertexClass::Z, 21),
                Label::new(VertexClass::W, 21),
                Label::new(VertexClass::Z, 39)
            ]
        );
        assert!(psi.build_q_segment(20).is_err());
    }

    #[test]
    fn full_witness_and_injected_violation() {
        let psi = psi3();
        let sys = psi.assemble_full_witness(36).unwrap();
        assert_eq!(sys.paths.len(), 9);
        assert!(sys.paths.iter().all(|p| p[0] == 0 && *p.last().unwrap() == 36));
        let mut broken = psi.assemble_full_witness(36).unwrap();
        broken.window = Some(Window::new(1, 54, 72).unwrap());
        assert!(broken.validate(psi.graph()).is_err());
        assert!(psi.assemble_full_witness(37).is_err());
        assert_eq!(psi.assemble_full_witness(5).unwrap().paths.len(), 9);
    }
}
