//! Integral maximum flow (Dinic) plus the vertex-split network used for
//! internally disjoint paths.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

pub(crate) const INF: u32 = u32::MAX / 2;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    residual: u32,
    capacity: u32,
}

/// Arcs are stored in pairs: arc `e` and its reverse `e ^ 1`.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<u32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: Vec::new(),
            cursor: Vec::new(),
        }
    }

    pub(crate) fn add_node(&mut self) -> usize {
        self.out.push(Vec::new());
        self.out.len() - 1
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, capacity: u32) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, residual: capacity, capacity });
        self.arcs.push(Arc { to: from, residual: 0, capacity: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.clear();
        self.level.resize(self.out.len(), u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let a = &self.arcs[e];
                if a.residual > 0 && self.level[a.to] == u32::MAX {
                    self.level[a.to] = self.level[u] + 1;
                    if a.to == t {
                        return true;
                    }
                    queue.push_back(a.to);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    /// Finds one augmenting path in the level graph with an explicit stack.
    fn augment(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut stack: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let pushed = stack.iter().map(|&e| self.arcs[e].residual).min().unwrap_or(0).min(limit);
                for &e in &stack {
                    self.arcs[e].residual -= pushed;
                    self.arcs[e ^ 1].residual += pushed;
                }
                return pushed;
            }
            let mut advanced = false;
            while self.cursor[u] < self.out[u].len() {
                let e = self.out[u][self.cursor[u]];
                let a = &self.arcs[e];
                if a.residual > 0 && self.level[a.to] == self.level[u] + 1 {
                    stack.push(e);
                    u = a.to;
                    advanced = true;
                    break;
                }
                self.cursor[u] += 1;
            }
            if !advanced {
                // dead end: retreat and skip the arc that led here
                self.level[u] = u32::MAX;
                match stack.pop() {
                    None => return 0,
                    Some(e) => {
                        u = self.arcs[e ^ 1].to;
                        self.cursor[u] += 1;
                    }
                }
            }
        }
    }

    /// Maximum flow from `s` to `t`, stopping early once `limit` is reached.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut total = 0;
        while total < limit && self.bfs(s, t) {
            self.cursor.clear();
            self.cursor.resize(self.out.len(), 0);
            loop {
                let pushed = self.augment(s, t, limit - total);
                if pushed == 0 {
                    break;
                }
                total += pushed;
                if total >= limit {
                    break;
                }
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let a = &self.arcs[e];
                if a.residual > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }

    pub(crate) fn flow_on(&self, arc: usize) -> u32 {
        self.arcs[arc].capacity - self.arcs[arc].residual
    }

    /// Forward arcs leaving `u` that currently carry flow, in insertion order.
    pub(crate) fn flow_arcs(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[u].iter().copied().filter(move |&e| e % 2 == 0 && self.flow_on(e) > 0)
    }

    pub(crate) fn head(&self, arc: usize) -> usize {
        self.arcs[arc].to
    }

    pub(crate) fn cancel_unit(&mut self, arc: usize) {
        self.arcs[arc].residual += 1;
        self.arcs[arc ^ 1].residual -= 1;
    }
}

/// Vertex-split network: vertex `v` becomes `in(v) = 2v` and
/// `out(v) = 2v + 1`. Unsplit vertices (terminals) have no internal arc,
/// so paths can start or end there but never pass through.
pub(crate) struct SplitNetwork {
    pub(crate) net: FlowNetwork,
}

impl SplitNetwork {
    pub(crate) fn in_node(v: usize) -> usize {
        2 * v
    }

    pub(crate) fn out_node(v: usize) -> usize {
        2 * v + 1
    }

    pub(crate) fn vertex_of(node: usize) -> usize {
        node / 2
    }

    /// Every edge gets unit arcs in both directions; every vertex not in
    /// `terminals` gets a unit internal arc. `skip` removes one edge.
    pub(crate) fn build(g: &Graph, terminals: &[usize], skip: Option<(usize, usize)>) -> Self {
        Self::build_with_edge_capacity(g, terminals, skip, 1)
    }

    /// Edge arcs of capacity [`INF`] force every minimum cut onto the
    /// split arcs, so the cut reads off as a vertex set.
    pub(crate) fn build_with_edge_capacity(
        g: &Graph,
        terminals: &[usize],
        skip: Option<(usize, usize)>,
        edge_capacity: u32,
    ) -> Self {
        let n = g.order();
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            if !terminals.contains(&v) {
                net.add_arc(Self::in_node(v), Self::out_node(v), 1);
            }
        }
        for u in 0..n {
            for &w in g.neighbors(u) {
                if skip == Some((u, w)) || skip == Some((w, u)) {
                    continue;
                }
                net.add_arc(Self::out_node(u), Self::in_node(w), edge_capacity);
            }
        }
        SplitNetwork { net }
    }
}

/// Bidirected unit network for edge-disjoint paths.
pub(crate) fn edge_network(g: &Graph) -> FlowNetwork {
    let mut net = FlowNetwork::new(g.order());
    for u in 0..g.order() {
        for &w in g.neighbors(u) {
            net.add_arc(u, w, 1);
        }
    }
    net
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        let mut net = FlowNetwork::new(6);
        for (u, v, c) in [(0, 1, 10), (0, 2, 10), (1, 3, 4), (1, 4, 8), (2, 4, 9), (3, 5, 10), (4, 3, 6), (4, 5, 10)] {
            net.add_arc(u, v, c);
        }
        assert_eq!(net.clone().max_flow(0, 5, INF), 19);
        assert_eq!(net.max_flow(0, 5, 7), 7);
    }

    #[test]
    fn disconnected_and_cut() {
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 3);
        net.add_arc(2, 3, 5);
        assert_eq!(net.max_flow(0, 3, INF), 0);
        let reach = net.residual_reachable(0);
        assert_eq!(reach, vec![true, true, false, false]);
    }
}
