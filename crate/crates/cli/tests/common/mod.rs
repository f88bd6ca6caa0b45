//! Fixture loading and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use avgconn::io::read_graph6_file;
use avgconn_core::Graph;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}

/// One graph per isomorphism class of connected graphs of order `n`.
pub fn connected_fixture(n: usize) -> Vec<Graph> {
    read_graph6_file(&data_path(&format!("connected_n{n}.g6"))).expect("fixture readable")
}

/// All connected graphs of orders 2..=7.
pub fn corpus() -> Vec<Graph> {
    (2..=7).flat_map(connected_fixture).collect()
}

fn subsets_of_size(items: &[usize], size: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..items.len() {
            cur.push(items[i]);
            if go(items, size, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, size, 0, &mut Vec::new(), f)
}

fn connected_avoiding(adj: &[Vec<usize>], u: usize, v: usize, blocked_vertex: &[bool], blocked_edge: &dyn Fn(usize, usize) -> bool) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        if x == v {
            return true;
        }
        for &y in &adj[x] {
            if !seen[y] && !blocked_vertex[y] && !blocked_edge(x, y) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|x| g.neighbors(x).to_vec()).collect()
}

/// Smallest vertex set separating a nonadjacent pair, by trying subsets in
/// order of size; for an adjacent pair, one more than the same quantity
/// with the edge removed.
pub fn brute_vertex_connectivity(g: &Graph, u: usize, v: usize) -> u32 {
    let mut adj = adjacency(g);
    let mut extra = 0;
    if g.has_edge(u, v) {
        adj[u].retain(|&x| x != v);
        adj[v].retain(|&x| x != u);
        extra = 1;
    }
    let rest: Vec<usize> = (0..g.order()).filter(|&x| x != u && x != v).collect();
    for size in 0..=rest.len() {
        let found = subsets_of_size(&rest, size, &mut |s| {
            let mut blocked = vec![false; g.order()];
            for &x in s {
                blocked[x] = true;
            }
            !connected_avoiding(&adj, u, v, &blocked, &|_, _| false)
        });
        if found {
            return size as u32 + extra;
        }
    }
    // u and v joined through every other vertex: n - 2 paths of length two
    rest.len() as u32 + extra
}

/// Smallest edge set separating `u` from `v`.
pub fn brute_edge_connectivity(g: &Graph, u: usize, v: usize) -> u32 {
    let adj = adjacency(g);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let ids: Vec<usize> = (0..edges.len()).collect();
    let blocked = vec![false; g.order()];
    for size in 0..=edges.len() {
        let found = subsets_of_size(&ids, size, &mut |s| {
            let cut = |a: usize, b: usize| s.iter().any(|&i| edges[i] == (a.min(b), a.max(b)));
            !connected_avoiding(&adj, u, v, &blocked, &cut)
        });
        if found {
            return size as u32;
        }
    }
    unreachable!("removing every edge separates")
}

/// Calls `f` on every composition of `total` into `parts` positive parts.
pub fn compositions(total: u64, parts: usize, f: &mut impl FnMut(&[u64])) {
    fn go(left: u64, parts: usize, cur: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if parts == 1 {
            cur.push(left);
            f(cur);
            cur.pop();
            return;
        }
        for first in 1..=left - (parts as u64 - 1) {
            cur.push(first);
            go(left - first, parts - 1, cur, f);
            cur.pop();
        }
    }
    go(total, parts, &mut Vec::new(), f);
}

/// A uniformly random composition of `total` into `parts` positive parts.
pub fn random_composition(rng: &mut impl rand::Rng, total: u64, parts: u64) -> Vec<u64> {
    let mut cuts: Vec<u64> =
        rand::seq::index::sample(rng, (total - 1) as usize, (parts - 1) as usize).into_iter().map(|c| c as u64 + 1).collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let part = c - prev;
            prev = c;
            part
        })
        .collect()
}
