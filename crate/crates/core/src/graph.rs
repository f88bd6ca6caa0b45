//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Graphs are immutable: every mutation returns a new graph. Neighbour lists
//! are kept sorted in ascending id order so that every traversal (and hence
//! every flow decomposition and report) is reproducible.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Vertex class tag of a construction-produced graph.
///
/// `Γ_{k,p}` reuses `X`, `Y`, `Z` for its three copies `X₁`, `X₂`, `X₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexClass {
    W,
    X,
    Y,
    Z,
}

impl VertexClass {
    pub const ALL: [VertexClass; 4] = [VertexClass::W, VertexClass::X, VertexClass::Y, VertexClass::Z];

    pub fn as_char(self) -> char {
        match self {
            VertexClass::W => 'w',
            VertexClass::X => 'x',
            VertexClass::Y => 'y',
            VertexClass::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'w' | 'W' => Some(VertexClass::W),
            'x' | 'X' => Some(VertexClass::X),
            'y' | 'Y' => Some(VertexClass::Y),
            'z' | 'Z' => Some(VertexClass::Z),
            _ => None,
        }
    }
}

/// Structured label such as `w_3` or `z_17`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub class: VertexClass,
    pub index: usize,
}

impl Label {
    pub fn new(class: VertexClass, index: usize) -> Self {
        Label { class, index }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.class.as_char(), self.index)
    }
}

/// Strictly increasing list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Wraps an already sorted list, rejecting repeats and disorder.
    pub fn from_sorted(ids: Vec<usize>) -> Result<Self> {
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedVertexSet);
        }
        Ok(VertexSet(ids))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks every id against a graph of order `n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, order: n }),
            _ => Ok(()),
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut ids: Vec<usize> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<Label>>,
}

/// Result of restricting a graph to a vertex subset; ids are renumbered
/// densely in increasing order of the parent ids.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_parent[new] = old`.
    pub to_parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn from_parent(&self, old: usize) -> Option<usize> {
        self.to_parent.binary_search(&old).ok()
    }
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], labels: None }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = if u < w[0] { (u, w[0]) } else { (w[0], u) };
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds from sorted, symmetric, loop-free adjacency lists produced
    /// internally. Invariants are still checked in debug builds.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<Vec<usize>>) -> Self {
        let g = Graph { adj, labels: None };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Attaches a label table; labels must be pairwise distinct and cover
    /// every vertex.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        let mut seen = BTreeMap::new();
        for (v, l) in labels.iter().enumerate() {
            if let Some(prev) = seen.insert(*l, v) {
                return Err(Error::InvalidLabels(format!("label {l} used by vertices {prev} and {v}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Verifies symmetry, range, absence of loops and sortedness.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order();
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::UnsortedVertexSet);
            }
            for &v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidLabels(format!("asymmetric adjacency {u}->{v}")));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(Error::InvalidLabels(format!("{} labels for {n} vertices", labels.len())));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<Label> {
        self.labels.as_ref().map(|l| l[v])
    }

    /// Inverse of the label table.
    pub fn label_index(&self) -> Option<BTreeMap<Label, usize>> {
        self.labels
            .as_ref()
            .map(|labels| labels.iter().enumerate().map(|(v, l)| (*l, v)).collect())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    /// Open neighbourhood of a vertex as a set.
    pub fn neighbourhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v].clone())
    }

    /// Edge-identical comparison, ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        let pos = g.adj[u].binary_search(&v).unwrap_err();
        g.adj[u].insert(pos, v);
        let pos = g.adj[v].binary_search(&u).unwrap_err();
        g.adj[v].insert(pos, u);
        Ok(g)
    }

    /// `G - S`, renumbered densely.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        s.check_within(self.order())?;
        let keep: VertexSet = (0..self.order()).filter(|&v| !s.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        s.check_within(self.order())?;
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, v) in s.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = s
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect()
            })
            .collect();
        let labels = self.labels.as_ref().map(|l| s.iter().map(|v| l[v]).collect());
        Ok(InducedSubgraph {
            graph: Graph { adj, labels },
            to_parent: s.as_slice().to_vec(),
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Vertices reachable from `start` while avoiding `blocked`.
    pub fn reachable_avoiding(&self, start: usize, blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        if blocked[start] {
            return seen;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Two-colouring into independent sets, or `None` if an odd cycle
    /// exists. In each component the smallest vertex goes to the first part.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let first = (0..n).filter(|&v| colour[v] == Some(false)).collect();
        let second = (0..n).filter(|&v| colour[v] == Some(true)).collect();
        Some((first, second))
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&w| perm[w]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj, labels: None }
    }
}

/// Builders for small named graphs used throughout the tests and examples.
pub mod named {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edge_list(n, &edges).expect("complete")
    }

    /// `K_{a,b}` with the `a` side first.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edge_list(a + b, &edges).expect("complete bipartite")
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edge_list(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn bipartition_examples() {
        assert!(cycle(5).bipartition().is_none());
        let (a, b) = complete_bipartite(3, 3).bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        // disconnected: smallest vertex of each component goes first
        let g = Graph::from_edge_list(4, &[(0, 1), (3, 2)]).unwrap();
        let (a, b) = g.bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0, 2]);
        assert_eq!(b.as_slice(), &[1, 3]);
    }

    #[test]
    fn induced_and_deletions() {
        let tri = complete(3);
        let sub = tri.induced_subgraph(&[0, 1].into_iter().collect()).unwrap();
        assert_eq!(sub.graph.size(), 1);
        let all: VertexSet = (0..3).collect();
        assert!(tri.induced_subgraph(&all).unwrap().graph.same_edges(&tri));

        let p4 = cycle(4).delete_edge(3, 0).unwrap();
        assert!(p4.same_edges(&path(4)));
        assert_eq!(cycle(4).delete_edge(0, 2), Err(Error::MissingEdge(0, 2)));

        let k4 = complete(4);
        let minus = k4.delete_vertices(&[2].into_iter().collect()).unwrap();
        assert!(minus.graph.same_edges(&complete(3)));
        assert_eq!(minus.to_parent, vec![0, 1, 3]);
        assert!(k4.induced_subgraph(&[1, 9].into_iter().collect()).is_err());
    }

    #[test]
    fn delete_then_add_restores() {
        let g = complete_bipartite(2, 3);
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let back = g.delete_edge(u, v).unwrap().add_edge(v, u).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn vertex_set_rules() {
        assert!(VertexSet::from_sorted(vec![0, 2, 2]).is_err());
        assert!(VertexSet::from_sorted(vec![3, 1]).is_err());
        let s: VertexSet = [5, 1, 5, 3].into_iter().collect();
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert!(s.check_within(5).is_err());
    }

    #[test]
    fn labels_must_be_distinct() {
        let g = path(2);
        let l = Label::new(VertexClass::W, 0);
        assert!(g.clone().with_labels(vec![l, l]).is_err());
        assert!(g.clone().with_labels(vec![l]).is_err());
        let g = g.with_labels(vec![l, Label::new(VertexClass::X, 0)]).unwrap();
        assert_eq!(g.label(1).unwrap().to_string(), "x_0");
    }
}
