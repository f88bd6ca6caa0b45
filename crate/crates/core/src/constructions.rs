//! Generators for `G_{k,p}`, `Γ_{k,p}`, `Ψ_{k,p}` and `Φ_{k,p}`.
//!
//! Vertex numbering is canonical: block `b` (W = 0, then X, Y, Z, with
//! `Γ`'s three copies of X in the X, Y, Z slots) occupies ids
//! `b·p .. (b+1)·p`, each block in index order. All subscripts are taken
//! mod p.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Label, VertexClass};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Gkp,
    Gamma,
    Psi,
    Phi,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gkp => "gkp",
            Family::Gamma => "gamma",
            Family::Psi => "psi",
            Family::Phi => "phi",
        }
    }

    pub fn blocks(self) -> usize {
        match self {
            Family::Gkp => 2,
            _ => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gkp" => Ok(Family::Gkp),
            "gamma" => Ok(Family::Gamma),
            "psi" => Ok(Family::Psi),
            "phi" => Ok(Family::Phi),
            other => Err(Error::InvalidParameters(format!("unknown family {other:?}"))),
        }
    }
}

/// A validated family + parameter choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionSpec {
    pub family: Family,
    pub k: usize,
    pub p: usize,
    /// Multiplier with `p = r·k² - 1`; `Φ` only.
    pub r: Option<usize>,
}

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidParameters(msg)
}

impl ConstructionSpec {
    pub fn gkp(k: usize, p: usize) -> Result<Self> {
        if !(3 <= k && k <= p) {
            return Err(invalid(format!("G_{{k,p}} needs 3 <= k <= p, got k={k}, p={p}")));
        }
        Ok(ConstructionSpec { family: Family::Gkp, k, p, r: None })
    }

    pub fn gamma(k: usize, p: usize) -> Result<Self> {
        let spec = Self::gkp(k, p)?;
        Ok(ConstructionSpec { family: Family::Gamma, ..spec })
    }

    /// `Ψ_{k,p}` with `k ∈ {3, 4, 5}` and `p ≥ 4s`.
    pub fn psi(k: usize, p: usize) -> Result<Self> {
        if !(3..=5).contains(&k) {
            return Err(invalid(format!("Psi is only covered for k in {{3,4,5}}, got k={k}; use psi_any_k to override")));
        }
        Self::psi_any_k(k, p)
    }

    /// `Ψ_{k,p}` for any `k ≥ 3`; the construction is well defined beyond
    /// `{3, 4, 5}` even though the disjoint-path argument is not.
    pub fn psi_any_k(k: usize, p: usize) -> Result<Self> {
        if k < 3 {
            return Err(invalid(format!("Psi needs k >= 3, got k={k}")));
        }
        let s = k * k * k - k * k;
        if p < 4 * s {
            return Err(invalid(format!("Psi needs p >= 4s = {}, got p={p}", 4 * s)));
        }
        Ok(ConstructionSpec { family: Family::Psi, k, p, r: None })
    }

    /// `Φ_{k,p}` with `p = r·k² - 1`, `k ≥ 6`, `r ≥ k + 1`.
    pub fn phi(k: usize, r: usize) -> Result<Self> {
        if k < 6 {
            return Err(invalid(format!("Phi needs k >= 6, got k={k}")));
        }
        if r < k + 1 {
            return Err(invalid(format!("Phi needs r >= k+1 = {}, got r={r}", k + 1)));
        }
        Ok(ConstructionSpec { family: Family::Phi, k, p: r * k * k - 1, r: Some(r) })
    }

    /// `s = k³ - k²`.
    pub fn s(&self) -> usize {
        self.k * self.k * self.k - self.k * self.k
    }

    pub fn order(&self) -> usize {
        self.family.blocks() * self.p
    }

    /// `π₁(i) = k·i mod p`.
    pub fn pi1(&self, i: usize) -> usize {
        (self.k * i) % self.p
    }

    /// `π₂(i) = k²·i mod p`.
    pub fn pi2(&self, i: usize) -> usize {
        (self.k * self.k % self.p * i) % self.p
    }

    fn block(class: VertexClass) -> usize {
        match class {
            VertexClass::W => 0,
            VertexClass::X => 1,
            VertexClass::Y => 2,
            VertexClass::Z => 3,
        }
    }

    /// Id of the vertex `class_index`, reducing the (possibly negative)
    /// index mod p.
    pub fn vertex(&self, class: VertexClass, index: i64) -> usize {
        let p = self.p as i64;
        Self::block(class) * self.p + index.rem_euclid(p) as usize
    }

    pub fn label_of(&self, v: usize) -> Label {
        Label::new(VertexClass::ALL[v / self.p], v % self.p)
    }

    pub fn labels(&self) -> Vec<Label> {
        (0..self.order()).map(|v| self.label_of(v)).collect()
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family {
            Family::Gkp => build_gkp(self.k, self.p),
            Family::Gamma => build_gamma(self.k, self.p),
            Family::Psi => build_psi_spec(self),
            Family::Phi => build_phi(self.k, self.r.expect("phi spec carries r")),
        }
    }
}

/// Sorted adjacency from `(w, other)` pairs; `p ≥ k` rules out repeats
/// within a block, which is asserted.
fn assemble(spec: &ConstructionSpec, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut adj = vec![Vec::new(); spec.order()];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        assert_eq!(before, list.len(), "construction produced a repeated edge");
    }
    Graph::from_adjacency_unchecked(adj).with_labels(spec.labels())
}

/// Edges `w_{owner(i)} c_{i + stride·j}` for `0 ≤ i < p`, `0 ≤ j < k`.
fn block_edges(
    spec: &ConstructionSpec,
    class: VertexClass,
    stride: usize,
    owner: impl Fn(usize) -> usize,
    out: &mut Vec<(usize, usize)>,
) {
    let p = spec.p;
    for i in 0..p {
        let w = spec.vertex(VertexClass::W, owner(i) as i64);
        for j in 0..spec.k {
            out.push((w, spec.vertex(class, ((i + stride * j) % p) as i64)));
        }
    }
}

/// `G_{k,p}`: `w_i ~ x_{i+j}` for `0 ≤ j < k`.
pub fn build_gkp(k: usize, p: usize) -> Result<Graph> {
    let spec = ConstructionSpec::gkp(k, p)?;
    let mut edges = Vec::with_capacity(k * p);
    block_edges(&spec, VertexClass::X, 1, |i| i, &mut edges);
    assemble(&spec, &edges)
}

/// `Γ_{k,p}`: three copies of `G_{k,p}` sharing W.
pub fn build_gamma(k: usize, p: usize) -> Result<Graph> {
    let spec = ConstructionSpec::gamma(k, p)?;
    let mut edges = Vec::with_capacity(3 * k * p);
    for class in [VertexClass::X, VertexClass::Y, VertexClass::Z] {
        block_edges(&spec, class, 1, |i| i, &mut edges);
    }
    assemble(&spec, &edges)
}

/// `Ψ_{k,p}` for `k ∈ {3, 4, 5}`: X stride 1, Y stride k, Z stride k².
pub fn build_psi(k: usize, p: usize) -> Result<Graph> {
    build_psi_spec(&ConstructionSpec::psi(k, p)?)
}

fn build_psi_spec(spec: &ConstructionSpec) -> Result<Graph> {
    let k = spec.k;
    let mut edges = Vec::with_capacity(3 * k * spec.p);
    block_edges(spec, VertexClass::X, 1, |i| i, &mut edges);
    block_edges(spec, VertexClass::Y, k, |i| i, &mut edges);
    block_edges(spec, VertexClass::Z, k * k, |i| i, &mut edges);
    let g = assemble(spec, &edges)?;
    let s = spec.s() as i64;
    for i in 0..spec.p as i64 {
        let w = spec.vertex(VertexClass::W, i);
        assert!(
            g.has_edge(w, spec.vertex(VertexClass::Z, i)) && g.has_edge(w, spec.vertex(VertexClass::Z, i + s)),
            "w_{i} must see z_{i} and z_{{i+s}}"
        );
    }
    Ok(g)
}

fn check_permutation(p: usize, f: impl Fn(usize) -> usize, what: &'static str) -> Result<()> {
    let mut seen = vec![false; p];
    for i in 0..p {
        let j = f(i);
        if j >= p || core::mem::replace(&mut seen[j], true) {
            return Err(Error::NotBijective { what, p });
        }
    }
    Ok(())
}

/// `Φ_{k,p}` with `p = r·k² - 1`: X-edges as in `G_{k,p}`, Y-edges
/// `w_{π₁(i)} y_{i+j}`, Z-edges `w_{π₂(i)} z_{i+j}`.
pub fn build_phi(k: usize, r: usize) -> Result<Graph> {
    let spec = ConstructionSpec::phi(k, r)?;
    check_permutation(spec.p, |i| spec.pi1(i), "pi1")?;
    check_permutation(spec.p, |i| spec.pi2(i), "pi2")?;
    let mut edges = Vec::with_capacity(3 * k * spec.p);
    block_edges(&spec, VertexClass::X, 1, |i| i, &mut edges);
    block_edges(&spec, VertexClass::Y, 1, |i| spec.pi1(i), &mut edges);
    block_edges(&spec, VertexClass::Z, 1, |i| spec.pi2(i), &mut edges);
    assemble(&spec, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn degree_profile(g: &Graph, p: usize) -> (Vec<usize>, Vec<usize>) {
        let d = g.degrees();
        let mut w: Vec<usize> = d[..p].to_vec();
        let mut rest: Vec<usize> = d[p..].to_vec();
        w.dedup();
        rest.dedup();
        (w, rest)
    }

    #[test]
    fn gkp_basic() {
        let g = build_gkp(3, 20).unwrap();
        assert_eq!((g.order(), g.size()), (40, 60));
        assert!(g.degrees().iter().all(|&d| d == 3));
        // w_0 ~ x_0, x_1, x_2 and x_0 ~ w_0, w_19, w_18
        assert_eq!(g.neighbors(0), &[20, 21, 22]);
        assert_eq!(g.neighbors(20), &[0, 18, 19]);
        assert!(build_gkp(4, 4).unwrap().same_edges(&named::complete_bipartite(4, 4)));
        assert!(build_gkp(3, 2).is_err());
        assert!(build_gkp(2, 5).is_err());
    }

    #[test]
    fn gkp_minus_neighbourhood_isolates() {
        let g = build_gkp(3, 5).unwrap();
        let h = g.delete_vertices(&g.neighbourhood(0)).unwrap();
        assert_eq!(h.to_parent[0], 0);
        assert_eq!(h.graph.degree(0), 0);
    }

    #[test]
    fn gamma_profile() {
        let g = build_gamma(3, 4).unwrap();
        assert_eq!((g.order(), g.size()), (16, 36));
        assert_eq!(degree_profile(&g, 4), (vec![9], vec![3]));
        let (a, b) = g.bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0, 1, 2, 3]);
        assert_eq!(b.len(), 12);
        // each W ∪ X_m copy is G_{k,p} under the block relabelling
        let gkp = build_gkp(3, 4).unwrap();
        for m in 1..4 {
            let s = (0..4).chain(4 * m..4 * m + 4).collect();
            assert!(g.induced_subgraph(&s).unwrap().graph.same_edges(&gkp));
        }
        assert!(build_gamma(4, 3).is_err());
    }

    #[test]
    fn psi_parameters() {
        let spec = ConstructionSpec::psi(3, 72).unwrap();
        assert_eq!(spec.s(), 18);
        assert_eq!(spec.order(), 288);
        assert_eq!(ConstructionSpec::psi(5, 400).unwrap().s(), 100);
        assert!(ConstructionSpec::psi(3, 60).is_err());
        assert!(ConstructionSpec::psi(6, 4 * 180).is_err());
        assert!(ConstructionSpec::psi_any_k(6, 4 * 180).is_ok());
        let g = build_psi(3, 72).unwrap();
        assert_eq!(g.order(), 288);
        assert_eq!(degree_profile(&g, 72), (vec![9], vec![3]));
        // w_0 ~ y_0, y_3, y_6 and z_0, z_9, z_18
        let y = |i| spec.vertex(VertexClass::Y, i);
        let z = |i| spec.vertex(VertexClass::Z, i);
        for v in [y(0), y(3), y(6), z(0), z(9), z(18)] {
            assert!(g.has_edge(0, v));
        }
        assert!(!g.has_edge(0, y(1)));
        let wx: crate::VertexSet = (0..144).collect();
        assert!(g.induced_subgraph(&wx).unwrap().graph.same_edges(&build_gkp(3, 72).unwrap()));
    }

    #[test]
    fn phi_parameters() {
        let spec = ConstructionSpec::phi(6, 7).unwrap();
        assert_eq!(spec.p, 251);
        let mut img: Vec<usize> = (0..251).map(|i| spec.pi1(i)).collect();
        img.sort_unstable();
        assert_eq!(img, (0..251).collect::<Vec<_>>());
        let g = build_phi(6, 7).unwrap();
        assert_eq!(g.order(), 1004);
        assert_eq!(degree_profile(&g, 251), (vec![18], vec![6]));
        assert!(build_phi(5, 6).is_err());
        assert!(build_phi(6, 6).is_err());
        assert!(check_permutation(10, |i| (2 * i) % 10, "doubling").is_err());
    }

    #[test]
    fn labels_round_trip() {
        for spec in [ConstructionSpec::gkp(3, 7).unwrap(), ConstructionSpec::psi(3, 72).unwrap()] {
            let g = spec.build().unwrap();
            let index = g.label_index().unwrap();
            for v in 0..g.order() {
                let l = g.label(v).unwrap();
                assert_eq!(index[&l], v);
                assert_eq!(spec.vertex(l.class, l.index as i64), v);
            }
        }
        let spec = ConstructionSpec::gkp(3, 7).unwrap();
        assert_eq!(spec.vertex(VertexClass::X, -3), spec.vertex(VertexClass::X, 4));
    }
}
