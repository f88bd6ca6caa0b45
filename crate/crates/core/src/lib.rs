//! Exact local and average connectivity for simple graphs, together with
//! generators for the minimally k-(edge-)connected families `G_{k,p}`,
//! `Γ_{k,p}`, `Ψ_{k,p}` and `Φ_{k,p}` and the machinery used to check their
//! claimed properties: separator enumeration, flow-certified disjoint path
//! systems, potential bounds, and exhaustive search at small orders.
//!
//! The crate is `no_std` (with `alloc`) when built without the default
//! features. The `parallel` feature fans all-pairs and sweep computations out
//! over the ambient rayon pool; results are identical with or without it.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod connectivity;
pub mod constructions;
mod error;
mod flow;
pub mod graph;
pub mod graph6;
mod par;
pub mod paths;
pub mod search;
pub mod separators;

pub use connectivity::{ConnectivityMode, PairConnectivityReport};
pub use constructions::{ConstructionSpec, Family};
pub use error::{Error, Result};
pub use graph::{Graph, InducedSubgraph, Label, VertexClass, VertexSet};

/// Exact rational used for averages and bounds.
pub type Rational = num_rational::Ratio<i128>;

/// `n choose 2`.
pub fn pairs_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}
