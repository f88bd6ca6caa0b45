//! Verification suites over the construction families, shared by the
//! command line and the acceptance harness.

use avgconn_core::bounds::{asymptotic_average, kappa_bar_upper, limit_bound};
use avgconn_core::connectivity::{
    all_pairs_report, all_pairs_report_with, global_connectivity, is_degree_partitioned, is_minimally_k_connected_with,
    pair_values, ConnectivityMode, MinimalityStrategy, PairConnectivityReport, PairStrategy,
};
use avgconn_core::graph::VertexClass;
use avgconn_core::paths::{PsiWitness, WitnessCheck};
use avgconn_core::{ConstructionSpec, Graph, Rational, Result};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Default,
    Long,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct items of `items`, in their original order.
pub fn sample_sorted<T: Copy>(items: &[T], count: usize, seed: u64) -> Vec<T> {
    let mut idx = sample(&mut rng(seed), items.len(), count.min(items.len())).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| items[i]).collect()
}

/// An exact average against its closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub computed: Rational,
    pub expected: Rational,
}

impl FormulaCheck {
    pub fn passed(&self) -> bool {
        self.computed == self.expected
    }
}

/// λ̄(Γ_{k,p}) by full all-pairs flow against `(9p-3)k/(8p-2)`.
pub fn gamma_edge_formula(k: usize, p: usize) -> Result<FormulaCheck> {
    let g = ConstructionSpec::gamma(k, p)?.build()?;
    let report = all_pairs_report(&g, ConnectivityMode::Edge)?;
    Ok(FormulaCheck { computed: report.average(), expected: asymptotic_average(k as u64, p as u64)? })
}

#[derive(Debug, Clone)]
pub struct PsiFormulaCheck {
    pub formula: FormulaCheck,
    pub global: u32,
    pub sampled: usize,
    /// Sampled pairs where the shortcut value differs from a fresh flow.
    pub mismatches: Vec<(usize, usize)>,
    pub report: PairConnectivityReport,
}

impl PsiFormulaCheck {
    pub fn passed(&self) -> bool {
        self.formula.passed() && self.mismatches.is_empty() && self.sampled > 0
    }
}

/// κ̄(Ψ_{k,p}) by the degree shortcut, with the shortcut checked against
/// full flow on a seeded sample of `percent`% of all pairs.
pub fn psi_vertex_formula(k: usize, p: usize, percent: usize, seed: u64) -> Result<PsiFormulaCheck> {
    let g = ConstructionSpec::psi(k, p)?.build()?;
    psi_formula_on(&g, k, p, percent, seed)
}

fn psi_formula_on(g: &Graph, k: usize, p: usize, percent: usize, seed: u64) -> Result<PsiFormulaCheck> {
    let report = all_pairs_report_with(g, ConnectivityMode::Vertex, PairStrategy::DegreeShortcut)?;
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let chosen = sample_sorted(&pairs, (pairs.len() * percent).div_ceil(100), seed);
    let fresh = pair_values(g, &chosen, ConnectivityMode::Vertex)?;
    let mismatches = chosen.iter().zip(&fresh).filter(|(&(u, v), &x)| report.value(u, v) != x).map(|(&pair, _)| pair).collect();
    Ok(PsiFormulaCheck {
        formula: FormulaCheck { computed: report.average(), expected: asymptotic_average(k as u64, p as u64)? },
        global: global_connectivity(g, ConnectivityMode::Vertex)?,
        sampled: chosen.len(),
        mismatches,
        report,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GkpMinimality {
    pub vertex: bool,
    pub edge: bool,
}

/// Minimal k-connectivity and k-edge-connectivity of `G_{k,p}`, every
/// edge checked.
pub fn gkp_minimality(k: usize, p: usize) -> Result<GkpMinimality> {
    let g = ConstructionSpec::gkp(k, p)?.build()?;
    let check = |mode| is_minimally_k_connected_with(&g, k as u32, mode, MinimalityStrategy::Exhaustive);
    Ok(GkpMinimality { vertex: check(ConnectivityMode::Vertex)?.minimal, edge: check(ConnectivityMode::Edge)?.minimal })
}

/// Which finite path checks to run on `Ψ_{k,p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPlan {
    pub k: usize,
    pub p: usize,
    pub small_t: Vec<usize>,
    pub p_residues: Vec<usize>,
    pub r_targets: Vec<usize>,
    pub full: Vec<usize>,
}

impl PathPlan {
    /// Every small `t`, every residue, `R` for one full period of `t`, and
    /// assembled witnesses at `2s`, `2s + 14`, `2s + 64`, on `p = 16s`.
    pub fn standard(k: usize) -> Result<Self> {
        let s = ConstructionSpec::psi(k, 4 * (k * k * k - k * k))?.s();
        let full = vec![2 * s, 2 * s + 14, 2 * s + 64];
        let mut r_targets: Vec<usize> = (2 * s..3 * s).collect();
        r_targets.extend(full.iter().filter(|&&t| t >= 3 * s));
        Ok(PathPlan { k, p: 16 * s, small_t: (1..2 * s).collect(), p_residues: (0..s).collect(), r_targets, full })
    }

    /// Only the `t` values in `a..=b`: small-t below `2s`, otherwise R and
    /// the assembled witness.
    pub fn for_t_range(k: usize, a: usize, b: usize) -> Result<Self> {
        let s = k * k * k - k * k;
        let p = (16 * s).max(2 * b);
        ConstructionSpec::psi(k, p)?;
        let (small, large): (Vec<usize>, Vec<usize>) = (a..=b).partition(|&t| t < 2 * s);
        Ok(PathPlan { k, p, small_t: small, p_residues: Vec::new(), r_targets: large.clone(), full: large })
    }

    pub fn for_r_range(k: usize, a: usize, b: usize) -> Result<Self> {
        let s = k * k * k - k * k;
        ConstructionSpec::psi(k, 16 * s)?;
        Ok(PathPlan { k, p: 16 * s, small_t: Vec::new(), p_residues: (a..=b).collect(), r_targets: Vec::new(), full: Vec::new() })
    }

    pub fn merge(mut self, other: PathPlan) -> PathPlan {
        self.p = self.p.max(other.p);
        self.small_t.extend(other.small_t);
        self.p_residues.extend(other.p_residues);
        self.r_targets.extend(other.r_targets);
        self.full.extend(other.full);
        self
    }
}

pub struct PathRun {
    pub witness: PsiWitness,
    pub checks: Vec<WitnessCheck>,
}

impl PathRun {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(WitnessCheck::passed)
    }
}

pub fn run_path_plan(plan: &PathPlan) -> Result<PathRun> {
    let witness = PsiWitness::new(ConstructionSpec::psi(plan.k, plan.p)?)?;
    let mut checks = witness.check_small_t(&plan.small_t);
    checks.extend(witness.check_p(&plan.p_residues));
    checks.extend(witness.check_r(&plan.r_targets));
    checks.extend(witness.check_q(&plan.full));
    checks.extend(witness.check_full(&plan.full));
    Ok(PathRun { witness, checks })
}

#[derive(Debug, Clone)]
pub struct PhiCheck {
    pub k: usize,
    pub p: usize,
    pub global: u32,
    pub pairs: Vec<(usize, usize)>,
    pub values: Vec<u32>,
}

impl PhiCheck {
    pub fn passed(&self) -> bool {
        self.global as usize == self.k && !self.pairs.is_empty() && self.values.iter().all(|&x| x as usize == 3 * self.k)
    }
}

/// Global connectivity of `Φ_{k,p}` and κ(w_i, w_j) on W-pairs: all of
/// them on the long tier, `sample` seeded pairs otherwise.
pub fn phi_check(k: usize, r: usize, sample: usize, seed: u64, tier: Tier) -> Result<PhiCheck> {
    let spec = ConstructionSpec::phi(k, r)?;
    let g = spec.build()?;
    let p = spec.p;
    let w = |i: usize| spec.vertex(VertexClass::W, i as i64);
    let all: Vec<(usize, usize)> = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).map(|(i, j)| (w(i), w(j))).collect();
    let pairs = match tier {
        Tier::Long => all,
        Tier::Default => sample_sorted(&all, sample, seed),
    };
    let values = pair_values(&g, &pairs, ConnectivityMode::Vertex)?;
    Ok(PhiCheck { k, p, global: global_connectivity(&g, ConnectivityMode::Vertex)?, pairs, values })
}

/// One bound comparison on a degree-partitioned minimally k-connected
/// graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub mode: ConnectivityMode,
    pub k: usize,
    pub n: usize,
    pub average: Rational,
    pub bound: Rational,
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        self.average <= self.bound && self.bound < limit_bound(self.k as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundOutcome {
    Checked(BoundCheck),
    /// The graph is outside the bound's hypotheses.
    NotApplicable(String),
}

/// Checks the hypotheses (minimally k-connected in `mode`,
/// degree-partitioned, `n ≥ 2k + 1`, `k ≥ 2`) and then the bound.
/// `report` may supply an already computed all-pairs report.
pub fn bound_check(
    name: &str,
    g: &Graph,
    k: usize,
    mode: ConnectivityMode,
    report: Option<&PairConnectivityReport>,
) -> Result<BoundOutcome> {
    let n = g.order();
    if k < 2 || n < 2 * k + 1 {
        return Ok(BoundOutcome::NotApplicable(format!("bound needs k >= 2 and n >= 2k+1, got k={k}, n={n}")));
    }
    if g.min_degree() < k || !is_degree_partitioned(g, k)? {
        return Ok(BoundOutcome::NotApplicable(format!("not degree-partitioned for k={k}")));
    }
    if !is_minimally_k_connected_with(g, k as u32, mode, MinimalityStrategy::DegreeCertificate)?.minimal {
        return Ok(BoundOutcome::NotApplicable(format!("not minimally {k}-{}connected", edge_word(mode))));
    }
    let average = match report {
        Some(r) if r.mode == mode && r.order == n => r.average(),
        _ => all_pairs_report_with(g, mode, PairStrategy::DegreeShortcut)?.average(),
    };
    Ok(BoundOutcome::Checked(BoundCheck {
        name: name.into(),
        mode,
        k,
        n,
        average,
        bound: kappa_bar_upper(k as u64, n as u64)?,
    }))
}

fn edge_word(mode: ConnectivityMode) -> &'static str {
    match mode {
        ConnectivityMode::Vertex => "",
        ConnectivityMode::Edge => "edge-",
    }
}

/// `(9p-3)k/(8p-2)` strictly increasing in `p` on `k..=p_max` and below
/// `9k/8` throughout.
pub fn asymptotic_trend(k: u64, p_max: u64) -> Result<bool> {
    let limit = limit_bound(k);
    let mut prev = asymptotic_average(k, k)?;
    if prev >= limit {
        return Ok(false);
    }
    for p in k + 1..=p_max {
        let next = asymptotic_average(k, p)?;
        if next <= prev || next >= limit {
            return Ok(false);
        }
        prev = next;
    }
    Ok(true)
}
