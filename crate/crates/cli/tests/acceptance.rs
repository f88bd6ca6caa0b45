//! Acceptance criteria, one PASS/FAIL line each.
//!
//! `AVGCONN_TIER=long` enables the long suites; `AVGCONN_SEED` overrides
//! the sampling seed.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use avgconn::suites::{self, BoundOutcome, PathPlan, Tier};
use avgconn_core::bounds::{asymptotic_average, balance_sequence, check_total_le_potential, kappa_bar_upper, limit_bound, potential};
use avgconn_core::connectivity::{
    all_pairs_report, global_connectivity, local_edge_connectivity, local_vertex_connectivity, ConnectivityMode,
};
use avgconn_core::graph::named;
use avgconn_core::search::{canonical_code, find_optimal_native, SearchReport};
use avgconn_core::separators::{gamma_window_separator, separates, verify_gkp_separators};
use avgconn_core::{ConstructionSpec, Graph, Rational};
use rand::SeedableRng;

type Check = Result<(bool, String), String>;

struct Harness {
    tier: Tier,
    seed: u64,
    failed: Vec<&'static str>,
}

impl Harness {
    fn run(&mut self, id: &'static str, title: &str, check: impl FnOnce(&Harness) -> Check) {
        let start = Instant::now();
        let (passed, detail) = match check(self) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !passed {
            self.failed.push(id);
        }
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("{verdict} {id:<5} {title}: {detail} [{:.1}s]", start.elapsed().as_secs_f64());
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ac1(_: &Harness) -> Check {
    let mut count = 0;
    for k in [3, 4] {
        for p in k..=10 {
            let c = suites::gamma_edge_formula(k, p).map_err(err)?;
            if !c.passed() {
                return Ok((false, format!("k={k} p={p}: {} != {}", c.computed, c.expected)));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} instances equal (9p-3)k/(8p-2) exactly")))
}

fn ac2(h: &Harness) -> Check {
    let c = suites::psi_vertex_formula(3, 72, 10, h.seed).map_err(err)?;
    Ok((
        c.passed() && c.global == 3,
        format!(
            "average {} vs {}, global {}, {} sampled pairs, {} shortcut mismatches",
            c.formula.computed,
            c.formula.expected,
            c.global,
            c.sampled,
            c.mismatches.len()
        ),
    ))
}

fn ac3(_: &Harness) -> Check {
    let mut count = 0;
    for k in 3..=5 {
        for p in k..=10 {
            let m = suites::gkp_minimality(k, p).map_err(err)?;
            if !(m.vertex && m.edge) {
                return Ok((false, format!("G_{{{k},{p}}}: {m:?}")));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} graphs minimally k-connected and k-edge-connected")))
}

fn ac4(_: &Harness) -> Check {
    let cases: Vec<(usize, usize)> =
        (3..=8).map(|p| (3, p)).chain((4..=7).map(|p| (4, p))).chain([(5, 5), (5, 6)]).collect();
    let (mut separators, mut two_run, mut touching) = (0, 0, 0);
    for (k, p) in cases {
        let summaries = verify_gkp_separators(k, p, 16).map_err(err)?;
        if let Some(bad) = summaries.iter().find(|s| !s.passed()) {
            return Ok((false, format!("G_{{{k},{p}}} pair ({}, {}): {bad:?}", bad.u, bad.v)));
        }
        separators += summaries.iter().map(|s| s.separators).sum::<usize>();
        two_run += summaries.iter().map(|s| s.two_run).sum::<usize>();
        touching += summaries.iter().map(|s| s.touching).sum::<usize>();
    }
    Ok((true, format!("{separators} minimal separators, {two_run} two-run, {touching} with touching runs")))
}

fn ac5(h: &Harness) -> Check {
    let ks: &[usize] = match h.tier {
        Tier::Default => &[3, 4],
        Tier::Long => &[3, 4, 5],
    };
    let mut parts = Vec::new();
    for &k in ks {
        let plan = PathPlan::standard(k).map_err(err)?;
        let run = suites::run_path_plan(&plan).map_err(err)?;
        if let Some(bad) = run.checks.iter().find(|c| !c.passed()) {
            return Ok((false, format!("k={k} {} {}: {:?}", bad.kind.as_str(), bad.parameter, bad.error)));
        }
        parts.push(format!("k={k} ({} checks, p={})", run.checks.len(), plan.p));
    }
    if h.tier == Tier::Default {
        parts.push("k=5 on the long tier".into());
    }
    Ok((true, parts.join(", ")))
}

fn ac6(h: &Harness) -> Check {
    let c = suites::phi_check(6, 7, 200, h.seed, h.tier).map_err(err)?;
    let low = c.values.iter().filter(|&&x| x != 18).count();
    Ok((c.passed(), format!("p={}, global {}, {} W-pairs, {low} below 18", c.p, c.global, c.pairs.len())))
}

fn ac7(_: &Harness) -> Check {
    let spec = ConstructionSpec::gamma(3, 8).map_err(err)?;
    let g = spec.build().map_err(err)?;
    let cert = gamma_window_separator(&spec, &g, 3).map_err(err)?;
    let w3 = spec.vertex(avgconn_core::VertexClass::W, 3);
    let kappa = local_vertex_connectivity(&g, 0, w3).map_err(err)?;
    let lambda = local_edge_connectivity(&g, 0, w3).map_err(err)?;
    let average = all_pairs_report(&g, ConnectivityMode::Vertex).map_err(err)?.average();
    let formula = asymptotic_average(3, 8).map_err(err)?;
    let passed = cert.set.len() == 4 && separates(&g, &cert.set, 0, w3) && kappa <= 4 && lambda == 9 && average < formula;
    Ok((passed, format!("separator of size {}, kappa(w_0,w_3) = {kappa}, lambda = {lambda}, vertex average {average} < {formula}", cert.set.len())))
}

fn ac8(_: &Harness) -> Check {
    let mut notes = Vec::new();
    for n in 5..=7 {
        for mode in [ConnectivityMode::Vertex, ConnectivityMode::Edge] {
            let r = find_optimal_native(n, 2, mode).map_err(err)?;
            let best = r.best_value.ok_or("no minimally 2-connected graph")?;
            if !r.all_optima_degree_partitioned || best >= Rational::new(9, 4) {
                return Ok((false, format!("n={n} {}: best {best}, optima {:?}", mode.as_str(), r.optima_graph6())));
            }
            notes.push(format!("{}{n}={best}", &mode.as_str()[..1]));
        }
    }
    let r = find_optimal_native(5, 2, ConnectivityMode::Vertex).map_err(err)?;
    let k23 = canonical_code(&named::complete_bipartite(2, 3)).map_err(err)?;
    let unique = r.optima.len() == 1 && canonical_code(&r.optima[0]).map_err(err)? == k23;
    let exact = r.best_value == Some(Rational::new(21, 10));
    Ok((unique && exact, format!("{}; n=5 optimum K_2,3 unique: {unique}", notes.join(" "))))
}

fn search_corpus() -> Result<Vec<SearchReport>, String> {
    let mut reports = Vec::new();
    for mode in [ConnectivityMode::Vertex, ConnectivityMode::Edge] {
        for n in 5..=7 {
            reports.push(find_optimal_native(n, 2, mode).map_err(err)?);
        }
        reports.push(find_optimal_native(7, 3, mode).map_err(err)?);
    }
    Ok(reports)
}

fn ac9(_: &Harness) -> Check {
    let mut checks = Vec::new();
    let mut expect_checked = |name: String, g: &Graph, k: usize, mode| -> Result<(), String> {
        match suites::bound_check(&name, g, k, mode, None).map_err(err)? {
            BoundOutcome::Checked(c) => {
                checks.push(c);
                Ok(())
            }
            BoundOutcome::NotApplicable(why) => Err(format!("{name}: {why}")),
        }
    };
    for k in [3, 4] {
        for p in k..=10 {
            let g = ConstructionSpec::gamma(k, p).map_err(err)?.build().map_err(err)?;
            expect_checked(format!("Gamma_{k},{p}"), &g, k, ConnectivityMode::Edge)?;
        }
    }
    let psi = ConstructionSpec::psi(3, 72).map_err(err)?.build().map_err(err)?;
    expect_checked("Psi_3,72".into(), &psi, 3, ConnectivityMode::Vertex)?;
    for r in search_corpus()? {
        if r.n < 2 * r.k + 1 {
            continue;
        }
        for (i, g) in r.optima.iter().enumerate() {
            expect_checked(format!("optimum {i} n={} k={} {}", r.n, r.k, r.mode.as_str()), g, r.k, r.mode)?;
        }
    }
    if let Some(bad) = checks.iter().find(|c| !c.passed()) {
        return Ok((false, format!("{}: {} vs bound {}", bad.name, bad.average, bad.bound)));
    }
    for k in 3..=5u64 {
        for p in k..=200 {
            let a = asymptotic_average(k, p).map_err(err)?;
            let b = kappa_bar_upper(k, 4 * p).map_err(err)?;
            if !(a < b && b < limit_bound(k)) {
                return Ok((false, format!("k={k} p={p}: {a} / {b} out of order")));
            }
        }
    }
    Ok((true, format!("{} graphs within k + k(n-2)^2/(8n(n-1)) < 9k/8", checks.len())))
}

fn ac10(h: &Harness) -> Check {
    let corpus = common::corpus();
    let mut pairs = 0usize;
    for g in &corpus {
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let kappa = local_vertex_connectivity(g, u, v).map_err(err)?;
                if kappa != common::brute_vertex_connectivity(g, u, v) {
                    return Ok((false, format!("Menger mismatch on {g:?} at ({u}, {v})")));
                }
                pairs += 1;
            }
        }
        let k = global_connectivity(g, ConnectivityMode::Vertex).map_err(err)?;
        let l = global_connectivity(g, ConnectivityMode::Edge).map_err(err)?;
        if !(k <= l && l as usize <= g.min_degree()) {
            return Ok((false, format!("Whitney chain fails on {g:?}")));
        }
        for mode in [ConnectivityMode::Vertex, ConnectivityMode::Edge] {
            if !check_total_le_potential(g, mode).map_err(err)?.holds() {
                return Ok((false, format!("K > P on {g:?}")));
            }
        }
    }
    let mut compositions = 0u64;
    for n in 1..=6usize {
        for d in n as u64..=14 {
            let best = potential(&balance_sequence(d, n as u64).map_err(err)?).map_err(err)?;
            let mut ok = true;
            common::compositions(d, n, &mut |c| {
                compositions += 1;
                ok &= potential(c).expect("positive parts") <= best;
            });
            if !ok {
                return Ok((false, format!("balancing fails at D={d}, n={n}")));
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(h.seed);
    let mut fuzzed = 0u64;
    for n in 7..=12u64 {
        for d in [n + 1, 2 * n + 3, 5 * n + 1, 11 * n + 7] {
            let best = potential(&balance_sequence(d, n).map_err(err)?).map_err(err)?;
            for _ in 0..10_000 {
                fuzzed += 1;
                if potential(&common::random_composition(&mut rng, d, n)).map_err(err)? > best {
                    return Ok((false, format!("random composition beats balancing at D={d}, n={n}")));
                }
            }
        }
    }
    Ok((
        true,
        format!(
            "{} graphs, {pairs} pairs match brute force; {compositions} compositions exhaustive, {fuzzed} fuzzed",
            corpus.len()
        ),
    ))
}

fn trend(_: &Harness) -> Check {
    for k in 3..=5 {
        if !suites::asymptotic_trend(k, 1_000_000).map_err(err)? {
            return Ok((false, format!("k={k}")));
        }
    }
    Ok((true, "(9p-3)k/(8p-2) increasing and below 9k/8 for p <= 10^6, k = 3, 4, 5".into()))
}

fn main() -> ExitCode {
    let tier = match std::env::var("AVGCONN_TIER").as_deref() {
        Ok("long") => Tier::Long,
        _ => Tier::Default,
    };
    let seed = std::env::var("AVGCONN_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(suites::DEFAULT_SEED);
    println!("acceptance: tier {tier:?}, seed {seed}");
    let mut h = Harness { tier, seed, failed: Vec::new() };
    h.run("AC1", "Gamma edge average formula", ac1);
    h.run("AC2", "Psi_3,72 vertex average formula", ac2);
    h.run("AC3", "G_k,p minimality", ac3);
    h.run("AC4", "G_k,p minimal separator structure", ac4);
    h.run("AC5", "Psi disjoint-path witnesses", ac5);
    h.run("AC6", "Phi_6,251 connectivity", ac6);
    h.run("AC7", "Gamma_3,8 small separator", ac7);
    h.run("AC8", "k=2 optima are degree-partitioned", ac8);
    h.run("AC9", "average bound on degree-partitioned graphs", ac9);
    h.run("AC10", "property suites", ac10);
    h.run("TREND", "asymptotic average trend", trend);
    if h.failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {}", h.failed.join(", "));
        ExitCode::FAILURE
    }
}
