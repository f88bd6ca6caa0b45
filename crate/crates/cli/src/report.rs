//! JSON and CSV shapes of everything the tool writes.
//!
//! Rationals are `{num, den}` pairs in lowest terms. Vertices in
//! certificates and witnesses appear in label form (`w_3`) when the graph
//! carries labels and as plain ids otherwise.

use std::fmt::Write as _;

use avgconn_core::connectivity::{ConnectivityMode, MinimalityOutcome, MinimalityWitness, PairConnectivityReport};
use avgconn_core::paths::{EndpointPolicy, PathSystem, WitnessCheck};
use avgconn_core::search::{Evidence, SearchReport, Verdict};
use avgconn_core::separators::{PairSeparatorSummary, SeparatorCertificate, SeparatorClass};
use avgconn_core::{graph6, ConstructionSpec, Graph, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDto {
    pub num: i128,
    pub den: i128,
}

impl From<Rational> for RationalDto {
    fn from(r: Rational) -> Self {
        RationalDto { num: *r.numer(), den: *r.denom() }
    }
}

impl From<RationalDto> for Rational {
    fn from(r: RationalDto) -> Self {
        Rational::new(r.num, r.den)
    }
}

/// `a/b`, or `a` for integers.
pub fn fmt_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn vertex_name(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| v.to_string(), |l| l.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReportDto {
    pub mode: String,
    pub order: usize,
    /// `[u, v, value]` with `u < v`, lexicographic.
    pub pairs: Vec<[u64; 3]>,
    pub total: u64,
    pub average: RationalDto,
    pub global: u32,
}

impl From<&PairConnectivityReport> for PairReportDto {
    fn from(r: &PairConnectivityReport) -> Self {
        PairReportDto {
            mode: r.mode.as_str().into(),
            order: r.order,
            pairs: r.pairs().map(|(u, v, x)| [u as u64, v as u64, u64::from(x)]).collect(),
            total: r.total,
            average: r.average().into(),
            global: r.global(),
        }
    }
}

pub fn pair_report_csv(r: &PairConnectivityReport) -> String {
    let mut out = String::from("u,v,value\n");
    for (u, v, x) in r.pairs() {
        let _ = writeln!(out, "{u},{v},{x}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSidecar {
    pub family: String,
    pub k: usize,
    pub p: usize,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub order: usize,
    /// `labels[v]` is the label of vertex `v`.
    pub labels: Vec<String>,
}

impl ConstructionSidecar {
    pub fn new(spec: &ConstructionSpec) -> Self {
        ConstructionSidecar {
            family: spec.family.as_str().into(),
            k: spec.k,
            p: spec.p,
            r: spec.r,
            s: (spec.family == avgconn_core::Family::Psi).then(|| spec.s()),
            order: spec.order(),
            labels: spec.labels().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityDto {
    pub mode: String,
    pub k: u32,
    pub minimal: bool,
    pub global_connectivity: Option<u32>,
    pub removable_edge: Option<[usize; 2]>,
    pub passed: bool,
}

impl MinimalityDto {
    pub fn new(mode: ConnectivityMode, k: u32, outcome: &MinimalityOutcome) -> Self {
        let (global, edge) = match outcome.witness {
            Some(MinimalityWitness::GlobalConnectivity(c)) => (Some(c), None),
            Some(MinimalityWitness::RemovableEdge(u, v)) => (Some(k), Some([u, v])),
            None => (Some(k), None),
        };
        MinimalityDto {
            mode: mode.as_str().into(),
            k,
            minimal: outcome.minimal,
            global_connectivity: global,
            removable_edge: edge,
            passed: outcome.minimal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub u: String,
    pub v: String,
    pub set: Vec<String>,
    pub u_side: Vec<String>,
    pub v_side: Vec<String>,
    pub minimal: bool,
    pub class: Option<String>,
    pub runs_touch: Option<bool>,
}

impl CertificateDto {
    pub fn new(g: &Graph, c: &SeparatorCertificate) -> Self {
        let names = |s: &avgconn_core::VertexSet| s.iter().map(|x| vertex_name(g, x)).collect();
        CertificateDto {
            u: vertex_name(g, c.u),
            v: vertex_name(g, c.v),
            set: names(&c.set),
            u_side: names(&c.u_side),
            v_side: names(&c.v_side),
            minimal: c.minimal,
            class: c.classification.map(|k| k.name().into()),
            runs_touch: match c.classification {
                Some(SeparatorClass::TwoRun(shape)) => Some(shape.runs_touch),
                _ => None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorPairDto {
    pub u: String,
    pub v: String,
    pub separators: usize,
    pub size_k: usize,
    pub size_2k_minus_2: usize,
    pub other_size: usize,
    pub neighbourhood: usize,
    pub two_run: usize,
    pub other_class: usize,
    pub runs_touch: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub certificates: Vec<CertificateDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorReportDto {
    pub k: usize,
    pub p: usize,
    pub pairs: Vec<SeparatorPairDto>,
    pub passed: bool,
}

impl SeparatorReportDto {
    pub fn new(g: &Graph, k: usize, p: usize, summaries: &[PairSeparatorSummary], with_certificates: bool) -> Self {
        let pairs: Vec<SeparatorPairDto> = summaries
            .iter()
            .map(|s| SeparatorPairDto {
                u: vertex_name(g, s.u),
                v: vertex_name(g, s.v),
                separators: s.separators,
                size_k: s.size_k,
                size_2k_minus_2: s.size_2k_minus_2,
                other_size: s.other_size,
                neighbourhood: s.neighbourhood,
                two_run: s.two_run,
                other_class: s.other_class,
                runs_touch: s.touching,
                passed: s.passed(),
                certificates: if with_certificates {
                    s.certificates.iter().map(|c| CertificateDto::new(g, c)).collect()
                } else {
                    Vec::new()
                },
            })
            .collect();
        let passed = pairs.iter().all(|p| p.passed);
        SeparatorReportDto { k, p, pairs, passed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystemDto {
    pub policy: String,
    pub window: Option<[i64; 2]>,
    pub paths: Vec<Vec<String>>,
}

impl PathSystemDto {
    pub fn new(g: &Graph, sys: &PathSystem) -> Self {
        PathSystemDto {
            policy: match sys.policy {
                EndpointPolicy::SharedSource => "shared-source",
                EndpointPolicy::SharedTarget => "shared-target",
                EndpointPolicy::SharedBoth => "shared-both",
                EndpointPolicy::Distinct => "distinct",
            }
            .into(),
            window: sys.window.map(|w| [w.lo, w.hi]),
            paths: sys.paths.iter().map(|p| p.iter().map(|&x| vertex_name(g, x)).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheckDto {
    pub kind: String,
    pub parameter: usize,
    pub passed: bool,
    pub error: Option<String>,
    pub system: Option<PathSystemDto>,
}

impl WitnessCheckDto {
    pub fn new(g: &Graph, c: &WitnessCheck) -> Self {
        WitnessCheckDto {
            kind: c.kind.as_str().into(),
            parameter: c.parameter,
            passed: c.passed(),
            error: c.error.clone(),
            system: c.system.as_ref().map(|s| PathSystemDto::new(g, s)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReportDto {
    pub k: usize,
    pub p: usize,
    pub s: usize,
    pub checks: Vec<WitnessCheckDto>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReportDto {
    pub mode: String,
    pub k: usize,
    pub n: usize,
    pub average: RationalDto,
    pub bound: RationalDto,
    pub margin: RationalDto,
    pub limit: RationalDto,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReportDto {
    pub n: usize,
    pub k: usize,
    pub mode: String,
    pub count_candidates: usize,
    pub count_minimal: usize,
    pub best_value: Option<RationalDto>,
    pub optima: Vec<String>,
    pub all_optima_degree_partitioned: bool,
    pub bound_satisfied: Option<bool>,
}

impl From<&SearchReport> for SearchReportDto {
    fn from(r: &SearchReport) -> Self {
        SearchReportDto {
            n: r.n,
            k: r.k,
            mode: r.mode.as_str().into(),
            count_candidates: r.count_candidates,
            count_minimal: r.count_minimal,
            best_value: r.best_value.map(Into::into),
            optima: r.optima.iter().map(graph6::encode).collect(),
            all_optima_degree_partitioned: r.all_optima_degree_partitioned,
            bound_satisfied: r.bound_satisfied,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceDto {
    pub k: usize,
    pub mode: String,
    pub reports: Vec<SearchReportDto>,
    /// `consistent`, `counterexample` or `vacuous`.
    pub verdict: String,
    pub counterexample: Option<CounterexampleDto>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDto {
    pub n: usize,
    pub graph6: String,
}

impl From<&Evidence> for EvidenceDto {
    fn from(e: &Evidence) -> Self {
        let (verdict, counterexample) = match &e.verdict {
            Verdict::Consistent => ("consistent", None),
            Verdict::Vacuous => ("vacuous", None),
            Verdict::Counterexample { n, graph6 } => {
                ("counterexample", Some(CounterexampleDto { n: *n, graph6: graph6.clone() }))
            }
        };
        EvidenceDto {
            k: e.k,
            mode: e.mode.as_str().into(),
            reports: e.reports.iter().map(Into::into).collect(),
            verdict: verdict.into(),
            counterexample,
            passed: !matches!(e.verdict, Verdict::Counterexample { .. }),
        }
    }
}

/// Timing and environment, kept out of the primary report so reruns are
/// byte-identical.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetaSidecar {
    pub command: Vec<String>,
    pub elapsed_seconds: f64,
    pub threads: usize,
    pub finished_unix: u64,
    pub version: String,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use avgconn_core::connectivity::all_pairs_report;
    use avgconn_core::graph::named;

    #[test]
    fn pair_report_shapes() {
        let r = all_pairs_report(&named::complete_bipartite(2, 3), ConnectivityMode::Vertex).unwrap();
        let dto = PairReportDto::from(&r);
        assert_eq!(dto.average, RationalDto { num: 21, den: 10 });
        assert_eq!(dto.pairs[0], [0, 1, 3]);
        let json = to_json(&dto);
        assert!(json.contains("\"num\": 21"));
        let back: PairReportDto = serde_json::from_str(&json).unwrap();
        assert_eq!(back, dto);
        let csv = pair_report_csv(&r);
        assert_eq!(csv.lines().count(), 11);
        assert!(csv.starts_with("u,v,value\n0,1,3\n"));
    }

    #[test]
    fn rationals() {
        assert_eq!(fmt_rational(Rational::new(6, 4)), "3/2");
        assert_eq!(fmt_rational(Rational::from_integer(3)), "3");
        let r: Rational = RationalDto { num: 42, den: 20 }.into();
        assert_eq!(r, Rational::new(21, 10));
    }

    #[test]
    fn sidecar_labels() {
        let spec = ConstructionSpec::gamma(3, 4).unwrap();
        let side = ConstructionSidecar::new(&spec);
        assert_eq!(side.order, 16);
        assert_eq!(side.labels[0], "w_0");
        assert_eq!(side.s, None);
    }
}
