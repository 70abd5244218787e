//! Per-graph comparison of integral flow roots with the structural
//! characterization, plus the lemma diagnostics and a corpus runner.
//!
//! The analytic side (flow polynomial, roots) never looks at planarity; the
//! structural side (planarity, matroid supersolvability) never computes a
//! flow polynomial.

use std::collections::BTreeMap;
use std::io::Write;
use std::num::NonZeroUsize;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::flow::{self, FlowCache, FlowEngine};
use crate::graph::format::Record;
use crate::graph::Multigraph;
use crate::matroid::{self, CaseCheck, Matroid};
use crate::planar::{self, is_chordal, Planarity};
use crate::poly::{self, BoundMode, IntPoly};

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        source: crate::graph::GraphError,
    },
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowSummary {
    pub coeffs: IntPoly,
    pub factored: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSummary {
    pub integral: bool,
    pub real: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralSummary {
    pub bridgeless: bool,
    pub edge_connectivity: Option<usize>,
    pub planar: bool,
    pub dual_of_planar_chordal: bool,
    /// Simplified cocycle matroid of the whole graph, searched directly.
    pub supersolvable: bool,
    pub certificate_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCircuitSummary {
    pub elements: usize,
    pub rank: usize,
    pub delta: i64,
    pub gamma: BTreeMap<usize, usize>,
    pub connected: bool,
    pub cases: Vec<CaseCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientSummary {
    pub mode: BoundMode,
    pub holds: bool,
    pub equality_matches_form: bool,
    /// Smallest slack over the checked coefficients, as a reduced fraction.
    pub min_slack: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSpot {
    pub cutset: [usize; 3],
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaDiagnostics {
    pub three_circuit: Option<ThreeCircuitSummary>,
    pub coefficient_bound: Option<CoefficientSummary>,
    pub proper_three_cutsets: Option<usize>,
    pub product_formula: Option<ProductSpot>,
}

impl LemmaDiagnostics {
    pub fn consistent(&self) -> bool {
        self.three_circuit
            .as_ref()
            .is_none_or(|t| t.cases.iter().all(CaseCheck::consistent))
            && self
                .coefficient_bound
                .as_ref()
                .is_none_or(|c| c.holds && c.equality_matches_form)
            && self.product_formula.as_ref().is_none_or(|p| p.holds)
    }
}

/// Real flow roots on a 3-connected cubic graph force a chordal
/// triangulation as dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicCheck {
    pub three_connected: bool,
    pub real_roots: bool,
    /// Whether an embedding's dual is a chordal triangulation (computed only
    /// for real-rooted planar graphs).
    pub dual_chordal_triangulation: Option<bool>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub delta: usize,
    pub degrees: BTreeMap<usize, usize>,
    /// Set when the graph has a bridge, in which case the flow polynomial
    /// vanishes and neither side is evaluated.
    pub degenerate: Option<String>,
    pub flow: Option<FlowSummary>,
    pub roots: Option<RootSummary>,
    pub structural: Option<StructuralSummary>,
    pub lemmas: LemmaDiagnostics,
    pub cubic: Option<CubicCheck>,
    /// Budget overrun; the graph is excluded from the consistency claim.
    pub skipped: Option<String>,
    pub consistent: bool,
}

impl TheoremReport {
    pub fn integral(&self) -> bool {
        self.roots.is_some_and(|r| r.integral)
    }

    pub fn dual_chordal(&self) -> bool {
        self.structural.as_ref().is_some_and(|s| s.dual_of_planar_chordal)
    }
}

fn analytic(g: &Multigraph, engine: &FlowEngine) -> (IntPoly, RootSummary) {
    let f = engine.flow_poly(g);
    let integral = poly::integer_roots(&f)
        .map(|r| r.all_roots_integral)
        .unwrap_or(false);
    let real = poly::all_roots_real(&f);
    (f, RootSummary { integral, real })
}

fn structural(g: &Multigraph) -> Result<StructuralSummary, String> {
    let report = planar::is_dual_of_planar_chordal(g).map_err(|e| e.to_string())?;
    let supersolvable = Matroid::cocycle(g)
        .and_then(|m| m.supersolvable())
        .map_err(|e| e.to_string())?
        .supersolvable;
    Ok(StructuralSummary {
        bridgeless: true,
        edge_connectivity: g.edge_connectivity().ok(),
        planar: report.planar,
        dual_of_planar_chordal: report.dual_of_planar_chordal,
        supersolvable,
        certificate_agrees: report.certificate_agrees,
    })
}

fn lemma_diagnostics(g: &Multigraph, f: &IntPoly, roots: RootSummary) -> LemmaDiagnostics {
    let mut out = LemmaDiagnostics::default();
    if let Ok(m) = Matroid::cocycle(g) {
        if let Ok(rep) = matroid::three_circuit_bound_check(&m, Some(f)) {
            out.three_circuit = Some(ThreeCircuitSummary {
                elements: rep.elements,
                rank: rep.rank,
                delta: rep.delta,
                gamma: rep.lines.gamma.clone(),
                connected: rep.connected,
                cases: rep.cases,
            });
        }
    }
    let mode = if roots.integral {
        let mean = poly::root_mean(f);
        match mean {
            Some(mu) if !mu.is_integer() => Some(BoundMode::IntegerCase),
            Some(_) => Some(BoundMode::RealCase),
            None => None,
        }
    } else if roots.real {
        Some(BoundMode::RealCase)
    } else {
        None
    };
    if let Some(mode) = mode {
        if let Ok(b) = poly::check_coefficient_bound(f, mode) {
            let min_slack = b
                .entries
                .iter()
                .map(|e| e.slack.clone())
                .min()
                .map(|s| s.to_string())
                .unwrap_or_else(|| "none".into());
            out.coefficient_bound = Some(CoefficientSummary {
                mode,
                holds: b.bounds_hold(),
                equality_matches_form: b.equality_matches_form(),
                min_slack,
            });
        }
    }
    if g.is_connected() && g.edge_connectivity().is_ok_and(|k| k >= 3) {
        if let Ok(cuts) = g.minimal_three_cutsets() {
            out.proper_three_cutsets = Some(cuts.proper_count());
            if let Some(c) = cuts.cutsets.iter().find(|c| c.proper) {
                if let Ok(p) = flow::product_formula_check(g, c.edges) {
                    out.product_formula = Some(ProductSpot {
                        cutset: c.edges,
                        holds: p.holds,
                    });
                }
            }
        }
    }
    out
}

fn is_cubic(g: &Multigraph) -> bool {
    g.n() >= 4 && g.is_simple() && g.degrees().iter().all(|&d| d == 3)
}

fn cubic_check(g: &Multigraph, roots: RootSummary) -> CubicCheck {
    let three_connected = g.is_connected() && g.edge_connectivity().is_ok_and(|k| k >= 3);
    let dual_chordal_triangulation = if roots.real {
        match planar::planarity_embed(g) {
            Planarity::Planar(e) => Some(e.dual().is_ok_and(|d| {
                let h = d.underlying_simple();
                h.n() >= 3 && h.m() == 3 * h.n() - 6 && is_chordal(&h).chordal
            })),
            Planarity::NonPlanar(_) => Some(false),
        }
    } else {
        None
    };
    let holds = !(three_connected && roots.real) || dual_chordal_triangulation == Some(true);
    CubicCheck {
        three_connected,
        real_roots: roots.real,
        dual_chordal_triangulation,
        holds,
    }
}

/// Computes both sides for `g` and the applicable diagnostics.
pub fn check_graph(id: &str, g: &Multigraph, engine: &FlowEngine) -> TheoremReport {
    let stats = flow::flow_stats(g);
    let mut report = TheoremReport {
        id: id.to_string(),
        n: g.n(),
        m: g.m(),
        r: stats.r,
        delta: stats.delta,
        degrees: stats.degree_histogram,
        degenerate: None,
        flow: None,
        roots: None,
        structural: None,
        lemmas: LemmaDiagnostics::default(),
        cubic: None,
        skipped: None,
        consistent: true,
    };
    if let Some(&b) = g.bridges().iter().next() {
        report.degenerate = Some(format!("edge {b} is a bridge; the flow polynomial is zero"));
        return report;
    }
    let (f, roots) = analytic(g, engine);
    report.flow = Some(FlowSummary {
        factored: f.factored_string(),
        coeffs: f.clone(),
    });
    report.roots = Some(roots);
    let s = match structural(g) {
        Ok(s) => s,
        Err(reason) => {
            report.skipped = Some(reason);
            return report;
        }
    };
    report.lemmas = lemma_diagnostics(g, &f, roots);
    if is_cubic(g) {
        report.cubic = Some(cubic_check(g, roots));
    }
    report.consistent = roots.integral == s.dual_of_planar_chordal
        && s.supersolvable == s.dual_of_planar_chordal
        && s.certificate_agrees
        && report.lemmas.consistent()
        && report.cubic.as_ref().is_none_or(|c| c.holds);
    report.structural = Some(s);
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub parallel: usize,
    pub cache_cap: usize,
    /// Stop at the first inconsistent report.
    pub abort_on_inconsistency: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            parallel: 1,
            cache_cap: 1 << 16,
            abort_on_inconsistency: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub integral_rooted: usize,
    pub dual_chordal: usize,
    pub degenerate: usize,
    pub skipped: usize,
    /// Ids of every graph with integral flow roots.
    pub integral_ids: Vec<String>,
    pub first_inconsistency: Option<String>,
    pub aborted: bool,
}

impl Summary {
    fn add(&mut self, r: &TheoremReport) {
        self.total += 1;
        if r.skipped.is_some() {
            self.skipped += 1;
        }
        if r.degenerate.is_some() {
            self.degenerate += 1;
        }
        if r.consistent {
            self.consistent += 1;
        } else {
            self.inconsistent += 1;
            self.first_inconsistency.get_or_insert_with(|| r.id.clone());
        }
        if r.integral() {
            self.integral_rooted += 1;
            self.integral_ids.push(r.id.clone());
        }
        if r.dual_chordal() {
            self.dual_chordal += 1;
        }
    }
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

const CHUNK: usize = 256;

/// Checks every record and writes one JSON report per line in input order,
/// followed by a summary line. Output does not depend on `parallel`.
pub fn verify_corpus<W: Write + ?Sized>(records: &[Record], options: &VerifyOptions, out: &mut W) -> Result<Summary, TheoremError> {
    let cache = Arc::new(FlowCache::new(
        NonZeroUsize::new(options.cache_cap).unwrap_or(NonZeroUsize::MIN),
    ));
    let engine = FlowEngine::new(true).with_cache(cache);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.parallel.max(1))
        .build()
        .map_err(|e| TheoremError::Pool(e.to_string()))?;
    let mut graphs = Vec::with_capacity(records.len());
    for r in records {
        match &r.graph {
            Ok(g) => graphs.push((format!("line {}", r.line), g)),
            Err(e) => return Err(TheoremError::Parse { line: r.line, source: e.clone() }),
        }
    }
    let mut summary = Summary::default();
    'outer: for chunk in graphs.chunks(CHUNK) {
        let reports: Vec<TheoremReport> = if options.parallel <= 1 {
            chunk
                .iter()
                .map(|(id, g)| check_graph(id, g, &engine))
                .collect()
        } else {
            pool.install(|| {
                chunk
                    .par_iter()
                    .map(|(id, g)| check_graph(id, g, &engine))
                    .collect()
            })
        };
        for r in &reports {
            serde_json::to_writer(&mut *out, r)?;
            out.write_all(b"\n")?;
            summary.add(r);
            if !r.consistent && options.abort_on_inconsistency {
                summary.aborted = true;
                break 'outer;
            }
        }
    }
    serde_json::to_writer(&mut *out, &SummaryLine { summary: &summary })?;
    out.write_all(b"\n")?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn check(g: &Multigraph) -> TheoremReport {
        check_graph("t", g, &FlowEngine::new(true))
    }

    #[test]
    fn k4_report() {
        let r = check(&complete(4));
        assert!(r.integral() && r.dual_chordal() && r.consistent);
        assert_eq!(r.flow.unwrap().factored, "(x-1)(x-2)(x-3)");
        let c = r.cubic.unwrap();
        assert!(c.three_connected && c.real_roots && c.holds);
    }

    #[test]
    fn petersen_and_figure_one() {
        let r = check(&petersen());
        assert!(!r.integral() && !r.dual_chordal() && r.consistent);
        let r = check(&figure_one());
        assert!(!r.integral() && !r.dual_chordal() && r.consistent);
        assert!(r.lemmas.product_formula.unwrap().holds);
    }

    #[test]
    fn degenerate_inputs() {
        let r = check(&path(3));
        assert!(r.degenerate.is_some() && r.consistent);
        let r = check(&Multigraph::new(1));
        assert!(r.integral() && r.dual_chordal() && r.consistent);
    }

    #[test]
    fn empty_corpus_summary() {
        let mut buf = Vec::new();
        let s = verify_corpus(&[], &VerifyOptions::default(), &mut buf).unwrap();
        assert_eq!(s, Summary::default());
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 1);
    }
}
