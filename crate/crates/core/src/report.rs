//! End-to-end analysis combining the combinatorial, brute-force and
//! algebraic verdicts.

use serde::Serialize;

use crate::binomial;
use crate::cycles::{self, CiGraphVerdict};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::groebner::DEFAULT_DEGREE_CAP;
use crate::oracle::{self, GeneratorCensus, OracleVerdict, DEFAULT_MONOMIAL_CAP};
use crate::planarity;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeConfig {
    /// Census degree; `None` picks [`oracle::default_max_degree`].
    pub max_degree: Option<usize>,
    pub monomial_cap: u64,
    pub cycle_cap: usize,
    pub degree_cap: u32,
    /// Run elimination and minimalization.
    pub algebraic: bool,
}

impl Default for AnalyzeConfig {
    fn default() -> Self {
        AnalyzeConfig {
            max_degree: None,
            monomial_cap: DEFAULT_MONOMIAL_CAP,
            cycle_cap: cycles::DEFAULT_CYCLE_CAP,
            degree_cap: DEFAULT_DEGREE_CAP,
            algebraic: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Ci,
    NotCi,
    Inconclusive,
}

impl Verdict {
    /// 0 for a complete intersection, 1 for not, 2 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ci => 0,
            Verdict::NotCi => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

/// Pairwise agreement of the verdicts that could be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Agreement {
    pub graph_vs_oracle: Option<bool>,
    pub graph_vs_algebra: Option<bool>,
    pub oracle_vs_algebra: Option<bool>,
    /// Degree multiset of the algebraic minimal generators equals the
    /// census multiset.
    pub degrees_match: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CiReport {
    pub v: usize,
    pub e: usize,
    pub components: usize,
    pub bipartite: bool,
    pub planar: bool,
    pub chordless_cycles: usize,
    /// Sum over components of `e - v + 1`.
    pub bound: usize,
    /// `e - dim k[G]`
    pub height: usize,
    /// Present for bipartite graphs.
    pub ci_graph: Option<CiGraphVerdict>,
    pub census: Option<GeneratorCensus>,
    pub oracle: Option<OracleVerdict>,
    /// Size of a minimal generating set from elimination.
    pub generators: Option<usize>,
    pub generator_degrees: Option<Vec<usize>>,
    pub agreement: Agreement,
    pub ci: Verdict,
    pub notes: Vec<String>,
}

pub fn analyze(g: &Graph, config: &AnalyzeConfig) -> Result<CiReport> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidGraph("graph has no edges".into()));
    }
    let mut notes = Vec::new();
    let bipartite = g.is_bipartite().is_some();
    let planar = planarity::is_planar(g).is_planar();
    let chordless = cycles::chordless_cycles_capped(g, config.cycle_cap)?;
    let height = g.toric_height();

    let ci_graph = bipartite.then(|| cycles::ci_verdict_from(&chordless));
    if let Some(v) = &ci_graph {
        if v.is_ci && !planar {
            notes.push("complete-intersection graph reported non-planar".into());
        }
    }

    let max_degree = match config.max_degree {
        Some(d) => d,
        None => oracle::default_max_degree(g)?,
    };
    let (census, oracle_verdict) = match oracle::ci_oracle(g, max_degree, config.monomial_cap) {
        Ok(r) => {
            if !r.census.complete {
                notes.push(format!("census complete up to degree {} only", r.census.complete_up_to));
            }
            (Some(r.census), Some(r.verdict))
        }
        Err(Error::Resource(msg)) => {
            notes.push(format!("census skipped: {msg}"));
            (None, None)
        }
        Err(e) => return Err(e),
    };

    let mut generator_degrees = None;
    if config.algebraic {
        let minimal = binomial::elimination_generators_capped(g, config.degree_cap)
            .and_then(|gb| binomial::minimalize(&gb, g));
        match minimal {
            Ok(b) => {
                generator_degrees = Some(b.elements.iter().map(|x| x.degree() as usize).collect::<Vec<_>>());
            }
            Err(Error::Resource(msg)) => notes.push(format!("elimination skipped: {msg}")),
            Err(e) => return Err(e),
        }
    }
    let generators = generator_degrees.as_ref().map(Vec::len);

    if let Some(n) = families::as_h_n(g) {
        notes.push(format!(
            "H_{n}: height computed as e - v + 1 = {height}; the value {n} is sometimes quoted for this family"
        ));
    }

    let graph_says = ci_graph.as_ref().map(|v| v.is_ci);
    let oracle_says = match oracle_verdict {
        Some(OracleVerdict::Ci) => Some(true),
        Some(OracleVerdict::NotCi) => Some(false),
        _ => None,
    };
    let algebra_says = generators.map(|n| n == height);
    let cmp = |a: Option<bool>, b: Option<bool>| a.zip(b).map(|(x, y)| x == y);
    let degrees_match = match (&census, &generator_degrees) {
        (Some(c), Some(d)) if c.complete => Some(c.degree_multiset() == *d),
        _ => None,
    };
    let agreement = Agreement {
        graph_vs_oracle: cmp(graph_says, oracle_says),
        graph_vs_algebra: cmp(graph_says, algebra_says),
        oracle_vs_algebra: cmp(oracle_says, algebra_says),
        degrees_match,
    };

    let said: Vec<bool> = [graph_says, oracle_says, algebra_says].into_iter().flatten().collect();
    let ci = match said.first() {
        None => Verdict::Inconclusive,
        Some(&first) if said.iter().all(|&x| x == first) => {
            if first {
                Verdict::Ci
            } else {
                Verdict::NotCi
            }
        }
        Some(_) => {
            notes.push("verdicts disagree".into());
            Verdict::Inconclusive
        }
    };
    if agreement.degrees_match == Some(false) {
        notes.push("generator degrees differ between census and elimination".into());
    }

    Ok(CiReport {
        v: g.vertex_count(),
        e: g.edge_count(),
        components: g.component_count(),
        bipartite,
        planar,
        chordless_cycles: chordless.len(),
        bound: g.cycle_rank(),
        height,
        ci_graph,
        census,
        oracle: oracle_verdict,
        generators,
        generator_degrees,
        agreement,
        ci,
        notes,
    })
}
