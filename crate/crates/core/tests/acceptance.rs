//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status
//! if any criterion fails. Runtime limits are part of each criterion.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use edgealg::binomial::{self, groebner_walk_subset};
use edgealg::cycles::{self, chordless_cycles, chordless_count_check, is_ci_graph};
use edgealg::families;
use edgealg::hilbert::{binom, verify_h_prefix};
use edgealg::oracle::{self, ci_oracle, minimal_generator_census, OracleVerdict, DEFAULT_MONOMIAL_CAP};
use edgealg::planarity::{is_planar, KuratowskiKind, Planarity};
use edgealg::report::{analyze, AnalyzeConfig};
use edgealg::Graph;

type Outcome = Result<String, String>;

/// Monomial cap for the degree-10 census of the octagon graph.
const RAISED_MONOMIAL_CAP: u64 = 100_000_000;
const OCTAGON_DEGREE: usize = 10;
const SEED: u64 = 0x5eed_ed9e;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn run(id: usize, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panic: {msg}"))
    });
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed > limit => {
            Err(format!("{detail}; took {:.2}s, limit {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()))
        }
        other => other,
    };
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("{tag} criterion {id:>2} {name}: {detail} [{:.2}s]", elapsed.as_secs_f64());
    outcome.is_ok()
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn oracle_verdict(g: &Graph) -> Result<oracle::OracleReport, String> {
    let d = oracle::default_max_degree(g).map_err(|e| e.to_string())?;
    ci_oracle(g, d, DEFAULT_MONOMIAL_CAP).map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    for n in 1..=8 {
        let g = families::g_n(n);
        let v = is_ci_graph(&g).map_err(|e| e.to_string())?;
        ensure!(v.is_ci, "G_{n} not a CI graph");
        ensure!(v.chordless_cycles == n, "G_{n}: {} chordless cycles", v.chordless_cycles);
        ensure!(g.cycle_rank() == n, "G_{n}: e - v + 1 = {}", g.cycle_rank());
        if n <= 4 {
            let r = oracle_verdict(&g)?;
            ensure!(r.verdict == OracleVerdict::Ci, "G_{n}: oracle says {:?}", r.verdict);
            ensure!(r.census.total == n, "G_{n}: census total {}", r.census.total);
        }
    }
    Ok("G_1..G_8 are CI graphs with n chordless cycles; oracle agrees for n <= 4".into())
}

fn criterion_2() -> Outcome {
    let mut heights = Vec::new();
    for n in 3..=6 {
        let g = families::h_n(n);
        let c = chordless_cycles(&g).map_err(|e| e.to_string())?.len();
        ensure!(c as u64 == binom(n as u64, 2), "H_{n}: {c} chordless cycles");
        if n <= 4 {
            let census = minimal_generator_census(&g, 3, DEFAULT_MONOMIAL_CAP).map_err(|e| e.to_string())?;
            ensure!(
                census.degrees.len() == 1 && census.degrees.get(&3).copied() == Some(c),
                "H_{n}: census {:?}",
                census.degrees
            );
        }
        let report = analyze(&g, &AnalyzeConfig::default()).map_err(|e| e.to_string())?;
        ensure!(report.height == n - 1, "H_{n}: height {}", report.height);
        ensure!(
            report.notes.iter().any(|s| s.starts_with(&format!("H_{n}:"))),
            "H_{n}: height note missing"
        );
        heights.push(format!("H_{n} height {} (quoted {n})", report.height));
    }
    Ok(format!("binom(n,2) chordless cycles, degree-3 census for n <= 4; {}", heights.join(", ")))
}

fn criterion_3() -> Outcome {
    let g = families::cube();
    let cyc = chordless_cycles(&g).map_err(|e| e.to_string())?;
    let fours = cyc.iter().filter(|c| c.len() == 4).count();
    let sixes = cyc.iter().filter(|c| c.len() == 6).count();
    ensure!(cyc.len() == 10 && fours == 6 && sixes == 4, "cycles {} ({fours}, {sixes})", cyc.len());
    let gb = binomial::elimination_generators(&g).map_err(|e| e.to_string())?;
    let minimal = binomial::minimalize(&gb, &g).map_err(|e| e.to_string())?;
    ensure!(minimal.len() == 10, "minimal generators {}", minimal.len());
    let walks = groebner_walk_subset(&g, &gb);
    ensure!(walks.all_matched(), "unmatched: {:?}", walks.unmatched);
    ensure!(gb.len() == 14, "reduced Groebner basis has {} elements", gb.len());
    Ok(format!(
        "10 chordless cycles (6 squares, 4 hexagons), 10 minimal generators, {} of 14 basis elements matched to walks",
        walks.matched.len()
    ))
}

fn criterion_4() -> Outcome {
    let g = families::octagon();
    let census = minimal_generator_census(&g, OCTAGON_DEGREE, RAISED_MONOMIAL_CAP).map_err(|e| e.to_string())?;
    ensure!(census.total == 20, "census total {} ({:?})", census.total, census.degrees);
    Ok(format!("20 minimal generators through degree {}: {:?}", census.complete_up_to, census.degrees))
}

fn criterion_5() -> Outcome {
    let g = families::remark();
    let bound = oracle::generator_degree_bound(&g);
    let r = ci_oracle(&g, bound, DEFAULT_MONOMIAL_CAP).map_err(|e| e.to_string())?;
    ensure!(r.verdict == OracleVerdict::Ci, "oracle verdict {:?}", r.verdict);
    ensure!(r.census.total == 4 && r.census.height == 4, "census total {}, height {}", r.census.total, r.census.height);
    match is_planar(&g) {
        Planarity::NonPlanar(w) => {
            ensure!(w.kind == KuratowskiKind::K33, "witness kind {:?}", w.kind);
            ensure!(w.verify(&g), "witness does not verify");
            Ok(format!("census total 4 = e - v complete to degree {bound}; K3,3 subdivision on {} edges", w.edges.len()))
        }
        Planarity::Planar(_) => Err("reported planar".into()),
    }
}

/// Suite of criterion 6: exhaustive small graphs then random ones.
fn main_theorem_suite() -> Vec<Graph> {
    let mut graphs = common::connected_bipartite_graphs(8);
    let mut rng = common::rng(SEED);
    graphs.extend((0..200).map(|_| common::random_connected_bipartite(&mut rng, 12)));
    graphs
}

fn criterion_6(graphs: &[Graph]) -> Outcome {
    let mut ci = 0;
    for g in graphs {
        let verdict = is_ci_graph(g).map_err(|e| e.to_string())?;
        let r = oracle_verdict(g)?;
        let oracle_ci = match r.verdict {
            OracleVerdict::Ci => true,
            OracleVerdict::NotCi => false,
            OracleVerdict::Inconclusive => return Err(format!("inconclusive oracle on {:?}", g.to_edge_list())),
        };
        ensure!(verdict.is_ci == oracle_ci, "disagreement on {:?}", g.to_edge_list());
        if verdict.is_ci {
            ci += 1;
            let (v, e) = (g.vertex_count(), g.edge_count());
            ensure!(verdict.chordless_cycles == e + 1 - v, "count != e - v + 1 on {:?}", g.to_edge_list());
            ensure!(is_planar(g).is_planar(), "CI graph not planar: {:?}", g.to_edge_list());
            ensure!(e == 1 || e + 4 <= 2 * v, "Euler bound fails on {:?}", g.to_edge_list());
        }
    }
    Ok(format!("{} graphs ({} exhaustive with e <= 8 + 200 random), {ci} CI", graphs.len(), graphs.len() - 200))
}

fn criterion_7() -> Outcome {
    let mut rng = common::rng(SEED + 7);
    let mut strict = 0;
    for _ in 0..300 {
        let g = common::random_connected(&mut rng, 12);
        let check = chordless_count_check(&g).map_err(|e| e.to_string())?;
        ensure!(check.count as i64 >= check.bound, "lower bound fails on {:?}", g.to_edge_list());
        let cyc = chordless_cycles(&g).map_err(|e| e.to_string())?;
        if cycles::pair_sharing_two_edges(&cyc).is_some() {
            strict += 1;
            ensure!(check.count as i64 > check.bound, "no strict inequality on {:?}", g.to_edge_list());
        }
    }
    Ok(format!("300 random graphs, {strict} with two chordless cycles sharing >= 2 edges"))
}

fn criterion_8() -> Outcome {
    let mut rng = common::rng(SEED + 8);
    let mut ci = 0;
    for _ in 0..100 {
        let g = common::random_connected_bipartite(&mut rng, 12);
        let whole = is_ci_graph(&g).map_err(|e| e.to_string())?.is_ci;
        let mut blocks = true;
        for b in g.blocks() {
            blocks &= is_ci_graph(&b).map_err(|e| e.to_string())?.is_ci;
        }
        ensure!(whole == blocks, "block criterion fails on {:?}", g.to_edge_list());
        ci += whole as usize;
    }
    Ok(format!("100 random bipartite graphs, {ci} CI"))
}

fn criterion_9() -> Outcome {
    let mut graphs = vec![
        common::square(),
        common::k23(),
        families::g_n(2),
        families::g_n(3),
        families::cube(),
    ];
    let mut rng = common::rng(SEED + 9);
    while graphs.len() < 55 {
        let g = common::random_connected_bipartite(&mut rng, 10);
        if g.toric_height() > 0 {
            graphs.push(g);
        }
    }
    for g in &graphs {
        let r = verify_h_prefix(g).map_err(|e| e.to_string())?;
        ensure!(r.prefix_ok, "prefix mismatch {:?} vs {:?} on {:?}", r.h, r.expected, g.to_edge_list());
        ensure!(
            r.defect_ok,
            "defect {} vs {} generators on {:?}",
            r.defect,
            r.generators_at_l,
            g.to_edge_list()
        );
    }
    Ok(format!("{} graphs: h prefix and degree-L defect exact", graphs.len()))
}

fn criterion_10(suite6: &[Graph]) -> Outcome {
    let mut graphs: Vec<Graph> = (1..=8).map(families::g_n).collect();
    graphs.extend((3..=6).map(families::h_n));
    graphs.extend([families::cube(), families::octagon(), families::remark()]);
    graphs.extend(suite6.iter().cloned());
    for g in &graphs {
        let gb = binomial::elimination_generators(g).map_err(|e| e.to_string())?;
        let minimal = binomial::minimalize(&gb, g).map_err(|e| e.to_string())?;
        let mut degrees: Vec<usize> = minimal.elements.iter().map(|b| b.degree() as usize).collect();
        degrees.sort_unstable();
        let top = degrees.last().copied().unwrap_or(1);
        let d = oracle::default_max_degree(g).map_err(|e| e.to_string())?.max(top);
        let cap = if d >= OCTAGON_DEGREE { RAISED_MONOMIAL_CAP } else { DEFAULT_MONOMIAL_CAP };
        let census = minimal_generator_census(g, d, cap).map_err(|e| e.to_string())?;
        ensure!(
            census.degree_multiset() == degrees,
            "census {:?} vs elimination {:?} on {:?}",
            census.degrees,
            degrees,
            g.to_edge_list()
        );
        if g.is_bipartite().is_some() {
            let mut cyc: Vec<usize> =
                chordless_cycles(g).map_err(|e| e.to_string())?.iter().map(|c| c.len() / 2).collect();
            cyc.sort_unstable();
            ensure!(cyc == degrees, "chordless cycle degrees {cyc:?} vs {degrees:?} on {:?}", g.to_edge_list());
        }
    }
    Ok(format!("{} graphs: elimination, census and chordless cycles agree", graphs.len()))
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= run(1, "G_n family", secs(5), criterion_1);
    ok &= run(2, "H_n family", secs(10), criterion_2);
    ok &= run(3, "cube", secs(10), criterion_3);
    ok &= run(4, "octagon with triangles", secs(120), criterion_4);
    ok &= run(5, "non-bipartite non-planar CI graph", secs(30), criterion_5);
    let suite6 = main_theorem_suite();
    ok &= run(6, "CI graph equivalence", secs(120), || criterion_6(&suite6));
    ok &= run(7, "chordless cycle lower bound", secs(60), criterion_7);
    ok &= run(8, "blocks", secs(60), criterion_8);
    ok &= run(9, "h-vector prefix", secs(60), criterion_9);
    ok &= run(10, "engine cross-validation", secs(300), || criterion_10(&suite6));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
